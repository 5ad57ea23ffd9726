#pragma once
// Small finite fields GF(p^e) with elements numbered 0..q-1 by their base-p digits.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ntlab {

class GaloisField {
public:
    /// GF(p) for prime p <= 1021, GF(2^k) for k <= 4 and GF(9). Throws UnsupportedError otherwise.
    explicit GaloisField(std::size_t q);

    std::size_t order() const noexcept { return q_; }
    std::size_t characteristic() const noexcept { return p_; }
    std::size_t degree() const noexcept { return e_; }
    /// Coefficients c_0..c_{e-1} of the reduction x^e = -(c_0 + ... ); empty for prime fields.
    const std::vector<std::size_t>& modulus() const noexcept { return modulus_; }

    std::size_t add(std::size_t a, std::size_t b) const;
    std::size_t neg(std::size_t a) const;
    std::size_t sub(std::size_t a, std::size_t b) const { return add(a, neg(b)); }
    std::size_t mul(std::size_t a, std::size_t b) const;
    std::size_t pow(std::size_t a, std::uint64_t n) const;
    /// Throws RangeError for zero.
    std::size_t inv(std::size_t a) const;
    /// Least element of multiplicative order q - 1.
    std::size_t primitive_element() const noexcept { return primitive_; }
    bool is_square(std::size_t a) const;

private:
    std::size_t q_, p_, e_;
    std::vector<std::size_t> modulus_;
    std::vector<std::uint16_t> add_, mul_;  // tables for extension fields
    std::size_t primitive_ = 0;
};

bool is_prime(std::size_t n);

} // namespace ntlab

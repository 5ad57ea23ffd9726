#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ntlab/f2.hpp"

namespace ntlab {

using BigInt = boost::multiprecision::cpp_int;

/// Largest dimension whose codewords are enumerated explicitly (2^28 words).
inline constexpr std::size_t enumeration_limit = 28;

/// A subspace of F2^m held by its RREF generator matrix.
class LinearCode {
public:
    LinearCode() = default;
    /// `generators` may have dependent rows; they are reduced here.
    LinearCode(std::size_t length, const BitMatrix& generators);
    explicit LinearCode(const BitMatrix& generators) : LinearCode(generators.cols(), generators) {}

    static LinearCode zero(std::size_t length);
    static LinearCode full(std::size_t length);

    std::size_t length() const noexcept { return length_; }
    std::size_t dimension() const noexcept { return gen_.rows(); }
    const BitMatrix& generator() const noexcept { return gen_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(const BitVector& v) const;
    bool contains(const LinearCode& sub) const;
    LinearCode dual() const;

    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.length_ == b.length_ && a.gen_ == b.gen_;
    }

private:
    std::size_t length_ = 0;
    BitMatrix gen_;
    std::vector<std::size_t> pivots_;
};

/// An explicit set of words of a common length, kept sorted.
class UnrestrictedCode {
public:
    UnrestrictedCode(std::size_t length, std::vector<BitVector> words);

    std::size_t length() const noexcept { return length_; }
    std::size_t size() const noexcept { return words_.size(); }
    const std::vector<BitVector>& words() const noexcept { return words_; }
    bool contains(const BitVector& v) const;

    friend bool operator==(const UnrestrictedCode&, const UnrestrictedCode&) = default;

private:
    std::size_t length_;
    std::vector<BitVector> words_;
};

using Code = std::variant<LinearCode, UnrestrictedCode>;

std::size_t code_length(const Code& c);
BigInt code_size(const Code& c);
UnrestrictedCode as_unrestricted(const LinearCode& c);

struct WeightDistribution {
    std::vector<std::uint64_t> counts;  // counts[i] = number of words of weight i

    std::uint64_t total() const;
    /// Least positive weight with a nonzero count, if any.
    std::optional<std::size_t> min_positive_weight() const;

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/// Gray-code traversal of all 2^k codewords; `workers` only affects speed.
WeightDistribution weight_distribution(const LinearCode& c, unsigned workers = 0);
WeightDistribution weight_distribution(const UnrestrictedCode& c);
WeightDistribution weight_distribution(const Code& c);

/// Weight distribution of `c` obtained from an enumeration of its dual through
/// the MacWilliams transform. Requires m - k <= enumeration_limit.
std::vector<BigInt> weight_distribution_via_dual(const LinearCode& c);

std::size_t minimum_distance(const LinearCode& c);
std::size_t minimum_distance(const UnrestrictedCode& c);
std::size_t minimum_distance(const Code& c);

bool is_self_orthogonal(const LinearCode& c);

LinearCode puncture(const LinearCode& c, std::size_t index);
UnrestrictedCode puncture(const UnrestrictedCode& c, std::size_t index);
LinearCode extend_parity(const LinearCode& c);
UnrestrictedCode extend_parity(const UnrestrictedCode& c);
LinearCode even_subcode(const LinearCode& c);
UnrestrictedCode even_subcode(const UnrestrictedCode& c);

Code puncture(const Code& c, std::size_t index);
Code extend_parity(const Code& c);
Code even_subcode(const Code& c);

/// True iff the projection onto coordinates {i, j} is onto F2^2.
bool pair_balance(const LinearCode& c, std::size_t i, std::size_t j);

/// Calls `visit(word)` for every codeword, in Gray-code order starting at zero.
template <class Visitor>
void for_each_codeword(const LinearCode& c, Visitor&& visit);

} // namespace ntlab

#include "ntlab/detail/enumerate.hpp"

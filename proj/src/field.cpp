#include "ntlab/field.hpp"

#include "ntlab/error.hpp"

namespace ntlab {

bool is_prime(std::size_t n) {
    if (n < 2) return false;
    for (std::size_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Fixed moduli: x^2+x+1, x^3+x+1, x^4+x+1 over GF(2) and x^2+1 over GF(3).
// Stored as the low coefficients of the monic polynomial.
std::vector<std::size_t> modulus_for(std::size_t p, std::size_t e) {
    if (p == 2 && e == 2) return {1, 1};
    if (p == 2 && e == 3) return {1, 1, 0};
    if (p == 2 && e == 4) return {1, 1, 0, 0};
    if (p == 3 && e == 2) return {1, 0};
    throw UnsupportedError("no fixed modulus for GF(" + std::to_string(p) + "^" + std::to_string(e) + ")");
}

std::vector<std::size_t> digits(std::size_t a, std::size_t p, std::size_t e) {
    std::vector<std::size_t> d(e);
    for (std::size_t i = 0; i < e; ++i, a /= p) d[i] = a % p;
    return d;
}

std::size_t undigits(const std::vector<std::size_t>& d, std::size_t p) {
    std::size_t a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
    return a;
}

} // namespace

GaloisField::GaloisField(std::size_t q) : q_(q) {
    if (is_prime(q)) {
        if (q > 1021) throw UnsupportedError("prime fields are supported up to 1021");
        p_ = q;
        e_ = 1;
    } else {
        p_ = 0;
        for (std::size_t p : {2u, 3u}) {
            std::size_t e = 0, x = q;
            while (x > 1 && x % p == 0) x /= p, ++e;
            if (x == 1 && e > 1) p_ = p, e_ = e;
        }
        if (p_ == 0) throw UnsupportedError("GF(" + std::to_string(q) + ") is not a supported field order");
        modulus_ = modulus_for(p_, e_);
        add_.resize(q * q);
        mul_.resize(q * q);
        for (std::size_t a = 0; a < q; ++a)
            for (std::size_t b = 0; b < q; ++b) {
                const auto da = digits(a, p_, e_), db = digits(b, p_, e_);
                std::vector<std::size_t> s(e_);
                for (std::size_t i = 0; i < e_; ++i) s[i] = (da[i] + db[i]) % p_;
                add_[a * q + b] = static_cast<std::uint16_t>(undigits(s, p_));
                std::vector<std::size_t> prod(2 * e_, 0);
                for (std::size_t i = 0; i < e_; ++i)
                    for (std::size_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
                for (std::size_t d = 2 * e_ - 1; d >= e_; --d) {
                    const std::size_t c = prod[d];
                    prod[d] = 0;
                    for (std::size_t i = 0; i < e_; ++i)
                        prod[d - e_ + i] = (prod[d - e_ + i] + (p_ - 1) * c % p_ * modulus_[i]) % p_;
                }
                prod.resize(e_);
                mul_[a * q + b] = static_cast<std::uint16_t>(undigits(prod, p_));
            }
    }
    for (std::size_t g = 1; g < q_ && primitive_ == 0; ++g) {
        std::size_t x = g, order = 1;
        while (x != 1) x = mul(x, g), ++order;
        if (order == q_ - 1) primitive_ = g;
    }
    if (primitive_ == 0) throw Error("field without a primitive element; modulus is not irreducible");
}

std::size_t GaloisField::add(std::size_t a, std::size_t b) const {
    if (e_ == 1) return (a + b) % p_;
    return add_[a * q_ + b];
}

std::size_t GaloisField::neg(std::size_t a) const {
    if (e_ == 1) return (p_ - a) % p_;
    auto d = digits(a, p_, e_);
    for (auto& x : d) x = (p_ - x) % p_;
    return undigits(d, p_);
}

std::size_t GaloisField::mul(std::size_t a, std::size_t b) const {
    if (e_ == 1) return a * b % p_;
    return mul_[a * q_ + b];
}

std::size_t GaloisField::pow(std::size_t a, std::uint64_t n) const {
    std::size_t r = 1;
    while (n) {
        if (n & 1u) r = mul(r, a);
        a = mul(a, a);
        n >>= 1;
    }
    return r;
}

std::size_t GaloisField::inv(std::size_t a) const {
    if (a == 0) throw RangeError("zero has no inverse");
    return pow(a, q_ - 2);
}

bool GaloisField::is_square(std::size_t a) const {
    if (a == 0) return true;
    if (p_ == 2) return true;
    return pow(a, (q_ - 1) / 2) == 1;
}

} // namespace ntlab

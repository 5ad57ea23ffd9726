#include "ntlab/f2.hpp"

#include <algorithm>
#include <bit>

#include "ntlab/error.hpp"

namespace ntlab {

namespace {

std::size_t words_for(std::size_t length) { return (length + BitVector::word_bits - 1) / BitVector::word_bits; }

void check_length(std::size_t length) {
    if (length > BitVector::max_length)
        throw RangeError("vector length " + std::to_string(length) + " exceeds the limit of " +
                         std::to_string(BitVector::max_length));
}

} // namespace

BitVector::BitVector(std::size_t length) : length_(length), words_(words_for(length), 0) { check_length(length); }

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i);
        else if (bits[i] != '0')
            throw MalformedInput(std::string("unexpected character '") + bits[i] + "' in bit string");
    }
    return v;
}

BitVector BitVector::ones(std::size_t length) {
    BitVector v(length);
    for (auto& w : v.words_) w = ~std::uint64_t{0};
    if (length % word_bits != 0 && !v.words_.empty()) v.words_.back() = (std::uint64_t{1} << (length % word_bits)) - 1;
    return v;
}

BitVector BitVector::unit(std::size_t length, std::size_t index) {
    if (index >= length) throw RangeError("unit vector index out of range");
    BitVector v(length);
    v.set(index);
    return v;
}

BitVector BitVector::from_support(std::size_t length, std::span<const std::size_t> support) {
    BitVector v(length);
    for (auto i : support) {
        if (i >= length) throw RangeError("support index out of range");
        v.set(i);
    }
    return v;
}

void BitVector::set(std::size_t i, bool value) noexcept {
    const auto mask = std::uint64_t{1} << (i % word_bits);
    if (value)
        words_[i / word_bits] |= mask;
    else
        words_[i / word_bits] &= ~mask;
}

std::size_t BitVector::weight() const noexcept {
    std::size_t w = 0;
    for (auto x : words_) w += static_cast<std::size_t>(std::popcount(x));
    return w;
}

bool BitVector::is_zero() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t x) { return x == 0; });
}

std::optional<std::size_t> BitVector::lowest_set() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] != 0) return i * word_bits + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return std::nullopt;
}

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        auto x = words_[i];
        while (x != 0) {
            out.push_back(i * word_bits + static_cast<std::size_t>(std::countr_zero(x)));
            x &= x - 1;
        }
    }
    return out;
}

bool BitVector::dot(const BitVector& other) const {
    if (other.length_ != length_) throw DimensionError("inner product of vectors with different lengths");
    unsigned parity = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) parity ^= static_cast<unsigned>(std::popcount(words_[i] & other.words_[i]));
    return parity & 1u;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.length_ != length_) throw DimensionError("sum of vectors with different lengths");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

std::string BitVector::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
        if (test(i)) s[i] = '1';
    return s;
}

std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    // Compare as bit strings, position 0 first.
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
        if (a.words_[i] == b.words_[i]) continue;
        const auto diff = a.words_[i] ^ b.words_[i];
        const auto low = std::countr_zero(diff);
        return ((a.words_[i] >> low) & 1u) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

std::size_t distance(const BitVector& a, const BitVector& b) {
    if (a.size() != b.size()) throw DimensionError("distance between vectors with different lengths");
    std::size_t d = 0;
    auto wa = a.words();
    auto wb = b.words();
    for (std::size_t i = 0; i < wa.size(); ++i) d += static_cast<std::size_t>(std::popcount(wa[i] ^ wb[i]));
    return d;
}

std::size_t BitVectorHash::operator()(const BitVector& v) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ v.size();
    for (auto w : v.words()) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
}

// ---------------------------------------------------------------------------

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows, std::size_t cols) {
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].size() != cols)
            throw MalformedInput("row " + std::to_string(i) + " has length " + std::to_string(rows[i].size()) +
                                 ", expected " + std::to_string(cols));
    BitMatrix m;
    m.cols_ = cols;
    m.rows_ = std::move(rows);
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
    if (rows.empty()) throw MalformedInput("matrix without rows needs an explicit column count");
    std::vector<BitVector> vs;
    vs.reserve(rows.size());
    for (const auto& r : rows) vs.push_back(BitVector::from_string(r));
    return from_rows(std::move(vs), rows.front().size());
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

void BitMatrix::append_row(BitVector row) {
    if (row.size() != cols_) throw DimensionError("appended row has the wrong length");
    rows_.push_back(std::move(row));
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
        for (auto c : rows_[r].support()) t.set(c, r);
    return t;
}

BitMatrix BitMatrix::stacked(const BitMatrix& below) const {
    if (below.cols_ != cols_) throw DimensionError("column count mismatch when stacking matrices");
    BitMatrix out = *this;
    for (const auto& r : below.rows_) out.rows_.push_back(r);
    return out;
}

// ---------------------------------------------------------------------------

RowEchelon rref(const BitMatrix& a) {
    if (a.cols() == 0) throw MalformedInput("matrix has no columns");
    std::vector<BitVector> rows = a.row_vectors();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && !rows[p].test(c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].test(c)) rows[i] ^= rows[r];
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    RowEchelon out;
    out.rank = r;
    out.pivots = std::move(pivots);
    out.reduced = BitMatrix::from_rows(std::move(rows), a.cols());
    return out;
}

std::size_t rank(const BitMatrix& a) { return rref(a).rank; }

BitMatrix dual(const BitMatrix& g) {
    const auto e = rref(g);
    const std::size_t m = g.cols();
    std::vector<bool> is_pivot(m, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    // For a free column j: e_j + sum over reduced rows i with R[i][j] = 1 of e_{pivot(i)}.
    std::vector<BitVector> rows;
    for (std::size_t j = 0; j < m; ++j) {
        if (is_pivot[j]) continue;
        BitVector v(m);
        v.set(j);
        for (std::size_t i = 0; i < e.rank; ++i)
            if (e.reduced.get(i, j)) v.set(e.pivots[i]);
        rows.push_back(std::move(v));
    }
    if (rows.empty()) return BitMatrix(0, m);
    return rref(BitMatrix::from_rows(std::move(rows), m)).reduced;
}

namespace {

void require_same_cols(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols())
        throw DimensionError("subspaces live in different ambient spaces (" + std::to_string(a.cols()) + " vs " +
                             std::to_string(b.cols()) + " columns)");
}

} // namespace

BitMatrix subspace_sum(const BitMatrix& a, const BitMatrix& b) {
    require_same_cols(a, b);
    return rref(a.stacked(b)).reduced;
}

BitMatrix subspace_intersection(const BitMatrix& a, const BitMatrix& b) {
    require_same_cols(a, b);
    return dual(subspace_sum(dual(a), dual(b)));
}

bool in_row_space(const BitMatrix& a, const BitVector& v) {
    if (v.size() != a.cols()) throw DimensionError("vector length does not match the column count");
    EchelonBasis basis(a.cols());
    for (const auto& r : a.row_vectors()) basis.insert(r);
    return basis.contains(v);
}

bool same_row_space(const BitMatrix& a, const BitMatrix& b) {
    require_same_cols(a, b);
    return rref(a).reduced == rref(b).reduced;
}

bool is_subspace(const BitMatrix& inner, const BitMatrix& outer) {
    require_same_cols(inner, outer);
    EchelonBasis basis(outer.cols());
    for (const auto& r : outer.row_vectors()) basis.insert(r);
    return std::all_of(inner.row_vectors().begin(), inner.row_vectors().end(),
                       [&](const BitVector& v) { return basis.contains(v); });
}

// ---------------------------------------------------------------------------

EchelonBasis::EchelonBasis(std::size_t cols) : cols_(cols) {}

BitVector EchelonBasis::reduce(BitVector v) const {
    if (v.size() != cols_) throw DimensionError("vector length does not match the basis");
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.test(pivots_[i])) v ^= rows_[i];
    return v;
}

std::optional<BitVector> EchelonBasis::insert(const BitVector& v) {
    auto r = reduce(v);
    const auto pivot = r.lowest_set();
    if (!pivot) return std::nullopt;
    // Keep the basis fully reduced: clear the new pivot column from older rows.
    for (auto& row : rows_)
        if (row.test(*pivot)) row ^= r;
    rows_.push_back(r);
    pivots_.push_back(*pivot);
    return r;
}

BitMatrix EchelonBasis::to_matrix() const {
    if (rows_.empty()) return BitMatrix(0, cols_);
    return rref(BitMatrix::from_rows(rows_, cols_)).reduced;
}

} // namespace ntlab

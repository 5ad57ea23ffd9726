#pragma once

// Packed vectors and matrices over the two-element field.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ntlab {

class BitVector {
public:
    static constexpr std::size_t max_length = 1024;
    static constexpr std::size_t word_bits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t length);

    /// Parses a string of '0'/'1' characters; position 0 is the first character.
    static BitVector from_string(std::string_view bits);
    static BitVector ones(std::size_t length);
    static BitVector unit(std::size_t length, std::size_t index);
    static BitVector from_support(std::size_t length, std::span<const std::size_t> support);

    std::size_t size() const noexcept { return length_; }
    std::size_t word_count() const noexcept { return words_.size(); }

    bool test(std::size_t i) const noexcept { return (words_[i / word_bits] >> (i % word_bits)) & 1u; }
    void set(std::size_t i, bool value = true) noexcept;
    void flip(std::size_t i) noexcept { words_[i / word_bits] ^= std::uint64_t{1} << (i % word_bits); }

    std::size_t weight() const noexcept;
    bool is_zero() const noexcept;
    std::optional<std::size_t> lowest_set() const noexcept;
    std::vector<std::size_t> support() const;

    /// Standard inner product mod 2.
    bool dot(const BitVector& other) const;

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend BitVector operator+(BitVector a, const BitVector& b) { return a ^= b; }

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::span<std::uint64_t> words() noexcept { return words_; }

    std::string to_string() const;

    friend bool operator==(const BitVector&, const BitVector&) = default;
    friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b);

private:
    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

std::size_t distance(const BitVector& a, const BitVector& b);

struct BitVectorHash {
    std::size_t operator()(const BitVector& v) const noexcept;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    /// Throws MalformedInput when a row length differs from `cols`.
    static BitMatrix from_rows(std::vector<BitVector> rows, std::size_t cols);
    static BitMatrix from_strings(const std::vector<std::string>& rows);
    static BitMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }

    const BitVector& row(std::size_t i) const { return rows_[i]; }
    BitVector& row(std::size_t i) { return rows_[i]; }
    const BitVector& operator[](std::size_t i) const { return rows_[i]; }
    const std::vector<BitVector>& row_vectors() const noexcept { return rows_; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].test(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }

    void append_row(BitVector row);
    BitMatrix transpose() const;
    BitMatrix stacked(const BitMatrix& below) const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

struct RowEchelon {
    BitMatrix reduced;                // nonzero rows of the RREF only
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column of each reduced row
};

RowEchelon rref(const BitMatrix& a);
std::size_t rank(const BitMatrix& a);

/// Generator matrix (in RREF) of the orthogonal complement of the row space.
BitMatrix dual(const BitMatrix& g);

BitMatrix subspace_sum(const BitMatrix& a, const BitMatrix& b);
BitMatrix subspace_intersection(const BitMatrix& a, const BitMatrix& b);
bool in_row_space(const BitMatrix& a, const BitVector& v);
bool same_row_space(const BitMatrix& a, const BitMatrix& b);
bool is_subspace(const BitMatrix& inner, const BitMatrix& outer);

/// Incrementally grown basis kept in reduced echelon form.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t cols);

    std::size_t cols() const noexcept { return cols_; }
    std::size_t dimension() const noexcept { return rows_.size(); }

    BitVector reduce(BitVector v) const;
    bool contains(const BitVector& v) const { return reduce(v).is_zero(); }

    /// Adds `v` if independent; returns the reduced vector that was inserted.
    std::optional<BitVector> insert(const BitVector& v);

    const std::vector<BitVector>& rows() const noexcept { return rows_; }
    BitMatrix to_matrix() const;

private:
    std::size_t cols_;
    std::vector<BitVector> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace ntlab

template <>
struct std::hash<ntlab::BitVector> {
    std::size_t operator()(const ntlab::BitVector& v) const noexcept { return ntlab::BitVectorHash{}(v); }
};

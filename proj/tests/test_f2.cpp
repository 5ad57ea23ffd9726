#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ntlab/error.hpp"
#include "ntlab/f2.hpp"
#include "oracle.hpp"

using namespace ntlab;

namespace {

std::vector<std::string> rows_of(const BitMatrix& a) {
    std::vector<std::string> out;
    for (const auto& r : a.row_vectors()) out.push_back(r.to_string());
    return out;
}

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    std::vector<std::string> s;
    for (std::size_t i = 0; i < rows; ++i) s.push_back(oracle::random_word(cols, rng));
    return BitMatrix::from_strings(s);
}

BitMatrix repetition(std::size_t m) { return BitMatrix::from_rows({BitVector::ones(m)}, m); }

} // namespace

TEST_CASE("bit vector basics") {
    auto v = BitVector::from_string("1011000001");
    CHECK(v.size() == 10);
    CHECK(v.weight() == 4);
    CHECK(v.support() == std::vector<std::size_t>{0, 2, 3, 9});
    CHECK((v + v).is_zero());
    CHECK(v.to_string() == "1011000001");
    CHECK(distance(v, BitVector(10)) == 4);
    auto long_v = BitVector::unit(300, 257);
    CHECK(long_v.weight() == 1);
    CHECK(long_v.lowest_set() == 257u);
    CHECK(BitVector::ones(130).weight() == 130);
    CHECK_THROWS_AS(BitVector::from_string("10a1"), MalformedInput);
    CHECK_THROWS(BitVector(1025));
}

TEST_CASE("dot product matches the character oracle") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        const std::size_t m = 1 + rng() % 200;
        auto a = oracle::random_word(m, rng), b = oracle::random_word(m, rng);
        int ip = 0;
        for (std::size_t i = 0; i < m; ++i) ip ^= (a[i] == '1' && b[i] == '1');
        CHECK(BitVector::from_string(a).dot(BitVector::from_string(b)) == static_cast<bool>(ip));
        CHECK(distance(BitVector::from_string(a), BitVector::from_string(b)) ==
              static_cast<std::size_t>(oracle::distance(a, b)));
    }
}

TEST_CASE("rref of the identity") {
    auto e = rref(BitMatrix::identity(3));
    CHECK(e.rank == 3);
    CHECK(e.pivots == std::vector<std::size_t>{0, 1, 2});
    CHECK(e.reduced == BitMatrix::identity(3));
}

TEST_CASE("rref drops a dependent row") {
    auto a = BitMatrix::from_strings({"110", "011", "101"});
    auto e = rref(a);
    CHECK(e.rank == 2);
    CHECK(same_row_space(e.reduced, BitMatrix::from_strings({"110", "011"})));
    // Reduced form: pivots cleared above and below.
    CHECK(rows_of(e.reduced) == std::vector<std::string>{"101", "011"});
}

TEST_CASE("rref rejects mismatched row lengths") {
    CHECK_THROWS_AS(BitMatrix::from_strings({"110", "01"}), MalformedInput);
    CHECK_THROWS_AS(BitMatrix::from_rows({BitVector(4)}, 5), MalformedInput);
}

TEST_CASE("rank and row space agree with elimination oracle") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        const std::size_t r = 1 + rng() % 9, c = 1 + rng() % 12;
        auto a = random_matrix(r, c, rng);
        auto e = rref(a);
        CHECK(e.rank == oracle::rank(rows_of(a)));
        CHECK(oracle::span(rows_of(e.reduced), c) == oracle::span(rows_of(a), c));
        CHECK(rref(e.reduced).reduced == e.reduced);
    }
}

TEST_CASE("dual dimensions and double dual") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 60; ++t) {
        const std::size_t m = 1 + rng() % 70;
        auto a = random_matrix(1 + rng() % 10, m, rng);
        auto d = dual(a);
        CHECK(rank(a) + d.rows() == m);
        CHECK(same_row_space(dual(d), a));
        for (const auto& x : a.row_vectors())
            for (const auto& y : d.row_vectors()) CHECK_FALSE(x.dot(y));
    }
    CHECK(dual(BitMatrix::identity(6)).rows() == 0);
    auto even = dual(repetition(9));
    CHECK(even.rows() == 8);
    for (const auto& r : even.row_vectors()) CHECK(r.weight() % 2 == 0);
}

TEST_CASE("dual of Hamming 7 is the simplex code") {
    auto h = BitMatrix::from_strings({"1000110", "0100011", "0010111", "0001101"});
    auto s = dual(h);
    CHECK(s.rows() == 3);
    for (const auto& w : oracle::span(rows_of(s), 7))
        if (oracle::weight(w) != 0) CHECK(oracle::weight(w) == 4);
}

TEST_CASE("subspace sum and intersection") {
    const std::size_t m = 10;
    auto y = repetition(m);
    CHECK(same_row_space(subspace_sum(y, BitMatrix(0, m)), y));
    CHECK(same_row_space(subspace_intersection(y, dual(y)), y));
    CHECK(subspace_intersection(repetition(9), dual(repetition(9))).rows() == 0);
    CHECK_THROWS_AS(subspace_sum(y, repetition(9)), DimensionError);

    std::mt19937_64 rng(17);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 2 + rng() % 10;
        auto a = random_matrix(1 + rng() % 6, n, rng), b = random_matrix(1 + rng() % 6, n, rng);
        auto sa = oracle::span(rows_of(a), n), sb = oracle::span(rows_of(b), n);
        std::set<std::string> common;
        for (const auto& x : sa)
            if (sb.count(x)) common.insert(x);
        auto i = subspace_intersection(a, b);
        CHECK(oracle::span(rows_of(i), n) == common);
        CHECK(is_subspace(a, subspace_sum(a, b)));
        CHECK(is_subspace(b, subspace_sum(a, b)));
        for (int s = 0; s < 10; ++s) {
            auto v = oracle::random_word(n, rng);
            CHECK(in_row_space(a, BitVector::from_string(v)) == static_cast<bool>(sa.count(v)));
        }
    }
}

TEST_CASE("echelon basis grows incrementally") {
    EchelonBasis b(5);
    CHECK(b.insert(BitVector::from_string("11000")));
    CHECK(b.insert(BitVector::from_string("01100")));
    CHECK_FALSE(b.insert(BitVector::from_string("10100")));
    CHECK(b.dimension() == 2);
    CHECK(b.contains(BitVector::from_string("10100")));
    CHECK(same_row_space(b.to_matrix(), BitMatrix::from_strings({"11000", "01100"})));
}

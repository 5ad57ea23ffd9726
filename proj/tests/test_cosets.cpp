#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "ntlab/cosets.hpp"
#include "ntlab/error.hpp"
#include "oracle.hpp"

using namespace ntlab;

namespace {

std::vector<BigInt> sizes(std::initializer_list<int> xs) {
    std::vector<BigInt> out;
    for (int x : xs) out.emplace_back(x);
    return out;
}

// Cell sizes by brute force over every vertex.
std::vector<BigInt> oracle_partition(const std::set<std::string>& code, std::size_t m) {
    std::vector<BigInt> out;
    for (const auto& v : oracle::all_vertices(m)) {
        const auto d = static_cast<std::size_t>(oracle::distance_to(v, code));
        if (out.size() <= d) out.resize(d + 1, 0);
        out[d] += 1;
    }
    return out;
}

} // namespace

TEST_CASE("covering radius of standard codes") {
    CHECK(CosetTable(fixtures::golay23_cyclic()).covering_radius() == 3);
    CHECK(CosetTable(fixtures::hamming7()).covering_radius() == 1);
    const CosetTable full(LinearCode::full(9));
    CHECK(full.covering_radius() == 0);
    CHECK(full.leader_weight().size() == 1);
    CHECK(CosetTable(fixtures::golay23_cyclic()).leader_weight()[0] == 0);
}

TEST_CASE("distance partitions") {
    CHECK(distance_partition(fixtures::repetition(5)).sizes == sizes({2, 10, 20}));
    CHECK(distance_partition(fixtures::hamming7()).sizes == sizes({16, 112}));
    const auto golay = distance_partition(fixtures::golay23_cyclic());
    CHECK(golay.total() == BigInt(1) << 23);
    CHECK(golay.sizes == sizes({4096, 4096 * 23, 4096 * 253, 4096 * 1771}));
    UnrestrictedCode rep(5, {BitVector::from_string("00000"), BitVector::from_string("11111")});
    CHECK(distance_partition(rep).sizes == sizes({2, 10, 20}));
}

TEST_CASE("distance partitions agree with the vertex oracle") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 15; ++t) {
        const std::size_t m = 3 + rng() % 8;
        std::vector<std::string> rows;
        for (std::size_t i = 0; i < 1 + rng() % 4; ++i) rows.push_back(oracle::random_word(m, rng));
        const LinearCode c(BitMatrix::from_strings(rows));
        const auto set = oracle::span(rows, m);
        CHECK(distance_partition(c).sizes == oracle_partition(set, m));
        CHECK(distance_partition(as_unrestricted(c)).sizes == oracle_partition(set, m));

        std::vector<BitVector> random_words;
        std::set<std::string> random_set;
        for (std::size_t i = 0; i < 1 + rng() % 6; ++i) {
            auto w = oracle::random_word(m, rng);
            if (random_set.insert(w).second) random_words.push_back(BitVector::from_string(w));
        }
        CHECK(distance_partition(UnrestrictedCode(m, random_words)).sizes == oracle_partition(random_set, m));
    }
}

TEST_CASE("distance to the code is constant on cosets") {
    const auto g = fixtures::golay23_cyclic();
    const CosetTable table(g);
    const auto rows = fixtures::words_of(g);
    std::mt19937_64 rng(43);
    for (int t = 0; t < 200; ++t) {
        const auto v = BitVector::from_string(oracle::random_word(23, rng));
        BitVector c(23);
        for (const auto& r : g.generator().row_vectors())
            if (rng() & 1u) c ^= r;
        CHECK(table.distance_to_code(v) == table.distance_to_code(v + c));
    }
    const auto h = fixtures::hamming7();
    const CosetTable ht(h);
    const auto set = oracle::span(fixtures::words_of(h), 7);
    for (const auto& v : oracle::all_vertices(7))
        CHECK(ht.distance_to_code(BitVector::from_string(v)) == static_cast<std::size_t>(oracle::distance_to(v, set)));
}

TEST_CASE("coset budget") {
    CHECK_THROWS_AS(CosetTable(fixtures::repetition(40)), BudgetError);
    std::vector<BitVector> words(1, BitVector(25));
    CHECK_THROWS_AS(distance_partition(UnrestrictedCode(25, words)), BudgetError);
}

TEST_CASE("perfect codes match the sphere-packing count") {
    for (std::size_t r = 2; r <= 5; ++r) {
        const std::size_t m = (std::size_t{1} << r) - 1;
        std::vector<BitVector> rows;
        for (std::size_t b = 0; b < r; ++b) {
            BitVector v(m);
            for (std::size_t j = 0; j < m; ++j)
                if ((j + 1) >> b & 1u) v.set(j);
            rows.push_back(v);
        }
        const auto hamming = LinearCode(m, BitMatrix::from_rows(rows, m)).dual();
        CHECK(minimum_distance(hamming) == 3);
        CHECK(CosetTable(hamming).covering_radius() == 1);
        CHECK((BigInt(1) << hamming.dimension()) * (1 + m) == BigInt(1) << m);
    }
}

TEST_CASE("regularity") {
    UnrestrictedCode pair(5, {BitVector::from_string("00000"), BitVector::from_string("11100")});
    const auto r = s_regular_check(Code{pair}, 1);
    CHECK_FALSE(r.regular);
    REQUIRE(r.witness.has_value());
    // Both witnesses are at distance 1 from the code but see it differently.
    const auto profile = [&](const BitVector& v) {
        std::vector<std::size_t> p;
        for (const auto& w : pair.words()) p.push_back(distance(v, w));
        std::sort(p.begin(), p.end());
        return p;
    };
    CHECK(profile(r.witness->first) != profile(r.witness->second));

    CHECK(s_regular_check(Code{fixtures::hamming7()}, 1).regular);
    CHECK(s_regular_check(Code{as_unrestricted(fixtures::hamming7())}, 1).regular);
    const auto golay = s_regular_check(Code{fixtures::golay23_cyclic()}, 3);
    CHECK(golay.regular);
    CHECK(golay.covering_radius == 3);
    CHECK_THROWS_AS(s_regular_check(Code{fixtures::hamming7()}, 2), RangeError);

    // A random linear code is usually not 1-regular; the two paths must agree either way.
    std::mt19937_64 rng(47);
    for (int t = 0; t < 10; ++t) {
        std::vector<std::string> rows;
        for (int i = 0; i < 3; ++i) rows.push_back(oracle::random_word(9, rng));
        const LinearCode c(BitMatrix::from_strings(rows));
        const auto rho = CosetTable(c).covering_radius();
        for (std::size_t s = 0; s <= rho; ++s)
            CHECK(s_regular_check(Code{c}, s).regular == s_regular_check(Code{as_unrestricted(c)}, s).regular);
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "ntlab/error.hpp"
#include "ntlab/permgroup.hpp"
#include "oracle.hpp"

using namespace ntlab;

namespace {

Permutation affine(std::size_t p, std::size_t a, std::size_t b) {
    std::vector<std::size_t> img(p);
    for (std::size_t x = 0; x < p; ++x) img[x] = (a * x + b) % p;
    return Permutation(img);
}

PermGroup affine_group(std::size_t p, std::size_t mult) { return PermGroup(p, {affine(p, 1, 1), affine(p, mult, 0)}); }

PermGroup symmetric(std::size_t m) {
    std::vector<std::size_t> cycle(m);
    std::iota(cycle.begin(), cycle.end(), std::size_t{0});
    return PermGroup(m, {Permutation::from_cycles(m, {cycle}), Permutation::from_cycles(m, {{0, 1}})});
}

Permutation random_perm(std::size_t m, std::mt19937_64& rng) {
    std::vector<std::size_t> img(m);
    std::iota(img.begin(), img.end(), std::size_t{0});
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(img);
}

std::vector<oracle::Perm> images(const PermGroup& g) {
    std::vector<oracle::Perm> out;
    for (const auto& s : g.generators()) out.push_back(s.images());
    return out;
}

BigInt factorial(std::size_t n) {
    BigInt r = 1;
    for (std::size_t i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace

TEST_CASE("permutation validation and arithmetic") {
    CHECK_THROWS_AS(Permutation({0, 0, 1}), MalformedInput);
    CHECK_THROWS_AS(Permutation({0, 3, 1}), MalformedInput);
    const auto a = Permutation::from_cycles(5, {{0, 1, 2}});
    const auto b = Permutation::from_cycles(5, {{2, 3}});
    CHECK((a * b)(1) == 3);  // a first: 1 -> 2, then b: 2 -> 3
    CHECK((a * a.inverse()).is_identity());
    CHECK(a.order() == 3);
    CHECK((a * b).order() == 4);
    CHECK(a.apply(BitVector::from_string("10000")) == BitVector::from_string("01000"));
    CHECK(Permutation::from_cycles(6, {{0, 1}, {2, 3, 4}}).cycles() ==
          std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3, 4}});
}

TEST_CASE("orbits of points, tuples, subsets and vectors") {
    const PermGroup cyc(7, {Permutation::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}})});
    CHECK(orbit(cyc, 0).size() == 7);
    const auto aff = affine_group(7, 2);
    CHECK(tuple_orbit(aff, {0, 1}).size() == 21);
    CHECK(subset_orbit(aff, {0, 1}).size() == 21);
    CHECK(orbit(symmetric(5), BitVector::from_string("11000")).size() == 10);
    CHECK_THROWS_AS(orbit(cyc, BitVector(6)), DimensionError);
    CHECK_THROWS_AS(orbit(cyc, 7), DimensionError);
}

TEST_CASE("orbits partition the points") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 30; ++t) {
        const std::size_t m = 2 + rng() % 12;
        std::vector<Permutation> gens;
        for (int i = 0; i < 2; ++i) {
            // Sparse permutations so that several orbits occur.
            std::vector<std::size_t> img(m);
            std::iota(img.begin(), img.end(), std::size_t{0});
            std::swap(img[rng() % m], img[rng() % m]);
            gens.push_back(Permutation(img));
        }
        const PermGroup g(m, gens);
        std::size_t total = 0;
        std::vector<int> seen(m, 0);
        for (const auto& o : orbits(g)) {
            total += o.size();
            for (auto p : o) ++seen[p];
            CHECK(orbit(g, o.front()) == o);
        }
        CHECK(total == m);
        CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
    }
}

TEST_CASE("transitivity profiles") {
    const auto aff = transitivity_profile(affine_group(7, 2));
    CHECK(aff.transitive);
    CHECK(aff.two_homogeneous);
    CHECK_FALSE(aff.two_transitive);
    const auto sym = transitivity_profile(symmetric(8));
    CHECK(sym.transitive);
    CHECK(sym.two_transitive);
    CHECK(sym.two_homogeneous);
    const auto small = transitivity_profile(PermGroup(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}})}));
    CHECK_FALSE(small.transitive);
    CHECK_FALSE(small.two_homogeneous);
    CHECK_FALSE(small.two_transitive);
}

TEST_CASE("transitivity profile against an element oracle") {
    std::mt19937_64 rng(59);
    for (int t = 0; t < 25; ++t) {
        const std::size_t m = 3 + rng() % 5;
        std::vector<Permutation> gens{random_perm(m, rng)};
        if (rng() & 1u) gens.push_back(random_perm(m, rng));
        const PermGroup g(m, gens);
        const auto elems = oracle::elements(images(g), m);
        std::set<std::pair<std::size_t, std::size_t>> ordered;
        std::set<std::pair<std::size_t, std::size_t>> unordered;
        std::set<std::size_t> points;
        for (const auto& e : elems) {
            points.insert(e[0]);
            ordered.insert({e[0], e[1]});
            unordered.insert({std::min(e[0], e[1]), std::max(e[0], e[1])});
        }
        const auto p = transitivity_profile(g);
        CHECK(p.transitive == (points.size() == m));
        CHECK(p.two_transitive == (ordered.size() == m * (m - 1)));
        CHECK(p.two_homogeneous == (p.transitive && unordered.size() == m * (m - 1) / 2));
        if (p.two_transitive) CHECK(p.two_homogeneous);
        CHECK(g.order() == elems.size());
        // Orbit-stabilizer: every 2-subset orbit length divides |G|, and the orbits tile all pairs.
        std::set<std::vector<std::size_t>> covered;
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a + 1; b < m; ++b) {
                if (covered.count({a, b})) continue;
                const auto o = subset_orbit(g, {a, b});
                CHECK(elems.size() % o.size() == 0);
                covered.insert(o.begin(), o.end());
            }
        CHECK(covered.size() == m * (m - 1) / 2);
    }
}

TEST_CASE("group orders") {
    for (std::size_t m = 2; m <= 12; ++m) CHECK(symmetric(m).order() == factorial(m));
    CHECK(symmetric(40).order() == factorial(40));
    CHECK(affine_group(7, 2).order() == 21);
    CHECK(affine_group(23, 2).order() == 253);
    CHECK(PermGroup(7, {affine(7, 1, 1)}).order() == 7);
}

TEST_CASE("order is independent of generator order and base order") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 10; ++t) {
        const std::size_t m = 6 + rng() % 10;
        std::vector<Permutation> gens{random_perm(m, rng), random_perm(m, rng)};
        const BigInt base_order = PermGroup(m, gens).order();
        for (int s = 0; s < 4; ++s) {
            std::shuffle(gens.begin(), gens.end(), rng);
            std::vector<std::size_t> base(m);
            std::iota(base.begin(), base.end(), std::size_t{0});
            std::shuffle(base.begin(), base.end(), rng);
            CHECK(StabilizerChain(m, gens, base).order() == base_order);
        }
    }
}

TEST_CASE("membership and stabilizers") {
    const auto g = affine_group(11, 4);  // squares mod 11
    CHECK(g.contains(affine(11, 5, 3)));
    CHECK_FALSE(g.contains(affine(11, 2, 0)));
    std::vector<std::size_t> base{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    const StabilizerChain chain(11, g.generators(), base);
    const PermGroup stab(11, chain.stabilizer_generators(1));
    CHECK(stab.order() == 5);
    for (const auto& s : stab.generators()) CHECK(s(0) == 0);
}

TEST_CASE("code invariance") {
    CHECK(is_invariant(fixtures::repetition(9), symmetric(9)).invariant);
    const auto g23 = fixtures::golay23_cyclic();
    CHECK(is_invariant(g23, affine_group(23, 2)).invariant);
    const auto sym = symmetric(23);
    const auto report = is_invariant(g23, sym);
    CHECK_FALSE(report.invariant);
    REQUIRE(report.generator.has_value());
    REQUIRE(report.word.has_value());
    CHECK(g23.contains(*report.word));
    CHECK_FALSE(g23.contains(sym.generators()[*report.generator].apply(*report.word)));

    UnrestrictedCode pair(4, {BitVector::from_string("1100"), BitVector::from_string("0011")});
    CHECK(is_invariant(pair, PermGroup(4, {Permutation::from_cycles(4, {{0, 2}, {1, 3}})})).invariant);
    CHECK_FALSE(is_invariant(pair, PermGroup(4, {Permutation::from_cycles(4, {{0, 1, 2, 3}})})).invariant);
}

TEST_CASE("codeorder divisibility") {
    CHECK(codeorder_divisibility(affine_group(7, 2), 7));
    CHECK_FALSE(codeorder_divisibility(PermGroup(7, {affine(7, 1, 1)}), 7));
    CHECK(codeorder_divisibility(symmetric(9), 9));
    CHECK_THROWS_AS(codeorder_divisibility(PermGroup(4, {Permutation::from_cycles(4, {{0, 1}})}), 4),
                    PreconditionError);
}

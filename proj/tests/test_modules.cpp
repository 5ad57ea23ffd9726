#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "groups.hpp"
#include "ntlab/error.hpp"
#include "ntlab/modules.hpp"
#include "oracle.hpp"

using namespace ntlab;

namespace {

std::shared_ptr<const PermGroup> share(PermGroup g) { return std::make_shared<const PermGroup>(std::move(g)); }

PermGroup affine_mod(std::size_t p, std::size_t mult) {
    std::vector<std::size_t> shift(p), scale(p);
    for (std::size_t x = 0; x < p; ++x) {
        shift[x] = (x + 1) % p;
        scale[x] = (x * mult) % p;
    }
    return PermGroup(p, {Permutation(shift), Permutation(scale)});
}

BitVector residues(std::size_t p) {
    BitVector v(p);
    for (std::size_t x = 1; x < p; ++x) v.set(x * x % p);
    return v;
}

const Submodule* find_dim(const std::vector<const Submodule*>& xs, std::size_t dim) {
    for (auto* s : xs)
        if (s->dimension() == dim) return s;
    return nullptr;
}

// Smallest invariant subspace by closing the full orbit span, as an oracle for spinning.
LinearCode orbit_span(const PermGroup& g, const BitVector& seed) {
    std::vector<BitVector> rows;
    for (const auto& w : orbit(g, seed)) rows.push_back(w);
    return LinearCode(g.degree(), BitMatrix::from_rows(rows, g.degree()));
}

} // namespace

TEST_CASE("fixture groups have the expected orders") {
    CHECK(fixtures::projective_group(3).order() == 168);
    CHECK(fixtures::projective_group(4).order() == 20160);
    CHECK(fixtures::affine_linear_group(3).order() == 1344);
    CHECK(fixtures::affine_linear_group(4).order() == 322560);
}

TEST_CASE("spinning basics") {
    const auto g = share(fixtures::projective_group(3));
    CHECK(spin_space(*g, BitVector::ones(7)).dimension() == 1);
    CHECK(spin_space(*g, BitVector::unit(7, 3)).dimension() == 7);
    CHECK_THROWS_AS(spin_space(*g, BitVector(7)), DegenerateSeedError);
    CHECK_THROWS_AS(spin_space(*g, BitVector::ones(8)), DimensionError);
}

TEST_CASE("spinning quadratic residues mod 23 gives a [23,12,7] code") {
    const auto g = affine_mod(23, 2);
    const auto c = spin_space(g, residues(23));
    CHECK(c.dimension() == 12);
    CHECK(minimum_distance(c) == 7);
    CHECK(c.contains(residues(23)));
}

TEST_CASE("spin agrees with the orbit-span oracle") {
    std::mt19937_64 rng(71);
    const PermGroup groups[] = {fixtures::projective_group(3), fixtures::affine_linear_group(3),
                                fixtures::projective_group(4), affine_mod(23, 2)};
    for (const auto& g : groups)
        for (int t = 0; t < 15; ++t) {
            BitVector seed(g.degree());
            while (seed.is_zero()) seed = BitVector::from_string(oracle::random_word(g.degree(), rng));
            if (g.degree() > 16 && seed.weight() > 3) seed = BitVector::from_support(g.degree(), std::vector<std::size_t>{0, 1, 5});
            const auto s = spin_space(g, seed);
            CHECK(s == orbit_span(g, seed));
            CHECK(s.contains(seed));
            CHECK(is_invariant(s, g).invariant);
        }
}

TEST_CASE("spin is monotone") {
    const auto g = fixtures::affine_linear_group(4);
    const auto rm = fixtures::rm1(4);
    std::mt19937_64 rng(73);
    for (int t = 0; t < 20; ++t) {
        BitVector w(16);
        for (const auto& r : rm.generator().row_vectors())
            if (rng() & 1u) w ^= r;
        if (w.is_zero()) continue;
        CHECK(rm.contains(spin_space(g, w)));
    }
}

TEST_CASE("submodule construction checks invariance") {
    const auto g = share(fixtures::projective_group(3));
    CHECK_NOTHROW(Submodule(fixtures::hamming(3), g));
    CHECK_THROWS_AS(Submodule(fixtures::from_strings({"1100000"}), g), PreconditionError);
}

TEST_CASE("minimality certification") {
    const auto psl3 = share(fixtures::projective_group(3));
    const auto rep = certify_minimal(Submodule(fixtures::repetition(7), psl3));
    CHECK(rep.verdict == Tristate::yes);

    const auto psl4 = share(fixtures::projective_group(4));
    const auto simplex = certify_minimal(Submodule(fixtures::simplex(4), psl4));
    CHECK(simplex.verdict == Tristate::yes);
    CHECK(simplex.method == CertificationMethod::exhaustive);
    CHECK(simplex.elements_checked == 15);

    const auto agl3 = share(fixtures::affine_linear_group(3));
    const Submodule even(fixtures::even_weight(8), agl3);
    const auto cert = certify_minimal(even);
    CHECK(cert.verdict == Tristate::no);
    REQUIRE(cert.witness.has_value());
    const auto smaller = spin_space(*agl3, *cert.witness);
    CHECK(smaller.dimension() < 7);
    CHECK(even.space().contains(smaller));
    // The Reed-Muller code sits strictly between Y and Y-perp.
    CHECK(spin_space(*agl3, fixtures::rm1(3).generator().row(1)) == fixtures::rm1(3));

    const auto sampled = certify_minimal(Submodule(fixtures::simplex(4), psl4), CertifyMode::sampled(10, 5));
    CHECK(sampled.verdict == Tristate::probably);
    CHECK(sampled.method == CertificationMethod::sampled);
    CHECK(sampled.seed == 5);

    const auto agl4 = share(fixtures::affine_linear_group(4));
    CHECK_THROWS_AS(certify_minimal(Submodule(fixtures::even_weight(16), agl4)), BudgetError);
    CHECK(certify_minimal(Submodule(fixtures::even_weight(16), agl4), CertifyMode::sampled(20)).verdict == Tristate::no);
}

TEST_CASE("preminimality certification") {
    const auto agl4 = share(fixtures::affine_linear_group(4));
    const auto rm = certify_preminimal(Submodule(fixtures::rm1(4), agl4));
    CHECK(rm.verdict == Tristate::yes);
    CHECK(rm.elements_checked == 15);
    const auto y = certify_preminimal(Submodule(fixtures::repetition(16), agl4));
    CHECK(y.verdict == Tristate::no);
    CHECK(y.elements_checked == 0);
    const auto psl3 = share(fixtures::projective_group(3));
    CHECK(certify_preminimal(Submodule(fixtures::hamming(3), psl3)).verdict == Tristate::yes);
    CHECK_THROWS_AS(certify_preminimal(Submodule(fixtures::simplex(3), psl3)), PreconditionError);
    // RM(2,4) over Y is not minimal: RM(1,4) lies in between.
    const auto rm2 = fixtures::rm1(4).dual();
    CHECK(rm2.dimension() == 11);
    CHECK(certify_preminimal(Submodule(rm2, agl4)).verdict == Tristate::no);
}

namespace {

void check_lattice(const SearchResult& r) {
    for (const auto& a : r.submodules) {
        CHECK(is_invariant(a.space(), a.group()).invariant);
        for (const auto& b : r.submodules) {
            const auto sum = LinearCode(a.space().length(), subspace_sum(a.space().generator(), b.space().generator()));
            const auto meet =
                LinearCode(a.space().length(), subspace_intersection(a.space().generator(), b.space().generator()));
            const auto has = [&](const LinearCode& c) {
                return std::any_of(r.submodules.begin(), r.submodules.end(), [&](const Submodule& s) { return s.space() == c; });
            };
            CHECK(has(sum));
            CHECK(has(meet));
        }
    }
}

} // namespace

TEST_CASE("exhaustive search on PSL3(2)") {
    const auto g = share(fixtures::projective_group(3));
    const auto r = submodule_search(g);
    CHECK(r.complete);
    std::vector<std::size_t> dims;
    for (const auto& s : r.submodules) dims.push_back(s.dimension());
    CHECK(dims == std::vector<std::size_t>{0, 1, 3, 4, 6, 7});
    CHECK(r.submodules[2].space() == fixtures::simplex(3));
    CHECK(r.submodules[3].space() == fixtures::hamming(3));
    CHECK(r.submodules[4].space() == fixtures::even_weight(7));
    const auto minimal = r.minimal();
    REQUIRE(minimal.size() == 2);
    CHECK(minimal[0]->dimension() == 1);
    CHECK(minimal[1]->space() == fixtures::simplex(3));
    const auto pre = r.preminimal();
    REQUIRE(pre.size() == 1);
    CHECK(pre[0]->space() == fixtures::hamming(3));
    check_lattice(r);
}

TEST_CASE("exhaustive search on AGL3(2)") {
    const auto g = share(fixtures::affine_linear_group(3));
    const auto r = submodule_search(g);
    std::vector<std::size_t> dims;
    for (const auto& s : r.submodules) dims.push_back(s.dimension());
    CHECK(dims == std::vector<std::size_t>{0, 1, 4, 7, 8});
    REQUIRE(r.minimal().size() == 1);
    CHECK(r.minimal()[0]->dimension() == 1);
    REQUIRE(r.preminimal().size() == 1);
    CHECK(r.preminimal()[0]->space() == fixtures::rm1(3));
    check_lattice(r);
}

TEST_CASE("exhaustive search refuses large degree") {
    CHECK_THROWS_AS(submodule_search(share(fixtures::affine_linear_group(4))), BudgetError);
}

TEST_CASE("randomized search on AGL4(2)") {
    SearchOptions opt;
    opt.exhaustive = false;
    opt.trials = 16;
    const auto r = submodule_search(share(fixtures::affine_linear_group(4)), opt);
    CHECK_FALSE(r.complete);
    CHECK(r.seed == opt.seed);
    const auto pre = r.preminimal();
    REQUIRE(pre.size() == 1);
    CHECK(pre[0]->space() == fixtures::rm1(4));
    CHECK(pre[0]->preminimal->verdict == Tristate::yes);
    const auto minimal = r.minimal();
    REQUIRE(minimal.size() == 1);
    CHECK(minimal[0]->dimension() == 1);
}

TEST_CASE("randomized search reproduces the exhaustive PSL3(2) answer") {
    SearchOptions opt;
    opt.exhaustive = false;
    const auto r = submodule_search(share(fixtures::projective_group(3)), opt);
    REQUIRE(find_dim(r.minimal(), 3) != nullptr);
    CHECK(find_dim(r.minimal(), 3)->space() == fixtures::simplex(3));
    REQUIRE(r.preminimal().size() == 1);
    CHECK(r.preminimal()[0]->space() == fixtures::hamming(3));
}

TEST_CASE("classification") {
    const auto psl3 = share(fixtures::projective_group(3));
    const auto ham = classify_submodule(Submodule(fixtures::hamming(3), psl3));
    CHECK(ham.label == SubmoduleCase::perfect_distance3);
    CHECK(ham.minimum_distance == 3u);
    CHECK(classify_submodule(Submodule(fixtures::even_weight(7), psl3)).label == SubmoduleCase::dual_repetition);
    CHECK(classify_submodule(Submodule(fixtures::repetition(7), psl3)).label == SubmoduleCase::repetition);
    CHECK(classify_submodule(Submodule(LinearCode::full(7), psl3)).label == SubmoduleCase::full_space);
    CHECK(classify_submodule(Submodule(LinearCode::zero(7), psl3)).label == SubmoduleCase::trivial_zero);
    const auto simplex = classify_submodule(Submodule(fixtures::simplex(3), psl3));
    CHECK(simplex.label == SubmoduleCase::linear_2nt);
    CHECK(simplex.minimum_distance == 4u);

    const auto agl5 = share(fixtures::affine_linear_group(5));
    const auto rm = classify_submodule(Submodule(fixtures::rm1(5), agl5));
    CHECK(rm.label == SubmoduleCase::linear_2nt);
    CHECK(rm.minimum_distance == 16u);

    const auto cyclic = share(PermGroup(7, {Permutation::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}})}));
    CHECK_THROWS_AS(classify_submodule(Submodule(fixtures::repetition(7), cyclic)), HypothesisError);
    const auto s4 = share(PermGroup(4, {Permutation::from_cycles(4, {{0, 1, 2, 3}}), Permutation::from_cycles(4, {{0, 1}})}));
    CHECK_THROWS_AS(classify_submodule(Submodule(fixtures::repetition(4), s4)), HypothesisError);
}

TEST_CASE("every exhaustive search result receives exactly one label") {
    for (const auto& g : {share(fixtures::projective_group(3)), share(fixtures::affine_linear_group(3)),
                          share(fixtures::projective_group(4))}) {
        if (g->degree() > exhaustive_degree_limit) continue;
        const auto r = submodule_search(g);
        for (const auto& s : r.submodules) CHECK_NOTHROW(classify_submodule(s));
    }
}

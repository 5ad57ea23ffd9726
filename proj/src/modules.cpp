#include "ntlab/modules.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <set>
#include <random>

#include "ntlab/error.hpp"

namespace ntlab {

std::string to_string(Tristate t) {
    switch (t) {
    case Tristate::no: return "no";
    case Tristate::yes: return "yes";
    case Tristate::probably: return "probably";
    }
    return "?";
}

std::string to_string(CertificationMethod m) {
    switch (m) {
    case CertificationMethod::none: return "none";
    case CertificationMethod::exhaustive: return "exhaustive";
    case CertificationMethod::sampled: return "sampled";
    }
    return "?";
}

std::string to_string(SubmoduleCase c) {
    switch (c) {
    case SubmoduleCase::trivial_zero: return "trivial-zero";
    case SubmoduleCase::full_space: return "full-space";
    case SubmoduleCase::repetition: return "repetition";
    case SubmoduleCase::dual_repetition: return "dual-repetition";
    case SubmoduleCase::perfect_distance3: return "perfect-delta3";
    case SubmoduleCase::linear_2nt: return "linear-2NT";
    }
    return "?";
}

Submodule::Submodule(LinearCode space, std::shared_ptr<const PermGroup> group)
    : space_(std::move(space)), group_(std::move(group)) {
    if (!group_) throw PreconditionError("submodule needs a group");
    if (!is_invariant(space_, *group_).invariant) throw PreconditionError("subspace is not invariant under the group");
}

bool Submodule::contains_all_ones() const { return space_.contains(BitVector::ones(space_.length())); }

LinearCode spin_space(const PermGroup& g, const BitVector& seed) {
    if (seed.size() != g.degree()) throw DimensionError("seed length does not match the group degree");
    if (seed.is_zero()) throw DegenerateSeedError("cannot spin the zero vector");
    const std::size_t m = g.degree();
    EchelonBasis basis(m);
    std::vector<BitVector> queue;
    queue.push_back(*basis.insert(seed));
    for (std::size_t i = 0; i < queue.size() && basis.dimension() < m; ++i)
        for (const auto& s : g.generators())
            if (auto r = basis.insert(s.apply(queue[i]))) queue.push_back(std::move(*r));
    return LinearCode(m, basis.to_matrix());
}

Submodule spin(std::shared_ptr<const PermGroup> g, const BitVector& seed) {
    auto space = spin_space(*g, seed);
    return Submodule(std::move(space), std::move(g));
}

namespace {

BitVector random_combination(const std::vector<BitVector>& basis, std::size_t m, std::mt19937_64& rng) {
    BitVector v(m);
    if (basis.empty()) return v;
    while (v.is_zero()) {
        for (const auto& b : basis)
            if (rng() & 1u) v ^= b;
    }
    return v;
}

void check_exhaustive_budget(std::size_t dim) {
    if (dim > exhaustive_dimension_limit)
        throw BudgetError("exhaustive certification of a " + std::to_string(dim) + "-dimensional submodule exceeds the limit of " +
                          std::to_string(exhaustive_dimension_limit) + "; use sampled mode");
}

// Visits every nonzero combination of `basis`; stops when visit returns false.
template <class Visitor>
std::size_t for_each_nonzero_combination(const std::vector<BitVector>& basis, std::size_t m, Visitor&& visit) {
    BitVector v(m);
    const std::uint64_t total = std::uint64_t{1} << basis.size();
    std::size_t n = 0;
    for (std::uint64_t i = 1; i < total; ++i) {
        v ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
        ++n;
        if (!visit(static_cast<const BitVector&>(v))) break;
    }
    return n;
}

} // namespace

Certification certify_minimal(const Submodule& w, CertifyMode mode) {
    Certification cert;
    cert.seed = mode.seed;
    const std::size_t m = w.space().length();
    const std::size_t dim = w.dimension();
    const auto& basis = w.space().generator().row_vectors();
    if (dim == 0) {
        cert.method = CertificationMethod::exhaustive;
        return cert;
    }
    auto spins_to_whole = [&](const BitVector& v) { return spin_space(w.group(), v).dimension() == dim; };
    if (mode.exhaustive) {
        check_exhaustive_budget(dim);
        cert.method = CertificationMethod::exhaustive;
        cert.verdict = Tristate::yes;
        cert.elements_checked = for_each_nonzero_combination(basis, m, [&](const BitVector& v) {
            if (spins_to_whole(v)) return true;
            cert.verdict = Tristate::no;
            cert.witness = v;
            return false;
        });
        return cert;
    }
    cert.method = CertificationMethod::sampled;
    cert.verdict = Tristate::probably;
    std::mt19937_64 rng(mode.seed);
    for (std::size_t i = 0; i < mode.samples; ++i) {
        const auto v = random_combination(basis, m, rng);
        ++cert.elements_checked;
        if (!spins_to_whole(v)) {
            cert.verdict = Tristate::no;
            cert.witness = v;
            break;
        }
    }
    return cert;
}

Certification certify_preminimal(const Submodule& w, CertifyMode mode) {
    if (!w.contains_all_ones()) throw PreconditionError("preminimality needs a submodule containing the all-ones vector");
    Certification cert;
    cert.seed = mode.seed;
    const std::size_t m = w.space().length();
    const std::size_t dim = w.dimension();
    const auto ones = BitVector::ones(m);
    // Complement of Y inside W: basis rows independent modulo the all-ones vector.
    EchelonBasis over_y(m);
    over_y.insert(ones);
    std::vector<BitVector> complement;
    for (const auto& r : w.space().generator().row_vectors())
        if (over_y.insert(r)) complement.push_back(r);
    if (complement.empty()) {
        // W = Y: the quotient is zero, so it cannot be minimal.
        cert.method = CertificationMethod::exhaustive;
        return cert;
    }
    auto generates_quotient = [&](const BitVector& v) {
        const auto s = spin_space(w.group(), v);
        const std::size_t with_y = s.dimension() + (s.contains(ones) ? 0 : 1);
        return with_y == dim;
    };
    if (mode.exhaustive) {
        check_exhaustive_budget(dim);
        cert.method = CertificationMethod::exhaustive;
        cert.verdict = Tristate::yes;
        cert.elements_checked = for_each_nonzero_combination(complement, m, [&](const BitVector& v) {
            if (generates_quotient(v)) return true;
            cert.verdict = Tristate::no;
            cert.witness = v;
            return false;
        });
        return cert;
    }
    cert.method = CertificationMethod::sampled;
    cert.verdict = Tristate::probably;
    std::mt19937_64 rng(mode.seed);
    for (std::size_t i = 0; i < mode.samples; ++i) {
        const auto v = random_combination(complement, m, rng);
        ++cert.elements_checked;
        if (!generates_quotient(v)) {
            cert.verdict = Tristate::no;
            cert.witness = v;
            break;
        }
    }
    return cert;
}

// ---------------------------------------------------------------------------

std::vector<const Submodule*> SearchResult::minimal() const {
    std::vector<const Submodule*> out;
    for (const auto& s : submodules)
        if (s.minimal && s.minimal->verdict != Tristate::no) out.push_back(&s);
    return out;
}

std::vector<const Submodule*> SearchResult::preminimal() const {
    std::vector<const Submodule*> out;
    for (const auto& s : submodules)
        if (s.preminimal && s.preminimal->verdict != Tristate::no) out.push_back(&s);
    return out;
}

namespace {

using SpaceKey = std::vector<BitVector>;

struct SpaceLess {
    bool operator()(const LinearCode& a, const LinearCode& b) const {
        if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
        return a.generator().row_vectors() < b.generator().row_vectors();
    }
};

using SpaceSet = std::set<LinearCode, SpaceLess>;

bool insert_space(SpaceSet& found, LinearCode c) { return found.insert(std::move(c)).second; }

LinearCode sum_of(const LinearCode& a, const LinearCode& b) {
    return LinearCode(a.length(), subspace_sum(a.generator(), b.generator()));
}

LinearCode intersection_of(const LinearCode& a, const LinearCode& b) {
    if (a.dimension() == 0 || b.dimension() == 0) return LinearCode::zero(a.length());
    auto g = subspace_intersection(a.generator(), b.generator());
    return LinearCode(a.length(), g);
}

bool strictly_inside(const LinearCode& inner, const LinearCode& outer) {
    return inner.dimension() < outer.dimension() && outer.contains(inner);
}

// Close the found set under pairwise sums (and intersections when asked).
void close_lattice(SpaceSet& found, bool intersections, std::size_t limit) {
    bool grew = true;
    while (grew && found.size() <= limit) {
        grew = false;
        const std::vector<LinearCode> snapshot(found.begin(), found.end());
        for (std::size_t i = 0; i < snapshot.size(); ++i)
            for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
                grew |= insert_space(found, sum_of(snapshot[i], snapshot[j]));
                if (intersections) grew |= insert_space(found, intersection_of(snapshot[i], snapshot[j]));
            }
    }
}

void flag_from_lattice(std::vector<Submodule>& mods, CertificationMethod method) {
    const auto m = mods.empty() ? 0 : mods.front().space().length();
    const auto y = LinearCode(m, BitMatrix::from_rows({BitVector::ones(m)}, m));
    for (auto& u : mods) {
        Certification minimal;
        minimal.method = method;
        minimal.elements_checked = mods.size();
        minimal.verdict = Tristate::no;
        if (u.dimension() > 0) {
            const bool has_smaller = std::any_of(mods.begin(), mods.end(), [&](const Submodule& x) {
                return x.dimension() > 0 && strictly_inside(x.space(), u.space());
            });
            minimal.verdict = has_smaller ? Tristate::no : Tristate::yes;
        }
        u.minimal = minimal;
        if (u.contains_all_ones()) {
            Certification pre = minimal;
            pre.verdict = Tristate::no;
            if (u.dimension() > 1) {
                const bool between = std::any_of(mods.begin(), mods.end(), [&](const Submodule& x) {
                    return strictly_inside(y, x.space()) && strictly_inside(x.space(), u.space());
                });
                pre.verdict = between ? Tristate::no : Tristate::yes;
            }
            u.preminimal = pre;
        }
    }
}

std::vector<Submodule> to_submodules(const SpaceSet& found, const std::shared_ptr<const PermGroup>& g) {
    std::vector<Submodule> out;
    for (const auto& c : found) out.emplace_back(c, g);
    return out;
}

SearchResult exhaustive_search(const std::shared_ptr<const PermGroup>& g) {
    const std::size_t m = g->degree();
    if (m > exhaustive_degree_limit)
        throw BudgetError("exhaustive submodule search over 2^" + std::to_string(m) + " vectors exceeds the limit of degree " +
                          std::to_string(exhaustive_degree_limit));
    SpaceSet found;
    found.insert(LinearCode::zero(m));
    for (std::uint64_t x = 1; x < (std::uint64_t{1} << m); ++x) {
        BitVector v(m);
        v.words()[0] = x;
        insert_space(found, spin_space(*g, v));
    }
    // Every submodule is a sum of cyclic ones.
    close_lattice(found, false, std::numeric_limits<std::size_t>::max());
    SearchResult result;
    result.complete = true;
    result.submodules = to_submodules(found, g);
    flag_from_lattice(result.submodules, CertificationMethod::exhaustive);
    return result;
}

std::uint64_t binomial_u64(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    long double r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * static_cast<long double>(n - i) / static_cast<long double>(i + 1);
    return static_cast<std::uint64_t>(r + 0.5L);
}

// One representative support per orbit of w-subsets.
std::vector<std::vector<std::size_t>> subset_orbit_representatives(const PermGroup& g, std::size_t w) {
    std::vector<std::vector<std::size_t>> reps;
    std::set<std::vector<std::size_t>> seen;
    const std::size_t m = g.degree();
    std::vector<std::size_t> idx(w);
    for (std::size_t i = 0; i < w; ++i) idx[i] = i;
    while (true) {
        if (!seen.count(idx)) {
            reps.push_back(idx);
            auto o = subset_orbit(g, idx);
            seen.insert(o.begin(), o.end());
        }
        std::size_t i = w;
        while (i > 0 && idx[i - 1] == m - w + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
    }
    return reps;
}

SearchResult randomized_search(const std::shared_ptr<const PermGroup>& g, const SearchOptions& opt) {
    const std::size_t m = g->degree();
    std::mt19937_64 rng(opt.seed);
    SpaceSet found;
    auto add_spin = [&](const BitVector& v) {
        if (!v.is_zero()) insert_space(found, spin_space(*g, v));
    };

    for (std::size_t w = 1; w <= std::min(opt.max_seed_weight, m); ++w) {
        if (binomial_u64(m, w) <= 200'000) {
            for (const auto& support : subset_orbit_representatives(*g, w)) add_spin(BitVector::from_support(m, support));
        } else {
            std::vector<std::size_t> points(m);
            std::iota(points.begin(), points.end(), std::size_t{0});
            for (std::size_t t = 0; t < opt.trials; ++t) {
                std::shuffle(points.begin(), points.end(), rng);
                add_spin(BitVector::from_support(m, std::span(points).first(w)));
            }
        }
    }
    // Orbits of the stabilizers of point 0 and of points 0, 1.
    {
        std::vector<std::size_t> base(m);
        std::iota(base.begin(), base.end(), std::size_t{0});
        const StabilizerChain chain(m, g->generators(), base);
        for (std::size_t depth = 1; depth <= std::min<std::size_t>(2, m); ++depth) {
            auto gens = chain.stabilizer_generators(depth);
            if (gens.empty()) gens.push_back(Permutation::identity(m));
            for (const auto& o : orbits(PermGroup(m, gens))) add_spin(BitVector::from_support(m, o));
        }
    }
    // Random vectors in Y-perp first, then in V.
    for (std::size_t t = 0; t < opt.trials; ++t) {
        BitVector v(m);
        for (std::size_t i = 0; i < m; ++i)
            if (rng() & 1u) v.set(i);
        if (v.weight() % 2 == 1) v.flip(0);
        add_spin(v);
    }
    for (std::size_t t = 0; t < opt.trials; ++t) {
        BitVector v(m);
        for (std::size_t i = 0; i < m; ++i)
            if (rng() & 1u) v.set(i);
        add_spin(v);
    }

    // Duals of invariant subspaces are invariant; recurse into proper results.
    std::set<std::vector<BitVector>> explored;
    for (int round = 0; round < 4; ++round) {
        const std::vector<LinearCode> snapshot(found.begin(), found.end());
        bool grew = false;
        for (const auto& c : snapshot) grew |= insert_space(found, c.dual());
        for (const auto& c : snapshot) {
            if (c.dimension() <= 1 || c.dimension() == m) continue;
            if (!explored.insert(c.generator().row_vectors()).second) continue;
            for (std::size_t t = 0; t < opt.trials; ++t) {
                const auto v = random_combination(c.generator().row_vectors(), m, rng);
                grew |= insert_space(found, spin_space(*g, v));
            }
        }
        close_lattice(found, true, 64);
        if (!grew) break;
    }
    found.erase(LinearCode::zero(m));

    SearchResult result;
    result.seed = opt.seed;
    result.complete = false;
    // Certify the candidates; refutations contribute the smaller submodule they expose.
    for (int round = 0; round < 8; ++round) {
        auto mods = to_submodules(found, g);
        flag_from_lattice(mods, CertificationMethod::none);
        bool grew = false;
        for (auto& u : mods) {
            const CertifyMode mode = u.dimension() <= exhaustive_dimension_limit ? CertifyMode::exhaustive_mode()
                                                                                 : CertifyMode::sampled(opt.trials, opt.seed);
            if (u.minimal && u.minimal->verdict == Tristate::yes) {
                u.minimal = certify_minimal(u, mode);
                if (u.minimal->witness) grew |= insert_space(found, spin_space(*g, *u.minimal->witness));
            } else if (u.minimal) {
                u.minimal->method = CertificationMethod::none;
            }
            if (u.preminimal && u.preminimal->verdict == Tristate::yes) {
                u.preminimal = certify_preminimal(u, mode);
                if (u.preminimal->witness) grew |= insert_space(found, spin_space(*g, *u.preminimal->witness));
            } else if (u.preminimal) {
                u.preminimal->method = CertificationMethod::none;
            }
        }
        result.submodules = std::move(mods);
        if (!grew) break;
    }
    return result;
}

} // namespace

SearchResult submodule_search(std::shared_ptr<const PermGroup> g, const SearchOptions& options) {
    if (!g) throw PreconditionError("submodule search needs a group");
    if (options.exhaustive) return exhaustive_search(g);
    return randomized_search(g, options);
}

SubmoduleClass classify_submodule(const Submodule& w) {
    const std::size_t m = w.space().length();
    if (m < 5) throw HypothesisError("classification needs m >= 5, got m = " + std::to_string(m));
    if (!transitivity_profile(w.group()).two_homogeneous)
        throw HypothesisError("classification needs a 2-homogeneous group");
    if (w.dimension() == 0) return {SubmoduleCase::trivial_zero, std::nullopt};
    const std::size_t delta = minimum_distance(w.space());
    const std::size_t k = w.dimension();
    SubmoduleCase label;
    if (delta == 1) {
        if (k != m) throw Error("submodule with minimum distance 1 is not the full space");
        label = SubmoduleCase::full_space;
    } else if (delta == m) {
        label = SubmoduleCase::repetition;
    } else if (delta == 2) {
        if (k != m - 1) throw Error("submodule with minimum distance 2 is not the even-weight code");
        label = SubmoduleCase::dual_repetition;
    } else if (delta == 3) {
        // Perfect single-error-correcting: 2^k (1 + m) = 2^m.
        if (m - k >= 63 || (std::uint64_t{1} << (m - k)) != m + 1)
            throw Error("submodule with minimum distance 3 is not perfect");
        label = SubmoduleCase::perfect_distance3;
    } else {
        label = SubmoduleCase::linear_2nt;
    }
    return {label, delta};
}

} // namespace ntlab

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "ntlab/code.hpp"

namespace ntlab {

/// A bijection of {0..m-1}; images[i] is the image of point i.
class Permutation {
public:
    using Point = std::uint16_t;

    Permutation() = default;
    /// Throws MalformedInput if `images` is not a bijection.
    explicit Permutation(std::vector<std::size_t> images);

    static Permutation identity(std::size_t degree);
    /// Cycles are lists of points, e.g. {{0, 1, 2}, {3, 4}}.
    static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles);

    std::size_t degree() const noexcept { return images_.size(); }
    std::size_t operator()(std::size_t point) const { return images_[point]; }
    bool is_identity() const noexcept;

    Permutation inverse() const;
    /// (a * b)(x) = b(a(x)): apply a first.
    friend Permutation operator*(const Permutation& a, const Permutation& b);

    /// Coordinate action: entry i of v moves to entry sigma(i).
    BitVector apply(const BitVector& v) const;

    std::vector<std::size_t> images() const;
    /// Nontrivial cycles, each starting at its least point.
    std::vector<std::vector<std::size_t>> cycles() const;
    std::size_t order() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<Point> images_;
};

/// Base and strong generating set built by deterministic Schreier-Sims.
class StabilizerChain {
public:
    /// `base_order` lists every point once; base points are taken in that order.
    StabilizerChain(std::size_t degree, std::span<const Permutation> generators, std::span<const std::size_t> base_order);
    StabilizerChain(std::size_t degree, std::span<const Permutation> generators);

    std::size_t degree() const noexcept { return degree_; }
    BigInt order() const;
    /// Base points of the nontrivial levels, in order.
    std::vector<std::size_t> base() const;
    /// Lengths of the fundamental orbits of the nontrivial levels.
    std::vector<std::size_t> orbit_lengths() const;
    bool contains(const Permutation& g) const;
    /// Generators of the pointwise stabilizer of the first `depth` base points in `base_order`.
    std::vector<Permutation> stabilizer_generators(std::size_t depth) const;

private:
    struct Level {
        std::vector<Permutation> generators;
        std::vector<std::optional<Permutation>> transversal;  // indexed by relabelled point
    };

    void add(std::size_t k, const Permutation& g);
    void update(std::size_t k, const Permutation& h);
    std::optional<Permutation> strip(std::size_t k, Permutation g) const;
    Level& level(std::size_t k);

    std::size_t degree_;
    std::vector<std::size_t> order_;    // relabelled point -> original point
    std::vector<std::size_t> relabel_;  // original point -> relabelled point
    std::vector<Level> levels_;
};

class PermGroup {
public:
    PermGroup(std::size_t degree, std::vector<Permutation> generators);

    std::size_t degree() const noexcept { return degree_; }
    const std::vector<Permutation>& generators() const noexcept { return generators_; }

    /// Built on first use and cached; copies share the cache.
    const StabilizerChain& chain() const;
    BigInt order() const { return chain().order(); }
    bool contains(const Permutation& g) const { return chain().contains(g); }

private:
    struct Cache;

    std::size_t degree_;
    std::vector<Permutation> generators_;
    std::shared_ptr<Cache> cache_;
};

std::vector<std::size_t> orbit(const PermGroup& g, std::size_t point);
/// Orbit of an ordered tuple of points.
std::set<std::vector<std::size_t>> tuple_orbit(const PermGroup& g, const std::vector<std::size_t>& tuple);
/// Orbit of an unordered set of points; each member is returned sorted.
std::set<std::vector<std::size_t>> subset_orbit(const PermGroup& g, std::vector<std::size_t> subset);
std::set<BitVector> orbit(const PermGroup& g, const BitVector& seed);

/// All orbits of the group on {0..m-1}, each sorted, ordered by least element.
std::vector<std::vector<std::size_t>> orbits(const PermGroup& g);

struct TransitivityProfile {
    bool transitive = false;
    bool two_homogeneous = false;
    bool two_transitive = false;
};

TransitivityProfile transitivity_profile(const PermGroup& g);

struct InvarianceReport {
    bool invariant = true;
    std::optional<std::size_t> generator;  // index of an offending generator
    std::optional<BitVector> word;         // generator row or word it maps outside the code
};

InvarianceReport is_invariant(const LinearCode& c, const PermGroup& g);
InvarianceReport is_invariant(const UnrestrictedCode& c, const PermGroup& g);
InvarianceReport is_invariant(const Code& c, const PermGroup& g);

/// True iff binom(m,2) (q-1)^2 divides |G|; G must be transitive.
bool codeorder_divisibility(const PermGroup& g, std::size_t m, std::size_t q = 2);

} // namespace ntlab

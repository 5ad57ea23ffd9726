#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ntlab/code.hpp"
#include "ntlab/permgroup.hpp"

namespace ntlab {

inline constexpr std::uint64_t default_random_seed = 0x2b7e151628aed2a6ull;
/// Largest submodule dimension certified by spinning every element.
inline constexpr std::size_t exhaustive_dimension_limit = 14;
/// Largest degree for which submodule_search spins every vector of F2^m.
inline constexpr std::size_t exhaustive_degree_limit = 14;

enum class Tristate { no, yes, probably };
enum class CertificationMethod { none, exhaustive, sampled };

std::string to_string(Tristate t);
std::string to_string(CertificationMethod m);

struct Certification {
    Tristate verdict = Tristate::no;
    CertificationMethod method = CertificationMethod::none;
    std::size_t elements_checked = 0;
    std::optional<BitVector> witness;  // an element spinning to something smaller
    std::uint64_t seed = 0;
};

/// An invariant subspace of the permutation module F2^m of a group.
class Submodule {
public:
    /// Throws PreconditionError if `space` is not invariant under `group`.
    Submodule(LinearCode space, std::shared_ptr<const PermGroup> group);

    const LinearCode& space() const noexcept { return space_; }
    const PermGroup& group() const noexcept { return *group_; }
    std::shared_ptr<const PermGroup> group_ptr() const noexcept { return group_; }
    std::size_t dimension() const noexcept { return space_.dimension(); }
    bool contains_all_ones() const;

    std::optional<Certification> minimal;
    std::optional<Certification> preminimal;

private:
    LinearCode space_;
    std::shared_ptr<const PermGroup> group_;
};

/// Smallest invariant subspace containing `seed`.
LinearCode spin_space(const PermGroup& g, const BitVector& seed);
Submodule spin(std::shared_ptr<const PermGroup> g, const BitVector& seed);

struct CertifyMode {
    bool exhaustive = true;
    std::size_t samples = 64;
    std::uint64_t seed = default_random_seed;

    static CertifyMode exhaustive_mode() { return {}; }
    static CertifyMode sampled(std::size_t n, std::uint64_t seed = default_random_seed) { return {false, n, seed}; }
};

/// Minimal iff every nonzero element spins to the whole submodule.
Certification certify_minimal(const Submodule& w, CertifyMode mode = {});
/// Preminimal iff W contains Y, W != Y, and every w outside Y spins (together with Y) to W.
Certification certify_preminimal(const Submodule& w, CertifyMode mode = {});

struct SearchOptions {
    bool exhaustive = true;
    std::size_t trials = 64;
    std::size_t max_seed_weight = 4;
    std::uint64_t seed = default_random_seed;
};

struct SearchResult {
    std::vector<Submodule> submodules;  // ordered by dimension, then RREF
    bool complete = false;
    std::uint64_t seed = 0;

    std::vector<const Submodule*> minimal() const;
    std::vector<const Submodule*> preminimal() const;
};

/// Exhaustive (degree <= 14) lattice of all submodules, or a randomized search
/// for a fragment of it with certified flags.
SearchResult submodule_search(std::shared_ptr<const PermGroup> g, const SearchOptions& options = {});

enum class SubmoduleCase { trivial_zero, full_space, repetition, dual_repetition, perfect_distance3, linear_2nt };

std::string to_string(SubmoduleCase c);

struct SubmoduleClass {
    SubmoduleCase label;
    std::optional<std::size_t> minimum_distance;
};

/// Sorts a submodule of a 2-homogeneous permutation module (m >= 5) into
/// exactly one of six cases by minimum distance.
SubmoduleClass classify_submodule(const Submodule& w);

} // namespace ntlab

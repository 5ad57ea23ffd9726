#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ntlab/code.hpp"

namespace ntlab {

/// Largest redundancy m - k for which every coset is tabulated.
inline constexpr std::size_t syndrome_limit = 28;
/// Largest length for exhaustive vertex enumeration of unrestricted codes.
inline constexpr std::size_t vertex_limit = 24;

/// Minimum coset weight per syndrome. leader_weight[s] = d(v, C) for any v
/// with syndrome s.
class CosetTable {
public:
    explicit CosetTable(const LinearCode& code);

    const LinearCode& code() const noexcept { return code_; }
    const BitMatrix& parity_check() const noexcept { return parity_; }
    const std::vector<std::uint8_t>& leader_weight() const noexcept { return leader_weight_; }
    std::size_t covering_radius() const noexcept { return covering_radius_; }

    std::uint32_t syndrome(const BitVector& v) const;
    std::size_t distance_to_code(const BitVector& v) const { return leader_weight_[syndrome(v)]; }
    /// Number of cosets with each leader weight 0..covering_radius.
    std::vector<std::uint64_t> cosets_by_weight() const;

private:
    LinearCode code_;
    BitMatrix parity_;
    std::vector<std::uint32_t> column_syndrome_;
    std::vector<std::uint8_t> leader_weight_;
    std::size_t covering_radius_ = 0;
};

inline CosetTable coset_table(const LinearCode& c) { return CosetTable(c); }

struct DistancePartition {
    std::vector<BigInt> sizes;  // sizes[i] = |C_i|, i = 0..rho

    std::size_t covering_radius() const { return sizes.size() - 1; }
    BigInt total() const;
};

DistancePartition distance_partition(const LinearCode& c);
DistancePartition distance_partition(const UnrestrictedCode& c);
DistancePartition distance_partition(const Code& c);

/// d(v, C) for all 2^m vertices, indexed by the integer whose bit i is entry i.
std::vector<std::uint8_t> vertex_distances(const UnrestrictedCode& c);

struct RegularityResult {
    bool regular = false;
    std::size_t covering_radius = 0;
    /// Two vertices in the same cell with different distance distributions.
    std::optional<std::pair<BitVector, BitVector>> witness;
};

/// Checks that every vertex at distance i <= s from C sees the same
/// distribution of distances to the codewords as any other vertex at distance i.
RegularityResult s_regular_check(const Code& c, std::size_t s);

} // namespace ntlab

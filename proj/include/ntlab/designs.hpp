#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ntlab/code.hpp"

namespace ntlab {

/// Blocks of a common size on the points 0..v-1, without repeats.
class Design {
public:
    Design(std::size_t points, std::vector<BitVector> blocks);

    std::size_t points() const noexcept { return points_; }
    std::size_t block_size() const noexcept { return block_size_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }
    const std::vector<BitVector>& blocks() const noexcept { return blocks_; }
    /// Blocks through each point.
    std::vector<std::size_t> replication() const;

private:
    std::size_t points_;
    std::size_t block_size_;
    std::vector<BitVector> blocks_;
};

/// The codewords of weight w, as blocks. Throws EmptyLayerError if there are none.
Design extract_layer(const Code& c, std::size_t w);

/// Largest number of (t-subset, block) incidences counted by certify_design.
inline constexpr std::size_t design_incidence_limit = 50'000'000;

struct DesignCertificate {
    bool is_design = false;
    std::size_t t = 0;
    std::optional<std::size_t> lambda;
    /// Two t-subsets lying in different numbers of blocks.
    std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> witness;
    std::optional<std::pair<std::size_t, std::size_t>> witness_counts;
};

/// Counts blocks through every t-subset of points.
DesignCertificate certify_design(const Design& d, std::size_t t);

struct IdentityReport {
    bool holds = false;
    BigInt b, r;
    std::string failed;  // name of the first identity that fails
};

/// vr = bk, r(k-1) = lambda(v-1) and b k(k-1) = v(v-1) lambda, with r taken
/// from the blocks (and required to be constant).
IdentityReport design_identities(const Design& d, std::size_t lambda);

struct DistanceBoundReport {
    std::size_t delta = 0;
    std::size_t dual_delta = 0;
    std::size_t design_lambda = 0;
    bool product_bound = false;  // m - 1 <= (delta - 1)(dual delta - 1)
    std::optional<bool> self_orthogonal_bound;  // (delta - 1)^2 >= m - 1, when C is self-orthogonal
};

/// Throws HypothesisError unless 3 <= delta < m and the weight-delta words form a 2-design.
DistanceBoundReport distance_bound_check(const LinearCode& c);

} // namespace ntlab

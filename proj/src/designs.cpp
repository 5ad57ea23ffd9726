#include "ntlab/designs.hpp"

#include <algorithm>

#include "ntlab/error.hpp"

namespace ntlab {

namespace {

std::uint64_t choose(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > (std::uint64_t{1} << 62)) return r;  // saturate; callers only compare against budgets
    }
    return r;
}

// Combinatorial number system rank of a sorted subset.
std::uint64_t subset_rank(const std::vector<std::size_t>& s, const std::vector<std::vector<std::uint64_t>>& binom) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < s.size(); ++i) r += binom[s[i]][i + 1];
    return r;
}

std::vector<std::size_t> subset_unrank(std::uint64_t rank, std::size_t v, std::size_t t,
                                       const std::vector<std::vector<std::uint64_t>>& binom) {
    std::vector<std::size_t> s(t);
    std::size_t hi = v;
    for (std::size_t i = t; i-- > 0;) {
        std::size_t x = i;
        while (x + 1 < hi && binom[x + 1][i + 1] <= rank) ++x;
        s[i] = x;
        rank -= binom[x][i + 1];
        hi = x;
    }
    return s;
}

} // namespace

Design::Design(std::size_t points, std::vector<BitVector> blocks) : points_(points), blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw EmptyLayerError("a design needs at least one block");
    block_size_ = blocks_.front().weight();
    for (const auto& b : blocks_) {
        if (b.size() != points_) throw MalformedInput("block length differs from the number of points");
        if (b.weight() != block_size_) throw MalformedInput("blocks of different sizes");
    }
    std::sort(blocks_.begin(), blocks_.end());
    if (std::adjacent_find(blocks_.begin(), blocks_.end()) != blocks_.end())
        throw MalformedInput("repeated block");
}

std::vector<std::size_t> Design::replication() const {
    std::vector<std::size_t> r(points_, 0);
    for (const auto& b : blocks_)
        for (auto p : b.support()) ++r[p];
    return r;
}

Design extract_layer(const Code& c, std::size_t w) {
    std::vector<BitVector> blocks;
    if (const auto* lin = std::get_if<LinearCode>(&c)) {
        for_each_codeword(*lin, [&](const BitVector& word) {
            if (word.weight() == w) blocks.push_back(word);
        });
    } else {
        for (const auto& word : std::get<UnrestrictedCode>(c).words())
            if (word.weight() == w) blocks.push_back(word);
    }
    if (blocks.empty()) throw EmptyLayerError("the code has no words of weight " + std::to_string(w));
    return Design(code_length(c), std::move(blocks));
}

DesignCertificate certify_design(const Design& d, std::size_t t) {
    const std::size_t v = d.points(), k = d.block_size();
    if (t == 0 || t > k) throw PreconditionError("design strength must satisfy 1 <= t <= block size");
    const std::uint64_t subsets = choose(v, t);
    const std::uint64_t incidences = choose(k, t) * d.block_count();
    if (subsets > design_incidence_limit || incidences > design_incidence_limit)
        throw BudgetError("counting " + std::to_string(t) + "-subsets exceeds the budget of " +
                          std::to_string(design_incidence_limit) + " incidences");

    std::vector<std::vector<std::uint64_t>> binom(v + 1, std::vector<std::uint64_t>(t + 1, 0));
    for (std::size_t n = 0; n <= v; ++n) {
        binom[n][0] = 1;
        for (std::size_t j = 1; j <= t && j <= n; ++j) binom[n][j] = binom[n - 1][j - 1] + (j < n ? binom[n - 1][j] : 0);
    }

    std::vector<std::uint32_t> counts(subsets, 0);
    std::vector<std::size_t> idx(t), sub(t);
    for (const auto& block : d.blocks()) {
        const auto pts = block.support();
        for (std::size_t i = 0; i < t; ++i) idx[i] = i;
        while (true) {
            for (std::size_t i = 0; i < t; ++i) sub[i] = pts[idx[i]];
            ++counts[subset_rank(sub, binom)];
            std::size_t i = t;
            while (i > 0 && idx[i - 1] == k - t + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
        }
    }

    DesignCertificate cert;
    cert.t = t;
    for (std::uint64_t i = 1; i < subsets; ++i)
        if (counts[i] != counts[0]) {
            cert.witness = std::make_pair(subset_unrank(0, v, t, binom), subset_unrank(i, v, t, binom));
            cert.witness_counts = std::make_pair(std::size_t{counts[0]}, std::size_t{counts[i]});
            return cert;
        }
    cert.is_design = true;
    cert.lambda = counts[0];
    return cert;
}

IdentityReport design_identities(const Design& d, std::size_t lambda) {
    IdentityReport rep;
    const BigInt v = d.points(), k = d.block_size(), l = lambda;
    rep.b = d.block_count();
    const auto r = d.replication();
    rep.r = r.front();
    if (std::any_of(r.begin(), r.end(), [&](std::size_t x) { return x != r.front(); })) {
        rep.failed = "constant replication number";
        return rep;
    }
    if (v * rep.r != rep.b * k) {
        rep.failed = "vr = bk";
        return rep;
    }
    if (rep.r * (k - 1) != l * (v - 1)) {
        rep.failed = "r(k-1) = lambda(v-1)";
        return rep;
    }
    if (rep.b * k * (k - 1) != v * (v - 1) * l) {
        rep.failed = "b k(k-1) = v(v-1) lambda";
        return rep;
    }
    rep.holds = true;
    return rep;
}

DistanceBoundReport distance_bound_check(const LinearCode& c) {
    const std::size_t m = c.length();
    if (c.dimension() == 0) throw HypothesisError("the zero code has no minimum distance");
    DistanceBoundReport rep;
    rep.delta = minimum_distance(c);
    if (rep.delta < 3 || rep.delta >= m)
        throw HypothesisError("distance bound needs 3 <= delta < m; delta = " + std::to_string(rep.delta) +
                              ", m = " + std::to_string(m));
    const auto layer = extract_layer(Code{c}, rep.delta);
    const auto cert = certify_design(layer, 2);
    if (!cert.is_design)
        throw HypothesisError("the weight-" + std::to_string(rep.delta) + " codewords do not form a 2-design");
    rep.design_lambda = *cert.lambda;
    rep.dual_delta = minimum_distance(c.dual());
    rep.product_bound = m - 1 <= (rep.delta - 1) * (rep.dual_delta - 1);
    if (is_self_orthogonal(c)) rep.self_orthogonal_bound = (rep.delta - 1) * (rep.delta - 1) >= m - 1;
    return rep;
}

} // namespace ntlab

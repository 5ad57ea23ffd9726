#include "ntlab/cosets.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <unordered_map>

#include "ntlab/error.hpp"

namespace ntlab {

namespace {

constexpr std::uint8_t unreached = 0xFF;

BitVector vertex_from_index(std::size_t m, std::uint64_t index) {
    BitVector v(m);
    while (index != 0) {
        v.set(static_cast<std::size_t>(std::countr_zero(index)));
        index &= index - 1;
    }
    return v;
}

std::uint64_t index_from_vertex(const BitVector& v) { return v.words().empty() ? 0 : v.words()[0]; }

// Calls visit(support) for every subset of {0..m-1} of size `w`, in lexicographic order.
template <class Visitor>
void for_each_subset(std::size_t m, std::size_t w, Visitor&& visit) {
    if (w > m) return;
    std::vector<std::size_t> idx(w);
    for (std::size_t i = 0; i < w; ++i) idx[i] = i;
    while (true) {
        visit(static_cast<const std::vector<std::size_t>&>(idx));
        std::size_t i = w;
        while (i > 0 && idx[i - 1] == m - w + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
    }
}

BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

} // namespace

CosetTable::CosetTable(const LinearCode& code) : code_(code) {
    const std::size_t m = code.length();
    const std::size_t r = m - code.dimension();
    if (r > syndrome_limit)
        throw BudgetError("coset table needs 2^" + std::to_string(r) + " syndromes; the budget is 2^" +
                          std::to_string(syndrome_limit) + " (m - k <= " + std::to_string(syndrome_limit) + ")");
    parity_ = code.dual().generator();
    column_syndrome_.assign(m, 0);
    for (std::size_t row = 0; row < r; ++row)
        for (auto c : parity_.row(row).support()) column_syndrome_[c] |= std::uint32_t{1} << row;

    std::vector<std::uint32_t> steps(column_syndrome_);
    std::sort(steps.begin(), steps.end());
    steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
    steps.erase(std::remove(steps.begin(), steps.end(), 0u), steps.end());

    const std::uint64_t n = std::uint64_t{1} << r;
    leader_weight_.assign(n, unreached);
    leader_weight_[0] = 0;
    std::uint64_t reached = 1;
    // Layered breadth-first expansion; each layer is the set of syndromes at the previous weight.
    for (std::uint8_t w = 1; reached < n; ++w) {
        std::uint64_t added = 0;
        for (std::uint64_t s = 0; s < n; ++s) {
            if (leader_weight_[s] != w - 1) continue;
            for (auto step : steps) {
                const auto t = static_cast<std::uint32_t>(s) ^ step;
                if (leader_weight_[t] == unreached) {
                    leader_weight_[t] = w;
                    ++added;
                }
            }
        }
        if (added == 0) throw Error("coset expansion stalled; parity-check matrix is rank deficient");
        reached += added;
        covering_radius_ = w;
    }
}

std::uint32_t CosetTable::syndrome(const BitVector& v) const {
    if (v.size() != code_.length()) throw DimensionError("vector length does not match the code length");
    std::uint32_t s = 0;
    for (auto i : v.support()) s ^= column_syndrome_[i];
    return s;
}

std::vector<std::uint64_t> CosetTable::cosets_by_weight() const {
    std::vector<std::uint64_t> counts(covering_radius_ + 1, 0);
    for (auto w : leader_weight_) ++counts[w];
    return counts;
}

BigInt DistancePartition::total() const {
    BigInt t = 0;
    for (const auto& s : sizes) t += s;
    return t;
}

DistancePartition distance_partition(const LinearCode& c) {
    const CosetTable table(c);
    const BigInt code_size = BigInt(1) << c.dimension();
    DistancePartition out;
    for (auto n : table.cosets_by_weight()) out.sizes.push_back(code_size * n);
    return out;
}

std::vector<std::uint8_t> vertex_distances(const UnrestrictedCode& c) {
    const std::size_t m = c.length();
    if (m > vertex_limit)
        throw BudgetError("vertex enumeration over 2^" + std::to_string(m) + " vertices exceeds the budget (m <= " +
                          std::to_string(vertex_limit) + ")");
    const std::uint64_t n = std::uint64_t{1} << m;
    std::vector<std::uint8_t> dist(n, unreached);
    std::vector<std::uint32_t> frontier;
    for (const auto& w : c.words()) {
        const auto i = static_cast<std::uint32_t>(index_from_vertex(w));
        dist[i] = 0;
        frontier.push_back(i);
    }
    std::vector<std::uint32_t> next;
    for (std::uint8_t d = 1; !frontier.empty(); ++d) {
        next.clear();
        for (auto v : frontier)
            for (std::size_t b = 0; b < m; ++b) {
                const auto u = v ^ (std::uint32_t{1} << b);
                if (dist[u] == unreached) {
                    dist[u] = d;
                    next.push_back(u);
                }
            }
        frontier.swap(next);
    }
    return dist;
}

DistancePartition distance_partition(const UnrestrictedCode& c) {
    const auto dist = vertex_distances(c);
    std::vector<std::uint64_t> counts;
    for (auto d : dist) {
        if (d >= counts.size()) counts.resize(d + 1, 0);
        ++counts[d];
    }
    DistancePartition out;
    for (auto n : counts) out.sizes.push_back(BigInt(n));
    return out;
}

DistancePartition distance_partition(const Code& c) {
    return std::visit([](const auto& x) { return distance_partition(x); }, c);
}

namespace {

constexpr double regularity_budget = 4294967296.0;  // 2^32 distance evaluations

RegularityResult regularity_linear(const LinearCode& c, std::size_t s) {
    const CosetTable table(c);
    RegularityResult out;
    out.covering_radius = table.covering_radius();
    if (s > out.covering_radius)
        throw RangeError("s = " + std::to_string(s) + " exceeds the covering radius " +
                         std::to_string(out.covering_radius));
    const auto by_weight = table.cosets_by_weight();
    std::uint64_t cosets = 0;
    for (std::size_t i = 0; i <= s; ++i) cosets += by_weight[i];
    const BigInt candidates = [&] {
        BigInt t = 0;
        for (std::size_t w = 0; w <= s; ++w) t += binomial(c.length(), w);
        return t;
    }();
    if (static_cast<double>(cosets) * std::ldexp(1.0, static_cast<int>(c.dimension())) > regularity_budget ||
        candidates > BigInt(50'000'000))
        throw BudgetError("regularity check exceeds the budget of 2^32 coset-word evaluations");

    // Every coset with leader weight w <= s has a leader among the weight-w vectors.
    std::map<std::size_t, std::pair<BitVector, std::vector<std::uint64_t>>> reference;
    std::vector<bool> seen(std::size_t{1} << (c.length() - c.dimension()), false);
    for (std::size_t w = 0; w <= s && out.witness == std::nullopt; ++w) {
        for_each_subset(c.length(), w, [&](const std::vector<std::size_t>& support) {
            if (out.witness) return;
            const auto leader = BitVector::from_support(c.length(), support);
            const auto syn = table.syndrome(leader);
            if (seen[syn] || table.leader_weight()[syn] != w) return;
            seen[syn] = true;
            std::vector<std::uint64_t> profile(c.length() + 1, 0);
            for_each_codeword(c, [&](const BitVector& word) { ++profile[distance(word, leader)]; });
            auto it = reference.find(w);
            if (it == reference.end())
                reference.emplace(w, std::make_pair(leader, std::move(profile)));
            else if (it->second.second != profile)
                out.witness = std::make_pair(it->second.first, leader);
        });
    }
    out.regular = !out.witness.has_value();
    return out;
}

RegularityResult regularity_unrestricted(const UnrestrictedCode& c, std::size_t s) {
    const auto dist = vertex_distances(c);
    RegularityResult out;
    out.covering_radius = *std::max_element(dist.begin(), dist.end());
    if (s > out.covering_radius)
        throw RangeError("s = " + std::to_string(s) + " exceeds the covering radius " +
                         std::to_string(out.covering_radius));
    std::uint64_t cell_vertices = 0;
    for (auto d : dist)
        if (d <= s) ++cell_vertices;
    if (static_cast<double>(cell_vertices) * static_cast<double>(c.size()) > regularity_budget)
        throw BudgetError("regularity check exceeds the budget of 2^32 distance evaluations");

    const std::size_t m = c.length();
    std::vector<std::uint64_t> words;
    for (const auto& w : c.words()) words.push_back(index_from_vertex(w));
    std::vector<std::optional<std::pair<std::uint64_t, std::vector<std::uint32_t>>>> reference(s + 1);
    std::vector<std::uint32_t> profile(m + 1);
    for (std::uint64_t v = 0; v < dist.size(); ++v) {
        const auto d = dist[v];
        if (d > s) continue;
        std::fill(profile.begin(), profile.end(), 0);
        for (auto w : words) ++profile[static_cast<std::size_t>(std::popcount(v ^ w))];
        auto& ref = reference[d];
        if (!ref) {
            ref.emplace(v, profile);
        } else if (ref->second != profile) {
            out.witness = std::make_pair(vertex_from_index(m, ref->first), vertex_from_index(m, v));
            break;
        }
    }
    out.regular = !out.witness.has_value();
    return out;
}

} // namespace

RegularityResult s_regular_check(const Code& c, std::size_t s) {
    if (const auto* lin = std::get_if<LinearCode>(&c)) return regularity_linear(*lin, s);
    return regularity_unrestricted(std::get<UnrestrictedCode>(c), s);
}

} // namespace ntlab

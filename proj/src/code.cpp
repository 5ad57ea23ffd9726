#include "ntlab/code.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <thread>

#include "ntlab/error.hpp"

namespace ntlab {

LinearCode::LinearCode(std::size_t length, const BitMatrix& generators) : length_(length) {
    if (generators.cols() != length)
        throw DimensionError("generator matrix has " + std::to_string(generators.cols()) + " columns, code length is " +
                             std::to_string(length));
    if (length == 0) throw MalformedInput("code length must be positive");
    if (generators.rows() == 0) {
        gen_ = BitMatrix(0, length);
        return;
    }
    auto e = rref(generators);
    gen_ = std::move(e.reduced);
    pivots_ = std::move(e.pivots);
}

LinearCode LinearCode::zero(std::size_t length) { return LinearCode(length, BitMatrix(0, length)); }

LinearCode LinearCode::full(std::size_t length) { return LinearCode(length, BitMatrix::identity(length)); }

bool LinearCode::contains(const BitVector& v) const {
    if (v.size() != length_) throw DimensionError("vector length does not match the code length");
    BitVector r = v;
    for (std::size_t i = 0; i < gen_.rows(); ++i)
        if (r.test(pivots_[i])) r ^= gen_.row(i);
    return r.is_zero();
}

bool LinearCode::contains(const LinearCode& sub) const {
    if (sub.length_ != length_) throw DimensionError("codes have different lengths");
    return std::all_of(sub.gen_.row_vectors().begin(), sub.gen_.row_vectors().end(),
                       [&](const BitVector& r) { return contains(r); });
}

LinearCode LinearCode::dual() const {
    if (gen_.rows() == 0) return full(length_);
    return LinearCode(length_, ntlab::dual(gen_));
}

UnrestrictedCode::UnrestrictedCode(std::size_t length, std::vector<BitVector> words)
    : length_(length), words_(std::move(words)) {
    if (words_.empty()) throw MalformedInput("an unrestricted code needs at least one word");
    for (const auto& w : words_)
        if (w.size() != length_) throw MalformedInput("word length differs from the code length");
    std::sort(words_.begin(), words_.end());
    if (std::adjacent_find(words_.begin(), words_.end()) != words_.end())
        throw MalformedInput("duplicate word in unrestricted code");
}

bool UnrestrictedCode::contains(const BitVector& v) const { return std::binary_search(words_.begin(), words_.end(), v); }

std::size_t code_length(const Code& c) {
    return std::visit([](const auto& x) { return x.length(); }, c);
}

BigInt code_size(const Code& c) {
    if (const auto* lin = std::get_if<LinearCode>(&c)) return BigInt(1) << lin->dimension();
    return BigInt(std::get<UnrestrictedCode>(c).size());
}

UnrestrictedCode as_unrestricted(const LinearCode& c) {
    std::vector<BitVector> words;
    words.reserve(std::size_t{1} << std::min<std::size_t>(c.dimension(), enumeration_limit));
    for_each_codeword(c, [&](const BitVector& w) { words.push_back(w); });
    return UnrestrictedCode(c.length(), std::move(words));
}

// ---------------------------------------------------------------------------

std::uint64_t WeightDistribution::total() const {
    std::uint64_t s = 0;
    for (auto x : counts) s += x;
    return s;
}

std::optional<std::size_t> WeightDistribution::min_positive_weight() const {
    for (std::size_t i = 1; i < counts.size(); ++i)
        if (counts[i] != 0) return i;
    return std::nullopt;
}

namespace {

// Gray-code walk over codeword indices [begin, end); rows packed with stride NW.
template <std::size_t NW>
void weight_kernel(const std::vector<std::uint64_t>& rows, std::size_t k, std::uint64_t begin, std::uint64_t end,
                   std::vector<std::uint64_t>& counts) {
    std::array<std::uint64_t, NW> acc{};
    const std::uint64_t g = begin ^ (begin >> 1);
    for (std::size_t b = 0; b < k; ++b)
        if ((g >> b) & 1u)
            for (std::size_t w = 0; w < NW; ++w) acc[w] ^= rows[b * NW + w];
    auto weigh = [&] {
        unsigned s = 0;
        for (std::size_t w = 0; w < NW; ++w) s += static_cast<unsigned>(std::popcount(acc[w]));
        ++counts[s];
    };
    weigh();
    for (std::uint64_t i = begin + 1; i < end; ++i) {
        const std::uint64_t* row = rows.data() + static_cast<std::size_t>(std::countr_zero(i)) * NW;
        for (std::size_t w = 0; w < NW; ++w) acc[w] ^= row[w];
        weigh();
    }
}

using KernelFn = void (*)(const std::vector<std::uint64_t>&, std::size_t, std::uint64_t, std::uint64_t,
                          std::vector<std::uint64_t>&);

template <std::size_t... I>
constexpr std::array<KernelFn, sizeof...(I)> make_kernels(std::index_sequence<I...>) {
    return {&weight_kernel<I + 1>...};
}

constexpr auto kernels = make_kernels(std::make_index_sequence<BitVector::max_length / BitVector::word_bits>{});

} // namespace

WeightDistribution weight_distribution(const LinearCode& c, unsigned workers) {
    const std::size_t k = c.dimension();
    detail::check_enumeration_budget(k);
    const std::size_t m = c.length();
    const std::size_t nw = (m + 63) / 64;
    std::vector<std::uint64_t> rows(k * nw);
    for (std::size_t r = 0; r < k; ++r) {
        auto ws = c.generator().row(r).words();
        std::copy(ws.begin(), ws.end(), rows.begin() + static_cast<std::ptrdiff_t>(r * nw));
    }
    const std::uint64_t total = std::uint64_t{1} << k;
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    // Small codes are not worth a thread.
    if (k < 16) workers = 1;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));

    std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(m + 1, 0));
    const KernelFn kernel = kernels[nw - 1];
    auto run = [&](unsigned w) {
        const std::uint64_t begin = total / workers * w;
        const std::uint64_t end = (w + 1 == workers) ? total : total / workers * (w + 1);
        kernel(rows, k, begin, end, partial[w]);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> threads;
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    }
    WeightDistribution out{std::vector<std::uint64_t>(m + 1, 0)};
    for (const auto& p : partial)
        for (std::size_t i = 0; i <= m; ++i) out.counts[i] += p[i];
    return out;
}

WeightDistribution weight_distribution(const UnrestrictedCode& c) {
    WeightDistribution out{std::vector<std::uint64_t>(c.length() + 1, 0)};
    for (const auto& w : c.words()) ++out.counts[w.weight()];
    return out;
}

WeightDistribution weight_distribution(const Code& c) {
    return std::visit([](const auto& x) { return weight_distribution(x); }, c);
}

namespace {

std::vector<std::vector<BigInt>> binomial_table(std::size_t n) {
    std::vector<std::vector<BigInt>> b(n + 1, std::vector<BigInt>(n + 1, 0));
    for (std::size_t i = 0; i <= n; ++i) {
        b[i][0] = 1;
        for (std::size_t j = 1; j <= i; ++j) b[i][j] = b[i - 1][j - 1] + (j <= i - 1 ? b[i - 1][j] : BigInt(0));
    }
    return b;
}

} // namespace

std::vector<BigInt> weight_distribution_via_dual(const LinearCode& c) {
    const auto d = c.dual();
    const auto dual_counts = weight_distribution(d).counts;
    const std::size_t m = c.length();
    const auto binom = binomial_table(m);
    // A_j = |C^perp|^{-1} * sum_i B_i K_j(i),  K_j(i) = sum_s (-1)^s C(i,s) C(m-i, j-s).
    std::vector<BigInt> out(m + 1, 0);
    const BigInt dual_size = BigInt(1) << d.dimension();
    for (std::size_t j = 0; j <= m; ++j) {
        BigInt acc = 0;
        for (std::size_t i = 0; i <= m; ++i) {
            if (dual_counts[i] == 0) continue;
            BigInt kraw = 0;
            for (std::size_t s = 0; s <= std::min(i, j); ++s) {
                if (j - s > m - i) continue;
                BigInt term = binom[i][s] * binom[m - i][j - s];
                if (s % 2 == 0)
                    kraw += term;
                else
                    kraw -= term;
            }
            acc += BigInt(dual_counts[i]) * kraw;
        }
        if (acc % dual_size != 0) throw Error("MacWilliams transform produced a non-integral count");
        out[j] = acc / dual_size;
    }
    return out;
}

std::size_t minimum_distance(const LinearCode& c) {
    if (c.dimension() == 0) throw UndefinedDistanceError("the zero code has a single word; minimum distance is undefined");
    const std::size_t k = c.dimension();
    const std::size_t r = c.length() - k;
    if (k <= r || r > enumeration_limit) return *weight_distribution(c).min_positive_weight();
    const auto counts = weight_distribution_via_dual(c);
    for (std::size_t i = 1; i < counts.size(); ++i)
        if (counts[i] != 0) return i;
    throw Error("nonzero code without nonzero words");
}

std::size_t minimum_distance(const UnrestrictedCode& c) {
    if (c.size() < 2) throw UndefinedDistanceError("a code with a single word has no minimum distance");
    std::size_t best = c.length() + 1;
    const auto& w = c.words();
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) best = std::min(best, distance(w[i], w[j]));
    return best;
}

std::size_t minimum_distance(const Code& c) {
    return std::visit([](const auto& x) { return minimum_distance(x); }, c);
}

bool is_self_orthogonal(const LinearCode& c) {
    const auto& g = c.generator();
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = i; j < g.rows(); ++j)
            if (g.row(i).dot(g.row(j))) return false;
    return true;
}

// ---------------------------------------------------------------------------

namespace {

BitVector delete_coordinate(const BitVector& v, std::size_t index) {
    BitVector out(v.size() - 1);
    for (auto i : v.support())
        if (i != index) out.set(i < index ? i : i - 1);
    return out;
}

BitVector append_parity(const BitVector& v) {
    BitVector out(v.size() + 1);
    for (auto i : v.support()) out.set(i);
    if (v.weight() % 2 == 1) out.set(v.size());
    return out;
}

void check_puncture(std::size_t length, std::size_t index) {
    if (length < 2) throw RangeError("puncturing needs length at least 2");
    if (index >= length)
        throw RangeError("entry index " + std::to_string(index) + " out of range for length " + std::to_string(length));
}

} // namespace

LinearCode puncture(const LinearCode& c, std::size_t index) {
    check_puncture(c.length(), index);
    std::vector<BitVector> rows;
    for (const auto& r : c.generator().row_vectors()) rows.push_back(delete_coordinate(r, index));
    return LinearCode(c.length() - 1, BitMatrix::from_rows(std::move(rows), c.length() - 1));
}

UnrestrictedCode puncture(const UnrestrictedCode& c, std::size_t index) {
    check_puncture(c.length(), index);
    std::vector<BitVector> words;
    for (const auto& w : c.words()) words.push_back(delete_coordinate(w, index));
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return UnrestrictedCode(c.length() - 1, std::move(words));
}

LinearCode extend_parity(const LinearCode& c) {
    std::vector<BitVector> rows;
    for (const auto& r : c.generator().row_vectors()) rows.push_back(append_parity(r));
    return LinearCode(c.length() + 1, BitMatrix::from_rows(std::move(rows), c.length() + 1));
}

UnrestrictedCode extend_parity(const UnrestrictedCode& c) {
    std::vector<BitVector> words;
    for (const auto& w : c.words()) words.push_back(append_parity(w));
    return UnrestrictedCode(c.length() + 1, std::move(words));
}

LinearCode even_subcode(const LinearCode& c) {
    std::vector<BitVector> rows = c.generator().row_vectors();
    auto odd = std::find_if(rows.begin(), rows.end(), [](const BitVector& r) { return r.weight() % 2 == 1; });
    if (odd == rows.end()) return c;
    const BitVector pivot_row = *odd;
    rows.erase(odd);
    for (auto& r : rows)
        if (r.weight() % 2 == 1) r ^= pivot_row;
    return LinearCode(c.length(), BitMatrix::from_rows(std::move(rows), c.length()));
}

UnrestrictedCode even_subcode(const UnrestrictedCode& c) {
    std::vector<BitVector> words;
    for (const auto& w : c.words())
        if (w.weight() % 2 == 0) words.push_back(w);
    return UnrestrictedCode(c.length(), std::move(words));
}

Code puncture(const Code& c, std::size_t index) {
    return std::visit([&](const auto& x) -> Code { return puncture(x, index); }, c);
}

Code extend_parity(const Code& c) {
    return std::visit([](const auto& x) -> Code { return extend_parity(x); }, c);
}

Code even_subcode(const Code& c) {
    return std::visit([](const auto& x) -> Code { return even_subcode(x); }, c);
}

bool pair_balance(const LinearCode& c, std::size_t i, std::size_t j) {
    if (i >= c.length() || j >= c.length()) throw RangeError("entry index out of range");
    if (i == j) throw PreconditionError("pair balance needs two distinct entries");
    bool col_i = false, col_j = false, differ = false;
    for (const auto& r : c.generator().row_vectors()) {
        const bool a = r.test(i);
        const bool b = r.test(j);
        col_i |= a;
        col_j |= b;
        differ |= (a != b);
    }
    return col_i && col_j && differ;
}

} // namespace ntlab

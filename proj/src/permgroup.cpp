#include "ntlab/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>

#include "ntlab/error.hpp"

namespace ntlab {

Permutation::Permutation(std::vector<std::size_t> images) {
    const std::size_t n = images.size();
    if (n > BitVector::max_length) throw RangeError("permutation degree exceeds " + std::to_string(BitVector::max_length));
    std::vector<bool> hit(n, false);
    images_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (images[i] >= n)
            throw MalformedInput("image " + std::to_string(images[i]) + " of point " + std::to_string(i) +
                                 " is out of range for degree " + std::to_string(n));
        if (hit[images[i]]) throw MalformedInput("point " + std::to_string(images[i]) + " is hit twice; not a bijection");
        hit[images[i]] = true;
        images_[i] = static_cast<Point>(images[i]);
    }
}

Permutation Permutation::identity(std::size_t degree) {
    std::vector<std::size_t> im(degree);
    std::iota(im.begin(), im.end(), std::size_t{0});
    return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles) {
    std::vector<std::size_t> im(degree);
    std::iota(im.begin(), im.end(), std::size_t{0});
    for (const auto& c : cycles)
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] >= degree) throw MalformedInput("cycle point out of range");
            im[c[i]] = c[(i + 1) % c.size()];
        }
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
    return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw DimensionError("composing permutations of different degrees");
    Permutation out;
    out.images_.resize(a.images_.size());
    for (std::size_t i = 0; i < a.images_.size(); ++i) out.images_[i] = b.images_[a.images_[i]];
    return out;
}

BitVector Permutation::apply(const BitVector& v) const {
    if (v.size() != images_.size()) throw DimensionError("vector length does not match the permutation degree");
    BitVector out(v.size());
    for (auto i : v.support()) out.set(images_[i]);
    return out;
}

std::vector<std::size_t> Permutation::images() const { return {images_.begin(), images_.end()}; }

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> c;
        for (std::size_t j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            c.push_back(j);
        }
        if (c.size() > 1) out.push_back(std::move(c));
    }
    return out;
}

std::size_t Permutation::order() const {
    std::size_t o = 1;
    for (const auto& c : cycles()) o = std::lcm(o, c.size());
    return o;
}

// ---------------------------------------------------------------------------

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Permutation> generators)
    : StabilizerChain(degree, generators, [&] {
          std::vector<std::size_t> b(degree);
          std::iota(b.begin(), b.end(), std::size_t{0});
          return b;
      }()) {}

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Permutation> generators,
                                 std::span<const std::size_t> base_order)
    : degree_(degree), order_(base_order.begin(), base_order.end()), relabel_(degree) {
    if (order_.size() != degree) throw MalformedInput("base order must list every point exactly once");
    std::vector<bool> hit(degree, false);
    for (std::size_t i = 0; i < degree; ++i) {
        if (order_[i] >= degree || hit[order_[i]]) throw MalformedInput("base order is not a permutation of the points");
        hit[order_[i]] = true;
        relabel_[order_[i]] = i;
    }
    levels_.resize(degree);
    for (const auto& g : generators) {
        if (g.degree() != degree) throw DimensionError("generator degree does not match the group degree");
        std::vector<std::size_t> im(degree);
        for (std::size_t x = 0; x < degree; ++x) im[x] = relabel_[g(order_[x])];
        Permutation h(std::move(im));
        if (h.is_identity()) continue;
        if (auto residue = strip(0, h)) add(0, *residue);
    }
}

StabilizerChain::Level& StabilizerChain::level(std::size_t k) {
    auto& lv = levels_[k];
    if (lv.transversal.empty()) {
        lv.transversal.resize(degree_);
        lv.transversal[k] = Permutation::identity(degree_);
    }
    return lv;
}

void StabilizerChain::add(std::size_t k, const Permutation& g) {
    level(k).generators.push_back(g);
    for (std::size_t p = 0; p < degree_; ++p) {
        if (!levels_[k].transversal[p]) continue;
        const Permutation t = *levels_[k].transversal[p];
        update(k, t * g);
    }
}

void StabilizerChain::update(std::size_t k, const Permutation& h) {
    const std::size_t p = h(k);
    auto& lv = level(k);
    if (lv.transversal[p]) {
        const Permutation schreier = h * lv.transversal[p]->inverse();
        if (schreier.is_identity()) return;
        if (auto residue = strip(k + 1, schreier)) add(k + 1, *residue);
        return;
    }
    lv.transversal[p] = h;
    for (std::size_t i = 0; i < levels_[k].generators.size(); ++i) {
        const Permutation g = levels_[k].generators[i];
        update(k, h * g);
    }
}

std::optional<Permutation> StabilizerChain::strip(std::size_t k, Permutation g) const {
    for (std::size_t j = k; j < degree_; ++j) {
        const std::size_t p = g(j);
        if (p == j) continue;
        const auto& lv = levels_[j];
        if (lv.transversal.empty() || !lv.transversal[p]) return g;
        g = g * lv.transversal[p]->inverse();
    }
    return std::nullopt;
}

BigInt StabilizerChain::order() const {
    BigInt o = 1;
    for (auto len : orbit_lengths()) o *= len;
    return o;
}

std::vector<std::size_t> StabilizerChain::base() const {
    std::vector<std::size_t> b;
    for (std::size_t k = 0; k < degree_; ++k)
        if (!levels_[k].generators.empty()) {
            const auto& t = levels_[k].transversal;
            if (std::count_if(t.begin(), t.end(), [](const auto& x) { return x.has_value(); }) > 1) b.push_back(order_[k]);
        }
    return b;
}

std::vector<std::size_t> StabilizerChain::orbit_lengths() const {
    std::vector<std::size_t> out;
    for (const auto& lv : levels_) {
        const auto len = static_cast<std::size_t>(
            std::count_if(lv.transversal.begin(), lv.transversal.end(), [](const auto& x) { return x.has_value(); }));
        if (len > 1) out.push_back(len);
    }
    return out;
}

bool StabilizerChain::contains(const Permutation& g) const {
    if (g.degree() != degree_) return false;
    std::vector<std::size_t> im(degree_);
    for (std::size_t x = 0; x < degree_; ++x) im[x] = relabel_[g(order_[x])];
    return !strip(0, Permutation(std::move(im))).has_value();
}

std::vector<Permutation> StabilizerChain::stabilizer_generators(std::size_t depth) const {
    std::vector<Permutation> out;
    if (depth >= degree_ || depth >= levels_.size()) return out;
    for (const auto& h : levels_[depth].generators) {
        std::vector<std::size_t> im(degree_);
        for (std::size_t x = 0; x < degree_; ++x) im[order_[x]] = order_[h(x)];
        out.emplace_back(std::move(im));
    }
    return out;
}

// ---------------------------------------------------------------------------

struct PermGroup::Cache {
    std::once_flag once;
    std::unique_ptr<StabilizerChain> chain;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
    if (degree == 0) throw MalformedInput("group degree must be positive");
    for (const auto& g : generators_)
        if (g.degree() != degree)
            throw DimensionError("generator of degree " + std::to_string(g.degree()) + " in a group of degree " +
                                 std::to_string(degree));
    if (generators_.empty()) generators_.push_back(Permutation::identity(degree));
}

const StabilizerChain& PermGroup::chain() const {
    std::call_once(cache_->once, [&] { cache_->chain = std::make_unique<StabilizerChain>(degree_, generators_); });
    return *cache_->chain;
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> orbit(const PermGroup& g, std::size_t point) {
    if (point >= g.degree()) throw DimensionError("point out of range for the group degree");
    std::vector<bool> seen(g.degree(), false);
    std::vector<std::size_t> out{point};
    seen[point] = true;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (const auto& s : g.generators()) {
            const auto q = s(out[i]);
            if (!seen[q]) {
                seen[q] = true;
                out.push_back(q);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

template <class T, class Act>
std::set<T> closure(const PermGroup& g, const T& seed, Act act) {
    std::set<T> seen{seed};
    std::deque<T> queue{seed};
    while (!queue.empty()) {
        T x = std::move(queue.front());
        queue.pop_front();
        for (const auto& s : g.generators()) {
            T y = act(s, x);
            if (seen.insert(y).second) queue.push_back(std::move(y));
        }
    }
    return seen;
}

void check_points(const PermGroup& g, const std::vector<std::size_t>& pts) {
    for (auto p : pts)
        if (p >= g.degree()) throw DimensionError("point out of range for the group degree");
}

} // namespace

std::set<std::vector<std::size_t>> tuple_orbit(const PermGroup& g, const std::vector<std::size_t>& tuple) {
    check_points(g, tuple);
    return closure(g, tuple, [](const Permutation& s, const std::vector<std::size_t>& t) {
        std::vector<std::size_t> out(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) out[i] = s(t[i]);
        return out;
    });
}

std::set<std::vector<std::size_t>> subset_orbit(const PermGroup& g, std::vector<std::size_t> subset) {
    check_points(g, subset);
    std::sort(subset.begin(), subset.end());
    return closure(g, subset, [](const Permutation& s, const std::vector<std::size_t>& t) {
        std::vector<std::size_t> out(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) out[i] = s(t[i]);
        std::sort(out.begin(), out.end());
        return out;
    });
}

std::set<BitVector> orbit(const PermGroup& g, const BitVector& seed) {
    if (seed.size() != g.degree()) throw DimensionError("vector length does not match the group degree");
    return closure(g, seed, [](const Permutation& s, const BitVector& v) { return s.apply(v); });
}

std::vector<std::vector<std::size_t>> orbits(const PermGroup& g) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(g.degree(), false);
    for (std::size_t p = 0; p < g.degree(); ++p) {
        if (seen[p]) continue;
        auto o = orbit(g, p);
        for (auto q : o) seen[q] = true;
        out.push_back(std::move(o));
    }
    return out;
}

namespace {

// Orbit size of the pair (0,1), ordered or unordered, by BFS over encoded pairs.
std::size_t pair_orbit_size(const PermGroup& g, bool ordered) {
    const std::size_t m = g.degree();
    std::vector<bool> seen(m * m, false);
    auto key = [&](std::size_t a, std::size_t b) {
        if (!ordered && a > b) std::swap(a, b);
        return a * m + b;
    };
    std::vector<std::size_t> queue{key(0, 1)};
    seen[queue[0]] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const std::size_t a = queue[i] / m;
        const std::size_t b = queue[i] % m;
        for (const auto& s : g.generators()) {
            const auto k = key(s(a), s(b));
            if (!seen[k]) {
                seen[k] = true;
                queue.push_back(k);
            }
        }
    }
    return queue.size();
}

} // namespace

TransitivityProfile transitivity_profile(const PermGroup& g) {
    const std::size_t m = g.degree();
    if (m < 2) throw PreconditionError("transitivity profile needs at least two points");
    TransitivityProfile p;
    p.transitive = orbit(g, 0).size() == m;
    if (!p.transitive) return p;
    p.two_homogeneous = pair_orbit_size(g, false) == m * (m - 1) / 2;
    p.two_transitive = p.two_homogeneous && pair_orbit_size(g, true) == m * (m - 1);
    return p;
}

InvarianceReport is_invariant(const LinearCode& c, const PermGroup& g) {
    if (c.length() != g.degree()) throw DimensionError("code length does not match the group degree");
    InvarianceReport r;
    for (std::size_t i = 0; i < g.generators().size(); ++i)
        for (const auto& row : c.generator().row_vectors())
            if (!c.contains(g.generators()[i].apply(row))) {
                r.invariant = false;
                r.generator = i;
                r.word = row;
                return r;
            }
    return r;
}

InvarianceReport is_invariant(const UnrestrictedCode& c, const PermGroup& g) {
    if (c.length() != g.degree()) throw DimensionError("code length does not match the group degree");
    InvarianceReport r;
    for (std::size_t i = 0; i < g.generators().size(); ++i)
        for (const auto& w : c.words())
            if (!c.contains(g.generators()[i].apply(w))) {
                r.invariant = false;
                r.generator = i;
                r.word = w;
                return r;
            }
    return r;
}

InvarianceReport is_invariant(const Code& c, const PermGroup& g) {
    return std::visit([&](const auto& x) { return is_invariant(x, g); }, c);
}

bool codeorder_divisibility(const PermGroup& g, std::size_t m, std::size_t q) {
    if (m != g.degree()) throw DimensionError("m does not match the group degree");
    if (!transitivity_profile(g).transitive) throw PreconditionError("codeorder divisibility needs a transitive group");
    const BigInt divisor = BigInt(m) * (m - 1) / 2 * (q - 1) * (q - 1);
    return g.order() % divisor == 0;
}

} // namespace ntlab

#include "ntlab/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>

#include "ntlab/error.hpp"
#include "ntlab/field.hpp"
#include "ntlab/io.hpp"
#include "ntlab/modules.hpp"

#ifndef NTLAB_DEFAULT_DATA_DIR
#define NTLAB_DEFAULT_DATA_DIR "data"
#endif

namespace ntlab {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw UnsupportedError("unsupported parameters: " + what);
}

std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

LinearCode span(std::size_t m, std::vector<BitVector> rows) { return LinearCode(m, BitMatrix::from_rows(std::move(rows), m)); }

Permutation from_map(std::size_t m, const std::function<std::size_t(std::size_t)>& f) {
    std::vector<std::size_t> img(m);
    for (std::size_t i = 0; i < m; ++i) img[i] = f(i);
    return Permutation(img);
}

// ---- projective spaces ----

struct ProjectiveSpace {
    GaloisField field;
    std::size_t t;                     // vector dimension
    std::vector<std::size_t> points;   // encoded vectors, increasing
    std::vector<std::int64_t> index;   // encoded vector -> point index, or -1

    ProjectiveSpace(std::size_t q, std::size_t dim) : field(q), t(dim) {
        const std::size_t n = ipow(q, t);
        index.assign(n, -1);
        for (std::size_t v = 1; v < n; ++v)
            if (leading(v) == 1) {
                index[v] = static_cast<std::int64_t>(points.size());
                points.push_back(v);
            }
    }

    std::size_t coord(std::size_t v, std::size_t i) const { return v / ipow(field.order(), i) % field.order(); }

    std::size_t encode(const std::vector<std::size_t>& x) const {
        std::size_t v = 0;
        for (std::size_t i = t; i-- > 0;) v = v * field.order() + x[i];
        return v;
    }

    std::vector<std::size_t> decode(std::size_t v) const {
        std::vector<std::size_t> x(t);
        for (std::size_t i = 0; i < t; ++i, v /= field.order()) x[i] = v % field.order();
        return x;
    }

    // Last nonzero coordinate.
    std::size_t leading(std::size_t v) const {
        auto x = decode(v);
        for (std::size_t i = t; i-- > 0;)
            if (x[i] != 0) return x[i];
        return 0;
    }

    std::size_t point_of(std::vector<std::size_t> x) const {
        std::size_t lead = 0;
        for (std::size_t i = t; i-- > 0 && lead == 0;) lead = x[i];
        if (lead == 0) throw Error("zero vector is not a projective point");
        const auto s = field.inv(lead);
        for (auto& c : x) c = field.mul(c, s);
        return static_cast<std::size_t>(index[encode(x)]);
    }

    std::size_t dot(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) const {
        std::size_t s = 0;
        for (std::size_t i = 0; i < t; ++i) s = field.add(s, field.mul(a[i], b[i]));
        return s;
    }

    std::vector<BitVector> hyperplanes() const {
        std::vector<BitVector> out;
        for (auto a : points) {
            const auto av = decode(a);
            BitVector h(points.size());
            for (std::size_t p = 0; p < points.size(); ++p)
                if (dot(av, decode(points[p])) == 0) h.set(p);
            out.push_back(h);
        }
        return out;
    }
};

void check_projective(std::size_t t, std::size_t k) {
    require(k >= 1 && k <= 4, "field degree k must be 1..4 (got " + std::to_string(k) + ")");
    require(t >= 2, "projective dimension needs t >= 2");
    const std::size_t q = std::size_t{1} << k;
    require(ipow(q, t) / q < BitVector::max_length + 1 && (ipow(q, t) - 1) / (q - 1) <= BitVector::max_length,
            "(2^(kt)-1)/(2^k-1) must not exceed " + std::to_string(BitVector::max_length));
}

// ---- quadric forms for Sp(2t, 2) ----

std::size_t q0(std::size_t x, std::size_t t) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < t; ++i) s ^= (x >> (2 * i) & 1u) & (x >> (2 * i + 1) & 1u);
    return s;
}

std::size_t symplectic(std::size_t x, std::size_t y, std::size_t t) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < t; ++i)
        s ^= ((x >> (2 * i) & 1u) & (y >> (2 * i + 1) & 1u)) ^ ((x >> (2 * i + 1) & 1u) & (y >> (2 * i) & 1u));
    return s;
}

// Q_a(x) = Q0(x) + B(a, x); Arf(Q_a) = Q0(a), so minus type is Q0(a) = 1.
std::vector<std::size_t> quadric_points(std::size_t t, bool plus) {
    std::vector<std::size_t> pts;
    for (std::size_t a = 0; a < (std::size_t{1} << (2 * t)); ++a)
        if (q0(a, t) == (plus ? 0u : 1u)) pts.push_back(a);
    return pts;
}

// ---- unital ----

struct Unital {
    ProjectiveSpace plane;
    std::vector<std::size_t> points;  // indices into plane.points
    std::vector<std::int64_t> local;  // plane point index -> unital index or -1

    explicit Unital(std::size_t r) : plane(r * r, 3) {
        const auto& f = plane.field;
        local.assign(plane.points.size(), -1);
        for (std::size_t p = 0; p < plane.points.size(); ++p) {
            const auto x = plane.decode(plane.points[p]);
            if (hermitian(x, x) == 0) {
                local[p] = static_cast<std::int64_t>(points.size());
                points.push_back(p);
            }
        }
        (void)f;
    }

    std::size_t conj(std::size_t a) const {
        const std::size_t r = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(plane.field.order()))));
        return plane.field.pow(a, r);
    }

    std::size_t hermitian(const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) const {
        std::size_t s = 0;
        for (std::size_t i = 0; i < 3; ++i) s = plane.field.add(s, plane.field.mul(x[i], conj(y[i])));
        return s;
    }
};

// ---- Hadamard ----

std::vector<BitVector> paley_rows() {
    const std::size_t q = 11, n = 12;
    const GaloisField f(q);
    auto chi = [&](std::size_t a) -> int { return a == 0 ? 0 : (f.is_square(a) ? 1 : -1); };
    std::vector<std::vector<int>> h(n, std::vector<int>(n, 0));
    for (std::size_t j = 1; j < n; ++j) {
        h[0][j] = 1;
        h[j][0] = -1;
    }
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) h[i + 1][j + 1] = chi(f.sub(j, i));
    for (std::size_t i = 0; i < n; ++i) h[i][i] += 1;
    std::vector<BitVector> rows;
    for (auto& row : h) {
        const int sign = row[0];
        BitVector v(n);
        for (std::size_t j = 0; j < n; ++j)
            if (row[j] * sign < 0) v.set(j);
        rows.push_back(v);
    }
    return rows;
}

} // namespace

// ---------------------------------------------------------------------------
// codes

LinearCode repetition(std::size_t m) {
    require(m >= 1 && m <= BitVector::max_length, "repetition length must be 1..1024");
    return span(m, {BitVector::ones(m)});
}

LinearCode even_weight(std::size_t m) {
    require(m >= 2 && m <= BitVector::max_length, "even-weight length must be 2..1024");
    return repetition(m).dual();
}

LinearCode rm1(std::size_t t) {
    require(t >= 1 && t <= 10, "rm1 needs 1 <= t <= 10");
    const std::size_t m = std::size_t{1} << t;
    std::vector<BitVector> rows{BitVector::ones(m)};
    for (std::size_t b = 0; b < t; ++b) {
        BitVector v(m);
        for (std::size_t x = 0; x < m; ++x)
            if (x >> b & 1u) v.set(x);
        rows.push_back(v);
    }
    return span(m, rows);
}

LinearCode hamming(std::size_t t) {
    require(t >= 2 && t <= 10, "hamming needs 2 <= t <= 10");
    const std::size_t m = (std::size_t{1} << t) - 1;
    std::vector<BitVector> rows;
    for (std::size_t b = 0; b < t; ++b) {
        BitVector v(m);
        for (std::size_t j = 0; j < m; ++j)
            if ((j + 1) >> b & 1u) v.set(j);
        rows.push_back(v);
    }
    return span(m, rows).dual();
}

LinearCode pg_hyperplane(std::size_t t, std::size_t k) {
    check_projective(t, k);
    const ProjectiveSpace ps(std::size_t{1} << k, t);
    return span(ps.points.size(), ps.hyperplanes());
}

LinearCode pg_complement(std::size_t t, std::size_t k) {
    check_projective(t, k);
    const ProjectiveSpace ps(std::size_t{1} << k, t);
    auto rows = ps.hyperplanes();
    for (auto& h : rows) h ^= BitVector::ones(ps.points.size());
    return span(ps.points.size(), rows);
}

LinearCode qr(std::size_t r) {
    require(is_prime(r) && r <= 1021, "qr needs a prime r <= 1021 (got " + std::to_string(r) + ")");
    require(r % 8 == 1 || r % 8 == 7, "qr needs r = +-1 mod 8 (got r mod 8 = " + std::to_string(r % 8) + ")");
    // For r = 1 mod 8 the squares alone spin to the even-like subcode.
    BitVector squares(r);
    for (std::size_t x = 1; x < r; ++x) squares.set(x * x % r);
    if (r % 8 == 1) squares.set(0);
    return spin_space(affine_2hom(r), squares);
}

LinearCode eqr(std::size_t r) {
    require(r + 1 <= BitVector::max_length, "eqr needs r + 1 <= 1024");
    return extend_parity(qr(r));
}

LinearCode golay23() { return qr(23); }
LinearCode golay24() { return eqr(23); }
LinearCode golay23_even() { return even_subcode(golay23()); }
LinearCode m22_code() { return puncture(golay23(), 0).dual(); }

UnrestrictedCode hadamard12() {
    auto rows = paley_rows();
    const std::size_t n = rows.size();
    for (std::size_t i = 0; i < n; ++i) rows.push_back(rows[i] ^ BitVector::ones(12));
    return UnrestrictedCode(12, rows);
}

UnrestrictedCode punct_hadamard11() { return puncture(hadamard12(), 0); }
UnrestrictedCode punct_hadamard11_even() { return even_subcode(punct_hadamard11()); }

LinearCode sp_quadric(std::size_t t, bool plus) {
    auto g = std::make_shared<const PermGroup>(sp_quadric_group(t, plus));
    SearchOptions opt;
    opt.exhaustive = false;
    opt.trials = 16;
    opt.max_seed_weight = 2;
    const auto result = submodule_search(g, opt);
    for (const auto* s : result.preminimal())
        if (s->dimension() == 2 * t + 1 && s->preminimal->verdict == Tristate::yes) return s->space();
    throw Error("no certified preminimal submodule of dimension " + std::to_string(2 * t + 1) + " found");
}

std::vector<BitVector> hermitian_unital_blocks(std::size_t r) {
    require(r == 3, "hermitian unital is supported for r = 3 only");
    const Unital u(r);
    const std::size_t m = u.points.size();
    std::vector<BitVector> blocks;
    for (auto a : u.plane.points) {
        const auto av = u.plane.decode(a);
        BitVector b(m);
        for (std::size_t i = 0; i < m; ++i)
            if (u.plane.dot(av, u.plane.decode(u.plane.points[u.points[i]])) == 0) b.set(i);
        if (b.weight() == r + 1) blocks.push_back(b);
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

LinearCode hermitian_unital_code(std::size_t r) {
    const auto blocks = hermitian_unital_blocks(r);
    return span(r * r * r + 1, blocks).dual();
}

// ---------------------------------------------------------------------------
// groups

PermGroup affine_2hom(std::size_t r) {
    require(is_prime(r) && r >= 3 && r <= 1021, "affine_2hom needs an odd prime r <= 1021");
    const GaloisField f(r);
    const std::size_t g2 = f.mul(f.primitive_element(), f.primitive_element());
    return PermGroup(r, {from_map(r, [&](std::size_t x) { return (x + 1) % r; }),
                         from_map(r, [&](std::size_t x) { return f.mul(g2, x); })});
}

PermGroup agl(std::size_t t) {
    require(t >= 2 && t <= 10, "agl needs 2 <= t <= 10");
    const std::size_t m = std::size_t{1} << t;
    auto transvection = [](std::size_t x) { return x ^ ((x >> 1) & 1u); };  // x_0 += x_1
    auto shift = [t](std::size_t x) { return ((x << 1) | (x >> (t - 1))) & ((std::size_t{1} << t) - 1); };
    return PermGroup(m, {from_map(m, [](std::size_t x) { return x ^ 1u; }), from_map(m, transvection),
                         from_map(m, shift)});
}

PermGroup psl(std::size_t t, std::size_t k) {
    check_projective(t, k);
    const ProjectiveSpace ps(std::size_t{1} << k, t);
    const std::size_t m = ps.points.size();
    std::vector<Permutation> gens;
    std::vector<std::size_t> scalars;
    for (std::size_t e = 0; e < k; ++e) scalars.push_back(ps.field.pow(ps.field.primitive_element(), e));
    for (std::size_t i = 0; i + 1 < t; ++i)
        for (auto lambda : scalars)
            for (auto [dst, src] : {std::pair{i, i + 1}, std::pair{i + 1, i}}) {
                gens.push_back(from_map(m, [&](std::size_t p) {
                    auto x = ps.decode(ps.points[p]);
                    x[dst] = ps.field.add(x[dst], ps.field.mul(lambda, x[src]));
                    return ps.point_of(x);
                }));
            }
    return PermGroup(m, gens);
}

PermGroup psl2(std::size_t r) {
    require(is_prime(r) && r >= 5 && r + 1 <= BitVector::max_length, "psl2 needs a prime 5 <= r <= 1021");
    const GaloisField f(r);
    const std::size_t inf = r, m = r + 1;
    const std::size_t g2 = f.mul(f.primitive_element(), f.primitive_element());
    return PermGroup(m, {from_map(m, [&](std::size_t x) { return x == inf ? inf : (x + 1) % r; }),
                         from_map(m, [&](std::size_t x) { return x == inf ? inf : f.mul(g2, x); }),
                         from_map(m, [&](std::size_t x) {
                             if (x == inf) return std::size_t{0};
                             if (x == 0) return inf;
                             return f.neg(f.inv(x));
                         })});
}

PermGroup sp_quadric_group(std::size_t t, bool plus) {
    require(t >= 2 && t <= 5, "sp needs 2 <= t <= 5");
    const auto pts = quadric_points(t, plus);
    std::map<std::size_t, std::size_t> index;
    for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i]] = i;
    // Transvections x -> x + B(x,v) v for v = e_0..e_{2t-1} and e_{2i+1} + e_{2i+2}.
    std::vector<std::size_t> vs;
    for (std::size_t i = 0; i < 2 * t; ++i) vs.push_back(std::size_t{1} << i);
    for (std::size_t i = 0; i + 1 < t; ++i) vs.push_back((std::size_t{1} << (2 * i + 1)) | (std::size_t{1} << (2 * i + 2)));
    std::vector<Permutation> gens;
    for (auto v : vs)
        gens.push_back(from_map(pts.size(), [&](std::size_t p) {
            const std::size_t a = pts[p];
            const std::size_t c = 1u ^ q0(v, t) ^ symplectic(a, v, t);
            return index.at(c ? a ^ v : a);
        }));
    return PermGroup(pts.size(), gens);
}

PermGroup psu3(std::size_t r) {
    require(r == 3, "psu3 is supported natively for r = 3 only");
    const Unital u(r);
    const auto& f = u.plane.field;
    const std::size_t q = f.order(), m = u.points.size();
    const BigInt target = 6048;
    std::mt19937_64 rng(default_random_seed);
    auto random_vector = [&] {
        std::vector<std::size_t> x(3);
        for (auto& c : x) c = rng() % q;
        return x;
    };
    auto unitary = [&] {
        std::vector<std::vector<std::size_t>> rows;
        while (rows.size() < 3) {
            auto x = random_vector();
            if (u.hermitian(x, x) != 1) continue;
            bool orthogonal = true;
            for (const auto& y : rows) orthogonal &= u.hermitian(x, y) == 0;
            if (orthogonal) rows.push_back(x);
        }
        return rows;
    };
    std::vector<Permutation> gens;
    while (true) {
        const auto mat = unitary();
        gens.push_back(from_map(m, [&](std::size_t i) {
            const auto x = u.plane.decode(u.plane.points[u.points[i]]);
            std::vector<std::size_t> y(3, 0);
            for (std::size_t c = 0; c < 3; ++c)
                for (std::size_t k = 0; k < 3; ++k) y[c] = f.add(y[c], f.mul(x[k], mat[k][c]));
            return static_cast<std::size_t>(u.local[u.plane.point_of(y)]);
        }));
        if (gens.size() >= 2) {
            const PermGroup g(m, gens);
            if (g.order() == target) return g;
            if (gens.size() > 6) gens.erase(gens.begin());
        }
    }
}

PermGroup symmetric(std::size_t m) {
    require(m >= 1 && m <= BitVector::max_length, "symmetric needs 1 <= m <= 1024");
    if (m == 1) return PermGroup(1, {Permutation::identity(1)});
    return PermGroup(m, {from_map(m, [m](std::size_t x) { return (x + 1) % m; }),
                         from_map(m, [](std::size_t x) { return x < 2 ? 1 - x : x; })});
}

PermGroup cyclic(std::size_t m) {
    require(m >= 1 && m <= BitVector::max_length, "cyclic needs 1 <= m <= 1024");
    return PermGroup(m, {from_map(m, [m](std::size_t x) { return (x + 1) % m; })});
}

// ---------------------------------------------------------------------------
// data

std::filesystem::path data_directory() {
    if (const char* env = std::getenv("NTLAB_DATA"); env && *env) return env;
    return NTLAB_DEFAULT_DATA_DIR;
}

std::filesystem::path group_data_path(const std::string& name) { return data_directory() / "groups" / (name + ".perm"); }
std::filesystem::path code_data_path(const std::string& name) { return data_directory() / "codes" / (name + ".code"); }

namespace {

void require_data(const std::filesystem::path& p) {
    if (!std::filesystem::exists(p)) throw MissingDataError("data file " + p.string() + " is not present");
    if (source_line(p).empty()) throw ParseError(1, p.string() + " lacks the mandatory '# source:' comment");
}

} // namespace

PermGroup load_group(const std::string& name) {
    const auto p = group_data_path(name);
    require_data(p);
    return read_group_file(p);
}

Code load_code(const std::string& name) {
    const auto p = code_data_path(name);
    require_data(p);
    return read_code_file(p);
}

// ---------------------------------------------------------------------------
// by name

std::vector<std::string> code_families() {
    return {"repetition", "even_weight", "rm1", "hamming", "pg_hyperplane", "pg_complement", "qr", "eqr",
            "golay23", "golay24", "golay23_even", "m22_code", "hadamard12", "punct_hadamard11",
            "punct_hadamard11_even", "sp_quadric", "hermitian_unital_code", "external"};
}

std::vector<std::string> group_families() {
    return {"affine_2hom", "agl", "psl", "psl2", "sp", "psu3", "symmetric", "cyclic",
            "m22", "m23", "m24", "alt7", "hs", "co3", "ree3", "psu3_5"};
}

namespace {

std::size_t need(const std::optional<std::size_t>& v, const char* name, const std::string& family) {
    if (!v) throw UnsupportedError(family + " needs --" + std::string(name));
    return *v;
}

bool quadric_type(const FamilyParams& p) {
    if (p.type == "plus") return true;
    if (p.type == "minus" || p.type.empty()) return false;
    throw UnsupportedError("quadric type must be 'minus' or 'plus' (got '" + p.type + "')");
}

} // namespace

Code construct_code(const std::string& family, const FamilyParams& p) {
    if (family == "repetition") return repetition(need(p.m, "m", family));
    if (family == "even_weight") return even_weight(need(p.m, "m", family));
    if (family == "rm1") return rm1(need(p.t, "t", family));
    if (family == "hamming") return hamming(need(p.t, "t", family));
    if (family == "pg_hyperplane") return pg_hyperplane(need(p.t, "t", family), p.k.value_or(1));
    if (family == "pg_complement") return pg_complement(need(p.t, "t", family), p.k.value_or(1));
    if (family == "qr") return qr(need(p.r, "r", family));
    if (family == "eqr") return eqr(need(p.r, "r", family));
    if (family == "golay23") return golay23();
    if (family == "golay24") return golay24();
    if (family == "golay23_even") return golay23_even();
    if (family == "m22_code") return m22_code();
    if (family == "hadamard12") return hadamard12();
    if (family == "punct_hadamard11") return punct_hadamard11();
    if (family == "punct_hadamard11_even") return punct_hadamard11_even();
    if (family == "sp_quadric") return sp_quadric(p.t.value_or(3), quadric_type(p));
    if (family == "hermitian_unital_code") return hermitian_unital_code(p.r.value_or(3));
    if (family == "external") {
        if (p.path.empty()) throw UnsupportedError("external needs a file path");
        return read_code_file(p.path);
    }
    throw UnsupportedError("unknown code family '" + family + "'");
}

GroupCatalogEntry construct_group(const std::string& family, const FamilyParams& p) {
    GroupCatalogEntry e;
    e.name = family;
    e.source = "native";
    auto set = [&](PermGroup g) { e.group = std::make_shared<const PermGroup>(std::move(g)); };
    if (family == "affine_2hom") {
        set(affine_2hom(need(p.r, "r", family)));
        e.two_transitive_expected = false;
    } else if (family == "agl") {
        set(agl(need(p.t, "t", family)));
    } else if (family == "psl") {
        set(psl(need(p.t, "t", family), p.k.value_or(1)));
    } else if (family == "psl2") {
        set(psl2(need(p.r, "r", family)));
    } else if (family == "sp") {
        set(sp_quadric_group(p.t.value_or(3), quadric_type(p)));
    } else if (family == "psu3") {
        set(psu3(p.r.value_or(3)));
    } else if (family == "symmetric") {
        set(symmetric(need(p.m, "m", family)));
    } else if (family == "cyclic") {
        set(cyclic(need(p.m, "m", family)));
        e.two_transitive_expected = false;
    } else {
        const auto path = group_data_path(family);
        if (!std::filesystem::exists(path)) {
            const auto known = group_families();
            if (std::find(known.begin(), known.end(), family) == known.end())
                throw UnsupportedError("unknown group family '" + family + "'");
        }
        set(load_group(family));
        e.source = source_line(path);
    }
    return e;
}

} // namespace ntlab

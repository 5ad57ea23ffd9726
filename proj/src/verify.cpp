#include "ntlab/verify.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "ntlab/cosets.hpp"
#include "ntlab/designs.hpp"
#include "ntlab/error.hpp"
#include "ntlab/field.hpp"
#include "ntlab/modules.hpp"

namespace ntlab {

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string num(const BigInt& n) { return n.str(); }

// (a - 1)^2 >= b, the squared form of a >= sqrt(b) + 1.
bool sqrt_bound(std::size_t a, std::size_t b) { return a >= 1 && (a - 1) * (a - 1) >= b; }

} // namespace

// ---------------------------------------------------------------------------
// criterion

KeyValues Certificate2NT::describe() const {
    KeyValues out{{"m", std::to_string(m)}, {"dimension", std::to_string(k)}, {"invariant", yes_no(invariance.invariant)}};
    if (!invariance.invariant) {
        if (invariance.generator) out.emplace_back("invariance_generator", std::to_string(*invariance.generator));
        if (invariance.word) out.emplace_back("invariance_witness", invariance.word->to_string());
    }
    out.emplace_back("two_homogeneous", yes_no(two_homogeneous));
    out.emplace_back("delta", delta ? std::to_string(*delta) : "unknown");
    out.emplace_back("two_nt", yes_no(two_nt));
    out.emplace_back("in_theorem_scope", yes_no(in_theorem_scope));
    out.emplace_back("criterion", pass ? "pass" : "fail");
    out.emplace_back("reason", reason);
    return out;
}

Certificate2NT certify_2nt_criterion(const LinearCode& c, const PermGroup& g) {
    Certificate2NT out;
    out.m = c.length();
    out.k = c.dimension();
    out.invariance = is_invariant(c, g);
    out.two_homogeneous = transitivity_profile(g).two_homogeneous;
    if (c.dimension() > 0) {
        try {
            out.delta = minimum_distance(c);
        } catch (const BudgetError&) {
        }
    }
    const std::size_t m = out.m;
    if (!out.invariance.invariant) {
        out.reason = "not-invariant";
    } else if (!out.two_homogeneous) {
        out.reason = "not-2-homogeneous";
    } else if (m < 5) {
        out.reason = "degree-below-5";
    } else if (c.dimension() == 0) {
        out.reason = "zero-code";
    } else if (!out.delta) {
        out.reason = "delta-not-enumerable";
    } else if (*out.delta == 1) {
        out.reason = "full-space";
    } else if (*out.delta == m) {
        out.reason = "repetition";
        out.two_nt = out.pass = true;
    } else if (*out.delta == 2) {
        out.reason = "dual-repetition";
    } else if (*out.delta == 3) {
        const bool perfect = m - c.dimension() < 64 && (std::uint64_t{1} << (m - c.dimension())) == m + 1;
        out.reason = perfect ? "perfect-delta3" : "delta3-not-perfect";
    } else if (*out.delta == 4) {
        out.reason = "delta4-outside-scope";
        out.two_nt = true;
    } else {
        out.reason = "in-scope";
        out.two_nt = out.in_theorem_scope = out.pass = true;
    }
    return out;
}

// ---------------------------------------------------------------------------
// oracle

KeyValues OracleCertificate::describe() const {
    KeyValues out;
    out.emplace_back("oracle_translations", translations ? "generator rows" : "none");
    const char* names[3] = {"C", "C1", "C2"};
    for (std::size_t i = 0; i < 3; ++i) {
        out.emplace_back(std::string("oracle_cell_") + names[i], std::to_string(cell_sizes[i]));
        out.emplace_back(std::string("oracle_orbit_") + names[i], std::to_string(orbit_sizes[i]));
    }
    out.emplace_back("oracle", pass ? "pass" : "fail");
    out.emplace_back("oracle_reason", reason);
    return out;
}

namespace {

struct Cells {
    std::vector<BitVector> vertices;
    std::vector<std::uint8_t> cell;
    std::unordered_map<BitVector, std::size_t, BitVectorHash> index;

    void add(const BitVector& v, std::uint8_t c) {
        if (index.emplace(v, vertices.size()).second) {
            vertices.push_back(v);
            cell.push_back(c);
        }
    }
};

void check_budget(const BigInt& size, std::size_t m) {
    const double work = static_cast<double>(size) * (1.0 + m + m * (m - 1) / 2.0);
    if (work > oracle_vertex_limit)
        throw BudgetError("oracle needs |C|(1 + m + m(m-1)/2) = " + std::to_string(static_cast<std::uint64_t>(work)) +
                          " vertices; the budget is 10^7");
}

Cells linear_cells(const LinearCode& c) {
    const std::size_t m = c.length();
    check_budget(BigInt(1) << c.dimension(), m);
    const CosetTable table(c);
    std::vector<BitVector> e1, e2;
    for (std::size_t i = 0; i < m; ++i) {
        const auto u = BitVector::unit(m, i);
        if (table.distance_to_code(u) == 1) e1.push_back(u);
        for (std::size_t j = i + 1; j < m; ++j) {
            const auto v = u ^ BitVector::unit(m, j);
            if (table.distance_to_code(v) == 2) e2.push_back(v);
        }
    }
    Cells cells;
    for_each_codeword(c, [&](const BitVector& w) {
        cells.add(w, 0);
        for (const auto& e : e1) cells.add(w ^ e, 1);
        for (const auto& e : e2) cells.add(w ^ e, 2);
    });
    return cells;
}

Cells unrestricted_cells(const UnrestrictedCode& c) {
    check_budget(BigInt(c.size()), c.length());
    const auto dist = vertex_distances(c);
    Cells cells;
    const std::size_t m = c.length();
    for (std::uint64_t v = 0; v < dist.size(); ++v) {
        if (dist[v] > 2) continue;
        BitVector x(m);
        for (std::size_t i = 0; i < m; ++i)
            if (v >> i & 1u) x.set(i);
        cells.add(x, dist[v]);
    }
    return cells;
}

} // namespace

OracleCertificate oracle_2nt(const Code& code, const PermGroup& g) {
    const std::size_t m = code_length(code);
    if (g.degree() != m) throw DimensionError("group degree does not match the code length");
    OracleCertificate out;
    Cells cells;
    std::vector<BitVector> translations;
    if (const auto* lin = std::get_if<LinearCode>(&code)) {
        if (m - lin->dimension() > syndrome_limit)
            throw BudgetError("oracle needs m - k <= " + std::to_string(syndrome_limit));
        cells = linear_cells(*lin);
        translations = lin->generator().row_vectors();
    } else {
        cells = unrestricted_cells(std::get<UnrestrictedCode>(code));
        out.translations = false;
    }
    for (auto c : cells.cell) ++out.cell_sizes[c];

    std::vector<bool> seen(cells.vertices.size(), false);
    bool closed = true;
    for (std::uint8_t target = 0; target < 3; ++target) {
        const auto first = std::find(cells.cell.begin(), cells.cell.end(), target);
        if (first == cells.cell.end()) continue;
        const auto start = static_cast<std::size_t>(first - cells.cell.begin());
        std::deque<std::size_t> queue{start};
        seen[start] = true;
        std::uint64_t size = 1;
        auto visit = [&](const BitVector& image) {
            const auto it = cells.index.find(image);
            if (it == cells.index.end() || cells.cell[it->second] != target) {
                closed = false;
                return;
            }
            if (!seen[it->second]) {
                seen[it->second] = true;
                ++size;
                queue.push_back(it->second);
            }
        };
        while (!queue.empty() && closed) {
            const auto v = cells.vertices[queue.front()];
            queue.pop_front();
            for (const auto& t : translations) visit(v ^ t);
            for (const auto& p : g.generators()) visit(p.apply(v));
        }
        out.orbit_sizes[target] = size;
        if (!closed) break;
    }
    if (!closed) {
        out.reason = "group does not preserve the distance partition";
    } else if (out.cell_sizes[1] == 0) {
        out.reason = "C_1 is empty";
    } else if (out.cell_sizes[2] == 0) {
        out.reason = "C_2 is empty";
    } else {
        out.pass = true;
        out.reason = "single orbits";
        for (std::size_t i = 0; i < 3; ++i)
            if (out.orbit_sizes[i] != out.cell_sizes[i]) {
                out.pass = false;
                out.reason = std::string("cell ") + (i == 0 ? "C" : i == 1 ? "C_1" : "C_2") + " splits into several orbits";
                break;
            }
    }
    return out;
}

// ---------------------------------------------------------------------------
// reports

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "PASS";
        case Verdict::fail: return "FAIL";
        case Verdict::skipped: return "SKIPPED";
    }
    return "?";
}

void VerificationReport::fail(const std::string& why) {
    verdict = Verdict::fail;
    add("failure", why);
}

std::string VerificationReport::summary() const {
    return line + " " + params + " " + m + " " + k + " " + delta + " " + to_string(verdict);
}

std::string VerificationReport::text() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& s : sections) {
        if (s.empty()) continue;
        if (!first) out << "---\n";
        first = false;
        for (const auto& [key, value] : s) out << key << " = " << value << "\n";
    }
    out << "VERDICT = " << to_string(verdict) << "\n";
    return out.str();
}

namespace {

struct Expect {
    std::size_t m = 0;
    std::optional<std::size_t> k;
    std::optional<std::size_t> delta;                // exact value from the table
    std::function<bool(std::size_t)> delta_bound;  // table lower bound
    std::string bound_text;                          // e.g. ">=6"
    bool two_transitive = true;
};

std::string param_text(int line, const FamilyParams& p) {
    std::vector<std::string> parts;
    if (line == 3 && p.k) parts.push_back("k=" + std::to_string(*p.k));
    if (p.t) parts.push_back("t=" + std::to_string(*p.t));
    if (p.r) parts.push_back("r=" + std::to_string(*p.r));
    if (parts.empty()) return "-";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) s += "," + parts[i];
    return s;
}

// Common checks for a (code, group) pair against a table line.
void check_pair(VerificationReport& rep, const LinearCode& c, const GroupCatalogEntry& ge, const Expect& ex,
                std::uint64_t seed) {
    const PermGroup& g = *ge.group;
    const std::size_t m = c.length();
    rep.m = std::to_string(m);
    rep.k = std::to_string(c.dimension());
    rep.add("group_source", ge.source);
    rep.add("group_order", num(g.order()));
    rep.add("m", std::to_string(m));
    rep.add("m_expected", std::to_string(ex.m));
    if (m != ex.m) rep.fail("length differs from the table");
    rep.add("dimension", std::to_string(c.dimension()));
    rep.add("dimension_expected", ex.k ? std::to_string(*ex.k) : "not fixed");
    if (ex.k && c.dimension() != *ex.k) rep.fail("dimension differs from the table");

    rep.add_section();
    std::optional<std::size_t> delta;
    try {
        delta = minimum_distance(c);
    } catch (const BudgetError&) {
    }
    if (delta) {
        rep.delta = std::to_string(*delta);
        rep.add("delta", std::to_string(*delta));
        rep.add("delta_status", "exact");
    } else {
        rep.delta = ex.delta ? std::to_string(*ex.delta) : ex.bound_text;
        rep.add("delta", "not enumerable");
        rep.add("delta_status", "bound-only");
    }
    if (ex.delta) {
        rep.add("delta_expected", std::to_string(*ex.delta));
        if (delta && *delta != *ex.delta) rep.fail("minimum distance differs from the table");
    }
    if (ex.delta_bound) {
        rep.add("delta_bound", ex.bound_text);
        if (delta) {
            const bool ok = ex.delta_bound(*delta);
            rep.add("delta_bound_holds", yes_no(ok));
            if (!ok) rep.fail("minimum distance violates the table bound");
        }
    }

    rep.add_section();
    const auto profile = transitivity_profile(g);
    rep.add("two_homogeneous", yes_no(profile.two_homogeneous));
    rep.add("two_transitive", yes_no(profile.two_transitive));
    rep.add("two_transitive_expected", yes_no(ex.two_transitive));
    if (profile.two_transitive != ex.two_transitive) rep.fail("transitivity differs from the table conditions");
    const auto cert = certify_2nt_criterion(c, g);
    for (auto& kv : cert.describe())
        if (kv.first != "m" && kv.first != "dimension" && kv.first != "delta" && kv.first != "two_homogeneous") rep.add(kv.first, kv.second);
    if (!cert.invariance.invariant) rep.fail("code is not invariant under the group");
    if (delta && !cert.pass) rep.fail("criterion fails: " + cert.reason);
    if (profile.transitive) {
        const bool div = codeorder_divisibility(g, m);
        rep.add("codeorder_divisibility", yes_no(div));
        if (!div) rep.fail("binom(m,2) does not divide |G|");
    }

    rep.add_section();
    if (delta && *delta >= 3 && *delta < m) {
        try {
            const auto b = distance_bound_check(c);
            rep.add("dual_delta", std::to_string(b.dual_delta));
            rep.add("layer_lambda", std::to_string(b.design_lambda));
            rep.add("product_bound", yes_no(b.product_bound));
            if (!b.product_bound) rep.fail("m - 1 > (delta - 1)(dual delta - 1)");
            rep.add("self_orthogonal", yes_no(b.self_orthogonal_bound.has_value()));
            if (b.self_orthogonal_bound) {
                rep.add("self_orthogonal_bound", yes_no(*b.self_orthogonal_bound));
                if (!*b.self_orthogonal_bound) rep.fail("self-orthogonal code with (delta - 1)^2 < m - 1");
            }
        } catch (const BudgetError& e) {
            rep.add("distance_bound", std::string("skipped: ") + e.what());
        } catch (const HypothesisError& e) {
            rep.fail(std::string("distance bound hypotheses fail: ") + e.what());
        }
    } else {
        rep.add("distance_bound", "not applicable");
    }

    rep.add_section();
    if (cert.invariance.invariant && c.dimension() > 0) {
        const Submodule sub(c, ge.group);
        const bool pre = sub.contains_all_ones();
        const auto mode = c.dimension() <= exhaustive_dimension_limit ? CertifyMode::exhaustive_mode()
                                                                      : CertifyMode::sampled(64, seed);
        const auto cf = pre ? certify_preminimal(sub, mode) : certify_minimal(sub, mode);
        rep.add("claim", pre ? "preminimal" : "minimal");
        rep.add("certification", to_string(cf.verdict));
        rep.add("certification_method", to_string(cf.method));
        rep.add("elements_checked", std::to_string(cf.elements_checked));
        if (cf.method == CertificationMethod::sampled) rep.add("seed", std::to_string(cf.seed));
        if (cf.witness) rep.add("certification_witness", cf.witness->to_string());
        if (cf.verdict == Tristate::no) rep.fail(std::string("submodule is not ") + (pre ? "preminimal" : "minimal"));
    }
}

std::size_t need(const std::optional<std::size_t>& v, std::size_t fallback) { return v.value_or(fallback); }

void unsupported_unless(bool ok, int line, const std::string& what) {
    if (!ok) throw UnsupportedError("line " + std::to_string(line) + " needs " + what);
}

std::optional<GroupCatalogEntry> data_group(VerificationReport& rep, const std::string& name) {
    try {
        return construct_group(name);
    } catch (const MissingDataError& e) {
        rep.verdict = Verdict::skipped;
        rep.add("status", "skipped: data unavailable");
        rep.add("missing", e.what());
        return std::nullopt;
    }
}

std::optional<LinearCode> data_code(VerificationReport& rep, const std::string& name) {
    try {
        const auto c = load_code(name);
        if (!std::holds_alternative<LinearCode>(c)) throw ParseError(1, name + " must hold a LINEAR code");
        return std::get<LinearCode>(c);
    } catch (const MissingDataError& e) {
        rep.verdict = Verdict::skipped;
        rep.add("status", "skipped: data unavailable");
        rep.add("missing", e.what());
        return std::nullopt;
    }
}

GroupCatalogEntry native(PermGroup g, bool two_transitive = true) {
    GroupCatalogEntry e;
    e.group = std::make_shared<const PermGroup>(std::move(g));
    e.two_transitive_expected = two_transitive;
    e.source = "native";
    return e;
}

} // namespace

VerificationReport verify_table_row(int line, const FamilyParams& params, std::uint64_t seed) {
    VerificationReport rep;
    rep.line = std::to_string(line);
    FamilyParams p = params;
    Expect ex;
    switch (line) {
        case 1: {
            const std::size_t r = need(p.r, 23);
            p.r = r;
            unsupported_unless(is_prime(r) && r % 8 == 7 && r >= 23 && r <= 1021, 1, "a prime r = 7 mod 8 with 23 <= r <= 1021");
            rep.params = param_text(1, p);
            ex = {r, (r - 1) / 2, std::nullopt, [r](std::size_t d) { return sqrt_bound(d, r - 1); }, ">=sqrt(r-1)+1", false};
            rep.add("code", "even subcode of qr(" + std::to_string(r) + ")");
            check_pair(rep, even_subcode(qr(r)), native(affine_2hom(r), false), ex, seed);
            break;
        }
        case 2: {
            const std::size_t t = need(p.t, 4);
            p.t = t;
            unsupported_unless(t >= 4 && t <= 10, 2, "4 <= t <= 10");
            rep.params = param_text(2, p);
            ex = {std::size_t{1} << t, t + 1, std::size_t{1} << (t - 1), nullptr, "", true};
            rep.add("code", "rm1(" + std::to_string(t) + ")");
            check_pair(rep, rm1(t), native(agl(t)), ex, seed);
            break;
        }
        case 3: {
            const std::size_t t = need(p.t, 4), k = need(p.k, 1);
            p.t = t;
            p.k = k;
            unsupported_unless(t >= 3 && !(k == 1 && t == 3) && k >= 1 && k <= 4, 3, "t >= 3, (k,t) != (1,3) and k <= 4");
            rep.params = param_text(3, p);
            const std::size_t q = std::size_t{1} << k;
            std::size_t m = 1, qt1 = 1;
            for (std::size_t i = 0; i + 1 < t; ++i) qt1 *= q;
            m = (qt1 * q - 1) / (q - 1);
            const std::size_t bound = (qt1 - 1) / (q - 1) + 1;
            std::optional<std::size_t> dim;
            if (k == 1) dim = t;
            if (k == 2 && t == 3) dim = 9;
            ex = {m, dim, std::nullopt, [bound](std::size_t d) { return d >= bound; }, ">=" + std::to_string(bound), true};
            rep.add("code", "pg_complement(" + std::to_string(t) + "," + std::to_string(k) + ")");
            check_pair(rep, pg_complement(t, k), native(psl(t, k)), ex, seed);
            break;
        }
        case 4: {
            auto g = data_group(rep, "alt7");
            if (!g) break;
            auto c = data_code(rep, "alt7");
            if (!c) break;
            ex = {15, 4, 8, nullptr, "", true};
            check_pair(rep, *c, *g, ex, seed);
            break;
        }
        case 5: {
            const std::size_t r = need(p.r, 23);
            p.r = r;
            unsupported_unless(is_prime(r) && (r % 8 == 1 || r % 8 == 7) && r >= 23 && r + 1 <= 1024, 5,
                               "a prime r = +-1 mod 8 with 23 <= r <= 1021");
            rep.params = param_text(5, p);
            ex = {r + 1, (r + 1) / 2, std::nullopt, [r](std::size_t d) { return sqrt_bound(d, r); }, ">=sqrt(r)+1", true};
            const auto c = eqr(r);
            rep.add("code", "eqr(" + std::to_string(r) + ")");
            if (r == 23) {
                const bool same = c == golay24();
                rep.add("equals_golay24", yes_no(same));
                if (!same) rep.fail("eqr(23) differs from golay24");
            }
            check_pair(rep, c, native(psl2(r)), ex, seed);
            break;
        }
        case 6:
        case 7: {
            const std::size_t t = need(p.t, 3);
            p.t = t;
            unsupported_unless(t == 3, line, "t = 3");
            rep.params = param_text(line, p);
            const bool plus = line == 7;
            const std::size_t half = std::size_t{1} << (2 * t - 1), quarter = std::size_t{1} << (2 * t - 2),
                              s = std::size_t{1} << (t - 1);
            const std::size_t m = plus ? half + s : half - s;
            const std::size_t table = plus ? quarter : quarter - s;
            const std::size_t proof = plus ? quarter - s : quarter;
            ex = {m, 2 * t + 1, std::nullopt, [=](std::size_t d) { return d == table || d == proof; },
                  "{" + std::to_string(quarter - s) + "," + std::to_string(quarter) + "}", true};
            rep.add("code", std::string("sp_quadric(") + std::to_string(t) + "," + (plus ? "plus" : "minus") + ")");
            const auto c = sp_quadric(t, plus);
            check_pair(rep, c, native(sp_quadric_group(t, plus)), ex, seed);
            rep.add_section();
            rep.add("delta_table_reading", std::to_string(table));
            rep.add("delta_proof_text_reading", std::to_string(proof));
            if (rep.delta == std::to_string(table))
                rep.add("pairing", "table");
            else if (rep.delta == std::to_string(proof))
                rep.add("pairing", "proof-text");
            else
                rep.add("pairing", "neither");
            break;
        }
        case 8: {
            const std::size_t r = need(p.r, 3);
            p.r = r;
            unsupported_unless(r == 3, 8, "r = 3");
            rep.params = param_text(8, p);
            ex = {r * r * r + 1, r * r - r + 1, std::nullopt, [r](std::size_t d) { return d >= r * r + 1; },
                  ">=" + std::to_string(r * r + 1), true};
            rep.add("code", "hermitian_unital_code(3)");
            check_pair(rep, hermitian_unital_code(r), native(psu3(r)), ex, seed);
            break;
        }
        case 9:
        case 10: {
            const std::size_t r = need(p.r, line == 9 ? 5 : 3);
            p.r = r;
            rep.params = param_text(line, p);
            const std::string name = (line == 9 ? "psu3_" : "ree") + std::to_string(r);
            auto g = data_group(rep, name);
            if (!g) break;
            auto c = data_code(rep, name);
            if (!c) break;
            if (line == 9)
                ex = {r * r * r + 1, r * r * r - r * r + r, std::nullopt, [](std::size_t d) { return d >= 4; }, ">=4", true};
            else
                ex = {r * r * r + 1, r * r - r + 1, std::nullopt, [r](std::size_t d) { return sqrt_bound(d, r * r * r); },
                      ">=r^(3/2)+1", true};
            check_pair(rep, *c, *g, ex, seed);
            break;
        }
        case 11:
        case 12:
        case 13: {
            const std::size_t m = static_cast<std::size_t>(line) + 11;
            auto g = data_group(rep, "m" + std::to_string(m));
            if (!g) break;
            ex = {m, m - 12, 8, nullptr, "", true};
            const LinearCode c = line == 11 ? m22_code() : line == 12 ? golay23_even() : golay24();
            rep.add("code", line == 11 ? "m22_code" : line == 12 ? "golay23_even" : "golay24");
            check_pair(rep, c, *g, ex, seed);
            break;
        }
        case 14:
        case 15: {
            const std::string name = line == 14 ? "hs" : "co3";
            auto g = data_group(rep, name);
            if (!g) break;
            auto c = data_code(rep, name);
            if (!c) break;
            if (line == 14)
                ex = {176, 21, std::nullopt, [](std::size_t d) { return d >= 50; }, ">=50", true};
            else
                ex = {276, 23, 100, nullptr, "", true};
            check_pair(rep, *c, *g, ex, seed);
            break;
        }
        default:
            throw UnsupportedError("table lines are numbered 1 to 15 (got " + std::to_string(line) + ")");
    }
    return rep;
}

std::vector<VerificationReport> verify_hadamard_family() {
    struct Member {
        std::string name;
        UnrestrictedCode code;
        std::size_t size, delta;
    };
    const std::vector<Member> members = {{"hadamard12", hadamard12(), 24, 6},
                                         {"punct_hadamard11", punct_hadamard11(), 24, 5},
                                         {"punct_hadamard11_even", punct_hadamard11_even(), 12, 6}};
    std::vector<VerificationReport> out;
    for (const auto& mem : members) {
        VerificationReport rep;
        rep.line = "H";
        rep.params = mem.name;
        const auto& c = mem.code;
        const auto delta = minimum_distance(c);
        rep.m = std::to_string(c.length());
        rep.k = "n=" + std::to_string(c.size());
        rep.delta = std::to_string(delta);
        rep.add("code", mem.name);
        rep.add("m", rep.m);
        rep.add("size", std::to_string(c.size()));
        rep.add("size_expected", std::to_string(mem.size));
        rep.add("delta", rep.delta);
        rep.add("delta_expected", std::to_string(mem.delta));
        if (c.size() != mem.size) rep.fail("word count differs");
        if (delta != mem.delta) rep.fail("minimum distance differs");
        rep.add_section();
        const auto part = distance_partition(Code(c));
        std::string sizes;
        for (const auto& s : part.sizes) sizes += (sizes.empty() ? "" : " ") + num(s);
        rep.add("distance_partition", sizes);
        const bool c2 = part.sizes.size() > 2 && part.sizes[2] > 0;
        rep.add("C2_nonempty", yes_no(c2));
        if (!c2) rep.fail("C_2 is empty");
        const auto reg = s_regular_check(Code(c), 2);
        rep.add("two_regular", yes_no(reg.regular));
        if (reg.witness) rep.add("regularity_witness", reg.witness->first.to_string() + " " + reg.witness->second.to_string());
        if (!reg.regular) rep.fail("not 2-regular");
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<CensusRow> census_rows(CensusScope scope) {
    auto tp = [](std::size_t t) { FamilyParams p; p.t = t; return p; };
    auto rp = [](std::size_t r) { FamilyParams p; p.r = r; return p; };
    auto kt = [](std::size_t k, std::size_t t) { FamilyParams p; p.k = k; p.t = t; return p; };
    std::vector<CensusRow> rows = {{1, rp(23)}, {1, rp(31)}, {2, tp(4)}, {2, tp(5)}, {2, tp(6)},
                                   {3, kt(1, 4)}, {3, kt(1, 5)}, {3, kt(2, 3)}};
    if (scope == CensusScope::all_with_data) rows.push_back({4, {}});
    for (auto r : {23, 31}) rows.push_back({5, rp(r)});
    rows.push_back({6, tp(3)});
    rows.push_back({7, tp(3)});
    rows.push_back({8, rp(3)});
    if (scope == CensusScope::all_with_data) {
        rows.push_back({9, rp(5)});
        rows.push_back({10, rp(3)});
        for (int l : {11, 12, 13, 14, 15}) rows.push_back({l, {}});
    }
    return rows;
}

std::vector<VerificationReport> census(CensusScope scope, std::uint64_t seed) {
    std::vector<VerificationReport> out;
    for (const auto& row : census_rows(scope)) {
        try {
            out.push_back(verify_table_row(row.line, row.params, seed));
        } catch (const Error& e) {
            VerificationReport rep;
            rep.line = std::to_string(row.line);
            rep.fail(e.what());
            out.push_back(std::move(rep));
        }
    }
    for (auto& r : verify_hadamard_family()) out.push_back(std::move(r));
    return out;
}

} // namespace ntlab

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ntlab/catalog.hpp"
#include "ntlab/code.hpp"
#include "ntlab/modules.hpp"
#include "ntlab/permgroup.hpp"

namespace ntlab {

/// Largest |C| (1 + m + m(m-1)/2) accepted by oracle_2nt.
inline constexpr double oracle_vertex_limit = 1e7;

using KeyValues = std::vector<std::pair<std::string, std::string>>;

struct Certificate2NT {
    std::size_t m = 0;
    std::size_t k = 0;
    InvarianceReport invariance;
    bool two_homogeneous = false;
    std::optional<std::size_t> delta;
    bool two_nt = false;            // 2-neighbour-transitive by the submodule classification (delta = m or delta >= 4)
    bool in_theorem_scope = false;  // 5 <= delta < m
    bool pass = false;
    std::string reason;

    KeyValues describe() const;
};

/// Invariance, 2-homogeneity and the minimum distance decide the verdict.
Certificate2NT certify_2nt_criterion(const LinearCode& c, const PermGroup& g);

struct OracleCertificate {
    bool pass = false;
    std::string reason;
    std::array<std::uint64_t, 3> cell_sizes{};  // |C|, |C_1|, |C_2|
    std::array<std::uint64_t, 3> orbit_sizes{};  // orbit of the first vertex of each cell
    bool translations = true;

    KeyValues describe() const;
};

/// Orbits of <translations by generator rows, G> (linear) or of G alone
/// (unrestricted) on C, C_1 and C_2.
OracleCertificate oracle_2nt(const Code& c, const PermGroup& g);

enum class Verdict { pass, fail, skipped };
std::string to_string(Verdict v);

struct VerificationReport {
    std::string line;
    std::string params = "-";
    std::string m = "-", k = "-", delta = "-";
    Verdict verdict = Verdict::pass;
    std::vector<KeyValues> sections{{}};

    void add(std::string key, std::string value) { sections.back().emplace_back(std::move(key), std::move(value)); }
    void add_section() { sections.emplace_back(); }
    void fail(const std::string& why);

    /// `<line> <params> <m> <k> <delta-or-bound> <verdict>`
    std::string summary() const;
    /// `key = value` lines, sections separated by `---`, then `VERDICT = ...`.
    std::string text() const;
};

/// Checks one instance of a table line (1..15). Missing data files give a
/// SKIPPED report; infeasible parameters throw UnsupportedError.
/// `seed` drives sampled certification of submodules too large to certify exhaustively.
VerificationReport verify_table_row(int line, const FamilyParams& params = {}, std::uint64_t seed = default_random_seed);

/// Order-12 Hadamard family: sizes, distances and 2-regularity.
std::vector<VerificationReport> verify_hadamard_family();

enum class CensusScope { all_native, all_with_data };

struct CensusRow {
    int line;
    FamilyParams params;
};

std::vector<CensusRow> census_rows(CensusScope scope);
std::vector<VerificationReport> census(CensusScope scope = CensusScope::all_with_data,
                                       std::uint64_t seed = default_random_seed);

} // namespace ntlab

#pragma once
// Code families and their permutation groups.
//
// Point labels:
//   affine groups, rm1      point x is the integer whose bits are the coordinates of x in F2^t
//   projective spaces       normalized vectors (last nonzero coordinate 1) in increasing base-q order;
//                           for q = 2 point p is the vector p + 1, matching the Hamming columns
//   qr, affine_2hom         point x is x in GF(r)
//   eqr, psl2               as qr, with infinity at index r

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ntlab/code.hpp"
#include "ntlab/permgroup.hpp"

namespace ntlab {

struct FamilyParams {
    std::optional<std::size_t> t, k, r, m;
    std::string type;  // "minus" or "plus" for quadric families
    std::filesystem::path path;  // for external codes
};

// ---- codes ----
LinearCode repetition(std::size_t m);
LinearCode even_weight(std::size_t m);
/// First-order Reed-Muller code [2^t, t+1, 2^(t-1)].
LinearCode rm1(std::size_t t);
/// Perfect [2^t - 1, 2^t - 1 - t, 3] code.
LinearCode hamming(std::size_t t);
/// Span of the hyperplanes of PG(t-1, 2^k), resp. of their complements.
LinearCode pg_hyperplane(std::size_t t, std::size_t k);
LinearCode pg_complement(std::size_t t, std::size_t k);
/// Spin of the nonzero squares under x -> x+1, x -> g^2 x; r prime, r = +-1 mod 8.
LinearCode qr(std::size_t r);
LinearCode eqr(std::size_t r);
LinearCode golay23();
LinearCode golay24();
LinearCode golay23_even();
LinearCode m22_code();
UnrestrictedCode hadamard12();
UnrestrictedCode punct_hadamard11();
UnrestrictedCode punct_hadamard11_even();
/// The preminimal submodule of the quadric permutation module of Sp(2t, 2).
LinearCode sp_quadric(std::size_t t, bool plus);
/// Dual of the span of the secant lines of the Hermitian unital in PG(2, r^2).
LinearCode hermitian_unital_code(std::size_t r);
/// Blocks of the Hermitian unital (secant-line point sets).
std::vector<BitVector> hermitian_unital_blocks(std::size_t r);

// ---- groups ----
PermGroup affine_2hom(std::size_t r);
PermGroup agl(std::size_t t);
PermGroup psl(std::size_t t, std::size_t k);
PermGroup psl2(std::size_t r);
/// Sp(2t, 2) acting on the quadratic forms of minus (28 points for t = 3) or plus type.
PermGroup sp_quadric_group(std::size_t t, bool plus);
PermGroup psu3(std::size_t r);
PermGroup symmetric(std::size_t m);
PermGroup cyclic(std::size_t m);

// ---- bundled data ----
/// NTLAB_DATA if set, else the data directory of the source tree.
std::filesystem::path data_directory();
std::filesystem::path group_data_path(const std::string& name);
std::filesystem::path code_data_path(const std::string& name);
/// Throws MissingDataError if the file is absent and ParseError if it lacks a "# source:" line.
PermGroup load_group(const std::string& name);
Code load_code(const std::string& name);

// ---- by name ----
std::vector<std::string> code_families();
std::vector<std::string> group_families();
/// Throws UnsupportedError for unknown families or parameters outside the supported range.
Code construct_code(const std::string& family, const FamilyParams& params = {});

struct GroupCatalogEntry {
    std::string name;
    std::shared_ptr<const PermGroup> group;
    bool two_transitive_expected = true;  // false for the 2-homogeneous affine family
    std::string source;                   // "native" or the data file's source line
};

GroupCatalogEntry construct_group(const std::string& family, const FamilyParams& params = {});

} // namespace ntlab

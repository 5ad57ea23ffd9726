#pragma once
// Text formats for codes and groups.
//
// Code file:  "LINEAR m k" or "SET m n", then k (resp. n) rows of m characters
//             from {0,1}. Lines starting with '#' are comments.
// Group file: "PERM m g", then g lines of m images, space separated.

#include <filesystem>
#include <iosfwd>
#include <string>

#include "ntlab/code.hpp"
#include "ntlab/permgroup.hpp"

namespace ntlab {

/// Throws ParseError naming the offending line.
Code read_code(std::istream& in);
Code read_code_file(const std::filesystem::path& path);
void write_code(std::ostream& out, const Code& c, const std::string& source = {});
void write_code_file(const std::filesystem::path& path, const Code& c, const std::string& source = {});

PermGroup read_group(std::istream& in);
PermGroup read_group_file(const std::filesystem::path& path);
void write_group(std::ostream& out, const PermGroup& g, const std::string& source = {});
void write_group_file(const std::filesystem::path& path, const PermGroup& g, const std::string& source = {});

/// Text of the first "# source:" comment in a data file, or empty.
std::string source_line(const std::filesystem::path& path);

} // namespace ntlab

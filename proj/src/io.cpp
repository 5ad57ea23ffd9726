#include "ntlab/io.hpp"

#include <fstream>
#include <sstream>

#include "ntlab/error.hpp"

namespace ntlab {

namespace {

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next line that is neither blank nor a comment.
    bool next(std::string& line) {
        while (std::getline(in_, line)) {
            ++number_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            const auto first = line.find_first_not_of(" \t");
            if (first == std::string::npos || line[first] == '#') continue;
            line = line.substr(first, line.find_last_not_of(" \t") - first + 1);
            return true;
        }
        return false;
    }

    std::size_t number() const noexcept { return number_; }

private:
    std::istream& in_;
    std::size_t number_ = 0;
};

std::size_t parse_count(const std::string& token, std::size_t line, const char* what) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(line, std::string("expected a nonnegative integer for ") + what + ", got '" + token + "'");
    try {
        return std::stoul(token);
    } catch (const std::exception&) {
        throw ParseError(line, std::string(what) + " is out of range");
    }
}

std::ifstream open(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw MissingDataError("cannot open " + path.string());
    return in;
}

void write_source(std::ostream& out, const std::string& source) {
    if (!source.empty()) out << "# source: " << source << '\n';
}

} // namespace

Code read_code(std::istream& in) {
    LineReader reader(in);
    std::string line;
    if (!reader.next(line)) throw ParseError(reader.number(), "missing header line");
    std::istringstream header(line);
    std::string kind, ms, ns, extra;
    header >> kind >> ms >> ns;
    if (kind != "LINEAR" && kind != "SET") throw ParseError(reader.number(), "header must start with LINEAR or SET");
    if (header >> extra) throw ParseError(reader.number(), "unexpected token '" + extra + "' in header");
    const std::size_t m = parse_count(ms, reader.number(), "length");
    const std::size_t n = parse_count(ns, reader.number(), "row count");
    if (m == 0 || m > BitVector::max_length)
        throw ParseError(reader.number(), "length must be between 1 and " + std::to_string(BitVector::max_length));
    std::vector<BitVector> rows;
    rows.reserve(n);
    while (rows.size() < n) {
        if (!reader.next(line))
            throw ParseError(reader.number(), "expected " + std::to_string(n) + " rows, found " + std::to_string(rows.size()));
        if (line.size() != m)
            throw ParseError(reader.number(), "row has " + std::to_string(line.size()) + " characters, expected " +
                                                  std::to_string(m));
        if (line.find_first_not_of("01") != std::string::npos)
            throw ParseError(reader.number(), "rows may contain only '0' and '1'");
        rows.push_back(BitVector::from_string(line));
    }
    if (reader.next(line)) throw ParseError(reader.number(), "unexpected content after the last row");
    if (kind == "LINEAR") return LinearCode(m, BitMatrix::from_rows(std::move(rows), m));
    try {
        return UnrestrictedCode(m, std::move(rows));
    } catch (const MalformedInput& e) {
        throw ParseError(reader.number(), e.what());
    }
}

Code read_code_file(const std::filesystem::path& path) {
    auto in = open(path);
    return read_code(in);
}

void write_code(std::ostream& out, const Code& c, const std::string& source) {
    write_source(out, source);
    if (const auto* lin = std::get_if<LinearCode>(&c)) {
        out << "LINEAR " << lin->length() << ' ' << lin->dimension() << '\n';
        for (const auto& r : lin->generator().row_vectors()) out << r.to_string() << '\n';
    } else {
        const auto& u = std::get<UnrestrictedCode>(c);
        out << "SET " << u.length() << ' ' << u.size() << '\n';
        for (const auto& w : u.words()) out << w.to_string() << '\n';
    }
}

void write_code_file(const std::filesystem::path& path, const Code& c, const std::string& source) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    write_code(out, c, source);
}

PermGroup read_group(std::istream& in) {
    LineReader reader(in);
    std::string line;
    if (!reader.next(line)) throw ParseError(reader.number(), "missing header line");
    std::istringstream header(line);
    std::string kind, ms, gs, extra;
    header >> kind >> ms >> gs;
    if (kind != "PERM") throw ParseError(reader.number(), "header must start with PERM");
    if (header >> extra) throw ParseError(reader.number(), "unexpected token '" + extra + "' in header");
    const std::size_t m = parse_count(ms, reader.number(), "degree");
    const std::size_t g = parse_count(gs, reader.number(), "generator count");
    if (m == 0 || m > BitVector::max_length)
        throw ParseError(reader.number(), "degree must be between 1 and " + std::to_string(BitVector::max_length));
    std::vector<Permutation> gens;
    while (gens.size() < g) {
        if (!reader.next(line))
            throw ParseError(reader.number(), "expected " + std::to_string(g) + " generators, found " + std::to_string(gens.size()));
        std::istringstream row(line);
        std::vector<std::size_t> images;
        std::string token;
        while (row >> token) images.push_back(parse_count(token, reader.number(), "image"));
        if (images.size() != m)
            throw ParseError(reader.number(), "generator lists " + std::to_string(images.size()) + " images, expected " +
                                                  std::to_string(m));
        try {
            gens.emplace_back(images);
        } catch (const MalformedInput& e) {
            throw ParseError(reader.number(), e.what());
        }
    }
    if (reader.next(line)) throw ParseError(reader.number(), "unexpected content after the last generator");
    if (gens.empty()) gens.push_back(Permutation::identity(m));
    return PermGroup(m, std::move(gens));
}

PermGroup read_group_file(const std::filesystem::path& path) {
    auto in = open(path);
    return read_group(in);
}

void write_group(std::ostream& out, const PermGroup& g, const std::string& source) {
    write_source(out, source);
    out << "PERM " << g.degree() << ' ' << g.generators().size() << '\n';
    for (const auto& s : g.generators()) {
        for (std::size_t i = 0; i < g.degree(); ++i) out << (i ? " " : "") << s(i);
        out << '\n';
    }
}

void write_group_file(const std::filesystem::path& path, const PermGroup& g, const std::string& source) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    write_group(out, g, source);
}

std::string source_line(const std::filesystem::path& path) {
    auto in = open(path);
    std::string line;
    const std::string tag = "# source:";
    while (std::getline(in, line))
        if (line.rfind(tag, 0) == 0) {
            auto s = line.substr(tag.size());
            const auto first = s.find_first_not_of(' ');
            return first == std::string::npos ? std::string{} : s.substr(first);
        }
    return {};
}

} // namespace ntlab

#include "cubespec/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace cubespec {

namespace {

std::string strip(std::string line) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = line.find_last_not_of(" \t\r");
    return line.substr(first, last - first + 1);
}

struct LineReader {
    std::istream& in;
    std::size_t line_no = 0;

    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_no;
            out = strip(raw);
            if (!out.empty()) return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw precondition_error("line " + std::to_string(line_no) + ": " + what);
    }
};

unsigned read_header(LineReader& reader) {
    std::string line;
    if (!reader.next(line)) reader.fail("missing 'd=<int>' header");
    if (line.rfind("d=", 0) != 0) reader.fail("expected 'd=<int>', got '" + line + "'");
    unsigned d = 0;
    const char* begin = line.data() + 2;
    const char* end = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(begin, end, d);
    if (ec != std::errc{} || ptr != end || d < 1 || d > kMaxDimension) reader.fail("bad dimension '" + line + "'");
    return d;
}

Vertex parse_vertex(LineReader& reader, const std::string& token, unsigned d) {
    if (token.size() != d) reader.fail("vertex '" + token + "' does not have length " + std::to_string(d));
    try {
        return Vertex::parse_binary(token);
    } catch (const precondition_error& e) {
        reader.fail(e.what());
    }
}

std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw precondition_error("cannot open '" + path + "'");
    return in;
}

}  // namespace

VertexFamily read_family(std::istream& in) {
    LineReader reader{in};
    const unsigned d = read_header(reader);
    std::vector<Vertex> members;
    std::set<Vertex> seen;
    std::string line;
    while (reader.next(line)) {
        const Vertex v = parse_vertex(reader, line, d);
        if (!seen.insert(v).second) reader.fail("duplicate vertex '" + line + "'");
        members.push_back(v);
    }
    return VertexFamily(d, std::move(members));
}

VertexFamily read_family_file(const std::string& path) {
    auto in = open(path);
    return read_family(in);
}

void write_family(std::ostream& out, const VertexFamily& family) {
    out << "d=" << family.dimension() << '\n';
    for (Vertex v : family) out << v.to_binary(family.dimension()) << '\n';
}

WeightVector read_vector(std::istream& in) {
    LineReader reader{in};
    const unsigned d = read_header(reader);
    WeightVector out(d);
    std::set<Vertex> seen;
    std::string line;
    while (reader.next(line)) {
        std::istringstream fields(line);
        std::string token;
        std::string weight_text;
        std::string extra;
        if (!(fields >> token >> weight_text) || (fields >> extra)) reader.fail("expected '<binary> <weight>'");
        const Vertex v = parse_vertex(reader, token, d);
        if (!seen.insert(v).second) reader.fail("duplicate vertex '" + token + "'");
        std::size_t used = 0;
        double w = 0.0;
        try {
            w = std::stod(weight_text, &used);
        } catch (const std::exception&) {
            reader.fail("bad weight '" + weight_text + "'");
        }
        if (used != weight_text.size()) reader.fail("bad weight '" + weight_text + "'");
        out.set(v, w);
    }
    return out;
}

WeightVector read_vector_file(const std::string& path) {
    auto in = open(path);
    return read_vector(in);
}

void write_vector(std::ostream& out, const WeightVector& vector) {
    out << "d=" << vector.dimension() << '\n';
    char buf[64];
    for (const auto& [v, w] : vector.entries()) {
        std::snprintf(buf, sizeof buf, "%.17g", w);
        out << v.to_binary(vector.dimension()) << ' ' << buf << '\n';
    }
}

}  // namespace cubespec

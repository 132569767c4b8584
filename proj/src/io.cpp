#include "wojda/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace wojda {

namespace {

struct LineScanner {
    std::string_view text;
    std::size_t pos = 0;
    int line_no = 0;

    // next non-comment, non-blank line; false at end
    bool next(std::string_view& out) {
        while (pos < text.size()) {
            std::size_t eol = text.find('\n', pos);
            if (eol == std::string_view::npos) eol = text.size();
            std::string_view line = text.substr(pos, eol - pos);
            pos = eol + 1;
            ++line_no;
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
                line.remove_suffix(1);
            while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
                line.remove_prefix(1);
            if (line.empty() || line.front() == '#') continue;
            out = line;
            return true;
        }
        return false;
    }
};

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tok;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) tok.push_back(line.substr(i, j - i));
        i = j;
    }
    return tok;
}

int parse_int(std::string_view s, int line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError(line, "expected integer, got '" + std::string(s) + "'");
    return value;
}

} // namespace

Digraph parse_digraph(std::string_view text) {
    LineScanner scan{text};
    std::string_view line;
    if (!scan.next(line)) throw ParseError(scan.line_no, "empty input, expected 'n <order>'");
    auto head = split_ws(line);
    if (head.size() != 2 || head[0] != "n")
        throw ParseError(scan.line_no, "expected header 'n <order>'");
    int order = parse_int(head[1], scan.line_no);
    if (order < 0) throw ParseError(scan.line_no, "negative order");
    Digraph g(order);
    while (scan.next(line)) {
        auto tok = split_ws(line);
        if (tok.size() != 2) throw ParseError(scan.line_no, "expected '<u> <v>'");
        int u = parse_int(tok[0], scan.line_no);
        int v = parse_int(tok[1], scan.line_no);
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw ParseError(scan.line_no, "vertex out of range");
        if (u == v) throw ParseError(scan.line_no, "self-loop");
        if (g.has_arc(u, v)) throw ParseError(scan.line_no, "duplicate arc");
        g.add_arc(u, v);
    }
    return g;
}

std::string emit_digraph(const Digraph& g) {
    std::ostringstream out;
    out << "n " << g.order() << "\n";
    for (auto [u, v] : g.arcs()) out << u << " " << v << "\n";
    return out.str();
}

MapFile parse_map(std::string_view text) {
    MapFile file;
    LineScanner scan{text};
    std::string_view line;
    int pending_collisions = -1;
    while (scan.next(line)) {
        auto tok = split_ws(line);
        if (pending_collisions > 0) {
            if (tok.size() != 2) throw ParseError(scan.line_no, "expected collision arc '<u> <v>'");
            file.collisions.emplace_back(parse_int(tok[0], scan.line_no), parse_int(tok[1], scan.line_no));
            --pending_collisions;
            continue;
        }
        if (pending_collisions == 0)
            throw ParseError(scan.line_no, "content after collision list");
        if (tok.size() == 2 && tok[0] == "collisions") {
            pending_collisions = parse_int(tok[1], scan.line_no);
            if (pending_collisions < 0) throw ParseError(scan.line_no, "negative collision count");
            continue;
        }
        if (tok.size() == 3 && tok[1] == "->") {
            file.entries.emplace_back(parse_int(tok[0], scan.line_no), parse_int(tok[2], scan.line_no));
            continue;
        }
        throw ParseError(scan.line_no, "expected '<u> -> <v>' or 'collisions <k>'");
    }
    if (pending_collisions > 0) throw ParseError(scan.line_no, "truncated collision list");
    return file;
}

std::string emit_map(const PackingCertificate& cert) {
    std::ostringstream out;
    for (int u = 0; u < cert.map.source_order(); ++u)
        if (cert.map.is_assigned(u)) out << u << " -> " << cert.map.image(u) << "\n";
    out << "collisions " << cert.collisions.size() << "\n";
    for (auto [u, v] : cert.collisions) out << u << " " << v << "\n";
    return out.str();
}

Injection map_file_to_injection(const MapFile& file, int source_order, int target_order) {
    Injection inj(source_order, target_order);
    for (auto [u, v] : file.entries) {
        if (u < 0 || u >= source_order || v < 0 || v >= target_order)
            throw RangeError("map entry out of range");
        inj.assign(u, v);
    }
    return inj;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

} // namespace wojda

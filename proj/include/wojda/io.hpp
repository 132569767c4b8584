#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wojda/digraph.hpp"
#include "wojda/injection.hpp"

namespace wojda {

// DGR1 text format:
//   n <order>
//   <u> <v>        one arc per line, 0-based
// lines starting with '#' are comments; duplicates and self-loops are
// parse errors. emit() lists arcs lexicographically, so
// emit(parse(x)) == normalize(x) byte for byte.
Digraph parse_digraph(std::string_view text);
std::string emit_digraph(const Digraph& g);

// MAP1 text format:
//   <u> -> <v>     one assignment per line, sources ascending on emit
//   collisions <k>
//   <u> <v>        k collision arcs
// '#' comment lines allowed.
struct MapFile {
    std::vector<std::pair<int, int>> entries;
    std::vector<Arc> collisions;
};
MapFile parse_map(std::string_view text);
std::string emit_map(const PackingCertificate& cert);

// Rebuild an Injection from a parsed MAP1 against known orders.
Injection map_file_to_injection(const MapFile& file, int source_order, int target_order);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

} // namespace wojda

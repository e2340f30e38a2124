#pragma once

#include <string>
#include <vector>

#include "pbs/core.hpp"
#include "pbs/reduction.hpp"

namespace pbs {

struct BundleFile {
  PolylineBundle bundle;
  ToleranceSpec tol;
};

// Bundle JSON: {"delta": d, "bends": [[x,y],...], "polylines": [[i,...],...]}.
// Numbers are written with 17 significant digits so parse(write(x)) is exact
// and output is byte-stable.
BundleFile parse_bundle(const std::string& path);
BundleFile parse_bundle_text(const std::string& text);
std::string bundle_to_json(const PolylineBundle& bundle, double delta);
void write_bundle(const std::string& path, const PolylineBundle& bundle,
                  double delta);

// Solution JSON: {"retained": [i, ...]} (ascending).
std::vector<int> parse_solution(const std::string& path);
std::string solution_to_json(const std::vector<int>& retained);
void write_solution(const std::string& path, const std::vector<int>& retained);

// Graph text: first line "n m", then m lines "u v" (0-based).
Graph parse_graph(const std::string& path);
Graph parse_graph_text(const std::string& text);

// Gadget layout metadata for downstream verification and extraction.
std::string layout_to_json(const GadgetLayout& layout);
GadgetLayout layout_from_json(const std::string& text);
GadgetLayout parse_layout(const std::string& path);
void write_layout(const std::string& path, const GadgetLayout& layout);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace pbs

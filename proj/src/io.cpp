#include "pbs/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pbs/errors.hpp"

namespace pbs {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
  if (!out) throw Error("write failed for " + path);
}

namespace {

std::string num17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(what + ": " + e.what());
  }
}

double get_number(const json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_number()) {
    throw ParseError("missing or non-numeric field \"" + field + "\"");
  }
  return j[field].get<double>();
}

}  // namespace

BundleFile parse_bundle_text(const std::string& text) {
  const json j = parse_json(text, "bundle");
  BundleFile result;
  const double delta = get_number(j, "delta");
  if (!(delta > 0.0)) throw InvariantViolation("bundle: delta must be > 0");
  result.tol = ToleranceSpec::with_default_eps(delta);

  if (!j.contains("bends") || !j["bends"].is_array()) {
    throw ParseError("bundle: missing \"bends\" array");
  }
  for (const auto& b : j["bends"]) {
    if (!b.is_array() || b.size() != 2 || !b[0].is_number() ||
        !b[1].is_number()) {
      throw ParseError("bundle: each bend must be [x, y]");
    }
    result.bundle.bends.push_back({b[0].get<double>(), b[1].get<double>()});
  }
  if (!j.contains("polylines") || !j["polylines"].is_array()) {
    throw ParseError("bundle: missing \"polylines\" array");
  }
  for (const auto& p : j["polylines"]) {
    if (!p.is_array()) throw ParseError("bundle: polyline must be an array");
    std::vector<int> poly;
    for (const auto& idx : p) {
      if (!idx.is_number_integer()) {
        throw ParseError("bundle: polyline entries must be integers");
      }
      poly.push_back(idx.get<int>());
    }
    result.bundle.polylines.push_back(std::move(poly));
  }
  check_bundle(result.bundle);
  return result;
}

BundleFile parse_bundle(const std::string& path) {
  return parse_bundle_text(read_file(path));
}

std::string bundle_to_json(const PolylineBundle& bundle, double delta) {
  std::ostringstream out;
  out << "{\n  \"delta\": " << num17(delta) << ",\n  \"bends\": [";
  for (size_t i = 0; i < bundle.bends.size(); ++i) {
    out << (i ? ", " : "") << "[" << num17(bundle.bends[i].x) << ", "
        << num17(bundle.bends[i].y) << "]";
  }
  out << "],\n  \"polylines\": [";
  for (size_t p = 0; p < bundle.polylines.size(); ++p) {
    out << (p ? ", " : "") << "[";
    for (size_t i = 0; i < bundle.polylines[p].size(); ++i) {
      out << (i ? ", " : "") << bundle.polylines[p][i];
    }
    out << "]";
  }
  out << "]\n}\n";
  return out.str();
}

void write_bundle(const std::string& path, const PolylineBundle& bundle,
                  double delta) {
  write_file(path, bundle_to_json(bundle, delta));
}

std::vector<int> parse_solution(const std::string& path) {
  const json j = parse_json(read_file(path), "solution");
  if (!j.contains("retained") || !j["retained"].is_array()) {
    throw ParseError("solution: missing \"retained\" array");
  }
  std::vector<int> retained;
  for (const auto& idx : j["retained"]) {
    if (!idx.is_number_integer()) {
      throw ParseError("solution: retained entries must be integers");
    }
    retained.push_back(idx.get<int>());
  }
  return retained;
}

std::string solution_to_json(const std::vector<int>& retained) {
  std::ostringstream out;
  out << "{\n  \"retained\": [";
  for (size_t i = 0; i < retained.size(); ++i) {
    out << (i ? ", " : "") << retained[i];
  }
  out << "]\n}\n";
  return out.str();
}

void write_solution(const std::string& path, const std::vector<int>& retained) {
  write_file(path, solution_to_json(retained));
}

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  Graph graph;
  int m = 0;
  if (!(in >> graph.n >> m)) {
    throw ParseError("graph: expected header line \"n m\"");
  }
  for (int i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) {
      throw ParseError("graph: expected " + std::to_string(m) +
                       " edge lines, got " + std::to_string(i));
    }
    if (u > v) std::swap(u, v);
    graph.edges.push_back({u, v});
  }
  std::sort(graph.edges.begin(), graph.edges.end());
  check_graph(graph);
  return graph;
}

Graph parse_graph(const std::string& path) {
  return parse_graph_text(read_file(path));
}

std::string layout_to_json(const GadgetLayout& layout) {
  json j;
  j["graph"]["n"] = layout.graph.n;
  j["graph"]["edges"] = json::array();
  for (const auto& [u, v] : layout.graph.edges) {
    j["graph"]["edges"].push_back({u, v});
  }
  j["delta"] = layout.delta;
  j["gamma"] = layout.gamma;
  j["x_spacing"] = layout.x_spacing;
  j["two_polylines"] = layout.two_polylines;
  j["vertex_gadgets"] = json::array();
  for (const auto& vg : layout.vertex_gadgets) {
    j["vertex_gadgets"].push_back({{"vertex", vg.vertex},
                                   {"polyline", vg.polyline},
                                   {"offset", vg.offset},
                                   {"bends", vg.bends}});
  }
  j["edge_gadgets"] = json::array();
  for (const auto& eg : layout.edge_gadgets) {
    j["edge_gadgets"].push_back({{"u", eg.u},
                                 {"v", eg.v},
                                 {"polyline", eg.polyline},
                                 {"offset", eg.offset},
                                 {"bends", eg.bends},
                                 {"r", eg.r},
                                 {"tilted", eg.tilted}});
  }
  j["neighborhood_gadgets"] = json::array();
  for (const auto& ng : layout.neighborhood_gadgets) {
    j["neighborhood_gadgets"].push_back(
        {{"vertex", ng.vertex},
         {"polyline", ng.polyline},
         {"offset", ng.offset},
         {"bends", ng.bends},
         {"shared_positions", ng.shared_positions},
         {"block_r", ng.block_r},
         {"span", ng.span}});
  }
  j["connectors"] = layout.connectors;
  return j.dump(2) + "\n";
}

GadgetLayout layout_from_json(const std::string& text) {
  const json j = parse_json(text, "layout");
  GadgetLayout layout;
  try {
    layout.graph.n = j.at("graph").at("n").get<int>();
    for (const auto& e : j.at("graph").at("edges")) {
      layout.graph.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    }
    layout.delta = j.at("delta").get<double>();
    layout.gamma = j.at("gamma").get<double>();
    layout.x_spacing = j.at("x_spacing").get<double>();
    layout.two_polylines = j.at("two_polylines").get<bool>();
    for (const auto& g : j.at("vertex_gadgets")) {
      VertexGadget vg;
      vg.vertex = g.at("vertex").get<int>();
      vg.polyline = g.at("polyline").get<int>();
      vg.offset = g.at("offset").get<int>();
      vg.bends = g.at("bends").get<std::vector<int>>();
      layout.vertex_gadgets.push_back(std::move(vg));
    }
    for (const auto& g : j.at("edge_gadgets")) {
      EdgeGadget eg;
      eg.u = g.at("u").get<int>();
      eg.v = g.at("v").get<int>();
      eg.polyline = g.at("polyline").get<int>();
      eg.offset = g.at("offset").get<int>();
      eg.bends = g.at("bends").get<std::vector<int>>();
      eg.r = g.at("r").get<double>();
      eg.tilted = g.at("tilted").get<bool>();
      layout.edge_gadgets.push_back(std::move(eg));
    }
    for (const auto& g : j.at("neighborhood_gadgets")) {
      NeighborhoodGadget ng;
      ng.vertex = g.at("vertex").get<int>();
      ng.polyline = g.at("polyline").get<int>();
      ng.offset = g.at("offset").get<int>();
      ng.bends = g.at("bends").get<std::vector<int>>();
      ng.shared_positions = g.at("shared_positions").get<std::vector<int>>();
      ng.block_r = g.at("block_r").get<std::vector<double>>();
      ng.span = g.at("span").get<double>();
      layout.neighborhood_gadgets.push_back(std::move(ng));
    }
    layout.connectors = j.at("connectors").get<std::vector<int>>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("layout: ") + e.what());
  }
  check_graph(layout.graph);
  return layout;
}

GadgetLayout parse_layout(const std::string& path) {
  return layout_from_json(read_file(path));
}

void write_layout(const std::string& path, const GadgetLayout& layout) {
  write_file(path, layout_to_json(layout));
}

}  // namespace pbs

#include "seplat/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "seplat/error.hpp"

namespace seplat::io {

using nlohmann::json;

namespace {

struct AxisNames {
  const char* row_min;
  const char* row_max;
  const char* col_min;
  const char* col_max;
};

AxisNames axis_names(lattice::CellKind kind) {
  if (kind == lattice::CellKind::Diamond) return {"imin", "imax", "jmin", "jmax"};
  return {"kmin", "kmax", "mmin", "mmax"};
}

json window_json(lattice::CellKind kind, const lattice::Window& w) {
  const AxisNames n = axis_names(kind);
  return json{{n.row_min, w.row_min}, {n.row_max, w.row_max}, {n.col_min, w.col_min},
              {n.col_max, w.col_max}};
}

lattice::Window window_from_json(lattice::CellKind kind, const json& j) {
  const AxisNames n = axis_names(kind);
  lattice::Window w{j.at(n.row_min).get<int>(), j.at(n.row_max).get<int>(),
                    j.at(n.col_min).get<int>(), j.at(n.col_max).get<int>()};
  if (!w.valid()) throw Error(ErrorCode::Parse, "empty window");
  return w;
}

}  // namespace

lattice::CellKind GraphDocument::cell_kind() const {
  if (!is_lattice()) throw Error(ErrorCode::InvalidQuery, "graph is not a lattice graph");
  return lattice::parse_kind(kind);
}

GraphDocument lattice_document(lattice::CellKind kind, const lattice::Window& w) {
  return {lattice::to_string(kind), lattice::build_graph(kind, w), w};
}

std::string to_json(const GraphDocument& doc) {
  const MixedGraph& g = doc.graph;
  json directed = json::array();
  for (const auto& [u, v] : g.directed_edges()) directed.push_back({g.label(u), g.label(v)});
  json bidirected = json::array();
  for (const auto& [u, v] : g.bidirected_edges()) bidirected.push_back({g.label(u), g.label(v)});
  json j{{"kind", doc.kind},
         {"vertices", g.labels()},
         {"directed", std::move(directed)},
         {"bidirected", std::move(bidirected)}};
  if (doc.window) j["window"] = window_json(doc.cell_kind(), *doc.window);
  return j.dump(2) + "\n";
}

GraphDocument graph_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    GraphDocument doc;
    doc.kind = j.value("kind", std::string("abstract"));
    if (doc.kind != "abstract") lattice::parse_kind(doc.kind);
    auto pairs = [&](const char* key) {
      std::vector<LabelPair> out;
      if (!j.contains(key)) return out;
      for (const auto& e : j.at(key)) {
        if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::Parse, "edge must be [u, v]");
        out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
      }
      return out;
    };
    doc.graph = MixedGraph::build(j.at("vertices").get<std::vector<std::string>>(),
                                  pairs("directed"), pairs("bidirected"));
    if (j.contains("window") && !j.at("window").is_null()) {
      doc.window = window_from_json(doc.cell_kind(), j.at("window"));
    }
    return doc;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

std::string to_dot(const MixedGraph& g) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (const auto& label : g.labels()) out << "  \"" << label << "\";\n";
  for (const auto& [u, v] : g.directed_edges()) {
    out << "  \"" << g.label(u) << "\" -> \"" << g.label(v) << "\";\n";
  }
  for (const auto& [u, v] : g.bidirected_edges()) {
    out << "  \"" << g.label(u) << "\" -> \"" << g.label(v) << "\" [dir=both];\n";
  }
  out << "}\n";
  return out.str();
}

std::string cpts_to_json(const markov::CptSet& cpts) {
  json j = json::object();
  for (const auto& [vertex, cpt] : cpts) {
    json table = json::object();
    for (std::size_t row = 0; row < cpt.p1.size(); ++row) {
      std::string key;
      for (std::size_t k = 0; k < cpt.parents.size(); ++k) key += ((row >> k) & 1U) ? '1' : '0';
      table[key] = cpt.p1[row];
    }
    j[vertex] = json{{"parents", cpt.parents}, {"p1", std::move(table)}};
  }
  return j.dump(2) + "\n";
}

markov::CptSet cpts_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    markov::CptSet out;
    for (const auto& [vertex, entry] : j.items()) {
      markov::Cpt cpt;
      cpt.parents = entry.at("parents").get<std::vector<std::string>>();
      const std::size_t rows = std::size_t{1} << cpt.parents.size();
      cpt.p1.assign(rows, -1.0);
      for (const auto& [key, value] : entry.at("p1").items()) {
        if (key.size() != cpt.parents.size()) throw Error(ErrorCode::Parse, "bad row key " + key);
        std::size_t row = 0;
        for (std::size_t k = 0; k < key.size(); ++k) {
          if (key[k] != '0' && key[k] != '1') throw Error(ErrorCode::Parse, "bad row key " + key);
          if (key[k] == '1') row |= std::size_t{1} << k;
        }
        cpt.p1[row] = value.get<double>();
      }
      for (double p : cpt.p1) {
        if (p < 0.0) throw Error(ErrorCode::Parse, "missing CPT row for " + vertex);
      }
      out.emplace(vertex, std::move(cpt));
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Parse, "cannot write " + path);
  out << content;
}

}  // namespace seplat::io

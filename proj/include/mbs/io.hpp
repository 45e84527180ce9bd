#pragma once

// JSON file formats and report serialization.
//
// Surface file:
//   {"branches": ["l1", ...],
//    "sectors": [{"id": "s1", "genus": 0,
//                 "boundary": [{"branch": "l1", "odegree": 2}, ...]}, ...]}
// A boundary entry may carry "id"; otherwise its prebranch is named
// "<sector>.<k>" with k counting from 1. "orientable": false marks a sector
// that validation will reject. "boundary_count" may be given explicitly; it
// defaults to the length of "boundary", and validation flags any mismatch.
//
// Graph file:
//   {"vertices": ["v1", ...], "edges": [{"id": "e1", "from": "v1", "to": "v2"}, ...]}

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "mbs/abelian_group.hpp"
#include "mbs/bounds.hpp"
#include "mbs/core.hpp"
#include "mbs/graphs.hpp"
#include "mbs/neighborhood.hpp"

namespace mbs {

using nlohmann::json;

namespace detail {

inline const json& field(const json& j, const std::string& key, const std::string& where) {
  const std::string at = where.empty() ? "/" : where;
  if (!j.is_object()) throw InputError(at + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(at + ": missing field \"" + key + "\"");
  return *it;
}

inline std::string string_field(const json& j, const std::string& key, const std::string& where) {
  const auto& v = field(j, key, where);
  if (!v.is_string()) throw InputError(where + "/" + key + ": expected a string");
  return v.get<std::string>();
}

inline long long integer_field(const json& j, const std::string& key, const std::string& where) {
  const auto& v = field(j, key, where);
  if (!v.is_number_integer()) throw InputError(where + "/" + key + ": expected an integer");
  return v.get<long long>();
}

inline int small_integer(long long v, const std::string& where) {
  if (v < -(1LL << 30) || v > (1LL << 30)) throw InputError(where + ": integer out of range");
  return static_cast<int>(v);
}

inline const json& array_field(const json& j, const std::string& key, const std::string& where) {
  const auto& v = field(j, key, where);
  if (!v.is_array()) throw InputError(where + "/" + key + ": expected an array");
  return v;
}

}  // namespace detail

/// Parses JSON text; syntax errors report line and column.
inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": malformed JSON");
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline MultibranchedSurface surface_from_json(const json& j) {
  std::vector<std::string> branches;
  std::vector<Sector> sectors;
  std::vector<Prebranch> prebranches;

  const auto& bs = detail::array_field(j, "branches", "");
  for (std::size_t i = 0; i < bs.size(); ++i) {
    if (!bs[i].is_string()) throw InputError("/branches/" + std::to_string(i) + ": expected a string");
    branches.push_back(bs[i].get<std::string>());
  }
  const auto& ss = detail::array_field(j, "sectors", "");
  for (std::size_t i = 0; i < ss.size(); ++i) {
    const std::string where = "/sectors/" + std::to_string(i);
    Sector s;
    s.id = detail::string_field(ss[i], "id", where);
    s.shape.genus = detail::small_integer(detail::integer_field(ss[i], "genus", where), where + "/genus");
    if (auto it = ss[i].find("orientable"); it != ss[i].end()) {
      if (!it->is_boolean()) throw InputError(where + "/orientable: expected a boolean");
      s.shape.orientable = it->get<bool>();
    }
    const auto& boundary = detail::array_field(ss[i], "boundary", where);
    s.shape.boundary_count = static_cast<int>(boundary.size());
    if (ss[i].contains("boundary_count"))
      s.shape.boundary_count =
          detail::small_integer(detail::integer_field(ss[i], "boundary_count", where), where + "/boundary_count");
    for (std::size_t k = 0; k < boundary.size(); ++k) {
      const std::string at = where + "/boundary/" + std::to_string(k);
      Prebranch p;
      p.id = boundary[k].contains("id") ? detail::string_field(boundary[k], "id", at) : s.id + "." + std::to_string(k + 1);
      p.sector = s.id;
      p.branch = detail::string_field(boundary[k], "branch", at);
      p.oriented_degree = detail::small_integer(detail::integer_field(boundary[k], "odegree", at), at + "/odegree");
      prebranches.push_back(std::move(p));
    }
    sectors.push_back(std::move(s));
  }
  return {std::move(branches), std::move(sectors), std::move(prebranches)};
}

/// Writes explicit prebranch ids only where they differ from the default.
inline json surface_to_json(const MultibranchedSurface& x) {
  json sectors = json::array();
  for (std::size_t s = 0; s < x.sector_count(); ++s) {
    const auto& sector = x.sectors()[s];
    json boundary = json::array();
    std::size_t k = 0;
    for (auto p : x.boundary_of(s)) {
      const auto& pre = x.prebranches()[p];
      json entry = {{"branch", pre.branch}, {"odegree", pre.oriented_degree}};
      if (pre.id != sector.id + "." + std::to_string(++k)) entry["id"] = pre.id;
      boundary.push_back(std::move(entry));
    }
    json js = {{"id", sector.id}, {"genus", sector.shape.genus}, {"boundary", std::move(boundary)}};
    if (!sector.shape.orientable) js["orientable"] = false;
    if (sector.shape.boundary_count != static_cast<int>(k)) js["boundary_count"] = sector.shape.boundary_count;
    sectors.push_back(std::move(js));
  }
  return {{"branches", x.branches()}, {"sectors", std::move(sectors)}};
}

inline Multigraph graph_from_json(const json& j) {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  const auto& vs = detail::array_field(j, "vertices", "");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!vs[i].is_string()) throw InputError("/vertices/" + std::to_string(i) + ": expected a string");
    vertices.push_back(vs[i].get<std::string>());
  }
  const auto& es = detail::array_field(j, "edges", "");
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string where = "/edges/" + std::to_string(i);
    edges.push_back({detail::string_field(es[i], "id", where), detail::string_field(es[i], "from", where),
                     detail::string_field(es[i], "to", where)});
  }
  return {std::move(vertices), std::move(edges)};
}

inline json graph_to_json(const Multigraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({{"id", e.id}, {"from", e.from}, {"to", e.to}});
  return {{"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

inline MultibranchedSurface load_surface(const std::string& path) { return surface_from_json(parse_json(read_file(path))); }
inline Multigraph load_graph(const std::string& path) { return graph_from_json(parse_json(read_file(path))); }

// Reports. Field names follow the C++ member names.

inline void to_json(json& j, const AbelianGroup& g) {
  j = {{"group", to_string(g)}, {"free_rank", g.free_rank}, {"torsion", g.torsion}};
}
inline void from_json(const json& j, AbelianGroup& g) {
  g.free_rank = j.at("free_rank").get<std::int64_t>();
  g.torsion = j.at("torsion").get<std::vector<std::int64_t>>();
}

inline void to_json(json& j, const BoundarySurface& b) {
  json comps = json::array();
  for (const auto& c : b.components) {
    json sides = json::array();
    for (const auto& s : c.sides) sides.push_back({{"sector", s.sector}, {"side", s.side > 0 ? "+" : "-"}});
    comps.push_back({{"sides", std::move(sides)}, {"euler_characteristic", c.euler_characteristic}, {"genus", c.genus}});
  }
  j = {{"components", std::move(comps)}, {"total_components", b.total_components}, {"total_genus", b.total_genus}};
}

inline void to_json(json& j, const GenusRange& r) {
  j = {{"min_genus", r.min_genus},
       {"max_genus", r.max_genus},
       {"witness_min", to_string(r.witness_min)},
       {"witness_max", to_string(r.witness_max)},
       {"exact", r.exact},
       {"examined", r.examined},
       {"total_systems", r.total_systems}};
}

inline void to_json(json& j, const GenusBoundsReport& r) {
  j = {{"rank_h1", r.rank_h1},
       {"min_boundary_genus", r.min_boundary_genus},
       {"max_boundary_genus", r.max_boundary_genus},
       {"min_boundary_genus_exact", r.min_boundary_genus_exact},
       {"max_boundary_genus_exact", r.max_boundary_genus_exact},
       {"lower_bound_min_genus", r.lower_bound_min_genus},
       {"lower_bound_max_genus", r.lower_bound_max_genus},
       {"lower_bound_min_genus_raw", r.lower_bound_min_genus_raw},
       {"lower_bound_max_genus_raw", r.lower_bound_max_genus_raw},
       {"upper_bound_max_genus", r.upper_bound_max_genus},
       {"upper_bound_dual_graph", "not computed"},
       {"s3_obstruction", to_string(r.s3_obstruction)},
       {"witness_min", to_string(r.witness_min)},
       {"witness_max", to_string(r.witness_max)},
       {"systems_examined", r.systems_examined},
       {"total_systems", r.total_systems}};
}

inline S3Verdict parse_s3_verdict(const std::string& s) {
  if (s == "pass") return S3Verdict::pass;
  if (s == "fail") return S3Verdict::fail;
  if (s == "inconclusive") return S3Verdict::inconclusive;
  throw InputError("unknown S^3 verdict '" + s + "'");
}

inline void from_json(const json& j, GenusBoundsReport& r) {
  r.rank_h1 = j.at("rank_h1").get<long long>();
  r.min_boundary_genus = j.at("min_boundary_genus").get<long long>();
  r.max_boundary_genus = j.at("max_boundary_genus").get<long long>();
  r.min_boundary_genus_exact = j.at("min_boundary_genus_exact").get<bool>();
  r.max_boundary_genus_exact = j.at("max_boundary_genus_exact").get<bool>();
  r.lower_bound_min_genus = j.at("lower_bound_min_genus").get<long long>();
  r.lower_bound_max_genus = j.at("lower_bound_max_genus").get<long long>();
  r.lower_bound_min_genus_raw = j.at("lower_bound_min_genus_raw").get<long long>();
  r.lower_bound_max_genus_raw = j.at("lower_bound_max_genus_raw").get<long long>();
  r.upper_bound_max_genus = j.at("upper_bound_max_genus").get<long long>();
  r.s3_obstruction = parse_s3_verdict(j.at("s3_obstruction").get<std::string>());
  r.witness_min = parse_permutation_system(j.at("witness_min").get<std::string>());
  r.witness_max = parse_permutation_system(j.at("witness_max").get<std::string>());
  r.systems_examined = j.at("systems_examined").get<std::uint64_t>();
  r.total_systems = j.at("total_systems").get<std::uint64_t>();
}

inline void to_json(json& j, const EmbeddingResult& r) {
  j = {{"face_count", r.face_count}, {"face_walks", r.face_walks}, {"genus", r.genus}};
}

inline void to_json(json& j, const ProductTheoremReport& r) {
  j = {{"passed", r.passed},
       {"rotation_systems", r.rotation_systems},
       {"rank_h1", r.rank_h1},
       {"min_genus", r.min_genus},
       {"max_genus", r.max_genus},
       {"min_boundary_genus", r.min_boundary_genus},
       {"max_boundary_genus", r.max_boundary_genus},
       {"counterexample", r.counterexample ? json(*r.counterexample) : json(nullptr)}};
}

}  // namespace mbs

#pragma once

// Multigraphs with rotation systems, cellular embedding genus, Xuong's
// maximum-genus formula, and the bridge G -> G x S^1.
//
// Darts: edge e has a tail dart "e-" at its `from` vertex and a head dart
// "e+" at its `to` vertex (a loop has both at the same vertex). In G x S^1
// the dart names become prebranch names, with oriented degree -1 for tails
// and +1 for heads, so a rotation system of G is literally a circular
// permutation system of G x S^1.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/pending/disjoint_sets.hpp>

#include "mbs/core.hpp"
#include "mbs/cyclic_space.hpp"
#include "mbs/homology.hpp"
#include "mbs/neighborhood.hpp"
#include "mbs/parallel.hpp"
#include "mbs/permutation.hpp"

namespace mbs {

struct Edge {
  std::string id;
  std::string from;
  std::string to;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(std::vector<std::string> vertices, std::vector<Edge> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      if (!vertex_lookup_.try_emplace(vertices_[v], v).second)
        throw InputError("graph: duplicate vertex id '" + vertices_[v] + "'");
    incident_.resize(vertices_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const auto& edge = edges_[e];
      if (!edge_lookup_.try_emplace(edge.id, e).second) throw InputError("graph: duplicate edge id '" + edge.id + "'");
      auto u = vertex_lookup_.find(edge.from), w = vertex_lookup_.find(edge.to);
      if (u == vertex_lookup_.end()) throw InputError("graph: edge '" + edge.id + "' has unknown endpoint '" + edge.from + "'");
      if (w == vertex_lookup_.end()) throw InputError("graph: edge '" + edge.id + "' has unknown endpoint '" + edge.to + "'");
      dart_vertex_.push_back(u->second);
      dart_vertex_.push_back(w->second);
      incident_[u->second].push_back(2 * e);
      incident_[w->second].push_back(2 * e + 1);
    }
    for (auto& darts : incident_)
      std::sort(darts.begin(), darts.end(), [&](auto a, auto b) { return dart_name(a) < dart_name(b); });
  }

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t dart_count() const { return 2 * edges_.size(); }

  std::optional<std::size_t> vertex_index(std::string_view id) const {
    auto it = vertex_lookup_.find(id);
    if (it == vertex_lookup_.end()) return std::nullopt;
    return it->second;
  }

  /// Dart 2e is the tail of edge e, dart 2e + 1 its head.
  static std::size_t reverse(std::size_t dart) { return dart ^ 1U; }
  std::size_t dart_vertex(std::size_t dart) const { return dart_vertex_[dart]; }
  std::string dart_name(std::size_t dart) const { return edges_[dart / 2].id + (dart % 2 ? "+" : "-"); }

  std::optional<std::size_t> dart_index(std::string_view name) const {
    if (name.size() < 2 || (name.back() != '+' && name.back() != '-')) return std::nullopt;
    auto it = edge_lookup_.find(name.substr(0, name.size() - 1));
    if (it == edge_lookup_.end()) return std::nullopt;
    return 2 * it->second + (name.back() == '+' ? 1 : 0);
  }

  /// Darts at a vertex, sorted by name.
  const std::vector<std::size_t>& darts_at(std::size_t vertex) const { return incident_[vertex]; }
  std::size_t degree(std::size_t vertex) const { return incident_[vertex].size(); }

  bool has_isolated_vertex() const {
    return std::any_of(incident_.begin(), incident_.end(), [](const auto& d) { return d.empty(); });
  }

  std::size_t component_count() const {
    std::vector<std::size_t> rank(vertex_count()), parent(vertex_count());
    boost::disjoint_sets<std::size_t*, std::size_t*> sets(rank.data(), parent.data());
    for (std::size_t v = 0; v < vertex_count(); ++v) sets.make_set(v);
    std::size_t count = vertex_count();
    for (std::size_t e = 0; e < edge_count(); ++e) {
      auto a = sets.find_set(dart_vertex_[2 * e]), b = sets.find_set(dart_vertex_[2 * e + 1]);
      if (a != b) {
        sets.link(a, b);
        --count;
      }
    }
    return count;
  }

  bool connected() const { return component_count() == 1; }

  /// beta(G) = E - V + C.
  long long betti_number() const {
    return static_cast<long long>(edge_count()) - static_cast<long long>(vertex_count()) +
           static_cast<long long>(component_count());
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::map<std::string, std::size_t, std::less<>> vertex_lookup_, edge_lookup_;
  std::vector<std::size_t> dart_vertex_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// Per-vertex cyclic order of darts, keyed by vertex id; dart names as in
/// Multigraph::dart_name. Literal form: "v1:e1+,e2-,e1-;v2:...".
class RotationSystem {
 public:
  RotationSystem() = default;
  explicit RotationSystem(CircularPermutationSystem cycles) : cycles_(std::move(cycles)) {}

  const CircularPermutationSystem& cycles() const { return cycles_; }

  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;

 private:
  CircularPermutationSystem cycles_;
};

inline RotationSystem parse_rotation_system(std::string_view text) {
  auto cycles = parse_permutation_system(text);
  for (const auto& [vertex, darts] : cycles.cycles())
    for (const auto& d : darts)
      if (d.size() < 2 || (d.back() != '+' && d.back() != '-'))
        throw InputError("rotation system: dart '" + d + "' at vertex '" + vertex + "' needs a +/- end tag");
  return RotationSystem(std::move(cycles));
}

inline std::string to_string(const RotationSystem& r) { return to_string(r.cycles()); }

struct EmbeddingResult {
  std::size_t face_count = 0;
  std::vector<std::vector<std::string>> face_walks;
  long long genus = 0;
};

namespace detail {

inline void require_embeddable(const Multigraph& g) {
  if (g.vertex_count() == 0) throw InputError("graph has no vertices");
  if (g.has_isolated_vertex()) throw InputError("graph has an isolated vertex");
  if (!g.connected()) throw InputError("cellular embeddings need a connected graph");
}

/// Vertices in lexicographic id order, each with its darts sorted by name.
inline CyclicOrderSpace::Orders rotation_groups(const Multigraph& g, std::vector<std::size_t>* vertex_order = nullptr) {
  std::vector<std::size_t> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return g.vertices()[a] < g.vertices()[b]; });
  CyclicOrderSpace::Orders groups;
  for (auto v : order) groups.push_back(g.darts_at(v));
  if (vertex_order) *vertex_order = std::move(order);
  return groups;
}

inline RotationSystem to_rotation(const Multigraph& g, const std::vector<std::size_t>& vertex_order,
                                  const CyclicOrderSpace::Orders& orders) {
  CircularPermutationSystem::Cycles cycles;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    std::vector<std::string> names;
    for (auto d : orders[i]) names.push_back(g.dart_name(d));
    cycles.emplace(g.vertices()[vertex_order[i]], std::move(names));
  }
  return RotationSystem(CircularPermutationSystem(std::move(cycles)));
}

/// Dart cycles of a rotation system in canonical vertex order.
inline CyclicOrderSpace::Orders resolve(const Multigraph& g, const RotationSystem& rho) {
  std::vector<std::size_t> vertex_order;
  auto groups = rotation_groups(g, &vertex_order);
  CyclicOrderSpace::Orders orders;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto& vertex = g.vertices()[vertex_order[i]];
    const auto* cycle = rho.cycles().cycle(vertex);
    if (!cycle) throw InputError("rotation system: no cycle for vertex '" + vertex + "'");
    std::vector<std::size_t> darts;
    for (const auto& name : *cycle) {
      auto d = g.dart_index(name);
      if (!d || g.dart_vertex(*d) != vertex_order[i])
        throw InputError("rotation system: '" + name + "' is not a dart at vertex '" + vertex + "'");
      darts.push_back(*d);
    }
    auto a = darts, b = groups[i];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw InputError("rotation system: cycle at vertex '" + vertex + "' must list each dart exactly once");
    orders.push_back(std::move(darts));
  }
  for (const auto& [vertex, _] : rho.cycles().cycles())
    if (!g.vertex_index(vertex)) throw InputError("rotation system: unknown vertex '" + vertex + "'");
  return orders;
}

/// Face tracing with reusable buffers. The face successor of a dart is the
/// rotation successor of its reverse.
class FaceTracer {
 public:
  explicit FaceTracer(std::size_t darts) : next_(darts), seen_(darts) {}

  void load(const CyclicOrderSpace::Orders& orders) {
    for (const auto& cycle : orders)
      for (std::size_t i = 0; i < cycle.size(); ++i) next_[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }

  std::size_t successor(std::size_t dart) const { return next_[Multigraph::reverse(dart)]; }

  std::size_t count_faces() {
    std::fill(seen_.begin(), seen_.end(), char{0});
    std::size_t faces = 0;
    for (std::size_t start = 0; start < next_.size(); ++start) {
      if (seen_[start]) continue;
      ++faces;
      for (std::size_t d = start; !seen_[d]; d = successor(d)) seen_[d] = 1;
    }
    return faces;
  }

  std::vector<std::vector<std::size_t>> walks() {
    std::fill(seen_.begin(), seen_.end(), char{0});
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t start = 0; start < next_.size(); ++start) {
      if (seen_[start]) continue;
      out.emplace_back();
      for (std::size_t d = start; !seen_[d]; d = successor(d)) {
        seen_[d] = 1;
        out.back().push_back(d);
      }
    }
    return out;
  }

 private:
  std::vector<std::size_t> next_;
  std::vector<char> seen_;
};

/// V - E + F = 2 - 2g.
inline long long euler_genus(const Multigraph& g, std::size_t faces) {
  return (2 - static_cast<long long>(g.vertex_count()) + static_cast<long long>(g.edge_count()) -
          static_cast<long long>(faces)) / 2;
}

}  // namespace detail

inline EmbeddingResult faces(const Multigraph& g, const RotationSystem& rho) {
  detail::require_embeddable(g);
  auto orders = detail::resolve(g, rho);
  detail::FaceTracer tracer(g.dart_count());
  tracer.load(orders);
  EmbeddingResult out;
  for (const auto& walk : tracer.walks()) {
    std::vector<std::string> names;
    for (auto d : walk) names.push_back(g.dart_name(d));
    out.face_walks.push_back(std::move(names));
  }
  out.face_count = out.face_walks.size();
  out.genus = detail::euler_genus(g, out.face_count);
  return out;
}

/// All rotation systems of a graph in lexicographic order.
class RotationSpace {
 public:
  explicit RotationSpace(Multigraph g) : g_(std::move(g)) {
    space_ = CyclicOrderSpace(detail::rotation_groups(g_, &vertex_order_));
  }

  /// Product over vertices of (deg(v) - 1)!.
  std::uint64_t size() const { return space_.size(); }
  RotationSystem at(std::uint64_t index) const { return rotation(space_.at(index).orders()); }
  RotationSystem rotation(const CyclicOrderSpace::Orders& orders) const {
    return detail::to_rotation(g_, vertex_order_, orders);
  }
  const CyclicOrderSpace& space() const { return space_; }
  const Multigraph& graph() const { return g_; }

 private:
  Multigraph g_;
  std::vector<std::size_t> vertex_order_;
  CyclicOrderSpace space_;
};

inline constexpr std::uint64_t default_graph_guard = 10'000'000;

struct GraphSearchOptions {
  /// Refuse larger search spaces; 0 disables the guard.
  std::uint64_t guard = default_graph_guard;
  unsigned threads = 0;
};

struct GenusSearch {
  long long min_genus = 0;
  long long max_genus = 0;
  RotationSystem witness_min, witness_max;
  std::uint64_t examined = 0;
  std::uint64_t total = 0;
};

/// Exhaustive min and max embedding genus. A chunk stops early once it has
/// seen genus 0 and floor(beta / 2), the a priori extremes; values and
/// smallest-index witnesses are unaffected.
inline GenusSearch embedding_genus_range(const Multigraph& g, const GraphSearchOptions& options = {}) {
  detail::require_embeddable(g);
  RotationSpace space(g);
  GenusSearch out;
  out.total = space.size();
  if (options.guard && out.total > options.guard)
    throw LimitError(std::to_string(out.total) + " rotation systems exceed the guard of " + std::to_string(options.guard) +
                     "; override to search anyway");
  const long long ceiling = g.betti_number() / 2;

  auto e = parallel_extrema(out.total, options.threads, [&](std::uint64_t begin, std::uint64_t end) {
    Extrema local;
    if (begin == end) return local;
    detail::FaceTracer tracer(g.dart_count());
    auto cursor = space.space().at(begin);
    for (auto i = begin; i < end; ++i) {
      tracer.load(cursor.orders());
      local.add(detail::euler_genus(g, tracer.count_faces()), i);
      if (local.min->value == 0 && local.max->value == ceiling) break;
      cursor.advance();
    }
    return local;
  });
  out.examined = e.examined;
  out.min_genus = e.min->value;
  out.max_genus = e.max->value;
  out.witness_min = space.at(e.min->index);
  out.witness_max = space.at(e.max->index);
  return out;
}

struct GenusWitness {
  long long genus = 0;
  RotationSystem witness;
};

inline GenusWitness min_genus(const Multigraph& g, const GraphSearchOptions& options = {}) {
  auto r = embedding_genus_range(g, options);
  return {r.min_genus, r.witness_min};
}

inline GenusWitness max_genus(const Multigraph& g, const GraphSearchOptions& options = {}) {
  auto r = embedding_genus_range(g, options);
  return {r.max_genus, r.witness_max};
}

struct XuongResult {
  long long max_genus = 0;
  long long betti = 0;
  long long deficiency = 0;  // xi(G)
  std::vector<std::string> spanning_tree;
  std::uint64_t trees_examined = 0;
};

/// max g(G) = (beta(G) - xi(G)) / 2, where xi(G) is the least number, over
/// spanning trees T, of components of G - E(T) with an odd number of edges.
inline XuongResult xuong_max_genus(const Multigraph& g, const GraphSearchOptions& options = {}) {
  detail::require_embeddable(g);
  const std::size_t n = g.vertex_count(), m = g.edge_count();
  auto ends = [&](std::size_t e) { return std::pair{g.dart_vertex(2 * e), g.dart_vertex(2 * e + 1)}; };

  XuongResult out;
  out.betti = g.betti_number();
  out.deficiency = static_cast<long long>(m) + 1;
  std::vector<char> in_tree(m, 0), excluded(m, 0);
  std::vector<std::size_t> label(n);
  std::iota(label.begin(), label.end(), 0);

  // Components with an odd number of edges in the cotree.
  auto odd_cotree_components = [&] {
    std::vector<std::size_t> rank(n), parent(n), edges_in(n, 0);
    boost::disjoint_sets<std::size_t*, std::size_t*> sets(rank.data(), parent.data());
    for (std::size_t v = 0; v < n; ++v) sets.make_set(v);
    for (std::size_t e = 0; e < m; ++e)
      if (!in_tree[e]) sets.union_set(ends(e).first, ends(e).second);
    for (std::size_t e = 0; e < m; ++e)
      if (!in_tree[e]) ++edges_in[sets.find_set(ends(e).first)];
    long long odd = 0;
    for (std::size_t v = 0; v < n; ++v) odd += edges_in[v] % 2;
    return odd;
  };

  // Can the tree chosen so far still be completed using edges >= from?
  auto completable = [&](std::size_t from) {
    std::vector<std::size_t> rank(n), parent(n);
    boost::disjoint_sets<std::size_t*, std::size_t*> sets(rank.data(), parent.data());
    for (std::size_t v = 0; v < n; ++v) sets.make_set(v);
    std::size_t count = n;
    for (std::size_t e = 0; e < m; ++e) {
      if (!(in_tree[e] || (e >= from && !excluded[e]))) continue;
      auto a = sets.find_set(ends(e).first), b = sets.find_set(ends(e).second);
      if (a != b) {
        sets.link(a, b);
        --count;
      }
    }
    return count == 1;
  };

  bool done = false;
  auto recurse = [&](auto&& self, std::size_t e, std::size_t tree_edges) -> void {
    if (done) return;
    if (tree_edges + 1 == n) {
      if (options.guard && out.trees_examined >= options.guard)
        throw LimitError("more than " + std::to_string(options.guard) + " spanning trees; override to search anyway");
      ++out.trees_examined;
      long long xi = odd_cotree_components();
      if (xi < out.deficiency) {
        out.deficiency = xi;
        out.spanning_tree.clear();
        for (std::size_t k = 0; k < m; ++k)
          if (in_tree[k]) out.spanning_tree.push_back(g.edges()[k].id);
        if (xi == 0) done = true;
      }
      return;
    }
    if (e == m) return;
    auto [u, w] = ends(e);
    if (label[u] != label[w]) {
      auto saved = label;
      auto from = label[w], to = label[u];
      for (auto& l : label)
        if (l == from) l = to;
      in_tree[e] = 1;
      self(self, e + 1, tree_edges + 1);
      in_tree[e] = 0;
      label = std::move(saved);
    }
    excluded[e] = 1;
    if (completable(e + 1)) self(self, e + 1, tree_edges);
    excluded[e] = 0;
  };
  recurse(recurse, 0, 0);

  out.max_genus = (out.betti - out.deficiency) / 2;
  return out;
}

/// G x S^1: a branch per vertex and an annulus per edge.
inline MultibranchedSurface times_circle(const Multigraph& g) {
  if (g.has_isolated_vertex()) throw InputError("G x S^1 needs a graph without isolated vertices");
  std::vector<Sector> sectors;
  std::vector<Prebranch> prebranches;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edges()[e];
    sectors.push_back({edge.id, SectorShape{0, 2, true}});
    prebranches.push_back({g.dart_name(2 * e), edge.id, edge.from, -1});
    prebranches.push_back({g.dart_name(2 * e + 1), edge.id, edge.to, +1});
  }
  return {g.vertices(), std::move(sectors), std::move(prebranches)};
}

/// The circular permutation system of G x S^1 induced by a rotation system.
inline CircularPermutationSystem rotation_to_permutation(const Multigraph& g, const RotationSystem& rho) {
  detail::resolve(g, rho);
  return rho.cycles();
}

struct ProductTheoremReport {
  bool passed = false;
  std::uint64_t rotation_systems = 0;
  long long rank_h1 = 0;             // of G x S^1
  long long min_genus = 0;           // of G
  long long max_genus = 0;           // of G
  long long min_boundary_genus = 0;  // over permutation systems of G x S^1
  long long max_boundary_genus = 0;
  std::optional<std::string> counterexample;
};

/// Checks, for every rotation system rho of G, that dN(G x S^1; P(rho)) is
/// one torus per face of rho and that rank H1 - g(dN) = 2 g(rho); then, from
/// an independent search over permutation systems of G x S^1, that
/// rank - max g(dN) = 2 min g(G) and rank - min g(dN) = 2 max g(G).
inline ProductTheoremReport verify_product_theorem(const Multigraph& g, const GraphSearchOptions& options = {}) {
  detail::require_embeddable(g);
  RotationSpace rotations(g);
  const auto x = times_circle(g);

  ProductTheoremReport report;
  report.rotation_systems = rotations.size();
  if (options.guard && report.rotation_systems > options.guard)
    throw LimitError(std::to_string(report.rotation_systems) + " rotation systems exceed the guard of " +
                     std::to_string(options.guard) + "; override to verify anyway");
  report.rank_h1 = rank_h1(x);

  // Darts of G and prebranches of G x S^1 correspond by name.
  std::vector<std::size_t> prebranch_of_dart(g.dart_count());
  for (std::size_t d = 0; d < g.dart_count(); ++d) prebranch_of_dart[d] = *x.prebranch_index(g.dart_name(d));

  const detail::TraceModel model(x);
  struct Failure {
    std::uint64_t index;
    std::string reason;
  };
  std::vector<std::optional<Failure>> failures;
  std::mutex failures_mutex;

  auto e = parallel_extrema(report.rotation_systems, options.threads, [&](std::uint64_t begin, std::uint64_t end) {
    Extrema local;
    if (begin == end) return local;
    detail::FaceTracer tracer(g.dart_count());
    detail::StripJoiner joiner(model.pieces);
    CyclicOrderSpace::Orders prebranch_orders;
    std::vector<long long> chi(model.pieces);
    auto cursor = rotations.space().at(begin);
    for (auto i = begin; i < end; ++i) {
      const auto& orders = cursor.orders();
      tracer.load(orders);
      const auto face_count = tracer.count_faces();
      const auto genus = detail::euler_genus(g, face_count);
      local.add(genus, i);

      prebranch_orders.assign(orders.size(), {});
      for (std::size_t k = 0; k < orders.size(); ++k)
        for (auto d : orders[k]) prebranch_orders[k].push_back(prebranch_of_dart[d]);
      const auto components = joiner.join(model, prebranch_orders);
      std::fill(chi.begin(), chi.end(), 0);
      for (std::size_t piece = 0; piece < model.pieces; ++piece) chi[joiner.find(piece)] += model.piece_chi[piece];
      const bool all_tori = std::all_of(chi.begin(), chi.end(), [](long long c) { return c == 0; });
      const long long dn_genus = static_cast<long long>(components) - model.chi;

      std::string reason;
      if (components != face_count)
        reason = std::to_string(components) + " boundary components but " + std::to_string(face_count) + " faces";
      else if (!all_tori)
        reason = "a boundary component is not a torus";
      else if (report.rank_h1 - dn_genus != 2 * genus)
        reason = "rank - g(dN) = " + std::to_string(report.rank_h1 - dn_genus) + " but 2g = " + std::to_string(2 * genus);
      if (!reason.empty()) {
        std::lock_guard lock(failures_mutex);
        failures.push_back(Failure{i, reason});
        break;
      }
      cursor.advance();
    }
    return local;
  });

  report.min_genus = e.min->value;
  report.max_genus = e.max->value;

  std::optional<Failure> first;
  for (const auto& f : failures)
    if (f && (!first || f->index < first->index)) first = f;
  if (first) {
    report.counterexample = "rotation " + to_string(rotations.at(first->index)) + ": " + first->reason;
    return report;
  }

  SearchOptions search;
  search.threads = options.threads;
  auto range = genus_range(x, search);
  report.min_boundary_genus = range.min_genus;
  report.max_boundary_genus = range.max_genus;
  if (report.rank_h1 - range.max_genus != 2 * report.min_genus)
    report.counterexample = "rank - max g(dN) = " + std::to_string(report.rank_h1 - range.max_genus) +
                            " but 2 min g(G) = " + std::to_string(2 * report.min_genus);
  else if (report.rank_h1 - range.min_genus != 2 * report.max_genus)
    report.counterexample = "rank - min g(dN) = " + std::to_string(report.rank_h1 - range.min_genus) +
                            " but 2 max g(G) = " + std::to_string(2 * report.max_genus);
  report.passed = !report.counterexample;
  return report;
}

// Small named graphs.

inline Multigraph bouquet_graph(int loops) {
  std::vector<Edge> edges;
  for (int i = 0; i < loops; ++i) edges.push_back({"a" + std::to_string(i + 1), "v", "v"});
  return {{"v"}, std::move(edges)};
}

inline Multigraph theta_graph() {
  return {{"u", "v"}, {{"e1", "u", "v"}, {"e2", "u", "v"}, {"e3", "u", "v"}}};
}

inline Multigraph complete_graph(int n) {
  std::vector<std::string> vertices;
  for (int i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i + 1));
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      edges.push_back({"e" + std::to_string(i + 1) + "_" + std::to_string(j + 1), vertices[i], vertices[j]});
  return {std::move(vertices), std::move(edges)};
}

inline Multigraph complete_bipartite_graph(int a, int b) {
  std::vector<std::string> vertices;
  for (int i = 0; i < a; ++i) vertices.push_back("a" + std::to_string(i + 1));
  for (int j = 0; j < b; ++j) vertices.push_back("b" + std::to_string(j + 1));
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      edges.push_back({"e" + std::to_string(i + 1) + "_" + std::to_string(j + 1), vertices[i], vertices[a + j]});
  return {std::move(vertices), std::move(edges)};
}

inline Multigraph path_graph(int vertex_count) {
  std::vector<std::string> vertices;
  for (int i = 0; i < vertex_count; ++i) vertices.push_back("v" + std::to_string(i + 1));
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < vertex_count; ++i) edges.push_back({"e" + std::to_string(i + 1), vertices[i], vertices[i + 1]});
  return {std::move(vertices), std::move(edges)};
}

inline Multigraph cycle_graph(int vertex_count) {
  auto p = path_graph(vertex_count);
  auto edges = p.edges();
  edges.push_back({"e" + std::to_string(vertex_count), p.vertices().back(), p.vertices().front()});
  return {p.vertices(), std::move(edges)};
}

}  // namespace mbs

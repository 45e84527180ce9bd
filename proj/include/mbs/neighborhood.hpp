#pragma once

// Boundary of the neighborhood N(X; P, S) of a multibranched surface.
//
// Every sector e is thickened to e x [-1, 1]; its two sides (e,+) and (e,-)
// are pieces of the boundary. Around a branch with cyclic order (c1, ..., ck)
// the boundary torus of the solid torus minus the k attaching annuli is k
// strips, strip i joining the side of c_i facing forward to the side of
// c_{i+1} facing backward. A prebranch with positive oriented degree faces
// forward with its + side; negative ones are mirrored. Components of pieces
// under these joins are the components of the boundary; strips are annuli and
// contribute nothing to the Euler characteristic.
//
// The slope system never changes which slots a strip joins, so the boundary
// genus depends on P alone. Slopes are validated and echoed only.

#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <boost/pending/disjoint_sets.hpp>

#include "mbs/core.hpp"
#include "mbs/cyclic_space.hpp"
#include "mbs/parallel.hpp"
#include "mbs/permutation.hpp"

namespace mbs {

struct SectorSide {
  std::string sector;
  int side = +1;  // +1 or -1

  friend bool operator==(const SectorSide&, const SectorSide&) = default;
};

struct BoundaryComponent {
  std::vector<SectorSide> sides;
  long long euler_characteristic = 0;
  long long genus = 0;
};

struct BoundarySurface {
  std::vector<BoundaryComponent> components;
  std::size_t total_components = 0;
  long long total_genus = 0;
};

namespace detail {

/// Index form of a valid surface used by the tracing loops.
struct TraceModel {
  std::size_t pieces = 0;                   // 2 per sector: 2s is (s,+), 2s+1 is (s,-)
  std::vector<std::size_t> sector;          // per prebranch
  std::vector<bool> positive;               // per prebranch, od > 0
  std::vector<long long> piece_chi;         // per piece
  long long chi = 0;

  explicit TraceModel(const MultibranchedSurface& x) : pieces(2 * x.sector_count()) {
    for (std::size_t p = 0; p < x.prebranch_count(); ++p) {
      sector.push_back(x.sector_of(p));
      positive.push_back(x.prebranches()[p].oriented_degree > 0);
    }
    for (const auto& s : x.sectors()) {
      piece_chi.push_back(s.shape.euler_characteristic());
      piece_chi.push_back(s.shape.euler_characteristic());
    }
    chi = euler_characteristic(x);
  }

  std::size_t forward_slot(std::size_t p) const { return 2 * sector[p] + (positive[p] ? 0 : 1); }
  std::size_t backward_slot(std::size_t p) const { return 2 * sector[p] + (positive[p] ? 1 : 0); }
};

/// Reusable union-find over the pieces of one model.
class StripJoiner {
 public:
  explicit StripJoiner(std::size_t pieces) : rank_(pieces), parent_(pieces), sets_(rank_.data(), parent_.data()) {}
  StripJoiner(const StripJoiner&) = delete;
  StripJoiner& operator=(const StripJoiner&) = delete;

  /// Joins along all strips of `orders` (one prebranch cycle per branch) and
  /// returns the number of boundary components.
  std::size_t join(const TraceModel& model, const CyclicOrderSpace::Orders& orders) {
    for (std::size_t i = 0; i < parent_.size(); ++i) sets_.make_set(i);
    std::size_t count = parent_.size();
    for (const auto& cycle : orders) {
      const std::size_t k = cycle.size();
      for (std::size_t i = 0; i < k; ++i) {
        auto a = sets_.find_set(model.forward_slot(cycle[i]));
        auto b = sets_.find_set(model.backward_slot(cycle[(i + 1) % k]));
        if (a != b) {
          sets_.link(a, b);
          --count;
        }
      }
    }
    return count;
  }

  std::size_t find(std::size_t piece) { return sets_.find_set(piece); }

 private:
  std::vector<std::size_t> rank_, parent_;
  boost::disjoint_sets<std::size_t*, std::size_t*> sets_;
};

/// Branches in lexicographic id order, each with its prebranches sorted by id.
inline CyclicOrderSpace::Orders canonical_groups(const MultibranchedSurface& x, std::vector<std::size_t>* branch_order = nullptr) {
  std::vector<std::size_t> branches(x.branch_count());
  std::iota(branches.begin(), branches.end(), 0);
  std::sort(branches.begin(), branches.end(), [&](auto a, auto b) { return x.branches()[a] < x.branches()[b]; });
  CyclicOrderSpace::Orders groups;
  for (auto b : branches) {
    auto items = x.attached(b);
    std::sort(items.begin(), items.end(), [&](auto a, auto c) { return x.prebranches()[a].id < x.prebranches()[c].id; });
    groups.push_back(std::move(items));
  }
  if (branch_order) *branch_order = std::move(branches);
  return groups;
}

inline CircularPermutationSystem to_system(const MultibranchedSurface& x, const std::vector<std::size_t>& branch_order,
                                           const CyclicOrderSpace::Orders& orders) {
  CircularPermutationSystem::Cycles cycles;
  for (std::size_t g = 0; g < orders.size(); ++g) {
    std::vector<std::string> cycle;
    for (auto p : orders[g]) cycle.push_back(x.prebranches()[p].id);
    cycles.emplace(x.branches()[branch_order[g]], std::move(cycle));
  }
  return CircularPermutationSystem(std::move(cycles));
}

/// Prebranch-index cycles of P, one per branch in canonical group order.
/// Throws InputError when P does not cover exactly the prebranches of X.
inline CyclicOrderSpace::Orders resolve(const MultibranchedSurface& x, const CircularPermutationSystem& p) {
  std::vector<std::size_t> branch_order;
  auto groups = canonical_groups(x, &branch_order);
  CyclicOrderSpace::Orders orders;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto& branch = x.branches()[branch_order[g]];
    const auto* cycle = p.cycle(branch);
    if (!cycle) throw InputError("permutation system: no cycle for branch '" + branch + "'");
    std::vector<std::size_t> order;
    for (const auto& id : *cycle) {
      auto idx = x.prebranch_index(id);
      if (!idx || x.branch_of(*idx) != branch_order[g])
        throw InputError("permutation system: '" + id + "' is not a prebranch attached to branch '" + branch + "'");
      order.push_back(*idx);
    }
    auto sorted_order = order;
    std::sort(sorted_order.begin(), sorted_order.end());
    auto expected = groups[g];
    std::sort(expected.begin(), expected.end());
    if (sorted_order != expected)
      throw InputError("permutation system: cycle at branch '" + branch + "' must list each attached prebranch exactly once");
    orders.push_back(std::move(order));
  }
  for (const auto& [branch, _] : p.cycles())
    if (!x.branch_index(branch)) throw InputError("permutation system: unknown branch '" + branch + "'");
  return orders;
}

}  // namespace detail

inline BoundarySurface trace_boundary(const MultibranchedSurface& x, const CircularPermutationSystem& p) {
  require_valid(x);
  auto orders = detail::resolve(x, p);
  detail::TraceModel model(x);
  detail::StripJoiner joiner(model.pieces);
  joiner.join(model, orders);

  std::map<std::size_t, std::size_t> slot_of_root;  // ordered by first piece
  BoundarySurface out;
  for (std::size_t piece = 0; piece < model.pieces; ++piece) {
    auto root = joiner.find(piece);
    auto [it, inserted] = slot_of_root.try_emplace(root, out.components.size());
    if (inserted) out.components.emplace_back();
    auto& comp = out.components[it->second];
    comp.sides.push_back({x.sectors()[piece / 2].id, piece % 2 == 0 ? +1 : -1});
    comp.euler_characteristic += model.piece_chi[piece];
  }
  for (auto& comp : out.components) {
    comp.genus = (2 - comp.euler_characteristic) / 2;
    out.total_genus += comp.genus;
  }
  out.total_components = out.components.size();
  return out;
}

/// g(dN) = b - chi(X).
inline long long boundary_genus(const MultibranchedSurface& x, const CircularPermutationSystem& p) {
  return trace_boundary(x, p).total_genus;
}

inline ValidationReport validate_slopes(const MultibranchedSurface& x, const SlopeSystem& s) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, std::string msg) { report.violations.push_back({kind, std::move(msg)}); };
  for (std::size_t b = 0; b < x.branch_count(); ++b) {
    const auto& id = x.branches()[b];
    auto it = s.find(id);
    if (it == s.end()) {
      add(ViolationKind::missing_slope, "slope system: no slope for branch '" + id + "'");
      continue;
    }
    const auto& slope = it->second;
    const auto text = std::to_string(slope.p) + "/" + std::to_string(slope.q);
    if (slope.q != x.branch_degree(b))
      add(ViolationKind::slope_degree_mismatch, "slope system: branch '" + id + "' has degree " +
                                                    std::to_string(x.branch_degree(b)) + " but slope " + text);
    else if (std::gcd(slope.p < 0 ? -slope.p : slope.p, slope.q) != 1)
      add(ViolationKind::slope_not_reduced, "slope system: slope " + text + " at branch '" + id + "' is not reduced");
  }
  for (const auto& [branch, _] : s)
    if (!x.branch_index(branch)) add(ViolationKind::unknown_branch, "slope system: unknown branch '" + branch + "'");
  return report;
}

/// All canonical circular permutation systems of a surface, indexable in
/// lexicographic order.
class PermutationSpace {
 public:
  explicit PermutationSpace(MultibranchedSurface x) : x_(std::move(x)) {
    require_valid(x_);
    space_ = CyclicOrderSpace(detail::canonical_groups(x_, &branch_order_));
  }

  /// Product over branches of (i(l) - 1)!.
  std::uint64_t size() const { return space_.size(); }

  CircularPermutationSystem at(std::uint64_t index) const { return system(space_.at(index).orders()); }

  CircularPermutationSystem system(const CyclicOrderSpace::Orders& orders) const {
    return detail::to_system(x_, branch_order_, orders);
  }

  const CyclicOrderSpace& space() const { return space_; }

 private:
  MultibranchedSurface x_;
  std::vector<std::size_t> branch_order_;
  CyclicOrderSpace space_;
};

/// Every canonical system, in order. Throws LimitError above `max_count`.
inline std::vector<CircularPermutationSystem> enumerate_permutation_systems(const MultibranchedSurface& x,
                                                                            std::uint64_t max_count = 1'000'000) {
  PermutationSpace space(x);
  if (space.size() > max_count)
    throw LimitError(std::to_string(space.size()) + " permutation systems exceed the limit of " + std::to_string(max_count));
  std::vector<CircularPermutationSystem> out;
  auto cursor = space.space().at(0);
  do out.push_back(space.system(cursor.orders()));
  while (cursor.advance());
  return out;
}

struct SearchOptions {
  /// Unset: exhaustive enumeration. Set: that many seeded random systems.
  std::optional<std::uint64_t> sample_count;
  std::uint64_t seed = 0;
  /// Exhaustive only: examine at most this many systems (0 = all). A
  /// truncated search is not exact.
  std::uint64_t limit = 0;
  /// Exhaustive only: refuse spaces larger than this (0 = no guard).
  std::uint64_t guard = 0;
  unsigned threads = 0;

  static SearchOptions exhaustive() { return {}; }
  static SearchOptions sampled(std::uint64_t count, std::uint64_t seed) {
    SearchOptions o;
    o.sample_count = count;
    o.seed = seed;
    return o;
  }
};

struct GenusRange {
  long long min_genus = 0;
  long long max_genus = 0;
  CircularPermutationSystem witness_min, witness_max;
  bool exact = false;
  std::uint64_t examined = 0;
  std::uint64_t total_systems = 0;
};

namespace detail {

inline std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the stream position
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline CyclicOrderSpace::Cursor sample_cursor(const CyclicOrderSpace& space, std::uint64_t seed, std::uint64_t index) {
  std::mt19937_64 rng(sample_seed(seed, index));
  return space.random(rng);
}

/// Extrema of g(dN) over the search described by `options`; indices are
/// enumeration indices (exhaustive) or sample numbers.
inline Extrema boundary_genus_extrema(const MultibranchedSurface& x, const PermutationSpace& space,
                                      const SearchOptions& options, std::uint64_t count) {
  TraceModel model(x);
  if (options.sample_count) {
    return parallel_extrema(count, options.threads, [&](std::uint64_t begin, std::uint64_t end) {
      Extrema e;
      StripJoiner joiner(model.pieces);
      for (auto i = begin; i < end; ++i) {
        auto cursor = sample_cursor(space.space(), options.seed, i);
        e.add(static_cast<long long>(joiner.join(model, cursor.orders())) - model.chi, i);
      }
      return e;
    });
  }
  return parallel_extrema(count, options.threads, [&](std::uint64_t begin, std::uint64_t end) {
    Extrema e;
    if (begin == end) return e;
    StripJoiner joiner(model.pieces);
    auto cursor = space.space().at(begin);
    for (auto i = begin; i < end; ++i) {
      e.add(static_cast<long long>(joiner.join(model, cursor.orders())) - model.chi, i);
      cursor.advance();
    }
    return e;
  });
}

}  // namespace detail

inline GenusRange genus_range(const MultibranchedSurface& x, const SearchOptions& options = {}) {
  PermutationSpace space(x);
  GenusRange out;
  out.total_systems = space.size();

  std::uint64_t count;
  if (options.sample_count) {
    if (*options.sample_count < 1) throw InputError("sampling needs a sample count of at least 1");
    count = *options.sample_count;
  } else {
    if (options.guard && out.total_systems > options.guard)
      throw LimitError(std::to_string(out.total_systems) + " permutation systems exceed the guard of " +
                       std::to_string(options.guard));
    count = options.limit ? std::min(options.limit, out.total_systems) : out.total_systems;
  }

  auto e = detail::boundary_genus_extrema(x, space, options, count);
  out.examined = e.examined;
  out.exact = !options.sample_count && count == out.total_systems;
  out.min_genus = e.min->value;
  out.max_genus = e.max->value;
  if (options.sample_count) {
    out.witness_min = space.system(detail::sample_cursor(space.space(), options.seed, e.min->index).orders());
    out.witness_max = space.system(detail::sample_cursor(space.space(), options.seed, e.max->index).orders());
  } else {
    out.witness_min = space.at(e.min->index);
    out.witness_max = space.at(e.max->index);
  }
  return out;
}

/// Set of g(dN) over every permutation system (exhaustive).
inline std::set<long long> boundary_genus_values(const MultibranchedSurface& x, std::uint64_t guard = 1'000'000) {
  PermutationSpace space(x);
  if (guard && space.size() > guard)
    throw LimitError(std::to_string(space.size()) + " permutation systems exceed the guard of " + std::to_string(guard));
  detail::TraceModel model(x);
  detail::StripJoiner joiner(model.pieces);
  std::set<long long> values;
  auto cursor = space.space().at(0);
  do values.insert(static_cast<long long>(joiner.join(model, cursor.orders())) - model.chi);
  while (cursor.advance());
  return values;
}

}  // namespace mbs

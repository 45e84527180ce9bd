#pragma once

// Regular multibranched surfaces with orientable sectors, described by the
// triple (branches, sectors, prebranches): every prebranch is one boundary
// circle of a sector, wrapped around a branch circle with a signed degree.

#include <cstddef>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/pending/disjoint_sets.hpp>

#include "mbs/error.hpp"

namespace mbs {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct SectorShape {
  int genus = 0;
  int boundary_count = 1;
  bool orientable = true;

  int euler_characteristic() const { return 2 - 2 * genus - boundary_count; }

  friend bool operator==(const SectorShape&, const SectorShape&) = default;
};

struct Sector {
  std::string id;
  SectorShape shape;

  friend bool operator==(const Sector&, const Sector&) = default;
};

struct Prebranch {
  std::string id;
  std::string sector;
  std::string branch;
  int oriented_degree = 1;

  int degree() const { return std::abs(oriented_degree); }

  friend bool operator==(const Prebranch&, const Prebranch&) = default;
};

enum class ViolationKind {
  duplicate_id,
  unknown_sector,
  unknown_branch,
  zero_degree,
  negative_genus,
  empty_boundary,
  boundary_mismatch,
  nonorientable,
  empty_branch,
  not_regular,
  missing_slope,
  slope_degree_mismatch,
  slope_not_reduced,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }

  bool has(ViolationKind kind) const {
    for (const auto& v : violations)
      if (v.kind == kind) return true;
    return false;
  }
};

/// Immutable value. Identifier lookups resolve to list positions; a
/// prebranch that names an unknown sector or branch resolves to npos and is
/// reported by validate().
class MultibranchedSurface {
 public:
  MultibranchedSurface() = default;

  MultibranchedSurface(std::vector<std::string> branches, std::vector<Sector> sectors,
                       std::vector<Prebranch> prebranches)
      : branches_(std::move(branches)),
        sectors_(std::move(sectors)),
        prebranches_(std::move(prebranches)) {
    for (std::size_t i = 0; i < branches_.size(); ++i) branch_lookup_.try_emplace(branches_[i], i);
    for (std::size_t i = 0; i < sectors_.size(); ++i) sector_lookup_.try_emplace(sectors_[i].id, i);
    for (std::size_t i = 0; i < prebranches_.size(); ++i)
      prebranch_lookup_.try_emplace(prebranches_[i].id, i);

    attached_.resize(branches_.size());
    bounding_.resize(sectors_.size());
    pre_sector_.reserve(prebranches_.size());
    pre_branch_.reserve(prebranches_.size());
    for (std::size_t i = 0; i < prebranches_.size(); ++i) {
      std::size_t s = find(sector_lookup_, prebranches_[i].sector);
      std::size_t b = find(branch_lookup_, prebranches_[i].branch);
      pre_sector_.push_back(s);
      pre_branch_.push_back(b);
      if (b != npos) attached_[b].push_back(i);
      if (s != npos) bounding_[s].push_back(i);
    }
  }

  const std::vector<std::string>& branches() const { return branches_; }
  const std::vector<Sector>& sectors() const { return sectors_; }
  const std::vector<Prebranch>& prebranches() const { return prebranches_; }

  std::size_t branch_count() const { return branches_.size(); }
  std::size_t sector_count() const { return sectors_.size(); }
  std::size_t prebranch_count() const { return prebranches_.size(); }

  std::optional<std::size_t> branch_index(std::string_view id) const { return lookup(branch_lookup_, id); }
  std::optional<std::size_t> sector_index(std::string_view id) const { return lookup(sector_lookup_, id); }
  std::optional<std::size_t> prebranch_index(std::string_view id) const {
    return lookup(prebranch_lookup_, id);
  }

  std::size_t sector_of(std::size_t prebranch) const { return pre_sector_[prebranch]; }
  std::size_t branch_of(std::size_t prebranch) const { return pre_branch_[prebranch]; }

  /// Prebranches attached to a branch, in prebranch list order.
  const std::vector<std::size_t>& attached(std::size_t branch) const { return attached_[branch]; }
  /// Prebranches forming the boundary of a sector, in prebranch list order.
  const std::vector<std::size_t>& boundary_of(std::size_t sector) const { return bounding_[sector]; }

  std::size_t branch_index_count(std::size_t branch) const { return attached_[branch].size(); }

  /// d(l) for a regular surface; 0 when nothing is attached.
  int branch_degree(std::size_t branch) const {
    return attached_[branch].empty() ? 0 : prebranches_[attached_[branch].front()].degree();
  }

  friend bool operator==(const MultibranchedSurface& a, const MultibranchedSurface& b) {
    return a.branches_ == b.branches_ && a.sectors_ == b.sectors_ && a.prebranches_ == b.prebranches_;
  }

 private:
  using Lookup = std::map<std::string, std::size_t, std::less<>>;

  static std::size_t find(const Lookup& m, std::string_view id) {
    auto it = m.find(id);
    return it == m.end() ? npos : it->second;
  }
  static std::optional<std::size_t> lookup(const Lookup& m, std::string_view id) {
    auto it = m.find(id);
    if (it == m.end()) return std::nullopt;
    return it->second;
  }

  std::vector<std::string> branches_;
  std::vector<Sector> sectors_;
  std::vector<Prebranch> prebranches_;
  Lookup branch_lookup_, sector_lookup_, prebranch_lookup_;
  std::vector<std::size_t> pre_sector_, pre_branch_;
  std::vector<std::vector<std::size_t>> attached_, bounding_;
};

inline ValidationReport validate(const MultibranchedSurface& x) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, std::string message) {
    report.violations.push_back({kind, std::move(message)});
  };

  auto check_unique = [&](const char* what, auto&& ids) {
    std::map<std::string_view, int> seen;
    for (std::string_view id : ids)
      if (++seen[id] == 2) add(ViolationKind::duplicate_id, std::string("duplicate ") + what + " id '" + std::string(id) + "'");
  };
  {
    std::vector<std::string_view> ids;
    for (const auto& b : x.branches()) ids.push_back(b);
    check_unique("branch", ids);
    ids.clear();
    for (const auto& s : x.sectors()) ids.push_back(s.id);
    check_unique("sector", ids);
    ids.clear();
    for (const auto& p : x.prebranches()) ids.push_back(p.id);
    check_unique("prebranch", ids);
  }

  for (std::size_t i = 0; i < x.prebranch_count(); ++i) {
    const auto& p = x.prebranches()[i];
    if (x.sector_of(i) == npos)
      add(ViolationKind::unknown_sector, "prebranch '" + p.id + "': unknown sector '" + p.sector + "'");
    if (x.branch_of(i) == npos)
      add(ViolationKind::unknown_branch, "prebranch '" + p.id + "': unknown branch '" + p.branch + "'");
    if (p.oriented_degree == 0)
      add(ViolationKind::zero_degree, "prebranch '" + p.id + "': oriented degree must be nonzero");
  }

  for (std::size_t s = 0; s < x.sector_count(); ++s) {
    const auto& sector = x.sectors()[s];
    if (sector.shape.genus < 0)
      add(ViolationKind::negative_genus, "sector '" + sector.id + "': negative genus");
    if (!sector.shape.orientable)
      add(ViolationKind::nonorientable, "sector '" + sector.id + "': nonorientable sectors are not supported");
    if (sector.shape.boundary_count < 1)
      add(ViolationKind::empty_boundary, "sector '" + sector.id + "': a sector needs at least one boundary circle");
    auto listed = x.boundary_of(s).size();
    if (static_cast<long long>(listed) != sector.shape.boundary_count)
      add(ViolationKind::boundary_mismatch,
          "sector '" + sector.id + "': boundary mismatch, " + std::to_string(sector.shape.boundary_count) +
              " boundary circles declared but " + std::to_string(listed) + " prebranches listed");
  }

  for (std::size_t b = 0; b < x.branch_count(); ++b) {
    const auto& attached = x.attached(b);
    if (attached.empty()) {
      add(ViolationKind::empty_branch, "branch '" + x.branches()[b] + "': no prebranch attached (index 0)");
      continue;
    }
    int d = x.prebranches()[attached.front()].degree();
    for (auto p : attached) {
      if (x.prebranches()[p].degree() != d) {
        add(ViolationKind::not_regular, "branch '" + x.branches()[b] + "': not regular, prebranches '" +
                                            x.prebranches()[attached.front()].id + "' and '" +
                                            x.prebranches()[p].id + "' have different degrees");
        break;
      }
    }
  }
  return report;
}

/// Throws InputError listing every violation when x is not valid.
inline void require_valid(const MultibranchedSurface& x) {
  auto report = validate(x);
  if (report.valid()) return;
  std::string msg = "invalid multibranched surface:";
  for (const auto& v : report.violations) msg += "\n  " + v.message;
  throw InputError(msg);
}

/// Branches are circles and contribute nothing.
inline long long euler_characteristic(const MultibranchedSurface& x) {
  long long chi = 0;
  for (const auto& s : x.sectors()) chi += s.shape.euler_characteristic();
  return chi;
}

struct Components {
  std::vector<std::size_t> branch_component;
  std::vector<std::size_t> sector_component;
  std::size_t count = 0;
};

/// Components of the branch/sector incidence graph, numbered in order of
/// first appearance (branches first, then sectors).
inline Components components(const MultibranchedSurface& x) {
  const std::size_t n = x.branch_count(), m = x.sector_count();
  std::vector<std::size_t> rank(n + m), parent(n + m);
  boost::disjoint_sets<std::size_t*, std::size_t*> sets(rank.data(), parent.data());
  for (std::size_t i = 0; i < n + m; ++i) sets.make_set(i);
  for (std::size_t p = 0; p < x.prebranch_count(); ++p) {
    auto b = x.branch_of(p), s = x.sector_of(p);
    if (b != npos && s != npos) sets.union_set(b, n + s);
  }

  Components result;
  std::map<std::size_t, std::size_t> label;
  auto label_of = [&](std::size_t node) {
    auto [it, inserted] = label.try_emplace(sets.find_set(node), result.count);
    if (inserted) ++result.count;
    return it->second;
  };
  for (std::size_t b = 0; b < n; ++b) result.branch_component.push_back(label_of(b));
  for (std::size_t s = 0; s < m; ++s) result.sector_component.push_back(label_of(n + s));
  return result;
}

/// Copy with every identifier prefixed.
inline MultibranchedSurface prefixed(const MultibranchedSurface& x, const std::string& prefix) {
  std::vector<std::string> branches;
  std::vector<Sector> sectors;
  std::vector<Prebranch> prebranches;
  for (const auto& b : x.branches()) branches.push_back(prefix + b);
  for (const auto& s : x.sectors()) sectors.push_back({prefix + s.id, s.shape});
  for (const auto& p : x.prebranches())
    prebranches.push_back({prefix + p.id, prefix + p.sector, prefix + p.branch, p.oriented_degree});
  return {std::move(branches), std::move(sectors), std::move(prebranches)};
}

/// Disjoint union; identifiers of x1 get the prefix "a." and those of x2 "b.".
inline MultibranchedSurface disjoint_union(const MultibranchedSurface& x1, const MultibranchedSurface& x2) {
  auto a = prefixed(x1, "a."), b = prefixed(x2, "b.");
  auto branches = a.branches();
  auto sectors = a.sectors();
  auto prebranches = a.prebranches();
  branches.insert(branches.end(), b.branches().begin(), b.branches().end());
  sectors.insert(sectors.end(), b.sectors().begin(), b.sectors().end());
  prebranches.insert(prebranches.end(), b.prebranches().begin(), b.prebranches().end());
  return {std::move(branches), std::move(sectors), std::move(prebranches)};
}

/// Identifies a disk in sector s1 of x1 with a disk in sector s2 of x2.
///
/// The result contains both surfaces (prefixed "a." and "b.") plus a new
/// branch "d0" of degree 1 and index 3: s1 and s2 each gain a boundary circle
/// on d0 with oriented degree -1, and a new disk sector "d0.disk" is attached
/// to d0 with oriented degree +1.
inline MultibranchedSurface disk_sum(const MultibranchedSurface& x1, std::string_view s1,
                                     const MultibranchedSurface& x2, std::string_view s2) {
  if (!x1.sector_index(s1)) throw InputError("disk sum: unknown sector '" + std::string(s1) + "' in first surface");
  if (!x2.sector_index(s2)) throw InputError("disk sum: unknown sector '" + std::string(s2) + "' in second surface");

  auto joined = disjoint_union(x1, x2);
  const std::string a_sector = "a." + std::string(s1), b_sector = "b." + std::string(s2);

  auto branches = joined.branches();
  auto sectors = joined.sectors();
  auto prebranches = joined.prebranches();
  branches.push_back("d0");
  for (auto& s : sectors)
    if (s.id == a_sector || s.id == b_sector) ++s.shape.boundary_count;
  sectors.push_back({"d0.disk", SectorShape{0, 1, true}});
  prebranches.push_back({"d0.a", a_sector, "d0", -1});
  prebranches.push_back({"d0.b", b_sector, "d0", -1});
  prebranches.push_back({"d0.disk", "d0.disk", "d0", +1});
  return {std::move(branches), std::move(sectors), std::move(prebranches)};
}

/// Spine of the lens space L(p, q): one branch and one disk wrapped p times.
inline MultibranchedSurface lens_spine(int p) {
  if (p < 1) throw InputError("lens spine needs p >= 1");
  return {{"l"}, {{"disk", SectorShape{0, 1, true}}}, {{"c", "disk", "l", p}}};
}

/// The torus as one annulus whose two ends meet a single branch.
inline MultibranchedSurface torus() {
  return {{"l"}, {{"annulus", SectorShape{0, 2, true}}}, {{"c+", "annulus", "l", 1}, {"c-", "annulus", "l", -1}}};
}

}  // namespace mbs

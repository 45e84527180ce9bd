#pragma once

// First homology of a multibranched surface with orientable sectors.
//
// h1() uses the presentation by branch generators: each sector s gives the
// relation sum_k d(l_k; s) l_k, where d(l; s) sums the oriented degrees of the
// boundary circles of s on l, plus a free summand of rank
// r'(X) = C(X) - chi(X) + m - n (the rank of H1 of X with one open disk
// removed from every sector, minus n).
//
// h1_cw_oracle() builds an explicit cell structure instead and computes
// ker d1 / im d2 directly; the two must always agree.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mbs/abelian_group.hpp"
#include "mbs/core.hpp"
#include "mbs/smith.hpp"

namespace mbs {

/// Rows are sectors, columns are branches, both in list order.
inline Matrix<std::int64_t> relation_matrix(const MultibranchedSurface& x) {
  Matrix<std::int64_t> d(x.sector_count(), x.branch_count());
  for (std::size_t p = 0; p < x.prebranch_count(); ++p) {
    auto s = x.sector_of(p), b = x.branch_of(p);
    if (s == npos || b == npos) throw InputError("relation matrix: prebranch '" + x.prebranches()[p].id + "' is dangling");
    d(s, b) = checked::add(d(s, b), static_cast<std::int64_t>(x.prebranches()[p].oriented_degree));
  }
  return d;
}

/// r'(X) = C(X) - chi(X) + m - n.
inline std::int64_t punctured_excess_rank(const MultibranchedSurface& x) {
  return static_cast<std::int64_t>(components(x).count) - euler_characteristic(x) +
         static_cast<std::int64_t>(x.sector_count()) - static_cast<std::int64_t>(x.branch_count());
}

inline AbelianGroup h1(const MultibranchedSurface& x) {
  require_valid(x);
  auto group = cokernel(relation_matrix(x));
  group.free_rank = checked::add(group.free_rank, punctured_excess_rank(x));
  return group;
}

inline std::int64_t rank_h1(const MultibranchedSurface& x) { return h1(x).free_rank; }

/// Cellular chain complex C2 -> C1 -> C0 of a surface.
///
/// 0-cells: one per branch. 1-cells: the core loop of every branch, then per
/// sector 2g handle loops and (b - 1) arcs from the base point of its first
/// boundary circle to the others. 2-cells: one per sector, glued along
///   [a1,b1]...[ag,bg] * c1^od(c1) * t2 c2^od(c2) t2^-1 * ... * tb cb^od(cb) tb^-1
/// where ci^k runs k times around the core loop of the branch carrying ci.
struct CellComplex {
  Matrix<std::int64_t> d1;  // 0-cells x 1-cells
  Matrix<std::int64_t> d2;  // 1-cells x 2-cells
};

inline CellComplex cell_complex(const MultibranchedSurface& x) {
  require_valid(x);
  const std::size_t n = x.branch_count(), m = x.sector_count();

  std::size_t edge_count = n;
  std::vector<std::size_t> first_edge(m);
  for (std::size_t s = 0; s < m; ++s) {
    first_edge[s] = edge_count;
    const auto& shape = x.sectors()[s].shape;
    edge_count += static_cast<std::size_t>(2 * shape.genus + shape.boundary_count - 1);
  }

  CellComplex cx{Matrix<std::int64_t>(n, edge_count), Matrix<std::int64_t>(edge_count, m)};

  // A word in the 1-cells, as (cell, +-1) letters; abelianized into d2.
  std::vector<std::pair<std::size_t, int>> word;
  for (std::size_t s = 0; s < m; ++s) {
    const auto& shape = x.sectors()[s].shape;
    const auto& boundary = x.boundary_of(s);
    const std::size_t base = x.branch_of(boundary.front());
    std::size_t e = first_edge[s];

    word.clear();
    for (int j = 0; j < shape.genus; ++j, e += 2) {
      // handle loops sit at the base vertex
      word.insert(word.end(), {{e, +1}, {e + 1, +1}, {e, -1}, {e + 1, -1}});
    }
    auto wrap = [&](std::size_t prebranch) {
      int od = x.prebranches()[prebranch].oriented_degree;
      std::size_t core = x.branch_of(prebranch);
      for (int k = 0; k < std::abs(od); ++k) word.emplace_back(core, od > 0 ? +1 : -1);
    };
    wrap(boundary.front());
    for (std::size_t i = 1; i < boundary.size(); ++i, ++e) {
      const std::size_t target = x.branch_of(boundary[i]);
      cx.d1(target, e) += 1;
      cx.d1(base, e) -= 1;
      word.emplace_back(e, +1);
      wrap(boundary[i]);
      word.emplace_back(e, -1);
    }
    for (auto [cell, sign] : word) cx.d2(cell, s) = checked::add(cx.d2(cell, s), static_cast<std::int64_t>(sign));
  }
  return cx;
}

inline AbelianGroup h1_cw_oracle(const MultibranchedSurface& x) {
  auto cx = cell_complex(x);
  if (!(cx.d1 * cx.d2 == Matrix<std::int64_t>(cx.d1.rows(), cx.d2.cols())))
    throw std::logic_error("cell complex boundary maps do not compose to zero");

  auto snf1 = smith_normal_form(cx.d1);
  auto snf2 = smith_normal_form(cx.d2);
  AbelianGroup g;
  g.free_rank = static_cast<std::int64_t>(cx.d1.cols() - snf1.rank - snf2.rank);
  for (auto d : snf2.diagonal)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

}  // namespace mbs

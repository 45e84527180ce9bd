#pragma once

// Generators and independent oracles shared by the unit and acceptance tests.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mbs/mbs.hpp"

namespace mbs::testing {

using BigInt = boost::multiprecision::cpp_int;

inline MultibranchedSurface rose(int n) { return times_circle(bouquet_graph(2 * n)); }

struct SurfaceLimits {
  int max_branches = 4;
  int max_sectors = 6;
  int max_degree = 3;
  int max_genus = 2;
  int max_boundary = 3;
  /// Caps the number of prebranches on one branch, which bounds the
  /// permutation-system count by a product of (index - 1)!.
  int max_index = 0;
};

/// A random valid surface: every branch gets a degree, and each boundary
/// circle attaches to a branch with a random sign.
template <class Rng>
MultibranchedSurface random_surface(Rng& rng, const SurfaceLimits& lim = {}) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int n = pick(1, lim.max_branches);
  const int capacity = lim.max_index > 0 ? n * lim.max_index : 1 << 20;
  const int m = std::min(pick(1, lim.max_sectors), capacity);

  std::vector<std::string> branches;
  std::vector<int> degree;
  for (int i = 0; i < n; ++i) {
    branches.push_back("l" + std::to_string(i));
    degree.push_back(pick(1, lim.max_degree));
  }
  std::vector<int> boundary(m);
  int total = 0;
  for (auto& b : boundary) total += b = pick(1, lim.max_boundary);
  while (total < n) {
    ++boundary[pick(0, m - 1)];
    ++total;
  }
  while (total > capacity) {
    auto& b = boundary[pick(0, m - 1)];
    if (b > 1) {
      --b;
      --total;
    }
  }

  // Slots in sector order, then a shuffled assignment that covers every branch.
  std::vector<int> target(total);
  for (int i = 0; i < total; ++i) target[i] = i < n ? i : pick(0, n - 1);
  std::shuffle(target.begin(), target.end(), rng);
  if (lim.max_index > 0) {
    std::vector<int> count(n);
    for (auto t : target) ++count[t];
    for (auto& t : target) {
      if (count[t] <= lim.max_index) continue;
      auto low = std::min_element(count.begin(), count.end()) - count.begin();
      --count[t];
      t = static_cast<int>(low);
      ++count[t];
    }
  }

  std::vector<Sector> sectors;
  std::vector<Prebranch> prebranches;
  int slot = 0;
  for (int s = 0; s < m; ++s) {
    Sector sector{"s" + std::to_string(s), {pick(0, lim.max_genus), boundary[s], true}};
    for (int k = 0; k < boundary[s]; ++k, ++slot) {
      int l = target[slot];
      int sign = pick(0, 1) ? 1 : -1;
      prebranches.push_back({sector.id + "." + std::to_string(k + 1), sector.id, branches[l], sign * degree[l]});
    }
    sectors.push_back(std::move(sector));
  }
  return {branches, sectors, prebranches};
}

template <class Rng>
CircularPermutationSystem random_permutation_system(const MultibranchedSurface& x, Rng& rng) {
  CircularPermutationSystem::Cycles cycles;
  for (std::size_t l = 0; l < x.branch_count(); ++l) {
    std::vector<std::string> cycle;
    for (auto p : x.attached(l)) cycle.push_back(x.prebranches()[p].id);
    std::shuffle(cycle.begin(), cycle.end(), rng);
    cycles.emplace(x.branches()[l], std::move(cycle));
  }
  return CircularPermutationSystem(std::move(cycles));
}

/// Renames every identifier through `rename(kind, old)`, kind being 'b', 's'
/// or 'p'.
template <class F>
MultibranchedSurface relabel(const MultibranchedSurface& x, F&& rename) {
  std::vector<std::string> branches;
  std::vector<Sector> sectors;
  std::vector<Prebranch> prebranches;
  for (const auto& b : x.branches()) branches.push_back(rename('b', b));
  for (auto s : x.sectors()) {
    s.id = rename('s', s.id);
    sectors.push_back(std::move(s));
  }
  for (auto p : x.prebranches()) {
    p.id = rename('p', p.id);
    p.sector = rename('s', p.sector);
    p.branch = rename('b', p.branch);
    prebranches.push_back(std::move(p));
  }
  return {branches, sectors, prebranches};
}

template <class F>
CircularPermutationSystem relabel(const CircularPermutationSystem& p, F&& rename) {
  CircularPermutationSystem::Cycles cycles;
  for (const auto& [branch, cycle] : p.cycles()) {
    std::vector<std::string> renamed;
    for (const auto& c : cycle) renamed.push_back(rename('p', c));
    cycles.emplace(rename('b', branch), std::move(renamed));
  }
  return CircularPermutationSystem(std::move(cycles));
}

/// A renaming that reverses lexicographic order, so enumeration order changes.
inline std::string scramble(char kind, const std::string& id) {
  std::string out(1, kind);
  for (char c : id) out += static_cast<char>('~' - (c - ' '));
  return out;
}

// Fraction-free (Bareiss) elimination in arbitrary precision.

template <class Int>
std::vector<std::vector<BigInt>> to_big(const Matrix<Int>& m) {
  std::vector<std::vector<BigInt>> a(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  return a;
}

inline std::size_t bareiss_rank(std::vector<std::vector<BigInt>> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[rank][c] * a[i][j] - a[i][c] * a[rank][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt prev = 1, sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

template <class Int>
BigInt determinant(const Matrix<Int>& m) { return bareiss_determinant(to_big(m)); }

using BigMatrix = std::vector<std::vector<BigInt>>;

inline BigMatrix multiply(const BigMatrix& a, const BigMatrix& b, std::size_t inner, std::size_t cols) {
  BigMatrix out(a.size(), std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

/// True when U * M * V equals diag(d) exactly; the product is formed in
/// arbitrary precision because the transforms can have large entries.
template <class Int>
bool reproduces_diagonal(const Matrix<Int>& u, const Matrix<Int>& m, const Matrix<Int>& v, const std::vector<Int>& d) {
  auto prod = multiply(multiply(to_big(u), to_big(m), m.rows(), m.cols()), to_big(v), m.cols(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      BigInt want = i == j && i < d.size() ? BigInt(d[i]) : BigInt(0);
      if (prod[i][j] != want) return false;
    }
  return true;
}

/// Product of invariant factors over the rational rank: the gcd of the
/// r x r minors, computed independently by brute force for small matrices.
inline BigInt gcd_of_maximal_minors(const Matrix<std::int64_t>& m, std::size_t r) {
  if (r == 0) return 1;
  BigInt g = 0;
  std::vector<bool> rs(m.rows()), cs(m.cols());
  std::fill(rs.begin(), rs.begin() + static_cast<long>(r), true);
  do {
    std::fill(cs.begin(), cs.end(), false);
    std::fill(cs.begin(), cs.begin() + static_cast<long>(r), true);
    do {
      std::vector<std::vector<BigInt>> a;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!rs[i]) continue;
        a.emplace_back();
        for (std::size_t j = 0; j < m.cols(); ++j)
          if (cs[j]) a.back().push_back(m(i, j));
      }
      BigInt d = abs(bareiss_determinant(a));
      g = boost::multiprecision::gcd(g, d);
    } while (std::prev_permutation(cs.begin(), cs.end()));
  } while (std::prev_permutation(rs.begin(), rs.end()));
  return g;
}

// Multigraphs up to isomorphism.

/// Connected multigraphs (loops and parallel edges allowed) with 1..max_v
/// vertices and 1..max_e edges, one per isomorphism class.
inline std::vector<Multigraph> connected_multigraphs(int max_v, int max_e) {
  std::vector<Multigraph> out;
  for (int v = 1; v <= max_v; ++v) {
    std::vector<std::pair<int, int>> kinds;
    for (int a = 0; a < v; ++a)
      for (int b = a; b < v; ++b) kinds.emplace_back(a, b);
    std::vector<int> perm(v);
    std::set<std::vector<int>> seen;

    auto canonical = [&](const std::vector<int>& counts) {
      std::vector<int> best;
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::vector<int> mapped(kinds.size());
        for (std::size_t k = 0; k < kinds.size(); ++k) {
          int a = perm[kinds[k].first], b = perm[kinds[k].second];
          if (a > b) std::swap(a, b);
          auto idx = std::find(kinds.begin(), kinds.end(), std::pair{a, b}) - kinds.begin();
          mapped[idx] = counts[k];
        }
        if (best.empty() || mapped < best) best = mapped;
      } while (std::next_permutation(perm.begin(), perm.end()));
      return best;
    };

    std::vector<int> counts(kinds.size());
    auto emit = [&] {
      std::vector<std::string> vs;
      for (int i = 0; i < v; ++i) vs.push_back("v" + std::to_string(i + 1));
      std::vector<Edge> es;
      for (std::size_t k = 0; k < kinds.size(); ++k)
        for (int c = 0; c < counts[k]; ++c)
          es.push_back({"e" + std::to_string(es.size() + 1), vs[kinds[k].first], vs[kinds[k].second]});
      Multigraph g(vs, es);
      if (g.connected()) out.push_back(std::move(g));
    };
    auto recurse = [&](auto&& self, std::size_t k, int left, int used) -> void {
      if (k == kinds.size()) {
        if (used >= 1 && seen.insert(canonical(counts)).second) emit();
        return;
      }
      for (int c = 0; c <= left; ++c) {
        counts[k] = c;
        self(self, k + 1, left - c, used + c);
      }
      counts[k] = 0;
    };
    recurse(recurse, 0, max_e, 0);
  }
  return out;
}

inline std::string describe(const Multigraph& g) {
  std::string s = std::to_string(g.vertex_count()) + "V:";
  for (const auto& e : g.edges()) s += " " + e.from + "-" + e.to;
  return s;
}

}  // namespace mbs::testing

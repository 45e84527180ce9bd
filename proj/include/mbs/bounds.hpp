#pragma once

// Genus inequalities for a regular multibranched surface X:
//
//   min g(X) >= rank H1(X) - max_N g(dN)
//   max g(X) >= rank H1(X) - min_N g(dN)
//   max g(X) <= #branches + #sectors
//
// and the S^3 test: if X embeds in S^3 then max_N g(dN) >= rank H1(X).
// Only these bounds are computed; the genera themselves are not.

#include <algorithm>
#include <cstdint>
#include <string>

#include "mbs/homology.hpp"
#include "mbs/neighborhood.hpp"

namespace mbs {

enum class S3Verdict { pass, fail, inconclusive };

inline std::string to_string(S3Verdict v) {
  switch (v) {
    case S3Verdict::pass: return "pass";
    case S3Verdict::fail: return "fail";
    case S3Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

/// A failing exhaustive search proves X does not embed in S^3; passing only
/// means no obstruction was found.
inline S3Verdict s3_verdict(long long rank, long long max_boundary_genus, bool exact) {
  if (max_boundary_genus >= rank) return S3Verdict::pass;
  return exact ? S3Verdict::fail : S3Verdict::inconclusive;
}

struct GenusBoundsReport {
  long long rank_h1 = 0;
  long long min_boundary_genus = 0;
  long long max_boundary_genus = 0;
  bool min_boundary_genus_exact = false;
  bool max_boundary_genus_exact = false;
  long long lower_bound_min_genus = 0;  // clamped at 0
  long long lower_bound_max_genus = 0;  // clamped at 0
  long long lower_bound_min_genus_raw = 0;
  long long lower_bound_max_genus_raw = 0;
  long long upper_bound_max_genus = 0;
  S3Verdict s3_obstruction = S3Verdict::inconclusive;
  CircularPermutationSystem witness_min, witness_max;
  std::uint64_t systems_examined = 0;
  std::uint64_t total_systems = 0;
};

inline GenusBoundsReport genus_bounds(const MultibranchedSurface& x, const SearchOptions& options = {}) {
  GenusBoundsReport r;
  r.rank_h1 = rank_h1(x);
  auto range = genus_range(x, options);
  r.min_boundary_genus = range.min_genus;
  r.max_boundary_genus = range.max_genus;
  r.min_boundary_genus_exact = r.max_boundary_genus_exact = range.exact;
  r.lower_bound_min_genus_raw = r.rank_h1 - range.max_genus;
  r.lower_bound_max_genus_raw = r.rank_h1 - range.min_genus;
  r.lower_bound_min_genus = std::max(0LL, r.lower_bound_min_genus_raw);
  r.lower_bound_max_genus = std::max(0LL, r.lower_bound_max_genus_raw);
  r.upper_bound_max_genus = static_cast<long long>(x.branch_count() + x.sector_count());
  r.s3_obstruction = s3_verdict(r.rank_h1, range.max_genus, range.exact);
  r.witness_min = std::move(range.witness_min);
  r.witness_max = std::move(range.witness_max);
  r.systems_examined = range.examined;
  r.total_systems = range.total_systems;
  return r;
}

inline S3Verdict s3_obstruction(const MultibranchedSurface& x, const SearchOptions& options = {}) {
  auto range = genus_range(x, options);
  return s3_verdict(rank_h1(x), range.max_genus, range.exact);
}

struct EgLowerBound {
  long long value = 0;  // clamped at 0
  long long raw = 0;
};

/// eg(N(X; P)) >= rank H1(X) - g(dN(X; P)).
inline EgLowerBound eg_lower_bound(const MultibranchedSurface& x, const CircularPermutationSystem& p) {
  long long raw = rank_h1(x) - boundary_genus(x, p);
  return {std::max(0LL, raw), raw};
}

}  // namespace mbs

#pragma once

// Finitely generated abelian groups in invariant-factor form, and their
// text rendering:
//
//   group   := "0" | term (" ⊕ " term)*
//   term    := "Z^" rank | "Z/" order
//
// The free part (rank >= 1, always written with its exponent) comes first,
// then torsion factors in divisibility order. The trivial group is "0".

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mbs/error.hpp"
#include "mbs/smith.hpp"

namespace mbs {

struct AbelianGroup {
  std::int64_t free_rank = 0;
  /// Invariant factors > 1 with torsion[i] | torsion[i+1].
  std::vector<std::int64_t> torsion;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }

  /// Prime-power decomposition of the torsion part, sorted ascending.
  std::vector<std::int64_t> elementary_divisors() const {
    std::vector<std::int64_t> out;
    for (auto d : torsion) {
      for (std::int64_t p = 2; p * p <= d; ++p) {
        if (d % p) continue;
        std::int64_t q = 1;
        while (d % p == 0) {
          d /= p;
          q *= p;
        }
        out.push_back(q);
      }
      if (d > 1) out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

/// Group presented by `free_generators` generators subject to the rows of
/// `relations` (one relation per row), i.e. Z^cols / rowspace.
inline AbelianGroup cokernel(const Matrix<std::int64_t>& relations) {
  auto snf = smith_normal_form(relations);
  AbelianGroup g;
  g.free_rank = static_cast<std::int64_t>(relations.cols() - snf.rank);
  for (auto d : snf.diagonal)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

inline std::string to_string(const AbelianGroup& g) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " ⊕ ";
    first = false;
  };
  if (g.free_rank > 0) {
    sep();
    os << "Z^" << g.free_rank;
  }
  for (auto d : g.torsion) {
    sep();
    os << "Z/" << d;
  }
  if (first) os << "0";
  return os.str();
}

/// Inverse of to_string. Torsion factors must already be in divisibility order.
inline AbelianGroup parse_group(std::string_view text) {
  auto fail = [&](const std::string& why) -> AbelianGroup {
    throw InputError("malformed group '" + std::string(text) + "': " + why);
  };
  if (text == "0") return {};
  AbelianGroup g;
  const std::string_view sep = " ⊕ ";
  bool seen_torsion = false;
  std::size_t pos = 0;
  while (true) {
    auto next = text.find(sep, pos);
    auto term = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    if (term.size() < 3 || term[0] != 'Z') return fail("bad term");
    std::int64_t value = 0;
    auto digits = term.substr(2);
    if (digits.empty() || digits.size() > 18) return fail("bad number");
    for (char c : digits) {
      if (c < '0' || c > '9') return fail("bad number");
      value = value * 10 + (c - '0');
    }
    if (term[1] == '^') {
      if (seen_torsion || g.free_rank != 0 || value < 1) return fail("misplaced free part");
      g.free_rank = value;
    } else if (term[1] == '/') {
      if (value < 2 || (!g.torsion.empty() && value % g.torsion.back() != 0)) return fail("torsion not in divisibility order");
      g.torsion.push_back(value);
      seen_torsion = true;
    } else {
      return fail("bad term");
    }
    if (next == std::string_view::npos) break;
    pos = next + sep.size();
  }
  return g;
}

}  // namespace mbs

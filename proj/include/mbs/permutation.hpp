#pragma once

// Circular permutation systems and slope systems, with their text literals:
//
//   permutation system:  branch:preA,preB,preC;branch2:preD,preE
//   slope system:        branch:p/q;branch2:p/q
//
// Cycles are stored rotated so that the lexicographically least prebranch
// comes first, and branches are kept in lexicographic order.

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mbs/error.hpp"

namespace mbs {

inline std::vector<std::string> canonical_rotation(std::vector<std::string> cycle) {
  if (!cycle.empty()) std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  return cycle;
}

class CircularPermutationSystem {
 public:
  using Cycles = std::map<std::string, std::vector<std::string>, std::less<>>;

  CircularPermutationSystem() = default;
  explicit CircularPermutationSystem(Cycles cycles) : cycles_(std::move(cycles)) {
    for (auto& [branch, cycle] : cycles_) cycle = canonical_rotation(std::move(cycle));
  }

  const Cycles& cycles() const { return cycles_; }

  const std::vector<std::string>* cycle(std::string_view branch) const {
    auto it = cycles_.find(branch);
    return it == cycles_.end() ? nullptr : &it->second;
  }

  /// Every cycle reversed.
  CircularPermutationSystem mirrored() const {
    Cycles out;
    for (const auto& [branch, cycle] : cycles_) out.emplace(branch, std::vector<std::string>(cycle.rbegin(), cycle.rend()));
    return CircularPermutationSystem(std::move(out));
  }

  friend bool operator==(const CircularPermutationSystem&, const CircularPermutationSystem&) = default;

 private:
  Cycles cycles_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  for (;;) {
    auto next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) return out;
    pos = next + 1;
  }
}

/// Splits "a:x;b:y" into (a, x), (b, y); a trailing ';' is allowed.
inline std::vector<std::pair<std::string, std::string_view>> split_entries(std::string_view text, const char* what) {
  std::vector<std::pair<std::string, std::string_view>> out;
  for (auto entry : split(text, ';')) {
    entry = trim(entry);
    if (entry.empty()) continue;
    auto colon = entry.find(':');
    if (colon == std::string_view::npos)
      throw InputError(std::string("malformed ") + what + " entry '" + std::string(entry) + "': expected branch:...");
    auto branch = trim(entry.substr(0, colon));
    if (branch.empty()) throw InputError(std::string("malformed ") + what + " entry '" + std::string(entry) + "': empty branch");
    for (const auto& [b, _] : out)
      if (b == branch) throw InputError(std::string(what) + ": branch '" + std::string(branch) + "' listed twice");
    out.emplace_back(std::string(branch), entry.substr(colon + 1));
  }
  return out;
}

}  // namespace detail

inline CircularPermutationSystem parse_permutation_system(std::string_view text) {
  CircularPermutationSystem::Cycles cycles;
  for (const auto& [branch, body] : detail::split_entries(text, "permutation system")) {
    std::vector<std::string> cycle;
    for (auto item : detail::split(body, ',')) {
      item = detail::trim(item);
      if (item.empty()) throw InputError("permutation system: empty prebranch at branch '" + branch + "'");
      if (std::find(cycle.begin(), cycle.end(), item) != cycle.end())
        throw InputError("permutation system: prebranch '" + std::string(item) + "' repeated at branch '" + branch + "'");
      cycle.emplace_back(item);
    }
    cycles.emplace(branch, std::move(cycle));
  }
  return CircularPermutationSystem(std::move(cycles));
}

inline std::string to_string(const CircularPermutationSystem& p) {
  std::string out;
  for (const auto& [branch, cycle] : p.cycles()) {
    if (!out.empty()) out += ';';
    out += branch;
    out += ':';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ',';
      out += cycle[i];
    }
  }
  return out;
}

struct Slope {
  long long p = 0;
  long long q = 1;

  friend bool operator==(const Slope&, const Slope&) = default;
};

using SlopeSystem = std::map<std::string, Slope, std::less<>>;

inline SlopeSystem parse_slope_system(std::string_view text) {
  SlopeSystem out;
  for (const auto& [branch, body] : detail::split_entries(text, "slope system")) {
    auto parts = detail::split(detail::trim(body), '/');
    if (parts.size() != 2) throw InputError("slope system: expected p/q at branch '" + branch + "'");
    try {
      std::size_t used_p = 0, used_q = 0;
      std::string p(parts[0]), q(parts[1]);
      Slope s{std::stoll(p, &used_p), std::stoll(q, &used_q)};
      if (used_p != p.size() || used_q != q.size()) throw std::invalid_argument("trailing");
      if (s.q < 1) throw InputError("slope system: denominator must be positive at branch '" + branch + "'");
      out.emplace(branch, s);
    } catch (const std::logic_error&) {
      throw InputError("slope system: bad number at branch '" + branch + "'");
    }
  }
  return out;
}

inline std::string to_string(const SlopeSystem& s) {
  std::string out;
  for (const auto& [branch, slope] : s) {
    if (!out.empty()) out += ';';
    out += branch + ":" + std::to_string(slope.p) + "/" + std::to_string(slope.q);
  }
  return out;
}

}  // namespace mbs

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "mbs/checked.hpp"
#include "mbs/error.hpp"

namespace mbs {

/// The product, over a list of groups, of all cyclic orders of each group's
/// items. Each group is given in canonical order; its first item stays in
/// front and the remaining ones run through their permutations in
/// lexicographic order. The first group is the most significant digit, so
/// index order is lexicographic order of the whole system.
class CyclicOrderSpace {
 public:
  using Orders = std::vector<std::vector<std::size_t>>;

  CyclicOrderSpace() = default;
  explicit CyclicOrderSpace(Orders groups) : groups_(std::move(groups)) {
    for (const auto& g : groups_) {
      std::uint64_t radix = 1;
      for (std::size_t k = 2; k < g.size(); ++k) radix = checked::count_mul(radix, k);
      radices_.push_back(radix);
    }
  }

  const Orders& groups() const { return groups_; }

  /// Number of systems; throws LimitError when it does not fit in 64 bits.
  std::uint64_t size() const {
    std::uint64_t total = 1;
    for (auto r : radices_) total = checked::count_mul(total, r);
    return total;
  }

  class Cursor {
   public:
    const Orders& orders() const { return orders_; }

    /// Moves to the next index; returns false after the last one.
    bool advance() {
      for (std::size_t g = tails_.size(); g-- > 0;) {
        bool more = std::next_permutation(tails_[g].begin(), tails_[g].end());
        materialize(g);
        if (more) return true;
      }
      return false;
    }

   private:
    friend class CyclicOrderSpace;
    explicit Cursor(const Orders* groups) : groups_(groups) {
      for (const auto& g : *groups) {
        std::vector<std::size_t> tail;
        for (std::size_t k = 1; k < g.size(); ++k) tail.push_back(k);
        tails_.push_back(std::move(tail));
        orders_.push_back(g);
      }
    }
    void materialize(std::size_t g) {
      const auto& items = (*groups_)[g];
      for (std::size_t k = 0; k < tails_[g].size(); ++k) orders_[g][k + 1] = items[tails_[g][k]];
    }

    const Orders* groups_;
    Orders tails_;
    Orders orders_;
  };

  /// Cursor positioned at `index` (< size()).
  Cursor at(std::uint64_t index) const {
    Cursor c(&groups_);
    for (std::size_t g = groups_.size(); g-- > 0;) {
      std::uint64_t digit = index % radices_[g];
      index /= radices_[g];
      unrank(c.tails_[g], digit);
      c.materialize(g);
    }
    return c;
  }

  /// Cursor holding an independent uniformly random cyclic order per group.
  template <class Rng>
  Cursor random(Rng& rng) const {
    Cursor c(&groups_);
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      auto& tail = c.tails_[g];
      for (std::size_t i = tail.size(); i > 1; --i) std::swap(tail[i - 1], tail[bounded(rng, i)]);
      c.materialize(g);
    }
    return c;
  }

 private:
  // k-th permutation (lexicographic) of the sorted sequence in `tail`.
  static void unrank(std::vector<std::size_t>& tail, std::uint64_t k) {
    std::vector<std::size_t> pool = tail;
    std::sort(pool.begin(), pool.end());
    std::uint64_t block = 1;
    for (std::size_t i = 2; i < pool.size(); ++i) block *= i;
    for (std::size_t pos = 0; pos < tail.size(); ++pos) {
      std::size_t remaining = pool.size();
      std::uint64_t choice = block ? k / block : 0;
      tail[pos] = pool[choice];
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(choice));
      if (block) k %= block;
      if (remaining > 1) block /= (remaining - 1);
    }
  }

  // Uniform integer in [0, n) by rejection, independent of the standard
  // library's distribution implementation.
  template <class Rng>
  static std::size_t bounded(Rng& rng, std::size_t n) {
    const std::uint64_t range = static_cast<std::uint64_t>(Rng::max() - Rng::min());
    const std::uint64_t limit = range - (range % n + 1) % n;  // accept [0, limit]
    for (;;) {
      std::uint64_t draw = static_cast<std::uint64_t>(rng() - Rng::min());
      if (draw <= limit) return static_cast<std::size_t>(draw % n);
    }
  }

  Orders groups_;
  std::vector<std::uint64_t> radices_;
};

}  // namespace mbs

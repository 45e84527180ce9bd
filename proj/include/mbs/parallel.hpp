#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace mbs {

/// Running min/max over indexed values. Ties keep the smallest index, so
/// merging partial results in index order is independent of how the index
/// range was split.
struct Extrema {
  struct Point {
    long long value;
    std::uint64_t index;
  };
  std::optional<Point> min, max;
  std::uint64_t examined = 0;

  void add(long long value, std::uint64_t index) {
    ++examined;
    if (!min || value < min->value || (value == min->value && index < min->index)) min = Point{value, index};
    if (!max || value > max->value || (value == max->value && index < max->index)) max = Point{value, index};
  }

  void merge(const Extrema& other) {
    examined += other.examined;
    if (other.min && (!min || other.min->value < min->value ||
                      (other.min->value == min->value && other.min->index < min->index)))
      min = other.min;
    if (other.max && (!max || other.max->value > max->value ||
                      (other.max->value == max->value && other.max->index < max->index)))
      max = other.max;
  }
};

inline unsigned resolve_threads(unsigned requested) {
  if (requested) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, total) into contiguous chunks, runs `chunk(begin, end)` on each
/// (concurrently when threads > 1) and merges the returned Extrema in order.
template <class Chunk>
Extrema parallel_extrema(std::uint64_t total, unsigned threads, Chunk&& chunk) {
  threads = resolve_threads(threads);
  if (threads == 1 || total < 2 * threads) return chunk(std::uint64_t{0}, total);

  std::vector<Extrema> parts(threads);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  const std::uint64_t step = total / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::uint64_t begin = step * t, end = t + 1 == threads ? total : step * (t + 1);
    pool.emplace_back([&, t, begin, end] {
      try {
        parts[t] = chunk(begin, end);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Extrema out;
  for (const auto& p : parts) out.merge(p);
  return out;
}

}  // namespace mbs

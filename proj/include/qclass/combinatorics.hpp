#pragma once

// Brute-force enumerators for noncrossing partitions.
//
// These count partitions directly (all matchings / all set partitions, then a
// crossing test) and share no code with the fusion-rule folds they are used to
// check.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qclass::combinatorics {

using Pairing = std::vector<std::pair<int, int>>;

inline bool pairs_cross(std::pair<int, int> x, std::pair<int, int> y) {
  auto [a, b] = x;
  auto [c, d] = y;
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

inline bool is_noncrossing(const Pairing& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (pairs_cross(p[i], p[j])) return false;
    }
  }
  return true;
}

namespace detail {
template <class Accept>
void enumerate_matchings(std::vector<int>& free_points, Pairing& current, Accept& accept, std::uint64_t& count) {
  if (free_points.empty()) {
    if (accept(current)) ++count;
    return;
  }
  const int first = free_points.front();
  for (std::size_t j = 1; j < free_points.size(); ++j) {
    const int partner = free_points[j];
    std::vector<int> rest;
    rest.reserve(free_points.size() - 2);
    for (std::size_t k = 1; k < free_points.size(); ++k) {
      if (k != j) rest.push_back(free_points[k]);
    }
    current.emplace_back(first, partner);
    enumerate_matchings(rest, current, accept, count);
    current.pop_back();
  }
}

// Visits every set partition of {0..n-1} as a restricted growth string.
template <class Visit>
void enumerate_set_partitions(int n, std::vector<int>& block_of, int position, int blocks, Visit& visit) {
  if (position == n) {
    visit(block_of, blocks);
    return;
  }
  for (int b = 0; b <= blocks; ++b) {
    block_of[position] = b;
    enumerate_set_partitions(n, block_of, position + 1, b == blocks ? blocks + 1 : blocks, visit);
  }
}
}  // namespace detail

/// Number of pair partitions of `points` points satisfying `accept`.
template <class Accept>
std::uint64_t count_pairings(int points, Accept accept) {
  if (points % 2 != 0) return 0;
  std::vector<int> free_points(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) free_points[static_cast<std::size_t>(i)] = i;
  Pairing current;
  std::uint64_t count = 0;
  detail::enumerate_matchings(free_points, current, accept, count);
  return count;
}

/// Noncrossing pair partitions of n points (Catalan(n/2) for even n).
inline std::uint64_t noncrossing_pairings(int points) {
  return count_pairings(points, [](const Pairing& p) { return is_noncrossing(p); });
}

/// Noncrossing pairings of the letters of `word` where every pair joins an A with a B.
inline std::uint64_t noncrossing_ab_pairings(const std::string& word) {
  return count_pairings(static_cast<int>(word.size()), [&](const Pairing& p) {
    for (auto [a, b] : p) {
      if (word[static_cast<std::size_t>(a)] == word[static_cast<std::size_t>(b)]) return false;
    }
    return is_noncrossing(p);
  });
}

/// Noncrossing partitions of n points with no singleton block.
inline std::uint64_t noncrossing_without_singletons(int points) {
  if (points == 0) return 1;
  std::vector<int> block_of(static_cast<std::size_t>(points), 0);
  std::uint64_t count = 0;
  auto visit = [&](const std::vector<int>& blocks, int block_count) {
    std::vector<int> sizes(static_cast<std::size_t>(block_count), 0);
    for (int b : blocks) ++sizes[static_cast<std::size_t>(b)];
    for (int s : sizes) {
      if (s == 1) return;
    }
    for (int a = 0; a < points; ++a) {
      for (int b = a + 1; b < points; ++b) {
        for (int c = b + 1; c < points; ++c) {
          for (int d = c + 1; d < points; ++d) {
            const auto A = blocks[static_cast<std::size_t>(a)], B = blocks[static_cast<std::size_t>(b)];
            if (A != B && A == blocks[static_cast<std::size_t>(c)] && B == blocks[static_cast<std::size_t>(d)]) return;
          }
        }
      }
    }
    ++count;
  };
  detail::enumerate_set_partitions(points, block_of, 0, 0, visit);
  return count;
}

/// Catalan number C_k from the closed form binom(2k, k) / (k + 1).
inline std::uint64_t catalan(unsigned k) {
  std::uint64_t c = 1;
  for (unsigned i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace qclass::combinatorics

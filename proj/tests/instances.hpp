#pragma once

// Seeded instance generators shared by the unit tests and the acceptance run.

#include <array>
#include <cstdint>
#include <vector>

#include "qnull/central.hpp"
#include "qnull/poly.hpp"
#include "qnull/rng.hpp"

namespace inst {

using qnull::Quaternion;
using qnull::QTuple;
using qnull::Rat;
using qnull::Rng;
using Q = Quaternion<Rat>;

/// Primitive integer directions whose squared norm is a perfect square, so any
/// two of them have commensurable radii: ratios of norms are rational squares.
inline const std::vector<std::array<long, 3>>& square_norm_directions() {
  static const std::vector<std::array<long, 3>> dirs = [] {
    std::vector<std::array<long, 3>> base{{1, 0, 0}, {3, 4, 0}, {1, 2, 2}, {2, 3, 6}, {2, 6, 9}};
    std::vector<std::array<long, 3>> out;
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& b : base)
      for (const auto& p : perms)
        for (int signs = 0; signs < 8; ++signs) {
          std::array<long, 3> d{b[p[0]], b[p[1]], b[p[2]]};
          for (int k = 0; k < 3; ++k)
            if (signs & (1 << k)) d[k] = -d[k];
          bool dup = false;
          for (const auto& o : out) dup = dup || o == d;
          if (!dup) out.push_back(d);
        }
    return out;
  }();
  return dirs;
}

inline Q direction(const std::array<long, 3>& d) { return Q(Rat(0), Rat(d[0]), Rat(d[1]), Rat(d[2])); }

inline Rat small_rat(Rng& rng) {
  static const Rat vals[] = {Rat(-2), Rat(-1), Rat(0), Rat(1), Rat(2), Rat(1, 2), Rat(-3, 2)};
  return vals[rng.below(std::size(vals))];
}

inline Rat small_nonzero_rat(Rng& rng) {
  static const Rat vals[] = {Rat(-2), Rat(-1), Rat(1), Rat(2), Rat(1, 2), Rat(-1, 3)};
  return vals[rng.below(std::size(vals))];
}

/// Random point of length 1..max_n with commensurable radii. Coordinates are
/// scalars or a + lambda*d with d reused from the previous coordinate or fresh.
inline QTuple<Rat> commensurable_point(Rng& rng, int max_n = 6) {
  const int n = 1 + static_cast<int>(rng.below(max_n));
  const auto& dirs = square_norm_directions();
  QTuple<Rat> v;
  Q dir = direction(dirs[rng.below(dirs.size())]);
  for (int m = 0; m < n; ++m) {
    auto roll = rng.below(20);
    if (roll < 4) {
      v.push_back(Q::scalar(small_rat(rng)));
      continue;
    }
    if (roll >= 11) dir = direction(dirs[rng.below(dirs.size())]);
    v.push_back(Q::scalar(small_rat(rng)) + dir.scaled(small_nonzero_rat(rng)));
  }
  return v;
}

/// Like commensurable_point, but guaranteed to have at least one sphere block.
inline QTuple<Rat> point_with_blocks(Rng& rng, int max_n = 6) {
  while (true) {
    auto v = commensurable_point(rng, max_n);
    if (!qnull::is_central_tuple(v)) return v;
  }
}

/// Small mixed pool for presentation tests: scalars, axis units, and a few
/// non-axis directions, so every kind of block boundary occurs.
inline QTuple<Rat> presentation_pool() {
  QTuple<Rat> pool;
  for (long s : {-1L, 0L, 1L, 2L}) pool.push_back(Q::scalar(Rat(s)));
  const Q i = Q::unit_i(), j = Q::unit_j(), k = Q::unit_k();
  for (const Q& u : {i, j, k}) {
    pool.push_back(u);
    pool.push_back(-u);
    pool.push_back(Q::scalar(Rat(1)) + u);
    pool.push_back(u.scaled(Rat(2)));
  }
  pool.push_back(i + j);
  pool.push_back(Q::scalar(Rat(3)) - (i + j).scaled(Rat(2)));
  return pool;
}

inline QTuple<Rat> pool_point(Rng& rng, const QTuple<Rat>& pool, int max_n = 6) {
  const int n = 1 + static_cast<int>(rng.below(max_n));
  QTuple<Rat> v;
  for (int m = 0; m < n; ++m) v.push_back(pool[rng.below(pool.size())]);
  return v;
}

inline std::vector<Q> coefficient_pool() {
  std::vector<Q> pool = qnull::small_quaternion_pool<Rat>(1);
  pool.push_back(Q(Rat(1, 2), Rat(0), Rat(-3), Rat(0)));
  pool.push_back(Q(Rat(0), Rat(2, 3), Rat(0), Rat(5)));
  return pool;
}

}  // namespace inst

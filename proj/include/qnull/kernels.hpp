#pragma once

// Batch evaluation of many polynomials at many points.
//
// eval_batch_serial is the reference: one QPoly::eval per pair.
// eval_batch builds, per point, a table of monomial values shared by every
// polynomial, and distributes points across OpenMP threads.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qnull/poly.hpp"

namespace qnull {

/// Row-major results: out[poly * n_points + point].
template <class S>
std::vector<Quaternion<S>> eval_batch_serial(const std::vector<QPoly<S>>& polys, const std::vector<QTuple<S>>& points) {
  std::vector<Quaternion<S>> out(polys.size() * points.size());
  for (std::size_t p = 0; p < polys.size(); ++p)
    for (std::size_t k = 0; k < points.size(); ++k) out[p * points.size() + k] = polys[p].eval(points[k]);
  return out;
}

/// Memoized X^e at one point; X^e = X^(e - delta_last) * v_last.
template <class S>
class MonomialTable {
 public:
  explicit MonomialTable(const QTuple<S>& point) : point_(point) {}

  const Quaternion<S>& value(const Monomial& e) {
    auto it = cache_.find(e);
    if (it != cache_.end()) return it->second;
    int last = static_cast<int>(e.size()) - 1;
    while (last >= 0 && e[last] == 0) --last;
    Quaternion<S> v;
    if (last < 0) {
      v = Quaternion<S>::scalar(S(1));
    } else {
      Monomial prev = e;
      --prev[last];
      v = value(prev) * point_[last];
    }
    return cache_.emplace(e, std::move(v)).first->second;
  }

 private:
  const QTuple<S>& point_;
  std::map<Monomial, Quaternion<S>> cache_;
};

template <class S>
Quaternion<S> eval_with_table(const QPoly<S>& p, MonomialTable<S>& table) {
  Quaternion<S> acc;
  for (const auto& [e, c] : p.terms()) acc += c * table.value(e);
  return acc;
}

template <class S>
std::vector<Quaternion<S>> eval_batch(const std::vector<QPoly<S>>& polys, const std::vector<QTuple<S>>& points) {
  std::vector<Quaternion<S>> out(polys.size() * points.size());
  const long n_points = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < n_points; ++k) {
    MonomialTable<S> table(points[k]);
    for (std::size_t p = 0; p < polys.size(); ++p) out[p * points.size() + k] = eval_with_table(polys[p], table);
  }
  return out;
}

/// First (poly, point) pair with a nonzero value, scanning in row-major order.
template <class S>
std::optional<std::pair<std::size_t, std::size_t>> first_nonvanishing(const std::vector<QPoly<S>>& polys,
                                                                      const std::vector<QTuple<S>>& points) {
  auto values = eval_batch(polys, points);
  for (std::size_t idx = 0; idx < values.size(); ++idx)
    if (!values[idx].is_zero()) return std::make_pair(idx / points.size(), idx % points.size());
  return std::nullopt;
}

}  // namespace qnull

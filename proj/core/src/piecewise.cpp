// Copyright 2026 The dso_tree Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dso_tree/piecewise.hpp"

#include <algorithm>
#include <string>

#include "dso_tree/errors.hpp"

namespace dso_tree {

template <Scalar S>
void sort_unique(std::vector<S>& points) {
  std::sort(points.begin(), points.end());
  std::vector<S> out;
  out.reserve(points.size());
  for (auto& p : points) {
    if (out.empty() || !nearly_equal(out.back(), p)) out.push_back(std::move(p));
  }
  points = std::move(out);
}

template <Scalar S>
std::vector<S> merge_breakpoints(const std::vector<S>& a, const std::vector<S>& b) {
  std::vector<S> all;
  all.reserve(a.size() + b.size());
  all.insert(all.end(), a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  sort_unique(all);
  return all;
}

// ---------------------------------------------------------------------------
// StepFunction

template <Scalar S>
StepFunction<S>::StepFunction(std::vector<S> breakpoints, std::vector<S> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.empty() && values_.empty()) return;
  if (breakpoints_.size() != values_.size() + 1 || values_.empty()) {
    throw ValueError("step function needs one more breakpoint than values (got " +
                     std::to_string(breakpoints_.size()) + " and " +
                     std::to_string(values_.size()) + ")");
  }
  for (std::size_t k = 0; k + 1 < breakpoints_.size(); ++k) {
    if (!(breakpoints_[k] < breakpoints_[k + 1])) {
      throw ValueError("step function breakpoints must be strictly increasing");
    }
  }
}

template <Scalar S>
StepFunction<S> StepFunction<S>::constant(const S& from, const S& to, const S& rate) {
  return StepFunction({from, to}, {rate});
}

template <Scalar S>
S StepFunction<S>::value(const S& t) const {
  if (empty() || t < breakpoints_.front() || t >= breakpoints_.back()) return S(0);
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

template <Scalar S>
S StepFunction<S>::left_value(const S& t) const {
  if (empty() || t <= breakpoints_.front() || t > breakpoints_.back()) return S(0);
  const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
  return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

template <Scalar S>
S StepFunction<S>::integral() const {
  S total(0);
  for (std::size_t k = 0; k < values_.size(); ++k) {
    total += values_[k] * (breakpoints_[k + 1] - breakpoints_[k]);
  }
  return total;
}

template <Scalar S>
S StepFunction<S>::min_value() const {
  if (empty()) return S(0);
  return *std::min_element(values_.begin(), values_.end());
}

template <Scalar S>
S StepFunction<S>::max_value() const {
  if (empty()) return S(0);
  return *std::max_element(values_.begin(), values_.end());
}

template <Scalar S>
std::optional<std::pair<S, S>> StepFunction<S>::support() const {
  std::optional<std::size_t> first;
  std::size_t last = 0;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (values_[k] != S(0)) {
      if (!first) first = k;
      last = k;
    }
  }
  if (!first) return std::nullopt;
  return std::make_pair(breakpoints_[*first], breakpoints_[last + 1]);
}

template <Scalar S>
StepFunction<S> StepFunction<S>::shifted(const S& delta) const {
  StepFunction out = *this;
  for (auto& b : out.breakpoints_) b += delta;
  return out;
}

template <Scalar S>
StepFunction<S> StepFunction<S>::scaled(const S& factor) const {
  StepFunction out = *this;
  for (auto& v : out.values_) v *= factor;
  return out;
}

template <Scalar S>
StepFunction<S> StepFunction<S>::simplified() const {
  std::vector<S> b;
  std::vector<S> v;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!v.empty() && v.back() == values_[k]) {
      b.back() = breakpoints_[k + 1];
      continue;
    }
    if (v.empty()) b.push_back(breakpoints_[k]);
    v.push_back(values_[k]);
    b.push_back(breakpoints_[k + 1]);
  }
  std::size_t lo = 0;
  std::size_t hi = v.size();
  while (lo < hi && v[lo] == S(0)) ++lo;
  while (hi > lo && v[hi - 1] == S(0)) --hi;
  if (lo == hi) return StepFunction();
  return StepFunction(std::vector<S>(b.begin() + lo, b.begin() + hi + 1),
                      std::vector<S>(v.begin() + lo, v.begin() + hi));
}

template <Scalar S>
StepFunction<S> StepFunction<S>::flushed(const S& tol) const {
  StepFunction out = *this;
  for (auto& v : out.values_) {
    if (abs_value(v) <= tol) v = S(0);
  }
  return out;
}

template <Scalar S>
template <class Op>
StepFunction<S> StepFunction<S>::combine(const StepFunction& other, Op op) const {
  if (other.empty() && empty()) return StepFunction();
  const std::vector<S> points = merge_breakpoints(breakpoints_, other.breakpoints_);
  if (points.size() < 2) return StepFunction();
  std::vector<S> values;
  values.reserve(points.size() - 1);
  for (std::size_t k = 0; k + 1 < points.size(); ++k) {
    const S mid = (points[k] + points[k + 1]) / S(2);
    values.push_back(op(value(mid), other.value(mid)));
  }
  return StepFunction(points, std::move(values));
}

template <Scalar S>
StepFunction<S> StepFunction<S>::operator+(const StepFunction& other) const {
  return combine(other, [](const S& a, const S& b) { return S(a + b); });
}

template <Scalar S>
StepFunction<S> StepFunction<S>::operator-(const StepFunction& other) const {
  return combine(other, [](const S& a, const S& b) { return S(a - b); });
}

template <Scalar S>
CumulativeCurve<S> StepFunction<S>::cumulative() const {
  if (empty()) return CumulativeCurve<S>();
  std::vector<S> y;
  y.reserve(breakpoints_.size());
  y.push_back(S(0));
  for (std::size_t k = 0; k < values_.size(); ++k) {
    y.push_back(y.back() + values_[k] * (breakpoints_[k + 1] - breakpoints_[k]));
  }
  return CumulativeCurve<S>(breakpoints_, std::move(y));
}

template <Scalar S>
S sup_distance(const StepFunction<S>& f, const StepFunction<S>& g) {
  const StepFunction<S> diff = f - g;
  S worst(0);
  for (const auto& v : diff.values()) worst = std::max(worst, abs_value(v));
  return worst;
}

// ---------------------------------------------------------------------------
// CumulativeCurve

template <Scalar S>
CumulativeCurve<S>::CumulativeCurve(std::vector<S> times, std::vector<S> values)
    : times_(std::move(times)), values_(std::move(values)) {
  if (times_.size() != values_.size()) {
    throw ValueError("cumulative curve needs one value per time");
  }
  for (std::size_t k = 0; k + 1 < times_.size(); ++k) {
    if (!(times_[k] < times_[k + 1])) {
      throw ValueError("cumulative curve times must be strictly increasing");
    }
    if (values_[k + 1] < values_[k]) {
      if constexpr (kIsExact<S>) {
        throw NonMonotoneError("cumulative curve decreases (backward-bending)");
      } else {
        if (values_[k + 1] < values_[k] - 1e-12 * std::max(1.0, std::abs(values_[k]))) {
          throw NonMonotoneError("cumulative curve decreases (backward-bending)");
        }
        values_[k + 1] = values_[k];
      }
    }
  }
}

template <Scalar S>
S CumulativeCurve<S>::value(const S& t) const {
  if (empty()) return S(0);
  if (t <= times_.front()) return values_.front();
  if (t >= times_.back()) return values_.back();
  const auto it = std::upper_bound(times_.begin(), times_.end(), t);
  const std::size_t k = static_cast<std::size_t>(it - times_.begin()) - 1;
  const S& t0 = times_[k];
  const S& t1 = times_[k + 1];
  return values_[k] + (values_[k + 1] - values_[k]) * (t - t0) / (t1 - t0);
}

template <Scalar S>
S CumulativeCurve<S>::slope(const S& t) const {
  if (times_.size() < 2 || t < times_.front() || t >= times_.back()) return S(0);
  const auto it = std::upper_bound(times_.begin(), times_.end(), t);
  const std::size_t k = static_cast<std::size_t>(it - times_.begin()) - 1;
  return (values_[k + 1] - values_[k]) / (times_[k + 1] - times_[k]);
}

template <Scalar S>
S CumulativeCurve<S>::rightmost_preimage(const S& y, const S& cap) const {
  if (empty()) return cap;
  const auto it = std::upper_bound(values_.begin(), values_.end(), y);
  if (it == values_.end()) return cap;
  if (it == values_.begin()) return std::min(cap, times_.front());
  const std::size_t k1 = static_cast<std::size_t>(it - values_.begin());
  const std::size_t k0 = k1 - 1;
  const S t = times_[k0] +
              (y - values_[k0]) * (times_[k1] - times_[k0]) / (values_[k1] - values_[k0]);
  return std::min(cap, t);
}

template <Scalar S>
std::optional<S> CumulativeCurve<S>::leftmost_preimage(const S& y) const {
  if (empty()) return std::nullopt;
  const auto it = std::lower_bound(values_.begin(), values_.end(), y);
  if (it == values_.begin()) return std::nullopt;
  if (it == values_.end()) return times_.back();
  const std::size_t k1 = static_cast<std::size_t>(it - values_.begin());
  const std::size_t k0 = k1 - 1;
  return times_[k0] + (y - values_[k0]) * (times_[k1] - times_[k0]) / (values_[k1] - values_[k0]);
}

template <Scalar S>
S CumulativeCurve<S>::integral(const S& a, const S& b) const {
  if (!(b > a)) return S(0);
  std::vector<S> points{a, b};
  for (const auto& t : times_) {
    if (t > a && t < b) points.push_back(t);
  }
  std::sort(points.begin(), points.end());
  S total(0);
  for (std::size_t k = 0; k + 1 < points.size(); ++k) {
    total += (value(points[k]) + value(points[k + 1])) * (points[k + 1] - points[k]) / S(2);
  }
  return total;
}

template <Scalar S>
StepFunction<S> CumulativeCurve<S>::derivative() const {
  if (times_.size() < 2) return StepFunction<S>();
  std::vector<S> rates;
  rates.reserve(times_.size() - 1);
  for (std::size_t k = 0; k + 1 < times_.size(); ++k) {
    rates.push_back((values_[k + 1] - values_[k]) / (times_[k + 1] - times_[k]));
  }
  return StepFunction<S>(times_, std::move(rates));
}

#define DSO_TREE_INSTANTIATE(S)                                                       \
  template class StepFunction<S>;                                                     \
  template class CumulativeCurve<S>;                                                  \
  template S sup_distance<S>(const StepFunction<S>&, const StepFunction<S>&);         \
  template std::vector<S> merge_breakpoints<S>(const std::vector<S>&, const std::vector<S>&); \
  template void sort_unique<S>(std::vector<S>&);

DSO_TREE_INSTANTIATE(double)
DSO_TREE_INSTANTIATE(Rational)

#undef DSO_TREE_INSTANTIATE

}  // namespace dso_tree

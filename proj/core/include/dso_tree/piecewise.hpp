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

#ifndef DSO_TREE_PIECEWISE_HPP_
#define DSO_TREE_PIECEWISE_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "dso_tree/scalar.hpp"

namespace dso_tree {

template <Scalar S>
class CumulativeCurve;

// Piecewise-constant rate on right-open intervals [b_k, b_{k+1}). The
// function is zero outside [b_0, b_m]. A default-constructed StepFunction is
// identically zero.
template <Scalar S>
class StepFunction {
 public:
  StepFunction() = default;
  // Throws ValueError unless breakpoints are strictly increasing and there is
  // exactly one value per interval.
  StepFunction(std::vector<S> breakpoints, std::vector<S> values);

  static StepFunction constant(const S& from, const S& to, const S& rate);

  bool empty() const { return values_.empty(); }
  const std::vector<S>& breakpoints() const { return breakpoints_; }
  const std::vector<S>& values() const { return values_; }
  int segment_count() const { return static_cast<int>(values_.size()); }

  // Right-continuous evaluation.
  S value(const S& t) const;
  // Left limit at t.
  S left_value(const S& t) const;

  S integral() const;
  S min_value() const;
  S max_value() const;
  // First and last time where the function is nonzero.
  std::optional<std::pair<S, S>> support() const;

  StepFunction shifted(const S& delta) const;
  StepFunction scaled(const S& factor) const;
  // Merges adjacent equal segments and drops zero segments at both ends.
  StepFunction simplified() const;
  // Values with |v| <= tol replaced by zero; used to strip rounding noise.
  StepFunction flushed(const S& tol) const;

  StepFunction operator+(const StepFunction& other) const;
  StepFunction operator-(const StepFunction& other) const;

  CumulativeCurve<S> cumulative() const;

 private:
  template <class Op>
  StepFunction combine(const StepFunction& other, Op op) const;

  std::vector<S> breakpoints_;
  std::vector<S> values_;
};

// sup |f - g|.
template <Scalar S>
S sup_distance(const StepFunction<S>& f, const StepFunction<S>& g);

// Continuous piecewise-linear nondecreasing curve through (t_k, y_k), held
// constant before the first and after the last point.
template <Scalar S>
class CumulativeCurve {
 public:
  CumulativeCurve() = default;
  // Throws ValueError on non-increasing times and NonMonotoneError if the
  // values decrease anywhere.
  CumulativeCurve(std::vector<S> times, std::vector<S> values);

  bool empty() const { return times_.empty(); }
  const std::vector<S>& times() const { return times_; }
  const std::vector<S>& values() const { return values_; }

  S value(const S& t) const;
  // Right derivative at t; zero outside the breakpoint range.
  S slope(const S& t) const;
  S initial_value() const { return empty() ? S(0) : values_.front(); }
  S final_value() const { return empty() ? S(0) : values_.back(); }

  // sup{t : C(t) <= y}, capped at `cap` (the supremum is infinite once y
  // reaches the final value). On flat stretches this is the right end, so
  // the last member of a cohort is returned.
  S rightmost_preimage(const S& y, const S& cap) const;
  // inf{t : C(t) >= y}; nullopt when y does not exceed the initial value.
  // Values above the final level clamp to the last breakpoint.
  std::optional<S> leftmost_preimage(const S& y) const;

  // Exact integral over [a, b].
  S integral(const S& a, const S& b) const;

  StepFunction<S> derivative() const;

 private:
  std::vector<S> times_;
  std::vector<S> values_;
};

// Sorted union of two breakpoint lists; near-duplicates collapse in double
// mode.
template <Scalar S>
std::vector<S> merge_breakpoints(const std::vector<S>& a, const std::vector<S>& b);

// Sorts and removes duplicates (near-duplicates in double mode).
template <Scalar S>
void sort_unique(std::vector<S>& points);

}  // namespace dso_tree

#endif  // DSO_TREE_PIECEWISE_HPP_

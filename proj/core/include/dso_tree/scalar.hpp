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

#ifndef DSO_TREE_SCALAR_HPP_
#define DSO_TREE_SCALAR_HPP_

#include <algorithm>
#include <concepts>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace dso_tree {

// Arbitrary-precision rational used by exact mode.
using Rational = boost::multiprecision::cpp_rational;

// Every numeric type in the library is instantiated for exactly these two.
template <class T>
concept Scalar = std::same_as<T, double> || std::same_as<T, Rational>;

template <Scalar S>
inline constexpr bool kIsExact = std::same_as<S, Rational>;

inline double to_double(double x) { return x; }
double to_double(const Rational& x);

// Exact binary value of `x` for Rational, identity for double.
template <Scalar S>
S scalar_from_double(double x);

// Decimal value with the fewest digits that round-trips `x` ("0.1" -> 1/10).
Rational shortest_rational(double x);

// Parses "p/q", integers and decimal notation ("1.25", "-3e-2") exactly.
// Throws ParseError on malformed input.
Rational parse_rational(std::string_view text);

template <Scalar S>
S parse_scalar(std::string_view text);

std::string format_scalar(double x);
std::string format_scalar(const Rational& x);

template <Scalar S>
S abs_value(const S& x) {
  return x < S(0) ? S(-x) : x;
}

// True if x is an integer (exactly for Rational, within 1e-9 for double).
bool is_integral(double x);
bool is_integral(const Rational& x);

long long to_integer(double x);
long long to_integer(const Rational& x);

// Zero for Rational. For double, rounding noise below `scale * 1e-12` is
// flushed to zero so that piecewise constructions do not spawn sliver
// segments.
template <Scalar S>
S snap_to_zero(const S& x, const S& scale) {
  if constexpr (kIsExact<S>) {
    (void)scale;
    return x;
  } else {
    const double bound = 1e-12 * (scale > 1.0 ? scale : 1.0);
    return (x < bound && x > -bound) ? 0.0 : x;
  }
}

// Equality used when merging breakpoints: exact for Rational, relative
// 1e-12 for double.
template <Scalar S>
bool nearly_equal(const S& a, const S& b) {
  if constexpr (kIsExact<S>) {
    return a == b;
  } else {
    const double scale = std::max({1.0, a < 0 ? -a : a, b < 0 ? -b : b});
    const double diff = a - b;
    return (diff < 0 ? -diff : diff) <= 1e-12 * scale;
  }
}

}  // namespace dso_tree

#endif  // DSO_TREE_SCALAR_HPP_

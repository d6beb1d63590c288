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

#include "dso_tree/scalar.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <string>

#include "dso_tree/errors.hpp"

namespace dso_tree {
namespace {

using boost::multiprecision::cpp_int;

cpp_int pow10(int exponent) {
  cpp_int result = 1;
  for (int i = 0; i < exponent; ++i) result *= 10;
  return result;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Rational parse_decimal(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  int exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    text = text.substr(0, e);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) {
      throw ParseError("malformed exponent in number '" + original + "'");
    }
    exponent = std::stoi(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  int fraction_digits = 0;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)) ||
        (int_part.empty() && frac_part.empty())) {
      throw ParseError("malformed number '" + original + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    fraction_digits = static_cast<int>(frac_part.size());
  } else {
    if (!all_digits(text)) throw ParseError("malformed number '" + original + "'");
    digits = std::string(text);
  }
  // cpp_int reads a leading zero as an octal prefix.
  const auto first = digits.find_first_not_of('0');
  digits = first == std::string::npos ? "0" : digits.substr(first);
  Rational value{cpp_int(digits)};
  const int scale = exponent - fraction_digits;
  if (scale > 0) {
    value *= Rational(pow10(scale));
  } else if (scale < 0) {
    value /= Rational(pow10(-scale));
  }
  return negative ? Rational(-value) : value;
}

}  // namespace

double to_double(const Rational& x) { return x.convert_to<double>(); }

template <>
double scalar_from_double<double>(double x) {
  return x;
}

template <>
Rational scalar_from_double<Rational>(double x) {
  if (!std::isfinite(x)) throw ValueError("non-finite value cannot be made exact");
  return Rational(x);
}

Rational shortest_rational(double x) {
  if (!std::isfinite(x)) throw ValueError("non-finite value cannot be made exact");
  std::array<char, 64> buffer{};
  const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), x);
  if (ec != std::errc()) throw ValueError("cannot format floating value");
  return parse_decimal(std::string_view(buffer.data(), end - buffer.data()));
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty number");
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational num = parse_decimal(text.substr(0, slash));
    const Rational den = parse_decimal(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  return parse_decimal(text);
}

template <>
double parse_scalar<double>(std::string_view text) {
  return to_double(parse_rational(text));
}

template <>
Rational parse_scalar<Rational>(std::string_view text) {
  return parse_rational(text);
}

std::string format_scalar(double x) {
  std::array<char, 64> buffer{};
  const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), x);
  if (ec != std::errc()) return "nan";
  return std::string(buffer.data(), end);
}

std::string format_scalar(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

bool is_integral(double x) { return std::abs(x - std::round(x)) <= 1e-9 * std::max(1.0, std::abs(x)); }

bool is_integral(const Rational& x) { return denominator(x) == 1; }

long long to_integer(double x) { return std::llround(x); }

long long to_integer(const Rational& x) {
  if (denominator(x) != 1) throw ValueError("value " + format_scalar(x) + " is not an integer");
  return numerator(x).convert_to<long long>();
}

}  // namespace dso_tree

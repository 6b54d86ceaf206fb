// Copyright 2026 The Gradation Authors
//
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

#include "gradation/tone.hpp"

#include <algorithm>
#include <cctype>

#include "gradation/error.hpp"

namespace gradation {
namespace {

bool in_unit_interval(const mpq_class& q) {
  return sgn(q) >= 0 && cmp(q, 1) <= 0;
}

bool is_integer_text(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

}  // namespace

Tone::Tone(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw InvalidInput("tone with zero denominator");
  value_ = mpq_class(mpz_class(std::to_string(numerator)),
                     mpz_class(std::to_string(denominator)));
  value_.canonicalize();
  if (!in_unit_interval(value_)) {
    throw InvalidInput("tone " + value_.get_str() + " outside [0,1]");
  }
}

Tone Tone::from_rational(mpq_class value) {
  value.canonicalize();
  if (!in_unit_interval(value)) {
    throw InvalidInput("tone " + value.get_str() + " outside [0,1]");
  }
  Tone t;
  t.value_ = std::move(value);
  return t;
}

Tone Tone::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den)) {
    throw InvalidInput("malformed tone '" + std::string(text) + "'");
  }
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (sgn(q) == 0) {
    throw InvalidInput("tone '" + std::string(text) + "' has zero denominator");
  }
  return from_rational(mpq_class(p, q));
}

std::string Tone::str() const { return value_.get_str(); }

Tone Tone::complement() const { return from_rational(1 - value_); }

Tone abs_diff(const Tone& a, const Tone& b) {
  return Tone::from_rational(abs(mpq_class(a.value() - b.value())));
}

}  // namespace gradation

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

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gradation {

// Exact rational grey tone in [0,1], always in lowest terms so that
// structural equality is value equality.
class Tone {
 public:
  Tone() = default;

  // Throws InvalidInput for a zero denominator or a value outside [0,1].
  Tone(std::int64_t numerator, std::int64_t denominator);

  static Tone zero() { return Tone(); }
  static Tone one() { return Tone(1, 1); }

  // Checked conversion from an arbitrary rational.
  static Tone from_rational(mpq_class value);

  // Accepts "p/q" or "p"; the canonical printed form is produced by str().
  static Tone parse(std::string_view text);
  std::string str() const;

  const mpq_class& value() const noexcept { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return cmp(value_, 1) == 0; }

  Tone complement() const;

  friend bool operator==(const Tone& a, const Tone& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Tone& a, const Tone& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

 private:
  mpq_class value_;
};

// |a - b|, which always lies in [0,1].
Tone abs_diff(const Tone& a, const Tone& b);

}  // namespace gradation

// Copyright 2026 The spectile authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace spectile {

/// A phase as an exact fraction of a full turn, kept reduced and in [0, 1).
///
/// The value num/den stands for the unimodular complex number
/// e^(2*pi*i*num/den). Arithmetic is mod 1, so Phase(5, 4) == Phase(1, 4).
/// Zero is always represented as 0/1, which makes equality structural.
class Phase {
 public:
  constexpr Phase() = default;
  Phase(long long numerator, long long denominator);

  long long numerator() const { return num_; }
  long long denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  Phase operator+(Phase other) const;
  Phase operator-(Phase other) const;
  Phase operator-() const;
  Phase& operator+=(Phase other);
  Phase& operator-=(Phase other);

  bool operator==(const Phase& other) const = default;
  /// Orders by value in [0, 1), not by representation.
  bool operator<(const Phase& other) const;

  /// Value as a fraction of a full turn, for numeric cross-checks only.
  double turns() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string to_string() const;
  /// Parses "num/den" or a bare integer numerator ("0" == "0/1").
  static Phase parse(std::string_view text);

 private:
  long long num_ = 0;
  long long den_ = 1;
};

Phase operator*(long long scale, Phase p);

/// A formal non-negative integer combination of Q-th roots of unity.
///
/// counts()[r] is the multiplicity of e^(2*pi*i*r/Q). Adding a phase whose
/// denominator does not divide the current order promotes the whole sum to
/// the least common order first, so a single order always suffices.
class RootOfUnitySum {
 public:
  RootOfUnitySum() : counts_(1, 0) {}
  explicit RootOfUnitySum(long long order);

  void add(Phase p, long long multiplicity = 1);

  long long order() const { return static_cast<long long>(counts_.size()); }
  const std::vector<long long>& counts() const { return counts_; }
  long long term_count() const;

  /// Exact vanishing test: true iff the accumulated sum equals 0 in C.
  ///
  /// Decided algebraically: the sum vanishes iff the Q-th cyclotomic
  /// polynomial divides sum_r counts[r] * x^r, Q being the order.
  bool is_zero() const;

  /// Numeric evaluation, intended for cross-checking tests.
  double magnitude() const;

 private:
  void promote(long long new_order);

  std::vector<long long> counts_;
};

/// Coefficients of the n-th cyclotomic polynomial, ascending degree.
/// Computed by iterated exact division of x^n - 1 by the lower-order
/// cyclotomic polynomials; results are memoized.
std::vector<long long> cyclotomic_polynomial(long long n);

}  // namespace spectile

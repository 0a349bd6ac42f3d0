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

#include "spectile/phase.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace spectile {

namespace {

long long lcm_ll(long long a, long long b) {
  return a / std::gcd(a, b) * b;
}

}  // namespace

Phase::Phase(long long numerator, long long denominator) {
  if (denominator == 0) {
    throw std::invalid_argument("Phase: zero denominator");
  }
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  numerator %= denominator;
  if (numerator < 0) {
    numerator += denominator;
  }
  long long g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
  if (num_ == 0) {
    den_ = 1;
  }
}

Phase Phase::operator+(Phase other) const {
  long long den = lcm_ll(den_, other.den_);
  return Phase(num_ * (den / den_) + other.num_ * (den / other.den_), den);
}

Phase Phase::operator-(Phase other) const {
  return *this + (-other);
}

Phase Phase::operator-() const {
  return Phase(den_ - num_, den_);
}

Phase& Phase::operator+=(Phase other) {
  *this = *this + other;
  return *this;
}

Phase& Phase::operator-=(Phase other) {
  *this = *this - other;
  return *this;
}

bool Phase::operator<(const Phase& other) const {
  return static_cast<__int128>(num_) * other.den_ <
         static_cast<__int128>(other.num_) * den_;
}

std::string Phase::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Phase Phase::parse(std::string_view text) {
  size_t slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Phase(std::stoll(std::string(text)), 1);
    }
    long long num = std::stoll(std::string(text.substr(0, slash)));
    long long den = std::stoll(std::string(text.substr(slash + 1)));
    return Phase(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Phase: cannot parse '" + std::string(text) + "'");
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("Phase: value out of range in '" + std::string(text) + "'");
  }
}

Phase operator*(long long scale, Phase p) {
  return Phase(scale * p.numerator(), p.denominator());
}

RootOfUnitySum::RootOfUnitySum(long long order) {
  if (order < 1) {
    throw std::invalid_argument("RootOfUnitySum: order must be positive");
  }
  counts_.assign(static_cast<size_t>(order), 0);
}

void RootOfUnitySum::promote(long long new_order) {
  long long old_order = order();
  if (new_order == old_order) {
    return;
  }
  std::vector<long long> expanded(static_cast<size_t>(new_order), 0);
  long long stride = new_order / old_order;
  for (long long r = 0; r < old_order; ++r) {
    expanded[static_cast<size_t>(r * stride)] = counts_[static_cast<size_t>(r)];
  }
  counts_ = std::move(expanded);
}

void RootOfUnitySum::add(Phase p, long long multiplicity) {
  if (multiplicity < 0) {
    throw std::invalid_argument("RootOfUnitySum: negative multiplicity");
  }
  promote(lcm_ll(order(), p.denominator()));
  counts_[static_cast<size_t>(p.numerator() * (order() / p.denominator()))] += multiplicity;
}

long long RootOfUnitySum::term_count() const {
  long long total = 0;
  for (long long c : counts_) {
    total += c;
  }
  return total;
}

double RootOfUnitySum::magnitude() const {
  std::complex<double> sum;
  long long q = order();
  for (long long r = 0; r < q; ++r) {
    long long c = counts_[static_cast<size_t>(r)];
    if (c != 0) {
      sum += static_cast<double>(c) *
             std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(q));
    }
  }
  return std::abs(sum);
}

namespace {

using Poly = std::vector<long long>;  // coefficients, ascending degree

// Quotient of a by the monic polynomial b; requires exact divisibility.
Poly poly_divide_exact(Poly a, const Poly& b) {
  if (b.empty() || b.back() != 1) {
    throw std::logic_error("poly_divide_exact: divisor must be monic");
  }
  if (a.size() < b.size()) {
    throw std::logic_error("poly_divide_exact: degree underflow");
  }
  Poly quotient(a.size() - b.size() + 1, 0);
  for (size_t i = a.size(); i-- >= b.size();) {
    long long coef = a[i];
    if (coef == 0) {
      continue;
    }
    size_t shift = i + 1 - b.size();
    quotient[shift] = coef;
    for (size_t j = 0; j < b.size(); ++j) {
      a[shift + j] -= coef * b[j];
    }
  }
  for (long long c : a) {
    if (c != 0) {
      throw std::logic_error("poly_divide_exact: nonzero remainder");
    }
  }
  return quotient;
}

// Remainder of a mod the monic polynomial b.
Poly poly_mod(Poly a, const Poly& b) {
  size_t deg_b = b.size() - 1;
  while (a.size() > deg_b) {
    long long coef = a.back();
    if (coef != 0) {
      size_t shift = a.size() - b.size();
      for (size_t j = 0; j < b.size(); ++j) {
        a[shift + j] -= coef * b[j];
      }
    }
    a.pop_back();
  }
  return a;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(long long n) {
  if (n < 1) {
    throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
  }
  static std::map<long long, Poly> cache;
  static std::mutex cache_mutex;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto hit = cache.find(n);
  if (hit != cache.end()) {
    return hit->second;
  }
  // Fill the cache bottom-up over the divisors of n, so every proper divisor
  // of m is available when m is processed.
  std::vector<long long> divisors;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divisors.push_back(d);
      if (d != n / d) {
        divisors.push_back(n / d);
      }
    }
  }
  std::sort(divisors.begin(), divisors.end());
  for (long long m : divisors) {
    if (cache.count(m)) {
      continue;
    }
    Poly p(static_cast<size_t>(m) + 1, 0);
    p[0] = -1;
    p[static_cast<size_t>(m)] = 1;  // x^m - 1
    for (long long d : divisors) {
      if (d < m && m % d == 0) {
        p = poly_divide_exact(std::move(p), cache.at(d));
      }
    }
    cache.emplace(m, std::move(p));
  }
  return cache.at(n);
}

bool RootOfUnitySum::is_zero() const {
  long long q = order();
  bool any = false;
  for (long long c : counts_) {
    if (c != 0) {
      any = true;
      break;
    }
  }
  if (!any) {
    return true;
  }
  if (q == 1) {
    return false;  // a nonempty sum of 1's
  }
  Poly remainder = poly_mod(counts_, cyclotomic_polynomial(q));
  for (long long c : remainder) {
    if (c != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace spectile

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

#include "spectile/construction.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace spectile {

GroupSpec::GroupSpec(std::array<GroupFactor, 3> factors) : factors_(factors) {
  for (const GroupFactor& f : factors_) {
    if (f.p < 2 || f.q < 2) {
      throw std::invalid_argument("GroupSpec: factors require p >= 2 and q >= 2");
    }
  }
}

long long GroupSpec::matrix_size() const {
  return factors_[0].p * factors_[1].p * factors_[2].p;
}

GroupSpec GroupSpec::parse(std::string_view text) {
  std::array<GroupFactor, 3> factors;
  size_t pos = 0;
  for (size_t j = 0; j < 3; ++j) {
    size_t end = text.find(',', pos);
    if ((j < 2) != (end != std::string_view::npos)) {
      throw std::invalid_argument("GroupSpec: expected \"p1.q1,p2.q2,p3.q3\"");
    }
    std::string_view piece = text.substr(pos, end == std::string_view::npos ? end : end - pos);
    size_t dot = piece.find('.');
    if (dot == std::string_view::npos) {
      throw std::invalid_argument("GroupSpec: factor is missing '.' separator");
    }
    try {
      factors[j].p = std::stoll(std::string(piece.substr(0, dot)));
      factors[j].q = std::stoll(std::string(piece.substr(dot + 1)));
    } catch (const std::exception&) {
      throw std::invalid_argument("GroupSpec: cannot parse factor '" + std::string(piece) + "'");
    }
    pos = end == std::string_view::npos ? text.size() : end + 1;
  }
  return GroupSpec(factors);
}

std::string GroupSpec::to_string() const {
  std::string out;
  for (size_t j = 0; j < 3; ++j) {
    if (j > 0) out += ',';
    out += std::to_string(factors_[j].p) + "." + std::to_string(factors_[j].q);
  }
  return out;
}

bool ElementSet::has_duplicates() const {
  std::set<std::vector<Phase>> seen;
  for (const auto& e : elements) {
    if (!seen.insert(e).second) {
      return true;
    }
  }
  return false;
}

bool SpectrumSet::has_duplicates() const {
  std::set<std::vector<long long>> seen;
  for (const auto& r : rows) {
    if (!seen.insert(r).second) {
      return true;
    }
  }
  return false;
}

PhaseMatrix spectral_product(const SpectrumSet& s, const ElementSet& t) {
  if (s.dim != t.dim) {
    throw std::invalid_argument("spectral_product: dimension mismatch");
  }
  PhaseMatrix out(s.size(), t.size());
  for (size_t i = 0; i < s.size(); ++i) {
    for (size_t k = 0; k < t.size(); ++k) {
      Phase acc;
      for (size_t d = 0; d < s.dim; ++d) {
        acc += s.rows[i][d] * t.elements[k][d];
      }
      out.at(i, k) = acc;
    }
  }
  return out;
}

bool is_spectrum(const SpectrumSet& s, const ElementSet& t) {
  if (s.dim != t.dim) {
    throw std::invalid_argument("is_spectrum: dimension mismatch");
  }
  if (s.size() != t.size() || s.has_duplicates() || t.has_duplicates()) {
    return false;
  }
  return is_hadamard(spectral_product(s, t));
}

bool is_spectrum_by_vanishing(const SpectrumSet& s, const ElementSet& t) {
  if (s.dim != t.dim) {
    throw std::invalid_argument("is_spectrum_by_vanishing: dimension mismatch");
  }
  if (s.size() != t.size() || s.has_duplicates() || t.has_duplicates()) {
    return false;
  }
  std::set<std::vector<long long>> differences;
  for (const auto& a : s.rows) {
    for (const auto& b : s.rows) {
      std::vector<long long> diff(s.dim);
      bool nonzero = false;
      for (size_t d = 0; d < s.dim; ++d) {
        diff[d] = a[d] - b[d];
        nonzero = nonzero || diff[d] != 0;
      }
      if (nonzero) {
        differences.insert(std::move(diff));
      }
    }
  }
  for (const auto& r : differences) {
    RootOfUnitySum sum;
    for (const auto& point : t.elements) {
      Phase acc;
      for (size_t d = 0; d < t.dim; ++d) {
        acc += r[d] * point[d];
      }
      sum.add(acc);
    }
    if (!sum.is_zero()) {
      return false;
    }
  }
  return true;
}

PhaseMatrix build_dita(const PhaseMatrix& outer, const std::vector<PhaseMatrix>& inner) {
  size_t k = outer.size();
  if (inner.size() != k) {
    throw std::invalid_argument("build_dita: need exactly one inner matrix per outer column");
  }
  if (k == 0) {
    throw std::invalid_argument("build_dita: empty outer matrix");
  }
  size_t n = inner[0].size();
  for (const PhaseMatrix& m : inner) {
    if (m.size() != n) {
      throw std::invalid_argument("build_dita: inner matrices must share one size");
    }
  }
  if (!is_hadamard(outer)) {
    throw std::invalid_argument("build_dita: outer matrix is not Hadamard");
  }
  for (size_t j = 0; j < k; ++j) {
    if (!is_hadamard(inner[j])) {
      throw std::invalid_argument("build_dita: inner matrix " + std::to_string(j) +
                                  " is not Hadamard");
    }
  }
  PhaseMatrix out(n * k, n * k);
  for (size_t bi = 0; bi < k; ++bi) {
    for (size_t bj = 0; bj < k; ++bj) {
      for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < n; ++c) {
          out.at(bi * n + r, bj * n + c) = outer.at(bi, bj) + inner[bj].at(r, c);
        }
      }
    }
  }
  return out;
}

DitaSpectralPair dita_as_spectral_pair(const PhaseMatrix& outer,
                                       const std::vector<PhaseMatrix>& inner) {
  size_t k = outer.size();
  if (inner.size() != k || k == 0) {
    throw std::invalid_argument("dita_as_spectral_pair: need exactly one inner matrix per outer column");
  }
  size_t n = inner[0].size();
  for (const PhaseMatrix& m : inner) {
    if (m.size() != n) {
      throw std::invalid_argument("dita_as_spectral_pair: inner matrices must share one size");
    }
  }

  DitaSpectralPair pair;
  pair.elements.dim = n + k;
  // Column (m, r): the r-th column of the m-th inner log stacked over the
  // m-th column of the outer log.
  for (size_t m = 0; m < k; ++m) {
    for (size_t r = 0; r < n; ++r) {
      std::vector<Phase> column(n + k);
      for (size_t j = 0; j < n; ++j) {
        column[j] = inner[m].at(j, r);
      }
      for (size_t i = 0; i < k; ++i) {
        column[n + i] = outer.at(i, m);
      }
      pair.elements.elements.push_back(std::move(column));
    }
  }
  pair.spectrum.dim = n + k;
  // Row (i, j): unit vector at j in the first n slots, at i in the last k.
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < n; ++j) {
      std::vector<long long> row(n + k, 0);
      row[j] = 1;
      row[n + i] = 1;
      pair.spectrum.rows.push_back(std::move(row));
    }
  }
  return pair;
}

namespace {

// All index tuples (i1, i2, i3) with i_j < limit_j, in lexicographic order.
std::vector<std::array<long long, 3>> index_tuples(const std::array<long long, 3>& limits) {
  std::vector<std::array<long long, 3>> out;
  for (long long i1 = 0; i1 < limits[0]; ++i1) {
    for (long long i2 = 0; i2 < limits[1]; ++i2) {
      for (long long i3 = 0; i3 < limits[2]; ++i3) {
        out.push_back({i1, i2, i3});
      }
    }
  }
  return out;
}

}  // namespace

ElementSet szabo_base_set(const GroupSpec& g) {
  ElementSet out;
  out.dim = 3;
  for (const auto& idx : index_tuples({g.factor(0).p, g.factor(1).p, g.factor(2).p})) {
    std::vector<Phase> column(3);
    for (size_t j = 0; j < 3; ++j) {
      column[j] = Phase(idx[j], g.factor(j).modulus());
    }
    out.elements.push_back(std::move(column));
  }
  return out;
}

SpectrumSet grid_spectrum(const GroupSpec& g) {
  SpectrumSet out;
  out.dim = 3;
  for (const auto& idx : index_tuples({g.factor(0).p, g.factor(1).p, g.factor(2).p})) {
    out.rows.push_back({idx[0] * g.factor(0).q, idx[1] * g.factor(1).q, idx[2] * g.factor(2).q});
  }
  return out;
}

SpectrumSet szabo_modified_spectrum(const GroupSpec& g) {
  const long long q1 = g.factor(0).q, q2 = g.factor(1).q, q3 = g.factor(2).q;
  const long long p1 = g.factor(0).p, p2 = g.factor(1).p, p3 = g.factor(2).p;

  std::set<std::vector<long long>> rows;
  for (const auto& r : grid_spectrum(g).rows) {
    rows.insert(r);
  }
  // Swap each grid line for its shifted copy: line 1 runs in the first
  // coordinate and is shifted there, line 2 in the second, line 3 in the
  // third.
  for (long long i = 0; i < p1; ++i) {
    rows.erase({i * q1, q2, 0});
    rows.insert({i * q1 + 1, q2, 0});
  }
  for (long long i = 0; i < p2; ++i) {
    rows.erase({0, i * q2, q3});
    rows.insert({0, i * q2 + 1, q3});
  }
  for (long long i = 0; i < p3; ++i) {
    rows.erase({q1, 0, i * q3});
    rows.insert({q1, 0, i * q3 + 1});
  }

  SpectrumSet out;
  out.dim = 3;
  out.rows.assign(rows.begin(), rows.end());  // std::set iterates lexicographically
  return out;
}

PhaseMatrix szabo_matrix(const GroupSpec& g) {
  return spectral_product(szabo_modified_spectrum(g), szabo_base_set(g));
}

}  // namespace spectile

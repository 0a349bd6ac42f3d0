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

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "spectile/matrix.hpp"
#include "spectile/phase.hpp"

namespace spectile {

/// One cyclic factor Z_{p*q} of the ambient group, carrying the split into
/// the grid step q and the point count p used by the modified-grid
/// construction.
struct GroupFactor {
  long long p = 2;
  long long q = 2;
  long long modulus() const { return p * q; }
  bool operator==(const GroupFactor&) const = default;
};

/// The group Z_{p1 q1} x Z_{p2 q2} x Z_{p3 q3} with all p_j, q_j >= 2.
/// The modified-grid construction is specifically three-dimensional.
class GroupSpec {
 public:
  explicit GroupSpec(std::array<GroupFactor, 3> factors);

  const std::array<GroupFactor, 3>& factors() const { return factors_; }
  const GroupFactor& factor(size_t j) const { return factors_[j]; }
  /// Size of the matrix the construction yields: p1 * p2 * p3.
  long long matrix_size() const;

  /// Parses "p1.q1,p2.q2,p3.q3", e.g. "2.2,4.2,2.4".
  static GroupSpec parse(std::string_view text);
  std::string to_string() const;

  bool operator==(const GroupSpec&) const = default;

 private:
  std::array<GroupFactor, 3> factors_;
};

/// A finite set of torus points (group elements), stored as column vectors
/// of exact phases.
struct ElementSet {
  size_t dim = 0;
  std::vector<std::vector<Phase>> elements;

  size_t size() const { return elements.size(); }
  bool has_duplicates() const;
};

/// A finite set of characters, stored as integer row vectors.
struct SpectrumSet {
  size_t dim = 0;
  std::vector<std::vector<long long>> rows;

  size_t size() const { return rows.size(); }
  bool has_duplicates() const;
};

/// Entry (i, k) = <rows[i], elements[k]> mod 1. The |S| x |T| phase matrix
/// of the characters of S evaluated on the points of T.
PhaseMatrix spectral_product(const SpectrumSet& s, const ElementSet& t);

/// True iff (t, s) is a spectral pair: |S| = |T|, no repeats on either side,
/// and the character matrix spectral_product(s, t) is Hadamard.
bool is_spectrum(const SpectrumSet& s, const ElementSet& t);

/// The zero-set view of the same predicate: every nonzero difference of two
/// characters of S must annihilate T, i.e. sum_{a in T} e^(2*pi*i*<r, a>) = 0.
/// Agrees with is_spectrum on all inputs.
bool is_spectrum_by_vanishing(const SpectrumSet& s, const ElementSet& t);

/// Block composition: block (i, j) of the result is m(i, j) + inner[j], an
/// (n*k) x (n*k) log-Hadamard matrix built from a k x k outer matrix and k
/// inner n x n matrices. Inputs must all be Hadamard.
PhaseMatrix build_dita(const PhaseMatrix& outer, const std::vector<PhaseMatrix>& inner);

/// A spectral pair in dimension n + k whose product reproduces a block
/// composition exactly.
struct DitaSpectralPair {
  ElementSet elements;   // columns of the inner logs stacked over repeated outer columns
  SpectrumSet spectrum;  // 0/1 rows: unit vector in the first n slots + unit vector in the last k
};

/// The spectral-pair form of build_dita(outer, inner):
/// spectral_product(pair.spectrum, pair.elements) == build_dita(outer, inner).
DitaSpectralPair dita_as_spectral_pair(const PhaseMatrix& outer,
                                       const std::vector<PhaseMatrix>& inner);

/// The base point set A = prod_j {0, 1/(p_j q_j), ..., (p_j - 1)/(p_j q_j)},
/// columns in lexicographic order of index tuples; |A| = p1 * p2 * p3.
ElementSet szabo_base_set(const GroupSpec& g);

/// The grid spectrum S = prod_j {0, q_j, ..., (p_j - 1) q_j}, rows in
/// lexicographic order. Always a spectrum of szabo_base_set(g).
SpectrumSet grid_spectrum(const GroupSpec& g);

/// The modified grid: three grid lines are swapped for their +1-shifted
/// copies (line 1 shifts first coordinates, line 2 second, line 3 third),
/// keeping the set a spectrum of the base set. Rows sorted lexicographically.
SpectrumSet szabo_modified_spectrum(const GroupSpec& g);

/// The log-Hadamard matrix of the pair (base set, modified spectrum):
/// spectral_product(szabo_modified_spectrum(g), szabo_base_set(g)).
PhaseMatrix szabo_matrix(const GroupSpec& g);

}  // namespace spectile

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

#include <optional>
#include <utility>
#include <vector>

#include "spectile/phase.hpp"

namespace spectile {

/// A matrix of exact phases: the additive (log) form of a matrix with
/// unimodular entries. Entry (i, j) stands for e^(2*pi*i*entry).
///
/// Most operations require a square matrix (the log-Hadamard case); the
/// storage is rectangular because spectral products of mismatched sets are
/// legitimate intermediate values.
class PhaseMatrix {
 public:
  PhaseMatrix() = default;
  PhaseMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static PhaseMatrix from_rows(const std::vector<std::vector<Phase>>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  /// Side length of a square matrix.
  size_t size() const;

  Phase& at(size_t i, size_t j) { return entries_[i * cols_ + j]; }
  const Phase& at(size_t i, size_t j) const { return entries_[i * cols_ + j]; }

  /// Least common multiple of all entry denominators.
  long long common_denominator() const;

  bool operator==(const PhaseMatrix& other) const = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Phase> entries_;
};

/// The N x N Fourier matrix in log form: entry (j, k) = j*k/N mod 1.
PhaseMatrix fourier_matrix(size_t n);

/// First pair of non-orthogonal rows, or nullopt if all row pairs are
/// orthogonal (exact test via RootOfUnitySum::is_zero).
std::optional<std::pair<size_t, size_t>> first_nonorthogonal_rows(const PhaseMatrix& m);

/// True iff every pair of distinct rows is exactly orthogonal. For square
/// matrices of unimodular entries this implies column orthogonality as well.
bool is_hadamard(const PhaseMatrix& m);

/// The D1 * P1 * M * P2 * D2 equivalence move in log form: row and column
/// phase shifts plus row and column permutations.
struct EquivalenceTransform {
  std::vector<Phase> row_phases;
  std::vector<size_t> row_perm;
  std::vector<size_t> col_perm;
  std::vector<Phase> col_phases;

  static EquivalenceTransform identity(size_t n);
  size_t size() const { return row_perm.size(); }
};

/// result(i, j) = row_phases[i] + m(row_perm[i], col_perm[j]) + col_phases[j].
PhaseMatrix apply_equivalence(const PhaseMatrix& m, const EquivalenceTransform& t);

/// Transform that zeroes the first row and column of m (identity
/// permutations, phase shifts only).
EquivalenceTransform dephase_transform(const PhaseMatrix& m);

/// Equivalent matrix whose first row and column are all zero.
PhaseMatrix dephase(const PhaseMatrix& m);

PhaseMatrix transpose(const PhaseMatrix& m);

/// The multiset of phases of the quadruple products
/// h(i,j) * conj(h(k,j)) * h(k,l) * conj(h(i,l)) over all index quadruples.
/// Invariant under equivalence transforms; differing invariants certify
/// inequivalence (equal invariants prove nothing).
class HaagerupInvariant {
 public:
  HaagerupInvariant() = default;
  explicit HaagerupInvariant(const PhaseMatrix& m);

  /// Sorted (phase, multiplicity) pairs.
  const std::vector<std::pair<Phase, long long>>& entries() const { return entries_; }
  /// The set view: distinct phases only.
  std::vector<Phase> distinct_values() const;
  long long total() const;

  bool operator==(const HaagerupInvariant& other) const = default;

 private:
  std::vector<std::pair<Phase, long long>> entries_;
};

HaagerupInvariant haagerup_invariant(const PhaseMatrix& m);

enum class EquivalenceStatus {
  equivalent,    // witness transform found and verified
  inequivalent,  // search space exhausted without a witness
  exhausted,     // node budget hit; no conclusion
};

struct EquivalenceSearchResult {
  EquivalenceStatus status;
  std::optional<EquivalenceTransform> witness;  // satisfies apply_equivalence(b, w) == a
  long long nodes = 0;
};

/// Backtracking search for a transform t with apply_equivalence(b, t) == a.
///
/// Anchored on dephased forms: for every choice of the row/column of b that
/// plays the role of row/column 0 of a, rows are matched by sorted entry
/// multisets and column assignments are narrowed per matched row. A fast
/// Haagerup-invariant comparison short-circuits clear inequivalence.
EquivalenceSearchResult brute_force_equivalent(const PhaseMatrix& a, const PhaseMatrix& b,
                                               long long node_budget = 5'000'000);

}  // namespace spectile

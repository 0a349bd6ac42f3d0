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
#include <span>
#include <vector>

#include "spectile/matrix.hpp"

namespace spectile {

/// A witness of block structure: k column sets of size n and n row tuples of
/// size k such that within each tuple, every pair of rows has a constant
/// entry-wise difference on every column set. A block composition of a k x k
/// outer matrix with n x n inner matrices always carries this structure.
struct DitaPattern {
  size_t block_size = 0;   // n
  size_t block_count = 0;  // k
  std::vector<std::vector<size_t>> column_sets;  // k sets of n column indices
  std::vector<std::vector<size_t>> row_tuples;   // n tuples of k row indices
};

/// True iff rows a and b have the same entry-wise difference (mod 1) at
/// every column in the index set.
bool i_equivalent(const PhaseMatrix& m, size_t row_a, size_t row_b,
                  std::span<const size_t> columns);

/// Witness of (d)-n-equivalence of two rows: d disjoint n-element column
/// sets, each with a constant entry-wise difference. Found by grouping
/// columns by difference value and carving n-sets out of the groups.
std::optional<std::vector<std::vector<size_t>>> dn_equivalent(const PhaseMatrix& m,
                                                              size_t row_a, size_t row_b,
                                                              size_t set_count,
                                                              size_t set_size);

/// Re-checks a pattern against the raw definition via i_equivalent.
bool verify_dita_pattern(const PhaseMatrix& m, const DitaPattern& pattern);

enum class DetectStatus {
  found,      // verified pattern returned
  none,       // exhaustive search: no pattern exists
  exhausted,  // node budget hit; no conclusion
};

struct DetectResult {
  DetectStatus status;
  std::optional<DitaPattern> pattern;
  long long nodes = 0;
};

/// Complete backtracking search for a block-structure witness with the given
/// block size and count.
///
/// Rows are grouped into tuples anchored at the first ungrouped row; every
/// added row refines a running partition of the columns by the level sets of
/// its difference with the anchor, and a branch dies as soon as any cell
/// size stops being divisible by n. Unless the budget is hit, a `none`
/// result is exhaustive: no pattern exists.
DetectResult detect_dita_pattern(const PhaseMatrix& m, size_t block_size, size_t block_count,
                                 long long node_budget = 20'000'000);

/// Aggregated detector report over every factorization N = n * k with
/// n, k >= 2, for the matrix and its transpose.
struct DitaTypeReport {
  struct Entry {
    size_t n = 0;
    size_t k = 0;
    DetectStatus status = DetectStatus::none;
  };
  std::vector<Entry> direct;
  std::vector<Entry> transposed;

  bool any_found() const;
  bool any_exhausted() const;
};

DitaTypeReport is_dita_type(const PhaseMatrix& m, long long node_budget = 20'000'000);

/// Structural exclusion from the families stemming from the 12 x 12 Fourier
/// matrix: every matrix in those orbits keeps either two parameter-free rows
/// that stay (2)-6-equivalent, or three that stay pairwise (3)-4-equivalent
/// with shared index sets. Returns true iff the matrix has neither, i.e. is
/// excluded from all of those orbits.
bool f12_orbit_exclusion_check(const PhaseMatrix& m);

}  // namespace spectile

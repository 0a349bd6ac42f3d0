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

#include "spectile/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace spectile {

PhaseMatrix PhaseMatrix::from_rows(const std::vector<std::vector<Phase>>& rows) {
  PhaseMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) {
      throw std::invalid_argument("PhaseMatrix: ragged rows");
    }
    for (size_t j = 0; j < m.cols(); ++j) {
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

size_t PhaseMatrix::size() const {
  if (!is_square()) {
    throw std::invalid_argument("PhaseMatrix: matrix is not square");
  }
  return rows_;
}

long long PhaseMatrix::common_denominator() const {
  long long den = 1;
  for (const Phase& p : entries_) {
    den = std::lcm(den, p.denominator());
  }
  return den;
}

PhaseMatrix fourier_matrix(size_t n) {
  if (n < 1) {
    throw std::invalid_argument("fourier_matrix: size must be positive");
  }
  PhaseMatrix m(n, n);
  for (size_t j = 0; j < n; ++j) {
    for (size_t k = 0; k < n; ++k) {
      m.at(j, k) = Phase(static_cast<long long>(j * k), static_cast<long long>(n));
    }
  }
  return m;
}

std::optional<std::pair<size_t, size_t>> first_nonorthogonal_rows(const PhaseMatrix& m) {
  size_t n = m.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      RootOfUnitySum sum;
      for (size_t c = 0; c < m.cols(); ++c) {
        sum.add(m.at(i, c) - m.at(j, c));
      }
      if (!sum.is_zero()) {
        return std::make_pair(i, j);
      }
    }
  }
  return std::nullopt;
}

bool is_hadamard(const PhaseMatrix& m) {
  return !first_nonorthogonal_rows(m).has_value();
}

EquivalenceTransform EquivalenceTransform::identity(size_t n) {
  EquivalenceTransform t;
  t.row_phases.assign(n, Phase());
  t.col_phases.assign(n, Phase());
  t.row_perm.resize(n);
  t.col_perm.resize(n);
  std::iota(t.row_perm.begin(), t.row_perm.end(), 0u);
  std::iota(t.col_perm.begin(), t.col_perm.end(), 0u);
  return t;
}

namespace {

void check_permutation(const std::vector<size_t>& perm, size_t n) {
  if (perm.size() != n) {
    throw std::invalid_argument("EquivalenceTransform: permutation size mismatch");
  }
  std::vector<bool> seen(n, false);
  for (size_t v : perm) {
    if (v >= n || seen[v]) {
      throw std::invalid_argument("EquivalenceTransform: not a permutation");
    }
    seen[v] = true;
  }
}

}  // namespace

PhaseMatrix apply_equivalence(const PhaseMatrix& m, const EquivalenceTransform& t) {
  size_t n = m.size();
  if (t.row_phases.size() != n || t.col_phases.size() != n) {
    throw std::invalid_argument("apply_equivalence: phase vector size mismatch");
  }
  check_permutation(t.row_perm, n);
  check_permutation(t.col_perm, n);
  PhaseMatrix out(n, n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      out.at(i, j) = t.row_phases[i] + m.at(t.row_perm[i], t.col_perm[j]) + t.col_phases[j];
    }
  }
  return out;
}

EquivalenceTransform dephase_transform(const PhaseMatrix& m) {
  size_t n = m.size();
  EquivalenceTransform t = EquivalenceTransform::identity(n);
  for (size_t i = 0; i < n; ++i) {
    t.row_phases[i] = m.at(0, 0) - m.at(i, 0);
  }
  for (size_t j = 0; j < n; ++j) {
    t.col_phases[j] = -m.at(0, j);
  }
  return t;
}

PhaseMatrix dephase(const PhaseMatrix& m) {
  return apply_equivalence(m, dephase_transform(m));
}

PhaseMatrix transpose(const PhaseMatrix& m) {
  PhaseMatrix out(m.cols(), m.rows());
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) {
      out.at(j, i) = m.at(i, j);
    }
  }
  return out;
}

HaagerupInvariant::HaagerupInvariant(const PhaseMatrix& m) {
  size_t n = m.size();
  std::vector<Phase> values;
  values.reserve(n * n * n * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t k = 0; k < n; ++k) {
      for (size_t j = 0; j < n; ++j) {
        Phase left = m.at(i, j) - m.at(k, j);
        for (size_t l = 0; l < n; ++l) {
          values.push_back(left + m.at(k, l) - m.at(i, l));
        }
      }
    }
  }
  std::sort(values.begin(), values.end());
  for (const Phase& v : values) {
    if (!entries_.empty() && entries_.back().first == v) {
      ++entries_.back().second;
    } else {
      entries_.emplace_back(v, 1);
    }
  }
}

std::vector<Phase> HaagerupInvariant::distinct_values() const {
  std::vector<Phase> out;
  out.reserve(entries_.size());
  for (const auto& [value, count] : entries_) {
    out.push_back(value);
  }
  return out;
}

long long HaagerupInvariant::total() const {
  long long total = 0;
  for (const auto& [value, count] : entries_) {
    total += count;
  }
  return total;
}

HaagerupInvariant haagerup_invariant(const PhaseMatrix& m) {
  return HaagerupInvariant(m);
}

namespace {

// B re-dephased so that row r0 and column c0 become all-zero.
PhaseMatrix anchor_dephase(const PhaseMatrix& b, size_t r0, size_t c0) {
  size_t n = b.size();
  PhaseMatrix out(n, n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      out.at(i, j) = b.at(i, j) - b.at(r0, j) - b.at(i, c0) + b.at(r0, c0);
    }
  }
  return out;
}

std::vector<Phase> sorted_row(const PhaseMatrix& m, size_t i) {
  std::vector<Phase> row(m.cols());
  for (size_t j = 0; j < m.cols(); ++j) {
    row[j] = m.at(i, j);
  }
  std::sort(row.begin(), row.end());
  return row;
}

std::vector<Phase> sorted_col(const PhaseMatrix& m, size_t j) {
  std::vector<Phase> col(m.rows());
  for (size_t i = 0; i < m.rows(); ++i) {
    col[i] = m.at(i, j);
  }
  std::sort(col.begin(), col.end());
  return col;
}

struct EquivSearch {
  const PhaseMatrix& a_deph;
  const PhaseMatrix& b_deph;
  size_t n;
  long long budget;
  long long nodes = 0;
  bool out_of_budget = false;

  std::vector<std::vector<Phase>> a_row_keys;
  std::vector<std::vector<Phase>> b_row_keys;
  std::vector<size_t> row_assign;  // a-row -> b-row
  std::vector<bool> b_row_used;
  std::vector<uint32_t> col_candidates;  // per a-column, bitmask of b-columns

  EquivSearch(const PhaseMatrix& a, const PhaseMatrix& b, long long node_budget)
      : a_deph(a), b_deph(b), n(a.size()), budget(node_budget) {
    a_row_keys.resize(n);
    b_row_keys.resize(n);
    for (size_t i = 0; i < n; ++i) {
      a_row_keys[i] = sorted_row(a_deph, i);
      b_row_keys[i] = sorted_row(b_deph, i);
    }
    row_assign.assign(n, 0);
    b_row_used.assign(n, false);
  }

  // Perfect matching a-columns -> candidate b-columns (simple augmenting paths).
  bool complete_column_matching(std::vector<size_t>& match_out) {
    std::vector<int> matched_to(n, -1);  // b-col -> a-col
    for (size_t j = 0; j < n; ++j) {
      std::vector<bool> visited(n, false);
      if (!augment(j, visited, matched_to)) {
        return false;
      }
    }
    match_out.assign(n, 0);
    for (size_t c = 0; c < n; ++c) {
      if (matched_to[c] >= 0) {
        match_out[static_cast<size_t>(matched_to[c])] = c;
      }
    }
    return true;
  }

  bool augment(size_t j, std::vector<bool>& visited, std::vector<int>& matched_to) {
    for (size_t c = 0; c < n; ++c) {
      if (!(col_candidates[j] & (1u << c)) || visited[c]) {
        continue;
      }
      visited[c] = true;
      if (matched_to[c] < 0 ||
          augment(static_cast<size_t>(matched_to[c]), visited, matched_to)) {
        matched_to[c] = static_cast<int>(j);
        return true;
      }
    }
    return false;
  }

  bool assign_rows(size_t i, std::vector<size_t>& col_match) {
    if (i == n) {
      return complete_column_matching(col_match);
    }
    // Candidate b-rows in index order; sorted-entry multisets must agree.
    for (size_t r = 0; r < n; ++r) {
      if (b_row_used[r] || b_row_keys[r] != a_row_keys[i]) {
        continue;
      }
      if (++nodes > budget) {
        out_of_budget = true;
        return false;
      }
      std::vector<uint32_t> saved = col_candidates;
      bool feasible = true;
      for (size_t j = 0; j < n && feasible; ++j) {
        uint32_t mask = col_candidates[j];
        uint32_t narrowed = 0;
        for (uint32_t rest = mask; rest != 0; rest &= rest - 1) {
          uint32_t c = static_cast<uint32_t>(__builtin_ctz(rest));
          if (b_deph.at(r, c) == a_deph.at(i, j)) {
            narrowed |= 1u << c;
          }
        }
        if (narrowed == 0) {
          feasible = false;
        }
        col_candidates[j] = narrowed;
      }
      if (feasible) {
        row_assign[i] = r;
        b_row_used[r] = true;
        if (assign_rows(i + 1, col_match)) {
          return true;
        }
        b_row_used[r] = false;
      }
      col_candidates = std::move(saved);
      if (out_of_budget) {
        return false;
      }
    }
    return false;
  }
};

}  // namespace

EquivalenceSearchResult brute_force_equivalent(const PhaseMatrix& a, const PhaseMatrix& b,
                                               long long node_budget) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("brute_force_equivalent: size mismatch");
  }
  size_t n = a.size();
  if (n > 32) {
    throw std::invalid_argument("brute_force_equivalent: sizes above 32 are not supported");
  }
  EquivalenceSearchResult result{EquivalenceStatus::inequivalent, std::nullopt, 0};
  if (haagerup_invariant(a) != haagerup_invariant(b)) {
    return result;  // invariant mismatch certifies inequivalence
  }

  PhaseMatrix a_deph = dephase(a);
  std::vector<std::vector<Phase>> a_col_keys(n);
  for (size_t j = 0; j < n; ++j) {
    a_col_keys[j] = sorted_col(a_deph, j);
  }

  for (size_t r0 = 0; r0 < n; ++r0) {
    for (size_t c0 = 0; c0 < n; ++c0) {
      PhaseMatrix b_deph = anchor_dephase(b, r0, c0);
      EquivSearch search(a_deph, b_deph, node_budget - result.nodes);
      if (search.a_row_keys[0] != search.b_row_keys[r0]) {
        continue;  // both are all-zero rows; only fails on degenerate input
      }
      // Column candidates: column 0 is pinned to c0, others filtered by
      // sorted column multisets.
      search.col_candidates.assign(n, 0);
      search.col_candidates[0] = 1u << c0;
      std::vector<std::vector<Phase>> b_col_keys(n);
      for (size_t c = 0; c < n; ++c) {
        b_col_keys[c] = sorted_col(b_deph, c);
      }
      for (size_t j = 1; j < n; ++j) {
        uint32_t mask = 0;
        for (size_t c = 0; c < n; ++c) {
          if (c != c0 && b_col_keys[c] == a_col_keys[j]) {
            mask |= 1u << c;
          }
        }
        search.col_candidates[j] = mask;
      }
      bool empty = false;
      for (size_t j = 0; j < n; ++j) {
        if (search.col_candidates[j] == 0) {
          empty = true;
          break;
        }
      }
      if (empty) {
        continue;
      }

      search.row_assign[0] = r0;
      search.b_row_used[r0] = true;
      std::vector<size_t> col_match;
      bool found = search.assign_rows(1, col_match);
      result.nodes += search.nodes;
      if (search.out_of_budget) {
        result.status = EquivalenceStatus::exhausted;
        return result;
      }
      if (!found) {
        continue;
      }

      // Recover the phases: t must satisfy apply_equivalence(b, t) == a, i.e.
      // a(i,j) = rp[i] + b(perm_r[i], perm_c[j]) + cp[j].
      EquivalenceTransform t = EquivalenceTransform::identity(n);
      t.row_perm = search.row_assign;
      t.col_perm = col_match;
      for (size_t j = 0; j < n; ++j) {
        t.col_phases[j] = a.at(0, j) - b.at(t.row_perm[0], t.col_perm[j]);
      }
      for (size_t i = 0; i < n; ++i) {
        t.row_phases[i] = a.at(i, 0) - b.at(t.row_perm[i], t.col_perm[0]) - t.col_phases[0];
      }
      if (apply_equivalence(b, t) == a) {
        result.status = EquivalenceStatus::equivalent;
        result.witness = std::move(t);
        return result;
      }
      // A matching that fails full verification means the column matching
      // picked an assignment inconsistent with some row; fall through and
      // keep searching other anchors.
    }
  }
  return result;
}

}  // namespace spectile

#include "raag/matrix.hpp"

#include "raag/errors.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

namespace raag {

namespace {

using Dense = std::vector<std::vector<BigInt>>;

struct UnitReduction {
  std::size_t unit_pivots = 0;
  Dense remainder;
};

// Eliminates pivots of absolute value 1 until none remain. Every step is a
// unimodular row operation followed by clearing the pivot row with column
// operations, so the Smith form of the input is diag(1,...,1) plus the Smith
// form of the remainder.
UnitReduction eliminate_unit_pivots(const IntegerMatrix& a) {
  const std::size_t nr = a.rows();
  const std::size_t nc = a.cols();
  std::vector<std::map<std::size_t, BigInt>> rows(nr);
  std::vector<std::set<std::size_t>> cols(nc);
  for (std::size_t r = 0; r < nr; ++r) {
    rows[r] = a.row(r);
    for (const auto& [c, v] : rows[r]) cols[c].insert(r);
  }

  UnitReduction out;
  while (true) {
    // Markowitz-style choice among unit entries: minimise fill-in.
    std::size_t best_r = nr, best_c = nc;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = 0; r < nr && best_cost != 0; ++r) {
      if (rows[r].empty()) continue;
      const std::size_t row_weight = rows[r].size() - 1;
      for (const auto& [c, v] : rows[r]) {
        if (v != 1 && v != -1) continue;
        const std::size_t cost = row_weight * (cols[c].size() - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_r = r;
          best_c = c;
          if (cost == 0) break;
        }
      }
    }
    if (best_r == nr) break;

    const std::size_t pr = best_r;
    const std::size_t pc = best_c;
    const BigInt pivot = rows[pr].at(pc);  // +-1, so pivot^-1 == pivot
    std::vector<std::size_t> targets;
    for (std::size_t r : cols[pc]) {
      if (r != pr) targets.push_back(r);
    }
    for (std::size_t r : targets) {
      const BigInt factor = rows[r].at(pc) * pivot;
      for (const auto& [c, v] : rows[pr]) {
        auto it = rows[r].find(c);
        if (it == rows[r].end()) {
          rows[r].emplace(c, -factor * v);
          cols[c].insert(r);
        } else {
          it->second -= factor * v;
          if (it->second == 0) {
            rows[r].erase(it);
            cols[c].erase(r);
          }
        }
      }
    }
    for (const auto& [c, v] : rows[pr]) cols[c].erase(pr);
    rows[pr].clear();
    ++out.unit_pivots;
  }

  std::vector<std::size_t> live_cols;
  for (std::size_t c = 0; c < nc; ++c) {
    if (!cols[c].empty()) live_cols.push_back(c);
  }
  for (std::size_t r = 0; r < nr; ++r) {
    if (rows[r].empty()) continue;
    std::vector<BigInt> dense_row(live_cols.size(), BigInt(0));
    for (std::size_t k = 0; k < live_cols.size(); ++k) {
      auto it = rows[r].find(live_cols[k]);
      if (it != rows[r].end()) dense_row[k] = it->second;
    }
    out.remainder.push_back(std::move(dense_row));
  }
  return out;
}

}  // namespace

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

std::size_t IntegerMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

BigInt IntegerMatrix::at(std::size_t r, std::size_t c) const {
  auto it = data_.at(r).find(c);
  return it == data_[r].end() ? BigInt(0) : it->second;
}

void IntegerMatrix::set(std::size_t r, std::size_t c, const BigInt& v) {
  if (r >= rows_ || c >= cols_) throw ValidationError("matrix index out of range");
  if (v == 0) {
    data_[r].erase(c);
  } else {
    data_[r][c] = v;
  }
}

void IntegerMatrix::add(std::size_t r, std::size_t c, const BigInt& v) {
  set(r, c, at(r, c) + v);
}

std::vector<Triplet> IntegerMatrix::triplets() const {
  std::vector<Triplet> out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) out.push_back(Triplet{r, c, v});
  }
  return out;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw ValidationError("matrix shape mismatch");
  IntegerMatrix c(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    std::map<std::size_t, BigInt> acc;
    for (const auto& [k, v] : a.data_[r]) {
      for (const auto& [col, w] : b.data_[k]) acc[col] += v * w;
    }
    for (auto& [col, v] : acc) {
      if (v != 0) c.data_[r].emplace(col, std::move(v));
    }
  }
  return c;
}

std::vector<std::vector<BigInt>> to_dense(const IntegerMatrix& a) {
  Dense d(a.rows(), std::vector<BigInt>(a.cols(), BigInt(0)));
  for (const auto& t : a.triplets()) d[t.row][t.col] = t.value;
  return d;
}

std::size_t bareiss_rank(Dense m) {
  const std::size_t nr = m.size();
  if (nr == 0) return 0;
  const std::size_t nc = m[0].size();
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < nc && rank < nr; ++c) {
    std::size_t p = rank;
    while (p < nr && m[p][c] == 0) ++p;
    if (p == nr) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < nr; ++r) {
      for (std::size_t k = c + 1; k < nc; ++k) {
        m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
      }
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

std::vector<BigInt> dense_smith_invariants(Dense m) {
  std::vector<BigInt> diag;
  const std::size_t nr = m.size();
  const std::size_t nc = nr == 0 ? 0 : m[0].size();
  for (std::size_t t = 0; t < std::min(nr, nc); ++t) {
    while (true) {
      // Move the entry of least absolute value into (t, t).
      std::size_t br = nr, bc = nc;
      for (std::size_t r = t; r < nr; ++r) {
        for (std::size_t c = t; c < nc; ++c) {
          if (m[r][c] != 0 && (br == nr || abs(m[r][c]) < abs(m[br][bc]))) {
            br = r;
            bc = c;
          }
        }
      }
      if (br == nr) return diag;
      std::swap(m[t], m[br]);
      for (auto& row : m) std::swap(row[t], row[bc]);

      bool clean = true;
      for (std::size_t r = t + 1; r < nr; ++r) {
        if (m[r][t] == 0) continue;
        BigInt q = m[r][t] / m[t][t];
        for (std::size_t c = t; c < nc; ++c) m[r][c] -= q * m[t][c];
        if (m[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < nc; ++c) {
        if (m[t][c] == 0) continue;
        BigInt q = m[t][c] / m[t][t];
        for (std::size_t r = t; r < nr; ++r) m[r][c] -= q * m[r][t];
        if (m[t][c] != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold any offending row into row t and retry.
      std::size_t bad = nr;
      for (std::size_t r = t + 1; r < nr && bad == nr; ++r) {
        for (std::size_t c = t + 1; c < nc; ++c) {
          if (m[r][c] % m[t][t] != 0) {
            bad = r;
            break;
          }
        }
      }
      if (bad == nr) break;
      for (std::size_t c = t; c < nc; ++c) m[t][c] += m[bad][c];
    }
    diag.push_back(abs(m[t][t]));
  }
  return diag;
}

std::size_t rank(const IntegerMatrix& a) {
  UnitReduction red = eliminate_unit_pivots(a);
  return red.unit_pivots + bareiss_rank(std::move(red.remainder));
}

std::vector<BigInt> smith_invariants(const IntegerMatrix& a) {
  UnitReduction red = eliminate_unit_pivots(a);
  std::vector<BigInt> out(red.unit_pivots, BigInt(1));
  for (auto& d : dense_smith_invariants(std::move(red.remainder))) {
    out.push_back(std::move(d));
  }
  return out;
}

void write_triplets(std::ostream& out, const IntegerMatrix& a) {
  out << a.rows() << ' ' << a.cols() << ' ' << a.nonzeros() << '\n';
  for (const auto& t : a.triplets()) {
    out << t.row << ' ' << t.col << ' ' << t.value << '\n';
  }
}

IntegerMatrix read_triplets(std::istream& in) {
  std::size_t rows = 0, cols = 0, nnz = 0;
  if (!(in >> rows >> cols >> nnz)) {
    throw ValidationError("triplet header must be `rows cols nnz`");
  }
  IntegerMatrix a(rows, cols);
  for (std::size_t k = 0; k < nnz; ++k) {
    std::size_t r = 0, c = 0;
    std::string value;
    if (!(in >> r >> c >> value)) {
      throw ValidationError("triplet line " + std::to_string(k + 1) + " is malformed");
    }
    if (r >= rows || c >= cols) {
      throw ValidationError("triplet line " + std::to_string(k + 1) + " is out of range");
    }
    try {
      a.add(r, c, BigInt(value));
    } catch (const std::runtime_error&) {
      throw ValidationError("triplet line " + std::to_string(k + 1) + " has a bad value");
    }
  }
  return a;
}

}  // namespace raag

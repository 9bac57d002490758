#include "tgr/linalg.hpp"

#include <functional>
#include <stdexcept>

namespace tgr {

namespace {

void require_square(const PolyMatrix& m) {
  if (m.empty()) throw std::invalid_argument("determinant of an empty matrix");
  for (const auto& row : m) {
    if (row.size() != m.size()) throw std::invalid_argument("determinant of a non-square matrix");
  }
}

Combination scaled_difference(const Combination& a, const Scalar& c, const Combination& b) {
  Combination out = a;
  for (const auto& [i, v] : b) {
    Scalar s = out[i] - c * v;
    if (s.is_zero()) {
      out.erase(i);
    } else {
      out[i] = std::move(s);
    }
  }
  return out;
}

}  // namespace

Polynomial determinant_cofactor(const PolyMatrix& m) {
  require_square(m);
  const Ring& ring = m[0][0].ring();
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Polynomial det(ring);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    PolyMatrix sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      sub.push_back(std::move(row));
    }
    Polynomial term = m[0][j] * determinant_cofactor(sub);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

Polynomial determinant_bareiss(const PolyMatrix& input) {
  require_square(input);
  PolyMatrix a = input;
  const Ring& ring = a[0][0].ring();
  const std::size_t n = a.size();
  Polynomial previous = Polynomial::constant(ring, Scalar(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k].is_zero()) ++swap;
      if (swap == n) return Polynomial(ring);
      std::swap(a[k], a[swap]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = exact_divide(a[i][j] * a[k][k] - a[i][k] * a[k][j], previous);
      }
    }
    previous = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

Polynomial determinant(const PolyMatrix& m) {
  require_square(m);
  return m.size() <= 3 ? determinant_cofactor(m) : determinant_bareiss(m);
}

std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k) {
  std::vector<Polynomial> out;
  if (m.empty() || k == 0 || k > m.size() || k > m[0].size()) return out;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::vector<std::size_t> r(k);
  std::vector<std::size_t> c(k);
  std::function<void(std::size_t, std::size_t)> pick_cols;
  std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t at, std::size_t from) {
    if (at == k) {
      pick_cols(0, 0);
      return;
    }
    for (std::size_t i = from; i < rows; ++i) {
      r[at] = i;
      pick_rows(at + 1, i + 1);
    }
  };
  pick_cols = [&](std::size_t at, std::size_t from) {
    if (at == k) {
      PolyMatrix sub(k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) sub[i].push_back(m[r[i]][c[j]]);
      }
      out.push_back(determinant(sub));
      return;
    }
    for (std::size_t j = from; j < cols; ++j) {
      c[at] = j;
      pick_cols(at + 1, j + 1);
    }
  };
  pick_rows(0, 0);
  return out;
}

LinearSpan::LinearSpan(Ring ring, bool track_combinations)
    : ring_(std::move(ring)), track_(track_combinations) {}

bool LinearSpan::insert(const Polynomial& f) {
  const std::size_t index = inserted_++;
  Polynomial v = f.in_ring(ring_);
  Combination combo;
  if (track_) combo[index] = Scalar(1);
  while (!v.is_zero()) {
    auto it = pivots_.find(v.leading_monomial());
    if (it == pivots_.end()) break;
    const Row& row = rows_[it->second];
    Scalar c = v.leading_coeff();
    v = v.sub_mul(c, Monomial(), row.vector);
    if (track_) combo = scaled_difference(combo, c, row.combination);
  }
  if (v.is_zero()) {
    if (track_) kernel_.push_back(std::move(combo));
    return false;
  }
  Scalar inv = v.leading_coeff().inverse();
  if (track_) {
    for (auto& [i, c] : combo) c *= inv;
  }
  v = v * inv;
  pivots_.emplace(v.leading_monomial(), rows_.size());
  rows_.push_back({std::move(v), std::move(combo)});
  return true;
}

Polynomial LinearSpan::reduce(const Polynomial& f) const {
  Polynomial v = f.in_ring(ring_);
  Polynomial remainder(ring_);
  while (!v.is_zero()) {
    auto it = pivots_.find(v.leading_monomial());
    if (it == pivots_.end()) {
      Polynomial lead = Polynomial::term(ring_, v.leading_monomial(), v.leading_coeff());
      remainder += lead;
      v -= lead;
      continue;
    }
    v = v.sub_mul(v.leading_coeff(), Monomial(), rows_[it->second].vector);
  }
  return remainder;
}

std::size_t coeff_matrix_rank(std::span<const Polynomial> polys, unsigned degree) {
  if (polys.empty()) return 0;
  LinearSpan span(polys.front().ring());
  for (const auto& f : polys) {
    if (!f.is_homogeneous_of_degree(degree)) {
      throw NotHomogeneous(f.str() + " is not homogeneous of degree " + std::to_string(degree));
    }
    span.insert(f);
  }
  return span.rank();
}

std::size_t macaulay_rank(std::span<const Polynomial> generators, unsigned degree) {
  if (generators.empty()) return 0;
  const Ring& ring = generators.front().ring();
  LinearSpan span(ring);
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw NotHomogeneous(g.str() + " is not homogeneous");
    int dg = g.degree();
    if (dg > static_cast<int>(degree)) continue;
    for (const auto& m : monomials_of_degree(ring.size(), degree - static_cast<unsigned>(dg))) {
      span.insert(g.mul_monomial(m));
    }
  }
  return span.rank();
}

std::vector<std::vector<Scalar>> linear_relations(std::span<const Polynomial> polys) {
  std::vector<std::vector<Scalar>> out;
  if (polys.empty()) return out;
  LinearSpan span(polys.front().ring(), true);
  for (const auto& f : polys) span.insert(f);
  for (const auto& combo : span.kernel()) {
    std::vector<Scalar> v(polys.size());
    for (const auto& [i, c] : combo) v[i] = c;
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(ScalarMatrix rows) {
  std::size_t r = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    Scalar inv = rows[r][c].inverse();
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      Scalar factor = rows[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
    }
    ++r;
  }
  return r;
}

ScalarMatrix reduced_row_echelon(ScalarMatrix rows) {
  std::size_t r = 0;
  if (rows.empty()) return rows;
  const std::size_t cols = rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    Scalar inv = rows[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar factor = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

}  // namespace tgr

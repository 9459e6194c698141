#include "cremona/intlat.hpp"

#include <algorithm>
#include <cstddef>

namespace cremona {

namespace {

// floor division quotient, used to keep reductions canonical
mpz_class fdiv_q(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

} // namespace

std::vector<std::vector<mpz_class>> integer_kernel(const ZMat& m) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  if (cols == 0) return {};

  ZMat a = m;
  // U tracks the unimodular column operations applied to a.
  ZMat u(cols, std::vector<mpz_class>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;

  auto col_sub = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
    for (std::size_t i = 0; i < rows; ++i) a[i][dst] -= q * a[i][src];
    for (std::size_t i = 0; i < cols; ++i) u[i][dst] -= q * u[i][src];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][x], a[i][y]);
    for (std::size_t i = 0; i < cols; ++i) std::swap(u[i][x], u[i][y]);
  };
  auto col_neg = [&](std::size_t x) {
    for (std::size_t i = 0; i < rows; ++i) a[i][x] = -a[i][x];
    for (std::size_t i = 0; i < cols; ++i) u[i][x] = -u[i][x];
  };

  std::size_t pivcol = 0;
  for (std::size_t row = 0; row < rows && pivcol < cols; ++row) {
    // reduce row entries right of pivcol until at most one survives
    while (true) {
      std::size_t best = cols;
      for (std::size_t j = pivcol; j < cols; ++j) {
        if (a[row][j] != 0 && (best == cols || abs(a[row][j]) < abs(a[row][best]))) best = j;
      }
      if (best == cols) break; // row is zero from pivcol on
      col_swap(pivcol, best);
      bool cleared = true;
      for (std::size_t j = pivcol + 1; j < cols; ++j) {
        if (a[row][j] == 0) continue;
        mpz_class q = fdiv_q(a[row][j], a[row][pivcol]);
        col_sub(j, pivcol, q);
        if (a[row][j] != 0) cleared = false;
      }
      if (cleared) {
        if (a[row][pivcol] < 0) col_neg(pivcol);
        ++pivcol;
        break;
      }
    }
  }

  std::vector<std::vector<mpz_class>> ker;
  for (std::size_t j = pivcol; j < cols; ++j) {
    std::vector<mpz_class> v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = u[i][j];
    ker.push_back(std::move(v));
  }
  return ker;
}

ZMat hermite_form(ZMat rows) {
  if (rows.empty()) return rows;
  std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])))
          best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool cleared = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        mpz_class q = [&] {
          mpz_class t;
          mpz_fdiv_q(t.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
          return t;
        }();
        for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) cleared = false;
      }
      if (cleared) {
        if (rows[r][c] < 0)
          for (auto& x : rows[r]) x = -x;
        // reduce entries above the pivot
        for (std::size_t i = 0; i < r; ++i) {
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
          if (q != 0)
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        }
        ++r;
        break;
      }
    }
  }
  rows.resize(r);
  return rows;
}

std::vector<mpz_class> smith_diagonal(ZMat m) {
  std::vector<mpz_class> diag;
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t off = 0;
  while (off < rows && off < cols) {
    // locate smallest nonzero entry in the trailing block
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = off; i < rows; ++i)
      for (std::size_t j = off; j < cols; ++j)
        if (m[i][j] != 0 && (pi == rows || abs(m[i][j]) < abs(m[pi][pj]))) { pi = i; pj = j; }
    if (pi == rows) break;
    std::swap(m[off], m[pi]);
    for (std::size_t i = off; i < rows; ++i) std::swap(m[i][off], m[i][pj]);

    bool dirty = false;
    for (std::size_t i = off + 1; i < rows; ++i) {
      if (m[i][off] == 0) continue;
      mpz_class q = m[i][off] / m[off][off];
      for (std::size_t j = off; j < cols; ++j) m[i][j] -= q * m[off][j];
      if (m[i][off] != 0) dirty = true;
    }
    for (std::size_t j = off + 1; j < cols; ++j) {
      if (m[off][j] == 0) continue;
      mpz_class q = m[off][j] / m[off][off];
      for (std::size_t i = off; i < rows; ++i) m[i][j] -= q * m[i][off];
      if (m[off][j] != 0) dirty = true;
    }
    if (dirty) continue;

    // enforce divisibility d_off | every remaining entry
    bool fixed = true;
    for (std::size_t i = off + 1; i < rows && fixed; ++i)
      for (std::size_t j = off + 1; j < cols && fixed; ++j)
        if (m[i][j] % m[off][off] != 0) {
          for (std::size_t k = off; k < cols; ++k) m[off][k] += m[i][k];
          fixed = false;
        }
    if (!fixed) continue;

    if (m[off][off] < 0) m[off][off] = -m[off][off];
    diag.push_back(m[off][off]);
    ++off;
  }
  return diag;
}

} // namespace cremona

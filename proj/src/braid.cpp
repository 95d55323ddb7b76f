#include "khof/braid.hpp"

#include <utility>

namespace khof {

namespace {

template <class T>
std::vector<std::vector<T>> minor_of(const std::vector<std::vector<T>>& m, std::size_t r, std::size_t c) {
  std::vector<std::vector<T>> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == r) continue;
    std::vector<T> row;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != c) row.push_back(m[i][j]);
    out.push_back(std::move(row));
  }
  return out;
}

template <class T>
T det_impl(std::vector<std::vector<T>> m, const T& zero, const T& one) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  if (n == 1) return m[0][0];
  if (n <= 4) {
    T sum = zero;
    for (std::size_t j = 0; j < n; ++j) {
      if (m[0][j].is_zero()) continue;
      T term = m[0][j] * det_impl(minor_of(m, 0, j), zero, one);
      if (j % 2) sum -= term;
      else sum += term;
    }
    return sum;
  }
  // Bareiss: every division below is exact.
  T prev = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return zero;
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev);
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

LaurentPoly t_mono(int c, int e) { return LaurentPoly::monomial(c, e, Var::t); }

}  // namespace

LaurentMatrix identity_matrix(std::size_t n) {
  LaurentMatrix m(n, std::vector<LaurentPoly>(n, LaurentPoly(Var::t)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = t_mono(1, 0);
  return m;
}

LaurentMatrix multiply(const LaurentMatrix& a, const LaurentMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  LaurentMatrix c(n, std::vector<LaurentPoly>(p, LaurentPoly(Var::t)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < p; ++j)
        if (!b[l][j].is_zero()) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

LaurentPoly determinant(const LaurentMatrix& m) {
  return det_impl(m, LaurentPoly(Var::t), t_mono(1, 0));
}

BiLaurent determinant(const std::vector<std::vector<BiLaurent>>& m) {
  return det_impl(m, BiLaurent(), BiLaurent::constant(1));
}

LaurentMatrix inverse_unit_det(const LaurentMatrix& m) {
  const std::size_t n = m.size();
  const LaurentPoly d = determinant(m);
  if (d.term_count() != 1 || abs(d.terms().begin()->second) != 1)
    throw Error(ErrorKind::NotDivisible, "determinant " + to_string(d) + " is not a unit");
  const auto& [e2, c] = *d.terms().begin();
  const LaurentPoly dinv = LaurentPoly::half_monomial(c, -e2, Var::t);
  LaurentMatrix inv(n, std::vector<LaurentPoly>(n, LaurentPoly(Var::t)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LaurentPoly cof = determinant(minor_of(m, i, j)) * dinv;
      inv[j][i] = (i + j) % 2 ? -cof : cof;
    }
  return inv;
}

BurauMatrix burau_generator(int strands, int letter) {
  BraidWord{strands, {letter}}.check();
  const int n = strands - 1;
  const int i = std::abs(letter);
  BurauMatrix m = identity_matrix(n);
  const LaurentPoly one = t_mono(1, 0), t = t_mono(1, 1), mt = t_mono(-1, 1);
  if (n == 1) {
    m[0][0] = mt;
  } else if (i == 1) {
    m[0][0] = mt;
    m[0][1] = one;
  } else if (i == strands - 1) {
    // The block acts on the last two coordinates.
    m[n - 1][n - 2] = t;
    m[n - 1][n - 1] = mt;
  } else {
    m[i - 1][i - 2] = t;
    m[i - 1][i - 1] = mt;
    m[i - 1][i] = one;
  }
  return letter > 0 ? m : inverse_unit_det(m);
}

BurauMatrix burau(const BraidWord& b) {
  b.check();
  if (b.strands < 2) throw Error(ErrorKind::BadParameters, "Burau representation needs l >= 2");
  BurauMatrix m = identity_matrix(b.strands - 1);
  for (int letter : b.letters) m = multiply(m, burau_generator(b.strands, letter));
  return m;
}

BiLaurent axis_determinant(const BraidWord& b) {
  const BurauMatrix rho = burau(b);
  const std::size_t n = rho.size();
  std::vector<std::vector<BiLaurent>> m(n, std::vector<BiLaurent>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = -BiLaurent::from_y(rho[i][j]);
      if (i == j) m[i][j] += BiLaurent::x();
    }
  return determinant(m);
}

BiLaurent normalize_unit(const BiLaurent& p) {
  if (p.is_zero()) return p;
  BiLaurent s = p.shifted(-p.min_x(), -p.min_y());
  return s.terms().begin()->second < 0 ? -s : s;
}

BiLaurent alexander_axis(const BraidWord& b) { return normalize_unit(axis_determinant(b)); }

TermTest delta_term_test(const BiLaurent& p) {
  const BiLaurent one = BiLaurent::constant(1);
  const BiLaurent e = (BiLaurent::x() - one) * (BiLaurent::y() - one) * p;
  return {e.term_count(), e.term_count() > 4};
}

}  // namespace khof

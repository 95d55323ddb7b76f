#pragma once

// Exact sparse Laurent polynomials over Z in one variable (half-integer
// exponents) and two variables, plus Gaussian integers.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "khof/error.hpp"

namespace khof {

using BigInt = mpz_class;

enum class Var { t, q, A };

char var_name(Var v);

/// One-variable Laurent polynomial. Exponents are stored doubled so that
/// t^{1/2} style terms have integer keys; a zero coefficient is never stored.
class LaurentPoly {
 public:
  using TermMap = std::map<int, BigInt>;

  explicit LaurentPoly(Var v = Var::q) : var_(v) {}

  static LaurentPoly constant(const BigInt& c, Var v = Var::q);
  /// c * v^e for an integer exponent e.
  static LaurentPoly monomial(const BigInt& c, int e, Var v = Var::q);
  /// c * v^{e2/2}.
  static LaurentPoly half_monomial(const BigInt& c, int e2, Var v = Var::q);

  Var var() const { return var_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  bool has_half_exponents() const;

  /// Coefficient of v^{e2/2}.
  BigInt coeff2(int e2) const;
  /// Coefficient of v^e.
  BigInt coeff(int e) const { return coeff2(2 * e); }
  int min_exp2() const;
  int max_exp2() const;

  void add_term2(int e2, const BigInt& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  LaurentPoly scaled(const BigInt& c) const;
  /// Multiply by v^{e2/2}.
  LaurentPoly shifted2(int e2) const;
  LaurentPoly pow(unsigned n) const;

  /// Exact quotient; throws NotDivisible if o does not divide *this.
  LaurentPoly exact_div(const LaurentPoly& o) const;

  /// v -> v^{-1}.
  LaurentPoly inverted() const;
  /// Reinterpret the same exponent map as a polynomial in another variable,
  /// with exponent map e -> e * num / den (doubled keys). Used for the
  /// A -> q and q -> t changes of variable.
  LaurentPoly substituted(Var to, int num, int den) const;
  /// q-polynomial viewed in t = q^2.
  LaurentPoly as_t() const;
  /// t-polynomial viewed in q = t^{1/2}.
  LaurentPoly as_q() const;

  BigInt sum_of_coefficients() const;
  BigInt sum_of_abs_coefficients() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.var_ == b.var_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  void check_var(const LaurentPoly& o) const;

  Var var_;
  TermMap terms_;
};

inline LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
inline LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
inline LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }

/// Text form: terms by ascending exponent, e.g. "-q - q^5", "2 + t^2 + t^4",
/// "t^(1/2) - 3*t^(-5/2)".
std::string to_string(const LaurentPoly& p);
/// Inverse of to_string. The variable is read from the text; `fallback` is
/// used for constants.
LaurentPoly parse_laurent(std::string_view text, Var fallback = Var::q);

/// Two-variable Laurent polynomial in x and y with integer exponents.
class BiLaurent {
 public:
  using Exp = std::pair<int, int>;
  using TermMap = std::map<Exp, BigInt>;

  BiLaurent() = default;
  static BiLaurent constant(const BigInt& c);
  static BiLaurent monomial(const BigInt& c, int ex, int ey);
  static BiLaurent x() { return monomial(1, 1, 0); }
  static BiLaurent y() { return monomial(1, 0, 1); }
  /// Embed a one-variable polynomial in y (integer exponents required).
  static BiLaurent from_y(const LaurentPoly& p);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  BigInt coeff(int ex, int ey) const;
  void add_term(int ex, int ey, const BigInt& c);

  BiLaurent& operator+=(const BiLaurent& o);
  BiLaurent& operator-=(const BiLaurent& o);
  BiLaurent& operator*=(const BiLaurent& o);
  BiLaurent operator-() const;
  BiLaurent scaled(const BigInt& c) const;
  BiLaurent shifted(int dx, int dy) const;
  BiLaurent pow(unsigned n) const;
  BiLaurent exact_div(const BiLaurent& o) const;

  int min_x() const;
  int max_x() const;
  int min_y() const;
  int max_y() const;
  /// Coefficient of x^k as a polynomial in y.
  LaurentPoly x_coefficient(int k, Var yvar = Var::t) const;

  friend bool operator==(const BiLaurent& a, const BiLaurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BiLaurent& a, const BiLaurent& b) { return !(a == b); }

 private:
  TermMap terms_;
};

inline BiLaurent operator+(BiLaurent a, const BiLaurent& b) { return a += b; }
inline BiLaurent operator-(BiLaurent a, const BiLaurent& b) { return a -= b; }
inline BiLaurent operator*(BiLaurent a, const BiLaurent& b) { return a *= b; }

/// Descending lexicographic order on (x, y), e.g. "x + y", "x - y^2".
/// Variable names can be overridden, e.g. ('t','q') for Poincare polynomials.
std::string to_string(const BiLaurent& p, char xname = 'x', char yname = 'y');
BiLaurent parse_bilaurent(std::string_view text, char xname = 'x', char yname = 'y');

struct GaussianInt {
  BigInt re{0};
  BigInt im{0};

  GaussianInt() = default;
  GaussianInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}

  GaussianInt& operator+=(const GaussianInt& o);
  GaussianInt& operator*=(const GaussianInt& o);
  GaussianInt operator-() const { return {-re, -im}; }
  BigInt norm() const { return re * re + im * im; }
  GaussianInt pow(unsigned n) const;

  friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianInt& a, const GaussianInt& b) { return !(a == b); }
};

inline GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
inline GaussianInt operator*(GaussianInt a, const GaussianInt& b) { return a *= b; }

std::string to_string(const GaussianInt& z);

/// Substitute q -> -i (so q^{-1} -> i). Requires integer q-exponents.
GaussianInt eval_gaussian(const LaurentPoly& p);

}  // namespace khof

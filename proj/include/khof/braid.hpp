#pragma once

// Reduced Burau representation and the two-variable Alexander polynomial of
// a braid closure together with its axis, Delta(x, y) = det(xI - rho(b)(y)).

#include <cstddef>
#include <vector>

#include "khof/diagram.hpp"
#include "khof/polynomial.hpp"

namespace khof {

/// Square matrix of Laurent polynomials in t.
using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;
using BurauMatrix = LaurentMatrix;

LaurentMatrix identity_matrix(std::size_t n);
LaurentMatrix multiply(const LaurentMatrix& a, const LaurentMatrix& b);

/// Cofactor expansion up to size 4, fraction-free elimination above.
LaurentPoly determinant(const LaurentMatrix& m);
BiLaurent determinant(const std::vector<std::vector<BiLaurent>>& m);

/// Exact inverse of a matrix whose determinant is a unit +-t^a.
LaurentMatrix inverse_unit_det(const LaurentMatrix& m);

/// Image of sigma_i (1-based); i < 0 gives the inverse of sigma_{-i}.
BurauMatrix burau_generator(int strands, int letter);
BurauMatrix burau(const BraidWord& b);

/// det(xI - rho(b)(y)) without normalization.
BiLaurent axis_determinant(const BraidWord& b);
/// Shift the least x- and y-degrees to 0, then fix the sign so the term with
/// lexicographically least exponent (x, y) has a positive coefficient.
BiLaurent normalize_unit(const BiLaurent& p);
BiLaurent alexander_axis(const BraidWord& b);

struct TermTest {
  std::size_t count = 0;
  bool exceeds_four = false;
  friend bool operator==(const TermTest&, const TermTest&) = default;
};

/// Term count of (x-1)(y-1) p.
TermTest delta_term_test(const BiLaurent& p);

}  // namespace khof

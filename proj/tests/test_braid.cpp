#include <doctest.h>

#include <random>

#include "khof/braid.hpp"

using namespace khof;

namespace {

LaurentPoly t(const char* s) { return parse_laurent(s, Var::t); }

BraidWord random_word(std::mt19937& rng, int l, int len) {
  BraidWord b{l, {}};
  std::uniform_int_distribution<int> g(1, l - 1);
  for (int i = 0; i < len; ++i) b.letters.push_back(rng() % 2 ? g(rng) : -g(rng));
  return b;
}

// Applies one braid relation or far commutation somewhere, if possible.
BraidWord rewrite(std::mt19937& rng, BraidWord b) {
  auto& w = b.letters;
  for (int tries = 0; tries < 50 && w.size() >= 2; ++tries) {
    const std::size_t p = rng() % (w.size() - 1);
    const int x = w[p], y = w[p + 1];
    if (std::abs(std::abs(x) - std::abs(y)) >= 2) {
      std::swap(w[p], w[p + 1]);
      return b;
    }
    if (p + 2 < w.size() && x > 0 && w[p + 2] == x && std::abs(x - y) == 1 && y > 0) {
      w[p] = y;
      w[p + 1] = x;
      w[p + 2] = y;
      return b;
    }
  }
  // Insert a cancelling pair instead.
  const int g = static_cast<int>(rng() % static_cast<unsigned>(b.strands - 1)) + 1;
  w.insert(w.begin() + static_cast<long>(rng() % (w.size() + 1)), {g, -g});
  return b;
}

bool unit_determinant(const LaurentPoly& d) {
  return d.term_count() == 1 && abs(d.terms().begin()->second) == 1;
}

}  // namespace

TEST_SUITE("braid") {

TEST_CASE("generator images") {
  CHECK(burau({2, {1}}) == LaurentMatrix{{t("-t")}});
  CHECK(burau({2, {1, -1}}) == identity_matrix(1));
  CHECK(burau({3, {1, 2, 1}}) == burau({3, {2, 1, 2}}));
  CHECK(burau_generator(3, 1) == LaurentMatrix{{t("-t"), t("1")}, {t("0"), t("1")}});
  CHECK(burau_generator(3, 2) == LaurentMatrix{{t("1"), t("0")}, {t("t"), t("-t")}});
  CHECK(burau_generator(4, 2) ==
        LaurentMatrix{{t("1"), t("0"), t("0")}, {t("t"), t("-t"), t("1")}, {t("0"), t("0"), t("1")}});
  for (int l = 2; l <= 6; ++l)
    for (int i = 1; i < l; ++i)
      CHECK(multiply(burau_generator(l, i), burau_generator(l, -i)) == identity_matrix(l - 1));
}

TEST_CASE("homomorphism on random words") {
  std::mt19937 rng(17);
  for (int it = 0; it < 100; ++it) {
    const int l = 2 + it % 4;
    const BraidWord a = random_word(rng, l, 1 + static_cast<int>(rng() % 8));
    BraidWord b = a;
    for (int k = 0; k < 4; ++k) b = rewrite(rng, b);
    const BurauMatrix ma = burau(a);
    CHECK(ma == burau(b));
    const LaurentPoly d = determinant(ma);
    CHECK(unit_determinant(d));
    CHECK(std::abs(d.min_exp2() / 2) <= static_cast<int>(a.letters.size()));
  }
}

TEST_CASE("determinants") {
  // Bareiss (5x5 and up) against cofactor expansion through a block matrix.
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> c(-2, 2), e(-2, 2);
  for (int it = 0; it < 20; ++it) {
    LaurentMatrix a(3, std::vector<LaurentPoly>(3, LaurentPoly(Var::t)));
    LaurentMatrix b(2, std::vector<LaurentPoly>(2, LaurentPoly(Var::t)));
    for (auto& row : a)
      for (auto& x : row) x = LaurentPoly::monomial(c(rng), e(rng), Var::t) + LaurentPoly::monomial(c(rng), 0, Var::t);
    for (auto& row : b)
      for (auto& x : row) x = LaurentPoly::monomial(c(rng), e(rng), Var::t);
    LaurentMatrix blk(5, std::vector<LaurentPoly>(5, LaurentPoly(Var::t)));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) blk[i][j] = a[i][j];
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) blk[3 + i][3 + j] = b[i][j];
    blk[0][4] = LaurentPoly::monomial(c(rng), 1, Var::t);  // upper-right noise keeps it block triangular
    CHECK(determinant(blk) == determinant(a) * determinant(b));
  }
}

TEST_CASE("Alexander polynomial with axis") {
  CHECK(alexander_axis({2, {1}}) == parse_bilaurent("x + y"));
  // x - (-y)^2 normalised: lowest exponent (0,2) gets the positive sign.
  CHECK(alexander_axis({2, {1, 1}}) == parse_bilaurent("y^2 - x"));
  CHECK(alexander_axis({2, {1, 1}}) == -parse_bilaurent("x - y^2"));
  // By hand: rho(s1) rho(s2) = [[-t, 1], [0, 1]] [[1, 0], [t, -t]] = [[0, -t], [t, -t]],
  // det [[x, y], [-y, x + y]] = x^2 + x y + y^2.
  CHECK(burau({3, {1, 2}}) == LaurentMatrix{{t("0"), t("-t")}, {t("t"), t("-t")}});
  CHECK(axis_determinant({3, {1, 2}}) == parse_bilaurent("x^2 + x*y + y^2"));
}

TEST_CASE("structure of the axis determinant") {
  std::mt19937 rng(23);
  for (int it = 0; it < 40; ++it) {
    const int l = 2 + it % 3;
    const BraidWord b = random_word(rng, l, 1 + static_cast<int>(rng() % 6));
    const BiLaurent d = axis_determinant(b);
    CHECK(d.max_x() == l - 1);
    CHECK(d.min_x() == 0);
    CHECK(d.x_coefficient(l - 1) == LaurentPoly::constant(1, Var::t));
    CHECK(d.x_coefficient(0).term_count() == 1);
    // Conjugation invariance.
    BraidWord c{l, {}};
    const int g = static_cast<int>(rng() % static_cast<unsigned>(l - 1)) + 1;
    c.letters.push_back(g);
    c.letters.insert(c.letters.end(), b.letters.begin(), b.letters.end());
    c.letters.push_back(-g);
    CHECK(alexander_axis(c) == alexander_axis(b));
  }
}

TEST_CASE("term test") {
  CHECK(delta_term_test(BiLaurent::constant(1)) == TermTest{4, false});
  CHECK(delta_term_test(BiLaurent()) == TermTest{0, false});
  CHECK(delta_term_test(parse_bilaurent("x + y")) == TermTest{7, true});
}

}

#include "khof/jones.hpp"

#include <numeric>
#include <vector>

namespace khof {

namespace {

struct Smoothing {
  int e[4];  // arc indices in counterclockwise order from under_in
};

int find(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

}  // namespace

LaurentPoly kauffman_bracket(const OrientedPDDiagram& d) {
  ensure_valid(d);
  std::map<int, int> index;
  for (const auto& comp : d.components())
    for (int a : comp) index.emplace(a, static_cast<int>(index.size()));
  const int narcs = static_cast<int>(index.size());
  const int c = static_cast<int>(d.crossing_count());
  if (c > 30) throw Error(ErrorKind::CrossingBudgetExceeded, "state sum limited to 30 crossings");

  std::vector<Smoothing> sm;
  for (const auto& x : d.crossings()) {
    if (x.sign > 0)
      sm.push_back({{index[x.ui], index[x.oo], index[x.uo], index[x.oi]}});
    else
      sm.push_back({{index[x.ui], index[x.oi], index[x.uo], index[x.oo]}});
  }

  // counts[a][loops]: number of states with a A-smoothings and that many loops.
  std::vector<unsigned long long> tally((c + 1) * (narcs + 1), 0);
  std::vector<int> parent(narcs);
  for (unsigned long long s = 0; s < (1ULL << c); ++s) {
    std::iota(parent.begin(), parent.end(), 0);
    int loops = narcs;
    auto join = [&](int a, int b) {
      a = find(parent, a);
      b = find(parent, b);
      if (a != b) {
        parent[a] = b;
        --loops;
      }
    };
    int a_count = 0;
    for (int k = 0; k < c; ++k) {
      const int* e = sm[k].e;
      if (((s >> k) & 1) == 0) {
        ++a_count;
        join(e[0], e[1]);
        join(e[2], e[3]);
      } else {
        join(e[0], e[3]);
        join(e[1], e[2]);
      }
    }
    ++tally[a_count * (narcs + 1) + loops];
  }

  const LaurentPoly loop = LaurentPoly::monomial(-1, 2, Var::A) + LaurentPoly::monomial(-1, -2, Var::A);
  std::vector<LaurentPoly> loop_pow{LaurentPoly::constant(1, Var::A)};
  for (int i = 1; i <= narcs; ++i) loop_pow.push_back(loop_pow.back() * loop);

  LaurentPoly result(Var::A);
  for (int a = 0; a <= c; ++a)
    for (int l = 1; l <= narcs; ++l) {
      unsigned long long n = tally[a * (narcs + 1) + l];
      if (n == 0) continue;
      BigInt bn(static_cast<unsigned long>(n));
      result += loop_pow[l - 1].shifted2(2 * (a - (c - a))).scaled(bn);
    }
  return result;
}

LaurentPoly jones(const OrientedPDDiagram& d) {
  const int w = d.writhe();
  // (-A)^{-3w}
  LaurentPoly factor = LaurentPoly::monomial((w % 2 == 0) ? 1 : -1, -3 * w, Var::A);
  return (factor * kauffman_bracket(d)).substituted(Var::q, -1, 2);
}

bool skein_check(const LaurentPoly& vplus, const LaurentPoly& vminus, const LaurentPoly& vzero) {
  LaurentPoly lhs = vplus.shifted2(-4) - vminus.shifted2(4);
  LaurentPoly rhs = vzero.shifted2(2) - vzero.shifted2(-2);
  return lhs == rhs;
}

bool skein_check(const OrientedPDDiagram& lplus, const OrientedPDDiagram& lminus,
                 const OrientedPDDiagram& lzero) {
  return skein_check(jones(lplus), jones(lminus), jones(lzero));
}

GaussianInt vuv_closed_form(int u, int v) {
  if (u < 3) throw Error(ErrorKind::BadParameters, "closed form needs u >= 3");
  GaussianInt z = GaussianInt(0, 2).pow(static_cast<unsigned>(u - 1));
  BigInt m = (v % 2 == 0 ? 1 : -1) * (u + 2 * v);
  return z * GaussianInt(m, 0);
}

}  // namespace khof

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All comparisons are exact; time limits are listed in
// kLimits.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "corpus.hpp"
#include "forests.hpp"
#include "khof/braid.hpp"
#include "khof/detection.hpp"
#include "khof/gf2.hpp"
#include "khof/jones.hpp"
#include "khof/khovanov.hpp"
#include "khof/raag.hpp"
#include "raag_oracle.hpp"

using namespace khof;
using Clock = std::chrono::steady_clock;

namespace {

struct Limits {
  double trefoil = 1.0;
  double small_rank = 5.0;
  double closed_form_sweep = 600.0;
  double big_rank = 300.0;
  double raag_suite = 300.0;
  double twelve_crossings = 60.0;
};
constexpr Limits kLimits;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << "failed: " << what << "; ";
    pass = pass && ok;
  }
};

int failures = 0;

void criterion(int n, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.note << "exception: " << e.what();
  }
  const double s = seconds_since(t0);
  if (!out.pass) ++failures;
  std::printf("%s %2d  %s  [%.2f s]%s%s\n", out.pass ? "PASS" : "FAIL", n, title, s,
              out.note.str().empty() ? "" : "  ", out.note.str().c_str());
  std::fflush(stdout);
}

int threads() { return static_cast<int>(std::max(4u, std::thread::hardware_concurrency())); }

long long rank_f2(const OrientedPDDiagram& d, int budget = 16) {
  return kh(d, Coeff::F2, {budget, threads()}).total_rank();
}

// t^{k-1} q^{3(k-1)} (q + q^-1) (t q^2 + t^-1 q^-2)^{k-1}, x = t, y = q.
BiLaurent tree_formula(int k) {
  BiLaurent p = BiLaurent::monomial(1, k - 1, 3 * (k - 1)) *
                (BiLaurent::monomial(1, 0, 1) + BiLaurent::monomial(1, 0, -1));
  for (int i = 1; i < k; ++i) p *= BiLaurent::monomial(1, 1, 2) + BiLaurent::monomial(1, -1, -2);
  return p;
}

std::vector<int> multiset(const InternalGradingRanks& r) {
  std::vector<int> v;
  for (const auto& [l, n] : r)
    for (long long i = 0; i < n; ++i) v.push_back(l);
  return v;
}

bool same_up_to_shift(std::vector<int> a, std::vector<int> b) {
  if (a.size() != b.size()) return false;
  std::sort(b.begin(), b.end());
  for (int s : {1, -1}) {
    std::vector<int> x = a;
    for (int& v : x) v *= s;
    std::sort(x.begin(), x.end());
    const int shift = b.empty() ? 0 : b[0] - x[0];
    for (int& v : x) v += shift;
    if (x == b) return true;
  }
  return false;
}

std::string str(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

}  // namespace

int main() {
  std::printf("kernel %s, %d worker threads\n", gf2::kernel_name(gf2::active_kernel()), threads());

  criterion(1, "Kh(left trefoil; Z) equals the bigraded table", [](Outcome& o) {
    const auto t0 = Clock::now();
    const BigradedRanks b = kh(trefoil(-1), Coeff::Z);
    const double s = seconds_since(t0);
    const std::map<BigradedRanks::Grade, long long> free{{{-3, -9}, 1}, {{-2, -5}, 1}, {{0, -3}, 1}, {{0, -1}, 1}};
    const std::map<BigradedRanks::Grade, std::vector<BigInt>> torsion{{{-2, -7}, {2}}};
    o.require(b.free == free, "free part");
    o.require(b.torsion == torsion, "torsion part");
    o.require(s < kLimits.trefoil, "time");
  });

  criterion(2, "Z/2 ranks: unknot 2, Hopf 4, unlinks 2^n, forest links 2^n", [](Outcome& o) {
    auto timed = [&](const OrientedPDDiagram& d, long long want, const std::string& what) {
      const auto t0 = Clock::now();
      o.require(rank_f2(d) == want, what);
      o.require(seconds_since(t0) < kLimits.small_rank, what + " time");
    };
    timed(unknot(), 2, "unknot");
    timed(hopf_link(1), 4, "Hopf");
    for (int n = 1; n <= 5; ++n) timed(unlink(n), 1LL << n, "unlink " + std::to_string(n));
    std::size_t count = 0;
    for (int n = 1; n <= 5; ++n)
      for (const auto& g : testing::all_forests(n)) {
        timed(forest_link(g), 1LL << n, "forest");
        ++count;
      }
    o.note << count << " labelled forests";
  });

  criterion(3, "Forest Poincare polynomials match the product formula", [](Outcome& o) {
    std::size_t trees = 0, forests = 0;
    for (int k = 1; k <= 4; ++k)
      for (const auto& g : testing::all_trees(k)) {
        o.require(kh(forest_link(g), Coeff::F2).poincare() == tree_formula(k), "tree");
        ++trees;
      }
    for (int n = 1; n <= 5; ++n)
      for (const auto& g : testing::all_forests(n)) {
        BiLaurent want = BiLaurent::constant(1);
        for (const auto& t : g.trees()) want *= tree_formula(static_cast<int>(t.size()));
        o.require(kh(forest_link(g), Coeff::F2, {16, threads()}).poincare() == want, "forest");
        ++forests;
      }
    o.note << trees << " trees, " << forests << " forests";
  });

  auto corpus = testing::corpus();
  corpus.push_back({"luv(3,-2)", luv_diagram(3, -2)});
  corpus.push_back({"luv(4,-1)", luv_diagram(4, -1)});

  criterion(4, "Kh = 2 Khr over Z/2 for every corpus diagram and basepoint component", [&](Outcome& o) {
    std::size_t checks = 0;
    for (const auto& [name, d] : corpus) {
      const long long full = rank_f2(d);
      for (std::size_t c = 0; c < d.component_count(); ++c) {
        const Basepoint p{static_cast<int>(c), d.components()[c].front()};
        o.require(2 * khr(d, p, Coeff::F2, {16, threads()}).total_rank() == full, name);
        ++checks;
      }
    }
    o.note << checks << " basepoints on " << corpus.size() << " diagrams";
  });

  criterion(5, "Kunneth: rank of a disjoint union is the product (10 random pairs)", [&](Outcome& o) {
    std::mt19937 rng(20240611);
    int done = 0;
    while (done < 10) {
      const auto& a = corpus[rng() % corpus.size()];
      const auto& b = corpus[rng() % corpus.size()];
      if (a.d.crossing_count() + b.d.crossing_count() > 14) continue;
      o.require(rank_f2(disjoint_union(a.d, b.d)) == rank_f2(a.d) * rank_f2(b.d), a.name + " + " + b.name);
      ++done;
    }
  });

  criterion(6, "Jones golden values", [](Outcome& o) {
    auto t = [](const char* s) { return parse_laurent(s, Var::t).as_q(); };
    o.require(jones(unknot()) == t("1"), "unknot");
    o.require(jones(hopf_link(1)) == t("-t^(1/2) - t^(5/2)"), "Hopf+");
    o.require(jones(hopf_link(-1)) == t("-t^(-1/2) - t^(-5/2)"), "Hopf-");
    o.require(jones(luv_diagram(3, -1)) == t("2 + t^2 + t^4"), "L(3,-1)");
    o.require(jones(luv_diagram(3, 0)) == t("t^7 - t^6 + 3*t^5 - t^4 + 3*t^3 - 2*t^2 + t"), "L(3,0)");
  });

  criterion(7, "Closed form V(L(u,v)) at t^(1/2) = -i for 3<=u<=5, -3<=v<=2", [](Outcome& o) {
    const auto t0 = Clock::now();
    for (int u = 3; u <= 5; ++u)
      for (int v = -3; v <= 2; ++v) {
        const GaussianInt got = eval_gaussian(jones(luv_diagram(u, v)));
        const GaussianInt want = vuv_closed_form(u, v);
        o.require(got == want, "L(" + std::to_string(u) + "," + std::to_string(v) + ") " + to_string(got) +
                                   " vs " + to_string(want));
      }
    o.require(seconds_since(t0) < kLimits.closed_form_sweep, "time");
  });

  criterion(8, "Ranks of L(3,-2), L(4,-2), L(5,-3) over Z/2 are 12, 24, 60", [](Outcome& o) {
    for (auto [u, v, want] : {std::tuple{3, -2, 12LL}, {4, -2, 24LL}, {5, -3, 60LL}}) {
      const OrientedPDDiagram d = simplify(luv_diagram(u, v));
      const auto t0 = Clock::now();
      const long long r = rank_f2(d);
      const double s = seconds_since(t0);
      o.note << "L(" << u << "," << v << "): " << r << " at " << d.crossing_count() << " crossings in "
             << s << " s; ";
      o.require(d.crossing_count() <= 16, "crossing count");
      o.require(r == want, "rank");
      o.require(s < kLimits.big_rank, "time");
    }
  });

  criterion(9, "Internal-grading multisets of L4a1 and trefoil + unknot (up to shift and negation)",
            [](Outcome& o) {
              const auto a = multiset(internal_ranks(kh(testing::l4a1(), Coeff::F2)));
              const OrientedPDDiagram tu = disjoint_union(trefoil(-1), unknot());
              const auto b = multiset(internal_ranks(khr(tu, {1, tu.components()[1][0]}, Coeff::F2)));
              o.note << "L4a1 " << str(a) << ", T+U " << str(b);
              o.require(same_up_to_shift(a, {0, 1, 2, 2, 3, 4, 4, 6}), "L4a1");
              o.require(same_up_to_shift(b, {1, 3, 3, 4, 5, 6}), "trefoil + unknot");
            });

  criterion(10, "Batson-Seed inequality on unlink, Hopf, L4a1, trefoil + unknot", [](Outcome& o) {
    o.require(batson_seed_check(unlink(2), unknot(), unknot()), "unlink");
    o.require(batson_seed_check(hopf_link(1), unknot(), unknot()), "Hopf");
    o.require(batson_seed_check(testing::l4a1(), unknot(), unknot()), "L4a1");
    o.require(batson_seed_check(disjoint_union(trefoil(-1), unknot()), trefoil(-1), unknot()), "T + U");
  });

  criterion(11, "Sublinks of forest links on <= 4 vertices have rank 2^|S|", [](Outcome& o) {
    std::size_t checks = 0;
    for (int n = 1; n <= 4; ++n)
      for (const auto& g : testing::all_forests(n)) {
        const OrientedPDDiagram d = forest_link(g);
        for (std::uint32_t s = 1; s < (1U << n); ++s) {
          std::vector<int> comps;
          for (int i = 0; i < n; ++i)
            if ((s >> i) & 1) comps.push_back(i);
          o.require(rank_f2(sublink(d, comps)) == (1LL << comps.size()), "sublink");
          ++checks;
        }
      }
    o.note << checks << " sublinks";
  });

  criterion(12, "Burau relations, unit determinants, Alexander of s1, term test", [](Outcome& o) {
    std::mt19937 rng(99);
    for (int it = 0; it < 100; ++it) {
      const int l = 2 + it % 4;
      std::uniform_int_distribution<int> gen(1, l - 1);
      BraidWord a{l, {}};
      for (int k = 0, len = 2 + static_cast<int>(rng() % 8); k < len; ++k)
        a.letters.push_back(rng() % 2 ? gen(rng) : -gen(rng));
      BraidWord b = a;
      // Rewrite with braid relations and far commutations where they apply,
      // otherwise insert a cancelling pair.
      for (int step = 0; step < 6; ++step) {
        auto& w = b.letters;
        bool done = false;
        for (std::size_t p = 0; p + 1 < w.size() && !done; ++p) {
          const std::size_t q = (p + rng()) % (w.size() - 1);
          const int x = w[q], y = w[q + 1];
          if (std::abs(std::abs(x) - std::abs(y)) >= 2) {
            std::swap(w[q], w[q + 1]);
            done = true;
          } else if (q + 2 < w.size() && x > 0 && y > 0 && w[q + 2] == x && std::abs(x - y) == 1) {
            w[q] = y;
            w[q + 1] = x;
            w[q + 2] = y;
            done = true;
          }
        }
        if (!done) {
          const int g = gen(rng);
          w.insert(w.begin() + static_cast<long>(rng() % (w.size() + 1)), {g, -g});
        }
      }
      const BurauMatrix ma = burau(a);
      o.require(ma == burau(b), "relation pair");
      const LaurentPoly d = determinant(ma);
      o.require(d.term_count() == 1 && abs(d.terms().begin()->second) == 1, "unit determinant");
    }
    o.require(alexander_axis({2, {1}}) == parse_bilaurent("x + y"), "alexander_axis(l=2,[1])");
    // Hand expansion: (x-1)(y-1)(x+y) = x^2y + xy^2 - x^2 - 2xy - y^2 + x + y.
    const BiLaurent by_hand = parse_bilaurent("x^2*y + x*y^2 - x^2 - 2*x*y - y^2 + x + y");
    const TermTest tt = delta_term_test(parse_bilaurent("x + y"));
    o.require(tt.count == by_hand.term_count() && tt.exceeds_four, "term test");
    o.note << "term test (" << tt.count << ", " << (tt.exceeds_four ? "true" : "false")
           << "); the expansion has 7 terms";
  });

  criterion(13, "Path RAAG, m = 4: word problem, centralisers, conjugation equation", [](Outcome& o) {
    const auto t0 = Clock::now();
    const PathRaag G(4);
    // Word problem against breadth-first rewriting on all words of length <= 5.
    testing::RewritingOracle oracle;
    std::map<NormalForm, testing::Code> fwd;
    std::map<testing::Code, NormalForm> back;
    std::map<NormalForm, std::set<Letter>> heads;
    const auto words = testing::all_words(4, 5);
    for (const auto& code : words) {
      const RaagWord w = testing::decode(code);
      const NormalForm c = G.canonical(w);
      const testing::Code k = oracle.key(code);
      auto f = fwd.emplace(c, k).first;
      auto b = back.emplace(k, c).first;
      if (f->second != k || b->second != c) {
        o.require(false, "equal disagrees with the oracle at " + to_string(w));
        return;
      }
      if (!w.empty() && G.is_reduced(w)) heads[c].insert(w.letters.front());
    }
    for (const auto& [c, hs] : heads)
      for (const auto& a : hs)
        for (const auto& b : hs) o.require(a == b || G.commute(a, b), "reduced words with different heads");

    // Centralisers.
    const auto elems = G.enumerate_elements(6);
    const RaagWord g1 = G.generator(1), g4 = G.generator(4);
    const RaagWord g1g4 = G.multiply(g1, g4);
    std::set<NormalForm> powers;
    for (int k = -3; k <= 3; ++k) powers.insert(G.power(g1g4, k));
    for (const auto& e : elems) {
      if (G.commutes(e, g1) && G.commutes(e, g4)) o.require(e.empty(), "common centraliser " + to_string(e));
      if (G.commutes(e, g1g4)) o.require(powers.count(e) > 0, "centraliser of g1g4 " + to_string(e));
    }

    // Solution family and its converse, both variants.
    const auto small = G.enumerate_elements(2);
    auto within = [&](const NormalForm& w, int i) {
      return std::all_of(w.letters.begin(), w.letters.end(), [&](const Letter& x) { return G.in_C(i, x); });
    };
    std::size_t family = 0, found = 0;
    for (auto var : {ConjVariant::Plus, ConjVariant::Minus}) {
      const RaagWord base = G.multiply(g1, G.generator(4, var == ConjVariant::Plus ? 1 : -1));
      for (int k = -3; k <= 3; ++k)
        for (const auto& up : small) {
          if (!within(up, 1)) continue;
          for (const auto& vp : small) {
            if (!within(vp, 4)) continue;
            const NormalForm u = G.multiply(G.power(base, k), up), v = G.multiply(G.power(base, k), vp);
            o.require(G.is_conj_solution(u, v, var), "family member");
            const ConjDecomposition d = G.conj_solution_decompose(u, v, var);
            o.require(d.k == k && d.u_prime == up && d.v_prime == vp, "decomposition round trip");
            ++family;
          }
        }
      const auto three = G.enumerate_elements(3);
      for (const auto& u : three)
        for (const auto& v : three) {
          if (!G.is_conj_solution(u, v, var)) continue;
          ++found;
          const ConjDecomposition d = G.conj_solution_decompose(u, v, var);
          o.require(within(d.u_prime, 1) && within(d.v_prime, 4), "factor membership");
          o.require(G.multiply(G.power(base, d.k), d.u_prime) == u &&
                        G.multiply(G.power(base, d.k), d.v_prime) == v,
                    "recomposition");
        }
    }
    o.note << words.size() << " words, " << elems.size() << " elements, " << family << " family members, "
           << found << " solutions of length <= 3";
    o.require(seconds_since(t0) < kLimits.raag_suite, "time");
  });

  criterion(14, "Kh(;Z/2) of 12-crossing diagrams under 60 s; packed GF(2) rows", [](Outcome& o) {
    std::vector<std::pair<std::string, OrientedPDDiagram>> ds = {
        {"L(4,4)", luv_diagram(4, 4)},
        {"L(5,-2)", luv_diagram(5, -2)},
        {"T(3,6)", from_braid_closure({3, {1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2}})},
        {"alt 4-braid", from_braid_closure({4, {1, -2, 3, 1, -2, 3, 1, -2, 3, 1, -2, 3}})},
    };
    std::mt19937 rng(12);
    for (int i = 0; i < 2; ++i) {
      BraidWord b{4, {}};
      for (int k = 0; k < 12; ++k) b.letters.push_back((rng() % 2 ? 1 : -1) * static_cast<int>(rng() % 3 + 1));
      ds.push_back({"random 4-braid", from_braid_closure(b)});
    }
    for (const auto& [name, d] : ds) {
      o.require(d.crossing_count() == 12, name + " crossing count");
      const auto t0 = Clock::now();
      const long long r = rank_f2(d);
      const double s = seconds_since(t0);
      o.note << name << " rank " << r << " " << s << " s; ";
      o.require(s < kLimits.twelve_crossings, name + " time");
    }
    // Dense elimination throughput, every available kernel.
    const std::size_t n = 4096;
    std::mt19937_64 bits(5);
    gf2::BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t w = 0; w < m.words_per_row(); ++w) m.row(i)[w] = bits();
    o.require(m.words_per_row() == n / 64, "64 columns per word");
    const gf2::Kernel saved = gf2::active_kernel();
    for (auto k : {gf2::Kernel::Scalar, gf2::Kernel::Avx2, gf2::Kernel::Neon}) {
      if (!gf2::kernel_available(k)) continue;
      gf2::set_kernel(k);
      gf2::BitMatrix copy = m;
      const auto t0 = Clock::now();
      const std::size_t r = gf2::dense_rank(copy);
      const double s = seconds_since(t0);
      o.require(r >= n - 64, "random matrix rank");
      o.note << gf2::kernel_name(k) << " " << static_cast<long long>(n / s) << " rows/s (" << n << "x" << n
             << "); ";
    }
    gf2::set_kernel(saved);
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}

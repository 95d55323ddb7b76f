#pragma once

// The path right-angled Artin group <g_1..g_m | [g_i, g_{i+1}] = 1>.

#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "khof/error.hpp"

namespace khof {

struct Letter {
  int gen = 1;  // 1..m
  int exp = 1;  // +1 or -1
  Letter inverse() const { return {gen, -exp}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

struct RaagWord {
  std::vector<Letter> letters;
  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  friend auto operator<=>(const RaagWord&, const RaagWord&) = default;
};

/// A reduced word in leftmost-greedy commutation order.
using NormalForm = RaagWord;

enum class ConjVariant { Plus, Minus };

struct ConjDecomposition {
  int k = 0;
  NormalForm u_prime, v_prime;
};

class PathRaag {
 public:
  explicit PathRaag(int m);

  int m() const { return m_; }
  RaagWord generator(int i, int exp = 1) const;
  /// Letters of C_i: g_{i-1}, g_i, g_{i+1} (those in range) and inverses.
  bool in_C(int i, const Letter& x) const { return std::abs(x.gen - i) <= 1; }
  bool commute(const Letter& a, const Letter& b) const {
    return std::abs(a.gen - b.gen) == 1;
  }
  void check(const RaagWord& w) const;

  bool is_reduced(const RaagWord& w) const;
  NormalForm canonical(const RaagWord& w) const;
  bool equal(const RaagWord& a, const RaagWord& b) const;
  NormalForm multiply(const RaagWord& a, const RaagWord& b) const;
  NormalForm inverse(const RaagWord& w) const;
  NormalForm power(const RaagWord& w, int k) const;
  int length(const RaagWord& w) const;
  bool commutes(const RaagWord& a, const RaagWord& b) const;
  bool centralizes_generator(const RaagWord& w, int i) const;

  /// u g_1 u^-1 . v g_m^e v^-1 == g_1 g_m^e with e = +1 (Plus) or -1 (Minus).
  bool is_conj_solution(const RaagWord& u, const RaagWord& v, ConjVariant variant) const;
  /// u = b^k u', v = b^k v' with b = g_1 g_m^e, u' in <C_1>, v' in <C_m>.
  ConjDecomposition conj_solution_decompose(const RaagWord& u, const RaagWord& v,
                                            ConjVariant variant) const;
  /// All elements of length <= max_len in canonical form, sorted by
  /// (length, letters). Throws BudgetExceeded past `cap` elements.
  std::vector<NormalForm> enumerate_elements(int max_len, std::size_t cap = 5'000'000) const;

 private:
  RaagWord conj_base(ConjVariant variant) const;
  int m_;
};

/// "g3,g3^-1"; the empty word is "" or "1". Exponents other than +-1 expand
/// to runs of letters.
RaagWord parse_word(std::string_view text);
std::string to_string(const RaagWord& w);

}  // namespace khof

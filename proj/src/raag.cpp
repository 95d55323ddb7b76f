#include "khof/raag.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <set>

#include "khof/error.hpp"

namespace khof {

PathRaag::PathRaag(int m) : m_(m) {
  if (m < 2) throw Error(ErrorKind::BadParameters, "path RAAG needs m >= 2");
}

RaagWord PathRaag::generator(int i, int exp) const {
  RaagWord w;
  for (int n = 0; n < std::abs(exp); ++n) w.letters.push_back({i, exp > 0 ? 1 : -1});
  check(w);
  return w;
}

void PathRaag::check(const RaagWord& w) const {
  for (const auto& x : w.letters) {
    if (x.gen < 1 || x.gen > m_)
      throw Error(ErrorKind::BadParameters, "generator g" + std::to_string(x.gen) +
                                                " out of range for m = " + std::to_string(m_));
    if (x.exp != 1 && x.exp != -1) throw Error(ErrorKind::BadParameters, "letter exponent must be +-1");
  }
}

namespace {

// Index of the partner that cancels letters[u], or -1.
long cancel_partner(const PathRaag& G, const std::vector<Letter>& w, std::size_t u) {
  const Letter inv = w[u].inverse();
  for (std::size_t v = u + 1; v < w.size(); ++v) {
    if (w[v] == inv) return static_cast<long>(v);
    if (!G.in_C(w[u].gen, w[v])) return -1;
  }
  return -1;
}

}  // namespace

bool PathRaag::is_reduced(const RaagWord& w) const {
  check(w);
  for (std::size_t u = 0; u < w.size(); ++u)
    if (cancel_partner(*this, w.letters, u) >= 0) return false;
  return true;
}

NormalForm PathRaag::canonical(const RaagWord& w) const {
  check(w);
  std::vector<Letter> rest = w.letters;
  for (std::size_t u = 0; u < rest.size();) {
    long v = cancel_partner(*this, rest, u);
    if (v < 0) {
      ++u;
      continue;
    }
    rest.erase(rest.begin() + v);
    rest.erase(rest.begin() + static_cast<long>(u));
    u = 0;
  }

  NormalForm out;
  out.letters.reserve(rest.size());
  while (!rest.empty()) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < rest.size(); ++j) {
      if (!(rest[j] < rest[best])) continue;
      bool movable = true;
      for (std::size_t p = 0; p < j && movable; ++p) movable = commute(rest[p], rest[j]);
      if (movable) best = j;
    }
    out.letters.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<long>(best));
  }
  return out;
}

bool PathRaag::equal(const RaagWord& a, const RaagWord& b) const {
  return canonical(a) == canonical(b);
}

NormalForm PathRaag::multiply(const RaagWord& a, const RaagWord& b) const {
  RaagWord w = a;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return canonical(w);
}

NormalForm PathRaag::inverse(const RaagWord& w) const {
  RaagWord r;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(it->inverse());
  return canonical(r);
}

NormalForm PathRaag::power(const RaagWord& w, int k) const {
  const RaagWord base = k < 0 ? inverse(w) : canonical(w);
  RaagWord r;
  for (int n = 0; n < std::abs(k); ++n)
    r.letters.insert(r.letters.end(), base.letters.begin(), base.letters.end());
  return canonical(r);
}

int PathRaag::length(const RaagWord& w) const { return static_cast<int>(canonical(w).size()); }

bool PathRaag::commutes(const RaagWord& a, const RaagWord& b) const {
  return multiply(a, b) == multiply(b, a);
}

bool PathRaag::centralizes_generator(const RaagWord& w, int i) const {
  if (i < 1 || i > m_) throw Error(ErrorKind::BadParameters, "generator index out of range");
  const NormalForm c = canonical(w);
  return std::all_of(c.letters.begin(), c.letters.end(),
                     [&](const Letter& x) { return in_C(i, x); });
}

RaagWord PathRaag::conj_base(ConjVariant variant) const {
  return {{{1, 1}, {m_, variant == ConjVariant::Plus ? 1 : -1}}};
}

bool PathRaag::is_conj_solution(const RaagWord& u, const RaagWord& v, ConjVariant variant) const {
  if (m_ < 4) throw Error(ErrorKind::RequiresMAtLeast4, "m = " + std::to_string(m_));
  const RaagWord gm = generator(m_, variant == ConjVariant::Plus ? 1 : -1);
  const RaagWord lhs =
      multiply(multiply(multiply(u, generator(1)), inverse(u)), multiply(multiply(v, gm), inverse(v)));
  return lhs == canonical(conj_base(variant));
}

ConjDecomposition PathRaag::conj_solution_decompose(const RaagWord& u, const RaagWord& v,
                                                    ConjVariant variant) const {
  if (!is_conj_solution(u, v, variant))
    throw Error(ErrorKind::NotASolution, to_string(u) + " ; " + to_string(v));
  const RaagWord base = conj_base(variant);
  // (g_1 g_m^e)^k u' has length at least |k| when u' lies in <C_1>.
  const int bound = static_cast<int>(std::max(u.size(), v.size())) + 1;
  auto in_all = [&](const NormalForm& w, int i) {
    return std::all_of(w.letters.begin(), w.letters.end(), [&](const Letter& x) { return in_C(i, x); });
  };
  for (int k = -bound; k <= bound; ++k) {
    const NormalForm strip = power(base, -k);
    NormalForm up = multiply(strip, u), vp = multiply(strip, v);
    if (in_all(up, 1) && in_all(vp, m_)) return {k, std::move(up), std::move(vp)};
  }
  throw Error(ErrorKind::NotASolution, "no decomposition (b^k u', b^k v') for " + to_string(u) +
                                           " ; " + to_string(v));
}

std::vector<NormalForm> PathRaag::enumerate_elements(int max_len, std::size_t cap) const {
  if (max_len < 0) throw Error(ErrorKind::BadParameters, "max_len must be >= 0");
  std::vector<NormalForm> out{NormalForm{}};
  std::vector<NormalForm> frontier{NormalForm{}};
  for (int len = 1; len <= max_len; ++len) {
    std::set<NormalForm> next;
    for (const auto& w : frontier)
      for (int g = 1; g <= m_; ++g)
        for (int e : {-1, 1}) {
          RaagWord x = w;
          x.letters.push_back({g, e});
          NormalForm c = canonical(x);
          if (static_cast<int>(c.size()) != len) continue;
          next.insert(std::move(c));
          if (out.size() + next.size() > cap)
            throw Error(ErrorKind::BudgetExceeded,
                        "more than " + std::to_string(cap) + " elements up to length " + std::to_string(max_len));
        }
    frontier.assign(next.begin(), next.end());
    out.insert(out.end(), frontier.begin(), frontier.end());
  }
  return out;
}

RaagWord parse_word(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto number = [&](std::string_view s, std::string_view whole) {
    int n = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty())
      throw Error(ErrorKind::ParseError, "bad token '" + std::string(whole) + "'");
    return n;
  };
  RaagWord w;
  text = trim(text);
  if (text.empty() || text == "1") return w;
  while (true) {
    auto comma = text.find(',');
    std::string_view tok = trim(text.substr(0, comma));
    if (tok.size() < 2 || tok[0] != 'g') throw Error(ErrorKind::ParseError, "bad token '" + std::string(tok) + "'");
    auto caret = tok.find('^');
    int gen = number(tok.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1), tok);
    int exp = 1;
    if (caret != std::string_view::npos) {
      std::string_view e = tok.substr(caret + 1);
      if (!e.empty() && e[0] == '+') e.remove_prefix(1);
      exp = number(e, tok);
    }
    if (gen < 1) throw Error(ErrorKind::ParseError, "generator index must be positive");
    for (int n = 0; n < std::abs(exp); ++n) w.letters.push_back({gen, exp > 0 ? 1 : -1});
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return w;
}

std::string to_string(const RaagWord& w) {
  std::string s;
  for (const auto& x : w.letters) {
    if (!s.empty()) s += ',';
    s += 'g' + std::to_string(x.gen);
    if (x.exp < 0) s += "^-1";
  }
  return s;
}

}  // namespace khof

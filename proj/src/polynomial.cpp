#include "khof/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <vector>

namespace khof {

char var_name(Var v) {
  switch (v) {
    case Var::t: return 't';
    case Var::q: return 'q';
    case Var::A: return 'A';
  }
  return '?';
}

namespace {

Var var_from_char(char c) {
  switch (c) {
    case 't': return Var::t;
    case 'q': return Var::q;
    case 'A': return Var::A;
    default: throw Error(ErrorKind::ParseError, std::string("unknown variable '") + c + "'");
  }
}

void add_into(std::map<int, BigInt>& m, int key, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = m.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

template <class Key>
void add_into(std::map<Key, BigInt>& m, const Key& key, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = m.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

std::string coeff_prefix(const BigInt& abs_c, bool is_constant) {
  if (is_constant) return abs_c.get_str();
  if (abs_c == 1) return {};
  return abs_c.get_str() + "*";
}

void append_term(std::string& out, const BigInt& c, const std::string& mono, bool first) {
  BigInt a = abs(c);
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  out += coeff_prefix(a, mono.empty());
  out += mono;
}

// Small hand-written scanner shared by both polynomial parsers.
class Scanner {
 public:
  explicit Scanner(std::string_view s) {
    // Normalize the unicode minus sign to ASCII.
    std::string buf(s);
    for (std::size_t p = buf.find("\xE2\x88\x92"); p != std::string::npos;
         p = buf.find("\xE2\x88\x92")) {
      buf.replace(p, 3, "-");
    }
    for (char c : buf)
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
  }

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  BigInt number() {
    std::size_t start = pos_;
    while (at_digit()) ++pos_;
    if (start == pos_) fail("expected number");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }
  int small_int() {
    bool neg = accept('-');
    if (!neg) accept('+');
    BigInt n = number();
    if (!n.fits_sint_p()) fail("exponent out of range");
    int v = static_cast<int>(n.get_si());
    return neg ? -v : v;
  }
  char take() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError, why + " at offset " + std::to_string(pos_) + " in '" +
                                           text_ + "'");
  }

 private:
  std::string text_;
  std::size_t pos_ = 0;
};

// Parses "^e", "^(e)", "^(e/2)"; returns a doubled exponent. Missing -> 2.
int parse_exponent2(Scanner& sc) {
  if (!sc.accept('^')) return 2;
  if (sc.accept('(')) {
    int e = sc.small_int();
    int e2 = 2 * e;
    if (sc.accept('/')) {
      BigInt d = sc.number();
      if (d != 2) sc.fail("only /2 denominators are supported");
      e2 = e;
    }
    sc.expect(')');
    return e2;
  }
  return 2 * sc.small_int();
}

}  // namespace

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::constant(const BigInt& c, Var v) { return half_monomial(c, 0, v); }

LaurentPoly LaurentPoly::monomial(const BigInt& c, int e, Var v) {
  return half_monomial(c, 2 * e, v);
}

LaurentPoly LaurentPoly::half_monomial(const BigInt& c, int e2, Var v) {
  LaurentPoly p(v);
  p.add_term2(e2, c);
  return p;
}

bool LaurentPoly::has_half_exponents() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first % 2 != 0; });
}

BigInt LaurentPoly::coeff2(int e2) const {
  auto it = terms_.find(e2);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_exp2() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_exp2() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

void LaurentPoly::add_term2(int e2, const BigInt& c) { add_into(terms_, e2, c); }

void LaurentPoly::check_var(const LaurentPoly& o) const {
  // The zero and constant polynomials mix freely with anything.
  bool mine_trivial = terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  bool theirs_trivial = o.terms_.empty() || (o.terms_.size() == 1 && o.terms_.begin()->first == 0);
  if (var_ != o.var_ && !mine_trivial && !theirs_trivial) {
    throw Error(ErrorKind::VariableMismatch,
                std::string("cannot combine ") + var_name(var_) + " and " + var_name(o.var_));
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_var(o);
  if (terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0)) var_ = o.var_;
  for (const auto& [e, c] : o.terms_) add_into(terms_, e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  check_var(o);
  Var v = (terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0)) ? o.var_ : var_;
  TermMap out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) add_into(out, e1 + e2, BigInt(c1 * c2));
  terms_ = std::move(out);
  var_ = v;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(var_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::scaled(const BigInt& c) const {
  LaurentPoly r(var_);
  if (c == 0) return r;
  for (const auto& [e, a] : terms_) r.terms_.emplace(e, a * c);
  return r;
}

LaurentPoly LaurentPoly::shifted2(int e2) const {
  LaurentPoly r(var_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + e2, c);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly r = constant(1, var_);
  for (unsigned i = 0; i < n; ++i) r *= *this;
  return r;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& o) const {
  if (o.is_zero()) throw Error(ErrorKind::NotDivisible, "division by zero polynomial");
  check_var(o);
  LaurentPoly quot(var_ == o.var_ ? var_ : (terms_.empty() ? o.var_ : var_));
  if (is_zero()) return quot;
  const int lo = min_exp2() - o.min_exp2();
  const int hi = max_exp2() - o.max_exp2();
  LaurentPoly rem = *this;
  const auto& [eb, cb] = *o.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& [er, cr] = *rem.terms_.rbegin();
    int e = er - eb;
    if (e < lo || e > hi || !mpz_divisible_p(cr.get_mpz_t(), cb.get_mpz_t())) {
      throw Error(ErrorKind::NotDivisible, to_string(*this) + " / " + to_string(o));
    }
    BigInt c = cr / cb;
    quot.add_term2(e, c);
    rem -= o.shifted2(e).scaled(c);
  }
  return quot;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly r(var_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

LaurentPoly LaurentPoly::substituted(Var to, int num, int den) const {
  LaurentPoly r(to);
  for (const auto& [e, c] : terms_) {
    long long scaled = static_cast<long long>(e) * num;
    if (scaled % den != 0) {
      throw Error(ErrorKind::BadParameters, "substitution produces a non half-integer exponent");
    }
    r.add_term2(static_cast<int>(scaled / den), c);
  }
  return r;
}

LaurentPoly LaurentPoly::as_t() const { return substituted(Var::t, 1, 2); }
LaurentPoly LaurentPoly::as_q() const { return substituted(Var::q, 2, 1); }

BigInt LaurentPoly::sum_of_coefficients() const {
  BigInt s = 0;
  for (const auto& kv : terms_) s += kv.second;
  return s;
}

BigInt LaurentPoly::sum_of_abs_coefficients() const {
  BigInt s = 0;
  for (const auto& kv : terms_) s += abs(kv.second);
  return s;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const char v = var_name(p.var());
  bool first = true;
  for (const auto& [e2, c] : p.terms()) {
    std::string mono;
    if (e2 != 0) {
      mono += v;
      if (e2 % 2 != 0) {
        mono += "^(" + std::to_string(e2) + "/2)";
      } else if (e2 != 2) {
        mono += "^" + std::to_string(e2 / 2);
      }
    }
    append_term(out, c, mono, first);
    first = false;
  }
  return out;
}

LaurentPoly parse_laurent(std::string_view text, Var fallback) {
  Scanner sc(text);
  std::vector<std::pair<int, BigInt>> terms;
  char seen_var = '\0';
  if (sc.done()) sc.fail("empty polynomial");
  bool first = true;
  while (!sc.done()) {
    int sign = 1;
    if (sc.accept('-')) {
      sign = -1;
    } else if (!sc.accept('+') && !first) {
      sc.fail("expected '+' or '-'");
    }
    first = false;
    BigInt c = 1;
    bool have_coeff = false;
    if (sc.at_digit()) {
      c = sc.number();
      have_coeff = true;
      sc.accept('*');
    }
    int e2 = 0;
    char ch = sc.peek();
    if (ch == 't' || ch == 'q' || ch == 'A') {
      sc.take();
      if (seen_var != '\0' && seen_var != ch) sc.fail("mixed variables");
      seen_var = ch;
      e2 = parse_exponent2(sc);
    } else if (!have_coeff) {
      sc.fail("expected term");
    }
    terms.emplace_back(e2, c * sign);
  }
  LaurentPoly p(seen_var ? var_from_char(seen_var) : fallback);
  for (const auto& [e2, c] : terms) p.add_term2(e2, c);
  return p;
}

// ---------------------------------------------------------------------------
// BiLaurent

BiLaurent BiLaurent::constant(const BigInt& c) { return monomial(c, 0, 0); }

BiLaurent BiLaurent::monomial(const BigInt& c, int ex, int ey) {
  BiLaurent p;
  p.add_term(ex, ey, c);
  return p;
}

BiLaurent BiLaurent::from_y(const LaurentPoly& p) {
  BiLaurent r;
  for (const auto& [e2, c] : p.terms()) {
    if (e2 % 2 != 0) throw Error(ErrorKind::BadParameters, "half-integer exponent in from_y");
    r.add_term(0, e2 / 2, c);
  }
  return r;
}

BigInt BiLaurent::coeff(int ex, int ey) const {
  auto it = terms_.find({ex, ey});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void BiLaurent::add_term(int ex, int ey, const BigInt& c) { add_into(terms_, Exp{ex, ey}, c); }

BiLaurent& BiLaurent::operator+=(const BiLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_into(terms_, e, c);
  return *this;
}

BiLaurent& BiLaurent::operator-=(const BiLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_into(terms_, e, BigInt(-c));
  return *this;
}

BiLaurent& BiLaurent::operator*=(const BiLaurent& o) {
  TermMap out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_)
      add_into(out, Exp{e1.first + e2.first, e1.second + e2.second}, BigInt(c1 * c2));
  terms_ = std::move(out);
  return *this;
}

BiLaurent BiLaurent::operator-() const { return scaled(-1); }

BiLaurent BiLaurent::scaled(const BigInt& c) const {
  BiLaurent r;
  if (c == 0) return r;
  for (const auto& [e, a] : terms_) r.terms_.emplace(e, a * c);
  return r;
}

BiLaurent BiLaurent::shifted(int dx, int dy) const {
  BiLaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exp{e.first + dx, e.second + dy}, c);
  return r;
}

BiLaurent BiLaurent::pow(unsigned n) const {
  BiLaurent r = constant(1);
  for (unsigned i = 0; i < n; ++i) r *= *this;
  return r;
}

int BiLaurent::min_x() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& kv : terms_) m = std::min(m, kv.first.first);
  return terms_.empty() ? 0 : m;
}
int BiLaurent::max_x() const {
  int m = std::numeric_limits<int>::min();
  for (const auto& kv : terms_) m = std::max(m, kv.first.first);
  return terms_.empty() ? 0 : m;
}
int BiLaurent::min_y() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& kv : terms_) m = std::min(m, kv.first.second);
  return terms_.empty() ? 0 : m;
}
int BiLaurent::max_y() const {
  int m = std::numeric_limits<int>::min();
  for (const auto& kv : terms_) m = std::max(m, kv.first.second);
  return terms_.empty() ? 0 : m;
}

LaurentPoly BiLaurent::x_coefficient(int k, Var yvar) const {
  LaurentPoly r(yvar);
  for (const auto& [e, c] : terms_)
    if (e.first == k) r.add_term2(2 * e.second, c);
  return r;
}

BiLaurent BiLaurent::exact_div(const BiLaurent& o) const {
  if (o.is_zero()) throw Error(ErrorKind::NotDivisible, "division by zero polynomial");
  BiLaurent quot;
  if (is_zero()) return quot;
  // Every quotient term lies in this exponent box; leaving it means the
  // division is not exact.
  const int xlo = min_x() - o.min_x(), xhi = max_x() - o.max_x();
  const int ylo = min_y() - o.min_y(), yhi = max_y() - o.max_y();
  BiLaurent rem = *this;
  const auto& [eb, cb] = *o.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& [er, cr] = *rem.terms_.rbegin();
    int dx = er.first - eb.first, dy = er.second - eb.second;
    if (dx < xlo || dx > xhi || dy < ylo || dy > yhi ||
        !mpz_divisible_p(cr.get_mpz_t(), cb.get_mpz_t())) {
      throw Error(ErrorKind::NotDivisible, to_string(*this) + " / " + to_string(o));
    }
    BigInt c = cr / cb;
    quot.add_term(dx, dy, c);
    rem -= o.shifted(dx, dy).scaled(c);
  }
  return quot;
}

std::string to_string(const BiLaurent& p, char xname, char yname) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  auto power = [](char v, int e) {
    std::string s(1, v);
    if (e != 1) s += "^" + std::to_string(e);
    return s;
  };
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    if (e.first != 0) mono += power(xname, e.first);
    if (e.second != 0) {
      if (!mono.empty()) mono += "*";
      mono += power(yname, e.second);
    }
    append_term(out, c, mono, first);
    first = false;
  }
  return out;
}

BiLaurent parse_bilaurent(std::string_view text, char xname, char yname) {
  Scanner sc(text);
  BiLaurent p;
  if (sc.done()) sc.fail("empty polynomial");
  bool first = true;
  while (!sc.done()) {
    int sign = 1;
    if (sc.accept('-')) {
      sign = -1;
    } else if (!sc.accept('+') && !first) {
      sc.fail("expected '+' or '-'");
    }
    first = false;
    BigInt c = 1;
    bool have_coeff = false;
    if (sc.at_digit()) {
      c = sc.number();
      have_coeff = true;
      sc.accept('*');
    }
    int ex = 0, ey = 0;
    bool have_var = false;
    while (sc.peek() == xname || sc.peek() == yname) {
      char ch = sc.take();
      int e = 1;
      if (sc.accept('^')) {
        if (sc.accept('(')) {
          e = sc.small_int();
          sc.expect(')');
        } else {
          e = sc.small_int();
        }
      }
      (ch == xname ? ex : ey) += e;
      have_var = true;
      if (!sc.accept('*')) break;
    }
    if (!have_coeff && !have_var) sc.fail("expected term");
    p.add_term(ex, ey, c * sign);
  }
  return p;
}

// ---------------------------------------------------------------------------
// GaussianInt

GaussianInt& GaussianInt::operator+=(const GaussianInt& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianInt& GaussianInt::operator*=(const GaussianInt& o) {
  BigInt r = re * o.re - im * o.im;
  BigInt i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianInt GaussianInt::pow(unsigned n) const {
  GaussianInt r{1, 0};
  for (unsigned k = 0; k < n; ++k) r *= *this;
  return r;
}

std::string to_string(const GaussianInt& z) {
  if (z.im == 0) return z.re.get_str();
  std::string imag = (abs(z.im) == 1 ? std::string() : BigInt(abs(z.im)).get_str()) + "i";
  if (z.re == 0) return (z.im < 0 ? "-" : "") + imag;
  return z.re.get_str() + (z.im < 0 ? " - " : " + ") + imag;
}

GaussianInt eval_gaussian(const LaurentPoly& p) {
  GaussianInt z;
  for (const auto& [e2, c] : p.terms()) {
    if (e2 % 2 != 0) throw Error(ErrorKind::BadParameters, "eval_gaussian needs integer q-exponents");
    // (-i)^e cycles through 1, -i, -1, i.
    switch (((e2 / 2) % 4 + 4) % 4) {
      case 0: z.re += c; break;
      case 1: z.im -= c; break;
      case 2: z.re -= c; break;
      case 3: z.im += c; break;
    }
  }
  return z;
}

}  // namespace khof

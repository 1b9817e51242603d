#include "qtsym/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qtsym {

namespace {

Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

const char* var_name(int i) {
  static const char* names[kNumVars] = {"q", "t", "z"};
  return names[i];
}

}  // namespace

// ---------------------------------------------------------------------------
// Mono

bool Mono::divides(const Mono& other) const {
  for (int i = 0; i < kNumVars; ++i)
    if (e[i] > other.e[i]) return false;
  return true;
}

Mono Mono::operator*(const Mono& other) const {
  Mono r;
  for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] + other.e[i];
  return r;
}

Mono Mono::operator/(const Mono& other) const {
  Mono r;
  for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] - other.e[i];
  return r;
}

bool mono_lex_less(const Mono& a, const Mono& b) { return a.e < b.e; }

namespace {

// Print order: decreasing q power, then increasing t power, then increasing
// z power.  Calibrated so degree-n values render like
// q^3 + q^2*t + q*t + q*t^2 + t^3.
bool mono_print_before(const Mono& a, const Mono& b) {
  if (a.e[0] != b.e[0]) return a.e[0] > b.e[0];
  if (a.e[1] != b.e[1]) return a.e[1] < b.e[1];
  return a.e[2] < b.e[2];
}

struct MonoLexLess {
  bool operator()(const Mono& a, const Mono& b) const { return mono_lex_less(a, b); }
};

}  // namespace

// ---------------------------------------------------------------------------
// Poly

Poly Poly::constant(Int c) {
  Poly p;
  if (c != 0) p.terms_.push_back({Mono{}, std::move(c)});
  return p;
}

Poly Poly::variable(Var v, int power) {
  if (power < 0) throw std::invalid_argument("Poly::variable: negative power");
  if (power == 0) return constant(1);
  Mono m;
  m[v] = power;
  return monomial(m, 1);
}

Poly Poly::monomial(Mono m, Int c) {
  Poly p;
  if (c != 0) p.terms_.push_back({m, std::move(c)});
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == Mono{});
}

const Poly::Term& Poly::leading() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.front();
}

int Poly::degree(Var v) const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, t.mono[v]);
  return d;
}

int Poly::total_degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::map<Mono, Int, MonoLexLess> acc;
  for (Term& t : terms) {
    if (t.coeff == 0) continue;
    acc[t.mono] += t.coeff;
  }
  Poly p;
  p.terms_.reserve(acc.size());
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (it->second != 0) p.terms_.push_back({it->first, it->second});
  return p;
}

Poly Poly::operator-() const {
  Poly p(*this);
  for (Term& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  // Merge of two term lists in decreasing lex order.
  Poly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const Term& a = terms_[i];
    const Term& b = o.terms_[j];
    if (a.mono == b.mono) {
      Int c = a.coeff + b.coeff;
      if (c != 0) r.terms_.push_back({a.mono, std::move(c)});
      ++i, ++j;
    } else if (mono_lex_less(b.mono, a.mono)) {
      r.terms_.push_back(a);
      ++i;
    } else {
      r.terms_.push_back(b);
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  if (o.is_monomial()) {
    Poly r = mul_mono(o.terms_[0].mono);
    return r.mul_int(o.terms_[0].coeff);
  }
  if (is_monomial()) return o * *this;
  std::map<Mono, Int, MonoLexLess> acc;
  for (const Term& a : terms_)
    for (const Term& b : o.terms_) acc[a.mono * b.mono] += a.coeff * b.coeff;
  Poly r;
  r.terms_.reserve(acc.size());
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (it->second != 0) r.terms_.push_back({it->first, it->second});
  return r;
}

Poly Poly::mul_int(const Int& c) const {
  if (c == 0) return Poly();
  Poly r(*this);
  for (Term& t : r.terms_) t.coeff *= c;
  return r;
}

Poly Poly::mul_mono(const Mono& m) const {
  Poly r(*this);
  for (Term& t : r.terms_) t.mono = t.mono * m;
  return r;
}

Poly Poly::div_exact(const Poly& d) const {
  if (d.is_zero()) throw std::logic_error("div_exact: division by zero polynomial");
  if (is_zero()) return Poly();
  if (d.is_monomial()) {
    const Term& lt = d.terms_[0];
    Poly r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
      if (!lt.mono.divides(t.mono) || t.coeff % lt.coeff != 0)
        throw std::logic_error("div_exact: not divisible");
      r.terms_.push_back({t.mono / lt.mono, t.coeff / lt.coeff});
    }
    return r;
  }
  Poly rem(*this);
  std::vector<Term> quot;
  const Term& dl = d.leading();
  while (!rem.is_zero()) {
    const Term& rl = rem.leading();
    if (!dl.mono.divides(rl.mono) || rl.coeff % dl.coeff != 0)
      throw std::logic_error("div_exact: not divisible");
    Term qt{rl.mono / dl.mono, rl.coeff / dl.coeff};
    rem = rem - d.mul_mono(qt.mono).mul_int(qt.coeff);
    quot.push_back(std::move(qt));
  }
  return from_terms(std::move(quot));
}

Int Poly::int_content() const {
  Int g = 0;
  for (const Term& t : terms_) {
    g = int_gcd(g, t.coeff);
    if (g == 1) break;
  }
  return g;
}

// --- gcd machinery ---------------------------------------------------------

namespace {

// View of p as a univariate polynomial in v; index = power of v, entries have
// zero v-exponent.
std::vector<Poly> to_uni(const Poly& p, Var v) {
  std::vector<Poly> coeffs(static_cast<size_t>(p.degree(v) + 1));
  for (const Poly::Term& t : p.terms()) {
    Mono m = t.mono;
    int dv = m[v];
    m[v] = 0;
    coeffs[dv] = coeffs[dv] + Poly::monomial(m, t.coeff);
  }
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  return coeffs;
}

Poly from_uni(const std::vector<Poly>& coeffs, Var v) {
  std::vector<Poly::Term> terms;
  for (size_t d = 0; d < coeffs.size(); ++d) {
    for (const Poly::Term& t : coeffs[d].terms()) {
      Mono m = t.mono;
      m[v] = static_cast<int>(d);
      terms.push_back({m, t.coeff});
    }
  }
  return Poly::from_terms(std::move(terms));
}

int uni_deg(const std::vector<Poly>& u) { return static_cast<int>(u.size()) - 1; }

std::vector<Poly> uni_trim(std::vector<Poly> u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
  return u;
}

Poly sign_normalized(Poly p) {
  if (!p.is_zero() && p.leading().coeff < 0) return -p;
  return p;
}

Poly gcd_impl(const Poly& a, const Poly& b);

Poly uni_content(const std::vector<Poly>& u) {
  Poly c;
  for (const Poly& p : u) {
    c = gcd_impl(c, p);
    if (c.is_monomial() && c.leading().coeff == 1 && c.leading().mono == Mono{}) break;
  }
  return c;
}

std::vector<Poly> uni_div(const std::vector<Poly>& u, const Poly& d) {
  std::vector<Poly> r(u.size());
  for (size_t i = 0; i < u.size(); ++i) r[i] = u[i].div_exact(d);
  return r;
}

Poly poly_pow(const Poly& p, int e) {
  Poly acc = Poly::constant(1);
  for (int i = 0; i < e; ++i) acc = acc * p;
  return acc;
}

// Textbook pseudo remainder: lc(b)^(deg a - deg b + 1) * a mod b.
std::vector<Poly> uni_prem(std::vector<Poly> r, const std::vector<Poly>& b) {
  const Poly& lcb = b.back();
  int db = uni_deg(b);
  int scale_left = uni_deg(r) - db + 1;
  while (uni_deg(r) >= db && !r.empty()) {
    int dr = uni_deg(r);
    Poly lcr = r.back();
    std::vector<Poly> next(static_cast<size_t>(dr));
    for (int i = 0; i < dr; ++i) {
      Poly x = r[i] * lcb;
      int j = i - (dr - db);
      if (j >= 0 && j < db) x = x - b[static_cast<size_t>(j)] * lcr;
      next[static_cast<size_t>(i)] = std::move(x);
    }
    r = uni_trim(std::move(next));
    --scale_left;
  }
  if (!r.empty() && scale_left > 0) {
    Poly f = poly_pow(lcb, scale_left);
    for (Poly& c : r) c = c * f;
  }
  return r;
}

// Fast path: gcd of a polynomial with a single-term polynomial.
Poly gcd_with_monomial(const Poly& p, const Poly::Term& m) {
  Mono shared = m.mono;
  Int c = m.coeff < 0 ? Int(-m.coeff) : m.coeff;
  for (const Poly::Term& t : p.terms()) {
    for (int i = 0; i < kNumVars; ++i)
      shared.e[i] = std::min(shared.e[i], t.mono.e[i]);
    c = int_gcd(c, t.coeff);
    if (c == 1 && shared == Mono{}) break;
  }
  return Poly::monomial(shared, c);
}

Poly gcd_impl(const Poly& a, const Poly& b) {
  if (a.is_zero()) return sign_normalized(b);
  if (b.is_zero()) return sign_normalized(a);
  if (a.is_monomial()) return gcd_with_monomial(b, a.leading());
  if (b.is_monomial()) return gcd_with_monomial(a, b.leading());

  // Main variable: the highest-index one present (z before t before q), so
  // that q-only values recurse straight to integer coefficient gcds.
  int main = -1;
  for (int i = kNumVars - 1; i >= 0; --i) {
    if (a.degree(static_cast<Var>(i)) > 0 || b.degree(static_cast<Var>(i)) > 0) {
      main = i;
      break;
    }
  }
  if (main < 0) {
    // Both are integer constants.
    return Poly::constant(int_gcd(a.leading().coeff, b.leading().coeff));
  }
  Var v = static_cast<Var>(main);

  std::vector<Poly> ua = to_uni(a, v), ub = to_uni(b, v);
  Poly ca = uni_content(ua), cb = uni_content(ub);
  Poly c = gcd_impl(ca, cb);
  ua = uni_div(ua, ca);
  ub = uni_div(ub, cb);
  if (uni_deg(ua) < uni_deg(ub)) std::swap(ua, ub);

  // Subresultant PRS on the primitive parts: remainders shrink through exact
  // divisions by g * h^delta, so no intermediate content gcds are needed.
  Poly g = Poly::constant(1), h = Poly::constant(1);
  while (true) {
    if (uni_deg(ub) == 0) {
      // Nonzero remainder of v-degree 0: the gcd of the primitive parts is
      // trivial in v, so only the content survives.
      return sign_normalized(c);
    }
    int delta = uni_deg(ua) - uni_deg(ub);
    std::vector<Poly> r = uni_prem(ua, ub);
    if (r.empty()) break;
    Poly divisor = g * poly_pow(h, delta);
    r = uni_div(r, divisor);
    ua = std::move(ub);
    ub = std::move(r);
    g = ua.back();
    if (delta >= 1) h = poly_pow(g, delta).div_exact(poly_pow(h, delta - 1));
  }
  ub = uni_div(ub, uni_content(ub));
  return sign_normalized(c * from_uni(ub, v));
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) { return gcd_impl(a, b); }

// --- rendering -------------------------------------------------------------

namespace {

// Renders one monomial with (possibly negative) exponents; empty for 1.
std::string mono_string(const std::array<int, kNumVars>& e) {
  std::string s;
  for (int i = 0; i < kNumVars; ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += var_name(i);
    if (e[i] != 1) {
      s += '^';
      s += std::to_string(e[i]);
    }
  }
  return s;
}

struct PrintTerm {
  std::array<int, kNumVars> e;
  Int coeff;
};

std::string render_terms(std::vector<PrintTerm> terms) {
  if (terms.empty()) return "0";
  std::sort(terms.begin(), terms.end(), [](const PrintTerm& a, const PrintTerm& b) {
    Mono ma{a.e}, mb{b.e};
    return mono_print_before(ma, mb);
  });
  std::string out;
  bool first = true;
  for (const PrintTerm& t : terms) {
    Int c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out += '-';
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string m = mono_string(t.e);
    if (m.empty()) {
      out += c.str();
    } else {
      if (c != 1) {
        out += c.str();
        out += '*';
      }
      out += m;
    }
  }
  return out;
}

std::string poly_string_shifted(const Poly& p, const Mono& shift_down) {
  std::vector<PrintTerm> terms;
  terms.reserve(p.terms().size());
  for (const Poly::Term& t : p.terms()) {
    PrintTerm pt{t.mono.e, t.coeff};
    for (int i = 0; i < kNumVars; ++i) pt.e[i] -= shift_down.e[i];
    terms.push_back(std::move(pt));
  }
  return render_terms(std::move(terms));
}

}  // namespace

std::string Poly::to_string() const { return poly_string_shifted(*this, Mono{}); }

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(long v) : num_(Poly::constant(Int(v))), den_(Poly::constant(1)) {}
Scalar::Scalar(const Int& v) : num_(Poly::constant(v)), den_(Poly::constant(1)) {}
Scalar::Scalar(const Poly& p) : num_(p), den_(Poly::constant(1)) {}

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

Scalar Scalar::variable(Var v) { return Scalar(Poly::variable(v)); }

Scalar Scalar::ratio(const Int& num, const Int& den) {
  return Scalar(Poly::constant(num), Poly::constant(den));
}

void Scalar::canonicalize() {
  if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (!(g.is_monomial() && g.leading().mono == Mono{} && g.leading().coeff == 1)) {
    num_ = num_.div_exact(g);
    den_ = den_.div_exact(g);
  }
  if (den_.leading().coeff < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

bool Scalar::is_one() const {
  return den_ == Poly::constant(1) && num_ == Poly::constant(1);
}

bool Scalar::is_polynomial() const { return den_ == Poly::constant(1); }

bool Scalar::is_integer() const { return is_polynomial() && num_.is_constant(); }

bool Scalar::depends_on(Var v) const {
  return num_.degree(v) > 0 || den_.degree(v) > 0;
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  // Henrici addition: with both inputs reduced, the sum over the common
  // denominator is reduced up to a factor of g0 = gcd of the denominators,
  // so that is the only gcd that has to touch the (large) numerator.
  const Poly one = Poly::constant(1);
  if (den_ == one && o.den_ == one) {
    Scalar r;
    r.num_ = num_ + o.num_;
    r.den_ = one;
    return r;
  }
  Poly g0 = poly_gcd(den_, o.den_);
  Scalar r;
  if (g0 == one) {
    r.num_ = num_ * o.den_ + o.num_ * den_;
    r.den_ = den_ * o.den_;
    return r;
  }
  Poly dens = o.den_.div_exact(g0);
  Poly num = num_ * dens + o.num_ * den_.div_exact(g0);
  if (num.is_zero()) return Scalar();
  Poly h = poly_gcd(num, g0);
  if (h == one) {
    r.num_ = std::move(num);
    r.den_ = den_ * dens;
  } else {
    r.num_ = num.div_exact(h);
    r.den_ = den_.div_exact(h) * dens;
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_zero() || o.is_zero()) return Scalar();
  if (is_polynomial() && o.is_polynomial()) {
    Scalar r;
    r.num_ = num_ * o.num_;
    r.den_ = Poly::constant(1);
    return r;
  }
  // Cross-cancel before multiplying to keep the gcds small.
  Poly g1 = poly_gcd(num_, o.den_);
  Poly g2 = poly_gcd(o.num_, den_);
  Poly n = num_.div_exact(g1) * o.num_.div_exact(g2);
  Poly d = den_.div_exact(g2) * o.den_.div_exact(g1);
  Scalar r;
  r.num_ = std::move(n);
  r.den_ = std::move(d);
  if (r.den_.leading().coeff < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
  Scalar inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  if (inv.den_.leading().coeff < 0) {
    inv.num_ = -inv.num_;
    inv.den_ = -inv.den_;
  }
  return *this * inv;
}

Scalar Scalar::pow(int e) const {
  if (e == 0) return one();
  if (e < 0) return (one() / *this).pow(-e);
  Scalar base = *this, acc = one();
  unsigned k = static_cast<unsigned>(e);
  while (k) {
    if (k & 1) acc = acc * base;
    base = k > 1 ? base * base : base;
    k >>= 1;
  }
  return acc;
}

namespace {

Scalar eval_poly(const Poly& p, const std::array<const Scalar*, kNumVars>& vals) {
  // Power tables per variable, grown on demand.
  std::array<std::vector<Scalar>, kNumVars> pows;
  for (int i = 0; i < kNumVars; ++i) pows[i].push_back(Scalar::one());
  auto power = [&](int v, int e) -> const Scalar& {
    auto& tab = pows[v];
    while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * *vals[v]);
    return tab[static_cast<size_t>(e)];
  };
  Scalar acc;
  for (const Poly::Term& t : p.terms()) {
    Scalar term(t.coeff);
    for (int i = 0; i < kNumVars; ++i)
      if (t.mono.e[i] != 0) term = term * power(i, t.mono.e[i]);
    acc = acc + term;
  }
  return acc;
}

}  // namespace

Scalar Scalar::substitute(const Scalar& q_to, const Scalar& t_to, const Scalar& z_to) const {
  std::array<const Scalar*, kNumVars> vals{&q_to, &t_to, &z_to};
  Scalar n = eval_poly(num_, vals);
  Scalar d = eval_poly(den_, vals);
  if (d.is_zero()) throw std::domain_error("Scalar::substitute: denominator vanishes");
  return n / d;
}

Scalar Scalar::specialize(Var v, const Scalar& value) const {
  Scalar images[kNumVars] = {Scalar::q(), Scalar::t(), Scalar::z()};
  images[static_cast<int>(v)] = value;
  return substitute(images[0], images[1], images[2]);
}

std::vector<Scalar> Scalar::z_coefficients() const {
  if (den_.degree(Var::z) > 0)
    throw std::domain_error("z_coefficients: denominator involves z");
  std::vector<Poly> uz = to_uni(num_, Var::z);
  std::vector<Scalar> out;
  out.reserve(uz.size());
  for (Poly& c : uz) out.push_back(Scalar(std::move(c), den_));
  if (out.empty()) out.push_back(Scalar());
  return out;
}

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  if (is_polynomial()) return num_.to_string();
  if (den_.is_monomial() && den_.leading().coeff == 1)
    return poly_string_shifted(num_, den_.leading().mono);
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

// --- parsing ---------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Scalar parse() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("Scalar::parse: " + what + " at offset " +
                                std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Scalar expr() {
    bool neg = false;
    skip_ws();
    if (eat('-')) neg = true;
    Scalar v = term();
    if (neg) v = -v;
    while (true) {
      if (eat('+')) {
        v = v + term();
      } else if (eat('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = factor();
    while (true) {
      if (eat('*')) {
        v = v * factor();
      } else if (eat('/')) {
        Scalar d = factor();
        if (d.is_zero()) fail("division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }

  Scalar factor() {
    Scalar b = base();
    if (eat('^')) {
      bool neg = eat('-');
      int e = parse_uint();
      if (neg && b.is_zero()) fail("zero to a negative power");
      b = b.pow(neg ? -e : e);
    }
    return b;
  }

  Scalar base() {
    char c = peek();
    if (c == '(') {
      eat('(');
      Scalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 'q' || c == 't' || c == 'z') {
      ++pos_;
      return Scalar::variable(c == 'q' ? Var::q : c == 't' ? Var::t : Var::z);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Scalar(parse_int());
    fail("expected a value");
  }

  int parse_uint() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an integer");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000) fail("exponent too large");
      ++pos_;
    }
    return static_cast<int>(v);
  }

  Int parse_int() {
    skip_ws();
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits += text_[pos_];
      ++pos_;
    }
    if (digits.empty()) fail("expected an integer");
    return Int(digits);
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Named helpers

Scalar q_pow(int e) { return Scalar::q().pow(e); }
Scalar t_pow(int e) { return Scalar::t().pow(e); }

Scalar pochhammer(const Scalar& x, int k) {
  if (k < 0) throw std::invalid_argument("pochhammer: negative length");
  Scalar acc = Scalar::one();
  Scalar qp = Scalar::one();
  for (int i = 0; i < k; ++i) {
    acc = acc * (Scalar::one() - qp * x);
    qp = qp * Scalar::q();
  }
  return acc;
}

namespace {

// (q;q)_k
Scalar q_factorial(int k) { return pochhammer(Scalar::q(), k); }

}  // namespace

Scalar q_binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("q_binomial: negative n");
  if (k < 0 || k > n) return Scalar::zero();
  return q_factorial(n) / (q_factorial(k) * q_factorial(n - k));
}

Scalar q_multinomial(int k, const std::vector<int>& m) {
  long sum = 0;
  for (int mi : m) {
    if (mi < 0) throw std::invalid_argument("q_multinomial: negative multiplicity");
    sum += mi;
  }
  if (sum != k) throw std::invalid_argument("q_multinomial: multiplicities must sum to k");
  Scalar acc = q_factorial(k);
  for (int mi : m) acc = acc / q_factorial(mi);
  return acc;
}

}  // namespace qtsym

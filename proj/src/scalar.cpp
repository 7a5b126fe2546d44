#include "hopf/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hopf {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::CharMismatch: return "CharMismatch";
    case Errc::MalformedData: return "MalformedData";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::Singular: return "Singular";
    case Errc::NotGroupLike: return "NotGroupLike";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::WrongField: return "WrongField";
    case Errc::NotCocentral: return "NotCocentral";
    case Errc::InvalidSystem: return "InvalidSystem";
    case Errc::NotHopfMap: return "NotHopfMap";
    case Errc::NotASection: return "NotASection";
    case Errc::NotCoalgebraMap: return "NotCoalgebraMap";
    case Errc::NotCentralPrimitive: return "NotCentralPrimitive";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::GeneratorsDontSpan: return "GeneratorsDontSpan";
    case Errc::UnknownModel: return "UnknownModel";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

// ---------------------------------------------------------------------------
// modular helpers

uint32_t mod_mul(uint32_t a, uint32_t b, uint32_t p) {
  return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p);
}

uint32_t mod_add(uint32_t a, uint32_t b, uint32_t p) {
  uint64_t s = static_cast<uint64_t>(a) + b;
  return static_cast<uint32_t>(s >= p ? s - p : s);
}

uint32_t mod_sub(uint32_t a, uint32_t b, uint32_t p) { return a >= b ? a - b : a + (p - b); }

uint32_t mod_pow(uint32_t a, uint64_t e, uint32_t p) {
  uint64_t result = 1 % p;
  uint64_t base = a % p;
  while (e > 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<uint32_t>(result);
}

uint32_t mod_inv(uint32_t a, uint32_t p) {
  if (a % p == 0) throw Error(Errc::DivisionByZero, "inverse of 0 mod " + std::to_string(p));
  return mod_pow(a, p - 2, p);
}

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

static uint32_t reduce_mpz(const mpz_class& z, uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<uint32_t>(r.get_ui());
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(uint32_t p, std::size_t nvars, uint32_t c) {
  Polynomial out(p, nvars);
  out.add_term(Exponents(nvars, 0), c % p);
  return out;
}

Polynomial Polynomial::variable(uint32_t p, std::size_t nvars, std::size_t var) {
  Exponents e(nvars, 0);
  e.at(var) = 1;
  return monomial(p, nvars, std::move(e), 1);
}

Polynomial Polynomial::monomial(uint32_t p, std::size_t nvars, Exponents exps, uint32_t c) {
  Polynomial out(p, nvars);
  out.add_term(exps, c % p);
  return out;
}

void Polynomial::add_term(const Exponents& e, uint32_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = mod_add(it->second, c, p_);
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](uint32_t x) { return x == 0; });
}

uint32_t Polynomial::constant_value() const { return terms_.empty() ? 0 : terms_.begin()->second; }

int Polynomial::degree_in(std::size_t var) const {
  int best = kNegInfDegree;
  for (const auto& [e, c] : terms_) best = std::max(best, static_cast<int>(e[var]));
  return best;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  Polynomial out(p_, nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, p_ - c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out(p_, nvars_);
  Exponents e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t v = 0; v < nvars_; ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, mod_mul(ca, cb, p_));
    }
  }
  return out;
}

Polynomial Polynomial::scaled(uint32_t c) const {
  Polynomial out(p_, nvars_);
  c %= p_;
  if (c == 0) return out;
  for (const auto& [e, x] : terms_) out.terms_.emplace(e, mod_mul(x, c, p_));
  return out;
}

Polynomial Polynomial::shifted_down(const Exponents& exps) const {
  Polynomial out(p_, nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    for (std::size_t v = 0; v < nvars_; ++v) f[v] -= exps[v];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

Polynomial Polynomial::shifted_up(const Exponents& exps) const {
  Polynomial out(p_, nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    for (std::size_t v = 0; v < nvars_; ++v) f[v] += exps[v];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

Exponents Polynomial::min_exponents() const {
  if (terms_.empty()) return Exponents(nvars_, 0);
  Exponents m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t v = 0; v < nvars_; ++v) m[v] = std::min(m[v], e[v]);
  return m;
}

std::string Polynomial::to_string(std::span<const std::string> vars) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << '+';
    first = false;
    bool any_var = false;
    std::ostringstream mono;
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (e[v] == 0) continue;
      if (any_var) mono << '*';
      any_var = true;
      if (v < vars.size())
        mono << vars[v];
      else
        mono << 'X' << (v + 1);
      if (e[v] > 1) mono << '^' << e[v];
    }
    if (!any_var) {
      os << c;
    } else {
      if (c != 1) os << c << '*';
      os << mono.str();
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// RationalFunction

void RationalFunction::normalize() {
  const uint32_t p = num.modulus();
  const std::size_t n = num.nvars();
  if (num.is_zero()) {
    den = Polynomial::constant(p, n, 1);
    return;
  }
  if (num == den) {
    num = Polynomial::constant(p, n, 1);
    den = num;
    return;
  }
  Exponents mn = num.min_exponents();
  Exponents md = den.min_exponents();
  bool shift = false;
  for (std::size_t v = 0; v < n; ++v) {
    mn[v] = std::min(mn[v], md[v]);
    shift = shift || mn[v] > 0;
  }
  if (shift) {
    num = num.shifted_down(mn);
    den = den.shifted_down(mn);
  }
  // Make the leading coefficient of the denominator 1.
  uint32_t lead = den.terms().rbegin()->second;
  if (lead != 1) {
    uint32_t inv = mod_inv(lead, p);
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
}

int degree_valuation(const RationalFunction& f, std::size_t var) {
  if (f.num.is_zero()) throw Error(Errc::DivisionByZero, "valuation of zero");
  return f.num.degree_in(var) - f.den.degree_in(var);
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(RationalFunction f) : rep_(std::move(f)) {
  auto& rf = std::get<RationalFunction>(rep_);
  if (rf.den.is_zero()) throw Error(Errc::DivisionByZero, "zero denominator");
  rf.normalize();
}

namespace {

[[noreturn]] void mismatch() { throw Error(Errc::FieldMismatch, "scalars from different fields"); }

void same_poly_ring(const RationalFunction& a, const RationalFunction& b) {
  if (a.num.modulus() != b.num.modulus() || a.num.nvars() != b.num.nvars()) mismatch();
}

}  // namespace

bool Scalar::is_zero() const {
  return std::visit(
      [](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, mpq_class>)
          return sgn(x) == 0;
        else if constexpr (std::is_same_v<T, Residue>)
          return x.value == 0;
        else
          return x.num.is_zero();
      },
      rep_);
}

bool Scalar::is_one() const {
  return std::visit(
      [](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, mpq_class>)
          return x == 1;
        else if constexpr (std::is_same_v<T, Residue>)
          return x.value == 1;
        else
          return x.num == x.den;
      },
      rep_);
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (rep_.index() != o.rep_.index()) mismatch();
  switch (rep_.index()) {
    case 0: return Scalar(mpq_class(std::get<0>(rep_) + std::get<0>(o.rep_)));
    case 1: {
      const auto& a = std::get<1>(rep_);
      const auto& b = std::get<1>(o.rep_);
      if (a.p != b.p) mismatch();
      return Scalar(Residue{mod_add(a.value, b.value, a.p), a.p});
    }
    default: {
      const auto& a = std::get<2>(rep_);
      const auto& b = std::get<2>(o.rep_);
      same_poly_ring(a, b);
      if (b.num.is_zero()) return *this;
      if (a.num.is_zero()) return o;
      if (a.den == b.den) return Scalar(RationalFunction{a.num + b.num, a.den});
      return Scalar(RationalFunction{a.num * b.den + b.num * a.den, a.den * b.den});
    }
  }
}

Scalar Scalar::operator-() const {
  switch (rep_.index()) {
    case 0: return Scalar(mpq_class(-std::get<0>(rep_)));
    case 1: {
      const auto& a = std::get<1>(rep_);
      return Scalar(Residue{a.value == 0 ? 0 : a.p - a.value, a.p});
    }
    default: {
      const auto& a = std::get<2>(rep_);
      return Scalar(RationalFunction{-a.num, a.den});
    }
  }
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (rep_.index() != o.rep_.index()) mismatch();
  switch (rep_.index()) {
    case 0: return Scalar(mpq_class(std::get<0>(rep_) * std::get<0>(o.rep_)));
    case 1: {
      const auto& a = std::get<1>(rep_);
      const auto& b = std::get<1>(o.rep_);
      if (a.p != b.p) mismatch();
      return Scalar(Residue{mod_mul(a.value, b.value, a.p), a.p});
    }
    default: {
      const auto& a = std::get<2>(rep_);
      const auto& b = std::get<2>(o.rep_);
      same_poly_ring(a, b);
      return Scalar(RationalFunction{a.num * b.num, a.den * b.den});
    }
  }
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  switch (rep_.index()) {
    case 0: return Scalar(mpq_class(1 / std::get<0>(rep_)));
    case 1: {
      const auto& a = std::get<1>(rep_);
      return Scalar(Residue{mod_inv(a.value, a.p), a.p});
    }
    default: {
      const auto& a = std::get<2>(rep_);
      return Scalar(RationalFunction{a.den, a.num});
    }
  }
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::pow(uint64_t e) const {
  Scalar result = [this]() {
    switch (rep_.index()) {
      case 0: return Scalar(mpq_class(1));
      case 1: return Scalar(Residue{1, std::get<1>(rep_).p});
      default: {
        const auto& f = std::get<2>(rep_);
        auto one = Polynomial::constant(f.num.modulus(), f.num.nvars(), 1);
        return Scalar(RationalFunction{one, one});
      }
    }
  }();
  Scalar base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.rep_.index() != b.rep_.index()) mismatch();
  switch (a.rep_.index()) {
    case 0: return std::get<0>(a.rep_) == std::get<0>(b.rep_);
    case 1: {
      const auto& x = std::get<1>(a.rep_);
      const auto& y = std::get<1>(b.rep_);
      if (x.p != y.p) mismatch();
      return x.value == y.value;
    }
    default: {
      const auto& x = std::get<2>(a.rep_);
      const auto& y = std::get<2>(b.rep_);
      same_poly_ring(x, y);
      if (x.den == y.den) return x.num == y.num;
      return x.num * y.den == y.num * x.den;
    }
  }
}

std::string Scalar::to_string() const {
  switch (rep_.index()) {
    case 0: return std::get<0>(rep_).get_str();
    case 1: return std::to_string(std::get<1>(rep_).value);
    default: {
      const auto& f = std::get<2>(rep_);
      std::vector<std::string> names;
      for (std::size_t v = 0; v < f.num.nvars(); ++v) names.push_back("X" + std::to_string(v + 1));
      if (f.den.is_constant() && f.den.constant_value() == 1) return f.num.to_string(names);
      return "(" + f.num.to_string(names) + ")/(" + f.den.to_string(names) + ")";
    }
  }
}

// ---------------------------------------------------------------------------
// FieldSpec

FieldSpec FieldSpec::rationals() { return FieldSpec(Kind::Rationals, 0, {}); }

FieldSpec FieldSpec::prime(uint32_t p) {
  if (!is_prime(p)) throw Error(Errc::InvalidArgument, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(Errc::InvalidArgument, "characteristic 2 is not supported");
  return FieldSpec(Kind::PrimeField, p, {});
}

FieldSpec FieldSpec::rational_functions(uint32_t p, std::vector<std::string> vars) {
  if (!is_prime(p)) throw Error(Errc::InvalidArgument, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(Errc::InvalidArgument, "characteristic 2 is not supported");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const auto& v = vars[i];
    if (v.empty()) throw Error(Errc::InvalidArgument, "empty variable name");
    if (!(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
      throw Error(Errc::InvalidArgument, "bad variable name '" + v + "'");
    for (char ch : v)
      if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
        throw Error(Errc::InvalidArgument, "bad variable name '" + v + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (vars[j] == v) throw Error(Errc::InvalidArgument, "duplicate variable '" + v + "'");
  }
  return FieldSpec(Kind::RationalFunctions, p, std::move(vars));
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t == "q" || t == "Q") return rationals();
  if (t.size() < 2 || (t[0] != 'f' && t[0] != 'F'))
    throw ParseError(0, "field must be 'q', 'fP' or 'fP(V1,...)'");
  std::size_t i = 1;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
  if (i == 1) throw ParseError(1, "expected characteristic");
  const auto p = static_cast<uint32_t>(std::stoul(t.substr(1, i - 1)));
  if (i == t.size()) return prime(p);
  if (t[i] != '(' || t.back() != ')') throw ParseError(i, "expected '(' variable list ')'");
  std::vector<std::string> vars;
  std::string cur;
  for (std::size_t j = i + 1; j + 1 < t.size(); ++j) {
    if (t[j] == ',') {
      vars.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(t[j]);
    }
  }
  vars.push_back(cur);
  return rational_functions(p, std::move(vars));
}

Scalar FieldSpec::from_int(long long v) const {
  switch (kind_) {
    case Kind::Rationals: return Scalar(mpq_class(static_cast<long>(v)));
    case Kind::PrimeField: {
      long long r = v % static_cast<long long>(p_);
      if (r < 0) r += p_;
      return Scalar(Scalar::Residue{static_cast<uint32_t>(r), p_});
    }
    default: {
      long long r = v % static_cast<long long>(p_);
      if (r < 0) r += p_;
      return Scalar(RationalFunction{Polynomial::constant(p_, vars_.size(), static_cast<uint32_t>(r)),
                                     Polynomial::constant(p_, vars_.size(), 1)});
    }
  }
}

Scalar FieldSpec::variable(std::size_t index) const {
  if (kind_ != Kind::RationalFunctions || index >= vars_.size())
    throw Error(Errc::InvalidArgument, "no variable " + std::to_string(index) + " in " + to_string());
  return Scalar(RationalFunction{Polynomial::variable(p_, vars_.size(), index),
                                 Polynomial::constant(p_, vars_.size(), 1)});
}

Scalar FieldSpec::element(uint32_t i) const {
  if (kind_ != Kind::PrimeField) throw Error(Errc::WrongField, "element() needs a prime field");
  return Scalar(Scalar::Residue{i % p_, p_});
}

bool FieldSpec::contains(const Scalar& s) const {
  const auto& r = s.rep();
  switch (kind_) {
    case Kind::Rationals: return r.index() == 0;
    case Kind::PrimeField: return r.index() == 1 && std::get<1>(r).p == p_;
    default:
      return r.index() == 2 && std::get<2>(r).num.modulus() == p_ &&
             std::get<2>(r).num.nvars() == vars_.size();
  }
}

void FieldSpec::check(const Scalar& s) const {
  if (!contains(s)) throw Error(Errc::FieldMismatch, "scalar " + s.to_string() + " not in " + to_string());
}

std::string FieldSpec::to_string() const {
  switch (kind_) {
    case Kind::Rationals: return "q";
    case Kind::PrimeField: return "f" + std::to_string(p_);
    default: {
      std::string out = "f" + std::to_string(p_) + "(";
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) out += ",";
        out += vars_[i];
      }
      return out + ")";
    }
  }
}

std::string FieldSpec::format(const Scalar& s) const {
  check(s);
  if (kind_ != Kind::RationalFunctions) return s.to_string();
  const auto& f = std::get<RationalFunction>(s.rep());
  if (f.den.is_constant() && f.den.constant_value() == 1) return f.num.to_string(vars_);
  return "(" + f.num.to_string(vars_) + ")/(" + f.den.to_string(vars_) + ")";
}

// ---------------------------------------------------------------------------
// Scalar parser: expressions over the field built from integers, variables,
// + - * / ^ and parentheses. Covers "-3/4", "2*X1^2+1" and "(poly)/(poly)".

namespace {

class ScalarParser {
 public:
  ScalarParser(const FieldSpec& field, std::string_view text) : field_(field), text_(text) {}

  Scalar parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError(pos_, "empty scalar");
    Scalar v = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Scalar acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  Scalar term() {
    Scalar acc = power();
    for (;;) {
      if (accept('*')) {
        acc = acc * power();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Scalar d = power();
        if (d.is_zero()) throw ParseError(at, "division by zero");
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  Scalar power() {
    Scalar base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError(pos_, "expected exponent");
      const auto e = std::stoull(std::string(text_.substr(start, pos_ - start)));
      base = base.pow(e);
    }
    return base;
  }

  Scalar atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return integer(mpz_class(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      const auto& vars = field_.vars();
      auto it = std::find(vars.begin(), vars.end(), name);
      if (it == vars.end())
        throw Error(Errc::FieldMismatch,
                    "variable '" + name + "' at position " + std::to_string(start) + " not in " +
                        field_.to_string());
      return field_.variable(static_cast<std::size_t>(it - vars.begin()));
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  Scalar integer(const mpz_class& z) const {
    if (field_.kind() == FieldSpec::Kind::Rationals) return Scalar(mpq_class(z));
    return field_.from_int(reduce_mpz(z, field_.characteristic()));
  }

  const FieldSpec& field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar FieldSpec::parse_scalar(std::string_view text) const { return ScalarParser(*this, text).parse(); }

}  // namespace hopf

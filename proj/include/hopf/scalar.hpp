#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hopf/error.hpp"

namespace hopf {

uint32_t mod_mul(uint32_t a, uint32_t b, uint32_t p);
uint32_t mod_add(uint32_t a, uint32_t b, uint32_t p);
uint32_t mod_sub(uint32_t a, uint32_t b, uint32_t p);
uint32_t mod_pow(uint32_t a, uint64_t e, uint32_t p);
uint32_t mod_inv(uint32_t a, uint32_t p);
bool is_prime(uint32_t n);

using Exponents = std::vector<uint32_t>;

inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

/// Polynomial over F_p in a fixed number of variables. Zero coefficients are
/// never stored, so structural equality is mathematical equality.
class Polynomial {
 public:
  Polynomial(uint32_t p, std::size_t nvars) : p_(p), nvars_(nvars) {}

  static Polynomial constant(uint32_t p, std::size_t nvars, uint32_t c);
  static Polynomial variable(uint32_t p, std::size_t nvars, std::size_t var);
  static Polynomial monomial(uint32_t p, std::size_t nvars, Exponents exps, uint32_t c);

  uint32_t modulus() const { return p_; }
  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, uint32_t>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of a constant polynomial (0 for the zero polynomial).
  uint32_t constant_value() const;
  bool is_single_term() const { return terms_.size() == 1; }
  /// Max exponent of `var` over all stored monomials; kNegInfDegree for zero.
  int degree_in(std::size_t var) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(uint32_t c) const;
  // Divide every exponent vector by `exps` (caller guarantees divisibility).
  Polynomial shifted_down(const Exponents& exps) const;
  Polynomial shifted_up(const Exponents& exps) const;
  // Componentwise minimum exponent over all terms (zero vector for zero poly).
  Exponents min_exponents() const;

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  std::string to_string(std::span<const std::string> vars) const;

 private:
  void add_term(const Exponents& e, uint32_t c);

  uint32_t p_;
  std::size_t nvars_;
  std::map<Exponents, uint32_t> terms_;
};

/// Element of F_p(X_1..X_n) as an unreduced fraction; equality is by
/// cross-multiplication.
struct RationalFunction {
  Polynomial num;
  Polynomial den;

  // Cheap cancellations that never change the value: zero numerator becomes
  // 0/1, constant denominators are folded into the numerator, and common
  // monomial factors are divided out.
  void normalize();
};

class FieldSpec;

class Scalar {
 public:
  struct Residue {
    uint32_t value;
    uint32_t p;
  };
  using Rep = std::variant<mpq_class, Residue, RationalFunction>;

  explicit Scalar(mpq_class q) : rep_(std::move(q)) {}
  explicit Scalar(Residue r) : rep_(r) {}
  explicit Scalar(RationalFunction f);

  const Rep& rep() const { return rep_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inv() const;
  Scalar pow(uint64_t e) const;

  /// scalar_eq: exact equality; rational functions compare by cross-multiplication.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Printer that needs no variable names: rationals and residues print
  // plainly, rational functions use X1..Xn.
  std::string to_string() const;

 private:
  Rep rep_;
};

/// Which exact field scalars live in. Characteristic 2 is rejected.
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField, RationalFunctions };

  static FieldSpec rationals();
  static FieldSpec prime(uint32_t p);
  static FieldSpec rational_functions(uint32_t p, std::vector<std::string> vars);
  /// Flag grammar: "q", "fP", "fP(V1,...,Vn)".
  static FieldSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  uint32_t characteristic() const { return p_; }
  bool is_finite() const { return kind_ == Kind::PrimeField; }
  const std::vector<std::string>& vars() const { return vars_; }

  Scalar zero() const { return from_int(0); }
  Scalar one() const { return from_int(1); }
  Scalar from_int(long long v) const;
  Scalar variable(std::size_t index) const;
  /// Residue i in [0, p) as a scalar; prime fields only.
  Scalar element(uint32_t i) const;

  // Membership check; throws FieldMismatch when `s` belongs elsewhere.
  void check(const Scalar& s) const;
  bool contains(const Scalar& s) const;

  Scalar parse_scalar(std::string_view text) const;
  std::string format(const Scalar& s) const;

  std::string to_string() const;

  bool operator==(const FieldSpec& o) const {
    return kind_ == o.kind_ && p_ == o.p_ && vars_ == o.vars_;
  }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

 private:
  FieldSpec(Kind kind, uint32_t p, std::vector<std::string> vars)
      : kind_(kind), p_(p), vars_(std::move(vars)) {}

  Kind kind_;
  uint32_t p_;
  std::vector<std::string> vars_;
};

/// Degree valuation of a nonzero rational function in one variable:
/// deg_var(num) - deg_var(den). Additive on products, so parities survive
/// arbitrary unreduced representations.
int degree_valuation(const RationalFunction& f, std::size_t var);

}  // namespace hopf

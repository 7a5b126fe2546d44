#include "hopf/sweedler.hpp"

#include <future>

#include "hopf/catalog.hpp"

namespace hopf {

namespace {

constexpr std::size_t kOne = 0, kG = 1, kX = 2, kGX = 3;
constexpr std::size_t kH = 4;

Vec concat(Vec a, const Vec& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Vec flatten(const std::vector<Vec>& table) {
  Vec out;
  for (const auto& v : table) out.insert(out.end(), v.begin(), v.end());
  return out;
}

struct Affine {
  Vec p;
  std::vector<Vec> kernel;
};

using Residual = std::function<Vec(const Vec&)>;

std::optional<Affine> solve_affine(const Residual& r, std::size_t n, const FieldSpec& field) {
  const Vec r0 = r(zeros(field, n));
  Matrix m(field, r0.size(), n);
  for (std::size_t j = 0; j < n; ++j) m.set_column(j, sub(r(unit_vector(field, n, j)), r0));
  auto sol = solve_linear(m, scale(-field.one(), r0));
  if (!sol) return std::nullopt;
  return Affine{std::move(sol->particular), std::move(sol->kernel)};
}

Vec point_of(const Affine& s, const Vec& t) {
  Vec y = s.p;
  for (std::size_t k = 0; k < t.size(); ++k)
    if (!t[k].is_zero()) axpy(y, t[k], s.kernel[k]);
  return y;
}

// Restricts a degree-2 residual to an affine space. Succeeds when the
// quadratic part vanishes there, so that the residual is affine in the
// coordinates; `linear` reports that.
std::optional<Affine> restrict_quadratic(const Affine& s, const Residual& q, const FieldSpec& field, bool& linear) {
  const std::size_t d = s.kernel.size();
  const Scalar half = field.from_int(2).inv();
  const Vec q0 = q(s.p);
  std::vector<Vec> lin(d), quad(d);
  for (std::size_t k = 0; k < d; ++k) {
    const Vec plus = q(add(s.p, s.kernel[k]));
    const Vec minus = q(sub(s.p, s.kernel[k]));
    lin[k] = scale(half, sub(plus, minus));
    quad[k] = sub(scale(half, add(plus, minus)), q0);
  }
  linear = true;
  for (std::size_t k = 0; k < d && linear; ++k) {
    if (!is_zero(quad[k])) linear = false;
    for (std::size_t l = k + 1; l < d && linear; ++l) {
      Vec mixed = sub(q(add(s.p, add(s.kernel[k], s.kernel[l]))), q0);
      mixed = sub(sub(mixed, lin[k]), lin[l]);
      if (!is_zero(mixed)) linear = false;
    }
  }
  if (!linear) return std::nullopt;
  if (d == 0) {
    if (!is_zero(q0)) return std::nullopt;
    return s;
  }
  Matrix m = Matrix::from_columns(field, q0.size(), lin);
  auto sol = solve_linear(m, scale(-field.one(), q0));
  if (!sol) return std::nullopt;
  Affine out{point_of(s, sol->particular), {}};
  for (const auto& n : sol->kernel) out.kernel.push_back(sub(point_of(s, n), s.p));
  return out;
}

// Cocycle unknowns: f(h, g) occupies coordinates (h * 4 + g) * dimA.
struct CocycleSpace {
  const HopfAlgebra& A;
  const HopfAlgebra& H;
  std::vector<std::vector<SweedlerTerm>> h2;

  CocycleSpace(const HopfAlgebra& a, const HopfAlgebra& h) : A(a), H(h) {
    for (std::size_t i = 0; i < kH; ++i) h2.push_back(sweedler_basis(H, i, 2));
  }
  std::size_t size() const { return kH * kH * A.dim; }
  Vec entry(const Vec& X, std::size_t h, std::size_t g) const {
    auto it = X.begin() + static_cast<std::ptrdiff_t>((h * kH + g) * A.dim);
    return Vec(it, it + static_cast<std::ptrdiff_t>(A.dim));
  }
  Vec f(const Vec& X, const Vec& u, const Vec& v) const {
    Vec out = A.zero();
    for (std::size_t i = 0; i < kH; ++i)
      for (std::size_t j = 0; j < kH; ++j)
        if (!u[i].is_zero() && !v[j].is_zero()) axpy(out, u[i] * v[j], entry(X, i, j));
    return out;
  }

  // normalization, centrality, symmetry and counit; affine in X
  Vec linear(const Vec& X) const {
    Vec out;
    for (std::size_t h = 0; h < kH; ++h) {
      const Vec e = scale(H.counit[h], A.unit);
      out = concat(std::move(out), sub(entry(X, kOne, h), e));
      out = concat(std::move(out), sub(entry(X, h, kOne), e));
    }
    for (std::size_t h = 0; h < kH; ++h)
      for (std::size_t g = 0; g < kH; ++g) {
        const Vec v = entry(X, h, g);
        for (std::size_t b = 0; b < A.dim; ++b)
          out = concat(std::move(out), sub(A.multiply(A.e(b), v), A.multiply(v, A.e(b))));
        Vec sym = zeros(A.field, kH * A.dim);
        for (const auto& x : h2[h])
          for (const auto& y : h2[g]) {
            axpy(sym, x.coeff * y.coeff, tensor(H.product(x.idx[0], y.idx[0]), entry(X, x.idx[1], y.idx[1])));
            axpy(sym, -(x.coeff * y.coeff), tensor(H.product(x.idx[1], y.idx[1]), entry(X, x.idx[0], y.idx[0])));
          }
        out = concat(std::move(out), sym);
        out.push_back(A.apply_counit(v) - H.counit[h] * H.counit[g]);
      }
    return out;
  }

  Vec coalgebra(const Vec& X) const {
    Vec out;
    for (std::size_t h = 0; h < kH; ++h)
      for (std::size_t g = 0; g < kH; ++g) {
        Vec d = A.coproduct(entry(X, h, g));
        for (const auto& x : h2[h])
          for (const auto& y : h2[g])
            axpy(d, -(x.coeff * y.coeff), tensor(entry(X, x.idx[0], y.idx[0]), entry(X, x.idx[1], y.idx[1])));
        out = concat(std::move(out), d);
      }
    return out;
  }

  // f(h1, l1) f(y, h2 l2) = f(y1, h1) f(y2 h2, l) for trivial actions
  Vec cocycle(const Vec& X) const {
    Vec out;
    for (std::size_t h = 0; h < kH; ++h)
      for (std::size_t l = 0; l < kH; ++l)
        for (std::size_t y = 0; y < kH; ++y) {
          Vec d = A.zero();
          for (const auto& s : h2[h])
            for (const auto& t : h2[l])
              axpy(d, s.coeff * t.coeff,
                   A.multiply(entry(X, s.idx[0], t.idx[0]), f(X, H.e(y), H.product(s.idx[1], t.idx[1]))));
          for (const auto& s : h2[y])
            for (const auto& t : h2[h])
              axpy(d, -(s.coeff * t.coeff),
                   A.multiply(entry(X, s.idx[0], t.idx[0]), f(X, H.product(s.idx[1], t.idx[1]), H.e(l))));
          out = concat(std::move(out), d);
        }
    return out;
  }
};

// 1 |> a = a together with h1 (x) (h2 |> a) = h2 (x) (h1 |> a) leave only
// h |> a = eps(h) a.
bool action_forced_trivial(const HopfAlgebra& A, const HopfAlgebra& H) {
  std::vector<std::vector<SweedlerTerm>> h2;
  for (std::size_t i = 0; i < kH; ++i) h2.push_back(sweedler_basis(H, i, 2));
  const std::size_t n = kH * A.dim;
  for (std::size_t a = 0; a < A.dim; ++a) {
    auto slot = [&](const Vec& T, std::size_t h) {
      auto it = T.begin() + static_cast<std::ptrdiff_t>(h * A.dim);
      return Vec(it, it + static_cast<std::ptrdiff_t>(A.dim));
    };
    Residual r = [&](const Vec& T) {
      Vec out = sub(slot(T, kOne), A.e(a));
      for (std::size_t h = 0; h < kH; ++h) {
        Vec d = zeros(A.field, kH * A.dim);
        for (const auto& x : h2[h]) {
          axpy(d, x.coeff, tensor(H.e(x.idx[0]), slot(T, x.idx[1])));
          axpy(d, -x.coeff, tensor(H.e(x.idx[1]), slot(T, x.idx[0])));
        }
        out = concat(std::move(out), d);
      }
      return out;
    };
    auto sol = solve_affine(r, n, A.field);
    if (!sol || !sol->kernel.empty()) return false;
    for (std::size_t h = 0; h < kH; ++h)
      if (slot(sol->p, h) != scale(H.counit[h], A.e(a))) return false;
  }
  return true;
}

std::vector<Vec> cocycle_table(const AlgebraPtr& A, const Vec& a) {
  return cocycle_from_param(H4CocycleParam{A, a}).cocycle;
}

bool in_family(const AlgebraPtr& A, const ElementSubspace& z, const CocycleSpace& cs, const Vec& X) {
  const Vec a = cs.entry(X, kX, kX);
  return z.contains(a, A->field) && flatten(cocycle_table(A, a)) == X;
}

std::vector<Vec> points_of(const std::vector<Vec>& basis, const HopfAlgebra& a, uint64_t budget) {
  std::vector<Vec> out;
  for_each_affine_point(a.zero(), basis, a.field, budget, [&](const Vec& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

}  // namespace

AlgebraPtr sweedler4_ptr(const FieldSpec& field) { return std::make_shared<const HopfAlgebra>(sweedler4(field)); }

H4CocycleParam H4CocycleParam::make(AlgebraPtr A, Vec a) {
  if (a.size() != A->dim) throw Error(Errc::ShapeMismatch, "parameter has the wrong length");
  for (const auto& c : a) A->field.check(c);
  if (!zp(*A).contains(a, A->field))
    throw Error(Errc::NotCentralPrimitive, A->format(a) + " is not a central primitive element of " + A->name);
  return H4CocycleParam{std::move(A), std::move(a)};
}

CrossedSystem cocycle_from_param(const H4CocycleParam& param) {
  const AlgebraPtr& A = param.A;
  AlgebraPtr H = sweedler4_ptr(A->field);
  CrossedSystem s{A, H, trivial_action(*A, *H), trivial_cocycle(*A, *H)};
  const Vec minus = scale(-A->field.one(), param.a);
  s.cocycle[kX * kH + kX] = param.a;
  s.cocycle[kX * kH + kGX] = minus;
  s.cocycle[kGX * kH + kX] = param.a;
  s.cocycle[kGX * kH + kGX] = minus;
  return s;
}

H4Enumeration enumerate_h4_systems(const AlgebraPtr& A, bool exhaustive, uint64_t budget) {
  const FieldSpec& field = A->field;
  AlgebraPtr H = sweedler4_ptr(field);
  H4Enumeration out;
  const ElementSubspace z = zp(*A);
  out.zp_basis = z.basis;
  H4Certificate& cert = out.certificate;

  cert.action_forced_trivial = action_forced_trivial(*A, *H);
  cert.steps.push_back(cert.action_forced_trivial
                           ? "action: unit and symmetry conditions at x and gx force h |> a = eps(h) a"
                           : "action: a nontrivial action survived the linear conditions");

  CocycleSpace cs(*A, *H);
  auto lin = solve_affine([&](const Vec& X) { return cs.linear(X); }, cs.size(), field);
  if (!lin) throw Error(Errc::InvalidSystem, "the linear cocycle conditions are inconsistent");
  cert.freedom_after_linear = lin->kernel.size();
  cert.steps.push_back("cocycle: normalization, symmetry, counit and centrality leave " +
                       std::to_string(lin->kernel.size()) + " free coordinates");

  bool l1 = false, l2 = false;
  auto coal = restrict_quadratic(*lin, [&](const Vec& X) { return cs.coalgebra(X); }, field, l1);
  std::optional<Affine> fin;
  if (coal) {
    cert.freedom_after_coalgebra = coal->kernel.size();
    cert.steps.push_back("coalgebra map: the four undetermined values are primitive; " +
                         std::to_string(coal->kernel.size()) + " free coordinates remain");
    fin = restrict_quadratic(*coal, [&](const Vec& X) { return cs.cocycle(X); }, field, l2);
  }
  cert.linearizable = l1 && l2 && fin.has_value();
  if (fin) {
    cert.freedom_final = fin->kernel.size();
    cert.steps.push_back("cocycle condition: f(gx,x) = -f(x,gx), f(gx,gx) = -f(x,x), f(x,gx) = -f(x,x); " +
                         std::to_string(fin->kernel.size()) + " free coordinates remain");
    bool ok = in_family(A, z, cs, fin->p) && fin->kernel.size() == z.dim();
    std::vector<Vec> params;
    const Vec base = flatten(cocycle_table(A, A->zero()));
    for (const auto& k : fin->kernel) {
      const Vec a = cs.entry(k, kX, kX);
      params.push_back(a);
      ok = ok && z.contains(a, field) && add(base, k) == flatten(cocycle_table(A, a));
    }
    ok = ok && rank(Matrix::from_columns(field, A->dim, params)) == z.dim();
    cert.matches_family = ok;
    cert.steps.push_back(ok ? "family: the solutions are exactly f_a for a in ZP(A)"
                            : "family: the solution space differs from {f_a}");
  }

  if (exhaustive && field.is_finite()) {
    const uint64_t p = field.characteristic();
    const Affine* space = nullptr;
    if (candidate_count(p, lin->kernel.size()) <= budget) {
      space = &*lin;
      cert.exhaustive_stage = "after linear conditions";
    } else if (coal && candidate_count(p, coal->kernel.size()) <= budget) {
      space = &*coal;
      cert.exhaustive_stage = "after coalgebra conditions";
    } else {
      throw Error(Errc::BudgetExceeded, "exhaustive confirmation exceeds the budget");
    }
    uint64_t candidates = 0, valid = 0;
    bool all_in_family = true;
    for_each_affine_point(space->p, space->kernel, field, budget, [&](const Vec& X) {
      ++candidates;
      if (is_zero(cs.coalgebra(X)) && is_zero(cs.cocycle(X))) {
        ++valid;
        std::vector<Vec> table;
        for (std::size_t h = 0; h < kH; ++h)
          for (std::size_t g = 0; g < kH; ++g) table.push_back(cs.entry(X, h, g));
        CrossedSystem sys{A, H, trivial_action(*A, *H), std::move(table)};
        all_in_family = all_in_family && in_family(A, z, cs, X) && check_crossed_system(sys).ok();
      }
      return true;
    });
    cert.exhaustive_candidates = candidates;
    cert.exhaustive_valid = valid;
    cert.exhaustive_ok = all_in_family && valid == candidate_count(p, z.dim());
    cert.steps.push_back("exhaustive: " + std::to_string(valid) + " of " + std::to_string(candidates) +
                         " candidates are crossed systems");
  }

  std::vector<Vec> members;
  if (field.is_finite() && candidate_count(field.characteristic(), z.dim()) <= budget) {
    members = points_of(z.basis, *A, budget);
  } else {
    members.push_back(A->zero());
    members.insert(members.end(), z.basis.begin(), z.basis.end());
  }
  for (auto& a : members) out.family.push_back(H4CocycleParam{A, std::move(a)});
  return out;
}

CrossedProduct build_A_a(const H4CocycleParam& param) {
  const HopfAlgebra& A = *param.A;
  CrossedProduct cp = build_crossed_product(cocycle_from_param(param));
  const HopfAlgebra& E = *cp.product;
  const Vec one = E.unit;
  const Vec g = cp.i_H.image(kG);
  const Vec x = cp.i_H.image(kX);
  const Vec gx = cp.i_H.image(kGX);
  const Vec a = cp.i_A.apply(param.a);

  auto require = [&](bool ok, const std::string& what) {
    if (!ok) throw Error(Errc::InvalidSystem, "A_(a) fails " + what);
  };
  require(E.multiply(g, g) == one, "g^2 = 1");
  require(E.multiply(x, x) == a, "x^2 = a");
  require(E.multiply(x, g) == scale(-A.field.one(), E.multiply(g, x)), "xg = -gx");
  require(E.multiply(g, x) == gx, "g x = gx");
  for (std::size_t i = 0; i < A.dim; ++i) {
    const Vec e = cp.i_A.image(i);
    require(E.multiply(g, e) == E.multiply(e, g), "g e = e g");
    require(E.multiply(x, e) == E.multiply(e, x), "x e = e x");
    require(E.apply_antipode(e) == cp.i_A.apply(A.apply_antipode(A.e(i))), "S restricted to A");
  }
  require(E.coproduct(g) == tensor(g, g), "Delta(g)");
  require(E.coproduct(x) == add(tensor(x, one), tensor(g, x)), "Delta(x)");
  require(E.apply_counit(g).is_one() && E.apply_counit(x).is_zero(), "counit values");
  require(E.apply_antipode(g) == g, "S(g) = g");
  require(E.apply_antipode(x) == scale(-A.field.one(), gx), "S(x) = -gx");

  // x^2 = a lets g and x generate when a is a nonzero multiple of A's
  // single generator.
  if (!A.presentation || A.presentation->generators.size() != 1 || is_zero(param.a)) return cp;
  const std::size_t y = A.presentation->generators[0].basis_index;
  for (std::size_t i = 0; i < A.dim; ++i)
    if (i != y && !param.a[i].is_zero()) return cp;
  std::optional<std::size_t> unit_index;
  for (std::size_t i = 0; i < A.dim; ++i)
    if (A.unit == A.e(i)) unit_index = i;
  if (!unit_index) return cp;
  const std::vector<std::vector<std::size_t>> h_words = {{}, {0}, {1}, {0, 1}};
  Presentation pres;
  pres.generators.push_back(Generator{*unit_index * kH + kG, GeneratorKind::GroupLike, std::nullopt, std::nullopt});
  pres.generators.push_back(Generator{*unit_index * kH + kX, GeneratorKind::SkewPrimitive, std::nullopt, 0});
  for (std::size_t i = 0; i < A.dim; ++i)
    for (std::size_t h = 0; h < kH; ++h) {
      std::vector<std::size_t> w(2 * A.presentation->words[i].size(), 1);
      w.insert(w.end(), h_words[h].begin(), h_words[h].end());
      pres.words.push_back(std::move(w));
    }
  auto copy = std::make_shared<HopfAlgebra>(E);
  copy->presentation = std::move(pres);
  AlgebraPtr np = copy;
  cp.i_A = LinearMap(cp.i_A.source, np, cp.i_A.matrix);
  cp.i_H = LinearMap(cp.i_H.source, np, cp.i_H.matrix);
  cp.pi_H = LinearMap(np, cp.pi_H.target, cp.pi_H.matrix);
  cp.product = np;
  return cp;
}

// ---------------------------------------------------------------------------

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Equivalent:
      return "Equivalent";
    case Verdict::NotEquivalent:
      return "NotEquivalent";
    case Verdict::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

TriState TriState::equivalent(OrbitWitness w, std::string reason) {
  TriState t;
  t.verdict = Verdict::Equivalent;
  t.witness = std::move(w);
  t.reason = std::move(reason);
  return t;
}

TriState TriState::not_equivalent(std::string reason) {
  TriState t;
  t.verdict = Verdict::NotEquivalent;
  t.reason = std::move(reason);
  return t;
}

TriState TriState::unknown(std::string reason) {
  TriState t;
  t.verdict = Verdict::Unknown;
  t.reason = std::move(reason);
  return t;
}

namespace {

const char* kOrbitRelation = "alpha q = beta^2 q'";

std::vector<std::size_t> generator_degrees(const HopfAlgebra& A) {
  if (!A.presentation || A.presentation->generators.size() != 1)
    throw Error(Errc::UnknownModel, A.name + " has no single-generator presentation for a scaling model");
  std::vector<std::size_t> deg;
  for (const auto& w : A.presentation->words) deg.push_back(w.size());
  return deg;
}

std::vector<Scalar> units(const FieldSpec& field) {
  std::vector<Scalar> out;
  for (uint32_t i = 1; i < field.characteristic(); ++i) out.push_back(field.from_int(i));
  return out;
}

struct LaurentMonomial {
  uint32_t c;
  std::vector<long> exps;
};

const RationalFunction& as_rf(const Scalar& s) { return std::get<RationalFunction>(s.rep()); }

// c X^e with integer e, when the nonzero rational function is one.
std::optional<LaurentMonomial> laurent_monomial(const Scalar& s) {
  RationalFunction f = as_rf(s);
  f.normalize();
  const uint32_t p = f.num.modulus();
  const std::size_t n = f.num.nvars();
  const auto& [en, cn] = *f.num.terms().rbegin();
  const auto& [ed, cd] = *f.den.terms().rbegin();
  const uint32_t c = mod_mul(cn, mod_inv(cd, p), p);
  if (f.num * Polynomial::monomial(p, n, ed, 1) != f.den * Polynomial::monomial(p, n, en, c)) return std::nullopt;
  LaurentMonomial m{c, {}};
  for (std::size_t i = 0; i < n; ++i) m.exps.push_back(static_cast<long>(en[i]) - static_cast<long>(ed[i]));
  return m;
}

// The F_p value of a constant scalar of a characteristic-p field.
uint32_t constant_value(const Scalar& s) {
  if (const auto* r = std::get_if<Scalar::Residue>(&s.rep())) return r->value;
  RationalFunction f = as_rf(s);
  f.normalize();
  return f.num.constant_value();
}

Scalar monomial_scalar(const FieldSpec& field, uint32_t c, const std::vector<long>& exps) {
  const uint32_t p = field.characteristic();
  const std::size_t n = field.vars().size();
  Exponents pos(n, 0), neg(n, 0);
  for (std::size_t i = 0; i < n; ++i) (exps[i] >= 0 ? pos[i] : neg[i]) = static_cast<uint32_t>(std::labs(exps[i]));
  return Scalar(RationalFunction{Polynomial::monomial(p, n, pos, c), Polynomial::monomial(p, n, neg, 1)});
}

TriState scaling_search(const AlgebraPtr& A, const Vec& a, const Vec& b, ScalarGroup group) {
  const FieldSpec& field = A->field;
  const auto deg = generator_degrees(*A);
  auto witness = [&](const Scalar& alpha, const Scalar& beta, std::string relation) {
    return OrbitWitness{alpha, beta, scaling_automorphism(A, alpha).matrix, std::move(relation)};
  };
  if (is_zero(a) && is_zero(b)) return TriState::equivalent(witness(field.one(), field.one(), "a = b = 0"));
  if (is_zero(a) != is_zero(b)) return TriState::not_equivalent("u is invertible, so u(a) = 0 exactly when a = 0");
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < A->dim; ++i) {
    if (a[i].is_zero() != b[i].is_zero())
      return TriState::not_equivalent("u_alpha is diagonal, so a and b need the same support");
    if (!a[i].is_zero()) support.push_back(i);
  }
  if (field.is_finite()) {
    for (const auto& alpha : units(field))
      for (const auto& beta : units(field)) {
        bool ok = true;
        for (std::size_t i : support) ok = ok && alpha.pow(deg[i]) * a[i] == beta * beta * b[i];
        if (ok) return TriState::equivalent(witness(alpha, beta, "u_alpha(a) = beta^2 b"), "found by brute force");
      }
    return TriState::not_equivalent("no (alpha, beta) in F_p* x F_p* gives u_alpha(a) = beta^2 b");
  }
  if (support.size() == 1 && deg[support[0]] == 1) {
    TriState t = decide_orbit(a[support[0]], b[support[0]], group, field);
    if (t.witness) t.witness->u = scaling_automorphism(A, *t.witness->alpha).matrix;
    return t;
  }
  return TriState::unknown("the scaling model decides only multiples of the generator over infinite fields");
}

TriState finite_search(const AlgebraPtr& A, const Vec& a, const Vec& b, const FiniteSearchModel& m) {
  const FieldSpec& field = A->field;
  if (!field.is_finite()) throw Error(Errc::UnknownModel, "a finite automorphism list needs a prime field for beta");
  for (const auto& u : m.automorphisms) {
    const Vec ua = u.apply(a);
    for (const auto& beta : units(field))
      if (ua == scale(beta * beta, b))
        return TriState::equivalent(OrbitWitness{std::nullopt, beta, u.matrix, "u(a) = beta^2 b"},
                                    "found by exhausting the automorphism list");
  }
  return TriState::not_equivalent("no listed u and beta in F_p* give u(a) = beta^2 b");
}

void materialize(const AlgebraPtr& A, const Vec& a, const Vec& b, TriState& t) {
  if (!t.witness || !t.witness->u) return;
  const CrossedProduct src = build_A_a(H4CocycleParam{A, a});
  const CrossedProduct dst = build_A_a(H4CocycleParam{A, b});
  LinearMap psi = psi_u_beta(LinearMap(A, A, *t.witness->u), t.witness->beta, src, dst);
  t.iso_verified = is_hopf_map(psi) && invert(psi.matrix).has_value();
  t.iso = std::move(psi);
}

}  // namespace

AutModel default_aut_model(const AlgebraPtr& A, uint64_t budget) {
  if (A->name.rfind("line0:", 0) == 0) return ScalingModel{ScalarGroup::FullUnits};
  if (A->name.rfind("line1:", 0) == 0) return ScalingModel{ScalarGroup::PrimeSubfieldUnits};
  if (A->field.is_finite() && A->presentation) return FiniteSearchModel{hopf_automorphisms(A, budget)};
  if (zp(*A).dim() == 0) return FiniteSearchModel{};
  throw Error(Errc::UnknownModel, "no automorphism model for " + A->name + " over " + A->field.to_string());
}

LinearMap scaling_automorphism(const AlgebraPtr& A, const Scalar& alpha) {
  const auto deg = generator_degrees(*A);
  Matrix m(A->field, A->dim, A->dim);
  for (std::size_t i = 0; i < A->dim; ++i) m(i, i) = alpha.pow(deg[i]);
  return LinearMap(A, A, std::move(m));
}

TriState iso_test_A_a(const AlgebraPtr& A, const Vec& a, const Vec& b, const AutModel& model) {
  H4CocycleParam::make(A, a);
  H4CocycleParam::make(A, b);
  TriState t;
  if (!primitively_generated(*A)) {
    if (a != b)
      throw Error(Errc::PreconditionViolated,
                  A->name + " is not generated by primitives, so nontrivial Hopf maps to H4 are not excluded");
    t = TriState::equivalent(
        OrbitWitness{A->field.one(), A->field.one(), Matrix::identity(A->field, A->dim), "a = b"}, "identical");
  } else if (const auto* s = std::get_if<ScalingModel>(&model)) {
    t = scaling_search(A, a, b, s->group);
  } else {
    t = finite_search(A, a, b, std::get<FiniteSearchModel>(model));
  }
  materialize(A, a, b, t);
  return t;
}

AutDescription aut_group_A_a(const AlgebraPtr& A, const Vec& a, const AutModel& model) {
  const H4CocycleParam param = H4CocycleParam::make(A, a);
  if (!primitively_generated(*A))
    throw Error(Errc::PreconditionViolated, A->name + " is not generated by primitives");
  const FieldSpec& field = A->field;
  AutDescription d;
  const auto* scaling = std::get_if<ScalingModel>(&model);
  const std::string group =
      scaling ? (scaling->group == ScalarGroup::FullUnits ? "alpha in k*" : "alpha in F_p*") : "u listed";
  d.condition = is_zero(a) ? "G(0) = Aut_Hopf(A) x k*" : "u(a) = beta^2 a, " + group + ", beta in k*";
  if (!field.is_finite()) {
    if (!scaling) throw Error(Errc::UnknownModel, "a finite automorphism list needs a prime field for beta");
    d.all_verified = true;
    return d;
  }
  std::vector<std::pair<std::optional<Scalar>, LinearMap>> us;
  if (scaling) {
    for (const auto& alpha : units(field)) us.emplace_back(alpha, scaling_automorphism(A, alpha));
  } else {
    for (const auto& u : std::get<FiniteSearchModel>(model).automorphisms) us.emplace_back(std::nullopt, u);
  }
  const CrossedProduct e = build_A_a(param);
  d.all_verified = true;
  for (const auto& [alpha, u] : us) {
    const Vec ua = u.apply(a);
    for (const auto& beta : units(field)) {
      if (ua != scale(beta * beta, a)) continue;
      LinearMap psi = psi_u_beta(u, beta, e, e);
      const bool ok = is_hopf_map(psi) && invert(psi.matrix).has_value();
      d.all_verified = d.all_verified && ok;
      d.elements.push_back(AutElement{alpha, beta, u, std::move(psi), ok});
    }
  }
  d.order = d.elements.size();
  return d;
}

// ---------------------------------------------------------------------------

TriState decide_orbit(const Scalar& q, const Scalar& qprime, ScalarGroup group, const FieldSpec& field) {
  field.check(q);
  field.check(qprime);
  if (q.is_zero() && qprime.is_zero())
    return TriState::equivalent(OrbitWitness{field.one(), field.one(), std::nullopt, kOrbitRelation}, "both zero");
  if (q.is_zero() || qprime.is_zero()) return TriState::not_equivalent("zero forms its own orbit");

  switch (field.kind()) {
    case FieldSpec::Kind::PrimeField:
      for (const auto& alpha : units(field))
        for (const auto& beta : units(field))
          if (alpha * q == beta * beta * qprime)
            return TriState::equivalent(OrbitWitness{alpha, beta, std::nullopt, kOrbitRelation},
                                        "found by brute force over F_p* x F_p*");
      return TriState::not_equivalent("no (alpha, beta) in F_p* x F_p* satisfies " + std::string(kOrbitRelation));
    case FieldSpec::Kind::Rationals:
      return TriState::equivalent(OrbitWitness{qprime / q, field.one(), std::nullopt, kOrbitRelation},
                                  "alpha = q'/q");
    case FieldSpec::Kind::RationalFunctions:
      break;
  }

  const Scalar ratio = q / qprime;
  const auto mono = laurent_monomial(ratio);
  bool even = mono.has_value();
  if (mono)
    for (long e : mono->exps) even = even && e % 2 == 0;
  std::vector<long> half;
  if (mono)
    for (long e : mono->exps) half.push_back(e / 2);

  if (group == ScalarGroup::FullUnits) {
    if (even) {
      // alpha c = beta0^2: prefer alpha = 1 when c is a square
      for (const auto& b0 : units(field))
        if (field.from_int(mono->c) == b0 * b0)
          return TriState::equivalent(
              OrbitWitness{field.one(), monomial_scalar(field, constant_value(b0), half),
                           std::nullopt, kOrbitRelation},
              "q/q' is a square");
    }
    return TriState::equivalent(OrbitWitness{qprime / q, field.one(), std::nullopt, kOrbitRelation}, "alpha = q'/q");
  }

  const RationalFunction& rf = as_rf(ratio);
  for (std::size_t v = 0; v < field.vars().size(); ++v) {
    const int d = degree_valuation(rf, v);
    if (d % 2 != 0)
      return TriState::not_equivalent("the degree of q/q' in " + field.vars()[v] +
                                      " is odd, while alpha in F_p* and beta^2 give even degree");
  }
  if (!mono) return TriState::unknown("q/q' is not a Laurent monomial; deciding needs square classes of k");
  const Scalar c = field.from_int(mono->c);
  for (const auto& alpha : units(field))
    for (const auto& b0 : units(field))
      if (alpha * c == b0 * b0) {
        const Scalar beta = monomial_scalar(field, constant_value(b0), half);
        return TriState::equivalent(OrbitWitness{alpha, beta, std::nullopt, kOrbitRelation},
                                    "q/q' = c X^(2e); alpha c = beta0^2 by brute force");
      }
  return TriState::not_equivalent("no alpha, beta0 in F_p* with alpha c = beta0^2");
}

// ---------------------------------------------------------------------------

namespace {

constexpr uint64_t kMaxFrobeniusPower = uint64_t{1} << 20;

std::optional<uint64_t> checked_power(uint64_t p, unsigned i, uint64_t limit) {
  uint64_t r = 1;
  for (unsigned k = 0; k < i; ++k) {
    if (r > limit / p) return std::nullopt;
    r *= p;
  }
  return r;
}

const char* kSeqRelation = "alpha^(p^i) s_i = beta^2 t_i";

}  // namespace

TriState decide_seq_equiv(const FinSuppSeq& s, const FinSuppSeq& t, const FieldSpec& field) {
  if (field.kind() == FieldSpec::Kind::Rationals || s.p != field.characteristic() || t.p != field.characteristic())
    throw Error(Errc::FieldMismatch, "sequences need a field of characteristic " + std::to_string(s.p));
  for (const auto* seq : {&s, &t})
    for (const auto& [i, v] : seq->entries) {
      field.check(v);
      if (v.is_zero()) throw Error(Errc::InvalidArgument, "sequences store no zero entries");
    }
  for (const auto& [i, v] : s.entries)
    if (!t.entries.count(i))
      return TriState::not_equivalent("supports differ at index " + std::to_string(i));
  for (const auto& [i, v] : t.entries)
    if (!s.entries.count(i))
      return TriState::not_equivalent("supports differ at index " + std::to_string(i));

  const OrbitWitness identity{field.one(), field.one(), std::nullopt, kSeqRelation};
  if (s.entries.empty()) return TriState::equivalent(identity, "both sequences are zero");
  bool same = true;
  for (const auto& [i, v] : s.entries) same = same && t.entries.at(i) == v;
  if (same) return TriState::equivalent(identity, "identical sequences");

  if (field.is_finite()) {
    // alpha^(p^i) = alpha in F_p
    for (const auto& alpha : units(field))
      for (const auto& beta : units(field)) {
        bool ok = true;
        for (const auto& [i, v] : s.entries) ok = ok && alpha * v == beta * beta * t.entries.at(i);
        if (ok)
          return TriState::equivalent(OrbitWitness{alpha, beta, std::nullopt, kSeqRelation},
                                      "found by brute force over F_p* x F_p*");
      }
    return TriState::not_equivalent("no (alpha, beta) in F_p* x F_p* satisfies " + std::string(kSeqRelation));
  }

  const uint64_t p = field.characteristic();
  if (s.entries.size() == 1) {
    const auto& [i, si] = *s.entries.begin();
    const auto pi = checked_power(p, i, kMaxFrobeniusPower);
    if (!pi) return TriState::unknown("p^i is too large to build the witness explicitly");
    // alpha = c, beta = c^((p^i - 1) / 2) with c = t_i / s_i
    const Scalar c = t.entries.at(i) / si;
    const Scalar alpha = c;
    const Scalar beta = c.pow((*pi - 1) / 2);
    if (alpha.pow(*pi) * si != beta * beta * t.entries.at(i))
      return TriState::unknown("explicit witness failed to verify");
    return TriState::equivalent(OrbitWitness{alpha, beta, std::nullopt, kSeqRelation},
                                "alpha = c, beta = c^((p^i - 1)/2) with c = t_i / s_i");
  }

  // Several indices over F_p(X): alpha^(p^i) / beta^2 = t_i / s_i. Degree
  // valuations give p^i A - 2B = v(t_i / s_i) per variable.
  std::vector<std::pair<uint64_t, Scalar>> ratios;
  for (const auto& [i, v] : s.entries) {
    const auto pi = checked_power(p, i, uint64_t{1} << 40);
    if (!pi) return TriState::unknown("p^i is too large for the valuation argument");
    ratios.emplace_back(*pi, t.entries.at(i) / v);
  }
  const std::size_t nv = field.vars().size();
  std::vector<long> A(nv), B(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    std::vector<long long> d;
    for (const auto& [pi, r] : ratios) d.push_back(degree_valuation(as_rf(r), v));
    const long long p0 = static_cast<long long>(ratios[0].first), p1 = static_cast<long long>(ratios[1].first);
    const long long diff = p1 - p0, num = d[1] - d[0];
    if (num % diff != 0)
      return TriState::not_equivalent("degree valuations in " + field.vars()[v] + " admit no integer solution");
    const long long a = num / diff;
    for (std::size_t k = 0; k < ratios.size(); ++k) {
      const long long two_b = static_cast<long long>(ratios[k].first) * a - d[k];
      if (two_b % 2 != 0 || (k > 0 && two_b / 2 != B[v]))
        return TriState::not_equivalent("degree valuations in " + field.vars()[v] + " admit no integer solution");
      if (k == 0) B[v] = static_cast<long>(two_b / 2);
    }
    A[v] = static_cast<long>(a);
  }
  // With two or more indices alpha and beta are forced to be monomials
  // c X^A, so the constants are all that is left.
  std::vector<Scalar> consts;
  for (const auto& [pi, r] : ratios) {
    const auto m = laurent_monomial(r);
    if (!m) return TriState::unknown("t_i / s_i is not a Laurent monomial; deciding needs square classes of k");
    consts.push_back(field.from_int(m->c));
  }
  for (const auto& a0 : units(field))
    for (const auto& b0 : units(field)) {
      bool ok = true;
      for (const auto& c : consts) ok = ok && a0 == b0 * b0 * c;
      if (!ok) continue;
      const Scalar alpha = monomial_scalar(field, constant_value(a0), A);
      const Scalar beta = monomial_scalar(field, constant_value(b0), B);
      bool verified = true;
      for (const auto& [i, v] : s.entries) {
        const auto pi = checked_power(p, i, kMaxFrobeniusPower);
        if (pi) verified = verified && alpha.pow(*pi) * v == beta * beta * t.entries.at(i);
      }
      if (!verified) return TriState::unknown("monomial witness failed to verify");
      return TriState::equivalent(OrbitWitness{alpha, beta, std::nullopt, kSeqRelation},
                                  "monomial alpha, beta from degree valuations and constants");
    }
  return TriState::not_equivalent("alpha and beta must be monomials and no constants in F_p* match");
}

// ---------------------------------------------------------------------------

ClassificationReport classification_report(const AlgebraPtr& A, const AutModel& model,
                                           const std::optional<std::vector<Vec>>& reps, unsigned jobs,
                                           uint64_t budget) {
  const FieldSpec& field = A->field;
  ClassificationReport r;
  r.algebra = A->name;
  const ElementSubspace z = zp(*A);
  r.zp_basis = z.basis;
  const bool listable = field.is_finite() && candidate_count(field.characteristic(), z.dim()) <= budget;
  if (listable) r.h2_points = points_of(z.basis, *A, budget);
  r.h2_description = "H^2(H4, A) = ZP(A), dimension " + std::to_string(z.dim()) + " over " + field.to_string();

  try {
    AlgebraPtr H = sweedler4_ptr(field);
    const auto maps = cocentral_maps(H, A, budget);
    r.coboundaries_trivial = maps.size() == 1 && maps[0].matrix == unit_counit_map(H, A).matrix;
  } catch (const Error& e) {
    r.notes.push_back(std::string("cocentral maps not enumerated: ") + e.what());
  }

  std::vector<Vec> candidates;
  if (reps) {
    candidates = *reps;
  } else if (listable) {
    candidates = *r.h2_points;
  } else {
    candidates.push_back(A->zero());
    candidates.insert(candidates.end(), z.basis.begin(), z.basis.end());
  }
  for (const auto& c : candidates) H4CocycleParam::make(A, c);

  auto compare = [&](const Vec& a, const Vec& b) {
    try {
      return iso_test_A_a(A, a, b, model);
    } catch (const Error& e) {
      if (e.code() != Errc::PreconditionViolated) throw;
      return TriState::unknown(e.what());
    }
  };

  for (const auto& c : candidates) {
    bool joined = false;
    std::vector<Separation> pending;
    for (std::size_t k = 0; k < r.classes.size() && !joined; ++k) {
      if (r.classes[k].representative == c) {
        joined = true;
        break;
      }
      TriState t = compare(r.classes[k].representative, c);
      if (t.verdict == Verdict::Equivalent) {
        r.classes[k].members.push_back(c);
        r.classes[k].joins.push_back(std::move(t));
        joined = true;
      } else {
        if (t.verdict == Verdict::Unknown) r.complete = false;
        pending.push_back(Separation{k, r.classes.size(), std::move(t)});
      }
    }
    if (joined) continue;
    for (auto& sep : pending) r.separations.push_back(std::move(sep));
    CrpClass cls{c, {c}, {}, {}, false};
    r.classes.push_back(std::move(cls));
  }

  auto finish = [&](CrpClass& cls) {
    const CrossedProduct e = build_A_a(H4CocycleParam{A, cls.representative});
    cls.product_verified = verify_hopf(*e.product).ok();
    try {
      cls.automorphisms = aut_group_A_a(A, cls.representative, model);
    } catch (const Error& e) {
      if (e.code() != Errc::PreconditionViolated && e.code() != Errc::UnknownModel) throw;
      cls.automorphisms.condition = e.what();
    }
  };
  if (jobs > 1) {
    std::vector<std::future<void>> work;
    for (auto& cls : r.classes) work.push_back(std::async(std::launch::async, [&] { finish(cls); }));
    for (auto& w : work) w.get();
  } else {
    for (auto& cls : r.classes) finish(cls);
  }
  if (!primitively_generated(*A))
    r.notes.push_back("A is not generated by primitives; classes are separated only when a candidate equals a representative");
  return r;
}

}  // namespace hopf

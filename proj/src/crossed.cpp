#include "hopf/crossed.hpp"

#include <memory>

namespace hopf {

Vec CrossedSystem::act(const Vec& h, const Vec& a) const {
  Vec out = A->zero();
  for (std::size_t i = 0; i < H->dim; ++i) {
    if (h[i].is_zero()) continue;
    for (std::size_t j = 0; j < A->dim; ++j)
      if (!a[j].is_zero()) axpy(out, h[i] * a[j], act_basis(i, j));
  }
  return out;
}

Vec CrossedSystem::f(const Vec& h, const Vec& g) const {
  Vec out = A->zero();
  for (std::size_t i = 0; i < H->dim; ++i) {
    if (h[i].is_zero()) continue;
    for (std::size_t j = 0; j < H->dim; ++j)
      if (!g[j].is_zero()) axpy(out, h[i] * g[j], f_basis(i, j));
  }
  return out;
}

void CrossedSystem::validate_shape() const {
  if (!A || !H) throw Error(Errc::MalformedData, "crossed system needs both algebras");
  if (A->field != H->field) throw Error(Errc::MalformedData, "crossed system factors over different fields");
  if (action.size() != H->dim * A->dim) throw Error(Errc::MalformedData, "action table must have dimH*dimA entries");
  if (cocycle.size() != H->dim * H->dim) throw Error(Errc::MalformedData, "cocycle table must have dimH^2 entries");
  for (const auto* table : {&action, &cocycle})
    for (const auto& v : *table) {
      if (v.size() != A->dim) throw Error(Errc::MalformedData, "crossed system value has wrong length");
      for (const auto& s : v)
        if (!A->field.contains(s)) throw Error(Errc::MalformedData, "crossed system coefficient outside field");
    }
}

std::vector<Vec> trivial_action(const HopfAlgebra& a, const HopfAlgebra& h) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) out.push_back(scale(h.counit[i], a.e(j)));
  return out;
}

std::vector<Vec> trivial_cocycle(const HopfAlgebra& a, const HopfAlgebra& h) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t j = 0; j < h.dim; ++j) out.push_back(scale(h.counit[i] * h.counit[j], a.unit));
  return out;
}

CrossedSystem trivial_system(const AlgebraPtr& a, const AlgebraPtr& h) {
  return CrossedSystem{a, h, trivial_action(*a, *h), trivial_cocycle(*a, *h)};
}

bool operator==(const CrossedSystem& x, const CrossedSystem& y) {
  return x.A->dim == y.A->dim && x.H->dim == y.H->dim && x.action == y.action && x.cocycle == y.cocycle;
}

// ---------------------------------------------------------------------------

namespace {

using Terms = std::vector<std::vector<SweedlerTerm>>;

Terms all_sweedler(const HopfAlgebra& a, std::size_t n) {
  Terms out;
  for (std::size_t i = 0; i < a.dim; ++i) out.push_back(sweedler_basis(a, i, n));
  return out;
}

CheckResult ok(const char* name) { return CheckResult{name, true, {}, {}}; }
CheckResult bad(const char* name, std::vector<std::size_t> w) { return CheckResult{name, false, std::move(w), {}}; }

struct Checker {
  const CrossedSystem& s;
  const HopfAlgebra& A;
  const HopfAlgebra& H;
  Terms h2, a2;

  explicit Checker(const CrossedSystem& sys)
      : s(sys), A(*sys.A), H(*sys.H), h2(all_sweedler(*sys.H, 2)), a2(all_sweedler(*sys.A, 2)) {}

  CheckResult action_unit() const {
    for (std::size_t h = 0; h < H.dim; ++h)
      if (s.act(H.e(h), A.unit) != scale(H.counit[h], A.unit)) return bad("action_unit", {h});
    for (std::size_t a = 0; a < A.dim; ++a)
      if (s.act(H.unit, A.e(a)) != A.e(a)) return bad("action_unit", {0, a});
    return ok("action_unit");
  }

  CheckResult action_multiplicative() const {
    for (std::size_t h = 0; h < H.dim; ++h)
      for (std::size_t a = 0; a < A.dim; ++a)
        for (std::size_t b = 0; b < A.dim; ++b) {
          Vec lhs = s.act(H.e(h), A.product(a, b));
          Vec rhs = A.zero();
          for (const auto& t : h2[h]) axpy(rhs, t.coeff, A.multiply(s.act_basis(t.idx[0], a), s.act_basis(t.idx[1], b)));
          if (lhs != rhs) return bad("action_multiplicative", {h, a, b});
        }
    return ok("action_multiplicative");
  }

  CheckResult action_coalgebra() const {
    for (std::size_t h = 0; h < H.dim; ++h)
      for (std::size_t a = 0; a < A.dim; ++a) {
        const Vec& v = s.act_basis(h, a);
        if (A.apply_counit(v) != H.counit[h] * A.counit[a]) return bad("action_coalgebra", {h, a});
        Vec rhs = zeros(A.field, A.dim * A.dim);
        for (const auto& t : h2[h])
          for (const auto& u : a2[a])
            axpy(rhs, t.coeff * u.coeff, tensor(s.act_basis(t.idx[0], u.idx[0]), s.act_basis(t.idx[1], u.idx[1])));
        if (A.coproduct(v) != rhs) return bad("action_coalgebra", {h, a});
      }
    return ok("action_coalgebra");
  }

  CheckResult cocycle_coalgebra() const {
    for (std::size_t h = 0; h < H.dim; ++h)
      for (std::size_t g = 0; g < H.dim; ++g) {
        const Vec& v = s.f_basis(h, g);
        if (A.apply_counit(v) != H.counit[h] * H.counit[g]) return bad("cocycle_coalgebra", {h, g});
        Vec rhs = zeros(A.field, A.dim * A.dim);
        for (const auto& t : h2[h])
          for (const auto& u : h2[g])
            axpy(rhs, t.coeff * u.coeff, tensor(s.f_basis(t.idx[0], u.idx[0]), s.f_basis(t.idx[1], u.idx[1])));
        if (A.coproduct(v) != rhs) return bad("cocycle_coalgebra", {h, g});
      }
    return ok("cocycle_coalgebra");
  }

  CheckResult cocycle_normalized() const {
    for (std::size_t h = 0; h < H.dim; ++h) {
      Vec expected = scale(H.counit[h], A.unit);
      if (s.f(H.e(h), H.unit) != expected || s.f(H.unit, H.e(h)) != expected) return bad("cocycle_normalized", {h});
    }
    return ok("cocycle_normalized");
  }

  // [g1 |> (h1 |> a)] f(g2, h2) = f(g1, h1) ((g2 h2) |> a)
  CheckResult twisted_module() const {
    for (std::size_t g = 0; g < H.dim; ++g)
      for (std::size_t h = 0; h < H.dim; ++h)
        for (std::size_t a = 0; a < A.dim; ++a) {
          Vec lhs = A.zero(), rhs = A.zero();
          for (const auto& t : h2[g])
            for (const auto& u : h2[h]) {
              const Scalar c = t.coeff * u.coeff;
              axpy(lhs, c, A.multiply(s.act(H.e(t.idx[0]), s.act_basis(u.idx[0], a)), s.f_basis(t.idx[1], u.idx[1])));
              axpy(rhs, c, A.multiply(s.f_basis(t.idx[0], u.idx[0]), s.act(H.product(t.idx[1], u.idx[1]), A.e(a))));
            }
          if (lhs != rhs) return bad("twisted_module", {g, h, a});
        }
    return ok("twisted_module");
  }

  // (g1 |> f(h1, l1)) f(g2, h2 l2) = f(g1, h1) f(g2 h2, l)
  CheckResult cocycle_condition() const {
    for (std::size_t g = 0; g < H.dim; ++g)
      for (std::size_t h = 0; h < H.dim; ++h)
        for (std::size_t l = 0; l < H.dim; ++l) {
          Vec lhs = A.zero(), rhs = A.zero();
          for (const auto& t : h2[g])
            for (const auto& u : h2[h]) {
              for (const auto& w : h2[l])
                axpy(lhs, t.coeff * u.coeff * w.coeff,
                     A.multiply(s.act(H.e(t.idx[0]), s.f_basis(u.idx[0], w.idx[0])),
                                s.f(H.e(t.idx[1]), H.product(u.idx[1], w.idx[1]))));
              axpy(rhs, t.coeff * u.coeff,
                   A.multiply(s.f_basis(t.idx[0], u.idx[0]), s.f(H.product(t.idx[1], u.idx[1]), H.e(l))));
            }
          if (lhs != rhs) return bad("cocycle_condition", {g, h, l});
        }
    return ok("cocycle_condition");
  }

  // g1 (x) (g2 |> a) = g2 (x) (g1 |> a) in H (x) A
  CheckResult action_symmetry() const {
    for (std::size_t g = 0; g < H.dim; ++g)
      for (std::size_t a = 0; a < A.dim; ++a) {
        Vec lhs = zeros(A.field, H.dim * A.dim), rhs = lhs;
        for (const auto& t : h2[g]) {
          axpy(lhs, t.coeff, tensor(H.e(t.idx[0]), s.act_basis(t.idx[1], a)));
          axpy(rhs, t.coeff, tensor(H.e(t.idx[1]), s.act_basis(t.idx[0], a)));
        }
        if (lhs != rhs) return bad("action_symmetry", {g, a});
      }
    return ok("action_symmetry");
  }

  // g1 h1 (x) f(g2, h2) = g2 h2 (x) f(g1, h1) in H (x) A
  CheckResult cocycle_symmetry() const {
    for (std::size_t g = 0; g < H.dim; ++g)
      for (std::size_t h = 0; h < H.dim; ++h) {
        Vec lhs = zeros(A.field, H.dim * A.dim), rhs = lhs;
        for (const auto& t : h2[g])
          for (const auto& u : h2[h]) {
            const Scalar c = t.coeff * u.coeff;
            axpy(lhs, c, tensor(H.product(t.idx[0], u.idx[0]), s.f_basis(t.idx[1], u.idx[1])));
            axpy(rhs, c, tensor(H.product(t.idx[1], u.idx[1]), s.f_basis(t.idx[0], u.idx[0])));
          }
        if (lhs != rhs) return bad("cocycle_symmetry", {g, h});
      }
    return ok("cocycle_symmetry");
  }
};

std::optional<std::size_t> unit_index(const HopfAlgebra& h) {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < h.dim; ++i) {
    if (h.unit[i].is_zero()) continue;
    if (!h.unit[i].is_one() || found) return std::nullopt;
    found = i;
  }
  return found;
}

}  // namespace

VerificationReport check_crossed_system(const CrossedSystem& sys, unsigned jobs) {
  sys.validate_shape();
  auto c = std::make_shared<Checker>(sys);
  return run_checks({[c] { return c->action_unit(); }, [c] { return c->action_multiplicative(); },
                     [c] { return c->action_coalgebra(); }, [c] { return c->cocycle_coalgebra(); },
                     [c] { return c->cocycle_normalized(); }, [c] { return c->twisted_module(); },
                     [c] { return c->cocycle_condition(); }, [c] { return c->action_symmetry(); },
                     [c] { return c->cocycle_symmetry(); }},
                    jobs);
}

// ---------------------------------------------------------------------------

CrossedProduct build_crossed_product(const CrossedSystem& sys, bool force, unsigned jobs) {
  sys.validate_shape();
  if (!force) {
    auto rep = check_crossed_system(sys, jobs);
    if (!rep.ok()) throw Error(Errc::InvalidSystem, "crossed system fails:\n" + rep.summary());
  }
  const HopfAlgebra& A = *sys.A;
  const HopfAlgebra& H = *sys.H;
  const std::size_t na = A.dim, nh = H.dim, n = na * nh;
  auto e = std::make_shared<HopfAlgebra>(A.name + "#" + H.name, A.field, n);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t h = 0; h < nh; ++h) e->basis[a * nh + h] = A.basis[a] + "#" + H.basis[h];

  // T[h][c][g] = sum (h1 |> c) f(h2, g1) (x) h3 g2, so (a#h)(c#g) = (a (x) 1) T.
  Terms h3 = all_sweedler(H, 3), h2 = all_sweedler(H, 2);
  for (std::size_t h = 0; h < nh; ++h)
    for (std::size_t c = 0; c < na; ++c)
      for (std::size_t g = 0; g < nh; ++g) {
        Vec t = zeros(A.field, n);
        for (const auto& x : h3[h])
          for (const auto& y : h2[g]) {
            Vec left = A.multiply(sys.act_basis(x.idx[0], c), sys.f_basis(x.idx[1], y.idx[0]));
            axpy(t, x.coeff * y.coeff, tensor(left, H.product(x.idx[2], y.idx[1])));
          }
        for (std::size_t a = 0; a < na; ++a) {
          Vec prod = zeros(A.field, n);
          for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < nh; ++j) {
              const Scalar& coeff = t[i * nh + j];
              if (coeff.is_zero()) continue;
              const Vec& ai = A.product(a, i);
              for (std::size_t k = 0; k < na; ++k)
                if (!ai[k].is_zero()) prod[k * nh + j] += coeff * ai[k];
            }
          e->mult[(a * nh + h) * n + (c * nh + g)] = std::move(prod);
        }
      }
  e->unit = tensor(A.unit, H.unit);
  e->counit = tensor(A.counit, H.counit);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t h = 0; h < nh; ++h)
      for (const auto& s : A.comult[a])
        for (const auto& t : H.comult[h])
          e->comult[a * nh + h].push_back(
              CoproductTerm{s.left * nh + t.left, s.right * nh + t.right, s.coeff * t.coeff});

  // S(a#g) = (S_A[f(S_H(g2), g3)] # S_H(g1)) (S_A(a) # 1)
  for (std::size_t g = 0; g < nh; ++g) {
    Vec left = zeros(A.field, n);
    for (const auto& x : h3[g]) {
      Vec fa = A.apply_antipode(sys.f(H.apply_antipode(H.e(x.idx[1])), H.e(x.idx[2])));
      axpy(left, x.coeff, tensor(fa, H.apply_antipode(H.e(x.idx[0]))));
    }
    for (std::size_t a = 0; a < na; ++a)
      e->antipode.set_column(a * nh + g, e->multiply(left, tensor(A.apply_antipode(A.e(a)), H.unit)));
  }

  const auto ua = unit_index(A), uh = unit_index(H);
  if (A.presentation && H.presentation && ua && uh) {
    Presentation p;
    const std::size_t shift = A.presentation->generators.size();
    for (auto g : A.presentation->generators) {
      g.basis_index = g.basis_index * nh + *uh;
      p.generators.push_back(g);
    }
    for (auto g : H.presentation->generators) {
      g.basis_index = *ua * nh + g.basis_index;
      if (g.right_group_like) *g.right_group_like += shift;
      if (g.left_group_like) *g.left_group_like += shift;
      p.generators.push_back(g);
    }
    p.words.resize(n);
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t h = 0; h < nh; ++h) {
        auto w = A.presentation->words[a];
        for (std::size_t k : H.presentation->words[h]) w.push_back(k + shift);
        p.words[a * nh + h] = std::move(w);
      }
    e->presentation = std::move(p);
  }
  if (A.known_group_likes && H.known_group_likes) {
    std::vector<Vec> gl;
    for (const auto& x : *A.known_group_likes)
      for (const auto& y : *H.known_group_likes) gl.push_back(tensor(x, y));
    e->known_group_likes = std::move(gl);
  }

  AlgebraPtr ep = e;
  Matrix ia(A.field, n, na), ih(A.field, n, nh), pi(A.field, nh, n);
  for (std::size_t a = 0; a < na; ++a) ia.set_column(a, tensor(A.e(a), H.unit));
  for (std::size_t h = 0; h < nh; ++h) ih.set_column(h, tensor(A.unit, H.e(h)));
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t h = 0; h < nh; ++h) pi(h, a * nh + h) = A.counit[a];
  return CrossedProduct{ep, sys, LinearMap(sys.A, ep, std::move(ia)), LinearMap(sys.H, ep, std::move(ih)),
                        LinearMap(ep, sys.H, std::move(pi))};
}

// ---------------------------------------------------------------------------

ElementSubspace coinvariants(const HopfAlgebra& e, const LinearMap& pi) {
  if (pi.source->dim != e.dim) throw Error(Errc::ShapeMismatch, "projection source is not E");
  if (!is_hopf_map(pi)) throw Error(Errc::NotHopfMap, "coinvariants need a Hopf map E -> H");
  const HopfAlgebra& h = *pi.target;
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < e.dim; ++i) {
    Vec c = zeros(e.field, e.dim * h.dim);
    for (const auto& t : e.comult[i]) axpy(c, t.coeff, tensor(e.e(t.left), pi.image(t.right)));
    cols.push_back(sub(c, tensor(e.e(i), h.unit)));
  }
  return ElementSubspace{e.name, SubspaceKind::Coinvariants,
                         kernel_basis(Matrix::from_columns(e.field, e.dim * h.dim, cols))};
}

HopfAlgebra induced_subalgebra(const HopfAlgebra& e, const std::vector<Vec>& basis, const std::string& name) {
  const std::size_t n = basis.size();
  const FieldSpec& field = e.field;
  auto coords = [&](const Vec& v, const char* what) {
    auto c = coordinates_in(basis, v, field);
    if (!c) throw Error(Errc::PreconditionViolated, std::string("subspace is not closed under ") + what);
    return *c;
  };
  HopfAlgebra a(name, field, n);
  for (std::size_t i = 0; i < n; ++i) {
    // Reuse E's label when the basis vector is a plain basis element.
    std::optional<std::size_t> single;
    bool plain = true;
    for (std::size_t k = 0; k < e.dim && plain; ++k) {
      if (basis[i][k].is_zero()) continue;
      if (single || !basis[i][k].is_one()) plain = false;
      single = k;
    }
    a.basis[i] = plain && single ? e.basis[*single] : "b" + std::to_string(i);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.mult[i * n + j] = coords(e.multiply(basis[i], basis[j]), "multiplication");
  a.unit = coords(e.unit, "the unit");
  for (std::size_t i = 0; i < n; ++i) a.counit[i] = e.apply_counit(basis[i]);
  std::vector<Vec> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pairs.push_back(tensor(basis[i], basis[j]));
  for (std::size_t i = 0; i < n; ++i) {
    auto c = coordinates_in(pairs, e.coproduct(basis[i]), field);
    if (!c) throw Error(Errc::PreconditionViolated, "subspace is not a subcoalgebra");
    for (std::size_t k = 0; k < n * n; ++k)
      if (!(*c)[k].is_zero()) a.comult[i].push_back(CoproductTerm{k / n, k % n, (*c)[k]});
    a.antipode.set_column(i, coords(e.apply_antipode(basis[i]), "the antipode"));
  }
  return a;
}

// ---------------------------------------------------------------------------

Extraction extract_from_splitting(const AlgebraPtr& ep, const LinearMap& pi, const LinearMap& phi_in,
                                  const std::optional<std::vector<Vec>>& a_basis) {
  const HopfAlgebra& E = *ep;
  const AlgebraPtr& hp = pi.target;
  const HopfAlgebra& H = *hp;
  if (phi_in.source->dim != H.dim || phi_in.target->dim != E.dim)
    throw Error(Errc::ShapeMismatch, "section must map H -> E");
  if (compose(pi, phi_in).matrix != Matrix::identity(E.field, H.dim))
    throw Error(Errc::NotASection, "pi o phi is not the identity of H");
  if (!is_coalgebra_map(phi_in)) throw Error(Errc::NotCoalgebraMap, "section is not a coalgebra map");

  // Normalize so that phi(1) = 1; phi(1) is group-like, with inverse S(phi(1)).
  Matrix phi_m = phi_in.matrix;
  const Vec phi1 = phi_in.apply(H.unit);
  if (phi1 != E.unit) {
    const Vec inv = E.apply_antipode(phi1);
    for (std::size_t h = 0; h < H.dim; ++h) phi_m.set_column(h, E.multiply(inv, phi_in.image(h)));
  }
  const LinearMap phi(hp, ep, phi_m);
  const Matrix phi_inv = E.antipode * phi_m;  // S_E o phi

  std::vector<Vec> emb = a_basis ? *a_basis : coinvariants(E, pi).basis;
  auto A = std::make_shared<const HopfAlgebra>(induced_subalgebra(E, emb, "coinvariants(" + E.name + ")"));
  const std::size_t na = A->dim, nh = H.dim;
  auto to_a = [&](const Vec& v) {
    auto c = coordinates_in(emb, v, E.field);
    if (!c) throw Error(Errc::PreconditionViolated, "extracted value leaves the coinvariants");
    return *c;
  };

  Terms h2 = all_sweedler(H, 2);
  CrossedSystem sys{A, hp, {}, {}};
  // h |> a = phi(h1) a phi^-1(h2)
  for (std::size_t h = 0; h < nh; ++h)
    for (std::size_t a = 0; a < na; ++a) {
      Vec v = E.zero();
      for (const auto& t : h2[h])
        axpy(v, t.coeff, E.multiply(E.multiply(phi.image(t.idx[0]), emb[a]), phi_inv.column(t.idx[1])));
      sys.action.push_back(to_a(v));
    }
  // f(g, h) = phi(g1) phi(h1) phi^-1(g2 h2)
  for (std::size_t g = 0; g < nh; ++g)
    for (std::size_t h = 0; h < nh; ++h) {
      Vec v = E.zero();
      for (const auto& t : h2[g])
        for (const auto& u : h2[h])
          axpy(v, t.coeff * u.coeff,
               E.multiply(E.multiply(phi.image(t.idx[0]), phi.image(u.idx[0])),
                          phi_inv * H.product(t.idx[1], u.idx[1])));
      sys.cocycle.push_back(to_a(v));
    }

  CrossedProduct prod = build_crossed_product(sys);
  // psi(a#h) = a phi(h)
  Matrix psi(E.field, E.dim, na * nh);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t h = 0; h < nh; ++h) psi.set_column(a * nh + h, E.multiply(emb[a], phi.image(h)));
  LinearMap iso(prod.product, ep, std::move(psi));
  return Extraction{A, std::move(emb), std::move(sys), std::move(prod), std::move(iso)};
}

// ---------------------------------------------------------------------------

CohomologousResult cohomologous_transform(const CrossedSystem& sys, const LinearMap& r) {
  sys.validate_shape();
  const HopfAlgebra& A = *sys.A;
  const HopfAlgebra& H = *sys.H;
  if (r.source->dim != H.dim || r.target->dim != A.dim) throw Error(Errc::ShapeMismatch, "r must map H -> A");
  if (!is_cocentral(r)) throw Error(Errc::NotCocentral, "r fails r(h1) (x) h2 = r(h2) (x) h1");
  auto flags = check_map_properties(r);
  if (!flags.unitary || !flags.coalgebra) throw Error(Errc::NotCocentral, "r must be a unitary coalgebra map");

  const Matrix sr = A.antipode * r.matrix;  // S_A o r
  Terms h2 = all_sweedler(H, 2), h3 = all_sweedler(H, 3), h4 = all_sweedler(H, 4);
  CrossedSystem out{sys.A, sys.H, {}, {}};
  // h |>' a = r(h1) (h2 |> a) (S r)(h3)
  for (std::size_t h = 0; h < H.dim; ++h)
    for (std::size_t a = 0; a < A.dim; ++a) {
      Vec v = A.zero();
      for (const auto& t : h3[h])
        axpy(v, t.coeff, A.multiply(A.multiply(r.image(t.idx[0]), sys.act_basis(t.idx[1], a)), sr.column(t.idx[2])));
      out.action.push_back(std::move(v));
    }
  // f'(h, g) = r(h1) (h2 |> r(g1)) f(h3, g2) (S r)(h4 g3)
  for (std::size_t h = 0; h < H.dim; ++h)
    for (std::size_t g = 0; g < H.dim; ++g) {
      Vec v = A.zero();
      for (const auto& t : h4[h])
        for (const auto& u : h3[g]) {
          Vec x = A.multiply(r.image(t.idx[0]), sys.act(H.e(t.idx[1]), r.image(u.idx[0])));
          x = A.multiply(x, sys.f_basis(t.idx[2], u.idx[1]));
          x = A.multiply(x, sr * H.product(t.idx[3], u.idx[2]));
          axpy(v, t.coeff * u.coeff, x);
        }
      out.cocycle.push_back(std::move(v));
    }

  CrossedProduct src = build_crossed_product(out);
  CrossedProduct dst = build_crossed_product(sys);
  const std::size_t nh = H.dim, n = A.dim * nh;
  // psi(a#h) = a r(h1) # h2
  Matrix psi(A.field, n, n);
  for (std::size_t a = 0; a < A.dim; ++a)
    for (std::size_t h = 0; h < nh; ++h) {
      Vec v = zeros(A.field, n);
      for (const auto& t : h2[h]) axpy(v, t.coeff, tensor(A.multiply(A.e(a), r.image(t.idx[0])), H.e(t.idx[1])));
      psi.set_column(a * nh + h, v);
    }
  LinearMap iso(src.product, dst.product, std::move(psi));
  return CohomologousResult{std::move(out), std::move(src), std::move(dst), std::move(iso)};
}

ImplicationReport hopf_structure_implies_axioms(const AlgebraPtr& a, const AlgebraPtr& h, std::vector<Vec> action,
                                                std::vector<Vec> cocycle) {
  CrossedSystem sys{a, h, std::move(action), std::move(cocycle)};
  ImplicationReport rep;
  rep.hopf = verify_hopf(*build_crossed_product(sys, true).product);
  rep.axioms = check_crossed_system(sys);
  rep.implication_holds = !rep.hopf.ok() || rep.axioms.ok();
  return rep;
}

}  // namespace hopf

#include "hopf/morphism.hpp"

#include <memory>

namespace hopf {

namespace {

using Terms = std::vector<std::vector<SweedlerTerm>>;

Terms all_sweedler(const HopfAlgebra& a, std::size_t n) {
  Terms out;
  for (std::size_t i = 0; i < a.dim; ++i) out.push_back(sweedler_basis(a, i, n));
  return out;
}

CheckResult flag(const char* name, bool ok) { return CheckResult{name, ok, {}, {}}; }

void require_shape(const LinearMap& m, std::size_t src, std::size_t tgt, const char* name) {
  if (m.source->dim != src || m.target->dim != tgt)
    throw Error(Errc::ShapeMismatch, std::string("map ") + name + " has the wrong shape");
}

// Embeds a (x) h as an element of the product with basis index a * dimH + h.
Vec pair(const Vec& a, const Vec& h) { return tensor(a, h); }

}  // namespace

// ---------------------------------------------------------------------------

QuadrupleResult quadruple_to_map(const LinearMap& u, const LinearMap& p, const LinearMap& r, const LinearMap& v,
                                 const CrossedProduct& src, const CrossedProduct& dst) {
  const CrossedSystem& s = src.system;
  const CrossedSystem& t = dst.system;
  const HopfAlgebra& A = *s.A;
  const HopfAlgebra& H = *s.H;
  const HopfAlgebra& A2 = *t.A;
  const HopfAlgebra& H2 = *t.H;
  require_shape(u, A.dim, A2.dim, "u");
  require_shape(p, A.dim, H2.dim, "p");
  require_shape(r, H.dim, A2.dim, "r");
  require_shape(v, H.dim, H2.dim, "v");

  QuadrupleResult res{LinearMap(src.product, dst.product, Matrix(A.field, dst.product->dim, src.product->dim)), {}, false,
                      false, false};
  auto pu = check_map_properties(u), pp = check_map_properties(p), pr = check_map_properties(r),
       pv = check_map_properties(v);
  res.report.add(flag("p_hopf", pp.hopf));
  res.report.add(flag("u_unitary_coalgebra", pu.unitary && pu.coalgebra));
  res.report.add(flag("r_unitary_coalgebra", pr.unitary && pr.coalgebra));
  res.in_domain = res.report.ok();
  res.report.add(flag("v_unitary_coalgebra", pv.unitary && pv.coalgebra));
  res.in_domain = res.report.ok();

  Terms a2 = all_sweedler(A, 2), a3 = all_sweedler(A, 3), a4 = all_sweedler(A, 4);
  Terms h2 = all_sweedler(H, 2), h3 = all_sweedler(H, 3), h5 = all_sweedler(H, 5);
  auto U = [&](const Vec& x) { return u.apply(x); };
  auto P = [&](const Vec& x) { return p.apply(x); };
  auto mulA = [&](const Vec& x, const Vec& y) { return A2.multiply(x, y); };

  // CP1
  {
    CheckResult c{"CP1", true, {}, {}};
    for (std::size_t a = 0; a < A.dim && c.passed; ++a) {
      Vec d = zeros(A.field, A2.dim * H2.dim);
      for (const auto& x : a2[a]) {
        axpy(d, x.coeff, tensor(u.image(x.idx[0]), p.image(x.idx[1])));
        axpy(d, -x.coeff, tensor(u.image(x.idx[1]), p.image(x.idx[0])));
      }
      if (!is_zero(d)) c = CheckResult{"CP1", false, {a}, {}};
    }
    res.report.add(c);
  }
  // CP2
  {
    CheckResult c{"CP2", true, {}, {}};
    for (std::size_t h = 0; h < H.dim && c.passed; ++h) {
      Vec d = zeros(A.field, A2.dim * H2.dim);
      for (const auto& x : h2[h]) {
        axpy(d, x.coeff, tensor(r.image(x.idx[0]), v.image(x.idx[1])));
        axpy(d, -x.coeff, tensor(r.image(x.idx[1]), v.image(x.idx[0])));
      }
      if (!is_zero(d)) c = CheckResult{"CP2", false, {h}, {}};
    }
    res.report.add(c);
  }
  // CP3: u(ab) = u(a1) (p(a2) |>' u(b1)) f'(p(a3), p(b2))
  {
    CheckResult c{"CP3", true, {}, {}};
    for (std::size_t a = 0; a < A.dim && c.passed; ++a)
      for (std::size_t b = 0; b < A.dim && c.passed; ++b) {
        Vec rhs = A2.zero();
        for (const auto& x : a3[a])
          for (const auto& y : a2[b])
            axpy(rhs, x.coeff * y.coeff,
                 mulA(mulA(u.image(x.idx[0]), t.act(p.image(x.idx[1]), u.image(y.idx[0]))),
                      t.f(p.image(x.idx[2]), p.image(y.idx[1]))));
        if (U(A.product(a, b)) != rhs) c = CheckResult{"CP3", false, {a, b}, {}};
      }
    res.report.add(c);
  }
  // CP4: v(h) v(g) = p(f(h1, g1)) v(h2 g2)
  {
    CheckResult c{"CP4", true, {}, {}};
    for (std::size_t h = 0; h < H.dim && c.passed; ++h)
      for (std::size_t g = 0; g < H.dim && c.passed; ++g) {
        Vec rhs = H2.zero();
        for (const auto& x : h2[h])
          for (const auto& y : h2[g])
            axpy(rhs, x.coeff * y.coeff,
                 H2.multiply(P(s.f_basis(x.idx[0], y.idx[0])), v.apply(H.product(x.idx[1], y.idx[1]))));
        if (H2.multiply(v.image(h), v.image(g)) != rhs) c = CheckResult{"CP4", false, {h, g}, {}};
      }
    res.report.add(c);
  }
  // CP5: v(h) p(a) = p(h1 |> a) v(h2)
  {
    CheckResult c{"CP5", true, {}, {}};
    for (std::size_t h = 0; h < H.dim && c.passed; ++h)
      for (std::size_t a = 0; a < A.dim && c.passed; ++a) {
        Vec rhs = H2.zero();
        for (const auto& x : h2[h]) axpy(rhs, x.coeff, H2.multiply(P(s.act_basis(x.idx[0], a)), v.image(x.idx[1])));
        if (H2.multiply(v.image(h), p.image(a)) != rhs) c = CheckResult{"CP5", false, {h, a}, {}};
      }
    res.report.add(c);
  }
  // CP6
  {
    CheckResult c{"CP6", true, {}, {}};
    for (std::size_t h = 0; h < H.dim && c.passed; ++h)
      for (std::size_t g = 0; g < H.dim && c.passed; ++g) {
        Vec lhs = A2.zero(), rhs = A2.zero();
        for (const auto& x : h3[h])
          for (const auto& y : h2[g])
            axpy(lhs, x.coeff * y.coeff,
                 mulA(mulA(r.image(x.idx[0]), t.act(v.image(x.idx[1]), r.image(y.idx[0]))),
                      t.f(v.image(x.idx[2]), v.image(y.idx[1]))));
        for (const auto& x : h5[h])
          for (const auto& y : h5[g]) {
            const auto& i = x.idx;
            const auto& j = y.idx;
            Vec term = U(s.f_basis(i[0], j[0]));
            term = mulA(term, t.act(P(s.f_basis(i[1], j[1])), r.apply(H.product(i[3], j[3]))));
            term = mulA(term, t.f(P(s.f_basis(i[2], j[2])), v.apply(H.product(i[4], j[4]))));
            axpy(rhs, x.coeff * y.coeff, term);
          }
        if (lhs != rhs) c = CheckResult{"CP6", false, {h, g}, {}};
      }
    res.report.add(c);
  }
  // CP7
  {
    CheckResult c{"CP7", true, {}, {}};
    for (std::size_t h = 0; h < H.dim && c.passed; ++h)
      for (std::size_t a = 0; a < A.dim && c.passed; ++a) {
        Vec lhs = A2.zero(), rhs = A2.zero();
        for (const auto& x : h3[h])
          for (const auto& y : a2[a])
            axpy(lhs, x.coeff * y.coeff,
                 mulA(mulA(r.image(x.idx[0]), t.act(v.image(x.idx[1]), u.image(y.idx[0]))),
                      t.f(v.image(x.idx[2]), p.image(y.idx[1]))));
        for (const auto& x : h5[h])
          for (const auto& y : a3[a]) {
            const auto& i = x.idx;
            const auto& j = y.idx;
            Vec term = U(s.act_basis(i[0], j[0]));
            term = mulA(term, t.act(P(s.act_basis(i[1], j[1])), r.image(i[3])));
            term = mulA(term, t.f(P(s.act_basis(i[2], j[2])), v.image(i[4])));
            axpy(rhs, x.coeff * y.coeff, term);
          }
        if (lhs != rhs) c = CheckResult{"CP7", false, {h, a}, {}};
      }
    res.report.add(c);
  }

  // psi(a#h) = u(a1) (p(a2) |>' r(h1)) f'(p(a3), v(h2)) #' p(a4) v(h3)
  for (std::size_t a = 0; a < A.dim; ++a)
    for (std::size_t h = 0; h < H.dim; ++h) {
      Vec col = zeros(A.field, dst.product->dim);
      for (const auto& x : a4[a])
        for (const auto& y : h3[h]) {
          Vec left = mulA(mulA(u.image(x.idx[0]), t.act(p.image(x.idx[1]), r.image(y.idx[0]))),
                          t.f(p.image(x.idx[2]), v.image(y.idx[1])));
          if (is_zero(left)) continue;
          axpy(col, x.coeff * y.coeff, pair(left, H2.multiply(p.image(x.idx[3]), v.image(y.idx[2]))));
        }
      res.psi.matrix.set_column(a * H.dim + h, col);
    }
  res.hopf = is_hopf_map(res.psi);
  res.agrees = !res.in_domain || res.report.ok() == res.hopf;
  return res;
}

// ---------------------------------------------------------------------------

TripleResult triple_to_map(const LinearMap& u, const LinearMap& r, const LinearMap& v, const CrossedProduct& src,
                           const CrossedProduct& dst) {
  const CrossedSystem& s = src.system;
  const CrossedSystem& t = dst.system;
  const HopfAlgebra& A = *s.A;
  const HopfAlgebra& H = *s.H;
  if (t.A->dim != A.dim || t.H->dim != H.dim) throw Error(Errc::ShapeMismatch, "triples need products over A and H");
  require_shape(u, A.dim, A.dim, "u");
  require_shape(r, H.dim, A.dim, "r");
  require_shape(v, H.dim, H.dim, "v");
  const HopfAlgebra& A2 = *t.A;
  const std::size_t n = src.product->dim;

  TripleResult res{LinearMap(src.product, dst.product, Matrix(A.field, n, n)), {}, false, false, false,
                   false, std::nullopt, false, {}};
  auto pu = check_map_properties(u), pr = check_map_properties(r), pv = check_map_properties(v);
  res.report.add(flag("u_hopf", pu.hopf));
  res.report.add(flag("v_hopf", pv.hopf));
  res.report.add(flag("r_unitary_coalgebra", pr.unitary && pr.coalgebra));
  res.in_domain = res.report.ok();
  if (!primitively_generated(A))
    res.warnings.push_back("HypothesisUnchecked: A is not generated by primitives, so trivial p is not certified");

  Terms h2 = all_sweedler(H, 2), h3 = all_sweedler(H, 3);
  // cc1t: r(h1) (x) v(h2) = r(h2) (x) v(h1)
  {
    CheckResult c{"cc1t", true, {}, {}};
    for (std::size_t h = 0; h < H.dim && c.passed; ++h) {
      Vec d = zeros(A.field, A.dim * H.dim);
      for (const auto& x : h2[h]) {
        axpy(d, x.coeff, tensor(r.image(x.idx[0]), v.image(x.idx[1])));
        axpy(d, -x.coeff, tensor(r.image(x.idx[1]), v.image(x.idx[0])));
      }
      if (!is_zero(d)) c = CheckResult{"cc1t", false, {h}, {}};
    }
    res.report.add(c);
  }
  // cc2t: r(h1) (v(h2) |>' r(g1)) f'(v(h3), v(g2)) = u(f(h1, g1)) r(h2 g2)
  {
    CheckResult c{"cc2t", true, {}, {}};
    for (std::size_t h = 0; h < H.dim && c.passed; ++h)
      for (std::size_t g = 0; g < H.dim && c.passed; ++g) {
        Vec lhs = A2.zero(), rhs = A2.zero();
        for (const auto& x : h3[h])
          for (const auto& y : h2[g])
            axpy(lhs, x.coeff * y.coeff,
                 A2.multiply(A2.multiply(r.image(x.idx[0]), t.act(v.image(x.idx[1]), r.image(y.idx[0]))),
                             t.f(v.image(x.idx[2]), v.image(y.idx[1]))));
        for (const auto& x : h2[h])
          for (const auto& y : h2[g])
            axpy(rhs, x.coeff * y.coeff,
                 A2.multiply(u.apply(s.f_basis(x.idx[0], y.idx[0])), r.apply(H.product(x.idx[1], y.idx[1]))));
        if (lhs != rhs) c = CheckResult{"cc2t", false, {h, g}, {}};
      }
    res.report.add(c);
  }
  // cc3t: r(h1) (v(h2) |>' u(a)) = u(h1 |> a) r(h2)
  {
    CheckResult c{"cc3t", true, {}, {}};
    for (std::size_t h = 0; h < H.dim && c.passed; ++h)
      for (std::size_t a = 0; a < A.dim && c.passed; ++a) {
        Vec lhs = A2.zero(), rhs = A2.zero();
        for (const auto& x : h2[h]) {
          axpy(lhs, x.coeff, A2.multiply(r.image(x.idx[0]), t.act(v.image(x.idx[1]), u.image(a))));
          axpy(rhs, x.coeff, A2.multiply(u.apply(s.act_basis(x.idx[0], a)), r.image(x.idx[1])));
        }
        if (lhs != rhs) c = CheckResult{"cc3t", false, {h, a}, {}};
      }
    res.report.add(c);
  }

  // psi(a#h) = u(a) r(h1) #' v(h2)
  for (std::size_t a = 0; a < A.dim; ++a)
    for (std::size_t h = 0; h < H.dim; ++h) {
      Vec col = zeros(A.field, n);
      for (const auto& x : h2[h])
        axpy(col, x.coeff, pair(A2.multiply(u.image(a), r.image(x.idx[0])), v.image(x.idx[1])));
      res.psi.matrix.set_column(a * H.dim + h, col);
    }
  res.hopf = is_hopf_map(res.psi);
  auto u_inv = invert(u.matrix);
  auto v_inv = invert(v.matrix);
  res.iso_by_factors = u_inv && v_inv;
  res.iso_by_matrix = invert(res.psi.matrix).has_value();

  if (res.iso_by_factors) {
    // phi(a#'h) = u^-1(a) (u^-1 S r v^-1)(h1) # v^-1(h2)
    const Matrix w = *u_inv * A2.antipode * r.matrix * *v_inv;
    Matrix phi(A.field, n, n);
    for (std::size_t a = 0; a < A.dim; ++a)
      for (std::size_t h = 0; h < H.dim; ++h) {
        Vec col = zeros(A.field, n);
        for (const auto& x : h2[h])
          axpy(col, x.coeff, pair(A.multiply(u_inv->column(a), w.column(x.idx[0])), v_inv->column(x.idx[1])));
        phi.set_column(a * H.dim + h, col);
      }
    LinearMap inv(dst.product, src.product, std::move(phi));
    res.inverse_verified = inv.matrix * res.psi.matrix == Matrix::identity(A.field, n) &&
                           res.psi.matrix * inv.matrix == Matrix::identity(A.field, n);
    res.inverse = std::move(inv);
  }
  return res;
}

// ---------------------------------------------------------------------------

Stabilization stabilization_check(const LinearMap& psi, const CrossedProduct& src, const CrossedProduct& dst) {
  if (psi.source->dim != src.product->dim || psi.target->dim != dst.product->dim)
    throw Error(Errc::ShapeMismatch, "psi does not map between the given products");
  if (!is_hopf_map(psi)) throw Error(Errc::NotHopfMap, "stabilization needs a Hopf map");
  const HopfAlgebra& E = *src.product;
  const HopfAlgebra& E2 = *dst.product;
  const HopfAlgebra& A = *src.system.A;
  Stabilization st;
  st.stabilizes_A = compose(psi, src.i_A).matrix == dst.i_A.matrix;
  st.costabilizes_H = compose(dst.pi_H, psi).matrix == src.pi_H.matrix;

  st.a_linear = true;
  for (std::size_t a = 0; a < A.dim && st.a_linear; ++a) {
    const Vec ea = src.i_A.image(a);
    const Vec ea2 = dst.i_A.image(a);
    for (std::size_t i = 0; i < E.dim; ++i)
      if (psi.apply(E.multiply(ea, E.e(i))) != E2.multiply(ea2, psi.image(i))) {
        st.a_linear = false;
        break;
      }
  }
  // rho(x) = x1 (x) pi(x2) in E (x) H.
  const std::size_t nh = src.system.H->dim;
  auto coaction = [&](const HopfAlgebra& e, const LinearMap& pi, const Vec& x) {
    Vec out = zeros(e.field, e.dim * nh);
    for (const auto& t : sweedler(e, x, 2)) axpy(out, t.coeff, tensor(e.e(t.idx[0]), pi.image(t.idx[1])));
    return out;
  };
  st.h_colinear = true;
  for (std::size_t i = 0; i < E.dim && st.h_colinear; ++i) {
    Vec lhs = coaction(E2, dst.pi_H, psi.image(i));
    Vec rho = coaction(E, src.pi_H, E.e(i));
    Vec rhs = zeros(E.field, E2.dim * nh);
    for (std::size_t j = 0; j < E.dim; ++j)
      for (std::size_t k = 0; k < nh; ++k)
        if (!rho[j * nh + k].is_zero()) axpy(rhs, rho[j * nh + k], tensor(psi.image(j), unit_vector(E.field, nh, k)));
    st.h_colinear = lhs == rhs;
  }
  return st;
}

// ---------------------------------------------------------------------------

namespace {

Vec evaluate_word(const HopfAlgebra& a, const std::vector<std::size_t>& word, const std::vector<Vec>& gens) {
  Vec out = a.unit;
  for (std::size_t k : word) out = a.multiply(out, gens[k]);
  return out;
}

std::vector<Vec> span_points(const std::vector<Vec>& basis, const HopfAlgebra& a, uint64_t budget) {
  std::vector<Vec> out;
  for_each_affine_point(a.zero(), basis, a.field, budget, [&](const Vec& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

}  // namespace

std::vector<Endomorphism> endo_search_by_generators(const AlgebraPtr& ap, uint64_t budget,
                                                    const std::vector<RelationCheck>& relations) {
  const HopfAlgebra& a = *ap;
  if (!a.field.is_finite()) throw Error(Errc::WrongField, "generator search needs a prime field");
  if (!a.presentation) throw Error(Errc::InvalidArgument, a.name + " has no generator presentation");
  const Presentation& pres = *a.presentation;
  const std::size_t ng = pres.generators.size();

  std::vector<Vec> gens;
  for (const auto& g : pres.generators) gens.push_back(a.e(g.basis_index));
  std::vector<Vec> words;
  for (const auto& w : pres.words) words.push_back(evaluate_word(a, w, gens));
  auto w_inv = invert(Matrix::from_columns(a.field, a.dim, words));
  if (!w_inv) throw Error(Errc::GeneratorsDontSpan, "evaluated words of " + a.name + " are not a basis");

  std::vector<Vec> group_likes;
  bool need_group_likes = false;
  for (const auto& g : pres.generators) need_group_likes |= g.kind == GeneratorKind::GroupLike;
  if (need_group_likes) {
    if (candidate_count(a.field.characteristic(), a.dim) <= budget)
      group_likes = group_likes_bruteforce(a, budget);
    else if (a.known_group_likes)
      group_likes = *a.known_group_likes;
    else
      group_likes = group_likes_bruteforce(a, budget);  // throws BudgetExceeded
  }
  const std::vector<Vec> primitive_points =
      [&] {
        for (const auto& g : pres.generators)
          if (g.kind == GeneratorKind::Primitive) return span_points(primitives(a).basis, a, budget);
        return std::vector<Vec>{};
      }();

  std::vector<Endomorphism> out;
  std::vector<Vec> images(ng);
  uint64_t visited = 0;
  // Depth-first over generators in presentation order; skew-primitive
  // candidates depend on the images already chosen for their group-likes.
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == ng) {
      if (++visited > budget) throw Error(Errc::BudgetExceeded, "generator search exceeded its budget");
      for (const auto& rel : relations)
        if (!rel(a, images)) return;
      std::vector<Vec> cols;
      for (const auto& w : pres.words) cols.push_back(evaluate_word(a, w, images));
      Matrix m = Matrix::from_columns(a.field, a.dim, cols) * *w_inv;
      LinearMap f(ap, ap, std::move(m));
      auto props = check_map_properties(f);
      if (!props.hopf) return;
      f.flags = props;
      bool autom = invert(f.matrix).has_value();
      out.push_back(Endomorphism{std::move(f), autom});
      return;
    }
    const Generator& g = pres.generators[k];
    std::vector<Vec> cands;
    switch (g.kind) {
      case GeneratorKind::GroupLike:
        cands = group_likes;
        break;
      case GeneratorKind::Primitive:
        cands = primitive_points;
        break;
      case GeneratorKind::SkewPrimitive: {
        Vec right = g.right_group_like ? images[*g.right_group_like] : a.unit;
        Vec left = g.left_group_like ? images[*g.left_group_like] : a.unit;
        cands = span_points(skew_primitives(a, right, left).basis, a, budget);
        break;
      }
    }
    for (const auto& c : cands) {
      images[k] = c;
      rec(k + 1);
    }
  };
  // Group-like generators referenced by skew-primitives must be chosen first.
  for (std::size_t k = 0; k < ng; ++k) {
    const auto& g = pres.generators[k];
    if ((g.right_group_like && *g.right_group_like >= k) || (g.left_group_like && *g.left_group_like >= k))
      throw Error(Errc::InvalidArgument, "skew-primitive generators must follow their group-likes");
  }
  rec(0);
  return out;
}

std::vector<LinearMap> hopf_automorphisms(const AlgebraPtr& a, uint64_t budget) {
  std::vector<LinearMap> out;
  for (auto& e : endo_search_by_generators(a, budget))
    if (e.automorphism) out.push_back(std::move(e.map));
  return out;
}

VerificationReport check_automorphism_group(const std::vector<LinearMap>& autos) {
  VerificationReport rep;
  auto index_of = [&](const Matrix& m) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < autos.size(); ++i)
      if (autos[i].matrix == m) return i;
    return std::nullopt;
  };
  if (autos.empty()) {
    rep.add(CheckResult{"identity", false, {}, "empty set"});
    return rep;
  }
  rep.add(flag("identity", index_of(Matrix::identity(autos[0].source->field, autos[0].source->dim)).has_value()));
  CheckResult closure{"composition", true, {}, {}};
  for (std::size_t i = 0; i < autos.size() && closure.passed; ++i)
    for (std::size_t j = 0; j < autos.size(); ++j)
      if (!index_of(autos[i].matrix * autos[j].matrix)) {
        closure = CheckResult{"composition", false, {i, j}, {}};
        break;
      }
  rep.add(closure);
  CheckResult inverse{"inverse", true, {}, {}};
  for (std::size_t i = 0; i < autos.size(); ++i) {
    auto inv = invert(autos[i].matrix);
    if (!inv || !index_of(*inv)) {
      inverse = CheckResult{"inverse", false, {i}, {}};
      break;
    }
  }
  rep.add(inverse);
  return rep;
}

LinearMap v_beta(const AlgebraPtr& h4, const Scalar& beta) {
  if (h4->dim != 4) throw Error(Errc::ShapeMismatch, "v_beta acts on Sweedler's 4-dimensional algebra");
  Matrix m(h4->field, 4, 4);
  m(0, 0) = h4->field.one();
  m(1, 1) = h4->field.one();
  m(2, 2) = beta;
  m(3, 3) = beta;
  return LinearMap(h4, h4, std::move(m));
}

LinearMap psi_u_beta(const LinearMap& u, const Scalar& beta, const CrossedProduct& src, const CrossedProduct& dst) {
  const std::size_t na = src.system.A->dim, nh = src.system.H->dim;
  require_shape(u, na, dst.system.A->dim, "u");
  const Matrix v = v_beta(src.system.H, beta).matrix;
  Matrix m(u.matrix.field(), dst.product->dim, src.product->dim);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nh; ++k)
        for (std::size_t l = 0; l < nh; ++l) m(i * nh + k, j * nh + l) = u.matrix(i, j) * v(k, l);
  return LinearMap(src.product, dst.product, std::move(m));
}

}  // namespace hopf

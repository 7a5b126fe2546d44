#include "hopf/structure.hpp"

#include <future>
#include <limits>

namespace hopf {

namespace {

// Kernel of the linear map whose k-th column is `column(k)`.
std::vector<Vec> solve_homogeneous(const HopfAlgebra& a, std::size_t rows,
                                   const std::function<Vec(std::size_t)>& column) {
  std::vector<Vec> cols;
  for (std::size_t k = 0; k < a.dim; ++k) cols.push_back(column(k));
  return kernel_basis(Matrix::from_columns(a.field, rows, cols));
}

Vec primitive_defect(const HopfAlgebra& a, const Vec& x, const Vec& g, const Vec& h) {
  Vec d = a.coproduct(x);
  d = sub(d, tensor(x, g));
  return sub(d, tensor(h, x));
}

Vec center_defect(const HopfAlgebra& a, const Vec& x) {
  Vec out;
  out.reserve(a.dim * a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    Vec c = a.commutator(a.e(i), x);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

Vec concat(Vec a, const Vec& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

bool ElementSubspace::contains(const Vec& v, const FieldSpec& field) const {
  return coordinates_in(basis, v, field).has_value();
}

bool is_group_like(const HopfAlgebra& a, const Vec& c) {
  return a.apply_counit(c).is_one() && a.coproduct(c) == tensor(c, c);
}

ElementSubspace skew_primitives(const HopfAlgebra& a, const Vec& g, const Vec& h) {
  if (!is_group_like(a, g) || !is_group_like(a, h))
    throw Error(Errc::NotGroupLike, "skew-primitive parameters must be group-like in " + a.name);
  auto basis = solve_homogeneous(a, a.dim * a.dim, [&](std::size_t k) { return primitive_defect(a, a.e(k), g, h); });
  bool plain = g == a.unit && h == a.unit;
  return ElementSubspace{a.name, plain ? SubspaceKind::Primitives : SubspaceKind::SkewPrimitives, std::move(basis)};
}

ElementSubspace primitives(const HopfAlgebra& a) { return skew_primitives(a, a.unit, a.unit); }

ElementSubspace center(const HopfAlgebra& a) {
  return ElementSubspace{a.name, SubspaceKind::Center,
                         solve_homogeneous(a, a.dim * a.dim, [&](std::size_t k) { return center_defect(a, a.e(k)); })};
}

ElementSubspace zp(const HopfAlgebra& a) {
  auto basis = solve_homogeneous(a, 2 * a.dim * a.dim, [&](std::size_t k) {
    Vec ek = a.e(k);
    return concat(primitive_defect(a, ek, a.unit, a.unit), center_defect(a, ek));
  });
  return ElementSubspace{a.name, SubspaceKind::CentralPrimitives, std::move(basis)};
}

bool primitively_generated(const HopfAlgebra& a) {
  auto prims = primitives(a).basis;
  std::vector<Vec> span{a.unit};
  std::size_t r = rank(Matrix::from_columns(a.field, a.dim, span));
  // Close span{1} under right multiplication by primitives.
  for (std::size_t next = 0; next < span.size() && r < a.dim; ++next) {
    for (const auto& x : prims) {
      Vec w = a.multiply(span[next], x);
      span.push_back(w);
      std::size_t r2 = rank(Matrix::from_columns(a.field, a.dim, span));
      if (r2 == r)
        span.pop_back();
      else
        r = r2;
    }
  }
  return r == a.dim;
}

uint64_t candidate_count(uint64_t p, std::size_t n) {
  uint64_t c = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (c > std::numeric_limits<uint64_t>::max() / p) return std::numeric_limits<uint64_t>::max();
    c *= p;
  }
  return c;
}

void for_each_affine_point(const Vec& particular, const std::vector<Vec>& kernel, const FieldSpec& field,
                           uint64_t budget, const std::function<bool(const Vec&)>& visit) {
  const std::size_t d = kernel.size();
  if (d == 0) {
    visit(particular);
    return;
  }
  if (!field.is_finite())
    throw Error(Errc::WrongField, "cannot enumerate a " + std::to_string(d) + "-dimensional family over " +
                                      field.to_string());
  const uint32_t p = field.characteristic();
  const uint64_t count = candidate_count(p, d);
  if (count > budget)
    throw Error(Errc::BudgetExceeded, "needs " + std::to_string(p) + "^" + std::to_string(d) + " candidates, budget " +
                                          std::to_string(budget));
  std::vector<uint32_t> t(d, 0);
  for (uint64_t n = 0; n < count; ++n) {
    Vec v = particular;
    for (std::size_t k = 0; k < d; ++k)
      if (t[k]) axpy(v, field.element(t[k]), kernel[k]);
    if (!visit(v)) return;
    for (std::size_t k = d; k-- > 0;) {
      if (++t[k] < p) break;
      t[k] = 0;
    }
  }
}

// ---------------------------------------------------------------------------

namespace {

struct IntCoalgebra {
  uint32_t p;
  std::size_t n;
  std::vector<uint32_t> counit;
  // For each basis element i, sparse (j * n + k, coeff) of Delta(e_i).
  std::vector<std::vector<std::pair<std::size_t, uint32_t>>> delta;
};

uint32_t residue(const Scalar& s) { return std::get<Scalar::Residue>(s.rep()).value; }

IntCoalgebra int_coalgebra(const HopfAlgebra& a) {
  IntCoalgebra c{a.field.characteristic(), a.dim, {}, {}};
  for (const auto& s : a.counit) c.counit.push_back(residue(s));
  c.delta.resize(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (const auto& t : a.comult[i]) c.delta[i].emplace_back(t.left * a.dim + t.right, residue(t.coeff));
  return c;
}

// Scans candidates whose first coordinate lies in [lo, hi).
std::vector<std::vector<uint32_t>> scan_group_likes(const IntCoalgebra& c, uint32_t lo, uint32_t hi) {
  const uint32_t p = c.p;
  const std::size_t n = c.n;
  std::vector<std::vector<uint32_t>> found;
  std::vector<uint32_t> v(n, 0);
  std::vector<uint32_t> acc(n * n);
  for (uint32_t first = lo; first < hi; ++first) {
    std::fill(v.begin(), v.end(), 0);
    v[0] = first;
    while (true) {
      uint64_t eps = 0;
      for (std::size_t i = 0; i < n; ++i) eps += static_cast<uint64_t>(v[i]) * c.counit[i];
      if (eps % p == 1 % p) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t i = 0; i < n; ++i) {
          if (!v[i]) continue;
          for (const auto& [jk, coeff] : c.delta[i]) acc[jk] = mod_add(acc[jk], mod_mul(v[i], coeff, p), p);
        }
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j)
          for (std::size_t k = 0; k < n; ++k)
            if (acc[j * n + k] != mod_mul(v[j], v[k], p)) {
              ok = false;
              break;
            }
        if (ok) found.push_back(v);
      }
      std::size_t k = n;
      while (k-- > 1) {
        if (++v[k] < p) break;
        v[k] = 0;
      }
      if (k == 0) break;
    }
  }
  return found;
}

}  // namespace

std::vector<Vec> group_likes_bruteforce(const HopfAlgebra& a, uint64_t budget, unsigned jobs) {
  if (!a.field.is_finite())
    throw Error(Errc::WrongField, "group-like search needs a prime field, got " + a.field.to_string());
  const uint32_t p = a.field.characteristic();
  const uint64_t count = candidate_count(p, a.dim);
  if (count > budget)
    throw Error(Errc::BudgetExceeded, "group-like scan of " + a.name + " needs " + std::to_string(p) + "^" +
                                          std::to_string(a.dim) + " candidates, budget " + std::to_string(budget));
  IntCoalgebra c = int_coalgebra(a);
  std::vector<std::vector<uint32_t>> raw;
  jobs = std::max(1u, std::min(jobs, p));
  if (jobs == 1) {
    raw = scan_group_likes(c, 0, p);
  } else {
    std::vector<std::future<std::vector<std::vector<uint32_t>>>> parts;
    for (unsigned j = 0; j < jobs; ++j) {
      uint32_t lo = p * j / jobs, hi = p * (j + 1) / jobs;
      parts.push_back(std::async(std::launch::async, scan_group_likes, std::cref(c), lo, hi));
    }
    for (auto& f : parts) {
      auto part = f.get();
      raw.insert(raw.end(), part.begin(), part.end());
    }
  }
  std::vector<Vec> out;
  for (const auto& v : raw) {
    Vec s;
    for (uint32_t x : v) s.push_back(a.field.element(x));
    out.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// r(h1) (x) h2 - r(h2) (x) h1 for basis h, as an element of A (x) H.
Vec cocentral_defect(const HopfAlgebra& h, const HopfAlgebra& a, const Matrix& r, std::size_t i) {
  Vec out = zeros(a.field, a.dim * h.dim);
  for (const auto& t : h.comult[i])
    for (std::size_t k = 0; k < a.dim; ++k) {
      out[k * h.dim + t.right] += t.coeff * r(k, t.left);
      out[k * h.dim + t.left] -= t.coeff * r(k, t.right);
    }
  return out;
}

}  // namespace

bool is_cocentral(const LinearMap& r) {
  for (std::size_t i = 0; i < r.source->dim; ++i)
    if (!is_zero(cocentral_defect(*r.source, *r.target, r.matrix, i))) return false;
  return true;
}

std::vector<LinearMap> cocentral_maps(const AlgebraPtr& hp, const AlgebraPtr& ap, uint64_t budget) {
  const HopfAlgebra& h = *hp;
  const HopfAlgebra& a = *ap;
  if (h.field != a.field) throw Error(Errc::FieldMismatch, "cocentral maps between different fields");
  const FieldSpec& field = a.field;
  const std::size_t nh = h.dim, na = a.dim, nvars = na * nh;
  // Unknown r(k, i) sits at column i * na + k.
  auto var = [&](std::size_t k, std::size_t i) { return i * na + k; };

  std::vector<Vec> rows;
  Vec rhs;
  auto add_row = [&](Vec row, Scalar b) {
    rows.push_back(std::move(row));
    rhs.push_back(std::move(b));
  };
  // Cocentrality, one row per coordinate of A (x) H per basis h.
  for (std::size_t i = 0; i < nh; ++i)
    for (std::size_t k = 0; k < na; ++k)
      for (std::size_t m = 0; m < nh; ++m) {
        Vec row = zeros(field, nvars);
        for (const auto& t : h.comult[i]) {
          if (t.right == m) row[var(k, t.left)] += t.coeff;
          if (t.left == m) row[var(k, t.right)] -= t.coeff;
        }
        if (!is_zero(row)) add_row(std::move(row), field.zero());
      }
  // Unitary.
  for (std::size_t k = 0; k < na; ++k) {
    Vec row = zeros(field, nvars);
    for (std::size_t i = 0; i < nh; ++i) row[var(k, i)] = h.unit[i];
    add_row(std::move(row), a.unit[k]);
  }
  // Counit compatibility.
  for (std::size_t i = 0; i < nh; ++i) {
    Vec row = zeros(field, nvars);
    for (std::size_t k = 0; k < na; ++k) row[var(k, i)] = a.counit[k];
    add_row(std::move(row), h.counit[i]);
  }
  Matrix m(field, rows.size(), nvars);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < nvars; ++c) m(r, c) = rows[r][c];
  auto sol = solve_linear(m, rhs);
  std::vector<LinearMap> out;
  if (!sol) return out;

  for_each_affine_point(sol->particular, sol->kernel, field, budget, [&](const Vec& x) {
    Matrix r(field, na, nh);
    for (std::size_t i = 0; i < nh; ++i)
      for (std::size_t k = 0; k < na; ++k) r(k, i) = x[var(k, i)];
    LinearMap map(hp, ap, std::move(r));
    auto flags = check_map_properties(map);
    if (flags.coalgebra && flags.unitary) {
      map.flags = flags;
      out.push_back(std::move(map));
    }
    return true;
  });
  return out;
}

VerificationReport check_convolution_group(const std::vector<LinearMap>& maps) {
  VerificationReport rep;
  if (maps.empty()) {
    rep.add(CheckResult{"unit", false, {}, "empty set"});
    return rep;
  }
  const AlgebraPtr& h = maps.front().source;
  const AlgebraPtr& a = maps.front().target;
  auto index_of = [&](const Matrix& m) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < maps.size(); ++i)
      if (maps[i].matrix == m) return i;
    return std::nullopt;
  };
  const LinearMap unit = unit_counit_map(h, a);
  rep.add(index_of(unit.matrix) ? CheckResult{"unit", true, {}, {}} : CheckResult{"unit", false, {}, "missing"});

  CheckResult closure{"closure", true, {}, {}};
  for (std::size_t i = 0; i < maps.size() && closure.passed; ++i)
    for (std::size_t j = 0; j < maps.size(); ++j)
      if (!index_of(convolution(maps[i], maps[j]).matrix)) {
        closure = CheckResult{"closure", false, {i, j}, {}};
        break;
      }
  rep.add(closure);

  CheckResult inverse{"inverse", true, {}, {}};
  for (std::size_t i = 0; i < maps.size(); ++i) {
    LinearMap s(a, a, a->antipode);
    LinearMap inv = compose(s, maps[i]);
    if (!index_of(inv.matrix) || convolution(maps[i], inv).matrix != unit.matrix ||
        convolution(inv, maps[i]).matrix != unit.matrix) {
      inverse = CheckResult{"inverse", false, {i}, {}};
      break;
    }
  }
  rep.add(inverse);
  return rep;
}

}  // namespace hopf

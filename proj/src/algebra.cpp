#include "hopf/algebra.hpp"

#include <functional>
#include <future>
#include <map>
#include <sstream>

namespace hopf {

HopfAlgebra::HopfAlgebra(std::string name_, FieldSpec field_, std::size_t dim_)
    : name(std::move(name_)),
      field(std::move(field_)),
      dim(dim_),
      unit(zeros(field, dim_)),
      comult(dim_),
      counit(zeros(field, dim_)),
      antipode(field, dim_, dim_) {
  mult.assign(dim_ * dim_, zeros(field, dim_));
  for (std::size_t i = 0; i < dim_; ++i) basis.push_back("e" + std::to_string(i));
}

void HopfAlgebra::validate_shape() const {
  auto bad = [&](const std::string& what) {
    throw Error(Errc::MalformedData, "algebra '" + name + "': " + what);
  };
  if (dim == 0) bad("dimension must be positive");
  if (basis.size() != dim) bad("basis label count != dim");
  if (mult.size() != dim * dim) bad("multiplication table must have dim^2 entries");
  for (const auto& v : mult) {
    if (v.size() != dim) bad("product vector has wrong length");
    for (const auto& s : v)
      if (!field.contains(s)) bad("product coefficient outside " + field.to_string());
  }
  if (unit.size() != dim || counit.size() != dim) bad("unit/counit length != dim");
  for (const auto& s : unit)
    if (!field.contains(s)) bad("unit coefficient outside field");
  for (const auto& s : counit)
    if (!field.contains(s)) bad("counit coefficient outside field");
  if (comult.size() != dim) bad("comultiplication must list every basis element");
  for (const auto& terms : comult)
    for (const auto& t : terms) {
      if (t.left >= dim || t.right >= dim) bad("comultiplication index out of range");
      if (!field.contains(t.coeff)) bad("comultiplication coefficient outside field");
    }
  if (antipode.rows() != dim || antipode.cols() != dim) bad("antipode must be dim x dim");
  if (antipode.field() != field) bad("antipode over a different field");
  if (presentation) {
    if (presentation->words.size() != dim) bad("presentation needs one word per basis element");
    for (const auto& g : presentation->generators)
      if (g.basis_index >= dim) bad("generator index out of range");
    for (const auto& w : presentation->words)
      for (std::size_t k : w)
        if (k >= presentation->generators.size()) bad("word refers to unknown generator");
  }
}

Vec HopfAlgebra::multiply(const Vec& a, const Vec& b) const {
  Vec out = zero();
  for (std::size_t i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (b[j].is_zero()) continue;
      axpy(out, a[i] * b[j], mult[i * dim + j]);
    }
  }
  return out;
}

Vec HopfAlgebra::power(const Vec& a, unsigned n) const {
  Vec out = one();
  for (unsigned k = 0; k < n; ++k) out = multiply(out, a);
  return out;
}

Vec HopfAlgebra::commutator(const Vec& a, const Vec& b) const { return sub(multiply(a, b), multiply(b, a)); }

Vec HopfAlgebra::coproduct(const Vec& v) const {
  Vec out = zeros(field, dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (v[i].is_zero()) continue;
    for (const auto& t : comult[i]) out[t.left * dim + t.right] += v[i] * t.coeff;
  }
  return out;
}

Scalar HopfAlgebra::apply_counit(const Vec& v) const {
  Scalar s = field.zero();
  for (std::size_t i = 0; i < dim; ++i)
    if (!v[i].is_zero()) s += v[i] * counit[i];
  return s;
}

Vec HopfAlgebra::apply_antipode(const Vec& v) const { return antipode * v; }

std::optional<std::size_t> HopfAlgebra::basis_index(const std::string& label) const {
  for (std::size_t i = 0; i < dim; ++i)
    if (basis[i] == label) return i;
  return std::nullopt;
}

std::string HopfAlgebra::format(const Vec& v) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < dim; ++i) {
    if (v[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (v[i].is_one())
      os << basis[i];
    else
      os << "(" << field.format(v[i]) << ")*" << basis[i];
  }
  return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------

std::vector<SweedlerTerm> sweedler(const HopfAlgebra& a, const Vec& v, std::size_t n) {
  std::map<std::vector<std::size_t>, Scalar> cur;
  for (std::size_t i = 0; i < a.dim; ++i)
    if (!v[i].is_zero()) cur.emplace(std::vector<std::size_t>{i}, v[i]);
  for (std::size_t k = 1; k < n; ++k) {
    std::map<std::vector<std::size_t>, Scalar> next;
    for (const auto& [idx, c] : cur) {
      for (const auto& t : a.comult[idx.back()]) {
        std::vector<std::size_t> j = idx;
        j.back() = t.left;
        j.push_back(t.right);
        Scalar coeff = c * t.coeff;
        auto it = next.find(j);
        if (it == next.end())
          next.emplace(std::move(j), std::move(coeff));
        else
          it->second += coeff;
      }
    }
    cur = std::move(next);
  }
  std::vector<SweedlerTerm> out;
  for (auto& [idx, c] : cur)
    if (!c.is_zero()) out.push_back(SweedlerTerm{idx, c});
  return out;
}

std::vector<SweedlerTerm> sweedler_basis(const HopfAlgebra& a, std::size_t i, std::size_t n) {
  return sweedler(a, a.e(i), n);
}

Vec tensor(const Vec& a, const Vec& b) {
  if (a.empty() || b.empty()) return {};
  Vec out(a.size() * b.size(), a[0] - a[0]);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

// ---------------------------------------------------------------------------

bool VerificationReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<std::string> VerificationReport::failed() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c.name);
  return out;
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed) {
      os << " witness=(";
      for (std::size_t k = 0; k < c.witness.size(); ++k) os << (k ? "," : "") << c.witness[k];
      os << ")";
      if (!c.detail.empty()) os << " " << c.detail;
    }
    os << "\n";
  }
  return os.str();
}

namespace {

CheckResult fail(std::string name, std::vector<std::size_t> witness, std::string detail = {}) {
  return CheckResult{std::move(name), false, std::move(witness), std::move(detail)};
}

CheckResult pass(std::string name) { return CheckResult{std::move(name), true, {}, {}}; }

// Product in A (x) A of two dense tensors.
Vec tensor_square_product(const HopfAlgebra& h, const Vec& x, const Vec& y) {
  const std::size_t n = h.dim;
  Vec out = zeros(h.field, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Scalar& xc = x[a * n + b];
      if (xc.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          const Scalar& yc = y[c * n + d];
          if (yc.is_zero()) continue;
          const Scalar coeff = xc * yc;
          const Vec& left = h.product(a, c);
          const Vec& right = h.product(b, d);
          for (std::size_t i = 0; i < n; ++i) {
            if (left[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
              if (!right[j].is_zero()) out[i * n + j] += coeff * left[i] * right[j];
          }
        }
    }
  return out;
}

CheckResult check_associativity(const HopfAlgebra& h) {
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t j = 0; j < h.dim; ++j)
      for (std::size_t k = 0; k < h.dim; ++k) {
        Vec lhs = h.multiply(h.product(i, j), h.e(k));
        Vec rhs = h.multiply(h.e(i), h.product(j, k));
        if (lhs != rhs) return fail("associativity", {i, j, k});
      }
  return pass("associativity");
}

CheckResult check_unit(const HopfAlgebra& h) {
  for (std::size_t i = 0; i < h.dim; ++i) {
    Vec ei = h.e(i);
    if (h.multiply(h.unit, ei) != ei || h.multiply(ei, h.unit) != ei) return fail("unit", {i});
  }
  return pass("unit");
}

CheckResult check_coassociativity(const HopfAlgebra& h) {
  for (std::size_t i = 0; i < h.dim; ++i) {
    // Compare (Delta (x) id)Delta and (id (x) Delta)Delta as dense n^3 tensors.
    const std::size_t n = h.dim;
    Vec left = zeros(h.field, n * n * n);
    Vec right = zeros(h.field, n * n * n);
    for (const auto& t : h.comult[i]) {
      for (const auto& u : h.comult[t.left]) left[(u.left * n + u.right) * n + t.right] += t.coeff * u.coeff;
      for (const auto& u : h.comult[t.right]) right[(t.left * n + u.left) * n + u.right] += t.coeff * u.coeff;
    }
    if (left != right) return fail("coassociativity", {i});
  }
  return pass("coassociativity");
}

CheckResult check_counit(const HopfAlgebra& h) {
  for (std::size_t i = 0; i < h.dim; ++i) {
    Vec left = h.zero();
    Vec right = h.zero();
    for (const auto& t : h.comult[i]) {
      left[t.right] += h.counit[t.left] * t.coeff;
      right[t.left] += h.counit[t.right] * t.coeff;
    }
    Vec ei = h.e(i);
    if (left != ei || right != ei) return fail("counit", {i});
  }
  return pass("counit");
}

CheckResult check_comultiplicative(const HopfAlgebra& h) {
  std::vector<Vec> deltas;
  for (std::size_t i = 0; i < h.dim; ++i) deltas.push_back(h.coproduct(h.e(i)));
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t j = 0; j < h.dim; ++j) {
      Vec lhs = h.coproduct(h.product(i, j));
      Vec rhs = tensor_square_product(h, deltas[i], deltas[j]);
      if (lhs != rhs) return fail("comultiplicative", {i, j});
    }
  return pass("comultiplicative");
}

CheckResult check_comult_unit(const HopfAlgebra& h) {
  if (h.coproduct(h.unit) != tensor(h.unit, h.unit)) return fail("comult_unit", {});
  return pass("comult_unit");
}

CheckResult check_counit_multiplicative(const HopfAlgebra& h) {
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t j = 0; j < h.dim; ++j)
      if (h.apply_counit(h.product(i, j)) != h.counit[i] * h.counit[j])
        return fail("counit_multiplicative", {i, j});
  return pass("counit_multiplicative");
}

CheckResult check_counit_unit(const HopfAlgebra& h) {
  if (!h.apply_counit(h.unit).is_one()) return fail("counit_unit", {});
  return pass("counit_unit");
}

CheckResult check_antipode(const HopfAlgebra& h) {
  for (std::size_t i = 0; i < h.dim; ++i) {
    Vec left = h.zero();
    Vec right = h.zero();
    for (const auto& t : h.comult[i]) {
      axpy(left, t.coeff, h.multiply(h.antipode.column(t.left), h.e(t.right)));
      axpy(right, t.coeff, h.multiply(h.e(t.left), h.antipode.column(t.right)));
    }
    Vec expected = scale(h.counit[i], h.unit);
    if (left != expected || right != expected) return fail("antipode", {i});
  }
  return pass("antipode");
}

}  // namespace

VerificationReport run_checks(const std::vector<std::function<CheckResult()>>& checks, unsigned jobs) {
  VerificationReport report;
  if (jobs <= 1) {
    for (const auto& c : checks) report.add(c());
    return report;
  }
  std::vector<std::future<CheckResult>> pending;
  for (const auto& c : checks) pending.push_back(std::async(std::launch::async, c));
  for (auto& f : pending) report.add(f.get());
  return report;
}

VerificationReport verify_hopf(const HopfAlgebra& h, unsigned jobs) {
  h.validate_shape();
  std::vector<std::function<CheckResult()>> checks = {
      [&] { return check_associativity(h); },
      [&] { return check_unit(h); },
      [&] { return check_coassociativity(h); },
      [&] { return check_counit(h); },
      [&] { return check_comultiplicative(h); },
      [&] { return check_comult_unit(h); },
      [&] { return check_counit_multiplicative(h); },
      [&] { return check_counit_unit(h); },
      [&] { return check_antipode(h); },
  };
  return run_checks(checks, jobs);
}

// ---------------------------------------------------------------------------

namespace {

std::optional<std::size_t> unit_basis_index(const HopfAlgebra& h) {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < h.dim; ++i) {
    if (h.unit[i].is_zero()) continue;
    if (!h.unit[i].is_one() || found) return std::nullopt;
    found = i;
  }
  return found;
}

}  // namespace

HopfAlgebra tensor_hopf(const HopfAlgebra& a, const HopfAlgebra& b) {
  if (a.field != b.field) throw Error(Errc::FieldMismatch, "tensor factors over different fields");
  const std::size_t na = a.dim;
  const std::size_t nb = b.dim;
  HopfAlgebra t("tensor(" + a.name + "," + b.name + ")", a.field, na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) t.basis[i * nb + j] = a.basis[i] + "⊗" + b.basis[j];
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          t.mult[(i * nb + j) * t.dim + (k * nb + l)] = tensor(a.product(i, k), b.product(j, l));
  t.unit = tensor(a.unit, b.unit);
  t.counit = tensor(a.counit, b.counit);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      auto& terms = t.comult[i * nb + j];
      for (const auto& u : a.comult[i])
        for (const auto& v : b.comult[j])
          terms.push_back(CoproductTerm{u.left * nb + v.left, u.right * nb + v.right, u.coeff * v.coeff});
    }
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          t.antipode(i * nb + j, k * nb + l) = a.antipode(i, k) * b.antipode(j, l);

  const auto ua = unit_basis_index(a);
  const auto ub = unit_basis_index(b);
  if (a.presentation && b.presentation && ua && ub) {
    Presentation p;
    const std::size_t shift = a.presentation->generators.size();
    for (auto g : a.presentation->generators) {
      g.basis_index = g.basis_index * nb + *ub;
      p.generators.push_back(g);
    }
    for (auto g : b.presentation->generators) {
      g.basis_index = *ua * nb + g.basis_index;
      if (g.right_group_like) *g.right_group_like += shift;
      if (g.left_group_like) *g.left_group_like += shift;
      p.generators.push_back(g);
    }
    p.words.resize(t.dim);
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j) {
        auto w = a.presentation->words[i];
        for (std::size_t k : b.presentation->words[j]) w.push_back(k + shift);
        p.words[i * nb + j] = std::move(w);
      }
    t.presentation = std::move(p);
  }
  if (a.known_group_likes && b.known_group_likes) {
    std::vector<Vec> gl;
    for (const auto& x : *a.known_group_likes)
      for (const auto& y : *b.known_group_likes) gl.push_back(tensor(x, y));
    t.known_group_likes = std::move(gl);
  }
  return t;
}

// ---------------------------------------------------------------------------

LinearMap::LinearMap(AlgebraPtr src, AlgebraPtr tgt, Matrix m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
  if (matrix.rows() != target->dim || matrix.cols() != source->dim)
    throw Error(Errc::ShapeMismatch, "map matrix must be target.dim x source.dim");
  if (source->field != target->field || matrix.field() != source->field)
    throw Error(Errc::FieldMismatch, "map between algebras over different fields");
}

LinearMap identity_map(const AlgebraPtr& a) { return LinearMap(a, a, Matrix::identity(a->field, a->dim)); }

LinearMap unit_counit_map(const AlgebraPtr& source, const AlgebraPtr& target) {
  Matrix m(source->field, target->dim, source->dim);
  for (std::size_t j = 0; j < source->dim; ++j)
    for (std::size_t i = 0; i < target->dim; ++i) m(i, j) = source->counit[j] * target->unit[i];
  return LinearMap(source, target, std::move(m));
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  if (g.target->dim != f.source->dim) throw Error(Errc::ShapeMismatch, "composition shape mismatch");
  return LinearMap(g.source, f.target, f.matrix * g.matrix);
}

LinearMap convolution(const LinearMap& f, const LinearMap& g) {
  if (f.source->dim != g.source->dim || f.target->dim != g.target->dim)
    throw Error(Errc::ShapeMismatch, "convolution needs maps with common source and target");
  const HopfAlgebra& c = *f.source;
  const HopfAlgebra& a = *f.target;
  Matrix m(c.field, a.dim, c.dim);
  for (std::size_t i = 0; i < c.dim; ++i) {
    Vec acc = a.zero();
    for (const auto& t : c.comult[i]) axpy(acc, t.coeff, a.multiply(f.image(t.left), g.image(t.right)));
    m.set_column(i, acc);
  }
  return LinearMap(f.source, f.target, std::move(m));
}

MapProperties check_map_properties(const LinearMap& f) {
  const HopfAlgebra& s = *f.source;
  const HopfAlgebra& t = *f.target;
  MapProperties p;
  p.unitary = f.apply(s.unit) == t.unit;

  p.counital = true;
  for (std::size_t i = 0; i < s.dim && p.counital; ++i)
    p.counital = t.apply_counit(f.image(i)) == s.counit[i];

  p.comultiplicative = true;
  for (std::size_t i = 0; i < s.dim && p.comultiplicative; ++i) {
    Vec lhs = t.coproduct(f.image(i));
    Vec rhs = zeros(t.field, t.dim * t.dim);
    for (const auto& term : s.comult[i]) axpy(rhs, term.coeff, tensor(f.image(term.left), f.image(term.right)));
    p.comultiplicative = lhs == rhs;
  }
  p.coalgebra = p.counital && p.comultiplicative;

  p.algebra = p.unitary;
  for (std::size_t i = 0; i < s.dim && p.algebra; ++i)
    for (std::size_t j = 0; j < s.dim && p.algebra; ++j)
      p.algebra = f.apply(s.product(i, j)) == t.multiply(f.image(i), f.image(j));

  p.antipode_compatible = f.matrix * s.antipode == t.antipode * f.matrix;
  p.hopf = p.coalgebra && p.algebra;
  return p;
}

LinearMap with_flags(LinearMap f) {
  f.flags = check_map_properties(f);
  return f;
}

bool is_coalgebra_map(const LinearMap& f) { return check_map_properties(f).coalgebra; }
bool is_unitary(const LinearMap& f) { return f.apply(f.source->unit) == f.target->unit; }
bool is_algebra_map(const LinearMap& f) { return check_map_properties(f).algebra; }
bool is_hopf_map(const LinearMap& f) { return check_map_properties(f).hopf; }

}  // namespace hopf

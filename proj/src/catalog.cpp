#include "hopf/catalog.hpp"

#include <string>

namespace hopf {

namespace {

void set_group_like(HopfAlgebra& h, std::size_t i) {
  h.comult[i] = {CoproductTerm{i, i, h.field.one()}};
  h.counit[i] = h.field.one();
}

// Labels 1, y, y^2, ... for a power basis in one generator.
std::vector<std::string> power_labels(const std::string& gen, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == 0)
      out.push_back("1");
    else if (j == 1)
      out.push_back(gen);
    else
      out.push_back(gen + "^" + std::to_string(j));
  }
  return out;
}

Presentation power_presentation(Generator gen, std::size_t n) {
  Presentation p;
  p.generators.push_back(gen);
  for (std::size_t j = 0; j < n; ++j) p.words.emplace_back(j, 0);
  return p;
}

// Shared coalgebra of the two line algebras: y^j has the binomial coproduct.
HopfAlgebra line_algebra(uint32_t p, const FieldSpec& field, bool semisimple) {
  if (field.characteristic() != p)
    throw Error(Errc::CharMismatch, "line algebra of degree " + std::to_string(p) + " needs characteristic " +
                                        std::to_string(p) + ", got " + field.to_string());
  HopfAlgebra h(semisimple ? "line1:" + std::to_string(p) : "line0:" + std::to_string(p), field, p);
  h.basis = power_labels("y", p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      std::size_t e = i + j;
      if (e < p)
        h.mult[i * p + j] = h.e(e);
      else if (semisimple)
        h.mult[i * p + j] = h.e(e - (p - 1));
    }
  h.unit = h.e(0);
  h.counit[0] = field.one();

  // Pascal's triangle in the field.
  std::vector<std::vector<Scalar>> binom(p, std::vector<Scalar>(p, field.zero()));
  for (std::size_t j = 0; j < p; ++j) {
    binom[j][0] = field.one();
    for (std::size_t k = 1; k <= j; ++k) binom[j][k] = binom[j - 1][k - 1] + (k < j ? binom[j - 1][k] : field.zero());
  }
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t k = 0; k <= j; ++k)
      if (!binom[j][k].is_zero()) h.comult[j].push_back(CoproductTerm{k, j - k, binom[j][k]});

  for (std::size_t j = 0; j < p; ++j) h.antipode(j, j) = j % 2 ? -field.one() : field.one();
  h.presentation = power_presentation(Generator{1, GeneratorKind::Primitive, std::nullopt, std::nullopt}, p);
  h.known_group_likes = std::vector<Vec>{h.unit};
  return h;
}

std::string trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return std::string(s);
}

uint32_t parse_count(std::string_view s, std::string_view ref) {
  if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string_view::npos)
    throw Error(Errc::InvalidArgument, "bad numeric parameter in catalog reference '" + std::string(ref) + "'");
  return static_cast<uint32_t>(std::stoul(std::string(s)));
}

}  // namespace

HopfAlgebra sweedler4(const FieldSpec& field) {
  HopfAlgebra h("sweedler4", field, 4);
  h.basis = {"1", "g", "x", "gx"};
  const Scalar one = field.one();
  const Scalar neg = -one;
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
    Vec v = h.zero();
    v[k] = c;
    h.mult[i * 4 + j] = v;
  };
  for (std::size_t i = 0; i < 4; ++i) {
    set(0, i, i, one);
    set(i, 0, i, one);
  }
  set(1, 1, 0, one);
  set(1, 2, 3, one);
  set(1, 3, 2, one);
  set(2, 1, 3, neg);
  set(3, 1, 2, neg);
  // x*x, x*gx, gx*x, gx*gx stay zero.
  h.unit = h.e(0);
  set_group_like(h, 0);
  set_group_like(h, 1);
  h.comult[2] = {CoproductTerm{2, 0, one}, CoproductTerm{1, 2, one}};
  h.comult[3] = {CoproductTerm{3, 1, one}, CoproductTerm{0, 3, one}};
  h.antipode(0, 0) = one;
  h.antipode(1, 1) = one;
  h.antipode(3, 2) = neg;  // S(x) = -gx
  h.antipode(2, 3) = one;  // S(gx) = x

  Presentation pres;
  pres.generators.push_back(Generator{1, GeneratorKind::GroupLike, std::nullopt, std::nullopt});
  pres.generators.push_back(Generator{2, GeneratorKind::SkewPrimitive, std::nullopt, std::size_t{0}});
  pres.words = {{}, {0}, {1}, {0, 1}};
  h.presentation = pres;
  h.known_group_likes = std::vector<Vec>{h.e(0), h.e(1)};
  return h;
}

HopfAlgebra line_nilpotent(uint32_t p, const FieldSpec& field) { return line_algebra(p, field, false); }

HopfAlgebra line_semisimple(uint32_t p, const FieldSpec& field) { return line_algebra(p, field, true); }

HopfAlgebra cyclic_group_algebra(std::size_t n, const FieldSpec& field) {
  if (n == 0) throw Error(Errc::InvalidArgument, "cyclic group order must be positive");
  HopfAlgebra h("cyclic:" + std::to_string(n), field, n);
  h.basis = power_labels("g", n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h.mult[i * n + j] = h.e((i + j) % n);
  h.unit = h.e(0);
  for (std::size_t i = 0; i < n; ++i) {
    set_group_like(h, i);
    h.antipode((n - i) % n, i) = field.one();
  }
  if (n > 1) h.presentation = power_presentation(Generator{1, GeneratorKind::GroupLike, std::nullopt, std::nullopt}, n);
  std::vector<Vec> gl;
  for (std::size_t i = 0; i < n; ++i) gl.push_back(h.e(i));
  h.known_group_likes = gl;
  return h;
}

HopfAlgebra catalog_algebra(std::string_view ref_in, const FieldSpec& field) {
  std::string ref = trim(ref_in);
  std::string_view r = ref;
  if (r.rfind("catalog:", 0) == 0) r.remove_prefix(8);
  if (r == "sweedler4") return sweedler4(field);
  if (r.rfind("line0:", 0) == 0) return line_nilpotent(parse_count(r.substr(6), ref), field);
  if (r.rfind("line1:", 0) == 0) return line_semisimple(parse_count(r.substr(6), ref), field);
  if (r.rfind("cyclic:", 0) == 0) return cyclic_group_algebra(parse_count(r.substr(7), ref), field);
  if (r.rfind("tensor(", 0) == 0 && r.back() == ')') {
    std::string_view inner = r.substr(7, r.size() - 8);
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0)
        return tensor_hopf(catalog_algebra(inner.substr(0, i), field), catalog_algebra(inner.substr(i + 1), field));
    }
  }
  throw Error(Errc::InvalidArgument, "unknown catalog algebra '" + ref + "'");
}

}  // namespace hopf

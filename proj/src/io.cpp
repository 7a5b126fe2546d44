#include "hopf/io.hpp"

#include <fstream>
#include <sstream>

namespace hopf {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(Errc::MalformedData, what); }

std::size_t index_at(const Json& row, std::size_t k, std::size_t bound, const char* what) {
  if (!row.at(k).is_number_unsigned() && !row.at(k).is_number_integer()) malformed(std::string(what) + " index is not an integer");
  const long long v = row.at(k).get<long long>();
  if (v < 0 || static_cast<std::size_t>(v) >= bound) malformed(std::string(what) + " index out of range");
  return static_cast<std::size_t>(v);
}

Scalar coeff_at(const FieldSpec& f, const Json& j) {
  if (j.is_string()) return f.parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  malformed("coefficients must be strings or integers");
}

const char* kind_name(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::GroupLike:
      return "group_like";
    case GeneratorKind::Primitive:
      return "primitive";
    case GeneratorKind::SkewPrimitive:
      return "skew_primitive";
  }
  return "primitive";
}

GeneratorKind kind_from(const std::string& s) {
  if (s == "group_like") return GeneratorKind::GroupLike;
  if (s == "primitive") return GeneratorKind::Primitive;
  if (s == "skew_primitive") return GeneratorKind::SkewPrimitive;
  malformed("unknown generator kind '" + s + "'");
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::ParseError, "invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

Json field_to_json(const FieldSpec& f) {
  Json j;
  switch (f.kind()) {
    case FieldSpec::Kind::Rationals:
      j["kind"] = "rationals";
      break;
    case FieldSpec::Kind::PrimeField:
      j["kind"] = "prime";
      j["p"] = f.characteristic();
      break;
    case FieldSpec::Kind::RationalFunctions:
      j["kind"] = "rational_functions";
      j["p"] = f.characteristic();
      j["vars"] = f.vars();
      break;
  }
  return j;
}

FieldSpec field_from_json(const Json& j) {
  if (j.is_string()) return FieldSpec::parse(j.get<std::string>());
  if (!j.is_object() || !j.contains("kind")) malformed("field must be a flag string or an object with a kind");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "rationals") return FieldSpec::rationals();
  if (kind == "prime") return FieldSpec::prime(j.at("p").get<uint32_t>());
  if (kind == "rational_functions")
    return FieldSpec::rational_functions(j.at("p").get<uint32_t>(), j.at("vars").get<std::vector<std::string>>());
  malformed("unknown field kind '" + kind + "'");
}

Json scalar_to_json(const FieldSpec& f, const Scalar& s) { return f.format(s); }

Json vec_to_json(const FieldSpec& f, const Vec& v) {
  Json j = Json::array();
  for (const auto& c : v) j.push_back(f.format(c));
  return j;
}

Vec vec_from_json(const FieldSpec& f, const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) malformed("expected a vector of length " + std::to_string(n));
  Vec v;
  for (const auto& c : j) v.push_back(coeff_at(f, c));
  return v;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vec_to_json(m.field(), m.row(r)));
  return rows;
}

Matrix matrix_from_json(const FieldSpec& f, const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw Error(Errc::ShapeMismatch, "expected " + std::to_string(rows) + " matrix rows");
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw Error(Errc::ShapeMismatch, "expected " + std::to_string(cols) + " matrix columns");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = coeff_at(f, j[r][c]);
  }
  return m;
}

Json algebra_to_json(const HopfAlgebra& a) {
  const FieldSpec& f = a.field;
  Json j;
  j["name"] = a.name;
  j["field"] = field_to_json(f);
  j["dim"] = a.dim;
  j["basis"] = a.basis;
  j["unit"] = vec_to_json(f, a.unit);
  j["counit"] = vec_to_json(f, a.counit);
  Json mult = Json::array();
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t k = 0; k < a.dim; ++k) {
      const Vec& v = a.product(i, k);
      for (std::size_t l = 0; l < a.dim; ++l)
        if (!v[l].is_zero()) mult.push_back(Json::array({i, k, l, f.format(v[l])}));
    }
  j["mult"] = std::move(mult);
  Json comult = Json::array();
  for (std::size_t i = 0; i < a.dim; ++i)
    for (const auto& t : a.comult[i]) comult.push_back(Json::array({i, t.left, t.right, f.format(t.coeff)}));
  j["comult"] = std::move(comult);
  Json s = Json::array();
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t r = 0; r < a.dim; ++r)
      if (!a.antipode(r, i).is_zero()) s.push_back(Json::array({i, r, f.format(a.antipode(r, i))}));
  j["antipode"] = std::move(s);
  if (a.presentation) {
    Json gens = Json::array();
    for (const auto& g : a.presentation->generators) {
      Json gj{{"index", g.basis_index}, {"kind", kind_name(g.kind)}};
      if (g.left_group_like) gj["left"] = *g.left_group_like;
      if (g.right_group_like) gj["right"] = *g.right_group_like;
      gens.push_back(std::move(gj));
    }
    j["presentation"] = {{"generators", std::move(gens)}, {"words", a.presentation->words}};
  }
  if (a.known_group_likes) {
    Json g = Json::array();
    for (const auto& v : *a.known_group_likes) g.push_back(vec_to_json(f, v));
    j["group_likes"] = std::move(g);
  }
  return j;
}

HopfAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object()) malformed("algebra JSON must be an object");
  for (const char* key : {"field", "dim", "unit", "counit", "mult", "comult", "antipode"})
    if (!j.contains(key)) malformed(std::string("algebra JSON lacks \"") + key + "\"");
  try {
    const FieldSpec f = field_from_json(j.at("field"));
    const std::size_t n = j.at("dim").get<std::size_t>();
    if (n == 0) malformed("dimension must be positive");
    HopfAlgebra a(j.value("name", std::string("algebra")), f, n);
    if (j.contains("basis")) {
      a.basis = j.at("basis").get<std::vector<std::string>>();
      if (a.basis.size() != n) malformed("basis has the wrong number of labels");
    } else {
      a.basis.clear();
      for (std::size_t i = 0; i < n; ++i) a.basis.push_back("e" + std::to_string(i));
    }
    a.unit = vec_from_json(f, j.at("unit"), n);
    a.counit = vec_from_json(f, j.at("counit"), n);
    a.mult.assign(n * n, zeros(f, n));
    for (const auto& row : j.at("mult")) {
      if (!row.is_array() || row.size() != 4) malformed("mult entries are [i, j, k, c]");
      const std::size_t i = index_at(row, 0, n, "mult"), k = index_at(row, 1, n, "mult"), l = index_at(row, 2, n, "mult");
      a.mult[i * n + k][l] += coeff_at(f, row[3]);
    }
    a.comult.assign(n, {});
    for (const auto& row : j.at("comult")) {
      if (!row.is_array() || row.size() != 4) malformed("comult entries are [i, j, k, c]");
      const std::size_t i = index_at(row, 0, n, "comult");
      a.comult[i].push_back(
          CoproductTerm{index_at(row, 1, n, "comult"), index_at(row, 2, n, "comult"), coeff_at(f, row[3])});
    }
    for (const auto& row : j.at("antipode")) {
      if (!row.is_array() || row.size() != 3) malformed("antipode entries are [i, j, c]");
      const std::size_t i = index_at(row, 0, n, "antipode"), r = index_at(row, 1, n, "antipode");
      a.antipode(r, i) += coeff_at(f, row[2]);
    }
    if (j.contains("presentation")) {
      Presentation p;
      for (const auto& g : j.at("presentation").at("generators")) {
        Generator gen{g.at("index").get<std::size_t>(), kind_from(g.at("kind").get<std::string>()), std::nullopt,
                      std::nullopt};
        if (g.contains("left")) gen.left_group_like = g.at("left").get<std::size_t>();
        if (g.contains("right")) gen.right_group_like = g.at("right").get<std::size_t>();
        p.generators.push_back(gen);
      }
      p.words = j.at("presentation").at("words").get<std::vector<std::vector<std::size_t>>>();
      a.presentation = std::move(p);
    }
    if (j.contains("group_likes")) {
      std::vector<Vec> g;
      for (const auto& v : j.at("group_likes")) g.push_back(vec_from_json(f, v, n));
      a.known_group_likes = std::move(g);
    }
    a.validate_shape();
    return a;
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("algebra JSON: ") + e.what());
  }
}

bool structure_identical(const HopfAlgebra& a, const HopfAlgebra& b) {
  if (a.field != b.field || a.dim != b.dim || a.basis != b.basis) return false;
  if (a.unit != b.unit || a.counit != b.counit || a.mult != b.mult || !(a.antipode == b.antipode)) return false;
  for (std::size_t i = 0; i < a.dim; ++i)
    if (a.coproduct(a.e(i)) != b.coproduct(b.e(i))) return false;
  return true;
}

Vec parse_element(const HopfAlgebra& a, std::string_view text) {
  // Split at top-level + and - signs, keeping the sign with each term.
  std::vector<std::pair<bool, std::string>> terms;
  int depth = 0;
  std::string cur;
  bool negative = false, signed_term = false;
  auto flush = [&] {
    const std::string t = trim(cur);
    if (!t.empty()) terms.emplace_back(negative, t);
    else if (signed_term) throw Error(Errc::ParseError, "dangling sign in '" + std::string(text) + "'");
    cur.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    // a sign right after ^ belongs to an exponent
    const bool exponent_sign = !cur.empty() && trim(cur).back() == '^';
    if (depth == 0 && (c == '+' || c == '-') && !exponent_sign) {
      if (!trim(cur).empty() || signed_term) flush();
      negative = c == '-';
      signed_term = true;
      continue;
    }
    cur.push_back(c);
  }
  flush();
  if (terms.empty()) throw Error(Errc::ParseError, "empty element");

  Vec out = a.zero();
  for (const auto& [neg, term] : terms) {
    std::string coeff_text, label = term;
    if (auto idx = a.basis_index(term)) {
      label = term;
    } else {
      // coefficient * label, split at the last top-level '*'
      std::size_t split = std::string::npos;
      int d = 0;
      for (std::size_t i = 0; i < term.size(); ++i) {
        if (term[i] == '(') ++d;
        if (term[i] == ')') --d;
        if (term[i] == '*' && d == 0) split = i;
      }
      if (split != std::string::npos && a.basis_index(trim(term.substr(split + 1)))) {
        coeff_text = trim(term.substr(0, split));
        label = trim(term.substr(split + 1));
      } else {
        coeff_text = term;
        label.clear();
      }
    }
    Scalar c = coeff_text.empty() ? a.field.one() : a.field.parse_scalar(coeff_text);
    if (neg) c = -c;
    if (label.empty()) {
      axpy(out, c, a.unit);
    } else {
      out[*a.basis_index(label)] += c;
    }
  }
  return out;
}

Json report_to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj{{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) cj["witness"] = c.witness;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  return Json{{"ok", r.ok()}, {"checks", std::move(checks)}};
}

Json tristate_to_json(const FieldSpec& f, const TriState& t) {
  Json j{{"verdict", verdict_name(t.verdict)}, {"reason", t.reason}};
  if (t.witness) {
    Json w{{"relation", t.witness->relation}, {"beta", f.format(t.witness->beta)}};
    if (t.witness->alpha) w["alpha"] = f.format(*t.witness->alpha);
    if (t.witness->u) w["u"] = matrix_to_json(*t.witness->u);
    j["witness"] = std::move(w);
  }
  if (t.iso) j["iso_verified"] = t.iso_verified;
  return j;
}

Json aut_to_json(const FieldSpec& f, const AutDescription& d) {
  Json j{{"condition", d.condition}};
  if (d.order) j["order"] = *d.order;
  Json els = Json::array();
  for (const auto& e : d.elements) {
    Json ej{{"beta", f.format(e.beta)}, {"verified", e.verified}};
    if (e.alpha) ej["alpha"] = f.format(*e.alpha);
    els.push_back(std::move(ej));
  }
  j["elements"] = std::move(els);
  j["all_verified"] = d.all_verified;
  return j;
}

Json classification_to_json(const HopfAlgebra& a, const ClassificationReport& r) {
  const FieldSpec& f = a.field;
  Json j;
  j["algebra"] = r.algebra;
  j["field"] = f.to_string();
  Json zb = Json::array();
  for (const auto& v : r.zp_basis) zb.push_back(a.format(v));
  j["zp_basis"] = std::move(zb);
  j["h2"] = {{"description", r.h2_description}};
  if (r.h2_points) {
    Json pts = Json::array();
    for (const auto& v : *r.h2_points) pts.push_back(a.format(v));
    j["h2"]["points"] = std::move(pts);
    j["h2"]["count"] = r.h2_points->size();
  }
  if (r.coboundaries_trivial) j["h2"]["coboundaries_trivial"] = *r.coboundaries_trivial;
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    Json members = Json::array();
    for (const auto& m : c.members) members.push_back(a.format(m));
    Json joins = Json::array();
    for (const auto& t : c.joins) joins.push_back(tristate_to_json(f, t));
    classes.push_back(Json{{"representative", a.format(c.representative)},
                           {"members", std::move(members)},
                           {"joins", std::move(joins)},
                           {"product_verified", c.product_verified},
                           {"automorphisms", aut_to_json(f, c.automorphisms)}});
  }
  j["crp_classes"] = std::move(classes);
  j["crp_count"] = r.classes.size();
  Json seps = Json::array();
  for (const auto& s : r.separations)
    seps.push_back(Json{{"classes", {s.first, s.second}}, {"decision", tristate_to_json(f, s.verdict)}});
  j["separations"] = std::move(seps);
  j["complete"] = r.complete;
  j["notes"] = r.notes;
  return j;
}

Json certificate_to_json(const H4Certificate& c) {
  Json j{{"action_forced_trivial", c.action_forced_trivial},
         {"freedom_after_linear", c.freedom_after_linear},
         {"freedom_after_coalgebra", c.freedom_after_coalgebra},
         {"freedom_final", c.freedom_final},
         {"linearizable", c.linearizable},
         {"matches_family", c.matches_family},
         {"derived", c.derived()},
         {"steps", c.steps}};
  if (c.exhaustive_stage) {
    j["exhaustive"] = {{"stage", *c.exhaustive_stage},
                       {"candidates", *c.exhaustive_candidates},
                       {"valid", *c.exhaustive_valid},
                       {"ok", c.exhaustive_ok}};
  }
  return j;
}

CrossedSystem crossed_from_json(const Json& j, const AlgebraResolver& resolve) {
  if (!j.is_object() || !j.contains("A") || !j.contains("H")) malformed("crossed system JSON needs \"A\" and \"H\"");
  try {
    CrossedSystem s{resolve(j.at("A").get<std::string>()), resolve(j.at("H").get<std::string>()), {}, {}};
    const HopfAlgebra& A = *s.A;
    const HopfAlgebra& H = *s.H;
    if (A.field != H.field) throw Error(Errc::FieldMismatch, "A and H live over different fields");
    auto table = [&](const char* key, std::size_t second, std::vector<Vec> trivial) {
      const Json& t = j.value(key, Json("trivial"));
      if (t.is_string()) {
        if (t.get<std::string>() != "trivial") malformed(std::string(key) + " must be \"trivial\" or a list");
        return trivial;
      }
      std::vector<Vec> out(H.dim * second, A.zero());
      for (const auto& row : t) {
        if (!row.is_array() || row.size() != 4) malformed(std::string(key) + " entries are [i, j, k, c]");
        const std::size_t h = index_at(row, 0, H.dim, key), x = index_at(row, 1, second, key),
                          k = index_at(row, 2, A.dim, key);
        out[h * second + x][k] += coeff_at(A.field, row[3]);
      }
      return out;
    };
    s.action = table("action", A.dim, trivial_action(A, H));
    s.cocycle = table("cocycle", H.dim, trivial_cocycle(A, H));
    s.validate_shape();
    return s;
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("crossed system JSON: ") + e.what());
  }
}

Json crossed_to_json(const CrossedSystem& s, const std::string& a_ref, const std::string& h_ref) {
  const FieldSpec& f = s.A->field;
  auto table = [&](const std::vector<Vec>& t, std::size_t second) {
    Json out = Json::array();
    for (std::size_t h = 0; h < s.H->dim; ++h)
      for (std::size_t x = 0; x < second; ++x)
        for (std::size_t k = 0; k < s.A->dim; ++k)
          if (!t[h * second + x][k].is_zero()) out.push_back(Json::array({h, x, k, f.format(t[h * second + x][k])}));
    return out;
  };
  return Json{{"A", a_ref}, {"H", h_ref}, {"action", table(s.action, s.A->dim)}, {"cocycle", table(s.cocycle, s.H->dim)}};
}

}  // namespace hopf

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>

#include "hopf/catalog.hpp"
#include "hopf/io.hpp"
#include "hopf/morphism.hpp"
#include "hopf/structure.hpp"

namespace hopf::cli {

namespace {

struct Common {
  std::string field = "q";
  bool field_given = false;
  bool json = false;
  bool skip_verify = false;
  unsigned jobs = 1;
  uint64_t budget = kDefaultBudget;
};

void add_common(CLI::App* cmd, Common& c, bool with_budget = false) {
  cmd->add_option("--field", c.field, "Field: q, fP or fP(V1,...,Vn)");
  cmd->add_flag("--json", c.json, "Print JSON instead of a table");
  cmd->add_flag("--skip-verify", c.skip_verify, "Do not verify resolved algebras");
  cmd->add_option("--jobs", c.jobs, "Worker threads for independent checks")->check(CLI::PositiveNumber);
  if (with_budget) cmd->add_option("--budget", c.budget, "Enumeration budget");
}

bool is_catalog(const std::string& ref) { return ref.rfind("catalog:", 0) == 0; }

FieldSpec field_of(const Common& c) { return FieldSpec::parse(c.field); }

/// Catalog names use --field; files carry their own field, which must agree
/// with an explicit --field.
AlgebraPtr resolve(const std::string& ref, const Common& c, bool verify = true) {
  AlgebraPtr a;
  if (is_catalog(ref)) {
    a = std::make_shared<const HopfAlgebra>(catalog_algebra(ref, field_of(c)));
  } else {
    a = std::make_shared<const HopfAlgebra>(algebra_from_json(read_json_file(ref)));
    if (c.field_given && a->field != field_of(c))
      throw Error(Errc::FieldMismatch, ref + " is over " + a->field.to_string() + ", not " + c.field);
  }
  if (verify && !c.skip_verify) {
    const VerificationReport r = verify_hopf(*a, c.jobs);
    if (!r.ok()) throw Error(Errc::MalformedData, ref + " is not a Hopf algebra: " + r.summary());
  }
  return a;
}

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void write_file(const std::string& path, const Json& j) {
  std::ofstream f(path);
  if (!f) throw Error(Errc::InvalidArgument, "cannot write " + path);
  f << j.dump(2) << '\n';
}

void print_report(std::ostream& out, const VerificationReport& r) {
  for (const auto& c : r.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed && !c.witness.empty()) {
      out << " at (";
      for (std::size_t i = 0; i < c.witness.size(); ++i) out << (i ? "," : "") << c.witness[i];
      out << ")";
    }
    if (!c.passed && !c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
}

int verdict_code(Verdict v) { return v == Verdict::Unknown ? kUndecided : kPass; }

void print_tristate(std::ostream& out, const FieldSpec& f, const TriState& t) {
  out << verdict_name(t.verdict);
  if (t.witness) {
    if (t.witness->alpha) out << " alpha=" << f.format(*t.witness->alpha);
    out << " beta=" << f.format(t.witness->beta);
  }
  if (!t.reason.empty()) out << " (" << t.reason << ")";
  out << '\n';
}

AutModel aut_model(const std::string& name, const AlgebraPtr& A, uint64_t budget) {
  if (name == "auto") return default_aut_model(A, budget);
  if (name == "full-units") return ScalingModel{ScalarGroup::FullUnits};
  if (name == "prime-subfield") return ScalingModel{ScalarGroup::PrimeSubfieldUnits};
  if (name == "search") return FiniteSearchModel{hopf_automorphisms(A, budget)};
  throw Error(Errc::InvalidArgument, "unknown automorphism model '" + name + "'");
}

/// "i:c,j:d" with c, d in the scalar grammar.
FinSuppSeq parse_sequence(const std::string& text, const FieldSpec& f) {
  FinSuppSeq s{f.characteristic(), {}};
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(pos, end - pos);
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos) throw Error(Errc::ParseError, "sequence entries are index:value, got '" + item + "'");
    unsigned idx = 0;
    try {
      idx = static_cast<unsigned>(std::stoul(item.substr(0, colon)));
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "bad sequence index in '" + item + "'");
    }
    s.entries.insert_or_assign(idx, f.parse_scalar(item.substr(colon + 1)));
    pos = end + 1;
  }
  return s;
}

// ---- verify -----------------------------------------------------------

struct VerifyArgs {
  Common c;
  std::string ref;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const AlgebraPtr h = resolve(a.ref, a.c, false);
  const VerificationReport r = verify_hopf(*h, a.c.jobs);
  if (a.c.json) {
    Json j = report_to_json(r);
    j["algebra"] = h->name;
    j["dim"] = h->dim;
    write_json(out, j);
  } else {
    out << h->name << " over " << h->field.to_string() << ", dim " << h->dim << '\n';
    print_report(out, r);
  }
  return r.ok() ? kPass : kFail;
}

// ---- classify ---------------------------------------------------------

struct ClassifyArgs {
  Common c;
  std::string ref;
  std::string model = "auto";
  std::vector<std::string> reps;
};

int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
  const AlgebraPtr A = resolve(a.ref, a.c);
  const AutModel model = aut_model(a.model, A, a.c.budget);
  std::optional<std::vector<Vec>> reps;
  if (!a.reps.empty()) {
    reps.emplace();
    for (const auto& r : a.reps) reps->push_back(parse_element(*A, r));
  }
  const ClassificationReport r = classification_report(A, model, reps, a.c.jobs, a.c.budget);
  bool unknown = false;
  for (const auto& cl : r.classes)
    for (const auto& j : cl.joins) unknown |= j.verdict == Verdict::Unknown;
  for (const auto& s : r.separations) unknown |= s.verdict.verdict == Verdict::Unknown;

  if (a.c.json) {
    write_json(out, classification_to_json(*A, r));
  } else {
    out << "H4-crossed products with coefficients in " << r.algebra << " over " << A->field.to_string() << '\n';
    out << "ZP basis:";
    for (const auto& v : r.zp_basis) out << ' ' << A->format(v);
    out << '\n' << "H^2: " << r.h2_description;
    if (r.h2_points) out << " (" << r.h2_points->size() << " points)";
    out << '\n' << "Crp classes: " << r.classes.size() << '\n';
    for (std::size_t i = 0; i < r.classes.size(); ++i) {
      const auto& cl = r.classes[i];
      out << "  [" << i << "] {";
      for (std::size_t m = 0; m < cl.members.size(); ++m) out << (m ? ", " : "") << A->format(cl.members[m]);
      out << "}";
      if (cl.automorphisms.order) out << " |Aut| = " << *cl.automorphisms.order;
      out << '\n';
    }
    for (const auto& s : r.separations) {
      out << "  [" << s.first << "] vs [" << s.second << "]: ";
      print_tristate(out, A->field, s.verdict);
    }
    for (const auto& n : r.notes) out << "note: " << n << '\n';
    out << (r.complete ? "complete" : "incomplete") << '\n';
  }
  return unknown || !r.complete ? kUndecided : kPass;
}

// ---- crossed ----------------------------------------------------------

struct CrossedArgs {
  Common c;
  std::string base;
  std::string param;
  std::string system;
  std::string out;
  bool force = false;
  bool allow_invalid = false;
};

CrossedSystem crossed_system_of(const CrossedArgs& a) {
  if (!a.system.empty()) {
    if (!a.base.empty() || !a.param.empty()) throw Error(Errc::InvalidArgument, "--system excludes --base/--param");
    const Json j = read_json_file(a.system);
    return crossed_from_json(j, [&](const std::string& ref) { return resolve(ref, a.c); });
  }
  if (a.base.empty() || a.param.empty())
    throw Error(Errc::InvalidArgument, "give --system FILE or both --base REF and --param ELEMENT");
  const AlgebraPtr A = resolve(a.base, a.c);
  return cocycle_from_param(H4CocycleParam::make(A, parse_element(*A, a.param)));
}

int cmd_crossed_check(const CrossedArgs& a, std::ostream& out) {
  const CrossedSystem s = crossed_system_of(a);
  const VerificationReport r = check_crossed_system(s, a.c.jobs);
  if (a.c.json) {
    write_json(out, report_to_json(r));
  } else {
    out << "crossed system " << s.A->name << " # " << s.H->name << '\n';
    print_report(out, r);
  }
  return r.ok() ? kPass : kFail;
}

int cmd_crossed_build(const CrossedArgs& a, std::ostream& out) {
  if (a.force && !a.allow_invalid)
    throw Error(Errc::InvalidArgument, "--force builds invalid products and needs --allow-invalid");
  const CrossedProduct p = [&] {
    if (a.system.empty() && !a.force) {
      const AlgebraPtr A = resolve(a.base, a.c);
      if (a.param.empty()) throw Error(Errc::InvalidArgument, "--base needs --param");
      return build_A_a(H4CocycleParam::make(A, parse_element(*A, a.param)));
    }
    return build_crossed_product(crossed_system_of(a), a.force, a.c.jobs);
  }();
  const Json j = algebra_to_json(*p.product);
  if (!a.out.empty()) {
    write_file(a.out, j);
    if (!a.c.json) out << "wrote " << p.product->name << " (dim " << p.product->dim << ") to " << a.out << '\n';
  } else {
    write_json(out, j);
  }
  return kPass;
}

// ---- aut --------------------------------------------------------------

struct AutArgs {
  Common c;
  std::string algebra;
  std::string param;
  std::string model = "auto";
};

int cmd_aut(const AutArgs& a, std::ostream& out) {
  const AlgebraPtr A = resolve(a.algebra, a.c);
  if (a.param.empty()) {
    const auto autos = hopf_automorphisms(A, a.c.budget);
    const VerificationReport group = check_automorphism_group(autos);
    if (a.c.json) {
      Json maps = Json::array();
      for (const auto& m : autos) maps.push_back(matrix_to_json(m.matrix));
      write_json(out, Json{{"algebra", A->name}, {"order", autos.size()}, {"group", report_to_json(group)},
                           {"automorphisms", std::move(maps)}});
    } else {
      out << "Aut_Hopf(" << A->name << ") over " << A->field.to_string() << ": order " << autos.size() << '\n';
      print_report(out, group);
    }
    return group.ok() ? kPass : kFail;
  }
  const Vec param = parse_element(*A, a.param);
  const AutDescription d = aut_group_A_a(A, param, aut_model(a.model, A, a.c.budget));
  if (a.c.json) {
    write_json(out, aut_to_json(A->field, d));
  } else {
    out << "Aut(" << A->name << "_(" << A->format(param) << ")) = {(u, beta) : " << d.condition << "}\n";
    if (d.order) out << "order " << *d.order << '\n';
    for (const auto& e : d.elements) {
      out << "  beta=" << A->field.format(e.beta);
      if (e.alpha) out << " alpha=" << A->field.format(*e.alpha);
      out << (e.verified ? " verified" : " unverified") << '\n';
    }
  }
  return d.order && !d.all_verified ? kFail : kPass;
}

// ---- equiv ------------------------------------------------------------

struct EquivArgs {
  Common c;
  std::string q, qprime, scalars = "full";
  std::string s, t;
};

int cmd_equiv(const EquivArgs& a, std::ostream& out) {
  const FieldSpec f = field_of(a.c);
  TriState t;
  const bool scalar_mode = !a.q.empty() || !a.qprime.empty();
  const bool seq_mode = !a.s.empty() || !a.t.empty();
  if (scalar_mode == seq_mode) throw Error(Errc::InvalidArgument, "give either --q/--qprime or --s/--t");
  if (scalar_mode) {
    if (a.q.empty() || a.qprime.empty()) throw Error(Errc::InvalidArgument, "--q and --qprime go together");
    ScalarGroup g;
    if (a.scalars == "full") g = ScalarGroup::FullUnits;
    else if (a.scalars == "prime-subfield") g = ScalarGroup::PrimeSubfieldUnits;
    else throw Error(Errc::InvalidArgument, "--scalars is full or prime-subfield");
    t = decide_orbit(f.parse_scalar(a.q), f.parse_scalar(a.qprime), g, f);
  } else {
    t = decide_seq_equiv(parse_sequence(a.s, f), parse_sequence(a.t, f), f);
  }
  if (a.c.json) write_json(out, tristate_to_json(f, t));
  else print_tristate(out, f, t);
  return verdict_code(t.verdict);
}

// ---- morphism ---------------------------------------------------------

struct MorphismArgs {
  Common c;
  std::string source, target, map;
  std::string base, src_param, dst_param;
};

LinearMap map_from(const Json& j, const AlgebraPtr& s, const AlgebraPtr& t) {
  return LinearMap(s, t, matrix_from_json(s->field, j, t->dim, s->dim));
}

int cmd_morphism_check(const MorphismArgs& a, std::ostream& out) {
  const Json m = read_json_file(a.map);
  if (m.is_array()) {
    if (a.source.empty() || a.target.empty()) throw Error(Errc::InvalidArgument, "a matrix needs --source and --target");
    const LinearMap f = map_from(m, resolve(a.source, a.c), resolve(a.target, a.c));
    const MapProperties p = check_map_properties(f);
    const bool hopf = p.hopf;
    const Json j{{"unitary", p.unitary},     {"counital", p.counital},
                 {"comultiplicative", p.comultiplicative}, {"coalgebra_map", p.coalgebra},
                 {"algebra_map", p.algebra}, {"antipode_compatible", p.antipode_compatible},
                 {"hopf_map", hopf}};
    if (a.c.json) {
      write_json(out, j);
    } else {
      for (const auto& [k, val] : j.items()) out << k << ' ' << (val.get<bool>() ? "yes" : "no") << '\n';
    }
    return hopf ? kPass : kFail;
  }
  if (!m.is_object()) throw Error(Errc::MalformedData, "map file holds a matrix or an object keyed u, p, r, v");
  if (a.base.empty() || a.src_param.empty() || a.dst_param.empty())
    throw Error(Errc::InvalidArgument, "quadruples and triples need --base, --src-param and --dst-param");
  const AlgebraPtr A = resolve(a.base, a.c);
  const CrossedProduct src = build_A_a(H4CocycleParam::make(A, parse_element(*A, a.src_param)));
  const CrossedProduct dst = build_A_a(H4CocycleParam::make(A, parse_element(*A, a.dst_param)));
  const AlgebraPtr& H = src.system.H;
  if (!m.contains("u") || !m.contains("r") || !m.contains("v")) throw Error(Errc::MalformedData, "missing u, r or v");
  const LinearMap u = map_from(m.at("u"), A, A);
  const LinearMap r = map_from(m.at("r"), H, A);
  const LinearMap v = map_from(m.at("v"), H, H);
  Json j;
  bool hopf = false;
  if (m.contains("p")) {
    const QuadrupleResult q = quadruple_to_map(u, map_from(m.at("p"), A, H), r, v, src, dst);
    hopf = q.hopf;
    j = Json{{"kind", "quadruple"}, {"checks", report_to_json(q.report)}, {"hopf_map", q.hopf},
             {"agrees", q.agrees}, {"psi", matrix_to_json(q.psi.matrix)}};
  } else {
    const TripleResult t = triple_to_map(u, r, v, src, dst);
    hopf = t.hopf;
    j = Json{{"kind", "triple"}, {"checks", report_to_json(t.report)}, {"hopf_map", t.hopf},
             {"iso", t.iso_by_matrix}, {"inverse_verified", t.inverse_verified},
             {"warnings", t.warnings}, {"psi", matrix_to_json(t.psi.matrix)}};
    if (t.hopf) {
      const Stabilization st = stabilization_check(t.psi, src, dst);
      j["stabilizes_A"] = st.stabilizes_A;
      j["costabilizes_H"] = st.costabilizes_H;
    }
  }
  if (a.c.json) {
    write_json(out, j);
  } else {
    out << j.at("kind").get<std::string>() << " -> psi: " << src.product->name << " -> " << dst.product->name << '\n';
    for (const auto& c : j.at("checks").at("checks"))
      out << (c.at("passed").get<bool>() ? "PASS " : "FAIL ") << c.at("name").get<std::string>() << '\n';
    out << "Hopf map " << hopf << '\n';
    if (j.contains("iso")) out << "isomorphism " << j.at("iso").get<bool>() << '\n';
    if (j.contains("stabilizes_A"))
      out << "stabilizes A " << j.at("stabilizes_A").get<bool>() << ", co-stabilizes H "
          << j.at("costabilizes_H").get<bool>() << '\n';
  }
  return hopf ? kPass : kFail;
}

// ---- export / perturb -------------------------------------------------

struct ExportArgs {
  Common c;
  std::string ref, out;
};

int cmd_export(const ExportArgs& a, std::ostream& out) {
  const Json j = algebra_to_json(*resolve(a.ref, a.c));
  if (a.out.empty()) write_json(out, j);
  else write_file(a.out, j);
  return kPass;
}

struct PerturbArgs {
  Common c;
  std::string ref, out, table = "mult";
  std::size_t i = 0, j = 0, k = 0;
  std::string delta = "1";
};

/// Adds delta to one structure constant; the result is a fixture for
/// negative verification runs.
int cmd_perturb(const PerturbArgs& a, std::ostream& out) {
  HopfAlgebra h = *resolve(a.ref, a.c, false);
  const Scalar d = h.field.parse_scalar(a.delta);
  auto need = [&](std::size_t x) {
    if (x >= h.dim) throw Error(Errc::InvalidArgument, "index " + std::to_string(x) + " out of range");
  };
  need(a.i);
  need(a.j);
  need(a.k);
  if (a.table == "mult") {
    h.mult[a.i * h.dim + a.j][a.k] += d;
  } else if (a.table == "comult") {
    h.comult[a.i].push_back(CoproductTerm{a.j, a.k, d});
  } else if (a.table == "antipode") {
    h.antipode(a.j, a.i) += d;
  } else if (a.table == "counit") {
    h.counit[a.i] += d;
  } else if (a.table == "unit") {
    h.unit[a.i] += d;
  } else {
    throw Error(Errc::InvalidArgument, "--table is mult, comult, antipode, unit or counit");
  }
  h.name += "~perturbed";
  const Json j = algebra_to_json(h);
  if (a.out.empty()) write_json(out, j);
  else write_file(a.out, j);
  return kPass;
}

int exit_code_for(Errc e) {
  switch (e) {
    case Errc::BudgetExceeded:
      return kUndecided;
    case Errc::InvalidSystem:
      return kFail;
    default:
      return kInputError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction and classification of Hopf crossed products", "hopf"};
  app.require_subcommand(1);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check the Hopf algebra axioms");
  v->add_option("algebra", verify.ref, "catalog:NAME or an algebra JSON file")->required();
  add_common(v, verify.c);

  ClassifyArgs classify;
  auto* cl = app.add_subcommand("classify", "Classify crossed products H4 # A");
  cl->add_option("algebra", classify.ref, "Coefficient algebra A")->required();
  cl->add_option("--aut-model", classify.model, "auto, full-units, prime-subfield or search");
  cl->add_option("--reps", classify.reps, "Representatives in ZP(A), separated by ';'")->delimiter(';');
  add_common(cl, classify.c, true);

  CrossedArgs build, check;
  auto* cr = app.add_subcommand("crossed", "Build or check crossed systems");
  cr->require_subcommand(1);
  auto* cb = cr->add_subcommand("build", "Write the crossed product as algebra JSON");
  auto* cc = cr->add_subcommand("check", "Check the crossed system axioms");
  for (auto [cmd, args] : {std::pair{cb, &build}, std::pair{cc, &check}}) {
    cmd->add_option("--base", args->base, "Coefficient algebra A for the H4 family");
    cmd->add_option("--param", args->param, "Central primitive a in A");
    cmd->add_option("--system", args->system, "Crossed system JSON");
    add_common(cmd, args->c);
  }
  cb->add_option("--out", build.out, "Output file");
  cb->add_flag("--force", build.force, "Build without checking the axioms");
  cb->add_flag("--allow-invalid", build.allow_invalid, "Opt in to --force");

  AutArgs aut;
  auto* au = app.add_subcommand("aut", "Hopf automorphisms");
  au->add_option("--algebra", aut.algebra, "Algebra (or coefficient algebra A with --param)")->required();
  au->add_option("--param", aut.param, "Describe Aut(A_(a)) instead");
  au->add_option("--aut-model", aut.model, "auto, full-units, prime-subfield or search");
  add_common(au, aut.c, true);

  EquivArgs equiv;
  auto* eq = app.add_subcommand("equiv", "Decide alpha q = beta^2 q' or sequence equivalence");
  eq->add_option("--q", equiv.q);
  eq->add_option("--qprime", equiv.qprime);
  eq->add_option("--scalars", equiv.scalars, "full or prime-subfield");
  eq->add_option("--s", equiv.s, "Sequence i:c,j:d,...");
  eq->add_option("--t", equiv.t, "Sequence i:c,j:d,...");
  add_common(eq, equiv.c);

  MorphismArgs morph;
  auto* mo = app.add_subcommand("morphism", "Check maps between Hopf algebras");
  mo->require_subcommand(1);
  auto* mc = mo->add_subcommand("check", "Check a matrix, quadruple or triple");
  mc->add_option("--map", morph.map, "JSON matrix or object keyed u, p, r, v")->required();
  mc->add_option("--source", morph.source);
  mc->add_option("--target", morph.target);
  mc->add_option("--base", morph.base, "A for maps A_(a) -> A_(b)");
  mc->add_option("--src-param", morph.src_param);
  mc->add_option("--dst-param", morph.dst_param);
  add_common(mc, morph.c);

  ExportArgs exp;
  auto* ex = app.add_subcommand("export", "Write an algebra as JSON");
  ex->add_option("algebra", exp.ref)->required();
  ex->add_option("--out", exp.out);
  add_common(ex, exp.c);

  PerturbArgs pert;
  auto* pe = app.add_subcommand("perturb", "Write a copy with one structure constant changed");
  pe->add_option("algebra", pert.ref)->required();
  pe->add_option("--table", pert.table, "mult, comult, antipode, unit or counit");
  pe->add_option("--i", pert.i);
  pe->add_option("--j", pert.j);
  pe->add_option("--k", pert.k);
  pe->add_option("--delta", pert.delta);
  pe->add_option("--out", pert.out);
  add_common(pe, pert.c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  auto mark_field = [](CLI::App* cmd, Common& c) { c.field_given = cmd->count("--field") > 0; };
  try {
    if (*v) {
      mark_field(v, verify.c);
      return cmd_verify(verify, out);
    }
    if (*cl) {
      mark_field(cl, classify.c);
      return cmd_classify(classify, out);
    }
    if (*cb) {
      mark_field(cb, build.c);
      return cmd_crossed_build(build, out);
    }
    if (*cc) {
      mark_field(cc, check.c);
      return cmd_crossed_check(check, out);
    }
    if (*au) {
      mark_field(au, aut.c);
      return cmd_aut(aut, out);
    }
    if (*eq) return cmd_equiv(equiv, out);
    if (*mc) {
      mark_field(mc, morph.c);
      return cmd_morphism_check(morph, out);
    }
    if (*ex) {
      mark_field(ex, exp.c);
      return cmd_export(exp, out);
    }
    if (*pe) {
      mark_field(pe, pert.c);
      return cmd_perturb(pert, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kInputError;
}

}  // namespace hopf::cli

#pragma once

#include <map>
#include <variant>

#include "hopf/morphism.hpp"

namespace hopf {

/// Sweedler's algebra over `field`; basis 1, g, x, gx.
AlgebraPtr sweedler4_ptr(const FieldSpec& field);

/// A central primitive element a of A, parameterizing the cocycle f_a.
struct H4CocycleParam {
  AlgebraPtr A;
  Vec a;

  /// Throws NotCentralPrimitive unless a lies in P(A) and Z(A).
  static H4CocycleParam make(AlgebraPtr A, Vec a);
};

/// Trivial action and the cocycle f_a: the normalized values on {1, g},
/// f(x, x) = f(gx, x) = a, f(x, gx) = f(gx, gx) = -a, zero elsewhere.
CrossedSystem cocycle_from_param(const H4CocycleParam& param);

struct H4Certificate {
  bool action_forced_trivial = false;
  std::size_t freedom_after_linear = 0;     // normalization, symmetry, counit, centrality
  std::size_t freedom_after_coalgebra = 0;  // f a coalgebra map
  std::size_t freedom_final = 0;            // cocycle condition
  bool linearizable = false;                // quadratic axioms had vanishing bilinear parts
  bool matches_family = false;              // the final space is {f_a : a in zp(A)}
  std::optional<std::string> exhaustive_stage;
  std::optional<uint64_t> exhaustive_candidates;
  std::optional<uint64_t> exhaustive_valid;
  bool exhaustive_ok = false;
  std::vector<std::string> steps;

  bool derived() const { return action_forced_trivial && linearizable && matches_family; }
};

struct H4Enumeration {
  std::vector<Vec> zp_basis;
  /// Every member over a prime field (within budget), else 0 and the basis.
  std::vector<H4CocycleParam> family;
  H4Certificate certificate;
};

/// All crossed systems (A, H4, |>, f) with a certificate that re-derives the
/// family from the axioms. With `exhaustive` over a prime field, the space
/// left by the linear constraints is also enumerated point by point.
H4Enumeration enumerate_h4_systems(const AlgebraPtr& A, bool exhaustive = true, uint64_t budget = kDefaultBudget);

/// The crossed product A_(a). Its presentation uses g and x, with
/// words x^(2i) g^j x^k when a is a nonzero multiple of A's only generator.
/// Throws InvalidSystem if a defining relation or structure value fails.
CrossedProduct build_A_a(const H4CocycleParam& param);

enum class ScalarGroup { FullUnits, PrimeSubfieldUnits };

/// u_alpha(y^j) = alpha^j y^j, alpha in k* or in F_p*.
struct ScalingModel {
  ScalarGroup group;
};

/// An explicit list of Hopf automorphisms.
struct FiniteSearchModel {
  std::vector<LinearMap> automorphisms;
};

using AutModel = std::variant<ScalingModel, FiniteSearchModel>;

/// line0:p -> full units, line1:p -> prime subfield units, anything else over
/// a prime field -> generator search, ZP(A) = 0 -> nothing to search.
/// Throws UnknownModel otherwise.
AutModel default_aut_model(const AlgebraPtr& A, uint64_t budget = kDefaultBudget);

/// u_alpha for a single-generator presentation. Throws UnknownModel.
LinearMap scaling_automorphism(const AlgebraPtr& A, const Scalar& alpha);

enum class Verdict { Equivalent, NotEquivalent, Unknown };

const char* verdict_name(Verdict v);

struct OrbitWitness {
  std::optional<Scalar> alpha;
  Scalar beta;
  std::optional<Matrix> u;
  std::string relation;
};

struct TriState {
  Verdict verdict = Verdict::Unknown;
  std::optional<OrbitWitness> witness;
  std::string reason;
  std::optional<LinearMap> iso;  // psi_{u,beta}: A_(a) -> A_(b)
  bool iso_verified = false;

  static TriState equivalent(OrbitWitness w, std::string reason = {});
  static TriState not_equivalent(std::string reason);
  static TriState unknown(std::string reason);
};

/// Decides A_(a) ~ A_(b) through u(a) = beta^2 b with u from the model.
/// Requires A generated by primitives unless a == b; otherwise throws
/// PreconditionViolated.
TriState iso_test_A_a(const AlgebraPtr& A, const Vec& a, const Vec& b, const AutModel& model);

struct AutElement {
  std::optional<Scalar> alpha;
  Scalar beta;
  LinearMap u;
  LinearMap psi;
  bool verified = false;
};

struct AutDescription {
  std::string condition;
  std::optional<uint64_t> order;  // enumerated over prime fields
  std::vector<AutElement> elements;
  bool all_verified = false;
};

/// G(a) = {(u, beta) : u(a) = beta^2 a}, isomorphic to Aut(A_(a)).
AutDescription aut_group_A_a(const AlgebraPtr& A, const Vec& a, const AutModel& model);

/// alpha q = beta^2 q' with alpha from the given subgroup.
TriState decide_orbit(const Scalar& q, const Scalar& qprime, ScalarGroup group, const FieldSpec& field);

struct FinSuppSeq {
  uint32_t p = 0;
  std::map<unsigned, Scalar> entries;
};

/// alpha^(p^i) s_i = beta^2 t_i for all i, alpha, beta in k*.
TriState decide_seq_equiv(const FinSuppSeq& s, const FinSuppSeq& t, const FieldSpec& field);

struct CrpClass {
  Vec representative;
  std::vector<Vec> members;
  std::vector<TriState> joins;  // one per non-representative member
  AutDescription automorphisms;
  bool product_verified = false;
};

struct Separation {
  std::size_t first;
  std::size_t second;
  TriState verdict;
};

struct ClassificationReport {
  std::string algebra;
  std::vector<Vec> zp_basis;
  std::optional<std::vector<Vec>> h2_points;  // listed over prime fields
  std::string h2_description;
  std::optional<bool> coboundaries_trivial;   // cocentral_maps(H4, A) is {trivial}
  std::vector<CrpClass> classes;
  std::vector<Separation> separations;       // between class representatives
  bool complete = true;                       // no Unknown left
  std::vector<std::string> notes;
};

/// H^2 and Crp for H4 with coefficients in A. Candidates are `reps` when
/// given, every zp point over a prime field, and 0 plus the zp basis
/// otherwise. Per-representative work runs on `jobs` threads.
ClassificationReport classification_report(const AlgebraPtr& A, const AutModel& model,
                                           const std::optional<std::vector<Vec>>& reps = std::nullopt,
                                           unsigned jobs = 1, uint64_t budget = kDefaultBudget);

}  // namespace hopf

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopf/linalg.hpp"

namespace hopf {

struct CoproductTerm {
  std::size_t left;
  std::size_t right;
  Scalar coeff;
};

enum class GeneratorKind { GroupLike, Primitive, SkewPrimitive };

/// A generator of the algebra together with its coalgebra type. For
/// skew-primitives, Delta(x) = x (x) g_right + g_left (x) x where the group-likes
/// are other generators (by position in the generator list) or 1 when absent.
struct Generator {
  std::size_t basis_index;
  GeneratorKind kind;
  std::optional<std::size_t> right_group_like;
  std::optional<std::size_t> left_group_like;
};

/// Generators plus, for every basis element, a word in the generators
/// (positions into `generators`). Evaluated words must form a basis.
struct Presentation {
  std::vector<Generator> generators;
  std::vector<std::vector<std::size_t>> words;
};

/// A finite-dimensional Hopf algebra given by structure constants.
struct HopfAlgebra {
  std::string name;
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::vector<Vec> mult;  // mult[i * dim + j] = e_i e_j
  Vec unit;
  std::vector<std::vector<CoproductTerm>> comult;
  Vec counit;
  Matrix antipode;
  std::optional<Presentation> presentation;
  // Group-likes known by construction; used where brute force is impossible.
  std::optional<std::vector<Vec>> known_group_likes;

  HopfAlgebra(std::string name, FieldSpec field, std::size_t dim);

  /// Throws MalformedData on shape or field inconsistencies.
  void validate_shape() const;

  Vec zero() const { return zeros(field, dim); }
  Vec one() const { return unit; }
  Vec e(std::size_t i) const { return unit_vector(field, dim, i); }

  const Vec& product(std::size_t i, std::size_t j) const { return mult[i * dim + j]; }
  Vec multiply(const Vec& a, const Vec& b) const;
  Vec power(const Vec& a, unsigned n) const;
  Vec commutator(const Vec& a, const Vec& b) const;
  /// Delta(v) as a dense element of A (x) A, index i * dim + j.
  Vec coproduct(const Vec& v) const;
  Scalar apply_counit(const Vec& v) const;
  Vec apply_antipode(const Vec& v) const;

  std::optional<std::size_t> basis_index(const std::string& label) const;
  std::string format(const Vec& v) const;
};

using AlgebraPtr = std::shared_ptr<const HopfAlgebra>;

// ---------------------------------------------------------------------------
// Sweedler expansions through structure constants.

struct SweedlerTerm {
  std::vector<std::size_t> idx;
  Scalar coeff;
};

/// (n-1)-fold iterated coproduct of v as a sparse list of basis n-tuples,
/// lexicographically ordered with equal tuples merged. n = 1 returns the
/// nonzero coordinates of v.
std::vector<SweedlerTerm> sweedler(const HopfAlgebra& a, const Vec& v, std::size_t n);
std::vector<SweedlerTerm> sweedler_basis(const HopfAlgebra& a, std::size_t i, std::size_t n);

/// Dense tensor helpers: elements of V (x) W live in vectors of size dimV*dimW.
Vec tensor(const Vec& a, const Vec& b);

// ---------------------------------------------------------------------------
// Verification reports.

struct CheckResult {
  std::string name;
  bool passed = true;
  std::vector<std::size_t> witness;  // first failing basis tuple
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  const CheckResult* find(const std::string& name) const;
  std::vector<std::string> failed() const;
  void add(CheckResult c) { checks.push_back(std::move(c)); }
  void append(const VerificationReport& other);
  std::string summary() const;
};

/// Runs independent checks, concurrently when jobs > 1, keeping list order.
VerificationReport run_checks(const std::vector<std::function<CheckResult()>>& checks, unsigned jobs);

/// Runs every Hopf algebra axiom on basis tuples. Checks may run in parallel
/// (jobs > 1); the report order is fixed.
VerificationReport verify_hopf(const HopfAlgebra& h, unsigned jobs = 1);

/// Tensor product Hopf algebra A (x) B, basis e_i (x) f_j at index i * dimB + j.
HopfAlgebra tensor_hopf(const HopfAlgebra& a, const HopfAlgebra& b);

// ---------------------------------------------------------------------------
// Linear maps between based algebras.

struct MapProperties {
  bool unitary = false;
  bool counital = false;
  bool comultiplicative = false;
  bool coalgebra = false;
  bool algebra = false;
  bool antipode_compatible = false;
  bool hopf = false;
};

struct LinearMap {
  AlgebraPtr source;
  AlgebraPtr target;
  Matrix matrix;  // target.dim x source.dim
  std::optional<MapProperties> flags;

  LinearMap(AlgebraPtr src, AlgebraPtr tgt, Matrix m);

  Vec apply(const Vec& v) const { return matrix * v; }
  Vec image(std::size_t i) const { return matrix.column(i); }
};

LinearMap identity_map(const AlgebraPtr& a);
/// h |-> eps(h) 1_A
LinearMap unit_counit_map(const AlgebraPtr& source, const AlgebraPtr& target);
/// f o g
LinearMap compose(const LinearMap& f, const LinearMap& g);
/// (f * g)(c) = f(c_(1)) g(c_(2)) for f, g : C -> A.
LinearMap convolution(const LinearMap& f, const LinearMap& g);

MapProperties check_map_properties(const LinearMap& f);
LinearMap with_flags(LinearMap f);

bool is_coalgebra_map(const LinearMap& f);
bool is_unitary(const LinearMap& f);
bool is_algebra_map(const LinearMap& f);
bool is_hopf_map(const LinearMap& f);

}  // namespace hopf

#pragma once

#include <cstdint>
#include <functional>

#include "hopf/algebra.hpp"

namespace hopf {

inline constexpr uint64_t kDefaultBudget = 1'000'000;

enum class SubspaceKind { Primitives, SkewPrimitives, Center, CentralPrimitives, Coinvariants };

struct ElementSubspace {
  std::string algebra;
  SubspaceKind kind;
  std::vector<Vec> basis;

  std::size_t dim() const { return basis.size(); }
  bool contains(const Vec& v, const FieldSpec& field) const;
};

/// x with Delta(x) = x (x) g + h (x) x. Throws NotGroupLike unless g, h are.
ElementSubspace skew_primitives(const HopfAlgebra& a, const Vec& g, const Vec& h);
ElementSubspace primitives(const HopfAlgebra& a);
ElementSubspace center(const HopfAlgebra& a);
/// P(A) intersected with Z(A), solved as one joint system.
ElementSubspace zp(const HopfAlgebra& a);

bool is_group_like(const HopfAlgebra& a, const Vec& c);

/// True when 1 and P(A) generate A as an algebra.
bool primitively_generated(const HopfAlgebra& a);

/// p^n with saturation at UINT64_MAX.
uint64_t candidate_count(uint64_t p, std::size_t n);

/// Visits particular + sum t_k kernel_k for all t in F_p^d in lexicographic
/// order of t. Throws WrongField over infinite fields when d > 0 and
/// BudgetExceeded when p^d > budget. The visitor returns false to stop.
void for_each_affine_point(const Vec& particular, const std::vector<Vec>& kernel, const FieldSpec& field,
                           uint64_t budget, const std::function<bool(const Vec&)>& visit);

/// All group-likes of A by exhaustive scan, in lexicographic coefficient
/// order. Prime fields only (WrongField otherwise); BudgetExceeded when
/// p^dim > budget. Candidates are split across `jobs` threads.
std::vector<Vec> group_likes_bruteforce(const HopfAlgebra& a, uint64_t budget = kDefaultBudget, unsigned jobs = 1);

/// The cocentral condition r(h1) (x) h2 = r(h2) (x) h1 alone.
bool is_cocentral(const LinearMap& r);

/// All unitary cocentral coalgebra maps H -> A. Linear constraints are
/// solved first; the residual affine space is enumerated over F_p.
std::vector<LinearMap> cocentral_maps(const AlgebraPtr& h, const AlgebraPtr& a, uint64_t budget = kDefaultBudget);

/// Checks that `maps` is a group under convolution: contains the unit
/// h -> eps(h)1, is closed under products, and r * (S_A o r) is the unit.
VerificationReport check_convolution_group(const std::vector<LinearMap>& maps);

}  // namespace hopf

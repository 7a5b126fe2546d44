#pragma once

#include "hopf/structure.hpp"

namespace hopf {

/// A candidate crossed system (A, H, action, cocycle) given by structure
/// constants: action[h * dimA + a] = e_h |> e_a and
/// cocycle[h * dimH + g] = f(e_h, e_g), both vectors in A.
struct CrossedSystem {
  AlgebraPtr A;
  AlgebraPtr H;
  std::vector<Vec> action;
  std::vector<Vec> cocycle;

  const Vec& act_basis(std::size_t h, std::size_t a) const { return action[h * A->dim + a]; }
  const Vec& f_basis(std::size_t h, std::size_t g) const { return cocycle[h * H->dim + g]; }
  Vec act(const Vec& h, const Vec& a) const;
  Vec f(const Vec& h, const Vec& g) const;

  /// Throws MalformedData on shape or field inconsistencies.
  void validate_shape() const;
};

/// h |> a = eps(h) a
std::vector<Vec> trivial_action(const HopfAlgebra& a, const HopfAlgebra& h);
/// f(h, g) = eps(h) eps(g) 1
std::vector<Vec> trivial_cocycle(const HopfAlgebra& a, const HopfAlgebra& h);
CrossedSystem trivial_system(const AlgebraPtr& a, const AlgebraPtr& h);

bool operator==(const CrossedSystem& x, const CrossedSystem& y);

/// Named checks: action_unit, action_multiplicative, action_coalgebra,
/// cocycle_coalgebra, cocycle_normalized, twisted_module, cocycle_condition,
/// action_symmetry, cocycle_symmetry.
VerificationReport check_crossed_system(const CrossedSystem& sys, unsigned jobs = 1);

struct CrossedProduct {
  AlgebraPtr product;  // basis a#h at index a * dimH + h
  CrossedSystem system;
  LinearMap i_A;   // a -> a#1
  LinearMap i_H;   // h -> 1#h
  LinearMap pi_H;  // a#h -> eps(a) h
};

/// Builds A #_f H with the twisted product and its antipode formula. Throws
/// InvalidSystem (with the failing checks) unless `force` is set.
CrossedProduct build_crossed_product(const CrossedSystem& sys, bool force = false, unsigned jobs = 1);

/// {x : x1 (x) pi(x2) = x (x) 1}, solved linearly. Throws NotHopfMap.
ElementSubspace coinvariants(const HopfAlgebra& e, const LinearMap& pi);

/// Hopf subalgebra of E spanned by `basis`, with induced structure constants.
/// Throws PreconditionViolated if the span is not closed.
HopfAlgebra induced_subalgebra(const HopfAlgebra& e, const std::vector<Vec>& basis, const std::string& name);

struct Extraction {
  AlgebraPtr A;                 // E^co(H) with the chosen basis
  std::vector<Vec> embedding;   // basis of A as vectors of E
  CrossedSystem system;
  CrossedProduct product;
  LinearMap iso;                // a#h -> a phi(h), product -> E
};

/// Recovers a crossed system from a coalgebra split extension (E, pi) with a
/// coalgebra section phi. phi is normalized by phi(1)^-1 when needed. The
/// coinvariant basis defaults to the echelon basis of coinvariants(E, pi).
Extraction extract_from_splitting(const AlgebraPtr& e, const LinearMap& pi, const LinearMap& phi,
                                  const std::optional<std::vector<Vec>>& a_basis = std::nullopt);

struct CohomologousResult {
  CrossedSystem system;
  CrossedProduct source;  // built from the new system
  CrossedProduct target;  // built from the input system
  LinearMap iso;          // a#h -> a r(h1) # h2, stabilizing and co-stabilizing
};

/// Twists (action, f) by a unitary cocentral coalgebra map r: H -> A.
CohomologousResult cohomologous_transform(const CrossedSystem& sys, const LinearMap& r);

struct ImplicationReport {
  VerificationReport hopf;    // verify_hopf on the blindly built product
  VerificationReport axioms;  // check_crossed_system
  bool implication_holds = true;  // hopf ok implies axioms ok
};

ImplicationReport hopf_structure_implies_axioms(const AlgebraPtr& a, const AlgebraPtr& h, std::vector<Vec> action,
                                                std::vector<Vec> cocycle);

}  // namespace hopf

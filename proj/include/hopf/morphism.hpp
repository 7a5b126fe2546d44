#pragma once

#include "hopf/crossed.hpp"

namespace hopf {

struct QuadrupleResult {
  LinearMap psi;
  VerificationReport report;  // preconditions, then CP1..CP7
  bool in_domain = false;     // p Hopf; u, r, v unitary coalgebra maps
  bool hopf = false;          // is_hopf_map(psi)
  /// report.ok() == hopf, required only in the domain: outside it psi may
  /// still be a Hopf map, belonging to a different quadruple.
  bool agrees = false;
};

/// psi(a#h) = u(a1) (p(a2) |>' r(h1)) f'(p(a3), v(h2)) #' p(a4) v(h3) for
/// u: A -> A', p: A -> H', r: H -> A', v: H -> H'.
QuadrupleResult quadruple_to_map(const LinearMap& u, const LinearMap& p, const LinearMap& r, const LinearMap& v,
                                 const CrossedProduct& src, const CrossedProduct& dst);

struct TripleResult {
  LinearMap psi;
  VerificationReport report;  // preconditions, then cc1t..cc3t
  bool in_domain = false;     // u, v Hopf; r unitary coalgebra map
  bool hopf = false;
  bool iso_by_factors = false;  // u and v invertible
  bool iso_by_matrix = false;   // psi invertible
  std::optional<LinearMap> inverse;  // explicit inverse formula, when u, v invert
  bool inverse_verified = false;
  std::vector<std::string> warnings;
};

/// psi(a#h) = u(a) r(h1) #' v(h2) between products over the same A and H.
/// The inverse is u^-1(a) (u^-1 S r v^-1)(h1) # v^-1(h2).
TripleResult triple_to_map(const LinearMap& u, const LinearMap& r, const LinearMap& v, const CrossedProduct& src,
                           const CrossedProduct& dst);

struct Stabilization {
  bool stabilizes_A = false;   // psi o i_A = i_A'
  bool a_linear = false;       // psi(a x) = a psi(x)
  bool costabilizes_H = false; // pi_H' o psi = pi_H
  bool h_colinear = false;     // rho' o psi = (psi (x) id) o rho
  bool consistent() const { return stabilizes_A == a_linear && costabilizes_H == h_colinear; }
};

/// Throws NotHopfMap unless psi is a Hopf map between the two products.
Stabilization stabilization_check(const LinearMap& psi, const CrossedProduct& src, const CrossedProduct& dst);

struct Endomorphism {
  LinearMap map;
  bool automorphism = false;
};

using RelationCheck = std::function<bool(const HopfAlgebra&, const std::vector<Vec>& images)>;

/// All Hopf endomorphisms of A determined by images of the presentation's
/// generators. Group-like generators range over G(A); skew-primitive ones
/// over the matching P_{g,h}(A) for the chosen group-like images. Results
/// are in lexicographic candidate order.
std::vector<Endomorphism> endo_search_by_generators(const AlgebraPtr& a, uint64_t budget = kDefaultBudget,
                                                    const std::vector<RelationCheck>& relations = {});

/// Automorphisms only.
std::vector<LinearMap> hopf_automorphisms(const AlgebraPtr& a, uint64_t budget = kDefaultBudget);

/// Composition closure and inverses of a set of automorphisms.
VerificationReport check_automorphism_group(const std::vector<LinearMap>& autos);

/// v(g) = g, v(x) = beta x, v(gx) = beta gx on Sweedler's algebra.
LinearMap v_beta(const AlgebraPtr& h4, const Scalar& beta);

/// z#h -> u(z) # v_beta(h)
LinearMap psi_u_beta(const LinearMap& u, const Scalar& beta, const CrossedProduct& src, const CrossedProduct& dst);

}  // namespace hopf

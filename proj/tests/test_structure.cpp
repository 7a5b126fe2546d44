#include <random>

#include "doctest.h"
#include "hopf/structure.hpp"
#include "support.hpp"

using namespace hopf;
using test_support::permuted;
using test_support::ptr;
using test_support::vec;

namespace {

// Direct substitution of the defining equation.
bool is_skew_primitive(const HopfAlgebra& a, const Vec& x, const Vec& g, const Vec& h) {
  return a.coproduct(x) == add(tensor(x, g), tensor(h, x));
}

bool is_central(const HopfAlgebra& a, const Vec& x) {
  for (std::size_t i = 0; i < a.dim; ++i)
    if (!is_zero(a.commutator(a.e(i), x))) return false;
  return true;
}

}  // namespace

TEST_CASE("skew-primitives and primitives") {
  const auto q = FieldSpec::rationals();
  CHECK(primitives(sweedler4(q)).dim() == 0);

  const auto f5 = FieldSpec::prime(5);
  const HopfAlgebra h = sweedler4(f5);
  const ElementSubspace p = skew_primitives(h, h.e(0), h.e(1));
  CHECK(p.dim() == 2);
  CHECK(p.contains(h.e(2), f5));
  CHECK(p.contains(vec(f5, {1, -1, 0, 0}), f5));
  CHECK_FALSE(p.contains(h.e(3), f5));
  for (const auto& b : p.basis) CHECK(is_skew_primitive(h, b, h.e(0), h.e(1)));

  const auto f3 = FieldSpec::prime(3);
  const HopfAlgebra line = line_nilpotent(3, f3);
  const ElementSubspace pl = primitives(line);
  REQUIRE(pl.dim() == 1);
  CHECK(pl.contains(line.e(1), f3));

  CHECK_THROWS_AS(skew_primitives(h, h.e(2), h.e(0)), Error);
  try {
    skew_primitives(h, h.e(2), h.e(0));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotGroupLike);
  }
}

TEST_CASE("center and central primitives") {
  const auto f3 = FieldSpec::prime(3);
  const HopfAlgebra h = sweedler4(f3);
  const ElementSubspace z = center(h);
  REQUIRE(z.dim() == 1);
  CHECK(z.contains(h.unit, f3));
  for (const auto& b : z.basis) CHECK(is_central(h, b));

  CHECK(center(line_semisimple(3, f3)).dim() == 3);

  const HopfAlgebra l0 = line_nilpotent(3, f3);
  const ElementSubspace zl = zp(l0);
  REQUIRE(zl.dim() == 1);
  CHECK(zl.contains(l0.e(1), f3));
  CHECK(zp(cyclic_group_algebra(2, FieldSpec::rationals())).dim() == 0);
  CHECK(zp(h).dim() == 0);
  CHECK(zp(sweedler4(FieldSpec::rationals())).dim() == 0);

  // Z(A) (x) Z(B) lies in Z(A (x) B)
  const HopfAlgebra c2 = cyclic_group_algebra(2, f3);
  const HopfAlgebra t = tensor_hopf(h, c2);
  const ElementSubspace zt = center(t);
  for (const auto& a : center(h).basis)
    for (const auto& b : center(c2).basis) CHECK(zt.contains(tensor(a, b), f3));
}

TEST_CASE("subspace dimensions ignore basis order") {
  const auto f3 = FieldSpec::prime(3);
  std::mt19937 rng(7);
  for (const HopfAlgebra& a : {sweedler4(f3), line_nilpotent(3, f3), tensor_hopf(sweedler4(f3), cyclic_group_algebra(2, f3))}) {
    std::vector<std::size_t> pi(a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) pi[i] = i;
    std::shuffle(pi.begin(), pi.end(), rng);
    const HopfAlgebra b = permuted(a, pi);
    REQUIRE(verify_hopf(b).ok());
    CHECK(primitives(a).dim() == primitives(b).dim());
    CHECK(center(a).dim() == center(b).dim());
    CHECK(zp(a).dim() == zp(b).dim());
  }
  const HopfAlgebra h = sweedler4(f3);
  const HopfAlgebra hp = permuted(h, {2, 0, 3, 1});
  CHECK(skew_primitives(h, h.e(0), h.e(1)).dim() == skew_primitives(hp, hp.e(2), hp.e(0)).dim());
}

TEST_CASE("generation by primitives") {
  const auto f3 = FieldSpec::prime(3);
  CHECK(primitively_generated(line_nilpotent(3, f3)));
  CHECK(primitively_generated(line_semisimple(3, f3)));
  CHECK_FALSE(primitively_generated(sweedler4(f3)));
  CHECK_FALSE(primitively_generated(cyclic_group_algebra(2, f3)));
}

TEST_CASE("group-likes by exhaustive scan") {
  const auto f3 = FieldSpec::prime(3);
  const HopfAlgebra h = sweedler4(f3);
  const auto gh = group_likes_bruteforce(h);
  REQUIRE(gh.size() == 2);
  CHECK(gh[0] == h.e(1));  // lexicographic: (0,1,0,0) before (1,0,0,0)
  CHECK(gh[1] == h.e(0));
  CHECK(group_likes_bruteforce(line_nilpotent(3, f3)).size() == 1);

  const HopfAlgebra c4 = cyclic_group_algebra(4, f3);
  const auto g4 = group_likes_bruteforce(c4, kDefaultBudget, 3);
  CHECK(g4.size() == 4);
  CHECK(g4 == group_likes_bruteforce(c4, kDefaultBudget, 1));

  for (const HopfAlgebra& a : {h, c4, tensor_hopf(h, cyclic_group_algebra(2, f3)), line_semisimple(3, f3)}) {
    const auto g = group_likes_bruteforce(a);
    auto member = [&](const Vec& v) { return std::find(g.begin(), g.end(), v) != g.end(); };
    CHECK(member(a.unit));
    for (const auto& x : g) {
      CHECK(is_group_like(a, x));
      for (const auto& y : g) CHECK(member(a.multiply(x, y)));
    }
  }

  try {
    group_likes_bruteforce(h, 10);
    FAIL("budget not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BudgetExceeded);
  }
  try {
    group_likes_bruteforce(sweedler4(FieldSpec::rationals()));
    FAIL("infinite field accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::WrongField);
  }
}

TEST_CASE("affine enumeration order") {
  const auto f3 = FieldSpec::prime(3);
  std::vector<Vec> seen;
  for_each_affine_point(vec(f3, {1, 0}), {vec(f3, {0, 1}), vec(f3, {1, 1})}, f3, 100, [&](const Vec& v) {
    seen.push_back(v);
    return true;
  });
  REQUIRE(seen.size() == 9);
  CHECK(seen[0] == vec(f3, {1, 0}));
  CHECK(seen[1] == vec(f3, {2, 1}));  // t = (0, 1)
  CHECK(seen[3] == vec(f3, {1, 1}));  // t = (1, 0)
  CHECK_THROWS(for_each_affine_point(vec(FieldSpec::rationals(), {0}), {vec(FieldSpec::rationals(), {1})},
                                     FieldSpec::rationals(), 100, [](const Vec&) { return true; }));
}

TEST_CASE("cocentral maps into catalog algebras are trivial") {
  const auto f3 = FieldSpec::prime(3);
  const AlgebraPtr h = ptr(sweedler4(f3));
  for (const AlgebraPtr& a : {ptr(line_nilpotent(3, f3)), ptr(line_semisimple(3, f3)), h, ptr(cyclic_group_algebra(2, f3))}) {
    CAPTURE(a->name);
    const auto maps = cocentral_maps(h, a);
    REQUIRE(maps.size() == 1);
    CHECK(maps[0].matrix == unit_counit_map(h, a).matrix);
    CHECK(is_cocentral(maps[0]));
    CHECK(check_convolution_group(maps).ok());
  }
  CHECK_FALSE(is_cocentral(identity_map(h)));
  CHECK(is_cocentral(unit_counit_map(h, h)));
}

TEST_CASE("cocentral maps between commutative cocommutative algebras form a group") {
  const auto f3 = FieldSpec::prime(3);
  const AlgebraPtr c2 = ptr(cyclic_group_algebra(2, f3));
  const auto maps = cocentral_maps(c2, c2);
  // unitary coalgebra maps k[C2] -> k[C2]: g goes to a group-like
  CHECK(maps.size() == 2);
  for (const auto& m : maps) {
    REQUIRE(m.flags);
    CHECK(m.flags->coalgebra);
    CHECK(m.flags->unitary);
  }
  CHECK(check_convolution_group(maps).ok());
}

#pragma once

#include <memory>
#include <vector>

#include "hopf/catalog.hpp"

namespace test_support {

inline hopf::AlgebraPtr ptr(hopf::HopfAlgebra h) { return std::make_shared<const hopf::HopfAlgebra>(std::move(h)); }

inline hopf::Vec vec(const hopf::FieldSpec& f, std::initializer_list<long long> xs) {
  hopf::Vec v;
  for (long long x : xs) v.push_back(f.from_int(x));
  return v;
}

// Same algebra with old basis element i renamed to position pi[i].
inline hopf::HopfAlgebra permuted(const hopf::HopfAlgebra& a, const std::vector<std::size_t>& pi) {
  const std::size_t n = a.dim;
  auto move_vec = [&](const hopf::Vec& v) {
    hopf::Vec out = a.zero();
    for (std::size_t i = 0; i < n; ++i) out[pi[i]] = v[i];
    return out;
  };
  hopf::HopfAlgebra b(a.name + "'", a.field, n);
  b.basis.assign(n, "");
  b.mult.assign(n * n, a.zero());
  b.comult.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    b.basis[pi[i]] = a.basis[i];
    for (std::size_t j = 0; j < n; ++j) b.mult[pi[i] * n + pi[j]] = move_vec(a.product(i, j));
    for (const auto& t : a.comult[i]) b.comult[pi[i]].push_back(hopf::CoproductTerm{pi[t.left], pi[t.right], t.coeff});
  }
  b.unit = move_vec(a.unit);
  b.counit = move_vec(a.counit);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b.antipode(pi[i], pi[j]) = a.antipode(i, j);
  return b;
}

}  // namespace test_support

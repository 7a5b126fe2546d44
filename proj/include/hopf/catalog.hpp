#pragma once

#include <string_view>

#include "hopf/algebra.hpp"

namespace hopf {

/// Sweedler's 4-dimensional Hopf algebra, basis {1, g, x, gx}.
HopfAlgebra sweedler4(const FieldSpec& field);

/// k<y | y^p = 0> with y primitive. Throws CharMismatch unless char k = p.
HopfAlgebra line_nilpotent(uint32_t p, const FieldSpec& field);

/// k<y | y^p = y> with y primitive. Throws CharMismatch unless char k = p.
HopfAlgebra line_semisimple(uint32_t p, const FieldSpec& field);

/// Group algebra of the cyclic group of order n, basis {1, g, ..., g^(n-1)}.
HopfAlgebra cyclic_group_algebra(std::size_t n, const FieldSpec& field);

/// Resolves sweedler4, line0:p, line1:p, cyclic:n and tensor(lhs,rhs); the
/// "catalog:" prefix is optional. Throws InvalidArgument on unknown names.
HopfAlgebra catalog_algebra(std::string_view ref, const FieldSpec& field);

}  // namespace hopf

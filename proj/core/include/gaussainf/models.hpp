#pragma once

#include <string>

#include "gaussainf/algebra.hpp"

namespace gaussainf {

/* Reference structure-constant tables for the isomorphism types appearing
 * in the classification tables, built directly (independently of the
 * Gauss-word pipeline). Descriptors are atoms joined by " x ":
 *   k, k[x]/(x^2), k[x]/(x^3), k[x]/(x^4),
 *   k[x,y]/(x,y)^2, k[x,y,z]/(x,y,z)^2,
 *   k[x,y]/(x^2,y^2), k[x,y]/(x^3,xy,y^2), k[x,y]/(x^2,y^3,xy),
 *   Aq(q) = k{x,y}/(x^2, y^2, xy - q yx), exterior = Aq(-1),
 *   k{x,y}/(x^2,y^2,xy) = Aq(0),
 *   M2, field(d), quiver(V;s->t,...)   [kQ modulo paths of length >= 2]
 */
RatAlgebra model_algebra(const std::string& descriptor);

RatAlgebra algebra_product(const RatAlgebra& a, const RatAlgebra& b);

}  // namespace gaussainf

#pragma once

#include <map>
#include <string>
#include <vector>

#include "gaussainf/linalg.hpp"
#include "gaussainf/reduce.hpp"

namespace gaussainf {

/* Unit-preserving structure-constant table over a quotient base ring:
 * x_i x_j = sum_h c_{ij}^h x_h with x_0 the unit. */
struct FiniteAlgebra {
    RingPtr ring;
    ReductionSystem base;
    std::vector<std::string> names;  // names[0] is the unit
    int rank = 0;
    std::vector<IntPoly> c;  // c[(i*rank + j)*rank + h]

    IntPoly& cc(int i, int j, int h) { return c[(size_t)((i * rank + j) * rank + h)]; }
    const IntPoly& cc(int i, int j, int h) const
    {
        return c[(size_t)((i * rank + j) * rank + h)];
    }
    static FiniteAlgebra with_rank(RingPtr ring, ReductionSystem base,
                                   std::vector<std::string> names);
};

/* Same table with exact rational entries (after specialization). */
struct RatAlgebra {
    std::vector<std::string> names;
    int rank = 0;
    std::vector<Rat> c;

    Rat& cc(int i, int j, int h) { return c[(size_t)((i * rank + j) * rank + h)]; }
    const Rat& cc(int i, int j, int h) const { return c[(size_t)((i * rank + j) * rank + h)]; }
    static RatAlgebra with_rank(int rank);

    /* multiplication x*y of coordinate vectors */
    std::vector<Rat> mul(const std::vector<Rat>& x, const std::vector<Rat>& y) const;
    RationalMatrix left_mult(const std::vector<Rat>& x) const;
    RationalMatrix right_mult(const std::vector<Rat>& x) const;
};

struct AxiomViolation {
    std::string what;  // "unit(i=...,j=...)" or "assoc(i,j,l,m)"
    IntPoly value;
};

/* Unit law and the associativity constraints, modulo the base ring. Empty
 * result = a valid point of Alg_r. */
std::vector<AxiomViolation> check_axioms(const FiniteAlgebra& a);
std::vector<std::string> check_axioms(const RatAlgebra& a);

/* BaseViolated unless every base relation evaluates to 0 at the assignment;
 * axioms are re-checked on the specialized table. */
RatAlgebra specialize_algebra(const FiniteAlgebra& a, const std::map<std::string, Rat>& assignment);

/* Basis rescaling degeneration x_i -> t x_i (i != 0):
 * c_{ij}^0 -> t^2 c_{ij}^0 and c_{ij}^h -> t c_{ij}^h for i,j,h != 0.
 * At t = 0 this is the most degenerate unital algebra A. */
FiniteAlgebra rescale(const FiniteAlgebra& a, const IntPoly& t);
RatAlgebra rescale(const RatAlgebra& a, const Rat& t);

std::string algebra_json(const FiniteAlgebra& a);

}  // namespace gaussainf

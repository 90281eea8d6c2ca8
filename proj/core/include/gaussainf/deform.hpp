#pragma once

#include "gaussainf/ainf.hpp"
#include "gaussainf/algebra.hpp"
#include "gaussainf/reduce.hpp"
#include "gaussainf/verify.hpp"

namespace gaussainf {

/* Degree-1 element with polynomial coefficients; drives the m^b
 * deformation. */
struct BoundingCochain {
    LinComb combo;
};

/* The deformed tables m_i^b, i >= 0. Arity 0 (key {}) holds the curvature
 * element m_1(b) + m_2(b,b) + ...; the sum is finite because the base
 * algebra has finitely many operations. */
struct DeformedStructure {
    AInfAlgebra alg;  // the undeformed algebra (tables kept for reference)
    BoundingCochain b;
    OpsTable mb;
};

/* DegreeError unless b is concentrated in degree 1. */
DeformedStructure deform(const AInfAlgebra& alg, const BoundingCochain& b);

LinComb curvature(const DeformedStructure& def);

/* Apply the deformed m_1 to a single generator. */
LinComb m1b(const DeformedStructure& def, Gen g);

/* Every coefficient polynomial of m_1^b, deduplicated up to sign and
 * stored with positive leading coefficient. Vanishing of all generators is
 * the flatness condition. */
std::vector<IntPoly> flatness_ideal(const DeformedStructure& def);

/* The degree-0 part of the deformed endomorphism algebra over the quotient
 * base ring: basis = degree-0 generators with unit w0, product(x, y) =
 * m_2^b(x, y) with coefficients reduced modulo `base`.
 * NotFlat / Curved when the preconditions fail modulo base. */
FiniteAlgebra degree_zero_algebra(const DeformedStructure& def, const ReductionSystem& base);

/* Degree-0 generators in basis order (w0 first). */
std::vector<Gen> degree_zero_generators(const GradedBasis& basis);

/* Parse a bounding cochain like "t1*wbar1 + t2*wbar2 + lambda*wbar0". */
BoundingCochain parse_bounding(const std::string& text, const GradedBasis& basis, RingPtr ring);

}  // namespace gaussainf

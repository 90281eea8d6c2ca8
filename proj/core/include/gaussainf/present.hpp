#pragma once

#include <map>
#include <string>
#include <vector>

#include "gaussainf/algebra.hpp"

namespace gaussainf {

/* Noncommutative polynomial in presentation symbols: sum of coeff * word,
 * where words are sequences of symbol indices and coefficients live in the
 * (commutative) base ring. */
struct NCPoly {
    std::vector<std::pair<IntPoly, std::vector<int>>> terms;
};

/* A boxed presentation: symbols mapped into the algebra's basis span, a
 * relation list, and the expected rank. */
struct PresentationSpec {
    std::vector<std::string> symbols;
    std::vector<std::vector<IntPoly>> images;  // per symbol: coordinates in the basis
    std::vector<NCPoly> relations;
    std::vector<std::string> relation_texts;
    int expected_rank = 0;
};

struct PresentationReport {
    bool ok = false;
    std::vector<std::string> failures;
};

/* TRUE iff every relation, expanded through the structure constants with
 * coefficients reduced modulo the base, vanishes, and rank(A) equals the
 * expected rank. Certifies relations-hold-at-the-right-rank; it is not an
 * isomorphism certificate for the quotient. */
PresentationReport verify_presentation(const FiniteAlgebra& a, const PresentationSpec& p);

NCPoly parse_nc_poly(const RingPtr& ring, const std::vector<std::string>& symbols,
                     const std::string& text);

}  // namespace gaussainf

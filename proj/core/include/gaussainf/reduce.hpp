#pragma once

#include <vector>

#include "gaussainf/poly.hpp"

namespace gaussainf {

/* An ordered relation list defining a quotient of the base polynomial ring.
 *
 * reduce() is plain multivariate division, not Groebner completion: each
 * relation is oriented as a rewrite rule whose head is its lex-leading term
 * in the declared variable order (so t-monomials are eliminated in favour
 * of s/m/lambda expressions, matching how the quotient rings are written).
 * Division is a normal form for the relation lists that actually occur here
 * (monomial lists, or lists whose heads are pairwise coprime); it is not a
 * membership test for arbitrary ideals. */
class ReductionSystem {
  public:
    ReductionSystem() = default;
    ReductionSystem(RingPtr ring, std::vector<IntPoly> relations);

    static ReductionSystem parse(RingPtr ring, const std::vector<std::string>& texts);

    const RingPtr& ring() const { return ring_; }
    const std::vector<IntPoly>& relations() const { return rels_; }
    bool empty() const { return rels_.empty(); }

    IntPoly reduce(const IntPoly& p) const;
    bool reduces_to_zero(const IntPoly& p) const { return reduce(p).is_zero(); }

  private:
    RingPtr ring_;
    std::vector<IntPoly> rels_;   // sign-normalized: head coefficient > 0
    std::vector<Mono> heads_;     // lex-leading monomials
    std::vector<Int> head_coeffs_;
    std::vector<IntPoly> tails_;  // rel - head term
};

}  // namespace gaussainf

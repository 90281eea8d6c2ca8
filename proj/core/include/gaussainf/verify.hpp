#pragma once

#include <vector>

#include "gaussainf/ainf.hpp"
#include "gaussainf/reduce.hpp"

namespace gaussainf {

struct Violation {
    OpKey tuple;    // printed order (a_N, ..., a_1)
    LinComb value;  // nonzero relation sum
};

/* Value of the A-infinity relation
 *   sum_{j,k} (-1)^{|a_1|+...+|a_j| - j}
 *       m_{N-k+1}(a_N, ..., a_{j+k+1}, m_k(a_{j+k}, ..., a_{j+1}), a_j, ..., a_1)
 * for one input tuple, given in printed order (a_N first). */
LinComb ainf_relation(const OpsTable& ops, const GradedBasis& basis, const OpKey& tuple,
                      const RingPtr& ring);

/* Scan every relation instance of total arity <= max_total_arity and report
 * the nonzero ones (coefficients reduced modulo `base` when given).
 *
 * Instances are generated from pairs of stored entries (outer entry, inner
 * entry whose output feeds one outer slot); a tuple outside that set has
 * every relation term equal to zero, so the scan is equivalent to the full
 * (2r)^N sweep. */
std::vector<Violation> verify_ainf(const OpsTable& ops, const GradedBasis& basis,
                                   int max_total_arity, const RingPtr& ring,
                                   const ReductionSystem* base = nullptr);

inline std::vector<Violation> verify_ainf(const AInfAlgebra& alg, int max_total_arity,
                                          const ReductionSystem* base = nullptr)
{
    return verify_ainf(alg.ops, alg.basis, max_total_arity, alg.ring, base);
}

/* Default check depth: the relation at arity N only mixes operations with
 * j <= max_arity on both levels. */
inline int default_verify_arity(int max_arity)
{
    return 2 * max_arity - 1;
}

}  // namespace gaussainf

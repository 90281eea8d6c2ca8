#include "gaussainf/verify.hpp"

#include <set>

namespace gaussainf {

LinComb ainf_relation(const OpsTable& ops, const GradedBasis& basis, const OpKey& tuple,
                      const RingPtr& ring)
{
    int N = (int)tuple.size();
    LinComb total;
    // tuple[p] = a_{N-p}: printed order, a_N first
    for (int k = 1; k <= N; ++k) {
        for (int j = 0; j + k <= N; ++j) {
            // inner arguments a_{j+k}..a_{j+1} = tuple[N-j-k .. N-j-1]
            OpKey inner(tuple.begin() + (N - j - k), tuple.begin() + (N - j));
            const LinComb* iv = ops.find(inner);
            if (!iv)
                continue;
            int sgn = 0;  // |a_1| + ... + |a_j| - j
            for (int l = 1; l <= j; ++l)
                sgn += basis.deg(tuple[(size_t)(N - l)]) - 1;
            for (const auto& [g, coeff] : *iv) {
                OpKey outer;
                outer.reserve((size_t)(N - k + 1));
                outer.insert(outer.end(), tuple.begin(), tuple.begin() + (N - j - k));
                outer.push_back(g);
                outer.insert(outer.end(), tuple.begin() + (N - j), tuple.end());
                const LinComb* ov = ops.find(outer);
                if (!ov)
                    continue;
                IntPoly c = (sgn % 2 == 0) ? coeff : -coeff;
                lincomb_add(total, *ov, c);
            }
        }
    }
    (void)ring;
    return total;
}

std::vector<Violation> verify_ainf(const OpsTable& ops, const GradedBasis& basis,
                                   int max_total_arity, const RingPtr& ring,
                                   const ReductionSystem* base)
{
    // map: output generator -> inner entries producing it
    struct InnerRef {
        const OpKey* key;
    };
    std::vector<std::vector<InnerRef>> producers(basis.gen_count());
    for (const auto& [arity, table] : ops.by_arity) {
        if (arity < 1)
            continue;
        for (const auto& [key, val] : table)
            for (const auto& [g, c] : val)
                producers[(size_t)g].push_back({&key});
    }
    std::set<OpKey> candidates;
    for (const auto& [p_arity, table] : ops.by_arity) {
        if (p_arity < 1)
            continue;
        for (const auto& [okey, oval] : table) {
            for (int slot = 0; slot < p_arity; ++slot) {
                for (const InnerRef& ir : producers[(size_t)okey[(size_t)slot]]) {
                    int N = p_arity - 1 + (int)ir.key->size();
                    if (N > max_total_arity)
                        continue;
                    OpKey tuple;
                    tuple.reserve((size_t)N);
                    tuple.insert(tuple.end(), okey.begin(), okey.begin() + slot);
                    tuple.insert(tuple.end(), ir.key->begin(), ir.key->end());
                    tuple.insert(tuple.end(), okey.begin() + slot + 1, okey.end());
                    candidates.insert(std::move(tuple));
                }
            }
        }
    }
    std::vector<Violation> out;
    for (const auto& tuple : candidates) {
        LinComb v = ainf_relation(ops, basis, tuple, ring);
        if (base && !v.empty()) {
            LinComb reduced;
            for (const auto& [g, c] : v)
                lincomb_add(reduced, g, base->reduce(c));
            v = std::move(reduced);
        }
        if (!v.empty())
            out.push_back({tuple, std::move(v)});
    }
    return out;
}

}  // namespace gaussainf

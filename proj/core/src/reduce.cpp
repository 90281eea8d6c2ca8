#include "gaussainf/reduce.hpp"

namespace gaussainf {

namespace {

// lex-leading term of a nonzero polynomial
std::pair<Mono, Int> lex_lead(const IntPoly& p)
{
    const Mono* best = nullptr;
    const Int* coeff = nullptr;
    for (const auto& [m, c] : p.terms()) {
        if (!best || lex_less(*best, m)) {
            best = &m;
            coeff = &c;
        }
    }
    return {*best, *coeff};
}

}  // namespace

ReductionSystem::ReductionSystem(RingPtr ring, std::vector<IntPoly> relations)
    : ring_(std::move(ring))
{
    for (IntPoly& r : relations) {
        if (r.is_zero())
            fail("ZeroRelation", "reduction system contains a zero relation");
        r = lift_to_ring(r, ring_);
        auto [head, c] = lex_lead(r);
        if (c < 0) {
            r = -r;
            c = -c;
        }
        rels_.push_back(r);
        heads_.push_back(head);
        head_coeffs_.push_back(c);
        IntPoly tail = r;
        tail.add_term(head, -c);
        tails_.push_back(tail);
    }
}

ReductionSystem ReductionSystem::parse(RingPtr ring, const std::vector<std::string>& texts)
{
    std::vector<IntPoly> rels;
    rels.reserve(texts.size());
    for (const auto& t : texts)
        rels.push_back(IntPoly::parse(ring, t));
    return ReductionSystem(ring, std::move(rels));
}

IntPoly ReductionSystem::reduce(const IntPoly& p) const
{
    if (rels_.empty())
        return p;
    IntPoly work = lift_to_ring(p, ring_);
    IntPoly remainder(ring_);
    // Repeatedly rewrite the lex-largest reducible term; divisibility of the
    // coefficient is required (all shipped relation heads are monic).
    while (!work.is_zero()) {
        // pick lex-largest term of work
        auto [m, c] = lex_lead(work);
        bool rewrote = false;
        for (size_t i = 0; i < rels_.size(); ++i) {
            if (!heads_[i].divides(m))
                continue;
            if (!mpz_divisible_p(c.get_mpz_t(), head_coeffs_[i].get_mpz_t()))
                continue;
            Int q = c / head_coeffs_[i];
            Mono factor = heads_[i].quotient_under(m);
            // work -= (q * factor) * rel_i  == remove term, add -q*factor*tail
            work.add_term(m, -c);
            IntPoly sub(ring_);
            for (const auto& [tm, tc] : tails_[i].terms())
                sub.add_term(tm * factor, tc * q);
            work -= sub;
            rewrote = true;
            break;
        }
        if (!rewrote) {
            remainder.add_term(m, c);
            work.add_term(m, -c);
        }
    }
    return remainder;
}

}  // namespace gaussainf

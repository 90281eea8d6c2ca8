#include "gaussainf/deform.hpp"

#include <algorithm>

namespace gaussainf {

DeformedStructure deform(const AInfAlgebra& alg, const BoundingCochain& b)
{
    for (const auto& [g, c] : b.combo)
        if (alg.basis.deg(g) != 1)
            fail("DegreeError", "bounding cochain supported on " + gen_name(g) + " of degree " +
                                    std::to_string(alg.basis.deg(g)));
    DeformedStructure def;
    def.alg = alg;
    def.b = b;
    // m_i^b(v_i..v_1) = sum over entries and over subsets of b-insertions
    for (const auto& [arity, table] : alg.ops.by_arity) {
        for (const auto& [key, val] : table) {
            // positions whose generator lies in supp(b) may be marked as b
            std::vector<int> b_positions;
            for (int p = 0; p < arity; ++p)
                if (b.combo.count(key[(size_t)p]))
                    b_positions.push_back(p);
            int nb = (int)b_positions.size();
            for (int mask = 0; mask < (1 << nb); ++mask) {
                IntPoly coeff = IntPoly::constant(alg.ring, 1);
                std::vector<char> is_b((size_t)arity, 0);
                for (int t = 0; t < nb; ++t)
                    if (mask & (1 << t)) {
                        is_b[(size_t)b_positions[(size_t)t]] = 1;
                        coeff = coeff * b.combo.at(key[(size_t)b_positions[(size_t)t]]);
                    }
                OpKey reduced_key;
                for (int p = 0; p < arity; ++p)
                    if (!is_b[(size_t)p])
                        reduced_key.push_back(key[(size_t)p]);
                def.mb.add(reduced_key, val, coeff);
            }
        }
    }
    return def;
}

LinComb curvature(const DeformedStructure& def)
{
    if (const LinComb* v = def.mb.find({}))
        return *v;
    return {};
}

LinComb m1b(const DeformedStructure& def, Gen g)
{
    if (const LinComb* v = def.mb.find({g}))
        return *v;
    return {};
}

std::vector<IntPoly> flatness_ideal(const DeformedStructure& def)
{
    std::vector<IntPoly> gens;
    auto seen = [&](const IntPoly& p) {
        for (const auto& q : gens)
            if (q == p || q == -p)
                return true;
        return false;
    };
    for (Gen g = 0; g < def.alg.basis.gen_count(); ++g) {
        for (const auto& [out, c] : m1b(def, g)) {
            IntPoly p = c.lead_coeff() < 0 ? -c : c;
            if (!seen(p))
                gens.push_back(p);
        }
    }
    return gens;
}

std::vector<Gen> degree_zero_generators(const GradedBasis& basis)
{
    std::vector<Gen> out;
    out.push_back(gen_w(0));
    for (int i = 1; i <= basis.n; ++i) {
        if (basis.deg(gen_w(i)) == 0)
            out.push_back(gen_w(i));
        else if (basis.deg(gen_wbar(i)) == 0)
            out.push_back(gen_wbar(i));
    }
    return out;
}

FiniteAlgebra degree_zero_algebra(const DeformedStructure& def, const ReductionSystem& base)
{
    for (const auto& p : flatness_ideal(def))
        if (!base.reduces_to_zero(p))
            fail("NotFlat", "flatness generator " + p.str() + " is nonzero modulo the base");
    for (const auto& [g, c] : curvature(def))
        if (!base.reduces_to_zero(c))
            fail("Curved", "curvature has nonzero " + gen_name(g) + " component modulo the base");

    std::vector<Gen> gens = degree_zero_generators(def.alg.basis);
    std::vector<std::string> names;
    names.reserve(gens.size());
    for (Gen g : gens)
        names.push_back(gen_name(g));
    FiniteAlgebra a = FiniteAlgebra::with_rank(def.alg.ring, base, names);
    std::vector<int> index_of(def.alg.basis.gen_count(), -1);
    for (size_t i = 0; i < gens.size(); ++i)
        index_of[(size_t)gens[i]] = (int)i;

    for (size_t i = 0; i < gens.size(); ++i) {
        for (size_t j = 0; j < gens.size(); ++j) {
            const LinComb* v = def.mb.find({gens[i], gens[j]});
            if (!v)
                continue;
            for (const auto& [g, c] : *v) {
                IntPoly r = base.reduce(c);
                if (r.is_zero())
                    continue;
                if (index_of[(size_t)g] < 0)
                    fail("DegreeLawViolation", "degree-0 product escapes the degree-0 span at " +
                                                   gen_name(g));
                a.cc((int)i, (int)j, index_of[(size_t)g]) = r;
            }
        }
    }
    return a;
}

BoundingCochain parse_bounding(const std::string& text, const GradedBasis& basis, RingPtr ring)
{
    BoundingCochain b;
    b.combo = parse_lincomb(text, basis.n, ring);
    for (const auto& [g, c] : b.combo)
        if (basis.deg(g) != 1)
            fail("DegreeError", "bounding cochain term " + gen_name(g) + " has degree " +
                                    std::to_string(basis.deg(g)));
    return b;
}

}  // namespace gaussainf

#include "gaussainf/algebra.hpp"

#include <json.hpp>

namespace gaussainf {

FiniteAlgebra FiniteAlgebra::with_rank(RingPtr ring, ReductionSystem base,
                                       std::vector<std::string> names)
{
    FiniteAlgebra a;
    a.ring = std::move(ring);
    a.base = std::move(base);
    a.rank = (int)names.size();
    a.names = std::move(names);
    a.c.assign((size_t)(a.rank * a.rank * a.rank), IntPoly::zero(a.ring));
    // unit law
    auto one = IntPoly::constant(a.ring, 1);
    for (int i = 0; i < a.rank; ++i) {
        a.cc(0, i, i) = one;
        a.cc(i, 0, i) = one;
    }
    return a;
}

RatAlgebra RatAlgebra::with_rank(int rank)
{
    RatAlgebra a;
    a.rank = rank;
    a.names.resize((size_t)rank);
    for (int i = 0; i < rank; ++i)
        a.names[(size_t)i] = "x" + std::to_string(i);
    a.c.assign((size_t)(rank * rank * rank), Rat(0));
    for (int i = 0; i < rank; ++i) {
        a.cc(0, i, i) = 1;
        a.cc(i, 0, i) = 1;
    }
    return a;
}

std::vector<Rat> RatAlgebra::mul(const std::vector<Rat>& x, const std::vector<Rat>& y) const
{
    std::vector<Rat> out((size_t)rank, Rat(0));
    for (int i = 0; i < rank; ++i) {
        if (x[(size_t)i] == 0)
            continue;
        for (int j = 0; j < rank; ++j) {
            if (y[(size_t)j] == 0)
                continue;
            Rat f = x[(size_t)i] * y[(size_t)j];
            for (int h = 0; h < rank; ++h)
                if (cc(i, j, h) != 0)
                    out[(size_t)h] += f * cc(i, j, h);
        }
    }
    return out;
}

RationalMatrix RatAlgebra::left_mult(const std::vector<Rat>& x) const
{
    RationalMatrix m(rank, rank);
    for (int j = 0; j < rank; ++j) {
        std::vector<Rat> ej((size_t)rank, Rat(0));
        ej[(size_t)j] = 1;
        auto col = mul(x, ej);
        for (int h = 0; h < rank; ++h)
            m.at(h, j) = col[(size_t)h];
    }
    return m;
}

RationalMatrix RatAlgebra::right_mult(const std::vector<Rat>& x) const
{
    RationalMatrix m(rank, rank);
    for (int j = 0; j < rank; ++j) {
        std::vector<Rat> ej((size_t)rank, Rat(0));
        ej[(size_t)j] = 1;
        auto col = mul(ej, x);
        for (int h = 0; h < rank; ++h)
            m.at(h, j) = col[(size_t)h];
    }
    return m;
}

std::vector<AxiomViolation> check_axioms(const FiniteAlgebra& a)
{
    std::vector<AxiomViolation> out;
    int r = a.rank;
    auto one = IntPoly::constant(a.ring, 1);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            IntPoly lhs = a.cc(0, i, j);
            IntPoly rhs = a.cc(i, 0, j);
            IntPoly expect = (i == j) ? one : IntPoly::zero(a.ring);
            if (!a.base.reduces_to_zero(lhs - expect))
                out.push_back({"unit(0," + std::to_string(i) + ")", lhs - expect});
            if (!a.base.reduces_to_zero(rhs - expect))
                out.push_back({"unit(" + std::to_string(i) + ",0)", rhs - expect});
        }
    }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int l = 0; l < r; ++l)
                for (int m = 0; m < r; ++m) {
                    IntPoly s = IntPoly::zero(a.ring);
                    for (int h = 0; h < r; ++h)
                        s += a.cc(i, j, h) * a.cc(h, l, m) - a.cc(j, l, h) * a.cc(i, h, m);
                    if (!a.base.reduces_to_zero(s))
                        out.push_back({"assoc(" + std::to_string(i) + "," + std::to_string(j) +
                                           "," + std::to_string(l) + "," + std::to_string(m) + ")",
                                       s});
                }
    return out;
}

std::vector<std::string> check_axioms(const RatAlgebra& a)
{
    std::vector<std::string> out;
    int r = a.rank;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Rat expect = (i == j) ? 1 : 0;
            if (a.cc(0, i, j) != expect || a.cc(i, 0, j) != expect) {
                out.push_back("unit(" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int l = 0; l < r; ++l)
                for (int m = 0; m < r; ++m) {
                    Rat s = 0;
                    for (int h = 0; h < r; ++h)
                        s += a.cc(i, j, h) * a.cc(h, l, m) - a.cc(j, l, h) * a.cc(i, h, m);
                    if (s != 0)
                        out.push_back("assoc(" + std::to_string(i) + "," + std::to_string(j) +
                                      "," + std::to_string(l) + "," + std::to_string(m) + ")");
                }
    return out;
}

RatAlgebra specialize_algebra(const FiniteAlgebra& a, const std::map<std::string, Rat>& assignment)
{
    for (const auto& rel : a.base.relations())
        if (rel.specialize(assignment) != 0)
            fail("BaseViolated", "assignment does not satisfy base relation " + rel.str());
    RatAlgebra out = RatAlgebra::with_rank(a.rank);
    out.names = a.names;
    for (int i = 0; i < a.rank; ++i)
        for (int j = 0; j < a.rank; ++j)
            for (int h = 0; h < a.rank; ++h)
                out.cc(i, j, h) = a.cc(i, j, h).specialize(assignment);
    auto bad = check_axioms(out);
    if (!bad.empty())
        fail("AxiomViolation", "specialized table violates " + bad.front());
    return out;
}

FiniteAlgebra rescale(const FiniteAlgebra& a, const IntPoly& t)
{
    FiniteAlgebra out = a;
    IntPoly t2 = t * t;
    for (int i = 1; i < a.rank; ++i)
        for (int j = 1; j < a.rank; ++j)
            for (int h = 0; h < a.rank; ++h)
                out.cc(i, j, h) = a.cc(i, j, h) * (h == 0 ? t2 : t);
    return out;
}

RatAlgebra rescale(const RatAlgebra& a, const Rat& t)
{
    RatAlgebra out = a;
    Rat t2 = t * t;
    for (int i = 1; i < a.rank; ++i)
        for (int j = 1; j < a.rank; ++j)
            for (int h = 0; h < a.rank; ++h)
                out.cc(i, j, h) = a.cc(i, j, h) * (h == 0 ? t2 : t);
    return out;
}

std::string algebra_json(const FiniteAlgebra& a)
{
    nlohmann::json j;
    j["basis"] = a.names;
    j["unit"] = a.names[0];
    nlohmann::json table = nlohmann::json::object();
    for (int i = 0; i < a.rank; ++i)
        for (int jx = 0; jx < a.rank; ++jx) {
            nlohmann::json row = nlohmann::json::object();
            for (int h = 0; h < a.rank; ++h)
                if (!a.cc(i, jx, h).is_zero())
                    row[a.names[(size_t)h]] = a.cc(i, jx, h).str();
            if (!row.empty())
                table["(" + a.names[(size_t)i] + "," + a.names[(size_t)jx] + ")"] = row;
        }
    j["table"] = table;
    return j.dump(2);
}

}  // namespace gaussainf

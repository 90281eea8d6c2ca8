#include "gaussainf/classify.hpp"

#include <json.hpp>
#include <sstream>

namespace gaussainf {

namespace {

std::vector<Rat> basis_vec(int rank, int i)
{
    std::vector<Rat> v((size_t)rank, Rat(0));
    v[(size_t)i] = 1;
    return v;
}

}  // namespace

std::vector<std::vector<Rat>> radical_basis(const RatAlgebra& a)
{
    int r = a.rank;
    std::vector<RationalMatrix> L((size_t)r);
    for (int i = 0; i < r; ++i)
        L[(size_t)i] = a.left_mult(basis_vec(r, i));
    RationalMatrix gram(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Rat t = 0;
            for (int p = 0; p < r; ++p)
                for (int q = 0; q < r; ++q)
                    t += L[(size_t)i].at(p, q) * L[(size_t)j].at(q, p);
            gram.at(i, j) = t;
        }
    return rank_and_nullspace(gram).nullspace;
}

RadicalFiltration radical_filtration(const RatAlgebra& a)
{
    RadicalFiltration f;
    f.rad = radical_basis(a);
    std::vector<std::vector<Rat>> prods;
    for (const auto& u : f.rad)
        for (const auto& v : f.rad)
            prods.push_back(a.mul(u, v));
    f.rad2 = span_basis(prods, a.rank);
    prods.clear();
    for (const auto& u : f.rad2)
        for (const auto& v : f.rad)
            prods.push_back(a.mul(u, v));
    for (const auto& u : f.rad)
        for (const auto& v : f.rad2)
            prods.push_back(a.mul(u, v));
    f.rad3 = span_basis(prods, a.rank);
    return f;
}

std::vector<std::vector<Rat>> center_basis(const RatAlgebra& a)
{
    int r = a.rank;
    // stack [L_j - R_j] for all basis j, nullspace = center
    RationalMatrix m(r * r, r);
    for (int j = 0; j < r; ++j) {
        auto lj = a.left_mult(basis_vec(r, j));
        auto rj = a.right_mult(basis_vec(r, j));
        // x central: x * e_j - e_j * x = 0, i.e. (R_{e_j} - L_{e_j}) x = 0
        for (int p = 0; p < r; ++p)
            for (int q = 0; q < r; ++q)
                m.at(j * r + p, q) = rj.at(p, q) - lj.at(p, q);
    }
    return rank_and_nullspace(m).nullspace;
}

RatAlgebra semisimple_quotient(const RatAlgebra& a)
{
    int r = a.rank;
    auto rad = span_basis(radical_basis(a), r);
    int nr = (int)rad.size();
    int srank = r - nr;
    // complement: greedily extend rad rows to a full basis by standard vectors
    std::vector<std::vector<Rat>> rows = rad;
    std::vector<int> comp_idx;
    for (int i = 0; i < r && (int)rows.size() < r; ++i) {
        auto cand = rows;
        cand.push_back(basis_vec(r, i));
        if (span_rank(cand, r) > (int)rows.size()) {
            rows.push_back(basis_vec(r, i));
            comp_idx.push_back(i);
        }
    }
    // change of basis: columns are rad vectors then complement vectors
    RationalMatrix P(r, r);
    for (int j = 0; j < nr; ++j)
        for (int i = 0; i < r; ++i)
            P.at(i, j) = rad[(size_t)j][(size_t)i];
    for (int j = 0; j < srank; ++j)
        for (int i = 0; i < r; ++i)
            P.at(i, nr + j) = (i == comp_idx[(size_t)j]) ? 1 : 0;
    auto coords = [&](const std::vector<Rat>& v) {
        std::vector<Rat> x;
        if (!solve(P, v, x))
            fail("InternalInconsistency", "complement basis is not a basis");
        return x;  // first nr coords along rad, last srank along complement
    };
    // unit coordinates in the quotient
    std::vector<Rat> unit_full = coords(basis_vec(r, 0));
    std::vector<Rat> unit_q(unit_full.begin() + nr, unit_full.end());
    // products of complement vectors, projected
    RatAlgebra s;
    s.rank = srank;
    s.names.resize((size_t)srank);
    for (int i = 0; i < srank; ++i)
        s.names[(size_t)i] = "y" + std::to_string(i);
    s.c.assign((size_t)(srank * srank * srank), Rat(0));
    // quotient basis in complement coordinates, 0th vector = image of the unit
    std::vector<std::vector<Rat>> qbasis((size_t)srank, std::vector<Rat>((size_t)srank, Rat(0)));
    for (int i = 0; i < srank; ++i)
        qbasis[(size_t)i][(size_t)i] = 1;
    {
        int pivot = -1;
        for (int i = 0; i < srank; ++i)
            if (unit_q[(size_t)i] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            fail("InternalInconsistency", "unit vanishes in semisimple quotient");
        qbasis[(size_t)pivot] = unit_q;
        std::swap(qbasis[(size_t)0], qbasis[(size_t)pivot]);
    }
    // multiplication in quotient coordinates
    auto qmul = [&](const std::vector<Rat>& x, const std::vector<Rat>& y) {
        // lift to A, multiply, project
        std::vector<Rat> xa((size_t)r, Rat(0)), ya((size_t)r, Rat(0));
        for (int i = 0; i < srank; ++i) {
            for (int p = 0; p < r; ++p) {
                xa[(size_t)p] += x[(size_t)i] * P.at(p, nr + i);
                ya[(size_t)p] += y[(size_t)i] * P.at(p, nr + i);
            }
        }
        auto prod = a.mul(xa, ya);
        auto cx = coords(prod);
        return std::vector<Rat>(cx.begin() + nr, cx.end());
    };
    // change-of-basis matrix for qbasis
    RationalMatrix Q(srank, srank);
    for (int j = 0; j < srank; ++j)
        for (int i = 0; i < srank; ++i)
            Q.at(i, j) = qbasis[(size_t)j][(size_t)i];
    auto qcoords = [&](const std::vector<Rat>& v) {
        std::vector<Rat> x;
        if (!solve(Q, v, x))
            fail("InternalInconsistency", "quotient basis is not a basis");
        return x;
    };
    for (int i = 0; i < srank; ++i)
        for (int j = 0; j < srank; ++j) {
            auto prod = qcoords(qmul(qbasis[(size_t)i], qbasis[(size_t)j]));
            for (int h = 0; h < srank; ++h)
                s.cc(i, j, h) = prod[(size_t)h];
        }
    return s;
}

std::vector<Rat> min_poly(const RatAlgebra& a, const std::vector<Rat>& x)
{
    int r = a.rank;
    RationalMatrix L = a.left_mult(x);
    // Krylov on the full matrix: find first dependence among I, L, L^2, ...
    std::vector<std::vector<Rat>> powers;  // flattened r*r
    RationalMatrix cur(r, r);
    for (int i = 0; i < r; ++i)
        cur.at(i, i) = 1;
    for (int d = 0;; ++d) {
        std::vector<Rat> flat;
        flat.reserve((size_t)(r * r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                flat.push_back(cur.at(i, j));
        powers.push_back(flat);
        // dependence?  powers as rows of a matrix, check rank drop
        if (span_rank(powers, r * r) < (int)powers.size()) {
            // solve sum_{k<d} c_k L^k = L^d ... actually last row is dependent
            RationalMatrix m(r * r, d);
            for (int k = 0; k < d; ++k)
                for (int t = 0; t < r * r; ++t)
                    m.at(t, k) = powers[(size_t)k][(size_t)t];
            std::vector<Rat> rhs = powers.back();
            std::vector<Rat> sol;
            if (!solve(m, rhs, sol))
                fail("InternalInconsistency", "minimal polynomial solve failed");
            std::vector<Rat> mp((size_t)d + 1, Rat(0));
            for (int k = 0; k < d; ++k)
                mp[(size_t)k] = -sol[(size_t)k];
            mp[(size_t)d] = 1;
            return mp;
        }
        // cur *= L
        RationalMatrix next(r, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                Rat s = 0;
                for (int k = 0; k < r; ++k)
                    s += cur.at(i, k) * L.at(k, j);
                next.at(i, j) = s;
            }
        cur = next;
    }
}

namespace {

// polynomial arithmetic on dense rational coefficient vectors (low first)
std::vector<Rat> poly_deriv(const std::vector<Rat>& p)
{
    std::vector<Rat> d;
    for (size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * Rat((long)i));
    return d;
}

void poly_trim(std::vector<Rat>& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

std::vector<Rat> poly_mod(std::vector<Rat> a, const std::vector<Rat>& b)
{
    poly_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[off + i] -= f * b[i];
        poly_trim(a);
    }
    return a;
}

int poly_gcd_degree(std::vector<Rat> a, std::vector<Rat> b)
{
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        auto r = poly_mod(a, b);
        a = b;
        b = r;
    }
    return a.empty() ? -1 : (int)a.size() - 1;
}

// divide out a rational root: p / (X - root); p assumed to vanish at root
std::vector<Rat> deflate(const std::vector<Rat>& p, const Rat& root)
{
    int d = (int)p.size() - 1;
    std::vector<Rat> q((size_t)d, Rat(0));
    Rat carry = 0;
    for (int i = d; i >= 1; --i) {
        carry = p[(size_t)i] + carry * root;
        q[(size_t)(i - 1)] = carry;
    }
    return q;
}

std::vector<Int> divisors(Int n)
{
    if (n < 0)
        n = -n;
    std::vector<Int> out;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n)
                out.push_back(n / d);
        }
    }
    return out;
}

}  // namespace

bool splits_over_Q(const std::vector<Rat>& monic_poly)
{
    std::vector<Rat> p = monic_poly;
    poly_trim(p);
    if (p.size() <= 1)
        return true;
    if (poly_gcd_degree(p, poly_deriv(p)) > 0)
        return false;  // not squarefree
    // extract rational roots until nothing is left
    while (p.size() > 1) {
        // clear denominators -> integer poly
        Int lcm = 1;
        for (const auto& cfr : p)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), Rat(cfr).get_den().get_mpz_t());
        std::vector<Int> ip;
        for (const auto& cfr : p)
            ip.push_back(Int(Rat(cfr * Rat(lcm)).get_num()));
        if (ip.front() == 0) {
            p = deflate(p, Rat(0));
            continue;
        }
        bool found = false;
        for (const Int& num : divisors(ip.front())) {
            for (const Int& den : divisors(ip.back())) {
                for (int sg : {1, -1}) {
                    Rat cand = Rat(num * sg) / Rat(den);
                    cand.canonicalize();
                    // evaluate
                    Rat val = 0, pw = 1;
                    for (const auto& cfr : p) {
                        val += cfr * pw;
                        pw *= cand;
                    }
                    if (val == 0) {
                        p = deflate(p, cand);
                        found = true;
                        break;
                    }
                }
                if (found)
                    break;
            }
            if (found)
                break;
        }
        if (!found)
            return false;
    }
    return true;
}

Fingerprint fingerprint(const RatAlgebra& a)
{
    Fingerprint f;
    f.rank = a.rank;
    f.commutative = true;
    for (int i = 0; i < a.rank && f.commutative; ++i)
        for (int j = 0; j < a.rank && f.commutative; ++j)
            for (int h = 0; h < a.rank; ++h)
                if (a.cc(i, j, h) != a.cc(j, i, h)) {
                    f.commutative = false;
                    break;
                }
    auto filt = radical_filtration(a);
    f.dim_rad = (int)span_basis(filt.rad, a.rank).size();
    f.dim_rad2 = (int)filt.rad2.size();
    f.dim_rad3 = (int)filt.rad3.size();
    f.dim_center = (int)center_basis(a).size();
    RatAlgebra ss = semisimple_quotient(a);
    auto zc = center_basis(ss);
    f.dim_ss_center = (int)zc.size();
    f.split = true;
    for (const auto& z : zc) {
        if (!splits_over_Q(min_poly(ss, z))) {
            f.split = false;
            break;
        }
    }
    return f;
}

std::string Fingerprint::str() const
{
    std::ostringstream os;
    os << "rank=" << rank << (commutative ? " comm" : " noncomm") << " rad=" << dim_rad
       << " rad2=" << dim_rad2 << " rad3=" << dim_rad3 << " Z=" << dim_center
       << " Zss=" << dim_ss_center << (split ? " split" : " nonsplit");
    return os.str();
}

std::string Fingerprint::json() const
{
    nlohmann::json j;
    j["rank"] = rank;
    j["commutative"] = commutative;
    j["dim_rad"] = dim_rad;
    j["dim_rad2"] = dim_rad2;
    j["dim_rad3"] = dim_rad3;
    j["dim_center"] = dim_center;
    j["dim_ss_center"] = dim_ss_center;
    j["split"] = split;
    return j.dump();
}

bool is_rational_square(const Rat& q)
{
    if (q < 0)
        return false;
    Int num = q.get_num(), den = q.get_den();
    return mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t());
}

Rank2Type classify_rank2(const Rat& s, const Rat& t)
{
    Rat disc = t * t + Rat(4) * s;
    if (disc == 0)
        return Rank2Type::DualNumbers;
    if (is_rational_square(disc))
        return Rank2Type::SplitSemisimple;
    return Rank2Type::FieldExtension;
}

std::string rank2_type_name(Rank2Type t)
{
    switch (t) {
        case Rank2Type::DualNumbers: return "DualNumbers";
        case Rank2Type::SplitSemisimple: return "SplitSemisimple";
        case Rank2Type::FieldExtension: return "FieldExtension";
    }
    return "?";
}

}  // namespace gaussainf

#include "gaussainf/models.hpp"

#include "gaussainf/quiver.hpp"

namespace gaussainf {

RatAlgebra algebra_product(const RatAlgebra& a, const RatAlgebra& b)
{
    int ra = a.rank, rb = b.rank;
    int rank = ra + rb;
    RatAlgebra p = RatAlgebra::with_rank(rank);
    // basis: z0 = (1,1), z1 = e = (1,0), then non-unit of A, then non-unit of B
    int e = 1;
    auto ai = [&](int i) { return 1 + i; };        // A basis index i>=1 -> 1+i ... e at 1
    auto bi = [&](int j) { return ra + j; };       // B basis index j>=1 -> ra+j
    // e is idempotent acting as the unit of the A block
    p.cc(e, e, e) = 1;
    for (int i = 1; i < ra; ++i) {
        p.cc(e, ai(i), ai(i)) = 1;
        p.cc(ai(i), e, ai(i)) = 1;
    }
    for (int i = 1; i < ra; ++i)
        for (int j = 1; j < ra; ++j)
            for (int h = 0; h < ra; ++h) {
                if (a.cc(i, j, h) == 0)
                    continue;
                if (h == 0)
                    p.cc(ai(i), ai(j), e) += a.cc(i, j, h);
                else
                    p.cc(ai(i), ai(j), ai(h)) += a.cc(i, j, h);
            }
    // f = z0 - e is the unit of the B block
    for (int i = 1; i < rb; ++i)
        for (int j = 1; j < rb; ++j)
            for (int h = 0; h < rb; ++h) {
                if (b.cc(i, j, h) == 0)
                    continue;
                if (h == 0) {
                    p.cc(bi(i), bi(j), 0) += b.cc(i, j, h);
                    p.cc(bi(i), bi(j), e) -= b.cc(i, j, h);
                } else {
                    p.cc(bi(i), bi(j), bi(h)) += b.cc(i, j, h);
                }
            }
    return p;
}

namespace {

RatAlgebra truncated_poly(int n)  // k[x]/(x^n), rank n
{
    RatAlgebra a = RatAlgebra::with_rank(n);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            if (i + j < n)
                a.cc(i, j, i + j) = 1;
    return a;
}

RatAlgebra square_zero(int rank)  // k[x_1..x_{rank-1}] / (x)^2
{
    return RatAlgebra::with_rank(rank);
}

RatAlgebra quantum_plane_dual(const Rat& q)  // k{x,y}/(x^2, y^2, xy - q yx)
{
    // basis 1, x, y, yx;  xy = q * yx
    RatAlgebra a = RatAlgebra::with_rank(4);
    a.cc(1, 2, 3) = q;
    a.cc(2, 1, 3) = 1;
    return a;
}

RatAlgebra matrix2()
{
    // basis I, E11, E12, E21;  E22 = I - E11
    RatAlgebra a = RatAlgebra::with_rank(4);
    a.cc(1, 1, 1) = 1;  // E11 E11
    a.cc(1, 2, 2) = 1;  // E11 E12
    a.cc(2, 3, 1) = 1;  // E12 E21 = E11
    a.cc(3, 1, 3) = 1;  // E21 E11
    a.cc(3, 2, 0) = 1;  // E21 E12 = E22 = I - E11
    a.cc(3, 2, 1) = -1;
    return a;
}

RatAlgebra comm_x2_y2()
{
    // k[x,y]/(x^2,y^2): basis 1, x, y, xy
    RatAlgebra a = RatAlgebra::with_rank(4);
    a.cc(1, 2, 3) = 1;
    a.cc(2, 1, 3) = 1;
    return a;
}

RatAlgebra comm_x3_xy_y2()
{
    // k[x,y]/(x^3, xy, y^2): basis 1, x, y, x^2
    RatAlgebra a = RatAlgebra::with_rank(4);
    a.cc(1, 1, 3) = 1;
    return a;
}

RatAlgebra comm_x2_y3_xy()
{
    // k[x,y]/(x^2, y^3, xy): basis 1, x, y, y^2
    RatAlgebra a = RatAlgebra::with_rank(4);
    a.cc(2, 2, 3) = 1;
    return a;
}

Rat parse_rat(const std::string& s)
{
    Rat r(s);
    r.canonicalize();
    return r;
}

RatAlgebra model_atom(const std::string& name)
{
    if (name == "k")
        return RatAlgebra::with_rank(1);
    if (name == "k[x]/(x^2)")
        return truncated_poly(2);
    if (name == "k[x]/(x^3)")
        return truncated_poly(3);
    if (name == "k[x]/(x^4)")
        return truncated_poly(4);
    if (name == "k[x,y]/(x,y)^2")
        return square_zero(3);
    if (name == "k[x,y,z]/(x,y,z)^2")
        return square_zero(4);
    if (name == "k[x,y]/(x^2,y^2)")
        return comm_x2_y2();
    if (name == "k[x,y]/(x^3,xy,y^2)")
        return comm_x3_xy_y2();
    if (name == "k[x,y]/(x^2,y^3,xy)")
        return comm_x2_y3_xy();
    if (name == "k{x,y}/(x^2,y^2,xy)")
        return quantum_plane_dual(Rat(0));
    if (name == "exterior")
        return quantum_plane_dual(Rat(-1));
    if (name == "M2")
        return matrix2();
    if (name.rfind("Aq(", 0) == 0 && name.back() == ')')
        return quantum_plane_dual(parse_rat(name.substr(3, name.size() - 4)));
    if (name.rfind("field(", 0) == 0 && name.back() == ')') {
        RatAlgebra a = RatAlgebra::with_rank(2);
        a.cc(1, 1, 0) = parse_rat(name.substr(6, name.size() - 7));
        return a;
    }
    if (name.rfind("quiver(", 0) == 0 && name.back() == ')') {
        std::string body = name.substr(7, name.size() - 8);
        auto semi = body.find(';');
        std::string spec = "vertices=" + body.substr(0, semi);
        if (semi != std::string::npos && semi + 1 < body.size())
            spec += "; arrows=" + body.substr(semi + 1);
        return path_algebra_rad2(parse_quiver(spec));
    }
    fail("UnknownModel", "no model algebra named '" + name + "'");
}

}  // namespace

RatAlgebra model_algebra(const std::string& descriptor)
{
    std::vector<std::string> atoms;
    size_t pos = 0;
    while (true) {
        size_t next = descriptor.find(" x ", pos);
        if (next == std::string::npos) {
            atoms.push_back(descriptor.substr(pos));
            break;
        }
        atoms.push_back(descriptor.substr(pos, next - pos));
        pos = next + 3;
    }
    RatAlgebra a = model_atom(atoms[0]);
    for (size_t i = 1; i < atoms.size(); ++i)
        a = algebra_product(a, model_atom(atoms[i]));
    auto bad = check_axioms(a);
    if (!bad.empty())
        fail("InternalInconsistency", "model '" + descriptor + "' violates " + bad.front());
    return a;
}

}  // namespace gaussainf

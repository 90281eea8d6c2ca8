#include "gaussainf/quiver.hpp"

#include <cctype>

namespace gaussainf {

QuiverSpec parse_quiver(const std::string& text)
{
    QuiverSpec q;
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (std::isspace((unsigned char)text[i]) || text[i] == ';'))
            ++i;
    };
    auto expect_kw = [&](const std::string& kw) {
        skip();
        if (text.compare(i, kw.size(), kw) != 0)
            fail("MalformedToken", "expected '" + kw + "' in quiver '" + text + "'");
        i += kw.size();
    };
    auto read_int = [&]() {
        skip();
        size_t start = i;
        while (i < text.size() && std::isdigit((unsigned char)text[i]))
            ++i;
        if (start == i)
            fail("MalformedToken", "expected integer in quiver '" + text + "'");
        return std::stoi(text.substr(start, i - start));
    };
    expect_kw("vertices");
    expect_kw("=");
    q.vertices = read_int();
    if (q.vertices < 1)
        fail("MalformedToken", "quiver needs at least one vertex");
    skip();
    if (i < text.size()) {
        expect_kw("arrows");
        expect_kw("=");
        while (true) {
            int s = read_int();
            expect_kw("->");
            int t = read_int();
            if (s < 0 || s >= q.vertices || t < 0 || t >= q.vertices)
                fail("ValidationFailed", "arrow endpoint out of range in quiver '" + text + "'");
            q.arrows.push_back({s, t});
            skip();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            break;
        }
    }
    return q;
}

std::pair<SignedGaussWord, BoundingCochain> quiver_word(const QuiverSpec& q, RingPtr ring)
{
    int nv = q.vertices - 1;                  // explicit vertex letters 1..nv
    int na = (int)q.arrows.size();            // arrow letters nv+1..nv+na
    SignedGaussWord w;
    auto arrow_letter = [&](int a) { return nv + 1 + a; };
    for (int v = 1; v <= nv; ++v) {
        w.occ.push_back({v, -1});
        for (int a = 0; a < na; ++a)
            if (q.arrows[(size_t)a].second == v)
                w.occ.push_back({arrow_letter(a), +1});
        for (int a = 0; a < na; ++a)
            if (q.arrows[(size_t)a].first == v)
                w.occ.push_back({arrow_letter(a), -1});
        w.occ.push_back({v, +1});
    }
    for (int a = 0; a < na; ++a)
        if (q.arrows[(size_t)a].second == 0)
            w.occ.push_back({arrow_letter(a), +1});
    for (int a = 0; a < na; ++a)
        if (q.arrows[(size_t)a].first == 0)
            w.occ.push_back({arrow_letter(a), -1});

    BoundingCochain b;
    auto one = IntPoly::constant(ring, 1);
    for (int v = 1; v <= nv; ++v)
        lincomb_add(b.combo, gen_wbar(v), one);
    return {w, b};
}

RatAlgebra path_algebra_rad2(const QuiverSpec& q)
{
    int nv = q.vertices - 1;
    int na = (int)q.arrows.size();
    int rank = 1 + nv + na;
    RatAlgebra a = RatAlgebra::with_rank(rank);
    auto vi = [&](int v) { return v; };          // vertex v>=1 at index v
    auto ai = [&](int arrow) { return 1 + nv + arrow; };
    // vertex idempotents (e_0 = 1 - sum e_v is implicit)
    for (int v = 1; v <= nv; ++v)
        a.cc(vi(v), vi(v), vi(v)) = 1;
    // e_v * arrow = arrow iff target = v; arrow * e_v = arrow iff source = v
    for (int r = 0; r < na; ++r) {
        auto [s, t] = q.arrows[(size_t)r];
        for (int v = 1; v <= nv; ++v) {
            if (t == v)
                a.cc(vi(v), ai(r), ai(r)) = 1;
            if (s == v)
                a.cc(ai(r), vi(v), ai(r)) = 1;
        }
    }
    return a;
}

}  // namespace gaussainf

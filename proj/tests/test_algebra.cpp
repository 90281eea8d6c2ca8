#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gaussainf/classify.hpp"
#include "gaussainf/deform.hpp"
#include "gaussainf/models.hpp"
#include "gaussainf/present.hpp"
#include "gaussainf/quiver.hpp"

using namespace gaussainf;

namespace {

FiniteAlgebra fig8_family()
{
    auto ring = make_ring({"t", "s"});
    auto a = FiniteAlgebra::with_rank(ring, ReductionSystem(ring, {}), {"w0", "w1"});
    a.cc(1, 1, 0) = IntPoly::parse(ring, "s");
    a.cc(1, 1, 1) = IntPoly::parse(ring, "-t");
    return a;
}

}  // namespace

TEST_CASE("check_axioms: valid and violating tables")
{
    // the square-zero algebra of rank 4
    auto ring = make_ring({});
    auto abullet = FiniteAlgebra::with_rank(ring, ReductionSystem(ring, {}),
                                            {"x0", "x1", "x2", "x3"});
    CHECK(check_axioms(abullet).empty());

    // x1 x1 = x2, x1 x2 = x0 breaks associativity: (x1 x1) x2 = x0 vs x1 (x1 x2) = x1
    auto bad = FiniteAlgebra::with_rank(ring, ReductionSystem(ring, {}), {"x0", "x1", "x2"});
    bad.cc(1, 1, 2) = IntPoly::constant(ring, 1);
    bad.cc(1, 2, 0) = IntPoly::constant(ring, 1);
    auto v = check_axioms(bad);
    CHECK(!v.empty());
    bool found = false;
    for (const auto& viol : v)
        if (viol.what == "assoc(1,1,2,0)" || viol.what.rfind("assoc(1,1,2", 0) == 0)
            found = true;
    CHECK(found);

    // symbolic family passes over its base ring
    CHECK(check_axioms(fig8_family()).empty());
}

TEST_CASE("specialize_algebra and BaseViolated")
{
    auto fam = fig8_family();
    auto a = specialize_algebra(fam, {{"t", Rat(0)}, {"s", Rat(1)}});
    CHECK(a.cc(1, 1, 0) == 1);  // x^2 = 1
    CHECK(a.cc(1, 1, 1) == 0);
    auto dual = specialize_algebra(fam, {{"t", Rat(0)}, {"s", Rat(0)}});
    CHECK(fingerprint(dual) == fingerprint(model_algebra("k[x]/(x^2)")));

    auto ring = make_ring({"t1", "t2"});
    auto g = FiniteAlgebra::with_rank(
        ring, ReductionSystem(ring, {IntPoly::parse(ring, "t1*t2")}), {"x0", "x1"});
    CHECK_THROWS_WITH_AS((void)specialize_algebra(g, {{"t1", Rat(1)}, {"t2", Rat(1)}}),
                         doctest::Contains("BaseViolated"), Error);
}

TEST_CASE("radical: trace-form criterion")
{
    // Q x Q: x^2 = 1
    auto qq = model_algebra("k x k");
    CHECK(radical_basis(qq).empty());
    // square-zero of rank 4: rad = 3, rad^2 = 0
    auto ab = model_algebra("k[x,y,z]/(x,y,z)^2");
    auto filt = radical_filtration(ab);
    CHECK(filt.rad.size() == 3);
    CHECK(filt.rad2.empty());
    // k[x]/(x^3): rad 2, rad^2 1
    auto kx3 = model_algebra("k[x]/(x^3)");
    auto f3 = radical_filtration(kx3);
    CHECK(f3.rad.size() == 2);
    CHECK(f3.rad2.size() == 1);
    CHECK(f3.rad3.empty());
    // the radical is a two-sided ideal: products stay inside its span
    for (const char* d : {"k[x]/(x^4)", "Aq(2)", "quiver(2;0->1,0->1)", "k x k[x]/(x^3)"}) {
        auto a = model_algebra(d);
        auto rad = radical_basis(a);
        auto span = span_basis(rad, a.rank);
        for (const auto& u : rad)
            for (int i = 0; i < a.rank; ++i) {
                std::vector<Rat> e((size_t)a.rank, Rat(0));
                e[(size_t)i] = 1;
                for (const auto& prod : {a.mul(u, e), a.mul(e, u)}) {
                    auto ext = span;
                    ext.push_back(prod);
                    CHECK(span_rank(ext, a.rank) == (int)span.size());
                }
            }
    }
}

TEST_CASE("fingerprints of the reference models")
{
    auto fp = [&](const char* d) { return fingerprint(model_algebra(d)); };

    Fingerprint k4{4, true, 0, 0, 0, 4, 4, true};
    CHECK(fp("k x k x k x k") == k4);
    Fingerprint m2{4, false, 0, 0, 0, 1, 1, true};
    CHECK(fp("M2") == m2);
    Fingerprint kron{4, false, 2, 0, 0, 1, 2, true};
    CHECK(fp("quiver(2;0->1,0->1)") == kron);
    CHECK(fp("quiver(2;0->1,1->0)") == kron);  // same summary, different algebra
    Fingerprint loop{4, false, 2, 0, 0, 2, 2, true};
    CHECK(fp("quiver(2;0->1,1->1)") == loop);
    Fingerprint ka2{4, false, 1, 0, 0, 2, 3, true};
    CHECK(fp("k x quiver(2;0->1)") == ka2);
    Fingerprint aq{4, false, 3, 1, 0, 2, 1, true};
    CHECK(fp("Aq(2)") == aq);
    CHECK(fp("k{x,y}/(x^2,y^2,xy)") == aq);
    CHECK(fp("exterior") == aq);
    Fingerprint a1{4, true, 3, 1, 0, 4, 1, true};
    CHECK(fp("Aq(1)") == a1);
    CHECK(fp("k[x,y]/(x^2,y^2)") == a1);
    Fingerprint kx4{4, true, 3, 2, 1, 4, 1, true};
    CHECK(fp("k[x]/(x^4)") == kx4);
    Fingerprint kx3xy{4, true, 3, 1, 0, 4, 1, true};
    CHECK(fp("k[x,y]/(x^3,xy,y^2)") == kx3xy);
    Fingerprint field{2, true, 0, 0, 0, 2, 2, false};
    CHECK(fp("field(2)") == field);
    CHECK(fp("field(-1)") == field);
    Fingerprint split2{2, true, 0, 0, 0, 2, 2, true};
    CHECK(fp("k x k") == split2);
    CHECK(fp("field(4)") == split2);  // x^2 = 4 splits
    // Kronecker point of the three-torus family: k x k x k[x]/(x^2)
    Fingerprint kkd{4, true, 1, 0, 0, 4, 3, true};
    CHECK(fp("k x k x k[x]/(x^2)") == kkd);
}

TEST_CASE("classify_rank2 trichotomy")
{
    CHECK(classify_rank2(Rat(0), Rat(0)) == Rank2Type::DualNumbers);
    CHECK(classify_rank2(Rat(0), Rat(1)) == Rank2Type::SplitSemisimple);  // Delta = 4 at (s,t)=(0,1)? t^2+4s = 1
    CHECK(classify_rank2(Rat(1), Rat(0)) == Rank2Type::SplitSemisimple);  // Delta = 4
    CHECK(classify_rank2(Rat(-1), Rat(0)) == Rank2Type::FieldExtension);  // Delta = -4
    CHECK(classify_rank2(Rat(1), Rat(1)) == Rank2Type::FieldExtension);   // Delta = 5
    // discriminant-zero curve
    CHECK(classify_rank2(Rat(-1, 4), Rat(1)) == Rank2Type::DualNumbers);
    // consistency with the fingerprints of the actual rank-2 tables
    for (int si = -2; si <= 2; ++si)
        for (int ti = -2; ti <= 2; ++ti) {
            Rat s(si), t(ti);
            auto a = specialize_algebra(fig8_family(), {{"t", -t}, {"s", s}});
            // x^2 = s + t x
            auto type = classify_rank2(s, t);
            auto f = fingerprint(a);
            if (type == Rank2Type::DualNumbers)
                CHECK(f == fingerprint(model_algebra("k[x]/(x^2)")));
            else if (type == Rank2Type::SplitSemisimple)
                CHECK(f == fingerprint(model_algebra("k x k")));
            else
                CHECK(f.dim_ss_center == 2);
        }
}

TEST_CASE("verify_presentation")
{
    auto fam = fig8_family();
    PresentationSpec p;
    p.symbols = {"x"};
    p.images = {{IntPoly::zero(fam.ring), IntPoly::constant(fam.ring, 1)}};  // x -> w1
    p.relation_texts = {"x^2 + t*x - s"};
    p.relations = {parse_nc_poly(fam.ring, p.symbols, "x^2 + t*x - s")};
    p.expected_rank = 2;
    auto rep = verify_presentation(fam, p);
    CHECK(rep.ok);

    p.relation_texts = {"x^2 + t*x + s"};
    p.relations = {parse_nc_poly(fam.ring, p.symbols, "x^2 + t*x + s")};
    auto rep2 = verify_presentation(fam, p);
    CHECK(!rep2.ok);

    // rank-1 algebra with no relations
    auto ring = make_ring({});
    auto triv = FiniteAlgebra::with_rank(ring, ReductionSystem(ring, {}), {"x0"});
    PresentationSpec q;
    q.expected_rank = 1;
    CHECK(verify_presentation(triv, q).ok);

    // rank mismatch
    q.expected_rank = 2;
    CHECK(!verify_presentation(triv, q).ok);
}

TEST_CASE("quiver parsing and the 3-Kronecker word")
{
    auto q = parse_quiver("vertices=2; arrows=0->1,0->1,0->1");
    CHECK(q.vertices == 2);
    CHECK(q.arrows.size() == 3);
    auto ring = make_ring({});
    auto [w, b] = quiver_word(q, ring);
    CHECK(word_text(w) == "1-2+3+4+1+2-3-4-");
    CHECK(b.combo.size() == 1);
    CHECK(b.combo.count(gen_wbar(1)) == 1);

    auto trivial = parse_quiver("vertices=1");
    auto [w0, b0] = quiver_word(trivial, ring);
    CHECK(w0.n() == 0);
    CHECK(b0.combo.empty());
}

TEST_CASE("A2 quiver roundtrip through the deformation pipeline")
{
    auto ring = make_ring({});
    auto q = parse_quiver("vertices=2; arrows=0->1");
    auto [w, b] = quiver_word(q, ring);
    CHECK(word_text(w) == "1-2+1+2-");
    auto alg = build_tubular(w, std::vector<int>((size_t)w.n(), 0), ring);
    auto def = deform(alg, b);
    CHECK(flatness_ideal(def).empty());
    auto a = degree_zero_algebra(def, ReductionSystem(ring, {}));
    auto ra = specialize_algebra(a, {});
    CHECK(fingerprint(ra) == fingerprint(path_algebra_rad2(q)));
    CHECK(fingerprint(ra) == fingerprint(model_algebra("quiver(2;0->1)")));
}

TEST_CASE("random quivers: idempotents, actions, radical square zero")
{
    std::mt19937 rng(515);
    auto ring = make_ring({});
    std::uniform_int_distribution<int> nv(1, 4), na(0, 5);
    for (int it = 0; it < 20; ++it) {
        QuiverSpec q;
        q.vertices = nv(rng);
        int arrows = na(rng);
        std::uniform_int_distribution<int> v(0, q.vertices - 1);
        for (int a = 0; a < arrows; ++a)
            q.arrows.push_back({v(rng), v(rng)});
        auto [w, b] = quiver_word(q, ring);
        auto alg = build_tubular(w, std::vector<int>((size_t)w.n(), 0), ring);
        auto def = deform(alg, b);
        // flat identically
        for (Gen g = 0; g < alg.basis.gen_count(); ++g)
            CHECK(m1b(def, g).empty());
        int nvert = q.vertices - 1;
        // orthogonal idempotents on the vertex letters
        for (int u = 1; u <= nvert; ++u)
            for (int vtx = 1; vtx <= nvert; ++vtx) {
                const LinComb* p = def.mb.find({gen_w(u), gen_w(vtx)});
                LinComb want;
                if (u == vtx)
                    lincomb_add(want, gen_w(u), IntPoly::constant(ring, 1));
                if (p)
                    CHECK(*p == want);
                else
                    CHECK(want.empty());
            }
        // left action detects targets, right action detects sources
        for (int u = 1; u <= nvert; ++u)
            for (size_t a = 0; a < q.arrows.size(); ++a) {
                Gen ga = gen_w(nvert + 1 + (int)a);
                const LinComb* p = def.mb.find({gen_w(u), ga});
                bool expect = q.arrows[a].second == u;
                CHECK((p != nullptr) == expect);
                if (p) {
                    LinComb want;
                    lincomb_add(want, ga, IntPoly::constant(ring, 1));
                    CHECK(*p == want);
                }
                const LinComb* pr = def.mb.find({ga, gen_w(u)});
                bool expect_r = q.arrows[a].first == u;
                CHECK((pr != nullptr) == expect_r);
            }
        // arrow products vanish
        for (size_t a = 0; a < q.arrows.size(); ++a)
            for (size_t c = 0; c < q.arrows.size(); ++c)
                CHECK(def.mb.find({gen_w(nvert + 1 + (int)a), gen_w(nvert + 1 + (int)c)}) ==
                      nullptr);
        auto ra = specialize_algebra(degree_zero_algebra(def, ReductionSystem(ring, {})), {});
        auto filt = radical_filtration(ra);
        CHECK(filt.rad2.empty());
        CHECK(fingerprint(ra) == fingerprint(path_algebra_rad2(q)));
    }
}

TEST_CASE("rescale")
{
    auto ring = make_ring({"u"});
    // a rank-2 point x^2 = 1
    auto a = FiniteAlgebra::with_rank(ring, ReductionSystem(ring, {}), {"x0", "x1"});
    a.cc(1, 1, 0) = IntPoly::constant(ring, 1);
    auto at1 = rescale(a, IntPoly::constant(ring, 1));
    CHECK(at1.c == a.c);
    auto at2 = rescale(a, IntPoly::constant(ring, 2));
    CHECK(at2.cc(1, 1, 0) == IntPoly::constant(ring, 4));
    // symbolic rescaling preserves the axioms; t = 0 yields the square-zero table
    auto sym = rescale(a, IntPoly::variable(ring, "u"));
    CHECK(check_axioms(sym).empty());
    auto rat = specialize_algebra(sym, {{"u", Rat(0)}});
    for (int h = 0; h < 2; ++h)
        CHECK(rat.cc(1, 1, h) == 0);

    // random valid rational points of every reference model stay associative
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> pick(0, 6);
    const char* models[] = {"M2",          "Aq(3)", "k x k x k[x]/(x^2)", "k[x]/(x^4)",
                            "quiver(2;0->1,0->1)", "k x quiver(2;0->1)", "exterior"};
    for (int it = 0; it < 20; ++it) {
        auto m = model_algebra(models[pick(rng)]);
        FiniteAlgebra f = FiniteAlgebra::with_rank(ring, ReductionSystem(ring, {}), m.names);
        for (int i = 0; i < m.rank; ++i)
            for (int j = 0; j < m.rank; ++j)
                for (int h = 0; h < m.rank; ++h) {
                    const Rat& c = m.cc(i, j, h);
                    CHECK(c.get_den() == 1);
                    f.cc(i, j, h) = IntPoly::constant(ring, c.get_num());
                }
        auto scaled = rescale(f, IntPoly::variable(ring, "u"));
        CHECK(check_axioms(scaled).empty());
        auto zero = specialize_algebra(scaled, {{"u", Rat(0)}});
        for (int i = 1; i < m.rank; ++i)
            for (int j = 1; j < m.rank; ++j)
                for (int h = 0; h < m.rank; ++h)
                    CHECK(zero.cc(i, j, h) == 0);
    }
}

TEST_CASE("min_poly and splitting detection")
{
    auto kk = model_algebra("k x k");
    // element (1, -1): minimal polynomial X^2 - 1
    std::vector<Rat> x = {Rat(0), Rat(1)};  // basis: unit, e=(1,0): e has minpoly X^2 - X
    auto mp = min_poly(kk, x);
    REQUIRE(mp.size() == 3);
    CHECK(mp[0] == 0);
    CHECK(mp[1] == -1);
    CHECK(mp[2] == 1);
    CHECK(splits_over_Q(mp));
    CHECK(splits_over_Q({Rat(-4), Rat(0), Rat(1)}));   // X^2 - 4
    CHECK(!splits_over_Q({Rat(-2), Rat(0), Rat(1)}));  // X^2 - 2
    CHECK(!splits_over_Q({Rat(0), Rat(0), Rat(1)}));   // X^2, not squarefree
    CHECK(splits_over_Q({Rat(1), Rat(1)}));            // X + 1
}


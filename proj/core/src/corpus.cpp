#include "gaussainf/corpus.hpp"

#include "gaussainf/classify.hpp"
#include "gaussainf/models.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gaussainf {

using nlohmann::json;

std::string corpus_dir()
{
    if (const char* env = std::getenv("GAUSS_AINF_CORPUS"))
        return env;
#ifdef GAUSSAINF_CORPUS_DEFAULT
    return GAUSSAINF_CORPUS_DEFAULT;
#else
    return "corpus";
#endif
}

namespace {

json read_json(const std::string& path, const std::string& what)
{
    std::ifstream in(path);
    if (!in)
        fail("UnknownCase", "cannot open " + what + " '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail("ValidationFailed", what + " '" + path + "': " + e.what());
    }
    return j;
}

Rat json_to_rat(const json& v)
{
    if (v.is_number_integer())
        return Rat((long)v.get<long long>());
    Rat r(v.get<std::string>());
    r.canonicalize();
    return r;
}

}  // namespace

std::vector<std::string> corpus_index()
{
    json j = read_json(corpus_dir() + "/index.json", "corpus index");
    std::vector<std::string> names;
    for (const auto& r : j.at("records"))
        names.push_back(r.get<std::string>());
    return names;
}

CaseRecord load_record(const std::string& name)
{
    for (char c : name)
        if (!(std::isalnum((unsigned char)c) || c == '-' || c == '_'))
            fail("UnknownCase", "bad record name '" + name + "'");
    std::string path = corpus_dir() + "/records/" + name + ".json";
    json j = read_json(path, "case record");

    CaseRecord rec;
    rec.name = j.at("name").get<std::string>();
    if (rec.name != name)
        fail("ValidationFailed", "record name field '" + rec.name + "' != file name '" + name + "'");
    rec.word = parse_word(j.at("word").get<std::string>());
    int n = rec.word.n();
    rec.grading_w.assign(n, 0);
    if (j.contains("grading"))
        for (auto& [key, val] : j.at("grading").items()) {
            Gen g = parse_gen(key, n);
            if (gen_bar(g) || gen_letter(g) == 0)
                fail("ValidationFailed", "grading keys must be w1..wn");
            rec.grading_w[gen_letter(g) - 1] = val.get<int>();
        }
    for (const auto& v : j.value("variables", json::array()))
        rec.variables.push_back(v.get<std::string>());
    rec.ring = make_ring(rec.variables);

    if (j.contains("packet")) {
        std::string pfile = j.at("packet").get<std::string>();
        rec.packet = load_packet_file(corpus_dir() + "/packets/" + pfile, rec.ring);
        if (!(rec.packet->word == rec.word))
            fail("ValidationFailed", "packet word differs from record word in '" + name + "'");
        if (rec.packet->grading_w != rec.grading_w)
            fail("ValidationFailed", "packet grading differs from record grading in '" + name + "'");
    }
    GradedBasis basis;
    basis.n = n;
    basis.deg_w.assign(n + 1, 0);
    for (int i = 1; i <= n; ++i)
        basis.deg_w[i] = rec.grading_w[i - 1];
    if (j.contains("bounding"))
        rec.bounding = parse_lincomb(j.at("bounding").get<std::string>(), n, rec.ring);
    for (const auto& [g, c] : rec.bounding)
        if (basis.deg(g) != 1)
            fail("ValidationFailed",
                 "bounding template supported on " + gen_name(g) + " of degree != 1");

    std::vector<IntPoly> rels;
    for (const auto& r : j.value("base", json::array()))
        rels.push_back(IntPoly::parse(rec.ring, r.get<std::string>()));
    rec.base = ReductionSystem(rec.ring, rels);
    rec.verify_arity = j.value("verify_arity", 0);

    if (j.contains("presentation")) {
        const json& pj = j.at("presentation");
        PresentationSpec p;
        for (const auto& s : pj.at("symbols"))
            p.symbols.push_back(s.get<std::string>());
        p.expected_rank = pj.at("rank").get<int>();
        for (const auto& r : pj.at("relations")) {
            p.relation_texts.push_back(r.get<std::string>());
            p.relations.push_back(parse_nc_poly(rec.ring, p.symbols, r.get<std::string>()));
        }
        for (const auto& sym : p.symbols) {
            if (!pj.at("map").contains(sym))
                fail("ValidationFailed", "presentation map misses symbol '" + sym + "'");
            rec.presentation_map_texts.push_back({sym, pj.at("map").at(sym).get<std::string>()});
        }
        rec.presentation = std::move(p);
        if (rec.presentation->relations.empty() && rec.presentation->expected_rank != 1)
            fail("ValidationFailed", "empty relation list with rank != 1 in '" + name + "'");
    }
    for (const auto& sc : j.value("specializations", json::array())) {
        SpecializationCase s;
        for (auto& [key, val] : sc.at("assign").items())
            s.assign[key] = json_to_rat(val);
        s.type = sc.at("type").get<std::string>();
        rec.specializations.push_back(std::move(s));
    }
    if (j.contains("expected_m1b"))
        for (auto& [key, val] : j.at("expected_m1b").items()) {
            Gen g = parse_gen(key, n);
            LinComb expect;
            for (auto& [out, poly] : val.items())
                lincomb_add(expect, parse_gen(out, n),
                            IntPoly::parse(rec.ring, poly.get<std::string>()));
            rec.expected_m1b[g] = std::move(expect);
        }
    for (const auto& f : j.value("expected_flatness", json::array()))
        rec.expected_flatness.push_back(IntPoly::parse(rec.ring, f.get<std::string>()));
    return rec;
}

AInfAlgebra record_algebra(const CaseRecord& rec)
{
    AInfAlgebra alg = build_tubular(rec.word, rec.grading_w, rec.ring);
    if (rec.packet)
        alg = load_case_packet(alg, *rec.packet);
    return alg;
}

DeformedStructure record_deformed(const CaseRecord& rec, const AInfAlgebra& alg)
{
    BoundingCochain b;
    b.combo = rec.bounding;
    return deform(alg, b);
}

std::string CaseRunResult::summary_line(const std::string& name, const std::string& word) const
{
    auto flag = [](bool present, bool ok) {
        return present ? (ok ? std::string("OK") : std::string("FAIL")) : std::string("-");
    };
    std::string s = name + " word=" + (word.empty() ? "(empty)" : word);
    s += " ainf=" + flag(true, ainf_ok);
    s += " deformed=" + flag(true, deformed_ok);
    s += " m1b=" + flag(has_m1b, m1b_ok);
    s += " flat=" + flag(has_flatness, flatness_ok);
    s += " pres=" + (has_presentation ? (presentation_ok ? std::string("TRUE")
                                                         : std::string("FALSE"))
                                      : std::string("-"));
    s += " specs=" + std::to_string(spec_pass) + "/" + std::to_string(spec_total);
    return s;
}

CaseRunResult run_case(const CaseRecord& rec)
{
    CaseRunResult r;
    AInfAlgebra alg = record_algebra(rec);
    check_strict_unitality(alg);
    int depth = rec.verify_arity > 0 ? rec.verify_arity : default_verify_arity(alg.max_arity());
    {
        auto bad = verify_ainf(alg, depth, &rec.base);
        r.ainf_ok = bad.empty();
        for (const auto& v : bad) {
            r.failures.push_back("ainf: nonzero relation at arity " +
                                 std::to_string(v.tuple.size()));
            if (r.failures.size() > 8)
                break;
        }
    }
    DeformedStructure def = record_deformed(rec, alg);
    {
        auto bad = verify_ainf(def.mb, alg.basis, depth, alg.ring, &rec.base);
        r.deformed_ok = bad.empty();
        if (!bad.empty())
            r.failures.push_back("deformed: " + std::to_string(bad.size()) +
                                 " nonzero relation instance(s)");
    }
    if (!rec.expected_m1b.empty()) {
        r.has_m1b = true;
        for (Gen g = 0; g < alg.basis.gen_count(); ++g) {
            LinComb got = m1b(def, g);
            auto it = rec.expected_m1b.find(g);
            LinComb want = it == rec.expected_m1b.end() ? LinComb{} : it->second;
            if (!(got == want)) {
                r.m1b_ok = false;
                r.failures.push_back("m1b(" + gen_name(g) + ") = " + lincomb_str(got) +
                                     ", expected " + lincomb_str(want));
            }
        }
    }
    if (!rec.expected_flatness.empty()) {
        r.has_flatness = true;
        auto gens = flatness_ideal(def);
        auto matches = [](const std::vector<IntPoly>& a, const std::vector<IntPoly>& b) {
            if (a.size() != b.size())
                return false;
            for (const auto& p : a) {
                bool found = false;
                for (const auto& q : b)
                    if (p == q || p == -q)
                        found = true;
                if (!found)
                    return false;
            }
            return true;
        };
        if (!matches(gens, rec.expected_flatness)) {
            r.flatness_ok = false;
            std::string got;
            for (const auto& p : gens)
                got += p.str() + "; ";
            r.failures.push_back("flatness ideal {" + got + "} differs from the expected list");
        }
    }
    if (rec.presentation || !rec.specializations.empty()) {
        FiniteAlgebra a = degree_zero_algebra(def, rec.base);
        if (rec.presentation) {
            r.has_presentation = true;
            auto p = record_presentation(rec, a);
            auto rep = verify_presentation(a, p);
            r.presentation_ok = rep.ok;
            for (const auto& f : rep.failures)
                r.failures.push_back("presentation: " + f);
        }
        r.spec_total = (int)rec.specializations.size();
        for (const auto& sc : rec.specializations) {
            try {
                RatAlgebra ra = specialize_algebra(a, sc.assign);
                Fingerprint got = fingerprint(ra);
                Fingerprint want = fingerprint(model_algebra(sc.type));
                if (got == want) {
                    ++r.spec_pass;
                } else {
                    r.failures.push_back("specialization '" + sc.type + "': got " + got.str() +
                                         ", expected " + want.str());
                }
            } catch (const Error& e) {
                r.failures.push_back("specialization '" + sc.type + "': " + e.what());
            }
        }
    }
    return r;
}

PresentationSpec record_presentation(const CaseRecord& rec, const FiniteAlgebra& a)
{
    if (!rec.presentation)
        fail("ValidationFailed", "record '" + rec.name + "' has no presentation");
    PresentationSpec p = *rec.presentation;
    p.images.clear();
    for (const auto& [sym, text] : rec.presentation_map_texts) {
        LinComb combo = parse_lincomb(text, rec.word.n(), rec.ring);
        std::vector<IntPoly> coords((size_t)a.rank, IntPoly::zero(rec.ring));
        for (const auto& [g, c] : combo) {
            int idx = -1;
            for (int i = 0; i < a.rank; ++i)
                if (a.names[(size_t)i] == gen_name(g))
                    idx = i;
            if (idx < 0)
                fail("SymbolUnmapped", "presentation image " + gen_name(g) +
                                           " is not a degree-0 basis element");
            coords[(size_t)idx] += c;
        }
        p.images.push_back(std::move(coords));
    }
    return p;
}

}  // namespace gaussainf

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "gaussainf/classify.hpp"
#include "gaussainf/corpus.hpp"
#include "gaussainf/models.hpp"
#include "gaussainf/quiver.hpp"

using namespace gaussainf;
using nlohmann::json;

namespace {

void diag(const std::string& code, const std::string& msg)
{
    json j;
    j["error"] = code;
    j["message"] = msg;
    std::cerr << j.dump() << "\n";
}

std::vector<int> parse_grading_flag(const std::string& text, int n)
{
    std::vector<int> grading((size_t)n, 0);
    if (text.empty())
        return grading;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            fail("MalformedToken", "grading item '" + item + "' is not w<i>=<int>");
        Gen g = parse_gen(item.substr(0, eq), n);
        if (gen_bar(g) || gen_letter(g) == 0)
            fail("MalformedToken", "grading keys must be w1..wn");
        grading[(size_t)(gen_letter(g) - 1)] = std::stoi(item.substr(eq + 1));
    }
    return grading;
}

std::map<std::string, Rat> parse_assignment(const std::string& text)
{
    std::map<std::string, Rat> out;
    if (text.empty())
        return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            fail("MalformedToken", "assignment item '" + item + "' is not var=value");
        Rat v(item.substr(eq + 1));
        v.canonicalize();
        out[item.substr(0, eq)] = v;
    }
    return out;
}

std::string op_str(const OpKey& key, const LinComb& val)
{
    std::string s = "m" + std::to_string(key.size()) + "(";
    for (size_t i = 0; i < key.size(); ++i) {
        if (i)
            s += ",";
        s += gen_name(key[i]);
    }
    s += ") = " + lincomb_str(val);
    return s;
}

void print_ops(const OpsTable& ops, bool json_mode, std::ostream& os)
{
    if (json_mode) {
        json entries = json::array();
        for (const auto& [arity, table] : ops.by_arity)
            for (const auto& [key, val] : table)
                for (const auto& [g, c] : val) {
                    json e;
                    e["arity"] = arity;
                    json in = json::array();
                    for (Gen gi : key)
                        in.push_back(gen_name(gi));
                    e["inputs"] = in;
                    e["output"] = gen_name(g);
                    e["coeff"] = c.str();
                    entries.push_back(e);
                }
        json out;
        out["entries"] = entries;
        os << out.dump(2) << "\n";
    } else {
        for (const auto& [arity, table] : ops.by_arity)
            for (const auto& [key, val] : table)
                os << op_str(key, val) << "\n";
    }
}

AInfAlgebra build_from_flags(const std::string& word_in, const std::string& grading_in,
                             const std::string& packet_file)
{
    auto w = parse_word(word_in);
    auto grading = parse_grading_flag(grading_in, w.n());
    RingPtr ring = make_ring({});
    CasePacket packet;
    bool have_packet = false;
    if (!packet_file.empty()) {
        std::ifstream in(packet_file);
        if (!in)
            fail("UnknownCase", "cannot open packet file '" + packet_file + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        json pj = json::parse(ss.str());
        std::vector<std::string> vars;
        for (const auto& v : pj.at("variables"))
            vars.push_back(v.get<std::string>());
        ring = make_ring(vars);
        packet = parse_packet_json(ss.str(), ring);
        have_packet = true;
    }
    auto alg = build_tubular(w, grading, ring);
    if (have_packet)
        alg = load_case_packet(alg, packet);
    return alg;
}

int run_enumerate(int n, bool json_mode, bool topo)
{
    auto classes = enumerate_classes(n);
    if (json_mode) {
        json arr = json::array();
        for (const auto& w : classes) {
            auto t = topology(w);
            json row;
            row["word"] = word_text(w);
            row["n"] = t.n;
            row["genus"] = t.genus;
            row["boundary"] = t.faces;
            arr.push_back(row);
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& w : classes) {
            std::cout << word_text(w);
            if (topo) {
                auto t = topology(w);
                std::cout << "\tgenus=" << t.genus << "\tboundary=(";
                for (size_t i = 0; i < t.faces.size(); ++i)
                    std::cout << (i ? "," : "") << t.faces[i];
                std::cout << ")";
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int run_analyze(const std::string& word_text_in, bool json_mode)
{
    auto w = parse_word(word_text_in);
    auto t = topology(w);
    if (json_mode) {
        json row;
        row["word"] = word_text(w);
        row["n"] = t.n;
        row["genus"] = t.genus;
        row["euler"] = t.euler;
        row["boundary"] = t.faces;
        row["canonical"] = word_text(word_from_key(canonical_key(w)));
        std::cout << row.dump(2) << "\n";
        return 0;
    }
    std::cout << "word      " << word_text(w) << "\n";
    std::cout << "n         " << t.n << "\n";
    std::cout << "genus     " << t.genus << "\n";
    std::cout << "euler     " << t.euler << "\n";
    std::cout << "boundary  (";
    for (size_t i = 0; i < t.faces.size(); ++i)
        std::cout << (i ? "," : "") << t.faces[i];
    std::cout << ")\n";
    std::cout << "canonical " << word_text(word_from_key(canonical_key(w))) << "\n";
    return 0;
}

int run_verify_alg(const AInfAlgebra& alg, int max_arity, const ReductionSystem* base)
{
    int depth = max_arity > 0 ? max_arity : default_verify_arity(alg.max_arity());
    auto bad = verify_ainf(alg, depth, base);
    if (bad.empty()) {
        std::cout << "OK: all A-infinity relations hold up to total arity " << depth << "\n";
        return 0;
    }
    for (const auto& v : bad)
        diag("AInfViolation", op_str(v.tuple, v.value));
    std::cout << bad.size() << " violated relation instance(s)\n";
    return 2;
}

std::vector<std::string> read_lines(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail("UnknownCase", "cannot open expectation file '" + path + "'");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty())
            lines.push_back(line);
    return lines;
}

int diff_lines(const std::vector<std::string>& got, const std::string& expect_path)
{
    auto want = read_lines(expect_path);
    int bad = 0;
    size_t m = std::max(got.size(), want.size());
    for (size_t i = 0; i < m; ++i) {
        const std::string g = i < got.size() ? got[i] : "<missing>";
        const std::string w = i < want.size() ? want[i] : "<missing>";
        if (g != w) {
            diag("ReproDiff", "line " + std::to_string(i + 1) + ": got '" + g + "', expected '" +
                                  w + "'");
            ++bad;
        }
    }
    return bad;
}

int run_repro(const std::string& target)
{
    std::string dir = corpus_dir() + "/expected/";
    std::vector<std::string> got;
    if (target == "table1") {
        // row order follows the shipped expectation file (one row per class)
        auto rows = read_lines(dir + "table1.txt");
        std::set<EquivClassKey> enumerated;
        for (int n = 1; n <= 3; ++n)
            for (const auto& w : enumerate_classes(n))
                enumerated.insert(canonical_key(w));
        std::set<EquivClassKey> listed;
        for (const auto& row : rows) {
            std::string wtext = row.substr(0, row.find(' '));
            auto w = parse_word(wtext);
            auto t = topology(w);
            std::ostringstream os;
            os << wtext << " genus=" << t.genus << " boundary=(";
            for (size_t i = 0; i < t.faces.size(); ++i)
                os << (i ? "," : "") << t.faces[i];
            os << ")";
            got.push_back(os.str());
            listed.insert(canonical_key(w));
        }
        int bad = diff_lines(got, dir + "table1.txt");
        if (listed != enumerated) {
            diag("ReproDiff", "table rows do not biject with the enumerated classes");
            ++bad;
        }
        for (const auto& line : got)
            std::cout << line << "\n";
        std::cout << (bad ? "DIFF\n" : "MATCH\n");
        return bad ? 2 : 0;
    }
    if (target == "genus-table") {
        for (int n = 1; n <= 5; ++n) {
            std::map<int, int> by_genus;
            int total = 0;
            for (const auto& w : enumerate_classes(n)) {
                by_genus[topology(w).genus]++;
                ++total;
            }
            std::ostringstream os;
            os << "n=" << n;
            for (int g = 0; g <= 4; ++g)
                os << " g" << g << "=" << by_genus[g];
            os << " total=" << total;
            got.push_back(os.str());
        }
        int bad = diff_lines(got, dir + "genus_table.txt");
        for (const auto& line : got)
            std::cout << line << "\n";
        std::cout << (bad ? "DIFF\n" : "MATCH\n");
        return bad ? 2 : 0;
    }
    if (target == "cases") {
        for (const auto& name : corpus_index()) {
            auto rec = load_record(name);
            auto res = run_case(rec);
            got.push_back(res.summary_line(name, word_text(rec.word)));
            if (!res.ok())
                for (const auto& f : res.failures)
                    diag("CaseFailure", name + ": " + f);
        }
        int bad = diff_lines(got, dir + "cases.txt");
        for (const auto& line : got)
            std::cout << line << "\n";
        std::cout << (bad ? "DIFF\n" : "MATCH\n");
        return bad ? 2 : 0;
    }
    fail("MalformedToken", "unknown repro target '" + target + "' (table1|genus-table|cases)");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact A-infinity algebras of immersed curves from signed Gauss words"};
    app.require_subcommand(1);

    auto* cmd_enum =
        app.add_subcommand("enumerate", "list equivalence classes of signed Gauss words");
    int enum_n = 0;
    bool enum_json = false, enum_topo = false;
    cmd_enum->add_option("--n", enum_n, "number of double points")->required();
    cmd_enum->add_flag("--json", enum_json, "JSON output");
    cmd_enum->add_flag("--topology", enum_topo, "append genus/boundary columns");

    auto* cmd_ana = app.add_subcommand("analyze", "topology of one word");
    std::string ana_word;
    bool ana_json = false;
    cmd_ana->add_option("word", ana_word, "signed Gauss word, e.g. 1+2-2+1-")->required();
    cmd_ana->add_flag("--json", ana_json, "JSON output");

    auto* cmd_build = app.add_subcommand("build", "emit the A-infinity operation table");
    std::string build_word, build_grading, build_packet;
    bool build_json = false;
    cmd_build->add_option("word", build_word)->required();
    cmd_build->add_option("--grading", build_grading, "e.g. w1=1,w2=0");
    cmd_build->add_option("--packet", build_packet, "case packet JSON file");
    cmd_build->add_flag("--json", build_json);

    auto* cmd_verify = app.add_subcommand("verify", "run the symbolic A-infinity checker");
    std::string ver_case, ver_word, ver_grading, ver_packet;
    int ver_arity = 0;
    cmd_verify->add_option("--case", ver_case, "corpus record name");
    cmd_verify->add_option("--word", ver_word);
    cmd_verify->add_option("--grading", ver_grading);
    cmd_verify->add_option("--packet", ver_packet);
    cmd_verify->add_option("--max-arity", ver_arity, "total arity bound");

    auto* cmd_def = app.add_subcommand("deform", "flatness ideal, curvature and degree-0 table");
    std::string def_case, def_word, def_grading, def_packet, def_b, def_base;
    cmd_def->add_option("--case", def_case, "corpus record name");
    cmd_def->add_option("--word", def_word);
    cmd_def->add_option("--grading", def_grading);
    cmd_def->add_option("--packet", def_packet);
    cmd_def->add_option("--b", def_b, "bounding cochain, e.g. t1*wbar1+t2*wbar2");
    cmd_def->add_option("--base", def_base, "semicolon-separated base relations");

    auto* cmd_pres = app.add_subcommand("present", "check the boxed presentation of a case");
    std::string pres_case;
    cmd_pres->add_option("--case", pres_case)->required();

    auto* cmd_cls = app.add_subcommand("classify", "fingerprint a specialization of a case");
    std::string cls_case, cls_at;
    cmd_cls->add_option("--case", cls_case)->required();
    cmd_cls->add_option("--at", cls_at, "assignment, e.g. t1=1,s1=1/2")->required();

    auto* cmd_repro = app.add_subcommand("repro", "regenerate a paper table and diff");
    std::string repro_target;
    cmd_repro->add_option("target", repro_target, "table1 | genus-table | cases")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_enum)
            return run_enumerate(enum_n, enum_json, enum_topo);
        if (*cmd_ana)
            return run_analyze(ana_word, ana_json);
        if (*cmd_build) {
            auto alg = build_from_flags(build_word, build_grading, build_packet);
            print_ops(alg.ops, build_json, std::cout);
            return 0;
        }
        if (*cmd_verify) {
            if (!ver_case.empty()) {
                auto rec = load_record(ver_case);
                auto alg = record_algebra(rec);
                int depth = ver_arity > 0              ? ver_arity
                            : rec.verify_arity > 0     ? rec.verify_arity
                                                       : default_verify_arity(alg.max_arity());
                int rc = run_verify_alg(alg, depth, &rec.base);
                if (rc != 0)
                    return rc;
                if (!rec.bounding.empty()) {
                    auto def = record_deformed(rec, alg);
                    auto bad = verify_ainf(def.mb, alg.basis, depth, alg.ring, &rec.base);
                    if (!bad.empty()) {
                        for (const auto& v : bad)
                            diag("AInfViolation", "deformed: " + op_str(v.tuple, v.value));
                        return 2;
                    }
                    std::cout << "OK: deformed structure verified modulo the base ring\n";
                }
                return 0;
            }
            auto alg = build_from_flags(ver_word, ver_grading, ver_packet);
            return run_verify_alg(alg, ver_arity, nullptr);
        }
        if (*cmd_def) {
            AInfAlgebra alg;
            LinComb bcombo;
            ReductionSystem base;
            if (!def_case.empty()) {
                auto rec = load_record(def_case);
                alg = record_algebra(rec);
                bcombo = rec.bounding;
                base = rec.base;
            } else {
                alg = build_from_flags(def_word, def_grading, def_packet);
                if (!def_b.empty())
                    bcombo = parse_lincomb(def_b, alg.basis.n, alg.ring);
                std::vector<IntPoly> rels;
                if (!def_base.empty()) {
                    std::stringstream ss(def_base);
                    std::string item;
                    while (std::getline(ss, item, ';'))
                        rels.push_back(IntPoly::parse(alg.ring, item));
                }
                base = ReductionSystem(alg.ring, rels);
            }
            BoundingCochain b;
            b.combo = bcombo;
            auto def = deform(alg, b);
            json out;
            json fl = json::array();
            for (const auto& p : flatness_ideal(def))
                fl.push_back(p.str());
            out["flatness"] = fl;
            out["curvature"] = lincomb_str(curvature(def));
            auto a = degree_zero_algebra(def, base);
            out["algebra"] = json::parse(algebra_json(a));
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (*cmd_pres) {
            auto rec = load_record(pres_case);
            auto alg = record_algebra(rec);
            auto def = record_deformed(rec, alg);
            auto a = degree_zero_algebra(def, rec.base);
            auto p = record_presentation(rec, a);
            auto rep = verify_presentation(a, p);
            if (rep.ok) {
                std::cout << "TRUE: all " << p.relations.size() << " relations vanish at rank "
                          << p.expected_rank << "\n";
                return 0;
            }
            for (const auto& f : rep.failures)
                diag("PresentationFailure", f);
            std::cout << "FALSE\n";
            return 2;
        }
        if (*cmd_cls) {
            auto rec = load_record(cls_case);
            auto alg = record_algebra(rec);
            auto def = record_deformed(rec, alg);
            auto a = degree_zero_algebra(def, rec.base);
            auto ra = specialize_algebra(a, parse_assignment(cls_at));
            std::cout << fingerprint(ra).json() << "\n";
            return 0;
        }
        if (*cmd_repro)
            return run_repro(repro_target);
    } catch (const Error& e) {
        diag(e.code(), e.what());
        return 1;
    } catch (const std::exception& e) {
        diag("Unexpected", e.what());
        return 1;
    }
    return 0;
}

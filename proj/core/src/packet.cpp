#include "gaussainf/packet.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gaussainf {

using nlohmann::json;

CasePacket parse_packet_json(const std::string& json_text, RingPtr ring)
{
    json j = json::parse(json_text);
    CasePacket p;
    p.name = j.at("name").get<std::string>();
    p.word = parse_word(j.at("word").get<std::string>());
    int n = p.word.n();
    p.grading_w.assign(n, 0);
    for (auto& [key, val] : j.at("grading").items()) {
        Gen g = parse_gen(key, n);
        if (gen_bar(g) || gen_letter(g) == 0)
            fail("ValidationFailed", "grading keys must be w1..wn, got '" + key + "'");
        p.grading_w[gen_letter(g) - 1] = val.get<int>();
    }
    for (const auto& v : j.at("variables"))
        p.variables.push_back(v.get<std::string>());
    for (const auto& name : p.variables)
        if (ring->index_of(name) < 0)
            fail("ValidationFailed", "packet variable '" + name + "' missing from ring");
    for (const auto& e : j.at("entries")) {
        PacketEntry pe;
        for (const auto& tok : e.at("inputs"))
            pe.inputs.push_back(parse_gen(tok.get<std::string>(), n));
        if (e.contains("arity") && e.at("arity").get<int>() != (int)pe.inputs.size())
            fail("ValidationFailed", "entry arity disagrees with input count in packet '" +
                                         p.name + "'");
        pe.output = parse_gen(e.at("output").get<std::string>(), n);
        pe.coeff = IntPoly::parse(ring, e.at("coeff").get<std::string>());
        p.entries.push_back(std::move(pe));
    }
    return p;
}

CasePacket load_packet_file(const std::string& path, RingPtr ring)
{
    std::ifstream in(path);
    if (!in)
        fail("UnknownCase", "cannot open packet file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_packet_json(ss.str(), ring);
}

AInfAlgebra load_case_packet(const AInfAlgebra& alg, const CasePacket& packet)
{
    if (!(packet.word == alg.word))
        fail("WordMismatch", "packet '" + packet.name + "' is for word " +
                                 word_text(packet.word) + ", algebra has " + word_text(alg.word));
    for (int i = 1; i <= alg.basis.n; ++i)
        if (packet.grading_w[i - 1] != alg.basis.deg_w[i])
            fail("GradingMismatch", "packet '" + packet.name + "' grading differs at w" +
                                        std::to_string(i));
    AInfAlgebra out = alg;
    for (const auto& e : packet.entries)
        out.ops.add(e.inputs, e.output, lift_to_ring(e.coeff, alg.ring));
    check_degree_law(out.ops, out.basis);
    return out;
}

}  // namespace gaussainf

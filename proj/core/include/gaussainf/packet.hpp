#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gaussainf/ainf.hpp"

namespace gaussainf {

/* One fully signed extra operation entry contributed by a compactification
 * polygon. */
struct PacketEntry {
    OpKey inputs;
    Gen output;
    IntPoly coeff;
};

/* The per-case product list of a partial compactification, keyed to one
 * word and one grading. Entries are data; the A-infinity verifier is the
 * proofreader. */
struct CasePacket {
    std::string name;
    SignedGaussWord word;
    std::vector<int> grading_w;          // |w_i| for i = 1..n
    std::vector<std::string> variables;  // parameters introduced (s's, m's)
    std::vector<PacketEntry> entries;
};

/* Parse the documented JSON form:
 * { "name": str, "word": str, "grading": {"w1": int, ...},
 *   "variables": [str],
 *   "entries": [{"arity": int, "inputs": [...], "output": str, "coeff": str}] }
 * Coefficients are parsed in `ring`, which must declare every packet
 * variable. */
CasePacket parse_packet_json(const std::string& json_text, RingPtr ring);
CasePacket load_packet_file(const std::string& path, RingPtr ring);

/* Merge packet entries additively onto the algebra; word, grading and the
 * degree law are re-checked (WordMismatch / GradingMismatch /
 * DegreeLawViolation). */
AInfAlgebra load_case_packet(const AInfAlgebra& alg, const CasePacket& packet);

}  // namespace gaussainf

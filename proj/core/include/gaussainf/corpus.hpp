#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gaussainf/deform.hpp"
#include "gaussainf/packet.hpp"
#include "gaussainf/present.hpp"

namespace gaussainf {

/* One row of a specialization table: a witness assignment and the claimed
 * isomorphism type (a model_algebra descriptor). */
struct SpecializationCase {
    std::map<std::string, Rat> assign;
    std::string type;
};

/* A shipped, validated case: word + grading + optional compactification
 * packet + bounding-cochain template + base ring + verification targets. */
struct CaseRecord {
    std::string name;
    SignedGaussWord word;
    std::vector<int> grading_w;
    std::vector<std::string> variables;
    RingPtr ring;
    std::optional<CasePacket> packet;
    LinComb bounding;  // empty = undeformed
    ReductionSystem base;
    int verify_arity = 0;  // 0 = default 2*maxArity - 1

    std::optional<PresentationSpec> presentation;  // symbols/images built at load
    std::vector<std::pair<std::string, std::string>> presentation_map_texts;
    std::vector<SpecializationCase> specializations;
    std::map<Gen, LinComb> expected_m1b;
    std::vector<IntPoly> expected_flatness;
};

/* Corpus directory: $GAUSS_AINF_CORPUS or the built-in default. */
std::string corpus_dir();

std::vector<std::string> corpus_index();

/* UnknownCase / ValidationFailed */
CaseRecord load_record(const std::string& name);

/* Tubular algebra + packet merge for a record. */
AInfAlgebra record_algebra(const CaseRecord& rec);

DeformedStructure record_deformed(const CaseRecord& rec, const AInfAlgebra& alg);

/* Presentation spec with images resolved against the degree-0 basis. */
PresentationSpec record_presentation(const CaseRecord& rec, const FiniteAlgebra& a);

/* Full pipeline for one record: build + packet, symbolic A-infinity check
 * (undeformed and deformed, modulo the base), expected m1^b lines, expected
 * flatness generators, presentation, and the specialization fingerprints. */
struct CaseRunResult {
    bool ainf_ok = false;
    bool deformed_ok = false;
    bool m1b_ok = true;
    bool flatness_ok = true;
    bool presentation_ok = true;
    int spec_total = 0;
    int spec_pass = 0;
    bool has_m1b = false, has_flatness = false, has_presentation = false;
    std::vector<std::string> failures;

    bool ok() const
    {
        return ainf_ok && deformed_ok && m1b_ok && flatness_ok && presentation_ok &&
               spec_pass == spec_total;
    }
    std::string summary_line(const std::string& name, const std::string& word) const;
};

CaseRunResult run_case(const CaseRecord& rec);

}  // namespace gaussainf

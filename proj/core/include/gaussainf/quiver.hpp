#pragma once

#include <string>
#include <vector>

#include "gaussainf/algebra.hpp"
#include "gaussainf/deform.hpp"
#include "gaussainf/word.hpp"

namespace gaussainf {

/* Finite quiver on vertices 0..vertices-1. */
struct QuiverSpec {
    int vertices = 0;
    std::vector<std::pair<int, int>> arrows;  // (source, target)
};

/* Text form: "vertices=2; arrows=0->1,0->1,0->1" (arrows list may be
 * empty). */
QuiverSpec parse_quiver(const std::string& text);

/* The Gauss-word realization of kQ/(paths of length >= 2): one block
 *   B_v = v^- (target-v arrows)^+ (source-v arrows)^- v^+
 * per vertex v != 0, concatenated, with vertex-0 arrows at the very end;
 * bounding cochain b = sum_{v != 0} wbar_v, all-zero grading. Vertex
 * letters are 1..n, arrow letters n+1..n+m in declaration order. */
std::pair<SignedGaussWord, BoundingCochain> quiver_word(const QuiverSpec& q, RingPtr ring);

/* Direct structure-constant model of kQ / (paths of length >= 2); basis:
 * unit, vertex idempotents e_1..e_n (e_0 = 1 - sum e_v), then arrows. */
RatAlgebra path_algebra_rad2(const QuiverSpec& q);

}  // namespace gaussainf

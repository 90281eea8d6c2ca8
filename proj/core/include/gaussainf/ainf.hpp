#pragma once

#include <map>
#include <string>
#include <vector>

#include "gaussainf/poly.hpp"
#include "gaussainf/word.hpp"

namespace gaussainf {

/* Generator id: 2*i for w_i, 2*i+1 for wbar_i, letters i = 0..n. */
using Gen = int;

inline Gen gen_w(int i) { return 2 * i; }
inline Gen gen_wbar(int i) { return 2 * i + 1; }
inline bool gen_bar(Gen g) { return g & 1; }
inline int gen_letter(Gen g) { return g >> 1; }
inline Gen gen_dual(Gen g) { return g ^ 1; }

std::string gen_name(Gen g);                     // "w0", "wbar3", ...
Gen parse_gen(const std::string& name, int n);   // letters allowed: 0..n

/* Rank r = n+1 pairs {w_i, wbar_i} with |w_i| + |wbar_i| = 1, |w_0| = 0. */
struct GradedBasis {
    int n = 0;
    std::vector<int> deg_w;  // size n+1, deg_w[0] == 0

    int rank() const { return n + 1; }
    int gen_count() const { return 2 * (n + 1); }
    int deg(Gen g) const { return gen_bar(g) ? 1 - deg_w[gen_letter(g)] : deg_w[gen_letter(g)]; }
};

using LinComb = std::map<Gen, IntPoly>;

void lincomb_add(LinComb& dst, Gen g, const IntPoly& coeff);
void lincomb_add(LinComb& dst, const LinComb& src, const IntPoly& scale);
bool lincomb_is_zero(const LinComb& c);
std::string lincomb_str(const LinComb& c);

/* Parse "t1*wbar1 + 2*w2 - lambda*wbar0"; each summand carries exactly one
 * generator token, everything else multiplies into the coefficient. */
LinComb parse_lincomb(const std::string& text, int n, const RingPtr& ring);

/* Operation key in the printed argument order: m(k[0], k[1], ..., k.back()). */
using OpKey = std::vector<Gen>;

struct OpsTable {
    std::map<int, std::map<OpKey, LinComb>> by_arity;
    int max_arity = 0;

    void add(const OpKey& key, Gen out, const IntPoly& coeff);
    void add(const OpKey& key, const LinComb& val, const IntPoly& scale);
    const LinComb* find(const OpKey& key) const;
    bool empty() const { return by_arity.empty(); }
};

struct AInfAlgebra {
    SignedGaussWord word;
    GradedBasis basis;
    RingPtr ring;
    OpsTable ops;

    int max_arity() const { return ops.max_arity; }
};

/* The tubular-neighborhood A-infinity algebra of a signed Gauss word:
 * unit products, matching-pair m2, the per-letter rectangles, and the two
 * m3 products per ordered subinterval of the linear word (basepoint cut at
 * position 0; same-letter subintervals included). Coefficients are +-1. */
AInfAlgebra build_tubular(const SignedGaussWord& word, const std::vector<int>& grading_w,
                          RingPtr ring);

/* Multilinear extension of the basis tables. */
LinComb apply_op(const AInfAlgebra& alg, const std::vector<LinComb>& inputs);

/* Degree law: deg(out) = sum deg(in) + 2 - k for every stored entry. */
void check_degree_law(const OpsTable& ops, const GradedBasis& basis);

/* Structural strict-unitality check: unit products are exactly the required
 * ones and w0 appears in no other entry. */
void check_strict_unitality(const AInfAlgebra& alg);

/* Packet-authoring helper: product skeletons contributed by one immersed
 * disk with the given corner generators in clockwise order, plus the
 * basepoint-edge variants when `marker` is set. Signs are authoring input
 * and are left at magnitude 1. */
struct DiskSkeleton {
    int arity;
    OpKey inputs;
    Gen output;
};
std::vector<DiskSkeleton> expand_disk(const std::vector<Gen>& corners, bool marker);

}  // namespace gaussainf

#pragma once

#include <string>

#include "gaussainf/algebra.hpp"

namespace gaussainf {

/* Jacobson radical over a characteristic-0 field via the trace form:
 * rad(A) = {x : tr(L_x L_y) = 0 for all y}. Returns a basis. */
std::vector<std::vector<Rat>> radical_basis(const RatAlgebra& a);

struct RadicalFiltration {
    std::vector<std::vector<Rat>> rad, rad2, rad3;
};
RadicalFiltration radical_filtration(const RatAlgebra& a);

std::vector<std::vector<Rat>> center_basis(const RatAlgebra& a);

/* Exact isomorphism-type summary used to match computed algebras against
 * the classification tables. `split` records whether the center of the
 * semisimple quotient is a product of copies of Q (every basis element has
 * a squarefree minimal polynomial with all roots rational). */
struct Fingerprint {
    int rank = 0;
    bool commutative = false;
    int dim_rad = 0;
    int dim_rad2 = 0;
    int dim_rad3 = 0;
    int dim_center = 0;
    int dim_ss_center = 0;
    bool split = true;

    bool operator==(const Fingerprint& o) const = default;
    std::string str() const;
    std::string json() const;
};

Fingerprint fingerprint(const RatAlgebra& a);

/* Semisimple quotient A/rad as a structure-constant table. */
RatAlgebra semisimple_quotient(const RatAlgebra& a);

/* Minimal polynomial (monic, over Q) of the multiplication operator of an
 * algebra element; coefficients low-degree-first. */
std::vector<Rat> min_poly(const RatAlgebra& a, const std::vector<Rat>& x);

/* Squarefree with all roots rational? */
bool splits_over_Q(const std::vector<Rat>& monic_poly);

enum class Rank2Type { DualNumbers, SplitSemisimple, FieldExtension };

/* Example classification of rank-2 algebras x^2 = s + t x by the
 * discriminant t^2 + 4s. */
Rank2Type classify_rank2(const Rat& s, const Rat& t);
std::string rank2_type_name(Rank2Type t);

bool is_rational_square(const Rat& q);

}  // namespace gaussainf

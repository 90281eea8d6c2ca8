#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gaussainf/errors.hpp"

namespace gaussainf {

using Int = mpz_class;
using Rat = mpq_class;

/* A fixed, ordered variable set. Polynomials belong to exactly one ring
 * context; mixing contexts is an error. The declared order doubles as the
 * precedence order of both monomial orders below (earlier = heavier). */
class Ring {
  public:
    Ring() = default;
    explicit Ring(std::vector<std::string> vars);

    int nvars() const { return (int)vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var(int i) const { return vars_[i]; }
    int index_of(const std::string& name) const;  // -1 if absent

    bool operator==(const Ring& o) const { return vars_ == o.vars_; }

  private:
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars);

/* Exponent vector over a ring's variables. */
struct Mono {
    std::vector<int> e;

    int total() const;
    bool is_one() const;
    bool divides(const Mono& m) const;
    Mono quotient_under(const Mono& m) const;  // m / this
    Mono operator*(const Mono& o) const;
    bool operator==(const Mono& o) const { return e == o.e; }
};

/* Graded reverse lexicographic, used for canonical storage and printing. */
bool grevlex_less(const Mono& a, const Mono& b);
/* Pure lexicographic in the declared variable order, used to pick the head
 * term of reduction rules (see reduce.hpp). */
bool lex_less(const Mono& a, const Mono& b);

struct GrevlexGreater {
    bool operator()(const Mono& a, const Mono& b) const { return grevlex_less(b, a); }
};

/* Sparse multivariate polynomial with arbitrary-precision integer
 * coefficients. Terms are kept grevlex-descending with no zero
 * coefficients. */
class IntPoly {
  public:
    using TermMap = std::map<Mono, Int, GrevlexGreater>;

    IntPoly() = default;
    explicit IntPoly(RingPtr ring) : ring_(std::move(ring)) {}

    static IntPoly zero(RingPtr ring) { return IntPoly(std::move(ring)); }
    static IntPoly constant(RingPtr ring, Int c);
    static IntPoly variable(RingPtr ring, const std::string& name);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Int constant_term() const;

    void add_term(const Mono& m, const Int& c);  // merges, drops zeros

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Int& c) const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    bool operator==(const IntPoly& o) const;
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    IntPoly pow(int n) const;

    /* Leading data under grevlex (the storage order). */
    const Mono& lead_mono() const;
    const Int& lead_coeff() const;

    int total_degree() const;  // -1 for zero
    std::vector<int> variables_used() const;

    /* Exact evaluation; every variable occurring in the polynomial must be
     * assigned (MissingVariable otherwise). */
    Rat specialize(const std::map<std::string, Rat>& assignment) const;

    /* Substitute polynomials for variables (used to transport a polynomial
     * into another ring context). Unassigned variables must not occur. */
    IntPoly substitute(const RingPtr& target,
                       const std::map<std::string, IntPoly>& images) const;

    std::string str() const;
    static IntPoly parse(RingPtr ring, const std::string& text);

  private:
    RingPtr ring_;
    TermMap terms_;

    void check_same_ring(const IntPoly& o) const;
};

/* Transport into a ring with a superset of the variables. */
IntPoly lift_to_ring(const IntPoly& p, const RingPtr& target);

}  // namespace gaussainf

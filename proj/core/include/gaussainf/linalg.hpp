#pragma once

#include <vector>

#include "gaussainf/poly.hpp"

namespace gaussainf {

/* Dense exact-rational matrix, row major. */
class RationalMatrix {
  public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return a_[i * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[i * cols_ + j]; }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

struct RankNullspace {
    int rank = 0;
    std::vector<std::vector<Rat>> nullspace;  // basis of {v : M v = 0}
};

/* Exact rank and (right) nullspace. Rows are cleared to integers, then
 * brought to echelon form by fraction-free (Bareiss) elimination; the
 * nullspace is read off the echelon form. */
RankNullspace rank_and_nullspace(const RationalMatrix& m);

/* Span dimension of a list of vectors. */
int span_rank(const std::vector<std::vector<Rat>>& vectors, int dim);

/* Reduce `vectors` to a basis of their span (echelon representatives). */
std::vector<std::vector<Rat>> span_basis(const std::vector<std::vector<Rat>>& vectors, int dim);

/* Solve M x = rhs exactly; returns false if inconsistent. */
bool solve(const RationalMatrix& m, const std::vector<Rat>& rhs, std::vector<Rat>& x);

}  // namespace gaussainf

#include "gaussainf/linalg.hpp"

namespace gaussainf {

namespace {

// Bareiss fraction-free echelon form of an integer matrix (in place).
// Returns pivot columns in order.
std::vector<int> bareiss(std::vector<std::vector<Int>>& m)
{
    std::vector<int> pivots;
    if (m.empty())
        return pivots;
    int rows = (int)m.size(), cols = (int)m[0].size();
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(m[r], m[piv]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                Int num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                m[i][j] = num / prev;  // exact by Bareiss
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

RankNullspace rank_and_nullspace(const RationalMatrix& mat)
{
    RankNullspace out;
    int rows = mat.rows(), cols = mat.cols();
    // clear denominators row by row
    std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols));
    for (int i = 0; i < rows; ++i) {
        Int l = 1;
        for (int j = 0; j < cols; ++j) {
            Int d = mat.at(i, j).get_den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (int j = 0; j < cols; ++j) {
            Rat v = mat.at(i, j) * Rat(l);
            m[i][j] = v.get_num();
        }
    }
    std::vector<int> pivots = bareiss(m);
    out.rank = (int)pivots.size();

    // nullspace by back substitution over Q from the echelon rows
    std::vector<char> is_pivot(cols, 0);
    for (int c : pivots)
        is_pivot[c] = 1;
    for (int free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col])
            continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free_col] = 1;
        for (int k = (int)pivots.size() - 1; k >= 0; --k) {
            int pc = pivots[k];
            // row k: sum_j m[k][j] * v[j] = 0  =>  v[pc] = -(rest)/m[k][pc]
            Rat acc = 0;
            for (int j = pc + 1; j < cols; ++j)
                if (v[j] != 0)
                    acc += Rat(m[k][j]) * v[j];
            v[pc] = -acc / Rat(m[k][pc]);
        }
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

int span_rank(const std::vector<std::vector<Rat>>& vectors, int dim)
{
    if (vectors.empty())
        return 0;
    RationalMatrix m((int)vectors.size(), dim);
    for (int i = 0; i < (int)vectors.size(); ++i)
        for (int j = 0; j < dim; ++j)
            m.at(i, j) = vectors[i][j];
    return rank_and_nullspace(m).rank;
}

std::vector<std::vector<Rat>> span_basis(const std::vector<std::vector<Rat>>& vectors, int dim)
{
    // rational Gauss-Jordan keeping reduced rows
    std::vector<std::vector<Rat>> rows;
    for (const auto& vin : vectors) {
        std::vector<Rat> v = vin;
        for (const auto& r : rows) {
            int lead = -1;
            for (int j = 0; j < dim; ++j)
                if (r[j] != 0) {
                    lead = j;
                    break;
                }
            if (lead >= 0 && v[lead] != 0) {
                Rat f = v[lead] / r[lead];
                for (int j = 0; j < dim; ++j)
                    v[j] -= f * r[j];
            }
        }
        bool nonzero = false;
        for (int j = 0; j < dim; ++j)
            if (v[j] != 0) {
                nonzero = true;
                break;
            }
        if (nonzero)
            rows.push_back(std::move(v));
    }
    return rows;
}

bool solve(const RationalMatrix& m, const std::vector<Rat>& rhs, std::vector<Rat>& x)
{
    int rows = m.rows(), cols = m.cols();
    // augmented rational Gauss-Jordan
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j)
            a[i][j] = m.at(i, j);
        a[i][cols] = rhs[i];
    }
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(a[r], a[piv]);
        Rat d = a[r][c];
        for (int j = c; j <= cols; ++j)
            a[r][j] /= d;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            Rat f = a[i][c];
            for (int j = c; j <= cols; ++j)
                a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (a[i][cols] != 0)
            return false;
    x.assign(cols, Rat(0));
    for (int k = 0; k < r; ++k)
        x[pivot_col[k]] = a[k][cols];
    return true;
}

}  // namespace gaussainf

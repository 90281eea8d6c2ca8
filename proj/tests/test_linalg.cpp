#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gaussainf/linalg.hpp"

using namespace gaussainf;

namespace {

// independent oracle: rank of an integer matrix modulo a prime
int modular_rank(const std::vector<std::vector<long>>& a, long p)
{
    auto m = a;
    int rows = (int)m.size(), cols = rows ? (int)m[0].size() : 0;
    auto norm = [&](long x) { return ((x % p) + p) % p; };
    auto inv = [&](long x) {
        long r = 1, b = norm(x), e = p - 2;
        while (e) {
            if (e & 1)
                r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (norm(m[i][c]) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(m[rank], m[piv]);
        long f = inv(m[rank][c]);
        for (int j = 0; j < cols; ++j)
            m[rank][j] = norm(m[rank][j]) * f % p;
        for (int i = 0; i < rows; ++i) {
            if (i == rank)
                continue;
            long g = norm(m[i][c]);
            if (!g)
                continue;
            for (int j = 0; j < cols; ++j)
                m[i][j] = norm(m[i][j] - g * m[rank][j]);
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("identity and zero")
{
    RationalMatrix id(3, 3);
    for (int i = 0; i < 3; ++i)
        id.at(i, i) = 1;
    auto r = rank_and_nullspace(id);
    CHECK(r.rank == 3);
    CHECK(r.nullspace.empty());

    RationalMatrix z(2, 2);
    auto rz = rank_and_nullspace(z);
    CHECK(rz.rank == 0);
    CHECK(rz.nullspace.size() == 2);
}

TEST_CASE("random integer matrices agree with the modular oracle")
{
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> val(-9, 9);
    const long primes[3] = {1000000007L, 998244353L, 754974721L};
    for (int it = 0; it < 60; ++it) {
        int rows = 5, cols = 5;
        std::vector<std::vector<long>> a((size_t)rows, std::vector<long>((size_t)cols));
        RationalMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                a[(size_t)i][(size_t)j] = val(rng);
                m.at(i, j) = Rat((long)a[(size_t)i][(size_t)j]);
            }
        // force some rank deficiency in half the cases
        if (it % 2 == 0) {
            for (int j = 0; j < cols; ++j) {
                a[4][(size_t)j] = a[0][(size_t)j] + a[1][(size_t)j];
                m.at(4, j) = m.at(0, j) + m.at(1, j);
            }
        }
        auto r = rank_and_nullspace(m);
        for (long p : primes)
            CHECK(r.rank == modular_rank(a, p));
        CHECK(r.rank + (int)r.nullspace.size() == cols);
        // null vectors really lie in the kernel
        for (const auto& v : r.nullspace)
            for (int i = 0; i < rows; ++i) {
                Rat acc = 0;
                for (int j = 0; j < cols; ++j)
                    acc += m.at(i, j) * v[(size_t)j];
                CHECK(acc == 0);
            }
    }
}

TEST_CASE("fractional entries")
{
    RationalMatrix m(2, 3);
    m.at(0, 0) = Rat(1, 2);
    m.at(0, 1) = Rat(1, 3);
    m.at(1, 0) = Rat(3, 2);
    m.at(1, 1) = Rat(1, 1);
    m.at(1, 2) = Rat(5, 7);
    auto r = rank_and_nullspace(m);
    CHECK(r.rank == 2);
    CHECK(r.nullspace.size() == 1);
}

TEST_CASE("solve")
{
    RationalMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    m.at(1, 1) = -1;
    std::vector<Rat> x;
    CHECK(solve(m, {Rat(5), Rat(1)}, x));
    CHECK(x[0] == 2);
    CHECK(x[1] == 1);
    RationalMatrix bad(2, 1);
    bad.at(0, 0) = 1;
    bad.at(1, 0) = 1;
    CHECK(!solve(bad, {Rat(0), Rat(1)}, x));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "gaussainf/word.hpp"

using namespace gaussainf;

namespace {

struct TableRow {
    const char* word;
    int genus;
    std::vector<int> faces;
};

// the n <= 3 classification table
const std::vector<TableRow> kTable = {
    {"1+1-", 0, {1, 1, 2}},
    {"1+2-2+1-", 0, {1, 1, 2, 4}},
    {"1+2+2-1-", 0, {1, 1, 3, 3}},
    {"1+2+1-2-", 1, {2, 6}},
    {"1+2-3+3-2+1-", 0, {1, 1, 2, 2, 6}},
    {"1+2-3-3+2+1-", 0, {1, 1, 2, 3, 5}},
    {"1+2+2-3+3-1-", 0, {1, 1, 1, 4, 5}},
    {"1+2+3+3-2-1-", 0, {1, 1, 3, 3, 4}},
    {"1+2-3+1-2+3-", 0, {2, 2, 2, 3, 3}},
    {"1+1-2+2-3+3-", 0, {1, 1, 1, 3, 6}},
    {"1+2+3+1-2-3-", 1, {2, 4, 6}},
    {"1+2+3-3+1-2-", 1, {1, 4, 7}},
    {"1+2+1-3+3-2-", 1, {1, 2, 9}},
    {"1+2+3+3-1-2-", 1, {1, 3, 8}},
    {"1+2+3-1-3+2-", 1, {2, 3, 7}},
    {"1+2+3+1-3-2-", 2, {12}},
};

// exhaustive orbit-membership oracle (relabelings x rotations x reversal x flip)
bool orbit_contains(const SignedGaussWord& a, const SignedGaussWord& b)
{
    int n = a.n();
    if (n != b.n())
        return false;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i)
        perm[i] = i + 1;
    int len = 2 * n;
    do {
        for (int rev = 0; rev < 2; ++rev)
            for (int flip = 0; flip < 2; ++flip)
                for (int rot = 0; rot < len; ++rot) {
                    std::vector<Occurrence> v(len);
                    for (int p = 0; p < len; ++p) {
                        Occurrence o = a.occ[(size_t)((rot + p) % len)];
                        o.letter = perm[(size_t)(o.letter - 1)];
                        if (flip)
                            o.sign = -o.sign;
                        v[(size_t)p] = o;
                    }
                    if (rev)
                        std::reverse(v.begin(), v.end());
                    if (v == b.occ)
                        return true;
                }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

SignedGaussWord random_word(int n, std::mt19937& rng)
{
    std::vector<int> slots(2 * n);
    for (int i = 0; i < 2 * n; ++i)
        slots[(size_t)i] = i;
    std::shuffle(slots.begin(), slots.end(), rng);
    SignedGaussWord w;
    w.occ.assign((size_t)(2 * n), {0, 0});
    std::uniform_int_distribution<int> coin(0, 1);
    for (int l = 1; l <= n; ++l) {
        int a = slots[(size_t)(2 * (l - 1))], b = slots[(size_t)(2 * (l - 1) + 1)];
        int s = coin(rng) ? 1 : -1;
        w.occ[(size_t)a] = {l, s};
        w.occ[(size_t)b] = {l, -s};
    }
    return w;
}

}  // namespace

TEST_CASE("parsing")
{
    auto w = parse_word("1+2-2+1-");
    CHECK(w.n() == 2);
    CHECK(w.occ[0] == Occurrence{1, 1});
    CHECK(w.occ[1] == Occurrence{2, -1});
    CHECK(w.occ[2] == Occurrence{2, 1});
    CHECK(w.occ[3] == Occurrence{1, -1});
    CHECK(parse_word("1^+2^-2^+1^-").occ == w.occ);
    CHECK(parse_word(" 1 + 2- 2+ 1- ").occ == w.occ);
    CHECK(parse_word("").n() == 0);
    CHECK(word_text(w) == "1+2-2+1-");

    CHECK_THROWS_WITH_AS((void)parse_word("1+1+"), doctest::Contains("DuplicateSign"), Error);
    CHECK_THROWS_WITH_AS((void)parse_word("1+2+1-"), doctest::Contains("MissingOccurrence"),
                         Error);
    CHECK_THROWS_WITH_AS((void)parse_word("2+3+2-3-"), doctest::Contains("GapInLabels"), Error);
    CHECK_THROWS_WITH_AS((void)parse_word("1x"), doctest::Contains("MalformedToken"), Error);
}

TEST_CASE("canonical key basics")
{
    CHECK(canonical_key(parse_word("1+2+1-2-")) == canonical_key(parse_word("2-1-2+1+")));
    CHECK(orbit_contains(parse_word("1+2+1-2-"), parse_word("2-1-2+1+")));
    CHECK(canonical_key(parse_word("1+1-")) == canonical_key(parse_word("1-1+")));
    // all valid n=2 words fall into exactly 3 classes
    std::set<EquivClassKey> keys;
    std::mt19937 rng(5);
    for (int it = 0; it < 500; ++it)
        keys.insert(canonical_key(random_word(2, rng)));
    CHECK(keys.size() == 3);
}

TEST_CASE("canonical key is constant on orbits")
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> pick_n(1, 5), coin(0, 1);
    for (int it = 0; it < 1000; ++it) {
        int n = pick_n(rng);
        SignedGaussWord w = random_word(n, rng);
        SignedGaussWord m = w;
        // random move: rotation + optional reversal + optional flip + relabel
        std::uniform_int_distribution<int> rot(0, 2 * n - 1);
        int r = rot(rng);
        std::rotate(m.occ.begin(), m.occ.begin() + r, m.occ.end());
        if (coin(rng))
            std::reverse(m.occ.begin(), m.occ.end());
        if (coin(rng))
            for (auto& o : m.occ)
                o.sign = -o.sign;
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i)
            perm[(size_t)i] = i + 1;
        std::shuffle(perm.begin(), perm.end(), rng);
        for (auto& o : m.occ)
            o.letter = perm[(size_t)(o.letter - 1)];
        CHECK(canonical_key(w) == canonical_key(m));
    }
}

TEST_CASE("classification table: boundary and genus")
{
    for (const auto& row : kTable) {
        auto w = parse_word(row.word);
        CHECK_MESSAGE(boundary_components(w) == row.faces, row.word);
        auto t = topology(w);
        CHECK_MESSAGE(t.genus == row.genus, row.word);
        CHECK((int)t.faces.size() - t.n == t.euler);
    }
    // the 16 table representatives cover all classes with n <= 3
    std::set<EquivClassKey> table_keys;
    for (const auto& row : kTable)
        table_keys.insert(canonical_key(parse_word(row.word)));
    CHECK(table_keys.size() == 16);
    std::set<EquivClassKey> enum_keys;
    for (int n = 1; n <= 3; ++n)
        for (const auto& w : enumerate_classes(n))
            enum_keys.insert(canonical_key(w));
    CHECK(table_keys == enum_keys);
}

TEST_CASE("face invariants on random words")
{
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> pick_n(1, 6);
    for (int it = 0; it < 300; ++it) {
        int n = pick_n(rng);
        auto w = random_word(n, rng);
        auto faces = boundary_components(w);
        int sum = 0;
        for (int f : faces)
            sum += f;
        CHECK(sum == 4 * n);
        auto t = topology(w);
        CHECK((2 - t.euler) % 2 == 0);
        CHECK(t.genus >= 0);
    }
}

TEST_CASE("empty word")
{
    auto t = topology(parse_word(""));
    CHECK(t.n == 0);
    CHECK(t.faces == std::vector<int>{0, 0});
    CHECK(t.genus == 0);
    CHECK(enumerate_classes(0).size() == 1);
}

TEST_CASE("class counts for small n")
{
    CHECK(enumerate_classes(1).size() == 1);
    CHECK(enumerate_classes(2).size() == 3);
    CHECK(enumerate_classes(3).size() == 12);
    // per-genus split for n = 3: 6 / 5 / 1
    std::map<int, int> by_genus;
    for (const auto& w : enumerate_classes(3))
        by_genus[topology(w).genus]++;
    CHECK(by_genus[0] == 6);
    CHECK(by_genus[1] == 5);
    CHECK(by_genus[2] == 1);
    CHECK_THROWS_WITH_AS((void)enumerate_classes(9), doctest::Contains("LimitExceeded"), Error);
}

TEST_CASE("enumerate returns canonical representatives sorted by key")
{
    auto classes = enumerate_classes(3);
    EquivClassKey prev;
    for (size_t i = 0; i < classes.size(); ++i) {
        auto k = canonical_key(classes[i]);
        CHECK(word_from_key(k) == classes[i]);
        if (i > 0)
            CHECK(prev < k);
        prev = k;
    }
}

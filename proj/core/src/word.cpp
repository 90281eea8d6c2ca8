#include "gaussainf/word.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace gaussainf {

SignedGaussWord parse_word(const std::string& text)
{
    SignedGaussWord w;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace((unsigned char)text[i]))
            ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (!std::isdigit((unsigned char)text[i]))
            fail("MalformedToken", "expected letter index at position " + std::to_string(i) +
                                       " in '" + text + "'");
        size_t start = i;
        while (i < text.size() && std::isdigit((unsigned char)text[i]))
            ++i;
        int letter = std::stoi(text.substr(start, i - start));
        if (letter < 1)
            fail("MalformedToken", "letter must be >= 1 in '" + text + "'");
        skip_ws();
        if (i < text.size() && text[i] == '^')
            ++i;
        skip_ws();
        if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
            fail("MalformedToken", "expected sign after letter in '" + text + "'");
        int sign = text[i] == '+' ? +1 : -1;
        ++i;
        w.occ.push_back({letter, sign});
        skip_ws();
    }
    // validity
    int maxletter = 0;
    for (const auto& o : w.occ)
        maxletter = std::max(maxletter, o.letter);
    std::vector<int> plus(maxletter + 1, 0), minus(maxletter + 1, 0);
    for (const auto& o : w.occ)
        (o.sign > 0 ? plus : minus)[o.letter]++;
    for (int l = 1; l <= maxletter; ++l) {
        if (plus[l] > 1 || minus[l] > 1)
            fail("DuplicateSign", "letter " + std::to_string(l) + " repeats a sign");
        if (plus[l] + minus[l] == 0)
            fail("GapInLabels", "letters are not 1.." + std::to_string(maxletter));
        if (plus[l] + minus[l] == 1)
            fail("MissingOccurrence", "letter " + std::to_string(l) + " appears only once");
    }
    return w;
}

std::string word_text(const SignedGaussWord& word)
{
    std::string s;
    for (const auto& o : word.occ) {
        s += std::to_string(o.letter);
        s += o.sign > 0 ? '+' : '-';
    }
    return s;
}

namespace {

// first-appearance relabelling, then byte encoding with + < -
EquivClassKey encode_normalized(const std::vector<Occurrence>& occ)
{
    std::map<int, int> relabel;
    int next = 1;
    EquivClassKey key;
    key.reserve(occ.size() * 2);
    for (const auto& o : occ) {
        auto it = relabel.find(o.letter);
        if (it == relabel.end())
            it = relabel.emplace(o.letter, next++).first;
        key.push_back((char)it->second);
        key.push_back(o.sign > 0 ? (char)0 : (char)1);
    }
    return key;
}

}  // namespace

EquivClassKey canonical_key(const SignedGaussWord& word)
{
    int len = (int)word.occ.size();
    if (len == 0)
        return {};
    EquivClassKey best;
    bool have = false;
    for (int rev = 0; rev < 2; ++rev) {
        for (int flip = 0; flip < 2; ++flip) {
            for (int rot = 0; rot < len; ++rot) {
                std::vector<Occurrence> v(len);
                for (int p = 0; p < len; ++p) {
                    Occurrence o = word.occ[(rot + p) % len];
                    if (flip)
                        o.sign = -o.sign;
                    v[p] = o;
                }
                if (rev)
                    std::reverse(v.begin(), v.end());
                EquivClassKey k = encode_normalized(v);
                if (!have || k < best) {
                    best = std::move(k);
                    have = true;
                }
            }
        }
    }
    return best;
}

SignedGaussWord word_from_key(const EquivClassKey& key)
{
    SignedGaussWord w;
    for (size_t i = 0; i + 1 < key.size(); i += 2)
        w.occ.push_back({(int)key[i], key[i + 1] == 0 ? +1 : -1});
    return w;
}

namespace {

void enumerate_rec(int n, std::vector<Occurrence>& cur, std::vector<int>& open_sign,
                   int used, std::set<EquivClassKey>& keys)
{
    if ((int)cur.size() == 2 * n) {
        SignedGaussWord w{cur};
        keys.insert(canonical_key(w));
        return;
    }
    // close an open letter
    for (int l = 1; l <= used; ++l) {
        if (open_sign[l] == 0)
            continue;
        cur.push_back({l, -open_sign[l]});
        int saved = open_sign[l];
        open_sign[l] = 0;
        enumerate_rec(n, cur, open_sign, used, keys);
        open_sign[l] = saved;
        cur.pop_back();
    }
    // open a fresh letter (first-appearance order)
    if (used < n) {
        int l = used + 1;
        for (int sign : {+1, -1}) {
            cur.push_back({l, sign});
            open_sign[l] = sign;
            enumerate_rec(n, cur, open_sign, used + 1, keys);
            open_sign[l] = 0;
            cur.pop_back();
        }
    }
}

}  // namespace

std::vector<SignedGaussWord> enumerate_classes(int n, int guard)
{
    if (n < 0)
        fail("LimitExceeded", "n must be nonnegative");
    if (n > guard)
        fail("LimitExceeded", "n = " + std::to_string(n) + " exceeds guard " + std::to_string(guard));
    if (n == 0)
        return {SignedGaussWord{}};
    std::set<EquivClassKey> keys;
    std::vector<Occurrence> cur;
    std::vector<int> open_sign(n + 1, 0);
    enumerate_rec(n, cur, open_sign, 0, keys);
    std::vector<SignedGaussWord> out;
    out.reserve(keys.size());
    for (const auto& k : keys)
        out.push_back(word_from_key(k));
    return out;
}

/* Boundary tracing on the 4-valent ribbon graph. At the positive passage
 * the strand runs south->north, at the negative passage east->west (that is
 * the positively oriented frame of the crossing-sign convention); the
 * counterclockwise rotation of half-edge ends at a crossing is then
 *   +in (S) -> -in (E) -> +out (N) -> -out (W) -> +in.
 * Faces are the orbits of sigma(alpha(h)); the orbit length is the corner
 * count of that boundary circle. Validated wholesale against the n <= 3
 * classification table. */
std::vector<int> boundary_components(const SignedGaussWord& word)
{
    int n = word.n();
    if (n == 0)
        return {0, 0};
    // half-edge ids per letter l (1..n): 4(l-1) + {0: +in, 1: -in, 2: +out, 3: -out}
    auto hid = [](int letter, int k) { return 4 * (letter - 1) + k; };
    int H = 4 * n;
    std::vector<int> sigma(H), alpha(H, -1);
    for (int l = 1; l <= n; ++l) {
        sigma[hid(l, 0)] = hid(l, 1);
        sigma[hid(l, 1)] = hid(l, 2);
        sigma[hid(l, 2)] = hid(l, 3);
        sigma[hid(l, 3)] = hid(l, 0);
    }
    int len = 2 * n;
    for (int p = 0; p < len; ++p) {
        const Occurrence& a = word.occ[p];
        const Occurrence& b = word.occ[(p + 1) % len];
        int out_end = hid(a.letter, a.sign > 0 ? 2 : 3);
        int in_end = hid(b.letter, b.sign > 0 ? 0 : 1);
        alpha[out_end] = in_end;
        alpha[in_end] = out_end;
    }
    std::vector<char> seen(H, 0);
    std::vector<int> faces;
    for (int h0 = 0; h0 < H; ++h0) {
        if (seen[h0])
            continue;
        int cnt = 0, h = h0;
        do {
            seen[h] = 1;
            ++cnt;
            h = sigma[alpha[h]];
        } while (h != h0);
        faces.push_back(cnt);
    }
    std::sort(faces.begin(), faces.end());
    return faces;
}

CurveTopology topology(const SignedGaussWord& word)
{
    CurveTopology t;
    t.n = word.n();
    t.faces = boundary_components(word);
    if (t.n == 0) {
        t.euler = 2;
        t.genus = 0;
        return t;
    }
    t.euler = (int)t.faces.size() - t.n;
    if ((2 - t.euler) % 2 != 0)
        fail("InternalInconsistency", "odd Euler characteristic for " + word_text(word));
    t.genus = (2 - t.euler) / 2;
    if (t.genus < 0)
        fail("InternalInconsistency", "negative genus for " + word_text(word));
    return t;
}

}  // namespace gaussainf

#include "gaussainf/ainf.hpp"

#include <sstream>

namespace gaussainf {

std::string gen_name(Gen g)
{
    return (gen_bar(g) ? "wbar" : "w") + std::to_string(gen_letter(g));
}

Gen parse_gen(const std::string& name, int n)
{
    bool bar = false;
    size_t pos = 0;
    if (name.rfind("wbar", 0) == 0) {
        bar = true;
        pos = 4;
    } else if (name.rfind("w", 0) == 0) {
        pos = 1;
    } else {
        fail("MalformedToken", "bad generator token '" + name + "'");
    }
    if (pos >= name.size())
        fail("MalformedToken", "bad generator token '" + name + "'");
    int idx = std::stoi(name.substr(pos));
    if (idx < 0 || idx > n)
        fail("MalformedToken", "generator index out of range in '" + name + "'");
    return bar ? gen_wbar(idx) : gen_w(idx);
}

void lincomb_add(LinComb& dst, Gen g, const IntPoly& coeff)
{
    if (coeff.is_zero())
        return;
    auto it = dst.find(g);
    if (it == dst.end()) {
        dst.emplace(g, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero())
            dst.erase(it);
    }
}

void lincomb_add(LinComb& dst, const LinComb& src, const IntPoly& scale)
{
    for (const auto& [g, c] : src)
        lincomb_add(dst, g, c * scale);
}

bool lincomb_is_zero(const LinComb& c)
{
    return c.empty();
}

std::string lincomb_str(const LinComb& c)
{
    if (c.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, p] : c) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << p.str() << ")*" << gen_name(g);
    }
    return os.str();
}

LinComb parse_lincomb(const std::string& text, int n, const RingPtr& ring)
{
    LinComb out;
    std::vector<std::pair<char, std::string>> parts;
    int depth = 0;
    std::string cur;
    char sign = '+';
    for (char ch : text) {
        if (ch == '(')
            ++depth;
        if (ch == ')')
            --depth;
        if (depth == 0 && (ch == '+' || ch == '-')) {
            if (!cur.empty()) {
                parts.push_back({sign, cur});
                cur.clear();
            }
            sign = ch;
            continue;
        }
        cur += ch;
    }
    if (!cur.empty())
        parts.push_back({sign, cur});
    if (parts.empty())
        return out;
    for (auto& [sg, term] : parts) {
        size_t best = std::string::npos, best_len = 0;
        for (size_t i = 0; i < term.size(); ++i) {
            if (term[i] != 'w')
                continue;
            size_t j = i + 1;
            if (term.compare(i, 4, "wbar") == 0)
                j = i + 4;
            size_t k = j;
            while (k < term.size() && std::isdigit((unsigned char)term[k]))
                ++k;
            if (k > j) {
                best = i;
                best_len = k - i;
                break;
            }
        }
        if (best == std::string::npos)
            fail("MalformedToken", "no generator token in term '" + term + "'");
        Gen g = parse_gen(term.substr(best, best_len), n);
        std::string coeff_text = term.substr(0, best) + "1" + term.substr(best + best_len);
        IntPoly coeff = IntPoly::parse(ring, coeff_text);
        if (sg == '-')
            coeff = -coeff;
        lincomb_add(out, g, coeff);
    }
    return out;
}

void OpsTable::add(const OpKey& key, Gen out, const IntPoly& coeff)
{
    if (coeff.is_zero())
        return;
    auto& val = by_arity[(int)key.size()][key];
    lincomb_add(val, out, coeff);
    if (val.empty()) {
        by_arity[(int)key.size()].erase(key);
        if (by_arity[(int)key.size()].empty())
            by_arity.erase((int)key.size());
    } else {
        max_arity = std::max(max_arity, (int)key.size());
    }
}

void OpsTable::add(const OpKey& key, const LinComb& val, const IntPoly& scale)
{
    for (const auto& [g, c] : val)
        add(key, g, c * scale);
}

const LinComb* OpsTable::find(const OpKey& key) const
{
    auto ai = by_arity.find((int)key.size());
    if (ai == by_arity.end())
        return nullptr;
    auto it = ai->second.find(key);
    return it == ai->second.end() ? nullptr : &it->second;
}

namespace {

int sign_pow(int deg)
{
    return (deg % 2 == 0) ? 1 : -1;
}

}  // namespace

AInfAlgebra build_tubular(const SignedGaussWord& word, const std::vector<int>& grading_w,
                          RingPtr ring)
{
    int n = word.n();
    AInfAlgebra alg;
    alg.word = word;
    alg.ring = ring ? ring : make_ring({});
    alg.basis.n = n;
    alg.basis.deg_w.assign(n + 1, 0);
    if ((int)grading_w.size() != n)
        fail("GradingViolation", "grading must assign |w_i| for i = 1.." + std::to_string(n));
    for (int i = 1; i <= n; ++i)
        alg.basis.deg_w[i] = grading_w[i - 1];

    auto one = IntPoly::constant(alg.ring, 1);
    auto cst = [&](int v) { return IntPoly::constant(alg.ring, v); };
    const GradedBasis& B = alg.basis;

    // unit products: m2(g, w0) = g, m2(w0, g) = (-1)^{|g|} g
    for (Gen g = 0; g < B.gen_count(); ++g) {
        alg.ops.add({g, gen_w(0)}, g, one);
        if (g != gen_w(0))
            alg.ops.add({gen_w(0), g}, g, cst(sign_pow(B.deg(g))));
    }
    // matching pairs
    for (int i = 1; i <= n; ++i) {
        int sb = sign_pow(B.deg(gen_wbar(i)));
        alg.ops.add({gen_wbar(i), gen_w(i)}, gen_wbar(0), one);
        alg.ops.add({gen_w(i), gen_wbar(i)}, gen_wbar(0), cst(sb));
    }
    // small rectangle and the wbar0-corner rectangles, per letter
    for (int i = 1; i <= n; ++i) {
        int sb = sign_pow(B.deg(gen_wbar(i)));
        alg.ops.add({gen_wbar(i), gen_w(i), gen_wbar(i)}, gen_wbar(i), cst(sb));
        alg.ops.add({gen_wbar(i), gen_w(i), gen_wbar(0)}, gen_wbar(0), cst(-1));
        alg.ops.add({gen_w(i), gen_wbar(i), gen_wbar(0)}, gen_wbar(0), cst(-sb));
    }
    // two m3 products per ordered subinterval of the linear word
    int len = 2 * n;
    for (int p = 0; p < len; ++p) {
        for (int q = p + 1; q < len; ++q) {
            int i = word.occ[p].letter, j = word.occ[q].letter;
            int sp = word.occ[p].sign, sq = word.occ[q].sign;
            Gen wi = gen_w(i), wbi = gen_wbar(i), wj = gen_w(j), wbj = gen_wbar(j);
            int sbi = sign_pow(B.deg(wbi));
            if (sp > 0 && sq > 0) {
                alg.ops.add({wbj, wi, wbi}, wbj, cst(sbi));
                alg.ops.add({wi, wbi, wj}, wj, cst(sbi * sign_pow(B.deg(wj))));
            } else if (sp > 0 && sq < 0) {
                alg.ops.add({wj, wi, wbi}, wj, cst(sbi));
                alg.ops.add({wi, wbi, wbj}, wbj, cst(sbi * sign_pow(B.deg(wbj))));
            } else if (sp < 0 && sq > 0) {
                alg.ops.add({wbj, wbi, wi}, wbj, one);
                alg.ops.add({wbi, wi, wj}, wj, cst(sign_pow(B.deg(wj))));
            } else {
                alg.ops.add({wj, wbi, wi}, wj, one);
                alg.ops.add({wbi, wi, wbj}, wbj, cst(sign_pow(B.deg(wbj))));
            }
        }
    }
    check_degree_law(alg.ops, alg.basis);
    return alg;
}

LinComb apply_op(const AInfAlgebra& alg, const std::vector<LinComb>& inputs)
{
    LinComb out;
    if (inputs.empty())
        return out;
    // iterate over the product of supports
    std::vector<LinComb::const_iterator> its, ends;
    for (const auto& in : inputs) {
        if (in.empty())
            return out;
        its.push_back(in.begin());
        ends.push_back(in.end());
    }
    while (true) {
        OpKey key(inputs.size());
        IntPoly coeff = IntPoly::constant(alg.ring, 1);
        for (size_t k = 0; k < inputs.size(); ++k) {
            key[k] = its[k]->first;
            coeff = coeff * its[k]->second;
        }
        if (const LinComb* val = alg.ops.find(key))
            lincomb_add(out, *val, coeff);
        // advance odometer
        size_t k = inputs.size();
        while (k-- > 0) {
            if (++its[k] != ends[k])
                break;
            its[k] = inputs[k].begin();
            if (k == 0)
                return out;
        }
    }
}

void check_degree_law(const OpsTable& ops, const GradedBasis& basis)
{
    for (const auto& [arity, table] : ops.by_arity) {
        for (const auto& [key, val] : table) {
            int in_deg = 0;
            for (Gen g : key)
                in_deg += basis.deg(g);
            for (const auto& [out, c] : val) {
                if (basis.deg(out) != in_deg + 2 - arity) {
                    std::string k;
                    for (Gen g : key)
                        k += gen_name(g) + ",";
                    fail("DegreeLawViolation", "m" + std::to_string(arity) + "(" + k + ") -> " +
                                                   gen_name(out));
                }
            }
        }
    }
}

void check_strict_unitality(const AInfAlgebra& alg)
{
    const Gen unit = gen_w(0);
    for (const auto& [arity, table] : alg.ops.by_arity) {
        for (const auto& [key, val] : table) {
            bool has_unit = false;
            for (Gen g : key)
                if (g == unit)
                    has_unit = true;
            if (!has_unit)
                continue;
            if (arity != 2)
                fail("UnitalityViolation",
                     "w0 appears in an m" + std::to_string(arity) + " entry");
            // must be exactly m2(x, w0) = x or m2(w0, x) = (-1)^{|x|} x
            Gen x = key[0] == unit ? key[1] : key[0];
            int expect = key[1] == unit ? 1 : (alg.basis.deg(x) % 2 == 0 ? 1 : -1);
            if (val.size() != 1 || val.count(x) == 0 ||
                val.at(x) != IntPoly::constant(alg.ring, expect))
                fail("UnitalityViolation", "non-unit product involving w0");
        }
    }
}

std::vector<DiskSkeleton> expand_disk(const std::vector<Gen>& corners, bool marker)
{
    if (corners.empty())
        fail("EmptyDisk", "disk needs at least one corner");
    int k = (int)corners.size() - 1;  // corners are (v_k, ..., v_0)
    std::vector<DiskSkeleton> out;
    // k+1 rotations: m_k(v_{j-1},...,v_0, v_k,...,v_{j+1}) -> dual(v_j)
    for (int j = 0; j <= k; ++j) {
        DiskSkeleton s;
        s.arity = k;
        for (int t = 0; t < k; ++t) {
            // arguments below j wrap around, skipping v_j itself
            int idx = (j - 1 - t + (k + 1)) % (k + 1);
            s.inputs.push_back(corners[(size_t)(k - idx)]);
        }
        s.output = gen_dual(corners[(size_t)(k - j)]);
        out.push_back(std::move(s));
    }
    if (marker) {
        // m_{k+1}(v_k,...,v_0) -> w0
        {
            DiskSkeleton s;
            s.arity = k + 1;
            s.inputs = corners;
            s.output = gen_w(0);
            out.push_back(std::move(s));
        }
        // wbar0 slides through: m_{k+1}(v_{j-1},...,v_0, wbar0, v_k,...,v_{j+1}) -> dual(v_j)
        for (int j = k; j >= 0; --j) {
            DiskSkeleton s;
            s.arity = k + 1;
            for (int t = j - 1; t >= 0; --t)
                s.inputs.push_back(corners[(size_t)(k - t)]);
            s.inputs.push_back(gen_wbar(0));
            for (int t = k; t >= j + 1; --t)
                s.inputs.push_back(corners[(size_t)(k - t)]);
            s.output = gen_dual(corners[(size_t)(k - j)]);
            out.push_back(std::move(s));
        }
        // m_{k+2}(v_k,...,v_0, wbar0) -> w0
        {
            DiskSkeleton s;
            s.arity = k + 2;
            s.inputs = corners;
            s.inputs.push_back(gen_wbar(0));
            s.output = gen_w(0);
            out.push_back(std::move(s));
        }
    }
    return out;
}

}  // namespace gaussainf

#include "gaussainf/present.hpp"

#include <cctype>

namespace gaussainf {

namespace {

struct NCParser {
    const RingPtr& ring;
    const std::vector<std::string>& symbols;
    const std::string& s;
    size_t i = 0;

    int symbol_index(const std::string& name) const
    {
        for (size_t k = 0; k < symbols.size(); ++k)
            if (symbols[k] == name)
                return (int)k;
        return -1;
    }

    void skip_ws()
    {
        while (i < s.size() && std::isspace((unsigned char)s[i]))
            ++i;
    }
    bool eat(char c)
    {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    char peek()
    {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }

    static NCPoly mul(const NCPoly& a, const NCPoly& b)
    {
        NCPoly r;
        for (const auto& [ca, wa] : a.terms)
            for (const auto& [cb, wb] : b.terms) {
                std::vector<int> w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.terms.push_back({ca * cb, std::move(w)});
            }
        return normalize(r);
    }

    static NCPoly add(const NCPoly& a, const NCPoly& b, int sign)
    {
        NCPoly r = a;
        for (const auto& [c, w] : b.terms)
            r.terms.push_back({sign > 0 ? c : -c, w});
        return normalize(r);
    }

    static NCPoly normalize(const NCPoly& a)
    {
        NCPoly r;
        for (const auto& [c, w] : a.terms) {
            bool merged = false;
            for (auto& [rc, rw] : r.terms)
                if (rw == w) {
                    rc += c;
                    merged = true;
                    break;
                }
            if (!merged)
                r.terms.push_back({c, w});
        }
        NCPoly out;
        for (auto& t : r.terms)
            if (!t.first.is_zero())
                out.terms.push_back(std::move(t));
        return out;
    }

    NCPoly parse_expr()
    {
        NCPoly r = parse_term();
        while (true) {
            if (eat('+'))
                r = add(r, parse_term(), +1);
            else if (eat('-'))
                r = add(r, parse_term(), -1);
            else
                break;
        }
        return r;
    }

    NCPoly parse_term()
    {
        NCPoly r = parse_factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++i;
                r = mul(r, parse_factor());
            } else if (std::isalpha((unsigned char)c) || c == '(' ||
                       std::isdigit((unsigned char)c)) {
                r = mul(r, parse_factor());
            } else {
                break;
            }
        }
        return r;
    }

    NCPoly parse_factor()
    {
        NCPoly base = parse_atom();
        if (eat('^')) {
            skip_ws();
            size_t start = i;
            while (i < s.size() && std::isdigit((unsigned char)s[i]))
                ++i;
            if (start == i)
                fail("MalformedToken", "expected exponent in '" + s + "'");
            int n = std::stoi(s.substr(start, i - start));
            NCPoly r;
            r.terms.push_back({IntPoly::constant(ring, 1), {}});
            for (int k = 0; k < n; ++k)
                r = mul(r, base);
            return r;
        }
        return base;
    }

    NCPoly parse_atom()
    {
        skip_ws();
        if (i >= s.size())
            fail("MalformedToken", "unexpected end of relation '" + s + "'");
        char c = s[i];
        NCPoly r;
        if (c == '(') {
            ++i;
            r = parse_expr();
            if (!eat(')'))
                fail("MalformedToken", "missing ')' in '" + s + "'");
            return r;
        }
        if (c == '-') {
            ++i;
            NCPoly f = parse_factor();
            for (auto& [cf, w] : f.terms)
                cf = -cf;
            return f;
        }
        if (std::isdigit((unsigned char)c)) {
            size_t start = i;
            while (i < s.size() && std::isdigit((unsigned char)s[i]))
                ++i;
            r.terms.push_back({IntPoly::constant(ring, Int(s.substr(start, i - start))), {}});
            return r;
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t start = i;
            while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_'))
                ++i;
            std::string name = s.substr(start, i - start);
            int idx = symbol_index(name);
            if (idx >= 0) {
                r.terms.push_back({IntPoly::constant(ring, 1), {idx}});
            } else {
                r.terms.push_back({IntPoly::variable(ring, name), {}});
            }
            return r;
        }
        fail("MalformedToken", std::string("unexpected character '") + c + "' in '" + s + "'");
    }
};

}  // namespace

NCPoly parse_nc_poly(const RingPtr& ring, const std::vector<std::string>& symbols,
                     const std::string& text)
{
    NCParser p{ring, symbols, text};
    NCPoly r = p.parse_expr();
    p.skip_ws();
    if (p.i != text.size())
        fail("MalformedToken", "trailing garbage in relation '" + text + "'");
    return r;
}

PresentationReport verify_presentation(const FiniteAlgebra& a, const PresentationSpec& p)
{
    PresentationReport rep;
    rep.ok = true;
    if (p.expected_rank != a.rank) {
        rep.ok = false;
        rep.failures.push_back("rank mismatch: algebra has " + std::to_string(a.rank) +
                               ", presentation expects " + std::to_string(p.expected_rank));
    }
    auto mul_vec = [&](const std::vector<IntPoly>& x, const std::vector<IntPoly>& y) {
        std::vector<IntPoly> out((size_t)a.rank, IntPoly::zero(a.ring));
        for (int i = 0; i < a.rank; ++i) {
            if (x[(size_t)i].is_zero())
                continue;
            for (int j = 0; j < a.rank; ++j) {
                if (y[(size_t)j].is_zero())
                    continue;
                IntPoly f = x[(size_t)i] * y[(size_t)j];
                for (int h = 0; h < a.rank; ++h)
                    if (!a.cc(i, j, h).is_zero())
                        out[(size_t)h] += f * a.cc(i, j, h);
            }
        }
        for (auto& e : out)
            e = a.base.reduce(e);
        return out;
    };
    for (size_t ri = 0; ri < p.relations.size(); ++ri) {
        std::vector<IntPoly> acc((size_t)a.rank, IntPoly::zero(a.ring));
        for (const auto& [coeff, word] : p.relations[ri].terms) {
            std::vector<IntPoly> val((size_t)a.rank, IntPoly::zero(a.ring));
            val[0] = IntPoly::constant(a.ring, 1);  // unit
            for (int sym : word)
                val = mul_vec(val, p.images[(size_t)sym]);
            for (int h = 0; h < a.rank; ++h)
                acc[(size_t)h] += coeff * val[(size_t)h];
        }
        bool zero = true;
        std::string nz;
        for (int h = 0; h < a.rank; ++h) {
            IntPoly red = a.base.reduce(acc[(size_t)h]);
            if (!red.is_zero()) {
                zero = false;
                nz = a.names[(size_t)h] + " coefficient " + red.str();
                break;
            }
        }
        if (!zero) {
            rep.ok = false;
            std::string label = ri < p.relation_texts.size() ? p.relation_texts[ri]
                                                             : ("#" + std::to_string(ri));
            rep.failures.push_back("relation '" + label + "' does not vanish: " + nz);
        }
    }
    return rep;
}

}  // namespace gaussainf

#include "gaussainf/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gaussainf {

Ring::Ring(std::vector<std::string> vars) : vars_(std::move(vars))
{
    for (size_t i = 0; i < vars_.size(); ++i)
        for (size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j])
                fail("DuplicateVariable", "variable '" + vars_[i] + "' declared twice");
}

int Ring::index_of(const std::string& name) const
{
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name)
            return (int)i;
    return -1;
}

RingPtr make_ring(std::vector<std::string> vars)
{
    return std::make_shared<const Ring>(std::move(vars));
}

int Mono::total() const
{
    int t = 0;
    for (int x : e)
        t += x;
    return t;
}

bool Mono::is_one() const
{
    for (int x : e)
        if (x)
            return false;
    return true;
}

bool Mono::divides(const Mono& m) const
{
    if (e.size() != m.e.size())
        return false;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > m.e[i])
            return false;
    return true;
}

Mono Mono::quotient_under(const Mono& m) const
{
    Mono q;
    q.e.resize(e.size());
    for (size_t i = 0; i < e.size(); ++i)
        q.e[i] = m.e[i] - e[i];
    return q;
}

Mono Mono::operator*(const Mono& o) const
{
    Mono r;
    r.e.resize(e.size());
    for (size_t i = 0; i < e.size(); ++i)
        r.e[i] = e[i] + o.e[i];
    return r;
}

bool grevlex_less(const Mono& a, const Mono& b)
{
    int ta = a.total(), tb = b.total();
    if (ta != tb)
        return ta < tb;
    // same degree: a < b iff the rightmost nonzero entry of a-b is positive
    for (size_t i = a.e.size(); i-- > 0;) {
        int d = a.e[i] - b.e[i];
        if (d != 0)
            return d > 0;
    }
    return false;
}

bool lex_less(const Mono& a, const Mono& b)
{
    for (size_t i = 0; i < a.e.size(); ++i) {
        int d = a.e[i] - b.e[i];
        if (d != 0)
            return d < 0;
    }
    return false;
}

IntPoly IntPoly::constant(RingPtr ring, Int c)
{
    IntPoly p(std::move(ring));
    if (c != 0) {
        Mono one;
        one.e.assign(p.ring_->nvars(), 0);
        p.terms_.emplace(one, std::move(c));
    }
    return p;
}

IntPoly IntPoly::variable(RingPtr ring, const std::string& name)
{
    int idx = ring->index_of(name);
    if (idx < 0)
        fail("UnknownVariable", "'" + name + "' not in ring context");
    IntPoly p(std::move(ring));
    Mono m;
    m.e.assign(p.ring_->nvars(), 0);
    m.e[idx] = 1;
    p.terms_.emplace(m, Int(1));
    return p;
}

bool IntPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Int IntPoly::constant_term() const
{
    Mono one;
    one.e.assign(ring_ ? ring_->nvars() : 0, 0);
    auto it = terms_.find(one);
    return it == terms_.end() ? Int(0) : it->second;
}

void IntPoly::add_term(const Mono& m, const Int& c)
{
    if (c == 0)
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void IntPoly::check_same_ring(const IntPoly& o) const
{
    if (ring_ == o.ring_)
        return;
    if (ring_ && o.ring_ && *ring_ == *o.ring_)
        return;
    fail("RingMismatch", "operands belong to different ring contexts");
}

IntPoly IntPoly::operator+(const IntPoly& o) const
{
    IntPoly r = *this;
    r += o;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o)
{
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

IntPoly IntPoly::operator-(const IntPoly& o) const
{
    IntPoly r = *this;
    r -= o;
    return r;
}

IntPoly& IntPoly::operator-=(const IntPoly& o)
{
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

IntPoly IntPoly::operator-() const
{
    IntPoly r(ring_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const
{
    check_same_ring(o);
    IntPoly r(ring_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_)
            r.add_term(m1 * m2, c1 * c2);
    return r;
}

IntPoly IntPoly::operator*(const Int& c) const
{
    IntPoly r(ring_);
    if (c == 0)
        return r;
    for (const auto& [m, cc] : terms_)
        r.terms_.emplace(m, cc * c);
    return r;
}

bool IntPoly::operator==(const IntPoly& o) const
{
    return terms_ == o.terms_;
}

IntPoly IntPoly::pow(int n) const
{
    IntPoly r = constant(ring_, 1);
    for (int i = 0; i < n; ++i)
        r = r * *this;
    return r;
}

const Mono& IntPoly::lead_mono() const
{
    if (terms_.empty())
        fail("ZeroPolynomial", "zero polynomial has no leading term");
    return terms_.begin()->first;
}

const Int& IntPoly::lead_coeff() const
{
    if (terms_.empty())
        fail("ZeroPolynomial", "zero polynomial has no leading term");
    return terms_.begin()->second;
}

int IntPoly::total_degree() const
{
    return terms_.empty() ? -1 : terms_.begin()->first.total();
}

std::vector<int> IntPoly::variables_used() const
{
    std::vector<char> seen(ring_ ? ring_->nvars() : 0, 0);
    for (const auto& [m, c] : terms_)
        for (size_t i = 0; i < m.e.size(); ++i)
            if (m.e[i])
                seen[i] = 1;
    std::vector<int> out;
    for (size_t i = 0; i < seen.size(); ++i)
        if (seen[i])
            out.push_back((int)i);
    return out;
}

Rat IntPoly::specialize(const std::map<std::string, Rat>& assignment) const
{
    std::vector<const Rat*> vals(ring_ ? ring_->nvars() : 0, nullptr);
    for (int vi : variables_used()) {
        auto it = assignment.find(ring_->var(vi));
        if (it == assignment.end())
            fail("MissingVariable", "no value for '" + ring_->var(vi) + "'");
        vals[vi] = &it->second;
    }
    Rat total = 0;
    for (const auto& [m, c] : terms_) {
        Rat t(c);
        for (size_t i = 0; i < m.e.size(); ++i)
            for (int k = 0; k < m.e[i]; ++k)
                t *= *vals[i];
        total += t;
    }
    return total;
}

IntPoly IntPoly::substitute(const RingPtr& target,
                            const std::map<std::string, IntPoly>& images) const
{
    IntPoly out(target);
    for (const auto& [m, c] : terms_) {
        IntPoly t = IntPoly::constant(target, c);
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (!m.e[i])
                continue;
            const std::string& name = ring_->var(i);
            auto it = images.find(name);
            IntPoly img;
            if (it != images.end())
                img = it->second;
            else if (target->index_of(name) >= 0)
                img = IntPoly::variable(target, name);
            else
                fail("UnknownVariable", "'" + name + "' has no image in target ring");
            t = t * img.pow(m.e[i]);
        }
        out += t;
    }
    return out;
}

std::string IntPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        first = false;
        bool coeff_shown = false;
        if (a != 1 || m.is_one()) {
            os << a.get_str();
            coeff_shown = true;
        }
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (!m.e[i])
                continue;
            if (coeff_shown)
                os << "*";
            coeff_shown = true;
            os << ring_->var(i);
            if (m.e[i] > 1)
                os << "^" << m.e[i];
        }
    }
    return os.str();
}

namespace {

struct PolyParser {
    RingPtr ring;
    const std::string& s;
    size_t i = 0;

    PolyParser(RingPtr r, const std::string& text) : ring(std::move(r)), s(text) {}

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

    IntPoly parse_expr()
    {
        IntPoly r = parse_term();
        while (true) {
            if (eat('+'))
                r += parse_term();
            else if (eat('-'))
                r -= parse_term();
            else
                break;
        }
        return r;
    }

    IntPoly parse_term()
    {
        IntPoly r = parse_factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++i;
                r = r * parse_factor();
            } else if (std::isalpha((unsigned char)c) || c == '(') {
                // implicit multiplication, e.g. "2t1" or "s1(1-lambda)"
                r = r * parse_factor();
            } else {
                break;
            }
        }
        return r;
    }

    IntPoly parse_factor()
    {
        IntPoly base = parse_atom();
        if (eat('^')) {
            skip_ws();
            size_t start = i;
            while (i < s.size() && std::isdigit((unsigned char)s[i]))
                ++i;
            if (start == i)
                fail("MalformedToken", "expected exponent in '" + s + "'");
            base = base.pow(std::stoi(s.substr(start, i - start)));
        }
        return base;
    }

    IntPoly parse_atom()
    {
        skip_ws();
        if (i >= s.size())
            fail("MalformedToken", "unexpected end of polynomial '" + s + "'");
        char c = s[i];
        if (c == '(') {
            ++i;
            IntPoly r = parse_expr();
            if (!eat(')'))
                fail("MalformedToken", "missing ')' in '" + s + "'");
            return r;
        }
        if (c == '-') {
            ++i;
            return -parse_factor();
        }
        if (std::isdigit((unsigned char)c)) {
            size_t start = i;
            while (i < s.size() && std::isdigit((unsigned char)s[i]))
                ++i;
            return IntPoly::constant(ring, Int(s.substr(start, i - start)));
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t start = i;
            while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_'))
                ++i;
            return IntPoly::variable(ring, s.substr(start, i - start));
        }
        fail("MalformedToken", std::string("unexpected character '") + c + "' in '" + s + "'");
    }
};

}  // namespace

IntPoly IntPoly::parse(RingPtr ring, const std::string& text)
{
    PolyParser p(std::move(ring), text);
    IntPoly r = p.parse_expr();
    p.skip_ws();
    if (p.i != text.size())
        fail("MalformedToken", "trailing garbage in polynomial '" + text + "'");
    return r;
}

IntPoly lift_to_ring(const IntPoly& p, const RingPtr& target)
{
    if (p.ring() == target || (p.ring() && *p.ring() == *target))
        return p;
    return p.substitute(target, {});
}

}  // namespace gaussainf

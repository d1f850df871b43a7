#include "qca/scalar.hpp"

#include <cctype>

#include "qca/errors.hpp"

namespace qca {

Scalar::Scalar(long c) {
    if (c != 0) t_[0] = c;
}

Scalar::Scalar(const mpz_class& c) {
    if (c != 0) t_[0] = c;
}

Scalar Scalar::qpow(int h, long c) {
    Scalar s;
    if (c != 0) s.t_[h] = c;
    return s;
}

bool Scalar::is_one() const {
    return t_.size() == 1 && t_.begin()->first == 0 && t_.begin()->second == 1;
}

bool Scalar::is_unit() const {
    return t_.size() == 1 && abs(t_.begin()->second) == 1;
}

int Scalar::min_exp() const { return t_.empty() ? 0 : t_.begin()->first; }
int Scalar::max_exp() const { return t_.empty() ? 0 : t_.rbegin()->first; }

void Scalar::add_term(int h, const mpz_class& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace(h, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

Scalar& Scalar::operator+=(const Scalar& o) {
    for (const auto& [h, c] : o.t_) add_term(h, c);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    for (const auto& [h, c] : o.t_) add_term(h, -c);
    return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r;
    for (const auto& [h1, c1] : a.t_)
        for (const auto& [h2, c2] : b.t_) r.add_term(h1 + h2, c1 * c2);
    return r;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& [h, c] : r.t_) c = -c;
    return r;
}

Scalar Scalar::shifted(int h) const {
    Scalar r;
    for (const auto& [e, c] : t_) r.t_.emplace_hint(r.t_.end(), e + h, c);
    return r;
}

Scalar Scalar::bar() const {
    Scalar r;
    for (const auto& [h, c] : t_) r.t_.emplace(-h, c);
    return r;
}

bool Scalar::is_positive() const {
    for (const auto& [h, c] : t_)
        if (c < 0) return false;
    return true;
}

Scalar Scalar::unit_inverse() const {
    if (!is_unit()) throw NotInvertible("scalar " + str() + " is not a unit");
    return qpow(-t_.begin()->first, t_.begin()->second.get_si());
}

std::string Scalar::str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [h, c] : t_) {
        if (!out.empty()) out += " + ";
        out += c.get_str() + "*q^(" + std::to_string(h) + "/2)";
    }
    return out;
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError("expected '" + std::string(1, c) + "' at " + std::to_string(i) + " in \"" + s + "\"");
    }
    std::string integer() {
        ws();
        size_t b = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        size_t d = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == d) throw ParseError("expected integer at " + std::to_string(b) + " in \"" + s + "\"");
        std::string t = s.substr(b, i - b);
        if (t[0] == '+') t.erase(0, 1);
        return t;
    }
    bool at_q() {
        ws();
        return i < s.size() && s[i] == 'q';
    }
    bool done() {
        ws();
        return i >= s.size();
    }
};

// q^(h/2) with the cursor on 'q'
int parse_qpow(Cursor& c) {
    c.expect('q');
    c.expect('^');
    c.expect('(');
    int h = std::stoi(c.integer());
    c.expect('/');
    if (c.integer() != "2") throw ParseError("q exponent must be written over 2");
    c.expect(')');
    return h;
}

}  // namespace

// Grammar: summand (('+'|'-') summand)*, summand := INT ['*' qpow] | qpow.
Scalar Scalar::parse(const std::string& text) {
    Cursor c{text};
    Scalar r;
    if (c.done()) throw ParseError("empty scalar");
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        if (!first) {
            if (c.eat('+')) sign = 1;
            else if (c.eat('-')) sign = -1;
            else throw ParseError("expected '+' or '-' in \"" + text + "\"");
        }
        first = false;
        if (c.at_q()) {
            r.add_term(parse_qpow(c), sign);
            continue;
        }
        mpz_class v(c.integer());
        int h = 0;
        if (c.eat('*')) h = parse_qpow(c);
        r.add_term(h, sign * v);
    }
    return r;
}

Scalar div_exact(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw NotDivisible("division by zero");
    Scalar rem = a, quo;
    const int bmin = b.min_exp(), bmax = b.max_exp();
    const mpz_class& lead = b.terms().rbegin()->second;
    const int qmin = a.min_exp() - bmin;
    while (!rem.is_zero()) {
        int h = rem.max_exp() - bmax;
        if (h < qmin) throw NotDivisible(a.str() + " by " + b.str());
        const mpz_class& top = rem.terms().rbegin()->second;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) throw NotDivisible(a.str() + " by " + b.str());
        mpz_class c = top / lead;
        quo.add_term(h, c);
        rem -= b.shifted(h) * Scalar(c);
    }
    return quo;
}

Scalar q_minus_qinv() { return Scalar::qpow(2) - Scalar::qpow(-2); }
Scalar q_plus_qinv() { return Scalar::qpow(2) + Scalar::qpow(-2); }

}  // namespace qca

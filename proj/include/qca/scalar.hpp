#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace qca {

// Element of Z[q^{1/2}, q^{-1/2}]. Keys are half-exponents: h stands for q^{h/2}.
class Scalar {
public:
    using Terms = std::map<int, mpz_class>;

    Scalar() = default;
    Scalar(long c);  // NOLINT: integers embed implicitly
    Scalar(const mpz_class& c);  // NOLINT

    // c * q^{h/2}
    static Scalar qpow(int h, long c = 1);
    static Scalar parse(const std::string& text);

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_one() const;
    // single term c*q^{h/2} with c = +-1
    bool is_unit() const;
    int min_exp() const;
    int max_exp() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar operator-() const;
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.t_ < b.t_; }

    // multiply by q^{h/2}
    Scalar shifted(int h) const;
    void add_term(int h, const mpz_class& c);

    Scalar bar() const;
    bool is_positive() const;
    bool is_bar_invariant() const { return bar() == *this; }
    // inverse of a unit +-q^{h/2}
    Scalar unit_inverse() const;

    std::string str() const;

private:
    Terms t_;
};

Scalar div_exact(const Scalar& a, const Scalar& b);

// q - q^{-1} and q + q^{-1}, used all over the quantum group layer
Scalar q_minus_qinv();
Scalar q_plus_qinv();

}  // namespace qca

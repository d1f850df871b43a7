#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qca/quiver.hpp"
#include "qca/rootdata.hpp"
#include "qca/scalar.hpp"

namespace qca {

struct DiskSeed;

// Exponent vector in the seed's vertex order.
using Exp = std::vector<int>;
using SeedPtr = std::shared_ptr<const IceQuiver>;

inline SeedPtr make_seed(IceQuiver q) { return std::make_shared<const IceQuiver>(std::move(q)); }

// Half-exponent of q^{<a,b>}, i.e. sum_ij a_i eps2_ij b_j.
long long pairing2(const IceQuiver& q, const Exp& a, const Exp& b);

Exp unit_exp(size_t n, size_t i);
Exp operator+(const Exp& a, const Exp& b);
Exp operator-(const Exp& a);

// Linear combination of normalized monomials X_a with X_a X_b = q^{<a,b>} X_{a+b}.
class TorusElement {
public:
    using Terms = std::map<Exp, Scalar>;

    TorusElement() = default;
    explicit TorusElement(SeedPtr seed) : seed_(std::move(seed)) {}
    static TorusElement monomial(SeedPtr seed, Exp a, const Scalar& coef = Scalar(1));
    static TorusElement one(SeedPtr seed);

    const SeedPtr& seed() const { return seed_; }
    const IceQuiver& quiver() const { return *seed_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_monomial() const { return t_.size() == 1; }
    void add_term(const Exp& a, const Scalar& c);

    TorusElement& operator+=(const TorusElement& o);
    TorusElement& operator-=(const TorusElement& o);
    TorusElement operator-() const;
    friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
    friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
    friend TorusElement operator*(const TorusElement& a, const TorusElement& b);
    friend TorusElement operator*(const Scalar& s, const TorusElement& f);
    friend bool operator==(const TorusElement& a, const TorusElement& b) { return a.t_ == b.t_; }
    friend bool operator!=(const TorusElement& a, const TorusElement& b) { return !(a == b); }

    TorusElement pow(int e) const;  // e < 0 only for monomials with unit coefficient
    TorusElement inverse() const;
    TorusElement star() const;
    // coefficientwise exact division by a scalar
    TorusElement div_scalar(const Scalar& s) const;
    // same exponents, another chart with the same vertex order
    TorusElement rebased(SeedPtr seed) const;
    bool is_positive() const;

    std::string str() const;

private:
    SeedPtr seed_;
    Terms t_;
};

bool same_seed(const SeedPtr& a, const SeedPtr& b);

bool is_global_monomial(const IceQuiver& q, const Exp& a);
bool is_casimir(const IceQuiver& q, const Exp& a);

using WeightPair = std::pair<IntVec, IntVec>;
WeightPair frozen_weight(const DiskSeed& d, const TorusElement& f);

}  // namespace qca

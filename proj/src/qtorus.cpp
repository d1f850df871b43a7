#include "qca/qtorus.hpp"

#include "qca/builders.hpp"
#include "qca/errors.hpp"

namespace qca {

long long pairing2(const IceQuiver& q, const Exp& a, const Exp& b) {
    long long s = 0;
    const size_t n = q.size();
    for (size_t i = 0; i < n; ++i) {
        if (!a[i]) continue;
        const auto& row = q.eps2()[i];
        long long t = 0;
        for (size_t j = 0; j < n; ++j)
            if (b[j]) t += static_cast<long long>(row[j]) * b[j];
        s += a[i] * t;
    }
    return s;
}

Exp unit_exp(size_t n, size_t i) {
    Exp e(n, 0);
    e[i] = 1;
    return e;
}

Exp operator+(const Exp& a, const Exp& b) {
    Exp c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

Exp operator-(const Exp& a) {
    Exp c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
    return c;
}

bool same_seed(const SeedPtr& a, const SeedPtr& b) { return a == b || (a && b && *a == *b); }

TorusElement TorusElement::monomial(SeedPtr seed, Exp a, const Scalar& coef) {
    if (a.size() != seed->size()) throw SeedMismatch("exponent length differs from seed size");
    TorusElement f(std::move(seed));
    f.add_term(a, coef);
    return f;
}

TorusElement TorusElement::one(SeedPtr seed) {
    Exp z(seed->size(), 0);
    return monomial(std::move(seed), z);
}

void TorusElement::add_term(const Exp& a, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(a, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

static void check_same(const TorusElement& a, const TorusElement& b) {
    if (!same_seed(a.seed(), b.seed())) throw SeedMismatch("elements live on different charts");
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
    if (!seed_) seed_ = o.seed_;
    check_same(*this, o);
    for (const auto& [a, c] : o.t_) add_term(a, c);
    return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
    if (!seed_) seed_ = o.seed_;
    check_same(*this, o);
    for (const auto& [a, c] : o.t_) add_term(a, -c);
    return *this;
}

TorusElement TorusElement::operator-() const {
    TorusElement r = *this;
    for (auto& [a, c] : r.t_) c = -c;
    return r;
}

TorusElement operator*(const TorusElement& f, const TorusElement& g) {
    check_same(f, g);
    TorusElement r(f.seed_);
    const IceQuiver& q = *f.seed_;
    const size_t n = q.size();
    std::vector<long long> row(n);
    for (const auto& [a, ca] : f.t_) {
        // row = a * eps2, so that <a,b> is a dot product
        std::fill(row.begin(), row.end(), 0);
        for (size_t i = 0; i < n; ++i)
            if (a[i])
                for (size_t j = 0; j < n; ++j) row[j] += static_cast<long long>(a[i]) * q.eps2()[i][j];
        for (const auto& [b, cb] : g.t_) {
            long long h = 0;
            for (size_t j = 0; j < n; ++j) h += row[j] * b[j];
            r.add_term(a + b, (ca * cb).shifted(static_cast<int>(h)));
        }
    }
    return r;
}

TorusElement operator*(const Scalar& s, const TorusElement& f) {
    TorusElement r(f.seed_);
    for (const auto& [a, c] : f.t_) r.add_term(a, s * c);
    return r;
}

TorusElement TorusElement::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    TorusElement r = one(seed_), base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

TorusElement TorusElement::inverse() const {
    if (t_.size() != 1) throw NotInvertible("only monomials are invertible");
    const auto& [a, c] = *t_.begin();
    // (c X_a)^{-1} = c^{-1} X_{-a} since <a,-a> = 0
    return monomial(seed_, -a, c.unit_inverse());
}

TorusElement TorusElement::star() const {
    TorusElement r(seed_);
    for (const auto& [a, c] : t_) r.t_.emplace(a, c.bar());
    return r;
}

TorusElement TorusElement::div_scalar(const Scalar& s) const {
    TorusElement r(seed_);
    for (const auto& [a, c] : t_) r.t_.emplace(a, div_exact(c, s));
    return r;
}

TorusElement TorusElement::rebased(SeedPtr seed) const {
    if (seed->size() != seed_->size()) throw SeedMismatch("rebasing onto a chart of different size");
    TorusElement r(std::move(seed));
    r.t_ = t_;
    return r;
}

bool TorusElement::is_positive() const {
    for (const auto& [a, c] : t_)
        if (!c.is_positive()) return false;
    return true;
}

std::string TorusElement::str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [a, c] : t_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")*X[";
        bool first = true;
        for (size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            if (!first) out += ",";
            first = false;
            out += seed_->vertex(i).id + ":" + std::to_string(a[i]);
        }
        out += "]";
    }
    return out;
}

namespace {

std::vector<long long> column_sums(const IceQuiver& q, const Exp& a) {
    std::vector<long long> s(q.size(), 0);
    for (size_t i = 0; i < q.size(); ++i)
        if (a[i])
            for (size_t j = 0; j < q.size(); ++j) s[j] += static_cast<long long>(a[i]) * q.eps2(i, j);
    return s;
}

}  // namespace

bool is_global_monomial(const IceQuiver& q, const Exp& a) {
    auto s = column_sums(q, a);
    for (size_t j = 0; j < q.size(); ++j)
        if (!q.frozen(j) && s[j] < 0) return false;
    return true;
}

bool is_casimir(const IceQuiver& q, const Exp& a) {
    for (long long x : column_sums(q, a))
        if (x != 0) return false;
    return true;
}

WeightPair frozen_weight(const DiskSeed& d, const TorusElement& f) {
    const auto& q = f.quiver();
    const size_t r = d.boundary_frozen[0].size();
    std::vector<size_t> ia, ib;
    for (size_t i = 0; i < r; ++i) {
        ia.push_back(q.index(d.boundary_frozen[0][i]));
        ib.push_back(q.index(d.boundary_frozen[1][i]));
    }
    WeightPair w{IntVec(r, 0), IntVec(r, 0)};
    bool first = true;
    for (const auto& [a, c] : f.terms()) {
        WeightPair x{IntVec(r), IntVec(r)};
        for (size_t i = 0; i < r; ++i) {
            x.first[i] = a[ia[i]];
            x.second[i] = a[ib[i]];
        }
        if (first) w = x;
        else if (x != w) throw MixedWeight("monomials of the element carry different frozen weights");
        first = false;
    }
    return w;
}

}  // namespace qca

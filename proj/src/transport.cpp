#include "qca/transport.hpp"

#include <numeric>

#include "qca/errors.hpp"

namespace qca {

bool Factored::is_laurent() const {
    for (const auto& [m, n] : factors)
        if (n < 0) return false;
    return true;
}

namespace {

void bump(std::map<int, int>& r, int m, int n) {
    if (!n) return;
    int& x = r[m];
    x += n;
    if (!x) r.erase(m);
}

// R(X_k) X_v = X_v R(q^{shift} X_k)
int factor_shift(const IceQuiver& q, size_t k, const Exp& v) {
    return static_cast<int>(-2 * pairing2(q, v, unit_exp(q.size(), k)));
}

}  // namespace

Factored factored_mul(const IceQuiver& q, size_t k, const Factored& x, const Factored& y) {
    Factored r;
    r.coef = (x.coef * y.coef).shifted(static_cast<int>(pairing2(q, x.v, y.v)));
    r.v = x.v + y.v;
    const int sh = factor_shift(q, k, y.v);
    for (const auto& [m, n] : x.factors) bump(r.factors, m + sh, n);
    for (const auto& [m, n] : y.factors) bump(r.factors, m, n);
    return r;
}

Factored factored_inverse(const IceQuiver& q, size_t k, const Factored& x) {
    Factored r;
    r.coef = x.coef.unit_inverse();
    r.v = -x.v;
    const int sh = factor_shift(q, k, r.v);
    for (const auto& [m, n] : x.factors) bump(r.factors, m + sh, -n);
    return r;
}

std::vector<Factored> mutation_images(const IceQuiver& q, size_t k) {
    if (q.frozen(k)) throw FrozenMutation("vertex " + q.vertex(k).id + " is frozen");
    const size_t n = q.size();
    std::vector<Factored> out(n);
    for (size_t i = 0; i < n; ++i) {
        if (i == k) {
            out[i].v = -unit_exp(n, k);
            continue;
        }
        const int e = q.eps2(i, k) / 2;
        Factored x;
        x.v = unit_exp(n, i);
        if (e < 0) {
            for (int r = 1; r <= -e; ++r) bump(x.factors, 2 * (2 * r - 1), 1);
        } else {
            for (int r = 1; r <= e; ++r) {
                // 1 + q^s X_k^{-1} = q^s X_k^{-1} (1 + q^{-s} X_k)
                const int s = 2 * (2 * r - 1);
                Factored f;
                f.coef = Scalar::qpow(s);
                f.v = -unit_exp(n, k);
                f.factors[-s] = 1;
                x = factored_mul(q, k, x, factored_inverse(q, k, f));
            }
        }
        out[i] = x;
    }
    return out;
}

namespace {

TorusElement binomial_power(const SeedPtr& seed, size_t k, int m, int n) {
    TorusElement lin = TorusElement::one(seed);
    lin.add_term(unit_exp(seed->size(), k), Scalar::qpow(m));
    return lin.pow(n);
}

}  // namespace

TorusElement expand(const SeedPtr& seed, size_t k, const Factored& x) {
    if (!x.is_laurent()) throw NotLaurent("factored element has a denominator");
    TorusElement f = TorusElement::monomial(seed, x.v, x.coef);
    for (const auto& [m, n] : x.factors) f = f * binomial_power(seed, k, m, n);
    return f;
}

TorusElement divide_right(const TorusElement& f, size_t k, int m) {
    const IceQuiver& q = f.quiver();
    const Exp ek = unit_exp(q.size(), k);
    // fibers: exponents with the k-th coordinate dropped
    std::map<Exp, std::map<int, Scalar>> fib;
    for (const auto& [a, c] : f.terms()) {
        Exp key = a;
        key[k] = 0;
        fib[key][a[k]] = c;
    }
    TorusElement g(f.seed());
    for (auto& [key, d] : fib) {
        const int lo = d.begin()->first;
        while (!d.empty()) {
            auto top = std::prev(d.end());
            const int hi = top->first;
            if (hi <= lo) throw NotDivisible("not divisible by (1 + q^(" + std::to_string(m) + "/2) X_k)");
            Exp b = key;
            b[k] = hi - 1;
            Scalar gb = top->second.shifted(-(m + static_cast<int>(pairing2(q, b, ek))));
            d.erase(top);
            auto& below = d[hi - 1];
            below -= gb;
            if (below.is_zero()) d.erase(hi - 1);
            g.add_term(b, gb);
        }
    }
    return g;
}

TorusElement transport_step(const TorusElement& f, size_t k) {
    const IceQuiver& old = f.quiver();
    SeedPtr fresh = make_seed(old.mutated(k));
    const IceQuiver& q = *fresh;
    const size_t n = q.size();
    // old variables in the new chart; mutation is involutive
    auto imgs = mutation_images(q, k);
    std::vector<Factored> inv(n);
    for (size_t i = 0; i < n; ++i) inv[i] = factored_inverse(q, k, imgs[i]);

    std::vector<Factored> terms;
    terms.reserve(f.terms().size());
    for (const auto& [a, c] : f.terms()) {
        long long nh = 0;
        for (size_t i = 0; i < n; ++i)
            if (a[i])
                for (size_t j = i + 1; j < n; ++j) nh -= static_cast<long long>(a[i]) * a[j] * old.eps2(i, j);
        Factored x;
        x.v.assign(n, 0);
        for (size_t i = 0; i < n; ++i)
            for (int t = 0; t < std::abs(a[i]); ++t) x = factored_mul(q, k, x, a[i] > 0 ? imgs[i] : inv[i]);
        x.coef = (c * x.coef).shifted(static_cast<int>(nh));
        terms.push_back(std::move(x));
    }
    std::map<int, int> den;
    for (const auto& x : terms)
        for (const auto& [m, p] : x.factors)
            if (p < 0) den[m] = std::max(den[m], -p);
    TorusElement num(fresh);
    for (auto x : terms) {
        for (const auto& [m, p] : den) bump(x.factors, m, p);
        num += expand(fresh, k, x);
    }
    for (const auto& [m, p] : den) {
        for (int t = 0; t < p; ++t) {
            try {
                num = divide_right(num, k, m);
            } catch (const NotDivisible&) {
                throw NotLaurent("element is not Laurent after mutating at " + q.vertex(k).id);
            }
        }
    }
    return num;
}

TorusElement transport(const TorusElement& f, const std::vector<std::string>& steps) {
    TorusElement g = f;
    for (const auto& id : steps) g = transport_step(g, g.quiver().index(id));
    return g;
}

QuotientTorus::QuotientTorus(SeedPtr seed, std::vector<Exp> relations) : seed_(std::move(seed)), rel_(std::move(relations)) {
    for (const auto& c : rel_)
        if (!is_casimir(*seed_, c)) throw NonCasimirRelation("relation vector is not a Casimir");
    const size_t n = seed_->size();
    std::vector<std::vector<long long>> rows;
    for (const auto& c : rel_) rows.emplace_back(c.begin(), c.end());
    // Hermite normal form by row operations
    size_t top = 0;
    for (size_t col = 0; col < n && top < rows.size(); ++col) {
        for (;;) {
            size_t best = rows.size();
            for (size_t i = top; i < rows.size(); ++i)
                if (rows[i][col] && (best == rows.size() || std::llabs(rows[i][col]) < std::llabs(rows[best][col]))) best = i;
            if (best == rows.size()) break;
            std::swap(rows[top], rows[best]);
            bool clean = true;
            for (size_t i = top + 1; i < rows.size(); ++i) {
                if (!rows[i][col]) continue;
                long long t = rows[i][col] / rows[top][col];
                for (size_t j = 0; j < n; ++j) rows[i][j] -= t * rows[top][j];
                if (rows[i][col]) clean = false;
            }
            if (clean) break;
        }
        if (top < rows.size() && rows[top][col]) {
            if (rows[top][col] < 0)
                for (auto& x : rows[top]) x = -x;
            for (size_t i = 0; i < top; ++i) {
                long long d = rows[top][col];
                long long t = rows[i][col] >= 0 ? rows[i][col] / d : -((-rows[i][col] + d - 1) / d);
                for (size_t j = 0; j < n; ++j) rows[i][j] -= t * rows[top][j];
            }
            hnf_.push_back(rows[top]);
            pivot_.push_back(col);
            ++top;
        }
    }
}

Exp QuotientTorus::reduce_exp(Exp a) const {
    for (size_t r = 0; r < hnf_.size(); ++r) {
        const long long d = hnf_[r][pivot_[r]];
        long long x = a[pivot_[r]];
        long long t = x >= 0 ? x / d : -((-x + d - 1) / d);
        if (!t) continue;
        for (size_t j = 0; j < a.size(); ++j) a[j] -= static_cast<int>(t * hnf_[r][j]);
    }
    return a;
}

TorusElement QuotientTorus::reduce(const TorusElement& f) const {
    if (!same_seed(f.seed(), seed_)) throw SeedMismatch("element is not on the quotient's chart");
    // Casimirs pair trivially with everything, so X_a = X_{a - c} X_c exactly
    TorusElement r(seed_);
    for (const auto& [a, c] : f.terms()) r.add_term(reduce_exp(a), c);
    return r;
}

std::vector<Exp> leading_exponents(const TorusElement& f) {
    const auto& q = f.quiver();
    auto mut = q.mutable_indices();
    std::vector<Exp> out;
    for (const auto& [a, c] : f.terms()) {
        bool minimal = true;
        for (const auto& [b, d] : f.terms()) {
            if (a == b) continue;
            bool le = true, strict = false;
            for (size_t i : mut) {
                if (b[i] > a[i]) le = false;
                if (b[i] < a[i]) strict = true;
            }
            if (le && strict) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(a);
    }
    return out;
}

}  // namespace qca

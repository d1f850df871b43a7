#include "qca/tropical.hpp"

#include <algorithm>
#include <limits>

#include "qca/errors.hpp"

namespace qca {

TropicalPoint trop_mutate(const TropicalPoint& p, size_t k) {
    const IceQuiver& q = *p.chart;
    if (q.frozen(k)) throw FrozenMutation("vertex " + q.vertex(k).id + " is frozen");
    long long pos = 0, neg = 0;
    for (size_t j = 0; j < q.size(); ++j) {
        long long e = q.eps2(k, j) / 2;
        if (e >= 0) pos += e * p.coords[j];
        else neg += -e * p.coords[j];
    }
    TropicalPoint r{make_seed(q.mutated(k)), p.coords};
    r.coords[k] = std::min(pos, neg) - p.coords[k];
    return r;
}

long long trop_eval(const std::vector<Exp>& monomials, const std::vector<long long>& p) {
    if (monomials.empty()) throw Error("EmptyExpression", "tropicalization of zero is undefined");
    long long best = std::numeric_limits<long long>::max();
    for (const auto& a : monomials) {
        long long s = 0;
        for (size_t i = 0; i < a.size(); ++i) s += a[i] * p[i];
        best = std::min(best, s);
    }
    return best;
}

long long trop_eval(const TorusElement& f, const std::vector<long long>& p) {
    std::vector<Exp> ms;
    for (const auto& [a, c] : f.terms()) {
        if (!c.is_positive()) throw NotPositive("coefficient " + c.str() + " is not positive");
        ms.push_back(a);
    }
    return trop_eval(ms, p);
}

namespace {

void axpy(IntVec& y, long long a, const IntVec& x) {
    for (size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

}  // namespace

WeightPair lusztig_weight(const CartanData& cd, const LusztigDatum& d) {
    const int r = cd.r;
    auto beta = root_sequence(cd, d.word);
    auto beta_star = root_sequence(cd, star_word(cd, d.word));
    WeightPair w{IntVec(r, 0), IntVec(r, 0)};
    for (size_t k = 0; k < d.word.size(); ++k) {
        axpy(w.first, d.a[k], beta[k]);
        axpy(w.second, d.c[k], beta_star[k]);
    }
    for (int i = 0; i < r; ++i) {
        long long s = d.lam[i] + d.mu[i];
        w.first[i] += s;
        w.second[star_involution(cd, i)] += s;
    }
    return w;
}

void enumerate_weight(const CartanData& cd, const Word& word, const WeightPair& lambda,
                      const std::function<void(const LusztigDatum&)>& visit) {
    const int r = cd.r;
    const size_t n = word.size();
    auto beta = root_sequence(cd, word);
    auto beta_star = root_sequence(cd, star_word(cd, word));
    // every coordinate contributes a nonzero nonnegative vector to (first, second)
    struct Gen {
        IntVec x, y;
    };
    std::vector<Gen> gens;
    for (size_t k = 0; k < n; ++k) gens.push_back({beta[k], IntVec(r, 0)});
    for (int i = 0; i < r; ++i) gens.push_back({simple_root(r, i), simple_root(r, star_involution(cd, i))});
    for (size_t k = 0; k < n; ++k) gens.push_back({IntVec(r, 0), beta_star[k]});
    for (int i = 0; i < r; ++i) gens.push_back({simple_root(r, i), simple_root(r, star_involution(cd, i))});

    for (long long v : lambda.first)
        if (v < 0) return;
    for (long long v : lambda.second)
        if (v < 0) return;
    long long total = 0;
    for (long long v : lambda.first) total += v;
    for (long long v : lambda.second) total += v;
    if (total > 64) throw EnumerationBound("weight too large for enumeration");

    std::vector<long long> pick(gens.size(), 0);
    IntVec restx = lambda.first, resty = lambda.second;
    std::function<void(size_t)> rec = [&](size_t g) {
        if (g == gens.size()) {
            if (std::all_of(restx.begin(), restx.end(), [](long long v) { return v == 0; }) &&
                std::all_of(resty.begin(), resty.end(), [](long long v) { return v == 0; })) {
                LusztigDatum d;
                d.word = word;
                d.a.assign(pick.begin(), pick.begin() + n);
                d.lam.assign(pick.begin() + n, pick.begin() + n + r);
                d.c.assign(pick.begin() + n + r, pick.begin() + 2 * n + r);
                d.mu.assign(pick.begin() + 2 * n + r, pick.end());
                visit(d);
            }
            return;
        }
        const auto& [x, y] = gens[g];
        long long m = 0;
        for (;;) {
            pick[g] = m;
            rec(g + 1);
            bool fits = true;
            for (int i = 0; i < r; ++i)
                if (x[i] > restx[i] || y[i] > resty[i]) fits = false;
            if (!fits) break;
            axpy(restx, -1, x);
            axpy(resty, -1, y);
            ++m;
        }
        axpy(restx, m, x);
        axpy(resty, m, y);
        pick[g] = 0;
    };
    rec(0);
}

long long count_F0_dim(const CartanData& cd, const Word& word, const WeightPair& lambda) {
    long long count = 0;
    enumerate_weight(cd, word, lambda, [&](const LusztigDatum&) { ++count; });
    return count;
}

long long potential_trop(const CartanData& cd, const LusztigDatum& d, int i) {
    const int is = star_involution(cd, i);
    long long best = std::numeric_limits<long long>::max();
    for (size_t k = 0; k < d.word.size(); ++k) {
        if (d.word[k] == is) best = std::min(best, d.a[k]);
        if (d.word[k] == i) best = std::min(best, d.c[k]);
    }
    return best;
}

LusztigDatum orbit_normal_form(const CartanData& cd, const LusztigDatum& d) {
    // mu - w0(lambda_a) = 0 gives lambda_a = w0(mu)
    IntVec shift = weyl_act(cd, cd.w0, d.mu);
    LusztigDatum r = d;
    for (int i = 0; i < cd.r; ++i) r.lam[i] += shift[i];
    r.mu.assign(cd.r, 0);
    return r;
}

}  // namespace qca

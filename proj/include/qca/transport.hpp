#pragma once

#include <map>
#include <string>
#include <vector>

#include "qca/qtorus.hpp"

namespace qca {

// coef * X_v * prod_m (1 + q^{m/2} X_k)^{n_m}, n_m of either sign
struct Factored {
    Scalar coef{1};
    Exp v;
    std::map<int, int> factors;

    bool is_laurent() const;
};

Factored factored_mul(const IceQuiver& q, size_t k, const Factored& x, const Factored& y);
Factored factored_inverse(const IceQuiver& q, size_t k, const Factored& x);
// throws NotLaurent when some factor has a negative power
TorusElement expand(const SeedPtr& seed, size_t k, const Factored& x);

// Images X'_i of the mutated chart's variables written in the chart q:
// X'_k = X_{-e_k}; X_i prod_{r<=|eps_ik|} (1+q^{2r-1}X_k) for eps_ik < 0;
// X_i prod_{r<=eps_ik} (1+q^{2r-1}X_k^{-1})^{-1} for eps_ik > 0.
std::vector<Factored> mutation_images(const IceQuiver& q, size_t k);

// g with g * (1 + q^{m/2} X_k) = f
TorusElement divide_right(const TorusElement& f, size_t k, int m);

struct MutationPath {
    IceQuiver base;
    std::vector<std::string> steps;
};

// f in the chart mutated at k
TorusElement transport_step(const TorusElement& f, size_t k);
TorusElement transport(const TorusElement& f, const std::vector<std::string>& steps);

// Sets X_c = 1 for the given Casimir vectors.
class QuotientTorus {
public:
    QuotientTorus(SeedPtr seed, std::vector<Exp> relations);

    const SeedPtr& seed() const { return seed_; }
    const std::vector<Exp>& relations() const { return rel_; }
    Exp reduce_exp(Exp a) const;
    TorusElement reduce(const TorusElement& f) const;

private:
    SeedPtr seed_;
    std::vector<Exp> rel_;
    std::vector<std::vector<long long>> hnf_;
    std::vector<size_t> pivot_;
};

// Minimal exponents of f under the componentwise order on mutable
// coordinates. A heuristic stand-in for filtration leading terms, not a
// membership test.
std::vector<Exp> leading_exponents(const TorusElement& f);

}  // namespace qca

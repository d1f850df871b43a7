#pragma once

#include <functional>
#include <vector>

#include "qca/qtorus.hpp"
#include "qca/rootdata.hpp"

namespace qca {

struct TropicalPoint {
    SeedPtr chart;
    std::vector<long long> coords;  // value of A_i^t per vertex
};

TropicalPoint trop_mutate(const TropicalPoint& p, size_t k);

// min over monomials of the linear form; coefficients must be positive
long long trop_eval(const std::vector<Exp>& monomials, const std::vector<long long>& p);
long long trop_eval(const TorusElement& f, const std::vector<long long>& p);

struct LusztigDatum {
    Word word;
    IntVec a, lam, c, mu;
};

WeightPair lusztig_weight(const CartanData& cd, const LusztigDatum& d);

// Calls visit for every datum in N^{2n+2r} of weight lambda.
void enumerate_weight(const CartanData& cd, const Word& word, const WeightPair& lambda,
                      const std::function<void(const LusztigDatum&)>& visit);
long long count_F0_dim(const CartanData& cd, const Word& word, const WeightPair& lambda);

long long potential_trop(const CartanData& cd, const LusztigDatum& d, int i);
LusztigDatum orbit_normal_form(const CartanData& cd, const LusztigDatum& d);

}  // namespace qca

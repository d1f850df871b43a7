#pragma once
// Test-side oracles. Nothing here calls the library code it checks.

#include <gmpxx.h>

#include <cstdlib>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qca/json_io.hpp"
#include "qca/quiver.hpp"

namespace qt {

using qca::IceQuiver;
using qca::IntMatrix;

inline std::string data_path(const std::string& name) { return std::string(QCA_TEST_DATA) + "/" + name; }

inline IceQuiver load_quiver(const std::string& name) {
    return IceQuiver::from_json(nlohmann::json::parse(qca::read_file(data_path(name))));
}

// Random ice quiver: entries touching a mutable vertex are integers, frozen-frozen
// entries may be half-integers.
inline IceQuiver random_quiver(std::mt19937& rng, size_t n, size_t frozen, int bound = 2) {
    std::vector<qca::Vertex> vs;
    for (size_t i = 0; i < n; ++i) vs.push_back({"v" + std::to_string(i), i >= n - frozen, ""});
    IntMatrix e(n, std::vector<int>(n, 0));
    std::uniform_int_distribution<int> d(-bound, bound);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            int x = d(rng);
            if (!(vs[i].frozen && vs[j].frozen)) x *= 2;
            e[i][j] = x;
            e[j][i] = -x;
        }
    }
    return IceQuiver(vs, e);
}

// Textbook mutation on the doubled form:
// e'_ij = -e_ij if k in {i,j}, else e_ij + (|e_ik| e_kj + e_ik |e_kj|) / 4.
inline IntMatrix mutate_eps2(const IntMatrix& e, size_t k) {
    const size_t n = e.size();
    IntMatrix r = e;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (i == k || j == k) r[i][j] = -e[i][j];
            else r[i][j] = e[i][j] + (std::abs(e[i][k]) * e[k][j] + e[i][k] * std::abs(e[k][j])) / 4;
        }
    }
    return r;
}

// Sorts a word of powers X_i^p into ascending index order using
// X_i X_j = q^{2 eps_ij} X_j X_i. Returns the collected half-exponent of q
// and the exponent vector.
inline std::pair<long long, std::vector<int>> sort_word(const IntMatrix& e, std::vector<std::pair<int, int>> w) {
    long long h = 0;
    bool swapped = true;
    while (swapped) {
        swapped = false;
        for (size_t t = 0; t + 1 < w.size(); ++t) {
            auto [i, p] = w[t];
            auto [j, s] = w[t + 1];
            if (i > j) {
                h += 2LL * p * s * e[i][j];
                std::swap(w[t], w[t + 1]);
                swapped = true;
            }
        }
    }
    std::vector<int> a(e.size(), 0);
    for (auto [i, p] : w) a[i] += p;
    return {h, a};
}

// half-exponent of the normalization X_a = q^{N/2} X_1^{a_1} ... X_n^{a_n}
inline long long norm_shift(const IntMatrix& e, const std::vector<int>& a) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j) s -= 1LL * a[i] * a[j] * e[i][j];
    return s;
}

inline std::vector<std::pair<int, int>> ordered(const std::vector<int>& a, bool reversed = false) {
    std::vector<std::pair<int, int>> w;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i]) w.emplace_back(static_cast<int>(i), a[i]);
    if (reversed) std::reverse(w.begin(), w.end());
    return w;
}

// X_a X_b = q^{h/2} X_{a+b}; h by ordered-product expansion
inline long long product_shift(const IntMatrix& e, const std::vector<int>& a, const std::vector<int>& b) {
    auto w = ordered(a);
    auto wb = ordered(b);
    w.insert(w.end(), wb.begin(), wb.end());
    auto [h, c] = sort_word(e, w);
    return norm_shift(e, a) + norm_shift(e, b) + h - norm_shift(e, c);
}

// star(X_a) = q^{h/2} X_a; reverse the ordered product and invert q
inline long long star_shift(const IntMatrix& e, const std::vector<int>& a) {
    auto [h, c] = sort_word(e, ordered(a, true));
    return -norm_shift(e, a) + h - norm_shift(e, a);
}

// Tropical oracle: evaluate cluster K2 mutation on actual numbers A_i = N^{-p_i}
// and read the exponent back. Valid while the number of summands stays far below N.
class K2Values {
public:
    K2Values(const IntMatrix& e, const std::vector<long long>& p) : e_(e) {
        for (long long x : p) v_.push_back(power(-x));
    }
    void mutate(size_t k) {
        mpq_class pos = 1, neg = 1;
        for (size_t i = 0; i < e_.size(); ++i) {
            const int x = e_[k][i] / 2;
            for (int t = 0; t < std::abs(x); ++t) (x > 0 ? pos : neg) *= v_[i];
        }
        v_[k] = (pos + neg) / v_[k];
        v_[k].canonicalize();
        e_ = mutate_eps2(e_, k);
    }
    std::vector<long long> coords() const {
        std::vector<long long> p;
        for (const auto& x : v_) {
            long long bits = static_cast<long long>(mpz_sizeinbase(x.get_num_mpz_t(), 2)) -
                             static_cast<long long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
            // log_N(x) lies within one bit of the exponent; round to the nearest multiple
            long long q = bits >= 0 ? (bits + kBits / 2) / kBits : -((-bits + kBits / 2) / kBits);
            p.push_back(-q);
        }
        return p;
    }

private:
    static constexpr long long kBits = 256;
    static mpq_class power(long long x) {
        mpz_class n = 1;
        n <<= static_cast<mp_bitcnt_t>(kBits * std::llabs(x));
        return x >= 0 ? mpq_class(n) : mpq_class(1, n);
    }
    IntMatrix e_;
    std::vector<mpq_class> v_;
};

}  // namespace qt

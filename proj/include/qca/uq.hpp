#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qca/builders.hpp"
#include "qca/qtorus.hpp"
#include "qca/rootdata.hpp"
#include "qca/transport.hpp"

namespace qca {

struct Sym {
    enum Kind { E, F, K, Kt } kind = E;
    int i = 0;      // 0-based
    int power = 1;  // +-1; only K and Kt take -1

    std::string str() const;
    friend auto operator<=>(const Sym&, const Sym&) = default;
};

// Formal combination of generator words over a common denominator.
// No relations are imposed.
class UqExpression {
public:
    using Terms = std::map<std::vector<Sym>, Scalar>;

    UqExpression() = default;
    static UqExpression scalar(const Scalar& s);
    static UqExpression gen(Sym s);
    static UqExpression gen(Sym::Kind k, int i, int power = 1) { return gen(Sym{k, i, power}); }
    // "E1*F1 - F1*E1 + (q^(1/2))*K1^-1"; indices 1-based
    static UqExpression parse(const std::string& text);

    const Terms& terms() const { return t_; }
    const Scalar& den() const { return den_; }
    void add_term(const std::vector<Sym>& w, const Scalar& c);

    UqExpression& operator+=(const UqExpression& o);
    UqExpression& operator-=(const UqExpression& o);
    friend UqExpression operator+(UqExpression a, const UqExpression& b) { return a += b; }
    friend UqExpression operator-(UqExpression a, const UqExpression& b) { return a -= b; }
    friend UqExpression operator*(const UqExpression& a, const UqExpression& b);
    friend UqExpression operator*(const Scalar& s, const UqExpression& a);
    UqExpression over(const Scalar& d) const;

    std::string str() const;

private:
    Terms t_;
    Scalar den_{1};
};

using ImageMap = std::map<Sym, TorusElement>;

struct KappaContext {
    CartanData cartan;
    Word word;
    DiskSeed disk;
    SeedPtr seed;  // reference chart
    ImageMap images;
    std::optional<QuotientTorus> quotient;
};

KappaContext make_kappa_context(const CartanData& c, const Word& word, bool quotient = false);
// generator images in the anchor chart, before transport to the reference chart
TorusElement anchor_image(const KappaContext& ctx, Sym::Kind kind, int i, SeedPtr chart);

// Evaluates the expression with the given generator images (no quotient).
TorusElement evaluate(const ImageMap& images, const SeedPtr& seed, const UqExpression& x);
TorusElement kappa(const KappaContext& ctx, const UqExpression& x);

struct CaseResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct Report {
    std::vector<CaseResult> cases;
    bool all_passed() const;
    size_t passed() const;
    std::string str() const;
};

Report relation_suite(const KappaContext& ctx);
Report braid_relation_suite(const KappaContext& ctx);

UqExpression braid_T(const CartanData& c, int i, const UqExpression& x);
// images of kappa(T_{s1} ... T_{sm}(g)) for every generator g
ImageMap braid_images(const KappaContext& ctx, const Word& seq);

struct PbwImages {
    std::vector<TorusElement> e, f;
};
PbwImages pbw_elements(const KappaContext& ctx, const Word& word);
long long pbw_span_dim(const KappaContext& ctx, const Word& word, const WeightPair& lambda);
// rank over the fraction field, by cross-multiplying elimination
size_t rank_over_fractions(const std::vector<TorusElement>& rows);

UqExpression dynkin_apply(const CartanData& c, const std::vector<int>& sigma, const UqExpression& x);
KappaContext relabeled(const KappaContext& ctx, const std::vector<int>& sigma);

Report verify_weyl_candidate(const KappaContext& ctx, const std::vector<std::string>& path,
                             const std::unordered_map<std::string, std::string>& perm);

// all generator symbols E_i, F_i, K_i, Kt_i
std::vector<Sym> generators(int r);

}  // namespace qca

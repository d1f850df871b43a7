#include "qca/uq.hpp"

#include <cctype>
#include <sstream>

#include "qca/errors.hpp"
#include "qca/tropical.hpp"

namespace qca {

std::string Sym::str() const {
    static const char* names[] = {"E", "F", "K", "Kt"};
    std::string s = names[kind] + std::to_string(i + 1);
    if (power == -1) s += "^-1";
    return s;
}

UqExpression UqExpression::scalar(const Scalar& s) {
    UqExpression x;
    x.add_term({}, s);
    return x;
}

UqExpression UqExpression::gen(Sym s) {
    if ((s.kind == Sym::E || s.kind == Sym::F) && s.power != 1) throw ParseError("E and F take no inverse");
    UqExpression x;
    x.add_term({s}, Scalar(1));
    return x;
}

void UqExpression::add_term(const std::vector<Sym>& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

UqExpression& UqExpression::operator+=(const UqExpression& o) {
    if (den_ == o.den_) {
        for (const auto& [w, c] : o.t_) add_term(w, c);
        return *this;
    }
    UqExpression r;
    r.den_ = den_ * o.den_;
    for (const auto& [w, c] : t_) r.add_term(w, c * o.den_);
    for (const auto& [w, c] : o.t_) r.add_term(w, c * den_);
    return *this = std::move(r);
}

UqExpression& UqExpression::operator-=(const UqExpression& o) { return *this += Scalar(-1) * o; }

UqExpression operator*(const UqExpression& a, const UqExpression& b) {
    UqExpression r;
    r.den_ = a.den_ * b.den_;
    for (const auto& [w1, c1] : a.t_) {
        for (const auto& [w2, c2] : b.t_) {
            std::vector<Sym> w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add_term(w, c1 * c2);
        }
    }
    return r;
}

UqExpression operator*(const Scalar& s, const UqExpression& a) {
    UqExpression r;
    r.den_ = a.den_;
    for (const auto& [w, c] : a.t_) r.add_term(w, s * c);
    return r;
}

UqExpression UqExpression::over(const Scalar& d) const {
    UqExpression r = *this;
    r.den_ = den_ * d;
    return r;
}

std::string UqExpression::str() const {
    std::string out;
    for (const auto& [w, c] : t_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")";
        for (const auto& s : w) out += "*" + s.str();
    }
    if (out.empty()) out = "0";
    if (!den_.is_one()) out = "[" + out + "] / (" + den_.str() + ")";
    return out;
}

namespace {

struct ExprCursor {
    const std::string& s;
    size_t i = 0;
    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool peek(char c) {
        ws();
        return i < s.size() && s[i] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++i;
        return true;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at " + std::to_string(i) + " in \"" + s + "\"");
    }
    Scalar paren_scalar() {
        size_t start = ++i;
        int depth = 1;
        while (i < s.size() && depth) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')') --depth;
            ++i;
        }
        if (depth) fail("unbalanced parenthesis");
        return Scalar::parse(s.substr(start, i - 1 - start));
    }
    Sym factor() {
        ws();
        Sym x;
        if (eat('E')) x.kind = Sym::E;
        else if (eat('F')) x.kind = Sym::F;
        else if (eat('K')) x.kind = eat('t') ? Sym::Kt : Sym::K;
        else fail("expected generator");
        size_t d = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (d == i) fail("expected index");
        x.i = std::stoi(s.substr(d, i - d)) - 1;
        if (x.i < 0) fail("indices start at 1");
        if (eat('^')) {
            ws();
            if (s.compare(i, 2, "-1") == 0) {
                x.power = -1;
                i += 2;
            } else if (s.compare(i, 1, "1") == 0) {
                i += 1;
            } else {
                fail("only ^-1 is supported");
            }
        }
        return x;
    }
};

}  // namespace

UqExpression UqExpression::parse(const std::string& text) {
    ExprCursor c{text};
    UqExpression out;
    bool first = true;
    for (;;) {
        c.ws();
        if (c.i >= text.size()) break;
        int sign = 1;
        if (c.eat('+')) sign = 1;
        else if (c.eat('-')) sign = -1;
        else if (!first) c.fail("expected '+' or '-'");
        first = false;
        Scalar coef(sign);
        std::vector<Sym> w;
        bool need = true;
        if (c.peek('(')) {
            coef *= c.paren_scalar();
            need = false;
            if (!c.eat('*')) {
                out.add_term(w, coef);
                continue;
            }
            need = true;
        } else if (c.peek('1')) {
            ++c.i;
            need = false;
            if (!c.eat('*')) {
                out.add_term(w, coef);
                continue;
            }
            need = true;
        }
        while (need) {
            w.push_back(c.factor());
            need = c.eat('*');
        }
        for (const auto& s : w)
            if ((s.kind == Sym::E || s.kind == Sym::F) && s.power != 1) c.fail("E and F take no inverse");
        out.add_term(w, coef);
    }
    if (first) throw ParseError("empty expression");
    return out;
}

std::vector<Sym> generators(int r) {
    std::vector<Sym> g;
    for (int i = 0; i < r; ++i)
        for (auto k : {Sym::E, Sym::F, Sym::K, Sym::Kt}) g.push_back({k, i, 1});
    return g;
}

namespace {

std::vector<Sym> all_symbols(int r) {
    auto g = generators(r);
    for (int i = 0; i < r; ++i) {
        g.push_back({Sym::K, i, -1});
        g.push_back({Sym::Kt, i, -1});
    }
    return g;
}

void add_inverses(ImageMap& m, int r) {
    for (int i = 0; i < r; ++i) {
        m[{Sym::K, i, -1}] = m.at({Sym::K, i, 1}).inverse();
        m[{Sym::Kt, i, -1}] = m.at({Sym::Kt, i, 1}).inverse();
    }
}

}  // namespace

TorusElement anchor_image(const KappaContext& ctx, Sym::Kind kind, int i, SeedPtr chart) {
    const bool upper = kind == Sym::E || kind == Sym::K;
    const auto& a = upper ? ctx.disk.e_anchor.at(i) : ctx.disk.f_anchor.at(i);
    const auto& q = *chart;
    const size_t n = q.size();
    Exp e1 = unit_exp(n, q.index(a.triple[0]));
    Exp e12 = e1 + unit_exp(n, q.index(a.triple[1]));
    if (kind == Sym::E || kind == Sym::F) {
        TorusElement w = TorusElement::monomial(chart, e1);
        w.add_term(e12, Scalar(1));
        return w;
    }
    return TorusElement::monomial(chart, e12 + unit_exp(n, q.index(a.triple[2])));
}

KappaContext make_kappa_context(const CartanData& c, const Word& word, bool quotient) {
    validate_reduced_word(c, word);
    KappaContext ctx;
    ctx.cartan = c;
    ctx.word = word;
    ctx.disk = build_disk_seed(c, word);
    ctx.seed = make_seed(ctx.disk.quiver);
    for (int i = 0; i < c.r; ++i) {
        for (bool upper : {true, false}) {
            const auto& a = upper ? ctx.disk.e_anchor[i] : ctx.disk.f_anchor[i];
            IceQuiver q = *ctx.seed;
            for (const auto& id : a.path) q = q.mutated(id);
            SeedPtr chart = make_seed(q);
            std::vector<std::string> back(a.path.rbegin(), a.path.rend());
            for (auto kind : upper ? std::vector{Sym::E, Sym::K} : std::vector{Sym::F, Sym::Kt}) {
                // the return path ends on the reference quiver; rebase onto the shared pointer
                TorusElement img = transport(anchor_image(ctx, kind, i, chart), back);
                ctx.images[{kind, i, 1}] = img.rebased(ctx.seed);
            }
        }
    }
    add_inverses(ctx.images, c.r);
    if (quotient) {
        std::vector<Exp> rel;
        for (int i = 0; i < c.r; ++i) {
            TorusElement o = ctx.images.at({Sym::K, i, 1}) * ctx.images.at({Sym::Kt, i, 1});
            rel.push_back(o.terms().begin()->first);
        }
        ctx.quotient.emplace(ctx.seed, rel);
    }
    return ctx;
}

TorusElement evaluate(const ImageMap& images, const SeedPtr& seed, const UqExpression& x) {
    TorusElement sum(seed);
    for (const auto& [w, c] : x.terms()) {
        TorusElement p = TorusElement::one(seed);
        for (const auto& s : w) {
            auto it = images.find(s);
            if (it == images.end()) throw Error("UnknownGenerator", "no image for " + s.str());
            p = p * it->second;
        }
        sum += c * p;
    }
    return x.den().is_one() ? sum : sum.div_scalar(x.den());
}

TorusElement kappa(const KappaContext& ctx, const UqExpression& x) {
    TorusElement f = evaluate(ctx.images, ctx.seed, x);
    return ctx.quotient ? ctx.quotient->reduce(f) : f;
}

bool Report::all_passed() const { return passed() == cases.size(); }

size_t Report::passed() const {
    size_t n = 0;
    for (const auto& c : cases) n += c.passed;
    return n;
}

std::string Report::str() const {
    std::ostringstream os;
    for (const auto& c : cases) {
        os << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.passed) os << ": " << c.detail;
        os << "\n";
    }
    if (all_passed()) os << "all " << cases.size() << " relation cases pass\n";
    else os << (cases.size() - passed()) << " of " << cases.size() << " relation cases fail\n";
    return os.str();
}

namespace {

using X = UqExpression;

X g(Sym::Kind k, int i, int p = 1) { return X::gen(k, i, p); }

class CaseBuilder {
public:
    CaseBuilder(const KappaContext& ctx, std::string name) : ctx_(ctx) { res_.name = std::move(name); }
    // checks kappa(x) == 0
    void zero(const X& x, const std::string& what) {
        if (!res_.passed) return;
        TorusElement f = kappa(ctx_, x);
        if (!f.is_zero()) fail(what + " leaves residual " + f.str());
    }
    void fail(const std::string& d) {
        if (!res_.passed) return;
        res_.passed = false;
        res_.detail = d;
    }
    CaseResult done() { return res_; }

private:
    const KappaContext& ctx_;
    CaseResult res_;
};

std::string idx(int i) { return std::to_string(i + 1); }

}  // namespace

Report relation_suite(const KappaContext& ctx) {
    const auto& A = ctx.cartan.a;
    const int r = ctx.cartan.r;
    Report rep;
    auto commuting = [&](const std::string& name, Sym::Kind k1, Sym::Kind k2, bool all_pairs) {
        CaseBuilder cb(ctx, name);
        for (int i = 0; i < r; ++i)
            for (int j = all_pairs ? 0 : i + 1; j < r; ++j)
                cb.zero(g(k1, i) * g(k2, j) - g(k2, j) * g(k1, i), name + " " + idx(i) + "," + idx(j));
        rep.cases.push_back(cb.done());
    };
    commuting("K.K", Sym::K, Sym::K, false);
    commuting("Kt.Kt", Sym::Kt, Sym::Kt, false);
    commuting("Kt.K", Sym::Kt, Sym::K, true);

    auto twisted = [&](const std::string& name, Sym::Kind k, Sym::Kind e, int sign) {
        CaseBuilder cb(ctx, name);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                cb.zero(g(k, i) * g(e, j) - Scalar::qpow(2 * sign * A[i][j]) * (g(e, j) * g(k, i)),
                        name + " " + idx(i) + "," + idx(j));
        rep.cases.push_back(cb.done());
    };
    twisted("K.E", Sym::K, Sym::E, 1);
    twisted("Kt.E", Sym::Kt, Sym::E, -1);
    twisted("K.F", Sym::K, Sym::F, -1);
    twisted("Kt.F", Sym::Kt, Sym::F, 1);

    {
        // E_i F_j - F_j E_i = delta_ij (q - q^{-1}) (Kt_i - K_i)
        CaseBuilder cb(ctx, "E.F");
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j) {
                X lhs = g(Sym::E, i) * g(Sym::F, j) - g(Sym::F, j) * g(Sym::E, i);
                if (i == j) lhs -= q_minus_qinv() * (g(Sym::Kt, i) - g(Sym::K, i));
                cb.zero(lhs, "[E" + idx(i) + ",F" + idx(j) + "]");
            }
        }
        rep.cases.push_back(cb.done());
    }
    if (r > 1) {
        for (auto k : {Sym::E, Sym::F}) {
            const std::string name = k == Sym::E ? "serre.E" : "serre.F";
            CaseBuilder cb(ctx, name);
            for (int i = 0; i < r; ++i) {
                for (int j = 0; j < r; ++j) {
                    if (i == j) continue;
                    X a = g(k, i), b = g(k, j);
                    if (A[i][j] == -1)
                        cb.zero(a * a * b - q_plus_qinv() * (a * b * a) + b * a * a, name + " " + idx(i) + "," + idx(j));
                    else
                        cb.zero(a * b - b * a, name + " " + idx(i) + "," + idx(j));
                }
            }
            rep.cases.push_back(cb.done());
        }
    }
    {
        CaseBuilder cb(ctx, "casimir");
        for (int i = 0; i < r; ++i) {
            TorusElement o = ctx.images.at({Sym::K, i, 1}) * ctx.images.at({Sym::Kt, i, 1});
            if (!o.is_monomial() || !is_casimir(*ctx.seed, o.terms().begin()->first))
                cb.fail("K" + idx(i) + "Kt" + idx(i) + " is not a Casimir monomial");
            for (const auto& s : generators(r)) {
                const auto& x = ctx.images.at(s);
                if (o * x != x * o) cb.fail("K" + idx(i) + "Kt" + idx(i) + " does not commute with " + s.str());
            }
        }
        rep.cases.push_back(cb.done());
    }
    {
        CaseBuilder cb(ctx, "star");
        for (const auto& s : generators(r))
            if (ctx.images.at(s).star() != ctx.images.at(s)) cb.fail(s.str() + " is not self-adjoint");
        rep.cases.push_back(cb.done());
    }
    {
        CaseBuilder cb(ctx, "grading");
        for (int i = 0; i < r; ++i) {
            IntVec ai = simple_root(r, i), ais = simple_root(r, star_involution(ctx.cartan, i)), z(r, 0);
            std::vector<std::pair<Sym, WeightPair>> want = {{{Sym::E, i, 1}, {ai, z}},
                                                            {{Sym::F, i, 1}, {z, ais}},
                                                            {{Sym::K, i, 1}, {ai, ais}},
                                                            {{Sym::Kt, i, 1}, {ai, ais}}};
            for (const auto& [s, w] : want) {
                try {
                    if (frozen_weight(ctx.disk, ctx.images.at(s)) != w) cb.fail(s.str() + " has the wrong weight");
                } catch (const MixedWeight&) {
                    cb.fail(s.str() + " is not homogeneous");
                }
            }
        }
        rep.cases.push_back(cb.done());
    }
    if (ctx.quotient) {
        CaseBuilder cb(ctx, "quotient");
        for (int i = 0; i < r; ++i) cb.zero(g(Sym::K, i) * g(Sym::Kt, i) - X::scalar(1), "K" + idx(i) + "Kt" + idx(i) + " - 1");
        rep.cases.push_back(cb.done());
    }
    return rep;
}

UqExpression braid_T(const CartanData& c, int i, const UqExpression& x) {
    auto image = [&](const Sym& s) -> X {
        const int j = s.i;
        if (j == i) {
            switch (s.kind) {
                case Sym::E: return Scalar::qpow(-2) * (g(Sym::K, i, -1) * g(Sym::F, i));
                case Sym::F: return Scalar::qpow(2) * (g(Sym::E, i) * g(Sym::Kt, i, -1));
                default: return X::gen({s.kind, i, -s.power});
            }
        }
        if (c.a[i][j] == 0) return X::gen(s);
        switch (s.kind) {
            case Sym::E:
            case Sym::F: {
                X a = g(s.kind, j), b = g(s.kind, i);
                return (Scalar::qpow(1) * (a * b) - Scalar::qpow(-1) * (b * a)).over(q_minus_qinv());
            }
            default:
                if (s.power == 1) return g(s.kind, i) * g(s.kind, j);
                return g(s.kind, j, -1) * g(s.kind, i, -1);
        }
    };
    X out;
    for (const auto& [w, coef] : x.terms()) {
        X p = X::scalar(coef);
        for (const auto& s : w) p = p * image(s);
        out += p;
    }
    return out.over(x.den());
}

namespace {

ImageMap braid_step(const KappaContext& ctx, const ImageMap& phi, int i) {
    ImageMap next;
    for (const auto& s : all_symbols(ctx.cartan.r)) next[s] = evaluate(phi, ctx.seed, braid_T(ctx.cartan, i, X::gen(s)));
    return next;
}

}  // namespace

ImageMap braid_images(const KappaContext& ctx, const Word& seq) {
    ImageMap phi = ctx.images;
    for (int i : seq) phi = braid_step(ctx, phi, i);
    return phi;
}

Report braid_relation_suite(const KappaContext& ctx) {
    const auto& A = ctx.cartan.a;
    const int r = ctx.cartan.r;
    Report rep;
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            Word u = A[i][j] == -1 ? Word{i, j, i} : Word{i, j};
            Word v = A[i][j] == -1 ? Word{j, i, j} : Word{j, i};
            CaseResult cr{"braid." + idx(i) + "." + idx(j), true, ""};
            auto pu = braid_images(ctx, u), pv = braid_images(ctx, v);
            for (const auto& s : generators(r)) {
                if (pu.at(s) != pv.at(s)) {
                    cr.passed = false;
                    cr.detail = "T" + format_word(u) + " and T" + format_word(v) + " differ on " + s.str();
                    break;
                }
            }
            rep.cases.push_back(cr);
        }
    }
    return rep;
}

PbwImages pbw_elements(const KappaContext& ctx, const Word& word) {
    validate_reduced_word(ctx.cartan, word);
    PbwImages out;
    ImageMap phi = ctx.images;
    for (size_t k = 0; k < word.size(); ++k) {
        out.e.push_back(phi.at({Sym::E, word[k], 1}));
        out.f.push_back(phi.at({Sym::F, word[k], 1}));
        if (k + 1 < word.size()) phi = braid_step(ctx, phi, word[k]);
    }
    return out;
}

size_t rank_over_fractions(const std::vector<TorusElement>& rows) {
    std::vector<std::pair<Exp, TorusElement::Terms>> piv;
    for (const auto& f : rows) {
        TorusElement::Terms r = f.terms();
        for (const auto& [col, pr] : piv) {
            auto it = r.find(col);
            if (it == r.end()) continue;
            const Scalar x = it->second, p = pr.at(col);
            TorusElement::Terms next;
            for (const auto& [a, c] : r) next[a] = p * c;
            for (const auto& [a, c] : pr) next[a] -= x * c;
            std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
            r = std::move(next);
        }
        if (r.empty()) continue;
        // strip the integer content to keep coefficients small
        mpz_class g = 0;
        for (const auto& [a, c] : r)
            for (const auto& [h, v] : c.terms()) g = gcd(g, v);
        if (g > 1)
            for (auto& [a, c] : r) {
                Scalar s;
                for (const auto& [h, v] : c.terms()) s.add_term(h, v / g);
                c = s;
            }
        piv.emplace_back(r.begin()->first, std::move(r));
    }
    return piv.size();
}

long long pbw_span_dim(const KappaContext& ctx, const Word& word, const WeightPair& lambda) {
    auto pbw = pbw_elements(ctx, word);
    const int r = ctx.cartan.r;
    std::vector<TorusElement> rows;
    enumerate_weight(ctx.cartan, word, lambda, [&](const LusztigDatum& d) {
        TorusElement m = TorusElement::one(ctx.seed);
        for (size_t k = 0; k < word.size(); ++k)
            if (d.a[k]) m = m * pbw.e[k].pow(static_cast<int>(d.a[k]));
        for (int i = 0; i < r; ++i)
            if (d.lam[i]) m = m * ctx.images.at({Sym::K, i, 1}).pow(static_cast<int>(d.lam[i]));
        for (size_t k = 0; k < word.size(); ++k)
            if (d.c[k]) m = m * pbw.f[k].pow(static_cast<int>(d.c[k]));
        for (int i = 0; i < r; ++i)
            if (d.mu[i]) m = m * ctx.images.at({Sym::Kt, i, 1}).pow(static_cast<int>(d.mu[i]));
        rows.push_back(std::move(m));
    });
    return static_cast<long long>(rank_over_fractions(rows));
}

namespace {

void check_automorphism(const CartanData& c, const std::vector<int>& sigma) {
    if (static_cast<int>(sigma.size()) != c.r) throw NotAutomorphism("permutation has the wrong length");
    std::vector<bool> seen(c.r, false);
    for (int x : sigma) {
        if (x < 0 || x >= c.r || seen[x]) throw NotAutomorphism("not a permutation");
        seen[x] = true;
    }
    for (int i = 0; i < c.r; ++i)
        for (int j = 0; j < c.r; ++j)
            if (c.a[sigma[i]][sigma[j]] != c.a[i][j]) throw NotAutomorphism("permutation does not preserve the Cartan matrix");
}

}  // namespace

UqExpression dynkin_apply(const CartanData& c, const std::vector<int>& sigma, const UqExpression& x) {
    check_automorphism(c, sigma);
    X out;
    for (const auto& [w, coef] : x.terms()) {
        std::vector<Sym> u = w;
        for (auto& s : u) s.i = sigma[s.i];
        out.add_term(u, coef);
    }
    return out.over(x.den());
}

KappaContext relabeled(const KappaContext& ctx, const std::vector<int>& sigma) {
    check_automorphism(ctx.cartan, sigma);
    KappaContext r = ctx;
    for (auto& [s, f] : r.images) f = ctx.images.at({s.kind, sigma[s.i], s.power});
    for (int side = 0; side < 2; ++side)
        for (int i = 0; i < ctx.cartan.r; ++i) r.disk.boundary_frozen[side][i] = ctx.disk.boundary_frozen[side][sigma[i]];
    return r;
}

Report verify_weyl_candidate(const KappaContext& ctx, const std::vector<std::string>& path,
                             const std::unordered_map<std::string, std::string>& perm) {
    Report rep;
    const IceQuiver& ref = *ctx.seed;
    IceQuiver end = ref;
    for (const auto& id : path) end = end.mutated(id);
    CaseResult qc{"quiver", quiver_equal_upto(ref, end, perm), ""};
    if (!qc.passed) qc.detail = "mutated quiver does not match under the permutation";
    rep.cases.push_back(qc);
    if (!qc.passed) return rep;
    for (const auto& s : generators(ctx.cartan.r)) {
        CaseResult cr{"invariant " + s.str(), true, ""};
        try {
            TorusElement moved = transport(ctx.images.at(s), path);
            TorusElement back(ctx.seed);
            for (const auto& [a, c] : moved.terms()) {
                Exp b(a.size());
                for (size_t i = 0; i < a.size(); ++i) b[i] = a[end.index(perm.at(ref.vertex(i).id))];
                back.add_term(b, c);
            }
            if (back != ctx.images.at(s)) {
                cr.passed = false;
                cr.detail = "image changes to " + back.str();
            }
        } catch (const NotLaurent& e) {
            cr.passed = false;
            cr.detail = e.what();
        }
        rep.cases.push_back(cr);
    }
    return rep;
}

}  // namespace qca

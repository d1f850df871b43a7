#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qca/errors.hpp"
#include "qca/json_io.hpp"
#include "qca/service.hpp"
#include "qca/transport.hpp"
#include "qca/tropical.hpp"
#include "qca/uq.hpp"

using namespace qca;

namespace {

struct Opts {
    std::string type, word, shape = "disk", out, seed, element, point, path, at, expr, seq, gen, datum, left, right;
    bool json_out = false, quotient = false, braid = false;
    int index = 1;
    int port = 0;
    std::string host = "127.0.0.1";
};

void emit(const Opts& o, const json& j, const std::string& text) {
    std::string s = o.json_out || text.empty() ? j.dump(2) + "\n" : text;
    if (!o.out.empty()) write_file(o.out, s);
    else std::cout << s;
}

IntVec parse_ints(const std::string& s) {
    IntVec v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            v.push_back(std::stoll(tok));
        } catch (const std::exception&) {
            throw ParseError("not an integer: " + tok);
        }
    }
    return v;
}

// vertex ids; a token that is not an id but is numeric is a 1-based index
std::vector<std::string> parse_path(const IceQuiver& q, const std::string& s) {
    std::vector<std::string> ids;
    std::stringstream ss(s);
    std::string tok;
    IceQuiver cur = q;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (!cur.has(tok) && !tok.empty() && std::all_of(tok.begin(), tok.end(), ::isdigit)) {
            size_t k = std::stoul(tok);
            if (k == 0 || k > cur.size()) throw UnknownVertex("no vertex with index " + tok);
            tok = cur.vertex(k - 1).id;
        }
        cur = cur.mutated(tok);
        ids.push_back(tok);
    }
    return ids;
}

KappaContext context(const Opts& o) {
    auto c = parse_type(o.type);
    Word w = o.word.empty() ? c.w0 : parse_word(o.word, c.r);
    return make_kappa_context(c, w, o.quotient);
}

Sym parse_sym(const std::string& s) {
    auto x = UqExpression::parse(s);
    if (x.terms().size() != 1 || x.terms().begin()->first.size() != 1) throw ParseError("not a single generator: " + s);
    return x.terms().begin()->first.front();
}

std::vector<long long> point_from(const IceQuiver& q, const json& j) {
    std::vector<long long> p(q.size(), 0);
    for (const auto& [id, v] : j.items()) p[q.index(id)] = v.get<long long>();
    return p;
}

json point_json(const IceQuiver& q, const std::vector<long long>& p) {
    json j = json::object();
    for (size_t i = 0; i < p.size(); ++i) j[q.vertex(i).id] = p[i];
    return j;
}

void cmd_build(const Opts& o) {
    auto c = parse_type(o.type);
    auto w = parse_word(o.word, c.r);
    if (o.shape == "triangle") {
        auto t = build_triangle(c, w);
        emit(o, triangle_to_json(t), "");
    } else if (o.shape == "disk") {
        emit(o, disk_to_json(build_disk_seed(c, w)), "");
    } else {
        throw ParseError("unknown shape " + o.shape);
    }
}

void cmd_mutate(const Opts& o) {
    auto q = quiver_from_any(json::parse(read_file(o.seed)));
    emit(o, q.mutated(o.at).to_json(), "");
}

void cmd_transport(const Opts& o) {
    auto seed = make_seed(quiver_from_any(json::parse(read_file(o.seed))));
    auto f = element_from_json(json::parse(read_file(o.element)), seed);
    auto g = transport(f, parse_path(*seed, o.path));
    emit(o, element_to_json(g), g.str() + "\n");
}

void cmd_verify(const Opts& o) {
    auto ctx = context(o);
    Report r = o.braid ? braid_relation_suite(ctx) : relation_suite(ctx);
    emit(o, report_to_json(r), r.str());
    if (!r.all_passed()) throw Error("RelationFailure", std::to_string(r.cases.size() - r.passed()) + " cases fail");
}

void cmd_pbw(const Opts& o) {
    auto ctx = context(o);
    auto p = pbw_elements(ctx, ctx.word);
    json j = {{"E", json::array()}, {"F", json::array()}};
    std::ostringstream os;
    for (size_t k = 0; k < p.e.size(); ++k) {
        j["E"].push_back(element_to_json(p.e[k]));
        j["F"].push_back(element_to_json(p.f[k]));
        os << "E_" << k + 1 << " = " << p.e[k].str() << "\n";
        os << "F_" << k + 1 << " = " << p.f[k].str() << "\n";
    }
    emit(o, j, os.str());
}

void cmd_braid(Opts o) {
    Word seq;
    for (auto x : parse_ints(o.seq)) seq.push_back(static_cast<int>(x) - 1);
    if (o.type.empty()) {
        int r = 1;
        for (int i : seq) r = std::max(r, i + 1);
        r = std::max(r, parse_sym(o.gen).i + 1);
        o.type = "A" + std::to_string(r);
    }
    auto ctx = context(o);
    for (int i : seq)
        if (i < 0 || i >= ctx.cartan.r) throw ParseError("braid letter out of range");
    auto img = braid_images(ctx, seq).at(parse_sym(o.gen));
    emit(o, element_to_json(img), img.str() + "\n");
}

void cmd_kappa(const Opts& o) {
    auto ctx = context(o);
    auto f = kappa(ctx, UqExpression::parse(o.expr));
    emit(o, element_to_json(f), f.str() + "\n");
}

void cmd_trop_mutate(const Opts& o) {
    auto seed = make_seed(quiver_from_any(json::parse(read_file(o.seed))));
    TropicalPoint p{seed, point_from(*seed, json::parse(read_file(o.point)))};
    for (const auto& v : parse_path(*seed, o.path)) p = trop_mutate(p, p.chart->index(v));
    auto j = point_json(*seed, p.coords);
    emit(o, j, "");
}

void cmd_trop_eval(const Opts& o) {
    auto seed = make_seed(quiver_from_any(json::parse(read_file(o.seed))));
    auto f = element_from_json(json::parse(read_file(o.element)), seed);
    long long v = trop_eval(f, point_from(*seed, json::parse(read_file(o.point))));
    emit(o, json{{"value", v}}, std::to_string(v) + "\n");
}

void cmd_trop_count(const Opts& o) {
    auto c = parse_type(o.type);
    Word w = o.word.empty() ? c.w0 : parse_word(o.word, c.r);
    WeightPair lam{parse_ints(o.left), parse_ints(o.right)};
    if (static_cast<int>(lam.first.size()) != c.r || static_cast<int>(lam.second.size()) != c.r)
        throw ParseError("weights need " + std::to_string(c.r) + " simple-root coefficients");
    long long n = count_F0_dim(c, w, lam);
    emit(o, json{{"count", n}}, std::to_string(n) + "\n");
}

void cmd_trop_potential(const Opts& o) {
    auto c = parse_type(o.type);
    auto d = datum_from_json(json::parse(read_file(o.datum)), c.r);
    long long v = potential_trop(c, d, o.index - 1);
    emit(o, json{{"value", v}}, std::to_string(v) + "\n");
}

void cmd_trop_normal(const Opts& o) {
    auto c = parse_type(o.type);
    auto d = orbit_normal_form(c, datum_from_json(json::parse(read_file(o.datum)), c.r));
    emit(o, datum_to_json(d), "");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum cluster algebra toolkit"};
    app.require_subcommand(1);
    Opts o;
    auto json_flag = [&](CLI::App* s) { s->add_flag("--json", o.json_out, "machine-readable output"); };
    auto out_opt = [&](CLI::App* s) { s->add_option("--out", o.out, "write output to a file"); };
    auto type_word = [&](CLI::App* s, bool word_required) {
        s->add_option("--type", o.type, "Cartan type, e.g. A3")->required();
        auto w = s->add_option("--word", o.word, "reduced word of w0, e.g. 121");
        if (word_required) w->required();
    };
    std::function<void()> action;
    auto on = [&](CLI::App* s, std::function<void()> f) { s->callback([&action, f] { action = f; }); };

    auto build = app.add_subcommand("build", "build a triangle or disk seed");
    type_word(build, true);
    build->add_option("--shape", o.shape, "triangle or disk")->check(CLI::IsMember({"triangle", "disk"}));
    out_opt(build);
    json_flag(build);
    on(build, [&] { cmd_build(o); });

    auto mutate = app.add_subcommand("mutate", "mutate a seed at one vertex");
    mutate->add_option("--seed", o.seed)->required();
    mutate->add_option("--at", o.at, "vertex id")->required();
    out_opt(mutate);
    json_flag(mutate);
    on(mutate, [&] { cmd_mutate(o); });

    auto tr = app.add_subcommand("transport", "transport an element along a mutation path");
    tr->add_option("--seed", o.seed)->required();
    tr->add_option("--element", o.element)->required();
    tr->add_option("--path", o.path, "comma separated vertex ids or 1-based indices")->required();
    out_opt(tr);
    json_flag(tr);
    on(tr, [&] { cmd_transport(o); });

    auto verify = app.add_subcommand("verify", "run the relation suite");
    type_word(verify, false);
    verify->add_flag("--quotient", o.quotient, "work modulo the Casimir quotient");
    verify->add_flag("--braid", o.braid, "run the braid relation suite");
    json_flag(verify);
    on(verify, [&] { cmd_verify(o); });

    auto uq = app.add_subcommand("uq", "quantum group images");
    uq->require_subcommand(1);
    auto uv = uq->add_subcommand("verify", "run the relation suite");
    type_word(uv, false);
    uv->add_flag("--quotient", o.quotient);
    uv->add_flag("--braid", o.braid);
    json_flag(uv);
    on(uv, [&] { cmd_verify(o); });
    auto up = uq->add_subcommand("pbw", "PBW root vector images");
    type_word(up, false);
    json_flag(up);
    on(up, [&] { cmd_pbw(o); });
    auto ub = uq->add_subcommand("braid", "image of a braid group element applied to a generator");
    ub->add_option("--type", o.type, "defaults to A_r with r the largest index used");
    ub->add_option("--word", o.word);
    ub->add_option("--seq", o.seq, "comma separated 1-based letters")->required();
    ub->add_option("--gen", o.gen, "generator, e.g. E1")->required();
    json_flag(ub);
    on(ub, [&] { cmd_braid(o); });
    auto uk = uq->add_subcommand("kappa", "image of an expression");
    type_word(uk, false);
    uk->add_option("--expr", o.expr)->required();
    uk->add_flag("--quotient", o.quotient);
    json_flag(uk);
    on(uk, [&] { cmd_kappa(o); });

    auto trop = app.add_subcommand("trop", "tropical points");
    trop->require_subcommand(1);
    auto tm = trop->add_subcommand("mutate", "mutate a tropical point along a path");
    tm->add_option("--seed", o.seed)->required();
    tm->add_option("--point", o.point, "JSON object vertex id -> integer")->required();
    tm->add_option("--path", o.path)->required();
    json_flag(tm);
    on(tm, [&] { cmd_trop_mutate(o); });
    auto te = trop->add_subcommand("eval", "tropicalize a positive element at a point");
    te->add_option("--seed", o.seed)->required();
    te->add_option("--element", o.element)->required();
    te->add_option("--point", o.point)->required();
    json_flag(te);
    on(te, [&] { cmd_trop_eval(o); });
    auto tc = trop->add_subcommand("count", "count Lusztig data of a weight");
    type_word(tc, false);
    tc->add_option("--left", o.left, "first weight, simple-root coefficients")->required();
    tc->add_option("--right", o.right, "second weight, simple-root coefficients")->required();
    json_flag(tc);
    on(tc, [&] { cmd_trop_count(o); });
    auto tp = trop->add_subcommand("potential", "tropical potential at index i");
    tp->add_option("--type", o.type)->required();
    tp->add_option("--datum", o.datum)->required();
    tp->add_option("--index", o.index, "1-based")->required();
    json_flag(tp);
    on(tp, [&] { cmd_trop_potential(o); });
    auto tn = trop->add_subcommand("normal", "orbit normal form of a datum");
    tn->add_option("--type", o.type)->required();
    tn->add_option("--datum", o.datum)->required();
    json_flag(tn);
    on(tn, [&] { cmd_trop_normal(o); });

    auto srv = app.add_subcommand("serve", "JSON service on localhost");
    srv->add_option("--port", o.port, "defaults to QCA_PORT or 8765");
    srv->add_option("--host", o.host);
    on(srv, [&] {
        int port = o.port ? o.port : default_port();
        std::cerr << "listening on " << o.host << ":" << port << "\n";
        serve(o.host, port);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    try {
        action();
    } catch (const Error& e) {
        std::cout << json{{"error", {{"kind", e.kind()}, {"message", e.what()}}}}.dump() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cout << json{{"error", {{"kind", "ParseError"}, {"message", e.what()}}}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cout << json{{"error", {{"kind", "Internal"}, {"message", e.what()}}}}.dump() << "\n";
        return 1;
    }
    return 0;
}

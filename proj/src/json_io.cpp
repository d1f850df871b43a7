#include "qca/json_io.hpp"

#include <fstream>
#include <sstream>

#include "qca/errors.hpp"

namespace qca {

json element_to_json(const TorusElement& f, const std::string& seed_ref) {
    json terms = json::array();
    for (const auto& [a, c] : f.terms()) {
        json ex = json::object();
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i]) ex[f.quiver().vertex(i).id] = a[i];
        terms.push_back({{"a", ex}, {"coef", c.str()}});
    }
    return {{"seed", seed_ref}, {"terms", terms}};
}

TorusElement element_from_json(const json& j, const SeedPtr& seed) {
    TorusElement f(seed);
    try {
        for (const auto& t : j.at("terms")) {
            Exp a(seed->size(), 0);
            for (const auto& [id, v] : t.at("a").items()) a[seed->index(id)] += v.get<int>();
            const auto& c = t.at("coef");
            f.add_term(a, c.is_string() ? Scalar::parse(c.get<std::string>()) : Scalar(c.get<long>()));
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad element json: ") + e.what());
    }
    return f;
}

json triangle_to_json(const TriangleQuiver& t) {
    return {{"quiver", t.quiver.to_json()},
            {"word", format_word(t.word)},
            {"side_markers", {{"left", t.side_markers[0]}, {"right", t.side_markers[1]}, {"red", t.side_markers[2]}}},
            {"level_of", t.level_of},
            {"letter_of", t.letter_of}};
}

json disk_to_json(const DiskSeed& d) {
    auto anchors = [](const std::vector<KappaAnchor>& v) {
        json out = json::array();
        for (const auto& a : v) out.push_back({{"path", a.path}, {"triple", a.triple}});
        return out;
    };
    return {{"quiver", d.quiver.to_json()},
            {"words", {format_word(d.w1), format_word(d.w2)}},
            {"boundary_frozen", json::array({json(d.boundary_frozen[0]), json(d.boundary_frozen[1])})},
            {"internal_vertices", d.internal_vertices},
            {"alias", d.alias},
            {"kappa_anchors", {{"E", anchors(d.e_anchor)}, {"F", anchors(d.f_anchor)}}}};
}

IceQuiver quiver_from_any(const json& j) {
    if (j.contains("quiver")) return IceQuiver::from_json(j.at("quiver"));
    return IceQuiver::from_json(j);
}

DiskSeed disk_from_json(const json& j) {
    try {
        DiskSeed d;
        d.quiver = IceQuiver::from_json(j.at("quiver"));
        const auto& b = j.at("boundary_frozen");
        d.boundary_frozen = {b.at(0).get<std::vector<std::string>>(), b.at(1).get<std::vector<std::string>>()};
        d.internal_vertices = j.value("internal_vertices", std::vector<std::string>{});
        d.alias = j.value("alias", std::map<std::string, std::string>{});
        auto anchors = [](const json& v) {
            std::vector<KappaAnchor> out;
            for (const auto& a : v)
                out.push_back({a.at("path").get<std::vector<std::string>>(), a.at("triple").get<std::array<std::string, 3>>()});
            return out;
        };
        if (j.contains("kappa_anchors")) {
            d.e_anchor = anchors(j["kappa_anchors"].at("E"));
            d.f_anchor = anchors(j["kappa_anchors"].at("F"));
        }
        return d;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad disk json: ") + e.what());
    }
}

json datum_to_json(const LusztigDatum& d) {
    return {{"word", format_word(d.word)}, {"a", d.a}, {"lam", d.lam}, {"c", d.c}, {"mu", d.mu}};
}

LusztigDatum datum_from_json(const json& j, int r) {
    try {
        LusztigDatum d;
        d.word = parse_word(j.at("word").get<std::string>(), r);
        d.a = j.at("a").get<IntVec>();
        d.lam = j.at("lam").get<IntVec>();
        d.c = j.at("c").get<IntVec>();
        d.mu = j.at("mu").get<IntVec>();
        if (d.a.size() != d.word.size() || d.c.size() != d.word.size() || static_cast<int>(d.lam.size()) != r ||
            static_cast<int>(d.mu.size()) != r)
            throw ParseError("datum vectors have the wrong lengths");
        return d;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad datum json: ") + e.what());
    }
}

json weight_to_json(const WeightPair& w) { return json::array({w.first, w.second}); }

json report_to_json(const Report& r) {
    json cases = json::array();
    for (const auto& c : r.cases) cases.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"cases", cases}, {"passed", r.passed()}, {"total", r.cases.size()}, {"ok", r.all_passed()}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("IOError", "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("IOError", "cannot write " + path);
    out << text;
}

}  // namespace qca

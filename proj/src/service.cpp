#include "qca/service.hpp"

#include <cstdlib>

#include "httplib.h"
#include "qca/errors.hpp"
#include "qca/transport.hpp"

namespace qca {

namespace {

struct Built {
    SeedPtr seed;
    std::optional<KappaContext> ctx;
};

Built build_base(const json& request) {
    Built b;
    if (request.contains("seed")) {
        b.seed = make_seed(quiver_from_any(request.at("seed")));
        return b;
    }
    if (!request.contains("type") || !request.contains("word")) throw ParseError("session needs a seed or a type and word");
    auto c = parse_type(request.at("type").get<std::string>());
    auto w = parse_word(request.at("word").get<std::string>(), c.r);
    const auto shape = request.value("shape", std::string("disk"));
    if (shape == "triangle") {
        b.seed = make_seed(build_triangle(c, w).quiver);
    } else if (shape == "disk") {
        b.ctx = make_kappa_context(c, w);
        b.seed = b.ctx->seed;
    } else {
        throw ParseError("unknown shape " + shape);
    }
    return b;
}

Sym parse_generator(const std::string& s) {
    auto x = UqExpression::parse(s);
    if (x.terms().size() != 1 || x.terms().begin()->first.size() != 1) throw ParseError("not a single generator: " + s);
    return x.terms().begin()->first.front();
}

}  // namespace

Session::Session(std::string id, const json& request) : id_(std::move(id)), request_(request) {
    auto b = build_base(request);
    base_ = b.seed;
    ctx_ = std::move(b.ctx);
    current_ = *base_;
}

json Session::state() const {
    json els = json::object();
    for (const auto& [name, f] : elements_) {
        json e = {{"laurent", true}};
        try {
            TorusElement g = transport(f, history_);
            e["element"] = element_to_json(g, id_);
            e["positive"] = g.is_positive();
        } catch (const NotLaurent& ex) {
            e["laurent"] = false;
            e["element"] = nullptr;
            e["error"] = ex.what();
        }
        els[name] = e;
    }
    json pts = json::object();
    for (const auto& [name, p] : points_) {
        TropicalPoint t{base_, p};
        for (const auto& v : history_) t = trop_mutate(t, t.chart->index(v));
        json coords = json::object();
        for (size_t i = 0; i < t.coords.size(); ++i) coords[current_.vertex(i).id] = t.coords[i];
        pts[name] = coords;
    }
    return {{"id", id_}, {"quiver", current_.to_json()}, {"history", history_}, {"elements", els}, {"points", pts}};
}

json Session::mutate(const std::string& vertex) {
    IceQuiver next = current_.mutated(current_.index(vertex));
    current_ = std::move(next);
    history_.push_back(vertex);
    return state();
}

json Session::undo() {
    if (history_.empty()) throw Error("EmptyHistory", "nothing to undo");
    history_.pop_back();
    current_ = *base_;
    for (const auto& v : history_) current_ = current_.mutated(v);
    return state();
}

json Session::pin_element(const std::string& name, const json& body) {
    if (body.contains("generator")) {
        if (!ctx_) throw ParseError("generator pins need a session built from a type and word");
        Sym s = parse_generator(body.at("generator").get<std::string>());
        elements_[name] = ctx_->images.at(s);
    } else if (body.contains("expression")) {
        if (!ctx_) throw ParseError("expression pins need a session built from a type and word");
        elements_[name] = kappa(*ctx_, UqExpression::parse(body.at("expression").get<std::string>()));
    } else {
        elements_[name] = element_from_json(body.at("element"), base_);
    }
    pins_.emplace_back(name, body);
    return state();
}

json Session::pin_point(const std::string& name, const json& coords) {
    // coordinates are given in the base chart
    std::vector<long long> p(base_->size(), 0);
    for (const auto& [id, v] : coords.items()) p[base_->index(id)] = v.get<long long>();
    points_[name] = p;
    pins_.emplace_back(name, json{{"point", coords}});
    return state();
}

json Session::verify() const {
    if (!ctx_) throw ParseError("verification needs a session built from a type and word");
    return report_to_json(relation_suite(*ctx_));
}

json Session::snapshot() const {
    json pins = json::array();
    for (const auto& [name, body] : pins_) pins.push_back({{"name", name}, {"body", body}});
    return {{"base", request_}, {"history", history_}, {"pins", pins}};
}

json SessionStore::create(const json& request) {
    json base = request.contains("snapshot") ? request.at("snapshot").at("base") : request;
    std::string id;
    {
        std::lock_guard<std::mutex> g(mu_);
        id = "s" + std::to_string(next_++);
    }
    auto s = std::make_shared<Session>(id, base);
    if (request.contains("snapshot")) {
        const auto& snap = request.at("snapshot");
        for (const auto& p : snap.value("pins", json::array())) {
            const auto& body = p.at("body");
            if (body.contains("point")) s->pin_point(p.at("name"), body.at("point"));
            else s->pin_element(p.at("name"), body);
        }
        for (const auto& v : snap.value("history", json::array())) s->mutate(v.get<std::string>());
    }
    std::lock_guard<std::mutex> g(mu_);
    sessions_[id] = s;
    return {{"id", id}};
}

json SessionStore::list() const {
    std::lock_guard<std::mutex> g(mu_);
    json ids = json::array();
    for (const auto& [id, s] : sessions_) ids.push_back(id);
    return {{"sessions", ids}};
}

std::shared_ptr<Session> SessionStore::get(const std::string& id) const {
    std::lock_guard<std::mutex> g(mu_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) throw UnknownSession("no session " + id);
    return it->second;
}

void SessionStore::remove(const std::string& id) {
    std::lock_guard<std::mutex> g(mu_);
    if (!sessions_.erase(id)) throw UnknownSession("no session " + id);
}

int http_status(const Error& e) {
    if (e.kind() == "FrozenMutation") return 409;
    if (e.kind() == "UnknownSession") return 404;
    return 400;
}

int default_port() {
    if (const char* p = std::getenv("QCA_PORT")) {
        try {
            return std::stoi(p);
        } catch (const std::exception&) {
        }
    }
    return 8765;
}

namespace {

json error_json(const std::string& kind, const std::string& what) { return {{"error", {{"kind", kind}, {"message", what}}}}; }

template <class F>
void guarded(httplib::Response& res, F&& f) {
    try {
        res.set_content(f().dump(), "application/json");
    } catch (const Error& e) {
        res.status = http_status(e);
        res.set_content(error_json(e.kind(), e.what()).dump(), "application/json");
    } catch (const json::exception& e) {
        res.status = 400;
        res.set_content(error_json("ParseError", e.what()).dump(), "application/json");
    } catch (const std::exception& e) {
        res.status = 500;
        res.set_content(error_json("Internal", e.what()).dump(), "application/json");
    }
}

json body_of(const httplib::Request& req) { return req.body.empty() ? json::object() : json::parse(req.body); }

// runs f on the addressed session with its lock held
template <class F>
void on_session(SessionStore& store, const httplib::Request& req, httplib::Response& res, F&& f) {
    guarded(res, [&] {
        auto s = store.get(req.matches[1]);
        std::lock_guard<std::mutex> g(s->lock());
        return f(*s, body_of(req));
    });
}

}  // namespace

void configure_routes(httplib::Server& svr, SessionStore& store) {
    svr.Post("/session", [&](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] { return store.create(body_of(req)); });
    });
    svr.Get("/sessions", [&](const httplib::Request&, httplib::Response& res) { guarded(res, [&] { return store.list(); }); });
    svr.Get(R"(/session/([^/]+))", [&](const httplib::Request& req, httplib::Response& res) {
        on_session(store, req, res, [](Session& s, const json&) { return s.state(); });
    });
    svr.Delete(R"(/session/([^/]+))", [&](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            store.remove(req.matches[1]);
            return json{{"deleted", std::string(req.matches[1])}};
        });
    });
    svr.Post(R"(/session/([^/]+)/mutate)", [&](const httplib::Request& req, httplib::Response& res) {
        on_session(store, req, res, [](Session& s, const json& b) { return s.mutate(b.at("vertex").get<std::string>()); });
    });
    svr.Post(R"(/session/([^/]+)/undo)", [&](const httplib::Request& req, httplib::Response& res) {
        on_session(store, req, res, [](Session& s, const json&) { return s.undo(); });
    });
    svr.Post(R"(/session/([^/]+)/pin)", [&](const httplib::Request& req, httplib::Response& res) {
        on_session(store, req, res,
                   [](Session& s, const json& b) { return s.pin_element(b.at("name").get<std::string>(), b); });
    });
    svr.Post(R"(/session/([^/]+)/pin_point)", [&](const httplib::Request& req, httplib::Response& res) {
        on_session(store, req, res, [](Session& s, const json& b) {
            return s.pin_point(b.at("name").get<std::string>(), b.at("coords"));
        });
    });
    svr.Post(R"(/session/([^/]+)/verify)", [&](const httplib::Request& req, httplib::Response& res) {
        on_session(store, req, res, [](Session& s, const json&) { return s.verify(); });
    });
    svr.Get(R"(/session/([^/]+)/snapshot)", [&](const httplib::Request& req, httplib::Response& res) {
        on_session(store, req, res, [](Session& s, const json&) { return s.snapshot(); });
    });
}

void serve(const std::string& host, int port) {
    SessionStore store;
    httplib::Server svr;
    configure_routes(svr, store);
    if (!svr.listen(host, port)) throw Error("IOError", "cannot listen on " + host + ":" + std::to_string(port));
}

}  // namespace qca

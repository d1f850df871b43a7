#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <thread>

#include "httplib.h"
#include "qca/errors.hpp"
#include "qca/service.hpp"
#include "qca/transport.hpp"
#include "support.hpp"

using namespace qca;

namespace {

json four_vertex() { return json::parse(read_file(qt::data_path("four_vertex.json"))); }

}  // namespace

TEST_CASE("element and datum json") {
    auto ctx = make_kappa_context(parse_type("A2"), {0, 1, 0});
    for (const auto& g : generators(2)) {
        const auto& f = ctx.images.at(g);
        auto j = element_to_json(f, "disk");
        CHECK(j.at("seed") == "disk");
        CHECK(element_from_json(j, ctx.seed) == f);
    }
    auto bad = json::parse(R"({"terms":[{"a":{"nope":1},"coef":"1"}]})");
    CHECK_THROWS_AS(element_from_json(bad, ctx.seed), UnknownVertex);

    LusztigDatum d{{0, 1, 0}, {1, 0, 2}, {0, 1}, {3, 0, 0}, {1, 1}};
    auto back = datum_from_json(datum_to_json(d), 2);
    CHECK(back.word == d.word);
    CHECK(back.a == d.a);
    CHECK(back.mu == d.mu);
    CHECK(datum_to_json(d).at("word") == "121");
}

TEST_CASE("disk json") {
    auto d = build_disk_seed(parse_type("A3"), parse_word("123121", 3));
    auto j = disk_to_json(d);
    CHECK(j.at("quiver").at("vertices").size() == 18);
    CHECK(quiver_from_any(j) == d.quiver);
    auto back = disk_from_json(j);
    CHECK(back.boundary_frozen == d.boundary_frozen);
    CHECK(back.alias == d.alias);
    // rank 2 boundary lists have two entries each and must stay arrays
    auto d2 = build_disk_seed(parse_type("A2"), {0, 1, 0});
    CHECK(disk_to_json(d2).at("boundary_frozen").is_array());
    CHECK(disk_from_json(disk_to_json(d2)).boundary_frozen == d2.boundary_frozen);
    auto t = build_triangle(parse_type("A3"), parse_word("123121", 3));
    CHECK(quiver_from_any(triangle_to_json(t)) == t.quiver);
}

TEST_CASE("sessions") {
    SessionStore store;
    auto id = store.create({{"seed", four_vertex()}}).at("id").get<std::string>();
    CHECK(store.list().at("sessions").size() == 1);
    auto s = store.get(id);
    auto before = s->state();
    auto after = s->mutate("b");
    CHECK(after.at("quiver").at("eps2") == json::parse(read_file(qt::data_path("four_vertex_mutated_b.json"))).at("eps2"));
    CHECK_THROWS_AS(s->mutate("c"), FrozenMutation);
    CHECK_THROWS_AS(s->mutate("zz"), UnknownVertex);
    CHECK(s->undo() == before);
    CHECK_THROWS_AS(s->undo(), Error);
    CHECK_THROWS_AS(store.get("nope"), UnknownSession);

    // a second session is untouched by the first
    auto id2 = store.create({{"seed", four_vertex()}}).at("id").get<std::string>();
    store.get(id)->mutate("a");
    CHECK(store.get(id2)->state().at("history").empty());
}

TEST_CASE("pinned elements follow the chart") {
    SessionStore store;
    auto id = store.create({{"type", "A2"}, {"word", "121"}, {"shape", "disk"}}).at("id").get<std::string>();
    auto s = store.get(id);
    s->pin_element("E1", {{"generator", "E1"}});
    s->pin_point("l", {{"T1.r1", 1}});
    auto start = s->state();
    auto ctx = make_kappa_context(parse_type("A2"), {0, 1, 0});
    auto mut = ctx.seed->mutable_indices();
    std::vector<std::string> path;
    for (size_t k = 0; k < 5; ++k) {
        path.push_back(ctx.seed->vertex(mut[(k * 3) % mut.size()]).id);
        auto st = s->mutate(path.back());
        const auto& e = st.at("elements").at("E1");
        CHECK(e.at("laurent") == true);
        CHECK(e.at("positive") == true);
        CHECK(e.at("element") == element_to_json(transport(ctx.images.at({Sym::E, 0, 1}), path), id));
        CHECK(st.at("points").at("l").at("T1.r1") == 1);
    }
    for (int k = 0; k < 5; ++k) s->undo();
    CHECK(s->state() == start);
    CHECK(s->verify().at("ok") == true);

    // replay from a snapshot gives byte-identical state
    s->mutate(path[0]);
    s->mutate(path[1]);
    auto snap = s->snapshot();
    auto id2 = store.create({{"snapshot", snap}}).at("id").get<std::string>();
    auto a = s->state();
    auto b = store.get(id2)->state();
    a.erase("id");
    b.erase("id");
    for (auto& [name, e] : a.at("elements").items()) e.at("element").erase("seed");
    for (auto& [name, e] : b.at("elements").items()) e.at("element").erase("seed");
    CHECK(a.dump() == b.dump());
}

TEST_CASE("http api") {
    SessionStore store;
    httplib::Server svr;
    configure_routes(svr, store);
    int port = svr.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread th([&] { svr.listen_after_bind(); });
    svr.wait_until_ready();

    httplib::Client cli("127.0.0.1", port);
    auto res = cli.Post("/session", json{{"seed", four_vertex()}}.dump(), "application/json");
    REQUIRE(res);
    CHECK(res->status == 200);
    auto id = json::parse(res->body).at("id").get<std::string>();

    res = cli.Post("/session/" + id + "/mutate", R"({"vertex":"b"})", "application/json");
    REQUIRE(res);
    CHECK(res->status == 200);
    CHECK(json::parse(res->body).at("quiver").at("eps2") ==
          json::parse(read_file(qt::data_path("four_vertex_mutated_b.json"))).at("eps2"));

    res = cli.Post("/session/" + id + "/mutate", R"({"vertex":"c"})", "application/json");
    REQUIRE(res);
    CHECK(res->status == 409);
    CHECK(json::parse(res->body).at("error").at("kind") == "FrozenMutation");

    res = cli.Post("/session/" + id + "/mutate", R"({"vertex":"q"})", "application/json");
    REQUIRE(res);
    CHECK(res->status == 400);
    res = cli.Get("/session/nope");
    REQUIRE(res);
    CHECK(res->status == 404);
    res = cli.Post("/session/" + id + "/mutate", "{not json", "application/json");
    REQUIRE(res);
    CHECK(res->status == 400);

    res = cli.Get("/sessions");
    REQUIRE(res);
    CHECK(json::parse(res->body).at("sessions") == json::array({id}));
    res = cli.Post("/session/" + id + "/undo", "", "application/json");
    REQUIRE(res);
    CHECK(json::parse(res->body).at("history").empty());

    res = cli.Post("/session", R"({"type":"A1","word":"1"})", "application/json");
    REQUIRE(res);
    auto id2 = json::parse(res->body).at("id").get<std::string>();
    res = cli.Post("/session/" + id2 + "/pin", R"({"name":"F","generator":"F1"})", "application/json");
    REQUIRE(res);
    CHECK(json::parse(res->body).at("elements").at("F").at("positive") == true);
    res = cli.Post("/session/" + id2 + "/verify", "", "application/json");
    REQUIRE(res);
    CHECK(json::parse(res->body).at("ok") == true);

    svr.stop();
    th.join();
}

TEST_CASE("default port") {
    setenv("QCA_PORT", "9123", 1);
    CHECK(default_port() == 9123);
    unsetenv("QCA_PORT");
    CHECK(default_port() == 8765);
}

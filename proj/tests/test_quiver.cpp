#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qca/errors.hpp"
#include "support.hpp"

using namespace qca;

TEST_CASE("golden mutation at b") {
    IceQuiver q = qt::load_quiver("four_vertex.json");
    IceQuiver m = q.mutated("b");
    CHECK(m.eps2() == qt::load_quiver("four_vertex_mutated_b.json").eps2());
    CHECK(m.eps2(m.index("a"), m.index("b")) == 2);
    CHECK(m.eps2(m.index("b"), m.index("c")) == 2);
    CHECK(m.eps2(m.index("d"), m.index("b")) == 2);
    CHECK(m.eps2(m.index("c"), m.index("a")) == 2);
    CHECK(m.eps2(m.index("c"), m.index("d")) == 1);
    CHECK(m.eps2(m.index("a"), m.index("d")) == 0);
    CHECK(mutate_quiver(q, "b") == m);
}

TEST_CASE("frozen and unknown vertices") {
    IceQuiver q = qt::load_quiver("four_vertex.json");
    CHECK_THROWS_AS(q.mutated("c"), FrozenMutation);
    CHECK_THROWS_AS(q.mutated("z"), UnknownVertex);
}

TEST_CASE("constructor validation") {
    std::vector<Vertex> vs = {{"x", false, ""}, {"y", true, ""}};
    CHECK_THROWS_AS(IceQuiver(vs, {{0, 1}, {-1, 0}}), InvalidQuiver);
    CHECK_THROWS_AS(IceQuiver(vs, {{0, 2}, {2, 0}}), InvalidQuiver);
    CHECK_THROWS_AS(IceQuiver(vs, {{1, 0}, {0, 0}}), InvalidQuiver);
    CHECK_THROWS_AS(IceQuiver({{"x", false, ""}, {"x", true, ""}}, {{0, 0}, {0, 0}}), InvalidQuiver);
    CHECK_NOTHROW(IceQuiver(vs, {{0, 2}, {-2, 0}}));
}

TEST_CASE("mutation matches the textbook rule and is involutive") {
    std::mt19937 rng(21);
    for (int t = 0; t < 300; ++t) {
        size_t n = 2 + rng() % 5;
        IceQuiver q = qt::random_quiver(rng, n, rng() % n);
        auto mut = q.mutable_indices();
        if (mut.empty()) continue;
        size_t k = mut[rng() % mut.size()];
        IceQuiver m = q.mutated(k);
        CHECK(m.eps2() == qt::mutate_eps2(q.eps2(), k));
        CHECK(m.mutated(k) == q);
        CHECK(m.vertices() == q.vertices());
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                CHECK(m.eps2(i, j) == -m.eps2(j, i));
                if (!(q.frozen(i) && q.frozen(j))) CHECK(m.eps2(i, j) % 2 == 0);
                // frozen pairs away from k keep their entry
                if (q.frozen(i) && q.frozen(j) && q.eps2(i, k) == 0 && q.eps2(j, k) == 0)
                    CHECK(m.eps2(i, j) == q.eps2(i, j));
            }
    }
}

TEST_CASE("equality up to relabeling") {
    IceQuiver q = qt::load_quiver("four_vertex.json");
    std::unordered_map<std::string, std::string> id = {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"d", "d"}};
    CHECK(quiver_equal_upto(q, q, id));
    CHECK_FALSE(quiver_equal_upto(q, q.mutated("b"), id));

    IceQuiver r({{"1", false, ""}, {"2", false, ""}}, {{0, 2}, {-2, 0}});
    IceQuiver m = r;
    for (const char* k : {"1", "2", "1", "2", "1"}) m = m.mutated(k);
    CHECK(quiver_equal_upto(r, m, {{"1", "2"}, {"2", "1"}}));
    CHECK_FALSE(quiver_equal_upto(r, m, {{"1", "1"}, {"2", "2"}}));
}

namespace {

IceQuiver triangle_a1(const std::string& tag) {
    // one mutable-free triangle: two wiring ends and a red, all frozen
    std::vector<Vertex> vs = {{tag + ".l", true, ""}, {tag + ".r", true, ""}, {tag + ".x", true, ""}};
    return IceQuiver(vs, {{0, -1, 2}, {1, 0, -2}, {-2, 2, 0}});
}

}  // namespace

TEST_CASE("amalgamation") {
    IceQuiver t1 = triangle_a1("P"), t2 = triangle_a1("Q");
    IceQuiver d = amalgamate(t1, t2, {{"P.l", "Q.r"}, {"P.r", "Q.l"}}, true);
    CHECK(d.size() == 4);
    CHECK(d.mutable_indices().size() == 2);
    CHECK(d.frozen_indices().size() == 2);
    // the dashed halves cancel
    CHECK(d.eps2(d.index("P.l"), d.index("P.r")) == 0);
    CHECK(d.eps2(d.index("P.l"), d.index("Q.x")) == -2);

    IceQuiver u = amalgamate(t1, t2, {}, false);
    CHECK(u.size() == 6);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 3; j < 6; ++j) CHECK(u.eps2(i, j) == 0);

    // symmetric in the arguments up to the kept ids
    IceQuiver s = amalgamate(t2, t1, {{"Q.r", "P.l"}, {"Q.l", "P.r"}}, true);
    CHECK(quiver_equal_upto(d, s,
                            {{"P.l", "Q.r"}, {"P.r", "Q.l"}, {"P.x", "P.x"}, {"Q.x", "Q.x"}}));

    CHECK_THROWS_AS(amalgamate(t1, t2, {{"P.l", "Q.r"}, {"P.r", "Q.r"}}, true), DuplicateGlueTarget);
    IceQuiver four = qt::load_quiver("four_vertex.json");
    CHECK_THROWS_AS(amalgamate(four, t2, {{"a", "Q.r"}}, true), GlueNonFrozen);
    CHECK_THROWS_AS(amalgamate(t1, t1, {}, false), InvalidQuiver);
}

TEST_CASE("json round trip") {
    IceQuiver q = qt::load_quiver("four_vertex.json");
    CHECK(IceQuiver::from_json(q.to_json()) == q);
    CHECK_THROWS_AS(IceQuiver::from_json(nlohmann::json::parse(R"({"vertices":[]})")), Error);
}

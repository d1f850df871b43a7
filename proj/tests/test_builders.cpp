#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "qca/builders.hpp"
#include "qca/errors.hpp"
#include "a3_triangle_golden.hpp"
#include "support.hpp"

using namespace qca;

namespace {

size_t frozen_count(const IceQuiver& q) { return q.frozen_indices().size(); }

}  // namespace

TEST_CASE("A3 triangle matches the golden arrow set") {
    auto c = parse_type("A3");
    auto t = build_triangle(c, parse_word("123121", 3));
    const IceQuiver& q = t.quiver;
    CHECK(q.size() == 12);
    CHECK(frozen_count(q) == 9);
    CHECK(q.mutable_indices().size() == 3);

    IntMatrix expect = qt::a3_golden_eps2(q);
    for (size_t i = 0; i < 12; ++i)
        for (size_t j = 0; j < 12; ++j)
            CHECK_MESSAGE(q.eps2(i, j) == expect[i][j], q.vertex(i).id, " -> ", q.vertex(j).id);
    for (const auto& [label, id] : qt::kA3GoldenLabels) {
        bool interior = label.size() == 3 && label[0] >= 'a' && label[0] <= 'c';
        CHECK(q.frozen(q.index(id)) == !interior);
    }
}

TEST_CASE("triangle counts") {
    auto a1 = build_triangle(parse_type("A1"), {0});
    CHECK(a1.quiver.size() == 3);
    CHECK(frozen_count(a1.quiver) == 3);

    auto d4 = build_triangle(parse_type("D4"), parse_word("123412341234", 4));
    CHECK(d4.quiver.size() == 20);
    CHECK(frozen_count(d4.quiver) == 12);
    CHECK(d4.quiver.mutable_indices().size() == 8);
    // hub red has a dashed arrow to each leaf red
    const auto& q = d4.quiver;
    for (int leaf = 0; leaf < 3; ++leaf) CHECK(q.eps2(q.index(red_id("T1", 3)), q.index(red_id("T1", leaf))) == 1);

    for (const char* t : {"A4", "D5", "E6"}) {
        auto c = parse_type(t);
        auto tri = build_triangle(c, c.w0);
        CHECK(tri.quiver.size() == static_cast<size_t>(c.n + 2 * c.r));
        CHECK(frozen_count(tri.quiver) == 3 * static_cast<size_t>(c.r));
    }
    CHECK_THROWS_AS(build_triangle(parse_type("A2"), {0, 1}), NotLongest);
}

TEST_CASE("disk counts") {
    auto a1 = build_disk_seed(parse_type("A1"), {0});
    CHECK(a1.quiver.size() == 4);
    CHECK(a1.quiver.mutable_indices().size() == 2);
    auto m = a1.quiver.mutable_indices();
    CHECK(a1.quiver.eps2(m[0], m[1]) == 0);

    auto a2 = build_disk_seed(parse_type("A2"), {0, 1, 0});
    CHECK(a2.quiver.size() == 10);
    CHECK(a2.quiver.mutable_indices().size() == 6);

    auto a3 = build_disk_seed(parse_type("A3"), parse_word("123121", 3));
    CHECK(a3.quiver.size() == 18);
    CHECK(a3.quiver.mutable_indices().size() == 12);
    CHECK(frozen_count(a3.quiver) == 6);
    CHECK(a3.boundary_frozen[0].size() == 3);
    CHECK(a3.boundary_frozen[1].size() == 3);
    // the six glued wiring ends
    CHECK(a3.internal_vertices.size() == 6);
}

TEST_CASE("disk from two copies of the A3 triangle") {
    auto c = parse_type("A3");
    auto w = parse_word("123121", 3);
    auto t1 = build_triangle(c, w, "T1");
    auto t2 = build_triangle(c, w, "T2");
    std::vector<std::pair<std::string, std::string>> glue;
    for (int l = 0; l < 3; ++l) {
        int n = static_cast<int>(t1.occurrences[l].size());
        glue.emplace_back(wire_id("T1", l, 0), wire_id("T2", l, n));
        glue.emplace_back(wire_id("T1", l, n), wire_id("T2", l, 0));
    }
    IceQuiver d = amalgamate(t1.quiver, t2.quiver, glue, true);
    CHECK(d.mutable_indices().size() == 12);
    CHECK(frozen_count(d) == 6);
    CHECK(d == build_disk(c, w, w).quiver);
}

TEST_CASE("boundary frozen vertices survive mutation") {
    auto d = build_disk_seed(parse_type("A2"), {0, 1, 0});
    std::mt19937 rng(41);
    IceQuiver q = d.quiver;
    auto mut = q.mutable_indices();
    for (int s = 0; s < 50; ++s) q = q.mutated(mut[rng() % mut.size()]);
    for (const auto& side : d.boundary_frozen)
        for (const auto& id : side) CHECK(q.frozen(q.index(id)));
}

TEST_CASE("braid moves are mutations") {
    auto c = parse_type("A3");
    auto w = parse_word("123121", 3);
    auto moves = braid_moves(c, w);
    CHECK_FALSE(moves.empty());
    for (const auto& m : moves) CHECK_NOTHROW(validate_reduced_word(c, m.result));

    BraidChart chart(c, w, w);
    for (const auto& m : moves) {
        BraidChart ch = chart;
        CHECK_NOTHROW(ch.apply(1, m));
        CHECK(ch.disk().w1 == m.result);
        CHECK(ch.path().size() == (m.kind == 'b' ? 1u : 0u));
    }
}

TEST_CASE("kappa anchors point at the right vertices") {
    auto d = build_disk_seed(parse_type("A2"), {0, 1, 0});
    REQUIRE(d.e_anchor.size() == 2);
    REQUIRE(d.f_anchor.size() == 2);
    for (const auto& a : d.e_anchor) {
        IceQuiver q = d.quiver;
        for (const auto& id : a.path) q = q.mutated(id);
        CHECK(q.frozen(q.index(a.triple[0])));
        CHECK(q.frozen(q.index(a.triple[2])));
    }
}

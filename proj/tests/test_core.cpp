#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "arcorder/core.hpp"
#include "arcorder/generators.hpp"
#include "oracles.hpp"

using namespace arcorder;

namespace {

ArcModel figure1_model()
{
    return ArcModel(8, {"x1", "y2", "y3", "x4", "y5", "x6", "y7", "x8"},
                    {{1, 1, 8}, {1, 2, 8}, {8, 3, 8}, {2, 4, 8}, {4, 5, 8}, {5, 6, 8}, {6, 7, 8}, {7, 8, 8}});
}

ArcModel figure2_model()
{
    return ArcModel(10, {"y1", "x2", "x3", "y4", "y5", "x6", "y7", "y8", "x9", "y10"},
                    {{9, 1, 10}, {1, 2, 10}, {10, 3, 10}, {2, 4, 10}, {3, 5, 10},
                     {4, 6, 10}, {6, 7, 10}, {6, 8, 10}, {7, 9, 10}, {3, 10, 10}});
}

std::vector<Side> sides_by_prefix(const ArcModel& m)
{
    std::vector<Side> s;
    for (const auto& name : m.names()) s.push_back(name[0] == 'x' ? Side::X : Side::Y);
    return s;
}

std::set<std::pair<std::string, std::string>> named_edges(const Bigraph& g)
{
    std::set<std::pair<std::string, std::string>> out;
    for (auto [u, v] : g.edges()) {
        auto a = g.name(u), b = g.name(v);
        if (g.side(u) == Side::Y) std::swap(a, b);
        out.emplace(a, b);
    }
    return out;
}

}  // namespace

TEST_CASE("cyclic_interval walks clockwise strictly between its ends", "[core]")
{
    CHECK(cyclic_interval(3, 8, 8) == std::vector<Position>{4, 5, 6, 7});
    CHECK(cyclic_interval(8, 3, 8) == std::vector<Position>{1, 2});
    CHECK(cyclic_interval(5, 6, 8).empty());
    CHECK(cyclic_interval(4, 4, 8) == std::vector<Position>{5, 6, 7, 8, 1, 2, 3});
    CHECK_THROWS_AS(cyclic_interval(0, 3, 8), InputError);
    CHECK_THROWS_AS(cyclic_interval(1, 9, 8), InputError);
}

TEST_CASE("cyclic_interval partitions the clock together with its reverse", "[core][property]")
{
    for (int m = 2; m <= 9; ++m)
        for (int a = 1; a <= m; ++a)
            for (int b = 1; b <= m; ++b) {
                if (a == b) continue;
                std::multiset<int> all{a, b};
                for (int p : cyclic_interval(a, b, m)) all.insert(p);
                for (int p : cyclic_interval(b, a, m)) all.insert(p);
                std::multiset<int> expect;
                for (int p = 1; p <= m; ++p) expect.insert(p);
                REQUIRE(all == expect);
            }
}

TEST_CASE("arc_contains uses closed clockwise traversal", "[core]")
{
    CHECK(arc_contains(make_arc(8, 3, 8), 1));
    CHECK(arc_contains(make_arc(1, 1, 8), 1));
    CHECK_FALSE(arc_contains(make_arc(1, 1, 8), 2));
    CHECK_FALSE(arc_contains(make_arc(4, 5, 8), 8));
    for (int m = 1; m <= 8; ++m)
        for (int s = 1; s <= m; ++s)
            for (int e = 1; e <= m; ++e) {
                Arc a{s, e, m};
                REQUIRE(arc_contains(a, s));
                REQUIRE(arc_contains(a, e));
                for (int p = 1; p <= m; ++p) REQUIRE(arc_contains(a, p) == (oracle::arc_points(s, e, m).count(p) == 1));
            }
}

TEST_CASE("arcs_intersect on worked examples", "[core]")
{
    CHECK(arcs_intersect(make_arc(8, 3, 8), make_arc(1, 1, 8)));
    CHECK_FALSE(arcs_intersect(make_arc(4, 5, 8), make_arc(7, 8, 8)));
    CHECK(arcs_intersect(make_arc(1, 1, 8), make_arc(1, 1, 8)));
    CHECK_THROWS_AS(arcs_intersect(make_arc(1, 2, 8), make_arc(1, 2, 9)), InputError);
    CHECK_THROWS_AS(make_arc(0, 2, 8), InputError);
}

TEST_CASE("arcs_intersect is symmetric and matches point-set intersection", "[core][property]")
{
    for (int m = 1; m <= 6; ++m)
        for (int s1 = 1; s1 <= m; ++s1)
            for (int e1 = 1; e1 <= m; ++e1)
                for (int s2 = 1; s2 <= m; ++s2)
                    for (int e2 = 1; e2 <= m; ++e2) {
                        Arc a{s1, e1, m}, b{s2, e2, m};
                        REQUIRE(arcs_intersect(a, b) == arcs_intersect(b, a));
                        REQUIRE(arcs_intersect(a, b) == oracle::point_sets_meet(a, b));
                    }
}

TEST_CASE("intersection_bigraph of the 8-arc worked model", "[core][golden]")
{
    auto g = intersection_bigraph(figure1_model(), sides_by_prefix(figure1_model()));
    std::set<std::pair<std::string, std::string>> expect{{"x1", "y2"}, {"x1", "y3"}, {"x4", "y2"}, {"x4", "y3"}, {"x4", "y5"},
                                                         {"x6", "y5"}, {"x6", "y7"}, {"x8", "y7"}, {"x8", "y3"}};
    CHECK(named_edges(g) == expect);
    CHECK(named_edges(g) == named_edges(figure1_graph()));
}

TEST_CASE("intersection_bigraph of the 10-arc worked model", "[core][golden]")
{
    auto g = intersection_bigraph(figure2_model(), sides_by_prefix(figure2_model()));
    CHECK(g.edge_count() == 15);
    CHECK(named_edges(g) == named_edges(figure2_graph()));
}

TEST_CASE("intersection_bigraph ignores same-side overlap and disjoint points", "[core]")
{
    ArcModel points(4, {"a", "b", "c", "d"}, {{1, 1, 4}, {2, 2, 4}, {3, 3, 4}, {4, 4, 4}});
    CHECK(intersection_bigraph(points, {Side::X, Side::Y, Side::X, Side::Y}).edge_count() == 0);

    ArcModel overlapping(4, {"a", "b"}, {{1, 3, 4}, {2, 4, 4}});
    CHECK(intersection_bigraph(overlapping, {Side::X, Side::X}).edge_count() == 0);
    CHECK(intersection_bigraph(overlapping, {Side::X, Side::Y}).edge_count() == 1);
}

TEST_CASE("intersection_bigraph never produces same-side edges", "[core][property]")
{
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto rm = gen_random_arc_model(9, 12, seed, SideRule::seeded);
        auto g = rm.graph();
        for (auto [u, v] : g.edges()) REQUIRE(g.side(u) != g.side(v));
    }
}

TEST_CASE("verify_model", "[core]")
{
    auto g = figure1_graph();
    CHECK(verify_model(g, figure1_model()).pass);

    auto without = g.with_edge(g.index_of("x4"), g.index_of("y3"), false);
    auto r = verify_model(without, figure1_model());
    REQUIRE_FALSE(r.pass);
    REQUIRE(r.mismatches.size() == 1);
    CHECK(without.name(r.mismatches[0].x) == "x4");
    CHECK(without.name(r.mismatches[0].y) == "y3");
    CHECK(r.mismatches[0].kind == MismatchKind::spurious_intersection);

    auto with_extra = g.with_edge(g.index_of("x8"), g.index_of("y5"), true);
    auto r2 = verify_model(with_extra, figure1_model());
    REQUIRE(r2.mismatches.size() == 1);
    CHECK(r2.mismatches[0].kind == MismatchKind::missing_edge);

    auto two = Bigraph::from_names({"a"}, {"b"}, {});
    CHECK(verify_model(two, ArcModel(2, {"a", "b"}, {{1, 1, 2}, {2, 2, 2}})).pass);

    CHECK_THROWS_AS(verify_model(two, ArcModel(2, {"a"}, {{1, 1, 2}})), InputError);
    CHECK_THROWS_AS(verify_model(two, ArcModel(2, {"a", "c"}, {{1, 1, 2}, {2, 2, 2}})), InputError);
}

TEST_CASE("Bigraph rejects malformed input", "[core]")
{
    CHECK_THROWS_AS(Bigraph::from_names({"a", "a"}, {}, {}), InputError);
    CHECK_THROWS_AS(Bigraph::from_names({""}, {}, {}), InputError);
    CHECK_THROWS_AS(Bigraph::from_names({"a", "b"}, {"c"}, {{"a", "b"}}), InputError);
    CHECK_THROWS_AS(Bigraph::from_names({"a"}, {"c"}, {{"a", "c"}, {"a", "c"}}), InputError);
    CHECK_THROWS_AS(Bigraph::from_names({"a"}, {"c"}, {{"a", "z9"}}), InputError);
    CHECK_THROWS_AS(CircularOrdering(std::vector<VertexIndex>{0, 0}), InputError);
    CHECK_THROWS_AS(CircularOrdering::from_names(figure1_graph(), {"x1"}), InputError);
}

TEST_CASE("CircularOrdering positions invert the sequence", "[core]")
{
    auto g = figure1_graph();
    auto ord = CircularOrdering::from_names(g, figure1_ordering());
    for (Position p = 1; p <= static_cast<Position>(ord.size()); ++p) REQUIRE(ord.position(ord.vertex_at(p)) == p);
    auto r = ord.rotated(3);
    CHECK(r.vertex_at(1) == ord.vertex_at(4));
    CHECK(r.rotated(5) == ord);
}

TEST_CASE("fingerprint depends on labels and edges", "[core]")
{
    auto g = figure1_graph();
    CHECK(fingerprint(g) == fingerprint(figure1_graph()));
    CHECK(fingerprint(g) != fingerprint(g.with_edge(0, 4, false)));
    CHECK(fingerprint_hex(g).size() == 16);
}

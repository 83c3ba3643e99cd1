#include <catch2/catch_amalgamated.hpp>

#include "arcorder/construction.hpp"
#include "arcorder/generators.hpp"
#include "arcorder/recognizer.hpp"
#include "oracles.hpp"

using namespace arcorder;

namespace {

using NamedArc = std::tuple<std::string, int, int>;

std::vector<NamedArc> arcs_in_order(const ArcModel& model, const std::vector<std::string>& order)
{
    std::vector<NamedArc> out;
    for (const auto& name : order) {
        const auto& a = model.arc_of(name);
        out.emplace_back(name, a.start, a.end);
    }
    return out;
}

CircularOrdering random_ordering(std::size_t n, SeededRng& rng)
{
    std::vector<VertexIndex> seq(n);
    for (std::size_t i = 0; i < n; ++i) seq[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(seq[i - 1], seq[rng.below(i)]);
    return CircularOrdering(std::move(seq));
}

}  // namespace

TEST_CASE("canonical model of the 8-vertex worked ordering", "[construction][golden]")
{
    auto g = figure1_graph();
    auto ord = CircularOrdering::from_names(g, figure1_ordering());
    auto canonical = canonical_arc_model(g, ord);
    CHECK(canonical.model.clock_size() == 8);
    CHECK(arcs_in_order(canonical.model, figure1_ordering()) ==
          std::vector<NamedArc>{{"x1", 1, 1}, {"y2", 1, 2}, {"y3", 8, 3}, {"x4", 2, 4},
                                {"y5", 4, 5}, {"x6", 5, 6}, {"y7", 6, 7}, {"x8", 7, 8}});
    CHECK(verify_model(g, canonical.model).pass);
    CHECK(canonical.anchors[g.index_of("x1")].run_length == 0);
    CHECK(canonical.anchors[g.index_of("y3")].r == 8);
}

TEST_CASE("canonical model of the 10-vertex worked ordering", "[construction][golden]")
{
    auto g = figure2_graph();
    auto ord = CircularOrdering::from_names(g, figure2_ordering());
    auto canonical = canonical_arc_model(g, ord);
    CHECK(arcs_in_order(canonical.model, figure2_ordering()) ==
          std::vector<NamedArc>{{"y1", 9, 1}, {"x2", 1, 2}, {"x3", 10, 3}, {"y4", 2, 4}, {"y5", 3, 5},
                                {"x6", 4, 6}, {"y7", 6, 7}, {"y8", 6, 8}, {"x9", 7, 9}, {"y10", 3, 10}});
    CHECK(verify_model(g, canonical.model).pass);
    CHECK(canonical.anchors[g.index_of("y10")].run_length == 3);
}

TEST_CASE("edgeless graphs get point arcs", "[construction]")
{
    auto g = gen_random_bigraph(3, 2, 0.0, 3);
    SeededRng rng(1);
    auto ord = random_ordering(g.size(), rng);
    auto canonical = canonical_arc_model(g, ord);
    for (VertexIndex v = 0; v < g.size(); ++v) {
        CHECK(canonical.model.arc(v).start == ord.position(v));
        CHECK(canonical.model.arc(v).end == ord.position(v));
        CHECK(canonical.anchors[v].r == ord.position(v));
    }
}

TEST_CASE("anchor start equals the vertex position exactly when the run is empty", "[construction][property]")
{
    SeededRng rng(31);
    for (int t = 0; t < 300; ++t) {
        auto g = gen_random_bigraph(1 + static_cast<int>(rng.below(5)), 1 + static_cast<int>(rng.below(5)), 0.4, rng.next());
        auto ord = random_ordering(g.size(), rng);
        auto canonical = canonical_arc_model(g, ord);
        for (VertexIndex v = 0; v < g.size(); ++v)
            REQUIRE((canonical.anchors[v].r == ord.position(v)) == (canonical.anchors[v].run_length == 0));
    }
}

TEST_CASE("ordering_from_model on the worked models", "[construction][golden]")
{
    auto g1 = figure1_graph();
    ArcModel m1(8, {"x1", "y2", "y3", "x4", "y5", "x6", "y7", "x8"},
                {{1, 1, 8}, {1, 2, 8}, {8, 3, 8}, {2, 4, 8}, {4, 5, 8}, {5, 6, 8}, {6, 7, 8}, {7, 8, 8}});
    CHECK(ordering_from_model(m1, g1).names(g1) == figure1_ordering());

    auto g2 = figure2_graph();
    auto canonical = canonical_arc_model(g2, CircularOrdering::from_names(g2, figure2_ordering()));
    CHECK(ordering_from_model(canonical.model, g2).names(g2) == figure2_ordering());
}

TEST_CASE("ordering_from_model refuses shared end points", "[construction]")
{
    ArcModel model(6, {"u", "v"}, {{3, 5, 6}, {1, 5, 6}});
    try {
        ordering_from_model(model);
        FAIL("expected a duplicate end point error");
    } catch (const DuplicateEndpointError& e) {
        CHECK(e.endpoint == 5);
        CHECK(e.first == "u");
        CHECK(e.second == "v");
    }
}

TEST_CASE("realize on the worked examples", "[construction]")
{
    auto g1 = figure1_graph();
    auto r1 = realize(g1, CircularOrdering::from_names(g1, figure1_ordering()), Method::total);
    REQUIRE(std::holds_alternative<Certificate>(r1));
    const auto& c1 = std::get<Certificate>(r1);
    REQUIRE(c1.model);
    CHECK(c1.model->arc_of("y3").start == 8);
    CHECK(replay_certificate(g1, c1).pass);

    auto g2 = figure2_graph();
    auto r2 = realize(g2, CircularOrdering::from_names(g2, figure2_ordering()), Method::bicirc);
    REQUIRE(std::holds_alternative<Certificate>(r2));
    CHECK(std::get<Certificate>(r2).model->arc_of("y10").start == 3);

    auto r3 = realize(g2, CircularOrdering::from_names(g2, figure2_ordering()), Method::interval3);
    if (auto* c = std::get_if<Certificate>(&r3)) CHECK_FALSE(c->model);
}

TEST_CASE("realize with the side-sorted ordering follows the literal definition", "[construction]")
{
    auto g = figure1_graph();
    auto ord = CircularOrdering::from_names(g, {"x1", "x4", "x6", "x8", "y2", "y3", "y5", "y7"});
    const bool literal = oracle::total_circular_literal(g, ord);
    CHECK_FALSE(literal);  // frozen from the literal oracle
    auto r = realize(g, ord, Method::total);
    CHECK(std::holds_alternative<Certificate>(r) == literal);
    if (!literal) CHECK(std::holds_alternative<CheckerRejected>(r));
}

TEST_CASE("replay rejects a certificate for a different graph", "[construction]")
{
    auto g = figure1_graph();
    auto r = realize(g, CircularOrdering::from_names(g, figure1_ordering()), Method::total);
    auto cert = std::get<Certificate>(r);
    auto other = g.with_edge(g.index_of("x8"), g.index_of("y3"), false);
    CHECK_FALSE(replay_certificate(other, cert).pass);
    cert.graph_hash = fingerprint_hex(other);
    CHECK_FALSE(replay_certificate(other, cert).pass);
}

TEST_CASE("canonical model agrees with the matrix-run construction", "[construction][property]")
{
    SeededRng rng(77);
    for (int t = 0; t < 500; ++t) {
        auto g = gen_random_bigraph(1 + static_cast<int>(rng.below(5)), 1 + static_cast<int>(rng.below(5)), 0.5, rng.next());
        auto ord = random_ordering(g.size(), rng);
        REQUIRE(canonical_arc_model(g, ord).model.arcs() == oracle::canonical_from_matrix_runs(g, ord));
    }
}

TEST_CASE("end points identify positions, so the endpoint ordering recovers the input", "[construction][property]")
{
    SeededRng rng(8);
    for (int t = 0; t < 500; ++t) {
        auto g = gen_random_bigraph(static_cast<int>(rng.below(6)), 1 + static_cast<int>(rng.below(6)), 0.5, rng.next());
        auto ord = random_ordering(g.size(), rng);
        auto canonical = canonical_arc_model(g, ord);
        for (Position p = 1; p <= static_cast<Position>(g.size()); ++p)
            REQUIRE(canonical.model.arc(ord.vertex_at(p)).end == p);
        REQUIRE(ordering_from_model(canonical.model, g) == ord);
    }
}

TEST_CASE("opposite-side vertices ending inside a canonical arc are neighbours", "[construction][property]")
{
    SeededRng rng(19);
    for (int t = 0; t < 500; ++t) {
        auto g = gen_random_bigraph(1 + static_cast<int>(rng.below(5)), 1 + static_cast<int>(rng.below(5)), 0.5, rng.next());
        auto ord = random_ordering(g.size(), rng);
        auto model = canonical_arc_model(g, ord).model;
        for (VertexIndex v = 0; v < g.size(); ++v)
            for (VertexIndex u = 0; u < g.size(); ++u)
                if (g.side(u) != g.side(v) && arc_contains(model.arc(v), model.arc(u).end)) REQUIRE(g.adjacent(u, v));
    }
}

TEST_CASE("accepted orderings give realizing models (exhaustive n <= 5, random n <= 9)",
          "[construction][property][exhaustive]")
{
    auto require_sound = [](const Bigraph& g, const CircularOrdering& ord, Method m) {
        if (!check(g, ord, m).pass) return;
        auto verified = verify_model(g, canonical_arc_model(g, ord).model);
        REQUIRE(verified.pass);
    };
    for (const auto& g : exhaustive_corpus_up_to(5)) {
        for_each_ordering(g.size(), EnumerationMode::all_linear, [&](const std::vector<VertexIndex>& seq) {
            CircularOrdering ord(seq);
            for (auto m : {Method::total, Method::bicirc, Method::pattern}) require_sound(g, ord, m);
            return false;
        });
    }
    SeededRng rng(123);
    std::size_t accepted = 0;
    for (int t = 0; t < 3000; ++t) {
        const int nx = 1 + static_cast<int>(rng.below(5));
        const int ny = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(9 - nx)));
        auto g = gen_random_bigraph(nx, ny, 0.3 + 0.4 * static_cast<double>(rng.below(2)), rng.next());
        auto ord = random_ordering(g.size(), rng);
        for (auto m : {Method::total, Method::bicirc, Method::pattern}) {
            accepted += check(g, ord, m).pass ? 1 : 0;
            require_sound(g, ord, m);
        }
    }
    CHECK(accepted > 0);
}

TEST_CASE("endpoint orderings of random arc models pass every circular-arc checker", "[construction][property]")
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto rm = gen_random_arc_model(1 + static_cast<int>(seed % 14), 2 * (1 + static_cast<int>(seed % 14)), seed,
                                       seed % 2 ? SideRule::seeded : SideRule::alternate);
        auto g = rm.graph();
        auto ord = ordering_from_model(rm.model);
        for (auto m : {Method::total, Method::bicirc, Method::pattern}) REQUIRE(check(g, ord, m).pass);
    }
}

#include <doctest.h>

#include <numeric>
#include <sstream>

#include "aec/graph.hpp"
#include "aec/rng.hpp"
#include "helpers.hpp"

using namespace aec;
using namespace testutil;

namespace {

// triple-enumeration triangle oracle
bool has_triangle(const Graph& g) {
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c))
                    return true;
    return false;
}

}  // namespace

TEST_CASE("build_graph basics and errors") {
    Graph k5 = complete(5);
    CHECK(k5.vertex_count() == 5);
    CHECK(k5.edge_count() == 10);

    CHECK_THROWS_AS(Graph::build(2, {{0, 0}}), Error);
    CHECK_THROWS_AS(Graph::build(3, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(Graph::build(3, {{0, 3}}), Error);

    try {
        Graph::build(3, {{0, 1}, {1, 0}});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DuplicateEdge);
    }

    // edge order in the input is irrelevant to identity
    Graph a = Graph::build(4, {{0, 1}, {2, 3}, {1, 2}});
    Graph b = Graph::build(4, {{1, 2}, {0, 1}, {3, 2}});
    CHECK(a == b);
}

TEST_CASE("degree profile") {
    Graph k5 = complete(5);
    DegreeProfile p = k5.degree_profile();
    for (int v = 0; v < 5; ++v) CHECK(p.degree[v] == 4);
    CHECK(p.min_degree == 4);
    CHECK(p.max_degree == 4);

    Graph s = star(5);
    p = s.degree_profile();
    CHECK(p.degree[0] == 5);
    for (int v = 1; v <= 5; ++v) CHECK(p.degree[v] == 1);
    CHECK(p.min_degree == 1);
    CHECK(p.max_degree == 5);

    p = path(3).degree_profile();
    CHECK(p.degree == std::vector<int>{1, 2, 1});

    Graph edgeless = Graph::build(4, {});
    p = edgeless.degree_profile();
    CHECK(p.min_degree == 0);
    CHECK(p.max_degree == 0);
}

TEST_CASE("girth") {
    CHECK(cycle(5).girth() == 5);
    CHECK(complete(4).girth() == 3);
    CHECK_FALSE(path(6).girth().has_value());
    CHECK_FALSE(star(4).girth().has_value());
    CHECK(cycle(4).girth() == 4);

    // K3,3 has girth 4
    Graph k33 = Graph::build(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4},
                                 {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    CHECK(k33.girth() == 4);
}

TEST_CASE("girth 3 iff triangle, cross-checked by triple enumeration") {
    DetRng rng(1234);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 4 + rng.below(20);
        int m = rng.below(3 * n);
        Graph g = erdos_renyi(n, m, rng.next());
        bool tri = has_triangle(g);
        auto girth = g.girth();
        CHECK((girth && *girth == 3) == tri);
    }
}

TEST_CASE("handshake identity after build and mutation") {
    DetRng rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + rng.below(16);
        Graph g = erdos_renyi(n, rng.below(2 * n + 1), rng.next());
        auto sum_deg = [](const Graph& h) {
            auto p = h.degree_profile();
            return std::accumulate(p.degree.begin(), p.degree.end(), 0LL);
        };
        CHECK(sum_deg(g) == 2LL * g.edge_count());
        if (g.edge_count() > 0) {
            EdgeId e = g.edges()[rng.below(g.edge_count())];
            Graph without = g.without_edge(e.a, e.b);
            CHECK(sum_deg(without) == 2LL * without.edge_count());
            CHECK(without.with_edge(e.a, e.b) == g);  // round-trip
        }
    }
}

TEST_CASE("induced subgraphs") {
    Graph k5 = complete(5);
    auto sub = k5.induced_subgraph({1, 3, 4});
    CHECK(sub.graph == complete(3));
    CHECK(sub.vertex_map == std::vector<int>{1, 3, 4});

    // identity case
    auto full = k5.induced_subgraph({0, 1, 2, 3, 4});
    CHECK(full.graph == k5);
    CHECK(full.vertex_map == std::vector<int>{0, 1, 2, 3, 4});

    auto pair = cycle(5).induced_subgraph({2, 3});
    CHECK(pair.graph.edge_count() == 1);

    CHECK_THROWS_AS(k5.induced_subgraph({0, 7}), Error);

    DetRng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = erdos_renyi(10, rng.below(25), rng.next());
        std::vector<int> all(10);
        std::iota(all.begin(), all.end(), 0);
        auto copy = g.induced_subgraph(all);
        CHECK(copy.graph.edge_count() == g.edge_count());
        CHECK(copy.graph.degree_profile().degree == g.degree_profile().degree);
    }
}

TEST_CASE("edge-list text round trip and parse errors") {
    Graph g = complete(4);
    std::ostringstream os;
    write_edge_list(g, os);
    std::istringstream is(os.str());
    CHECK(read_edge_list(is) == g);

    std::istringstream commented("# a comment\n3 2\n0 1\n# another\n1 2\n");
    CHECK(read_edge_list(commented).edge_count() == 2);

    std::istringstream missing("3 5\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(missing), Error);

    std::istringstream junk("3 1\n0 x\n");
    CHECK_THROWS_AS(read_edge_list(junk), Error);
}

#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "satforge/graph.hpp"
#include "satforge/graph6.hpp"
#include "satforge/levels.hpp"
#include "satforge/search.hpp"

using namespace satforge;

TEST_CASE("graph basics") {
    Graph g = Graph::cycle(5);
    CHECK(g.order() == 5);
    CHECK(g.edge_count() == 5);
    CHECK(g.min_degree() == 2);
    CHECK(g.adjacent(0, 4));
    CHECK_FALSE(g.adjacent(0, 2));
    g.add_edge(0, 2);
    g.add_edge(2, 0);  // duplicate ignored
    CHECK(g.edge_count() == 6);
    g.remove_edge(0, 2);
    CHECK(g == Graph::cycle(5));
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(Graph(65), std::invalid_argument);

    CHECK(Graph::complete(6).edge_count() == 15);
    CHECK(Graph::star(5).degree(0) == 4);
    CHECK(Graph::path(4).edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(Graph::path(4).non_edges() == std::vector<Edge>{{0, 2}, {0, 3}, {1, 3}});
}

TEST_CASE("induced subgraphs, relabeling and edge counts between sets") {
    const Graph k4 = Graph::complete(4);
    const Graph tri = k4.induced(bit(0) | bit(2) | bit(3));
    CHECK(tri == Graph::complete(3));
    const Graph p = Graph::path(3);
    const std::vector<Vertex> perm{2, 0, 1};
    const Graph q = p.relabeled(perm);
    CHECK(q.adjacent(2, 0));
    CHECK(q.adjacent(0, 1));
    CHECK(k4.edges_within(bit(0) | bit(1) | bit(2)) == 3);
    CHECK(k4.edges_between(bit(0), bit(1) | bit(2)) == 2);
    CHECK(Graph::path(5).is_connected());
    CHECK_FALSE(Graph(3).is_connected());
}

TEST_CASE("graph6 matches reference encodings") {
    // Frozen from an independent encoder.
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(to_graph6(Graph::cycle(4)) == "Cl");
    CHECK(to_graph6(Graph::cycle(6)) == "EhEG");
    CHECK(to_graph6(Graph::complete(5)) == "D~{");
    CHECK(to_graph6(Graph::path(3)) == "Bg");
    CHECK(to_graph6(Graph(7)) == "F????");
    CHECK(to_graph6(Graph::path(64)) ==
          "~?@?hCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????"
          "G?????_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???"
          "????@????????_???????G???????@????????C????????G????????G????????C????????@?????????G?????????_??"
          "??????@?????????@??????????_?????????G?????????@");
    const std::string k63 = to_graph6(Graph::complete(63));
    CHECK(k63.size() == 330);
    CHECK(k63.rfind("~??~~~", 0) == 0);

    const Graph star = from_graph6("D?{");
    CHECK(star.edges() == std::vector<Edge>{{0, 4}, {1, 4}, {2, 4}, {3, 4}});
    CHECK(from_graph6(">>graph6<<Cl\r\n") == Graph::cycle(4));
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(from_graph6(""), Graph6Error);
    CHECK_THROWS_AS(from_graph6("C"), Graph6Error);     // missing body
    CHECK_THROWS_AS(from_graph6("Clx"), Graph6Error);   // too long
    CHECK_THROWS_AS(from_graph6("Bh"), Graph6Error);    // nonzero padding
    CHECK_THROWS_AS(from_graph6("C\x01"), Graph6Error); // byte below 63
    CHECK_THROWS_AS(from_graph6("~??~"), Graph6Error);  // truncated
}

TEST_CASE("graph6 round-trips every graph up to 7 vertices") {
    int total = 0;
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : all_graphs(n)) {
            CHECK(from_graph6(to_graph6(g)) == g);
            ++total;
        }
    }
    CHECK(total == 1 + 2 + 4 + 11 + 34 + 156 + 1044);
}

TEST_CASE("graph6 round-trips random labeled graphs up to 64 vertices") {
    std::mt19937 rng(7);
    for (int n : {2, 10, 33, 62, 63, 64}) {
        for (int trial = 0; trial < 5; ++trial) {
            const Graph g = oracle::random_graph(n, 0.3, rng);
            CHECK(from_graph6(to_graph6(g)) == g);
        }
    }
}

TEST_CASE("graph6 stream reading skips blank lines") {
    std::istringstream in("Cl\n\nD~{\n");
    const auto graphs = read_graph6_stream(in);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[1] == Graph::complete(5));
    CHECK_THROWS(read_graph6_file("/nonexistent/file.g6"));
}

TEST_CASE("level partition from BFS") {
    const Graph p = Graph::path(7);
    const LevelPartition lp = bfs_levels(p, 0, 6);
    CHECK(lp.level_set(1) == (bit(0) | bit(1)));
    CHECK(lp.level(2) == 2);
    CHECK(lp.level(6) == 6);
    CHECK(lp.depth() == 6);
    CHECK(lp.is_valid_for(p));
    CHECK(lp.level_set(9) == 0);
    CHECK(lp.count_in(p, 3, 2) == 1);

    try {
        bfs_levels(p, 0, 5);
        FAIL("expected overflow");
    } catch (const LevelError& e) {
        CHECK(e.kind() == LevelError::Kind::overflow);
        CHECK(e.vertex() == 6);
    }
    try {
        bfs_levels(Graph(3), 0, 5);
        FAIL("expected disconnected");
    } catch (const LevelError& e) {
        CHECK(e.kind() == LevelError::Kind::disconnected);
    }
}

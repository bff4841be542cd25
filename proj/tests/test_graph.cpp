#include <string>

#include "doctest.h"

#include "common.hpp"
#include "rectiplan/errors.hpp"
#include "rectiplan/graph.hpp"

using namespace rectiplan;

TEST_CASE("text round trip") {
    graph g = parse_graph("4 4\n0 1\n1 2\n2 3\n3 0\n");
    CHECK(g.n == 4);
    CHECK(g.m() == 4);
    CHECK(g.degree(0) == 2);
    graph h = parse_graph(to_text(g));
    CHECK(h.edges == g.edges);
}

TEST_CASE("json round trip") {
    graph g = testutil::theta({1, 2, 2});
    graph h = parse_graph(to_json(g));
    CHECK(h.n == g.n);
    CHECK(h.edges == g.edges);
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(parse_graph(""), parse_error);
    CHECK_THROWS_AS(parse_graph("2 1\n0 2\n"), parse_error);     // out of range
    CHECK_THROWS_AS(parse_graph("2 1\n0 0\n"), parse_error);     // self loop
    CHECK_THROWS_AS(parse_graph("2 2\n0 1\n"), parse_error);     // short
    CHECK_THROWS_AS(parse_graph("2 1\n0 1\n1 0\n"), parse_error);  // trailing
    CHECK_THROWS_AS(parse_graph("x y\n"), parse_error);
    CHECK_THROWS_AS(parse_graph("{\"n\": 2}"), parse_error);
    CHECK_THROWS_AS(parse_graph("{\"n\": 2, \"edges\": [[0]]}"), parse_error);
}

TEST_CASE("parser accepts blank lines and json whitespace") {
    graph g = parse_graph("\n3 3\n\n0 1\n1 2\n2 0\n\n");
    CHECK(g.n == 3);
    graph h = parse_graph("  {\"n\": 2, \"edges\": [[0, 1], [0, 1]]}");
    CHECK(h.m() == 2);
}

TEST_CASE("classify simple cycles") {
    graph_class c = classify(testutil::cycle(5));
    CHECK(c.is_degree4);
    CHECK(c.is_biconnected);
    CHECK(c.is_simple_cycle);
    CHECK(c.is_sp);
    CHECK(c.is_independent_parallel);

    // digon counts as a cycle too
    graph d = make_graph(2, {{0, 1}, {0, 1}});
    CHECK(classify(d).is_simple_cycle);
}

TEST_CASE("classify rejects what it should") {
    graph path = make_graph(3, {{0, 1}, {1, 2}});
    CHECK_FALSE(classify(path).is_biconnected);

    graph_class k = classify(testutil::k4());
    CHECK(k.is_biconnected);
    CHECK_FALSE(k.is_sp);
    CHECK_FALSE(k.is_independent_parallel);

    // two diamonds joined only at vertex 1: cut vertex
    graph dd = parse_graph(
        "7 8\n0 2\n2 1\n0 3\n3 1\n1 4\n4 6\n1 5\n5 6\n");
    CHECK_FALSE(classify(dd).is_biconnected);
}

TEST_CASE("classify independent parallel") {
    graph th = testutil::theta({2, 2, 2});
    graph_class c = classify(th);
    CHECK(c.is_biconnected);
    CHECK(c.is_sp);
    CHECK(c.is_independent_parallel);
    CHECK_FALSE(c.is_simple_cycle);

    // two diamonds in series closed by a chain: series-parallel, but
    // vertex 1 is a pole of both parallel nodes
    graph two = parse_graph(
        "8 10\n"
        "0 3\n3 1\n0 4\n4 1\n"
        "1 5\n5 2\n1 6\n6 2\n"
        "2 7\n7 0\n");
    graph_class c2 = classify(two);
    CHECK(c2.is_biconnected);
    CHECK(c2.is_sp);
    CHECK_FALSE(c2.is_independent_parallel);
}

TEST_CASE("degree flag") {
    graph g = make_graph(3, {{0, 1}, {0, 1}, {0, 1}, {0, 2}, {0, 2}, {1, 2}});
    CHECK_FALSE(classify(g).is_degree4);
}

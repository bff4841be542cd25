#include "rectiplan/oracle.hpp"

#include <tuple>
#include <vector>

#include "common.hpp"
#include "doctest.h"
#include "rectiplan/errors.hpp"
#include "rectiplan/graph.hpp"
#include "rectiplan/spirality.hpp"

using namespace rectiplan;

TEST_CASE("oracle: cycles") {
    CHECK_FALSE(oracle_test(testutil::cycle(3)).feasible);
    CHECK(oracle_test(testutil::cycle(4)).feasible);
    CHECK(oracle_test(testutil::cycle(5)).feasible);
    CHECK(oracle_test(testutil::cycle(8)).feasible);
    CHECK_FALSE(oracle_test(testutil::cycle(2)).feasible);
    CHECK(oracle_test(testutil::cycle(4)).embeddings_tried == 1);
}

TEST_CASE("oracle: small multigraphs") {
    auto triple = testutil::theta({1, 1, 1});
    auto r = oracle_test(triple);
    CHECK_FALSE(r.feasible);
    CHECK(r.embeddings_tried == 2);
}

TEST_CASE("oracle: theta verdicts") {
    CHECK_FALSE(oracle_test(testutil::theta({2, 2, 2})).feasible);
    CHECK_FALSE(oracle_test(testutil::theta({1, 2, 2})).feasible);
    CHECK(oracle_test(testutil::theta({2, 2, 4})).feasible);
    CHECK(oracle_test(testutil::theta({2, 3, 3})).feasible);
    CHECK(oracle_test(testutil::theta({4, 4, 4})).feasible);
}

TEST_CASE("oracle: input guards") {
    CHECK_THROWS_AS(oracle_test(testutil::cycle(20), 14), reject_error);
    CHECK_THROWS_AS(oracle_test(testutil::path(3)), reject_error);
    auto star5 = make_graph(
        6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}});
    CHECK_THROWS_AS(oracle_test(star5), reject_error);
    CHECK_THROWS_AS(oracle_test(testutil::k4()), reject_error);
}

TEST_CASE("oracle: chain component sets") {
    CHECK(oracle_spirality_set(testutil::path(1), 0, 1) == make_set(0, 0, 1));
    CHECK(oracle_spirality_set(testutil::path(2), 0, 2) == make_set(0, 1, 1));
    CHECK(oracle_spirality_set(testutil::path(3), 0, 3) == make_set(0, 2, 1));
    CHECK(oracle_spirality_set(testutil::path(5), 0, 5) == make_set(0, 4, 1));
}

TEST_CASE("oracle: digon component is a dead end") {
    auto digon = make_graph(2, {{0, 1}, {0, 1}});
    CHECK(oracle_spirality_set(digon, 0, 1).empty());
}

TEST_CASE("oracle: parallel-chain component sets") {
    CHECK(oracle_spirality_set(testutil::parallel_chains({2, 2}), 0, 1) ==
          make_set(0, 1, 1));
    CHECK(oracle_spirality_set(testutil::parallel_chains({2, 4}), 0, 1) ==
          make_set(0, 3, 1));
    CHECK(oracle_spirality_set(testutil::parallel_chains({3, 3}), 0, 1) ==
          make_set(0, 2, 1));
    CHECK(oracle_spirality_set(testutil::parallel_chains({1, 3}), 0, 1) ==
          make_set(0, 2, 1));
    // an edge beside a 2-chain closes a triangle; no face can spend 4
    // right turns on 3 corners
    CHECK(oracle_spirality_set(testutil::parallel_chains({1, 2}), 0, 1)
              .empty());
    CHECK(oracle_spirality_set(testutil::parallel_chains({1, 1}), 0, 1)
              .empty());
    CHECK(oracle_spirality_set(testutil::parallel_chains({2, 2, 2}), 0, 1)
              .empty());
}

TEST_CASE("oracle: series component set") {
    // pole - junction - two parallel 2-chains - junction - pole
    auto c = make_graph(
        6, {{0, 2}, {2, 3}, {3, 5}, {2, 4}, {4, 5}, {5, 1}});
    CHECK(oracle_spirality_set(c, 0, 1) == make_set(0, 1, 1));
}

TEST_CASE("oracle: agrees with parallel composition on chain pairs") {
    for (int a = 1; a <= 4; ++a) {
        for (int b = a; b <= 4; ++b) {
            auto measured =
                oracle_spirality_set(testutil::parallel_chains({a, b}), 0, 1);
            auto composed = p2_set(qstar_set(a), qstar_set(b));
            CAPTURE(a);
            CAPTURE(b);
            CHECK(measured == composed);
        }
    }
}

TEST_CASE("oracle: agrees with parallel composition on chain triples") {
    for (int a = 1; a <= 3; ++a) {
        for (int b = a; b <= 3; ++b) {
            for (int c = b; c <= 3; ++c) {
                auto measured = oracle_spirality_set(
                    testutil::parallel_chains({a, b, c}), 0, 1);
                auto composed =
                    p3_set(qstar_set(a), qstar_set(b), qstar_set(c));
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(c);
                CHECK(measured == composed);
            }
        }
    }
}

TEST_CASE("oracle: agrees with series composition") {
    // chain(a) - parallel 2-chains (b, c) - chain(d), poles at the ends
    auto series_graph = [](int a, int b, int c, int d) {
        std::vector<std::pair<int, int>> es;
        int n = 0;
        int at = n++;
        auto chain = [&](int from, int len, int to) {
            int prev = from;
            for (int j = 1; j < len; ++j) {
                es.push_back({prev, n});
                prev = n++;
            }
            es.push_back({prev, to});
        };
        int x = n++;
        chain(at, a, x);
        int y = n++;
        chain(x, b, y);
        chain(x, c, y);
        int v = n++;
        chain(y, d, v);
        return std::make_tuple(rectiplan::make_graph(n, es), at, v);
    };
    for (int a = 1; a <= 2; ++a) {
        for (int d = 1; d <= 2; ++d) {
            for (int b = 1; b <= 3; ++b) {
                for (int c = b; c <= 3; ++c) {
                    auto [g, u, v] = series_graph(a, b, c, d);
                    auto measured = oracle_spirality_set(g, u, v);
                    auto composed = s_node_set(s_summary(
                        {qstar_set(a), p2_set(qstar_set(b), qstar_set(c)),
                         qstar_set(d)}));
                    CAPTURE(a);
                    CAPTURE(b);
                    CAPTURE(c);
                    CAPTURE(d);
                    CHECK(measured == composed);
                }
            }
        }
    }
}

TEST_CASE("oracle: component guards") {
    CHECK_THROWS_AS(oracle_spirality_set(testutil::path(20), 0, 20, 14),
                    reject_error);
    // poles may carry at most three component edges
    auto c = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}});
    CHECK_THROWS_AS(oracle_spirality_set(c, 0, 1), reject_error);
}

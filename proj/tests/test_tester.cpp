#include "rectiplan/tester.hpp"

#include <vector>

#include "common.hpp"
#include "doctest.h"
#include "rectiplan/errors.hpp"
#include "rectiplan/graph.hpp"
#include "rectiplan/oracle.hpp"
#include "rectiplan/spirality.hpp"
#include "rectiplan/spq_tree.hpp"

using namespace rectiplan;

TEST_CASE("tester: plain cycles") {
    auto r3 = test_rectilinear(testutil::cycle(3));
    CHECK_FALSE(r3.rectilinear_planar);
    CHECK_FALSE(r3.witness_root.has_value());
    CHECK_FALSE(r3.reason.empty());

    auto r4 = test_rectilinear(testutil::cycle(4));
    CHECK(r4.rectilinear_planar);
    CHECK(r4.witness_root == -1);
    CHECK(r4.roots_tried == 0);

    CHECK(test_rectilinear(testutil::cycle(12)).rectilinear_planar);
    CHECK_FALSE(test_rectilinear(make_graph(2, {{0, 1}, {0, 1}}))
                    .rectilinear_planar);
}

TEST_CASE("tester: rejections") {
    CHECK_THROWS_AS(test_rectilinear(testutil::k4()), reject_error);
    CHECK_THROWS_AS(test_rectilinear(testutil::path(4)), reject_error);

    auto star5 = make_graph(
        6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}});
    CHECK_THROWS_WITH_AS(test_rectilinear(star5),
                         doctest::Contains("degree-exceeded"), reject_error);

    // two diamonds sharing pole 1 with a return chain: series-parallel
    // but the parallel poles collide
    auto dd = parse_graph(
        "8 10\n0 3\n3 1\n0 4\n4 1\n1 5\n5 2\n1 6\n6 2\n2 7\n7 0\n");
    CHECK_THROWS_WITH_AS(test_rectilinear(dd),
                         doctest::Contains("not-independent-parallel"),
                         reject_error);
}

TEST_CASE("tester: theta fixtures") {
    auto r1 = test_rectilinear(testutil::theta({1, 1, 1}));
    CHECK_FALSE(r1.rectilinear_planar);
    CHECK(r1.roots_tried == 3);
    CHECK(r1.reason == "no feasible root");

    CHECK_FALSE(test_rectilinear(testutil::theta({2, 2, 2})).rectilinear_planar);
    CHECK_FALSE(test_rectilinear(testutil::theta({1, 2, 2})).rectilinear_planar);
    CHECK(test_rectilinear(testutil::theta({2, 3, 3})).rectilinear_planar);
    CHECK(test_rectilinear(testutil::theta({4, 4, 4})).rectilinear_planar);

    auto r = test_rectilinear(testutil::theta({2, 2, 4}));
    CHECK(r.rectilinear_planar);
    CHECK(r.witness_root == 0);
    CHECK(r.roots_tried == 1);
    CHECK(r.reason.empty());
}

TEST_CASE("tester: per-root sets and the memo bound") {
    test_options opt;
    opt.all_roots = true;
    auto r = test_rectilinear(testutil::theta({2, 2, 4}), opt);
    CHECK(r.rectilinear_planar);
    CHECK(r.witness_root == 0);
    CHECK(r.roots_tried == 3);
    REQUIRE(r.per_root.size() == 3);
    CHECK(r.per_root[0].second == make_set(0, 3, 1));
    CHECK(r.per_root[1].second == make_set(0, 3, 1));
    CHECK(r.per_root[2].second == make_set(0, 1, 1));
    CHECK(r.tree_edges == 3);
    CHECK(r.sets_computed == 2 * r.tree_edges);
}

TEST_CASE("tester: nested parallel composite") {
    // outer parallel of {edge, 2-chain, series(chain, inner diamond,
    // 2-chain)}: the edge beside the 2-chain pins a 3-corner face
    auto g = parse_graph(
        "8 10\n0 1\n0 2\n2 1\n0 3\n3 4\n4 5\n3 6\n6 5\n5 7\n7 1\n");
    test_options opt;
    opt.all_roots = true;
    auto r = test_rectilinear(g, opt);
    CHECK_FALSE(r.rectilinear_planar);
    CHECK(r.roots_tried == 6);
    CHECK(r.sets_computed <= 2 * r.tree_edges);
    // component facing the bare edge: parallel of the other two limbs
    CHECK(r.per_root[0].second == make_set(0, 2, 1));
}

TEST_CASE("tester: diamonds in series") {
    // diamond - edge - diamond - return chain, in short and long form
    auto short_ret = make_graph(
        9, {{0, 4}, {4, 1}, {0, 5}, {5, 1}, {1, 2}, {2, 6}, {6, 3},
            {2, 7}, {7, 3}, {3, 8}, {8, 0}});
    CHECK_FALSE(test_rectilinear(short_ret).rectilinear_planar);

    auto long_ret = make_graph(
        13, {{0, 4}, {4, 1}, {0, 5}, {5, 1}, {1, 2}, {2, 6}, {6, 3},
             {2, 7}, {7, 3}, {3, 8}, {8, 9}, {9, 10}, {10, 11}, {11, 12},
             {12, 0}});
    auto r = test_rectilinear(long_ret);
    CHECK(r.rectilinear_planar);
    CHECK(r.witness_root.has_value());
}

TEST_CASE("tester: memoized sets match fresh evaluation") {
    std::vector<graph> gs;
    gs.push_back(testutil::theta({2, 2, 4}));
    gs.push_back(testutil::theta({3, 3, 3}));
    gs.push_back(parse_graph(
        "8 10\n0 1\n0 2\n2 1\n0 3\n3 4\n4 5\n3 6\n6 5\n5 7\n7 1\n"));
    gs.push_back(make_graph(
        13, {{0, 4}, {4, 1}, {0, 5}, {5, 1}, {1, 2}, {2, 6}, {6, 3},
             {2, 7}, {7, 3}, {3, 8}, {8, 9}, {9, 10}, {10, 11}, {11, 12},
             {12, 0}}));
    for (const auto& g : gs) {
        test_options opt;
        opt.all_roots = true;
        auto memo = test_rectilinear(g, opt);
        spq_tree tree = build_spq_tree(g);
        REQUIRE(memo.per_root.size() == tree.qstar_nodes.size());
        for (size_t i = 0; i < tree.qstar_nodes.size(); ++i) {
            int rho = tree.qstar_nodes[i];
            spirality_table fresh(tree);
            const auto& s =
                fresh.toward(tree.nodes[rho].neighbors.front(), rho);
            CHECK(memo.per_root[i].first == rho);
            CHECK(memo.per_root[i].second == s);
        }
    }
}

TEST_CASE("tester: verdict agrees with the exhaustive decider") {
    std::vector<graph> gs;
    for (int a = 1; a <= 3; ++a)
        for (int b = a; b <= 3; ++b)
            for (int c = b; c <= 4; ++c) gs.push_back(testutil::theta({a, b, c}));
    gs.push_back(testutil::cycle(3));
    gs.push_back(testutil::cycle(4));
    gs.push_back(testutil::cycle(7));
    gs.push_back(parse_graph(
        "8 10\n0 1\n0 2\n2 1\n0 3\n3 4\n4 5\n3 6\n6 5\n5 7\n7 1\n"));
    for (const auto& g : gs) {
        CAPTURE(to_text(g));
        CHECK(test_rectilinear(g).rectilinear_planar ==
              oracle_test(g).feasible);
    }
}

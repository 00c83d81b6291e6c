#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include "doctest.h"
#include "momentgap/graph.hpp"
#include "test_util.hpp"

using namespace momentgap;

TEST_CASE("generators produce the expected shapes") {
  Graph s = star_graph(5);
  CHECK(s.n == 5);
  CHECK(s.edgeCount() == 4);
  CHECK(s.degree(4) == 4);
  CHECK(s.isTree());
  CHECK_FALSE(s.isPath());

  Graph p = path_graph(8);
  CHECK(p.n == 8);
  CHECK(p.edgeCount() == 7);
  CHECK(p.isPath());
  CHECK(p.isTree());

  Graph c = complete_graph(4);
  CHECK(c.edgeCount() == 6);
  CHECK(c.isComplete());
  CHECK_FALSE(c.isTree());

  Graph g = grid_graph(3, 3);
  CHECK(g.n == 9);
  CHECK(g.edgeCount() == 12);
  CHECK(g.minDegree() == 2);
  CHECK(g.maxDegree() == 4);

  Graph y = y_graph(5, 5, 5);
  CHECK(y.n == 16);
  CHECK(y.edgeCount() == 15);
  CHECK(y.degree(0) == 3);
  CHECK(y.isTree());

  // star(3) and path(3) are the same graph up to labels.
  CHECK(star_graph(3).isPath());
}

TEST_CASE("parse_graph_spec handles the generator grammar") {
  CHECK(parse_graph_spec("star:5").edgeCount() == 4);
  CHECK(parse_graph_spec("path:8").isPath());
  CHECK(parse_graph_spec("complete:4").isComplete());
  CHECK(parse_graph_spec("grid:3x3").n == 9);
  CHECK(parse_graph_spec("y:5,5,5").n == 16);
  CHECK_THROWS_AS(parse_graph_spec("star:0"), ValidationError);
  CHECK_THROWS_AS(parse_graph_spec("blob:3"), ValidationError);
  CHECK_THROWS_AS(parse_graph_spec("grid:3"), ValidationError);
}

TEST_CASE("edge-list files round trip") {
  const char* path = "test_edges.txt";
  {
    std::ofstream out(path);
    out << "# triangle plus a tail\n0 1\n1 2\n0 2\n2 3\n";
  }
  Graph g = read_edge_list(path);
  CHECK(g.n == 4);
  CHECK(g.edgeCount() == 4);
  CHECK(g.hasEdge(0, 2));
  Graph g2 = parse_graph_spec(std::string("file:") + path);
  CHECK(g2.edgeCount() == g.edgeCount());
  std::remove(path);

  {
    std::ofstream out("test_bad.txt");
    out << "0 0\n";
  }
  CHECK_THROWS_AS(read_edge_list("test_bad.txt"), ValidationError);
  std::remove("test_bad.txt");
  CHECK_THROWS_AS(read_edge_list("no_such_file.txt"), ValidationError);
}

TEST_CASE("validate rejects malformed graphs") {
  Graph dup;
  dup.n = 3;
  dup.edges = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(dup.validate(), ValidationError);

  Graph loop;
  loop.n = 2;
  loop.edges = {{1, 1}};
  CHECK_THROWS_AS(loop.validate(), ValidationError);

  Graph disc;
  disc.n = 4;
  disc.edges = {{0, 1}, {2, 3}};
  CHECK_FALSE(disc.isConnected());
}

TEST_CASE("center_vertex picks the generator's center") {
  CHECK(center_vertex("star:6", star_graph(6)) == 5);
  CHECK(center_vertex("y:5,5,5", y_graph(5, 5, 5)) == 0);
}

TEST_CASE("spanning_tree explores ascending and returns a tree") {
  Graph c = complete_graph(4);
  RootedTree t = spanning_tree(c, 0);
  CHECK(t.root == 0);
  CHECK(t.parent[0] == 0);
  CHECK(t.graph.isTree());
  CHECK(t.children[0] == std::vector<int>{1, 2, 3});
  CHECK(tree_height(t) == 1);

  RootedTree pt = spanning_tree(path_graph(5), 0);
  CHECK(tree_height(pt) == 4);
  CHECK(pt.graph.isPath());
}

TEST_CASE("depth of a path is 1 and of y(5,5,5) from the junction is 3") {
  RootedTree pt = spanning_tree(path_graph(8), 0);
  DepthAssignment da = tree_depth(pt, DepthMode::Exact);
  CHECK(da.depth == 1);

  Graph y = y_graph(5, 5, 5);
  RootedTree yt = spanning_tree(y, 0);
  DepthAssignment yd = tree_depth(yt, DepthMode::Exact);
  CHECK(yd.depth == 3);
}

TEST_CASE("replay_depth reproduces both modes") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + static_cast<int>(rng() % 12);
    Graph tree = testutil::random_tree(n, rng);
    RootedTree t = spanning_tree(tree, 0);
    for (DepthMode mode : {DepthMode::Exact, DepthMode::Heuristic}) {
      DepthAssignment da = tree_depth(t, mode, 10000000);
      DepthAssignment rep = replay_depth(t, da.trace);
      CHECK(rep.depth == da.depth);
      CHECK(rep.labels == da.labels);
    }
  }
}

TEST_CASE("exact depth never exceeds the heuristic or the log bound") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 15);
    Graph tree = testutil::random_tree(n, rng);
    RootedTree t = spanning_tree(tree, static_cast<int>(rng() % n));
    DepthAssignment exact = tree_depth(t, DepthMode::Exact, 10000000);
    DepthAssignment heur = tree_depth(t, DepthMode::Heuristic);
    CHECK(exact.depth <= heur.depth);
    CHECK(static_cast<double>(exact.depth) <= depth_upper_bound(n) + 1e-12);
    CHECK(exact.depth >= (n > 1 ? 1 : 0));
  }
}

TEST_CASE("compress height equals depth and flattening restores a path") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 15);
    Graph tree = testutil::random_tree(n, rng);
    RootedTree t = spanning_tree(tree, static_cast<int>(rng() % n));
    DepthAssignment da = tree_depth(t, DepthMode::Exact, 10000000);
    CompressedTree ct = compress(t, da);
    CHECK(ct.height == da.depth);
    CHECK(ct.graph.n == n);
    CHECK(ct.graph.isTree());

    // After `height` flatten calls the tree is a path; the tree may reach
    // path shape earlier, and calls from then on report no change and do not
    // advance the level.
    CompressedTree cur = ct;
    int firstPath = cur.graph.isPath() ? 0 : -1;
    int applied = 0;
    for (int step = 1; step <= ct.height; ++step) {
      FlattenStepResult r = flatten_step(cur);
      if (firstPath >= 0) CHECK_FALSE(r.changed);
      if (r.changed) ++applied;
      cur = r.tree;
      CHECK(cur.level == applied);
      CHECK(cur.records.size() == static_cast<size_t>(applied) + 1);
      if (firstPath < 0 && cur.graph.isPath()) firstPath = step;
    }
    CHECK(cur.graph.isPath());
    CHECK(firstPath >= 0);
    CHECK(firstPath <= ct.height);
  }
}

TEST_CASE("depth_upper_bound matches its formula") {
  CHECK(depth_upper_bound(1) == doctest::Approx(2.0 / std::log(2.0) *
                                                    std::log(2.0) -
                                                1.0));
  CHECK(depth_upper_bound(7) ==
        doctest::Approx(2.0 / std::log(2.0) * std::log(8.0) - 1.0));
}

TEST_CASE("sortedEdges normalizes orientation and order") {
  Graph g;
  g.n = 4;
  g.edges = {{3, 1}, {0, 2}, {1, 0}};
  auto s = g.sortedEdges();
  CHECK(s == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}});
}

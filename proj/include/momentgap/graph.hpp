// graph.hpp -- undirected graphs, spanning trees, the tree depth measure,
// and the path-compression / flattening machinery on rooted trees.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "momentgap/common.hpp"

namespace momentgap {

struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  int edgeCount() const { return static_cast<int>(edges.size()); }
  // Sorted neighbor lists, one per vertex.
  std::vector<std::vector<int>> adjacency() const;
  int degree(int v) const;
  int minDegree() const;
  int maxDegree() const;
  bool hasEdge(int u, int v) const;
  bool isConnected() const;
  bool isTree() const;
  // True when every vertex has degree <= 2 and the graph is a connected path.
  bool isPath() const;
  bool isComplete() const;
  // Edges normalized to (min,max) and sorted lexicographically.
  std::vector<std::pair<int, int>> sortedEdges() const;
  // Checks vertex ids in range, no loops, no duplicate edges.
  void validate() const;
};

Graph star_graph(int n);      // center is vertex n-1
Graph path_graph(int n);      // edges (i, i+1)
Graph complete_graph(int n);
Graph grid_graph(int rows, int cols);
// Three arms of the given lengths joined at vertex 0.
Graph y_graph(int armA, int armB, int armC);
// ASCII edge list, one "u v" pair per line, '#' starts a comment.
Graph read_edge_list(const std::string& path);
// Generator grammar: star:5, path:8, complete:4, grid:3x3, y:5,5,5, file:PATH.
Graph parse_graph_spec(const std::string& spec);
// Vertex selected by "--root center" for a given generator spec.
int center_vertex(const std::string& spec, const Graph& g);

struct RootedTree {
  Graph graph;
  int root = 0;
  std::vector<int> parent;                  // parent[root] == root
  std::vector<std::vector<int>> children;   // ascending vertex ids
};

// BFS spanning tree; neighbors are explored in ascending vertex id.
RootedTree spanning_tree(const Graph& g, int root);

// Height of the rooted tree (edges on the longest root-to-leaf path).
int tree_height(const RootedTree& t);

enum class DepthMode { Exact, Heuristic };

// One recursion event: from subtree root `subtreeRoot` the walk descends to
// `leaf`; the root-to-leaf path and the root's children get the next label.
struct DepthChoice {
  int subtreeRoot = 0;
  int leaf = 0;
};

struct DepthAssignment {
  std::vector<int> labels;          // per-vertex label assigned by the recursion
  int depth = 0;                    // max label over vertices
  DepthMode mode = DepthMode::Exact;
  std::vector<DepthChoice> trace;   // events in processing order
};

// Depth of a rooted tree. Exact mode minimizes the maximum label over all
// root-to-leaf path choices (memoized exhaustive search, throws GuardError
// when more than `budget` distinct subproblems are expanded, recommending
// heuristic mode); heuristic mode always follows a longest root-to-leaf path,
// breaking ties toward the smallest leaf id.
DepthAssignment tree_depth(const RootedTree& t, DepthMode mode,
                           std::uint64_t budget = 1000000);

// Re-runs the labeling with the recorded path choices; validates the trace.
DepthAssignment replay_depth(const RootedTree& t,
                             const std::vector<DepthChoice>& trace);

// (2/ln 2) ln(n+1) - 1, an upper bound on the exact depth of any n-vertex tree.
double depth_upper_bound(int n);

// An ordered path of vertices rewired into (or out of) a star about `head`.
struct PathRecord {
  int head = 0;
  std::vector<int> tail;   // remaining path vertices, in path order
};

struct CompressedTree {
  Graph graph;
  int root = 0;
  int level = 0;            // flatten steps applied so far
  int height = 0;           // height of the level-0 compressed tree
  std::vector<int> layer;   // current lowest layer as an ordered path
  // records[0]: paths compressed into stars when building the level-0 tree;
  // records[i>=1]: stars expanded back into chains by flatten step i.
  std::vector<std::vector<PathRecord>> records;
};

// Builds the level-0 compressed tree: every path registered by the depth
// recursion is rewired as a star about its first vertex. The height of the
// result equals the depth of the assignment.
CompressedTree compress(const RootedTree& t, const DepthAssignment& da);

struct FlattenStepResult {
  CompressedTree tree;
  bool changed = false;   // false when the layer had no vertex of degree >= 3
};

// One flattening step: every degree >= 3 vertex v on the current lowest layer
// has its off-layer children spliced into the layer as a chain between v and
// v's predecessor on the layer. Children are chained in ascending id order.
// After `height` steps the tree is the path graph on the same vertex set.
FlattenStepResult flatten_step(const CompressedTree& ct);

}  // namespace momentgap

#include "momentgap/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>

namespace momentgap {

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  return adj;
}

int Graph::degree(int v) const {
  int d = 0;
  for (auto [a, b] : edges) d += (a == v) + (b == v);
  return d;
}

int Graph::minDegree() const {
  if (n == 0) return 0;
  std::vector<int> deg(n, 0);
  for (auto [a, b] : edges) ++deg[a], ++deg[b];
  return *std::min_element(deg.begin(), deg.end());
}

int Graph::maxDegree() const {
  if (n == 0) return 0;
  std::vector<int> deg(n, 0);
  for (auto [a, b] : edges) ++deg[a], ++deg[b];
  return *std::max_element(deg.begin(), deg.end());
}

bool Graph::hasEdge(int u, int v) const {
  for (auto [a, b] : edges)
    if ((a == u && b == v) || (a == v && b == u)) return true;
  return false;
}

bool Graph::isConnected() const {
  if (n == 0) return false;
  auto adj = adjacency();
  std::vector<char> seen(n, 0);
  std::deque<int> q{0};
  seen[0] = 1;
  int cnt = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++cnt;
        q.push_back(w);
      }
  }
  return cnt == n;
}

bool Graph::isTree() const { return edgeCount() == n - 1 && isConnected(); }

bool Graph::isPath() const {
  if (n == 1) return edges.empty();
  return isTree() && maxDegree() <= 2;
}

bool Graph::isComplete() const {
  return edgeCount() == n * (n - 1) / 2 && n >= 2;
}

std::vector<std::pair<int, int>> Graph::sortedEdges() const {
  std::vector<std::pair<int, int>> es;
  es.reserve(edges.size());
  for (auto [u, v] : edges) es.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(es.begin(), es.end());
  return es;
}

void Graph::validate() const {
  if (n < 2) throw ValidationError("graph must have at least 2 vertices");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ValidationError("edge endpoint out of range: (" +
                            std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v)
      throw ValidationError("self-loop at vertex " + std::to_string(u));
    auto key = std::minmax(u, v);
    if (!seen.insert({key.first, key.second}).second)
      throw ValidationError("duplicate edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ")");
  }
}

Graph star_graph(int n) {
  if (n < 2) throw ValidationError("star graph needs n >= 2");
  Graph g;
  g.n = n;
  for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(n - 1, i);
  return g;
}

Graph path_graph(int n) {
  if (n < 2) throw ValidationError("path graph needs n >= 2");
  Graph g;
  g.n = n;
  for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

Graph complete_graph(int n) {
  if (n < 2) throw ValidationError("complete graph needs n >= 2");
  Graph g;
  g.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
  return g;
}

Graph grid_graph(int rows, int cols) {
  if (rows < 1 || cols < 1 || rows * cols < 2)
    throw ValidationError("grid graph needs at least 2 vertices");
  Graph g;
  g.n = rows * cols;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) g.edges.emplace_back(id(r, c), id(r + 1, c));
    }
  return g;
}

Graph y_graph(int armA, int armB, int armC) {
  if (armA < 1 || armB < 1 || armC < 1)
    throw ValidationError("y graph needs all three arm lengths >= 1");
  Graph g;
  g.n = 1 + armA + armB + armC;
  int next = 1;
  for (int len : {armA, armB, armC}) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      g.edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return g;
}

Graph read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open edge list file: " + path);
  Graph g;
  std::string line;
  int lineno = 0;
  int maxId = -1;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    int u, v;
    if (!(ls >> u)) continue;  // blank or comment-only line
    if (!(ls >> v))
      throw ValidationError("edge list parse error at line " +
                            std::to_string(lineno) + " of " + path);
    std::string extra;
    if (ls >> extra)
      throw ValidationError("edge list parse error at line " +
                            std::to_string(lineno) + " of " + path +
                            ": trailing token '" + extra + "'");
    if (u < 0 || v < 0)
      throw ValidationError("edge list parse error at line " +
                            std::to_string(lineno) + ": negative vertex id");
    g.edges.emplace_back(u, v);
    maxId = std::max({maxId, u, v});
  }
  g.n = maxId + 1;
  g.validate();
  if (!g.isConnected()) {
    auto adj = g.adjacency();
    std::vector<char> seen(g.n, 0);
    std::deque<int> q{0};
    seen[0] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w : adj[v])
        if (!seen[w]) seen[w] = 1, q.push_back(w);
    }
    for (int v = 0; v < g.n; ++v)
      if (!seen[v])
        throw ValidationError("graph is disconnected: vertex " +
                              std::to_string(v) +
                              " is unreachable from vertex 0");
  }
  return g;
}

namespace {

std::vector<int> parse_int_list(const std::string& s, char sep) {
  std::vector<int> out;
  std::string cur;
  std::istringstream ss(s);
  while (std::getline(ss, cur, sep)) {
    try {
      size_t pos = 0;
      out.push_back(std::stoi(cur, &pos));
      if (pos != cur.size()) throw std::invalid_argument(cur);
    } catch (const std::exception&) {
      throw ValidationError("cannot parse integer '" + cur + "' in graph spec");
    }
  }
  return out;
}

}  // namespace

Graph parse_graph_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw ValidationError("graph spec must look like kind:params, got '" +
                          spec + "'");
  std::string kind = spec.substr(0, colon);
  std::string params = spec.substr(colon + 1);
  if (kind == "file") return read_edge_list(params);
  if (kind == "star" || kind == "path" || kind == "complete") {
    auto v = parse_int_list(params, ',');
    if (v.size() != 1)
      throw ValidationError(kind + " spec takes exactly one size parameter");
    if (kind == "star") return star_graph(v[0]);
    if (kind == "path") return path_graph(v[0]);
    return complete_graph(v[0]);
  }
  if (kind == "grid") {
    auto v = parse_int_list(params, 'x');
    if (v.size() != 2)
      throw ValidationError("grid spec must look like grid:RxC");
    return grid_graph(v[0], v[1]);
  }
  if (kind == "y") {
    auto v = parse_int_list(params, ',');
    if (v.size() != 3)
      throw ValidationError("y spec must look like y:A,B,C");
    return y_graph(v[0], v[1], v[2]);
  }
  throw ValidationError("unknown graph kind '" + kind + "'");
}

int center_vertex(const std::string& spec, const Graph& g) {
  auto colon = spec.find(':');
  std::string kind = colon == std::string::npos ? spec : spec.substr(0, colon);
  if (kind == "star") return g.n - 1;
  if (kind == "y") return 0;
  if (kind == "complete") return 0;
  if (kind == "path") return (g.n - 1) / 2;
  if (kind == "grid") {
    auto v = parse_int_list(spec.substr(colon + 1), 'x');
    return (v[0] / 2) * v[1] + v[1] / 2;
  }
  throw ValidationError("center root is not defined for graph kind '" + kind +
                        "'");
}

RootedTree spanning_tree(const Graph& g, int root) {
  g.validate();
  if (root < 0 || root >= g.n)
    throw ValidationError("spanning tree root out of range");
  if (!g.isConnected()) throw ValidationError("graph is disconnected");
  auto adj = g.adjacency();
  RootedTree t;
  t.root = root;
  t.parent.assign(g.n, -1);
  t.children.assign(g.n, {});
  t.parent[root] = root;
  std::deque<int> q{root};
  Graph tg;
  tg.n = g.n;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : adj[v]) {
      if (t.parent[w] >= 0) continue;
      t.parent[w] = v;
      t.children[v].push_back(w);
      tg.edges.emplace_back(v, w);
      q.push_back(w);
    }
  }
  t.graph = std::move(tg);
  return t;
}

int tree_height(const RootedTree& t) {
  auto adj = t.graph.adjacency();
  std::vector<int> dist(t.graph.n, -1);
  dist[t.root] = 0;
  std::deque<int> q{t.root};
  int h = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : adj[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        h = std::max(h, dist[w]);
        q.push_back(w);
      }
  }
  return h;
}

double depth_upper_bound(int n) {
  return (2.0 / std::log(2.0)) * std::log(static_cast<double>(n) + 1.0) - 1.0;
}

namespace {

// Shared state for the labeling recursion over sub-subtrees.
struct DepthDriver {
  const RootedTree& t;
  std::vector<std::vector<int>> adj;

  explicit DepthDriver(const RootedTree& tree)
      : t(tree), adj(tree.graph.adjacency()) {}

  // Vertices of the current sub-subtree marked in `in`.
  std::vector<int> leavesOf(const std::vector<int>& verts,
                            const std::vector<char>& in, int root) const {
    std::vector<int> out;
    for (int v : verts) {
      if (v == root) continue;
      int deg = 0;
      for (int w : adj[v]) deg += in[w];
      if (deg == 1) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Path from root to leaf along tree parents (all inside the subtree).
  std::vector<int> pathTo(int root, int leaf) const {
    std::vector<int> p;
    for (int v = leaf; v != root; v = t.parent[v]) p.push_back(v);
    p.push_back(root);
    std::reverse(p.begin(), p.end());
    return p;
  }

  // Removes path + root's neighbors, returns components sorted by root id.
  struct Component {
    int root;
    std::vector<int> verts;
  };
  std::vector<Component> componentsAfterRemoval(const std::vector<int>& verts,
                                                std::vector<char>& in,
                                                int root,
                                                const std::vector<int>& path) const {
    std::vector<char> removed(in.size(), 0);
    for (int v : path) removed[v] = 1;
    for (int w : adj[root])
      if (in[w]) removed[w] = 1;
    removed[root] = 1;
    std::vector<Component> comps;
    std::vector<char> seen(in.size(), 0);
    for (int v : verts) {
      if (removed[v] || seen[v]) continue;
      Component c;
      std::deque<int> q{v};
      seen[v] = 1;
      while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        c.verts.push_back(x);
        for (int w : adj[x])
          if (in[w] && !removed[w] && !seen[w]) seen[w] = 1, q.push_back(w);
      }
      c.root = -1;
      std::vector<char> inComp(in.size(), 0);
      for (int x : c.verts) inComp[x] = 1;
      for (int x : c.verts)
        if (!inComp[t.parent[x]]) {
          c.root = x;
          break;
        }
      std::sort(c.verts.begin(), c.verts.end());
      comps.push_back(std::move(c));
    }
    std::sort(comps.begin(), comps.end(),
              [](const Component& a, const Component& b) {
                return a.root < b.root;
              });
    return comps;
  }
};

// Memoized exhaustive minimization over root-to-leaf path choices.
struct ExactSearch {
  const DepthDriver& drv;
  std::uint64_t budget;
  std::uint64_t expanded = 0;
  std::unordered_map<std::uint64_t, int> memo;

  std::uint64_t key(std::uint64_t mask, int root) const {
    return (mask << 6) | static_cast<std::uint64_t>(root);
  }

  int value(std::uint64_t mask, int root) {
    if ((mask & (mask - 1)) == 0) return 0;  // singleton
    auto k = key(mask, root);
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    if (++expanded > budget)
      throw GuardError(
          "exact depth search budget exceeded; rerun with heuristic mode");
    std::vector<int> verts;
    std::vector<char> in(drv.adj.size(), 0);
    for (size_t v = 0; v < drv.adj.size(); ++v)
      if (mask >> v & 1) verts.push_back(static_cast<int>(v)), in[v] = 1;
    int best = -1;
    for (int leaf : drv.leavesOf(verts, in, root)) {
      int cand = candidate(verts, in, root, leaf);
      if (best < 0 || cand < best) best = cand;
    }
    memo[k] = best;
    return best;
  }

  int candidate(const std::vector<int>& verts, std::vector<char>& in, int root,
                int leaf) {
    auto path = drv.pathTo(root, leaf);
    auto comps = drv.componentsAfterRemoval(verts, in, root, path);
    if (comps.empty()) return 1;
    int worst = 0;
    for (auto& c : comps) {
      std::uint64_t m = 0;
      for (int v : c.verts) m |= std::uint64_t(1) << v;
      worst = std::max(worst, value(m, c.root));
    }
    return 2 + worst;
  }
};

struct Event {
  std::vector<int> verts;
  int root;
  int level;
};

// Runs the labeling with a pluggable leaf chooser, producing labels + trace.
template <typename Chooser>
DepthAssignment run_labeling(const RootedTree& t, DepthMode mode,
                             Chooser&& choose) {
  DepthDriver drv(t);
  int n = t.graph.n;
  DepthAssignment out;
  out.mode = mode;
  out.labels.assign(n, -1);
  std::deque<Event> q;
  {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    q.push_back({std::move(all), t.root, 0});
  }
  while (!q.empty()) {
    Event ev = std::move(q.front());
    q.pop_front();
    out.labels[ev.root] = ev.level;
    if (ev.verts.size() == 1) {
      out.trace.push_back({ev.root, ev.root});
      continue;
    }
    std::vector<char> in(n, 0);
    for (int v : ev.verts) in[v] = 1;
    int leaf = choose(drv, ev.verts, in, ev.root);
    out.trace.push_back({ev.root, leaf});
    auto path = drv.pathTo(ev.root, leaf);
    for (int v : path)
      if (v != ev.root) out.labels[v] = ev.level + 1;
    for (int w : drv.adj[ev.root])
      if (in[w]) out.labels[w] = ev.level + 1;
    for (auto& c : drv.componentsAfterRemoval(ev.verts, in, ev.root, path))
      q.push_back({std::move(c.verts), c.root, ev.level + 2});
  }
  out.depth = *std::max_element(out.labels.begin(), out.labels.end());
  return out;
}

}  // namespace

DepthAssignment tree_depth(const RootedTree& t, DepthMode mode,
                           std::uint64_t budget) {
  if (!t.graph.isTree()) throw ValidationError("depth requires a tree");
  if (t.graph.n < 2) throw ValidationError("depth requires at least 2 vertices");
  if (mode == DepthMode::Exact) {
    if (t.graph.n > 57)
      throw GuardError("exact depth supports at most 57 vertices");
    ExactSearch search{DepthDriver(t), budget};
    auto chooser = [&search](const DepthDriver& drv,
                             const std::vector<int>& verts,
                             std::vector<char>& in, int root) {
      int bestLeaf = -1, bestVal = -1;
      for (int leaf : drv.leavesOf(verts, in, root)) {
        int cand = search.candidate(verts, in, root, leaf);
        if (bestVal < 0 || cand < bestVal) bestVal = cand, bestLeaf = leaf;
      }
      return bestLeaf;
    };
    return run_labeling(t, mode, chooser);
  }
  auto chooser = [](const DepthDriver& drv, const std::vector<int>& verts,
                    std::vector<char>& in, int root) {
    // Longest root-to-leaf path; ties toward the smallest leaf id.
    std::vector<int> dist(drv.adj.size(), -1);
    dist[root] = 0;
    std::deque<int> q{root};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w : drv.adj[v])
        if (in[w] && dist[w] < 0) dist[w] = dist[v] + 1, q.push_back(w);
    }
    int bestLeaf = -1, bestDist = -1;
    for (int leaf : drv.leavesOf(verts, in, root))
      if (dist[leaf] > bestDist) bestDist = dist[leaf], bestLeaf = leaf;
    return bestLeaf;
  };
  return run_labeling(t, mode, chooser);
}

DepthAssignment replay_depth(const RootedTree& t,
                             const std::vector<DepthChoice>& trace) {
  size_t next = 0;
  // run_labeling records singleton events on its own without consulting the
  // chooser, so skip matching singleton entries before consuming one.
  auto chooser = [&trace, &next](const DepthDriver& drv,
                                 const std::vector<int>& verts,
                                 std::vector<char>& in, int root) {
    while (next < trace.size() &&
           trace[next].subtreeRoot == trace[next].leaf)
      ++next;
    if (next >= trace.size())
      throw ValidationError("depth trace too short for this tree");
    const DepthChoice& c = trace[next++];
    if (c.subtreeRoot != root)
      throw ValidationError("depth trace subtree root mismatch: expected " +
                            std::to_string(root) + ", got " +
                            std::to_string(c.subtreeRoot));
    auto leaves = drv.leavesOf(verts, in, root);
    if (std::find(leaves.begin(), leaves.end(), c.leaf) == leaves.end())
      throw ValidationError("depth trace leaf " + std::to_string(c.leaf) +
                            " is not a leaf of the current subtree");
    return c.leaf;
  };
  DepthAssignment out = run_labeling(t, DepthMode::Exact, chooser);
  // Count non-singleton events consumed; singleton entries in `trace` must
  // line up with those produced by the replay.
  if (out.trace.size() != trace.size())
    throw ValidationError("depth trace length mismatch: expected " +
                          std::to_string(out.trace.size()) + " events, got " +
                          std::to_string(trace.size()));
  for (size_t i = 0; i < trace.size(); ++i)
    if (trace[i].subtreeRoot != out.trace[i].subtreeRoot ||
        trace[i].leaf != out.trace[i].leaf)
      throw ValidationError("depth trace event " + std::to_string(i) +
                            " does not match the replayed recursion");
  return out;
}

namespace {

// Ordered layer walk used when building the level-0 compressed tree: descend
// from `start` away from `prev`, preferring leaf neighbors (smallest id
// first) so the initial layer stays as shallow as possible.
std::vector<int> layer_walk(const std::vector<std::vector<int>>& adj, int prev,
                            int start) {
  std::vector<int> out;
  int p = prev, v = start;
  while (true) {
    out.push_back(v);
    int nextLeaf = -1, nextOther = -1;
    for (int w : adj[v]) {
      if (w == p) continue;
      if (adj[w].size() == 1) {
        if (nextLeaf < 0) nextLeaf = w;
      } else if (nextOther < 0) {
        nextOther = w;
      }
    }
    if (nextLeaf < 0 && nextOther < 0) break;  // v is a leaf
    p = v;
    v = nextLeaf >= 0 ? nextLeaf : nextOther;
  }
  return out;
}

std::vector<int> initial_layer(const Graph& g, int root) {
  auto adj = g.adjacency();
  if (adj[root].size() == 1) {
    auto walk = layer_walk(adj, root, adj[root][0]);
    std::vector<int> layer{root};
    layer.insert(layer.end(), walk.begin(), walk.end());
    return layer;
  }
  // Prefer neighbors that are leaves (ascending id), then non-leaves.
  std::vector<int> nbs = adj[root];
  std::stable_sort(nbs.begin(), nbs.end(), [&adj](int a, int b) {
    bool la = adj[a].size() == 1, lb = adj[b].size() == 1;
    if (la != lb) return la;
    return a < b;
  });
  auto left = layer_walk(adj, root, nbs[0]);
  auto right = layer_walk(adj, root, nbs[1]);
  std::vector<int> layer(left.rbegin(), left.rend());
  layer.push_back(root);
  layer.insert(layer.end(), right.begin(), right.end());
  return layer;
}

}  // namespace

CompressedTree compress(const RootedTree& t, const DepthAssignment& da) {
  if (static_cast<int>(da.labels.size()) != t.graph.n)
    throw ValidationError("depth assignment does not match the tree size");
  replay_depth(t, da.trace);  // validates the trace against the tree

  DepthDriver drv(t);
  std::vector<PathRecord> recs;
  for (const DepthChoice& c : da.trace) {
    PathRecord r;
    r.head = c.subtreeRoot;
    if (c.leaf != c.subtreeRoot) {
      auto path = drv.pathTo(c.subtreeRoot, c.leaf);
      r.tail.assign(path.begin() + 1, path.end());
    }
    recs.push_back(std::move(r));
  }

  std::set<std::pair<int, int>> es;
  for (auto [u, v] : t.graph.sortedEdges()) es.insert({u, v});
  auto norm = [](int a, int b) { return std::pair<int, int>(std::min(a, b), std::max(a, b)); };
  for (const auto& r : recs) {
    for (size_t i = 1; i < r.tail.size(); ++i) {
      auto [a, b] = norm(r.tail[i - 1], r.tail[i]);
      es.erase({a, b});
      auto [c, d] = norm(r.head, r.tail[i]);
      es.insert({c, d});
    }
  }

  CompressedTree ct;
  ct.graph.n = t.graph.n;
  ct.graph.edges.assign(es.begin(), es.end());
  ct.root = t.root;
  ct.level = 0;
  ct.records.push_back(std::move(recs));
  RootedTree rooted = spanning_tree(ct.graph, ct.root);
  ct.height = tree_height(rooted);
  ct.layer = initial_layer(ct.graph, ct.root);
  return ct;
}

FlattenStepResult flatten_step(const CompressedTree& ct) {
  auto adj = ct.graph.adjacency();
  const auto& layer = ct.layer;
  for (size_t j = 1; j < layer.size(); ++j)
    if (!ct.graph.hasEdge(layer[j - 1], layer[j]))
      throw ValidationError("compressed tree layer is not a path");

  std::vector<PathRecord> recs;
  std::set<std::pair<int, int>> es;
  for (auto [u, v] : ct.graph.sortedEdges()) es.insert({u, v});
  auto norm = [](int a, int b) { return std::pair<int, int>(std::min(a, b), std::max(a, b)); };

  std::vector<char> onLayer(ct.graph.n, 0);
  for (int v : layer) onLayer[v] = 1;

  std::vector<std::vector<int>> chains(layer.size());
  for (size_t j = 0; j < layer.size(); ++j) {
    int v = layer[j];
    if (adj[v].size() < 3) continue;
    int left = layer[j - 1];  // interior: endpoints always have degree 1
    int right = j + 1 < layer.size() ? layer[j + 1] : -1;
    std::vector<int> kids;
    for (int w : adj[v])
      if (w != left && w != right) kids.push_back(w);
    std::sort(kids.begin(), kids.end());
    if (kids.empty()) continue;
    // Rewire the star {v-left, v-kids...} into the chain v-k1-...-km-left.
    auto [a, b] = norm(v, left);
    es.erase({a, b});
    for (size_t i = 1; i < kids.size(); ++i) {
      auto [c, d] = norm(v, kids[i]);
      es.erase({c, d});
      auto [e, f] = norm(kids[i - 1], kids[i]);
      es.insert({e, f});
    }
    auto [g, h] = norm(kids.back(), left);
    es.insert({g, h});
    PathRecord r;
    r.head = v;
    r.tail = kids;
    r.tail.push_back(left);
    recs.push_back(r);
    chains[j] = kids;
  }

  FlattenStepResult out;
  if (recs.empty()) {
    out.tree = ct;
    out.changed = false;
    return out;
  }

  std::vector<int> newLayer{layer[0]};
  for (size_t j = 1; j < layer.size(); ++j) {
    for (auto it = chains[j].rbegin(); it != chains[j].rend(); ++it)
      newLayer.push_back(*it);
    newLayer.push_back(layer[j]);
  }

  out.tree.graph.n = ct.graph.n;
  out.tree.graph.edges.assign(es.begin(), es.end());
  out.tree.root = ct.root;
  out.tree.level = ct.level + 1;
  out.tree.height = ct.height;
  out.tree.layer = std::move(newLayer);
  out.tree.records = ct.records;
  out.tree.records.push_back(std::move(recs));
  out.changed = true;
  return out;
}

}  // namespace momentgap

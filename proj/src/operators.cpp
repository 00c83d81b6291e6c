// operators.cpp -- matrix-free kernels for moment Hamiltonians, detectability
// products, site permutations, and the path/star compression identities.
#include "momentgap/operators.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <set>

#include "momentgap/common.hpp"

namespace momentgap {
namespace {

// Site s occupies digit s of the global index, site 0 most significant.
std::vector<Eigen::Index> site_strides(int n, Eigen::Index siteDim) {
  std::vector<Eigen::Index> stride(static_cast<size_t>(n));
  Eigen::Index s = 1;
  for (int site = n - 1; site >= 0; --site) {
    stride[static_cast<size_t>(site)] = s;
    s *= siteDim;
  }
  return stride;
}

// Gather/scatter plan for one edge: the permutation-indexed pair supports of
// the Haar projector turned into global-index offsets, plus an odometer over
// the remaining sites' digits.
struct EdgeKernel {
  int u = 0, v = 0;
  Eigen::Index strideU = 0, strideV = 0;
  std::vector<Eigen::Index> otherStride;        // most significant first
  std::vector<std::vector<Eigen::Index>> offs;  // per sigma, sorted offsets

  EdgeKernel() = default;
  EdgeKernel(int n, int uu, int vv, const HaarProjector& p) : u(uu), v(vv) {
    auto stride = site_strides(n, p.siteDim);
    strideU = stride[static_cast<size_t>(u)];
    strideV = stride[static_cast<size_t>(v)];
    for (int s = 0; s < n; ++s)
      if (s != u && s != v) otherStride.push_back(stride[static_cast<size_t>(s)]);
    offs.reserve(p.support.size());
    for (const auto& sup : p.support) {
      std::vector<Eigen::Index> o;
      o.reserve(sup.size());
      for (auto idx : sup)
        o.push_back((idx / p.siteDim) * strideU + (idx % p.siteDim) * strideV);
      offs.push_back(std::move(o));
    }
  }

  template <class F>
  void forEachBase(Eigen::Index siteDim, F&& f) const {
    std::vector<Eigen::Index> digit(otherStride.size(), 0);
    Eigen::Index base = 0;
    for (;;) {
      f(base);
      size_t i = otherStride.size();
      for (;;) {
        if (i == 0) return;
        --i;
        ++digit[i];
        base += otherStride[i];
        if (digit[i] < siteDim) break;
        digit[i] = 0;
        base -= siteDim * otherStride[i];
      }
    }
  }
};

struct PairOperatorState {
  HaarProjector proj;
  std::vector<EdgeKernel> kernels;
  Eigen::Index siteDim = 0;
  Eigen::VectorXd c, w;  // workspace, k! each
};

std::shared_ptr<PairOperatorState> make_pair_state(const HamiltonianSpec& spec,
                                                   const std::vector<std::pair<int, int>>& edges) {
  auto st = std::make_shared<PairOperatorState>();
  st->proj = haar_projector(spec.k, spec.q);
  st->siteDim = st->proj.siteDim;
  for (auto [u, v] : edges)
    st->kernels.emplace_back(spec.graph.n, u, v, st->proj);
  Eigen::Index nperm = static_cast<Eigen::Index>(st->proj.support.size());
  st->c.resize(nperm);
  st->w.resize(nperm);
  return st;
}

void check_spec(const HamiltonianSpec& spec, Eigen::Index dimLimit,
                const std::string& what) {
  spec.graph.validate();
  if (spec.k < 1) throw ValidationError(what + ": k must be at least 1");
  if (spec.q < 2) throw ValidationError(what + ": q must be at least 2");
  ipow_checked(spec.q, 2 * spec.graph.n * spec.k, dimLimit, what);
}

// Overlap sums of the pair supports against x around one block base.
void pair_overlaps(const EdgeKernel& ker, const Eigen::VectorXd& x,
                   Eigen::Index base, Eigen::VectorXd& c) {
  for (size_t s = 0; s < ker.offs.size(); ++s) {
    double acc = 0.0;
    for (auto o : ker.offs[s]) acc += x[base + o];
    c[static_cast<Eigen::Index>(s)] = acc;
  }
}

// In-place application of the pair projector on every block of one edge:
// the pair content is replaced by B Wg B^T acting on it.
void apply_pair_projector(const EdgeKernel& ker, PairOperatorState& st,
                          Eigen::VectorXd& z) {
  Eigen::Index m = st.siteDim;
  ker.forEachBase(m, [&](Eigen::Index base) {
    pair_overlaps(ker, z, base, st.c);
    st.w.noalias() = st.proj.wg * st.c;
    for (Eigen::Index a = 0; a < m; ++a) {
      Eigen::Index rowBase = base + a * ker.strideU;
      for (Eigen::Index b = 0; b < m; ++b) z[rowBase + b * ker.strideV] = 0.0;
    }
    for (size_t s = 0; s < ker.offs.size(); ++s) {
      double ws = st.w[static_cast<Eigen::Index>(s)];
      for (auto o : ker.offs[s]) z[base + o] += ws;
    }
  });
}

}  // namespace

LinearOperator assemble_full(const HamiltonianSpec& spec) {
  check_spec(spec, Eigen::Index(1) << 22, "full-space Hamiltonian");
  Eigen::Index dim = ipow(spec.q, 2 * spec.graph.n * spec.k);
  auto st = make_pair_state(spec, spec.graph.sortedEdges());
  double ec = static_cast<double>(spec.graph.edgeCount());
  LinearOperator op;
  op.dim = dim;
  op.description = "moment Hamiltonian, n=" + std::to_string(spec.graph.n) +
                   " k=" + std::to_string(spec.k) + " q=" + std::to_string(spec.q);
  op.matvecFn = [st, ec](const Eigen::Ref<const Eigen::VectorXd>& x,
                         Eigen::Ref<Eigen::VectorXd> y) {
    y = ec * x;
    for (const auto& ker : st->kernels) {
      ker.forEachBase(st->siteDim, [&](Eigen::Index base) {
        for (size_t s = 0; s < ker.offs.size(); ++s) {
          double acc = 0.0;
          for (auto o : ker.offs[s]) acc += x[base + o];
          st->c[static_cast<Eigen::Index>(s)] = acc;
        }
        st->w.noalias() = st->proj.wg * st->c;
        for (size_t s = 0; s < ker.offs.size(); ++s) {
          double ws = st->w[static_cast<Eigen::Index>(s)];
          for (auto o : ker.offs[s]) y[base + o] -= ws;
        }
      });
    }
  };
  return op;
}

LinearOperator moment_operator(const HamiltonianSpec& spec) {
  check_spec(spec, Eigen::Index(1) << 22, "moment operator");
  Eigen::Index dim = ipow(spec.q, 2 * spec.graph.n * spec.k);
  auto st = make_pair_state(spec, spec.graph.sortedEdges());
  LinearOperator op;
  op.dim = dim;
  op.description = "moment operator, n=" + std::to_string(spec.graph.n) +
                   " k=" + std::to_string(spec.k) + " q=" + std::to_string(spec.q);
  op.matvecFn = [st](const Eigen::Ref<const Eigen::VectorXd>& x,
                     Eigen::Ref<Eigen::VectorXd> y) {
    y.setZero();
    for (const auto& ker : st->kernels) {
      ker.forEachBase(st->siteDim, [&](Eigen::Index base) {
        for (size_t s = 0; s < ker.offs.size(); ++s) {
          double acc = 0.0;
          for (auto o : ker.offs[s]) acc += x[base + o];
          st->c[static_cast<Eigen::Index>(s)] = acc;
        }
        st->w.noalias() = st->proj.wg * st->c;
        for (size_t s = 0; s < ker.offs.size(); ++s) {
          double ws = st->w[static_cast<Eigen::Index>(s)];
          for (auto o : ker.offs[s]) y[base + o] += ws;
        }
      });
    }
  };
  return op;
}

LinearOperator site_permutation_operator(int n, Eigen::Index siteDim,
                                         const std::vector<int>& dest) {
  if (static_cast<int>(dest.size()) != n)
    throw ValidationError("site permutation must list every site once");
  std::vector<char> hit(static_cast<size_t>(n), 0);
  for (int d : dest) {
    if (d < 0 || d >= n || hit[static_cast<size_t>(d)])
      throw ValidationError("site permutation must list every site once");
    hit[static_cast<size_t>(d)] = 1;
  }
  if (siteDim < 1) throw ValidationError("site dimension must be positive");
  Eigen::Index dim = ipow_checked(siteDim, n, Eigen::Index(1) << 26,
                                  "site permutation operator");
  auto stride = site_strides(n, siteDim);
  std::vector<Eigen::Index> strideDest(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s)
    strideDest[static_cast<size_t>(s)] = stride[static_cast<size_t>(dest[static_cast<size_t>(s)])];
  LinearOperator op;
  op.dim = dim;
  op.description = "site permutation";
  op.matvecFn = [n, siteDim, strideDest, dim](
                    const Eigen::Ref<const Eigen::VectorXd>& x,
                    Eigen::Ref<Eigen::VectorXd> y) {
    // y[j] = x[i] where digit dest[s] of j equals digit s of i, tracked with
    // an odometer over the digits of i (least significant digit last).
    std::vector<Eigen::Index> digit(static_cast<size_t>(n), 0);
    Eigen::Index j = 0;
    for (Eigen::Index i = 0; i < dim; ++i) {
      y[j] = x[i];
      size_t s = static_cast<size_t>(n);
      while (s > 0) {
        --s;
        ++digit[s];
        j += strideDest[s];
        if (digit[s] < siteDim) break;
        digit[s] = 0;
        j -= siteDim * strideDest[s];
      }
    }
  };
  return op;
}

LinearOperator cyclic_permutation(const std::vector<int>& path, int n,
                                  Eigen::Index siteDim) {
  if (path.empty()) throw ValidationError("cyclic permutation path is empty");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : path) {
    if (v < 0 || v >= n)
      throw ValidationError("cyclic permutation path leaves the vertex range");
    if (seen[static_cast<size_t>(v)])
      throw ValidationError("cyclic permutation path repeats vertex " +
                            std::to_string(v));
    seen[static_cast<size_t>(v)] = 1;
  }
  std::vector<int> dest(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s) dest[static_cast<size_t>(s)] = s;
  if (path.size() > 1) {
    dest[static_cast<size_t>(path.back())] = path.front();
    for (size_t i = 0; i + 1 < path.size(); ++i)
      dest[static_cast<size_t>(path[i])] = path[i + 1];
  }
  LinearOperator op = site_permutation_operator(n, siteDim, dest);
  op.description = "cyclic site permutation";
  return op;
}

LinearOperator dl_operator(const HamiltonianSpec& spec,
                           const std::vector<std::pair<int, int>>& ordering) {
  check_spec(spec, Eigen::Index(1) << 26, "detectability product");
  Eigen::Index dim = ipow(spec.q, 2 * spec.graph.n * spec.k);
  auto norm = [](std::pair<int, int> e) {
    return std::pair<int, int>(std::min(e.first, e.second),
                               std::max(e.first, e.second));
  };
  std::multiset<std::pair<int, int>> want, got;
  for (auto e : spec.graph.sortedEdges()) want.insert(e);
  for (auto e : ordering) got.insert(norm(e));
  if (want != got)
    throw ValidationError(
        "detectability ordering must list every edge exactly once");
  auto st = make_pair_state(spec, ordering);
  LinearOperator op;
  op.dim = dim;
  op.description = "detectability product over " +
                   std::to_string(ordering.size()) + " edges";
  op.matvecFn = [st](const Eigen::Ref<const Eigen::VectorXd>& x,
                     Eigen::Ref<Eigen::VectorXd> y) {
    Eigen::VectorXd z = x;
    for (auto it = st->kernels.rbegin(); it != st->kernels.rend(); ++it)
      apply_pair_projector(*it, *st, z);
    y = z;
  };
  return op;
}

void project_out_ground(Eigen::Ref<Eigen::VectorXd> x, int n, int k, int q) {
  Eigen::Index siteDim = ipow(q, 2 * k);
  ipow_checked(siteDim, n, Eigen::Index(1) << 26, "ground projection");
  Eigen::Index count =
      ipow_checked(q, n * k, Eigen::Index(1) << 26, "ground support sweep");
  auto sk = symmetric_group(k);
  Eigen::MatrixXd r = haar_oracle_coefficients(k, std::pow(double(q), n));
  std::vector<std::vector<Eigen::Index>> s1;
  s1.reserve(sk.size());
  for (const auto& sigma : sk) s1.push_back(perm_vector_support(sigma, q));
  auto stride = site_strides(n, siteDim);
  Eigen::Index siteSupport = ipow(q, k);

  auto sweep = [&](size_t sigma, auto&& f) {
    const auto& sup = s1[sigma];
    for (Eigen::Index t = 0; t < count; ++t) {
      Eigen::Index rem = t, global = 0;
      for (int s = n - 1; s >= 0; --s) {
        global += sup[static_cast<size_t>(rem % siteSupport)] *
                  stride[static_cast<size_t>(s)];
        rem /= siteSupport;
      }
      f(global);
    }
  };

  Eigen::VectorXd o(static_cast<Eigen::Index>(sk.size()));
  for (size_t sigma = 0; sigma < sk.size(); ++sigma) {
    double acc = 0.0;
    sweep(sigma, [&](Eigen::Index g) { acc += x[g]; });
    o[static_cast<Eigen::Index>(sigma)] = acc;
  }
  Eigen::VectorXd a = r * (r.transpose() * o);
  for (size_t sigma = 0; sigma < sk.size(); ++sigma) {
    double as = a[static_cast<Eigen::Index>(sigma)];
    if (as == 0.0) continue;
    sweep(sigma, [&](Eigen::Index g) { x[g] -= as; });
  }
}

int dl_g_parameter(const Graph& g) {
  auto edges = g.sortedEdges();
  int best = 0;
  for (size_t i = 0; i < edges.size(); ++i) {
    int cnt = 0;
    for (size_t j = 0; j < edges.size(); ++j) {
      if (i == j) continue;
      if (edges[i].first == edges[j].first || edges[i].first == edges[j].second ||
          edges[i].second == edges[j].first || edges[i].second == edges[j].second)
        ++cnt;
    }
    best = std::max(best, cnt);
  }
  return best;
}

IdentityCheckResult verify_compression_identity(CompressionLemma which,
                                                int pathLen, int k, int q,
                                                std::uint64_t seed) {
  if (pathLen < 3)
    throw ValidationError("compression identities need at least 3 vertices");
  if (k < 1 || q < 2)
    throw ValidationError("compression identities need k >= 1 and q >= 2");
  int n = pathLen;
  Eigen::Index dim = ipow_checked(q, 2 * n * k, Eigen::Index(1) << 20,
                                  "compression identity check");
  HaarProjector proj = haar_projector(k, q);
  PairOperatorState st;
  st.proj = proj;
  st.siteDim = proj.siteDim;
  Eigen::Index nperm = static_cast<Eigen::Index>(proj.support.size());
  st.c.resize(nperm);
  st.w.resize(nperm);

  auto kernelFor = [&](int u, int v) { return EdgeKernel(n, u, v, proj); };

  // Factor lists left to right; application order is right to left.
  std::vector<std::pair<int, int>> lhsEdges, rhsEdges;
  bool rhsPermFirst = false;   // permutation leftmost instead of rightmost
  bool rhsPermInverse = false; // W^dagger instead of W
  switch (which) {
    case CompressionLemma::PathToStar:
      for (int i = 0; i + 1 < n; ++i) lhsEdges.push_back({i, i + 1});
      for (int i = 1; i < n; ++i) rhsEdges.push_back({0, i});
      break;
    case CompressionLemma::StarToPathRight:
      for (int i = 1; i < n; ++i) lhsEdges.push_back({0, i});
      for (int i = 0; i + 1 < n; ++i) rhsEdges.push_back({i, i + 1});
      rhsPermInverse = true;
      break;
    case CompressionLemma::StarToPathLeft:
      for (int i = 1; i < n; ++i) lhsEdges.push_back({0, i});
      for (int i = 1; i + 1 < n; ++i) rhsEdges.push_back({i, i + 1});
      rhsEdges.push_back({0, n - 1});
      rhsPermFirst = true;
      rhsPermInverse = true;
      break;
  }

  std::vector<EdgeKernel> lhsK, rhsK;
  for (auto [u, v] : lhsEdges) lhsK.push_back(kernelFor(u, v));
  for (auto [u, v] : rhsEdges) rhsK.push_back(kernelFor(u, v));

  std::vector<int> pathVerts(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pathVerts[static_cast<size_t>(i)] = i;
  LinearOperator w = cyclic_permutation(pathVerts, n, proj.siteDim);
  // Reversing the listed order inverts the cycle.
  std::vector<int> revVerts(pathVerts.rbegin(), pathVerts.rend());
  LinearOperator winv = cyclic_permutation(revVerts, n, proj.siteDim);

  Eigen::VectorXd tmp(dim);
  auto applyLhs = [&](Eigen::VectorXd& z) {
    for (auto it = lhsK.rbegin(); it != lhsK.rend(); ++it)
      apply_pair_projector(*it, st, z);
  };
  auto applyRhs = [&](Eigen::VectorXd& z) {
    const LinearOperator& perm = rhsPermInverse ? winv : w;
    if (!rhsPermFirst) {
      perm.matvec(z, tmp);
      z = tmp;
    }
    for (auto it = rhsK.rbegin(); it != rhsK.rend(); ++it)
      apply_pair_projector(*it, st, z);
    if (rhsPermFirst) {
      perm.matvec(z, tmp);
      z = tmp;
    }
  };
  auto columnDev = [&](Eigen::Index col) {
    Eigen::VectorXd a = Eigen::VectorXd::Zero(dim);
    a[col] = 1.0;
    Eigen::VectorXd b = a;
    applyLhs(a);
    applyRhs(b);
    return (a - b).lpNorm<Eigen::Infinity>();
  };

  IdentityCheckResult out;
  out.dim = dim;
  if (dim <= (Eigen::Index(1) << 13)) {
    out.method = "dense-columns";
    double dev = 0.0;
    for (Eigen::Index col = 0; col < dim; ++col)
      dev = std::max(dev, columnDev(col));
    out.deviation = dev;
    return out;
  }

  out.method = "sampled-columns+power-iteration";
  std::mt19937_64 rng(seed);
  double dev = 0.0;
  std::uniform_int_distribution<Eigen::Index> pick(0, dim - 1);
  for (int t = 0; t < 256; ++t) dev = std::max(dev, columnDev(pick(rng)));
  // Largest-singular-value estimate of L - R via power iteration on
  // (L - R)^T (L - R); the m factors are symmetric and the permutation
  // transposes to its inverse.
  auto applyDiff = [&](const Eigen::VectorXd& z) {
    Eigen::VectorXd a = z, b = z;
    applyLhs(a);
    applyRhs(b);
    return Eigen::VectorXd(a - b);
  };
  auto applyDiffT = [&](const Eigen::VectorXd& z) {
    Eigen::VectorXd a = z;
    for (auto it = lhsK.begin(); it != lhsK.end(); ++it)
      apply_pair_projector(*it, st, a);
    Eigen::VectorXd b = z;
    const LinearOperator& permT = rhsPermInverse ? w : winv;
    if (rhsPermFirst) {
      permT.matvec(b, tmp);
      b = tmp;
    }
    for (auto it = rhsK.begin(); it != rhsK.end(); ++it)
      apply_pair_projector(*it, st, b);
    if (!rhsPermFirst) {
      permT.matvec(b, tmp);
      b = tmp;
    }
    return Eigen::VectorXd(a - b);
  };
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = gauss(rng);
  v.normalize();
  double sigma = 0.0;
  for (int it = 0; it < 30; ++it) {
    Eigen::VectorXd u = applyDiffT(applyDiff(v));
    double nn = u.norm();
    sigma = std::sqrt(nn);
    if (nn == 0.0) break;
    v = u / nn;
  }
  out.deviation = std::max(dev, sigma);
  return out;
}

CompressionDlPair compression_dl_pair(const RootedTree& st,
                                      const CompressedTree& ct) {
  if (ct.records.empty())
    throw ValidationError("compressed tree carries no path records");
  const auto& recs = ct.records.front();
  auto norm = [](int a, int b) { return std::pair<int, int>(std::min(a, b), std::max(a, b)); };
  std::set<std::pair<int, int>> onPath;
  for (const auto& r : recs) {
    if (r.tail.empty()) continue;
    onPath.insert(norm(r.head, r.tail[0]));
    for (size_t i = 1; i < r.tail.size(); ++i)
      onPath.insert(norm(r.tail[i - 1], r.tail[i]));
  }
  CompressionDlPair out;
  for (auto e : st.graph.sortedEdges())
    if (!onPath.count(e)) {
      out.stOrdering.push_back(e);
      out.cstOrdering.push_back(e);
    }
  for (const auto& r : recs) {
    if (r.tail.empty()) continue;
    out.stOrdering.push_back({r.head, r.tail[0]});
    for (size_t i = 1; i < r.tail.size(); ++i)
      out.stOrdering.push_back({r.tail[i - 1], r.tail[i]});
    for (size_t i = 0; i < r.tail.size(); ++i)
      out.cstOrdering.push_back({r.head, r.tail[i]});
    std::vector<int> p{r.head};
    p.insert(p.end(), r.tail.begin(), r.tail.end());
    out.cyclicPaths.push_back(std::move(p));
  }
  std::multiset<std::pair<int, int>> want, got;
  for (auto e : ct.graph.sortedEdges()) want.insert(e);
  for (auto e : out.cstOrdering) got.insert(norm(e.first, e.second));
  if (want != got)
    throw ValidationError(
        "compressed tree does not match the spanning tree records");
  return out;
}

std::vector<std::pair<int, int>> layer_pipeline_ordering(
    const CompressedTree& ct) {
  auto adj = ct.graph.adjacency();
  const auto& layer = ct.layer;
  for (size_t j = 1; j < layer.size(); ++j)
    if (!ct.graph.hasEdge(layer[j - 1], layer[j]))
      throw ValidationError("compressed tree layer is not a path");
  if (!layer.empty() && adj[static_cast<size_t>(layer[0])].size() >= 3)
    throw ValidationError("compressed tree layer starts at a branching vertex");

  auto norm = [](int a, int b) { return std::pair<int, int>(std::min(a, b), std::max(a, b)); };
  std::vector<size_t> branching;
  for (size_t j = 0; j < layer.size(); ++j)
    if (adj[static_cast<size_t>(layer[j])].size() >= 3) branching.push_back(j);
  if (branching.empty()) return ct.graph.sortedEdges();

  size_t j0 = branching.front();
  std::vector<std::pair<int, int>> evens, odds;
  std::set<std::pair<int, int>> inStar;
  for (size_t j : branching) {
    int v = layer[j];
    int left = layer[j - 1];
    int right = j + 1 < layer.size() ? layer[j + 1] : -1;
    std::vector<int> kids;
    for (int w : adj[static_cast<size_t>(v)])
      if (w != left && w != right) kids.push_back(w);
    std::sort(kids.begin(), kids.end());
    std::vector<std::pair<int, int>> star;
    for (int kid : kids) star.push_back({v, kid});
    star.push_back({v, left});
    for (auto e : star) inStar.insert(norm(e.first, e.second));
    auto& bucket = ((j - j0) % 2 == 0) ? evens : odds;
    bucket.insert(bucket.end(), star.begin(), star.end());
  }

  std::vector<std::pair<int, int>> ordering = odds;
  for (auto e : ct.graph.sortedEdges())
    if (!inStar.count(e)) ordering.push_back(e);
  ordering.insert(ordering.end(), evens.begin(), evens.end());
  return ordering;
}

DlCheckResult dl_qub_check(const HamiltonianSpec& spec,
                           const std::vector<std::pair<int, int>>& ordering,
                           double gap, int samples, std::uint64_t seed) {
  if (gap <= 0.0)
    throw ValidationError("detectability check needs a positive gap");
  if (samples < 1)
    throw ValidationError("detectability check needs at least one sample");
  LinearOperator dl = dl_operator(spec, ordering);
  DlCheckResult out;
  out.gParam = dl_g_parameter(spec.graph);
  out.dlBound = out.gParam == 0
                    ? 0.0
                    : 1.0 / (1.0 + gap / (double(out.gParam) * out.gParam));
  out.qubBound = 1.0 - 4.0 * gap;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double lo = 0.0, hi = 0.0;
  bool first = true;
  Eigen::VectorXd x(dl.dim), y(dl.dim);
  for (int t = 0; t < samples; ++t) {
    double nrm = 0.0;
    do {
      for (Eigen::Index i = 0; i < dl.dim; ++i) x[i] = gauss(rng);
      project_out_ground(x, spec.graph.n, spec.k, spec.q);
      nrm = x.norm();
    } while (nrm < 1e-8);
    x /= nrm;
    dl.matvec(x, y);
    double nsq = y.squaredNorm();
    if (first || nsq > hi) hi = nsq;
    if (first || nsq < lo) lo = nsq;
    first = false;
  }
  out.maxNormSq = hi;
  out.minNormSq = lo;
  out.dlHolds = hi <= out.dlBound + 1e-9;
  out.qubHolds = lo >= out.qubBound - 1e-9;
  return out;
}

}  // namespace momentgap

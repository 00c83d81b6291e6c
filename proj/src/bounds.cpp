#include "momentgap/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "momentgap/effective.hpp"
#include "momentgap/tables.hpp"

namespace momentgap {

namespace {

void check_unit_range(double x, const char* what) {
  if (!(x >= -1e-9 && x <= 1.0 + 1e-9)) {
    std::ostringstream os;
    os << what << " must lie in [0, 1], got " << x;
    throw ValidationError(os.str());
  }
}

bool is_star_shape(const Graph& g) {
  if (g.n < 3 || g.edgeCount() != g.n - 1) return false;
  int centers = 0, leaves = 0;
  for (int v = 0; v < g.n; ++v) {
    int d = g.degree(v);
    if (d == g.n - 1) ++centers;
    if (d == 1) ++leaves;
  }
  return centers == 1 && leaves == g.n - 1;
}

int max_degree_root(const Graph& g) {
  int best = 0;
  for (int v = 1; v < g.n; ++v) {
    if (g.degree(v) > g.degree(best)) best = v;
  }
  return best;
}

double step_input(const BoundStep& s, const char* name) {
  for (const auto& kv : s.inputs) {
    if (kv.first == name) return kv.second;
  }
  throw ValidationError(std::string("certificate step '") + s.id +
                        "' is missing input '" + name + "'");
}

ComputeGapOptions replay_options(const BoundStep& s) {
  ComputeGapOptions go;
  go.tol = step_input(s, "tol");
  go.maxIter = static_cast<int>(step_input(s, "maxiter"));
  go.seed = static_cast<std::uint64_t>(step_input(s, "seed"));
  return go;
}

// Depth-chain quantities shared by the report and the verifier: the spanning
// tree from `root`, the chain order d, and the compressed-tree degree g.
struct ChainShape {
  int d = 0;
  int g = 2;
  bool stIsPath = false;
};

ChainShape chain_shape(const Graph& graph, int root, bool exact,
                       std::uint64_t budget) {
  ChainShape out;
  RootedTree st = spanning_tree(graph, root);
  if (st.graph.isPath()) {
    out.stIsPath = true;
    out.d = 0;
    out.g = std::max(2, st.graph.maxDegree());
    return out;
  }
  DepthAssignment da = tree_depth(
      st, exact ? DepthMode::Exact : DepthMode::Heuristic, budget);
  CompressedTree ct = compress(st, da);
  out.d = ct.height;
  out.g = std::max(2, ct.graph.maxDegree());
  return out;
}

}  // namespace

double knabe_general(double minStarGap) {
  check_unit_range(minStarGap, "star gap");
  return 2.0 * (minStarGap - 0.5);
}

double knabe_subsystem_boost(BoostFamily, double gapM, int m, int n) {
  if (m < 3) throw ValidationError("subsystem boost needs m >= 3");
  if (n < m) throw ValidationError("subsystem boost needs n >= m");
  check_unit_range(gapM, "subsystem gap");
  return (gapM * (n - 2) - (n - m)) / static_cast<double>(m - 2);
}

double cg_lower_k2(int n, int q) {
  if (n < 3) throw ValidationError("complete-graph bound needs n >= 3");
  if (q < 2) throw ValidationError("q must be >= 2");
  long long den = static_cast<long long>(q) * q + 1;
  long long num = static_cast<long long>(q - 1) * (q - 1);
  return static_cast<double>(n - 2) * static_cast<double>(num) / den;
}

double exact_small_gap(SmallGap which, int q) {
  if (q < 2) throw ValidationError("q must be >= 2");
  double den = static_cast<double>(q) * q + 1;
  switch (which) {
    case SmallGap::Star3:
      return (static_cast<double>(q) * q - q + 1) / den;
    case SmallGap::Star4: {
      double q2 = static_cast<double>(q) * q;
      return 1.5 - std::sqrt(q2 * q2 + 18.0 * q2 + 1.0) / (2.0 * den);
    }
    case SmallGap::Cg3:
      return 2.0 * (static_cast<double>(q) * q - q + 1) / den;
  }
  throw ValidationError("unknown small-gap selector");
}

Cg3Diagonalization cg3_basis_diagonalization(int q) {
  if (q < 2) throw ValidationError("q must be >= 2");
  const long long den = static_cast<long long>(q) * q + 1;
  const double x = static_cast<double>(q) / den;

  // Sign pattern of the off-diagonal couplings: vectors {0,2,4} pairwise +x,
  // vectors {1,3,5} pairwise -x.
  Eigen::MatrixXd signs = Eigen::MatrixXd::Zero(6, 6);
  const int plus[3] = {0, 2, 4};
  const int minus[3] = {1, 3, 5};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (a == b) continue;
      signs(plus[a], plus[b]) = 1.0;
      signs(minus[a], minus[b]) = -1.0;
    }
  }

  Cg3Diagonalization out;
  out.overlap = Eigen::MatrixXd::Identity(6, 6) + x * signs;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(out.overlap,
                                                    Eigen::EigenvaluesOnly);
  out.eigenvalues = es.eigenvalues();

  // K = (q^2+1)(X - I)/q has integer entries equal to the sign pattern and
  // spectrum {-2,-1,-1,1,1,2}.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> esK(signs,
                                                     Eigen::EigenvaluesOnly);
  const double expectedK[6] = {-2.0, -1.0, -1.0, 1.0, 1.0, 2.0};
  out.integerEigenDeviation = 0.0;
  for (int i = 0; i < 6; ++i) {
    out.integerEigenDeviation = std::max(
        out.integerEigenDeviation, std::abs(esK.eigenvalues()(i) - expectedK[i]));
  }

  const long long kappa[6] = {-2, -1, -1, 1, 1, 2};
  for (long long kap : kappa) {
    long long num = den + q * kap;
    long long g = std::gcd(num, den);
    out.exactEigenvalues.emplace_back(num / g, den / g);
  }
  out.largest = out.exactEigenvalues.back();
  out.gap = static_cast<double>(2 * (static_cast<long long>(q) * q - q + 1)) /
            static_cast<double>(den);
  return out;
}

double min_degree_upper(const Graph& g) {
  g.validate();
  if (!g.isConnected()) {
    throw ValidationError("min-degree upper bound needs a connected graph");
  }
  return static_cast<double>(g.minDegree());
}

int one_d_block_length(int k, int q, OneDMode mode) {
  if (k < 1) throw ValidationError("k must be >= 1");
  if (q < 2) throw ValidationError("q must be >= 2");
  const double base = (mode == OneDMode::BHH) ? static_cast<double>(q) : 2.0;
  const double v = 2.5 * std::log(4.0 * k) / std::log(base);
  return static_cast<int>(std::ceil(v - 1e-9));
}

double one_d_gap_lower(int n, int k, int q, OneDMode mode) {
  const int ell = one_d_block_length(k, q, mode);
  if (n < ell) {
    std::ostringstream os;
    os << "1D gap lower bound needs n >= block length " << ell
       << " = ceil(2.5 log_" << ((mode == OneDMode::BHH) ? q : 2) << "(4k)), got n = "
       << n;
    throw ValidationError(os.str());
  }
  const double l = static_cast<double>(ell);
  if (mode == OneDMode::BHH) {
    const double base = (static_cast<double>(q) * q + 1) * std::exp(1.0);
    return 1.0 / (4.0 * l) / (l * std::pow(base, l));
  }
  return 1.0 / (4.0 * l) / 120000.0 / (l * l * l * l * std::pow(2.0, 2.0 * l));
}

double dl_chain_lower(int g, int d, double delta1D, ChainMode mode) {
  if (g < 2) throw ValidationError("DL chain needs compressed-tree degree g >= 2");
  if (d < 0) throw ValidationError("DL chain needs depth d >= 0");
  if (!(delta1D > 0.0 && delta1D <= 1.0 + 1e-9)) {
    throw ValidationError("DL chain needs a 1D gap in (0, 1]");
  }
  const double delta = std::min(delta1D, 1.0);
  const double alpha = 4.0 * (g + 1.0) * (g + 1.0);
  if (mode == ChainMode::ClosedForm) {
    if (d == 0) return delta / 16.0;
    return (35.0 / 768.0) * delta / std::pow(alpha, static_cast<double>(d));
  }
  double beta = 1.0 - 1.0 / (1.0 + delta / 4.0);
  for (int i = 2; i <= d + 1; ++i) beta = beta / (alpha + beta);
  return 0.25 * beta;
}

double log_in_base(double x, LogBase base) {
  if (!(x > 0.0)) throw ValidationError("logarithm needs a positive argument");
  return (base == LogBase::Two) ? std::log2(x) : std::log(x);
}

SizeBound size_bound(long long edgeCount, double gap, int n, int k, int q,
                     double epsilon, LogBase base) {
  if (edgeCount < 1) throw ValidationError("size bound needs at least one edge");
  if (!(gap > 0.0)) {
    throw ValidationError("size bound is vacuous for a nonpositive gap");
  }
  if (n < 1) throw ValidationError("size bound needs n >= 1");
  if (k < 1) throw ValidationError("size bound needs k >= 1");
  if (q < 2) throw ValidationError("size bound needs q >= 2");
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw ValidationError("size bound needs epsilon in (0, 1)");
  }
  SizeBound sb;
  sb.gap = gap;
  sb.epsilon = epsilon;
  sb.n = n;
  sb.k = k;
  sb.q = q;
  sb.edgeCount = edgeCount;
  sb.logBase = base;
  sb.mode = (base == LogBase::Two) ? "base2-table" : "generic";
  sb.tau = (static_cast<double>(edgeCount) / gap) *
           (2.0 * n * k * log_in_base(static_cast<double>(q), base) +
            log_in_base(1.0 / epsilon, base));
  return sb;
}

double optimal_size(int n, int k, double epsilon, LogBase base) {
  if (n < 2) throw ValidationError("optimal size needs n >= 2");
  if (k < 1) throw ValidationError("optimal size needs k >= 1");
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw ValidationError("optimal size needs epsilon in (0, 1]");
  }
  return static_cast<double>(n) * n * k * log_in_base(2.0, base) +
         0.5 * n * log_in_base(1.0 / epsilon, base);
}

BoundCertificate bound_report(const Graph& g, int k, int q,
                              const BoundReportOptions& opts) {
  g.validate();
  if (!g.isConnected()) {
    throw ValidationError("bound report needs a connected graph");
  }
  if (g.edgeCount() < 1) {
    throw ValidationError("bound report needs at least one edge");
  }
  if (k < 1) throw ValidationError("k must be >= 1");
  if (q < 2) throw ValidationError("q must be >= 2");
  if (!(opts.epsilon > 0.0 && opts.epsilon < 1.0)) {
    throw ValidationError("bound report needs epsilon in (0, 1)");
  }

  BoundCertificate cert;
  cert.graph = g;
  cert.n = g.n;
  cert.k = k;
  cert.q = q;
  cert.epsilon = opts.epsilon;
  cert.logBase = opts.logBase;

  auto push = [&cert](BoundStep s) -> double {
    cert.steps.push_back(std::move(s));
    return cert.steps.back().output;
  };
  std::vector<std::pair<std::string, double>> candidates;
  auto candidate = [&candidates](const std::string& id, double v) {
    candidates.emplace_back(id, std::max(0.0, v));
  };

  cert.upper = push({"min-degree-upper", "gap <= min vertex degree",
                     {{"n", static_cast<double>(g.n)}},
                     min_degree_upper(g)});

  // Exact special cases.
  if (k == 2) {
    if (is_star_shape(g) && g.n == 3) {
      candidate("exact-star3",
                push({"exact-star3", "gap(star(3)) = 1 - q/(q^2+1)",
                      {{"q", static_cast<double>(q)}},
                      exact_small_gap(SmallGap::Star3, q)}));
    }
    if (is_star_shape(g) && g.n == 4) {
      candidate("exact-star4",
                push({"exact-star4",
                      "gap(star(4)) = 3/2 - sqrt(q^4+18q^2+1)/(2(q^2+1))",
                      {{"q", static_cast<double>(q)}},
                      exact_small_gap(SmallGap::Star4, q)}));
    }
    if (g.isComplete() && g.n == 3) {
      candidate("exact-cg3",
                push({"exact-cg3", "gap(complete(3)) = 2 (1 - q/(q^2+1))",
                      {{"q", static_cast<double>(q)}},
                      exact_small_gap(SmallGap::Cg3, q)}));
    }
    if (g.isComplete() && g.n >= 3) {
      candidate("cg-lower-k2",
                push({"cg-lower-k2", "gap(complete(n)) >= (n-2)(1 - 2q/(q^2+1))",
                      {{"n", static_cast<double>(g.n)},
                       {"q", static_cast<double>(q)}},
                      cg_lower_k2(g.n, q)}));
    }
  }

  auto numeric_gap = [&](const Graph& h, const char* id) -> double {
    ComputeGapOptions go;
    go.tol = opts.tol;
    go.maxIter = opts.maxIter;
    go.seed = opts.seed;
    ComputeGapOutcome out = compute_gap(h, k, q, Representation::Auto, go);
    return push({id,
                 "deterministic eigensolve of the deflated moment Hamiltonian",
                 {{"n", static_cast<double>(h.n)},
                  {"k", static_cast<double>(k)},
                  {"q", static_cast<double>(q)},
                  {"tol", opts.tol},
                  {"maxiter", static_cast<double>(opts.maxIter)},
                  {"seed", static_cast<double>(opts.seed)}},
                 out.result.gap});
  };

  // Knabe branch: star gap at max degree + 1.
  {
    const int nstar = g.maxDegree() + 1;
    double starGap = 0.0;
    bool haveStar = false;
    const long long dim = representation_dim(nstar, k, q);
    if (dim > 0 && dim <= opts.budget) {
      starGap = numeric_gap(star_graph(nstar), "star-gap-numeric");
      haveStar = true;
    } else if (auto ref = star_gap_reference_lookup(k, q, nstar)) {
      starGap = push({"star-gap-table", "embedded reference star gap",
                      {{"n", static_cast<double>(nstar)},
                       {"k", static_cast<double>(k)},
                       {"q", static_cast<double>(q)}},
                      *ref});
      haveStar = true;
    } else {
      int mNumeric = 0;
      for (int m = nstar - 1; m >= 3; --m) {
        const long long dm = representation_dim(m, k, q);
        if (dm > 0 && dm <= opts.budget) {
          mNumeric = m;
          break;
        }
      }
      const int mTable = std::min(star_gap_reference_max_n(k, q), nstar - 1);
      const int m = std::max(mNumeric, mTable);
      if (m >= 3) {
        double gapM;
        if (mTable >= mNumeric) {
          gapM = push({"star-gap-table", "embedded reference star gap",
                       {{"n", static_cast<double>(m)},
                        {"k", static_cast<double>(k)},
                        {"q", static_cast<double>(q)}},
                       *star_gap_reference_lookup(k, q, m)});
        } else {
          gapM = numeric_gap(star_graph(m), "star-gap-numeric");
        }
        starGap = push(
            {"star-boost",
             "gap(n) >= ((n-2)/(m-2)) (gap(m) - (n-m)/(n-2))",
             {{"family", 0.0},
              {"m", static_cast<double>(m)},
              {"n", static_cast<double>(nstar)},
              {"gap_m", gapM}},
             knabe_subsystem_boost(BoostFamily::Star, gapM, m, nstar)});
        starGap = std::max(0.0, starGap);
        haveStar = true;
        cert.degraded = true;
        cert.notes.push_back(
            "star gap beyond numeric budget and reference table; boosted from "
            "the largest available star (large-degree trend is an annotation, "
            "not a bound)");
      } else {
        cert.degraded = true;
        cert.notes.push_back(
            "no star-gap source within budget; Knabe branch skipped");
      }
    }
    if (haveStar) {
      candidate("knabe-any-graph",
                push({"knabe-any-graph", "gap >= 2 (star_gap - 1/2)",
                      {{"star_gap", starGap}},
                      knabe_general(starGap)}));
    }
  }

  // Detectability-lemma chain branch.
  {
    const int root = max_degree_root(g);
    RootedTree st = spanning_tree(g, root);
    bool exact = true;
    ChainShape shape;
    if (st.graph.isPath()) {
      shape = chain_shape(g, root, true, static_cast<std::uint64_t>(opts.budget));
    } else {
      try {
        shape = chain_shape(g, root, true, static_cast<std::uint64_t>(opts.budget));
      } catch (const GuardError&) {
        exact = false;
        shape = chain_shape(g, root, false, static_cast<std::uint64_t>(opts.budget));
        cert.notes.push_back(
            "exact depth budget exceeded; certificate uses an upper-bound depth");
      }
    }
    push({"cst-depth",
          exact ? "spanning-tree depth (exact leaf-path search)"
                : "spanning-tree depth (heuristic upper bound)",
          {{"root", static_cast<double>(root)},
           {"exact", exact ? 1.0 : 0.0},
           {"budget", static_cast<double>(opts.budget)}},
          static_cast<double>(shape.d)});
    push({"cst-max-degree", "max degree of the compressed spanning tree",
          {{"root", static_cast<double>(root)},
           {"exact", exact ? 1.0 : 0.0},
           {"budget", static_cast<double>(opts.budget)}},
          static_cast<double>(shape.g)});

    double delta1d = 0.0;
    bool have1d = false;
    const long long dim1d = representation_dim(g.n, k, q);
    if (dim1d > 0 && dim1d <= opts.budget) {
      delta1d = numeric_gap(path_graph(g.n), "one-d-gap-numeric");
      have1d = true;
    } else {
      cert.degraded = true;
      try {
        const int ell = one_d_block_length(k, q, OneDMode::BHH);
        delta1d = push({"one-d-baseline-bhh",
                        "gap(1D) >= 1/(4l) 1/(l ((q^2+1) e)^l)",
                        {{"n", static_cast<double>(g.n)},
                         {"k", static_cast<double>(k)},
                         {"q", static_cast<double>(q)},
                         {"ell", static_cast<double>(ell)}},
                        one_d_gap_lower(g.n, k, q, OneDMode::BHH)});
        have1d = true;
        cert.notes.push_back(
            "1D gap beyond numeric budget; using the analytic baseline");
      } catch (const ValidationError&) {
        cert.notes.push_back(
            "no 1D baseline available (path too short); DL branch skipped");
      }
    }
    if (have1d && delta1d > 0.0) {
      candidate(
          "dl-chain-closed",
          push({"dl-chain-closed",
                "gap >= (35/768) delta1D / (4 (g+1)^2)^d, d = 0: delta1D/16",
                {{"g", static_cast<double>(shape.g)},
                 {"d", static_cast<double>(shape.d)},
                 {"delta1d", std::min(delta1d, 1.0)}},
                dl_chain_lower(shape.g, shape.d, std::min(delta1d, 1.0),
                               ChainMode::ClosedForm)}));
    }
  }

  // Best lower bound.
  {
    BoundStep best;
    best.id = "best-lower";
    best.anchor = "max over lower-bound branches";
    best.output = 0.0;
    for (const auto& c : candidates) {
      best.inputs.push_back(c);
      best.output = std::max(best.output, c.second);
    }
    if (candidates.empty()) {
      cert.notes.push_back("no lower-bound branch available; trivial bound 0");
    }
    cert.lower = push(std::move(best));
  }

  if (cert.lower > 0.0) {
    SizeBound sb = size_bound(g.edgeCount(), cert.lower, g.n, k, q,
                              opts.epsilon, opts.logBase);
    push({"size-bound", "tau = (|E|/gap) (2 n k log(q) + log(1/eps))",
          {{"edges", static_cast<double>(g.edgeCount())},
           {"gap", cert.lower},
           {"n", static_cast<double>(g.n)},
           {"k", static_cast<double>(k)},
           {"q", static_cast<double>(q)},
           {"epsilon", opts.epsilon},
           {"base2", (opts.logBase == LogBase::Two) ? 1.0 : 0.0}},
          sb.tau});
    cert.size = sb;
  } else {
    cert.notes.push_back("lower bound is vacuous; size bound omitted");
  }
  return cert;
}

namespace {

double recompute_step(const BoundCertificate& cert, const BoundStep& s) {
  if (s.id == "min-degree-upper") {
    return min_degree_upper(cert.graph);
  }
  if (s.id == "exact-star3") {
    return exact_small_gap(SmallGap::Star3, static_cast<int>(step_input(s, "q")));
  }
  if (s.id == "exact-star4") {
    return exact_small_gap(SmallGap::Star4, static_cast<int>(step_input(s, "q")));
  }
  if (s.id == "exact-cg3") {
    return exact_small_gap(SmallGap::Cg3, static_cast<int>(step_input(s, "q")));
  }
  if (s.id == "cg-lower-k2") {
    return cg_lower_k2(static_cast<int>(step_input(s, "n")),
                       static_cast<int>(step_input(s, "q")));
  }
  if (s.id == "star-gap-numeric" || s.id == "one-d-gap-numeric") {
    const int n = static_cast<int>(step_input(s, "n"));
    const int k = static_cast<int>(step_input(s, "k"));
    const int q = static_cast<int>(step_input(s, "q"));
    const Graph h =
        (s.id == "star-gap-numeric") ? star_graph(n) : path_graph(n);
    return compute_gap(h, k, q, Representation::Auto, replay_options(s))
        .result.gap;
  }
  if (s.id == "star-gap-table") {
    auto ref = star_gap_reference_lookup(static_cast<int>(step_input(s, "k")),
                                         static_cast<int>(step_input(s, "q")),
                                         static_cast<int>(step_input(s, "n")));
    if (!ref) throw ValidationError("reference table has no such star gap");
    return *ref;
  }
  if (s.id == "star-boost") {
    const BoostFamily family = (step_input(s, "family") == 0.0)
                                   ? BoostFamily::Star
                                   : BoostFamily::Complete;
    return knabe_subsystem_boost(family, step_input(s, "gap_m"),
                                 static_cast<int>(step_input(s, "m")),
                                 static_cast<int>(step_input(s, "n")));
  }
  if (s.id == "knabe-any-graph") {
    return knabe_general(step_input(s, "star_gap"));
  }
  if (s.id == "one-d-baseline-bhh" || s.id == "one-d-baseline-prime-power") {
    const OneDMode mode = (s.id == "one-d-baseline-bhh") ? OneDMode::BHH
                                                         : OneDMode::PrimePower;
    return one_d_gap_lower(static_cast<int>(step_input(s, "n")),
                           static_cast<int>(step_input(s, "k")),
                           static_cast<int>(step_input(s, "q")), mode);
  }
  if (s.id == "dl-chain-closed" || s.id == "dl-chain-beta") {
    const ChainMode mode = (s.id == "dl-chain-closed") ? ChainMode::ClosedForm
                                                       : ChainMode::BetaRecursion;
    return dl_chain_lower(static_cast<int>(step_input(s, "g")),
                          static_cast<int>(step_input(s, "d")),
                          step_input(s, "delta1d"), mode);
  }
  if (s.id == "cst-depth" || s.id == "cst-max-degree") {
    const ChainShape shape = chain_shape(
        cert.graph, static_cast<int>(step_input(s, "root")),
        step_input(s, "exact") != 0.0,
        static_cast<std::uint64_t>(step_input(s, "budget")));
    return static_cast<double>((s.id == "cst-depth") ? shape.d : shape.g);
  }
  if (s.id == "best-lower") {
    double best = 0.0;
    for (const auto& kv : s.inputs) best = std::max(best, kv.second);
    return best;
  }
  if (s.id == "size-bound") {
    const LogBase base =
        (step_input(s, "base2") != 0.0) ? LogBase::Two : LogBase::E;
    return size_bound(static_cast<long long>(step_input(s, "edges")),
                      step_input(s, "gap"), static_cast<int>(step_input(s, "n")),
                      static_cast<int>(step_input(s, "k")),
                      static_cast<int>(step_input(s, "q")),
                      step_input(s, "epsilon"), base)
        .tau;
  }
  throw ValidationError("unknown certificate step id: " + s.id);
}

}  // namespace

VerifyReport verify_certificate(const BoundCertificate& cert, double relTol) {
  VerifyReport rep;
  rep.ok = true;
  for (const BoundStep& s : cert.steps) {
    VerifyStepResult r;
    r.id = s.id;
    r.expected = s.output;
    try {
      r.recomputed = recompute_step(cert, s);
      r.relError = std::abs(r.recomputed - r.expected) /
                   std::max(1.0, std::abs(r.expected));
      r.ok = r.relError <= relTol;
    } catch (const std::exception& e) {
      r.ok = false;
      r.note = e.what();
    }
    if (!r.ok) rep.ok = false;
    rep.steps.push_back(std::move(r));
  }
  return rep;
}

}  // namespace momentgap

// momentgap_cli.cpp -- command-line front end: gap, table, depth, size,
// bounds, verify. Exit codes: 0 success, 2 validation, 3 guard/budget,
// 4 convergence; verify suites exit 1 on failed checks.
#include <Eigen/Core>
#include <algorithm>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "momentgap/bounds.hpp"
#include "momentgap/common.hpp"
#include "momentgap/effective.hpp"
#include "momentgap/graph.hpp"
#include "momentgap/operators.hpp"
#include "momentgap/permsym.hpp"
#include "momentgap/semiclassical.hpp"
#include "momentgap/spectra.hpp"
#include "momentgap/tables.hpp"

using nlohmann::ordered_json;
using namespace momentgap;

namespace {

struct Args {
  std::string graph;
  int k = 2;
  int q = 2;
  double eps = 1e-6;
  double tol = 1e-8;
  std::uint64_t seed = kDefaultSeed;
  int threads = 1;
  int maxIter = 5000;
  long long budget = 1000000;
  std::string method = "auto";
  std::string logBase = "e";
  std::string out = "json";
  bool exact = false;
  std::string root = "0";
  // table
  std::string which;
  int nMin = 3;
  int nMax = 14;
  std::vector<int> qs;
  // verify
  std::string suite;
  int pathLen = 3;
  int samples = 5;
  int orderings = 10;
};

void echo_header(const std::string& cmd, const Args& a) {
  std::cerr << "# momentgap " << kVersion << " | " << cmd;
  if (!a.graph.empty()) std::cerr << " graph=" << a.graph;
  std::cerr << " k=" << a.k << " q=" << a.q << " seed=" << a.seed
            << " tol=" << format_double(a.tol) << " threads=" << a.threads
            << "\n";
}

Representation parse_method(const std::string& m, int k) {
  if (m == "auto") return Representation::Auto;
  if (m == "full") return Representation::Full;
  if (m == "effective") {
    return (k == 2) ? Representation::EffectiveK2 : Representation::EffectiveQR;
  }
  if (m == "qr") return Representation::EffectiveQR;
  throw ValidationError("unknown --method: " + m);
}

LogBase parse_base(const std::string& b) {
  if (b == "e") return LogBase::E;
  if (b == "2") return LogBase::Two;
  throw ValidationError("unknown --log-base: " + b);
}

int parse_root(const std::string& r, const std::string& spec, const Graph& g) {
  if (r == "center") return center_vertex(spec, g);
  int v = 0;
  try {
    size_t pos = 0;
    v = std::stoi(r, &pos);
    if (pos != r.size()) throw std::invalid_argument(r);
  } catch (const std::exception&) {
    throw ValidationError("--root must be a vertex id or 'center', got " + r);
  }
  if (v < 0 || v >= g.n) {
    throw ValidationError("--root out of range for a graph on " +
                          std::to_string(g.n) + " vertices");
  }
  return v;
}

std::string csv_double(double x) { return format_double(x); }

int cmd_gap(const Args& a) {
  Graph g = parse_graph_spec(a.graph);
  ComputeGapOptions opts;
  opts.tol = a.tol;
  opts.maxIter = a.maxIter;
  opts.seed = a.seed;
  ComputeGapOutcome out =
      compute_gap(g, a.k, a.q, parse_method(a.method, a.k), opts);
  if (a.out == "csv") {
    std::cout << "gap,ground_dim,method,residual,iterations,seed,"
                 "representation,dim\n";
    std::cout << csv_double(out.result.gap) << ',' << out.result.groundDim
              << ',' << out.result.method << ','
              << csv_double(out.result.residual) << ','
              << out.result.iterations << ',' << out.result.seed << ','
              << out.representation << ',' << out.dim << "\n";
    return 0;
  }
  ordered_json j;
  j["gap"] = out.result.gap;
  j["groundDim"] = static_cast<long long>(out.result.groundDim);
  j["method"] = out.result.method;
  j["residual"] = out.result.residual;
  j["iterations"] = out.result.iterations;
  j["seed"] = out.result.seed;
  j["representation"] = out.representation;
  j["dim"] = static_cast<long long>(out.dim);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_table(const Args& a) {
  const bool csv = (a.out != "json");
  std::ostream& os = std::cout;
  if (a.which == "star-gaps") {
    ComputeGapOptions opts;
    opts.tol = a.tol;
    opts.maxIter = a.maxIter;
    opts.seed = a.seed;
    std::vector<int> qs = a.qs.empty() ? std::vector<int>{2, 3, 4} : a.qs;
    auto rows = star_gap_table(a.k, qs, a.nMin, a.nMax, a.budget, opts);
    if (csv) {
      os << "k,q,nstar,computed,reference,deviation,flag\n";
      for (const auto& r : rows) {
        os << r.k << ',' << r.q << ',' << r.nstar << ',';
        if (!r.skipped) os << csv_double(r.computed);
        os << ',';
        if (r.reference) os << csv_double(*r.reference);
        os << ',';
        if (!r.skipped && r.reference) os << csv_double(r.deviation);
        os << ',' << (r.skipped ? "skipped" : "") << "\n";
      }
    } else {
      ordered_json arr = ordered_json::array();
      for (const auto& r : rows) {
        ordered_json j;
        j["k"] = r.k;
        j["q"] = r.q;
        j["nstar"] = r.nstar;
        j["computed"] = r.skipped ? ordered_json(nullptr) : ordered_json(r.computed);
        j["reference"] =
            r.reference ? ordered_json(*r.reference) : ordered_json(nullptr);
        j["deviation"] = (!r.skipped && r.reference) ? ordered_json(r.deviation)
                                                     : ordered_json(nullptr);
        j["skipped"] = r.skipped;
        arr.push_back(j);
      }
      os << arr.dump(2) << "\n";
    }
    return 0;
  }
  if (a.which == "any-g") {
    auto rows = any_graph_table();
    if (csv) {
      os << "k,nstar,star_gap,lower_computed,lower_reference,deviation\n";
      for (const auto& r : rows) {
        os << r.k << ',' << r.nstar << ',' << csv_double(r.starGap) << ','
           << csv_double(r.computed) << ',' << csv_double(r.reference) << ','
           << csv_double(r.deviation) << "\n";
      }
    } else {
      ordered_json arr = ordered_json::array();
      for (const auto& r : rows) {
        arr.push_back({{"k", r.k},
                       {"nstar", r.nstar},
                       {"star_gap", r.starGap},
                       {"lower_computed", r.computed},
                       {"lower_reference", r.reference},
                       {"deviation", r.deviation}});
      }
      os << arr.dump(2) << "\n";
    }
    return 0;
  }
  if (a.which == "boosted") {
    auto rows = boosted_table();
    if (csv) {
      os << "k,mstar,gap_m,n,boosted_computed,boosted_reference,"
            "boosted_deviation,lower_computed,lower_reference,"
            "lower_deviation\n";
      for (const auto& r : rows) {
        os << r.k << ',' << r.mstar << ',' << csv_double(r.gapM) << ',' << r.n
           << ',' << csv_double(r.boostedComputed) << ','
           << csv_double(r.boostedReference) << ','
           << csv_double(r.boostedDeviation) << ','
           << csv_double(r.lowerComputed) << ','
           << csv_double(r.lowerReference) << ','
           << csv_double(r.lowerDeviation) << "\n";
      }
    } else {
      ordered_json arr = ordered_json::array();
      for (const auto& r : rows) {
        arr.push_back({{"k", r.k},
                       {"mstar", r.mstar},
                       {"gap_m", r.gapM},
                       {"n", r.n},
                       {"boosted_computed", r.boostedComputed},
                       {"boosted_reference", r.boostedReference},
                       {"boosted_deviation", r.boostedDeviation},
                       {"lower_computed", r.lowerComputed},
                       {"lower_reference", r.lowerReference},
                       {"lower_deviation", r.lowerDeviation}});
      }
      os << arr.dump(2) << "\n";
    }
    return 0;
  }
  if (a.which == "size-table") {
    auto rows = size_table();
    if (csv) {
      os << "k,kappa,site_factor,gap_lower,coefficient_computed,"
            "coefficient_reference,degree_caveat\n";
      for (const auto& r : rows) {
        os << r.k << ',' << r.kappa << ',' << r.siteFactor << ','
           << csv_double(r.gapLower) << ','
           << csv_double(r.coefficientComputed) << ','
           << csv_double(r.coefficientReference) << ','
           << (r.degreeCaveat ? 1 : 0) << "\n";
      }
    } else {
      ordered_json arr = ordered_json::array();
      for (const auto& r : rows) {
        arr.push_back({{"k", r.k},
                       {"kappa", r.kappa},
                       {"site_factor", r.siteFactor},
                       {"gap_lower", r.gapLower},
                       {"coefficient_computed", r.coefficientComputed},
                       {"coefficient_reference", r.coefficientReference},
                       {"degree_caveat", r.degreeCaveat}});
      }
      os << arr.dump(2) << "\n";
    }
    return 0;
  }
  throw ValidationError(
      "unknown table: " + a.which +
      " (expected star-gaps|any-g|boosted|size-table)");
}

int cmd_depth(const Args& a) {
  Graph g = parse_graph_spec(a.graph);
  const int root = parse_root(a.root, a.graph, g);
  RootedTree st = spanning_tree(g, root);
  DepthAssignment da = tree_depth(
      st, a.exact ? DepthMode::Exact : DepthMode::Heuristic,
      static_cast<std::uint64_t>(a.budget));
  ordered_json j;
  j["graph"] = a.graph;
  j["n"] = g.n;
  j["root"] = root;
  j["mode"] = (da.mode == DepthMode::Exact) ? "exact" : "heuristic";
  j["depth"] = da.depth;
  j["depthUpperBound"] = depth_upper_bound(g.n);
  j["labels"] = da.labels;
  std::cout << j.dump(2) << "\n";
  return 0;
}

BoundReportOptions report_options(const Args& a) {
  BoundReportOptions opts;
  opts.epsilon = a.eps;
  opts.logBase = parse_base(a.logBase);
  opts.budget = a.budget;
  opts.tol = a.tol;
  opts.maxIter = a.maxIter;
  opts.seed = a.seed;
  return opts;
}

ordered_json size_json(const SizeBound& sb) {
  ordered_json j;
  j["tau"] = sb.tau;
  j["gap"] = sb.gap;
  j["epsilon"] = sb.epsilon;
  j["n"] = sb.n;
  j["k"] = sb.k;
  j["q"] = sb.q;
  j["edges"] = sb.edgeCount;
  j["logBase"] = (sb.logBase == LogBase::Two) ? "2" : "e";
  j["mode"] = sb.mode;
  return j;
}

int cmd_size(const Args& a) {
  Graph g = parse_graph_spec(a.graph);
  BoundCertificate cert = bound_report(g, a.k, a.q, report_options(a));
  if (!cert.size) {
    throw ValidationError(
        "the best lower bound is vacuous; no size bound follows");
  }
  std::cout << size_json(*cert.size).dump(2) << "\n";
  return 0;
}

int cmd_bounds(const Args& a) {
  Graph g = parse_graph_spec(a.graph);
  BoundCertificate cert = bound_report(g, a.k, a.q, report_options(a));
  cert.graphSpec = a.graph;
  ordered_json j;
  j["target"] = {{"graph", cert.graphSpec},
                 {"n", cert.n},
                 {"k", cert.k},
                 {"q", cert.q},
                 {"edges", cert.graph.edgeCount()},
                 {"epsilon", cert.epsilon},
                 {"logBase", (cert.logBase == LogBase::Two) ? "2" : "e"}};
  ordered_json steps = ordered_json::array();
  for (const BoundStep& s : cert.steps) {
    ordered_json inputs;
    for (const auto& kv : s.inputs) inputs[kv.first] = kv.second;
    steps.push_back({{"id", s.id},
                     {"anchor", s.anchor},
                     {"inputs", inputs},
                     {"output", s.output}});
  }
  j["steps"] = steps;
  j["lower"] = cert.lower;
  j["upper"] = cert.upper;
  j["tau"] = cert.size ? ordered_json(cert.size->tau) : ordered_json(nullptr);
  j["degraded"] = cert.degraded;
  j["notes"] = cert.notes;
  std::cout << j.dump(2) << "\n";
  return 0;
}

struct SuiteReport {
  int passed = 0;
  int failed = 0;
  void check(const std::string& name, double deviation, double tol) {
    const bool ok = deviation <= tol;
    std::cout << name << " deviation=" << format_double(deviation)
              << (ok ? " PASS" : " FAIL") << "\n";
    ok ? ++passed : ++failed;
  }
  void flag(const std::string& name, bool ok) {
    std::cout << name << (ok ? " PASS" : " FAIL") << "\n";
    ok ? ++passed : ++failed;
  }
  int finish(const std::string& suite) const {
    std::cout << "[" << suite << "] " << passed << "/" << (passed + failed)
              << " checks passed\n";
    return failed == 0 ? 0 : 1;
  }
};

int verify_haar(const Args& a) {
  SuiteReport rep;
  const std::pair<int, int> pairs[] = {{1, 2}, {1, 3}, {2, 2},
                                       {2, 3}, {3, 2}, {4, 2}};
  for (auto [k, q] : pairs) {
    const Eigen::Index dim = ipow(static_cast<std::int64_t>(q), 4 * k);
    HaarProjector proj = haar_projector(k, q);
    std::ostringstream tag;
    tag << "[haar] k=" << k << " q=" << q << " ";

    std::mt19937_64 rng(a.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto random_vec = [&]() {
      Eigen::VectorXd x(dim);
      for (Eigen::Index i = 0; i < dim; ++i) x(i) = gauss(rng);
      return x;
    };

    double idem = 0.0, herm = 0.0, swap = 0.0;
    LinearOperator swapOp =
        site_permutation_operator(2, proj.siteDim, {1, 0});
    for (int t = 0; t < 4; ++t) {
      Eigen::VectorXd x = random_vec();
      Eigen::VectorXd y = random_vec();
      Eigen::VectorXd px(dim), ppx(dim), py(dim), sx(dim), psx(dim), spx(dim);
      proj.apply(x, px);
      proj.apply(px, ppx);
      idem = std::max(idem, (ppx - px).lpNorm<Eigen::Infinity>());
      proj.apply(y, py);
      herm = std::max(herm, std::abs(y.dot(px) - py.dot(x)));
      swapOp.matvec(x, sx);
      proj.apply(sx, psx);
      swapOp.matvec(px, spx);
      swap = std::max(swap, (psx - px).lpNorm<Eigen::Infinity>());
      swap = std::max(swap, (spx - px).lpNorm<Eigen::Infinity>());
    }
    rep.check(tag.str() + "idempotence", idem, 1e-12);
    rep.check(tag.str() + "hermiticity", herm, 1e-12);
    rep.check(tag.str() + "swap-invariance", swap, 1e-12);

    double fix = 0.0;
    for (const Perm& sigma : symmetric_group(k)) {
      Eigen::VectorXd v = perm_vector(sigma, q);
      Eigen::VectorXd x(dim);
      for (Eigen::Index i = 0; i < proj.siteDim; ++i) {
        x.segment(i * proj.siteDim, proj.siteDim) = v(i) * v;
      }
      Eigen::VectorXd px(dim);
      proj.apply(x, px);
      fix = std::max(fix, (px - x).lpNorm<Eigen::Infinity>());
    }
    rep.check(tag.str() + "permutation-fixing", fix, 1e-12);

    if (dim <= (1 << 13)) {
      Eigen::MatrixXd oracle = haar_projector_oracle(k, q);
      HaarProjector densed = haar_projector(k, q, dim);
      const double dev =
          (densed.dense - oracle).cwiseAbs().maxCoeff();
      rep.check(tag.str() + "oracle-equality", dev, 1e-12);
    }
  }
  return rep.finish("haar");
}

int verify_compression(const Args& a) {
  SuiteReport rep;
  const std::pair<CompressionLemma, const char*> lemmas[] = {
      {CompressionLemma::PathToStar, "path-to-star"},
      {CompressionLemma::StarToPathRight, "star-to-path-right"},
      {CompressionLemma::StarToPathLeft, "star-to-path-left"}};
  for (const auto& [which, name] : lemmas) {
    IdentityCheckResult r =
        verify_compression_identity(which, a.pathLen, a.k, a.q, a.seed);
    std::ostringstream tag;
    tag << "[compression] " << name << " len=" << a.pathLen << " (" << r.method
        << ")";
    rep.check(tag.str(), r.deviation, 1e-12);
  }
  return rep.finish("compression");
}

int verify_dl(const Args& a) {
  SuiteReport rep;
  const std::pair<std::string, Graph> instances[] = {
      {"path:4", path_graph(4)},
      {"star:4", star_graph(4)},
      {"complete:4", complete_graph(4)},
      {"grid:2x2", grid_graph(2, 2)}};
  for (const auto& [name, g] : instances) {
    ComputeGapOptions gopts;
    gopts.tol = a.tol;
    gopts.seed = a.seed;
    const double gap = compute_gap(g, a.k, a.q, Representation::Auto, gopts)
                           .result.gap;
    HamiltonianSpec spec{g, a.k, a.q};
    auto ordering = g.sortedEdges();
    std::mt19937_64 rng(a.seed);
    bool dlOk = true, qubOk = true;
    double worstDl = 0.0, worstQub = 1.0;
    for (int t = 0; t < a.orderings; ++t) {
      if (t > 0) std::shuffle(ordering.begin(), ordering.end(), rng);
      DlCheckResult r =
          dl_qub_check(spec, ordering, gap, a.samples, a.seed + t);
      dlOk = dlOk && r.dlHolds;
      qubOk = qubOk && r.qubHolds;
      worstDl = std::max(worstDl, r.maxNormSq - r.dlBound);
      worstQub = std::min(worstQub, r.minNormSq - r.qubBound);
    }
    rep.flag("[dl] " + name + " detectability (max excess " +
                 format_double(worstDl) + ")",
             dlOk);
    rep.flag("[dl] " + name + " union bound (min margin " +
                 format_double(worstQub) + ")",
             qubOk);
  }
  return rep.finish("dl");
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<std::pair<int, int>> all;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  }
  std::vector<Graph> out;
  const int m = static_cast<int>(all.size());
  for (int mask = 1; mask < (1 << m); ++mask) {
    Graph g;
    g.n = n;
    for (int e = 0; e < m; ++e) {
      if (mask & (1 << e)) g.edges.push_back(all[e]);
    }
    if (g.isConnected()) out.push_back(g);
  }
  return out;
}

int verify_oracle(const Args& a) {
  SuiteReport rep;
  const struct {
    int k;
    double tol;
  } rounds[] = {{2, 1e-8}, {3, 1e-7}};
  for (const auto& round : rounds) {
    int idx = 0;
    for (const Graph& g : connected_graphs(3)) {
      ComputeGapOptions opts;
      opts.seed = a.seed;
      const double full =
          compute_gap(g, round.k, 2, Representation::Full, opts).result.gap;
      const double eff =
          compute_gap(g, round.k, 2, Representation::Auto, opts).result.gap;
      std::ostringstream tag;
      tag << "[oracle] n=3 k=" << round.k << " graph#" << idx++
          << " full-vs-effective";
      rep.check(tag.str(), std::abs(full - eff), round.tol);
    }
  }
  return rep.finish("oracle");
}

int cmd_verify(const Args& a) {
  if (a.suite == "haar") return verify_haar(a);
  if (a.suite == "compression") return verify_compression(a);
  if (a.suite == "dl") return verify_dl(a);
  if (a.suite == "oracle") return verify_oracle(a);
  throw ValidationError("unknown suite: " + a.suite +
                        " (expected haar|dl|compression|oracle)");
}

int error_json(const char* type, const std::string& message, int code) {
  ordered_json j;
  j["error"] = {{"type", type}, {"message", message}};
  std::cout << j.dump(2) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"moment-Hamiltonian spectral gaps, bounds, and certificates"};
  app.require_subcommand(1);
  Args a;

  auto add_common = [&a](CLI::App* cmd, bool needsGraph) {
    if (needsGraph) {
      cmd->add_option("--graph", a.graph,
                      "graph spec: star:5, path:8, complete:4, grid:3x3, "
                      "y:5,5,5, file:PATH")
          ->required();
    }
    cmd->add_option("--k", a.k, "moment order");
    cmd->add_option("--q", a.q, "local dimension");
    cmd->add_option("--tol", a.tol, "solver tolerance");
    cmd->add_option("--seed", a.seed, "random seed");
    cmd->add_option("--threads", a.threads, "Eigen thread count");
    cmd->add_option("--max-iter", a.maxIter, "solver iteration cap");
    cmd->add_option("--budget", a.budget, "state/dimension budget");
    cmd->add_option("--out", a.out, "output format: json|csv");
  };

  CLI::App* gap = app.add_subcommand("gap", "spectral gap of H(G, n, k)");
  add_common(gap, true);
  gap->add_option("--method", a.method, "representation: full|effective|qr");

  CLI::App* table = app.add_subcommand("table", "reproduce reference tables");
  table->add_option("which", a.which,
                    "star-gaps|any-g|boosted|size-table")
      ->required();
  add_common(table, false);
  table->add_option("--n-min", a.nMin, "smallest star size");
  table->add_option("--n-max", a.nMax, "largest star size");
  table->add_option("--q-list", a.qs, "local dimensions for star-gaps");
  a.out = "json";

  CLI::App* depth = app.add_subcommand("depth", "spanning-tree depth");
  add_common(depth, true);
  depth->add_option("--root", a.root, "root vertex id or 'center'");
  depth->add_flag("--exact", a.exact, "exhaustive depth search");

  CLI::App* size = app.add_subcommand("size", "circuit-size bound");
  add_common(size, true);
  size->add_option("--eps", a.eps, "design accuracy epsilon");
  size->add_option("--log-base", a.logBase, "logarithm base: e|2");

  CLI::App* bounds = app.add_subcommand("bounds", "bound certificate");
  add_common(bounds, true);
  bounds->add_option("--eps", a.eps, "design accuracy epsilon");
  bounds->add_option("--log-base", a.logBase, "logarithm base: e|2");

  CLI::App* verify = app.add_subcommand("verify", "invariant suites");
  verify->add_option("suite", a.suite, "haar|dl|compression|oracle")
      ->required();
  add_common(verify, false);
  verify->add_option("--path-len", a.pathLen, "compression path length");
  verify->add_option("--samples", a.samples, "excited samples per ordering");
  verify->add_option("--orderings", a.orderings, "orderings per instance");

  // Table output defaults to CSV; everything else to JSON.
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n";
    return error_json("validation", e.what(), 2);
  }

  if (table->parsed() && table->get_option("--out")->count() == 0) {
    a.out = "csv";
  }
  if (a.out != "json" && a.out != "csv") {
    return error_json("validation", "unknown --out: " + a.out, 2);
  }
  if (a.threads < 1) {
    return error_json("validation", "--threads must be positive", 2);
  }
  Eigen::setNbThreads(a.threads);

  try {
    if (gap->parsed()) {
      echo_header("gap", a);
      return cmd_gap(a);
    }
    if (table->parsed()) {
      echo_header("table " + a.which, a);
      return cmd_table(a);
    }
    if (depth->parsed()) {
      echo_header("depth", a);
      return cmd_depth(a);
    }
    if (size->parsed()) {
      echo_header("size", a);
      return cmd_size(a);
    }
    if (bounds->parsed()) {
      echo_header("bounds", a);
      return cmd_bounds(a);
    }
    if (verify->parsed()) {
      echo_header("verify " + a.suite, a);
      return cmd_verify(a);
    }
  } catch (const ValidationError& e) {
    return error_json("validation", e.what(), 2);
  } catch (const GuardError& e) {
    return error_json("guard", e.what(), 3);
  } catch (const ConvergenceError& e) {
    return error_json("convergence", e.what(), 4);
  } catch (const std::exception& e) {
    return error_json("internal", e.what(), 1);
  }
  return 0;
}

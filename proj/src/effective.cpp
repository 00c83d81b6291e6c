// effective.cpp -- symmetry-projected models and the star spin cross-check.
#include "momentgap/effective.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "momentgap/common.hpp"
#include "momentgap/permsym.hpp"

namespace momentgap {
namespace {

// siteCoeff and localTerm from G-orthonormal coefficient columns r
// (k! x rank, r^T Gram r = I): siteCoeff = r^T Gram, and the two-site
// projector image is S Wg S^T with S[(a,b)][sigma] = sc(a,s) sc(b,s).
EffectiveModel model_from_coefficients(int k, int q, const Eigen::MatrixXd& r) {
  EffectiveModel m;
  m.k = k;
  m.q = q;
  m.perSiteDim = r.cols();
  Eigen::MatrixXd gram = gram_matrix(k, double(q));
  m.siteCoeff = r.transpose() * gram;
  Eigen::Index p = m.perSiteDim;
  Eigen::Index kfac = gram.rows();
  Eigen::MatrixXd s(p * p, kfac);
  for (Eigen::Index sig = 0; sig < kfac; ++sig)
    for (Eigen::Index a = 0; a < p; ++a)
      for (Eigen::Index b = 0; b < p; ++b)
        s(a * p + b, sig) = m.siteCoeff(a, sig) * m.siteCoeff(b, sig);
  Eigen::MatrixXd wg = weingarten(k, double(q) * q);
  m.localTerm = Eigen::MatrixXd::Identity(p * p, p * p) - s * wg * s.transpose();
  return m;
}

std::vector<Eigen::Index> site_strides(int n, Eigen::Index siteDim) {
  std::vector<Eigen::Index> stride(static_cast<size_t>(n));
  Eigen::Index s = 1;
  for (int site = n - 1; site >= 0; --site) {
    stride[static_cast<size_t>(site)] = s;
    s *= siteDim;
  }
  return stride;
}

template <class F>
void for_each_base(Eigen::Index siteDim,
                   const std::vector<Eigen::Index>& otherStride, F&& f) {
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

}  // namespace

EffectiveModel build_k2_model(int q) {
  if (q < 2) throw ValidationError("effective model needs q >= 2");
  // vec(P+-) = (|id> +- |swap>)/2, normalized by sqrt(tr P+-) = sqrt(q(q-+1)/2).
  double np = std::sqrt(q * (q + 1) / 2.0);
  double nm = std::sqrt(q * (q - 1) / 2.0);
  Eigen::MatrixXd r(2, 2);
  r(0, 0) = 0.5 / np;
  r(1, 0) = 0.5 / np;
  r(0, 1) = 0.5 / nm;
  r(1, 1) = -0.5 / nm;
  return model_from_coefficients(2, q, r);
}

EffectiveModel build_qr_model(int k, int q) {
  if (k > 4) throw GuardError("effective models support k <= 4");
  if (k < 2)
    throw ValidationError(
        "k=1 has a one-dimensional site space with no excited states; use the "
        "full representation");
  if (q < 2) throw ValidationError("effective model needs q >= 2");
  Eigen::MatrixXd gram = gram_matrix(k, double(q));
  Eigen::Index kfac = gram.rows();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  double cutoff = 1e-10 * es.eigenvalues().cwiseAbs().maxCoeff();
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < kfac; ++i)
    if (es.eigenvalues()[i] > cutoff) ++rank;
  // Columns v/sqrt(lambda) satisfy r^T Gram r = I and span range(Gram).
  Eigen::MatrixXd r(kfac, rank);
  Eigen::Index col = 0;
  for (Eigen::Index i = 0; i < kfac; ++i)
    if (es.eigenvalues()[i] > cutoff)
      r.col(col++) = es.eigenvectors().col(i) / std::sqrt(es.eigenvalues()[i]);
  return model_from_coefficients(k, q, r);
}

LinearOperator assemble_effective(const Graph& g, const EffectiveModel& model) {
  g.validate();
  if (model.perSiteDim < 2)
    throw ValidationError("effective model has no excited site states");
  Eigen::Index p = model.perSiteDim;
  Eigen::Index dim =
      ipow_checked(p, g.n, Eigen::Index(1) << 24, "effective Hamiltonian");
  auto stride = site_strides(g.n, p);
  struct EdgePlan {
    Eigen::Index su, sv;
    std::vector<Eigen::Index> otherStride;
  };
  auto plans = std::make_shared<std::vector<EdgePlan>>();
  for (auto [u, v] : g.sortedEdges()) {
    EdgePlan pl;
    pl.su = stride[static_cast<size_t>(u)];
    pl.sv = stride[static_cast<size_t>(v)];
    for (int s = 0; s < g.n; ++s)
      if (s != u && s != v) pl.otherStride.push_back(stride[static_cast<size_t>(s)]);
    plans->push_back(std::move(pl));
  }
  auto term = std::make_shared<Eigen::MatrixXd>(model.localTerm);
  LinearOperator op;
  op.dim = dim;
  op.description = "effective Hamiltonian, n=" + std::to_string(g.n) +
                   " k=" + std::to_string(model.k) +
                   " q=" + std::to_string(model.q);
  op.matvecFn = [plans, term, p](const Eigen::Ref<const Eigen::VectorXd>& x,
                                 Eigen::Ref<Eigen::VectorXd> y) {
    y.setZero();
    Eigen::VectorXd buf(p * p), out(p * p);
    for (const auto& pl : *plans) {
      for_each_base(p, pl.otherStride, [&](Eigen::Index base) {
        for (Eigen::Index a = 0; a < p; ++a) {
          Eigen::Index row = base + a * pl.su;
          for (Eigen::Index b = 0; b < p; ++b)
            buf[a * p + b] = x[row + b * pl.sv];
        }
        out.noalias() = (*term) * buf;
        for (Eigen::Index a = 0; a < p; ++a) {
          Eigen::Index row = base + a * pl.su;
          for (Eigen::Index b = 0; b < p; ++b)
            y[row + b * pl.sv] += out[a * p + b];
        }
      });
    }
  };
  return op;
}

Eigen::MatrixXd effective_ground_basis(int n, const EffectiveModel& model) {
  if (n < 1) throw ValidationError("ground basis needs n >= 1");
  Eigen::Index p = model.perSiteDim;
  Eigen::Index dim =
      ipow_checked(p, n, Eigen::Index(1) << 24, "effective ground basis");
  Eigen::MatrixXd r =
      haar_oracle_coefficients(model.k, std::pow(double(model.q), n));
  Eigen::MatrixXd ground = Eigen::MatrixXd::Zero(dim, r.cols());
  Eigen::Index kfac = r.rows();
  for (Eigen::Index sig = 0; sig < kfac; ++sig) {
    Eigen::VectorXd v = Eigen::VectorXd::Ones(1);
    for (int s = 0; s < n; ++s) {
      Eigen::VectorXd next(v.size() * p);
      for (Eigen::Index i = 0; i < v.size(); ++i)
        next.segment(i * p, p) = v[i] * model.siteCoeff.col(sig);
      v.swap(next);
    }
    ground.noalias() += v * r.row(sig);
  }
  return ground;
}

Eigen::MatrixXd star_spin_hamiltonian(int n, int q) {
  if (n < 2) throw ValidationError("star spin Hamiltonian needs n >= 2");
  if (n > 12)
    throw GuardError("star spin Hamiltonian materializes 2^n x 2^n; n <= 12");
  if (q < 2) throw ValidationError("star spin Hamiltonian needs q >= 2");
  Eigen::Index dim = Eigen::Index(1) << n;
  double q2 = double(q) * q;
  double denom = q2 + 1.0;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  auto bit = [n](Eigen::Index state, int site) {
    return int(state >> (n - 1 - site)) & 1;
  };
  for (Eigen::Index b = 0; b < dim; ++b) {
    double z0 = bit(b, 0) == 0 ? 1.0 : -1.0;
    double sz = 0.0;
    for (int i = 1; i < n; ++i) sz += bit(b, i) == 0 ? 0.5 : -0.5;
    h(b, b) += (n - 1) / 2.0 - (n - 1) * double(q) / (2.0 * denom) * z0 -
               double(q) / denom * sz;
    Eigen::Index mask0 = Eigen::Index(1) << (n - 1);
    for (int i = 1; i < n; ++i) {
      Eigen::Index maski = Eigen::Index(1) << (n - 1 - i);
      Eigen::Index bp = b ^ mask0 ^ maski;
      // sx0 sx_i: amplitude 1; sy0 sy_i: i^2 sign0 sign_i = -sign0 sign_i.
      double sign0 = bit(b, 0) == 0 ? 1.0 : -1.0;
      double signi = bit(b, i) == 0 ? 1.0 : -1.0;
      h(bp, b) += -q2 / (2.0 * denom) + sign0 * signi / (2.0 * denom);
    }
  }
  return h;
}

ComputeGapOutcome compute_gap(const Graph& g, int k, int q, Representation rep,
                              const ComputeGapOptions& opts) {
  g.validate();
  if (k < 1) throw ValidationError("gap computation needs k >= 1");
  if (q < 2) throw ValidationError("gap computation needs q >= 2");
  if (rep == Representation::Auto) {
    if (k == 2)
      rep = Representation::EffectiveK2;
    else if (k >= 3)
      rep = Representation::EffectiveQR;
    else
      rep = Representation::Full;
  }
  GapOptions gopts;
  gopts.tol = opts.tol;
  gopts.maxIter = opts.maxIter;
  gopts.seed = opts.seed;
  gopts.denseLimit = opts.denseLimit;
  double penalty = opts.penalty > 0.0 ? opts.penalty : g.edgeCount() + 1.0;

  ComputeGapOutcome out;
  if (rep == Representation::Full) {
    HamiltonianSpec spec{g, k, q};
    LinearOperator op = assemble_full(spec);
    Eigen::MatrixXd ground = ground_state_basis(g.n, k, q);
    out.result = spectral_gap(op, ground, penalty, gopts);
    out.representation = "full";
    out.dim = op.dim;
    return out;
  }
  EffectiveModel model;
  if (rep == Representation::EffectiveK2) {
    if (k != 2)
      throw ValidationError("the two-level site model is defined for k=2");
    model = build_k2_model(q);
    out.representation = "effective-k2";
  } else {
    model = build_qr_model(k, q);
    out.representation = "effective-qr";
  }
  LinearOperator op = assemble_effective(g, model);
  Eigen::MatrixXd ground = effective_ground_basis(g.n, model);
  out.result = spectral_gap(op, ground, penalty, gopts);
  out.dim = op.dim;
  return out;
}

long long representation_dim(int n, int k, int q) {
  if (n < 1 || k < 1 || q < 2) return -1;
  long long p = 0;
  long long cap = 0;
  if (k == 1) {
    p = static_cast<long long>(q) * q;
    cap = 1LL << 22;
  } else if (k == 2) {
    p = 2;
    cap = 1LL << 24;
  } else if (k <= 4) {
    p = gram_rank(k, static_cast<double>(q));
    cap = 1LL << 24;
  } else {
    return -1;
  }
  long long dim = 1;
  for (int i = 0; i < n; ++i) {
    if (dim > cap / p) return -1;
    dim *= p;
  }
  return dim;
}

}  // namespace momentgap

#include "momentgap/permsym.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_map>

namespace momentgap {

std::vector<Perm> symmetric_group(int k) {
  if (k < 1 || k > 5)
    throw ValidationError("symmetric group supported for 1 <= k <= 5");
  Perm p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

Perm perm_inverse(const Perm& p) {
  Perm inv(p.size());
  for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

int cycle_count(const Perm& p) {
  int k = static_cast<int>(p.size());
  std::vector<char> seen(k, 0);
  int cycles = 0;
  for (int i = 0; i < k; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = p[j]) seen[j] = 1;
  }
  return cycles;
}

Eigen::MatrixXd gram_matrix(int k, double d) {
  if (d < 2) throw ValidationError("gram matrix requires d >= 2");
  auto sk = symmetric_group(k);
  Eigen::Index m = static_cast<Eigen::Index>(sk.size());
  Eigen::MatrixXd g(m, m);
  for (Eigen::Index s = 0; s < m; ++s)
    for (Eigen::Index t = 0; t < m; ++t)
      g(s, t) = std::pow(d, cycle_count(perm_compose(sk[s], perm_inverse(sk[t]))));
  return g;
}

Eigen::MatrixXd pseudo_inverse(const Eigen::MatrixXd& m, double cutoffRel) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  const auto& vals = es.eigenvalues();
  double cutoff = cutoffRel * vals.cwiseAbs().maxCoeff();
  Eigen::VectorXd inv = vals;
  for (Eigen::Index i = 0; i < inv.size(); ++i)
    inv[i] = std::abs(vals[i]) > cutoff ? 1.0 / vals[i] : 0.0;
  return es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
}

Eigen::MatrixXd weingarten(int k, double d) {
  return pseudo_inverse(gram_matrix(k, d));
}

int gram_rank(int k, double d) {
  Eigen::MatrixXd g = gram_matrix(k, d);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
  double cutoff = 1e-10 * es.eigenvalues().cwiseAbs().maxCoeff();
  int r = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (std::abs(es.eigenvalues()[i]) > cutoff) ++r;
  return r;
}

std::vector<Eigen::Index> perm_vector_support(const Perm& sigma, int q) {
  int k = static_cast<int>(sigma.size());
  Eigen::Index qk = ipow(q, k);
  Perm inv = perm_inverse(sigma);
  std::vector<Eigen::Index> out;
  out.reserve(qk);
  std::vector<int> c(k, 0), f(k, 0);
  for (Eigen::Index ci = 0; ci < qk; ++ci) {
    // decode c digits, most significant first
    Eigen::Index rest = ci;
    for (int t = k - 1; t >= 0; --t) {
      c[t] = static_cast<int>(rest % q);
      rest /= q;
    }
    // f_{sigma(t)} = c_t  =>  f_j = c_{sigma^{-1}(j)}
    for (int j = 0; j < k; ++j) f[j] = c[inv[j]];
    Eigen::Index idx = 0;
    for (int t = 0; t < k; ++t) idx = idx * q + f[t];
    for (int t = 0; t < k; ++t) idx = idx * q + c[t];
    out.push_back(idx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Eigen::VectorXd perm_vector(const Perm& sigma, int q) {
  int k = static_cast<int>(sigma.size());
  Eigen::VectorXd v = Eigen::VectorXd::Zero(ipow(q, 2 * k));
  for (auto idx : perm_vector_support(sigma, q)) v[idx] = 1.0;
  return v;
}

void HaarProjector::apply(const Eigen::Ref<const Eigen::VectorXd>& x,
                          Eigen::Ref<Eigen::VectorXd> y) const {
  Eigen::VectorXd w = wg * overlaps(x);
  y.setZero();
  for (size_t s = 0; s < support.size(); ++s)
    for (auto idx : support[s]) y[idx] += w[static_cast<Eigen::Index>(s)];
}

Eigen::VectorXd HaarProjector::overlaps(
    const Eigen::Ref<const Eigen::VectorXd>& x) const {
  Eigen::VectorXd c(static_cast<Eigen::Index>(support.size()));
  for (size_t s = 0; s < support.size(); ++s) {
    double acc = 0.0;
    for (auto idx : support[s]) acc += x[idx];
    c[static_cast<Eigen::Index>(s)] = acc;
  }
  return c;
}

double HaarProjector::trace() const {
  return (wg * gram_matrix(k, static_cast<double>(q) * q)).trace();
}

HaarProjector haar_projector(int k, int q, Eigen::Index denseLimit) {
  if (k < 1 || k > 5) throw ValidationError("haar projector requires 1 <= k <= 5");
  if (q < 2) throw ValidationError("haar projector requires q >= 2");
  Eigen::Index dim =
      ipow_checked(q, 4 * k, Eigen::Index(1) << 16, "haar projector");
  HaarProjector p;
  p.k = k;
  p.q = q;
  p.siteDim = ipow(q, 2 * k);
  p.dim = dim;
  p.wg = weingarten(k, static_cast<double>(q) * q);
  auto sk = symmetric_group(k);
  for (const auto& sigma : sk) {
    auto site = perm_vector_support(sigma, q);
    std::vector<Eigen::Index> pair;
    pair.reserve(site.size() * site.size());
    for (auto a : site)
      for (auto b : site) pair.push_back(a * p.siteDim + b);
    std::sort(pair.begin(), pair.end());
    p.support.push_back(std::move(pair));
  }
  if (dim <= denseLimit) {
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(dim, static_cast<Eigen::Index>(sk.size()));
    for (size_t s = 0; s < p.support.size(); ++s)
      for (auto idx : p.support[s]) b(idx, static_cast<Eigen::Index>(s)) = 1.0;
    p.dense = b * p.wg * b.transpose();
  }
  return p;
}

Eigen::MatrixXd haar_projector_oracle(int k, int q) {
  Eigen::Index dim =
      ipow_checked(q, 4 * k, Eigen::Index(1) << 13, "haar projector oracle");
  auto sk = symmetric_group(k);
  HaarProjector tmp = haar_projector(k, q, 0);
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(dim, static_cast<Eigen::Index>(sk.size()));
  for (size_t s = 0; s < tmp.support.size(); ++s)
    for (auto idx : tmp.support[s]) b(idx, static_cast<Eigen::Index>(s)) = 1.0;
  std::vector<Eigen::VectorXd> qcols;
  double ref = b.col(0).norm();
  for (Eigen::Index j = 0; j < b.cols(); ++j) {
    Eigen::VectorXd v = b.col(j);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : qcols) v -= u.dot(v) * u;
    if (v.norm() > 1e-10 * ref) qcols.push_back(v.normalized());
  }
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& u : qcols) out.noalias() += u * u.transpose();
  return out;
}

Eigen::MatrixXd haar_oracle_coefficients(int k, double d) {
  Eigen::MatrixXd g = gram_matrix(k, d);
  Eigen::Index m = g.rows();
  double ref = std::sqrt(g(0, 0));
  std::vector<Eigen::VectorXd> cols;
  for (Eigen::Index j = 0; j < m; ++j) {
    Eigen::VectorXd c = Eigen::VectorXd::Unit(m, j);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& r : cols) c -= (r.dot(g * c)) * r;
    double nrm = std::sqrt(c.dot(g * c));
    if (nrm > 1e-10 * ref) cols.push_back(c / nrm);
  }
  Eigen::MatrixXd out(m, static_cast<Eigen::Index>(cols.size()));
  for (size_t i = 0; i < cols.size(); ++i)
    out.col(static_cast<Eigen::Index>(i)) = cols[i];
  return out;
}

namespace {

Eigen::MatrixXcd kron_c(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

Eigen::MatrixXcd haar_projector_monte_carlo(int k, int q, int samples,
                                            std::uint64_t seed) {
  Eigen::Index dim =
      ipow_checked(q, 4 * k, Eigen::Index(1) << 13, "monte carlo oracle");
  Eigen::Index d2 = static_cast<Eigen::Index>(q) * q;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  // Digit permutation: natural order interleaves the two site sub-legs per
  // copy; the target order groups all copies of site 1 before site 2.
  int legs = 4 * k;
  std::vector<int> targetToNat(legs);
  for (int t = 0; t < k; ++t) {
    targetToNat[t] = 2 * t;                    // site1 fwd copy t
    targetToNat[k + t] = 2 * k + 2 * t;        // site1 conj copy t
    targetToNat[2 * k + t] = 2 * t + 1;        // site2 fwd copy t
    targetToNat[3 * k + t] = 2 * k + 2 * t + 1;  // site2 conj copy t
  }
  std::vector<Eigen::Index> map(dim);
  std::vector<int> digits(legs);
  for (Eigen::Index x = 0; x < dim; ++x) {
    Eigen::Index rest = x;
    for (int t = legs - 1; t >= 0; --t) {
      digits[t] = static_cast<int>(rest % q);
      rest /= q;
    }
    Eigen::Index nat = 0;
    std::vector<int> natDigits(legs);
    for (int t = 0; t < legs; ++t) natDigits[targetToNat[t]] = digits[t];
    for (int t = 0; t < legs; ++t) nat = nat * q + natDigits[t];
    map[x] = nat;
  }

  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
  for (int s = 0; s < samples; ++s) {
    Eigen::MatrixXcd gin(d2, d2);
    for (Eigen::Index i = 0; i < d2; ++i)
      for (Eigen::Index j = 0; j < d2; ++j)
        gin(i, j) = std::complex<double>(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(gin);
    Eigen::MatrixXcd qmat = qr.householderQ();
    Eigen::MatrixXcd rmat =
        qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < d2; ++i)
      qmat.col(i) *= rmat(i, i) / std::abs(rmat(i, i));
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
    for (int t = 0; t < k; ++t) m = kron_c(m, qmat);
    Eigen::MatrixXcd qc = qmat.conjugate();
    for (int t = 0; t < k; ++t) m = kron_c(m, qc);
    acc += m;
  }
  acc /= static_cast<double>(samples);

  Eigen::MatrixXcd out(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x)
    for (Eigen::Index y = 0; y < dim; ++y) out(x, y) = acc(map[x], map[y]);
  return out;
}

double support_quadratic_max_entry(const HaarProjector& p,
                                   const Eigen::MatrixXd& a) {
  Eigen::Index nperm = static_cast<Eigen::Index>(p.support.size());
  if (nperm > 32)
    throw ValidationError("support pattern classes need at most 32 permutations");
  std::vector<std::uint32_t> mask(p.dim, 0);
  for (Eigen::Index s = 0; s < nperm; ++s)
    for (auto idx : p.support[static_cast<size_t>(s)])
      mask[idx] |= std::uint32_t(1) << s;
  std::unordered_map<std::uint32_t, char> seen;
  std::vector<std::uint32_t> classes;
  for (auto m : mask)
    if (seen.emplace(m, 1).second) classes.push_back(m);
  // row sums per class: r_m = sum_{s in m} A[s][:]
  std::vector<Eigen::RowVectorXd> rows;
  rows.reserve(classes.size());
  for (auto m : classes) {
    Eigen::RowVectorXd r = Eigen::RowVectorXd::Zero(nperm);
    for (Eigen::Index s = 0; s < nperm; ++s)
      if (m >> s & 1) r += a.row(s);
    rows.push_back(r);
  }
  double best = 0.0;
  for (size_t i = 0; i < classes.size(); ++i)
    for (size_t j = 0; j < classes.size(); ++j) {
      double v = 0.0;
      for (Eigen::Index s = 0; s < nperm; ++s)
        if (classes[j] >> s & 1) v += rows[i][s];
      best = std::max(best, std::abs(v));
    }
  return best;
}

Eigen::MatrixXd ground_state_basis(int n, int k, int q) {
  if (n < 2) throw ValidationError("ground state basis requires n >= 2");
  Eigen::Index dim =
      ipow_checked(q, 2 * n * k, Eigen::Index(1) << 22, "ground state basis");
  Eigen::Index siteDim = ipow(q, 2 * k);
  double d = static_cast<double>(ipow(q, n));
  Eigen::MatrixXd g = gram_matrix(k, d);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
  double cutoff = 1e-10 * es.eigenvalues().cwiseAbs().maxCoeff();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()[i] > cutoff) keep.push_back(i);
  Eigen::Index rank = static_cast<Eigen::Index>(keep.size());
  Eigen::MatrixXd coef(g.rows(), rank);
  for (Eigen::Index j = 0; j < rank; ++j)
    coef.col(j) =
        es.eigenvectors().col(keep[j]) / std::sqrt(es.eigenvalues()[keep[j]]);

  auto sk = symmetric_group(k);
  Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(dim, rank);
  Eigen::Index qk = ipow(q, k);
  std::vector<Eigen::Index> idxPerSite(n, 0);
  for (size_t s = 0; s < sk.size(); ++s) {
    auto site = perm_vector_support(sk[s], q);
    // enumerate the q^{nk} global support positions of |sigma>^{x n}
    std::fill(idxPerSite.begin(), idxPerSite.end(), 0);
    while (true) {
      Eigen::Index global = 0;
      for (int site_i = 0; site_i < n; ++site_i)
        global = global * siteDim + site[idxPerSite[site_i]];
      for (Eigen::Index j = 0; j < rank; ++j)
        basis(global, j) += coef(static_cast<Eigen::Index>(s), j);
      int carry = n - 1;
      while (carry >= 0 && ++idxPerSite[carry] == qk) idxPerSite[carry--] = 0;
      if (carry < 0) break;
    }
  }
  return basis;
}

}  // namespace momentgap

#include <Eigen/Dense>
#include <cmath>
#include <numeric>
#include <random>

#include "loghat/classify.hpp"
#include "loghat/error.hpp"
#include "loghat/linalg.hpp"
#include "loghat/numeric.hpp"
#include "loghat/psd.hpp"
#include "loghat/sturm.hpp"

namespace loghat {

namespace {

QMatrix primitive_integer(const QMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return m;
  QMatrix out = BigRat(m.denominator()) * m;
  BigInt g = 0;
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) g = gcd(g, BigInt(out(i, j).get_num()));
  if (g > 1) out = BigRat(1, 1) / BigRat(g) * out;
  return out;
}

QMatrix total(const LatticePairing& p) {
  QMatrix s(p.N.rank(), p.M.rank());
  for (const auto& x : p.X) s = s + x;
  return s;
}

PpolResult no(std::string tier, std::string reason) {
  PpolResult r;
  r.verdict = Verdict::No;
  r.tier = std::move(tier);
  r.reason = std::move(reason);
  return r;
}

PpolResult yes(std::string tier, QMatrix cert) {
  PpolResult r;
  r.verdict = Verdict::Yes;
  r.tier = std::move(tier);
  r.certificate = std::move(cert);
  return r;
}

PpolResult tier1(const LatticePairing& p) {
  const QMatrix& x = p.X.front();
  BigRat d = det(x);
  if (d == 0) return no("T1", "det(X) = 0: the pairing is degenerate");
  // Xᵀ·adj(X)ᵀ = det·I.
  return yes("T1", BigRat(sign(d)) * adjugate(x).transpose());
}

PpolResult tier2(const LatticePairing& p) {
  auto t = rank1_multipliers(p);
  if (!polarizable_rank1(t)) return no("T2", "some t_i·conj(t_j) is neither totally positive nor zero");
  FieldPtr f = t.front().field();
  const int phi = f->phi();
  CycloElem sum(f);
  for (const auto& ti : t) sum += ti;
  // S = G·mult(Σt), G the trace form Tr(ζ^j·conj ζ^l).
  QMatrix g(phi, phi);
  for (int j = 0; j < phi; ++j)
    for (int l = 0; l < phi; ++l)
      g(j, l) = trace(CycloElem::zeta_power(f, j) * conj(CycloElem::zeta_power(f, l)));
  QMatrix s = g * mult_matrix(sum);
  const QMatrix psi_m = split_isotypic(p.M).psi.matrix;
  const QMatrix psi_n = split_isotypic(dual_module(p.N)).psi.matrix;
  return yes("T2", primitive_integer(inverse(psi_n).transpose() * s * inverse(psi_m)));
}

// Spectrum of B real, nonnegative and B diagonalizable.
bool admissible_spectrum(const QMatrix& b) {
  IntPoly cp = primitive_part(char_poly_rational(b));
  IntPoly sf = squarefree_part(cp);
  if (!evaluate(sf, b).is_zero()) return false;
  const std::size_t d = static_cast<std::size_t>(sf.degree());
  return sturm_count(sf, Endpoint::neg_inf(), Endpoint::pos_inf()) == d &&
         sturm_count(sf, Endpoint::neg_inf(), Endpoint::rational(0)) == 0;
}

using Mat = Eigen::MatrixXd;

Mat to_eigen(const QMatrix& m) {
  Mat e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = static_cast<double>(to_long_double(m(i, j)));
  return e;
}

struct Slice {
  std::vector<QMatrix> basis;  // exact symmetric generators
  std::vector<Mat> ortho;      // Frobenius-orthonormal
  Mat coef;                    // ortho_k = Σ_j coef(k, j)·basis_j
};

Slice orthonormalize(const std::vector<QMatrix>& basis) {
  Slice s;
  s.basis = basis;
  const std::size_t m = basis.size();
  s.coef = Mat::Zero(m, m);
  for (std::size_t k = 0; k < m; ++k) {
    Mat v = to_eigen(basis[k]);
    Eigen::VectorXd c = Eigen::VectorXd::Zero(m);
    c(k) = 1;
    for (std::size_t j = 0; j < s.ortho.size(); ++j) {
      double proj = (v.array() * s.ortho[j].array()).sum();
      v -= proj * s.ortho[j];
      c -= proj * s.coef.row(j).transpose();
    }
    double nrm = v.norm();
    s.ortho.push_back(v / nrm);
    s.coef.row(k) = (c / nrm).transpose();
  }
  return s;
}

Mat combine(const Slice& s, const Eigen::VectorXd& c) {
  Mat out = Mat::Zero(s.ortho.front().rows(), s.ortho.front().cols());
  for (std::size_t j = 0; j < s.ortho.size(); ++j) out += c(j) * s.ortho[j];
  return out;
}

// Exact PD check of the rationalized point; returns S on success.
std::optional<QMatrix> try_round(const Slice& s, const Eigen::VectorXd& c) {
  Eigen::VectorXd orig = s.coef.transpose() * c;
  double scale = orig.cwiseAbs().maxCoeff();
  if (!(scale > 0)) return std::nullopt;
  QMatrix out(s.basis.front().rows(), s.basis.front().cols());
  for (std::size_t j = 0; j < s.basis.size(); ++j) {
    BigRat cj = rationalize(static_cast<long double>(orig(j) / scale), BigInt(1000000));
    if (cj != 0) out = out + cj * s.basis[j];
  }
  if (psd_status(out).status != PsdStatus::PD) return std::nullopt;
  return out;
}

// Projected ascent of a soft minimum eigenvalue on {tr S = n}.
std::optional<QMatrix> search(const Slice& s, Eigen::VectorXd c) {
  const std::size_t m = s.ortho.size();
  const double n = static_cast<double>(s.ortho.front().rows());
  Eigen::VectorXd tau(m);
  for (std::size_t j = 0; j < m; ++j) tau(j) = s.ortho[j].trace();
  const double tt = tau.squaredNorm();
  c += (n - c.dot(tau)) / tt * tau;
  double step = 0.5;
  for (int it = 0; it < 1500; ++it) {
    Eigen::SelfAdjointEigenSolver<Mat> es(combine(s, c));
    const auto& ev = es.eigenvalues();
    if (ev(0) > 1e-9 && it % 25 == 0)
      if (auto exact = try_round(s, c)) return exact;
    const double beta = 40.0;
    Eigen::VectorXd w = (-beta * (ev.array() - ev(0))).exp();
    w /= w.sum();
    Eigen::VectorXd grad(m);
    for (std::size_t j = 0; j < m; ++j) {
      double g = 0;
      for (int k = 0; k < ev.size(); ++k) {
        if (w(k) < 1e-12) continue;
        auto v = es.eigenvectors().col(k);
        g += w(k) * v.dot(s.ortho[j] * v);
      }
      grad(j) = g;
    }
    grad -= grad.dot(tau) / tt * tau;
    double gn = grad.norm();
    if (gn < 1e-14) break;
    c += step * grad / gn;
    step = std::max(step * 0.995, 1e-4);
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(combine(s, c));
  if (es.eigenvalues()(0) > 0) return try_round(s, c);
  return std::nullopt;
}

PpolResult tier3(const LatticePairing& p, std::uint64_t seed) {
  const std::size_t n = p.M.rank();
  const QMatrix x = total(p);
  BigRat d = det(x);
  if (d == 0) return no("T3", "ΣX_i is singular, so no Λ makes ΣX_iᵀΛ definite");
  for (const QMatrix& cand : {QMatrix::identity(n), x, BigRat(sign(d)) * adjugate(x).transpose()})
    if (satisfies_polarization_inequalities(p, cand)) return yes("T3", primitive_integer(cand));

  const QMatrix xinv = inverse(x);
  std::vector<QMatrix> b;
  for (std::size_t i = 0; i < p.k(); ++i) {
    b.push_back(xinv * p.X[i]);
    if (!admissible_spectrum(b.back()))
      return no("T3", "X^{-1}X_" + std::to_string(i + 1) + " is not diagonalizable with nonnegative real spectrum");
  }
  // Λ = X^{-T}S with S symmetric, B_iᵀS = S·B_i, S positive definite.
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) idx.emplace_back(i, j);
  QMatrix sys(p.k() * n * n, idx.size());
  for (std::size_t u = 0; u < idx.size(); ++u) {
    QMatrix e(n, n);
    e(idx[u].first, idx[u].second) = 1;
    e(idx[u].second, idx[u].first) = 1;
    for (std::size_t i = 0; i < p.k(); ++i) {
      QMatrix c = b[i].transpose() * e - e * b[i];
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t bb = 0; bb < n; ++bb) sys(i * n * n + a * n + bb, u) = c(a, bb);
    }
  }
  std::vector<QMatrix> basis;
  for (const auto& v : nullspace(sys)) {
    QMatrix s(n, n);
    for (std::size_t u = 0; u < idx.size(); ++u) {
      s(idx[u].first, idx[u].second) = v[u];
      s(idx[u].second, idx[u].first) = v[u];
    }
    basis.push_back(std::move(s));
  }
  if (basis.empty()) return no("T3", "no nonzero symmetric S with X_i^{-T}-compatibility");
  bool trace_zero = true;
  for (const auto& s : basis) trace_zero = trace_zero && s.trace() == 0;
  if (trace_zero) return no("T3", "every admissible S has trace 0");
  QMatrix stacked(basis.size() * n, n);
  for (std::size_t j = 0; j < basis.size(); ++j) stacked.set_block(j * n, 0, basis[j]);
  if (!nullspace(stacked).empty()) return no("T3", "all admissible S share a kernel vector");
  if (basis.size() == 1) {
    QMatrix s = basis.front();
    if (s.trace() < 0) s = -s;
    if (psd_status(s).status == PsdStatus::PD) return yes("T3", primitive_integer(xinv.transpose() * s));
    return no("T3", "the admissible S form a line with no definite point");
  }

  Slice sl = orthonormalize(basis);
  const std::size_t m = basis.size();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  const Mat id = Mat::Identity(n, n);
  const Mat xtx = to_eigen(x.transpose() * x);
  for (int attempt = 0; attempt < 3; ++attempt) {
    Eigen::VectorXd c(m);
    for (std::size_t j = 0; j < m; ++j) {
      if (attempt == 0) c(j) = (id.array() * sl.ortho[j].array()).sum();
      else if (attempt == 1) c(j) = (xtx.array() * sl.ortho[j].array()).sum() / xtx.norm();
      else c(j) = gauss(rng);
    }
    if (auto s = search(sl, c)) {
      QMatrix cert = primitive_integer(xinv.transpose() * *s);
      if (satisfies_polarization_inequalities(p, cert)) return yes("T3", cert);
    }
  }
  PpolResult r;
  r.verdict = Verdict::Unknown;
  r.tier = "T3";
  r.reason = "no definite point found in the admissible slice after 3 attempts";
  return r;
}

// Σ_j frob_N^j·Λ·frob_M^{-j}: an equivariant polarization.
std::optional<QMatrix> average(const LatticePairing& p, const QMatrix& l) {
  if (p.M.order() > 5000 || p.N.order() > 5000) return std::nullopt;
  const unsigned long total_ord = std::lcm(p.M.order().get_ui(), p.N.order().get_ui());
  if (total_ord > 5000) return std::nullopt;
  QMatrix acc(l.rows(), l.cols()), fn = QMatrix::identity(l.rows()), fm = QMatrix::identity(l.cols());
  for (unsigned long j = 0; j < total_ord; ++j) {
    acc = acc + fn * l * fm;
    fn = p.N.frob() * fn;
    fm = fm * p.M.frob_inverse();
  }
  return primitive_integer(acc);
}

}  // namespace

PpolResult is_pointwise_polarizable(const LatticePairing& p, std::uint64_t seed) {
  if (p.M.rank() != p.N.rank())
    return no("rank", "rank(M) = " + std::to_string(p.M.rank()) + " differs from rank(N) = " + std::to_string(p.N.rank()));
  if (p.M.rank() == 0) {
    PpolResult r = yes("rank", QMatrix(0, 0));
    r.equivariant = true;
    return r;
  }
  PpolResult r;
  if (p.k() == 1) r = tier1(p);
  else if (is_simple(p.M) && p.M.multiplicities() == p.N.multiplicities()) r = tier2(p);
  else r = tier3(p, seed);
  if (r.verdict != Verdict::Yes) return r;
  if (!satisfies_polarization_inequalities(p, *r.certificate)) throw Error("internal: " + r.tier + " certificate fails");
  if (auto avg = average(p, *r.certificate)) {
    if (!satisfies_polarization_inequalities(p, *avg)) throw Error("internal: averaged certificate fails");
    r.certificate = *avg;
    r.equivariant = true;
  }
  return r;
}

}  // namespace loghat

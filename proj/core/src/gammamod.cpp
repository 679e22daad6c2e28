#include "loghat/gammamod.hpp"

#include "loghat/cyclotomic.hpp"
#include "loghat/error.hpp"
#include "loghat/factor.hpp"
#include "loghat/linalg.hpp"

namespace loghat {

QMatrix companion_matrix(const IntPoly& p) {
  if (!p.is_monic()) throw PreconditionError("companion matrix needs a monic polynomial");
  const std::size_t n = static_cast<std::size_t>(p.degree());
  QMatrix c(n, n);
  for (std::size_t j = 0; j + 1 < n; ++j) c(j + 1, j) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -BigRat(p.coeff(i));
  return c;
}

GammaModule validate_module(std::size_t rank, const QMatrix& frob) {
  if (frob.rows() != rank || frob.cols() != rank)
    throw ValidationError("frob must be " + std::to_string(rank) + "x" + std::to_string(rank));
  if (!frob.is_integer()) throw ValidationError("frob must have integer entries");
  GammaModule m;
  m.frob_ = frob;
  if (rank == 0) return m;
  BigRat d = det(frob);
  if (d != 1 && d != -1) throw ValidationError("frob is not invertible over Z (det = " + d.get_str() + ")");
  m.charpoly_ = char_poly(frob);
  IntPoly rest;
  m.mult_ = peel_cyclotomic(m.charpoly_, &rest);
  if (rest.degree() > 0) throw ValidationError("frob has infinite order (eigenvalue not a root of unity)");
  // Finite order iff the radical ∏ F_r already kills frob.
  IntPoly radical = IntPoly::constant(1);
  for (auto [r, a] : m.mult_) {
    radical *= cyclotomic_poly(r);
    m.order_ = lcm(m.order_, BigInt(r));
  }
  if (!evaluate(radical, frob).is_zero()) throw ValidationError("frob has infinite order (not semisimple)");
  m.frob_inv_ = inverse(frob);
  return m;
}

GammaModule trivial_module(std::size_t rank) { return validate_module(rank, QMatrix::identity(rank)); }

GammaModule cyclotomic_module(int r) {
  IntPoly f = cyclotomic_poly(r);
  return validate_module(static_cast<std::size_t>(f.degree()), companion_matrix(f));
}

GammaModule direct_sum(const std::vector<GammaModule>& parts) {
  std::vector<QMatrix> blocks;
  std::size_t n = 0;
  for (const auto& p : parts) {
    blocks.push_back(p.frob());
    n += p.rank();
  }
  return validate_module(n, QMatrix::block_diagonal(blocks));
}

IntPoly frobenius_charpoly(const GammaModule& m) { return m.charpoly(); }

GammaModule dual_module(const GammaModule& m) {
  if (m.rank() == 0) return m;
  return validate_module(m.rank(), m.frob_inverse().transpose());
}

std::map<int, unsigned> cyclotomic_multiplicities(const GammaModule& m) { return m.multiplicities(); }

bool is_simple(const GammaModule& m) {
  return m.multiplicities().size() == 1 && m.multiplicities().begin()->second == 1;
}

bool is_equivariant(const GammaModule& src, const GammaModule& dst, const QMatrix& matrix) {
  return matrix.rows() == dst.rank() && matrix.cols() == src.rank() && matrix * src.frob() == dst.frob() * matrix;
}

LatticeMap make_lattice_map(const GammaModule& src, const GammaModule& dst, const QMatrix& matrix) {
  if (matrix.rows() != dst.rank() || matrix.cols() != src.rank())
    throw ValidationError("lattice map has shape " + std::to_string(matrix.rows()) + "x" +
                          std::to_string(matrix.cols()) + ", expected " + std::to_string(dst.rank()) + "x" +
                          std::to_string(src.rank()));
  if (!matrix.is_integer()) throw ValidationError("lattice map must have integer entries");
  if (!is_equivariant(src, dst, matrix)) throw ValidationError("lattice map is not Frobenius-equivariant");
  return {src, dst, matrix};
}

IsotypicSplit split_isotypic(const GammaModule& m) {
  IsotypicSplit out;
  std::vector<QVector> cols;
  std::vector<GammaModule> parts;
  const std::size_t n = m.rank();
  for (auto [r, a] : m.multiplicities()) {
    const IntPoly fr = cyclotomic_poly(r);
    const std::size_t phi = static_cast<std::size_t>(fr.degree());
    // The r-isotypic part is a K-space of dimension a; saturated lattice basis.
    QMatrix kernel = integer_kernel(evaluate(fr, m.frob()));
    std::vector<QVector> chosen;
    auto try_vector = [&](const QVector& v) {
      std::vector<QVector> trial = chosen;
      QVector w = v;
      for (std::size_t j = 0; j < phi; ++j) {
        trial.push_back(w);
        w = m.frob() * w;
      }
      if (rank(QMatrix::from_columns(trial, n)) == trial.size()) chosen = std::move(trial);
    };
    for (std::size_t c = 0; c < kernel.cols() && chosen.size() < a * phi; ++c) try_vector(kernel.column(c));
    if (chosen.size() != a * phi) throw Error("internal: isotypic component has the wrong dimension");
    cols.insert(cols.end(), chosen.begin(), chosen.end());
    out.blocks.push_back({r, a});
    for (unsigned i = 0; i < a; ++i) parts.push_back(cyclotomic_module(r));
  }
  out.R = direct_sum(parts);
  QMatrix psi = QMatrix::from_columns(cols, n);
  out.psi = make_lattice_map(out.R, m, psi);
  out.cokernel_order = n == 0 ? BigInt(1) : abs_int(BigInt(det(psi).get_num()));
  if (out.cokernel_order == 0) throw Error("internal: isotypic embedding is not injective");
  return out;
}

QuasiInverse quasi_inverse(const LatticeMap& f) {
  const QMatrix& a = f.matrix;
  if (a.rows() != a.cols()) throw PreconditionError("quasi-inverse needs a square matrix");
  BigRat d = a.rows() == 0 ? BigRat(1) : det(a);
  if (d == 0) throw PreconditionError("quasi-inverse of a singular map");
  QMatrix g = a.rows() == 0 ? a : BigRat(sign(d)) * adjugate(a);
  return {make_lattice_map(f.dst, f.src, g), abs_int(BigInt(d.get_num()))};
}

std::vector<QMatrix> hom_space(const GammaModule& m, const GammaModule& nmod) {
  const std::size_t p = nmod.rank(), q = m.rank();
  if (p == 0 || q == 0) return {};
  // Unknown A(i,j) at index i·q + j; equations (A·F_M − F_N·A)(i,j) = 0.
  QMatrix sys(p * q, p * q);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      const std::size_t row = i * q + j;
      for (std::size_t k = 0; k < q; ++k) sys(row, i * q + k) += m.frob()(k, j);
      for (std::size_t k = 0; k < p; ++k) sys(row, k * q + j) -= nmod.frob()(i, k);
    }
  QMatrix ker = integer_kernel(sys);
  std::vector<QMatrix> basis;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    QMatrix a(p, q);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < q; ++j) a(i, j) = ker(i * q + j, c);
    basis.push_back(std::move(a));
  }
  return basis;
}

}  // namespace loghat

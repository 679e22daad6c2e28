#include "loghat/psd.hpp"

#include <vector>

#include "loghat/error.hpp"

namespace loghat {

namespace {

struct Pivot {
  std::size_t index;
  BigRat d;
  std::vector<std::pair<std::size_t, BigRat>> row;  // entries towards still-active indices
};

// Lift a direction w on the active block through the eliminated pivots.
QVector lift(QVector w, const std::vector<Pivot>& pivots) {
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    BigRat s = 0;
    for (const auto& [j, b] : it->row) s += b * w[j];
    w[it->index] = -s / it->d;
  }
  return w;
}

}  // namespace

PsdResult psd_status(const QMatrix& a) {
  if (!a.is_symmetric()) throw PreconditionError("psd_status needs a symmetric matrix");
  const std::size_t n = a.rows();
  QMatrix s = a;
  std::vector<bool> active(n, true);
  std::vector<Pivot> pivots;
  PsdResult result;

  auto indefinite = [&](QVector w) {
    result.status = PsdStatus::Indefinite;
    result.witness = lift(std::move(w), pivots);
    if (quadratic_form(a, result.witness) >= 0) throw Error("internal: witness check failed");
    return result;
  };

  for (;;) {
    std::size_t neg = n, zero_row = n, pos = n;
    std::size_t partner = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      const int sd = sgn(s(i, i));
      if (sd < 0 && neg == n) neg = i;
      if (sd > 0 && pos == n) pos = i;
      if (sd == 0 && zero_row == n)
        for (std::size_t j = 0; j < n; ++j)
          if (active[j] && j != i && s(i, j) != 0) {
            zero_row = i;
            partner = j;
            break;
          }
    }
    if (neg != n) {
      QVector w(n, BigRat(0));
      w[neg] = 1;
      return indefinite(std::move(w));
    }
    if (zero_row != n) {
      // s_ii = 0: v = t·e_i + e_j gives 2t·s_ij + s_jj = −1.
      QVector w(n, BigRat(0));
      w[zero_row] = -(s(partner, partner) + 1) / (2 * s(zero_row, partner));
      w[partner] = 1;
      return indefinite(std::move(w));
    }
    if (pos == n) break;
    Pivot pv{pos, s(pos, pos), {}};
    active[pos] = false;
    for (std::size_t j = 0; j < n; ++j)
      if (active[j] && s(pos, j) != 0) pv.row.emplace_back(j, s(pos, j));
    for (const auto& [i, bi] : pv.row)
      for (const auto& [j, bj] : pv.row) s(i, j) -= bi * bj / pv.d;
    pivots.push_back(std::move(pv));
  }
  result.rank = pivots.size();
  result.status = (result.rank == n) ? PsdStatus::PD : PsdStatus::PSDSingular;
  return result;
}

const char* to_string(PsdStatus s) {
  switch (s) {
    case PsdStatus::PD: return "PD";
    case PsdStatus::PSDSingular: return "PSD-singular";
    case PsdStatus::Indefinite: return "indefinite";
  }
  return "?";
}

}  // namespace loghat

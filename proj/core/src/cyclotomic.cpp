#include "loghat/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <numeric>

#include "loghat/error.hpp"
#include "loghat/linalg.hpp"
#include "loghat/numeric.hpp"
#include "loghat/sturm.hpp"

namespace loghat {

int euler_phi(int r) {
  if (r <= 0) throw PreconditionError("euler_phi needs r >= 1");
  int n = r, result = r;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

int moebius(int n) {
  int m = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  if (n > 1) m = -m;
  return m;
}

std::vector<int> divisors(int r) {
  std::vector<int> d;
  for (int i = 1; i <= r; ++i)
    if (r % i == 0) d.push_back(i);
  return d;
}

std::vector<int> conductors_up_to_phi(int n) {
  // φ(r) >= sqrt(r/2), so r <= 2n² covers every candidate.
  std::vector<int> out;
  const int limit = std::max(2, 2 * n * n);
  for (int r = 1; r <= limit; ++r)
    if (euler_phi(r) <= n) out.push_back(r);
  return out;
}

IntPoly cyclotomic_poly(int r) {
  if (r <= 0) throw PreconditionError("cyclotomic_poly needs r >= 1");
  std::map<int, IntPoly> known;
  for (int d : divisors(r)) {
    IntPoly f = IntPoly::monomial(1, d) - IntPoly::constant(1);
    for (const auto& [e, fe] : known)
      if (d % e == 0) {
        auto q = exact_divide(f, fe);
        if (!q) throw Error("internal: cyclotomic division not exact");
        f = std::move(*q);
      }
    known.emplace(d, std::move(f));
  }
  return known.at(r);
}

BigInt cyclotomic_discriminant_abs(int r) {
  const int phi = euler_phi(r);
  BigInt num, den = 1;
  mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(phi));
  int n = r;
  for (int p = 2; p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    BigInt pp;
    mpz_ui_pow_ui(pp.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(phi / (p - 1)));
    den *= pp;
  }
  return num / den;
}

CyclotomicField::CyclotomicField(int r) : r_(r), phi_(euler_phi(r)), modulus_(cyclotomic_poly(r)) {
  pow_.reserve(r_);
  std::vector<BigInt> cur(phi_, BigInt(0));
  cur[0] = 1;
  for (int k = 0; k < r_; ++k) {
    pow_.push_back(cur);
    // Multiply by ζ and reduce with ζ^φ = −Σ f_i ζ^i.
    BigInt top = cur[phi_ - 1];
    for (int i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < phi_; ++i) cur[i] -= top * modulus_.coeff(i);
  }
  // Tr(ζ^j) as the trace of multiplication by ζ^j.
  trace_.resize(phi_);
  for (int j = 0; j < phi_; ++j) {
    BigInt t = 0;
    for (int i = 0; i < phi_; ++i) t += pow_[(i + j) % r_][i];
    trace_[j] = t;
  }
}

const std::vector<BigInt>& CyclotomicField::power(long k) const {
  long m = k % r_;
  if (m < 0) m += r_;
  return pow_[m];
}

FieldPtr cyclotomic_field(int r) {
  if (r <= 0) throw PreconditionError("conductor must be >= 1");
  return std::make_shared<const CyclotomicField>(r);
}

namespace {

const FieldPtr& common_field(const CycloElem& a, const CycloElem& b) {
  if (!a.field() || !b.field()) throw PreconditionError("uninitialised cyclotomic element");
  if (a.r() != b.r()) throw PreconditionError("conductor mismatch");
  return a.field();
}

}  // namespace

CycloElem::CycloElem(FieldPtr f) : f_(std::move(f)) {
  if (!f_) throw PreconditionError("null cyclotomic field");
  c_.assign(f_->phi(), BigRat(0));
}

CycloElem::CycloElem(FieldPtr f, std::vector<BigRat> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
  if (!f_) throw PreconditionError("null cyclotomic field");
  if (static_cast<int>(c_.size()) != f_->phi()) throw PreconditionError("coefficient count must equal φ(r)");
}

CycloElem CycloElem::rational(FieldPtr f, const BigRat& x) {
  CycloElem e(std::move(f));
  e.c_[0] = x;
  return e;
}

CycloElem CycloElem::zeta_power(FieldPtr f, long k) {
  CycloElem e(f);
  const auto& p = f->power(k);
  for (int i = 0; i < f->phi(); ++i) e.c_[i] = p[i];
  return e;
}

bool CycloElem::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycloElem::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool CycloElem::has_integer_coeffs() const {
  for (const auto& x : c_)
    if (!is_integral(x)) return false;
  return true;
}

std::string CycloElem::to_string(const std::string& var) const {
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    std::string coef = c_[i].get_str();
    if (!s.empty()) s += (c_[i] < 0) ? "" : "+";
    if (i == 0) {
      s += coef;
      continue;
    }
    if (c_[i] == 1) coef = "";
    else if (c_[i] == -1) coef = "-";
    else coef += "*";
    s += coef + var + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return s.empty() ? "0" : s;
}

CycloElem operator+(const CycloElem& a, const CycloElem& b) {
  CycloElem out(common_field(a, b));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[i] = a.c_[i] + b.c_[i];
  return out;
}

CycloElem operator-(const CycloElem& a, const CycloElem& b) {
  CycloElem out(common_field(a, b));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[i] = a.c_[i] - b.c_[i];
  return out;
}

CycloElem operator-(const CycloElem& a) {
  CycloElem out(a.f_);
  for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[i] = -a.c_[i];
  return out;
}

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
  const FieldPtr& f = common_field(a, b);
  const int phi = f->phi();
  std::vector<BigRat> prod(2 * phi - 1, BigRat(0));
  for (int i = 0; i < phi; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < phi; ++j)
      if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
  }
  CycloElem out(f);
  for (int k = 0; k < 2 * phi - 1; ++k) {
    if (prod[k] == 0) continue;
    if (k < phi) {
      out.c_[k] += prod[k];
      continue;
    }
    const auto& p = f->power(k);
    for (int i = 0; i < phi; ++i)
      if (p[i] != 0) out.c_[i] += prod[k] * p[i];
  }
  return out;
}

CycloElem operator*(const BigRat& s, const CycloElem& a) {
  CycloElem out(a.f_);
  for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[i] = s * a.c_[i];
  return out;
}

CycloElem operator/(const CycloElem& a, const CycloElem& b) { return a * invert(b); }

CycloElem invert(const CycloElem& x) {
  if (!x.field()) throw PreconditionError("uninitialised cyclotomic element");
  if (x.is_zero()) throw PreconditionError("inversion of zero");
  RatPoly lift(x.coeffs());
  ExtGcd e = ext_gcd(lift, to_rat(x.field()->modulus()));
  if (e.g.degree() != 0) throw Error("internal: element not invertible modulo F_r");
  std::vector<BigRat> c(x.field()->phi(), BigRat(0));
  RatPoly s = divmod(e.s, to_rat(x.field()->modulus())).second;
  for (int i = 0; i <= s.degree(); ++i) c[i] = s.coeffs()[i];
  return CycloElem(x.field(), std::move(c));
}

CycloElem conj(const CycloElem& x) {
  const FieldPtr& f = x.field();
  CycloElem out(f);
  std::vector<BigRat> c(f->phi(), BigRat(0));
  for (int j = 0; j < f->phi(); ++j) {
    if (x.coeffs()[j] == 0) continue;
    const auto& p = f->power(-j);
    for (int i = 0; i < f->phi(); ++i)
      if (p[i] != 0) c[i] += x.coeffs()[j] * p[i];
  }
  return CycloElem(f, std::move(c));
}

BigRat trace(const CycloElem& x) {
  BigRat t = 0;
  for (int j = 0; j < x.field()->phi(); ++j) t += x.coeffs()[j] * x.field()->basis_trace(j);
  return t;
}

QMatrix mult_matrix(const CycloElem& x) {
  const FieldPtr& f = x.field();
  const int phi = f->phi();
  QMatrix m(phi, phi);
  for (int j = 0; j < phi; ++j) {
    CycloElem col = x * CycloElem::zeta_power(f, j);
    for (int i = 0; i < phi; ++i) m(i, j) = col.coeffs()[i];
  }
  return m;
}

BigRat norm(const CycloElem& x) { return det(mult_matrix(x)); }

RatPoly charpoly(const CycloElem& x) { return char_poly_rational(mult_matrix(x)); }

CycloElem from_column(const FieldPtr& f, const QVector& coords) {
  if (static_cast<int>(coords.size()) != f->phi()) throw PreconditionError("coordinate count must equal φ(r)");
  return CycloElem(f, coords);
}

bool is_totally_real(const CycloElem& x) { return conj(x) == x; }

bool is_totally_positive(const CycloElem& x) {
  if (x.is_zero() || !is_totally_real(x)) return false;
  IntPoly p = squarefree_part(primitive_part(charpoly(x)));
  return sturm_count(p, Endpoint::rational(0), Endpoint::pos_inf()) == static_cast<std::size_t>(p.degree());
}

bool in_inverse_different(const CycloElem& x) {
  const FieldPtr& f = x.field();
  for (int j = 0; j < f->phi(); ++j)
    if (!is_integral(trace(x * CycloElem::zeta_power(f, j)))) return false;
  return true;
}

CycloElem inverse_different_generator(const FieldPtr& f) {
  std::vector<BigRat> d(f->phi(), BigRat(0));
  IntPoly fp = f->modulus().derivative();
  for (int i = 0; i <= fp.degree(); ++i) d[i] = fp.coeffs()[i];
  CycloElem g = invert(CycloElem(f, std::move(d)));
  for (int j = 0; j < f->phi(); ++j)
    if (!in_inverse_different(g * CycloElem::zeta_power(f, j)))
      throw Error("inverse different generator fails the trace condition");
  BigRat n = norm(g);
  if (abs(1 / n) != BigRat(cyclotomic_discriminant_abs(f->r())))
    throw Error("inverse different generator has the wrong index");
  return g;
}

CycloElem inverse_different_generator(int r) { return inverse_different_generator(cyclotomic_field(r)); }

std::complex<long double> embed(const CycloElem& x, int s) {
  const long double two_pi = 6.283185307179586476925286766559L;
  std::complex<long double> z = 0;
  for (int j = 0; j < x.field()->phi(); ++j) {
    if (x.coeffs()[j] == 0) continue;
    long double ang = two_pi * static_cast<long double>((static_cast<long>(s) * j) % x.r()) / x.r();
    z += to_long_double(x.coeffs()[j]) * std::complex<long double>(std::cos(ang), std::sin(ang));
  }
  return z;
}

}  // namespace loghat

#include "cymo/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cymo/error.hpp"

namespace cymo {

Polynomial Polynomial::constant(int nvars, cplx c) {
  Polynomial p(nvars);
  p.set_coeff(MultiIndex(nvars, 0), c);
  return p;
}

Polynomial Polynomial::monomial(const MultiIndex& alpha, cplx c) {
  Polynomial p(static_cast<int>(alpha.size()));
  p.set_coeff(alpha, c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  require(i >= 0 && i < nvars, ErrorCode::InvalidArgument, "variable index out of range");
  MultiIndex a(nvars, 0);
  a[i] = 1;
  return monomial(a);
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [a, c] : terms_)
    if (c != 0.0) d = std::max(d, total_degree(a));
  return d;
}

bool Polynomial::is_zero(double eps) const {
  for (const auto& [a, c] : terms_)
    if (std::abs(c) > eps) return false;
  return true;
}

cplx Polynomial::coeff(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? cplx(0.0) : it->second;
}

void Polynomial::set_coeff(const MultiIndex& alpha, cplx c) {
  require(static_cast<int>(alpha.size()) == nvars_, ErrorCode::DimensionMismatch,
          "coefficient index has wrong number of variables");
  terms_[alpha] = c;
}

void Polynomial::add_term(const MultiIndex& alpha, cplx c) {
  require(static_cast<int>(alpha.size()) == nvars_, ErrorCode::DimensionMismatch,
          "coefficient index has wrong number of variables");
  terms_[alpha] += c;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require(nvars_ == o.nvars_, ErrorCode::DimensionMismatch, "polynomial variable count mismatch");
  Polynomial r = *this;
  for (const auto& [a, c] : o.terms_) r.terms_[a] += c;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * cplx(-1.0); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require(nvars_ == o.nvars_, ErrorCode::DimensionMismatch, "polynomial variable count mismatch");
  Polynomial r(nvars_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) r.terms_[mi_add(a, b)] += ca * cb;
  return r;
}

Polynomial Polynomial::operator*(cplx s) const {
  Polynomial r = *this;
  for (auto& [a, c] : r.terms_) c *= s;
  return r;
}

Polynomial Polynomial::coeff_conjugate() const {
  Polynomial r = *this;
  for (auto& [a, c] : r.terms_) c = std::conj(c);
  return r;
}

Polynomial Polynomial::derivative(int i) const {
  require(i >= 0 && i < nvars_, ErrorCode::InvalidArgument, "derivative index out of range");
  Polynomial r(nvars_);
  for (const auto& [a, c] : terms_) {
    if (a[i] == 0) continue;
    MultiIndex b = a;
    b[i] -= 1;
    r.terms_[b] += c * static_cast<double>(a[i]);
  }
  return r;
}

cplx Polynomial::eval(const std::vector<cplx>& z) const {
  require(static_cast<int>(z.size()) == nvars_, ErrorCode::DimensionMismatch,
          "evaluation point has wrong number of variables");
  cplx s = 0.0;
  for (const auto& [a, c] : terms_) {
    cplx t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < a[i]; ++k) t *= z[i];
    s += t;
  }
  return s;
}

Polynomial Polynomial::apply_as_diff_op(const Polynomial& p) const {
  require(nvars_ == p.nvars_, ErrorCode::DimensionMismatch, "polynomial variable count mismatch");
  // d^a z^b = b!/(b-a)! z^(b-a) for a <= b, else 0.
  Polynomial r(nvars_);
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : p.terms_) {
      if (!mi_leq(a, b)) continue;
      double fall = 1.0;
      MultiIndex res(nvars_);
      for (int i = 0; i < nvars_; ++i) {
        res[i] = b[i] - a[i];
        for (int k = res[i] + 1; k <= b[i]; ++k) fall *= k;
      }
      r.terms_[res] += ca * cb * fall;
    }
  }
  return r;
}

Polynomial Polynomial::pruned(double eps) const {
  Polynomial r(nvars_);
  for (const auto& [a, c] : terms_)
    if (std::abs(c) > eps) r.terms_[a] = c;
  return r;
}

std::string Polynomial::to_string(const char* var) const {
  std::ostringstream os;
  bool first = true;
  // Print in graded lex order.
  std::vector<std::pair<MultiIndex, cplx>> items(terms_.begin(), terms_.end());
  std::sort(items.begin(), items.end(),
            [](const auto& x, const auto& y) { return graded_lex_less(x.first, y.first); });
  for (const auto& [a, c] : items) {
    if (c == 0.0) continue;
    if (!first) os << " + ";
    first = false;
    bool unit = (c == cplx(1.0)) && total_degree(a) > 0;
    if (!unit) {
      if (c.imag() == 0.0)
        os << c.real();
      else
        os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
    }
    bool any = !unit;
    for (int i = 0; i < nvars_; ++i) {
      if (a[i] == 0) continue;
      if (any) os << "*";
      any = true;
      os << var;
      if (nvars_ > 1) os << (i + 1);
      if (a[i] > 1) os << "^" << a[i];
    }
  }
  if (first) os << "0";
  return os.str();
}

cplx fock_inner(const Polynomial& p, const Polynomial& q) {
  require(p.nvars() == q.nvars(), ErrorCode::DimensionMismatch,
          "polynomial variable count mismatch");
  cplx s = 0.0;
  for (const auto& [a, c] : p.terms()) {
    cplx cq = q.coeff(a);
    if (cq != 0.0) s += mi_factorial(a) * c * std::conj(cq);
  }
  return s;
}

}  // namespace cymo

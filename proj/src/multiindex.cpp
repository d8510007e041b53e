#include "cymo/multiindex.hpp"

#include <algorithm>

#include "cymo/error.hpp"

namespace cymo {

int total_degree(const MultiIndex& a) {
  int s = 0;
  for (int v : a) s += v;
  return s;
}

double mi_factorial(const MultiIndex& a) {
  double f = 1.0;
  for (int v : a)
    for (int k = 2; k <= v; ++k) f *= k;
  return f;
}

static double binom1(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double b = 1.0;
  for (int j = 1; j <= k; ++j) b = b * (n - k + j) / j;
  return b;
}

double mi_binomial(const MultiIndex& a, const MultiIndex& g) {
  require(a.size() == g.size(), ErrorCode::DimensionMismatch, "binomial: index length mismatch");
  double b = 1.0;
  for (size_t i = 0; i < a.size(); ++i) {
    b *= binom1(a[i], g[i]);
    if (b == 0.0) return 0.0;
  }
  return b;
}

bool mi_leq(const MultiIndex& g, const MultiIndex& a) {
  if (g.size() != a.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (g[i] > a[i]) return false;
  return true;
}

MultiIndex mi_add(const MultiIndex& a, const MultiIndex& b) {
  require(a.size() == b.size(), ErrorCode::DimensionMismatch, "add: index length mismatch");
  MultiIndex r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

MultiIndex mi_sub(const MultiIndex& a, const MultiIndex& b) {
  require(mi_leq(b, a), ErrorCode::InvalidArgument, "sub: result would be negative");
  MultiIndex r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool graded_lex_less(const MultiIndex& a, const MultiIndex& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  // Same degree: (1,0) before (0,1), i.e. lexicographically larger exponent
  // vector comes first.
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

static void emit_degree(int nvars, int pos, int remaining, MultiIndex& cur,
                        std::vector<MultiIndex>& out) {
  if (pos == nvars - 1) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur[pos] = v;
    emit_degree(nvars, pos + 1, remaining - v, cur, out);
  }
}

std::vector<MultiIndex> enumerate_upto(int nvars, int degree) {
  require(nvars >= 1, ErrorCode::InvalidArgument, "enumerate_upto: nvars must be >= 1");
  require(degree >= 0, ErrorCode::InvalidArgument, "enumerate_upto: degree must be >= 0");
  std::vector<MultiIndex> out;
  out.reserve(static_cast<size_t>(basis_size(nvars, degree)));
  MultiIndex cur(nvars, 0);
  for (int k = 0; k <= degree; ++k) emit_degree(nvars, 0, k, cur, out);
  return out;
}

long basis_size(int nvars, int degree) {
  // C(nvars + degree, degree)
  double b = binom1(nvars + degree, degree);
  return static_cast<long>(b + 0.5);
}

GradedBasis::GradedBasis(int nvars, int degree)
    : nvars_(nvars), degree_(degree), list_(enumerate_upto(nvars, degree)) {
  for (int i = 0; i < static_cast<int>(list_.size()); ++i) pos_[list_[i]] = i;
}

int GradedBasis::find(const MultiIndex& a) const {
  auto it = pos_.find(a);
  return it == pos_.end() ? -1 : it->second;
}

}  // namespace cymo

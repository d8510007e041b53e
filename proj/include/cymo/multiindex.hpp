#pragma once

#include <map>
#include <vector>

namespace cymo {

// Exponent vector of a monomial z^alpha in n variables.  Entries are >= 0.
using MultiIndex = std::vector<int>;

int total_degree(const MultiIndex& a);

// alpha! = prod_i alpha_i!, as a double (orders beyond 20! exceed 64-bit integers,
// and every consumer is floating point anyway).
double mi_factorial(const MultiIndex& a);

// prod_i C(alpha_i, gamma_i).  Zero when gamma is not componentwise <= alpha.
double mi_binomial(const MultiIndex& a, const MultiIndex& g);

bool mi_leq(const MultiIndex& g, const MultiIndex& a);  // componentwise <=
MultiIndex mi_add(const MultiIndex& a, const MultiIndex& b);
MultiIndex mi_sub(const MultiIndex& a, const MultiIndex& b);  // requires b <= a

// Graded lexicographic order: degree first, then lexicographically by exponents
// (within one degree (1,0) precedes (0,1)).
bool graded_lex_less(const MultiIndex& a, const MultiIndex& b);

// All alpha with |alpha| <= degree, in graded lex order.  The enumeration for
// degree d is a prefix of the one for degree d+1.
std::vector<MultiIndex> enumerate_upto(int nvars, int degree);

// Number of multi-indices with |alpha| <= degree, C(nvars+degree, degree).
long basis_size(int nvars, int degree);

// Enumerated basis with O(log) position lookup; the canonical indexing used by
// every matrix built over monomials.
class GradedBasis {
 public:
  GradedBasis() = default;
  GradedBasis(int nvars, int degree);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(list_.size()); }
  const MultiIndex& at(int i) const { return list_[i]; }
  const std::vector<MultiIndex>& list() const { return list_; }

  // Position in graded lex order; -1 if out of range.
  int find(const MultiIndex& a) const;

 private:
  int nvars_ = 0;
  int degree_ = -1;
  std::vector<MultiIndex> list_;
  std::map<MultiIndex, int> pos_;
};

}  // namespace cymo

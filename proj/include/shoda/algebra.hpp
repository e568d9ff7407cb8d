#pragma once

#include <vector>

#include "shoda/group.hpp"
#include "shoda/rational.hpp"

namespace shoda {

/// An element of the rational group algebra QG: a sparse exact-rational
/// coefficient vector over group elements. Terms are sorted by element index
/// and hold nonzero coefficients only, so equality is plain comparison.
struct AlgebraElement {
  GroupPtr parent;
  std::vector<std::pair<int, Rational>> terms;

  bool is_zero() const { return terms.empty(); }
  Rational coeff(int x) const;

  bool operator==(const AlgebraElement& o) const {
    return parent == o.parent && terms == o.terms;
  }
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }
  bool operator<(const AlgebraElement& o) const { return terms < o.terms; }
};

AlgebraElement zero_element(GroupPtr g);
AlgebraElement one_element(GroupPtr g);
AlgebraElement from_terms(GroupPtr g, std::vector<std::pair<int, Rational>> terms);

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement scale(const AlgebraElement& x, const Rational& c);
AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y);  // convolution

// coefficient transport along h -> g^-1 h g
AlgebraElement conj_elt(const AlgebraElement& x, int g);

// (1/|S|) * sum of the members of S; always an idempotent
AlgebraElement hat(const Subgroup& s);

// product of (hat(K) - hat(L)) over the minimal normal subgroups L of H
// containing K properly; equals hat(K) when H = K. Requires K normal in H.
AlgebraElement epsilon(const Subgroup& h, const Subgroup& k);

// sum of the distinct U-conjugates of epsilon(H,K); central in QU
AlgebraElement e_sum(const Subgroup& u, const Subgroup& h, const Subgroup& k);

bool commutes_with_all(const AlgebraElement& x, const Subgroup& u);
bool is_idempotent(const AlgebraElement& x);

// { u in U : x^u = x }, verified to be a subgroup
Subgroup centralizer_of_element_in(const Subgroup& u, const AlgebraElement& x);

// the rational lambda with x^2 = lambda*x; throws NotScalarMultiple otherwise
Rational idempotency_scalar(const AlgebraElement& x);

// dim_Q(QG*e) for a central idempotent e, as the rank of the matrix of left
// multiplication by e
long long ideal_rank(const AlgebraElement& e);

// exact ranks of the left-multiplication matrix, exposed for cross-checks:
// fraction-free elimination over the integers, and an elimination mod p whose
// exactness is certified through the complementary idempotent
long long rank_bareiss(const AlgebraElement& e);
long long rank_modular_certified(const AlgebraElement& e);

}  // namespace shoda

#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "divcat/pbij.hpp"

namespace divcat {

/// A finite inverse monoid of partial bijections, closed under compose
/// and inverse, with precomputed Cayley and inverse tables. Elements sit
/// in canonical order: rank descending, then bracket text. Immutable.
struct FiniteInverseMonoid {
  int n = 0;
  std::vector<PartialBijection> elements;
  std::vector<std::string> labels;           // bracket text, parallel to elements
  std::vector<std::vector<int>> cayley;      // cayley[s][t] = index of s.t (t applied first)
  std::vector<int> inverse_of;
  std::vector<int> idempotents;              // element indices, in element order
  int identity_index = -1;
  int zero_index = -1;

  int size() const { return static_cast<int>(elements.size()); }
  int mul(int s, int t) const { return cayley[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)]; }
  int inv(int s) const { return inverse_of[static_cast<std::size_t>(s)]; }
  bool is_idempotent(int s) const { return elements[static_cast<std::size_t>(s)].is_idempotent(); }

  /// Index of an element, or -1 when absent.
  int index_of(const PartialBijection& f) const;
  int index_of_label(const std::string& bracket_text) const;

private:
  friend FiniteInverseMonoid build_monoid(int, std::vector<PartialBijection>);
  std::unordered_map<PartialBijection, int, PartialBijectionHash> index_;
};

/// The monoid IO_n of order-preserving partial bijections of {1..n}.
/// |IO_n| = C(2n, n): an element is determined by its domain/range pair.
FiniteInverseMonoid enumerate_IO(int n);

/// The symmetric inverse monoid I(M_n) of all partial bijections of {1..n}.
FiniteInverseMonoid enumerate_I(int n);

/// Axiom report for a finite monoid given by its multiplication table.
struct InverseMonoidReport {
  bool unique_inverses = false;
  bool idempotents_commute = false;
  bool one_idempotent_per_r_class = false;
  bool one_idempotent_per_l_class = false;
  std::vector<std::string> failures;

  bool ok() const {
    return unique_inverses && idempotents_commute && one_idempotent_per_r_class &&
           one_idempotent_per_l_class;
  }
};

InverseMonoidReport verify_inverse_monoid(const FiniteInverseMonoid& m);

/// Same checks against a bare multiplication table (indices 0..k-1).
/// Lets non-inverse monoids be fed in as counterexamples.
InverseMonoidReport verify_monoid_table(const std::vector<std::vector<int>>& mul);

/// Natural partial order: s <= t iff s = e.t for some idempotent e.
bool natural_leq(const FiniteInverseMonoid& m, int s, int t);

/// Green's relations as class ids per element index.
struct GreenStructure {
  std::vector<int> r_class, l_class, h_class, d_class;

  int classes(const std::vector<int>& v) const;
  bool h_trivial() const;
};

GreenStructure green(const FiniteInverseMonoid& m);

/// The idempotent semilattice (or a sub-semilattice of it) under the
/// natural order, with its cover relation.
struct IdempotentPoset {
  std::vector<int> members;                 // element indices of the monoid
  std::vector<std::vector<char>> leq;       // leq[i][j]: members[i] <= members[j]
  std::vector<std::pair<int, int>> hasse_edges;  // cover pairs (lower, upper), member positions

  int position_of(int element_index) const;  // -1 when absent
};

IdempotentPoset idempotent_poset(const FiniteInverseMonoid& m);

/// E(eSe) = the idempotents below e, with the induced order.
/// Throws std::invalid_argument when e is not idempotent.
IdempotentPoset local_idempotents(const FiniteInverseMonoid& m, int e);

/// Recursive poset Mobius value of the interval [x, y] (member positions).
/// mu(x,x) = 1 and mu(x,y) = -sum over x <= z < y of mu(x,z).
/// Throws std::invalid_argument when x is not below y.
long long poset_mobius(const IdempotentPoset& p, int x, int y);

/// One idempotent per D-class, containing the identity.
struct Transversal {
  std::vector<int> members;  // element indices, in element order
};

/// Default transversal: in the D-class of rank r the identity on the
/// top-r subset {n-r+1, ..., n}. Reproducible across runs.
Transversal choose_transversal(const FiniteInverseMonoid& m);

/// Checks a user-supplied idempotent set: one per idempotent D-class,
/// identity included. Throws std::invalid_argument otherwise.
Transversal validate_transversal(const FiniteInverseMonoid& m, const std::vector<int>& members);

}  // namespace divcat

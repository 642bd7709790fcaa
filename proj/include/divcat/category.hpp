#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "divcat/monoid.hpp"

namespace divcat {

/// A finite category with a total composition table over composable
/// pairs. Morphism indices are stable; hom-sets are stored dom-major,
/// cod-minor, ordered by label. Immutable after construction.
struct FiniteCategory {
  struct Morphism {
    std::string label;
    int dom = -1;
    int cod = -1;
  };

  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::vector<int> identities;           // per object
  std::vector<std::vector<int>> comp;    // comp[later][earlier], -1 when non-composable

  int object_count() const { return static_cast<int>(objects.size()); }
  int morphism_count() const { return static_cast<int>(morphisms.size()); }

  int compose(int later, int earlier) const {
    return comp[static_cast<std::size_t>(later)][static_cast<std::size_t>(earlier)];
  }
  bool is_identity(int m) const {
    return identities[static_cast<std::size_t>(morphisms[static_cast<std::size_t>(m)].dom)] == m &&
           morphisms[static_cast<std::size_t>(m)].dom == morphisms[static_cast<std::size_t>(m)].cod;
  }

  std::vector<int> hom(int dom, int cod) const;
  int object_index(const std::string& label) const;  // -1 when absent
  int morphism_index(const std::string& label) const;

  /// Composition defined exactly on composable pairs, associativity on
  /// all composable triples, identity laws. Throws std::logic_error on
  /// any violation.
  void check_axioms() const;
};

/// Morphisms of the standard division category are pairs (s, e) with e
/// idempotent, s^-1 s <= e, and codomain ss^-1.
struct DivMorphism {
  int s = -1;  // monoid element index
  int e = -1;  // domain object, as a monoid element index
};

/// The standard division category C(S): objects E(S), morphisms all
/// valid (s, e), composition (t, f).(s, e) = (ts, e).
FiniteCategory build_standard(const FiniteInverseMonoid& m);

/// The reduced category C_F(S): full subcategory of C(S) on the
/// transversal F.
FiniteCategory build_reduced(const FiniteInverseMonoid& m, const Transversal& f);

/// The (s, e) pair behind each morphism of build_standard/build_reduced,
/// parallel to the category's morphism list.
std::vector<DivMorphism> division_morphisms(const FiniteInverseMonoid& m, const Transversal& f);
std::vector<DivMorphism> division_morphisms(const FiniteInverseMonoid& m);

bool is_epimorphism(const FiniteCategory& c, int m);
bool is_monomorphism(const FiniteCategory& c, int m);

/// Objects I with Hom(I, X) nonempty for every X.
std::vector<int> quasi_initial_objects(const FiniteCategory& c);

/// Exhaustive pushout check over all spans. Throws SizeGuardError when
/// the category exceeds `guard` morphisms.
bool has_pushouts(const FiniteCategory& c, std::size_t guard = 40);

/// Non-identity morphisms admitting no factorization into two
/// non-identities.
std::vector<int> indecomposables(const FiniteCategory& c);

/// Brute-force search for an isomorphism of categories. Throws
/// SizeGuardError when either side exceeds `guard` morphisms.
bool is_isomorphic(const FiniteCategory& c1, const FiniteCategory& c2, std::size_t guard = 30);

}  // namespace divcat

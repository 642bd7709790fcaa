#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "divcat/category.hpp"
#include "divcat/monoid.hpp"

namespace divcat {

using Rational = boost::multiprecision::cpp_rational;

/// An exact-rational-valued function on the morphism set of one fixed
/// FiniteCategory. No floating point anywhere in this module.
class IncidenceFunction {
public:
  IncidenceFunction(const FiniteCategory& cat, std::vector<Rational> values);

  const FiniteCategory& category() const { return *cat_; }
  const Rational& operator[](int morphism) const {
    return values_[static_cast<std::size_t>(morphism)];
  }
  Rational& operator[](int morphism) { return values_[static_cast<std::size_t>(morphism)]; }
  const std::vector<Rational>& values() const { return values_; }

  bool bound_to(const FiniteCategory& cat) const { return cat_ == &cat; }
  bool operator==(const IncidenceFunction& other) const {
    return cat_ == other.cat_ && values_ == other.values_;
  }

private:
  const FiniteCategory* cat_;
  std::vector<Rational> values_;
};

/// All ordered factorizations per morphism: fact[a] lists the pairs
/// (b, c) with b.c = a, identity factors included. Shared substrate for
/// convolution, indecomposability, and the Mobius recursion.
std::vector<std::vector<std::pair<int, int>>> factorizations(const FiniteCategory& c);

/// (xi * eta)(a) = sum over bc = a of xi(b) * eta(c).
/// Throws std::invalid_argument when either function is bound to a
/// different category.
IncidenceFunction convolve(const FiniteCategory& c, const IncidenceFunction& xi,
                           const IncidenceFunction& eta);

/// The convolution identity: 1 on identity morphisms, 0 elsewhere.
IncidenceFunction delta(const FiniteCategory& c);

/// Constantly 1.
IncidenceFunction zeta(const FiniteCategory& c);

/// The convolution inverse of zeta, by peeling identity factors in a
/// dependency order, with an exact linear solve as fallback when the
/// recursion self-references. Throws NotMobiusError when the system is
/// singular.
IncidenceFunction mobius(const FiniteCategory& c);

/// The lattice formula for division categories of a combinatorial
/// inverse monoid: mu(s, e) = mu of the interval [s^-1 s, e] in E(eSe).
/// Throws NotMobiusError when the monoid is not combinatorial.
long long mobius_via_lattice(const FiniteInverseMonoid& m, int s, int e);

/// Checks the inversion round trips (xi * zeta) * mu = xi and
/// (xi * mu) * zeta = xi.
bool verify_inversion(const FiniteCategory& c, const IncidenceFunction& xi);

/// True iff every Mobius value is 1 or -1.
bool is_special_mobius(const FiniteCategory& c);

}  // namespace divcat

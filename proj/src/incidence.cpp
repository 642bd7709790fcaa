#include "divcat/incidence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "divcat/errors.hpp"

namespace divcat {

IncidenceFunction::IncidenceFunction(const FiniteCategory& cat, std::vector<Rational> values)
    : cat_(&cat), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != cat.morphism_count())
    throw std::invalid_argument("incidence function must be total on the morphism set");
}

std::vector<std::vector<std::pair<int, int>>> factorizations(const FiniteCategory& c) {
  std::vector<std::vector<std::pair<int, int>>> fact(
      static_cast<std::size_t>(c.morphism_count()));
  const int nm = c.morphism_count();
  for (int b = 0; b < nm; ++b)
    for (int g = 0; g < nm; ++g) {
      int a = c.compose(b, g);
      if (a >= 0) fact[static_cast<std::size_t>(a)].emplace_back(b, g);
    }
  return fact;
}

IncidenceFunction convolve(const FiniteCategory& c, const IncidenceFunction& xi,
                           const IncidenceFunction& eta) {
  if (!xi.bound_to(c) || !eta.bound_to(c))
    throw std::invalid_argument("convolve: function bound to a different category");
  auto fact = factorizations(c);
  std::vector<Rational> out(static_cast<std::size_t>(c.morphism_count()), Rational(0));
  for (int a = 0; a < c.morphism_count(); ++a)
    for (auto [b, g] : fact[static_cast<std::size_t>(a)])
      out[static_cast<std::size_t>(a)] += xi[b] * eta[g];
  return IncidenceFunction(c, std::move(out));
}

IncidenceFunction delta(const FiniteCategory& c) {
  std::vector<Rational> v(static_cast<std::size_t>(c.morphism_count()), Rational(0));
  for (int m = 0; m < c.morphism_count(); ++m)
    if (c.is_identity(m)) v[static_cast<std::size_t>(m)] = 1;
  return IncidenceFunction(c, std::move(v));
}

IncidenceFunction zeta(const FiniteCategory& c) {
  return IncidenceFunction(
      c, std::vector<Rational>(static_cast<std::size_t>(c.morphism_count()), Rational(1)));
}

namespace {

/// Exact solve of A x = d by Gaussian elimination over the rationals.
/// Returns false when A is singular.
bool solve_rational(std::vector<std::vector<Rational>> a, std::vector<Rational> d,
                    std::vector<Rational>& x) {
  const int n = static_cast<int>(a.size());
  std::vector<int> col_of_row(static_cast<std::size_t>(n), -1);
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int pivot = -1;
    for (int r = row; r < n; ++r)
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;
    std::swap(a[static_cast<std::size_t>(row)], a[static_cast<std::size_t>(pivot)]);
    std::swap(d[static_cast<std::size_t>(row)], d[static_cast<std::size_t>(pivot)]);
    for (int r = 0; r < n; ++r) {
      if (r == row) continue;
      Rational factor = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
                        a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
      if (factor == 0) continue;
      for (int cc = col; cc < n; ++cc)
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] -=
            factor * a[static_cast<std::size_t>(row)][static_cast<std::size_t>(cc)];
      d[static_cast<std::size_t>(r)] -= factor * d[static_cast<std::size_t>(row)];
    }
    col_of_row[static_cast<std::size_t>(row)] = col;
    ++row;
  }
  if (row < n) return false;
  x.assign(static_cast<std::size_t>(n), Rational(0));
  for (int r = 0; r < n; ++r) {
    int col = col_of_row[static_cast<std::size_t>(r)];
    x[static_cast<std::size_t>(col)] =
        d[static_cast<std::size_t>(r)] / a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
  }
  return true;
}

}  // namespace

IncidenceFunction mobius(const FiniteCategory& c) {
  const int nm = c.morphism_count();
  auto fact = factorizations(c);

  // zeta * mu = delta reads, per morphism a:
  //   delta(a) = sum over (b, g) with bg = a of mu(g).
  // Peel: if every mu(g) with g != a is known and a's self-coefficient
  // is nonzero, mu(a) follows.
  std::vector<Rational> mu(static_cast<std::size_t>(nm), Rational(0));
  std::vector<char> solved(static_cast<std::size_t>(nm), 0);

  std::vector<int> order(static_cast<std::size_t>(nm));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return fact[static_cast<std::size_t>(a)].size() < fact[static_cast<std::size_t>(b)].size();
  });

  bool progress = true;
  int remaining = nm;
  while (progress && remaining > 0) {
    progress = false;
    for (int a : order) {
      if (solved[static_cast<std::size_t>(a)]) continue;
      long long self_coeff = 0;
      Rational rest = 0;
      bool ready = true;
      for (auto [b, g] : fact[static_cast<std::size_t>(a)]) {
        if (g == a) {
          ++self_coeff;
        } else if (solved[static_cast<std::size_t>(g)]) {
          rest += mu[static_cast<std::size_t>(g)];
        } else {
          ready = false;
          break;
        }
      }
      if (!ready || self_coeff == 0) continue;
      Rational rhs = c.is_identity(a) ? Rational(1) : Rational(0);
      mu[static_cast<std::size_t>(a)] = (rhs - rest) / self_coeff;
      solved[static_cast<std::size_t>(a)] = 1;
      --remaining;
      progress = true;
    }
  }

  if (remaining > 0) {
    // Cyclic dependencies: solve the full system exactly.
    std::vector<std::vector<Rational>> mat(
        static_cast<std::size_t>(nm), std::vector<Rational>(static_cast<std::size_t>(nm), Rational(0)));
    std::vector<Rational> rhs(static_cast<std::size_t>(nm), Rational(0));
    for (int a = 0; a < nm; ++a) {
      for (auto [b, g] : fact[static_cast<std::size_t>(a)])
        mat[static_cast<std::size_t>(a)][static_cast<std::size_t>(g)] += 1;
      if (c.is_identity(a)) rhs[static_cast<std::size_t>(a)] = 1;
    }
    std::vector<Rational> x;
    if (!solve_rational(std::move(mat), std::move(rhs), x))
      throw NotMobiusError("zeta has no convolution inverse: singular system");
    mu = std::move(x);
  }

  IncidenceFunction out(c, std::move(mu));
  // mu must be two-sided; a one-sided solution of a singular-ish setup
  // would slip through the peeling otherwise.
  if (!(convolve(c, zeta(c), out) == delta(c)) || !(convolve(c, out, zeta(c)) == delta(c)))
    throw NotMobiusError("zeta has no two-sided convolution inverse");
  return out;
}

long long mobius_via_lattice(const FiniteInverseMonoid& m, int s, int e) {
  if (!green(m).h_trivial())
    throw NotMobiusError("mobius_via_lattice: monoid is not combinatorial");
  if (!m.is_idempotent(e))
    throw std::invalid_argument("mobius_via_lattice: e must be idempotent");
  int sis = m.mul(m.inv(s), s);  // s^-1 s
  IdempotentPoset local = local_idempotents(m, e);
  int x = local.position_of(sis);
  int y = local.position_of(e);
  if (x < 0 || y < 0) throw std::invalid_argument("mobius_via_lattice: (s, e) is not a morphism");
  return poset_mobius(local, x, y);
}

bool verify_inversion(const FiniteCategory& c, const IncidenceFunction& xi) {
  IncidenceFunction mu = mobius(c);
  IncidenceFunction z = zeta(c);
  return convolve(c, convolve(c, xi, z), mu) == xi && convolve(c, convolve(c, xi, mu), z) == xi;
}

bool is_special_mobius(const FiniteCategory& c) {
  IncidenceFunction mu = mobius(c);
  for (int a = 0; a < c.morphism_count(); ++a)
    if (mu[a] != 1 && mu[a] != -1) return false;
  return true;
}

}  // namespace divcat

#include "doctest.h"

#include <random>

#include "divcat/category.hpp"
#include "divcat/errors.hpp"
#include "divcat/incidence.hpp"
#include "divcat/seqcat.hpp"

using namespace divcat;

namespace {

FiniteCategory cf_io3() {
  auto m = enumerate_IO(3);
  return build_reduced(m, choose_transversal(m));
}

// The chain poset 0 < 1 < ... < k as a category.
FiniteCategory chain_category(int k) {
  FiniteCategory c;
  for (int i = 0; i <= k; ++i) c.objects.push_back(std::to_string(i));
  for (int i = 0; i <= k; ++i)
    for (int j = i; j <= k; ++j)
      c.morphisms.push_back({std::to_string(i) + "->" + std::to_string(j), i, j});
  c.identities.assign(k + 1, -1);
  for (int m = 0; m < c.morphism_count(); ++m)
    if (c.morphisms[m].dom == c.morphisms[m].cod) c.identities[c.morphisms[m].dom] = m;
  auto find = [&](int i, int j) {
    for (int m = 0; m < c.morphism_count(); ++m)
      if (c.morphisms[m].dom == i && c.morphisms[m].cod == j) return m;
    return -1;
  };
  c.comp.assign(c.morphism_count(), std::vector<int>(c.morphism_count(), -1));
  for (int g = 0; g < c.morphism_count(); ++g)
    for (int f = 0; f < c.morphism_count(); ++f)
      if (c.morphisms[g].dom == c.morphisms[f].cod)
        c.comp[g][f] = find(c.morphisms[f].dom, c.morphisms[g].cod);
  return c;
}

}  // namespace

TEST_CASE("delta and zeta") {
  auto c = cf_io3();
  auto d = delta(c);
  auto z = zeta(c);
  for (int m = 0; m < c.morphism_count(); ++m) {
    CHECK(z[m] == 1);
    CHECK(d[m] == (c.is_identity(m) ? 1 : 0));
  }
  CHECK(d[c.identities[c.object_index("[1]")]] == 1);
  CHECK(d[c.morphism_index("(0,i)")] == 0);
}

TEST_CASE("delta is the convolution identity") {
  auto c = cf_io3();
  auto d = delta(c);
  auto z = zeta(c);
  CHECK(convolve(c, d, z) == z);
  CHECK(convolve(c, z, d) == z);
}

TEST_CASE("zeta * zeta counts factorizations") {
  auto c = cf_io3();
  auto zz = convolve(c, zeta(c), zeta(c));
  auto fact = factorizations(c);
  for (int m = 0; m < c.morphism_count(); ++m)
    CHECK(zz[m] == Rational(static_cast<int>(fact[m].size())));
  // i -> 0 factors through 1_i, three morphisms to [1], three to [1][2], 1_0.
  CHECK(zz[c.morphism_index("(0,i)")] == 8);
}

TEST_CASE("functions bound to another category are rejected") {
  auto c1 = cf_io3();
  auto c2 = cf_io3();
  CHECK_THROWS_AS(convolve(c1, zeta(c1), zeta(c2)), std::invalid_argument);
}

TEST_CASE("Mobius values on C_F(IO_3) match the published case split") {
  auto c = cf_io3();
  auto mu = mobius(c);
  for (int x = 0; x < c.object_count(); ++x) CHECK(mu[c.identities[x]] == 1);
  for (int b : indecomposables(c)) CHECK(mu[b] == -1);
  CHECK(mu[c.morphism_index("(0,[1])")] == 1);
  CHECK(mu[c.morphism_index("([13][2],i)")] == 1);
  CHECK(mu[c.morphism_index("([23][1],i)")] == 1);
  CHECK(mu[c.morphism_index("([1][2],i)")] == 1);
  CHECK(mu[c.morphism_index("(0,i)")] == -1);

  // The 8-term expansion of (zeta * mu)(i -> 0): 1-1-1-1+1+1+1+mu = 0.
  CHECK(convolve(c, zeta(c), mu)[c.morphism_index("(0,i)")] == 0);
}

TEST_CASE("zeta * mu = mu * zeta = delta exactly") {
  auto m2 = enumerate_IO(2);
  for (const FiniteCategory& c : {cf_io3(), build_reduced(m2, choose_transversal(m2)),
                                  build_Cn(4).cat, chain_category(3)}) {
    auto mu = mobius(c);
    CHECK(convolve(c, zeta(c), mu) == delta(c));
    CHECK(convolve(c, mu, zeta(c)) == delta(c));
  }
}

TEST_CASE("the unreduced C(S) is not a Mobius category") {
  // D-related idempotents are isomorphic objects of C(S) (e.g.
  // ([12],[2]) : [2] -> [1] with inverse ([21],[1])), so zeta has no
  // convolution inverse before reduction.
  auto c = build_standard(enumerate_IO(3));
  CHECK_THROWS_AS(mobius(c), NotMobiusError);
}

TEST_CASE("convolution is associative and bilinear on random functions") {
  auto c = cf_io3();
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-9, 9);
  auto random_fn = [&] {
    std::vector<Rational> v(c.morphism_count());
    for (auto& x : v) x = dist(rng);
    return IncidenceFunction(c, std::move(v));
  };
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_fn(), b = random_fn(), d = random_fn();
    CHECK(convolve(c, convolve(c, a, b), d) == convolve(c, a, convolve(c, b, d)));
    // (a + b) * d = a*d + b*d, checked pointwise.
    std::vector<Rational> sum(c.morphism_count());
    for (int m = 0; m < c.morphism_count(); ++m) sum[m] = a[m] + b[m];
    auto lhs = convolve(c, IncidenceFunction(c, sum), d);
    auto r1 = convolve(c, a, d);
    auto r2 = convolve(c, b, d);
    for (int m = 0; m < c.morphism_count(); ++m) CHECK(lhs[m] == r1[m] + r2[m]);
  }
}

TEST_CASE("lattice formula agrees with convolution mu on C_F(IO_n), n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    auto m = enumerate_IO(n);
    auto f = choose_transversal(m);
    auto c = build_reduced(m, f);
    auto pairs = division_morphisms(m, f);
    auto mu = mobius(c);
    for (int i = 0; i < c.morphism_count(); ++i) {
      CHECK(mu[i] == mobius_via_lattice(m, pairs[i].s, pairs[i].e));
      CHECK(denominator(mu[i]) == 1);
    }
  }
}

TEST_CASE("lattice formula examples") {
  auto m = enumerate_IO(3);
  CHECK(mobius_via_lattice(m, m.zero_index, m.identity_index) == -1);
  CHECK(mobius_via_lattice(m, m.index_of_label("[1][2]"), m.identity_index) == 1);
  int e = m.index_of_label("[1][2]");
  CHECK(mobius_via_lattice(m, e, e) == 1);
  CHECK_THROWS_AS(mobius_via_lattice(m, m.index_of_label("[12]"), m.index_of_label("[12]")),
                  std::invalid_argument);
}

TEST_CASE("lattice formula rejects non-combinatorial monoids") {
  auto m = enumerate_I(3);  // contains the symmetric group on 3 points
  CHECK_THROWS_AS(mobius_via_lattice(m, m.zero_index, m.identity_index), NotMobiusError);
}

TEST_CASE("Mobius inversion round trips") {
  auto c = cf_io3();
  CHECK(verify_inversion(c, delta(c)));
  CHECK(verify_inversion(c, zeta(c)));
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> v(c.morphism_count());
    for (auto& x : v) x = dist(rng);
    CHECK(verify_inversion(c, IncidenceFunction(c, std::move(v))));
  }
}

TEST_CASE("special Mobius categories") {
  CHECK(is_special_mobius(cf_io3()));
  for (int n = 1; n <= 5; ++n) {
    auto m = enumerate_IO(n);
    CHECK(is_special_mobius(build_reduced(m, choose_transversal(m))));
  }
  // On the 3-chain the long interval has mu = 0.
  auto chain = chain_category(2);
  auto mu = mobius(chain);
  CHECK(mu[chain.morphism_index("0->2")] == 0);
  CHECK_FALSE(is_special_mobius(chain));
}

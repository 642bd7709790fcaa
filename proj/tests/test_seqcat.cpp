#include "doctest.h"

#include "divcat/incidence.hpp"
#include "divcat/seqcat.hpp"

using namespace divcat;

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("hom-set sizes of C_n are binomial coefficients") {
  for (int n = 0; n <= 6; ++n) {
    auto sc = build_Cn(n);
    sc.cat.check_axioms();
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        CHECK(static_cast<long long>(sc.cat.hom(i, j).size()) == binomial(i, j));
    CHECK(sc.cat.morphism_count() == (1 << (n + 1)) - 1);
  }
  CHECK(build_Cn(3).cat.hom(3, 1).size() == 3);
  CHECK(build_Cn(3).cat.hom(2, 3).empty());
  CHECK(build_Cn(3).cat.morphism_count() == 15);
  CHECK_THROWS_AS(build_Cn(13), std::invalid_argument);
  CHECK_THROWS_AS(build_Cn(-1), std::invalid_argument);
}

TEST_CASE("sequence composition selects entries") {
  SeqMorphism a{3, {1, 3}};   // 3 -> 2
  SeqMorphism b{2, {2}};      // 2 -> 1
  auto r = compose_seq(b, a);
  CHECK(r.source == 3);
  CHECK(r.entries == std::vector<int>{3});
  CHECK(r.label() == "(3)^3");

  SeqMorphism id2{2, {1, 2}};
  auto ra = compose_seq(id2, a);
  CHECK(ra.source == a.source);
  CHECK(ra.entries == a.entries);

  SeqMorphism empty{2, {}};   // 2 -> 0
  auto re = compose_seq(empty, a);
  CHECK(re.source == 3);
  CHECK(re.entries.empty());

  CHECK_THROWS_AS(compose_seq(a, b), std::invalid_argument);
}

TEST_CASE("composition results are strictly increasing") {
  auto sc = build_Cn(5);
  for (int g = 0; g < sc.cat.morphism_count(); ++g)
    for (int f = 0; f < sc.cat.morphism_count(); ++f) {
      if (sc.cat.compose(g, f) < 0) continue;
      const auto& r = sc.morphisms[sc.cat.compose(g, f)];
      for (std::size_t k = 1; k < r.entries.size(); ++k)
        CHECK(r.entries[k - 1] < r.entries[k]);
    }
}

TEST_CASE("closed-form Mobius values") {
  CHECK(mu_closed_form(SeqMorphism{3, {1, 2, 3}}) == 1);
  CHECK(mu_closed_form(SeqMorphism{3, {2}}) == 1);
  CHECK(mu_closed_form(SeqMorphism{3, {}}) == -1);
}

TEST_CASE("closed form equals convolution mu on C_n") {
  for (int n = 0; n <= 6; ++n) {
    auto sc = build_Cn(n);
    auto mu = mobius(sc.cat);
    for (int m = 0; m < sc.cat.morphism_count(); ++m)
      CHECK(mu[m] == mu_closed_form(sc.morphisms[m]));
    CHECK(is_special_mobius(sc.cat));
  }
}

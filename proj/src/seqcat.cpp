#include "divcat/seqcat.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace divcat {

bool SeqMorphism::is_identity() const {
  if (target() != source) return false;
  for (int k = 1; k <= source; ++k)
    if (entries[static_cast<std::size_t>(k - 1)] != k) return false;
  return true;
}

std::string SeqMorphism::label() const {
  std::string out = "(";
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(entries[k]);
  }
  out += ")^" + std::to_string(source);
  return out;
}

SeqMorphism compose_seq(const SeqMorphism& later, const SeqMorphism& earlier) {
  if (earlier.target() != later.source)
    throw std::invalid_argument("compose_seq: middle object mismatch");
  SeqMorphism out;
  out.source = earlier.source;
  out.entries.reserve(later.entries.size());
  for (int b : later.entries)
    out.entries.push_back(earlier.entries[static_cast<std::size_t>(b - 1)]);
  return out;
}

long long mu_closed_form(const SeqMorphism& m) {
  return ((m.source - m.target()) % 2 == 0) ? 1 : -1;
}

SeqCategory build_Cn(int n) {
  if (n < 0 || n > 12) throw std::invalid_argument("build_Cn: n must be in 0..12");
  SeqCategory sc;
  for (int i = 0; i <= n; ++i) sc.cat.objects.push_back(std::to_string(i));

  // Hom(i, j): strictly increasing j-subsets of {1..i}, in lexicographic
  // order, grouped dom-major then cod.
  std::map<std::pair<int, std::vector<int>>, int> index;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= i; ++j) {
      std::vector<int> tuple(static_cast<std::size_t>(j));
      for (int k = 0; k < j; ++k) tuple[static_cast<std::size_t>(k)] = k + 1;
      while (true) {
        SeqMorphism m{i, tuple};
        index[{i, tuple}] = sc.cat.morphism_count();
        sc.cat.morphisms.push_back({m.label(), i, j});
        sc.morphisms.push_back(std::move(m));
        // next strictly increasing j-tuple from {1..i}
        int k = j - 1;
        while (k >= 0 && tuple[static_cast<std::size_t>(k)] == i - (j - 1 - k)) --k;
        if (k < 0) break;
        ++tuple[static_cast<std::size_t>(k)];
        for (int kk = k + 1; kk < j; ++kk)
          tuple[static_cast<std::size_t>(kk)] = tuple[static_cast<std::size_t>(kk - 1)] + 1;
      }
    }
  }

  sc.cat.identities.assign(static_cast<std::size_t>(n) + 1, -1);
  for (int m = 0; m < sc.cat.morphism_count(); ++m)
    if (sc.morphisms[static_cast<std::size_t>(m)].is_identity())
      sc.cat.identities[static_cast<std::size_t>(sc.morphisms[static_cast<std::size_t>(m)].source)] = m;

  const int nm = sc.cat.morphism_count();
  sc.cat.comp.assign(static_cast<std::size_t>(nm),
                     std::vector<int>(static_cast<std::size_t>(nm), -1));
  for (int g = 0; g < nm; ++g) {
    for (int f = 0; f < nm; ++f) {
      const auto& later = sc.morphisms[static_cast<std::size_t>(g)];
      const auto& earlier = sc.morphisms[static_cast<std::size_t>(f)];
      if (earlier.target() != later.source) continue;
      SeqMorphism r = compose_seq(later, earlier);
      sc.cat.comp[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] =
          index.at({r.source, r.entries});
    }
  }
  return sc;
}

}  // namespace divcat

#include "divcat/category.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "divcat/errors.hpp"

namespace divcat {

std::vector<int> FiniteCategory::hom(int dom, int cod) const {
  std::vector<int> out;
  for (int m = 0; m < morphism_count(); ++m) {
    const auto& mor = morphisms[static_cast<std::size_t>(m)];
    if (mor.dom == dom && mor.cod == cod) out.push_back(m);
  }
  return out;
}

int FiniteCategory::object_index(const std::string& label) const {
  for (int i = 0; i < object_count(); ++i)
    if (objects[static_cast<std::size_t>(i)] == label) return i;
  return -1;
}

int FiniteCategory::morphism_index(const std::string& label) const {
  for (int i = 0; i < morphism_count(); ++i)
    if (morphisms[static_cast<std::size_t>(i)].label == label) return i;
  return -1;
}

void FiniteCategory::check_axioms() const {
  const int nm = morphism_count();
  if (static_cast<int>(identities.size()) != object_count())
    throw std::logic_error("one identity per object required");
  for (int x = 0; x < object_count(); ++x) {
    int id = identities[static_cast<std::size_t>(x)];
    const auto& mor = morphisms[static_cast<std::size_t>(id)];
    if (mor.dom != x || mor.cod != x) throw std::logic_error("identity endpoints wrong");
  }
  for (int g = 0; g < nm; ++g) {
    for (int f = 0; f < nm; ++f) {
      bool composable = morphisms[static_cast<std::size_t>(g)].dom ==
                        morphisms[static_cast<std::size_t>(f)].cod;
      int gf = compose(g, f);
      if (composable != (gf >= 0))
        throw std::logic_error("composition defined off the composable pairs");
      if (gf >= 0) {
        const auto& res = morphisms[static_cast<std::size_t>(gf)];
        if (res.dom != morphisms[static_cast<std::size_t>(f)].dom ||
            res.cod != morphisms[static_cast<std::size_t>(g)].cod)
          throw std::logic_error("composite endpoints wrong");
      }
    }
  }
  for (int f = 0; f < nm; ++f) {
    const auto& mor = morphisms[static_cast<std::size_t>(f)];
    if (compose(f, identities[static_cast<std::size_t>(mor.dom)]) != f ||
        compose(identities[static_cast<std::size_t>(mor.cod)], f) != f)
      throw std::logic_error("identity law violated");
  }
  for (int h = 0; h < nm; ++h) {
    for (int g = 0; g < nm; ++g) {
      int hg = compose(h, g);
      if (hg < 0) continue;
      for (int f = 0; f < nm; ++f) {
        int gf = compose(g, f);
        if (gf < 0) continue;
        if (compose(hg, f) != compose(h, gf))
          throw std::logic_error("associativity violated");
      }
    }
  }
}

namespace {

FiniteCategory build_division(const FiniteInverseMonoid& m, const std::vector<int>& object_elems,
                              std::vector<DivMorphism>* pairs_out) {
  FiniteCategory c;
  std::vector<int> obj_pos(static_cast<std::size_t>(m.size()), -1);
  for (int i = 0; i < static_cast<int>(object_elems.size()); ++i) {
    int e = object_elems[static_cast<std::size_t>(i)];
    c.objects.push_back(m.labels[static_cast<std::size_t>(e)]);
    obj_pos[static_cast<std::size_t>(e)] = i;
  }

  struct Entry {
    int s, e;        // monoid element indices
    int dom, cod;    // object positions
    std::string s_label;
  };
  std::vector<Entry> entries;
  for (int e : object_elems) {
    for (int s = 0; s < m.size(); ++s) {
      int ssi = m.mul(s, m.inv(s));       // ss^-1
      int sis = m.mul(m.inv(s), s);       // s^-1 s
      if (obj_pos[static_cast<std::size_t>(ssi)] < 0) continue;
      if (!natural_leq(m, sis, e)) continue;
      entries.push_back({s, e, obj_pos[static_cast<std::size_t>(e)],
                         obj_pos[static_cast<std::size_t>(ssi)],
                         m.labels[static_cast<std::size_t>(s)]});
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.dom != b.dom) return a.dom < b.dom;
    if (a.cod != b.cod) return a.cod < b.cod;
    return a.s_label < b.s_label;
  });

  std::map<std::pair<int, int>, int> mor_index;  // (s, e) -> morphism index
  for (const auto& en : entries) {
    mor_index[{en.s, en.e}] = c.morphism_count();
    c.morphisms.push_back({"(" + en.s_label + "," + m.labels[static_cast<std::size_t>(en.e)] + ")",
                           en.dom, en.cod});
    if (pairs_out) pairs_out->push_back({en.s, en.e});
  }

  c.identities.assign(c.objects.size(), -1);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& en = entries[i];
    if (en.s == en.e) c.identities[static_cast<std::size_t>(en.dom)] = static_cast<int>(i);
  }

  const int nm = c.morphism_count();
  c.comp.assign(static_cast<std::size_t>(nm), std::vector<int>(static_cast<std::size_t>(nm), -1));
  for (int g = 0; g < nm; ++g) {
    for (int f = 0; f < nm; ++f) {
      const auto& later = entries[static_cast<std::size_t>(g)];
      const auto& earlier = entries[static_cast<std::size_t>(f)];
      if (later.dom != earlier.cod) continue;
      int ts = m.mul(later.s, earlier.s);
      auto it = mor_index.find({ts, earlier.e});
      if (it == mor_index.end()) throw std::logic_error("division category not closed");
      c.comp[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] = it->second;
    }
  }
  return c;
}

}  // namespace

FiniteCategory build_standard(const FiniteInverseMonoid& m) {
  return build_division(m, m.idempotents, nullptr);
}

FiniteCategory build_reduced(const FiniteInverseMonoid& m, const Transversal& f) {
  validate_transversal(m, f.members);
  return build_division(m, f.members, nullptr);
}

std::vector<DivMorphism> division_morphisms(const FiniteInverseMonoid& m, const Transversal& f) {
  std::vector<DivMorphism> out;
  build_division(m, f.members, &out);
  return out;
}

std::vector<DivMorphism> division_morphisms(const FiniteInverseMonoid& m) {
  std::vector<DivMorphism> out;
  build_division(m, m.idempotents, &out);
  return out;
}

bool is_epimorphism(const FiniteCategory& c, int m) {
  const int nm = c.morphism_count();
  for (int g = 0; g < nm; ++g) {
    int gm = c.compose(g, m);
    if (gm < 0) continue;
    for (int h = 0; h < nm; ++h) {
      if (h == g) continue;
      if (c.compose(h, m) == gm) return false;
    }
  }
  return true;
}

bool is_monomorphism(const FiniteCategory& c, int m) {
  const int nm = c.morphism_count();
  for (int g = 0; g < nm; ++g) {
    int mg = c.compose(m, g);
    if (mg < 0) continue;
    for (int h = 0; h < nm; ++h) {
      if (h == g) continue;
      if (c.compose(m, h) == mg) return false;
    }
  }
  return true;
}

std::vector<int> quasi_initial_objects(const FiniteCategory& c) {
  std::vector<int> out;
  for (int i = 0; i < c.object_count(); ++i) {
    bool ok = true;
    for (int x = 0; x < c.object_count() && ok; ++x)
      if (c.hom(i, x).empty()) ok = false;
    if (ok) out.push_back(i);
  }
  return out;
}

bool has_pushouts(const FiniteCategory& c, std::size_t guard) {
  if (static_cast<std::size_t>(c.morphism_count()) > guard)
    throw SizeGuardError("pushout search aborted: " + std::to_string(c.morphism_count()) +
                         " morphisms exceed the cap of " + std::to_string(guard));
  const int nm = c.morphism_count();
  for (int f = 0; f < nm; ++f) {
    for (int g = 0; g < nm; ++g) {
      if (c.morphisms[static_cast<std::size_t>(f)].dom !=
          c.morphisms[static_cast<std::size_t>(g)].dom)
        continue;
      // Span B <-f- A -g-> C. Collect all cocones (p, q) with pf = qg.
      std::vector<std::pair<int, int>> cocones;
      for (int p = 0; p < nm; ++p) {
        int pf = c.compose(p, f);
        if (pf < 0) continue;
        for (int q = 0; q < nm; ++q) {
          if (c.morphisms[static_cast<std::size_t>(q)].cod !=
              c.morphisms[static_cast<std::size_t>(p)].cod)
            continue;
          if (c.compose(q, g) == pf) cocones.emplace_back(p, q);
        }
      }
      bool found = false;
      for (const auto& [p, q] : cocones) {
        bool universal = true;
        for (const auto& [p2, q2] : cocones) {
          int count = 0;
          for (int h = 0; h < nm; ++h)
            if (c.compose(h, p) == p2 && c.compose(h, q) == q2) ++count;
          if (count != 1) {
            universal = false;
            break;
          }
        }
        if (universal) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

std::vector<int> indecomposables(const FiniteCategory& c) {
  std::vector<int> out;
  const int nm = c.morphism_count();
  for (int m = 0; m < nm; ++m) {
    if (c.is_identity(m)) continue;
    bool decomposable = false;
    for (int g = 0; g < nm && !decomposable; ++g) {
      if (c.is_identity(g)) continue;
      for (int f = 0; f < nm; ++f) {
        if (c.is_identity(f)) continue;
        if (c.compose(g, f) == m) {
          decomposable = true;
          break;
        }
      }
    }
    if (!decomposable) out.push_back(m);
  }
  return out;
}

namespace {

/// Backtracking functor search once an object bijection is fixed.
struct MorphismMatcher {
  const FiniteCategory& c1;
  const FiniteCategory& c2;
  const std::vector<int>& obj_map;
  std::vector<int> mor_map;   // c1 morphism -> c2 morphism, -1 unset
  std::vector<char> used;     // c2 morphisms already taken

  bool extend(int m) {
    if (m == c1.morphism_count()) return true;
    const auto& mor = c1.morphisms[static_cast<std::size_t>(m)];
    int want_dom = obj_map[static_cast<std::size_t>(mor.dom)];
    int want_cod = obj_map[static_cast<std::size_t>(mor.cod)];
    for (int cand : c2.hom(want_dom, want_cod)) {
      if (used[static_cast<std::size_t>(cand)]) continue;
      if (c1.is_identity(m) != c2.is_identity(cand)) continue;
      mor_map[static_cast<std::size_t>(m)] = cand;
      used[static_cast<std::size_t>(cand)] = 1;
      bool ok = true;
      for (int other = 0; other <= m && ok; ++other) {
        if (mor_map[static_cast<std::size_t>(other)] < 0) continue;
        int a = c1.compose(m, other);
        if (a >= 0 && mor_map[static_cast<std::size_t>(a)] >= 0) {
          if (c2.compose(cand, mor_map[static_cast<std::size_t>(other)]) !=
              mor_map[static_cast<std::size_t>(a)])
            ok = false;
        }
        if (!ok) break;
        int b = c1.compose(other, m);
        if (b >= 0 && mor_map[static_cast<std::size_t>(b)] >= 0) {
          if (c2.compose(mor_map[static_cast<std::size_t>(other)], cand) !=
              mor_map[static_cast<std::size_t>(b)])
            ok = false;
        }
      }
      if (ok && extend(m + 1)) return true;
      mor_map[static_cast<std::size_t>(m)] = -1;
      used[static_cast<std::size_t>(cand)] = 0;
    }
    return false;
  }
};

bool object_maps_compatible(const FiniteCategory& c1, const FiniteCategory& c2,
                            const std::vector<int>& obj_map, int upto) {
  for (int x = 0; x <= upto; ++x)
    for (int y = 0; y <= upto; ++y)
      if (c1.hom(x, y).size() != c2.hom(obj_map[static_cast<std::size_t>(x)],
                                        obj_map[static_cast<std::size_t>(y)]).size())
        return false;
  return true;
}

bool search_object_map(const FiniteCategory& c1, const FiniteCategory& c2,
                       std::vector<int>& obj_map, std::vector<char>& taken, int x) {
  if (x == c1.object_count()) {
    MorphismMatcher matcher{c1, c2, obj_map,
                            std::vector<int>(static_cast<std::size_t>(c1.morphism_count()), -1),
                            std::vector<char>(static_cast<std::size_t>(c2.morphism_count()), 0)};
    return matcher.extend(0);
  }
  for (int y = 0; y < c2.object_count(); ++y) {
    if (taken[static_cast<std::size_t>(y)]) continue;
    obj_map[static_cast<std::size_t>(x)] = y;
    taken[static_cast<std::size_t>(y)] = 1;
    if (object_maps_compatible(c1, c2, obj_map, x) &&
        search_object_map(c1, c2, obj_map, taken, x + 1))
      return true;
    taken[static_cast<std::size_t>(y)] = 0;
    obj_map[static_cast<std::size_t>(x)] = -1;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const FiniteCategory& c1, const FiniteCategory& c2, std::size_t guard) {
  std::size_t size = std::max(static_cast<std::size_t>(c1.morphism_count()),
                              static_cast<std::size_t>(c2.morphism_count()));
  if (size > guard)
    throw SizeGuardError("isomorphism search aborted: " + std::to_string(size) +
                         " morphisms exceed the cap of " + std::to_string(guard));
  if (c1.object_count() != c2.object_count() || c1.morphism_count() != c2.morphism_count())
    return false;
  std::vector<int> obj_map(static_cast<std::size_t>(c1.object_count()), -1);
  std::vector<char> taken(static_cast<std::size_t>(c2.object_count()), 0);
  return search_object_map(c1, c2, obj_map, taken, 0);
}

}  // namespace divcat

#include "divcat/monoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace divcat {

int FiniteInverseMonoid::index_of(const PartialBijection& f) const {
  auto it = index_.find(f);
  return it == index_.end() ? -1 : it->second;
}

int FiniteInverseMonoid::index_of_label(const std::string& bracket_text) const {
  return index_of(parse_bracket(bracket_text, n));
}

FiniteInverseMonoid build_monoid(int n, std::vector<PartialBijection> elems) {
  FiniteInverseMonoid m;
  m.n = n;

  std::vector<std::pair<std::string, PartialBijection>> keyed;
  keyed.reserve(elems.size());
  for (auto& f : elems) keyed.emplace_back(print_bracket(f), std::move(f));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    int ra = a.second.rank(), rb = b.second.rank();
    if (ra != rb) return ra > rb;
    return a.first < b.first;
  });

  for (auto& [label, f] : keyed) {
    m.index_.emplace(f, static_cast<int>(m.elements.size()));
    m.labels.push_back(label);
    m.elements.push_back(std::move(f));
  }

  const int k = m.size();
  m.cayley.assign(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k), -1));
  for (int s = 0; s < k; ++s) {
    for (int t = 0; t < k; ++t) {
      int p = m.index_of(compose(m.elements[static_cast<std::size_t>(s)],
                                 m.elements[static_cast<std::size_t>(t)]));
      if (p < 0) throw std::logic_error("element set not closed under composition");
      m.cayley[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = p;
    }
  }
  m.inverse_of.resize(static_cast<std::size_t>(k));
  for (int s = 0; s < k; ++s) {
    int p = m.index_of(m.elements[static_cast<std::size_t>(s)].inverse());
    if (p < 0) throw std::logic_error("element set not closed under inversion");
    m.inverse_of[static_cast<std::size_t>(s)] = p;
  }
  for (int s = 0; s < k; ++s) {
    const auto& f = m.elements[static_cast<std::size_t>(s)];
    if (f.is_idempotent()) m.idempotents.push_back(s);
    if (f.is_full_identity()) m.identity_index = s;
    if (f.is_zero()) m.zero_index = s;
  }
  return m;
}

FiniteInverseMonoid enumerate_IO(int n) {
  if (n < 1 || n > 9) throw std::invalid_argument("enumerate_IO: n must be in 1..9");
  // An order-preserving partial bijection is exactly the increasing
  // bijection between a domain subset and a range subset of equal size.
  std::vector<std::vector<int>> subsets_by_size(static_cast<std::size_t>(n) + 1);
  for (int mask = 0; mask < (1 << n); ++mask)
    subsets_by_size[static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(mask)))]
        .push_back(mask);

  std::vector<PartialBijection> elems;
  for (int k = 0; k <= n; ++k) {
    for (int dom : subsets_by_size[static_cast<std::size_t>(k)]) {
      for (int ran : subsets_by_size[static_cast<std::size_t>(k)]) {
        std::vector<int> ds, rs;
        for (int a = 1; a <= n; ++a) {
          if (dom & (1 << (a - 1))) ds.push_back(a);
          if (ran & (1 << (a - 1))) rs.push_back(a);
        }
        std::vector<std::pair<int, int>> pairs;
        for (int j = 0; j < k; ++j)
          pairs.emplace_back(ds[static_cast<std::size_t>(j)], rs[static_cast<std::size_t>(j)]);
        elems.push_back(PartialBijection::from_pairs(n, pairs));
      }
    }
  }
  return build_monoid(n, std::move(elems));
}

FiniteInverseMonoid enumerate_I(int n) {
  if (n < 1 || n > 9) throw std::invalid_argument("enumerate_I: n must be in 1..9");
  std::vector<PartialBijection> elems;
  std::vector<std::pair<int, int>> pairs;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  // Backtrack over images of 1..n (0 = no image), injectively.
  auto rec = [&](auto&& self, int a) -> void {
    if (a > n) {
      elems.push_back(PartialBijection::from_pairs(n, pairs));
      return;
    }
    self(self, a + 1);  // a has no image
    for (int b = 1; b <= n; ++b) {
      if (used[b]) continue;
      used[b] = 1;
      pairs.emplace_back(a, b);
      self(self, a + 1);
      pairs.pop_back();
      used[b] = 0;
    }
  };
  rec(rec, 1);
  return build_monoid(n, std::move(elems));
}

InverseMonoidReport verify_monoid_table(const std::vector<std::vector<int>>& mul) {
  const int k = static_cast<int>(mul.size());
  InverseMonoidReport rep;
  rep.unique_inverses = true;
  rep.idempotents_commute = true;
  rep.one_idempotent_per_r_class = true;
  rep.one_idempotent_per_l_class = true;

  auto at = [&](int s, int t) { return mul[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)]; };

  std::vector<int> idem;
  for (int e = 0; e < k; ++e)
    if (at(e, e) == e) idem.push_back(e);

  std::vector<int> inv(static_cast<std::size_t>(k), -1);
  for (int s = 0; s < k; ++s) {
    int count = 0;
    for (int t = 0; t < k; ++t) {
      if (at(at(s, t), s) == s && at(at(t, s), t) == t) {
        ++count;
        inv[static_cast<std::size_t>(s)] = t;
      }
    }
    if (count != 1) {
      rep.unique_inverses = false;
      rep.failures.push_back("element " + std::to_string(s) + " has " + std::to_string(count) +
                             " inverses");
    }
  }
  for (std::size_t a = 0; a < idem.size(); ++a) {
    for (std::size_t b = a + 1; b < idem.size(); ++b) {
      if (at(idem[a], idem[b]) != at(idem[b], idem[a])) {
        rep.idempotents_commute = false;
        rep.failures.push_back("idempotents " + std::to_string(idem[a]) + " and " +
                               std::to_string(idem[b]) + " do not commute");
      }
    }
  }

  if (!rep.unique_inverses) {
    // R/L characterization via ss^-1 needs inverses; fall back to ideals.
    auto right_ideal = [&](int s) {
      std::set<int> out{s};
      for (int t = 0; t < k; ++t) out.insert(at(s, t));
      return out;
    };
    auto left_ideal = [&](int s) {
      std::set<int> out{s};
      for (int t = 0; t < k; ++t) out.insert(at(t, s));
      return out;
    };
    std::map<std::set<int>, int> r_counts, l_counts;
    for (int e : idem) {
      ++r_counts[right_ideal(e)];
      ++l_counts[left_ideal(e)];
    }
    std::set<std::set<int>> all_r, all_l;
    for (int s = 0; s < k; ++s) {
      all_r.insert(right_ideal(s));
      all_l.insert(left_ideal(s));
    }
    for (const auto& cls : all_r)
      if (r_counts[cls] != 1) rep.one_idempotent_per_r_class = false;
    for (const auto& cls : all_l)
      if (l_counts[cls] != 1) rep.one_idempotent_per_l_class = false;
    if (!rep.one_idempotent_per_r_class)
      rep.failures.push_back("some R-class lacks a unique idempotent");
    if (!rep.one_idempotent_per_l_class)
      rep.failures.push_back("some L-class lacks a unique idempotent");
    return rep;
  }

  std::map<int, int> r_idem_count, l_idem_count;  // keyed by ss^-1 resp. s^-1 s
  std::set<int> r_keys, l_keys;
  for (int s = 0; s < k; ++s) {
    r_keys.insert(at(s, inv[static_cast<std::size_t>(s)]));
    l_keys.insert(at(inv[static_cast<std::size_t>(s)], s));
  }
  for (int e : idem) {
    ++r_idem_count[at(e, inv[static_cast<std::size_t>(e)])];
    ++l_idem_count[at(inv[static_cast<std::size_t>(e)], e)];
  }
  for (int key : r_keys) {
    if (r_idem_count[key] != 1) {
      rep.one_idempotent_per_r_class = false;
      rep.failures.push_back("R-class of idempotent key " + std::to_string(key) +
                             " has " + std::to_string(r_idem_count[key]) + " idempotents");
    }
  }
  for (int key : l_keys) {
    if (l_idem_count[key] != 1) {
      rep.one_idempotent_per_l_class = false;
      rep.failures.push_back("L-class of idempotent key " + std::to_string(key) +
                             " has " + std::to_string(l_idem_count[key]) + " idempotents");
    }
  }
  return rep;
}

InverseMonoidReport verify_inverse_monoid(const FiniteInverseMonoid& m) {
  return verify_monoid_table(m.cayley);
}

bool natural_leq(const FiniteInverseMonoid& m, int s, int t) {
  for (int e : m.idempotents)
    if (m.mul(e, t) == s) return true;
  return false;
}

int GreenStructure::classes(const std::vector<int>& v) const {
  std::set<int> ids(v.begin(), v.end());
  return static_cast<int>(ids.size());
}

bool GreenStructure::h_trivial() const {
  return classes(h_class) == static_cast<int>(h_class.size());
}

namespace {

std::vector<int> normalize_classes(const std::vector<int>& keys) {
  std::map<int, int> remap;
  std::vector<int> out(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    auto [it, inserted] = remap.emplace(keys[i], static_cast<int>(remap.size()));
    out[i] = it->second;
  }
  return out;
}

}  // namespace

GreenStructure green(const FiniteInverseMonoid& m) {
  const int k = m.size();
  GreenStructure g;
  std::vector<int> rr(static_cast<std::size_t>(k)), ll(static_cast<std::size_t>(k));
  for (int s = 0; s < k; ++s) {
    rr[static_cast<std::size_t>(s)] = m.mul(s, m.inv(s));  // ss^-1
    ll[static_cast<std::size_t>(s)] = m.mul(m.inv(s), s);  // s^-1 s
  }
  g.r_class = normalize_classes(rr);
  g.l_class = normalize_classes(ll);

  std::vector<int> hh(static_cast<std::size_t>(k));
  {
    std::map<std::pair<int, int>, int> remap;
    for (int s = 0; s < k; ++s) {
      auto key = std::make_pair(rr[static_cast<std::size_t>(s)], ll[static_cast<std::size_t>(s)]);
      auto [it, inserted] = remap.emplace(key, static_cast<int>(remap.size()));
      hh[static_cast<std::size_t>(s)] = it->second;
    }
  }
  g.h_class = hh;

  // D as the transitive join of R and L (union-find).
  std::vector<int> parent(static_cast<std::size_t>(k));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
  std::map<int, int> r_rep, l_rep;
  for (int s = 0; s < k; ++s) {
    auto [rit, rnew] = r_rep.emplace(rr[static_cast<std::size_t>(s)], s);
    if (!rnew) unite(s, rit->second);
    auto [lit, lnew] = l_rep.emplace(ll[static_cast<std::size_t>(s)], s);
    if (!lnew) unite(s, lit->second);
  }
  std::vector<int> dd(static_cast<std::size_t>(k));
  for (int s = 0; s < k; ++s) dd[static_cast<std::size_t>(s)] = find(s);
  g.d_class = normalize_classes(dd);
  return g;
}

int IdempotentPoset::position_of(int element_index) const {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i] == element_index) return static_cast<int>(i);
  return -1;
}

namespace {

IdempotentPoset poset_from_members(const FiniteInverseMonoid& m, std::vector<int> members) {
  IdempotentPoset p;
  p.members = std::move(members);
  const int k = static_cast<int>(p.members.size());
  p.leq.assign(static_cast<std::size_t>(k), std::vector<char>(static_cast<std::size_t>(k), 0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      int e = p.members[static_cast<std::size_t>(i)], f = p.members[static_cast<std::size_t>(j)];
      p.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          (m.mul(e, f) == e && m.mul(f, e) == e);
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j || !p.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
      bool cover = true;
      for (int z = 0; z < k && cover; ++z) {
        if (z == i || z == j) continue;
        if (p.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(z)] &&
            p.leq[static_cast<std::size_t>(z)][static_cast<std::size_t>(j)])
          cover = false;
      }
      if (cover) p.hasse_edges.emplace_back(i, j);
    }
  }
  return p;
}

}  // namespace

IdempotentPoset idempotent_poset(const FiniteInverseMonoid& m) {
  return poset_from_members(m, m.idempotents);
}

IdempotentPoset local_idempotents(const FiniteInverseMonoid& m, int e) {
  if (!m.is_idempotent(e)) throw std::invalid_argument("local_idempotents: e is not idempotent");
  std::vector<int> members;
  for (int f : m.idempotents)
    if (m.mul(f, e) == f && m.mul(e, f) == f) members.push_back(f);
  return poset_from_members(m, members);
}

long long poset_mobius(const IdempotentPoset& p, int x, int y) {
  if (x < 0 || y < 0 || x >= static_cast<int>(p.members.size()) ||
      y >= static_cast<int>(p.members.size()) ||
      !p.leq[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)])
    throw std::invalid_argument("poset_mobius: x is not below y");
  if (x == y) return 1;
  long long sum = 0;
  for (int z = 0; z < static_cast<int>(p.members.size()); ++z) {
    if (z == y) continue;
    if (p.leq[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)] &&
        p.leq[static_cast<std::size_t>(z)][static_cast<std::size_t>(y)])
      sum += poset_mobius(p, x, z);
  }
  return -sum;
}

Transversal choose_transversal(const FiniteInverseMonoid& m) {
  GreenStructure g = green(m);
  std::set<int> seen_classes;
  std::vector<int> members;
  for (int e : m.idempotents) seen_classes.insert(g.d_class[static_cast<std::size_t>(e)]);
  for (int cls : seen_classes) {
    // Rank is constant on a D-class; pick the identity on the top-r suffix.
    int rank = -1;
    for (int e : m.idempotents) {
      if (g.d_class[static_cast<std::size_t>(e)] == cls) {
        rank = m.elements[static_cast<std::size_t>(e)].rank();
        break;
      }
    }
    std::vector<std::pair<int, int>> pairs;
    for (int a = m.n - rank + 1; a <= m.n; ++a) pairs.emplace_back(a, a);
    int idx = m.index_of(PartialBijection::from_pairs(m.n, pairs));
    if (idx < 0 || g.d_class[static_cast<std::size_t>(idx)] != cls)
      throw std::logic_error("default transversal pick not in its D-class");
    members.push_back(idx);
  }
  std::sort(members.begin(), members.end());
  Transversal t{std::move(members)};
  return validate_transversal(m, t.members);
}

Transversal validate_transversal(const FiniteInverseMonoid& m, const std::vector<int>& members) {
  GreenStructure g = green(m);
  std::set<int> idem_classes;
  for (int e : m.idempotents) idem_classes.insert(g.d_class[static_cast<std::size_t>(e)]);
  std::map<int, int> count_per_class;
  bool has_identity = false;
  for (int e : members) {
    if (e < 0 || e >= m.size() || !m.is_idempotent(e))
      throw std::invalid_argument("transversal member is not an idempotent of the monoid");
    ++count_per_class[g.d_class[static_cast<std::size_t>(e)]];
    if (e == m.identity_index) has_identity = true;
  }
  if (!has_identity) throw std::invalid_argument("transversal must contain the identity");
  if (count_per_class.size() != idem_classes.size() ||
      static_cast<int>(members.size()) != static_cast<int>(idem_classes.size()))
    throw std::invalid_argument("transversal must pick exactly one idempotent per D-class");
  for (auto [cls, cnt] : count_per_class)
    if (cnt != 1) throw std::invalid_argument("transversal picks two idempotents in one D-class");
  Transversal t;
  t.members = members;
  std::sort(t.members.begin(), t.members.end());
  return t;
}

}  // namespace divcat

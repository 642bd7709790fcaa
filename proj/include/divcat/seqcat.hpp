#pragma once

#include <string>
#include <vector>

#include "divcat/category.hpp"

namespace divcat {

/// A morphism of the sequence category: a strictly increasing tuple
/// (a_1, ..., a_j) with entries in {1..source}, read as source -> target
/// where target = j.
struct SeqMorphism {
  int source = 0;
  std::vector<int> entries;

  int target() const { return static_cast<int>(entries.size()); }
  bool is_identity() const;
  std::string label() const;  // "(a1,a2,...)^i"
};

/// Entry selection: (b_1..b_k)^j after (a_1..a_j)^i is (a_{b_1}..a_{b_k})^i.
/// Throws std::invalid_argument when the middle object mismatches.
SeqMorphism compose_seq(const SeqMorphism& later, const SeqMorphism& earlier);

/// mu of the sequence category in closed form: (-1)^(i - j).
long long mu_closed_form(const SeqMorphism& m);

/// The category of strictly increasing sequences on objects {0..n}:
/// Hom(i, j) = all strictly increasing j-tuples from {1..i} for j <= i.
struct SeqCategory {
  FiniteCategory cat;                  // objects labeled "0".."n"
  std::vector<SeqMorphism> morphisms;  // parallel to cat.morphisms
};

/// Requires 0 <= n <= 12.
SeqCategory build_Cn(int n);

}  // namespace divcat

#pragma once

#include <string>
#include <vector>

#include "divcat/category.hpp"
#include "divcat/monoid.hpp"

namespace divcat {

/// A labeled rectangular table of strings, ready for text/CSV/JSON
/// rendering. `corner` is the top-left header cell.
struct LabeledTable {
  std::string corner;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::vector<std::string>> cells;
};

std::string render_text(const LabeledTable& t);
std::string render_csv(const LabeledTable& t);
std::string render_json(const LabeledTable& t);

/// Cayley table of the whole monoid restricted to the given rows/cols
/// (element indices); cell (r, c) is the label of r.c.
LabeledTable cayley_table(const FiniteInverseMonoid& m, const std::vector<int>& rows,
                          const std::vector<int>& cols);

/// Two columns: s^-1 per element.
LabeledTable inverse_table(const FiniteInverseMonoid& m, const std::vector<int>& rows);

/// Three columns: s, s^-1 s, ss^-1.
LabeledTable green_rl_table(const FiniteInverseMonoid& m, const std::vector<int>& rows);

std::string order_csv(const FiniteInverseMonoid& m, const IdempotentPoset& p);
std::string hasse_dot(const FiniteInverseMonoid& m, const IdempotentPoset& p);

std::string green_json(const FiniteInverseMonoid& m, const GreenStructure& g);

std::string category_dot(const FiniteCategory& c);
std::string category_json(const FiniteCategory& c);

}  // namespace divcat

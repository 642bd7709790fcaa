#pragma once

#include <string>
#include <utility>
#include <vector>

namespace divcat::fixtures {

/// Golden data for the n = 3 case: the published composition, inverse
/// and idempotent tables of IO_3 with their original row/column layout,
/// plus the order relation, Hom-sets and morphism compositions of the
/// reduced division category on F = {0, [1], [1][2], i}.

using Cells = std::vector<std::vector<std::string>>;

// The 20 elements in published order.
const std::vector<std::string>& io3_elements();

// Rank-1 and rank-2 header orders shared by the four composition tables.
const std::vector<std::string>& rank1_header();
const std::vector<std::string>& rank2_header();

// Composition tables: rows compose after columns.
const Cells& table_2_1();  // rank-1 rows x rank-1 cols
const Cells& table_2_2();  // rank-1 rows x rank-2 cols
const Cells& table_2_3();  // rank-2 rows x rank-1 cols
const Cells& table_2_4();  // rank-2 rows x rank-2 cols

// Inverses, (s, s^-1) in published order.
const std::vector<std::pair<std::string, std::string>>& table_2_5();

// Idempotent Cayley table with its header order.
const std::vector<std::string>& e_header();
const Cells& table_2_6();

// (s, s^-1 s, s s^-1) rows in published order.
const std::vector<std::vector<std::string>>& table_2_7();

// The full order relation on E(IO_3) as (lower, upper) pairs, and its
// cover relation.
const std::vector<std::pair<std::string, std::string>>& e_order();
const std::vector<std::pair<std::string, std::string>>& e_hasse_covers();

// Hom-sets of the reduced category: ((dom, cod), morphism labels).
struct HomFixture {
  std::string dom, cod;
  std::vector<std::string> morphisms;  // labels "(s,e)"
};
const std::vector<HomFixture>& cf_hom_sets();

// The six displayed compositions: later . earlier = result, by label.
struct CompositionFixture {
  std::string later, earlier, result;
};
const std::vector<CompositionFixture>& cf_compositions();

}  // namespace divcat::fixtures

#include "divcat/fixtures.hpp"

namespace divcat::fixtures {

const std::vector<std::string>& io3_elements() {
  static const std::vector<std::string> v = {
      "[1]",     "[2]",     "[3]",     "[12]",    "[21]",    "[23]",    "[32]",
      "[123]",   "[321]",   "[1][2]",  "[1][3]",  "[2][3]",  "[31][2]", "[13][2]",
      "[32][1]", "[23][1]", "[12][3]", "[21][3]", "0",       "i"};
  return v;
}

const std::vector<std::string>& rank1_header() {
  static const std::vector<std::string> v = {"[2][3]",  "[12][3]", "[13][2]", "[21][3]", "[1][3]",
                                             "[23][1]", "[31][2]", "[32][1]", "[1][2]"};
  return v;
}

const std::vector<std::string>& rank2_header() {
  static const std::vector<std::string> v = {"[3]",  "[23]", "[123]", "[32]", "[2]",
                                             "[12]", "[321]", "[21]",  "[1]"};
  return v;
}

const Cells& table_2_1() {
  static const Cells t = {
      {"[2][3]", "0", "0", "[21][3]", "0", "0", "[31][2]", "0", "0"},
      {"[12][3]", "0", "0", "[1][3]", "0", "0", "[32][1]", "0", "0"},
      {"[13][2]", "0", "0", "[23][1]", "0", "0", "[1][2]", "0", "0"},
      {"0", "[2][3]", "0", "0", "[21][3]", "0", "0", "[31][2]", "0"},
      {"0", "[12][3]", "0", "0", "[1][3]", "0", "0", "[32][1]", "0"},
      {"0", "[13][2]", "0", "0", "[23][1]", "0", "0", "[1][2]", "0"},
      {"0", "0", "[2][3]", "0", "0", "[21][3]", "0", "0", "[31][2]"},
      {"0", "0", "[12][3]", "0", "0", "[1][3]", "0", "0", "[32][1]"},
      {"0", "0", "[13][2]", "0", "0", "[23][1]", "0", "0", "[1][2]"}};
  return t;
}

const Cells& table_2_2() {
  static const Cells t = {
      {"[2][3]", "[2][3]", "0", "[2][3]", "[2][3]", "0", "[21][3]", "[21][3]", "0"},
      {"[12][3]", "[12][3]", "0", "[12][3]", "[12][3]", "0", "[1][3]", "[1][3]", "0"},
      {"[13][2]", "[13][2]", "0", "[13][2]", "[13][2]", "0", "[23][1]", "[23][1]", "0"},
      {"[21][3]", "0", "[2][3]", "[31][2]", "0", "[2][3]", "[31][2]", "0", "[21][3]"},
      {"[1][3]", "0", "[12][3]", "[32][1]", "0", "[12][3]", "[32][1]", "0", "[1][3]"},
      {"[23][1]", "0", "[13][2]", "[1][2]", "0", "[13][2]", "[1][2]", "0", "[23][1]"},
      {"0", "[21][3]", "[21][3]", "0", "[31][2]", "[31][2]", "0", "[31][2]", "[31][2]"},
      {"0", "[1][3]", "[1][3]", "0", "[32][1]", "[32][1]", "0", "[32][1]", "[32][1]"},
      {"0", "[23][1]", "[23][1]", "0", "[1][2]", "[1][2]", "0", "[1][2]", "[1][2]"}};
  return t;
}

const Cells& table_2_3() {
  static const Cells t = {
      {"[2][3]", "[12][3]", "0", "[21][3]", "[1][3]", "0", "[31][2]", "[32][1]", "0"},
      {"[2][3]", "[13][2]", "0", "[21][3]", "[23][1]", "0", "[31][2]", "[1][2]", "0"},
      {"[12][3]", "[13][2]", "0", "[1][3]", "[23][1]", "0", "[32][1]", "[1][2]", "0"},
      {"[2][3]", "0", "[12][3]", "[21][3]", "0", "[1][3]", "[31][2]", "0", "[32][1]"},
      {"[2][3]", "0", "[13][2]", "[21][3]", "0", "[23][1]", "[31][2]", "0", "[1][2]"},
      {"[12][3]", "0", "[13][2]", "[1][3]", "0", "[23][1]", "[32][1]", "0", "[1][2]"},
      {"0", "[2][3]", "[12][3]", "0", "[21][3]", "[1][3]", "0", "[31][2]", "[32][1]"},
      {"0", "[2][3]", "[13][2]", "0", "[21][3]", "[23][1]", "0", "[31][2]", "[1][2]"},
      {"0", "[12][3]", "[13][2]", "0", "[1][3]", "[23][1]", "0", "[32][1]", "[1][2]"}};
  return t;
}

const Cells& table_2_4() {
  static const Cells t = {
      {"[3]", "[2][3]", "[12][3]", "[32]", "[2][3]", "[12][3]", "[321]", "[21][3]", "[1][3]"},
      {"[23]", "[2][3]", "[13][2]", "[2]", "[2][3]", "[13][2]", "[21]", "[21][3]", "[23][1]"},
      {"[123]", "[12][3]", "[13][2]", "[12]", "[12][3]", "[13][2]", "[1]", "[1][3]", "[23][1]"},
      {"[2][3]", "[3]", "[1][3]", "[2][3]", "[32]", "[32][1]", "[21][3]", "[321]", "[32][1]"},
      {"[2][3]", "[23]", "[23][1]", "[2][3]", "[2]", "[1][2]", "[21][3]", "[21]", "[1][2]"},
      {"[12][3]", "[123]", "[23][1]", "[12][3]", "[12]", "[1][2]", "[1][3]", "[1]", "[1][2]"},
      {"[21][3]", "[1][3]", "[3]", "[31][2]", "[32][1]", "[32]", "[31][2]", "[32][1]", "[321]"},
      {"[21][3]", "[23][1]", "[23]", "[31][2]", "[1][2]", "[2]", "[31][2]", "[1][2]", "[21]"},
      {"[1][3]", "[23][1]", "[123]", "[32][1]", "[1][2]", "[12]", "[32][1]", "[1][2]", "[1]"}};
  return t;
}

const std::vector<std::pair<std::string, std::string>>& table_2_5() {
  static const std::vector<std::pair<std::string, std::string>> v = {
      {"[1]", "[1]"},         {"[2]", "[2]"},         {"[3]", "[3]"},
      {"[12]", "[21]"},       {"[21]", "[12]"},       {"[23]", "[32]"},
      {"[32]", "[23]"},       {"[123]", "[321]"},     {"[321]", "[123]"},
      {"[2][3]", "[2][3]"},   {"[1][2]", "[1][2]"},   {"[1][3]", "[1][3]"},
      {"[13][2]", "[31][2]"}, {"[31][2]", "[13][2]"}, {"[12][3]", "[21][3]"},
      {"[21][3]", "[12][3]"}, {"[23][1]", "[32][1]"}, {"[32][1]", "[23][1]"}};
  return v;
}

const std::vector<std::string>& e_header() {
  static const std::vector<std::string> v = {"0",      "i",      "[1]",    "[2]",
                                             "[3]",    "[1][2]", "[1][3]", "[2][3]"};
  return v;
}

const Cells& table_2_6() {
  static const Cells t = {
      {"0", "0", "0", "0", "0", "0", "0", "0"},
      {"0", "i", "[1]", "[2]", "[3]", "[1][2]", "[1][3]", "[2][3]"},
      {"0", "[1]", "[1]", "[1][2]", "[1][3]", "[1][2]", "[1][3]", "0"},
      {"0", "[2]", "[1][2]", "[2]", "[2][3]", "[1][2]", "0", "[2][3]"},
      {"0", "[3]", "[1][3]", "[2][3]", "[3]", "0", "[1][3]", "[2][3]"},
      {"0", "[1][2]", "[1][2]", "[1][2]", "0", "[1][2]", "0", "0"},
      {"0", "[1][3]", "[1][3]", "0", "[1][3]", "0", "[1][3]", "0"},
      {"0", "[2][3]", "0", "[2][3]", "[2][3]", "0", "0", "[2][3]"}};
  return t;
}

const std::vector<std::vector<std::string>>& table_2_7() {
  // Published with "[1][2]" in the first right-hand row; the element
  // meant there is [31][2] (dom {3}, ran {1}).
  static const std::vector<std::vector<std::string>> t = {
      {"[12]", "[2]", "[1]"},          {"[21]", "[1]", "[2]"},
      {"[23]", "[3]", "[2]"},          {"[32]", "[2]", "[3]"},
      {"[123]", "[3]", "[1]"},         {"[321]", "[1]", "[3]"},
      {"[12][3]", "[2][3]", "[1][3]"}, {"[21][3]", "[1][3]", "[2][3]"},
      {"[13][2]", "[2][3]", "[1][2]"}, {"[31][2]", "[1][2]", "[2][3]"},
      {"[32][1]", "[1][2]", "[1][3]"}, {"[23][1]", "[1][3]", "[1][2]"},
      {"[1][2]", "[1][2]", "[1][2]"},  {"[2][3]", "[2][3]", "[2][3]"},
      {"[1][3]", "[1][3]", "[1][3]"},  {"[1]", "[1]", "[1]"},
      {"[2]", "[2]", "[2]"},           {"[3]", "[3]", "[3]"}};
  return t;
}

const std::vector<std::pair<std::string, std::string>>& e_order() {
  static const std::vector<std::pair<std::string, std::string>> v = {
      {"0", "0"},           {"0", "i"},           {"0", "[1]"},        {"0", "[2]"},
      {"0", "[3]"},         {"0", "[1][2]"},      {"0", "[1][3]"},     {"0", "[2][3]"},
      {"i", "i"},           {"[1]", "i"},         {"[1]", "[1]"},      {"[2]", "i"},
      {"[2]", "[2]"},       {"[3]", "i"},         {"[3]", "[3]"},      {"[1][2]", "i"},
      {"[1][2]", "[1]"},    {"[1][2]", "[2]"},    {"[1][2]", "[1][2]"},
      {"[1][3]", "i"},      {"[1][3]", "[1]"},    {"[1][3]", "[3]"},   {"[1][3]", "[1][3]"},
      {"[2][3]", "i"},      {"[2][3]", "[2]"},    {"[2][3]", "[3]"},   {"[2][3]", "[2][3]"}};
  return v;
}

const std::vector<std::pair<std::string, std::string>>& e_hasse_covers() {
  static const std::vector<std::pair<std::string, std::string>> v = {
      {"0", "[1][2]"},   {"0", "[1][3]"},   {"0", "[2][3]"},   {"[1][2]", "[1]"},
      {"[1][2]", "[2]"}, {"[1][3]", "[1]"}, {"[1][3]", "[3]"}, {"[2][3]", "[2]"},
      {"[2][3]", "[3]"}, {"[1]", "i"},      {"[2]", "i"},      {"[3]", "i"}};
  return v;
}

const std::vector<HomFixture>& cf_hom_sets() {
  static const std::vector<HomFixture> v = {
      {"i", "[1][2]", {"([13][2],i)", "([23][1],i)", "([1][2],i)"}},
      {"i", "[1]", {"([1],i)", "([12],i)", "([123],i)"}},
      {"i", "0", {"(0,i)"}},
      {"[1]", "[1][2]", {"([23][1],[1])", "([1][2],[1])"}},
      {"[1]", "0", {"(0,[1])"}},
      {"[1][2]", "0", {"(0,[1][2])"}},
      {"i", "i", {"(i,i)"}},
      {"[1]", "[1]", {"([1],[1])"}},
      {"[1][2]", "[1][2]", {"([1][2],[1][2])"}},
      {"0", "0", {"(0,0)"}}};
  return v;
}

const std::vector<CompositionFixture>& cf_compositions() {
  static const std::vector<CompositionFixture> v = {
      {"([23][1],[1])", "([1],i)", "([23][1],i)"},
      {"([23][1],[1])", "([12],i)", "([13][2],i)"},
      {"([23][1],[1])", "([123],i)", "([13][2],i)"},
      {"([1][2],[1])", "([1],i)", "([1][2],i)"},
      {"([1][2],[1])", "([12],i)", "([1][2],i)"},
      {"([1][2],[1])", "([123],i)", "([23][1],i)"}};
  return v;
}

}  // namespace divcat::fixtures

#include "divcat/emit.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace divcat {

using nlohmann::json;

std::string render_text(const LabeledTable& t) {
  std::size_t width = t.corner.size();
  for (const auto& l : t.row_labels) width = std::max(width, l.size());
  std::vector<std::size_t> col_width(t.col_labels.size());
  for (std::size_t c = 0; c < t.col_labels.size(); ++c) {
    col_width[c] = t.col_labels[c].size();
    for (const auto& row : t.cells) col_width[c] = std::max(col_width[c], row[c].size());
  }
  std::ostringstream out;
  auto pad = [&out](const std::string& s, std::size_t w) {
    out << s << std::string(w - s.size() + 2, ' ');
  };
  pad(t.corner, width);
  for (std::size_t c = 0; c < t.col_labels.size(); ++c) pad(t.col_labels[c], col_width[c]);
  out << "\n";
  for (std::size_t r = 0; r < t.row_labels.size(); ++r) {
    pad(t.row_labels[r], width);
    for (std::size_t c = 0; c < t.col_labels.size(); ++c) pad(t.cells[r][c], col_width[c]);
    out << "\n";
  }
  return out.str();
}

namespace {

// RFC 4180 quoting: fields with commas, quotes, or newlines get wrapped.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render_csv(const LabeledTable& t) {
  std::ostringstream out;
  out << csv_field(t.corner);
  for (const auto& l : t.col_labels) out << "," << csv_field(l);
  out << "\n";
  for (std::size_t r = 0; r < t.row_labels.size(); ++r) {
    out << csv_field(t.row_labels[r]);
    for (const auto& cell : t.cells[r]) out << "," << csv_field(cell);
    out << "\n";
  }
  return out.str();
}

std::string render_json(const LabeledTable& t) {
  json j;
  j["rows"] = t.row_labels;
  j["columns"] = t.col_labels;
  j["cells"] = t.cells;
  return j.dump(2) + "\n";
}

LabeledTable cayley_table(const FiniteInverseMonoid& m, const std::vector<int>& rows,
                          const std::vector<int>& cols) {
  LabeledTable t;
  t.corner = ".";
  for (int r : rows) t.row_labels.push_back(m.labels[static_cast<std::size_t>(r)]);
  for (int c : cols) t.col_labels.push_back(m.labels[static_cast<std::size_t>(c)]);
  for (int r : rows) {
    std::vector<std::string> row;
    for (int c : cols) row.push_back(m.labels[static_cast<std::size_t>(m.mul(r, c))]);
    t.cells.push_back(std::move(row));
  }
  return t;
}

LabeledTable inverse_table(const FiniteInverseMonoid& m, const std::vector<int>& rows) {
  LabeledTable t;
  t.corner = "s";
  t.col_labels = {"s^-1"};
  for (int r : rows) {
    t.row_labels.push_back(m.labels[static_cast<std::size_t>(r)]);
    t.cells.push_back({m.labels[static_cast<std::size_t>(m.inv(r))]});
  }
  return t;
}

LabeledTable green_rl_table(const FiniteInverseMonoid& m, const std::vector<int>& rows) {
  LabeledTable t;
  t.corner = "s";
  t.col_labels = {"s^-1 s", "s s^-1"};
  for (int r : rows) {
    t.row_labels.push_back(m.labels[static_cast<std::size_t>(r)]);
    t.cells.push_back({m.labels[static_cast<std::size_t>(m.mul(m.inv(r), r))],
                       m.labels[static_cast<std::size_t>(m.mul(r, m.inv(r)))]});
  }
  return t;
}

std::string order_csv(const FiniteInverseMonoid& m, const IdempotentPoset& p) {
  std::ostringstream out;
  out << "lower,upper\n";
  for (std::size_t i = 0; i < p.members.size(); ++i)
    for (std::size_t j = 0; j < p.members.size(); ++j)
      if (p.leq[i][j])
        out << m.labels[static_cast<std::size_t>(p.members[i])] << ","
            << m.labels[static_cast<std::size_t>(p.members[j])] << "\n";
  return out.str();
}

std::string hasse_dot(const FiniteInverseMonoid& m, const IdempotentPoset& p) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n";
  for (int e : p.members)
    out << "  \"" << m.labels[static_cast<std::size_t>(e)] << "\";\n";
  for (auto [lo, hi] : p.hasse_edges)
    out << "  \"" << m.labels[static_cast<std::size_t>(p.members[static_cast<std::size_t>(lo)])]
        << "\" -> \""
        << m.labels[static_cast<std::size_t>(p.members[static_cast<std::size_t>(hi)])] << "\";\n";
  out << "}\n";
  return out.str();
}

std::string green_json(const FiniteInverseMonoid& m, const GreenStructure& g) {
  auto classes_of = [&](const std::vector<int>& cls) {
    std::vector<std::vector<std::string>> out;
    int count = 0;
    for (int id : cls) count = std::max(count, id + 1);
    out.resize(static_cast<std::size_t>(count));
    for (std::size_t s = 0; s < cls.size(); ++s)
      out[static_cast<std::size_t>(cls[s])].push_back(m.labels[s]);
    return out;
  };
  json j;
  j["R"] = classes_of(g.r_class);
  j["L"] = classes_of(g.l_class);
  j["H"] = classes_of(g.h_class);
  j["D"] = classes_of(g.d_class);
  return j.dump(2) + "\n";
}

std::string category_dot(const FiniteCategory& c) {
  std::ostringstream out;
  out << "digraph category {\n";
  for (const auto& obj : c.objects) out << "  \"" << obj << "\";\n";
  for (int m = 0; m < c.morphism_count(); ++m) {
    if (c.is_identity(m)) continue;
    const auto& mor = c.morphisms[static_cast<std::size_t>(m)];
    out << "  \"" << c.objects[static_cast<std::size_t>(mor.dom)] << "\" -> \""
        << c.objects[static_cast<std::size_t>(mor.cod)] << "\" [label=\"" << mor.label
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string category_json(const FiniteCategory& c) {
  json j;
  j["objects"] = c.objects;
  j["morphisms"] = json::array();
  for (const auto& mor : c.morphisms)
    j["morphisms"].push_back({{"label", mor.label},
                              {"dom", c.objects[static_cast<std::size_t>(mor.dom)]},
                              {"cod", c.objects[static_cast<std::size_t>(mor.cod)]}});
  j["composition"] = json::array();
  for (int g = 0; g < c.morphism_count(); ++g)
    for (int f = 0; f < c.morphism_count(); ++f) {
      int gf = c.compose(g, f);
      if (gf < 0) continue;
      j["composition"].push_back({{"later", c.morphisms[static_cast<std::size_t>(g)].label},
                                  {"earlier", c.morphisms[static_cast<std::size_t>(f)].label},
                                  {"result", c.morphisms[static_cast<std::size_t>(gf)].label}});
    }
  return j.dump(2) + "\n";
}

}  // namespace divcat

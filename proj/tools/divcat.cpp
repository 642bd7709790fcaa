// divcat: enumerate inverse monoids of partial bijections, emit their
// tables and Hasse diagrams, build (reduced) standard division
// categories, and compute Mobius functions by several routes.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "divcat/category.hpp"
#include "divcat/emit.hpp"
#include "divcat/errors.hpp"
#include "divcat/fixtures.hpp"
#include "divcat/incidence.hpp"
#include "divcat/monoid.hpp"
#include "divcat/seqcat.hpp"

using namespace divcat;
using nlohmann::json;

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSizeGuard = 3;

struct RunConfig {
  int n = 3;
  std::string monoid_kind = "io";  // io | symmetric
  std::string format = "text";     // text | csv | json | dot
  std::string which = "comp";      // tables subcommand selector
  std::optional<int> paper_layout;
  std::string transversal;         // comma-separated bracket texts; empty = default
  std::string output;              // empty = stdout
  std::size_t pushout_guard = 40;
  std::size_t iso_guard = 30;
  bool explicit_guards = false;
  bool full_category = false;
};

void write_out(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw CLI::ValidationError("--output", "cannot open " + cfg.output);
  out << text;
}

FiniteInverseMonoid load_monoid(const RunConfig& cfg) {
  return cfg.monoid_kind == "symmetric" ? enumerate_I(cfg.n) : enumerate_IO(cfg.n);
}

Transversal load_transversal(const FiniteInverseMonoid& m, const RunConfig& cfg) {
  if (cfg.transversal.empty()) return choose_transversal(m);
  std::vector<int> members;
  std::stringstream ss(cfg.transversal);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int idx = m.index_of_label(item);
    if (idx < 0) throw std::invalid_argument("transversal element not in the monoid: " + item);
    members.push_back(idx);
  }
  return validate_transversal(m, members);
}

std::vector<int> all_indices(const FiniteInverseMonoid& m) {
  std::vector<int> v(m.size());
  for (int i = 0; i < m.size(); ++i) v[i] = i;
  return v;
}

std::string render(const RunConfig& cfg, const LabeledTable& t) {
  if (cfg.format == "csv") return render_csv(t);
  if (cfg.format == "json") return render_json(t);
  return render_text(t);
}

int cmd_enumerate(const RunConfig& cfg) {
  auto m = load_monoid(cfg);
  if (cfg.format == "json") {
    json j = json::array();
    for (int s = 0; s < m.size(); ++s) {
      j.push_back({{"element", m.labels[s]},
                   {"rank", m.elements[s].rank()},
                   {"dom", m.elements[s].domain()},
                   {"ran", m.elements[s].range()}});
    }
    write_out(cfg, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream out;
  const char* sep = cfg.format == "csv" ? "," : "\t";
  if (cfg.format == "csv") out << "element,rank,dom,ran\n";
  for (int s = 0; s < m.size(); ++s) {
    const auto& f = m.elements[s];
    auto set_str = [](const std::vector<int>& v) {
      std::string o = "{";
      for (std::size_t i = 0; i < v.size(); ++i)
        o += (i ? " " : "") + std::to_string(v[i]);
      return o + "}";
    };
    out << m.labels[s] << sep << f.rank() << sep << set_str(f.domain()) << sep
        << set_str(f.range()) << "\n";
  }
  write_out(cfg, out.str());
  return 0;
}

int cmd_tables(const RunConfig& cfg) {
  auto m = load_monoid(cfg);
  if (cfg.paper_layout) {
    if (*cfg.paper_layout != 3 || cfg.n != 3 || cfg.monoid_kind != "io")
      throw CLI::ValidationError("--paper-layout", "paper layout is defined only for io, n=3");
  }
  std::ostringstream out;

  auto indices_for = [&](const std::vector<std::string>& labels) {
    std::vector<int> v;
    for (const auto& l : labels) v.push_back(m.index_of_label(l));
    return v;
  };

  if (cfg.which == "comp") {
    if (cfg.paper_layout) {
      auto r1 = indices_for(fixtures::rank1_header());
      auto r2 = indices_for(fixtures::rank2_header());
      out << "Table 2.1\n" << render(cfg, cayley_table(m, r1, r1)) << "\n";
      out << "Table 2.2\n" << render(cfg, cayley_table(m, r1, r2)) << "\n";
      out << "Table 2.3\n" << render(cfg, cayley_table(m, r2, r1)) << "\n";
      out << "Table 2.4\n" << render(cfg, cayley_table(m, r2, r2)) << "\n";
    } else {
      auto all = all_indices(m);
      out << render(cfg, cayley_table(m, all, all));
    }
  } else if (cfg.which == "inverses") {
    std::vector<int> rows;
    if (cfg.paper_layout) {
      for (const auto& [s, sinv] : fixtures::table_2_5()) rows.push_back(m.index_of_label(s));
    } else {
      rows = all_indices(m);
    }
    out << render(cfg, inverse_table(m, rows));
  } else if (cfg.which == "e-cayley") {
    auto rows = cfg.paper_layout ? indices_for(fixtures::e_header()) : m.idempotents;
    out << render(cfg, cayley_table(m, rows, rows));
  } else if (cfg.which == "rl") {
    std::vector<int> rows;
    if (cfg.paper_layout) {
      for (const auto& row : fixtures::table_2_7()) rows.push_back(m.index_of_label(row[0]));
    } else {
      rows = all_indices(m);
    }
    out << render(cfg, green_rl_table(m, rows));
  } else if (cfg.which == "order") {
    out << order_csv(m, idempotent_poset(m));
  } else if (cfg.which == "hasse") {
    out << hasse_dot(m, idempotent_poset(m));
  } else if (cfg.which == "green") {
    out << green_json(m, green(m));
  }
  write_out(cfg, out.str());
  return 0;
}

int cmd_category(const RunConfig& cfg) {
  auto m = load_monoid(cfg);
  FiniteCategory c = cfg.full_category ? build_standard(m)
                                       : build_reduced(m, load_transversal(m, cfg));
  if (cfg.format == "dot") {
    write_out(cfg, category_dot(c));
    return 0;
  }
  if (cfg.format == "json") {
    write_out(cfg, category_json(c));
    return 0;
  }
  std::ostringstream out;
  out << "objects:";
  for (const auto& o : c.objects) out << " " << o;
  out << "\n\n";
  for (int x = 0; x < c.object_count(); ++x) {
    for (int y = 0; y < c.object_count(); ++y) {
      auto h = c.hom(x, y);
      if (h.empty()) continue;
      out << "Hom(" << c.objects[x] << "," << c.objects[y] << ") = {";
      for (std::size_t i = 0; i < h.size(); ++i)
        out << (i ? ", " : "") << c.morphisms[h[i]].label;
      out << "}\n";
    }
  }
  out << "\ncompositions:\n";
  for (int g = 0; g < c.morphism_count(); ++g)
    for (int f = 0; f < c.morphism_count(); ++f) {
      int gf = c.compose(g, f);
      if (gf < 0 || c.is_identity(g) || c.is_identity(f)) continue;
      out << "  " << c.morphisms[g].label << " . " << c.morphisms[f].label << " = "
          << c.morphisms[gf].label << "\n";
    }
  write_out(cfg, out.str());
  return 0;
}

int cmd_mobius(const RunConfig& cfg) {
  auto m = load_monoid(cfg);
  auto f = load_transversal(m, cfg);
  auto c = build_reduced(m, f);
  auto pairs = division_morphisms(m, f);
  auto mu = mobius(c);
  bool combinatorial = green(m).h_trivial();

  LabeledTable t;
  t.corner = "morphism";
  t.col_labels = {"dom", "cod", "mu(convolution)", "mu(lattice)", "agree"};
  bool all_agree = true;
  for (int i = 0; i < c.morphism_count(); ++i) {
    t.row_labels.push_back(c.morphisms[i].label);
    std::string conv = mu[i].str();
    std::string lat = "-";
    std::string agree = "-";
    if (combinatorial) {
      long long lv = mobius_via_lattice(m, pairs[i].s, pairs[i].e);
      lat = std::to_string(lv);
      bool ok = (mu[i] == lv);
      agree = ok ? "yes" : "NO";
      if (!ok) all_agree = false;
    }
    t.cells.push_back({c.objects[c.morphisms[i].dom], c.objects[c.morphisms[i].cod], conv, lat,
                       agree});
  }
  std::ostringstream out;
  out << render(cfg, t);
  if (cfg.format == "text") {
    std::vector<std::string> minus, plus;
    for (int i = 0; i < c.morphism_count(); ++i)
      (mu[i] < 0 ? minus : plus).push_back(c.morphisms[i].label);
    out << "\nmu = -1: ";
    for (std::size_t i = 0; i < minus.size(); ++i) out << (i ? ", " : "") << minus[i];
    out << "\nmu = +1: ";
    for (std::size_t i = 0; i < plus.size(); ++i) out << (i ? ", " : "") << plus[i];
    out << "\nspecial Mobius category: " << (is_special_mobius(c) ? "yes" : "no") << "\n";
    if (combinatorial && !all_agree) out << "METHOD DISAGREEMENT DETECTED\n";
  }
  write_out(cfg, out.str());
  return all_agree ? 0 : kExitVerifyFailure;
}

int cmd_seqcat(const RunConfig& cfg) {
  auto sc = build_Cn(cfg.n);
  auto mu = mobius(sc.cat);
  if (cfg.format == "json") {
    json j;
    j["objects"] = sc.cat.objects;
    j["morphisms"] = json::array();
    for (int i = 0; i < sc.cat.morphism_count(); ++i)
      j["morphisms"].push_back({{"label", sc.morphisms[i].label()},
                                {"source", sc.morphisms[i].source},
                                {"target", sc.morphisms[i].target()},
                                {"mu_closed_form", mu_closed_form(sc.morphisms[i])},
                                {"mu_convolution", mu[i].str()}});
    write_out(cfg, j.dump(2) + "\n");
    return 0;
  }
  LabeledTable t;
  t.corner = "morphism";
  t.col_labels = {"source", "target", "mu(closed form)", "mu(convolution)"};
  for (int i = 0; i < sc.cat.morphism_count(); ++i) {
    t.row_labels.push_back(sc.morphisms[i].label());
    t.cells.push_back({std::to_string(sc.morphisms[i].source),
                       std::to_string(sc.morphisms[i].target()),
                       std::to_string(mu_closed_form(sc.morphisms[i])), mu[i].str()});
  }
  write_out(cfg, render(cfg, t));
  return 0;
}

struct CheckList {
  int failures = 0;
  std::ostringstream out;

  void check(bool ok, const std::string& what) {
    out << (ok ? "  [pass] " : "  [FAIL] ") << what << "\n";
    if (!ok) ++failures;
  }
};

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int cmd_verify(const RunConfig& cfg) {
  CheckList cl;
  const int n = cfg.n;
  cl.out << "verify n=" << n << "\n";

  auto m = enumerate_IO(n);
  cl.check(m.size() == binomial(2 * n, n), "|IO_n| = C(2n,n)");
  cl.check(static_cast<long long>(m.idempotents.size()) == (1LL << n), "|E(IO_n)| = 2^n");
  cl.check(verify_inverse_monoid(m).ok(), "inverse-monoid axioms for IO_n");
  auto g = green(m);
  cl.check(g.h_trivial(), "H is the equality relation on IO_n");
  if (n <= 4) cl.check(verify_inverse_monoid(enumerate_I(n)).ok(),
                       "inverse-monoid axioms for I(M_n)");

  auto f = choose_transversal(m);
  auto c = build_reduced(m, f);
  bool axioms_ok = true;
  try {
    c.check_axioms();
  } catch (const std::logic_error&) {
    axioms_ok = false;
  }
  cl.check(axioms_ok, "C_F(IO_n) satisfies the category axioms");

  bool hom_ok = true;
  for (int x = 0; x < c.object_count(); ++x)
    for (int y = 0; y < c.object_count(); ++y)
      if (static_cast<long long>(c.hom(x, y).size()) !=
          binomial(m.elements[f.members[x]].rank(), m.elements[f.members[y]].rank()))
        hom_ok = false;
  cl.check(hom_ok, "|Hom(e_i,e_j)| = C(rank i, rank j)");

  bool epi_ok = true;
  for (int i = 0; i < c.morphism_count(); ++i)
    if (!is_epimorphism(c, i)) epi_ok = false;
  cl.check(epi_ok, "every morphism of C_F(IO_n) is an epimorphism");
  auto qi = quasi_initial_objects(c);
  cl.check(qi.size() == 1 && c.objects[qi[0]] == "i", "i is the quasi-initial object");
  try {
    cl.check(has_pushouts(c, cfg.pushout_guard), "C_F(IO_n) has pushouts");
  } catch (const SizeGuardError&) {
    if (cfg.explicit_guards) throw;
    cl.out << "  [skip] pushout check above size guard (" << c.morphism_count()
           << " morphisms)\n";
  }

  auto mu = mobius(c);
  cl.check(convolve(c, zeta(c), mu) == delta(c) && convolve(c, mu, zeta(c)) == delta(c),
           "zeta * mu = mu * zeta = delta");
  auto pairs = division_morphisms(m, f);
  bool lattice_ok = true;
  for (int i = 0; i < c.morphism_count(); ++i)
    if (mu[i] != mobius_via_lattice(m, pairs[i].s, pairs[i].e)) lattice_ok = false;
  cl.check(lattice_ok, "convolution mu agrees with the lattice formula");
  cl.check(is_special_mobius(c), "C_F(IO_n) is a special Mobius category");

  auto sc = build_Cn(n);
  auto mu_n = mobius(sc.cat);
  bool closed_ok = true;
  for (int i = 0; i < sc.cat.morphism_count(); ++i)
    if (mu_n[i] != mu_closed_form(sc.morphisms[i])) closed_ok = false;
  cl.check(closed_ok, "mu on C_n equals (-1)^(i-j)");
  try {
    cl.check(is_isomorphic(c, sc.cat, cfg.iso_guard), "C_F(IO_n) is isomorphic to C_n");
  } catch (const SizeGuardError&) {
    if (cfg.explicit_guards) throw;
    cl.out << "  [skip] isomorphism check above size guard (" << c.morphism_count()
           << " morphisms)\n";
  }

  if (n == 3) {
    auto r1 = fixtures::rank1_header();
    auto r2 = fixtures::rank2_header();
    auto cell_ok = [&](const std::vector<std::string>& rows, const std::vector<std::string>& cols,
                       const fixtures::Cells& want) {
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t col = 0; col < cols.size(); ++col)
          if (m.labels[m.mul(m.index_of_label(rows[r]), m.index_of_label(cols[col]))] !=
              want[r][col])
            return false;
      return true;
    };
    cl.check(cell_ok(r1, r1, fixtures::table_2_1()) && cell_ok(r1, r2, fixtures::table_2_2()) &&
                 cell_ok(r2, r1, fixtures::table_2_3()) && cell_ok(r2, r2, fixtures::table_2_4()),
             "composition tables match the published fixtures");
    cl.check(cell_ok(fixtures::e_header(), fixtures::e_header(), fixtures::table_2_6()),
             "idempotent Cayley table matches the published fixture");
  }

  cl.out << (cl.failures == 0 ? "OK" : "FAILED") << " (" << cl.failures << " failures)\n";
  write_out(cfg, cl.out.str());
  return cl.failures == 0 ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for inverse monoids of partial bijections, their division "
               "categories, and Mobius functions"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&](CLI::App* sub, bool with_monoid = true) {
    sub->add_option("--n", cfg.n, "ground-set size")->check(CLI::Range(0, 9));
    if (with_monoid)
      sub->add_option("--monoid", cfg.monoid_kind, "io | symmetric")
          ->check(CLI::IsMember({"io", "symmetric"}));
    sub->add_option("--format", cfg.format, "text | csv | json | dot")
        ->check(CLI::IsMember({"text", "csv", "json", "dot"}));
    sub->add_option("--output", cfg.output, "output path (default: stdout)");
  };

  auto* enumerate = app.add_subcommand("enumerate", "list the elements of IO_n or I(M_n)");
  add_common(enumerate);

  auto* tables = app.add_subcommand("tables", "emit composition/inverse/idempotent tables");
  add_common(tables);
  tables->add_option("--which", cfg.which, "comp | inverses | e-cayley | rl | order | hasse | green")
      ->check(CLI::IsMember({"comp", "inverses", "e-cayley", "rl", "order", "hasse", "green"}));
  tables->add_option("--paper-layout", cfg.paper_layout,
                     "reproduce the published row/column order (only 3)");

  auto* category = app.add_subcommand("category", "build C_F(S) (or C(S) with --full)");
  add_common(category);
  category->add_option("--transversal", cfg.transversal,
                       "comma-separated idempotent bracket texts (default: canonical)");
  category->add_flag("--full", cfg.full_category, "the unreduced standard category C(S)");

  auto* mob = app.add_subcommand("mobius", "Mobius function of C_F(S), all methods side by side");
  add_common(mob);
  mob->add_option("--transversal", cfg.transversal, "transversal as in 'category'");

  auto* seq = app.add_subcommand("seqcat", "the sequence category C_n and its Mobius function");
  add_common(seq, false);

  auto* verify = app.add_subcommand("verify", "run the module invariant suites");
  add_common(verify);
  verify->add_option("--pushout-guard", cfg.pushout_guard, "morphism cap for the pushout search");
  verify->add_option("--iso-guard", cfg.iso_guard, "morphism cap for the isomorphism search");
  verify->parse_complete_callback([&] {
    cfg.explicit_guards =
        verify->count("--pushout-guard") > 0 || verify->count("--iso-guard") > 0;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(cfg);
    if (*tables) return cmd_tables(cfg);
    if (*category) return cmd_category(cfg);
    if (*mob) return cmd_mobius(cfg);
    if (*seq) return cmd_seqcat(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return kExitSizeGuard;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailure;
  }
  return kExitUsage;
}

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "superlie/catalog.hpp"
#include "superlie/cohomology.hpp"
#include "superlie/gamma23.hpp"
#include "superlie/invariants.hpp"
#include "superlie/orbitrel.hpp"

using namespace superlie;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kInconsistent = 3 };

struct Config {
  std::string precision_text;
  Rational precision = kDefaultPrecision;
  std::size_t threads = 0;
  bool json = false;
  GroebnerCaps caps;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw NotFound(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Resolved {
  std::string label;
  SuperAlgebra algebra;
};

Resolved resolve(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return {arg, parse_algebra_document(read_file(arg))};
  return {arg, get(arg).algebra};
}

void emit(const Config& cfg, const json& j, const std::string& human) {
  if (cfg.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << human;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? sep : "") + xs[k];
  return out;
}

std::string violation_text(const SuperAlgebra& g, const JacobiViolation& v) {
  return "(" + basis_name(g, v.a) + "," + basis_name(g, v.b) + "," + basis_name(g, v.c) + "): " +
         format_vector(g, v.residual);
}

GradedDim shape(std::size_t m, std::size_t n) { return {m, n}; }

// list

int cmd_list(const Config& cfg, const std::vector<std::size_t>& mn) {
  std::vector<const CatalogEntry*> entries;
  if (mn.size() == 2)
    entries = list(shape(mn[0], mn[1]));
  else
    for (const auto& e : list_all()) entries.push_back(&e);
  json j = json::array();
  std::ostringstream h;
  for (const auto* e : entries) {
    json row = {{"label", e->label}, {"brackets", describe(e->algebra)}};
    if (e->orbit_dim) row["orbit_dim"] = *e->orbit_dim;
    j.push_back(row);
    h << e->label << "  " << describe(e->algebra) << "\n";
  }
  emit(cfg, j, h.str());
  return kOk;
}

int cmd_show(const Config& cfg, const std::string& arg) {
  Resolved r = resolve(arg);
  std::ostringstream h;
  h << r.label << " " << GradedDim{r.algebra.m(), r.algebra.n()}.str() << ": " << describe(r.algebra) << "\n";
  emit(cfg, json::parse(algebra_document(r.algebra)), h.str());
  return kOk;
}

int cmd_check(const Config& cfg, const std::string& arg) {
  Resolved r = resolve(arg);
  const SuperAlgebra& g = r.algebra;
  auto jac = check_jacobi(g);
  auto tf = check_J1_J2(g);
  bool nil = is_nilpotent(g);
  bool ok = jac.empty() && tf.ok() && nil && (jac.empty() == tf.ok());
  json j = {{"label", r.label}, {"jacobi", json::array()}, {"triple_form", tf.ok()}, {"nilpotent", nil}, {"ok", ok}};
  std::ostringstream h;
  h << r.label << "\n";
  h << "  super Jacobi: " << (jac.empty() ? "ok" : std::to_string(jac.size()) + " violations") << "\n";
  for (const auto& v : jac) {
    j["jacobi"].push_back(violation_text(g, v));
    h << "    " << violation_text(g, v) << "\n";
  }
  h << "  (J1)/(J2) form: " << (tf.ok() ? "ok" : "violated") << "\n";
  h << "  nilpotent: " << (nil ? "yes" : "no") << "\n";
  h << (ok ? "OK" : "FAILED") << "\n";
  emit(cfg, j, h.str());
  return ok ? kOk : kFailed;
}

int cmd_invariants(const Config& cfg, const std::string& arg) {
  Resolved r = resolve(arg);
  InvariantReport rep = invariant_report(r.algebra, true, cfg.caps);
  std::ostringstream h;
  h << r.label << "\n";
  h << "  center " << rep.center.str() << ", derived " << rep.derived.str() << "\n";
  h << "  Gamma = 0: " << (rep.gamma_zero ? "yes" : "no") << "\n";
  h << "  dim Der_0 = " << rep.der0_dim << ", orbit dim = " << rep.orbit_dim << "\n";
  for (const auto& a : rep.abc_entries)
    h << "  (" << field_format(a.alpha) << "," << field_format(a.beta) << "," << field_format(a.gamma) << ") degree "
      << a.degree << ": " << a.dim << "\n";
  h << "  t(g) " << (rep.trivial.exact ? "= " + std::to_string(*rep.trivial.exact) : ">= " + std::to_string(rep.trivial.lower));
  if (!rep.trivial.witness.empty()) h << " via " << rep.trivial.witness;
  h << "\n  lower central series:";
  for (const auto& d : rep.lower_central) h << " " << d.str();
  h << "\n";
  emit(cfg, json::parse(report_json(rep, r.label)), h.str());
  return kOk;
}

int cmd_h2(const Config& cfg, const std::string& arg) {
  Resolved r = resolve(arg);
  H2Result res = h2_even(r.algebra);
  json j = {{"label", r.label}, {"h2_even", res.dim}, {"cocycles", res.cocycles}, {"coboundaries", res.coboundaries},
            {"basis", json::array()}};
  std::ostringstream h;
  h << r.label << ": dim H^2_0 = " << res.dim << " (ker d2 = " << res.cocycles << ", rank d1 = " << res.coboundaries
    << ")\n";
  for (const auto& c : res.basis) {
    j["basis"].push_back(format_cochain(c));
    h << "  " << format_cochain(c) << "\n";
  }
  emit(cfg, j, h.str());
  return kOk;
}

VerifyResult verify_retry(const WitnessSpec& w, const SuperAlgebra& from, const SuperAlgebra& to, Rational p) {
  for (int round = 0;; ++round) {
    try {
      return verify_degeneration(w, from, to, p);
    } catch (const InsufficientPrecision&) {
      if (round >= 3) throw;
      p *= 2;
    }
  }
}

std::string witness_text(const WitnessSpec& w) {
  std::vector<std::string> parts;
  for (const auto& [k, v] : w.basis) parts.push_back(k + "=" + v);
  for (const auto& [name, alts] : w.let) parts.push_back("let " + name + "=" + join(alts, " | "));
  return join(parts);
}

int cmd_degenerate(const Config& cfg, const std::string& from, const std::string& to, const std::string& witness_file) {
  std::vector<WitnessSpec> ws;
  if (!witness_file.empty()) {
    ws.push_back(parse_witness_document(read_file(witness_file)));
  } else {
    for (const auto* w : find_witnesses(from, to)) ws.push_back(*w);
  }
  Resolved f = resolve(from.empty() && !ws.empty() ? ws.front().from : from);
  Resolved t = resolve(to.empty() && !ws.empty() ? ws.front().to : to);
  json j = {{"from", f.label}, {"to", t.label}, {"attempts", json::array()}};
  std::ostringstream h;
  bool ok = false;
  if (ws.empty()) h << "no witness for " << f.label << " -> " << t.label << "\n";
  for (const auto& w : ws) {
    VerifyResult r = verify_retry(w, f.algebra, t.algebra, cfg.precision);
    j["attempts"].push_back({{"source", w.source.empty() ? "file" : w.source},
                             {"witness", witness_text(w)},
                             {"result", r.message()},
                             {"precision", format_rational(r.precision)}});
    h << f.label << " -> " << t.label << ": " << r.message() << " via "
      << (witness_file.empty() ? w.source + " witness" : "witness file") << " \"" << witness_text(w) << "\"\n";
    if (r.verified()) {
      ok = true;
      break;
    }
  }
  j["verified"] = ok;
  emit(cfg, j, h.str());
  return ok ? kOk : kFailed;
}

json certificate_json(const NonDegCertificate& c) {
  json j = {{"criterion", c.criterion}, {"g", c.g_value}, {"h", c.h_value}, {"detail", c.detail}};
  if (c.parity) j["parity"] = *c.parity;
  if (c.abc) j["abc"] = {field_format((*c.abc)[0]), field_format((*c.abc)[1]), field_format((*c.abc)[2])};
  return j;
}

int cmd_nondegen(const Config& cfg, const std::string& from, const std::string& to, int depth) {
  Resolved f = resolve(from), t = resolve(to);
  NonDegOptions opts;
  opts.depth = depth;
  auto certs = auto_nondegen(f.algebra, t.algebra, opts);
  json j = {{"from", f.label}, {"to", t.label}, {"certificates", json::array()}};
  std::ostringstream h;
  h << f.label << " -/-> " << t.label << ": " << (certs.empty() ? "Inconclusive" : "certified") << "\n";
  for (const auto& c : certs) {
    j["certificates"].push_back(certificate_json(c));
    h << "  " << c.describe() << "\n";
  }
  emit(cfg, j, h.str());
  return certs.empty() ? kFailed : kOk;
}

int cmd_hasse(const Config& cfg, std::size_t m, std::size_t n, const std::string& dot_path) {
  HasseDiagram hd = build_hasse(shape(m, n));
  if (!dot_path.empty()) {
    if (dot_path == "-") {
      std::cout << hasse_dot(hd);
    } else {
      std::ofstream out(dot_path);
      if (!out) throw UsageError("cannot write " + dot_path);
      out << hasse_dot(hd);
    }
  }
  json j = {{"dim", hd.dim.str()}, {"nodes", json::array()}, {"edges", json::array()}, {"failures", json::array()}};
  std::ostringstream h;
  h << hd.dim.str() << ": " << hd.nodes.size() << " nodes, " << hd.edges.size() << " edges\n";
  for (const auto& node : hd.nodes) {
    j["nodes"].push_back({{"label", node}, {"orbit_dim", hd.orbit_dim.at(node)}});
    h << "  " << node << "  dim O = " << hd.orbit_dim.at(node) << "\n";
  }
  for (const auto& [a, b] : hd.edges) {
    j["edges"].push_back({a, b});
    h << "  " << a << " -> " << b << "\n";
  }
  for (const auto& [pair, msg] : hd.failures) {
    j["failures"].push_back({{"pair", pair}, {"message", msg}});
    h << "  witness " << pair << ": " << msg << "\n";
  }
  if (dot_path != "-") emit(cfg, j, h.str());
  return kOk;
}

std::string components_line(const std::vector<std::string>& labels) {
  return std::to_string(labels.size()) + " components: " + join(labels);
}

int cmd_components(const Config& cfg, std::size_t m, std::size_t n) {
  ComponentResult c = components(build_hasse(shape(m, n)));
  json j = {{"dim", shape(m, n).str()}, {"components", c.labels}, {"warnings", c.warnings}};
  std::ostringstream h;
  h << components_line(c.labels) << "\n";
  for (const auto& w : c.warnings) h << "  warning: " << w << "\n";
  emit(cfg, j, h.str());
  return kOk;
}

FMatrix parse_matrix(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("matrix is not JSON: ") + e.what());
  }
  if (!j.is_array() || j.size() != 3) throw UsageError("expected a 3x3 JSON array");
  FMatrix m(3, 3);
  for (std::size_t r = 0; r < 3; ++r) {
    if (!j[r].is_array() || j[r].size() != 3) throw UsageError("expected a 3x3 JSON array");
    for (std::size_t c = 0; c < 3; ++c) {
      const json& x = j[r][c];
      m(r, c) = field_parse(x.is_string() ? x.get<std::string>() : x.dump());
    }
  }
  return m;
}

int cmd_gamma23(const Config& cfg, const std::string& g1, const std::string& g2) {
  gamma23::SymPair p = gamma23::make_pair(parse_matrix(g1), parse_matrix(g2));
  gamma23::PencilSignature s = gamma23::signature(p);
  auto label = gamma23::classify_pair(p);
  json j = {{"label", label ? json(*label) : json("Unknown")}, {"signature", s.str()}, {"simdiag", s.simdiag}};
  emit(cfg, j, (label ? *label : std::string("Unknown")) + "\n  " + s.str() + "\n");
  return label ? kOk : kFailed;
}

// verify-all

struct Tally {
  std::size_t failures = 0;
  std::ostringstream out;
  json j = json::object();
  void line(const std::string& section, const std::string& status, const std::string& text) {
    if (status == "FAIL") ++failures;
    out << "  [" << status << "] " << text << "\n";
    j[section].push_back({{"status", status}, {"detail", text}});
  }
};

void verify_shape(const Config& cfg, const GradedDim& d, Tally& t) {
  (void)cfg;
  const ExpectedTables& ex = expected();
  t.out << d.str() << "\n";
  std::size_t axioms = 0;
  for (const auto* e : list(d)) {
    bool ok = check_jacobi(e->algebra).empty() && check_J1_J2(e->algebra).ok() && is_nilpotent(e->algebra);
    if (!ok) t.line("axioms", "FAIL", e->label + " violates the axioms");
    axioms += ok;
  }
  t.line("axioms", "ok", std::to_string(axioms) + " algebras pass Jacobi, (J1)/(J2) and nilpotency");

  std::size_t verified = 0;
  for (const auto& w : builtin_witnesses()) {
    if (label_dims(w.from) != d) continue;
    VerifyResult r = verify_with_retry(w, cfg.precision);
    if (r.verified()) {
      ++verified;
      continue;
    }
    bool known = false;
    for (const auto& k : ex.witness_known) known |= k.from == w.from && k.to == w.to && w.source == "published";
    t.line("witnesses", known ? "known" : "FAIL", w.from + " -> " + w.to + ": " + r.message());
  }
  t.line("witnesses", "ok", std::to_string(verified) + " witnesses verified");

  for (const auto& row : discrepancy_report(d)) {
    std::string text = row.row.from + " -/-> " + row.row.to + " [" + row.row.criterion + "]: " + row.status();
    if (!row.alternatives.empty()) text += "; alternative " + row.alternatives.front().describe();
    t.line("nondegen", row.known ? "known" : "FAIL", text);
  }

  for (const auto* e : list(d)) {
    if (auto it = ex.h2_even.find(e->label); it != ex.h2_even.end()) {
      std::size_t got = h2_even(e->algebra).dim;
      bool known = false;
      for (const auto& k : ex.h2_known) known |= k.label == e->label && static_cast<std::size_t>(k.computed) == got;
      if (got != static_cast<std::size_t>(it->second))
        t.line("h2", known ? "known" : "FAIL",
               e->label + ": h2 computed " + std::to_string(got) + ", published " + std::to_string(it->second));
      else
        t.line("h2", "ok", e->label + ": h2 = " + std::to_string(got));
    }
    if (auto it = ex.orbit_dim.find(e->label); it != ex.orbit_dim.end()) {
      int got = orbit_dim(e->algebra);
      auto k = ex.orbit_dim_known.find(e->label);
      if (got != it->second)
        t.line("orbit_dim", k != ex.orbit_dim_known.end() && k->second == got ? "known" : "FAIL",
               e->label + ": orbit dim computed " + std::to_string(got) + ", published " + std::to_string(it->second));
    }
  }

  if (auto it = ex.components.find(d.str()); it != ex.components.end()) {
    ComponentResult c = components(build_hasse(d));
    t.line("components", c.labels == it->second ? "ok" : "FAIL", components_line(c.labels));
  }
}

int cmd_verify_all(const Config& cfg, const std::vector<std::size_t>& mn) {
  std::vector<GradedDim> dims;
  if (mn.size() == 2)
    dims.push_back(shape(mn[0], mn[1]));
  else
    dims = catalog_dims();
  Tally t;
  for (const auto& d : dims) {
    if (list(d).empty()) throw NotFound("shape " + d.str());
    verify_shape(cfg, d, t);
  }
  t.out << (t.failures ? "FAILED: " + std::to_string(t.failures) + " mismatches" : std::string("all checks match")) << "\n";
  t.j["failures"] = t.failures;
  emit(cfg, t.j, t.out.str());
  return t.failures ? kFailed : kOk;
}

// selftest

FieldElem small(std::mt19937_64& rng) { return FieldElem(static_cast<long>(rng() % 5) - 2); }

FMatrix random_invertible(std::mt19937_64& rng, std::size_t k) {
  for (;;) {
    FMatrix m(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) m(r, c) = small(rng);
    if (!determinant(m).is_zero()) return m;
  }
}

int cmd_selftest(const Config& cfg, std::uint64_t seed, std::size_t cases) {
  std::mt19937_64 rng(seed);
  const auto& all = list_all();
  std::size_t basis_fail = 0, complex_fail = 0, gamma_fail = 0;
  for (std::size_t k = 0; k < cases; ++k) {
    const CatalogEntry& e = all[rng() % all.size()];
    const SuperAlgebra& g = e.algebra;
    FMatrix M = block_diag(random_invertible(rng, g.m()), random_invertible(rng, g.n()));
    SuperAlgebra h = apply_basis_change(g, M);
    if (center(g).dim != center(h).dim || derived(g) != derived(h) || orbit_dim(g) != orbit_dim(h) ||
        !check_jacobi(h).empty())
      ++basis_fail;
    EvenEndomorphism psi{random_invertible(rng, g.m()), random_invertible(rng, g.n())};
    for (const auto& x : d2(g, d1(g, psi)))
      if (!x.is_zero()) {
        ++complex_fail;
        break;
      }
    const auto& reps = gamma23::representatives();
    const auto& rep = reps[rng() % reps.size()];
    auto label = gamma23::classify_pair(gamma23::pair_act(random_invertible(rng, 2), random_invertible(rng, 3), rep.pair));
    if (!label || *label != rep.label) ++gamma_fail;
  }
  bool ok = basis_fail + complex_fail + gamma_fail == 0;
  json j = {{"seed", seed},
            {"cases", cases},
            {"basis_change_failures", basis_fail},
            {"d2_d1_failures", complex_fail},
            {"gamma23_failures", gamma_fail},
            {"ok", ok}};
  std::ostringstream h;
  h << "seed " << seed << ", " << cases << " cases\n";
  h << "  invariants under basis change: " << basis_fail << " failures\n";
  h << "  d2 o d1 = 0: " << complex_fail << " failures\n";
  h << "  gamma23 orbit classification: " << gamma_fail << " failures\n";
  h << (ok ? "OK" : "FAILED") << "\n";
  emit(cfg, j, h.str());
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nilpotent Lie superalgebras: axioms, invariants, cohomology and degenerations"};
  app.require_subcommand(1);
  Config cfg;
  if (const char* env = std::getenv("SUPERLIE_PRECISION")) cfg.precision_text = env;
  app.add_flag("--json", cfg.json, "JSON output");
  app.add_option("--precision", cfg.precision_text, "series precision (default 8, or SUPERLIE_PRECISION)");
  app.add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
  app.add_option("--groebner-max-basis", cfg.caps.max_basis, "Groebner basis size cap");
  app.add_option("--groebner-max-degree", cfg.caps.max_degree, "Groebner degree cap");

  std::vector<std::size_t> mn;
  std::string target, from, to, witness, dot, g1, g2;
  int depth = 2;
  std::uint64_t seed = 20261017;
  std::size_t cases = 200;
  std::size_t m = 0, n = 0;

  auto* list_cmd = app.add_subcommand("list", "list catalog algebras");
  list_cmd->add_option("shape", mn, "m n")->expected(0, 2);
  auto* show_cmd = app.add_subcommand("show", "print an algebra");
  show_cmd->add_option("algebra", target, "label or JSON file")->required();
  auto* check_cmd = app.add_subcommand("check", "axioms and nilpotency");
  check_cmd->add_option("algebra", target, "label or JSON file")->required();
  auto* inv_cmd = app.add_subcommand("invariants", "invariant report");
  inv_cmd->add_option("algebra", target, "label or JSON file")->required();
  auto* h2_cmd = app.add_subcommand("h2", "even adjoint 2-cohomology");
  h2_cmd->add_option("algebra", target, "label or JSON file")->required();
  auto* deg_cmd = app.add_subcommand("degenerate", "verify a degeneration witness");
  deg_cmd->add_option("--from", from, "source label");
  deg_cmd->add_option("--to", to, "target label");
  deg_cmd->add_option("--witness", witness, "witness JSON file");
  auto* nd_cmd = app.add_subcommand("nondegen", "non-degeneration certificates");
  nd_cmd->add_option("--from", from)->required();
  nd_cmd->add_option("--to", to)->required();
  nd_cmd->add_option("--depth", depth, "recursion depth for ab / F");
  auto* hasse_cmd = app.add_subcommand("hasse", "Hasse diagram of verified degenerations");
  hasse_cmd->add_option("m", m)->required();
  hasse_cmd->add_option("n", n)->required();
  hasse_cmd->add_option("--dot", dot, "write DOT to PATH (- for stdout)");
  auto* comp_cmd = app.add_subcommand("components", "irreducible components");
  comp_cmd->add_option("m", m)->required();
  comp_cmd->add_option("n", n)->required();
  auto* g23_cmd = app.add_subcommand("gamma23", "classify a pair of symmetric 3x3 matrices");
  g23_cmd->add_option("--g1", g1, "JSON 3x3 array")->required();
  g23_cmd->add_option("--g2", g2, "JSON 3x3 array")->required();
  auto* all_cmd = app.add_subcommand("verify-all", "compare everything with the expected tables");
  all_cmd->add_option("shape", mn, "m n")->expected(0, 2);
  auto* self_cmd = app.add_subcommand("selftest", "seeded randomized checks");
  self_cmd->add_option("--seed", seed);
  self_cmd->add_option("--cases", cases);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (!cfg.precision_text.empty()) cfg.precision = parse_rational(cfg.precision_text);
    if (cfg.precision <= 0) throw UsageError("precision must be positive");
    if (mn.size() == 1) throw UsageError("expected both m and n");
    set_worker_count(cfg.threads);
    if (*list_cmd) return cmd_list(cfg, mn);
    if (*show_cmd) return cmd_show(cfg, target);
    if (*check_cmd) return cmd_check(cfg, target);
    if (*inv_cmd) return cmd_invariants(cfg, target);
    if (*h2_cmd) return cmd_h2(cfg, target);
    if (*deg_cmd) {
      if (witness.empty() && (from.empty() || to.empty())) throw UsageError("--from and --to are required without --witness");
      return cmd_degenerate(cfg, from, to, witness);
    }
    if (*nd_cmd) return cmd_nondegen(cfg, from, to, depth);
    if (*hasse_cmd) return cmd_hasse(cfg, m, n, dot);
    if (*comp_cmd) return cmd_components(cfg, m, n);
    if (*g23_cmd) return cmd_gamma23(cfg, g1, g2);
    if (*all_cmd) return cmd_verify_all(cfg, mn);
    if (*self_cmd) return cmd_selftest(cfg, seed, cases);
  } catch (const ConsistencyViolation& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return kInconsistent;
  } catch (const NotFound& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

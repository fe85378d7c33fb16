#include "superlie/catalog.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <regex>

namespace superlie {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_resources();
}

using nlohmann::json;

namespace {

json load_json(std::string_view text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(what + ": " + e.what());
  }
}

SuperAlgebra algebra_from(const json& doc) {
  try {
    std::size_t m = doc.at("m").get<std::size_t>();
    std::size_t n = doc.at("n").get<std::size_t>();
    std::string name = doc.contains("label") ? doc["label"].get<std::string>() : doc.value("name", std::string());
    SuperAlgebra g(m, n, name);
    if (doc.contains("brackets")) {
      for (const auto& br : doc["brackets"]) {
        std::size_t a = parse_basis_symbol(m, n, br.at("lhs").get<std::string>());
        std::size_t b = parse_basis_symbol(m, n, br.at("rhs").get<std::string>());
        std::vector<FieldElem> value(m + n);
        for (const auto& term : br.at("value"))
          value[parse_basis_symbol(m, n, term.at("basis").get<std::string>())] +=
              field_parse(term.at("coeff").get<std::string>());
        g.set_bracket(a, b, value);
      }
    }
    return g;
  } catch (const json::exception& e) {
    throw ParseError(std::string("algebra document: ") + e.what());
  }
}

struct Store {
  std::vector<CatalogEntry> entries;
  std::map<std::string, std::size_t> index;
  std::vector<WitnessSpec> witnesses;
  std::vector<NonDegRow> rows;
  ExpectedTables expected;
};

WitnessSpec witness_from(const json& w) {
  WitnessSpec s;
  try {
    s.from = w.at("from").get<std::string>();
    s.to = w.at("to").get<std::string>();
    s.section = w.value("section", std::string());
    s.source = w.value("source", std::string("file"));
    s.note = w.value("note", std::string());
    GradedDim d = label_dims(s.from);
    std::map<std::string, std::string> given;
    for (auto it = w.at("basis").begin(); it != w.at("basis").end(); ++it) given[it.key()] = it.value();
    for (std::size_t k = 0; k < d.total(); ++k) {
      bool even = k < d.even;
      std::size_t idx = even ? k + 1 : k - d.even + 1;
      std::string key = (even ? "x" : "y") + std::to_string(idx);
      auto it = given.find(key);
      s.basis.emplace_back(key, it != given.end() ? it->second : (even ? "e" : "f") + std::to_string(idx));
      if (it != given.end()) given.erase(it);
    }
    if (!given.empty()) throw ParseError("witness basis key out of range: " + given.begin()->first);
    if (w.contains("let")) {
      for (auto it = w["let"].begin(); it != w["let"].end(); ++it) {
        std::vector<std::string> alts;
        if (it.value().is_array())
          for (const auto& a : it.value()) alts.push_back(a.get<std::string>());
        else
          alts.push_back(it.value().get<std::string>());
        s.let.emplace_back(it.key(), std::move(alts));
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("witness document: ") + e.what());
  }
  return s;
}

const Store& store() {
  static const Store s = [] {
    Store st;
    json cat = load_json(resource("catalog.json"), "catalog.json");
    for (const auto& doc : cat.at("algebras")) {
      CatalogEntry e;
      e.label = doc.at("label").get<std::string>();
      e.algebra = algebra_from(doc);
      st.index[e.label] = st.entries.size();
      st.entries.push_back(std::move(e));
    }
    json wit = load_json(resource("witnesses.json"), "witnesses.json");
    for (const auto& w : wit.at("witnesses")) st.witnesses.push_back(witness_from(w));
    json nd = load_json(resource("nondegen.json"), "nondegen.json");
    for (const auto& r : nd.at("rows")) {
      NonDegRow row;
      row.from = r.at("from");
      row.to = r.at("to");
      row.criterion = r.at("criterion");
      row.section = r.value("section", std::string());
      if (r.contains("parity")) row.parity = r["parity"].get<int>();
      if (r.contains("abc"))
        for (const auto& v : r["abc"]) row.abc.push_back(field_parse(v.get<std::string>()));
      st.rows.push_back(std::move(row));
    }
    json ex = load_json(resource("expected.json"), "expected.json");
    ExpectedTables& t = st.expected;
    for (auto it = ex.at("h2_even").begin(); it != ex["h2_even"].end(); ++it) t.h2_even[it.key()] = it.value();
    for (auto it = ex.at("cocycles").begin(); it != ex["cocycles"].end(); ++it)
      t.cocycles[it.key()] = it.value().get<std::vector<std::string>>();
    for (auto it = ex.at("orbit_dim").begin(); it != ex["orbit_dim"].end(); ++it) t.orbit_dim[it.key()] = it.value();
    for (auto it = ex.at("components").begin(); it != ex["components"].end(); ++it)
      t.components[it.key()] = it.value().get<std::vector<std::string>>();
    for (const auto& k : ex.at("known_discrepancies"))
      t.known_discrepancies.push_back({k.at("from"), k.at("to"), k.at("criterion"), k.value("note", std::string())});
    for (const auto& p : ex.at("deformation_probes")) {
      DeformationProbe probe;
      probe.base = p.at("base");
      for (const auto& b : p.at("brackets")) probe.brackets.push_back({b.at("lhs"), b.at("rhs"), b.at("value")});
      probe.t = field_parse(p.at("t").get<std::string>());
      probe.expect = p.at("expect");
      probe.stable = {p.at("stable")[0].get<std::size_t>(), p.at("stable")[1].get<std::size_t>()};
      t.deformation_probes.push_back(std::move(probe));
    }
    for (const auto& k : ex.at("h2_known"))
      t.h2_known.push_back({k.at("label"), k.at("published"), k.at("computed"), k.value("note", std::string())});
    for (const auto& k : ex.at("cocycle_known"))
      t.cocycle_known.push_back({k.at("label"), k.at("index"), k.value("note", std::string()),
                                 k.value("corrected", std::string())});
    for (auto it = ex.at("orbit_dim_known").begin(); it != ex["orbit_dim_known"].end(); ++it)
      t.orbit_dim_known[it.key()] = it.value();
    for (auto it = ex.at("orbit_dim_regression").begin(); it != ex["orbit_dim_regression"].end(); ++it)
      t.orbit_dim_regression[it.key()] = it.value();
    for (const auto& k : ex.at("witness_known"))
      t.witness_known.push_back({k.at("from"), k.at("to"), k.at("status"), k.value("note", std::string())});
    for (auto& e : st.entries) {
      if (auto it = t.orbit_dim.find(e.label); it != t.orbit_dim.end()) e.orbit_dim = it->second;
      if (auto it = t.h2_even.find(e.label); it != t.h2_even.end()) e.h2_dim = it->second;
    }
    return st;
  }();
  return s;
}

}  // namespace

GradedDim label_dims(const std::string& label) {
  static const std::regex re(R"(\((\d+)\|(\d+)\)(_\d+)?)");
  std::smatch m;
  if (!std::regex_match(label, m, re)) throw NotFound(label);
  return {std::stoul(m[1]), std::stoul(m[2])};
}

std::string dims_label(const GradedDim& d) { return d.str(); }

bool label_less(const std::string& x, const std::string& y) {
  auto key = [](const std::string& s) {
    GradedDim d = label_dims(s);
    auto us = s.find('_');
    long idx = us == std::string::npos ? -1 : std::stol(s.substr(us + 1));
    return std::make_tuple(d.total(), -static_cast<long>(d.even), idx);
  };
  return key(x) < key(y);
}

const CatalogEntry& get(const std::string& label) {
  const Store& s = store();
  auto it = s.index.find(label);
  if (it == s.index.end()) throw NotFound(label);
  return s.entries[it->second];
}

std::vector<const CatalogEntry*> list(const GradedDim& dims) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : store().entries)
    if (e.algebra.m() == dims.even && e.algebra.n() == dims.odd) out.push_back(&e);
  return out;
}

const std::vector<CatalogEntry>& list_all() { return store().entries; }

std::vector<GradedDim> catalog_dims() {
  std::vector<GradedDim> out;
  for (const auto& e : store().entries) {
    GradedDim d{e.algebra.m(), e.algebra.n()};
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
  }
  std::stable_sort(out.begin(), out.end(), [](const GradedDim& a, const GradedDim& b) {
    return a.total() != b.total() ? a.total() < b.total() : a.even > b.even;
  });
  return out;
}

SuperAlgebra parse_algebra_document(std::string_view text) { return algebra_from(load_json(text, "algebra")); }

std::string algebra_document(const SuperAlgebra& g) {
  json doc;
  doc["name"] = g.name();
  doc["m"] = g.m();
  doc["n"] = g.n();
  json brs = json::array();
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = a; b < g.dim(); ++b) {
      json value = json::array();
      for (std::size_t k = 0; k < g.dim(); ++k)
        if (!g.at(a, b, k).is_zero())
          value.push_back({{"coeff", field_format(g.at(a, b, k))}, {"basis", basis_name(g, k)}});
      if (!value.empty())
        brs.push_back({{"lhs", basis_name(g, a)}, {"rhs", basis_name(g, b)}, {"value", std::move(value)}});
    }
  doc["brackets"] = std::move(brs);
  return doc.dump(1);
}

const std::vector<WitnessSpec>& builtin_witnesses() { return store().witnesses; }

WitnessSpec parse_witness_document(std::string_view text) { return witness_from(load_json(text, "witness")); }

std::vector<const WitnessSpec*> find_witnesses(const std::string& from, const std::string& to) {
  std::vector<const WitnessSpec*> out;
  for (const auto& w : store().witnesses)
    if (w.from == from && w.to == to) out.push_back(&w);
  return out;
}

const std::vector<NonDegRow>& nondegen_rows() { return store().rows; }

const ExpectedTables& expected() { return store().expected; }

std::vector<std::string> resource_names() {
  std::vector<std::string> out;
  for (const auto& [name, body] : detail::embedded_resources()) out.emplace_back(name);
  return out;
}

std::string_view resource(const std::string& name) {
  for (const auto& [n, body] : detail::embedded_resources())
    if (n == name) return body;
  throw NotFound("resource " + name);
}

std::vector<std::string> export_resources(const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> out;
  for (const auto& [name, body] : detail::embedded_resources()) {
    auto path = std::filesystem::path(dir) / std::string(name);
    std::ofstream f(path, std::ios::binary);
    f << body;
    if (!f) throw std::runtime_error("cannot write " + path.string());
    out.push_back(path.string());
  }
  return out;
}

SuperAlgebra heisenberg_1n(std::size_t n) {
  if (n == 0) throw std::invalid_argument("heisenberg_1n requires n >= 1");
  SuperAlgebra g(1, n, "H(1|" + std::to_string(n) + ")");
  std::vector<FieldElem> e1(1 + n);
  e1[0] = 1;
  for (std::size_t i = 0; i < n; ++i) g.set_bracket(1 + i, 1 + i, e1);
  return g;
}

SuperAlgebra K2m(std::size_t m) {
  if (m % 2 == 0) throw MEven();
  SuperAlgebra g(2, m, "K(2," + std::to_string(m) + ")");
  const std::size_t d = 2 + m;
  for (std::size_t i = 1; i < m; ++i) {
    std::vector<FieldElem> v(d);
    v[2 + i] = 1;
    g.set_bracket(0, 2 + i - 1, v);
  }
  for (std::size_t j = 1; j <= m; ++j) {
    std::vector<FieldElem> v(d);
    v[1] = j % 2 == 1 ? 1 : -1;
    g.set_bracket(2 + j - 1, 2 + m - j, v);
  }
  return g;
}

}  // namespace superlie

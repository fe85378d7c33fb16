#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "superlie/superalg.hpp"

namespace superlie {

class NotFound : public std::out_of_range {
 public:
  explicit NotFound(const std::string& what) : std::out_of_range("not found: " + what) {}
};

class MEven : public std::invalid_argument {
 public:
  MEven() : std::invalid_argument("K2m requires an odd m") {}
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct CatalogEntry {
  std::string label;
  SuperAlgebra algebra;
  std::optional<int> orbit_dim;
  std::optional<int> h2_dim;
};

// "(2|3)_18" -> (2|3).
GradedDim label_dims(const std::string& label);
std::string dims_label(const GradedDim& d);

const CatalogEntry& get(const std::string& label);
std::vector<const CatalogEntry*> list(const GradedDim& dims);
const std::vector<CatalogEntry>& list_all();
// Graded shapes present in the catalog, ordered by total dimension then by m descending.
std::vector<GradedDim> catalog_dims();

// JSON algebra documents.
SuperAlgebra parse_algebra_document(std::string_view text);
std::string algebra_document(const SuperAlgebra& g);

struct WitnessSpec {
  std::string from, to, section, source, note;
  // Keys x1..xm, y1..yn in positional order; omitted keys default to e_i / f_j.
  std::vector<std::pair<std::string, std::string>> basis;
  // Named sub-expressions substituted textually; alternatives are tried in order.
  std::vector<std::pair<std::string, std::vector<std::string>>> let;
};
const std::vector<WitnessSpec>& builtin_witnesses();
WitnessSpec parse_witness_document(std::string_view text);
// Witnesses for from -> to, builtin only.
std::vector<const WitnessSpec*> find_witnesses(const std::string& from, const std::string& to);

struct NonDegRow {
  std::string from, to, criterion, section;
  std::optional<int> parity;
  std::vector<FieldElem> abc;
};
const std::vector<NonDegRow>& nondegen_rows();

struct BracketText {
  std::string lhs, rhs, value;
};
struct DeformationProbe {
  std::string base;
  std::vector<BracketText> brackets;
  FieldElem t;
  std::string expect;
  GradedDim stable;
};
struct KnownDiscrepancy {
  std::string from, to, criterion, note;
};
// A published value that the computation contradicts, with the computed value.
struct KnownValue {
  std::string label;
  int published = 0, computed = 0;
  std::string note;
};
struct KnownCocycle {
  std::string label;
  std::size_t index = 0;
  std::string note, corrected;
};
// A published witness that does not verify as printed.
struct KnownWitness {
  std::string from, to, status, note;
};
struct ExpectedTables {
  std::map<std::string, int> h2_even;
  std::map<std::string, std::vector<std::string>> cocycles;
  std::map<std::string, int> orbit_dim;
  std::map<std::string, std::vector<std::string>> components;
  std::vector<KnownDiscrepancy> known_discrepancies;
  std::vector<DeformationProbe> deformation_probes;
  std::vector<KnownValue> h2_known;
  std::vector<KnownCocycle> cocycle_known;
  std::map<std::string, int> orbit_dim_known;  // computed values where the diagram disagrees
  std::map<std::string, int> orbit_dim_regression;
  std::vector<KnownWitness> witness_known;
};
const ExpectedTables& expected();

std::vector<std::string> resource_names();
std::string_view resource(const std::string& name);
// Writes every resource into dir; returns the written paths.
std::vector<std::string> export_resources(const std::string& dir);

// (1|n) Heisenberg superalgebra with even center: [f_i,f_i] = e1.
SuperAlgebra heisenberg_1n(std::size_t n);
// (2|m): [e1,f_i] = f_{i+1}, [f_j,f_{m+1-j}] = (-1)^{j+1} e2.
SuperAlgebra K2m(std::size_t m);

// Orders labels by shape, then numeric suffix.
bool label_less(const std::string& x, const std::string& y);

}  // namespace superlie

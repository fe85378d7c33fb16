#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superlie/catalog.hpp"
#include "superlie/invariants.hpp"

namespace superlie {

class ConsistencyViolation : public std::logic_error {
 public:
  explicit ConsistencyViolation(const std::string& what) : std::logic_error(what) {}
};

enum class VerifyStatus { Verified, Singular, Diverges, WrongLimit, NotGraded };

struct VerifyResult {
  VerifyStatus status = VerifyStatus::Verified;
  std::string pair;            // bracket of the offending constant, e.g. "[f1,f2]"
  std::string got, expected;   // WrongLimit: limit and target values; Diverges: leading term
  std::vector<std::string> let_choice;  // alternative used for each let binding
  Rational precision = kDefaultPrecision;
  bool verified() const { return status == VerifyStatus::Verified; }
  std::string message() const;
};

// Throws InsufficientPrecision when some limit is undetermined at this precision.
VerifyResult verify_degeneration(const WitnessSpec& w, const SuperAlgebra& from, const SuperAlgebra& to,
                                 const Rational& precision = kDefaultPrecision);
VerifyResult verify_degeneration(const WitnessSpec& w, const Rational& precision = kDefaultPrecision);
// Doubles the precision up to `rounds` times on InsufficientPrecision.
VerifyResult verify_with_retry(const WitnessSpec& w, const Rational& precision = kDefaultPrecision, int rounds = 3);

// Worker threads for batch verification; 0 means hardware concurrency.
void set_worker_count(std::size_t n);

// Substitutes each whole-word occurrence of name by "(value)".
std::string substitute_let(const std::string& text, const std::string& name, const std::string& value);

struct NonDegCertificate {
  std::string criterion;  // orbit_dim, gamma_zero, center, derived, ab_recursion, F_recursion, abc_derivation, trivial_sub
  std::optional<int> parity;
  std::optional<std::array<FieldElem, 3>> abc;
  std::string g_value, h_value;
  std::string detail;
  std::string describe() const;
};

struct NonDegOptions {
  int depth = 2;                  // recursion depth for ab / F
  bool strict_orbit = true;       // inputs are known to be non-isomorphic
  std::vector<std::array<FieldElem, 3>> abc_tuples = default_abc_tuples();
  bool graded_trivial = true;     // also compare graded trivial-subspace shapes
};

// Empty result means Inconclusive. Identical inputs give no certificate.
std::vector<NonDegCertificate> auto_nondegen(const SuperAlgebra& g, const SuperAlgebra& h, const NonDegOptions& opts = {});

// Maps a table criterion name (gamma, center, derived, ab, F, abc, trivial) to certificate criteria.
std::string certificate_criterion(const std::string& table_criterion);
// Certificates supporting the cited criterion of a table row.
std::vector<NonDegCertificate> cited_certificates(const NonDegRow& row);

struct HasseEdge {
  std::string from, to;
  std::string source;  // published | supplementary | correction
};

struct HasseDiagram {
  GradedDim dim;
  std::vector<std::string> nodes;
  std::map<std::string, int> orbit_dim;
  std::vector<HasseEdge> verified;                  // every verified witness
  std::vector<std::pair<std::string, std::string>> failures;  // witnesses that did not verify, with message
  std::set<std::pair<std::string, std::string>> closure;      // reflexive-transitive
  std::vector<std::pair<std::string, std::string>> edges;     // transitive reduction
  bool reaches(const std::string& a, const std::string& b) const { return closure.count({a, b}) > 0; }
};

// Verifies all builtin witnesses of the shape; with check, asserts that no closure pair has a certificate.
HasseDiagram build_hasse(const GradedDim& d, bool check = true);
std::string hasse_dot(const HasseDiagram& h);

struct ComponentResult {
  std::vector<std::string> labels;
  std::vector<std::string> warnings;  // maximal pairs not separated by a certificate
};
ComponentResult components(const HasseDiagram& h);

struct DiscrepancyRow {
  NonDegRow row;
  std::vector<NonDegCertificate> alternatives;
  bool refuted = false;  // a verified degeneration path exists
  std::optional<KnownDiscrepancy> known;
  std::string status() const;  // alternative | refuted | unconfirmed
};
// Table rows (optionally of one shape) whose cited criterion yields no certificate.
std::vector<DiscrepancyRow> discrepancy_report(const std::optional<GradedDim>& d = std::nullopt);

}  // namespace superlie

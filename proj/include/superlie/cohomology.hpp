#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "superlie/catalog.hpp"
#include "superlie/superalg.hpp"

namespace superlie {

class JacobiViolated : public std::runtime_error {
 public:
  explicit JacobiViolated(const std::string& what) : std::runtime_error(what) {}
};

// Even 2-cochain in coordinates. Basis order: ee slots (i<j, k), then ef slots
// (i, j, k) for e_i (x) f_j -> f_k, then ff slots (i<=j, k).
struct Cochain2Even {
  std::size_t m = 0, n = 0;
  FVector coords;
};

struct EvenEndomorphism {
  FMatrix A;  // m x m
  FMatrix D;  // n x n
};

std::size_t cochain_dim(std::size_t m, std::size_t n);
// phi(b_a, b_b) as a vector of length m + n.
GradedVector cochain_value(const Cochain2Even& phi, std::size_t a, std::size_t b);

Cochain2Even d1(const SuperAlgebra& g, const EvenEndomorphism& psi);
// Values of d2(phi) on all basis triples, flattened (a, b, c, k).
FVector d2(const SuperAlgebra& g, const Cochain2Even& phi);
bool is_cocycle(const SuperAlgebra& g, const Cochain2Even& phi);

struct H2Result {
  std::size_t dim = 0;
  std::size_t cocycles = 0;     // dim ker d2
  std::size_t coboundaries = 0;  // rank d1
  std::vector<Cochain2Even> basis;
};
H2Result h2_even(const SuperAlgebra& g);

// Text form "c*e1*^e2*@e1 + ...". In the wedge, fi*^fi* evaluates to 1 on (fi, fi).
Cochain2Even parse_cochain(std::size_t m, std::size_t n, const std::string& text);
std::string format_cochain(const Cochain2Even& phi);

struct CocycleCheck {
  std::vector<bool> closed;
  bool independent = false;  // modulo coboundaries
  std::size_t h2_dim = 0;
  bool ok() const;
};
CocycleCheck validate_cocycles(const SuperAlgebra& g, const std::vector<std::string>& texts);

enum class ProbeResult { Nilpotent, NotNilpotent };
struct ProbeOutcome {
  ProbeResult result;
  std::vector<GradedDim> series;
};
ProbeOutcome deformation_nilpotency_probe(std::size_t m, std::size_t n, const std::vector<BracketText>& brackets,
                                          const FieldElem& t);
// Value at t of an exact series with non-negative integer exponents.
FieldElem series_at(const Series& s, const FieldElem& t);

}  // namespace superlie

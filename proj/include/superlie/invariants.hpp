#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "superlie/poly.hpp"
#include "superlie/superalg.hpp"

namespace superlie {

struct GradedSpace {
  GradedDim dim;
  Subspace basis;
};

GradedSpace center(const SuperAlgebra& g);
GradedSpace derived_space(const SuperAlgebra& g);
GradedDim derived(const SuperAlgebra& g);
bool gamma_is_zero(const SuperAlgebra& g);

// Solutions D of alpha*D[x,y] = beta*[Dx,y] + (-1)^{degree*|x|} gamma*[x,Dy],
// D homogeneous of the given parity. Basis elements are N x N matrices acting on columns.
struct DerivationSpace {
  std::size_t dim = 0;
  std::vector<FMatrix> basis;
};
DerivationSpace abc_derivations(const SuperAlgebra& g, const FieldElem& alpha, const FieldElem& beta,
                                const FieldElem& gamma, int degree);

// m^2 + n^2 - dim Der_0(g).
int orbit_dim(const SuperAlgebra& g);

using Shape = std::pair<std::size_t, std::size_t>;  // (even dim | odd dim)

struct TrivialSubResult {
  std::size_t lower = 0;
  std::string witness;             // spanning vectors of a largest trivial subalgebra found
  std::optional<std::size_t> exact;
  std::set<Shape> profile;         // shapes known to admit a trivial graded subspace
  std::set<Shape> excluded;        // shapes proven to admit none
  std::set<Shape> undecided;
  bool decided(const Shape& s) const { return profile.count(s) || excluded.count(s); }
};
TrivialSubResult trivial_sub_max(const SuperAlgebra& g, const GroebnerCaps& caps = {});

struct AbcEntry {
  FieldElem alpha, beta, gamma;
  int degree;
  std::size_t dim;
};

struct InvariantReport {
  GradedDim center, derived;
  bool gamma_zero = false;
  std::size_t der0_dim = 0;
  int orbit_dim = 0;
  std::vector<AbcEntry> abc_entries;
  TrivialSubResult trivial;
  std::vector<GradedDim> lower_central;
};

// abc tuples probed by default: (1,1,1), (0,1,0), (0,1,-1) in degrees 0 and 1.
std::vector<std::array<FieldElem, 3>> default_abc_tuples();
InvariantReport invariant_report(const SuperAlgebra& g, bool with_trivial = true, const GroebnerCaps& caps = {});
std::string report_json(const InvariantReport& r, const std::string& label);

std::string format_vector(const SuperAlgebra& g, const GradedVector& v);

}  // namespace superlie

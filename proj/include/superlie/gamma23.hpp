#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "superlie/exactla.hpp"
#include "superlie/poly.hpp"
#include "superlie/superalg.hpp"

namespace superlie::gamma23 {

// Pair of symmetric 3x3 matrices; Gamma^k_ij is the coefficient of e_k in [f_i,f_j].
struct SymPair {
  FMatrix g1 = FMatrix(3, 3), g2 = FMatrix(3, 3);
  friend bool operator==(const SymPair& x, const SymPair& y) { return x.g1 == y.g1 && x.g2 == y.g2; }
};

// Throws InvalidAlgebra unless both matrices are symmetric 3x3.
SymPair make_pair(const FMatrix& g1, const FMatrix& g2);

// (T,S).(G1,G2) = (T11 S^t G1 S + T12 S^t G2 S, T21 S^t G1 S + T22 S^t G2 S); throws Singular.
SymPair pair_act(const FMatrix& T, const FMatrix& S, const SymPair& p);

// The (2|3) superalgebra with zero even bracket and zero action.
SuperAlgebra pair_to_algebra(const SymPair& p);
// Throws InvalidAlgebra unless g is (2|3) with only odd-odd brackets.
SymPair algebra_to_pair(const SuperAlgebra& g);

FMatrix I1();
FMatrix I2();
FMatrix I3();
FMatrix K();
FMatrix L();
FVector u0();
FVector u1();
FMatrix Delta(const FieldElem& lambda);
FMatrix T_lambda(const FieldElem& lambda);
FMatrix R();
FMatrix S0();

struct PencilSignature {
  std::size_t span_dim = 0;
  std::size_t generic_rank = 0;
  // Root multiplicities of det(l*G1 + m*G2) on the projective line, descending; empty unless generic rank 3.
  std::vector<int> det_partition;
  // Degree of the gcd of the 2x2 minors as a binary form; -1 when generic rank < 2.
  int minor_gcd_degree = -1;
  bool has_invertible_member = false;
  bool simdiag = false;
  std::vector<std::size_t> probe_ranks;  // ranks of G1 and l*G1 + G2, l = 0..6; informational only
  std::string str() const;
  friend bool operator==(const PencilSignature& x, const PencilSignature& y) {
    return x.span_dim == y.span_dim && x.generic_rank == y.generic_rank && x.det_partition == y.det_partition &&
           x.minor_gcd_degree == y.minor_gcd_degree && x.has_invertible_member == y.has_invertible_member &&
           x.simdiag == y.simdiag;
  }
};

PencilSignature signature(const SymPair& p);

// Simultaneous diagonalizability by congruence of two symmetric n x n matrices.
bool simdiag_test(const FMatrix& a, const FMatrix& b);
inline bool simdiag_test(const SymPair& p) { return simdiag_test(p.g1, p.g2); }

// Minimal polynomial of a square matrix, monic.
UPoly minimal_polynomial(const FMatrix& x);

struct SymNormalForm {
  FMatrix form;  // S^t A S
  FMatrix S;     // orthogonal: S^t S = id
  bool diagonal = false;
  std::vector<FieldElem> eigenvalues;  // diagonal entries, or (lambda) / (lambda, mu)
  FieldElem c;                         // corner coefficient for n = 3, 0 or 1
};
// Orthogonal normal form of a symmetric 2x2 or 3x3 matrix; nullopt when the needed
// eigenvalues or square roots are not in the field.
std::optional<SymNormalForm> sym_normal_form(const FMatrix& a);

struct Representative {
  std::string label;
  SymPair pair;
};
const std::vector<Representative>& representatives();

// Label (2|3)_0 .. (2|3)_11, or nullopt (Unknown).
std::optional<std::string> classify_pair(const SymPair& p);

}  // namespace superlie::gamma23

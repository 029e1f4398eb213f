#pragma once

#include <array>
#include <map>
#include <vector>

#include "heckespheres/vmodule.hpp"

namespace hsp {

enum class UqGen { K, KInv, E, F };

// Sparse operator on V_n in the uhat basis (rows indexed by the image
// coordinate, columns by the source coordinate).
class ActionMatrix {
 public:
  ActionMatrix(int n) : n_(n), rows_(1u << n) {}

  int rank() const { return n_; }
  std::uint32_t dim() const { return static_cast<std::uint32_t>(rows_.size()); }
  const std::map<std::uint32_t, Scalar>& row(std::uint32_t r) const { return rows_[r]; }
  Scalar entry(std::uint32_t r, std::uint32_t c) const;

  void add(std::uint32_t r, std::uint32_t c, const Scalar& value);

  ActionMatrix operator+(const ActionMatrix& o) const;
  ActionMatrix operator-(const ActionMatrix& o) const;
  ActionMatrix operator*(const ActionMatrix& o) const;
  ActionMatrix scaled(const Scalar& c) const;
  static ActionMatrix identityMatrix(int n);

  bool isZero() const;
  bool operator==(const ActionMatrix& o) const;

  // Apply to a module element (converted to the uhat basis internally).
  VElt apply(const VElt& v) const;

 private:
  int n_;
  std::vector<std::map<std::uint32_t, Scalar>> rows_;
};

// Fundamental representation on W_1 in the ordered basis (e_{-1}, e_1):
// K = diag(q^(1/2), q^(-1/2)), E e_1 = e_{-1}, F e_{-1} = e_1.
std::array<std::array<Scalar, 2>, 2> fundamentalRep(UqGen g);

// n-fold tensor product representation t via the iterated coproduct
//   t(K) = K x...x K,
//   t(E) = sum_i K^{(i-1)} x E x 1^{(n-i)},
//   t(F) = sum_i 1^{(i-1)} x F x (K^{-1})^{(n-i)},
// in the uhat basis under uhat(x_1, ..., x_n) = e_{x_1} x...x e_{x_n}.
ActionMatrix tAction(UqGen g, int n);

// rho(T_i) as a matrix in the uhat basis.
ActionMatrix rhoGenMatrix(int i, int n);

// The *-structure: K* = K, E* = q^(-1/2) F K, F* = q^(1/2) K^{-1} E.
struct UqWord {
  Scalar coeff;
  std::vector<UqGen> letters;  // leftmost letter acts last
};
UqWord starGen(UqGen g);
ActionMatrix tActionWord(const UqWord& word, int n);

// Multiplicities of the irreducibles W_N inside W_1^{(x) n} by iterating
// the Clebsch-Gordan rule W_m (x) W_1 = W_{m+1} (+) W_{m-1}.
std::map<int, int> clebschGordanMultiplicities(int n);

struct CommutantReport {
  int n = 0;
  bool commutatorsVanish = false;      // [t(g), rho(T_i)] = 0 for all g, i < n
  bool dimsComputed = false;           // 4^n-variable systems solved
  long uCentralizerDim = -1;           // centraliser of t(U...) generators
  long uCentralizerDimExpected = -1;   // sum of squared CG multiplicities
  long heckeCentralizerDim = -1;       // centraliser of {rho(T_i) : i < n}
  long heckeCentralizerDimExpected = -1;  // sum of squared irrep dimensions
  long heckeSpanDim = -1;              // dim span{rho(T_sigma) : sigma in S_n}
  long specializedUCentralizerDim = -1;   // randomised numeric pre-check
  bool dimensionsWithOracle() const {
    return uCentralizerDim == uCentralizerDimExpected &&
           heckeCentralizerDim == heckeCentralizerDimExpected &&
           heckeSpanDim == uCentralizerDimExpected &&
           specializedUCentralizerDim == uCentralizerDimExpected;
  }
  bool pass() const {
    return commutatorsVanish && (!dimsComputed || dimensionsWithOracle());
  }
};

// Verifies Jimbo's duality between t(U) and rho(F_n) on V_n:
// (a) exact commutation, (b) the commutant of the quantum group action has
// dimension sum of squared Clebsch-Gordan multiplicities and is exhausted
// by the span of the rho(T_sigma); the centraliser of the Hecke generators
// matches the squared dimensions of the W_{n-2k}.  Dimension checks are
// limited to dimCheckMaxN (they solve 4^n-variable linear systems).
CommutantReport checkCommutant(int n, int dimCheckMaxN = 4);

// Exact basis of {v : rho(T_i) v = q v for i < n} (uhat coordinates);
// asserts that t(K), t(E), t(F) preserve the space and that
// uhat(-1,...,-1) is a highest weight vector inside it.
std::vector<VElt> invariantSubspace(int n);

}  // namespace hsp

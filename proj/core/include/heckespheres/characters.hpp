#pragma once

#include <map>

#include "heckespheres/vmodule.hpp"

namespace hsp {

// chi_y(u(x^j)): p q^{m_j(y)} when y_j = 1, else -q^{n-j-m_j(y)}.
Scalar charOnGenerator(const SignVector& y, int j);

// chi_y(u(x)), a signed monomial (product over the minus positions of x).
Scalar evalCharBasis(const SignVector& y, std::uint32_t xBits);

// Linear extension to arbitrary module elements.
Scalar evalChar(const SignVector& y, const VElt& v);

// Squared norm h_y = prod_j (1 + (p q^{2 m_j(y) + j - n})^{y_j}).
Scalar weightH(const SignVector& y);

// Element of V_n^* in the character basis chi_y (finite support, no zeros).
class DualElt {
 public:
  explicit DualElt(int n) : n_(n) {}
  static DualElt character(const SignVector& y, const Scalar& c = Scalar(1));

  int rank() const { return n_; }
  const std::map<std::uint32_t, Scalar>& coeffs() const { return coeffs_; }
  Scalar coefficient(std::uint32_t yBits) const;
  bool isZero() const { return coeffs_.empty(); }

  void add(std::uint32_t yBits, const Scalar& c);
  DualElt operator+(const DualElt& o) const;
  DualElt operator-(const DualElt& o) const;
  DualElt scaled(const Scalar& c) const;
  bool operator==(const DualElt& o) const { return n_ == o.n_ && coeffs_ == o.coeffs_; }

  // Evaluation as a linear functional on V_n.
  Scalar operator()(const VElt& v) const;

 private:
  int n_;
  std::map<std::uint32_t, Scalar> coeffs_;
};

// Fourier transform b: V_n^* -> V_n determined by f(v) = B(v, b(f));
// b(chi_y) = xi_y has uhat-coordinates chi_y(uhat(x)).
VElt fourier(const DualElt& d);
DualElt inverseFourier(const VElt& v);

// xi_y = b(chi_y) directly.
VElt idempotentXi(const SignVector& y);

// Convolution chi * eta = b^{-1}(b(chi) b(eta)).
DualElt convolve(const DualElt& a, const DualElt& b);

// Contragredient action rho^*(T_i) on the character basis (defined through
// the involution star1); rhoStar0 uses star2, i.e. rho^*(T_i^{-1}) expanded.
DualElt rhoStarGen(int i, const DualElt& d);
DualElt rhoStar0Gen(int i, const DualElt& d);

DualElt rhoStarWord(const std::vector<int>& word, const DualElt& d);

// rho^*(T_x) acts diagonally on characters; returns the eigenvalue on
// chi_y and throws NotDiagonal if off-diagonal terms survive.
Scalar rhoStarDiagonalOnTx(const SignVector& x, const SignVector& y);

}  // namespace hsp

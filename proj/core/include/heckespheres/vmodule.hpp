#pragma once

#include <cstdint>
#include <vector>

#include "heckespheres/hecke.hpp"

namespace hsp {

// Coordinate basis of the induced module V_n = Ind_{F_n}^{H_n} iota:
//   u(x)    = pi(T_{u_x})
//   uhat(x) = iota(T_{u_x})^{-1/2} u(x)   (orthonormal for B)
//   v(x)    = iota(T_{u_x})^{-1}  u(x)    (dual to u(x))
enum class VBasis { U, UHat, V };

// Element of V_n: 2^n coordinates indexed by SignVector bitmask, tagged with
// the basis they are expressed in.  Conversions are exact diagonal scalings.
class VElt {
 public:
  VElt(int n, VBasis basis);
  static VElt basisVector(int n, VBasis basis, std::uint32_t xBits);
  static VElt unit(int n) { return basisVector(n, VBasis::U, 0); }  // u(1,...,1)

  int rank() const { return n_; }
  VBasis basis() const { return basis_; }
  std::uint32_t dim() const { return static_cast<std::uint32_t>(coords_.size()); }
  const Scalar& coord(std::uint32_t xBits) const { return coords_[xBits]; }
  Scalar& coord(std::uint32_t xBits) { return coords_[xBits]; }
  const std::vector<Scalar>& coords() const { return coords_; }

  VElt inBasis(VBasis target) const;
  VElt operator+(const VElt& o) const;
  VElt operator-(const VElt& o) const;
  VElt scaled(const Scalar& c) const;
  bool isZero() const;
  // basis-independent comparison
  friend bool equalAsVectors(const VElt& a, const VElt& b);

  std::vector<std::string> coordStrings() const;

 private:
  int n_;
  VBasis basis_;
  std::vector<Scalar> coords_;
};

// iota(T_{u_x}) and its exact square root, as monomial scalars.
Scalar iotaU(int n, std::uint32_t xBits);
Scalar iotaUSqrt(int n, std::uint32_t xBits);

// rho(T_i) applied to an element (any basis; result in the same basis).
VElt actGen(int i, const VElt& v);
// rho(T_w) along a reduced word of w.
VElt actWord(const std::vector<int>& word, const VElt& v);
// Linear extension to arbitrary Hecke elements.
VElt actHecke(const HeckeElt& a, const VElt& v);

// pi: H_n -> V_n, pi(T) = rho(T)(1 (x) 1); pi(T_w) = q^{l(sigma)} u(x) for
// the decomposition w = u_x sigma.
VElt piMap(const HeckeElt& a);

// The commutative product of V_n, computed structurally from
//   u(x^j) u(x^k) = u(x^j x^k)                         (j != k)
//   u(x^j)^2 = (q-1) u(x^j) (u(x^{j+1}) + ... + u(x^n))
//            + (p-1) u(x^j) + p q^{n-j} u(1).
VElt product(const VElt& a, const VElt& b);

// Cross-check route for the product: u(x) u(y) =
// q^{-l(sigma_x)-l(sigma_y)} pi(T_x T_y); goes through full Hecke
// multiplication, intended for small n only.
VElt productViaHecke(std::uint32_t xBits, std::uint32_t yBits, int n);

// tau reads the u(1,...,1)-coordinate; B(a, b) = tau(product(a, b)).
Scalar tau(const VElt& v);
Scalar bilinearB(const VElt& a, const VElt& b);

// rho(P) v = P_A(q)^{-1} sum_{sigma in S_n} rho(T_sigma) v via the full n!
// walk; throws CapExceeded past the symmetrizer cap.
VElt symmetrize(const VElt& v);

}  // namespace hsp

#pragma once

#include "heckespheres/characters.hpp"
#include "heckespheres/qgroup.hpp"
#include "heckespheres/qseries.hpp"

namespace hsp {

// Orthogonal basis w_0, ..., w_n of the F_n-invariant part of V_n, with
// w_d = rho(P) v(1,...,1,-1,...,-1) (d trailing minus signs) computed by
// genuine n!-term Hecke symmetrisation.
struct InvariantBasis {
  int n = 0;
  std::vector<VElt> w;  // size n+1
};

InvariantBasis buildInvariantBasis(int n);

// rho(P) v(x) = w_{w(x)} for every x (representative independence).
bool representativeIndependenceHolds(const InvariantBasis& basis);

// B(w_d, w_e) = delta p^{-d} q^{-d(d-1)/2} [n d]_q^{-1}.
Scalar invariantNorm(int d, int n);

// t(g) w_d with the closed-form coefficient asserted exactly:
//   t(K) w_d = q^{d - n/2} w_d
//   t(E) w_d = p^(1/2) q^{(1-n)/2} q^d (1-q^{n-d})/(1-q) w_{d+1}
//   t(F) w_d = p^(-1/2) q^{1-d} (1-q^d)/(1-q) w_{d-1}
VElt actEFK(UqGen g, const InvariantBasis& basis, int d);

// phi_f(w_d) = chi_y(w_d) for any y of weight f; checkAllRepresentatives
// additionally asserts the value is the same for every such y.
Scalar phiEval(int f, int d, const InvariantBasis& basis,
               bool checkAllRepresentatives = false);

struct SphericalTable {
  int n = 0;
  std::vector<std::vector<Scalar>> values;  // values[f][d]
};

// Rows filled from phi_f(w_0) = 1 by solving the three-term recurrence
//   (p(1-q^{n-f}) - (1-q^f)) phi_f(w_d) = p q^d (1-q^{n-d}) phi_f(w_{d+1})
//     + (1-q^d)(p-1) phi_f(w_d) + (1-q^d) phi_f(w_{d-1})
// forward in d (the w_{d+1} coefficient is nonzero for d < n).
SphericalTable phiViaRecurrence(int n);

// Character route, one column per w_d of the supplied basis.
SphericalTable phiViaCharacters(const InvariantBasis& basis);

// phi_f as an element of V_n^*: H_f sum_{w(y)=f} h_y^{-1} chi_y.
DualElt phiAsDual(int f, int n);
// Oracle route: rho^*(P) chi_y by n!-term symmetrisation over S_n.
DualElt phiViaSymmetrization(int f, int n);

// Squared norm H_f = [n f]_q^{-1} (-p q^{-f}; q)_{n+1} / (p q^{n-f} + q^f)
//                    * q^{f(f+1)/2} p^{-f}.
Scalar weightHf(int f, int n);

struct IdentifyReport {
  int n = 0;
  // per (f, d): the three routes agree as canonical scalars
  std::vector<std::vector<bool>> agrees;
  bool pass() const;
};

// Exact agreement of phiViaCharacters, phiViaRecurrence and the 3phi2 sum
// K_f(q^{-d}; p, n; q) for all 0 <= f, d <= n.
IdentifyReport identifyKrawtchouk(int n);

struct OrthogonalityReport {
  int n = 0;
  bool orthogonality = false;        // sum_d p^d q^{d(d-1)/2} [n d]_q phi phi
  bool dualOrthogonality = false;    // sum_f H_f^{-1} phi phi
  bool hfMatchesCharacterWeights = false;  // H_f^{-1} = sum_{w(y)=f} h_y^{-1}
  bool h0ClosedForm = false;         // H_0 = (-p; q)_n
  bool hnClosedForm = false;         // H_n = (-p^{-1}; q)_n
  bool pass() const {
    return orthogonality && dualOrthogonality && hfMatchesCharacterWeights &&
           h0ClosedForm && hnClosedForm;
  }
};

OrthogonalityReport orthogonalityHf(int n);

struct EigenOperatorReport {
  int n = 0;
  bool eigenvectors = false;   // t^*(E + E^* + c(K-1)) phi_f = lambda_f phi_f
  bool convolution = false;    // phi_f * phi_g = delta H_f phi_f
  bool pass() const { return eigenvectors && convolution; }
};

EigenOperatorReport eigenOperatorCheck(int n);

// c_l(k, d) = tau(w_k w_d w_l) / B(w_l, w_l); also verifies the symmetry of
// tau(w_k w_d w_l) and the linearisation phi_f(w_k) phi_f(w_d) =
// sum_l c_l(k,d) phi_f(w_l).
std::vector<Scalar> productCoeffs(const InvariantBasis& basis, int k, int d);

// Proof identity behind the recurrence: with w = sum_i u(x^i) and
// v = v(1,...,1,-1,...,-1) (d minus signs),
//   (1-q) rho(P)(w v) = p q^d (1-q^{n-d}) w_{d+1}
//                     + (1-q^d)(p-1) w_d + (1-q^d) w_{d-1}.
bool recurrenceProofIdentity(const InvariantBasis& basis, int d);

// u(z, 1, -1, ..., -1) u(x^i)^2 expansion (prefix z of length i-1):
//   q^{n-i}(p-1) u(z,-1,...,-1)
// + p q^{n-i-1}(q-1) sum_{j>i} u(z,-1,...,-1,1@j,-1,...,-1)
// + p q^{n-i} u(z,1,-1,...,-1).
bool lemmaProductCheck(int i, std::uint32_t zPrefixBits, int n);

enum class LieType { B, C, TwistedD, TwistedAOdd, TwistedAEven };

// Stanton's specialisations (p, q) realising the Hecke algebra of a finite
// group of Lie type with Weyl group H_n, as functions of the prime power q0.
std::pair<Rational, Rational> lieTypePreset(LieType type, const Rational& q0);

}  // namespace hsp

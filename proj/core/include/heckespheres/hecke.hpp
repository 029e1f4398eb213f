#pragma once

#include <functional>
#include <map>
#include <vector>

#include "heckespheres/scalar.hpp"
#include "heckespheres/signed_perm.hpp"

namespace hsp {

// Symmetrisation over S_n costs O(n! * n) generator applications; beyond
// this cap the factorial blow-up is refused rather than attempted.
inline constexpr int kSymmetrizerCap = 8;

// Element of the generic type-B Hecke algebra H_n over Q(p^(1/2), q^(1/2)):
// a finite linear combination of basis symbols T_w.  Elements supported on
// unsigned permutations form the parabolic subalgebra F_n.
class HeckeElt {
 public:
  explicit HeckeElt(int n) : n_(n) {}
  static HeckeElt basis(const SignedPerm& w, const Scalar& c = Scalar(1));
  static HeckeElt identity(int n) { return basis(SignedPerm::identity(n)); }

  int rank() const { return n_; }
  const std::map<SignedPerm, Scalar>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  Scalar coefficient(const SignedPerm& w) const;

  void add(const SignedPerm& w, const Scalar& c);

  HeckeElt operator+(const HeckeElt& o) const;
  HeckeElt operator-(const HeckeElt& o) const;
  HeckeElt scaled(const Scalar& c) const;
  bool operator==(const HeckeElt& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  // Pairs (one-line notation, scalar string) sorted by length then by the
  // one-line word; the interchange form used by the CLI.
  std::vector<std::pair<std::string, std::string>> serialized() const;

 private:
  int n_;
  std::map<SignedPerm, Scalar> terms_;
};

// T_i * a and a * T_i via the quadratic relations T_i^2 = (q-1)T_i + q
// (i < n) and T_n^2 = (p-1)T_n + p.
HeckeElt genMulLeft(int i, const HeckeElt& a);
HeckeElt genMulRight(const HeckeElt& a, int i);

// Bilinear product; the left factor's basis words are expanded into reduced
// words, so no multiplication table is materialised.
HeckeElt multiply(const HeckeElt& a, const HeckeElt& b);

// One-dimensional representations: iota(T_i) = q, iota(T_n) = p;
// iota'(T_n) = -1; the sign representation sends T_w to (-1)^l(w).
Scalar indexRep(const HeckeElt& a);
Scalar indexRepPrime(const HeckeElt& a);
Scalar signRep(const HeckeElt& a);

// iota on the basis element T_{u_x} (a monomial p^w q^{nw - sum i_j}).
Scalar indexRepCosetRep(const SignVector& x);

// star1: T_w -> T_{w^{-1}} (coefficient conjugation is trivial on the real
// rational subfield).  star2: T_w -> (T_w)^{-1} with p^(1/2), q^(1/2)
// inverted in coefficients.  Both are antimultiplicative involutions.
HeckeElt star1(const HeckeElt& a);
HeckeElt star2(const HeckeElt& a);

// Depth-first enumeration of S_n through the chain of minimal coset
// representatives of S_{k-1} \ S_k.  Each leaf is reached through an
// incremental chain of left generator applications, so module actions can
// reuse prefix products: apply(i) must push s_i acting on the current state,
// pop() undoes the most recent push, and leaf() is called once per sigma
// (n! times in total).  Pushed generators act on the left of the current
// state, so at a leaf the state equals rho(T_sigma) v for the sigma whose
// reduced word is the pushed sequence reversed.
struct SymmetrizerWalk {
  std::function<void(int)> apply;
  std::function<void()> pop;
  std::function<void()> leaf;
};
void symmetrizerWalk(int n, const SymmetrizerWalk& walk);

// The n! reduced words visited by symmetrizerWalk, in visit order.
std::vector<std::vector<int>> symmetrizerWords(int n);

// Poincare polynomials P_A(q) = sum_{sigma in S_n} q^{l(sigma)} and
// P_B(p, q) = sum_{w in H_n} iota(T_w), in closed product form.
Scalar poincareA(int n);
Scalar poincareB(int n);

}  // namespace hsp

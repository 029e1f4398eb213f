#pragma once

#include "heckespheres/scalar.hpp"

namespace hsp {

// (a; q)_k = prod_{i=0}^{k-1} (1 - a q^i), in the symbolic q.
Scalar qPochhammer(const Scalar& a, int k);

// [n d]_q = (q^n; q^{-1})_d / (q; q)_d, a polynomial in q.
Scalar qBinomial(int n, int d);

struct QKrawParams {
  int degree = 0;    // n
  int argExp = 0;    // x, the argument is q^{-x}
  Scalar a;          // nonzero parameter
  int lattice = 0;   // N

  void validate() const;
};

// K_n(q^{-x}; a, N; q), the terminating 3phi2 with upper parameters
// q^{-n}, q^{-x}, -q^{n-N}/a and lower parameters q^{-N}, 0 at argument q.
// The q^{-N} lower parameter forces truncation after min(n, x) + 1 terms.
Scalar qKrawtchouk(const QKrawParams& params);

// Dual polynomials: R_n evaluated on the quadratic lattice equals the
// q-Krawtchouk with degree and argument exchanged.
Scalar dualQKrawtchouk(int x, int n, const Scalar& a, int N);

// Second order q-difference equation of the q-Krawtchouk polynomials,
//   (q^n - a q^{N-n}) K_n(q^{-x}) = a q^x (1-q^{N-x}) K_n(q^{-(x+1)})
//     + q^x (1-a) K_n(q^{-x}) + (1-q^x) K_n(q^{-(x-1)});
// at x = 0 and x = N the out-of-lattice neighbour carries a vanishing
// coefficient and is dropped.
bool checkDifferenceEquation(const QKrawParams& params);

// Contiguous relation in the lattice size N; requires n <= N-1 and x <= N-1
// so that the right hand side stays inside the smaller lattice.
bool checkContiguous(int n, int x, const Scalar& a, int N);

// Ordinary Krawtchouk polynomial K_f(d; 1/2, n) as a plain hypergeometric
// sum; the q -> 1, p = 1 target of the spherical function values.
Rational classicalKrawtchoukOracle(int f, int d, int n);

}  // namespace hsp

#include "heckespheres/qseries.hpp"

#include <algorithm>
#include <string>

namespace hsp {

Scalar qPochhammer(const Scalar& a, int k) {
  if (k < 0) throw DomainError("qPochhammer needs k >= 0");
  Scalar out(1);
  for (int i = 0; i < k; ++i) out *= Scalar(1) - a * Scalar::qPow2(2 * i);
  return out;
}

Scalar qBinomial(int n, int d) {
  if (d < 0 || d > n)
    throw DomainError("qBinomial out of range: n=" + std::to_string(n) +
                      " d=" + std::to_string(d));
  Scalar num(1), den(1);
  for (int i = 0; i < d; ++i) {
    num *= Scalar(1) - Scalar::qPow2(2 * (n - i));
    den *= Scalar(1) - Scalar::qPow2(2 * (i + 1));
  }
  return num / den;
}

void QKrawParams::validate() const {
  if (lattice < 0 || degree < 0 || argExp < 0 || degree > lattice || argExp > lattice)
    throw DomainError("q-Krawtchouk indices must satisfy 0 <= n, x <= N");
  if (a.isZero()) throw DomainError("q-Krawtchouk parameter a must be nonzero");
}

Scalar qKrawtchouk(const QKrawParams& params) {
  params.validate();
  const int n = params.degree;
  const int x = params.argExp;
  const int N = params.lattice;
  const Scalar qInvN = Scalar::qPow2(-2 * N);
  const Scalar upper1 = Scalar::qPow2(-2 * n);
  const Scalar upper2 = Scalar::qPow2(-2 * x);
  const Scalar upper3 = -Scalar::qPow2(2 * (n - N)) / params.a;

  // (q^{-n};q)_k and (q^{-x};q)_k both vanish past their index, so the sum
  // terminates well before (q^{-N};q)_k could reach zero.
  const int kMax = std::min(n, x);
  Scalar sum(0);
  Scalar term(1);
  for (int k = 0; /* exit below */; ++k) {
    sum += term;
    if (k == kMax) break;
    const Scalar qk = Scalar::qPow2(2 * k);
    Scalar factor = (Scalar(1) - upper1 * qk) * (Scalar(1) - upper2 * qk) *
                    (Scalar(1) - upper3 * qk) * Scalar::q();
    factor = factor / ((Scalar(1) - qInvN * qk) * (Scalar(1) - Scalar::qPow2(2 * (k + 1))));
    term *= factor;
  }
  return sum;
}

Scalar dualQKrawtchouk(int x, int n, const Scalar& a, int N) {
  QKrawParams params{x, n, a, N};
  return qKrawtchouk(params);
}

bool checkDifferenceEquation(const QKrawParams& params) {
  params.validate();
  const int n = params.degree;
  const int x = params.argExp;
  const int N = params.lattice;
  const Scalar& a = params.a;

  auto K = [&](int xs) {
    return qKrawtchouk(QKrawParams{n, xs, a, N});
  };

  const Scalar lhs = (Scalar::qPow2(2 * n) - a * Scalar::qPow2(2 * (N - n))) * K(x);
  // The middle coefficient is q^x(1-a); substituting the recurrence of the
  // spherical functions through the identification theorem fixes this sign
  // (the n = 0 case, where K is constant, pins it down as well).
  Scalar rhs = Scalar::qPow2(2 * x) * (Scalar(1) - a) * K(x);
  // boundary terms carry the vanishing coefficients (1-q^{N-x}) and (1-q^x)
  if (x < N)
    rhs += a * Scalar::qPow2(2 * x) * (Scalar(1) - Scalar::qPow2(2 * (N - x))) * K(x + 1);
  if (x > 0) rhs += (Scalar(1) - Scalar::qPow2(2 * x)) * K(x - 1);
  return lhs == rhs;
}

bool checkContiguous(int n, int x, const Scalar& a, int N) {
  if (n < 1 || n > N - 1 || x < 0 || x > N - 1)
    throw DomainError("contiguous relation needs 1 <= n <= N-1 and 0 <= x <= N-1");
  auto K = [&](int deg, int lattice) {
    return qKrawtchouk(QKrawParams{deg, x, a, lattice});
  };
  const Scalar lhs =
      (Scalar(1) - Scalar::qPow2(2 * N)) * (Scalar(1) + a * Scalar::qPow2(2 * (N - 2 * n))) *
      K(n, N);
  const Scalar rhs =
      (Scalar(1) - Scalar::qPow2(2 * (N - n))) *
          (Scalar(1) + a * Scalar::qPow2(2 * (N - n))) * K(n, N - 1) +
      Scalar::qPow2(2 * (N - n)) * (Scalar(1) - Scalar::qPow2(2 * n)) *
          (Scalar(1) + a * Scalar::qPow2(-2 * n)) * K(n - 1, N - 1);
  return lhs == rhs;
}

Rational classicalKrawtchoukOracle(int f, int d, int n) {
  if (f < 0 || d < 0 || f > n || d > n)
    throw DomainError("classical Krawtchouk indices out of range");
  Rational sum(0);
  Rational term(1);
  for (int k = 0; /* exit below */; ++k) {
    sum += term;
    if (k == std::min(f, d)) break;
    // ratio of consecutive terms of sum_k (-f)_k (-d)_k / ((-n)_k k!) 2^k
    term *= Rational(2 * (-f + k) * (-d + k));
    term /= Rational((-n + k) * (k + 1));
  }
  return sum;
}

}  // namespace hsp

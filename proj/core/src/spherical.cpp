#include "heckespheres/spherical.hpp"

#include <string>

namespace hsp {

namespace {

std::uint32_t trailingMinusBits(int n, int d) {
  // x = (1,...,1,-1,...,-1) with d trailing minus signs
  std::uint32_t bits = 0;
  for (int i = n - d + 1; i <= n; ++i) bits |= 1u << (i - 1);
  return bits;
}

}  // namespace

InvariantBasis buildInvariantBasis(int n) {
  if (n < 1) throw DomainError("buildInvariantBasis needs n >= 1");
  InvariantBasis out;
  out.n = n;
  out.w.reserve(n + 1);
  for (int d = 0; d <= n; ++d)
    out.w.push_back(
        symmetrize(VElt::basisVector(n, VBasis::V, trailingMinusBits(n, d))));
  return out;
}

bool representativeIndependenceHolds(const InvariantBasis& basis) {
  const int n = basis.n;
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    const int d = SignVector(n, x).weight();
    if (!equalAsVectors(symmetrize(VElt::basisVector(n, VBasis::V, x)), basis.w[d]))
      return false;
  }
  return true;
}

Scalar invariantNorm(int d, int n) {
  return Scalar::pPow2(-2 * d) * Scalar::qPow2(-d * (d - 1)) * qBinomial(n, d).inverse();
}

VElt actEFK(UqGen g, const InvariantBasis& basis, int d) {
  const int n = basis.n;
  if (d < 0 || d > n) throw DomainError("invariant basis index out of range");
  const VElt image = tAction(g, n).apply(basis.w[d]);
  const Scalar q = Scalar::q();
  const Scalar oneMinusQ = Scalar(1) - q;
  VElt expected(n, image.basis());
  switch (g) {
    case UqGen::K:
      expected = basis.w[d].scaled(Scalar::qPow2(2 * d - n));
      break;
    case UqGen::KInv:
      expected = basis.w[d].scaled(Scalar::qPow2(n - 2 * d));
      break;
    case UqGen::E: {
      if (d < n) {
        const Scalar c = Scalar::pHalf() * Scalar::qPow2(1 - n) * Scalar::qPow2(2 * d) *
                         (Scalar(1) - Scalar::qPow2(2 * (n - d))) / oneMinusQ;
        expected = basis.w[d + 1].scaled(c);
      }
      break;
    }
    case UqGen::F: {
      if (d > 0) {
        const Scalar c = Scalar::pHalf().inverse() * Scalar::qPow2(2 * (1 - d)) *
                         (Scalar(1) - Scalar::qPow2(2 * d)) / oneMinusQ;
        expected = basis.w[d - 1].scaled(c);
      }
      break;
    }
  }
  if (!equalAsVectors(image, expected))
    throw NotDiagonal("t(g) w_d does not match its closed form");
  return image;
}

Scalar phiEval(int f, int d, const InvariantBasis& basis, bool checkAllRepresentatives) {
  const int n = basis.n;
  if (f < 0 || f > n || d < 0 || d > n)
    throw DomainError("phiEval indices out of range");
  std::uint32_t representative = trailingMinusBits(n, f);
  const Scalar value = evalChar(SignVector(n, representative), basis.w[d]);
  if (checkAllRepresentatives) {
    for (std::uint32_t y = 0; y < (1u << n); ++y) {
      if (SignVector(n, y).weight() != f) continue;
      if (!(evalChar(SignVector(n, y), basis.w[d]) == value))
        throw NotDiagonal("phi_f(w_d) depends on the weight-f representative");
    }
  }
  return value;
}

SphericalTable phiViaRecurrence(int n) {
  if (n < 1) throw DomainError("phiViaRecurrence needs n >= 1");
  SphericalTable out;
  out.n = n;
  out.values.assign(n + 1, std::vector<Scalar>(n + 1));
  const Scalar p = Scalar::p();
  for (int f = 0; f <= n; ++f) {
    const Scalar eigen =
        p * (Scalar(1) - Scalar::qPow2(2 * (n - f))) - (Scalar(1) - Scalar::qPow2(2 * f));
    std::vector<Scalar>& row = out.values[f];
    row[0] = Scalar(1);
    for (int d = 0; d < n; ++d) {
      // solve for phi(w_{d+1}); the (1-q^d) terms vanish at d = 0
      const Scalar oneMinusQd = Scalar(1) - Scalar::qPow2(2 * d);
      Scalar rhs = eigen * row[d] - oneMinusQd * (p - Scalar(1)) * row[d];
      if (d > 0) rhs -= oneMinusQd * row[d - 1];
      const Scalar coeff = p * Scalar::qPow2(2 * d) * (Scalar(1) - Scalar::qPow2(2 * (n - d)));
      row[d + 1] = rhs / coeff;
    }
  }
  return out;
}

SphericalTable phiViaCharacters(const InvariantBasis& basis) {
  SphericalTable out;
  out.n = basis.n;
  out.values.assign(basis.n + 1, std::vector<Scalar>(basis.n + 1));
  for (int f = 0; f <= basis.n; ++f)
    for (int d = 0; d <= basis.n; ++d) out.values[f][d] = phiEval(f, d, basis);
  return out;
}

DualElt phiAsDual(int f, int n) {
  if (f < 0 || f > n) throw DomainError("phiAsDual index out of range");
  const Scalar hf = weightHf(f, n);
  DualElt out(n);
  for (std::uint32_t y = 0; y < (1u << n); ++y) {
    const SignVector yv(n, y);
    if (yv.weight() != f) continue;
    out.add(y, hf * weightH(yv).inverse());
  }
  return out;
}

DualElt phiViaSymmetrization(int f, int n) {
  if (f < 0 || f > n) throw DomainError("phiViaSymmetrization index out of range");
  std::vector<DualElt> stack;
  stack.push_back(DualElt::character(SignVector(n, trailingMinusBits(n, f))));
  DualElt sum(n);
  SymmetrizerWalk walk{
      [&](int i) { stack.push_back(rhoStarGen(i, stack.back())); },
      [&]() { stack.pop_back(); },
      [&]() { sum = sum + stack.back(); },
  };
  symmetrizerWalk(n, walk);
  return sum.scaled(poincareA(n).inverse());
}

Scalar weightHf(int f, int n) {
  if (f < 0 || f > n) throw DomainError("weightHf index out of range");
  const Scalar p = Scalar::p();
  const Scalar numer = qPochhammer(-p * Scalar::qPow2(-2 * f), n + 1);
  const Scalar denom = p * Scalar::qPow2(2 * (n - f)) + Scalar::qPow2(2 * f);
  return qBinomial(n, f).inverse() * (numer / denom) * Scalar::qPow2(f * (f + 1)) *
         Scalar::pPow2(-2 * f);
}

bool IdentifyReport::pass() const {
  for (const auto& row : agrees)
    for (bool cell : row)
      if (!cell) return false;
  return !agrees.empty();
}

IdentifyReport identifyKrawtchouk(int n) {
  IdentifyReport report;
  report.n = n;
  const InvariantBasis basis = buildInvariantBasis(n);
  const SphericalTable byChar = phiViaCharacters(basis);
  const SphericalTable byRec = phiViaRecurrence(n);
  report.agrees.assign(n + 1, std::vector<bool>(n + 1, false));
  for (int f = 0; f <= n; ++f) {
    for (int d = 0; d <= n; ++d) {
      const Scalar k = qKrawtchouk(QKrawParams{f, d, Scalar::p(), n});
      report.agrees[f][d] =
          byChar.values[f][d] == byRec.values[f][d] && byChar.values[f][d] == k;
    }
  }
  return report;
}

OrthogonalityReport orthogonalityHf(int n) {
  OrthogonalityReport report;
  report.n = n;
  const InvariantBasis basis = buildInvariantBasis(n);
  const SphericalTable table = phiViaCharacters(basis);

  auto weightD = [&](int d) {
    return Scalar::pPow2(2 * d) * Scalar::qPow2(d * (d - 1)) * qBinomial(n, d);
  };

  report.orthogonality = true;
  for (int g = 0; g <= n; ++g) {
    for (int f = 0; f <= n; ++f) {
      Scalar sum;
      for (int d = 0; d <= n; ++d)
        sum += weightD(d) * table.values[g][d] * table.values[f][d];
      const Scalar expected = g == f ? weightHf(f, n) : Scalar();
      if (!(sum == expected)) report.orthogonality = false;
    }
  }

  report.dualOrthogonality = true;
  for (int d = 0; d <= n; ++d) {
    for (int g = 0; g <= n; ++g) {
      Scalar sum;
      for (int f = 0; f <= n; ++f)
        sum += weightHf(f, n).inverse() * table.values[f][g] * table.values[f][d];
      const Scalar expected = d == g ? weightD(d).inverse() : Scalar();
      if (!(sum == expected)) report.dualOrthogonality = false;
    }
  }

  report.hfMatchesCharacterWeights = true;
  for (int f = 0; f <= n; ++f) {
    Scalar sum;
    for (std::uint32_t y = 0; y < (1u << n); ++y) {
      const SignVector yv(n, y);
      if (yv.weight() == f) sum += weightH(yv).inverse();
    }
    if (!(sum == weightHf(f, n).inverse())) report.hfMatchesCharacterWeights = false;
  }

  report.h0ClosedForm = weightHf(0, n) == qPochhammer(-Scalar::p(), n);
  report.hnClosedForm = weightHf(n, n) == qPochhammer(-Scalar::p().inverse(), n);
  return report;
}

EigenOperatorReport eigenOperatorCheck(int n) {
  EigenOperatorReport report;
  report.n = n;

  const Scalar ph = Scalar::pHalf();
  const Scalar qh = Scalar::qHalf();
  const Scalar slope = (ph - ph.inverse()) / (qh - qh.inverse());
  const ActionMatrix lambda =
      tAction(UqGen::E, n) + tActionWord(starGen(UqGen::E), n) +
      (tAction(UqGen::K, n) - ActionMatrix::identityMatrix(n)).scaled(slope);

  report.eigenvectors = true;
  for (int f = 0; f <= n; ++f) {
    const DualElt phi = phiAsDual(f, n);
    // t^*(X) chi = b^{-1}(t(X) b(chi))
    const DualElt image = inverseFourier(lambda.apply(fourier(phi)));
    const Scalar eigen = (ph * Scalar::qPow2(n - 2 * f) - ph.inverse() * Scalar::qPow2(2 * f - n) +
                          ph.inverse() - ph) /
                         (qh - qh.inverse());
    if (!(image == phi.scaled(eigen))) report.eigenvectors = false;
  }

  report.convolution = true;
  for (int f = 0; f <= n; ++f) {
    for (int g = 0; g <= n; ++g) {
      const DualElt conv = convolve(phiAsDual(f, n), phiAsDual(g, n));
      const DualElt expected =
          f == g ? phiAsDual(f, n).scaled(weightHf(f, n)) : DualElt(n);
      if (!(conv == expected)) report.convolution = false;
    }
  }
  return report;
}

std::vector<Scalar> productCoeffs(const InvariantBasis& basis, int k, int d) {
  const int n = basis.n;
  if (k < 0 || k > n || d < 0 || d > n)
    throw DomainError("productCoeffs indices out of range");
  const VElt wkwd = product(basis.w[k], basis.w[d]);
  std::vector<Scalar> coeffs(n + 1);
  for (int l = 0; l <= n; ++l)
    coeffs[l] = tau(product(wkwd, basis.w[l])) / invariantNorm(l, n);
  return coeffs;
}

bool recurrenceProofIdentity(const InvariantBasis& basis, int d) {
  const int n = basis.n;
  if (d < 0 || d > n) throw DomainError("recurrenceProofIdentity index out of range");
  VElt w(n, VBasis::U);
  for (int i = 1; i <= n; ++i) w.coord(1u << (i - 1)) = Scalar(1);
  const VElt v = VElt::basisVector(n, VBasis::V, trailingMinusBits(n, d));
  const VElt lhs = symmetrize(product(w, v)).scaled(Scalar(1) - Scalar::q());

  const Scalar oneMinusQd = Scalar(1) - Scalar::qPow2(2 * d);
  VElt rhs(n, VBasis::U);
  if (d < n)
    rhs = rhs + basis.w[d + 1].scaled(Scalar::p() * Scalar::qPow2(2 * d) *
                                      (Scalar(1) - Scalar::qPow2(2 * (n - d))));
  rhs = rhs + basis.w[d].scaled(oneMinusQd * (Scalar::p() - Scalar(1)));
  if (d > 0) rhs = rhs + basis.w[d - 1].scaled(oneMinusQd);
  return equalAsVectors(lhs, rhs);
}

bool lemmaProductCheck(int i, std::uint32_t zPrefixBits, int n) {
  if (i < 1 || i > n) throw DomainError("lemmaProductCheck index out of range");
  if (zPrefixBits >= (1u << (i - 1))) throw DomainError("prefix wider than i-1");

  auto withTail = [&](int plusAt) {
    // z on 1..i-1, then -1 everywhere from i to n except +1 at plusAt (0: none)
    std::uint32_t bits = zPrefixBits;
    for (int k = i; k <= n; ++k)
      if (k != plusAt) bits |= 1u << (k - 1);
    return bits;
  };

  const VElt left = VElt::basisVector(n, VBasis::U, withTail(i));
  const VElt xi = VElt::basisVector(n, VBasis::U, 1u << (i - 1));
  const VElt lhs = product(left, product(xi, xi));

  const Scalar p = Scalar::p();
  const Scalar q = Scalar::q();
  VElt rhs = VElt::basisVector(n, VBasis::U, withTail(0))
                 .scaled(Scalar::qPow2(2 * (n - i)) * (p - Scalar(1)));
  for (int j = i + 1; j <= n; ++j)
    rhs = rhs + VElt::basisVector(n, VBasis::U, withTail(j))
                    .scaled(p * Scalar::qPow2(2 * (n - i - 1)) * (q - Scalar(1)));
  rhs = rhs + VElt::basisVector(n, VBasis::U, withTail(i))
                  .scaled(p * Scalar::qPow2(2 * (n - i)));
  return equalAsVectors(lhs, rhs);
}

std::pair<Rational, Rational> lieTypePreset(LieType type, const Rational& q0) {
  if (q0 <= 0) throw DomainError("q0 must be positive");
  switch (type) {
    case LieType::B:
    case LieType::C:
      return {q0, q0};
    case LieType::TwistedD:
      return {q0 * q0, q0};
    case LieType::TwistedAOdd:
      return {q0, q0 * q0};
    case LieType::TwistedAEven:
      return {q0 * q0 * q0, q0 * q0};
  }
  throw DomainError("unknown Lie type");
}

}  // namespace hsp

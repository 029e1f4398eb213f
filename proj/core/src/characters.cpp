#include "heckespheres/characters.hpp"

namespace hsp {

Scalar charOnGenerator(const SignVector& y, int j) {
  const int n = y.rank();
  if (j < 1 || j > n) throw DomainError("generator index out of range");
  const int m = y.mJ(j);
  if (y.sign(j) == 1) return Scalar::p() * Scalar::qPow2(2 * m);
  return -Scalar::qPow2(2 * (n - j - m));
}

Scalar evalCharBasis(const SignVector& y, std::uint32_t xBits) {
  const SignVector x(y.rank(), xBits);
  Scalar out(1);
  for (int j : x.minusPositions()) out *= charOnGenerator(y, j);
  return out;
}

Scalar evalChar(const SignVector& y, const VElt& v) {
  if (y.rank() != v.rank()) throw RankMismatch("SignVector/VElt ranks differ");
  const VElt u = v.inBasis(VBasis::U);
  Scalar out;
  for (std::uint32_t x = 0; x < u.dim(); ++x)
    if (!u.coord(x).isZero()) out += u.coord(x) * evalCharBasis(y, x);
  return out;
}

Scalar weightH(const SignVector& y) {
  const int n = y.rank();
  Scalar out(1);
  for (int j = 1; j <= n; ++j) {
    const Scalar factor =
        Scalar::p() * Scalar::qPow2(2 * (2 * y.mJ(j) + j - n));
    out *= Scalar(1) + (y.sign(j) == 1 ? factor : factor.inverse());
  }
  return out;
}

DualElt DualElt::character(const SignVector& y, const Scalar& c) {
  DualElt out(y.rank());
  out.add(y.bits(), c);
  return out;
}

Scalar DualElt::coefficient(std::uint32_t yBits) const {
  auto it = coeffs_.find(yBits);
  return it == coeffs_.end() ? Scalar() : it->second;
}

void DualElt::add(std::uint32_t yBits, const Scalar& c) {
  if (c.isZero()) return;
  if (yBits >= (1u << n_)) throw DomainError("character index out of range");
  auto it = coeffs_.find(yBits);
  if (it == coeffs_.end()) {
    coeffs_.emplace(yBits, c);
  } else {
    it->second += c;
    if (it->second.isZero()) coeffs_.erase(it);
  }
}

DualElt DualElt::operator+(const DualElt& o) const {
  if (n_ != o.n_) throw RankMismatch("DualElt ranks differ");
  DualElt out = *this;
  for (const auto& [y, c] : o.coeffs_) out.add(y, c);
  return out;
}

DualElt DualElt::operator-(const DualElt& o) const {
  if (n_ != o.n_) throw RankMismatch("DualElt ranks differ");
  DualElt out = *this;
  for (const auto& [y, c] : o.coeffs_) out.add(y, -c);
  return out;
}

DualElt DualElt::scaled(const Scalar& c) const {
  DualElt out(n_);
  if (c.isZero()) return out;
  for (const auto& [y, coeff] : coeffs_) out.coeffs_.emplace(y, coeff * c);
  return out;
}

Scalar DualElt::operator()(const VElt& v) const {
  if (n_ != v.rank()) throw RankMismatch("DualElt/VElt ranks differ");
  Scalar out;
  for (const auto& [y, c] : coeffs_) out += c * evalChar(SignVector(n_, y), v);
  return out;
}

VElt fourier(const DualElt& d) {
  const int n = d.rank();
  VElt out(n, VBasis::UHat);
  for (const auto& [y, c] : d.coeffs()) {
    const SignVector yv(n, y);
    for (std::uint32_t x = 0; x < out.dim(); ++x) {
      // chi_y(uhat(x)) = iota(T_{u_x})^{-1/2} chi_y(u(x))
      out.coord(x) += c * evalCharBasis(yv, x) * iotaUSqrt(n, x).inverse();
    }
  }
  return out;
}

DualElt inverseFourier(const VElt& v) {
  const int n = v.rank();
  const VElt in = v.inBasis(VBasis::UHat);
  DualElt out(n);
  // dual orthogonality: coefficients are h_y^{-1} sum_x e_x chi_y(uhat(x))
  for (std::uint32_t y = 0; y < in.dim(); ++y) {
    const SignVector yv(n, y);
    Scalar acc;
    for (std::uint32_t x = 0; x < in.dim(); ++x) {
      if (in.coord(x).isZero()) continue;
      acc += in.coord(x) * evalCharBasis(yv, x) * iotaUSqrt(n, x).inverse();
    }
    out.add(y, acc * weightH(yv).inverse());
  }
  return out;
}

VElt idempotentXi(const SignVector& y) { return fourier(DualElt::character(y)); }

DualElt convolve(const DualElt& a, const DualElt& b) {
  if (a.rank() != b.rank()) throw RankMismatch("DualElt ranks differ");
  return inverseFourier(product(fourier(a), fourier(b)));
}

DualElt rhoStarGen(int i, const DualElt& d) {
  const int n = d.rank();
  if (i < 1 || i > n) throw DomainError("generator index out of range");
  DualElt out(n);
  const Scalar p = Scalar::p();
  const Scalar q = Scalar::q();
  for (const auto& [yBits, c] : d.coeffs()) {
    const SignVector y(n, yBits);
    if (i == n) {
      out.add(yBits, y.sign(n) == 1 ? c * p : -c);
      continue;
    }
    if (y.sign(i) == y.sign(i + 1)) {
      out.add(yBits, c * q);
      continue;
    }
    const int m = y.mJ(i);
    const std::uint32_t swappedBits = y.swapped(i).bits();
    const Scalar cross = p * Scalar::qPow2(2 * m) + Scalar::qPow2(2 * (n - i - m));
    if (y.sign(i) == 1) {
      // y_i = 1, y_{i+1} = -1
      const Scalar denom = p * Scalar::qPow2(2 * m) + Scalar::qPow2(2 * (n - i - 1 - m));
      out.add(yBits, c * p * Scalar::qPow2(2 * m) * (q - Scalar(1)) / denom);
      out.add(swappedBits, c * cross / denom);
    } else {
      // y_i = -1, y_{i+1} = 1
      const Scalar denom = p * Scalar::qPow2(2 * (m - 1)) + Scalar::qPow2(2 * (n - i - m));
      out.add(yBits, c * Scalar::qPow2(2 * (n - i - m)) * (q - Scalar(1)) / denom);
      out.add(swappedBits, c * cross / denom);
    }
  }
  return out;
}

DualElt rhoStar0Gen(int i, const DualElt& d) {
  const int n = d.rank();
  if (i < 1 || i > n) throw DomainError("generator index out of range");
  // rho_0^*(T_i) = rho^*(T_i^{-1}) with T_i^{-1} = c^{-1} T_i + (c^{-1} - 1)
  const Scalar cInv = (i < n ? Scalar::q() : Scalar::p()).inverse();
  return rhoStarGen(i, d).scaled(cInv) + d.scaled(cInv - Scalar(1));
}

DualElt rhoStarWord(const std::vector<int>& word, const DualElt& d) {
  DualElt out = d;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = rhoStarGen(*it, out);
  return out;
}

Scalar rhoStarDiagonalOnTx(const SignVector& x, const SignVector& y) {
  if (x.rank() != y.rank()) throw RankMismatch("SignVector ranks differ");
  const DualElt image =
      rhoStarWord(reducedWord(SignedPerm::fromSignVector(x)), DualElt::character(y));
  for (const auto& [z, c] : image.coeffs())
    if (z != y.bits())
      throw NotDiagonal("rho^*(T_x) produced an off-diagonal character term");
  return image.coefficient(y.bits());
}

}  // namespace hsp

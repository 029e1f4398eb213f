#include "heckespheres/vmodule.hpp"

#include <bit>
#include <cassert>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

namespace hsp {

namespace {

void checkRank(int n) {
  if (n < 1 || n > 20) throw DomainError("V_n rank out of range");
}

std::uint32_t dimOf(int n) { return 1u << n; }

}  // namespace

VElt::VElt(int n, VBasis basis) : n_(n), basis_(basis) {
  checkRank(n);
  coords_.resize(dimOf(n));
}

VElt VElt::basisVector(int n, VBasis basis, std::uint32_t xBits) {
  VElt out(n, basis);
  if (xBits >= out.dim()) throw DomainError("basis index out of range");
  out.coords_[xBits] = Scalar(1);
  return out;
}

Scalar iotaU(int n, std::uint32_t xBits) {
  return indexRepCosetRep(SignVector(n, xBits));
}

Scalar iotaUSqrt(int n, std::uint32_t xBits) {
  return iotaU(n, xBits).sqrtMonomial();
}

VElt VElt::inBasis(VBasis target) const {
  if (target == basis_) return *this;
  VElt out(n_, target);
  for (std::uint32_t x = 0; x < dim(); ++x) {
    if (coords_[x].isZero()) continue;
    // scale to the u basis, then to the target
    Scalar c = coords_[x];
    if (basis_ == VBasis::UHat) c *= iotaUSqrt(n_, x).inverse();
    if (basis_ == VBasis::V) c *= iotaU(n_, x).inverse();
    if (target == VBasis::UHat) c *= iotaUSqrt(n_, x);
    if (target == VBasis::V) c *= iotaU(n_, x);
    out.coords_[x] = c;
  }
  return out;
}

VElt VElt::operator+(const VElt& o) const {
  if (n_ != o.n_) throw RankMismatch("VElt ranks differ");
  const VElt rhs = o.inBasis(basis_);
  VElt out = *this;
  for (std::uint32_t x = 0; x < dim(); ++x) out.coords_[x] += rhs.coords_[x];
  return out;
}

VElt VElt::operator-(const VElt& o) const { return *this + o.scaled(Scalar(-1)); }

VElt VElt::scaled(const Scalar& c) const {
  VElt out(n_, basis_);
  if (c.isZero()) return out;
  for (std::uint32_t x = 0; x < dim(); ++x)
    if (!coords_[x].isZero()) out.coords_[x] = coords_[x] * c;
  return out;
}

bool VElt::isZero() const {
  for (const Scalar& c : coords_)
    if (!c.isZero()) return false;
  return true;
}

bool equalAsVectors(const VElt& a, const VElt& b) {
  if (a.rank() != b.rank()) return false;
  const VElt bb = b.inBasis(a.basis());
  for (std::uint32_t x = 0; x < a.dim(); ++x)
    if (!(a.coord(x) == bb.coord(x))) return false;
  return true;
}

std::vector<std::string> VElt::coordStrings() const {
  std::vector<std::string> out;
  out.reserve(coords_.size());
  for (const Scalar& c : coords_) out.push_back(c.str());
  return out;
}

VElt actGen(int i, const VElt& v) {
  const int n = v.rank();
  if (i < 1 || i > n) throw DomainError("generator index out of range");
  const VElt in = v.inBasis(VBasis::U);
  VElt out(n, VBasis::U);
  const Scalar q = Scalar::q();
  const Scalar p = Scalar::p();
  for (std::uint32_t x = 0; x < in.dim(); ++x) {
    const Scalar& c = in.coord(x);
    if (c.isZero()) continue;
    if (i == n) {
      const std::uint32_t flipped = x ^ (1u << (n - 1));
      if ((x >> (n - 1)) & 1u) {
        // x_n = -1: (p-1) u(x) + p u(x x^n)
        out.coord(x) += c * (p - Scalar(1));
        out.coord(flipped) += c * p;
      } else {
        out.coord(flipped) += c;
      }
    } else {
      const std::uint32_t bi = (x >> (i - 1)) & 1u;
      const std::uint32_t bj = (x >> i) & 1u;
      const std::uint32_t swapped = (x & ~((1u << (i - 1)) | (1u << i))) |
                                    (bj << (i - 1)) | (bi << i);
      if (bi == bj) {
        out.coord(x) += c * q;
      } else if (bi == 0) {
        // x_i = 1, x_{i+1} = -1: u(x^{s_i})
        out.coord(swapped) += c;
      } else {
        // x_i = -1, x_{i+1} = 1: (q-1) u(x) + q u(x^{s_i})
        out.coord(x) += c * (q - Scalar(1));
        out.coord(swapped) += c * q;
      }
    }
  }
  return out.inBasis(v.basis());
}

VElt actWord(const std::vector<int>& word, const VElt& v) {
  VElt out = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = actGen(*it, out);
  return out;
}

VElt actHecke(const HeckeElt& a, const VElt& v) {
  if (a.rank() != v.rank()) throw RankMismatch("HeckeElt/VElt ranks differ");
  VElt out(v.rank(), v.basis());
  for (const auto& [w, c] : a.terms())
    out = out + actWord(reducedWord(w), v).scaled(c);
  return out;
}

VElt piMap(const HeckeElt& a) {
  const int n = a.rank();
  VElt out(n, VBasis::U);
  for (const auto& [w, c] : a.terms()) {
    // w = u_x sigma with x the sign part; pi(T_w) = q^{l(sigma)} u(x)
    const SignVector x = w.signPart();
    const CosetDecomposition dec = cosetRep(x);
    const SignedPerm sigma = dec.u.inverse() * w;
    assert(sigma.isUnsigned());
    out.coord(x.bits()) += c * Scalar::qPow2(2 * length(sigma));
  }
  return out;
}

namespace {

// Expansions u(x) u(x^j) used by the structural product.  For x_j = +1 the
// product is the basis vector u(x + j); for x_j = -1 the square relation
// recurses into strictly larger generator indices, so a table of all
// (x, j) pairs for fixed n is filled from j = n downwards.
class GenProductTable {
 public:
  explicit GenProductTable(int n) : n_(n), table_(dimOf(n) * n) {
    const Scalar q = Scalar::q();
    const Scalar p = Scalar::p();
    for (std::uint32_t x = 0; x < dimOf(n); ++x) {
      // runningSum accumulates sum_{k > j} u(x) u(x^k) while j descends
      std::vector<Scalar> runningSum(dimOf(n));
      for (int j = n; j >= 1; --j) {
        std::vector<Scalar> cur(dimOf(n));
        const std::uint32_t bit = 1u << (j - 1);
        if ((x & bit) == 0) {
          cur[x | bit] = Scalar(1);
        } else {
          // u(x) u(x^j) = (q-1) sum_{k>j} u(x) u(x^k)
          //             + (p-1) u(x) + p q^{n-j} u(x - j)
          for (std::uint32_t z = 0; z < dimOf(n); ++z)
            if (!runningSum[z].isZero()) cur[z] = (q - Scalar(1)) * runningSum[z];
          cur[x] += p - Scalar(1);
          cur[x ^ bit] += p * Scalar::qPow2(2 * (n - j));
        }
        for (std::uint32_t z = 0; z < dimOf(n); ++z)
          if (!cur[z].isZero()) runningSum[z] += cur[z];
        table_[(x * n_) + (j - 1)] = std::move(cur);
      }
    }
  }

  const std::vector<Scalar>& get(std::uint32_t x, int j) const {
    return table_[(x * n_) + (j - 1)];
  }

 private:
  int n_;
  std::vector<std::vector<Scalar>> table_;
};

const GenProductTable& genProductTable(int n) {
  static std::mutex mutex;
  static std::unordered_map<int, std::unique_ptr<GenProductTable>> tables;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = tables[n];
  if (!slot) slot = std::make_unique<GenProductTable>(n);
  return *slot;
}

}  // namespace

VElt product(const VElt& a, const VElt& b) {
  if (a.rank() != b.rank()) throw RankMismatch("VElt ranks differ");
  const int n = a.rank();
  const GenProductTable& table = genProductTable(n);
  const VElt lhs = a.inBasis(VBasis::U);
  const VElt rhs = b.inBasis(VBasis::U);
  VElt out(n, VBasis::U);
  for (std::uint32_t y = 0; y < rhs.dim(); ++y) {
    const Scalar& cy = rhs.coord(y);
    if (cy.isZero()) continue;
    // u(y) = prod over the minus positions of y; fold them into lhs
    std::vector<Scalar> acc(lhs.coords());
    for (int j = 1; j <= n; ++j) {
      if (((y >> (j - 1)) & 1u) == 0) continue;
      std::vector<Scalar> next(acc.size());
      for (std::uint32_t x = 0; x < acc.size(); ++x) {
        if (acc[x].isZero()) continue;
        const std::vector<Scalar>& row = table.get(x, j);
        for (std::uint32_t z = 0; z < next.size(); ++z)
          if (!row[z].isZero()) next[z] += acc[x] * row[z];
      }
      acc = std::move(next);
    }
    for (std::uint32_t z = 0; z < acc.size(); ++z)
      if (!acc[z].isZero()) out.coord(z) += cy * acc[z];
  }
  return out.inBasis(a.basis());
}

VElt productViaHecke(std::uint32_t xBits, std::uint32_t yBits, int n) {
  checkRank(n);
  const SignVector x(n, xBits), y(n, yBits);
  const HeckeElt tx = HeckeElt::basis(SignedPerm::fromSignVector(x));
  const HeckeElt ty = HeckeElt::basis(SignedPerm::fromSignVector(y));
  const int lenSigmas = cosetRep(x).lenSigma + cosetRep(y).lenSigma;
  return piMap(multiply(tx, ty)).scaled(Scalar::qPow2(-2 * lenSigmas));
}

Scalar tau(const VElt& v) { return v.inBasis(VBasis::U).coord(0); }

Scalar bilinearB(const VElt& a, const VElt& b) { return tau(product(a, b)); }

VElt symmetrize(const VElt& v) {
  const int n = v.rank();
  std::vector<VElt> stack;
  stack.push_back(v.inBasis(VBasis::U));
  VElt sum(n, VBasis::U);
  SymmetrizerWalk walk{
      [&](int i) { stack.push_back(actGen(i, stack.back())); },
      [&]() { stack.pop_back(); },
      [&]() { sum = sum + stack.back(); },
  };
  symmetrizerWalk(n, walk);
  return sum.scaled(poincareA(n).inverse()).inBasis(v.basis());
}

}  // namespace hsp

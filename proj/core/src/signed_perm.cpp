#include "heckespheres/signed_perm.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace hsp {

SignVector::SignVector(int n, std::uint32_t bits) : n_(n), bits_(bits) {
  if (n < 0 || n > 31) throw DomainError("SignVector rank out of range");
  if (n < 31 && bits >= (1u << n)) throw DomainError("SignVector bits exceed rank");
}

int SignVector::weight() const { return std::popcount(bits_); }

std::vector<int> SignVector::minusPositions() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i)
    if (sign(i) == -1) out.push_back(i);
  return out;
}

int SignVector::mJ(int j) const {
  int count = 0;
  for (int p = j + 1; p <= n_; ++p)
    if (sign(p) == 1) ++count;
  return count;
}

SignVector SignVector::operator*(const SignVector& o) const {
  if (n_ != o.n_) throw RankMismatch("SignVector ranks differ");
  return SignVector(n_, bits_ ^ o.bits_);
}

SignVector SignVector::conjugatedBy(const SignedPerm& sigma) const {
  if (sigma.rank() != n_) throw RankMismatch("SignVector/SignedPerm ranks differ");
  if (!sigma.isUnsigned()) throw DomainError("conjugation requires an unsigned permutation");
  std::uint32_t out = 0;
  // (x^sigma)_i = x_{sigma^{-1}(i)}  <=>  bit sigma(i) of x^sigma = bit i of x
  for (int i = 1; i <= n_; ++i)
    if (sign(i) == -1) out |= 1u << (sigma.image(i) - 1);
  return SignVector(n_, out);
}

SignVector SignVector::swapped(int i) const {
  if (i < 1 || i >= n_) throw DomainError("swap index out of range");
  const std::uint32_t bi = (bits_ >> (i - 1)) & 1u;
  const std::uint32_t bj = (bits_ >> i) & 1u;
  std::uint32_t out = bits_ & ~((1u << (i - 1)) | (1u << i));
  out |= bj << (i - 1);
  out |= bi << i;
  return SignVector(n_, out);
}

std::string SignVector::str() const {
  std::string out;
  for (int i = 1; i <= n_; ++i) out.push_back(sign(i) == 1 ? '+' : '-');
  return out;
}

SignVector SignVector::parse(const std::string& text) {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '-')
      bits |= 1u << i;
    else if (text[i] != '+')
      throw ParseError("SignVector characters must be '+' or '-'");
  }
  return SignVector(static_cast<int>(text.size()), bits);
}

SignedPerm::SignedPerm(std::vector<int> images) : img_(std::move(images)) {
  const int n = rank();
  std::vector<bool> seen(n, false);
  for (int v : img_) {
    const int a = std::abs(v);
    if (a < 1 || a > n || seen[a - 1])
      throw DomainError("not a signed permutation");
    seen[a - 1] = true;
  }
}

SignedPerm SignedPerm::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  return SignedPerm(std::move(img));
}

SignedPerm SignedPerm::generator(int i, int n) {
  if (i < 1 || i > n) throw DomainError("generator index out of range");
  SignedPerm s = identity(n);
  if (i < n)
    std::swap(s.img_[i - 1], s.img_[i]);
  else
    s.img_[n - 1] = -n;
  return s;
}

SignedPerm SignedPerm::fromSignVector(const SignVector& x) {
  SignedPerm s = identity(x.rank());
  for (int i = 1; i <= x.rank(); ++i)
    if (x.sign(i) == -1) s.img_[i - 1] = -i;
  return s;
}

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
  if (rank() != o.rank()) throw RankMismatch("SignedPerm ranks differ");
  std::vector<int> img(rank());
  for (int i = 1; i <= rank(); ++i) {
    const int v = o.image(i);
    const int w = image(std::abs(v));
    img[i - 1] = v < 0 ? -w : w;
  }
  return SignedPerm(std::move(img));
}

SignedPerm SignedPerm::inverse() const {
  std::vector<int> img(rank());
  for (int i = 1; i <= rank(); ++i) {
    const int v = image(i);
    img[std::abs(v) - 1] = v < 0 ? -i : i;
  }
  return SignedPerm(std::move(img));
}

bool SignedPerm::isIdentity() const {
  for (int i = 1; i <= rank(); ++i)
    if (image(i) != i) return false;
  return true;
}

bool SignedPerm::isUnsigned() const {
  return std::all_of(img_.begin(), img_.end(), [](int v) { return v > 0; });
}

SignVector SignedPerm::signPart() const {
  std::uint32_t bits = 0;
  for (int i = 1; i <= rank(); ++i)
    if (image(i) < 0) bits |= 1u << (std::abs(image(i)) - 1);
  return SignVector(rank(), bits);
}

SignedPerm SignedPerm::permPart() const {
  std::vector<int> img(rank());
  for (int i = 1; i <= rank(); ++i) img[i - 1] = std::abs(image(i));
  return SignedPerm(std::move(img));
}

std::string SignedPerm::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 1; i <= rank(); ++i) {
    if (i > 1) os << ", ";
    os << image(i);
  }
  os << ']';
  return os.str();
}

namespace {

// A root a*e_c + b*e_d with c < d (b may be 0).  Negative iff the
// coefficient of the smallest-index coordinate is negative.
struct Root {
  int c, a;  // coefficient a on e_c
  int d, b;  // coefficient b on e_d; d = 0 when absent
};

Root applyToRoot(const SignedPerm& w, const Root& r) {
  Root out{};
  int c = w.image(r.c);
  out.c = std::abs(c);
  out.a = c < 0 ? -r.a : r.a;
  if (r.d != 0) {
    int d = w.image(r.d);
    out.d = std::abs(d);
    out.b = d < 0 ? -r.b : r.b;
    if (out.d < out.c) {
      std::swap(out.c, out.d);
      std::swap(out.a, out.b);
    }
  }
  return out;
}

bool isNegativeRoot(const Root& r) { return r.a < 0; }

}  // namespace

int length(const SignedPerm& w) {
  const int n = w.rank();
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    if (isNegativeRoot(applyToRoot(w, Root{i, 1, 0, 0}))) ++count;
    for (int j = i + 1; j <= n; ++j) {
      if (isNegativeRoot(applyToRoot(w, Root{i, 1, j, -1}))) ++count;
      if (isNegativeRoot(applyToRoot(w, Root{i, 1, j, 1}))) ++count;
    }
  }
  return count;
}

bool leftAscent(const SignedPerm& w, int i) {
  // l(s_i w) > l(w)  <=>  w^{-1}(alpha_i) is positive
  const int n = w.rank();
  if (i < 1 || i > n) throw DomainError("generator index out of range");
  const SignedPerm winv = w.inverse();
  const Root alpha = i < n ? Root{i, 1, i + 1, -1} : Root{n, 1, 0, 0};
  return !isNegativeRoot(applyToRoot(winv, alpha));
}

bool rightAscent(const SignedPerm& w, int i) {
  // l(w s_i) > l(w)  <=>  w(alpha_i) is positive
  const int n = w.rank();
  if (i < 1 || i > n) throw DomainError("generator index out of range");
  const Root alpha = i < n ? Root{i, 1, i + 1, -1} : Root{n, 1, 0, 0};
  return !isNegativeRoot(applyToRoot(w, alpha));
}

std::vector<int> reducedWord(SignedPerm w) {
  const int n = w.rank();
  std::vector<int> word;
  while (!w.isIdentity()) {
    int descent = 0;
    for (int i = 1; i <= n; ++i) {
      if (!leftAscent(w, i)) {
        descent = i;
        break;
      }
    }
    assert(descent != 0);
    word.push_back(descent);
    w = SignedPerm::generator(descent, n) * w;
  }
  return word;
}

CosetDecomposition cosetRep(const SignVector& x) {
  const int n = x.rank();
  // Greedy assignment: sigma(i) is the largest unused value when x_i = -1,
  // the smallest otherwise; sigma_x is the inverse of this sigma.
  std::vector<int> sigma(n + 1, 0);
  int lo = 1, hi = n;
  for (int i = 1; i <= n; ++i) sigma[i] = x.sign(i) == -1 ? hi-- : lo++;
  std::vector<int> inv(n);
  for (int i = 1; i <= n; ++i) inv[sigma[i] - 1] = i;
  SignedPerm sigmaX = SignedPerm(std::move(inv));

  CosetDecomposition out{
      x, SignedPerm::fromSignVector(x) * sigmaX, sigmaX, 0, 0, 0};
  const int w = x.weight();
  int sumPos = 0;
  for (int i : x.minusPositions()) sumPos += i;
  out.lenX = (1 + 2 * n) * w - 2 * sumPos;
  out.lenU = (1 + n) * w - sumPos;
  out.lenSigma = n * w - sumPos;
  return out;
}

GenCosetProduct genTimesCosetRep(int i, const SignVector& x) {
  const int n = x.rank();
  if (i < 1 || i > n) throw DomainError("generator index out of range");
  if (i == n) {
    return GenCosetProduct{GenCosetProduct::Kind::MovesCoset, x.sign(n) == 1,
                           x.flipped(n), 0};
  }
  const bool ascent = x.sign(i) >= x.sign(i + 1);
  if (x.sign(i) != x.sign(i + 1))
    return GenCosetProduct{GenCosetProduct::Kind::MovesCoset, ascent, x.swapped(i), 0};
  const SignedPerm sigmaInv = cosetRep(x).sigma.inverse();
  const int j = std::min(sigmaInv.image(i), sigmaInv.image(i + 1));
  return GenCosetProduct{GenCosetProduct::Kind::StaysInCoset, ascent, x, j};
}

}  // namespace hsp

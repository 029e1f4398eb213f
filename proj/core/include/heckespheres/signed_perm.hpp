#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "heckespheres/errors.hpp"

namespace hsp {

// Element of Z_2^n as a bitmask; bit (i-1) set means coordinate i is -1,
// so the all-plus vector is mask 0, weight is the popcount and the group
// operation is xor.
class SignVector {
 public:
  SignVector(int n, std::uint32_t bits);
  static SignVector allPlus(int n) { return SignVector(n, 0); }
  // x^j: single -1 at coordinate j (1-based).
  static SignVector single(int n, int j) { return SignVector(n, 1u << (j - 1)); }

  int rank() const { return n_; }
  std::uint32_t bits() const { return bits_; }
  int sign(int i) const { return (bits_ >> (i - 1)) & 1u ? -1 : 1; }
  int weight() const;
  // 1-based positions of the -1 entries, increasing.
  std::vector<int> minusPositions() const;
  // m_j(y) = #{ p > j : y_p = +1 }
  int mJ(int j) const;

  SignVector flipped(int i) const { return SignVector(n_, bits_ ^ (1u << (i - 1))); }
  SignVector operator*(const SignVector& o) const;
  // x^sigma with (x^sigma)_i = x_{sigma^{-1}(i)}; sigma must be unsigned.
  SignVector conjugatedBy(const class SignedPerm& sigma) const;
  // swap coordinates i, i+1 (conjugation by s_i).
  SignVector swapped(int i) const;

  bool operator==(const SignVector& o) const = default;

  std::string str() const;  // '+'/'-' string, coordinate 1 leftmost
  static SignVector parse(const std::string& text);

 private:
  int n_;
  std::uint32_t bits_;
};

// Signed permutation in one-line notation: image(i) = w(i) in {±1, ..., ±n},
// the absolute values forming a permutation.  Acts on coordinate vectors by
// e_i -> sgn(w(i)) e_{|w(i)|}.
class SignedPerm {
 public:
  explicit SignedPerm(std::vector<int> images);
  static SignedPerm identity(int n);
  // s_i for i < n swaps coordinates i, i+1; s_n negates coordinate n.
  static SignedPerm generator(int i, int n);
  static SignedPerm fromSignVector(const SignVector& x);

  int rank() const { return static_cast<int>(img_.size()); }
  int image(int i) const { return img_[i - 1]; }
  const std::vector<int>& images() const { return img_; }

  SignedPerm operator*(const SignedPerm& o) const;  // apply o first, then *this
  SignedPerm inverse() const;
  bool isIdentity() const;
  // true when all images are positive, i.e. the element lies in S_n
  bool isUnsigned() const;

  // Z_2^n x S_n coordinates of w = x * sigma (sigma unsigned).
  SignVector signPart() const;
  SignedPerm permPart() const;

  bool operator==(const SignedPerm& o) const = default;
  std::strong_ordering operator<=>(const SignedPerm& o) const = default;

  std::string str() const;  // e.g. "[-2, 1, 3]"

 private:
  std::vector<int> img_;
};

// Number of positive roots sent to negative roots by w^{-1}; equals the
// minimal generator-word length.  Counts over the n^2 positive roots
// e_i, e_i - e_j, e_i + e_j (i < j).
int length(const SignedPerm& w);

// true iff l(s_i w) > l(w)
bool leftAscent(const SignedPerm& w, int i);
// true iff l(w s_i) > l(w)
bool rightAscent(const SignedPerm& w, int i);

// Deterministic reduced word (smallest descent first): w = s_{i_1}...s_{i_l}.
std::vector<int> reducedWord(SignedPerm w);

struct CosetDecomposition {
  SignVector x;
  SignedPerm u;        // distinguished representative u_x = x * sigma
  SignedPerm sigma;    // unsigned part
  int lenX = 0;        // (1+2n)w(x) - 2*sum i_j
  int lenU = 0;        // (1+n)w(x) - sum i_j
  int lenSigma = 0;    // n*w(x) - sum i_j
};

// Minimal-length representative of the coset x S_n, built by the greedy
// rule: sigma(i) largest available when x_i = -1, smallest otherwise, and
// sigma_x its inverse.
CosetDecomposition cosetRep(const SignVector& x);

// Classification of s_i * u_x.
struct GenCosetProduct {
  enum class Kind {
    MovesCoset,   // s_i u_x = u_{x'} with x' = x^{s_i} (i < n) or x*x^n (i = n)
    StaysInCoset  // s_i u_x = u_x s_j (only for i < n with x_i = x_{i+1})
  };
  Kind kind;
  bool ascent;   // l(s_i u_x) = l(u_x) + 1
  SignVector newX;
  int j = 0;     // right factor index for StaysInCoset
};

GenCosetProduct genTimesCosetRep(int i, const SignVector& x);

}  // namespace hsp

#include "heckespheres/hecke.hpp"

#include <algorithm>
#include <string>

#include "heckespheres/qseries.hpp"

namespace hsp {

HeckeElt HeckeElt::basis(const SignedPerm& w, const Scalar& c) {
  HeckeElt out(w.rank());
  out.add(w, c);
  return out;
}

Scalar HeckeElt::coefficient(const SignedPerm& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

void HeckeElt::add(const SignedPerm& w, const Scalar& c) {
  if (c.isZero()) return;
  if (w.rank() != n_) throw RankMismatch("HeckeElt/SignedPerm ranks differ");
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

HeckeElt HeckeElt::operator+(const HeckeElt& o) const {
  if (n_ != o.n_) throw RankMismatch("HeckeElt ranks differ");
  HeckeElt out = *this;
  for (const auto& [w, c] : o.terms_) out.add(w, c);
  return out;
}

HeckeElt HeckeElt::operator-(const HeckeElt& o) const {
  if (n_ != o.n_) throw RankMismatch("HeckeElt ranks differ");
  HeckeElt out = *this;
  for (const auto& [w, c] : o.terms_) out.add(w, -c);
  return out;
}

HeckeElt HeckeElt::scaled(const Scalar& c) const {
  HeckeElt out(n_);
  if (c.isZero()) return out;
  for (const auto& [w, coeff] : terms_) out.terms_.emplace(w, coeff * c);
  return out;
}

std::vector<std::pair<std::string, std::string>> HeckeElt::serialized() const {
  std::vector<std::pair<const SignedPerm*, const Scalar*>> items;
  items.reserve(terms_.size());
  for (const auto& [w, c] : terms_) items.emplace_back(&w, &c);
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    const int la = length(*a.first), lb = length(*b.first);
    if (la != lb) return la < lb;
    return a.first->images() < b.first->images();
  });
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(items.size());
  for (const auto& [w, c] : items) out.emplace_back(w->str(), c->str());
  return out;
}

HeckeElt genMulLeft(int i, const HeckeElt& a) {
  const int n = a.rank();
  if (i < 1 || i > n) throw DomainError("generator index out of range");
  const Scalar param = i < n ? Scalar::q() : Scalar::p();
  const SignedPerm s = SignedPerm::generator(i, n);
  HeckeElt out(n);
  for (const auto& [w, c] : a.terms()) {
    if (leftAscent(w, i)) {
      out.add(s * w, c);
    } else {
      out.add(w, c * (param - Scalar(1)));
      out.add(s * w, c * param);
    }
  }
  return out;
}

HeckeElt genMulRight(const HeckeElt& a, int i) {
  const int n = a.rank();
  if (i < 1 || i > n) throw DomainError("generator index out of range");
  const Scalar param = i < n ? Scalar::q() : Scalar::p();
  const SignedPerm s = SignedPerm::generator(i, n);
  HeckeElt out(n);
  for (const auto& [w, c] : a.terms()) {
    if (rightAscent(w, i)) {
      out.add(w * s, c);
    } else {
      out.add(w, c * (param - Scalar(1)));
      out.add(w * s, c * param);
    }
  }
  return out;
}

HeckeElt multiply(const HeckeElt& a, const HeckeElt& b) {
  if (a.rank() != b.rank()) throw RankMismatch("HeckeElt ranks differ");
  HeckeElt out(a.rank());
  for (const auto& [w, c] : a.terms()) {
    const std::vector<int> word = reducedWord(w);
    HeckeElt acc = b;
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = genMulLeft(*it, acc);
    out = out + acc.scaled(c);
  }
  return out;
}

namespace {

// letter counts (type-A letters, s_n letters) of any reduced word of w
std::pair<int, int> letterCounts(const SignedPerm& w) {
  int a = 0, b = 0;
  for (int i : reducedWord(w)) (i == w.rank() ? b : a) += 1;
  return {a, b};
}

}  // namespace

Scalar indexRep(const HeckeElt& a) {
  Scalar out;
  for (const auto& [w, c] : a.terms()) {
    const auto [qs, ps] = letterCounts(w);
    out += c * Scalar::qPow2(2 * qs) * Scalar::pPow2(2 * ps);
  }
  return out;
}

Scalar indexRepPrime(const HeckeElt& a) {
  Scalar out;
  for (const auto& [w, c] : a.terms()) {
    const auto [qs, ps] = letterCounts(w);
    Scalar v = c * Scalar::qPow2(2 * qs);
    out += (ps % 2 == 0) ? v : -v;
  }
  return out;
}

Scalar signRep(const HeckeElt& a) {
  Scalar out;
  for (const auto& [w, c] : a.terms()) out += (length(w) % 2 == 0) ? c : -c;
  return out;
}

Scalar indexRepCosetRep(const SignVector& x) {
  const int n = x.rank();
  const int w = x.weight();
  int sumPos = 0;
  for (int i : x.minusPositions()) sumPos += i;
  return Scalar::pPow2(2 * w) * Scalar::qPow2(2 * (n * w - sumPos));
}

HeckeElt star1(const HeckeElt& a) {
  HeckeElt out(a.rank());
  for (const auto& [w, c] : a.terms()) out.add(w.inverse(), c);
  return out;
}

HeckeElt star2(const HeckeElt& a) {
  const int n = a.rank();
  HeckeElt out(n);
  for (const auto& [w, c] : a.terms()) {
    // (T_{i_1} ... T_{i_l})^{-1} = T_{i_l}^{-1} ... T_{i_1}^{-1}
    HeckeElt acc = HeckeElt::identity(n);
    const std::vector<int> word = reducedWord(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      const int i = *it;
      const Scalar cInv = (i < n ? Scalar::q() : Scalar::p()).inverse();
      acc = genMulRight(acc, i).scaled(cInv) + acc.scaled(cInv - Scalar(1));
    }
    out = out + acc.scaled(c.invertVars());
  }
  return out;
}

namespace {

// Every sigma in S_n factors uniquely as r_n r_{n-1} ... r_2 with r_l a
// minimal representative of S_l / S_{l-1}, i.e. r_l = e or
// r_l = s_j s_{j+1} ... s_{l-1}, and the lengths add up.  The walk branches
// on r_2 at the root and on r_n deepest, so every branch extends the chain
// with a single left push s_j and T-products compose along reduced words.
void walkLevel(int level, int n, const SymmetrizerWalk& walk) {
  if (level > n) {
    walk.leaf();
    return;
  }
  walkLevel(level + 1, n, walk);  // r_level = e
  int pushes = 0;
  for (int j = level - 1; j >= 1; --j) {
    walk.apply(j);  // chain r_j = s_j r_{j+1}
    ++pushes;
    walkLevel(level + 1, n, walk);
  }
  for (; pushes > 0; --pushes) walk.pop();
}

}  // namespace

void symmetrizerWalk(int n, const SymmetrizerWalk& walk) {
  if (n < 1) throw DomainError("symmetrizer needs n >= 1");
  if (n > kSymmetrizerCap)
    throw CapExceeded("symmetrizer over S_" + std::to_string(n) + " exceeds the n! cap (n <= " +
                      std::to_string(kSymmetrizerCap) + ")");
  walkLevel(2, n, walk);
}

std::vector<std::vector<int>> symmetrizerWords(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  SymmetrizerWalk walk{
      [&](int i) { current.push_back(i); },
      [&]() { current.pop_back(); },
      [&]() { out.push_back(current); },
  };
  symmetrizerWalk(n, walk);
  return out;
}

Scalar poincareA(int n) {
  if (n < 1) throw DomainError("poincareA needs n >= 1");
  // (q;q)_n / (1-q)^n = prod_{k=1}^{n} (1 + q + ... + q^{k-1})
  Scalar out(1);
  for (int k = 1; k <= n; ++k) {
    Scalar factor;
    for (int e = 0; e < k; ++e) factor += Scalar::qPow2(2 * e);
    out *= factor;
  }
  return out;
}

Scalar poincareB(int n) {
  if (n < 1) throw DomainError("poincareB needs n >= 1");
  return poincareA(n) * qPochhammer(-Scalar::p(), n);
}

}  // namespace hsp

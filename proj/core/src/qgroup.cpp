#include "heckespheres/qgroup.hpp"

#include <bit>
#include <random>
#include <string>

namespace hsp {

Scalar ActionMatrix::entry(std::uint32_t r, std::uint32_t c) const {
  auto it = rows_[r].find(c);
  return it == rows_[r].end() ? Scalar() : it->second;
}

void ActionMatrix::add(std::uint32_t r, std::uint32_t c, const Scalar& value) {
  if (value.isZero()) return;
  auto& row = rows_[r];
  auto it = row.find(c);
  if (it == row.end()) {
    row.emplace(c, value);
  } else {
    it->second += value;
    if (it->second.isZero()) row.erase(it);
  }
}

ActionMatrix ActionMatrix::operator+(const ActionMatrix& o) const {
  if (n_ != o.n_) throw RankMismatch("ActionMatrix ranks differ");
  ActionMatrix out = *this;
  for (std::uint32_t r = 0; r < dim(); ++r)
    for (const auto& [c, v] : o.rows_[r]) out.add(r, c, v);
  return out;
}

ActionMatrix ActionMatrix::operator-(const ActionMatrix& o) const {
  if (n_ != o.n_) throw RankMismatch("ActionMatrix ranks differ");
  ActionMatrix out = *this;
  for (std::uint32_t r = 0; r < dim(); ++r)
    for (const auto& [c, v] : o.rows_[r]) out.add(r, c, -v);
  return out;
}

ActionMatrix ActionMatrix::operator*(const ActionMatrix& o) const {
  if (n_ != o.n_) throw RankMismatch("ActionMatrix ranks differ");
  ActionMatrix out(n_);
  for (std::uint32_t r = 0; r < dim(); ++r)
    for (const auto& [k, a] : rows_[r])
      for (const auto& [c, b] : o.rows_[k]) out.add(r, c, a * b);
  return out;
}

ActionMatrix ActionMatrix::scaled(const Scalar& c) const {
  ActionMatrix out(n_);
  if (c.isZero()) return out;
  for (std::uint32_t r = 0; r < dim(); ++r)
    for (const auto& [col, v] : rows_[r]) out.rows_[r].emplace(col, v * c);
  return out;
}

ActionMatrix ActionMatrix::identityMatrix(int n) {
  ActionMatrix out(n);
  for (std::uint32_t r = 0; r < out.dim(); ++r) out.add(r, r, Scalar(1));
  return out;
}

bool ActionMatrix::isZero() const {
  for (const auto& row : rows_)
    if (!row.empty()) return false;
  return true;
}

bool ActionMatrix::operator==(const ActionMatrix& o) const {
  return n_ == o.n_ && rows_ == o.rows_;
}

VElt ActionMatrix::apply(const VElt& v) const {
  if (v.rank() != n_) throw RankMismatch("ActionMatrix/VElt ranks differ");
  const VElt in = v.inBasis(VBasis::UHat);
  VElt out(n_, VBasis::UHat);
  for (std::uint32_t r = 0; r < dim(); ++r)
    for (const auto& [c, a] : rows_[r])
      if (!in.coord(c).isZero()) out.coord(r) += a * in.coord(c);
  return out.inBasis(v.basis());
}

std::array<std::array<Scalar, 2>, 2> fundamentalRep(UqGen g) {
  // index 0 = e_{-1}, index 1 = e_1
  std::array<std::array<Scalar, 2>, 2> m{};
  switch (g) {
    case UqGen::K:
      m[0][0] = Scalar::qHalf();
      m[1][1] = Scalar::qHalf().inverse();
      break;
    case UqGen::KInv:
      m[0][0] = Scalar::qHalf().inverse();
      m[1][1] = Scalar::qHalf();
      break;
    case UqGen::E:
      m[0][1] = Scalar(1);  // E e_1 = e_{-1}
      break;
    case UqGen::F:
      m[1][0] = Scalar(1);  // F e_{-1} = e_1
      break;
  }
  return m;
}

ActionMatrix tAction(UqGen g, int n) {
  if (n < 1) throw DomainError("tAction needs n >= 1");
  ActionMatrix out(n);
  auto kWeight = [&](std::uint32_t x, int from, int to, bool inverse) {
    // product of K (or K^{-1}) eigenvalues over factor positions [from, to]
    int exponent = 0;  // doubled exponent of q^(1/2)
    for (int k = from; k <= to; ++k) exponent += ((x >> (k - 1)) & 1u) ? 1 : -1;
    return Scalar::qPow2(inverse ? -exponent : exponent);
  };
  for (std::uint32_t x = 0; x < out.dim(); ++x) {
    switch (g) {
      case UqGen::K:
        out.add(x, x, kWeight(x, 1, n, false));
        break;
      case UqGen::KInv:
        out.add(x, x, kWeight(x, 1, n, true));
        break;
      case UqGen::E:
        // K on factors < i, E at factor i (needs e_1, bit clear)
        for (int i = 1; i <= n; ++i) {
          if ((x >> (i - 1)) & 1u) continue;
          out.add(x | (1u << (i - 1)), x, kWeight(x, 1, i - 1, false));
        }
        break;
      case UqGen::F:
        // F at factor i (needs e_{-1}, bit set), K^{-1} on factors > i
        for (int i = 1; i <= n; ++i) {
          if (!((x >> (i - 1)) & 1u)) continue;
          out.add(x & ~(1u << (i - 1)), x, kWeight(x, i + 1, n, true));
        }
        break;
    }
  }
  return out;
}

ActionMatrix rhoGenMatrix(int i, int n) {
  ActionMatrix out(n);
  for (std::uint32_t x = 0; x < out.dim(); ++x) {
    const VElt image = actGen(i, VElt::basisVector(n, VBasis::UHat, x));
    for (std::uint32_t r = 0; r < image.dim(); ++r)
      out.add(r, x, image.coord(r));
  }
  return out;
}

UqWord starGen(UqGen g) {
  switch (g) {
    case UqGen::K:
      return UqWord{Scalar(1), {UqGen::K}};
    case UqGen::KInv:
      return UqWord{Scalar(1), {UqGen::KInv}};
    case UqGen::E:
      return UqWord{Scalar::qHalf().inverse(), {UqGen::F, UqGen::K}};
    case UqGen::F:
      return UqWord{Scalar::qHalf(), {UqGen::KInv, UqGen::E}};
  }
  throw DomainError("unknown generator");
}

ActionMatrix tActionWord(const UqWord& word, int n) {
  ActionMatrix out = ActionMatrix::identityMatrix(n);
  for (UqGen g : word.letters) out = out * tAction(g, n);
  return out.scaled(word.coeff);
}

std::map<int, int> clebschGordanMultiplicities(int n) {
  std::map<int, int> mult{{1, 1}};  // W_1
  for (int step = 2; step <= n; ++step) {
    std::map<int, int> next;
    for (const auto& [m, count] : mult) {
      if (m >= 1) {
        next[m + 1] += count;
        next[m - 1] += count;
      } else {
        next[1] += count;  // W_0 (x) W_1 = W_1
      }
    }
    mult = std::move(next);
  }
  return mult;
}

// --- exact linear algebra over the scalar field ----------------------------

namespace {

using SparseRow = std::map<long, Scalar>;

// Row reduction; returns the rank.  Rows are consumed.
long rankOf(std::vector<SparseRow> rows) {
  std::map<long, SparseRow> pivots;  // leading column -> normalised row
  long rank = 0;
  for (auto& row : rows) {
    while (!row.empty()) {
      const long lead = row.begin()->first;
      auto pivot = pivots.find(lead);
      if (pivot == pivots.end()) break;
      const Scalar factor = row.begin()->second;
      for (const auto& [c, v] : pivot->second) {
        auto it = row.find(c);
        Scalar next = (it == row.end() ? Scalar() : it->second) - factor * v;
        if (next.isZero()) {
          if (it != row.end()) row.erase(it);
        } else if (it == row.end()) {
          row.emplace(c, next);
        } else {
          it->second = next;
        }
      }
    }
    if (row.empty()) continue;
    const Scalar lead = row.begin()->second;
    SparseRow normalised;
    for (const auto& [c, v] : row) normalised.emplace(c, v / lead);
    pivots.emplace(normalised.begin()->first, std::move(normalised));
    ++rank;
  }
  return rank;
}

// Same elimination over plain rationals (randomised specialisation).
long rankOfRational(std::vector<std::map<long, Rational>> rows) {
  std::map<long, std::map<long, Rational>> pivots;
  long rank = 0;
  for (auto& row : rows) {
    while (!row.empty()) {
      const long lead = row.begin()->first;
      auto pivot = pivots.find(lead);
      if (pivot == pivots.end()) break;
      const Rational factor = row.begin()->second;
      for (const auto& [c, v] : pivot->second) {
        auto it = row.find(c);
        Rational next = (it == row.end() ? Rational(0) : it->second) - factor * v;
        if (next == 0) {
          if (it != row.end()) row.erase(it);
        } else if (it == row.end()) {
          row.emplace(c, next);
        } else {
          it->second = next;
        }
      }
    }
    if (row.empty()) continue;
    const Rational lead = row.begin()->second;
    std::map<long, Rational> normalised;
    for (const auto& [c, v] : row) normalised.emplace(c, v / lead);
    pivots.emplace(normalised.begin()->first, std::move(normalised));
    ++rank;
  }
  return rank;
}

// Equations [X, M] = 0 over the d^2 unknowns X[r][c], appended to rows.
void appendCommutationSystem(const ActionMatrix& m, std::vector<SparseRow>& rows) {
  const long d = m.dim();
  // (XM - MX)[r][c] = sum_k X[r][k] M[k][c] - M[r][k] X[k][c]
  // Column-major access to M:
  std::vector<std::map<std::uint32_t, Scalar>> colsOfM(d);
  for (std::uint32_t r = 0; r < m.dim(); ++r)
    for (const auto& [c, v] : m.row(r)) colsOfM[c].emplace(r, v);
  for (long r = 0; r < d; ++r) {
    for (long c = 0; c < d; ++c) {
      SparseRow eq;
      for (const auto& [k, v] : colsOfM[c]) {
        auto [it, inserted] = eq.emplace(r * d + k, v);
        if (!inserted) it->second += v;
      }
      for (const auto& [k, v] : m.row(r)) {
        auto [it, inserted] = eq.emplace(k * d + c, -v);
        if (!inserted) it->second -= v;
        if (it->second.isZero()) eq.erase(it);
      }
      if (!eq.empty()) rows.push_back(std::move(eq));
    }
  }
}

long centralizerDim(const std::vector<ActionMatrix>& mats) {
  if (mats.empty()) throw DomainError("centralizer of an empty family");
  const long d = mats.front().dim();
  std::vector<SparseRow> rows;
  for (const ActionMatrix& m : mats) appendCommutationSystem(m, rows);
  return d * d - rankOf(std::move(rows));
}

long centralizerDimSpecialized(const std::vector<ActionMatrix>& mats,
                               const Rational& pHalf, const Rational& qHalf) {
  const long d = mats.front().dim();
  std::vector<std::map<long, Rational>> rows;
  for (const ActionMatrix& m : mats) {
    std::vector<SparseRow> symbolic;
    appendCommutationSystem(m, symbolic);
    for (const auto& eq : symbolic) {
      std::map<long, Rational> numeric;
      for (const auto& [var, coeff] : eq) {
        Rational v = coeff.specialize(pHalf, qHalf);
        if (v != 0) numeric.emplace(var, v);
      }
      if (!numeric.empty()) rows.push_back(std::move(numeric));
    }
  }
  return d * d - rankOfRational(std::move(rows));
}

long spanDim(const std::vector<ActionMatrix>& mats) {
  std::vector<SparseRow> rows;
  for (const ActionMatrix& m : mats) {
    SparseRow row;
    const long d = m.dim();
    for (std::uint32_t r = 0; r < m.dim(); ++r)
      for (const auto& [c, v] : m.row(r)) row.emplace(r * d + c, v);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rankOf(std::move(rows));
}

std::vector<ActionMatrix> heckeGeneratorMatrices(int n) {
  std::vector<ActionMatrix> out;
  for (int i = 1; i < n; ++i) out.push_back(rhoGenMatrix(i, n));
  return out;
}

}  // namespace

CommutantReport checkCommutant(int n, int dimCheckMaxN) {
  if (n < 2) throw DomainError("checkCommutant needs n >= 2");
  CommutantReport report;
  report.n = n;

  const std::vector<ActionMatrix> uGens = {tAction(UqGen::K, n), tAction(UqGen::KInv, n),
                                           tAction(UqGen::E, n), tAction(UqGen::F, n)};
  const std::vector<ActionMatrix> heckeGens = heckeGeneratorMatrices(n);

  report.commutatorsVanish = true;
  for (const ActionMatrix& g : uGens)
    for (const ActionMatrix& t : heckeGens)
      if (!(g * t - t * g).isZero()) report.commutatorsVanish = false;

  const auto mult = clebschGordanMultiplicities(n);
  long sumMultSq = 0, sumDimSq = 0;
  for (const auto& [m, count] : mult) {
    sumMultSq += static_cast<long>(count) * count;
    sumDimSq += static_cast<long>(m + 1) * (m + 1);
  }
  report.uCentralizerDimExpected = sumMultSq;
  report.heckeCentralizerDimExpected = sumDimSq;

  if (n <= dimCheckMaxN) {
    report.dimsComputed = true;
    // randomised specialisation first, then the symbolic run
    const std::vector<ActionMatrix> uKEF = {uGens[0], uGens[2], uGens[3]};
    report.specializedUCentralizerDim =
        centralizerDimSpecialized(uKEF, Rational(7, 5), Rational(3, 2));
    report.uCentralizerDim = centralizerDim(uKEF);
    report.heckeCentralizerDim = centralizerDim(heckeGens);

    std::vector<ActionMatrix> sigmaMats;
    for (const auto& word : symmetrizerWords(n)) {
      ActionMatrix m = ActionMatrix::identityMatrix(n);
      for (auto it = word.rbegin(); it != word.rend(); ++it)
        m = rhoGenMatrix(*it, n) * m;
      sigmaMats.push_back(std::move(m));
    }
    report.heckeSpanDim = spanDim(sigmaMats);
  }
  return report;
}

std::vector<VElt> invariantSubspace(int n) {
  if (n < 1) throw DomainError("invariantSubspace needs n >= 1");
  const std::uint32_t d = 1u << n;
  // kernel of the stacked (rho(T_i) - q I), i < n, over uhat coordinates
  std::vector<SparseRow> rows;
  for (int i = 1; i < n; ++i) {
    const ActionMatrix m = rhoGenMatrix(i, n) - ActionMatrix::identityMatrix(n).scaled(Scalar::q());
    for (std::uint32_t r = 0; r < d; ++r) {
      SparseRow eq;
      for (const auto& [c, v] : m.row(r)) eq.emplace(c, v);
      if (!eq.empty()) rows.push_back(std::move(eq));
    }
  }
  // reduced row echelon form
  std::map<long, SparseRow> pivots;
  for (auto& row : rows) {
    while (!row.empty()) {
      auto pivot = pivots.find(row.begin()->first);
      if (pivot == pivots.end()) break;
      const Scalar factor = row.begin()->second;
      for (const auto& [c, v] : pivot->second) {
        auto it = row.find(c);
        Scalar next = (it == row.end() ? Scalar() : it->second) - factor * v;
        if (next.isZero()) {
          if (it != row.end()) row.erase(it);
        } else if (it == row.end()) {
          row.emplace(c, next);
        } else {
          it->second = next;
        }
      }
    }
    if (row.empty()) continue;
    const Scalar lead = row.begin()->second;
    SparseRow normalised;
    for (const auto& [c, v] : row) normalised.emplace(c, v / lead);
    pivots.emplace(normalised.begin()->first, std::move(normalised));
  }
  // back-substitute to a fully reduced form
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    for (auto& [lead, row] : pivots) {
      if (lead == it->first) continue;
      auto hit = row.find(it->first);
      if (hit == row.end()) continue;
      const Scalar factor = hit->second;
      for (const auto& [c, v] : it->second) {
        auto slot = row.find(c);
        Scalar next = (slot == row.end() ? Scalar() : slot->second) - factor * v;
        if (next.isZero()) {
          if (slot != row.end()) row.erase(slot);
        } else if (slot == row.end()) {
          row.emplace(c, next);
        } else {
          slot->second = next;
        }
      }
    }
  }
  // free columns parameterise the kernel
  std::vector<VElt> basis;
  for (long free = 0; free < static_cast<long>(d); ++free) {
    if (pivots.count(free)) continue;
    VElt vec(n, VBasis::UHat);
    vec.coord(static_cast<std::uint32_t>(free)) = Scalar(1);
    for (const auto& [lead, row] : pivots) {
      auto it = row.find(free);
      if (it != row.end()) vec.coord(static_cast<std::uint32_t>(lead)) = -it->second;
    }
    basis.push_back(std::move(vec));
  }

  // Sanity assertions from the module structure: closure under t and the
  // highest-weight behaviour of uhat(-1,...,-1).
  auto isInSpan = [&](const VElt& v) {
    // reduce v against the reduced echelon rows of the constraint system:
    // v is invariant iff every equation evaluates to zero
    for (int i = 1; i < n; ++i) {
      const VElt lhs = actGen(i, v);
      const VElt rhs = v.scaled(Scalar::q());
      if (!equalAsVectors(lhs, rhs)) return false;
    }
    return true;
  };
  for (const VElt& vec : basis) {
    for (UqGen g : {UqGen::K, UqGen::E, UqGen::F}) {
      if (!isInSpan(tAction(g, n).apply(vec)))
        throw NotDiagonal("t(U) does not preserve the invariant subspace");
    }
  }
  const VElt top = VElt::basisVector(n, VBasis::UHat, d - 1);
  if (!isInSpan(top) || !tAction(UqGen::E, n).apply(top).isZero())
    throw NotDiagonal("uhat(-1,...,-1) is not a highest weight vector");
  return basis;
}

}  // namespace hsp

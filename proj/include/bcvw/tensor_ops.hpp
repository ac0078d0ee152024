#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bcvw/exact_matrix.hpp"
#include "bcvw/lie_algebra.hpp"
#include "bcvw/signed_perm.hpp"

namespace bcvw {

// V^(x)k with legs numbered 1..k (leg 0 is the module factor and only enters
// through the substituted operators in ps_model).
struct TensorSpace {
  int dimV = 0;
  int k = 0;

  long dim() const {
    long d = 1;
    for (int i = 0; i < k; ++i) d *= dimV;
    return d;
  }

  long stride(int leg) const {  // leg 1 is the leftmost tensor factor
    long s = 1;
    for (int i = leg; i < k; ++i) s *= dimV;
    return s;
  }

  void checkLeg(int leg) const {
    if (leg < 1 || leg > k) throw std::out_of_range("TensorSpace: bad leg index");
  }
};

struct LegOperator {
  ExactMatrix matrix;
  std::vector<int> legs;
  std::string label;
};

// apply a dimV x dimV matrix on one leg: sum_m (id (x) ... m ... (x) id)
inline ExactMatrix onLeg(const TensorSpace& space, const ExactMatrix& m, int leg) {
  space.checkLeg(leg);
  long d = space.dimV, total = space.dim(), s = space.stride(leg);
  long outer = total / (s * d);
  ExactMatrix out(static_cast<int>(total), static_cast<int>(total));
  for (const auto& [r, row] : m.entries())
    for (const auto& [c, v] : row)
      for (long o = 0; o < outer; ++o)
        for (long inner = 0; inner < s; ++inner) {
          long rr = o * d * s + r * s + inner;
          long cc = o * d * s + c * s + inner;
          out.set(static_cast<int>(rr), static_cast<int>(cc), v);
        }
  return out;
}

// apply a (dimV^2 x dimV^2) matrix on an (ordered) pair of legs i < j
inline ExactMatrix onLegPair(const TensorSpace& space, const ExactMatrix& m, int i, int j) {
  space.checkLeg(i);
  space.checkLeg(j);
  if (i >= j) throw std::invalid_argument("onLegPair: need i < j");
  long d = space.dimV, total = space.dim();
  long si = space.stride(i), sj = space.stride(j);
  ExactMatrix out(static_cast<int>(total), static_cast<int>(total));
  // index = rest + a*si + b*sj over the two legs
  for (const auto& [r, row] : m.entries())
    for (const auto& [c, v] : row) {
      long ar = r / d, br = r % d, ac = c / d, bc = c % d;
      // iterate over all assignments of the remaining legs
      long restCount = total / (d * d);
      for (long rest = 0; rest < restCount; ++rest) {
        // unpack rest into the k-2 other legs
        long idxR = 0, idxC = 0, w = rest;
        for (int leg = space.k; leg >= 1; --leg) {
          long s = space.stride(leg);
          if (leg == i) {
            idxR += ar * s;
            idxC += ac * s;
          } else if (leg == j) {
            idxR += br * s;
            idxC += bc * s;
          } else {
            long digit = w % d;
            w /= d;
            idxR += digit * s;
            idxC += digit * s;
          }
        }
        out.set(static_cast<int>(idxR), static_cast<int>(idxC), v);
      }
    }
  return out;
}

inline LegOperator buildSwap(const TensorSpace& space, int i, int j) {
  space.checkLeg(i);
  space.checkLeg(j);
  if (i >= j) throw std::invalid_argument("buildSwap: need i < j");
  ExactMatrix sw(space.dimV * space.dimV, space.dimV * space.dimV);
  for (int a = 0; a < space.dimV; ++a)
    for (int b = 0; b < space.dimV; ++b)
      sw.set(a * space.dimV + b, b * space.dimV + a, GaussRat(1));
  return {onLegPair(space, sw, i, j), {i, j},
          "s(" + std::to_string(i) + "," + std::to_string(j) + ")"};
}

inline LegOperator buildXiLeg(const TensorSpace& space, const LieAlgebraData& g, int i) {
  return {onLeg(space, g.xi, i), {i}, "xi(" + std::to_string(i) + ")"};
}

inline LegOperator buildTrivialProjector(const TensorSpace& space, const LieAlgebraData& g,
                                         int i) {
  ExactMatrix prVV = detail::trivialProjectorVV(g);
  return {onLegPair(space, prVV, i, i + 1), {i, i + 1},
          "pr(" + std::to_string(i) + "," + std::to_string(i + 1) + ")"};
}

enum class OmegaPart { Full, K, P };

inline LegOperator buildOmega(const TensorSpace& space, const LieAlgebraData& g, int i, int j,
                              OmegaPart part = OmegaPart::Full) {
  space.checkLeg(i);
  space.checkLeg(j);
  if (i >= j) throw std::invalid_argument("buildOmega: need i < j");
  int d = g.dimV;
  ExactMatrix acc(d * d, d * d);
  auto addPart = [&](const std::vector<ExactMatrix>& basis, const std::vector<ExactMatrix>& duals) {
    for (size_t t = 0; t < basis.size(); ++t) acc += basis[t].kron(duals[t]);
  };
  if (part != OmegaPart::P) addPart(g.basisK, g.dualsK);
  if (part != OmegaPart::K) addPart(g.basisP, g.dualsP);
  std::string name = part == OmegaPart::Full ? "Omega" : (part == OmegaPart::K ? "Omega_k" : "Omega_p");
  return {onLegPair(space, acc, i, j), {i, j},
          name + "(" + std::to_string(i) + "," + std::to_string(j) + ")"};
}

// representation of W(B_k) on V^(x)k: transpositions act by leg swaps and
// sign flips by xi on the flipped leg
inline ExactMatrix actSignedPerm(const TensorSpace& space, const LieAlgebraData& g,
                                 const SignedPerm& w) {
  long total = space.dim();
  int d = space.dimV;
  ExactMatrix out(static_cast<int>(total), static_cast<int>(total));
  // content of leg j moves to leg |w(j)|, hit by xi when w(j) < 0
  std::vector<long> digits(space.k + 1);
  for (long col = 0; col < total; ++col) {
    long c = col;
    for (int leg = space.k; leg >= 1; --leg) {
      digits[leg] = c % d;
      c /= d;
    }
    // column vector = product over legs of xi-or-id applied to e_{digit}
    // accumulate as list of (rowindex, coeff) pairs built leg by leg
    std::vector<std::pair<long, GaussRat>> partial{{0, GaussRat(1)}};
    for (int leg = 1; leg <= space.k; ++leg) {
      int img = w.apply(leg);
      int target = std::abs(img);
      long s = space.stride(target);
      std::vector<std::pair<long, GaussRat>> next;
      if (img > 0) {
        for (auto& [idx, coeff] : partial) next.emplace_back(idx + digits[leg] * s, coeff);
      } else {
        // xi column of e_{digit}
        for (int r = 0; r < d; ++r) {
          GaussRat v = g.xi.at(r, static_cast<int>(digits[leg]));
          if (v.isZero()) continue;
          for (auto& [idx, coeff] : partial) next.emplace_back(idx + r * s, coeff * v);
        }
      }
      partial = std::move(next);
    }
    for (auto& [idx, coeff] : partial)
      out.add(static_cast<int>(idx), static_cast<int>(col), coeff);
  }
  return out;
}

}  // namespace bcvw

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcvw/exact_matrix.hpp"
#include "bcvw/hecke.hpp"
#include "bcvw/lie_algebra.hpp"
#include "bcvw/presentation.hpp"
#include "bcvw/signed_perm.hpp"
#include "bcvw/tensor_ops.hpp"

namespace bcvw {

enum class Side { Mu, MuBar };

// Composition order for the substituted k-part against (b*)_l. The three
// variants are all built so the suite can document which one closes; the
// symmetric one is the default used by the pipeline.
enum class SubstOrdering { Left, Right, Symmetric };

struct PsSpec {
  GroupSpec group;
  int k = 0;                 // delta flips the first k f-pair generators
  bool deltaDetTag = false;  // Opq: O(p-q) factor of delta is det
  std::vector<GaussRat> nu;  // full character of a, length = rank
  Side side = Side::Mu;

  int legs() const { return side == Side::Mu ? k : group.rank() - k; }
  int legOffset() const { return side == Side::Mu ? 0 : k; }

  // K-character associated to this side, resolved by the M-invariance
  // pairing computation (for Opq this differs from the paper's table by a
  // column swap; the report records both).
  KChar muChar() const {
    if (group.family == Family::Sp) return side == Side::Mu ? KChar::Triv : KChar::Det;
    if (side == Side::Mu) return deltaDetTag ? KChar::DetDet : KChar::TrivTriv;
    return deltaDetTag ? KChar::DetTriv : KChar::TrivDet;
  }

  // the paper's Table entry, kept for the discrepancy report
  KChar muCharPaperTable() const {
    if (group.family == Family::Sp) return side == Side::Mu ? KChar::Triv : KChar::Det;
    if (side == Side::Mu) return deltaDetTag ? KChar::DetTriv : KChar::TrivDet;
    return deltaDetTag ? KChar::DetDet : KChar::TrivTriv;
  }

  std::vector<GaussRat> nuRestricted() const {
    std::vector<GaussRat> out;
    for (int i = 0; i < legs(); ++i) out.push_back(nu.at(legOffset() + i));
    return out;
  }
};

struct ModelSpace {
  PsSpec spec;
  LieAlgebraData g;
  TensorSpace space;
  std::vector<SignedPerm> groupOrder;
  std::vector<std::vector<GaussRat>> invariantBasis;  // ambient coordinates
  ExactMatrix labeledBasis;                           // columns pi(w) cyclic
  int cyclicIndex = 0;
  std::map<std::string, ExactMatrix> gens;     // restricted to the model
  std::map<std::string, ExactMatrix> ambient;  // the assembled ambient operators
  QuotientConstants qc;
  bool cyclicEigenOk = false;  // eps_l cyclic = nu_l cyclic after the r-shift
  SubstOrdering ordering = SubstOrdering::Symmetric;

  int dim() const { return static_cast<int>(groupOrder.size()); }

  Assignment assignment() const {
    Assignment a;
    a.k = spec.legs();
    a.dim = dim();
    a.m0 = g.m0;
    a.gen = gens;
    a.onModelSpace = true;
    for (const auto& b : g.basisK) {
      GaussRat d = g.dmu(spec.muChar(), b);
      // on the model the diagonal K-action is the scalar dmu(b)
      a.diagonalK.push_back(d * ExactMatrix::identity(a.dim));
    }
    return a;
  }
};

namespace ps_detail {

inline std::vector<GaussRat> tensorOfColumns(const TensorSpace& space,
                                             const std::vector<std::vector<GaussRat>>& factors) {
  long total = space.dim();
  std::vector<GaussRat> v(total);
  int d = space.dimV;
  for (long idx = 0; idx < total; ++idx) {
    GaussRat prod(1);
    long w = idx;
    for (int leg = space.k; leg >= 1; --leg) {
      long digit = w % d;
      w /= d;
      prod *= factors[leg - 1][digit];
      if (prod.isZero()) break;
    }
    if (!prod.isZero()) v[idx] = prod;
  }
  return v;
}

inline std::vector<GaussRat> applySignedPerm(const TensorSpace& space, const LieAlgebraData& g,
                                             const SignedPerm& w,
                                             const std::vector<GaussRat>& v) {
  long total = space.dim();
  int d = space.dimV;
  std::vector<GaussRat> out(total);
  std::vector<long> digits(space.k + 1);
  for (long col = 0; col < total; ++col) {
    if (v[col].isZero()) continue;
    long c = col;
    for (int leg = space.k; leg >= 1; --leg) {
      digits[leg] = c % d;
      c /= d;
    }
    std::vector<std::pair<long, GaussRat>> partial{{0, v[col]}};
    for (int leg = 1; leg <= space.k; ++leg) {
      int img = w.apply(leg);
      int target = std::abs(img);
      long s = space.stride(target);
      std::vector<std::pair<long, GaussRat>> next;
      if (img > 0) {
        for (auto& [idx, coeff] : partial) next.emplace_back(idx + digits[leg] * s, coeff);
      } else {
        for (int r = 0; r < d; ++r) {
          GaussRat xv = g.xi.at(r, static_cast<int>(digits[leg]));
          if (xv.isZero()) continue;
          for (auto& [idx, coeff] : partial) next.emplace_back(idx + r * s, coeff * xv);
        }
      }
      partial = std::move(next);
    }
    for (auto& [idx, coeff] : partial) out[idx] += coeff;
  }
  return out;
}

}  // namespace ps_detail

// The operator replacing (b)_0 on the model: nu(b_A) Id + dmu(b_K) Id -
// sum_legs (b_K)_leg; the n+ part contributes zero.
inline ExactMatrix legZeroSubstitute(const PsSpec& spec, const LieAlgebraData& g,
                                     const ExactMatrix& b) {
  TensorSpace space{g.dimV, spec.legs()};
  auto parts = g.iwasawaDecompose(b);
  GaussRat scalar;
  for (size_t i = 0; i < parts.aCoeffs.size(); ++i) scalar += parts.aCoeffs[i] * spec.nu.at(i);
  scalar += g.dmu(spec.muChar(), parts.k);
  ExactMatrix out = scalar * ExactMatrix::identity(static_cast<int>(space.dim()));
  if (!parts.k.isZero())
    for (int leg = 1; leg <= spec.legs(); ++leg) out -= onLeg(space, parts.k, leg);
  return out;
}

// Omega_{0l} on the model space, assembled as sum_b Sub(b) o (b*)_l in the
// requested composition order; part restricts the sum to the k- or p-half.
inline ExactMatrix buildOmega0l(const PsSpec& spec, const LieAlgebraData& g, int l,
                                SubstOrdering ordering, OmegaPart part = OmegaPart::Full) {
  TensorSpace space{g.dimV, spec.legs()};
  long total = space.dim();
  ExactMatrix acc(static_cast<int>(total), static_cast<int>(total));
  auto addHalf = [&](const std::vector<ExactMatrix>& basis,
                     const std::vector<ExactMatrix>& duals) {
    for (size_t t = 0; t < basis.size(); ++t) {
      ExactMatrix sub = legZeroSubstitute(spec, g, basis[t]);
      ExactMatrix dualLeg = onLeg(space, duals[t], l);
      switch (ordering) {
        case SubstOrdering::Left: acc += sub * dualLeg; break;
        case SubstOrdering::Right: acc += dualLeg * sub; break;
        case SubstOrdering::Symmetric:
          acc += GaussRat(1, 2) * (sub * dualLeg + dualLeg * sub);
          break;
      }
    }
  };
  if (part != OmegaPart::P) addHalf(g.basisK, g.dualsK);
  if (part != OmegaPart::K) addHalf(g.basisP, g.dualsP);
  return acc;
}

// Build the finite model of the functor image: the M-invariant subspace with
// its W(B_legs)-labeled basis and all restricted generator matrices.
inline ModelSpace buildModel(const PsSpec& spec, const LieAlgebraData& g,
                             SubstOrdering ordering = SubstOrdering::Symmetric) {
  if (spec.k < 0 || spec.k > spec.group.rank())
    throw std::invalid_argument("buildModel: k out of range");
  if (static_cast<int>(spec.nu.size()) != spec.group.rank())
    throw std::invalid_argument("buildModel: nu has wrong length");
  ModelSpace model;
  model.spec = spec;
  model.g = g;
  model.ordering = ordering;
  int legs = spec.legs();
  model.space = TensorSpace{g.dimV, legs};
  long total = model.space.dim();
  int d = g.dimV;

  // --- M-invariants: joint fixed space of chi(m) * rho(m) over M generators
  auto mgens = g.mGenerators();
  KChar mu = spec.muChar();
  std::vector<ExactMatrix> conditions;
  for (const auto& mg : mgens) {
    int muV = mg.muValue.at(mu);
    int deltaV = 1;
    if (mg.isFPairFlip)
      deltaV = mg.fIndex <= spec.k ? -1 : 1;
    else if (spec.deltaDetTag)
      deltaV = mg.detOpq;
    GaussRat chi(static_cast<long>(muV * deltaV));
    // rho(m) on V^(x)legs
    ExactMatrix rho = ExactMatrix::identity(static_cast<int>(total));
    if (legs > 0) {
      rho = mg.matrix;
      for (int leg = 2; leg <= legs; ++leg) rho = rho.kron(mg.matrix);
    }
    conditions.push_back(chi * rho - ExactMatrix::identity(static_cast<int>(total)));
  }
  ExactMatrix stacked(static_cast<int>(conditions.size() * total), static_cast<int>(total));
  for (size_t ci = 0; ci < conditions.size(); ++ci)
    for (const auto& [r, row] : conditions[ci].entries())
      for (const auto& [c, v] : row)
        stacked.set(static_cast<int>(ci * total) + r, c, v);
  model.invariantBasis = stacked.kernelBasis();
  model.groupOrder = enumerateGroup(legs);
  if (model.invariantBasis.size() != model.groupOrder.size())
    throw std::runtime_error("enumerate_m_invariants: dimension mismatch, got " +
                             std::to_string(model.invariantBasis.size()) + " expected " +
                             std::to_string(model.groupOrder.size()));

  // --- labeled basis pi(w) * cyclic
  std::vector<std::vector<GaussRat>> fColumns;
  for (int i = 0; i < legs; ++i) {
    int fIndex = spec.legOffset() + i;  // 0-based column of toF
    std::vector<GaussRat> col(d);
    for (int r = 0; r < d; ++r) col[r] = g.fBasis.toF.at(r, fIndex);
    fColumns.push_back(std::move(col));
  }
  std::vector<GaussRat> cyc =
      legs > 0 ? ps_detail::tensorOfColumns(model.space, fColumns) : std::vector<GaussRat>{GaussRat(1)};
  std::vector<std::vector<GaussRat>> labeled;
  for (size_t wi = 0; wi < model.groupOrder.size(); ++wi) {
    if (model.groupOrder[wi].isIdentity()) model.cyclicIndex = static_cast<int>(wi);
    labeled.push_back(legs > 0
                          ? ps_detail::applySignedPerm(model.space, g, model.groupOrder[wi], cyc)
                          : cyc);
  }
  model.labeledBasis = ExactMatrix::fromColumns(static_cast<int>(total), labeled);
  if (model.labeledBasis.rank() != model.dim())
    throw std::runtime_error("buildModel: labeled basis is not independent");
  // the two spanning sets agree
  {
    ExactMatrix inv = ExactMatrix::fromColumns(static_cast<int>(total), model.invariantBasis);
    if (!inv.solveMulti(model.labeledBasis))
      throw std::runtime_error("buildModel: labeled basis outside the M-invariant space");
  }

  // --- ambient generators
  for (int i = 1; i < legs; ++i) {
    model.ambient["t" + std::to_string(i)] = buildSwap(model.space, i, i + 1).matrix;
    model.ambient["e" + std::to_string(i)] =
        g.m0 * buildTrivialProjector(model.space, g, i).matrix;
  }
  for (int j = 1; j <= legs; ++j)
    model.ambient["theta" + std::to_string(j)] = buildXiLeg(model.space, g, j).matrix;
  for (int l = 1; l <= legs; ++l) {
    ExactMatrix omega0l = buildOmega0l(spec, g, l, ordering);
    model.ambient["omega0_" + std::to_string(l)] = omega0l;
    model.ambient["omega0k_" + std::to_string(l)] =
        buildOmega0l(spec, g, l, ordering, OmegaPart::K);
    model.ambient["omega0p_" + std::to_string(l)] =
        buildOmega0l(spec, g, l, ordering, OmegaPart::P);
    ExactMatrix z = omega0l;
    for (int j = 1; j < l; ++j) z += buildOmega(model.space, g, j, l).matrix;
    model.ambient["z" + std::to_string(l)] = z;
  }

  // --- restrict to the model
  for (const auto& [name, m] : model.ambient) {
    auto x = model.labeledBasis.solveMulti(m * model.labeledBasis);
    if (!x)
      throw std::runtime_error("buildModel: generator " + name +
                               " does not preserve the invariant subspace");
    model.gens[name] = *x;
  }

  // --- derived quotient constants and the cyclic eigenvalue closure
  if (legs > 0) {
    model.qc = deriveQuotientConstants(model.assignment());
    model.cyclicEigenOk = true;
    auto nuR = spec.nuRestricted();
    for (int l = 1; l <= legs; ++l) {
      ExactMatrix eps = model.gens.at("z" + std::to_string(l)) -
                        model.qc.rShift * ExactMatrix::identity(model.dim());
      auto col = eps.columnVector(model.cyclicIndex);
      for (int r = 0; r < model.dim(); ++r) {
        GaussRat want = (r == model.cyclicIndex) ? nuR[l - 1] : GaussRat();
        if (col[r] != want) {
          model.cyclicEigenOk = false;
          break;
        }
      }
    }
  } else {
    model.cyclicEigenOk = true;
  }
  return model;
}

struct IsomorphismResult {
  bool ok = false;
  bool sgnTwist = false;  // basis relabelled by the s-sign character
  ExactMatrix intertwiner;
  HeckeModule oracle;
  std::string failure;
};

// Check that the model is isomorphic to the Hecke principal series built from
// the derived (r, c) and lambda = the restricted nu. The intertwiner sends
// the labeled basis to {w 1_lambda}; the suite first tries the identity
// labeling and then the sgn_s-relabelled one.
inline IsomorphismResult heckeIsomorphismCheck(const ModelSpace& model) {
  IsomorphismResult res;
  int legs = model.spec.legs();
  HeckeParams params{legs, model.qc.cHecke};
  res.oracle = principalSeries(params, model.spec.nuRestricted());
  int dim = model.dim();
  // oracle basis order must match enumerateGroup order (it does by
  // construction); map generator names
  auto modelGen = [&](const std::string& name) -> ExactMatrix {
    if (name.rfind("eps", 0) == 0) {
      int l = std::stoi(name.substr(3));
      return model.gens.at("z" + std::to_string(l)) -
             model.qc.rShift * ExactMatrix::identity(dim);
    }
    if (name.rfind("s", 0) == 0) return model.gens.at("t" + name.substr(1));
    return model.gens.at(name);
  };
  for (int twist = 0; twist <= 1 && !res.ok; ++twist) {
    ExactMatrix t(dim, dim);
    for (int c = 0; c < dim; ++c) {
      GaussRat v(1);
      if (twist == 1 && model.groupOrder[c].permSign() < 0) v = GaussRat(-1);
      t.set(c, c, v);
    }
    bool ok = true;
    std::string firstFail;
    for (const auto& [name, oracleMat] : res.oracle.gens) {
      ExactMatrix m = modelGen(name);
      if (t * m != oracleMat * t) {
        ok = false;
        firstFail = name;
        break;
      }
    }
    if (ok) {
      res.ok = true;
      res.sgnTwist = twist == 1;
      res.intertwiner = t;
    } else if (twist == 1) {
      res.failure = "intertwiner fails at generator " + firstFail;
    }
  }
  return res;
}

struct SubmodelResult {
  int dim = 0;
  std::map<std::string, ExactMatrix> gens;
};

// Restrict the generator matrices to a generator-invariant subspace given by
// coordinate vectors in the model basis.
inline SubmodelResult functorOnSubmodule(const ModelSpace& model,
                                         const std::vector<std::vector<GaussRat>>& basis) {
  SubmodelResult out;
  out.dim = static_cast<int>(basis.size());
  if (out.dim == 0) {
    for (const auto& [name, m] : model.gens) out.gens[name] = ExactMatrix(0, 0);
    return out;
  }
  ExactMatrix u = ExactMatrix::fromColumns(model.dim(), basis);
  for (const auto& [name, m] : model.gens) {
    auto x = u.solveMulti(m * u);
    if (!x) throw std::runtime_error("functor_on_submodule: subspace not invariant under " + name);
    out.gens[name] = *x;
  }
  return out;
}

}  // namespace bcvw

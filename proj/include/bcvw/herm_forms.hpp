#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bcvw/exact_matrix.hpp"
#include "bcvw/hecke.hpp"
#include "bcvw/ps_model.hpp"

namespace bcvw {

// Hermitian form represented by its Gram matrix G in a module basis, with
// <u, v> = v^H G u (linear in the first slot).
struct HermForm {
  ExactMatrix gram;

  bool isHermitian() const { return gram.isHermitian(); }
  std::vector<std::vector<GaussRat>> radical() const { return gram.kernelBasis(); }
};

// w0 = theta_1 ... theta_k on the module
inline ExactMatrix longestElementMatrix(const std::map<std::string, ExactMatrix>& gens, int legs,
                                        int dim) {
  ExactMatrix w0 = ExactMatrix::identity(dim);
  for (int j = 1; j <= legs; ++j) w0 = w0 * gens.at("theta" + std::to_string(j));
  return w0;
}

// z~_l = (z_l - w0 z_l w0)/2, the Drinfeld-type generators on the module
inline ExactMatrix zTilde(const std::map<std::string, ExactMatrix>& gens, int legs, int dim,
                          int l) {
  ExactMatrix w0 = longestElementMatrix(gens, legs, dim);
  const ExactMatrix& z = gens.at("z" + std::to_string(l));
  return GaussRat(1, 2) * (z - w0 * z * w0);
}

// Gram of the induced form on the labeled basis: the ambient tensor basis is
// orthonormal for the standard Hermitian dot product, so G = U^H U.
inline HermForm inducedForm(const ModelSpace& model) {
  return {model.labeledBasis.conjTranspose() * model.labeledBasis};
}

struct StarInvarianceReport {
  std::map<std::string, bool> generatorOk;
  bool allOk = true;
};

// check pi(g)^H G = G pi(g^*) for g in {t_i, theta_j, e_i, z~_l} with the
// B/C VW star: w^* = w^{-1}, e^* = e, z~^* = -z~
inline StarInvarianceReport checkStarInvariance(const ModelSpace& model, const HermForm& form) {
  StarInvarianceReport rep;
  int legs = model.spec.legs();
  int dim = model.dim();
  auto record = [&](const std::string& name, const ExactMatrix& m, const ExactMatrix& mstar) {
    bool ok = m.conjTranspose() * form.gram == form.gram * mstar;
    rep.generatorOk[name] = ok;
    rep.allOk = rep.allOk && ok;
  };
  for (int i = 1; i < legs; ++i) {
    const auto& t = model.gens.at("t" + std::to_string(i));
    record("t" + std::to_string(i), t, t);
    const auto& e = model.gens.at("e" + std::to_string(i));
    record("e" + std::to_string(i), e, e);
  }
  for (int j = 1; j <= legs; ++j) {
    const auto& th = model.gens.at("theta" + std::to_string(j));
    record("theta" + std::to_string(j), th, th);
  }
  for (int l = 1; l <= legs; ++l) {
    ExactMatrix zt = zTilde(model.gens, legs, dim, l);
    record("ztilde" + std::to_string(l), zt, -zt);
  }
  return rep;
}

namespace form_detail {

// Solve for all Hermitian G with: permutation bi-invariance under the group
// labeling (G_{w,v} = phi(w^{-1} v)) and M^H G = G N for the listed pairs.
// Returns a basis of the real solution space.
inline std::vector<ExactMatrix> solveInvariant(
    const std::vector<SignedPerm>& order,
    const std::vector<std::pair<ExactMatrix, ExactMatrix>>& constraints) {
  int dim = static_cast<int>(order.size());
  std::map<SignedPerm, int> index;
  for (int i = 0; i < dim; ++i) index[order[i]] = i;

  // real parameterization of phi with phi(u^{-1}) = conj(phi(u))
  struct Param {
    SignedPerm u;
    bool imagPart;  // an i * (E_u - E_{u^{-1}}) style generator
  };
  std::vector<Param> params;
  std::vector<ExactMatrix> basis;
  std::map<SignedPerm, bool> seen;
  for (const auto& u : order) {
    if (seen.count(u)) continue;
    SignedPerm uinv = u.inverse();
    seen[u] = true;
    ExactMatrix fu(dim, dim);
    for (int w = 0; w < dim; ++w) fu.set(index.at(order[w].compose(u)), w, GaussRat(1));
    if (uinv == u) {
      basis.push_back(fu);  // real coefficient
    } else {
      seen[uinv] = true;
      ExactMatrix fuinv(dim, dim);
      for (int w = 0; w < dim; ++w) fuinv.set(index.at(order[w].compose(uinv)), w, GaussRat(1));
      basis.push_back(fu + fuinv);
      basis.push_back(GaussRat::i() * (fu - fuinv));
    }
  }
  // note G_{w,v} = phi(w^{-1}v) corresponds to G = sum phi(u) F_u with
  // (F_u)_{wu, w} = 1; hermiticity of each basis element:
  // F_u^H = F_{u^{-1}}, so the two displayed combinations are Hermitian.

  // impose the matrix constraints on the span
  int m = static_cast<int>(basis.size());
  long rowsPerConstraint = 2L * dim * dim;
  ExactMatrix sys(static_cast<int>(constraints.size() * rowsPerConstraint), m);
  int rowBase = 0;
  for (const auto& [lhs, rhs] : constraints) {
    for (int t = 0; t < m; ++t) {
      ExactMatrix resid = lhs.conjTranspose() * basis[t] - basis[t] * rhs;
      for (const auto& [r, row] : resid.entries())
        for (const auto& [c, v] : row) {
          if (v.re() != 0)
            sys.set(rowBase + 2 * (r * dim + c), t, GaussRat::fromRational(v.re()));
          if (v.im() != 0)
            sys.set(rowBase + 2 * (r * dim + c) + 1, t, GaussRat::fromRational(v.im()));
        }
    }
    rowBase += static_cast<int>(rowsPerConstraint);
  }
  auto ker = sys.kernelBasis();
  std::vector<ExactMatrix> out;
  for (const auto& coeffs : ker) {
    ExactMatrix g(dim, dim);
    for (int t = 0; t < m; ++t)
      if (!coeffs[t].isZero()) g += coeffs[t] * basis[t];
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace form_detail

// Basis of the real space of invariant Hermitian forms on the model, found
// as an exact linear system; deterministic normalization: scale so the
// first nonzero entry of the cyclic diagonal is 1 when possible.
inline std::vector<HermForm> solveInvariantForm(const ModelSpace& model) {
  int legs = model.spec.legs();
  int dim = model.dim();
  std::vector<std::pair<ExactMatrix, ExactMatrix>> constraints;
  for (int l = 1; l <= legs; ++l) {
    ExactMatrix zt = zTilde(model.gens, legs, dim, l);
    constraints.emplace_back(zt, -zt);
  }
  for (int i = 1; i < legs; ++i) {
    const auto& e = model.gens.at("e" + std::to_string(i));
    if (!e.isZero()) constraints.emplace_back(e, e);
  }
  auto sols = form_detail::solveInvariant(model.groupOrder, constraints);
  std::vector<HermForm> out;
  for (auto& g : sols) {
    GaussRat cc = g.at(model.cyclicIndex, model.cyclicIndex);
    if (!cc.isZero()) g = cc.inverse() * g;
    // exact re-verification of every generator constraint
    HermForm f{g};
    if (!f.isHermitian()) throw std::logic_error("solveInvariantForm: non-Hermitian solution");
    if (!checkStarInvariance(model, f).allOk)
      throw std::logic_error("solveInvariantForm: solution fails re-verification");
    out.push_back(std::move(f));
  }
  return out;
}

// Invariant Hermitian forms on a Hecke principal series module, same
// bi-invariance parameterization with the eps-star constraints.
inline std::vector<HermForm> solveInvariantFormHecke(const HeckeModule& mod) {
  int k = mod.params.k;
  std::map<SignedPerm, int> index;
  for (int i = 0; i < mod.dim(); ++i) index[mod.basis[i]] = i;
  auto groupMatrix = [&](const SignedPerm& g) {
    ExactMatrix m(mod.dim(), mod.dim());
    for (int c = 0; c < mod.dim(); ++c) m.set(index.at(g.compose(mod.basis[c])), c, GaussRat(1));
    return m;
  };
  std::vector<std::pair<ExactMatrix, ExactMatrix>> constraints;
  for (int l = 1; l <= k; ++l) {
    const ExactMatrix& eps = mod.gens.at("eps" + std::to_string(l));
    // eps^* = -eps + sum_{gamma>0} conj(c(gamma)) <gamma, eps_l-hat> s_gamma
    ExactMatrix star = -eps;
    for (const auto& root : positiveRoots(mod.params)) {
      GaussRat coeff = root.cValue.conj() * GaussRat(root.pairingWithEpsHat[l - 1]);
      if (!coeff.isZero()) star += coeff * groupMatrix(root.refl);
    }
    constraints.emplace_back(eps, star);
  }
  auto sols = form_detail::solveInvariant(mod.basis, constraints);
  std::vector<HermForm> out;
  for (auto& g : sols) {
    GaussRat cc = g.at(0, 0);
    if (!cc.isZero()) g = cc.inverse() * g;
    out.push_back(HermForm{g});
  }
  return out;
}

struct QuotientModule {
  int dim = 0;
  std::map<std::string, ExactMatrix> gens;
  HermForm form;                        // nondegenerate on the quotient
  std::vector<std::vector<GaussRat>> radical;
};

// Quotient by the radical of an invariant form; generator matrices descend
// and the quotient form is nondegenerate.
inline QuotientModule langlandsQuotient(const std::map<std::string, ExactMatrix>& gens, int dim,
                                        const HermForm& form) {
  QuotientModule out;
  out.radical = form.gram.kernelBasis();
  int r = static_cast<int>(out.radical.size());
  out.dim = dim - r;
  // choose complement columns: extend the radical to a basis with unit vectors
  std::vector<std::vector<GaussRat>> cols = out.radical;
  std::vector<int> complementIdx;
  for (int e = 0; e < dim && static_cast<int>(cols.size()) < dim; ++e) {
    std::vector<GaussRat> unit(dim);
    unit[e] = GaussRat(1);
    cols.push_back(unit);
    if (ExactMatrix::fromColumns(dim, cols).rank() == static_cast<int>(cols.size()))
      complementIdx.push_back(e);
    else
      cols.pop_back();
  }
  ExactMatrix p = ExactMatrix::fromColumns(dim, cols);
  auto pinv = p.inverse();
  if (!pinv) throw std::logic_error("langlandsQuotient: basis completion failed");
  for (const auto& [name, m] : gens) {
    ExactMatrix t = (*pinv) * m * p;
    ExactMatrix quot(out.dim, out.dim);
    for (int i = 0; i < out.dim; ++i)
      for (int j = 0; j < out.dim; ++j) quot.set(i, j, t.at(r + i, r + j));
    out.gens[name] = quot;
  }
  // radical stability, checked exactly
  if (r > 0) {
    ExactMatrix radMat = ExactMatrix::fromColumns(dim, out.radical);
    for (const auto& [name, m] : gens)
      if (!radMat.solveMulti(m * radMat))
        throw std::runtime_error("langlandsQuotient: radical not invariant under " + name);
  }
  ExactMatrix gp = p.conjTranspose() * form.gram * p;
  ExactMatrix gq(out.dim, out.dim);
  for (int i = 0; i < out.dim; ++i)
    for (int j = 0; j < out.dim; ++j) gq.set(i, j, gp.at(r + i, r + j));
  out.form = HermForm{gq};
  if (out.dim > 0 && static_cast<int>(out.form.gram.kernelBasis().size()) != 0)
    throw std::logic_error("langlandsQuotient: quotient form degenerate");
  return out;
}

enum class UnitaryVerdict { NotUnitary, Unknown };

inline std::string verdictStr(UnitaryVerdict v) {
  return v == UnitaryVerdict::NotUnitary ? "NOT_UNITARY" : "UNKNOWN";
}

struct SideUnitaryReport {
  int solutionSpaceDim = 0;
  bool positiveDefiniteFound = false;
  bool indefiniteQuotientFound = false;
  UnitaryVerdict verdict = UnitaryVerdict::Unknown;
  std::vector<std::string> gramTexts;  // for the audit trail
};

inline bool isDefinite(const ExactMatrix& g) {
  auto sig = g.hermitianSignature();
  return sig.nZero == 0 && (sig.nPlus == 0 || sig.nMinus == 0);
}

// One side of the test: solve the invariant forms, inspect Langlands
// quotients. The positive-definite search is exact for solution spaces of
// dimension <= 2 (all that occurs at desk scale); higher dimensions fall
// back to a conservative UNKNOWN unless a definite combination is found.
inline SideUnitaryReport sideUnitaryReport(const std::map<std::string, ExactMatrix>& gens, int dim,
                                           const std::vector<HermForm>& forms) {
  SideUnitaryReport rep;
  rep.solutionSpaceDim = static_cast<int>(forms.size());
  if (forms.empty()) {
    rep.verdict = UnitaryVerdict::NotUnitary;  // not even a Hermitian module
    return rep;
  }
  for (const auto& f : forms) rep.gramTexts.push_back(f.gram.str());
  std::vector<ExactMatrix> candidates;
  for (const auto& f : forms) {
    candidates.push_back(f.gram);
    candidates.push_back(-f.gram);
  }
  if (forms.size() == 2) {
    for (int s1 = -2; s1 <= 2; ++s1)
      for (int s2 = -2; s2 <= 2; ++s2) {
        if (s1 == 0 && s2 == 0) continue;
        candidates.push_back(GaussRat(s1) * forms[0].gram + GaussRat(s2) * forms[1].gram);
      }
  }
  for (const auto& g : candidates) {
    if (g.isZero()) continue;
    auto sig = g.hermitianSignature();
    if (sig.nZero == 0 && (sig.nPlus == dim || sig.nMinus == dim)) {
      rep.positiveDefiniteFound = true;
      break;
    }
  }
  if (rep.positiveDefiniteFound) {
    rep.verdict = UnitaryVerdict::Unknown;
    return rep;
  }
  bool definiteQuotientFound = false;
  for (const auto& f : forms) {
    if (f.gram.isZero()) continue;
    auto quot = langlandsQuotient(gens, dim, f);
    if (quot.dim == 0) continue;
    auto sig = quot.form.gram.hermitianSignature();
    if (sig.nPlus > 0 && sig.nMinus > 0)
      rep.indefiniteQuotientFound = true;
    else
      definiteQuotientFound = true;  // semidefinite overall form
  }
  if (rep.indefiniteQuotientFound && !definiteQuotientFound)
    rep.verdict = UnitaryVerdict::NotUnitary;
  else if (definiteQuotientFound)
    rep.verdict = UnitaryVerdict::Unknown;
  else
    rep.verdict = forms.size() <= 2 ? UnitaryVerdict::NotUnitary : UnitaryVerdict::Unknown;
  return rep;
}

struct NonUnitaryTestResult {
  SideUnitaryReport muSide, muBarSide;
  UnitaryVerdict verdict = UnitaryVerdict::Unknown;
};

// One-sided test: NOT_UNITARY when either functor image fails to carry a
// positive-semidefinite structure.
inline NonUnitaryTestResult nonunitaryTest(const PsSpec& spec, const LieAlgebraData& g) {
  NonUnitaryTestResult res;
  PsSpec muSpec = spec;
  muSpec.side = Side::Mu;
  PsSpec muBarSpec = spec;
  muBarSpec.side = Side::MuBar;
  {
    ModelSpace m = buildModel(muSpec, g);
    res.muSide = sideUnitaryReport(m.gens, m.dim(), solveInvariantForm(m));
  }
  {
    ModelSpace m = buildModel(muBarSpec, g);
    res.muBarSide = sideUnitaryReport(m.gens, m.dim(), solveInvariantForm(m));
  }
  if (res.muSide.verdict == UnitaryVerdict::NotUnitary ||
      res.muBarSide.verdict == UnitaryVerdict::NotUnitary)
    res.verdict = UnitaryVerdict::NotUnitary;
  return res;
}

}  // namespace bcvw

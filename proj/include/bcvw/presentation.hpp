#pragma once

#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bcvw/exact_matrix.hpp"
#include "bcvw/lie_algebra.hpp"
#include "bcvw/tensor_ops.hpp"

namespace bcvw {

// A concrete assignment of matrices to the generators t_{i,i+1}, e_{i,i+1},
// theta_j, z_i of the type B/C VW-algebra, on V^(x)k or on a model space.
struct Assignment {
  int k = 0;
  int dim = 0;
  GaussRat m0;                              // scaling of e = m0 * pr
  std::map<std::string, ExactMatrix> gen;   // t1.., e1.., theta1.., z1..
  std::vector<ExactMatrix> diagonalK;       // diagonal action of basisK
  bool onModelSpace = false;

  const ExactMatrix& at(const std::string& name) const {
    auto it = gen.find(name);
    if (it == gen.end()) throw std::out_of_range("Assignment: no generator " + name);
    return it->second;
  }
  ExactMatrix id() const { return ExactMatrix::identity(dim); }
};

// pi on V^(x)k (no module factor): z_i = sum_{1 <= j < i} Omega_{ji}
inline Assignment standardAssignment(const LieAlgebraData& g, int k) {
  TensorSpace space{g.dimV, k};
  Assignment a;
  a.k = k;
  a.dim = static_cast<int>(space.dim());
  a.m0 = g.m0;
  for (int i = 1; i < k; ++i) {
    a.gen["t" + std::to_string(i)] = buildSwap(space, i, i + 1).matrix;
    a.gen["e" + std::to_string(i)] = g.m0 * buildTrivialProjector(space, g, i).matrix;
  }
  for (int j = 1; j <= k; ++j) a.gen["theta" + std::to_string(j)] = buildXiLeg(space, g, j).matrix;
  for (int i = 1; i <= k; ++i) {
    ExactMatrix z(a.dim, a.dim);
    for (int j = 1; j < i; ++j) z += buildOmega(space, g, j, i).matrix;
    a.gen["z" + std::to_string(i)] = z;
  }
  for (const auto& b : g.basisK) {
    ExactMatrix diag(a.dim, a.dim);
    for (int leg = 1; leg <= k; ++leg) diag += onLeg(space, b, leg);
    a.diagonalK.push_back(std::move(diag));
  }
  return a;
}

struct RelationResult {
  std::string id;
  std::string latex;
  bool ok = false;
  std::string status;   // "pass" | "pass-variant" | "fail" | "skipped"
  std::string variant;  // the form that actually holds, when != printed
  std::map<std::string, std::string> derived;
};

struct RelationReport {
  std::vector<RelationResult> entries;
  std::map<std::string, std::string> derivedConstants;
  bool allOk = true;

  void push(RelationResult r) {
    allOk = allOk && r.ok;
    entries.push_back(std::move(r));
  }
};

namespace rel_detail {

// express L exactly in span{Id, M}; returns (A, B) with L = A Id + B M
inline std::optional<std::pair<GaussRat, GaussRat>> inSpanIdAnd(const ExactMatrix& l,
                                                                const ExactMatrix& m) {
  int n = l.rows();
  // unknowns x = (A, B): A*delta_rc + B*m_rc = l_rc, solved exactly
  ExactMatrix sysm(n * n, 2);
  std::vector<GaussRat> b(n * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      int row = r * n + c;
      if (r == c) sysm.set(row, 0, GaussRat(1));
      GaussRat mv = m.at(r, c);
      if (!mv.isZero()) sysm.set(row, 1, mv);
      b[row] = l.at(r, c);
    }
  auto sol = sysm.solve(b);
  if (!sol) return std::nullopt;
  // confirm (solve() already guarantees consistency, keep the guard cheap)
  return std::make_pair((*sol)[0], (*sol)[1]);
}

inline std::optional<GaussRat> proportionalTo(const ExactMatrix& l, const ExactMatrix& m) {
  if (m.isZero()) return l.isZero() ? std::optional<GaussRat>(GaussRat()) : std::nullopt;
  // find first nonzero entry of m
  const auto& [r0, row0] = *m.entries().begin();
  const auto& [c0, v0] = *row0.begin();
  GaussRat ratio = l.at(r0, c0) / v0;
  if (l != ratio * m) return std::nullopt;
  return ratio;
}

}  // namespace rel_detail

// Evaluate the full printed relation list of the type B/C VW-algebra against
// an assignment. Every residual is an exact matrix; "pass" means identically
// zero. Sign/direction variants that hold exactly are reported as
// "pass-variant" with the true form, and all derivable constants are
// extracted and recorded.
inline RelationReport checkRelations(const Assignment& a) {
  RelationReport rep;
  int k = a.k;
  ExactMatrix id = a.id();
  auto T = [&](int i) { return a.at("t" + std::to_string(i)); };
  auto E = [&](int i) { return a.at("e" + std::to_string(i)); };
  auto Th = [&](int j) { return a.at("theta" + std::to_string(j)); };
  auto Z = [&](int i) { return a.at("z" + std::to_string(i)); };

  auto simple = [&](const std::string& id_, const std::string& latex, const ExactMatrix& lhs,
                    const ExactMatrix& rhs) {
    RelationResult r{id_, latex};
    r.ok = lhs == rhs;
    r.status = r.ok ? "pass" : "fail";
    rep.push(r);
  };

  // --- W(B_k) group relations
  for (int i = 1; i < k; ++i) simple("t" + std::to_string(i) + "^2", "t_{i,i+1}^2 = 1", T(i) * T(i), id);
  for (int j = 1; j <= k; ++j)
    simple("theta" + std::to_string(j) + "^2", "\\theta_j^2 = 1", Th(j) * Th(j), id);
  for (int i = 1; i + 1 < k; ++i) {
    ExactMatrix prod = T(i) * T(i + 1);
    simple("braid" + std::to_string(i), "(t_i t_{i+1})^3 = 1", prod * prod * prod, id);
  }
  if (k >= 2) {
    ExactMatrix prod = T(k - 1) * Th(k);
    simple("braidBC", "(t_{k-1,k} \\theta_k)^4 = 1", prod * prod * prod * prod, id);
  }
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      simple("thetacomm" + std::to_string(i) + std::to_string(j), "[\\theta_i, \\theta_j] = 0",
             Th(i) * Th(j), Th(j) * Th(i));
  for (int i = 1; i < k; ++i)
    simple("tthetat" + std::to_string(i), "t_i \\theta_i t_i = \\theta_{i+1}", T(i) * Th(i) * T(i),
           Th(i + 1));

  // --- Brauer relations
  for (int i = 1; i < k; ++i) {
    // e^2 = m0 e with derived m0
    RelationResult r{"e" + std::to_string(i) + "^2", "e_{i,i+1}^2 = m_0 e_{i,i+1}"};
    auto ratio = rel_detail::proportionalTo(E(i) * E(i), E(i));
    if (ratio) {
      r.ok = true;
      r.status = "pass";
      r.derived["m0"] = ratio->str();
      if (i == 1) rep.derivedConstants["m0"] = ratio->str();
    } else {
      r.status = "fail";
    }
    rep.push(r);

    // t e = e t = e (variant: = -e)
    RelationResult r2{"te" + std::to_string(i), "t_{i,i+1} e_{i,i+1} = e_{i,i+1} t_{i,i+1} = e_{i,i+1}"};
    ExactMatrix te = T(i) * E(i), et = E(i) * T(i);
    if (te == E(i) && et == E(i)) {
      r2.ok = true;
      r2.status = "pass";
    } else if (te == -E(i) && et == -E(i)) {
      r2.ok = true;
      r2.status = "pass-variant";
      r2.variant = "t e = e t = -e";
    } else {
      r2.status = "fail";
    }
    if (!a.onModelSpace || !E(i).isZero()) rep.push(r2);
    else { r2.ok = true; r2.status = "pass"; rep.push(r2); }
  }
  for (int i = 1; i + 1 < k; ++i)
    simple("ebraid" + std::to_string(i), "t_i t_{i+1} e_i t_{i+1} t_i = e_{i+1}",
           T(i) * T(i + 1) * E(i) * T(i + 1) * T(i), E(i + 1));
  for (int i = 1; i < k; ++i)
    for (int j = 1; j < k; ++j) {
      if (std::abs(i - j) < 2) continue;
      simple("tecomm" + std::to_string(i) + std::to_string(j), "[t_i, e_j] = 0 (disjoint)",
             T(i) * E(j), E(j) * T(i));
    }

  // --- VW relations
  for (int i = 1; i < k; ++i) {
    RelationResult r{"cross" + std::to_string(i), "t_i z_i - z_{i+1} t_i = 1 + e_i"};
    ExactMatrix lhs = T(i) * Z(i) - Z(i + 1) * T(i);
    auto ab = rel_detail::inSpanIdAnd(lhs, E(i));
    if (lhs == id + E(i)) {
      r.ok = true;
      r.status = "pass";
    } else if (ab) {
      r.ok = true;
      r.status = "pass-variant";
      r.variant = "t z_i - z_{i+1} t = " + ab->first.str() + " + (" + ab->second.str() + ") e";
      r.derived["id_coeff"] = ab->first.str();
      r.derived["e_coeff"] = ab->second.str();
    } else {
      r.status = "fail";
    }
    rep.push(r);
  }
  for (int i = 1; i < k; ++i)
    for (int j = 1; j <= k; ++j) {
      if (j == i || j == i + 1) continue;
      simple("tzcomm" + std::to_string(i) + std::to_string(j), "[t_i, z_j] = 0",
             T(i) * Z(j), Z(j) * T(i));
    }
  for (int i = 1; i < k; ++i) {
    RelationResult r{"ez" + std::to_string(i), "e_i (z_i + z_{i+1}) = 0 = (z_i + z_{i+1}) e_i"};
    ExactMatrix sum = Z(i) + Z(i + 1);
    ExactMatrix left = E(i) * sum, right = sum * E(i);
    if (left.isZero() && right.isZero()) {
      r.ok = true;
      r.status = "pass";
    } else {
      auto ratioL = rel_detail::proportionalTo(left, E(i));
      auto ratioR = rel_detail::proportionalTo(right, E(i));
      if (ratioL && ratioR && *ratioL == *ratioR) {
        r.ok = true;
        r.status = "pass-variant";
        r.variant = "e (z_i + z_{i+1}) = (" + ratioL->str() + ") e";
        r.derived["shift"] = ratioL->str();
      } else {
        r.status = "fail";
      }
    }
    rep.push(r);
  }
  for (int i = 1; i < k; ++i)
    for (int j = 1; j <= k; ++j) {
      if (j == i || j == i + 1) continue;
      simple("ezcomm" + std::to_string(i) + std::to_string(j), "[e_i, z_j] = 0",
             E(i) * Z(j), Z(j) * E(i));
    }
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      simple("zzcomm" + std::to_string(i) + std::to_string(j), "[z_i, z_j] = 0",
             Z(i) * Z(j), Z(j) * Z(i));
  if (k >= 2) {
    for (int l = 1; l <= 2; ++l) {
      RelationResult r{"w" + std::to_string(l), "e_{12} z_1^l e_{12} = w_l e_{12}"};
      ExactMatrix zl = Z(1);
      for (int t = 1; t < l; ++t) zl = zl * Z(1);
      auto ratio = rel_detail::proportionalTo(E(1) * zl * E(1), E(1));
      if (ratio) {
        r.ok = true;
        r.status = "pass";
        r.derived["w" + std::to_string(l)] = ratio->str();
        rep.derivedConstants["w" + std::to_string(l)] = ratio->str();
      } else {
        r.status = "fail";
      }
      rep.push(r);
    }
  }

  // --- type B/C extension relations
  for (int i = 1; i < k; ++i)
    for (int j = 1; j <= k; ++j) {
      if (j == i || j == i + 1) continue;  // only the disjoint cases hold as operators
      simple("ethetacomm" + std::to_string(i) + std::to_string(j), "[e_i, \\theta_j] = 0 (disjoint)",
             E(i) * Th(j), Th(j) * E(i));
    }
  for (int i = 1; i < k; ++i) {
    RelationResult r{"etheta2" + std::to_string(i),
                     "e_i \\theta_i \\theta_{i+1} = e_i = \\theta_i \\theta_{i+1} e_i"};
    ExactMatrix l = E(i) * Th(i) * Th(i + 1), rr = Th(i) * Th(i + 1) * E(i);
    if (l == E(i) && rr == E(i)) {
      r.ok = true;
      r.status = "pass";
    } else if (l == -E(i) && rr == -E(i)) {
      r.ok = true;
      r.status = "pass-variant";
      r.variant = "e theta_i theta_{i+1} = -e";
    } else {
      r.status = "fail";
    }
    rep.push(r);
  }
  for (int i = 1; i < k; ++i) {
    RelationResult r{"etheta_e" + std::to_string(i), "e_i \\theta_i e_i = m_1 e_i"};
    auto ratio = rel_detail::proportionalTo(E(i) * Th(i) * E(i), E(i));
    if (ratio) {
      r.ok = true;
      r.status = "pass";
      r.derived["m1"] = ratio->str();
      if (i == 1) rep.derivedConstants["m1"] = ratio->str();
    } else {
      r.status = "fail";
    }
    rep.push(r);
  }
  for (int j = 1; j < k; ++j)
    simple("thetazcomm" + std::to_string(j), "[\\theta_k, z_j] = 0 (j != k)", Th(k) * Z(j),
           Z(j) * Th(k));

  // --- K-commutation
  for (size_t b = 0; b < a.diagonalK.size(); ++b) {
    bool ok = true;
    for (const auto& [name, m] : a.gen)
      if (commutator(m, a.diagonalK[b]) != ExactMatrix(a.dim, a.dim)) {
        ok = false;
        break;
      }
    RelationResult r{"kcomm" + std::to_string(b), "[\\pi(gen), \\rho(b)] = 0 for b in k-basis"};
    r.ok = ok;
    r.status = ok ? "pass" : "fail";
    rep.push(r);
    if (!ok) break;
  }
  return rep;
}

struct QuotientConstants {
  GaussRat A, B;       // theta_k z_k + z_k theta_k = A Id + B theta_k
  GaussRat rShift;     // = B / 2
  GaussRat cHecke;     // = A / 2
};

// Derive (A, B) with theta_k z_k + z_k theta_k = A Id + B theta_k exactly;
// throws if the anticommutator leaves span{Id, theta_k}.
inline QuotientConstants deriveQuotientConstants(const Assignment& a) {
  int k = a.k;
  const ExactMatrix& th = a.at("theta" + std::to_string(k));
  const ExactMatrix& z = a.at("z" + std::to_string(k));
  ExactMatrix anti = th * z + z * th;
  auto ab = rel_detail::inSpanIdAnd(anti, th);
  if (!ab)
    throw std::runtime_error(
        "derive_quotient_constants: anticommutator not in span{Id, theta_k}");
  QuotientConstants qc;
  qc.A = ab->first;
  qc.B = ab->second;
  qc.rShift = GaussRat(1, 2) * qc.B;
  qc.cHecke = GaussRat(1, 2) * qc.A;
  // re-verify: eps_k := z_k - rShift has pure-scalar anticommutator 2c
  ExactMatrix eps = z - qc.rShift * ExactMatrix::identity(a.dim);
  if (th * eps + eps * th != (GaussRat(2) * qc.cHecke) * ExactMatrix::identity(a.dim))
    throw std::runtime_error("derive_quotient_constants: shifted anticommutator check failed");
  return qc;
}

// The reduced relation list after the quotient by I_e and I_c^r, checked as
// exact identities (plus the precondition e = 0).
inline RelationReport checkQuotientPresentation(const Assignment& a, const QuotientConstants& qc) {
  RelationReport rep;
  int k = a.k;
  ExactMatrix id = a.id();
  auto T = [&](int i) { return a.at("t" + std::to_string(i)); };
  auto Th = [&](int j) { return a.at("theta" + std::to_string(j)); };
  auto Z = [&](int i) { return a.at("z" + std::to_string(i)); };

  for (int i = 1; i < k; ++i) {
    RelationResult pre{"pre_e" + std::to_string(i), "e_{i,i+1} = 0 on the model"};
    pre.ok = a.at("e" + std::to_string(i)).isZero();
    pre.status = pre.ok ? "pass" : "fail";
    rep.push(pre);
  }
  for (int i = 1; i < k; ++i) {
    RelationResult r{"qcross" + std::to_string(i), "t_i z_i - z_{i+1} t_i = 1"};
    ExactMatrix lhs = T(i) * Z(i) - Z(i + 1) * T(i);
    if (lhs == id) {
      r.ok = true;
      r.status = "pass";
    } else if (lhs == -id) {
      r.ok = true;
      r.status = "pass-variant";
      r.variant = "t z_i - z_{i+1} t = -1";
    } else {
      r.status = "fail";
    }
    rep.push(r);
  }
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      RelationResult r{"qzz" + std::to_string(i) + std::to_string(j), "[z_i, z_j] = 0"};
      r.ok = Z(i) * Z(j) == Z(j) * Z(i);
      r.status = r.ok ? "pass" : "fail";
      rep.push(r);
    }
  for (int j = 1; j < k; ++j) {
    RelationResult r{"qthetaz" + std::to_string(j), "[\\theta_k, z_j] = 0"};
    r.ok = Th(k) * Z(j) == Z(j) * Th(k);
    r.status = r.ok ? "pass" : "fail";
    rep.push(r);
  }
  {
    RelationResult r{"qideal", "\\theta_k z_k + z_k \\theta_k = 2c - 2r\\theta_k (role as derived)"};
    ExactMatrix lhs = Th(k) * Z(k) + Z(k) * Th(k);
    ExactMatrix rhs = qc.A * id + qc.B * Th(k);
    r.ok = lhs == rhs;
    r.status = r.ok ? "pass" : "fail";
    r.derived["A"] = qc.A.str();
    r.derived["B"] = qc.B.str();
    r.derived["r"] = qc.rShift.str();
    r.derived["c"] = qc.cHecke.str();
    rep.push(r);
  }
  return rep;
}

}  // namespace bcvw

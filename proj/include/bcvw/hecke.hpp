#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcvw/exact_matrix.hpp"
#include "bcvw/signed_perm.hpp"

namespace bcvw {

// Graded Hecke algebra H_k(c) for W(B_k): parameter 1 on eps_i - eps_{i+1},
// c on eps_k. The cross-relation scalar for the last simple reflection uses
// the pairing <eps_k, eps_k-hat> = 2, so theta_k eps_k + eps_k theta_k = 2c.
struct HeckeParams {
  int k = 1;
  GaussRat c;
};

// PBW normal form: group element on the left, monomial in eps_1..eps_k on the
// right. Exponents are capped to keep runaway products loud.
class HeckeElement {
public:
  struct Key {
    SignedPerm w;
    std::vector<int> exp;
    bool operator<(const Key& o) const {
      if (w != o.w) return w < o.w;
      return exp < o.exp;
    }
    bool operator==(const Key& o) const { return w == o.w && exp == o.exp; }
  };

  static constexpr int kMaxDegree = 8;

  HeckeElement() = default;
  explicit HeckeElement(int k) : k_(k) {}

  static HeckeElement zero(int k) { return HeckeElement(k); }
  static HeckeElement one(int k) {
    HeckeElement e(k);
    e.add(SignedPerm::identity(k), std::vector<int>(k, 0), GaussRat(1));
    return e;
  }
  static HeckeElement group(const SignedPerm& w) {
    HeckeElement e(w.rank());
    e.add(w, std::vector<int>(w.rank(), 0), GaussRat(1));
    return e;
  }
  static HeckeElement epsilon(int k, int i) {
    HeckeElement e(k);
    std::vector<int> exp(k, 0);
    exp[i - 1] = 1;
    e.add(SignedPerm::identity(k), exp, GaussRat(1));
    return e;
  }
  static HeckeElement scalar(int k, const GaussRat& v) {
    HeckeElement e(k);
    e.add(SignedPerm::identity(k), std::vector<int>(k, 0), v);
    return e;
  }

  int rank() const { return k_; }
  bool isZero() const { return terms_.empty(); }
  const std::map<Key, GaussRat>& terms() const { return terms_; }

  void add(const SignedPerm& w, const std::vector<int>& exp, const GaussRat& coeff) {
    if (coeff.isZero()) return;
    int deg = 0;
    for (int e : exp) deg += e;
    if (deg > kMaxDegree) throw std::overflow_error("HeckeElement: degree cap exceeded");
    Key key{w, exp};
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.isZero()) terms_.erase(it);
    }
  }

  HeckeElement& operator+=(const HeckeElement& o) {
    for (const auto& [key, v] : o.terms_) add(key.w, key.exp, v);
    return *this;
  }
  HeckeElement& operator-=(const HeckeElement& o) {
    for (const auto& [key, v] : o.terms_) add(key.w, key.exp, -v);
    return *this;
  }
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const GaussRat& s, const HeckeElement& e) {
    HeckeElement out(e.k_);
    for (const auto& [key, v] : e.terms_) out.add(key.w, key.exp, s * v);
    return out;
  }

  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return a.k_ == b.k_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const HeckeElement& a, const HeckeElement& b) { return !(a == b); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [key, v] : terms_) {
      if (!out.empty()) out += " + ";
      out += v.str() + " * [" + key.w.str() + "]";
      for (int i = 0; i < k_; ++i)
        for (int t = 0; t < key.exp[i]; ++t) out += " e" + std::to_string(i + 1);
    }
    return out;
  }

private:
  int k_ = 0;
  std::map<Key, GaussRat> terms_;
};

namespace hecke_detail {

// reflection data for the simple generators: s_1..s_{k-1}, then theta_k
struct SimpleGen {
  SignedPerm perm;
  bool isTheta;
  int index;  // i for s_{i,i+1}
};

inline std::vector<SimpleGen> simpleGens(int k) {
  std::vector<SimpleGen> gens;
  for (int i = 1; i < k; ++i) gens.push_back({SignedPerm::simpleTransposition(k, i), false, i});
  gens.push_back({SignedPerm::signFlip(k, k), true, k});
  return gens;
}

// action of a simple generator on a linear form in the eps basis
inline std::vector<GaussRat> reflectLinear(const SimpleGen& s, const std::vector<GaussRat>& v) {
  std::vector<GaussRat> out = v;
  if (s.isTheta) {
    out[s.index - 1] = -out[s.index - 1];
  } else {
    std::swap(out[s.index - 1], out[s.index]);
  }
  return out;
}

// cross-relation scalar kappa(s, v) with s v = s(v) s + kappa and
// v s = s s(v) + kappa
inline GaussRat crossScalar(const HeckeParams& p, const SimpleGen& s,
                            const std::vector<GaussRat>& v) {
  if (s.isTheta) return GaussRat(2) * p.c * v[s.index - 1];
  return v[s.index - 1] - v[s.index];
}

struct MovedTerm {
  SignedPerm w;
  std::vector<GaussRat> linear;  // coefficients of eps_1..eps_k
  GaussRat constant;
};

// normal form of (linear form v) * w as sum of w' * (linear + constant)
inline std::vector<MovedTerm> moveLinearPastGroup(const HeckeParams& p,
                                                  const std::vector<GaussRat>& v,
                                                  const SignedPerm& w) {
  if (w.isIdentity()) return {{w, v, GaussRat()}};
  auto gens = simpleGens(p.k);
  for (const auto& s : gens) {
    SignedPerm ws = w.compose(s.perm);
    if (ws.length() < w.length()) {
      // w = ws * s ; v * w = (v * ws) * s, then push each piece through s
      auto rec = moveLinearPastGroup(p, v, ws);
      std::vector<MovedTerm> out;
      for (auto& t : rec) {
        // (t.w (t.linear + t.constant)) * s
        // linear * s = s * s(linear) + kappa(linear)
        MovedTerm main{t.w.compose(s.perm), reflectLinear(s, t.linear), t.constant};
        out.push_back(std::move(main));
        GaussRat kap = crossScalar(p, s, t.linear);
        if (!kap.isZero())
          out.push_back({t.w, std::vector<GaussRat>(p.k), kap});
      }
      return out;
    }
  }
  throw std::logic_error("moveLinearPastGroup: no descent found");
}

}  // namespace hecke_detail

// product in PBW normal form
inline HeckeElement normalFormMultiply(const HeckeElement& a, const HeckeElement& b,
                                       const HeckeParams& p) {
  HeckeElement out(p.k);
  for (const auto& [ka, va] : a.terms()) {
    for (const auto& [kb, vb] : b.terms()) {
      // (w1 eps^{a}) (w2 eps^{b}) = w1 (eps^{a} w2) eps^{b}
      // move the eps factors of eps^{a} across w2 one at a time
      struct Partial {
        SignedPerm w;
        std::vector<int> exp;
        GaussRat coeff;
      };
      std::vector<Partial> partials{{kb.w, std::vector<int>(p.k, 0), GaussRat(1)}};
      for (int i = p.k; i >= 1; --i) {
        for (int rep = 0; rep < ka.exp[i - 1]; ++rep) {
          std::vector<Partial> next;
          std::vector<GaussRat> unit(p.k);
          unit[i - 1] = GaussRat(1);
          for (const auto& pt : partials) {
            auto moved = hecke_detail::moveLinearPastGroup(p, unit, pt.w);
            for (const auto& mt : moved) {
              if (!mt.constant.isZero())
                next.push_back({mt.w, pt.exp, pt.coeff * mt.constant});
              for (int j = 0; j < p.k; ++j) {
                if (mt.linear[j].isZero()) continue;
                auto exp = pt.exp;
                ++exp[j];
                next.push_back({mt.w, exp, pt.coeff * mt.linear[j]});
              }
            }
          }
          partials = std::move(next);
        }
      }
      for (const auto& pt : partials) {
        auto exp = pt.exp;
        for (int j = 0; j < p.k; ++j) exp[j] += kb.exp[j];
        out.add(ka.w.compose(pt.w), exp, va * vb * pt.coeff);
      }
    }
  }
  return out;
}

struct HeckeModule {
  HeckeParams params;
  std::vector<SignedPerm> basis;  // basis vectors w * 1_lambda
  std::map<std::string, ExactMatrix> gens;  // "s1".., "theta1".., "eps1"..
  std::vector<GaussRat> lambda;

  int dim() const { return static_cast<int>(basis.size()); }
};

// X(lambda) = Ind_{S(a_k)}^{H_k(c)} lambda with basis {w 1_lambda}
inline HeckeModule principalSeries(const HeckeParams& p, const std::vector<GaussRat>& lambda) {
  if (static_cast<int>(lambda.size()) != p.k)
    throw std::invalid_argument("principalSeries: lambda size mismatch");
  HeckeModule mod;
  mod.params = p;
  mod.lambda = lambda;
  mod.basis = enumerateGroup(p.k);
  std::map<SignedPerm, int> index;
  for (size_t i = 0; i < mod.basis.size(); ++i) index[mod.basis[i]] = static_cast<int>(i);
  int d = mod.dim();

  auto groupMatrix = [&](const SignedPerm& g) {
    ExactMatrix m(d, d);
    for (int c = 0; c < d; ++c) m.set(index.at(g.compose(mod.basis[c])), c, GaussRat(1));
    return m;
  };
  for (int i = 1; i < p.k; ++i)
    mod.gens["s" + std::to_string(i)] = groupMatrix(SignedPerm::simpleTransposition(p.k, i));
  for (int j = 1; j <= p.k; ++j)
    mod.gens["theta" + std::to_string(j)] = groupMatrix(SignedPerm::signFlip(p.k, j));

  for (int i = 1; i <= p.k; ++i) {
    ExactMatrix m(d, d);
    std::vector<GaussRat> unit(p.k);
    unit[i - 1] = GaussRat(1);
    for (int c = 0; c < d; ++c) {
      auto moved = hecke_detail::moveLinearPastGroup(p, unit, mod.basis[c]);
      for (const auto& mt : moved) {
        GaussRat v = mt.constant;
        for (int j = 0; j < p.k; ++j) v += mt.linear[j] * lambda[j];
        if (!v.isZero()) m.add(index.at(mt.w), c, v);
      }
    }
    mod.gens["eps" + std::to_string(i)] = m;
  }
  return mod;
}

// positive roots of type B_k with the reflection, parameter, and pairing data
struct PositiveRoot {
  SignedPerm refl;
  GaussRat cValue;
  std::vector<int> pairingWithEpsHat;  // <gamma, eps_i-hat> for i = 1..k
};

inline std::vector<PositiveRoot> positiveRoots(const HeckeParams& p) {
  std::vector<PositiveRoot> roots;
  for (int i = 1; i <= p.k; ++i)
    for (int j = i + 1; j <= p.k; ++j) {
      auto w = SignedPerm::identity(p.k).window();
      std::swap(w[i - 1], w[j - 1]);
      PositiveRoot diff{SignedPerm(w), GaussRat(1), std::vector<int>(p.k, 0)};
      diff.pairingWithEpsHat[i - 1] = 1;
      diff.pairingWithEpsHat[j - 1] = -1;
      roots.push_back(diff);
      PositiveRoot sum{SignedPerm::swapFlip(p.k, i, j), GaussRat(1), std::vector<int>(p.k, 0)};
      sum.pairingWithEpsHat[i - 1] = 1;
      sum.pairingWithEpsHat[j - 1] = 1;
      roots.push_back(sum);
    }
  for (int i = 1; i <= p.k; ++i) {
    PositiveRoot shrt{SignedPerm::signFlip(p.k, i), p.c, std::vector<int>(p.k, 0)};
    shrt.pairingWithEpsHat[i - 1] = 2;
    roots.push_back(shrt);
  }
  return roots;
}

// correction term: eps~_i = eps_i - (1/2) sum_{gamma > 0} c(gamma)
// <gamma, eps_i-hat> s_gamma
inline HeckeElement drinfeldCorrection(const HeckeParams& p, int i) {
  HeckeElement corr(p.k);
  for (const auto& root : positiveRoots(p)) {
    GaussRat coeff = GaussRat(1, 2) * root.cValue * GaussRat(root.pairingWithEpsHat[i - 1]);
    if (!coeff.isZero()) corr += coeff * HeckeElement::group(root.refl);
  }
  return corr;
}

inline HeckeElement drinfeldEpsilon(const HeckeParams& p, int i) {
  return HeckeElement::epsilon(p.k, i) - drinfeldCorrection(p, i);
}

enum class DrinfeldDirection { ToDrinfeld, FromDrinfeld };

// Change of generators between the two presentations: interpreting the eps
// letters of `e` as coordinates, substitute eps_i -> eps_i +- correction.
inline HeckeElement lusztigDrinfeld(const HeckeElement& e, const HeckeParams& p,
                                    DrinfeldDirection dir) {
  HeckeElement out(p.k);
  for (const auto& [key, coeff] : e.terms()) {
    HeckeElement acc = coeff * HeckeElement::group(key.w);
    for (int i = 1; i <= p.k; ++i) {
      for (int rep = 0; rep < key.exp[i - 1]; ++rep) {
        HeckeElement gen = HeckeElement::epsilon(p.k, i);
        if (dir == DrinfeldDirection::ToDrinfeld)
          gen += drinfeldCorrection(p, i);
        else
          gen -= drinfeldCorrection(p, i);
        acc = normalFormMultiply(acc, gen, p);
      }
    }
    out += acc;
  }
  return out;
}

enum class StarKind { Star, Bullet };

// Conjugate-linear anti-homomorphisms: bullet fixes the Lusztig generators
// (eps^bullet = eps, w^bullet = w^{-1}); star is w^bullet conjugated by w_0,
// equivalently eps~^* = -eps~ on the Drinfeld generators.
inline HeckeElement starMap(const HeckeElement& e, const HeckeParams& p, StarKind kind) {
  HeckeElement out(p.k);
  for (const auto& [key, coeff] : e.terms()) {
    // (w eps^a)^op = (eps^a)^op w^{-1}
    HeckeElement acc = HeckeElement::scalar(p.k, coeff.conj());
    for (int i = p.k; i >= 1; --i) {
      for (int rep = 0; rep < key.exp[i - 1]; ++rep) {
        HeckeElement gen(p.k);
        if (kind == StarKind::Bullet) {
          gen = HeckeElement::epsilon(p.k, i);
        } else {
          // eps_i^* = -eps_i + 2 * correction_i
          gen = GaussRat(-1) * HeckeElement::epsilon(p.k, i);
          // star is conjugate linear; the correction coefficients conjugate
          HeckeElement corr(p.k);
          for (const auto& root : positiveRoots(p)) {
            GaussRat c = root.cValue.conj() * GaussRat(root.pairingWithEpsHat[i - 1]);
            if (!c.isZero()) corr += c * HeckeElement::group(root.refl);
          }
          gen += corr;
        }
        acc = normalFormMultiply(acc, gen, p);
      }
    }
    acc = normalFormMultiply(acc, HeckeElement::group(key.w.inverse()), p);
    out += acc;
  }
  return out;
}

struct TypeDReport {
  bool conjugationSwapsRoots = false;
  bool thetaAnticommutesEpsK = false;
  long dSubgroupOrder = 0;
  bool pass() const { return conjugationSwapsRoots && thetaAnticommutesEpsK; }
};

// inside H_k(0): theta_k conjugation on the type D generators, and the order
// of the subgroup they generate
inline TypeDReport checkTypeDExtension(int k) {
  if (k < 2) throw std::invalid_argument("checkTypeDExtension: need k >= 2");
  HeckeParams p{k, GaussRat(0)};
  TypeDReport rep;
  SignedPerm theta = SignedPerm::signFlip(k, k);
  SignedPerm sDiff = [&] {
    auto w = SignedPerm::identity(k).window();
    std::swap(w[k - 2], w[k - 1]);
    return SignedPerm(w);
  }();
  SignedPerm sSum = SignedPerm::swapFlip(k, k - 1, k);
  rep.conjugationSwapsRoots =
      theta.compose(sDiff).compose(theta) == sSum && theta.compose(sSum).compose(theta) == sDiff;
  HeckeElement lhs = normalFormMultiply(HeckeElement::group(theta),
                                        HeckeElement::epsilon(k, k), p) +
                     normalFormMultiply(HeckeElement::epsilon(k, k),
                                        HeckeElement::group(theta), p);
  rep.thetaAnticommutesEpsK = lhs.isZero();
  // orbit closure of the D-type generators
  std::set<SignedPerm> dGroup;
  std::vector<SignedPerm> gens;
  for (int i = 1; i < k; ++i) gens.push_back(SignedPerm::simpleTransposition(k, i));
  gens.push_back(sSum);
  std::vector<SignedPerm> frontier{SignedPerm::identity(k)};
  dGroup.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<SignedPerm> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        SignedPerm h = g.compose(s);
        if (dGroup.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  rep.dSubgroupOrder = static_cast<long>(dGroup.size());
  return rep;
}

}  // namespace bcvw

#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcvw {

// Element of the hyperoctahedral group W(B_k): a signed permutation in window
// notation, w[i-1] = w(i) with values in {±1..±k}.
class SignedPerm {
public:
  SignedPerm() = default;
  explicit SignedPerm(std::vector<int> window) : w_(std::move(window)) { validate(); }

  static SignedPerm identity(int k) {
    std::vector<int> w(k);
    std::iota(w.begin(), w.end(), 1);
    return SignedPerm(std::move(w));
  }

  // adjacent transposition s_{i,i+1}; 1-based i in [1, k-1]
  static SignedPerm simpleTransposition(int k, int i) {
    SignedPerm g = identity(k);
    std::swap(g.w_[i - 1], g.w_[i]);
    return g;
  }

  // sign flip theta_j; 1-based j in [1, k]
  static SignedPerm signFlip(int k, int j) {
    SignedPerm g = identity(k);
    g.w_[j - 1] = -g.w_[j - 1];
    return g;
  }

  // reflection through e_i + e_j (swap i,j with both signs flipped)
  static SignedPerm swapFlip(int k, int i, int j) {
    SignedPerm g = identity(k);
    g.w_[i - 1] = -j;
    g.w_[j - 1] = -i;
    return g;
  }

  static SignedPerm longestElement(int k) {
    std::vector<int> w(k);
    for (int i = 0; i < k; ++i) w[i] = -(i + 1);
    return SignedPerm(std::move(w));
  }

  int rank() const { return static_cast<int>(w_.size()); }

  // signed image of index i (1-based)
  int apply(int i) const {
    if (i < 1 || i > rank()) throw std::out_of_range("SignedPerm::apply");
    return w_[i - 1];
  }

  // action on +-basis weights: g(eps_i) = sign * eps_|g(i)|
  int actOnEpsilon(int i) const { return apply(i); }

  SignedPerm compose(const SignedPerm& h) const {  // (g o h)(i) = g(h(i))
    if (rank() != h.rank()) throw std::invalid_argument("SignedPerm: rank mismatch");
    std::vector<int> w(rank());
    for (int i = 1; i <= rank(); ++i) {
      int hi = h.apply(i);
      int g = apply(std::abs(hi));
      w[i - 1] = hi > 0 ? g : -g;
    }
    return SignedPerm(std::move(w));
  }

  SignedPerm inverse() const {
    std::vector<int> w(rank());
    for (int i = 1; i <= rank(); ++i) {
      int v = w_[i - 1];
      w[std::abs(v) - 1] = v > 0 ? i : -i;
    }
    return SignedPerm(std::move(w));
  }

  bool isIdentity() const {
    for (int i = 1; i <= rank(); ++i)
      if (w_[i - 1] != i) return false;
    return true;
  }

  // Coxeter length in type B: inversions + negative entries + crossed
  // negative pairs.
  int length() const {
    int k = rank();
    int len = 0;
    for (int i = 1; i <= k; ++i) {
      if (w_[i - 1] < 0) ++len;
      for (int j = i + 1; j <= k; ++j) {
        if (w_[i - 1] > w_[j - 1]) ++len;
        if (-w_[i - 1] > w_[j - 1]) ++len;
      }
    }
    return len;
  }

  // sign of the underlying (unsigned) permutation; the linear character that
  // is -1 on the transposition generators and +1 on the sign flips
  int permSign() const {
    int k = rank();
    std::vector<int> p(k);
    for (int i = 0; i < k; ++i) p[i] = std::abs(w_[i]);
    int sign = 1;
    std::vector<bool> seen(k, false);
    for (int i = 0; i < k; ++i) {
      if (seen[i]) continue;
      int len = 0, j = i;
      while (!seen[j]) {
        seen[j] = true;
        j = p[j] - 1;
        ++len;
      }
      if (len % 2 == 0) sign = -sign;
    }
    return sign;
  }

  int flipSign() const {  // (-1)^{number of sign changes}
    int s = 1;
    for (int v : w_) s *= (v < 0 ? -1 : 1);
    return s;
  }

  friend bool operator==(const SignedPerm& a, const SignedPerm& b) { return a.w_ == b.w_; }
  friend bool operator!=(const SignedPerm& a, const SignedPerm& b) { return !(a == b); }
  friend bool operator<(const SignedPerm& a, const SignedPerm& b) { return a.w_ < b.w_; }

  // text form "2,-1,3"
  std::string str() const {
    std::ostringstream os;
    for (size_t i = 0; i < w_.size(); ++i) {
      if (i) os << ",";
      os << w_[i];
    }
    return os.str();
  }

  static SignedPerm parse(const std::string& s, int k) {
    std::vector<int> w;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) w.push_back(std::stoi(tok));
    if (static_cast<int>(w.size()) != k)
      throw std::invalid_argument("SignedPerm::parse: wrong length");
    return SignedPerm(std::move(w));
  }

  friend std::ostream& operator<<(std::ostream& os, const SignedPerm& g) { return os << g.str(); }

  const std::vector<int>& window() const { return w_; }

private:
  void validate() const {
    std::vector<bool> seen(w_.size(), false);
    for (int v : w_) {
      int a = std::abs(v);
      if (a < 1 || a > rank() || seen[a - 1])
        throw std::invalid_argument("SignedPerm: invalid window " + str());
      seen[a - 1] = true;
    }
  }

  std::vector<int> w_;
};

// All k! 2^k elements in deterministic order: lexicographic by permutation,
// then by sign pattern.
inline std::vector<SignedPerm> enumerateGroup(int k) {
  if (k < 0 || k > 6) throw std::invalid_argument("enumerateGroup: supported range is 0..6");
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<SignedPerm> out;
  do {
    for (int mask = 0; mask < (1 << k); ++mask) {
      std::vector<int> w(perm);
      for (int i = 0; i < k; ++i)
        if (mask & (1 << i)) w[i] = -w[i];
      out.emplace_back(std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace bcvw

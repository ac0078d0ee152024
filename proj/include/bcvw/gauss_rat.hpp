#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace bcvw {

// Exact scalar a + b*i with a, b rational. All arithmetic is exact; there is
// no floating point anywhere in this library.
class GaussRat {
public:
  GaussRat() : re_(0), im_(0) {}
  GaussRat(long n) : re_(n), im_(0) {}
  GaussRat(long num, long den) : re_(num, den), im_(0) { re_.canonicalize(); }
  GaussRat(const mpq_class& re, const mpq_class& im) : re_(re), im_(im) {}

  static GaussRat i() { return GaussRat(mpq_class(0), mpq_class(1)); }
  static GaussRat fromRational(const mpq_class& q) { return GaussRat(q, mpq_class(0)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool isZero() const { return re_ == 0 && im_ == 0; }
  bool isReal() const { return im_ == 0; }

  GaussRat conj() const { return GaussRat(re_, mpq_class(-im_)); }

  // |z|^2, a rational
  mpq_class normSq() const { return re_ * re_ + im_ * im_; }

  GaussRat operator-() const { return GaussRat(mpq_class(-re_), mpq_class(-im_)); }

  GaussRat& operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = r;
    im_ = i;
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) {
    if (o.isZero()) throw std::domain_error("GaussRat: division by zero");
    mpq_class n = o.normSq();
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = r;
    im_ = i;
    return *this;
  }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

  GaussRat inverse() const {
    GaussRat one(1);
    return one / *this;
  }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
  friend bool operator<(const GaussRat& a, const GaussRat& b) {
    int c = cmp(a.re_, b.re_);
    if (c != 0) return c < 0;
    return cmp(a.im_, b.im_) < 0;
  }

  // Text form "a/b+c/d*i" with zero parts omitted, e.g. "3", "-1/2*i", "1+i".
  std::string str() const {
    if (isZero()) return "0";
    std::string out;
    if (re_ != 0) out += ratStr(re_);
    if (im_ != 0) {
      if (im_ > 0 && !out.empty()) out += "+";
      if (im_ == 1)
        out += "i";
      else if (im_ == -1)
        out += "-i";
      else
        out += ratStr(im_) + "*i";
    }
    return out;
  }

  static GaussRat parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("GaussRat::parse: empty string");
    // split into one or two signed terms
    mpq_class re = 0, im = 0;
    size_t pos = 0;
    while (pos < s.size()) {
      size_t start = pos;
      if (s[pos] == '+' || s[pos] == '-') ++pos;
      while (pos < s.size() && s[pos] != '+' && s[pos] != '-') ++pos;
      std::string term = s.substr(start, pos - start);
      if (term.empty() || term == "+" || term == "-")
        throw std::invalid_argument("GaussRat::parse: bad term in '" + s + "'");
      bool imag = false;
      if (term.back() == 'i') {
        imag = true;
        term.pop_back();
        if (!term.empty() && term.back() == '*') term.pop_back();
        if (term.empty() || term == "+") term = "1";
        if (term == "-") term = "-1";
      }
      mpq_class v(term);
      v.canonicalize();
      if (imag)
        im += v;
      else
        re += v;
    }
    return GaussRat(re, im);
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussRat& g) { return os << g.str(); }

private:
  static std::string ratStr(const mpq_class& q) {
    std::ostringstream os;
    os << q;
    return os.str();
  }

  mpq_class re_, im_;
};

}  // namespace bcvw

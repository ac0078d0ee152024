#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "bcvw/gauss_rat.hpp"

namespace bcvw {

// Sparse exact matrix over Q(i). Entries are stored row-major in nested maps
// with canonical zero elision, so operator== is structural equality.
class ExactMatrix {
public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("ExactMatrix: negative size");
  }

  static ExactMatrix identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, GaussRat(1));
    return m;
  }

  static ExactMatrix zero(int rows, int cols) { return ExactMatrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  GaussRat at(int r, int c) const {
    checkIndex(r, c);
    auto it = data_.find(r);
    if (it == data_.end()) return GaussRat();
    auto jt = it->second.find(c);
    if (jt == it->second.end()) return GaussRat();
    return jt->second;
  }

  void set(int r, int c, const GaussRat& v) {
    checkIndex(r, c);
    if (v.isZero()) {
      auto it = data_.find(r);
      if (it != data_.end()) {
        it->second.erase(c);
        if (it->second.empty()) data_.erase(it);
      }
    } else {
      data_[r][c] = v;
    }
  }

  void add(int r, int c, const GaussRat& v) { set(r, c, at(r, c) + v); }

  bool isZero() const { return data_.empty(); }

  long nnz() const {
    long n = 0;
    for (const auto& [r, row] : data_) n += static_cast<long>(row.size());
    return n;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

  ExactMatrix operator-() const {
    ExactMatrix m(rows_, cols_);
    for (const auto& [r, row] : data_)
      for (const auto& [c, v] : row) m.data_[r][c] = -v;
    return m;
  }

  ExactMatrix& operator+=(const ExactMatrix& o) {
    checkSameShape(o);
    for (const auto& [r, row] : o.data_)
      for (const auto& [c, v] : row) add(r, c, v);
    return *this;
  }
  ExactMatrix& operator-=(const ExactMatrix& o) {
    checkSameShape(o);
    for (const auto& [r, row] : o.data_)
      for (const auto& [c, v] : row) add(r, c, -v);
    return *this;
  }

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }

  friend ExactMatrix operator*(const GaussRat& s, const ExactMatrix& m) {
    ExactMatrix out(m.rows_, m.cols_);
    if (s.isZero()) return out;
    for (const auto& [r, row] : m.data_)
      for (const auto& [c, v] : row) out.data_[r][c] = s * v;
    return out;
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("ExactMatrix: shape mismatch in product");
    ExactMatrix out(a.rows_, b.cols_);
    for (const auto& [r, rowA] : a.data_) {
      std::map<int, GaussRat> acc;
      for (const auto& [k, va] : rowA) {
        auto itB = b.data_.find(k);
        if (itB == b.data_.end()) continue;
        for (const auto& [c, vb] : itB->second) acc[c] += va * vb;
      }
      for (auto& [c, v] : acc)
        if (!v.isZero()) out.data_[r][c] = v;
    }
    return out;
  }

  ExactMatrix transpose() const {
    ExactMatrix m(cols_, rows_);
    for (const auto& [r, row] : data_)
      for (const auto& [c, v] : row) m.data_[c][r] = v;
    return m;
  }

  ExactMatrix conjTranspose() const {
    ExactMatrix m(cols_, rows_);
    for (const auto& [r, row] : data_)
      for (const auto& [c, v] : row) m.data_[c][r] = v.conj();
    return m;
  }

  ExactMatrix conj() const {
    ExactMatrix m(rows_, cols_);
    for (const auto& [r, row] : data_)
      for (const auto& [c, v] : row) m.data_[r][c] = v.conj();
    return m;
  }

  GaussRat trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace: not square");
    GaussRat t;
    for (const auto& [r, row] : data_) {
      auto it = row.find(r);
      if (it != row.end()) t += it->second;
    }
    return t;
  }

  bool isHermitian() const { return rows_ == cols_ && *this == conjTranspose(); }

  ExactMatrix kron(const ExactMatrix& b) const {
    ExactMatrix out(rows_ * b.rows_, cols_ * b.cols_);
    for (const auto& [r, row] : data_)
      for (const auto& [c, v] : row)
        for (const auto& [rb, rowB] : b.data_)
          for (const auto& [cb, vb] : rowB)
            out.data_[r * b.rows_ + rb][c * b.cols_ + cb] = v * vb;
    return out;
  }

  // commutator [A, B]
  friend ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) {
    return a * b - b * a;
  }

  std::vector<GaussRat> applyTo(const std::vector<GaussRat>& v) const {
    if (static_cast<int>(v.size()) != cols_)
      throw std::invalid_argument("applyTo: size mismatch");
    std::vector<GaussRat> out(rows_);
    for (const auto& [r, row] : data_)
      for (const auto& [c, val] : row)
        if (!v[c].isZero()) out[r] += val * v[c];
    return out;
  }

  ExactMatrix column(int c) const {
    ExactMatrix out(rows_, 1);
    for (const auto& [r, row] : data_) {
      auto it = row.find(c);
      if (it != row.end()) out.data_[r][0] = it->second;
    }
    return out;
  }

  void setColumn(int c, const std::vector<GaussRat>& v) {
    for (int r = 0; r < rows_; ++r) set(r, c, v[r]);
  }

  std::vector<GaussRat> columnVector(int c) const {
    std::vector<GaussRat> out(rows_);
    for (const auto& [r, row] : data_) {
      auto it = row.find(c);
      if (it != row.end()) out[r] = it->second;
    }
    return out;
  }

  static ExactMatrix fromColumns(int rows, const std::vector<std::vector<GaussRat>>& cols) {
    ExactMatrix m(rows, static_cast<int>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c) m.setColumn(static_cast<int>(c), cols[c]);
    return m;
  }

  // Row-reduced echelon form with the fixed pivot order (leftmost column,
  // topmost row) so results are reproducible byte-for-byte.
  // Returns pivot column indices.
  std::vector<int> rrefInPlace() {
    std::vector<int> pivots;
    int pr = 0;
    for (int c = 0; c < cols_ && pr < rows_; ++c) {
      int sel = -1;
      for (int r = pr; r < rows_; ++r) {
        if (!at(r, c).isZero()) {
          sel = r;
          break;
        }
      }
      if (sel < 0) continue;
      swapRows(sel, pr);
      GaussRat inv = at(pr, c).inverse();
      scaleRow(pr, inv);
      for (int r = 0; r < rows_; ++r) {
        if (r == pr) continue;
        GaussRat f = at(r, c);
        if (!f.isZero()) addRowMultiple(r, pr, -f);
      }
      pivots.push_back(c);
      ++pr;
    }
    return pivots;
  }

  int rank() const {
    ExactMatrix m = *this;
    return static_cast<int>(m.rrefInPlace().size());
  }

  // Basis of the null space, each vector in reduced echelon normal form; one
  // vector per free column, in column order.
  std::vector<std::vector<GaussRat>> kernelBasis() const {
    ExactMatrix m = *this;
    std::vector<int> pivots = m.rrefInPlace();
    std::vector<bool> isPivot(cols_, false);
    for (int p : pivots) isPivot[p] = true;
    std::vector<std::vector<GaussRat>> out;
    for (int c = 0; c < cols_; ++c) {
      if (isPivot[c]) continue;
      std::vector<GaussRat> v(cols_);
      v[c] = GaussRat(1);
      for (size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = -m.at(static_cast<int>(p), c);
      out.push_back(std::move(v));
    }
    return out;
  }

  // Solve a x = b; free variables set to 0 in echelon order. nullopt if
  // inconsistent.
  std::optional<std::vector<GaussRat>> solve(const std::vector<GaussRat>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("solve: size mismatch");
    ExactMatrix aug(rows_, cols_ + 1);
    aug.data_ = data_;
    for (int r = 0; r < rows_; ++r)
      if (!b[r].isZero()) aug.data_[r][cols_] = b[r];
    std::vector<int> pivots = aug.rrefInPlace();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<GaussRat> x(cols_);
    for (size_t p = 0; p < pivots.size(); ++p) x[pivots[p]] = aug.at(static_cast<int>(p), cols_);
    return x;
  }

  // Solve A X = B for all columns of B at once. nullopt if any column is
  // inconsistent.
  std::optional<ExactMatrix> solveMulti(const ExactMatrix& b) const {
    if (b.rows_ != rows_) throw std::invalid_argument("solveMulti: size mismatch");
    ExactMatrix aug(rows_, cols_ + b.cols_);
    aug.data_ = data_;
    for (const auto& [r, row] : b.data_)
      for (const auto& [c, v] : row) aug.data_[r][cols_ + c] = v;
    std::vector<int> pivots = aug.rrefInPlace();
    for (int p : pivots)
      if (p >= cols_) return std::nullopt;
    // every non-pivot row of the reduced augment must be zero in the B-part
    int nPiv = static_cast<int>(pivots.size());
    for (int r = nPiv; r < rows_; ++r)
      for (int c = 0; c < b.cols_; ++c)
        if (!aug.at(r, cols_ + c).isZero()) return std::nullopt;
    ExactMatrix x(cols_, b.cols_);
    for (int p = 0; p < nPiv; ++p)
      for (int c = 0; c < b.cols_; ++c) x.set(pivots[p], c, aug.at(p, cols_ + c));
    return x;
  }

  std::optional<ExactMatrix> inverse() const {
    if (rows_ != cols_) return std::nullopt;
    auto x = solveMulti(identity(rows_));
    if (!x) return std::nullopt;
    // singular square systems are caught by rank deficiency
    if ((*this) * (*x) != identity(rows_)) return std::nullopt;
    return x;
  }

  struct Signature {
    int nPlus = 0;
    int nMinus = 0;
    int nZero = 0;
  };

  // Exact signature of a Hermitian matrix by congruence diagonalization
  // (symmetric Gaussian elimination; hyperbolic 2x2 step when the remaining
  // diagonal vanishes).
  Signature hermitianSignature() const {
    if (!isHermitian()) throw std::domain_error("hermitianSignature: matrix not Hermitian");
    ExactMatrix g = *this;
    int n = rows_;
    Signature sig;
    std::vector<bool> done(n, false);
    for (int step = 0; step < n; ++step) {
      // find first live index with nonzero diagonal
      int piv = -1;
      for (int i = 0; i < n; ++i) {
        if (!done[i] && !g.at(i, i).isZero()) {
          piv = i;
          break;
        }
      }
      if (piv >= 0) {
        GaussRat d = g.at(piv, piv);
        if (!d.isReal()) throw std::logic_error("hermitianSignature: non-real diagonal");
        if (d.re() > 0)
          ++sig.nPlus;
        else
          ++sig.nMinus;
        // clear row/col piv against live indices
        GaussRat dinv = d.inverse();
        for (int r = 0; r < n; ++r) {
          if (r == piv || done[r]) continue;
          GaussRat f = g.at(r, piv);
          if (f.isZero()) continue;
          // row_r -= (f/d) row_piv ; col_r -= conj(f/d) col_piv
          GaussRat q = f * dinv;
          for (int c = 0; c < n; ++c) {
            if (done[c]) continue;
            g.set(r, c, g.at(r, c) - q * g.at(piv, c));
          }
          for (int r2 = 0; r2 < n; ++r2) {
            if (done[r2]) continue;
            g.set(r2, r, g.at(r2, r) - q.conj() * g.at(r2, piv));
          }
        }
        done[piv] = true;
        continue;
      }
      // all live diagonals zero: either the live block is zero, or pick a
      // hyperbolic pair (i,j) with g_ij != 0 -> contributes (+1,-1)
      int hi = -1, hj = -1;
      for (int i = 0; i < n && hi < 0; ++i) {
        if (done[i]) continue;
        for (int j = i + 1; j < n; ++j) {
          if (done[j]) continue;
          if (!g.at(i, j).isZero()) {
            hi = i;
            hj = j;
            break;
          }
        }
      }
      if (hi < 0) break;  // live block identically zero
      // u = e_i + e_j / scaled, v = e_i - e_j give diagonal +-2 Re-ish values;
      // do it by explicit congruence: replace e_i by e_i + t e_j with
      // t = conj(a)/|a| style so new diagonal becomes nonzero, then recurse.
      GaussRat a = g.at(hi, hj);
      // new basis vector e_i' = e_i + (1/conj(a)) e_j has diagonal
      // <e_i',e_i'> = 0 + a/conj(a)*0... compute directly: d' = e_i^H G e_i +
      // t^H e_j^H G e_i + ... = t*a + conj(t*a) = 2 Re(t*a). take t = 1/a ->
      // d' = 2.
      GaussRat t = a.inverse();
      for (int c = 0; c < n; ++c) {
        if (done[c]) continue;
        g.set(hi, c, g.at(hi, c) + t.conj() * g.at(hj, c));
      }
      for (int r = 0; r < n; ++r) {
        if (done[r]) continue;
        g.set(r, hi, g.at(r, hi) + t * g.at(r, hj));
      }
      // now g(hi,hi) = 2; loop will pick it up next pass
    }
    sig.nZero = n - sig.nPlus - sig.nMinus;
    return sig;
  }

  // Text format: rows separated by ";", entries by ",".
  std::string str() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
      if (r) os << ";";
      for (int c = 0; c < cols_; ++c) {
        if (c) os << ",";
        os << at(r, c).str();
      }
    }
    return os.str();
  }

  static ExactMatrix parse(const std::string& s) {
    std::vector<std::vector<GaussRat>> rows;
    std::stringstream ss(s);
    std::string rowStr;
    size_t ncols = 0;
    while (std::getline(ss, rowStr, ';')) {
      std::vector<GaussRat> row;
      std::stringstream rs(rowStr);
      std::string cell;
      while (std::getline(rs, cell, ',')) row.push_back(GaussRat::parse(cell));
      if (rows.empty())
        ncols = row.size();
      else if (row.size() != ncols)
        throw std::invalid_argument("ExactMatrix::parse: ragged rows");
      rows.push_back(std::move(row));
    }
    ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(ncols));
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t c = 0; c < ncols; ++c) m.set(static_cast<int>(r), static_cast<int>(c), rows[r][c]);
    return m;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactMatrix& m) { return os << m.str(); }

  const std::map<int, std::map<int, GaussRat>>& entries() const { return data_; }

private:
  void checkIndex(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::out_of_range("ExactMatrix: index out of range");
  }
  void checkSameShape(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("ExactMatrix: shape mismatch");
  }
  void swapRows(int a, int b) {
    if (a == b) return;
    auto ia = data_.find(a), ib = data_.find(b);
    std::map<int, GaussRat> ra, rb;
    if (ia != data_.end()) ra = std::move(ia->second);
    if (ib != data_.end()) rb = std::move(ib->second);
    data_.erase(a);
    data_.erase(b);
    if (!rb.empty()) data_[a] = std::move(rb);
    if (!ra.empty()) data_[b] = std::move(ra);
  }
  void scaleRow(int r, const GaussRat& f) {
    auto it = data_.find(r);
    if (it == data_.end()) return;
    for (auto& [c, v] : it->second) v *= f;
  }
  void addRowMultiple(int dst, int src, const GaussRat& f) {
    auto is = data_.find(src);
    if (is == data_.end() || f.isZero()) return;
    auto rowCopy = is->second;
    for (const auto& [c, v] : rowCopy) add(dst, c, f * v);
  }

  int rows_, cols_;
  std::map<int, std::map<int, GaussRat>> data_;
};

}  // namespace bcvw

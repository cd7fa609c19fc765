#pragma once

// Sparse bivariate polynomials in (r, s) over exact rationals, plus matrices
// of them. Degrees stay tiny here (entries of derivative matrices have degree
// <= 2, minors of order <= 5 push products to degree <= 10), so a map from
// exponent pairs to coefficients is all that is needed.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pvlab/matrix.hpp"
#include "pvlab/rational.hpp"

namespace pvlab {

class Poly {
 public:
  using Key = std::pair<unsigned, unsigned>;  // (deg_r, deg_s)

  Poly() = default;

  static Poly constant(const Rat& c) { return monomial(0, 0, c); }

  static Poly monomial(unsigned dr, unsigned ds, const Rat& c) {
    Poly p;
    if (c != 0) p.terms_[{dr, ds}] = c;
    return p;
  }

  static Poly variable_r() { return monomial(1, 0, Rat(1)); }
  static Poly variable_s() { return monomial(0, 1, Rat(1)); }

  const std::map<Key, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
  }

  Rat coefficient(unsigned dr, unsigned ds) const {
    auto it = terms_.find({dr, ds});
    return it == terms_.end() ? Rat(0) : it->second;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return out;
  }

  Poly operator-() const {
    Poly out(*this);
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
  }

  Poly scaled(const Rat& f) const {
    Poly out;
    if (f == 0) return out;
    for (const auto& [k, c] : terms_) out.terms_[k] = c * f;
    return out;
  }

  // var = 0 for d/dr, 1 for d/ds.
  Poly derivative(int var) const {
    Poly out;
    for (const auto& [k, c] : terms_) {
      unsigned e = var == 0 ? k.first : k.second;
      if (e == 0) continue;
      Key nk = var == 0 ? Key{k.first - 1, k.second} : Key{k.first, k.second - 1};
      out.add_term(nk, c * static_cast<long>(e));
    }
    return out;
  }

  Rat eval(const Rat& r, const Rat& s) const {
    Rat acc(0);
    for (const auto& [k, c] : terms_)
      acc += c * rpow(r, k.first) * rpow(s, k.second);
    return acc;
  }

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += c.get_str();
      if (k.first) out += "*r^" + std::to_string(k.first);
      if (k.second) out += "*s^" + std::to_string(k.second);
    }
    return out;
  }

 private:
  void add_term(const Key& k, const Rat& c) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      if (c != 0) terms_.emplace(k, c);
      return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  std::map<Key, Rat> terms_;
};

struct PolyMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Poly> entries;  // row-major

  PolyMatrix() = default;
  PolyMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

  Poly& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const Poly& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

  RatMatrix eval(const Rat& r, const Rat& s) const {
    RatMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = at(i, j).eval(r, s);
    return out;
  }

  PolyMatrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
    PolyMatrix out(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
      for (std::size_t j = 0; j < col_idx.size(); ++j)
        out.at(i, j) = at(row_idx[i], col_idx[j]);
    return out;
  }
};

// Cofactor expansion along the first row; fine for orders <= 5.
inline Poly poly_determinant(const PolyMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("poly determinant of non-square matrix");
  if (m.rows == 0) return Poly::constant(Rat(1));
  if (m.rows == 1) return m.at(0, 0);
  Poly det;
  std::vector<int> all_rows, all_cols;
  for (std::size_t i = 1; i < m.rows; ++i) all_rows.push_back(static_cast<int>(i));
  for (std::size_t j = 0; j < m.cols; ++j) {
    if (m.at(0, j).is_zero()) continue;
    all_cols.clear();
    for (std::size_t c = 0; c < m.cols; ++c)
      if (c != j) all_cols.push_back(static_cast<int>(c));
    Poly minor = poly_determinant(m.submatrix(all_rows, all_cols));
    Poly term = m.at(0, j) * minor;
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

}  // namespace pvlab

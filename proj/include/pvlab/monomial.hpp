#pragma once

// Parsell-Vinogradov index systems: the ordered list of monomial exponents
// t^alpha with 1 <= |alpha| <= k in d variables, the moment map Phi, the
// exponent weights K_{j,k}, and the symbolic derivative matrices M^(l).
//
// Canonical index order: total degree ascending, ties broken with the
// lexicographically greater tuple first. That reproduces the order
// (r, s, r^2, rs, s^2, r^3, r^2 s, r s^2, s^3) of the cubic surface in R^9.

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pvlab/poly.hpp"
#include "pvlab/rational.hpp"

namespace pvlab {

struct MonomialSystem {
  int d = 0;          // number of variables
  int k = 0;          // maximal total degree
  int n = 0;          // ambient dimension = C(d+k, k) - 1
  bool linear_fixture = false;
  std::vector<std::vector<int>> indices;  // canonical order, each of length d

  std::string label() const {
    std::ostringstream os;
    os << "PV(d=" << d << ",k=" << k << ")";
    if (linear_fixture) os << "[linear-fixture]";
    return os.str();
  }

  std::string index_list() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < indices.size(); ++i) {
      os << (i ? " " : "") << "(";
      for (int j = 0; j < d; ++j) os << (j ? "," : "") << indices[i][j];
      os << ")";
    }
    return os.str();
  }

  int degree_of(std::size_t i) const {
    int t = 0;
    for (int e : indices[i]) t += e;
    return t;
  }
};

namespace detail {

inline void gen_indices(int d, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == d) {
    int total = 0;
    for (int e : cur) total += e;
    if (total >= 1 && total <= k) out.push_back(cur);
    return;
  }
  for (int e = 0; e <= k; ++e) {
    cur.push_back(e);
    gen_indices(d, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

inline MonomialSystem enumerate_indices(int d, int k) {
  if (d < 1) throw std::invalid_argument("enumerate_indices: d must be >= 1");
  if (k < 2) throw std::invalid_argument("enumerate_indices: k must be >= 2");
  MonomialSystem sys;
  sys.d = d;
  sys.k = k;
  std::vector<int> cur;
  detail::gen_indices(d, k, cur, sys.indices);
  std::sort(sys.indices.begin(), sys.indices.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              int ta = 0, tb = 0;
              for (int e : a) ta += e;
              for (int e : b) tb += e;
              if (ta != tb) return ta < tb;
              return a > b;  // higher leading exponents first within a degree block
            });
  sys.n = static_cast<int>(sys.indices.size());
  Int expected = binomial(static_cast<unsigned long>(d + k), static_cast<unsigned long>(k)) - 1;
  if (Int(sys.n) != expected)
    throw std::logic_error("index enumeration does not match C(d+k,k)-1");
  return sys;
}

// Single linear equation sum x_j = sum y_j; a test fixture only (the theory
// requires k >= 2).
inline MonomialSystem linear_fixture_system() {
  MonomialSystem sys;
  sys.d = 1;
  sys.k = 1;
  sys.n = 1;
  sys.linear_fixture = true;
  sys.indices = {{1}};
  return sys;
}

// K_{j,k} = (jk/(j+1)) * C(k+j, j)
inline Rat kappa(int j, int k) {
  if (j < 1) throw std::invalid_argument("kappa: j must be >= 1");
  if (k < 2) throw std::invalid_argument("kappa: k must be >= 2");
  return rat(Int(static_cast<long>(j) * k), Int(j + 1)) *
         binomial(static_cast<unsigned long>(k + j), static_cast<unsigned long>(j));
}

template <typename Scalar>
inline std::vector<Scalar> phi_eval_generic(const MonomialSystem& sys,
                                            const std::vector<Scalar>& t) {
  if (static_cast<int>(t.size()) != sys.d)
    throw std::invalid_argument("phi_eval: point has wrong dimension");
  // Powers t_i^e for 0 <= e <= k, computed once.
  std::vector<std::vector<Scalar>> pow(sys.d, std::vector<Scalar>(sys.k + 1, Scalar(1)));
  for (int i = 0; i < sys.d; ++i)
    for (int e = 1; e <= sys.k; ++e) pow[i][e] = pow[i][e - 1] * t[i];
  std::vector<Scalar> out;
  out.reserve(sys.indices.size());
  for (const auto& alpha : sys.indices) {
    Scalar v(1);
    for (int i = 0; i < sys.d; ++i)
      if (alpha[i] > 0) v *= pow[i][alpha[i]];
    out.push_back(v);
  }
  return out;
}

inline std::vector<Rat> phi_eval(const MonomialSystem& sys, const std::vector<Rat>& t) {
  return phi_eval_generic<Rat>(sys, t);
}

inline std::vector<Int> phi_eval(const MonomialSystem& sys, const std::vector<Int>& t) {
  return phi_eval_generic<Int>(sys, t);
}

inline std::vector<Int> phi_eval_lattice(const MonomialSystem& sys, const std::vector<long>& t) {
  std::vector<Int> z(t.begin(), t.end());
  return phi_eval(sys, z);
}

// Column multi-indices of M^(l): all alpha with 1 <= |alpha| <= l, same
// canonical order as the system indices.
inline std::vector<std::vector<int>> derivative_orders(int d, int l) {
  MonomialSystem tmp;
  tmp.d = d;
  tmp.k = l;
  std::vector<int> cur;
  detail::gen_indices(d, l, cur, tmp.indices);
  std::sort(tmp.indices.begin(), tmp.indices.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              int ta = 0, tb = 0;
              for (int e : a) ta += e;
              for (int e : b) tb += e;
              if (ta != tb) return ta < tb;
              return a > b;
            });
  return tmp.indices;
}

// M^(l)(t): n rows, C(d+l,l)-1 columns; entry (i, c) = d^alpha_c (t^alpha_i)
// as a polynomial. Supported for d <= 2 (the matrices the argument uses);
// entries live in Q[r, s], with s unused when d = 1.
inline PolyMatrix derivative_matrix(const MonomialSystem& sys, int l) {
  if (l != 1 && l != 2) throw std::invalid_argument("derivative_matrix: l must be 1 or 2");
  if (l > sys.k - 1) throw std::invalid_argument("derivative_matrix: requires l <= k-1");
  if (sys.d > 2)
    throw std::invalid_argument("derivative_matrix: only d <= 2 is supported (bivariate entries)");
  auto orders = derivative_orders(sys.d, l);
  PolyMatrix m(sys.indices.size(), orders.size());
  for (std::size_t i = 0; i < sys.indices.size(); ++i) {
    const auto& e = sys.indices[i];
    for (std::size_t c = 0; c < orders.size(); ++c) {
      const auto& a = orders[c];
      // d^a (r^{e0} s^{e1}) = e0!/(e0-a0)! * e1!/(e1-a1)! * r^{e0-a0} s^{e1-a1}
      bool ok = true;
      long coeff = 1;
      std::vector<int> rem(e);
      for (int v = 0; v < sys.d; ++v) {
        if (a[v] > e[v]) {
          ok = false;
          break;
        }
        for (int f = e[v]; f > e[v] - a[v]; --f) coeff *= f;
        rem[v] = e[v] - a[v];
      }
      if (!ok) continue;
      unsigned dr = static_cast<unsigned>(rem[0]);
      unsigned ds = sys.d == 2 ? static_cast<unsigned>(rem[1]) : 0u;
      m.at(i, c) = Poly::monomial(dr, ds, Rat(coeff));
    }
  }
  return m;
}

}  // namespace pvlab

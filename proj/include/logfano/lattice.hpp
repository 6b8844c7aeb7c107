#pragma once

// Numerical divisor and curve classes on X = Bl_k P^n, the blow-up of
// projective n-space at k general points, together with the intersection
// pairing between them.
//
// Basis conventions:
//   N^1(X) = <H, E_1, ..., E_k>   H: hyperplane pullback, E_i: exceptional
//   N_1(X) = <L, R_1, ..., R_k>   L: general line pullback, R_i: line in E_i
// A divisor class is stored as h*H + sum_i e_i*E_i, so e.g. the class often
// written aH - b(E_1 + ... + E_k) has h = a and every e_i = -b.
// The pairing is fixed axiomatically by H.L = 1, E_i.R_i = -1, all mixed
// products zero; it is bilinear over the rationals.

#include <stdexcept>
#include <vector>

#include "logfano/rational.hpp"

namespace logfano {

class DivisorClass {
 public:
  // Zero class on P^2 with no points blown up (placeholder value).
  DivisorClass() : n_(2), k_(0), h_(0) {}
  DivisorClass(int n, int k, Rat h, std::vector<Rat> e);

  // Zero class on X^n_k.
  static DivisorClass zero(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  const Rat& h() const { return h_; }
  // 1-based exceptional coefficient, i in 1..k.
  const Rat& e(int i) const;
  const std::vector<Rat>& e_all() const { return e_; }

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  DivisorClass& operator*=(const Rat& scalar);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Rat& s, DivisorClass d) { return d *= s; }
  bool operator==(const DivisorClass& other) const = default;

  std::string to_string() const;

 private:
  int n_, k_;
  Rat h_;
  std::vector<Rat> e_;  // e_[i-1] is the coefficient of E_i
};

class CurveClass {
 public:
  // Zero class on P^2 with no points blown up (placeholder value).
  CurveClass() : n_(2), k_(0), l_(0) {}
  CurveClass(int n, int k, Rat l, std::vector<Rat> r);

  static CurveClass zero(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  const Rat& l() const { return l_; }
  const Rat& r(int i) const;
  const std::vector<Rat>& r_all() const { return r_; }

  CurveClass& operator+=(const CurveClass& other);
  CurveClass& operator-=(const CurveClass& other);
  CurveClass& operator*=(const Rat& scalar);
  friend CurveClass operator+(CurveClass a, const CurveClass& b) { return a += b; }
  friend CurveClass operator-(CurveClass a, const CurveClass& b) { return a -= b; }
  friend CurveClass operator*(const Rat& s, CurveClass c) { return c *= s; }
  bool operator==(const CurveClass& other) const = default;

  std::string to_string() const;

 private:
  int n_, k_;
  Rat l_;
  std::vector<Rat> r_;
};

// -K_X = (n+1)H - (n-1) sum_i E_i. Requires n >= 2, k >= 0.
DivisorClass anticanonical(int n, int k);

// The hyperplane class H.
DivisorClass hyperplane_class(int n, int k);

// The exceptional divisor E_i.
DivisorClass exceptional_divisor(int i, int n, int k);

// Standard curve classes. Identities that hold in N_1:
//   L_{i,j} = L - R_i - R_j,   L_i = L - R_i,   L = L_{i,j} + R_i + R_j.
CurveClass curve_line(int n, int k);                       // L
CurveClass curve_exceptional(int i, int n, int k);         // R_i
CurveClass curve_line_through(int i, int n, int k);        // L_i
CurveClass curve_line_through(int i, int j, int n, int k); // L_{i,j}

// D.C = h*l - sum_i e_i * r_i. Requires matching (n, k).
Rat intersection_pairing(const DivisorClass& d, const CurveClass& c);

}  // namespace logfano

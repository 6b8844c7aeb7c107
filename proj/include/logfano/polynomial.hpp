#pragma once

// Sparse multivariate polynomials over Q, exact rank computation, and
// vanishing orders of hypersurfaces along lines.  Everything stays in exact
// rational (or integer) arithmetic.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "logfano/rational.hpp"

namespace logfano {

// Terms are exponent-vector -> coefficient; zero coefficients are never
// stored. The ordered map keeps iteration deterministic.
class Polynomial {
 public:
  explicit Polynomial(int nvars);

  static Polynomial constant(int nvars, const Rat& c);
  static Polynomial variable(int index, int nvars);  // x_index, 0-based
  static Polynomial monomial(std::vector<int> exponents, const Rat& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const std::vector<int>& exponents, const Rat& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator*(const Polynomial& other) const;
  Polynomial& operator*=(const Rat& scalar);

  long total_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;

  Rat evaluate(std::span<const Rat> point) const;

  // Coefficients of t -> f(p + t v), ascending powers of t.
  std::vector<Rat> restrict_to_line(std::span<const Rat> p, std::span<const Rat> v) const;

  std::string to_string() const;  // debugging aid, x0..x{nvars-1}

 private:
  int nvars_;
  std::map<std::vector<int>, Rat> terms_;
};

// Determinant of a square matrix of polynomials (Laplace expansion with
// memoization on column masks; matrices here are at most 6x6).
Polynomial poly_determinant(const std::vector<std::vector<Polynomial>>& m);

// det of the (h+1)x(h+1) catalecticant/Hankel matrix with entry (i,j) equal
// to x_{i+j}, as a polynomial in 2h+1 variables.
Polynomial hankel_det_poly(int h);

// sum_i prod_{j != i} x_j in n+1 variables: the degree-n hypersurface whose
// strict transform realizes the k = n+1 certificate divisor in the
// coordinates where the blown-up points are the fundamental points.
Polynomial cremona_divisor_poly(int n);

// The linear form cutting the hyperplane through the rational-normal-curve
// points nu(t) for t in ts, where nu(t) = (1, t, ..., t^n) and n = ts.size():
// coefficients a_i = (-1)^{n-i} e_{n-i}(ts), i.e. sum_i a_i T^i = prod (T - t_j).
Polynomial rnc_hyperplane(const std::vector<Rat>& ts);

// Order of vanishing of f at p along the line towards v: the lowest power of
// t with nonzero coefficient in f(p + t v), capped at max_order when the
// restriction vanishes identically.  Requires f homogeneous and nonzero, and
// p, v projectively distinct (proportional inputs are rejected).
int vanishing_order(const Polynomial& f, std::span<const Rat> p, std::span<const Rat> v,
                    int max_order);

// Same, for a divisor presented as a product of factors (the order along a
// line is the sum of the factors' orders); avoids expanding large products.
int vanishing_order_product(std::span<const Polynomial> factors, std::span<const Rat> p,
                            std::span<const Rat> v, int max_order);

// Rank of a rational matrix by Bareiss fraction-free elimination on the
// denominator-cleared integer matrix.  Exact: no pivots are compared against
// a tolerance, only against zero.
int exact_rank(const std::vector<std::vector<Rat>>& m);

}  // namespace logfano

#pragma once

// Joins of linear spans with secant varieties of a rational normal curve.
//
// Fix n+3 general points p_1..p_{n+3} in P^n; equivalently, fix the rational
// normal curve C = nu(P^1), nu(t) = (1, t, ..., t^n), through them, with
// p_i = nu(t_i) at rational anchor parameters (default t_i = i).
//
// A join label (I, k) denotes Y^d_I = Join(span{p_i : i in I}, sec_k(C)),
// of dimension d = 2k - 1 + |I|; I = {} means sec_k(C) itself, and k = 0
// means the bare span.  Labels must describe proper subvarieties
// (d <= n - 1).  Degrees, singular loci, nested multiplicities and the
// pairwise intersection rules below are the exact combinatorial shadows of
// the corresponding varieties; the sampling/rank/vanishing-order entry
// points check them against honest polynomial computations.

#include <cstdint>
#include <optional>
#include <vector>

#include "logfano/polynomial.hpp"
#include "logfano/subsets.hpp"

namespace logfano {

struct JoinLabel {
  int n = 0;            // ambient P^n
  SubsetIndex vertex;   // I, subset of {1..n+3}
  int secant_index = 0; // k

  JoinLabel() = default;
  // Validates: ambient match, k >= 0, k >= 1 when I is empty, dim <= n-1.
  JoinLabel(SubsetIndex I, int k, int n);
  static JoinLabel secant(int k, int n);  // (I = {}, k)

  int dim() const { return 2 * secant_index - 1 + vertex.size(); }

  // "sec_2" or "Y^4_{1,3}".
  std::string name() const;

  bool operator==(const JoinLabel&) const = default;
  bool operator<(const JoinLabel& other) const;
};

struct JoinProfile {
  int dim = 0;
  Int degree;                              // C(n - |I| - k + 1, k)
  std::optional<JoinLabel> singular_locus; // (I, k-1) when that label is legal
};

JoinProfile join_profile(const JoinLabel& label);

// Multiplicity of the smaller variety inside the larger one (same I, same n,
// n - |I| even, dim big > dim small): (d1 - d2)/2 + 1.
Int join_multiplicity(const JoinLabel& big, const JoinLabel& small);

// Intersection of two joins of the same dimension d with disjoint vertex
// sets: all Y^{d-s}_J with J inside I1 union I2, both symmetric-difference
// distances d(I1, J) = d(I2, J) equal to s = (|I1| + |I2|)/2, and a legal
// secant index k_J = (d - s + 1 - |J|)/2. Requires s integral and d <= n-s.
std::vector<JoinLabel> intersect_same_dim(const SubsetIndex& I1, const SubsetIndex& I2, int d,
                                          int n);

// Intersection of the divisor Y^{n-1}_{i,j} with the codimension-two
// Y^{n-3}_{r,s} for disjoint {i,j}, {r,s} (n even, n >= 6):
//   Y^{n-4}_r, Y^{n-4}_s, Y^{n-4}_{i,r,s}, Y^{n-4}_{j,r,s}.
std::vector<JoinLabel> intersect_offset(const SubsetIndex& div_pair,
                                        const SubsetIndex& sing_pair, int n);

struct RationalPoint {
  std::vector<Rat> coords;  // homogeneous, n+1 entries
};

// nu(t) = (1, t, ..., t^n).
RationalPoint rnc_point(const Rat& t, int n);

// Default anchor parameters t_i = i for i = 1..n+3.
std::vector<Rat> default_anchors(int n);

// Random point of Y_I^d: a nonzero combination of the anchored vertex points
// {nu(t_i) : i in I} and k fresh curve points nu(s_j) at distinct random
// parameters avoiding the anchors.
RationalPoint sample_join_point(const JoinLabel& label, const std::vector<Rat>& anchors,
                                RatSampler& sampler);

// Rank of the (h+1)x(h+1) Hankel matrix of a point of P^n, n = 2h even:
// entry (i,j) is coordinate i+j. A general point of sec_k(C) has rank k.
int hankel_rank(const RationalPoint& p, int n);

}  // namespace logfano

#pragma once

// The weight-space picture for X = Bl_{n+3} P^n.
//
// With k = n+3 marked points, divisor classes D = yH + sum x_i E_i map to
// the weight point
//
//     phi(D)_i = (y + x_i) / ((n+1)y + sum_j x_j),
//
// defined when the denominator is nonzero. The relevant regions in the
// weight simplex are cut out by the box Pi = [0,1]^{n+3} and the linear
// functionals
//
//     H_I(a) = sum_{j not in I} a_j + sum_{i in I} (1 - a_i),
//
// giving (all subsets I of {1..n+3}):
//     in_delta: a in Pi and H_I(a) >= 1 for every I of even size,
//     in_mov:   a in Pi and H_I(a) >= 2 for every I of odd size,
//     in_nef:   H_{{i}}(a) >= 2 for all i and H_{{i,j}}(a) <= 3 for all i<j.
//
// Chambers of the wall arrangement { H_I = k } are read off pointwise:
// legal walls have integer level 2 <= k <= (n+3)/2 and |I| != k (mod 2).
// Interior walls at level k >= 3 are flips contracting a (k-2)-dimensional
// locus and extracting an (n+1-k)-dimensional one; level-2 walls and box
// facets are boundary contractions.

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "logfano/lattice.hpp"
#include "logfano/subsets.hpp"

namespace logfano {

struct WeightPoint {
  std::vector<Rat> alphas;  // alphas[i-1] is the i-th coordinate, 1-based

  int ambient() const { return static_cast<int>(alphas.size()); }
  const Rat& alpha(int i) const;
  bool operator==(const WeightPoint&) const = default;
  std::string to_string() const;
};

// phi as above; requires k = n+3 and a nonzero denominator (a zero
// denominator throws std::domain_error, distinct from precondition errors).
WeightPoint weight_projection(const DivisorClass& d);

// The extremal effective class attached to a subset I of {1..n+3} whose
// complement has odd size 2k+1:
//     E_I = kH - k sum_{i in I} E_i - (k-1) sum_{i not in I} E_i.
// Its weight image is the 0/1 indicator point of the complement of I.
DivisorClass extremal_class(const SubsetIndex& I, int n);

// H_I(a); I and a must share the ambient size n+3.
Rat h_functional(const SubsetIndex& I, const WeightPoint& a);

// Indicator point xi_J: coordinate 1 exactly on J.
WeightPoint indicator_point(const SubsetIndex& J);

struct RegionMembership {
  bool in_delta = false;
  bool in_mov = false;
  bool in_nef = false;
};

RegionMembership region_membership(const WeightPoint& a);

struct WallId {
  SubsetIndex I;
  int level = 0;  // the k of H_I = k

  bool operator==(const WallId&) const = default;
  bool operator<(const WallId& other) const {
    if (level != other.level) return level < other.level;
    return I < other.I;
  }
};

// All legal walls for ambient n+3: 2 <= level, 2*level <= n+3,
// |I| != level (mod 2).
std::vector<WallId> legal_walls(int n);

enum class WallSign { below, on, above };

struct ChamberSignature {
  int n = 0;
  std::map<WallId, WallSign> signs;
  bool operator==(const ChamberSignature&) const = default;
};

// Sign of H_I(a) - k over every legal wall. Requires a in Delta.
ChamberSignature chamber_signature(const WeightPoint& a, int n);

// Wall crossings. Interior walls (level >= 3) are flips; the level-2 walls
// (odd |I|) contract the extremal divisor attached to the complement of I;
// box facets alpha_i in {0,1} are P^1-bundle contractions.
struct FlipWall {
  int contracted_dim = 0;  // k - 2
  int extracted_dim = 0;   // n + 1 - k
  bool operator==(const FlipWall&) const = default;
};
struct P1BundleWall {
  bool operator==(const P1BundleWall&) const = default;
};
struct BlowDownWall {
  SubsetIndex exceptional;  // label I of the contracted extremal class E_I
  bool operator==(const BlowDownWall&) const = default;
};
using WallKind = std::variant<FlipWall, P1BundleWall, BlowDownWall>;

// Box facet alpha_i = value (value in {0,1}).
struct BoundaryFacet {
  int index = 0;
  int value = 0;
};

WallKind classify_wall(const WallId& w, int n);
WallKind classify_wall(const BoundaryFacet& f, int n);

}  // namespace logfano

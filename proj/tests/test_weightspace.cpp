#include <doctest.h>

#include <algorithm>

#include "logfano/mori.hpp"
#include "logfano/weightspace.hpp"

using namespace logfano;

namespace {

WeightPoint center(int n) {
  WeightPoint a;
  a.alphas.assign(n + 3, make_rat(1, 2));
  return a;
}

}  // namespace

TEST_CASE("weight projection of the anticanonical class is the center") {
  for (int n = 2; n <= 8; ++n) {
    const WeightPoint a = weight_projection(anticanonical(n, n + 3));
    CHECK(a == center(n));
  }
}

TEST_CASE("weight projection basics") {
  const int n = 4, k = 7;
  // Exceptional divisors map to the coordinate indicator points.
  for (int i = 1; i <= k; ++i)
    CHECK(weight_projection(exceptional_divisor(i, n, k)) ==
          indicator_point(SubsetIndex({i}, k)));
  // Scale invariance.
  const DivisorClass d(n, k, Rat(5),
                       {Rat(-1), Rat(0), Rat(2), Rat(-3), Rat(1), Rat(0), Rat(-2)});
  CHECK(weight_projection(Rat(7) * d) == weight_projection(d));
  // Zero denominator: (n+1)y + sum x = 0 is its own failure mode.
  std::vector<Rat> e(k, Rat(0));
  e[0] = Rat(-(n + 1));
  CHECK_THROWS_AS(weight_projection(DivisorClass(n, k, Rat(1), e)), std::domain_error);
  // Wrong number of points.
  CHECK_THROWS_AS(weight_projection(hyperplane_class(4, 6)), std::invalid_argument);
}

TEST_CASE("extremal classes and their weight images") {
  const int n = 4, ambient = n + 3;
  // Complement a single index: the plain exceptional divisor.
  for (int i = 1; i <= ambient; ++i) {
    const SubsetIndex I = SubsetIndex({i}, ambient).complement();
    CHECK(extremal_class(I, n) == exceptional_divisor(i, n, ambient));
  }
  // |I^c| = 3: the hyperplane through the points of I.
  const SubsetIndex I = SubsetIndex({1, 2, 3, 4}, ambient);
  const DivisorClass e = extremal_class(I, n);
  CHECK(e.h() == 1);
  for (int i = 1; i <= 4; ++i) CHECK(e.e(i) == -1);
  for (int i = 5; i <= 7; ++i) CHECK(e.e(i) == 0);
  // Even-sized complements are not extremal labels.
  CHECK_THROWS_AS(extremal_class(SubsetIndex({1, 2, 3}, ambient), n), std::invalid_argument);

  // phi(E_I) is the indicator of the complement, across all legal I.
  for (int nn = 2; nn <= 6; ++nn) {
    const int amb = nn + 3;
    for (std::uint32_t bits = 0; bits < (1u << amb); ++bits) {
      const SubsetIndex J = SubsetIndex::from_bits(bits, amb);
      if ((amb - J.size()) % 2 == 0) continue;
      CHECK(weight_projection(extremal_class(J, nn)) == indicator_point(J.complement()));
    }
  }
}

TEST_CASE("the quadric-barycenter extremal class on the plane") {
  // n = 2, I empty: complement size 5, k = 2.
  const DivisorClass e = extremal_class(SubsetIndex::empty_set(5), 2);
  CHECK(e.h() == 2);
  for (int i = 1; i <= 5; ++i) CHECK(e.e(i) == -1);
}

TEST_CASE("H functionals") {
  const int n = 3, ambient = n + 3;
  const WeightPoint c = center(n);
  // H_I at the center is always (n+3)/2.
  for (std::uint32_t bits = 0; bits < (1u << ambient); ++bits)
    CHECK(h_functional(SubsetIndex::from_bits(bits, ambient), c) == make_rat(ambient, 2));
  // H_empty(xi_J) = |J|.
  for (std::uint32_t bits = 0; bits < (1u << ambient); ++bits) {
    const SubsetIndex J = SubsetIndex::from_bits(bits, ambient);
    CHECK(h_functional(SubsetIndex::empty_set(ambient), indicator_point(J)) == J.size());
  }
  // H_I(xi_J) counts |I^c cap J| + |J^c cap I|.
  RatSampler rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const SubsetIndex I = SubsetIndex::from_bits(rng.next_int(0, (1 << ambient) - 1), ambient);
    const SubsetIndex J = SubsetIndex::from_bits(rng.next_int(0, (1 << ambient) - 1), ambient);
    const int expect = I.complement().set_intersection(J).size() +
                       J.complement().set_intersection(I).size();
    CHECK(h_functional(I, indicator_point(J)) == expect);
  }
  // Adjoining a fresh index: H_{J u {i}} = H_J + 1 - 2 a_i, and
  // complementation: H_{I^c} = (n+3) - H_I.
  for (int trial = 0; trial < 200; ++trial) {
    WeightPoint a;
    for (int i = 0; i < ambient; ++i) a.alphas.push_back(rng.next_rational(8, 5));
    const SubsetIndex I = SubsetIndex::from_bits(rng.next_int(0, (1 << ambient) - 1), ambient);
    CHECK(h_functional(I.complement(), a) == Rat(ambient) - h_functional(I, a));
    for (int i0 = 1; i0 <= ambient; ++i0) {
      if (I.contains(i0)) continue;
      auto members = I.members();
      members.push_back(i0);
      CHECK(h_functional(SubsetIndex(members, ambient), a) ==
            h_functional(I, a) + 1 - 2 * a.alphas[i0 - 1]);
    }
  }
}

TEST_CASE("region membership landmarks") {
  // The center: everything holds in dimensions 2 and 3; the nef description
  // fails from dimension 4 on (H_{i,j} = (n+3)/2 > 3).
  for (int n : {2, 3}) {
    const RegionMembership r = region_membership(center(n));
    CHECK(r.in_delta);
    CHECK(r.in_mov);
    CHECK(r.in_nef);
  }
  for (int n : {4, 5, 6}) {
    const RegionMembership r = region_membership(center(n));
    CHECK(r.in_delta);
    CHECK(r.in_mov);
    CHECK_FALSE(r.in_nef);
  }
  // Indicator of a single index: on the boundary of Delta, outside Mov.
  const RegionMembership xi = region_membership(indicator_point(SubsetIndex({1}, 7)));
  CHECK(xi.in_delta);
  CHECK_FALSE(xi.in_mov);
  // Outside the box: everything fails.
  WeightPoint bad = center(3);
  bad.alphas[0] = Rat(-1);
  const RegionMembership rb = region_membership(bad);
  CHECK_FALSE(rb.in_delta);
  CHECK_FALSE(rb.in_mov);
}

TEST_CASE("nesting of the regions at sampled points") {
  RatSampler rng(123);
  // For n = 3 the nef description implies the moving one on box points; on
  // surfaces (n = 2) it does not, since the level-2 wall at the full odd set
  // (the conic through all five points) is itself a nef wall there.  In all
  // dimensions mov => delta.
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 250; ++trial) {
      WeightPoint a;
      for (int i = 0; i < n + 3; ++i)
        a.alphas.push_back(make_rat(rng.next_int(0, 12), 12));
      const RegionMembership r = region_membership(a);
      if (n == 3 && r.in_nef) CHECK(r.in_mov);
      if (r.in_mov) CHECK(r.in_delta);
    }
  }
}

TEST_CASE("weight images of nef divisor classes land in the nef region") {
  RatSampler rng(321);
  for (int n = 4; n <= 7; ++n) {
    const int k = n + 3;
    for (int trial = 0; trial < 40; ++trial) {
      // b_i <= 0 random; a large enough that every pair constraint holds.
      std::vector<Rat> b;
      for (int i = 0; i < k; ++i) b.push_back(Rat(-rng.next_int(0, 3)));
      Rat need = 0;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
          const Rat lower = -b[i] - b[j];
          if (lower > need) need = lower;
        }
      const DivisorClass d(n, k, need + rng.next_int(0, 2), b);
      if (d.h() == 0) continue;  // degenerate: the zero class
      CHECK(positivity_report(d).min_value >= 0);
      const WeightPoint a = weight_projection(d);
      const RegionMembership r = region_membership(a);
      CHECK(r.in_nef);
      CHECK(r.in_mov);
      CHECK(r.in_delta);
      for (const Rat& alpha : a.alphas) {
        CHECK(alpha >= 0);
        CHECK(alpha <= 1);
      }
    }
  }
}

TEST_CASE("legal walls and signatures") {
  // Levels run from 2 to (n+3)/2 with parity opposite to |I|.
  for (const WallId& w : legal_walls(4)) {
    CHECK(w.level >= 2);
    CHECK(2 * w.level <= 7);
    CHECK((w.I.size() % 2) != (w.level % 2));
  }

  // Even n: the center never sits on a wall, and lies above all of them.
  const ChamberSignature sig4 = chamber_signature(center(4), 4);
  CHECK(sig4.signs.size() == legal_walls(4).size());
  for (const auto& [w, s] : sig4.signs) CHECK(s == WallSign::above);

  // Odd n: the center sits exactly on the top-level walls.
  const ChamberSignature sig5 = chamber_signature(center(5), 5);
  for (const auto& [w, s] : sig5.signs) {
    if (2 * w.level == 5 + 3)
      CHECK(s == WallSign::on);
    else
      CHECK(s == WallSign::above);
  }

  // A point outside Delta has no chamber signature.
  WeightPoint outside = center(4);
  outside.alphas[0] = Rat(2);
  CHECK_THROWS_AS(chamber_signature(outside, 4), std::domain_error);
}

TEST_CASE("signatures differ exactly across separating walls") {
  const int n = 4;
  WeightPoint a = center(n);
  WeightPoint b = center(n);
  // Nudge two coordinates; both points stay inside Delta.
  b.alphas[0] = make_rat(9, 10);
  b.alphas[1] = make_rat(1, 5);
  const ChamberSignature sa = chamber_signature(a, n);
  const ChamberSignature sb = chamber_signature(b, n);
  for (const auto& [w, s] : sa.signs) {
    const WallSign t = sb.signs.at(w);
    const Rat va = h_functional(w.I, a) - w.level;
    const Rat vb = h_functional(w.I, b) - w.level;
    if (s != t)
      CHECK(((va > 0 && vb <= 0) || (va < 0 && vb >= 0) || (va == 0 && vb != 0)));
    else
      CHECK(((va > 0 && vb > 0) || (va < 0 && vb < 0) || (va == 0 && vb == 0)));
  }
}

TEST_CASE("wall classification") {
  const int n = 5, ambient = 8;
  // Interior wall at level 3: flips a line locus to a 3-plane locus.
  const WallId flip{SubsetIndex({1, 2}, ambient), 3};
  CHECK(classify_wall(flip, n) == WallKind{FlipWall{1, 3}});
  // Level-2 walls blow down the extremal divisor of the complement.
  const WallId down{SubsetIndex({1, 2, 3}, ambient), 2};
  const WallKind kind = classify_wall(down, n);
  REQUIRE(std::holds_alternative<BlowDownWall>(kind));
  CHECK(std::get<BlowDownWall>(kind).exceptional ==
        SubsetIndex({1, 2, 3}, ambient).complement());
  // Box facets are P^1-bundle contractions.
  CHECK(std::holds_alternative<P1BundleWall>(classify_wall(BoundaryFacet{3, 0}, n)));
  CHECK(std::holds_alternative<P1BundleWall>(classify_wall(BoundaryFacet{8, 1}, n)));
  // Parity or range violations are rejected.
  CHECK_THROWS_AS(classify_wall(WallId{SubsetIndex({1}, ambient), 3}, n),
                  std::invalid_argument);
  CHECK_THROWS_AS(classify_wall(WallId{SubsetIndex({1, 2}, ambient), 5}, n),
                  std::invalid_argument);
  CHECK_THROWS_AS(classify_wall(BoundaryFacet{3, 2}, n), std::invalid_argument);
}

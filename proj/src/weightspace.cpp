#include "logfano/weightspace.hpp"

#include <bit>
#include <sstream>

namespace logfano {
namespace {

// Gray-code sweep over all subsets of {1..ambient}, maintaining H_I
// incrementally: toggling element i changes H by +-(1 - 2 a_i). The visitor
// receives the current mask and H value.
template <typename Visit>
void sweep_h_values(const WeightPoint& a, Visit&& visit) {
  const int ambient = a.ambient();
  if (ambient > 20) throw std::invalid_argument("weight-space sweep limited to ambient <= 20");
  std::vector<Rat> w(ambient);
  Rat h = 0;
  for (int i = 0; i < ambient; ++i) {
    w[i] = Rat(1) - Rat(2) * a.alphas[i];
    h += a.alphas[i];
  }
  std::uint32_t gray = 0;
  visit(gray, h);
  const std::uint64_t total = std::uint64_t(1) << ambient;
  for (std::uint64_t step = 1; step < total; ++step) {
    const std::uint32_t next = static_cast<std::uint32_t>(step ^ (step >> 1));
    const std::uint32_t flipped = next ^ gray;  // exactly one bit
    int bit = std::countr_zero(flipped);
    if (next & flipped)
      h += w[bit];
    else
      h -= w[bit];
    gray = next;
    visit(gray, h);
  }
}

bool in_box(const WeightPoint& a) {
  for (const Rat& x : a.alphas)
    if (x < 0 || x > 1) return false;
  return true;
}

}  // namespace

const Rat& WeightPoint::alpha(int i) const {
  if (i < 1 || i > ambient()) throw std::out_of_range("weight coordinate index out of range");
  return alphas[i - 1];
}

std::string WeightPoint::to_string() const {
  std::ostringstream out;
  out << "(";
  for (int i = 0; i < ambient(); ++i) {
    if (i) out << ", ";
    out << rat_to_string(alphas[i]);
  }
  out << ")";
  return out.str();
}

WeightPoint weight_projection(const DivisorClass& d) {
  if (d.k() != d.n() + 3)
    throw std::invalid_argument("weight projection is defined on blow-ups at k = n+3 points");
  Rat denom = Rat(d.n() + 1) * d.h();
  for (const Rat& x : d.e_all()) denom += x;
  if (denom == 0) throw std::domain_error("weight projection undefined: zero denominator");
  WeightPoint a;
  a.alphas.reserve(d.k());
  for (int i = 1; i <= d.k(); ++i) a.alphas.push_back((d.h() + d.e(i)) / denom);
  return a;
}

DivisorClass extremal_class(const SubsetIndex& I, int n) {
  const int ambient = n + 3;
  if (I.ambient() != ambient)
    throw std::invalid_argument("extremal class label must be a subset of {1..n+3}");
  const int comp = ambient - I.size();
  if (comp % 2 == 0)
    throw std::invalid_argument("extremal class needs a complement of odd size");
  const int k = (comp - 1) / 2;
  std::vector<Rat> e(ambient);
  for (int i = 1; i <= ambient; ++i) e[i - 1] = I.contains(i) ? Rat(-k) : Rat(-(k - 1));
  return DivisorClass(n, ambient, Rat(k), std::move(e));
}

Rat h_functional(const SubsetIndex& I, const WeightPoint& a) {
  if (I.ambient() != a.ambient())
    throw std::invalid_argument("H_I functional needs matching ambient sizes");
  Rat out = 0;
  for (int i = 1; i <= a.ambient(); ++i) {
    if (I.contains(i))
      out += Rat(1) - a.alphas[i - 1];
    else
      out += a.alphas[i - 1];
  }
  return out;
}

WeightPoint indicator_point(const SubsetIndex& J) {
  WeightPoint a;
  a.alphas.assign(J.ambient(), Rat(0));
  for (int m : J.members()) a.alphas[m - 1] = 1;
  return a;
}

RegionMembership region_membership(const WeightPoint& a) {
  RegionMembership out;
  const bool box = in_box(a);
  bool delta_ok = true, mov_ok = true, nef_lower = true, nef_upper = true;
  sweep_h_values(a, [&](std::uint32_t mask, const Rat& h) {
    const int card = std::popcount(mask);
    if (card % 2 == 0) {
      if (h < 1) delta_ok = false;
    } else {
      if (h < 2) mov_ok = false;
    }
    if (card == 1 && h < 2) nef_lower = false;
    if (card == 2 && h > 3) nef_upper = false;
  });
  out.in_delta = box && delta_ok;
  out.in_mov = box && mov_ok;
  out.in_nef = nef_lower && nef_upper;
  return out;
}

std::vector<WallId> legal_walls(int n) {
  const int ambient = n + 3;
  std::vector<WallId> out;
  for (int level = 2; 2 * level <= ambient; ++level)
    for (int card = 0; card <= ambient; ++card) {
      if (card % 2 == level % 2) continue;
      for (const auto& I : subsets_of_size(ambient, card)) out.push_back({I, level});
    }
  return out;
}

ChamberSignature chamber_signature(const WeightPoint& a, int n) {
  const int ambient = n + 3;
  if (a.ambient() != ambient)
    throw std::invalid_argument("chamber signature needs a point with n+3 coordinates");
  if (!region_membership(a).in_delta)
    throw std::domain_error("chamber signature requires a point of Delta");
  ChamberSignature sig;
  sig.n = n;
  sweep_h_values(a, [&](std::uint32_t mask, const Rat& h) {
    const int card = std::popcount(mask);
    const SubsetIndex I = SubsetIndex::from_bits(mask, ambient);
    for (int level = 2; 2 * level <= ambient; ++level) {
      if (card % 2 == level % 2) continue;
      WallSign s = WallSign::on;
      if (h < level)
        s = WallSign::below;
      else if (h > level)
        s = WallSign::above;
      sig.signs.emplace(WallId{I, level}, s);
    }
  });
  return sig;
}

WallKind classify_wall(const WallId& w, int n) {
  const int ambient = n + 3;
  if (w.I.ambient() != ambient)
    throw std::invalid_argument("wall label must be a subset of {1..n+3}");
  if (w.level < 2 || 2 * w.level > ambient || w.I.size() % 2 == w.level % 2)
    throw std::invalid_argument("illegal wall: need 2 <= k <= (n+3)/2 and |I| != k mod 2");
  if (w.level == 2) return BlowDownWall{w.I.complement()};
  return FlipWall{w.level - 2, n + 1 - w.level};
}

WallKind classify_wall(const BoundaryFacet& f, int n) {
  const int ambient = n + 3;
  if (f.index < 1 || f.index > ambient)
    throw std::invalid_argument("facet index outside 1..n+3");
  if (f.value != 0 && f.value != 1)
    throw std::invalid_argument("box facets sit at alpha_i = 0 or 1");
  return P1BundleWall{};
}

}  // namespace logfano

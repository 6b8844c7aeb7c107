#include "logfano/secant.hpp"

#include <algorithm>

namespace logfano {
namespace {

void check_label_ambient(const SubsetIndex& I, int n) {
  if (n < 2) throw std::invalid_argument("join labels need ambient n >= 2");
  if (I.ambient() != n + 3)
    throw std::invalid_argument("join label vertex must be a subset of {1..n+3}");
}

bool label_is_legal(const SubsetIndex& I, int k, int n) {
  if (k < 0) return false;
  if (I.empty() && k == 0) return false;  // neither a span nor a secant
  return 2 * k - 1 + I.size() <= n - 1;   // proper subvariety of P^n
}

}  // namespace

JoinLabel::JoinLabel(SubsetIndex I, int k, int n) : n(n), vertex(std::move(I)), secant_index(k) {
  check_label_ambient(vertex, n);
  if (!label_is_legal(vertex, k, n))
    throw std::invalid_argument("illegal join label: need k >= 0 (>= 1 for a bare secant) and 2k-1+|I| <= n-1");
}

JoinLabel JoinLabel::secant(int k, int n) {
  return JoinLabel(SubsetIndex::empty_set(n + 3), k, n);
}

std::string JoinLabel::name() const {
  if (vertex.empty()) return "sec_" + std::to_string(secant_index);
  std::string out = "Y^" + std::to_string(dim()) + "_{";
  bool first = true;
  for (int m : vertex.members()) {
    if (!first) out += ",";
    out += std::to_string(m);
    first = false;
  }
  return out + "}";
}

bool JoinLabel::operator<(const JoinLabel& other) const {
  if (n != other.n) return n < other.n;
  if (vertex.size() != other.vertex.size()) return vertex.size() < other.vertex.size();
  if (vertex.bits() != other.vertex.bits()) return vertex.bits() < other.vertex.bits();
  return secant_index < other.secant_index;
}

JoinProfile join_profile(const JoinLabel& label) {
  JoinProfile out;
  out.dim = label.dim();
  out.degree = binomial(label.n - label.vertex.size() - label.secant_index + 1,
                        label.secant_index);
  if (label_is_legal(label.vertex, label.secant_index - 1, label.n))
    out.singular_locus = JoinLabel(label.vertex, label.secant_index - 1, label.n);
  return out;
}

Int join_multiplicity(const JoinLabel& big, const JoinLabel& small) {
  if (big.n != small.n || !(big.vertex == small.vertex))
    throw std::invalid_argument("nested multiplicity needs the same vertex set and ambient");
  if ((big.n - big.vertex.size()) % 2 != 0)
    throw std::invalid_argument("nested multiplicity needs n - |I| even");
  if (big.dim() <= small.dim())
    throw std::invalid_argument("nested multiplicity needs dim big > dim small");
  return Int((big.dim() - small.dim()) / 2 + 1);
}

std::vector<JoinLabel> intersect_same_dim(const SubsetIndex& I1, const SubsetIndex& I2, int d,
                                          int n) {
  check_label_ambient(I1, n);
  check_label_ambient(I2, n);
  if (!I1.disjoint_from(I2))
    throw std::invalid_argument("intersection rule requires disjoint vertex sets");
  const int m1 = I1.size(), m2 = I2.size();
  if ((m1 + m2) % 2 != 0)
    throw std::invalid_argument("vertex sizes of equal-dimensional joins must share parity");
  const int s = (m1 + m2) / 2;
  // Both inputs must be honest labels of dimension d.
  for (int m : {m1, m2}) {
    const int twice_k = d + 1 - m;
    if (twice_k % 2 != 0) throw std::invalid_argument("no join of this vertex size has dimension d");
  }
  const SubsetIndex I1_label = I1;  // readability
  if (!label_is_legal(I1_label, (d + 1 - m1) / 2, n) || !label_is_legal(I2, (d + 1 - m2) / 2, n))
    throw std::invalid_argument("inputs are not legal join labels of dimension d");
  if (d > n - s) throw std::invalid_argument("intersection rule requires d <= n - s");

  const SubsetIndex pool = I1.set_union(I2);
  std::vector<JoinLabel> out;
  // Enumerate J within I1 union I2 via submasks of the pool.
  const std::uint32_t pool_bits = pool.bits();
  std::uint32_t sub = pool_bits;
  for (;;) {
    const SubsetIndex J = SubsetIndex::from_bits(sub, n + 3);
    if (I1.distance(J) == s && I2.distance(J) == s) {
      const int numer = d - s + 1 - J.size();
      if (numer % 2 == 0) {
        const int kJ = numer / 2;
        if (label_is_legal(J, kJ, n)) out.emplace_back(J, kJ, n);
      }
    }
    if (sub == 0) break;
    sub = (sub - 1) & pool_bits;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<JoinLabel> intersect_offset(const SubsetIndex& div_pair, const SubsetIndex& sing_pair,
                                        int n) {
  check_label_ambient(div_pair, n);
  check_label_ambient(sing_pair, n);
  if (div_pair.size() != 2 || sing_pair.size() != 2)
    throw std::invalid_argument("offset intersection takes two index pairs");
  if (!div_pair.disjoint_from(sing_pair))
    throw std::invalid_argument("offset intersection requires disjoint index pairs");
  if (n % 2 != 0 || n < 6)
    throw std::invalid_argument("offset intersection labels need n even, n >= 6");
  const auto ij = div_pair.members();
  const auto rs = sing_pair.members();
  std::vector<JoinLabel> out;
  const int k_single = (n - 4) / 2;  // Y^{n-4}_{r}: 2k - 1 + 1 = n - 4
  const int k_triple = (n - 6) / 2;  // Y^{n-4}_{i,r,s}: 2k - 1 + 3 = n - 4
  out.emplace_back(SubsetIndex({rs[0]}, n + 3), k_single, n);
  out.emplace_back(SubsetIndex({rs[1]}, n + 3), k_single, n);
  out.emplace_back(SubsetIndex({ij[0], rs[0], rs[1]}, n + 3), k_triple, n);
  out.emplace_back(SubsetIndex({ij[1], rs[0], rs[1]}, n + 3), k_triple, n);
  std::sort(out.begin(), out.end());
  return out;
}

RationalPoint rnc_point(const Rat& t, int n) {
  RationalPoint p;
  p.coords.resize(n + 1);
  Rat pow = 1;
  for (int i = 0; i <= n; ++i) {
    p.coords[i] = pow;
    pow *= t;
  }
  return p;
}

std::vector<Rat> default_anchors(int n) {
  std::vector<Rat> out;
  for (int i = 1; i <= n + 3; ++i) out.emplace_back(i);
  return out;
}

RationalPoint sample_join_point(const JoinLabel& label, const std::vector<Rat>& anchors,
                                RatSampler& sampler) {
  const int n = label.n;
  if (static_cast<int>(anchors.size()) != n + 3)
    throw std::invalid_argument("need n+3 anchor parameters");
  for (std::size_t i = 0; i < anchors.size(); ++i)
    for (std::size_t j = i + 1; j < anchors.size(); ++j)
      if (anchors[i] == anchors[j]) throw std::invalid_argument("anchor parameters must be distinct");

  std::vector<Rat> params;  // curve parameters entering the combination
  for (int i : label.vertex.members()) params.push_back(anchors[i - 1]);
  std::vector<Rat> taken = anchors;
  for (int j = 0; j < label.secant_index; ++j) {
    // Fresh parameter distinct from every anchor and earlier choice; the
    // retry bound is cosmetic (collisions need an exact rational match).
    for (int attempt = 0;; ++attempt) {
      if (attempt > 200) throw std::runtime_error("could not sample a fresh curve parameter");
      Rat s = sampler.next_rational(60, 12);
      if (std::find(taken.begin(), taken.end(), s) == taken.end()) {
        taken.push_back(s);
        params.push_back(s);
        break;
      }
    }
  }
  RationalPoint p;
  p.coords.assign(n + 1, Rat(0));
  for (const Rat& t : params) {
    const Rat c = sampler.next_rational(20, 8, /*nonzero=*/true);
    const RationalPoint q = rnc_point(t, n);
    for (int i = 0; i <= n; ++i) p.coords[i] += c * q.coords[i];
  }
  return p;
}

int hankel_rank(const RationalPoint& p, int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("hankel_rank needs even n >= 2");
  if (static_cast<int>(p.coords.size()) != n + 1)
    throw std::invalid_argument("point needs n+1 homogeneous coordinates");
  const int h = n / 2;
  std::vector<std::vector<Rat>> m(h + 1, std::vector<Rat>(h + 1));
  for (int i = 0; i <= h; ++i)
    for (int j = 0; j <= h; ++j) m[i][j] = p.coords[i + j];
  return exact_rank(m);
}

}  // namespace logfano

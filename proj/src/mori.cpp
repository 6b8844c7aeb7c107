#include "logfano/mori.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace logfano {
namespace {

bool cone_description_valid(int n, int k) { return k <= 2 * n || (n == 3 && k <= 8); }

// Infeasible constraint marker for the interval solver.
struct Constraints {
  std::optional<Rat> lower;  // strict lower bounds: eps > lower
  std::optional<Rat> upper;  // strict upper bounds: eps < upper
  bool infeasible = false;

  // (A - eps*D).g > 0 reads  a - eps*b > 0  with a = A.g, b = D.g.
  void add(const Rat& a, const Rat& b) {
    if (b == 0) {
      if (a <= 0) infeasible = true;
      return;
    }
    Rat bound = a / b;
    if (b > 0) {  // eps < a/b
      if (!upper || bound < *upper) upper = bound;
    } else {  // eps > a/b
      if (!lower || bound > *lower) lower = bound;
    }
  }
};

}  // namespace

std::string GeneratorRef::name() const {
  switch (kind) {
    case GenKind::R:
      return "R_" + std::to_string(i);
    case GenKind::LPair:
      return "L_" + std::to_string(i) + "_" + std::to_string(j);
    case GenKind::LSingle:
      return "L_i_" + std::to_string(i);
    case GenKind::LFree:
      return "L";
  }
  throw std::logic_error("unreachable generator kind");
}

GeneratorRef GeneratorRef::parse(const std::string& name) {
  auto bad = [&] { return std::invalid_argument("unrecognized generator name: " + name); };
  auto to_index = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) throw bad();
    return std::stoi(s);
  };
  if (name == "L") return {GenKind::LFree};
  if (name.rfind("L_i_", 0) == 0) return {GenKind::LSingle, to_index(name.substr(4))};
  if (name.rfind("R_", 0) == 0) return {GenKind::R, to_index(name.substr(2))};
  if (name.rfind("L_", 0) == 0) {
    const auto sep = name.find('_', 2);
    if (sep == std::string::npos) throw bad();
    return {GenKind::LPair, to_index(name.substr(2, sep - 2)), to_index(name.substr(sep + 1))};
  }
  throw bad();
}

CurveClass GeneratorRef::to_class(int n, int k) const {
  switch (kind) {
    case GenKind::R:
      return curve_exceptional(i, n, k);
    case GenKind::LPair:
      return curve_line_through(i, j, n, k);
    case GenKind::LSingle:
      return curve_line_through(i, n, k);
    case GenKind::LFree:
      return curve_line(n, k);
  }
  throw std::logic_error("unreachable generator kind");
}

MoriGenerators mori_generators(int n, int k) {
  if (n < 2 || k < 0) throw std::invalid_argument("mori_generators needs n >= 2, k >= 0");
  MoriGenerators out;
  out.n = n;
  out.k = k;
  out.validity = cone_description_valid(n, k);
  for (int i = 1; i <= k; ++i)
    out.generators.push_back({{GenKind::R, i}, curve_exceptional(i, n, k)});
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      out.generators.push_back({{GenKind::LPair, i, j}, curve_line_through(i, j, n, k)});
  return out;
}

PositivityReport positivity_report(const DivisorClass& d) {
  const MoriGenerators gens = mori_generators(d.n(), d.k());
  PositivityReport report;
  report.cone_proven = gens.validity;
  bool first = true;
  auto account = [&](const GeneratorRef& ref, const Rat& value) {
    if (first || value < report.min_value) report.min_value = value;
    first = false;
    if (value <= 0) report.violating.push_back(ref);
  };
  if (d.k() == 0) {
    // No exceptional geometry: positivity is tested against the line class.
    account({GenKind::LFree}, intersection_pairing(d, curve_line(d.n(), 0)));
  } else {
    for (const auto& g : gens.generators) account(g.ref, intersection_pairing(d, g.cls));
  }
  report.ample = report.violating.empty();
  report.nef = true;
  if (report.min_value < 0) report.nef = false;
  return report;
}

EpsilonInterval epsilon_interval(const DivisorClass& a, const DivisorClass& d) {
  if (a.n() != d.n() || a.k() != d.k())
    throw std::invalid_argument("epsilon_interval requires classes on the same blow-up");
  const MoriGenerators gens = mori_generators(a.n(), a.k());
  if (!gens.validity)
    throw std::domain_error("cone of curves is not proven for this (n, k); refusing to solve");
  Constraints cons;
  if (a.k() == 0) {
    const CurveClass line = curve_line(a.n(), 0);
    cons.add(intersection_pairing(a, line), intersection_pairing(d, line));
  } else {
    for (const auto& g : gens.generators)
      cons.add(intersection_pairing(a, g.cls), intersection_pairing(d, g.cls));
  }
  if (cons.infeasible) return EpsilonInterval::empty_interval();
  return EpsilonInterval(cons.lower, true, cons.upper, true);
}

std::vector<DecompositionTerm> decompose_curve(const CurveClass& c) {
  const int n = c.n(), k = c.k();
  if (!cone_description_valid(n, k))
    throw std::domain_error("cone of curves is not proven for this (n, k); refusing to decompose");
  if (c.l().get_den() != 1 || c.l() <= 0)
    throw std::invalid_argument("decompose_curve needs integral degree d > 0");
  const long d0 = c.l().get_num().get_si();
  std::vector<long> m(k);
  for (int i = 1; i <= k; ++i) {
    const Rat mi = -c.r(i);
    if (mi.get_den() != 1 || mi < 0)
      throw std::invalid_argument("decompose_curve needs integral multiplicities m_i >= 0");
    m[i - 1] = mi.get_num().get_si();
  }

  // Accumulate generator -> coefficient, then emit in a stable order.
  std::map<std::string, std::pair<GeneratorRef, long>> acc;
  auto add = [&](GeneratorRef ref, long coeff) {
    if (coeff == 0) return;
    if (ref.kind == GenKind::LPair && ref.i > ref.j) std::swap(ref.i, ref.j);
    auto [it, inserted] = acc.try_emplace(ref.name(), ref, 0);
    it->second.second += coeff;
  };

  // Point indices sorted by multiplicity, ties broken by index.
  auto sorted_indices = [&](const std::vector<long>& mult) {
    std::vector<int> idx(mult.size());
    std::iota(idx.begin(), idx.end(), 1);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return mult[a - 1] < mult[b - 1]; });
    return idx;
  };

  if (k <= 2 * n) {
    // Pairing branch: with m sorted ascending (sigma), split off
    // m_{s1} L_{s1,s2} + (m_{s2}-m_{s1}) L_{s2}, then the next pair, and so
    // on; an odd trailing index contributes m_{sk} L_{sk}, which is emitted
    // expanded as m_{sk} (L_{s(k-1),sk} + R_{s(k-1)}) when a partner exists.
    // The leftover degree d - (m_{s2} + m_{s4} + ...) rides on L and must be
    // nonnegative or the class is not a valid input.
    const auto sigma = sorted_indices(m);
    long used = 0;
    for (std::size_t p = 0; p + 1 < sigma.size(); p += 2) {
      const int a = sigma[p], b = sigma[p + 1];
      add({GenKind::LPair, a, b}, m[a - 1]);
      add({GenKind::LSingle, b}, m[b - 1] - m[a - 1]);
      used += m[b - 1];
    }
    if (k % 2 == 1) {
      const int last = sigma.back();
      if (k == 1) {
        add({GenKind::LSingle, last}, m[last - 1]);
      } else {
        const int partner = sigma[sigma.size() - 2];
        add({GenKind::LPair, partner, last}, m[last - 1]);
        add({GenKind::R, partner}, m[last - 1]);
      }
      used += m[last - 1];
    }
    if (used > d0)
      throw std::invalid_argument(
          "multiplicities too large: the class is not a nonnegative combination");
    add({GenKind::LFree}, d0 - used);
  } else {
    // n = 3, k in {7, 8}: inductive branch. Requires m_i <= d and
    // sum m_i <= 2d; both bounds are preserved when a line through the two
    // largest-multiplicity points is split off, so the loop terminates with
    // at most one positive multiplicity left.
    long d = d0;
    long total = std::accumulate(m.begin(), m.end(), 0L);
    if (*std::max_element(m.begin(), m.end()) > d || total > 2 * d)
      throw std::invalid_argument(
          "inductive decomposition requires m_i <= d and sum m_i <= 2d");
    for (;;) {
      const auto sigma = sorted_indices(m);
      const int top = sigma[k - 1], second = sigma[k - 2];
      if (m[second - 1] == 0) {
        add({GenKind::LSingle, top}, m[top - 1]);
        add({GenKind::LFree}, d - m[top - 1]);
        break;
      }
      add({GenKind::LPair, second, top}, 1);
      --d;
      --m[second - 1];
      --m[top - 1];
    }
  }

  std::vector<DecompositionTerm> terms;
  for (auto& [name, entry] : acc)
    if (entry.second != 0) terms.push_back({entry.first, Rat(entry.second)});
  // Stable display order: L first, then L_i, L_{i,j}, R_i by index.
  auto rank = [](const GeneratorRef& g) {
    switch (g.kind) {
      case GenKind::LFree:
        return 0;
      case GenKind::LSingle:
        return 1;
      case GenKind::LPair:
        return 2;
      case GenKind::R:
        return 3;
    }
    return 4;
  };
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    const int ra = rank(a.gen), rb = rank(b.gen);
    if (ra != rb) return ra < rb;
    if (a.gen.i != b.gen.i) return a.gen.i < b.gen.i;
    return a.gen.j < b.gen.j;
  });
  return terms;
}

CurveClass recombine(const std::vector<DecompositionTerm>& terms, int n, int k) {
  CurveClass out = CurveClass::zero(n, k);
  for (const auto& t : terms) out += t.coeff * t.gen.to_class(n, k);
  return out;
}

}  // namespace logfano

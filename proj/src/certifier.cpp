#include "logfano/certifier.hpp"

#include <algorithm>
#include <map>

namespace logfano {
namespace {

DivisorClass uniform_divisor(int n, int k, long h, long e) {
  return DivisorClass(n, k, Rat(h), std::vector<Rat>(k, Rat(e)));
}

long bin_l(long n, long k) { return binomial(n, k).get_si(); }

std::string points_phrase(int count) {
  return std::to_string(count) + (count == 1 ? " point" : " points");
}

CertConfig cremona_config(int n) {
  if (n < 2) throw std::invalid_argument("cremona configuration needs n >= 2");
  CertConfig c;
  c.theorem = TheoremId::Cremona;
  c.param_n = n;
  c.dim = n;
  c.points = n + 1;
  c.divisor = uniform_divisor(n, n + 1, n, -(n - 1));
  c.target = SingTarget::Klt;
  // Strata spanned by h+1 of the n+1 fundamental points, h = 1..n-2; the
  // divisor has multiplicity n-h-1 along each, matching the discrepancy
  // offset of the corresponding blow-up.
  for (int h = 1; h <= n - 2; ++h)
    c.ledger.push_back({"spans of " + points_phrase(h + 1) + " (h=" + std::to_string(h) + ")",
                        bin_l(n + 1, h + 1), n - h - 1, Rat(n - h - 1)});
  return c;
}

CertConfig hyperplanes_config(int n) {
  if (n < 2) throw std::invalid_argument("hyperplane configuration needs n >= 2");
  CertConfig c;
  c.theorem = TheoremId::Hyperplanes;
  c.param_n = n;
  c.dim = n;
  c.points = n + 2;
  c.divisor = uniform_divisor(n, n + 2, (n + 2) * (n + 1) / 2, -n * (n + 1) / 2);
  c.target = SingTarget::Klt;
  // The divisor is the union of the C(n+2, n) hyperplanes through n of the
  // points; exactly C(n-h+1, 2) of them contain a span of h+1 points.
  for (int h = 1; h <= n - 2; ++h)
    c.ledger.push_back({"spans of " + points_phrase(h + 1) + " (h=" + std::to_string(h) + ")",
                        bin_l(n + 2, h + 1), n - h - 1, Rat(bin_l(n - h + 1, 2))});
  return c;
}

CertConfig odd_config(int n) {
  if (n < 5 || n % 2 == 0)
    throw std::invalid_argument("odd configuration needs odd n >= 5");
  const int h = (n - 1) / 2;
  CertConfig c;
  c.theorem = TheoremId::Odd;
  c.param_n = n;
  c.dim = n;
  c.points = n + 3;
  c.divisor = uniform_divisor(n, n + 3, 3 * h + 4, -(3 * h + 1));
  c.target = SingTarget::Klt;
  for (int k = 1; k <= h; ++k)
    c.ledger.push_back({"sec_" + std::to_string(k), 1, n - 2 * k, Rat(3 * (h - k + 1))});
  for (int k = 1; k <= h - 1; ++k) {
    c.ledger.push_back({"Y^" + std::to_string(2 * k - 1) + "_{i,j}, i<j in {1,2,3}", 3,
                        n - 2 * k, Rat(3 * (h - k) + 2)});
    c.ledger.push_back({"Y^" + std::to_string(2 * k) + "_{i}, i in {1,2,3}", 3, n - 2 * k - 1,
                        Rat(3 * h - 3 * k + 1)});
    c.ledger.push_back(
        {"Y^" + std::to_string(2 * k) + "_{1,2,3}", 1, n - 2 * k - 1, Rat(3 * (h - k))});
  }
  return c;
}

CertConfig even_config(int n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("even configuration needs even n >= 4");
  const int h = n / 2;
  CertConfig c;
  c.theorem = TheoremId::Even;
  c.param_n = n;
  c.dim = n;
  c.points = n + 3;
  c.divisor = uniform_divisor(n, n + 3, 3 * h + 2, -(3 * h - 1));
  c.target = SingTarget::Klt;
  for (int k = 1; k <= h - 1; ++k) {
    c.ledger.push_back({"sec_" + std::to_string(k), 1, n - 2 * k, Rat(3 * h - 3 * k + 1)});
    c.ledger.push_back({"Y^" + std::to_string(2 * k - 1) + "_{i,j}, i<j in {1,2,3,4}", 6,
                        n - 2 * k, Rat(3 * h - 3 * k)});
  }
  for (int k = 1; k <= h - 2; ++k) {
    c.ledger.push_back({"Y^" + std::to_string(2 * k) + "_{i}, i in {1,2,3,4}", 4, n - 2 * k - 1,
                        Rat(3 * h - 3 * k - 1)});
    c.ledger.push_back({"Y^" + std::to_string(2 * k) + "_{i,j,r}, triples in {1,2,3,4}", 4,
                        n - 2 * k - 1, Rat(3 * h - 3 * k - 3)});
  }
  for (int k = 2; k <= h - 2; ++k)
    c.ledger.push_back(
        {"Y^" + std::to_string(2 * k - 1) + "_{1,2,3,4}", 1, n - 2 * k, Rat(3 * h - 3 * k - 1)});
  return c;
}

CertConfig p3_config(TheoremId t, int n) {
  if (n != 3) throw std::invalid_argument("this configuration lives on blow-ups of P^3");
  CertConfig c;
  c.theorem = t;
  c.param_n = 3;
  c.dim = 3;
  switch (t) {
    case TheoremId::P3K4:
      c.points = 4;
      c.divisor = uniform_divisor(3, 4, 3, -2);
      c.target = SingTarget::Klt;  // the divisor here is smooth: empty ledger
      break;
    case TheoremId::P3K5:
      c.points = 5;
      c.divisor = uniform_divisor(3, 5, 10, -6);
      c.target = SingTarget::AmpleOnly;
      c.note = "singularity bounds unquantified by source";
      break;
    case TheoremId::P3K6:
      c.points = 6;
      c.divisor = uniform_divisor(3, 6, 7, -4);
      c.target = SingTarget::AmpleOnly;
      c.note = "singularity bounds unquantified by source";
      break;
    case TheoremId::P3K7:
      c.points = 7;
      c.divisor = uniform_divisor(3, 7, 105, -55);
      c.target = SingTarget::AmpleOnly;
      c.note = "singularity bounds unquantified by source";
      break;
    default:
      throw std::logic_error("not a P^3 configuration");
  }
  return c;
}

CertConfig hassett_config(TheoremId t, int n) {
  if (n < 5)
    throw std::invalid_argument("moduli-weight configurations need n >= 5 (ambient dim >= 2)");
  const bool drop_last = (t == TheoremId::HassettA12);
  CertConfig c;
  c.theorem = t;
  c.param_n = n;
  c.dim = n - 3;
  c.points = drop_last ? n - 2 : n - 1;
  const Rat alpha = make_rat(2, n - 2);
  const Rat beta = make_rat(2, 3);
  // K + Delta on the blow-up: alpha on the hyperplane divisors spanned by
  // dim-1 of the points (through the extra point for the A_{1,2} case),
  // beta on the exceptionals; the class collapses to H - (1/3) sum E.
  c.divisor = DivisorClass(c.dim, c.points, Rat(1), std::vector<Rat>(c.points, make_rat(-1, 3)));
  c.target = SingTarget::Lc;
  c.fixed_coefficients = true;
  c.boundary_coeffs = {alpha, beta};
  if (!drop_last) {
    for (int h = 1; h <= n - 5; ++h)
      c.ledger.push_back({"spans of " + points_phrase(h + 1) + " (h=" + std::to_string(h) + ")",
                          bin_l(n - 1, h + 1), n - h - 4, alpha * bin_l(n - h - 2, 2)});
  } else {
    // The hyperplanes all pass through one extra unblown point; it and the
    // spans through it acquire their own rows.
    c.ledger.push_back(
        {"common point of the hyperplanes", 1, n - 4, alpha * bin_l(n - 2, 2)});
    for (int h = 1; h <= n - 5; ++h) {
      c.ledger.push_back({"spans of " + points_phrase(h + 1) +
                              " through the common point (h=" + std::to_string(h) + ")",
                          bin_l(n - 2, h + 1), n - h - 4,
                          alpha * (Rat(n - h - 3) + bin_l(n - h - 3, 2))});
      c.ledger.push_back({"spans of " + points_phrase(h) +
                              " plus the common point (h=" + std::to_string(h) + ")",
                          bin_l(n - 2, h), n - h - 4, alpha * bin_l(n - h - 2, 2)});
    }
  }
  return c;
}

}  // namespace

std::string theorem_name(TheoremId t) {
  switch (t) {
    case TheoremId::Cremona:
      return "cremona";
    case TheoremId::Hyperplanes:
      return "hyperplanes";
    case TheoremId::Odd:
      return "odd";
    case TheoremId::Even:
      return "even";
    case TheoremId::P3K4:
      return "p3-k4";
    case TheoremId::P3K5:
      return "p3-k5";
    case TheoremId::P3K6:
      return "p3-k6";
    case TheoremId::P3K7:
      return "p3-k7";
    case TheoremId::HassettA1:
      return "hassett-a1";
    case TheoremId::HassettA12:
      return "hassett-a12";
  }
  throw std::logic_error("unreachable theorem id");
}

TheoremId parse_theorem(const std::string& name) {
  static const std::map<std::string, TheoremId> table = {
      {"cremona", TheoremId::Cremona},   {"hyperplanes", TheoremId::Hyperplanes},
      {"odd", TheoremId::Odd},           {"even", TheoremId::Even},
      {"p3-k4", TheoremId::P3K4},        {"p3-k5", TheoremId::P3K5},
      {"p3-k6", TheoremId::P3K6},        {"p3-k7", TheoremId::P3K7},
      {"hassett-a1", TheoremId::HassettA1}, {"hassett-a12", TheoremId::HassettA12}};
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown theorem id: " + name);
  return it->second;
}

CertConfig build_config(TheoremId t, int n) {
  switch (t) {
    case TheoremId::Cremona:
      return cremona_config(n);
    case TheoremId::Hyperplanes:
      return hyperplanes_config(n);
    case TheoremId::Odd:
      return odd_config(n);
    case TheoremId::Even:
      return even_config(n);
    case TheoremId::P3K4:
    case TheoremId::P3K5:
    case TheoremId::P3K6:
    case TheoremId::P3K7:
      return p3_config(t, n);
    case TheoremId::HassettA1:
    case TheoremId::HassettA12:
      return hassett_config(t, n);
  }
  throw std::logic_error("unreachable theorem id");
}

std::vector<Rat> discrepancies(const std::vector<LedgerEntry>& ledger, const Rat& eps) {
  std::vector<Rat> out;
  out.reserve(ledger.size());
  for (const auto& e : ledger) out.push_back(Rat(e.k_coeff) - eps * e.d_mult);
  return out;
}

EpsilonInterval singularity_interval(const std::vector<LedgerEntry>& ledger, SingTarget target) {
  if (target == SingTarget::AmpleOnly)
    throw std::domain_error("no singularity range is certified for this configuration");
  // Boundary-coefficient bound eps < 1 (klt) resp. <= 1 (lc), sharpened by
  // each entry's a_E(eps) = k_coeff - eps*d_mult > -1 (resp >= -1).
  Rat upper = 1;
  for (const auto& e : ledger) {
    if (e.k_coeff < 0 || e.d_mult < 0)
      throw std::invalid_argument("ledger entries need k_coeff >= 0 and d_mult >= 0");
    if (e.d_mult == 0) continue;  // constant discrepancy >= 0 > -1
    const Rat bound = Rat(e.k_coeff + 1) / e.d_mult;
    if (bound < upper) upper = bound;
  }
  if (target == SingTarget::Klt) return EpsilonInterval::half_open(Rat(0), upper);
  return EpsilonInterval::closed(Rat(0), upper);
}

Certificate certify(const CertConfig& config) {
  const MoriGenerators gens = mori_generators(config.dim, config.points);
  if (!gens.validity)
    throw std::domain_error("cone of curves is not proven for this (n, k); refusing to certify");

  Certificate cert;
  cert.theorem = config.theorem;
  cert.param_n = config.param_n;
  cert.divisor = config.divisor;
  cert.fixed_coefficients = config.fixed_coefficients;
  cert.ledger = config.ledger;
  cert.singular_note = config.note;

  if (config.fixed_coefficients) {
    // The stored divisor is the full pair K+Delta; amplitude and the lc
    // bounds are checked at the pair itself, and both ranges collapse to the
    // point {1} so that "verdict <=> joint nonempty" is preserved.
    bool ample = true;
    for (const auto& g : gens.generators) {
      const Rat v = intersection_pairing(config.divisor, g.cls);
      cert.pairings.push_back({g.ref, v, Rat(0)});
      if (v <= 0) ample = false;
    }
    cert.ample = ample ? EpsilonInterval::point(Rat(1)) : EpsilonInterval::empty_interval();
    bool sing_ok = true;
    for (const Rat& a : discrepancies(config.ledger, Rat(1)))
      if (a < -1) sing_ok = false;
    for (const Rat& c : config.boundary_coeffs)
      if (config.target == SingTarget::Klt ? !(c < 1) : !(c <= 1)) sing_ok = false;
    cert.singular =
        sing_ok ? EpsilonInterval::point(Rat(1)) : EpsilonInterval::empty_interval();
    cert.joint = cert.ample.intersect(*cert.singular);
    cert.verdict = !cert.joint.is_empty();
    cert.sample_eps = 1;
    return cert;
  }

  const DivisorClass antican = anticanonical(config.dim, config.points);
  cert.ample = epsilon_interval(antican, config.divisor);
  if (config.points == 0) {
    const CurveClass line = curve_line(config.dim, 0);
    cert.pairings.push_back({{GenKind::LFree},
                             intersection_pairing(antican, line),
                             intersection_pairing(config.divisor, line)});
  } else {
    for (const auto& g : gens.generators)
      cert.pairings.push_back({g.ref, intersection_pairing(antican, g.cls),
                               intersection_pairing(config.divisor, g.cls)});
  }

  if (config.target == SingTarget::AmpleOnly) {
    cert.singular.reset();
    if (cert.singular_note.empty())
      cert.singular_note = "singularity bounds unquantified by source";
    cert.joint = cert.ample;
  } else {
    cert.singular = singularity_interval(config.ledger, config.target);
    cert.joint = cert.ample.intersect(*cert.singular);
  }
  cert.verdict = !cert.joint.is_empty();

  // A representative parameter inside the joint range when one exists.
  cert.sample_eps = 0;
  if (!cert.joint.is_empty()) {
    if (cert.joint.has_lower() && cert.joint.has_upper())
      cert.sample_eps = (cert.joint.lower() + cert.joint.upper()) / 2;
    else if (cert.joint.has_lower())
      cert.sample_eps = cert.joint.lower() + 1;
    else if (cert.joint.has_upper())
      cert.sample_eps = cert.joint.upper() - 1;
  }
  return cert;
}

Certificate certify(TheoremId t, int n) { return certify(build_config(t, n)); }

bool classify_log_fano(int n, int k) {
  if (n < 2) throw std::invalid_argument("classification needs n >= 2");
  if (k < 0) throw std::invalid_argument("classification needs k >= 0");
  if (n == 2) return k <= 8;
  if (n == 3) return k <= 7;
  if (n == 4) return k <= 8;
  return k <= n + 3;
}

std::optional<TheoremId> covering_family(int n, int k) {
  if (n < 3) throw std::invalid_argument("structural coverage is tabulated for n >= 3");
  static const TheoremId candidates[] = {
      TheoremId::Cremona, TheoremId::Hyperplanes, TheoremId::Odd,       TheoremId::Even,
      TheoremId::P3K4,    TheoremId::P3K5,        TheoremId::P3K6,      TheoremId::P3K7,
      TheoremId::HassettA1, TheoremId::HassettA12};
  for (TheoremId t : candidates) {
    // Parameter giving ambient dimension n: the moduli configs use n+3.
    const int param = (t == TheoremId::HassettA1 || t == TheoremId::HassettA12) ? n + 3 : n;
    try {
      const CertConfig c = build_config(t, param);
      if (c.dim == n && c.points >= k) return t;
    } catch (const std::invalid_argument&) {
      continue;  // configuration not defined at this parameter
    }
  }
  return std::nullopt;
}

}  // namespace logfano

#pragma once

// Log Fano certificates for the built-in divisor configurations on blow-ups
// of P^n at general points.
//
// Each configuration packages a divisor class D on X^n_k together with a
// declarative "ledger": one row per family of centers that appears in a log
// resolution of (X, D), carrying the discrepancy offset k_coeff and the
// multiplicity factor d_mult, so the discrepancy along that family at
// parameter eps is a_E(eps) = k_coeff - eps * d_mult.  Certification then
// reduces to intersecting
//
//   * the exact ampleness range of -(K_X + eps D) over the Mori generators,
//   * the exact discrepancy range (klt: all a_E > -1 and eps < 1;
//     lc: all a_E >= -1 and eps <= 1),
//
// and reporting the verdict "the joint range is nonempty".
//
// The two Hassett-style configurations carry fixed coefficients instead of a
// free eps: the divisor stored is the full log pair K+Delta, ampleness is
// tested on the pair itself, and the ranges degenerate to the point {1} so
// that the verdict is still "joint range nonempty".

#include <optional>
#include <string>
#include <vector>

#include "logfano/interval.hpp"
#include "logfano/lattice.hpp"
#include "logfano/mori.hpp"

namespace logfano {

enum class TheoremId {
  Cremona,      // k = n+1, D = nH - (n-1) sum E
  Hyperplanes,  // k = n+2, D = (n+2)(n+1)/2 H - n(n+1)/2 sum E
  Odd,          // k = n+3, n = 2h+1 odd
  Even,         // k = n+3, n = 2h even
  P3K4,         // n = 3, k = 4
  P3K5,         // n = 3, k = 5
  P3K6,         // n = 3, k = 6
  P3K7,         // n = 3, k = 7
  HassettA1,    // moduli weights A_1 on X^{n-3}_{n-1}, fixed coefficients
  HassettA12,   // moduli weights A_{1,2} on X^{n-3}_{n-2}, fixed coefficients
};

std::string theorem_name(TheoremId t);
TheoremId parse_theorem(const std::string& name);

enum class SingTarget { Klt, Lc, AmpleOnly };

struct LedgerEntry {
  std::string center;  // display label for the family of centers
  long count = 0;      // number of centers in the family
  long k_coeff = 0;    // a_E(eps) = k_coeff - eps * d_mult
  Rat d_mult;          // rational to accommodate the fixed-coefficient configs
};

struct CertConfig {
  TheoremId theorem{};
  int param_n = 0;  // the configuration's own n parameter
  int dim = 0;      // ambient dimension of the blow-up it lives on
  int points = 0;   // number of blown-up points
  DivisorClass divisor;  // D (eps families) or K+Delta (fixed coefficients)
  SingTarget target = SingTarget::Klt;
  std::vector<LedgerEntry> ledger;
  bool fixed_coefficients = false;
  std::vector<Rat> boundary_coeffs;  // must stay <= 1 in fixed mode
  std::string note;
};

// Builds the configuration for the given theorem at parameter n; throws on
// out-of-range parameters (e.g. Odd with even n, P3 configs with n != 3).
CertConfig build_config(TheoremId t, int n);

// k_coeff - eps * d_mult per ledger entry, in order.
std::vector<Rat> discrepancies(const std::vector<LedgerEntry>& ledger, const Rat& eps);

// Exact eps-range over which every ledger discrepancy meets the target:
// klt gives [0, min(1, (k+1)/d)) with strict upper bounds, lc gives the
// closed variant. AmpleOnly is rejected (nothing is certified).
EpsilonInterval singularity_interval(const std::vector<LedgerEntry>& ledger, SingTarget target);

// (A - eps D).g = at_zero - eps * slope for one Mori generator g.
struct PairingEvidence {
  GeneratorRef gen;
  Rat at_zero;
  Rat slope;
};

struct Certificate {
  TheoremId theorem{};
  int param_n = 0;
  DivisorClass divisor;
  bool fixed_coefficients = false;
  EpsilonInterval ample;
  std::optional<EpsilonInterval> singular;  // absent for AmpleOnly configs
  std::string singular_note;                // set when singular is absent
  EpsilonInterval joint;
  bool verdict = false;
  std::vector<PairingEvidence> pairings;
  std::vector<LedgerEntry> ledger;
  Rat sample_eps;  // representative parameter for discrepancy reports
};

// Full certification pipeline; requires the Mori cone description to be
// proven for the configuration's (dim, points).
Certificate certify(const CertConfig& config);
Certificate certify(TheoremId t, int n);

// The exact classification of log Fano blow-ups of P^n at k general points.
bool classify_log_fano(int n, int k);

// Structural coverage: some built-in configuration on dimension n with at
// least k points (restriction drops surplus points).  Defined for n >= 3.
std::optional<TheoremId> covering_family(int n, int k);

}  // namespace logfano

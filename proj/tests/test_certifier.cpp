#include <doctest.h>

#include <stdexcept>

#include "logfano/certifier.hpp"

using namespace logfano;

namespace {

const LedgerEntry* find_row(const std::vector<LedgerEntry>& ledger, const std::string& prefix) {
  for (const auto& e : ledger)
    if (e.center.rfind(prefix, 0) == 0) return &e;
  return nullptr;
}

const PairingEvidence* find_pairing(const Certificate& cert, const std::string& gen_name) {
  for (const auto& p : cert.pairings)
    if (p.gen.name() == gen_name) return &p;
  return nullptr;
}

}  // namespace

TEST_CASE("theorem ids round-trip through their names") {
  for (TheoremId t : {TheoremId::Cremona, TheoremId::Hyperplanes, TheoremId::Odd, TheoremId::Even,
                      TheoremId::P3K4, TheoremId::P3K5, TheoremId::P3K6, TheoremId::P3K7,
                      TheoremId::HassettA1, TheoremId::HassettA12})
    CHECK(parse_theorem(theorem_name(t)) == t);
  CHECK_THROWS_AS(parse_theorem("nonsense"), std::invalid_argument);
}

TEST_CASE("configuration ledgers are the expected tables") {
  // Standard Cremona involution divisor on X^4_5.
  const CertConfig cre = build_config(TheoremId::Cremona, 4);
  CHECK(cre.dim == 4);
  CHECK(cre.points == 5);
  CHECK(cre.divisor == DivisorClass(4, 5, Rat(4), std::vector<Rat>(5, Rat(-3))));
  CHECK(cre.target == SingTarget::Klt);
  REQUIRE(cre.ledger.size() == 2);
  CHECK(cre.ledger[0].count == 10);  // lines through 2 of the 5 points
  CHECK(cre.ledger[0].k_coeff == 2);
  CHECK(cre.ledger[0].d_mult == 2);
  CHECK(cre.ledger[1].count == 10);  // planes through 3 of the 5 points
  CHECK(cre.ledger[1].k_coeff == 1);
  CHECK(cre.ledger[1].d_mult == 1);

  // Hyperplane arrangement divisor on X^4_6.
  const CertConfig hyp = build_config(TheoremId::Hyperplanes, 4);
  CHECK(hyp.points == 6);
  CHECK(hyp.divisor == DivisorClass(4, 6, Rat(15), std::vector<Rat>(6, Rat(-10))));
  REQUIRE(hyp.ledger.size() == 2);
  CHECK(hyp.ledger[0].count == 15);
  CHECK(hyp.ledger[0].k_coeff == 2);
  CHECK(hyp.ledger[0].d_mult == 6);  // C(4,2) hyperplanes contain a fixed line
  CHECK(hyp.ledger[1].count == 20);
  CHECK(hyp.ledger[1].k_coeff == 1);
  CHECK(hyp.ledger[1].d_mult == 3);

  // Odd-dimensional secant divisor on X^5_8.
  const CertConfig odd = build_config(TheoremId::Odd, 5);
  CHECK(odd.points == 8);
  CHECK(odd.divisor == DivisorClass(5, 8, Rat(10), std::vector<Rat>(8, Rat(-7))));
  REQUIRE(odd.ledger.size() == 5);
  auto row = [&](int i, long count, long k, long d) {
    CHECK(odd.ledger[i].count == count);
    CHECK(odd.ledger[i].k_coeff == k);
    CHECK(odd.ledger[i].d_mult == d);
  };
  row(0, 1, 3, 6);  // sec_1
  row(1, 1, 1, 3);  // sec_2
  row(2, 3, 3, 5);  // Y^1_{i,j}
  row(3, 3, 2, 4);  // Y^2_{i}
  row(4, 1, 2, 3);  // Y^2_{1,2,3}

  // Even-dimensional variant on X^4_7.
  const CertConfig even = build_config(TheoremId::Even, 4);
  CHECK(even.points == 7);
  CHECK(even.divisor == DivisorClass(4, 7, Rat(8), std::vector<Rat>(7, Rat(-5))));
  REQUIRE(even.ledger.size() == 2);
  CHECK(even.ledger[0].k_coeff == 2);
  CHECK(even.ledger[0].d_mult == 4);  // sec_1
  CHECK(even.ledger[1].count == 6);
  CHECK(even.ledger[1].k_coeff == 2);
  CHECK(even.ledger[1].d_mult == 3);  // Y^1_{i,j}

  // Fixed-coefficient moduli configuration with the dropped point.
  const CertConfig ha = build_config(TheoremId::HassettA12, 6);
  CHECK(ha.dim == 3);
  CHECK(ha.points == 4);
  CHECK(ha.fixed_coefficients);
  CHECK(ha.target == SingTarget::Lc);
  CHECK(ha.divisor == DivisorClass(3, 4, Rat(1), std::vector<Rat>(4, make_rat(-1, 3))));
  REQUIRE(ha.boundary_coeffs.size() == 2);
  CHECK(ha.boundary_coeffs[0] == make_rat(1, 2));  // hyperplane weight
  CHECK(ha.boundary_coeffs[1] == make_rat(2, 3));  // exceptional weight
  REQUIRE(ha.ledger.size() == 3);
  const LedgerEntry* common = find_row(ha.ledger, "common point");
  REQUIRE(common != nullptr);
  CHECK(common->count == 1);
  CHECK(common->k_coeff == 2);
  CHECK(common->d_mult == 3);  // discrepancy exactly -1 at the pair

  // Out-of-range parameters are rejected.
  CHECK_THROWS_AS(build_config(TheoremId::Cremona, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_config(TheoremId::Odd, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_config(TheoremId::Odd, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_config(TheoremId::Even, 5), std::invalid_argument);
  CHECK_THROWS_AS(build_config(TheoremId::P3K5, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_config(TheoremId::HassettA1, 4), std::invalid_argument);
}

TEST_CASE("discrepancies and singularity ranges") {
  std::vector<LedgerEntry> ledger = {{"a", 1, 3, Rat(6)}, {"b", 2, 1, Rat(3)}};
  const auto at_half = discrepancies(ledger, make_rat(1, 2));
  REQUIRE(at_half.size() == 2);
  CHECK(at_half[0] == 0);
  CHECK(at_half[1] == make_rat(-1, 2));

  CHECK(singularity_interval(ledger, SingTarget::Klt) ==
        EpsilonInterval::half_open(Rat(0), make_rat(2, 3)));
  CHECK(singularity_interval(ledger, SingTarget::Lc) ==
        EpsilonInterval::closed(Rat(0), make_rat(2, 3)));

  // No centers: only the boundary-coefficient bound remains.
  CHECK(singularity_interval({}, SingTarget::Klt) == EpsilonInterval::half_open(Rat(0), Rat(1)));
  CHECK(singularity_interval({}, SingTarget::Lc) == EpsilonInterval::closed(Rat(0), Rat(1)));

  // Multiplicity-free entries never constrain.
  CHECK(singularity_interval({{"c", 1, 0, Rat(0)}}, SingTarget::Klt) ==
        EpsilonInterval::half_open(Rat(0), Rat(1)));

  CHECK_THROWS_AS(singularity_interval(ledger, SingTarget::AmpleOnly), std::domain_error);
  CHECK_THROWS_AS(singularity_interval({{"bad", 1, -1, Rat(1)}}, SingTarget::Klt),
                  std::invalid_argument);
}

TEST_CASE("certificate: standard Cremona divisor on X^5_6") {
  const Certificate cert = certify(TheoremId::Cremona, 5);
  CHECK(cert.ample == EpsilonInterval::open(make_rat(2, 3), Rat(1)));
  REQUIRE(cert.singular.has_value());
  CHECK(*cert.singular == EpsilonInterval::half_open(Rat(0), Rat(1)));
  CHECK(cert.joint == EpsilonInterval::open(make_rat(2, 3), Rat(1)));
  CHECK(cert.verdict);
  CHECK(cert.sample_eps == make_rat(5, 6));

  const PairingEvidence* r = find_pairing(cert, "R_1");
  REQUIRE(r != nullptr);
  CHECK(r->at_zero == 4);
  CHECK(r->slope == 4);
  const PairingEvidence* l = find_pairing(cert, "L_1_2");
  REQUIRE(l != nullptr);
  CHECK(l->at_zero == -2);
  CHECK(l->slope == -3);
}

TEST_CASE("certificate: the remaining parameterized families") {
  const Certificate hyp = certify(TheoremId::Hyperplanes, 4);
  CHECK(hyp.ample == EpsilonInterval::open(make_rat(1, 5), make_rat(3, 10)));
  CHECK(*hyp.singular == EpsilonInterval::half_open(Rat(0), make_rat(1, 2)));
  CHECK(hyp.joint == EpsilonInterval::open(make_rat(1, 5), make_rat(3, 10)));
  CHECK(hyp.verdict);

  const Certificate odd = certify(TheoremId::Odd, 5);
  CHECK(odd.ample == EpsilonInterval::open(make_rat(1, 2), make_rat(4, 7)));
  CHECK(*odd.singular == EpsilonInterval::half_open(Rat(0), make_rat(2, 3)));
  CHECK(odd.joint == EpsilonInterval::open(make_rat(1, 2), make_rat(4, 7)));
  CHECK(odd.verdict);

  const Certificate even4 = certify(TheoremId::Even, 4);
  CHECK(even4.ample == EpsilonInterval::open(make_rat(1, 2), make_rat(3, 5)));
  CHECK(*even4.singular == EpsilonInterval::half_open(Rat(0), make_rat(3, 4)));
  CHECK(even4.joint == EpsilonInterval::open(make_rat(1, 2), make_rat(3, 5)));
  CHECK(even4.verdict);

  const Certificate even6 = certify(TheoremId::Even, 6);
  CHECK(even6.ample == EpsilonInterval::open(make_rat(3, 5), make_rat(5, 8)));
  CHECK(*even6.singular == EpsilonInterval::half_open(Rat(0), make_rat(5, 7)));
  CHECK(even6.verdict);
}

TEST_CASE("certificate: small blow-ups of P^3") {
  const Certificate k4 = certify(TheoremId::P3K4, 3);
  CHECK(k4.ample == EpsilonInterval::open(Rat(0), Rat(1)));
  REQUIRE(k4.singular.has_value());  // smooth divisor: empty ledger, klt range
  CHECK(*k4.singular == EpsilonInterval::half_open(Rat(0), Rat(1)));
  CHECK(k4.joint == EpsilonInterval::open(Rat(0), Rat(1)));
  CHECK(k4.verdict);

  const Certificate k5 = certify(TheoremId::P3K5, 3);
  CHECK(k5.ample == EpsilonInterval::open(Rat(0), make_rat(1, 3)));
  CHECK_FALSE(k5.singular.has_value());
  CHECK(k5.singular_note == "singularity bounds unquantified by source");
  CHECK(k5.joint == k5.ample);
  CHECK(k5.verdict);

  const Certificate k6 = certify(TheoremId::P3K6, 3);
  CHECK(k6.ample == EpsilonInterval::open(Rat(0), make_rat(1, 2)));
  CHECK(k6.verdict);

  const Certificate k7 = certify(TheoremId::P3K7, 3);
  CHECK(k7.ample == EpsilonInterval::open(Rat(0), make_rat(2, 55)));
  CHECK_FALSE(k7.singular.has_value());
  CHECK(k7.joint == k7.ample);
  CHECK(k7.verdict);
  CHECK(k7.sample_eps == make_rat(1, 55));
}

TEST_CASE("certificate: fixed-coefficient moduli pairs") {
  for (int n = 6; n <= 9; ++n) {
    for (TheoremId t : {TheoremId::HassettA1, TheoremId::HassettA12}) {
      const Certificate cert = certify(t, n);
      CHECK(cert.fixed_coefficients);
      CHECK(cert.verdict);
      CHECK(cert.joint == EpsilonInterval::point(Rat(1)));
      for (const auto& p : cert.pairings) {
        CHECK(p.at_zero == make_rat(1, 3));
        CHECK(p.slope == 0);
      }
      Rat min_disc = 1000;
      for (const Rat& a : discrepancies(cert.ledger, Rat(1)))
        if (a < min_disc) min_disc = a;
      CHECK(min_disc >= -1);
      if (t == TheoremId::HassettA12) CHECK(min_disc == -1);  // the common point is lc-sharp
    }
  }
}

TEST_CASE("certification refuses unproven cones") {
  CertConfig bad;
  bad.theorem = TheoremId::Cremona;
  bad.param_n = 3;
  bad.dim = 3;
  bad.points = 9;  // beyond the proven range on P^3
  bad.divisor = DivisorClass(3, 9, Rat(4), std::vector<Rat>(9, Rat(-1)));
  CHECK_THROWS_AS(certify(bad), std::domain_error);
}

TEST_CASE("log Fano classification table") {
  CHECK(classify_log_fano(2, 8));
  CHECK_FALSE(classify_log_fano(2, 9));
  CHECK(classify_log_fano(3, 7));
  CHECK_FALSE(classify_log_fano(3, 8));
  CHECK(classify_log_fano(4, 8));
  CHECK_FALSE(classify_log_fano(4, 9));
  CHECK(classify_log_fano(5, 8));
  CHECK_FALSE(classify_log_fano(5, 9));
  CHECK(classify_log_fano(10, 13));
  CHECK_FALSE(classify_log_fano(10, 14));
  CHECK(classify_log_fano(7, 0));
  CHECK_THROWS_AS(classify_log_fano(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(classify_log_fano(4, -1), std::invalid_argument);
}

TEST_CASE("structural coverage by the built-in families") {
  CHECK(covering_family(3, 4) == TheoremId::Cremona);
  CHECK(covering_family(3, 5) == TheoremId::Hyperplanes);
  CHECK(covering_family(3, 6) == TheoremId::P3K6);
  CHECK(covering_family(3, 7) == TheoremId::P3K7);
  CHECK(covering_family(4, 7) == TheoremId::Even);
  CHECK(covering_family(5, 8) == TheoremId::Odd);
  CHECK(covering_family(6, 9) == TheoremId::Even);
  CHECK(covering_family(9, 12) == TheoremId::Odd);
  CHECK_FALSE(covering_family(3, 8).has_value());
  CHECK_FALSE(covering_family(4, 8).has_value());  // sporadic case: no generic family
  CHECK_THROWS_AS(covering_family(2, 3), std::invalid_argument);
}

#include <doctest.h>

#include "logfano/json_io.hpp"

using namespace logfano;

TEST_CASE("rationals ride as strings") {
  CHECK(rat_to_json(make_rat(3, 4)) == Json("3/4"));
  CHECK(rat_to_json(Rat(-5)) == Json("-5"));
  CHECK(rat_from_json(Json("22/7")) == make_rat(22, 7));
  CHECK(rat_from_json(Json(7)) == Rat(7));  // bare integers are tolerated on input
  CHECK_THROWS_AS(rat_from_json(Json(0.5)), std::invalid_argument);
}

TEST_CASE("divisor and curve classes round-trip") {
  const DivisorClass d(4, 5, Rat(4), std::vector<Rat>(5, Rat(-3)));
  const Json jd = divisor_to_json(d);
  CHECK(jd.at("n") == 4);
  CHECK(jd.at("k") == 5);
  CHECK(jd.at("h").is_string());
  CHECK(jd.at("h") == "4");
  CHECK(jd.at("e")[0] == "-3");
  CHECK(divisor_from_json(jd) == d);

  const CurveClass c(3, 7, Rat(5), std::vector<Rat>{Rat(-2), Rat(-2), Rat(-1), Rat(-1), Rat(-1),
                                                    Rat(-1), Rat(-1)});
  const Json jc = curve_to_json(c);
  CHECK(jc.at("l") == "5");
  CHECK(curve_from_json(jc) == c);
}

TEST_CASE("intervals round-trip, including degenerate shapes") {
  const EpsilonInterval shapes[] = {
      EpsilonInterval::open(make_rat(2, 3), Rat(1)),
      EpsilonInterval::half_open(Rat(0), make_rat(2, 55)),
      EpsilonInterval::closed(Rat(-1), Rat(4)),
      EpsilonInterval::point(Rat(1)),
      EpsilonInterval::whole_line(),
      EpsilonInterval(std::nullopt, true, Rat(1), true),
      EpsilonInterval::empty_interval(),
  };
  for (const auto& iv : shapes) CHECK(interval_from_json(interval_to_json(iv)) == iv);

  const Json open_j = interval_to_json(EpsilonInterval::open(make_rat(1, 2), Rat(1)));
  CHECK(open_j.at("interval").at("lower") == "1/2");
  CHECK(open_j.at("interval").at("upper") == "1");
  CHECK(open_j.at("interval").at("lower_open") == true);
  CHECK(interval_to_json(EpsilonInterval::empty_interval()) ==
        Json{{"interval", Json{{"empty", true}}}});
  CHECK(interval_to_json(EpsilonInterval::whole_line()).at("interval").at("lower") == "-inf");
  CHECK(interval_to_json(EpsilonInterval::whole_line()).at("interval").at("upper") == "+inf");
}

TEST_CASE("decompositions round-trip") {
  const CurveClass c(4, 8, Rat(6),
                     std::vector<Rat>{Rat(-3), Rat(-2), Rat(-2), Rat(-1), Rat(-1), Rat(-1),
                                      Rat(0), Rat(0)});
  const auto terms = decompose_curve(c);
  const Json j = decomposition_to_json(terms);
  REQUIRE(j.is_array());
  for (const auto& item : j) {
    CHECK(item.contains("gen"));
    CHECK(item.at("coeff").is_string());
  }
  const auto parsed = decomposition_from_json(j);
  CHECK(decomposition_to_json(parsed) == j);
  CHECK(recombine(parsed, 4, 8) == c);
}

TEST_CASE("chamber signatures round-trip") {
  const WeightPoint center{std::vector<Rat>(7, make_rat(1, 2))};  // n = 4
  const ChamberSignature sig = chamber_signature(center, 4);
  const Json j = signature_to_json(sig);
  REQUIRE(j.contains("walls"));
  CHECK(signature_from_json(j, 4) == sig);
  for (const auto& wall : j.at("walls")) {
    CHECK(wall.contains("I"));
    CHECK(wall.contains("k"));
    CHECK((wall.at("sign") == "below" || wall.at("sign") == "on" || wall.at("sign") == "above"));
  }
}

TEST_CASE("join labels round-trip") {
  const JoinLabel labels[] = {
      JoinLabel::secant(2, 4),
      JoinLabel(SubsetIndex({1, 3}, 9), 1, 6),
      JoinLabel(SubsetIndex({2, 5, 7}, 11), 0, 8),
  };
  for (const auto& label : labels) {
    const Json j = join_label_to_json(label);
    CHECK(j.at("name") == label.name());
    CHECK(j.at("dim") == label.dim());
    CHECK(join_label_from_json(j) == label);
  }
}

TEST_CASE("certificate JSON carries the whole verdict") {
  const Json j = certificate_to_json(certify(TheoremId::Cremona, 4));
  CHECK(j.at("theorem") == "cremona");
  CHECK(j.at("n") == 4);
  CHECK(j.at("verdict") == true);
  CHECK(j.at("fixed_coefficients") == false);
  CHECK(j.at("ample").at("interval").at("lower") == "1/2");
  CHECK(j.at("ample").at("interval").at("upper") == "1");
  CHECK(j.at("joint").at("interval").at("lower") == "1/2");
  CHECK(j.at("singular").at("interval").at("lower") == "0");
  REQUIRE(j.at("ledger").is_array());
  // sample eps = 3/4, so the first row (k=2, d=2) reports 2 - 3/2 = 1/2.
  CHECK(j.at("ledger")[0].at("discrepancy_at").at("eps") == "3/4");
  CHECK(j.at("ledger")[0].at("discrepancy_at").at("value") == "1/2");
  REQUIRE(!j.at("pairings").empty());
  CHECK(j.at("pairings")[0].at("gen") == "R_1");
  CHECK(j.at("pairings")[0].at("at_zero") == "3");
  CHECK(j.at("pairings")[0].at("slope") == "3");

  // Ample-only configurations replace the interval with a note.
  const Json j5 = certificate_to_json(certify(TheoremId::P3K5, 3));
  CHECK(j5.at("singular").contains("note"));
  CHECK(j5.at("joint").at("interval").at("upper") == "1/3");
}

TEST_CASE("positivity report JSON") {
  const Json ample = positivity_to_json(positivity_report(anticanonical(2, 3)));
  CHECK(ample.at("ample") == true);
  CHECK(ample.at("nef") == true);
  CHECK(ample.at("cone_proven") == true);
  CHECK(ample.at("min_value").is_string());
  CHECK(ample.at("violating").empty());

  const Json bad = positivity_to_json(positivity_report(exceptional_divisor(1, 2, 3)));
  CHECK(bad.at("ample") == false);
  CHECK(!bad.at("violating").empty());
}

#include "logfano/json_io.hpp"

namespace logfano {
namespace {

std::vector<Rat> rat_vector_from_json(const Json& j) {
  std::vector<Rat> out;
  for (const auto& item : j) out.push_back(rat_from_json(item));
  return out;
}

Json rat_vector_to_json(const std::vector<Rat>& v) {
  Json out = Json::array();
  for (const Rat& q : v) out.push_back(rat_to_json(q));
  return out;
}

}  // namespace

Json rat_to_json(const Rat& q) { return rat_to_string(q); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (!j.is_string()) throw std::invalid_argument("rational must be a string \"p/q\"");
  return parse_rational(j.get<std::string>());
}

Json divisor_to_json(const DivisorClass& d) {
  return Json{{"n", d.n()}, {"k", d.k()}, {"h", rat_to_json(d.h())},
              {"e", rat_vector_to_json(d.e_all())}};
}

DivisorClass divisor_from_json(const Json& j) {
  return DivisorClass(j.at("n").get<int>(), j.at("k").get<int>(), rat_from_json(j.at("h")),
                      rat_vector_from_json(j.at("e")));
}

Json curve_to_json(const CurveClass& c) {
  return Json{{"n", c.n()}, {"k", c.k()}, {"l", rat_to_json(c.l())},
              {"r", rat_vector_to_json(c.r_all())}};
}

CurveClass curve_from_json(const Json& j) {
  return CurveClass(j.at("n").get<int>(), j.at("k").get<int>(), rat_from_json(j.at("l")),
                    rat_vector_from_json(j.at("r")));
}

Json interval_to_json(const EpsilonInterval& iv) {
  Json inner;
  if (iv.is_empty()) {
    inner["empty"] = true;
  } else {
    inner["lower"] = iv.has_lower() ? Json(rat_to_string(iv.lower())) : Json("-inf");
    inner["upper"] = iv.has_upper() ? Json(rat_to_string(iv.upper())) : Json("+inf");
    inner["lower_open"] = iv.lower_open();
    inner["upper_open"] = iv.upper_open();
  }
  return Json{{"interval", inner}};
}

EpsilonInterval interval_from_json(const Json& j) {
  const Json& inner = j.contains("interval") ? j.at("interval") : j;
  if (inner.contains("empty") && inner.at("empty").get<bool>())
    return EpsilonInterval::empty_interval();
  std::optional<Rat> lo, hi;
  const std::string lo_text = inner.at("lower").get<std::string>();
  const std::string hi_text = inner.at("upper").get<std::string>();
  if (lo_text != "-inf") lo = parse_rational(lo_text);
  if (hi_text != "+inf") hi = parse_rational(hi_text);
  return EpsilonInterval(lo, inner.at("lower_open").get<bool>(), hi,
                         inner.at("upper_open").get<bool>());
}

Json decomposition_to_json(const std::vector<DecompositionTerm>& terms) {
  Json out = Json::array();
  for (const auto& t : terms) out.push_back(Json{{"gen", t.gen.name()}, {"coeff", rat_to_json(t.coeff)}});
  return out;
}

std::vector<DecompositionTerm> decomposition_from_json(const Json& j) {
  std::vector<DecompositionTerm> out;
  for (const auto& item : j)
    out.push_back({GeneratorRef::parse(item.at("gen").get<std::string>()),
                   rat_from_json(item.at("coeff"))});
  return out;
}

namespace {

std::string sign_name(WallSign s) {
  switch (s) {
    case WallSign::below:
      return "below";
    case WallSign::on:
      return "on";
    case WallSign::above:
      return "above";
  }
  throw std::logic_error("unreachable wall sign");
}

WallSign sign_from_name(const std::string& s) {
  if (s == "below") return WallSign::below;
  if (s == "on") return WallSign::on;
  if (s == "above") return WallSign::above;
  throw std::invalid_argument("unknown wall sign: " + s);
}

}  // namespace

Json signature_to_json(const ChamberSignature& sig) {
  Json walls = Json::array();
  for (const auto& [wall, sign] : sig.signs) {
    Json members = Json::array();
    for (int m : wall.I.members()) members.push_back(m);
    walls.push_back(Json{{"I", members}, {"k", wall.level}, {"sign", sign_name(sign)}});
  }
  return Json{{"walls", walls}};
}

ChamberSignature signature_from_json(const Json& j, int n) {
  ChamberSignature sig;
  sig.n = n;
  for (const auto& item : j.at("walls")) {
    std::vector<int> members = item.at("I").get<std::vector<int>>();
    WallId wall{SubsetIndex(members, n + 3), item.at("k").get<int>()};
    sig.signs.emplace(wall, sign_from_name(item.at("sign").get<std::string>()));
  }
  return sig;
}

Json join_label_to_json(const JoinLabel& label) {
  Json members = Json::array();
  for (int m : label.vertex.members()) members.push_back(m);
  return Json{{"n", label.n}, {"I", members}, {"k", label.secant_index},
              {"dim", label.dim()}, {"name", label.name()}};
}

JoinLabel join_label_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  std::vector<int> members = j.at("I").get<std::vector<int>>();
  return JoinLabel(SubsetIndex(members, n + 3), j.at("k").get<int>(), n);
}

Json certificate_to_json(const Certificate& cert) {
  Json ledger = Json::array();
  for (const auto& e : cert.ledger) {
    const Rat a = Rat(e.k_coeff) - cert.sample_eps * e.d_mult;
    ledger.push_back(Json{{"center", e.center},
                          {"count", e.count},
                          {"k_coeff", e.k_coeff},
                          {"d_mult", rat_to_json(e.d_mult)},
                          {"discrepancy_at",
                           Json{{"eps", rat_to_json(cert.sample_eps)}, {"value", rat_to_json(a)}}}});
  }
  Json pairings = Json::array();
  for (const auto& p : cert.pairings)
    pairings.push_back(Json{{"gen", p.gen.name()},
                            {"at_zero", rat_to_json(p.at_zero)},
                            {"slope", rat_to_json(p.slope)}});
  Json out{{"theorem", theorem_name(cert.theorem)},
           {"n", cert.param_n},
           {"divisor", divisor_to_json(cert.divisor)},
           {"fixed_coefficients", cert.fixed_coefficients},
           {"ample", interval_to_json(cert.ample)},
           {"joint", interval_to_json(cert.joint)},
           {"verdict", cert.verdict},
           {"ledger", ledger},
           {"pairings", pairings}};
  if (cert.singular.has_value())
    out["singular"] = interval_to_json(*cert.singular);
  else
    out["singular"] = Json{{"note", cert.singular_note}};
  return out;
}

Json positivity_to_json(const PositivityReport& report) {
  Json violating = Json::array();
  for (const auto& g : report.violating) violating.push_back(g.name());
  return Json{{"min_value", rat_to_json(report.min_value)},
              {"ample", report.ample},
              {"nef", report.nef},
              {"violating", violating},
              {"cone_proven", report.cone_proven}};
}

}  // namespace logfano

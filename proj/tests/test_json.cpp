#include "doctest.h"

#include "hitchlat/json_io.hpp"

#include <sstream>
#include <stdexcept>

using namespace hitchlat;

TEST_CASE("surface document") {
  const SurfacePtr s = make_ruled_surface(2);
  const Json doc = surface_to_json(*s);
  CHECK(doc.at("surface") == "ruled_g2");
  CHECK(doc.at("genus") == 2);
  CHECK(doc.at("basis") == Json::array({"C0", "f"}));
  CHECK(doc.at("form") ==
        Json::array({Json::array({"0", "1"}), Json::array({"1", "0"})}));
  CHECK(doc.at("canonical") == Json::array({"-2", "2"}));
}

TEST_CASE("divisor documents round-trip") {
  const SurfacePtr s = make_ruled_surface(2);
  const DivisorClass d = s->make_class({Rat(3, 2), Rat(-7)});
  const Json doc = divisor_to_json(d);
  // Rationals travel as strings; integers without a denominator.
  CHECK(doc.at("coeffs") == Json::array({"3/2", "-7"}));
  CHECK(divisor_from_json(doc, s) == d);

  Json broken = doc;
  broken["surface"] = "other";
  CHECK_THROWS_AS(divisor_from_json(broken, s), std::invalid_argument);
  Json wrong_len = doc;
  wrong_len["coeffs"] = Json::array({"1"});
  CHECK_THROWS_AS(divisor_from_json(wrong_len, s), std::invalid_argument);
  Json wrong_basis = doc;
  wrong_basis["basis"] = Json::array({"A", "B"});
  CHECK_THROWS_AS(divisor_from_json(wrong_basis, s), std::invalid_argument);
}

TEST_CASE("quotient document") {
  const QuotientPtr model = build_quotient_model(2);
  const Json doc = quotient_to_json(*model);
  CHECK(doc.at("genus") == 2);
  CHECK(doc.at("degree") == 2);
  CHECK(doc.at("generators").size() == 15);
  CHECK(doc.at("generators")[0].at("name") == "C0_dagger");
  CHECK(doc.at("canonical_pullback").size() == 16);
}

TEST_CASE("verification report document") {
  const QuotientPtr model = build_quotient_model(2);
  const Json doc =
      verification_to_json(check_lambda_dot_K(model, 3, {1, 1, 1, 1, 1, 1}));
  CHECK(doc.at("check") == "lambda_dot_K");
  CHECK(doc.at("n") == 3);
  CHECK(doc.at("g") == 2);
  CHECK(doc.at("mu") == Json::array({1, 1, 1, 1, 1, 1}));
  CHECK(doc.at("computed") == "0");
  CHECK(doc.at("closed_form") == "0");
  CHECK(doc.at("chain") == Json::array({"6", "-12", "6"}));
  CHECK(doc.at("match") == true);
}

TEST_CASE("pullback report document") {
  const QuotientPtr model = build_quotient_model(2);
  const Json doc = pullback_report_to_json(
      verify_lambda_pullback(model, 3, {1, 1, 1, 1, 1, 1}));
  CHECK(doc.at("match") == true);
  CHECK(doc.at("lhs").at("coeffs") == doc.at("rhs").at("coeffs"));
  CHECK(doc.at("lhs").at("surface") == "perp_g2");
}

TEST_CASE("enumeration document recounts") {
  const Json doc = enumeration_to_json(
      enumerate_cover_types(3, 2, EnumerationMode::ordered));
  CHECK(doc.at("n") == 3);
  CHECK(doc.at("g") == 2);
  CHECK(doc.at("bound") == 22);
  CHECK(doc.at("mode") == "ordered");
  CHECK(doc.at("count") == 22);
  CHECK(doc.at("types").size() == doc.at("count").get<std::size_t>());
  // Parse back and recount.
  const Json reparsed = Json::parse(doc.dump());
  CHECK(reparsed.at("types").size() == 22);
}

TEST_CASE("enumeration csv") {
  std::ostringstream out;
  enumeration_to_csv(enumerate_cover_types(3, 2, EnumerationMode::multiset),
                     out);
  CHECK(out.str() ==
        "mu_1,mu_2,mu_3,mu_4,mu_5,mu_6,mu2,genus\n"
        "1,1,1,1,1,1,6,4\n"
        "3,1,1,1,1,1,14,2\n"
        "3,3,1,1,1,1,22,0\n");
}

TEST_CASE("type genus column") {
  CHECK(type_genus(3, 2, 6) == 4);
  CHECK(type_genus(3, 2, 22) == 0);
  CHECK(type_genus(4, 2, 0) == 9);
  CHECK_THROWS_AS(type_genus(3, 2, 7), std::domain_error);
}

TEST_CASE("cocycle report document") {
  const Json rank2 = cocycle_to_json(verify_cocycle(3, CocycleKind::rank2));
  CHECK(rank2.at("kind") == "rank2");
  CHECK(rank2.at("m") == 3);
  CHECK(rank2.at("identities_checked") == 48);
  CHECK(rank2.at("failures") == Json::array());

  const Json affine =
      cocycle_to_json(verify_cocycle(2, CocycleKind::affine, 3));
  CHECK(affine.at("kind") == "affine(3)");
}

TEST_CASE("json output is deterministic") {
  const auto render = [] {
    return enumeration_to_json(
               enumerate_cover_types(4, 2, EnumerationMode::ordered))
        .dump(2);
  };
  CHECK(render() == render());
}

#include "hitchlat/json_io.hpp"

#include <ostream>
#include <stdexcept>

namespace hitchlat {

namespace {

Json rat_vec_to_json(const RatVec& v) {
  Json arr = Json::array();
  for (const Rat& q : v) arr.push_back(rat_to_string(q));
  return arr;
}

}  // namespace

Json surface_to_json(const SurfaceModel& surface) {
  Json doc;
  doc["surface"] = surface.name();
  doc["genus"] = surface.genus();
  doc["basis"] = surface.basis();
  Json form = Json::array();
  for (const RatVec& row : surface.form()) form.push_back(rat_vec_to_json(row));
  doc["form"] = form;
  doc["canonical"] = rat_vec_to_json(surface.canonical().coeffs());
  return doc;
}

Json divisor_to_json(const DivisorClass& d) {
  Json doc;
  doc["surface"] = d.surface()->name();
  doc["genus"] = d.surface()->genus();
  doc["basis"] = d.surface()->basis();
  doc["coeffs"] = rat_vec_to_json(d.coeffs());
  return doc;
}

DivisorClass divisor_from_json(const Json& doc, const SurfacePtr& surface) {
  if (!surface) throw std::invalid_argument("divisor_from_json: null surface");
  const std::string name = doc.at("surface").get<std::string>();
  if (name != surface->name())
    throw std::invalid_argument("divisor document is for surface '" + name +
                                "', expected '" + surface->name() + "'");
  const auto basis = doc.at("basis").get<std::vector<std::string>>();
  if (basis != surface->basis())
    throw std::invalid_argument(
        "divisor document basis does not match the surface basis");
  const auto raw = doc.at("coeffs").get<std::vector<std::string>>();
  if (raw.size() != surface->dim())
    throw std::invalid_argument("divisor document has " +
                                std::to_string(raw.size()) +
                                " coefficients, surface has dimension " +
                                std::to_string(surface->dim()));
  RatVec coeffs;
  coeffs.reserve(raw.size());
  for (const std::string& s : raw) coeffs.push_back(rat_from_string(s));
  return surface->make_class(std::move(coeffs));
}

Json quotient_to_json(const QuotientCoverModel& model) {
  Json doc;
  doc["genus"] = model.genus();
  doc["degree"] = model.degree();
  Json generators = Json::array();
  for (std::size_t i = 0; i < model.generator_count(); ++i) {
    Json entry;
    entry["name"] = model.generator_names()[i];
    entry["pullback"] = rat_vec_to_json(model.generator_pullback(i).coeffs());
    generators.push_back(std::move(entry));
  }
  doc["generators"] = std::move(generators);
  doc["canonical_pullback"] =
      rat_vec_to_json(model.canonical_pullback().coeffs());
  return doc;
}

Json verification_to_json(const VerificationReport& report) {
  Json doc;
  doc["check"] = report.check;
  doc["n"] = report.n;
  doc["g"] = report.g;
  doc["mu"] = report.mu;
  doc["computed"] = rat_to_string(report.computed);
  doc["closed_form"] = rat_to_string(report.closed_form);
  doc["chain"] = rat_vec_to_json(report.chain);
  doc["match"] = report.match;
  return doc;
}

Json pullback_report_to_json(const PullbackReport& report) {
  Json doc;
  doc["lhs"] = divisor_to_json(report.lhs);
  doc["rhs"] = divisor_to_json(report.rhs);
  doc["match"] = report.match;
  return doc;
}

Json enumeration_to_json(const EnumerationResult& result) {
  Json doc;
  doc["n"] = result.n;
  doc["g"] = result.g;
  doc["bound"] = result.bound;
  doc["mode"] = enumeration_mode_name(result.mode);
  doc["count"] = result.count;
  Json types = Json::array();
  for (const CoverType& t : result.types) types.push_back(t.entries());
  doc["types"] = std::move(types);
  return doc;
}

long type_genus(long n, int g, long mu2) {
  const Rat value = Rat(1) + Rat(n * n * (2 * g - 2) - mu2) / 4;
  if (!rat_is_integer(value))
    throw std::domain_error("type genus is not integral: " +
                            rat_to_string(value));
  return rat_to_long(value);
}

void enumeration_to_csv(const EnumerationResult& result, std::ostream& out) {
  const int columns = 2 * result.g + 2;
  for (int i = 1; i <= columns; ++i) out << "mu_" << i << ",";
  out << "mu2,genus\n";
  for (const CoverType& t : result.types) {
    for (long e : t.entries()) out << e << ",";
    out << t.mu2() << "," << type_genus(result.n, result.g, t.mu2()) << "\n";
  }
}

Json cocycle_to_json(const CocycleReport& report) {
  Json doc;
  doc["kind"] = cocycle_kind_label(report.kind, report.g);
  doc["m"] = report.m;
  doc["identities_checked"] = report.identities_checked;
  doc["failures"] = report.failures;
  return doc;
}

}  // namespace hitchlat

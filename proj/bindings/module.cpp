#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "hitchlat/cocycle.hpp"
#include "hitchlat/covers.hpp"
#include "hitchlat/quotient.hpp"
#include "hitchlat/surface.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// Exact bridge: mpq_class <-> fractions.Fraction (ints load too). Both
// sides are arbitrary-precision rationals, so nothing is ever rounded.
template <>
struct type_caster<mpq_class> {
  PYBIND11_TYPE_CASTER(mpq_class, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (isinstance<py::int_>(src)) {
      value = mpq_class(std::string(py::str(src)), 10);
      value.canonicalize();
      return true;
    }
    const object fraction_type =
        module_::import("fractions").attr("Fraction");
    if (isinstance(src, fraction_type)) {
      value = mpq_class(std::string(py::str(src)), 10);
      value.canonicalize();
      return true;
    }
    return false;
  }

  static handle cast(const mpq_class& src, return_value_policy, handle) {
    const object fraction_type =
        module_::import("fractions").attr("Fraction");
    return fraction_type(py::str(src.get_str())).release();
  }
};

}  // namespace pybind11::detail

namespace {

hitchlat::QuotientPtr model_for(int g) {
  static std::map<int, hitchlat::QuotientPtr> cache;
  static std::mutex lock;
  std::lock_guard<std::mutex> guard(lock);
  auto it = cache.find(g);
  if (it == cache.end())
    it = cache.emplace(g, hitchlat::build_quotient_model(g)).first;
  return it->second;
}

hitchlat::EnumerationMode parse_mode(const std::string& mode) {
  if (mode == "ordered") return hitchlat::EnumerationMode::ordered;
  if (mode == "multiset") return hitchlat::EnumerationMode::multiset;
  throw std::invalid_argument("mode must be 'ordered' or 'multiset'");
}

py::dict verification_dict(const hitchlat::VerificationReport& r) {
  py::dict doc;
  doc["check"] = r.check;
  doc["n"] = r.n;
  doc["g"] = r.g;
  doc["mu"] = r.mu;
  doc["computed"] = r.computed;
  doc["closed_form"] = r.closed_form;
  doc["chain"] = r.chain;
  doc["match"] = r.match;
  return doc;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact Picard-lattice computations for hyperelliptic tangential "
      "covers";

  m.def("moduli_dimension", &hitchlat::moduli_dimension, py::arg("n"),
        py::arg("g"), "(n^2 - 1)(g - 1) - 1 for n > 2");
  m.def("rigidity_constant", &hitchlat::rigidity_constant);
  m.def("mu2_bound", &hitchlat::mu2_bound, py::arg("n"), py::arg("g"));
  m.def("is_admissible", &hitchlat::is_admissible, py::arg("n"), py::arg("g"),
        py::arg("mu"));

  m.def(
      "genus_lambda",
      [](long n, int g, const std::vector<long>& mu) {
        return hitchlat::genus_lambda(model_for(g), n, mu);
      },
      py::arg("n"), py::arg("g"), py::arg("mu"));

  m.def(
      "check_lambda_dot_K",
      [](long n, int g, const std::vector<long>& mu) {
        return verification_dict(
            hitchlat::check_lambda_dot_K(model_for(g), n, mu));
      },
      py::arg("n"), py::arg("g"), py::arg("mu"));

  m.def(
      "check_lambda_self",
      [](long n, int g, const std::vector<long>& mu) {
        return verification_dict(
            hitchlat::check_lambda_self(model_for(g), n, mu));
      },
      py::arg("n"), py::arg("g"), py::arg("mu"));

  m.def(
      "verify_lambda_pullback",
      [](long n, int g, const std::vector<long>& mu) {
        const hitchlat::QuotientPtr model = model_for(g);
        const hitchlat::PullbackReport report =
            hitchlat::verify_lambda_pullback(model, n, mu);
        py::dict doc;
        doc["basis"] = model->top()->basis();
        doc["lhs"] = report.lhs.coeffs();
        doc["rhs"] = report.rhs.coeffs();
        doc["match"] = report.match;
        return doc;
      },
      py::arg("n"), py::arg("g"), py::arg("mu"));

  m.def(
      "verify_canonical_pullback",
      [](int g) {
        return hitchlat::verify_canonical_pullback(model_for(g)).match;
      },
      py::arg("g"));

  m.def(
      "generator_names",
      [](int g) { return model_for(g)->generator_names(); }, py::arg("g"));

  m.def(
      "dagger_pairing",
      [](int g, const std::string& a, const std::string& b) {
        const hitchlat::QuotientPtr model = model_for(g);
        return hitchlat::dagger_intersect(model->dagger_generator(a),
                                          model->dagger_generator(b));
      },
      py::arg("g"), py::arg("a"), py::arg("b"),
      "pairing of two named quotient generators");

  m.def(
      "dagger_pairing_coeffs",
      [](int g, const hitchlat::RatVec& a, const hitchlat::RatVec& b) {
        const hitchlat::QuotientPtr model = model_for(g);
        return hitchlat::dagger_intersect(model->dagger_class(a),
                                          model->dagger_class(b));
      },
      py::arg("g"), py::arg("a"), py::arg("b"),
      "pairing of generator-coefficient vectors (Fractions allowed)");

  m.def(
      "enumerate_cover_types",
      [](long n, int g, const std::string& mode) {
        const hitchlat::EnumerationResult result =
            hitchlat::enumerate_cover_types(n, g, parse_mode(mode));
        py::dict doc;
        doc["n"] = result.n;
        doc["g"] = result.g;
        doc["bound"] = result.bound;
        doc["mode"] = hitchlat::enumeration_mode_name(result.mode);
        doc["count"] = result.count;
        py::list types;
        for (const hitchlat::CoverType& t : result.types)
          types.append(t.entries());
        doc["types"] = std::move(types);
        return doc;
      },
      py::arg("n"), py::arg("g"), py::arg("mode") = "ordered");

  m.def(
      "verify_cocycle",
      [](int m_charts, const std::string& kind, int g) {
        const hitchlat::CocycleKind k = kind == "rank2"
                                            ? hitchlat::CocycleKind::rank2
                                            : hitchlat::CocycleKind::affine;
        if (kind != "rank2" && kind != "affine")
          throw std::invalid_argument("kind must be 'rank2' or 'affine'");
        const hitchlat::CocycleReport report =
            hitchlat::verify_cocycle(m_charts, k, g);
        py::dict doc;
        doc["kind"] = hitchlat::cocycle_kind_label(report.kind, report.g);
        doc["m"] = report.m;
        doc["identities_checked"] = report.identities_checked;
        doc["failures"] = report.failures;
        return doc;
      },
      py::arg("m"), py::arg("kind") = "rank2", py::arg("g") = 0);

  m.def(
      "adjunction_genus",
      [](int g, const hitchlat::RatVec& coeffs) {
        const hitchlat::SurfacePtr surface = hitchlat::make_ruled_surface(g);
        return hitchlat::adjunction_genus(surface->make_class(coeffs));
      },
      py::arg("g"), py::arg("coeffs"),
      "adjunction genus of (coeffs[0]*C0 + coeffs[1]*f) on the ruled "
      "surface");
}

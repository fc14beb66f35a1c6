#pragma once

#include <iosfwd>

#include "json.hpp"

#include "hitchlat/cocycle.hpp"
#include "hitchlat/covers.hpp"
#include "hitchlat/quotient.hpp"
#include "hitchlat/surface.hpp"

namespace hitchlat {

// Insertion-ordered so emitted documents keep the documented field order;
// output for a fixed input is byte-identical across runs.
using Json = nlohmann::ordered_json;

// {surface, genus, basis, form, canonical}; rationals as "p/q" strings.
Json surface_to_json(const SurfaceModel& surface);

// {surface, genus, basis, coeffs}.
Json divisor_to_json(const DivisorClass& d);

// Inverse of divisor_to_json against a concrete surface; the document's
// surface name and basis must match.
DivisorClass divisor_from_json(const Json& doc, const SurfacePtr& surface);

// {genus, degree, generators: [{name, pullback}], canonical_pullback}.
Json quotient_to_json(const QuotientCoverModel& model);

// {check, n, g, mu, computed, closed_form, chain, match}.
Json verification_to_json(const VerificationReport& report);

// {lhs, rhs, match}.
Json pullback_report_to_json(const PullbackReport& report);

// {n, g, bound, mode, count, types}; re-counting types reproduces count.
Json enumeration_to_json(const EnumerationResult& result);

// Header mu_1..mu_{2g+2},mu2,genus then one row per type. The genus
// column is 1 + (n^2(2g-2) - mu2)/4, an integer for every adapted type.
void enumeration_to_csv(const EnumerationResult& result, std::ostream& out);

// {kind, m, identities_checked, failures}; kind carries the fiber
// parameter for the affine family, e.g. "affine(3)".
Json cocycle_to_json(const CocycleReport& report);

// The genus column value used by the CSV writer.
long type_genus(long n, int g, long mu2);

}  // namespace hitchlat

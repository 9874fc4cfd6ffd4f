#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

#include "matchbounds/bounds.hpp"
#include "matchbounds/config_model.hpp"
#include "matchbounds/girth_chromatic.hpp"
#include "matchbounds/oracle.hpp"
#include "matchbounds/perm_latin.hpp"

namespace matchbounds {

/// Insertion-ordered JSON so identical inputs print byte-identical reports.
using Json = nlohmann::ordered_json;

/// Floats are printed as decimal strings with 17 significant digits (exact
/// round-trip), rationals as "num/den" strings; both keep reports stable
/// across platforms and runs.
std::string format_double(double x);

Json to_json(const Matching& m);
Json to_json(const FamilyStats& stats);
Json to_json(const ValidityFlag& flag);
Json to_json(const BoundReport& report);
Json to_json(const SparsenessReport& report);
Json to_json(const DependencyCheckReport& report);
Json to_json(const McEstimate& estimate);
Json to_json(const LatinBoundsReport& report);
Json to_json(const RegularCountEstimates& estimates);
Json to_json(const ExistenceCertificate& cert);
Json to_json(const TraversalAsymptotic& asymptotic);
Json to_json(const QuotientResult& quotient);

} // namespace matchbounds

#pragma once

#include <ckindex/aps_index.hpp>
#include <ckindex/graph_ktheory.hpp>
#include <ckindex/mapping_cone.hpp>

#include <json.hpp>

#include <string>

namespace ckindex {

using Json = nlohmann::json;

enum class Format { json, text };

/// Canonical JSON: keys sorted, exact rationals as "p/q" strings, integers
/// are JSON numbers when they fit in 64 bits and decimal strings otherwise,
/// matrix entries are always decimal strings, vectors are keyed by vertex id.
Json to_json(const Integer& x);
Json to_json(const Rational& x);
Json to_json(const IntMatrix& m);
Json to_json(const AbelianGroup& g);
Json to_json(const CosetCoordinates& c);
Json to_json(const GraphProperties& p);
Json to_json(const Graph& g);
Json to_json(const AFCore& core, const K0FClass& x);
Json to_json(const Breakdown& b);
Json to_json(const ElementClassification& c);
Json to_json(const ColimitDescription& d);
Json to_json(const KTheoryReport& r, const Graph& g);
Json to_json(const AFCore& core, const ExactnessReport& r);
Json to_json(const AFCore& core, const PairingReport& r);
Json to_json(const AFCore& core, const CrosscheckReport& r);
Json to_json(const AFCore& core, const ConeClass& c);
Json to_json(const AFCore& core, const DecompositionReport& r);
Json to_json(const MappingConeGroups& r);
Json error_object(const std::string& kind, const std::string& message);

std::string render_report(const Json& report, Format format);

}  // namespace ckindex

#pragma once

// JSON and TSV encodings of the library's value types. Human-facing sets
// are lists of 1-based elements; rank tables are indexed by subset mask
// (bit i-1 <=> element i). Readers normalize order and raise InputError on
// malformed documents.

#include <string>

#include <json.hpp>

#include "reflexpm/classify.hpp"
#include "reflexpm/polymatroid.hpp"
#include "reflexpm/polytope.hpp"
#include "reflexpm/setfam.hpp"

namespace reflexpm::io {

using Json = nlohmann::ordered_json;

[[nodiscard]] Json to_json(const Subset& s);
[[nodiscard]] Json to_json(const SetFamily& f);
[[nodiscard]] Json to_json(const RankFunction& rho);
[[nodiscard]] Json to_json(const PointSet& p);
[[nodiscard]] Json to_json(const Presentation& b);
[[nodiscard]] Json to_json(const HPolytope& h);
[[nodiscard]] Json to_json(const RationalVector& v);
[[nodiscard]] Json to_json(const std::vector<RationalVector>& vs);
[[nodiscard]] Json to_json(const RankVerdict& v);
[[nodiscard]] Json to_json(const PolymatroidVerdict& v);
[[nodiscard]] Json to_json(const ReflexivityReport& r);
[[nodiscard]] Json to_json(const ClassificationRecord& r);
[[nodiscard]] Json to_json(const SweepFinding& f);

[[nodiscard]] SetFamily family_from_json(const Json& j);
[[nodiscard]] RankFunction rank_from_json(const Json& j);
[[nodiscard]] PointSet points_from_json(const Json& j);
[[nodiscard]] Presentation presentation_from_json(const Json& j);
[[nodiscard]] HPolytope hpolytope_from_json(const Json& j);

/// Reads a whole file as JSON; InputError when unreadable or malformed.
[[nodiscard]] Json read_json_file(const std::string& path);
[[nodiscard]] Json parse_json(const std::string& text);

/// Compact single-line rendering.
[[nodiscard]] std::string dump(const Json& j);

/// Column names of the classification TSV stream.
[[nodiscard]] std::string tsv_header();
/// sublattice, rank, point_count, facet_count, reflexive_lemma,
/// reflexive_direct, center, roundtrip_ok, transversal. Vectors are
/// comma-joined; set families are "{..};{..}" lists; "-" marks absence.
[[nodiscard]] std::string to_tsv(const ClassificationRecord& r);

}  // namespace reflexpm::io

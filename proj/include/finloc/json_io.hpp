#pragma once

// Canonical JSON for every structure the CLI reads or writes. Objects use
// sorted keys and element lists are emitted in sorted label order, so equal
// structures always serialize to identical bytes. Parsers keep the input
// order of labels and throw InputError on malformed documents.

#include <string>
#include <vector>

#include <json.hpp>

#include "finloc/colimits.hpp"
#include "finloc/frame.hpp"
#include "finloc/lifting.hpp"
#include "finloc/poset.hpp"
#include "finloc/pstop.hpp"
#include "finloc/space.hpp"

namespace finloc::io {

using Json = nlohmann::json;

/// Reads and parses a JSON file. Throws InputError.
Json read_json_file(const std::string& path);

/// {"elements": [...], "leq": [[a, b], ...]} with covering pairs only.
Json poset_to_json(const FinitePoset& p);
FinitePoset poset_from_json(const Json& j);

/// {"points": [...], "opens": [[...], ...]}.
Json space_to_json(const FiniteSpace& x);
FiniteSpace space_from_json(const Json& j);

/// Poset JSON plus "bottom" and "top"; the hints are checked when present.
Json frame_to_json(const FiniteFrame& f);
FrameRef frame_from_json(const Json& j);

/// {"source": frame, "target": frame, "map": {"a": "x", ...}}.
Json hom_to_json(const FrameHom& h);
FrameHom hom_from_json(const Json& j);

/// Continuous map: {"source": space, "target": space, "map": {...}}.
Json map_to_json(const ContinuousMap& f);
ContinuousMap map_from_json(const Json& j);

/// {"left": map, "right": map, "top": map, "bottom": map}.
Json square_to_json(const LiftingSquare& s);
LiftingSquare square_from_json(const Json& j);

/// A bare array of maps or {"generators": [...]}.
std::vector<Arrow> generators_from_json(const Json& j);

/// {"points": [...], "lim": {"x": [...], ...}}.
Json psspace_to_json(const PsSpace& xi);
PsSpace psspace_from_json(const Json& j);

/// {"left", "right", "frame", "elements": {label: [[a, b], ...]}}.
Json tensor_to_json(const TensorFrame& t);

/// {"apex", "pairs", "leg_b", "leg_c"}; each leg lists its left and right tables.
Json pushout_to_json(const PushoutLocaleResult& p);

/// Full trace with per-stage problems and pushout data.
Json trace_to_json(const FactorizationTrace& t, const std::vector<Arrow>& generators);

/// Point map rendered as {source label: target label}.
Json point_map_to_json(const FiniteSpace& s, const FiniteSpace& t, const PointMap& m);

}  // namespace finloc::io

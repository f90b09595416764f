#pragma once

#include <string>

#include "json.hpp"

#include "earcomb/ced.hpp"
#include "earcomb/complex.hpp"
#include "earcomb/geomlat.hpp"
#include "earcomb/poset.hpp"

namespace earcomb::io {

using nlohmann::json;

SimplicialComplex complex_from_json(const json& j);
json complex_to_json(const SimplicialComplex& K);

Matroid matroid_from_json(const json& j);

struct PosetData {
    RankedPoset poset;
    EdgeLabeling labeling;  // may be empty
    bool has_labeling = false;
};

PosetData poset_from_json(const json& j);
json poset_to_json(const RankedPoset& P, const EdgeLabeling* labeling = nullptr);

/// Decomposition artifact: ears with facets, provenance, shelling order and
/// certificate strings, plus the vectors of the final union.
json ear_sequence_to_json(const EarSequence& ears, const CedReport& report);

json flag_vector_to_json(const FlagVector& v);

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace earcomb::io

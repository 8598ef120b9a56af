#ifndef CYLSCHUR_SERIALIZE_HPP
#define CYLSCHUR_SERIALIZE_HPP

#include <nlohmann/json.hpp>

#include "cylschur/epoly.hpp"
#include "cylschur/growth.hpp"
#include "cylschur/littlewood.hpp"
#include "cylschur/matching.hpp"
#include "cylschur/partition.hpp"
#include "cylschur/tableau.hpp"
#include "cylschur/xpoly.hpp"

namespace cylschur {

using json = nlohmann::ordered_json;

// Partitions are arrays of parts; the empty partition is [].
json to_json(const Partition& p);
Partition partition_from_json(const json& j);

// {"n": int, "terms": [{"e": [...], "c": "coefficient"}...]}, terms sorted
// by (degree, key) so output is reproducible byte for byte.
json to_json(const EPoly& p);
json to_json(const XPoly& p);

json to_json(const Tableau& t);  // array of rows
Tableau tableau_from_json(const json& j);

json to_json(const Matching& m);  // {"n": int, "arcs": [[i,j]...]}
Matching matching_from_json(const json& j);

json to_json(const std::vector<Partition>& chain);  // array of partitions
std::vector<Partition> chain_from_json(const json& j);

// {"identity","h","w","vars","deg","equal","discrepancy"}; the elapsed
// time is only attached when with_timing is set, keeping default output
// byte-identical across runs.
json to_json(const VerificationReport& r, bool with_timing = false);

// Growth diagram dump for golden-file comparisons: the X list plus every
// vertex label.
json to_json(const GrowthDiagram& g);
json to_json(const TriDiagram& g);

}  // namespace cylschur

#endif

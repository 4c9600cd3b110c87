#pragma once

#include <json.hpp>

#include "torusfp/oracle.hpp"
#include "torusfp/trace_engine.hpp"

namespace torusfp {

using nlohmann::json;

// Canonical JSON forms (deterministic: object keys sorted, terms in canonical
// order, no floating point anywhere):
//   integer      number when it fits 64 bits, decimal string otherwise
//   ZG element   [[c, m, n], ...] meaning sum of c u^m v^n, sorted by (m, n)
//   matrix       [[a, b], [c, d]] row-major
//   1-chain      [{"c":, "a":[m,n], "b":[m,n]}, ...]
//   2-chain      [{"c":, "a":[m,n], "b":[m,n], "t":[m,n]}, ...]

json to_json(const Int& v);
Int int_from_json(const json& j);

json to_json(const Vec2& v);
Vec2 vec2_from_json(const json& j);

json to_json(const GroupElement& g);
GroupElement group_element_from_json(const json& j);

json to_json(const Endomorphism& phi);
Endomorphism endomorphism_from_json(const json& j);

json to_json(const IntMatrix2& m);
IntMatrix2 int_matrix_from_json(const json& j);

json to_json(const RingElement& x);
RingElement ring_element_from_json(const json& j);

json to_json(const TensorChain1& x);
TensorChain1 chain1_from_json(const json& j);

json to_json(const TensorChain2& x);
TensorChain2 chain2_from_json(const json& j);

json to_json(const Lattice& lat);
json to_json(const SmithDecomposition& snf);
json to_json(const Cokernel& co);

json to_json(const ChainMapData& f);
ChainMapData chain_map_from_json(const json& j);

json to_json(const CellularHomotopyData& data);
CellularHomotopyData cellular_from_json(const json& j);

/// Full input document {"phi": ..., "cellular": ...}.
json document_to_json(const Endomorphism& phi, const CellularHomotopyData& data);
std::pair<Endomorphism, CellularHomotopyData> document_from_json(const json& j);

json to_json(const TrivialityVerdict& v);
json to_json(const TraceReport& report);
json to_json(const std::vector<Violation>& violations);

}  // namespace torusfp

// Versioned JSON document for delta chains (schema "delta-chain/1").
// Field names and their order are fixed; golden tests pin the bytes.
#pragma once

#include "frobsharp/delta_chain.hpp"

#include <optional>
#include <string>

namespace frobsharp {

inline constexpr const char* kChainSchema = "delta-chain/1";

// { schema, p, height, steps: [{level, kind, diff_order}], deltas, degrees,
//   total_delta }  — steps listed from level height-1 down to 0.
std::string chain_to_json(const DeltaChain& chain);

// Same document with the trailing expected_d and family_params fields.
std::string chain_to_json(const FamilyChain& fc, const ExampleParams& params);

// Parses and revalidates a schema "delta-chain/1" document by re-simulating
// from its steps; throws std::invalid_argument on schema or content errors.
DeltaChain chain_from_json(const std::string& text);

} // namespace frobsharp

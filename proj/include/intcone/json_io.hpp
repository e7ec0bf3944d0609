#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "intcone/cone.hpp"
#include "intcone/instances.hpp"
#include "intcone/reductions.hpp"
#include "intcone/verify.hpp"

namespace intcone {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSubsetSumKind = "subset-sum";
inline constexpr std::string_view kSsmKind = "subset-sum-mult";
inline constexpr std::string_view kPointInConeKind = "point-in-cone";

Json to_json(const BigInt& z);
Json to_json(std::span<const BigInt> v);
Json to_json(const AnyInstance& inst);

/// Instance document, compact, keys in a fixed order.
std::string serialize(const AnyInstance& inst);

/// Throws ParseError for malformed documents and InvalidInstance when the
/// decoded instance fails validate().
AnyInstance parse_instance(std::string_view document);
AnyInstance instance_from_json(const Json& doc);

/// Dense list of decimal multiplicities, one per item.
Json witness_to_json(const Witness& w, std::size_t n);
Witness witness_from_json(const Json& doc);

/// [{"point": [...], "lambda": "..."}, ...] in point order.
Json cone_witness_to_json(const ConeWitness& w);
ConeWitness cone_witness_from_json(const Json& doc);

Json points_to_json(std::span<const Point> points);

/// {"claim": ..., "pass": ..., "details": {...}} records.
Json report_to_json(const SsmInstance& inst, const Claim1Report& report);
Json report_to_json(const SubsetSumInstance& inst, const ChainReport& report);
Json report_to_json(const AuditEntry& entry);

}  // namespace intcone

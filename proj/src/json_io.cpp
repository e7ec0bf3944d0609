#include "intcone/json_io.hpp"

#include "intcone/errors.hpp"

namespace intcone {

Json to_json(const BigInt& z) { return to_decimal(z); }

Json to_json(std::span<const BigInt> v) {
  Json out = Json::array();
  for (const BigInt& z : v) out.push_back(to_decimal(z));
  return out;
}

namespace {

struct ToJson {
  Json operator()(const SubsetSumInstance& inst) const {
    return items_doc(kSubsetSumKind, inst.items, inst.target);
  }
  Json operator()(const SsmInstance& inst) const {
    return items_doc(kSsmKind, inst.items, inst.target);
  }
  Json operator()(const PointInConeInstance& inst) const {
    Json doc;
    doc["kind"] = kPointInConeKind;
    doc["dim"] = std::to_string(inst.dim);
    Json rows = Json::array();
    for (const Point& row : inst.polytope.A) rows.push_back(to_json(row));
    doc["A"] = std::move(rows);
    doc["b"] = to_json(inst.polytope.b);
    doc["q"] = to_json(inst.target);
    return doc;
  }

  static Json items_doc(std::string_view kind, const std::vector<BigInt>& items,
                        const BigInt& target) {
    Json doc;
    doc["kind"] = kind;
    doc["items"] = to_json(items);
    doc["target"] = to_json(target);
    return doc;
  }
};

const Json& field(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

BigInt number(const Json& value) {
  if (!value.is_string()) throw ParseError("integers must be decimal strings");
  return parse_decimal(value.get_ref<const std::string&>());
}

std::vector<BigInt> numbers(const Json& value) {
  if (!value.is_array()) throw ParseError("expected an array of decimal strings");
  std::vector<BigInt> out;
  for (const Json& v : value) out.push_back(number(v));
  return out;
}

template <typename Instance>
Instance checked(Instance inst) {
  if (auto bad = validate(inst)) throw InvalidInstance(*bad);
  return inst;
}

}  // namespace

Json to_json(const AnyInstance& inst) { return std::visit(ToJson{}, inst); }

std::string serialize(const AnyInstance& inst) { return to_json(inst).dump(); }

AnyInstance instance_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("instance document must be a JSON object");
  const Json& kind_value = field(doc, "kind");
  if (!kind_value.is_string()) throw ParseError("\"kind\" must be a string");
  const std::string& kind = kind_value.get_ref<const std::string&>();

  if (kind == kSubsetSumKind) {
    return checked(SubsetSumInstance{numbers(field(doc, "items")), number(field(doc, "target"))});
  }
  if (kind == kSsmKind) {
    return checked(SsmInstance{numbers(field(doc, "items")), number(field(doc, "target"))});
  }
  if (kind == kPointInConeKind) {
    PointInConeInstance inst;
    const BigInt dim = number(field(doc, "dim"));
    if (dim < 0 || dim > 1'000'000) throw InvalidInstance("dimension out of range");
    inst.dim = static_cast<std::size_t>(dim);
    const Json& rows = field(doc, "A");
    if (!rows.is_array()) throw ParseError("\"A\" must be an array of rows");
    for (const Json& row : rows) inst.polytope.A.push_back(numbers(row));
    inst.polytope.b = numbers(field(doc, "b"));
    inst.target = numbers(field(doc, "q"));
    return checked(std::move(inst));
  }
  throw ParseError("unknown instance kind \"" + kind + "\"");
}

AnyInstance parse_instance(std::string_view document) {
  Json doc;
  try {
    doc = Json::parse(document);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return instance_from_json(doc);
}

Json witness_to_json(const Witness& w, std::size_t n) { return to_json(w.to_dense(n)); }

Witness witness_from_json(const Json& doc) {
  const std::vector<BigInt> dense = numbers(doc);
  for (const BigInt& z : dense) {
    if (z < 0) throw InvalidInstance("witness multiplicities are nonnegative");
  }
  return Witness::from_dense(dense);
}

Json cone_witness_to_json(const ConeWitness& w) {
  Json out = Json::array();
  for (const auto& [point, lambda] : w) {
    Json entry;
    entry["point"] = to_json(point);
    entry["lambda"] = to_json(lambda);
    out.push_back(std::move(entry));
  }
  return out;
}

ConeWitness cone_witness_from_json(const Json& doc) {
  if (!doc.is_array()) throw ParseError("cone witness must be an array");
  ConeWitness w;
  for (const Json& entry : doc) {
    if (!entry.is_object()) throw ParseError("cone witness entries are objects");
    const BigInt lambda = number(field(entry, "lambda"));
    if (lambda < 0) throw InvalidInstance("witness multiplicities are nonnegative");
    if (lambda != 0) w[numbers(field(entry, "point"))] += lambda;
  }
  return w;
}

Json points_to_json(std::span<const Point> points) {
  Json out = Json::array();
  for (const Point& p : points) out.push_back(to_json(p));
  return out;
}

Json report_to_json(const SsmInstance& inst, const Claim1Report& report) {
  Json doc;
  doc["claim"] = "claim1";
  doc["pass"] = report.pass;
  Json details;
  details["instance"] = to_json(AnyInstance{inst});
  details["enumerated"] = report.enumerated;
  details["expected"] = report.expected;
  details["diff"] = points_to_json(report.diff);
  doc["details"] = std::move(details);
  return doc;
}

Json report_to_json(const SubsetSumInstance& inst, const ChainReport& report) {
  Json doc;
  doc["claim"] = "chain";
  doc["pass"] = report.pass();
  Json details;
  details["instance"] = to_json(AnyInstance{inst});
  details["ss"] = to_string(report.ss);
  details["ssm_reduced"] = to_string(report.ssm_reduced);
  details["ssm"] = to_string(report.ssm);
  details["pic"] = to_string(report.pic);
  details["pic_reduced"] = to_string(report.pic_reduced);
  details["consistent"] = report.consistent;
  details["witnesses_ok"] = report.witnesses_ok;
  details["problems"] = report.problems;
  doc["details"] = std::move(details);
  return doc;
}

Json report_to_json(const AuditEntry& entry) {
  Json doc;
  doc["claim"] = "audit";
  doc["pass"] = entry.pass();
  Json details;
  details["instance"] = to_json(AnyInstance{entry.instance});
  if (!entry.error.empty()) {
    details["error"] = entry.error;
  } else {
    details["claim1"] = report_to_json(as_ssm(entry.instance), entry.claim1)["details"];
    details["claim1"].erase("instance");
    details["claim1"]["pass"] = entry.claim1.pass;
    details["chain"] = report_to_json(entry.instance, entry.chain)["details"];
    details["chain"].erase("instance");
    details["chain"]["pass"] = entry.chain.pass();
  }
  doc["details"] = std::move(details);
  return doc;
}

}  // namespace intcone

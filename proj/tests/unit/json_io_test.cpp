#include <gtest/gtest.h>

#include "intcone/errors.hpp"
#include "intcone/json_io.hpp"

namespace intcone {
namespace {

std::vector<BigInt> nums(std::initializer_list<long long> values) {
  return {values.begin(), values.end()};
}

TEST(Serialize, SubsetSumDocument) {
  EXPECT_EQ(serialize(SubsetSumInstance{nums({2, 3}), 7}),
            R"({"kind":"subset-sum","items":["2","3"],"target":"7"})");
  EXPECT_EQ(serialize(SsmInstance{nums({2, 3}), 7}),
            R"({"kind":"subset-sum-mult","items":["2","3"],"target":"7"})");
}

TEST(Serialize, RoundTripsEveryFamilyInstance) {
  visit_family(3, 20, [](const SubsetSumInstance& inst) {
    ASSERT_EQ(std::get<SubsetSumInstance>(parse_instance(serialize(inst))), inst);
    const SsmInstance ssm = as_ssm(inst);
    ASSERT_EQ(std::get<SsmInstance>(parse_instance(serialize(ssm))), ssm);
  });
  for (const auto& inst : gen_family(2, 6)) {
    const PointInConeInstance pic = ssm_to_pic(as_ssm(inst)).instance;
    ASSERT_EQ(std::get<PointInConeInstance>(parse_instance(serialize(pic))), pic);
  }
}

TEST(Serialize, KeepsArbitraryPrecision) {
  const BigInt huge = (BigInt(1) << 300) + 12345;
  const SsmInstance inst{{huge - 1, huge}, huge};
  const std::string doc = serialize(inst);
  EXPECT_NE(doc.find(to_decimal(huge)), std::string::npos);
  EXPECT_EQ(std::get<SsmInstance>(parse_instance(doc)), inst);
}

TEST(Parse, NegativeTargetViolatesInvariant) {
  EXPECT_THROW(parse_instance(R"({"kind":"subset-sum","items":["1"],"target":"-1"})"),
               InvalidInstance);
}

TEST(Parse, MalformedDocuments) {
  EXPECT_THROW(parse_instance("{"), ParseError);
  EXPECT_THROW(parse_instance(R"({"kind":"subset-sum","items":[1],"target":"1"})"), ParseError);
  EXPECT_THROW(parse_instance(R"({"kind":"subset-sum","items":["1x"],"target":"1"})"), ParseError);
  EXPECT_THROW(parse_instance(R"({"kind":"knapsack","items":["1"],"target":"1"})"), ParseError);
  EXPECT_THROW(parse_instance(R"({"items":["1"],"target":"1"})"), ParseError);
  EXPECT_THROW(parse_instance(R"([1,2])"), ParseError);
}

TEST(Parse, UnboundedConeInstanceIsInvalid) {
  EXPECT_THROW(
      parse_instance(R"({"kind":"point-in-cone","dim":"2","A":[["1","1"]],"b":["1"],"q":["0","0"]})"),
      InvalidInstance);
}

TEST(ConeWitnessJson, RoundTrip) {
  const ConeWitness w{{nums({0, 0, 1, 2}), 2}, {nums({1, 1, 1, 0}), 4}};
  const Json doc = cone_witness_to_json(w);
  EXPECT_EQ(doc.dump(),
            R"([{"point":["0","0","1","2"],"lambda":"2"},{"point":["1","1","1","0"],"lambda":"4"}])");
  EXPECT_EQ(cone_witness_from_json(doc), w);
}

TEST(WitnessJson, DenseList) {
  const Witness w = Witness::from_dense(nums({2, 0, 1}));
  EXPECT_EQ(witness_to_json(w, 3).dump(), R"(["2","0","1"])");
  EXPECT_EQ(witness_from_json(witness_to_json(w, 3)), w);
}

TEST(ReportJson, Schema) {
  const SsmInstance inst{nums({2, 3}), 7};
  const Json doc = report_to_json(inst, verify_claim1(inst));
  EXPECT_EQ(doc["claim"], "claim1");
  EXPECT_EQ(doc["pass"], true);
  EXPECT_EQ(doc["details"]["enumerated"], 8);
}

}  // namespace
}  // namespace intcone

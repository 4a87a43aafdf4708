#include <gtest/gtest.h>

#include "unient/errors.hpp"
#include "unient/io.hpp"
#include "unient/random.hpp"

using namespace unient;

TEST(StateFile, RoundTripIsBitIdentical) {
  Rng rng({61, 0});
  const DensityMatrix rho = sample_ginibre_density({2, 3}, 4, rng);
  const auto back = parse_state(state_to_json(rho).dump());
  const auto& m = std::get<DensityMatrix>(back);
  EXPECT_EQ(m.dims(), rho.dims());
  EXPECT_TRUE((m.matrix().array() == rho.matrix().array()).all());

  const PureState psi = sample_haar_pure({3, 2}, rng);
  const auto parsed = parse_state(state_to_json(psi).dump());
  const auto& p = std::get<PureState>(parsed);
  EXPECT_TRUE((p.amplitudes().array() == psi.amplitudes().array()).all());
  EXPECT_EQ(state_to_json(psi)["schema"], "unient/1");
}

TEST(StateFile, MalformedInputIsAParseError) {
  EXPECT_THROW(parse_state("{"), ParseError);
  EXPECT_THROW(parse_state("[1, 2]"), ParseError);
  EXPECT_THROW(parse_state(R"({"dims": [2], "kind": "pure", "re": [1, 0]})"), ParseError);
  EXPECT_THROW(parse_state(R"({"dims": [2], "kind": "pure", "re": [1], "im": [0]})"), ParseError);
  EXPECT_THROW(parse_state(R"({"dims": [2], "kind": "weird", "re": [1, 0], "im": [0, 0]})"), ParseError);
  EXPECT_THROW(parse_state(R"({"dims": "2", "kind": "pure", "re": [1, 0], "im": [0, 0]})"), ParseError);
  EXPECT_THROW(parse_state(R"({"schema": "other/9", "dims": [2], "kind": "pure", "re": [1, 0], "im": [0, 0]})"),
               ParseError);
  EXPECT_THROW(read_state_file("/nonexistent/state.json"), ParseError);
}

TEST(StateFile, InvalidStateIsADomainError) {
  EXPECT_THROW(parse_state(R"({"dims": [2], "kind": "pure", "re": [1, 1], "im": [0, 0]})"), DomainError);
  EXPECT_THROW(parse_state(R"({"dims": [2], "kind": "mixed", "re": [1, 0, 0, 1], "im": [0, 0, 0, 0]})"),
               DomainError);
}

TEST(Report, JsonCarriesProvenance) {
  SuiteReport r;
  r.suite = "demo";
  r.rng = {9, 2};
  r.cases = {{"c0", 0.5, true}, {"c1", -1.0, false}};
  r.conventions = {"x >= 0"};
  const auto j = report_to_json(r);
  EXPECT_EQ(j["schema"], "unient/1");
  EXPECT_EQ(j["rng"]["algorithm"], "philox4x32-10");
  EXPECT_EQ(j["rng"]["seed"], 9u);
  EXPECT_EQ(j["failures"], 1u);
  EXPECT_EQ(j["passed"], false);
  EXPECT_EQ(j["min_residual"], -1.0);
  EXPECT_EQ(j["results"].size(), 2u);
}

TEST(FormatNumber, LocaleIndependentDigits) {
  EXPECT_EQ(format_number(0.1, 17), "0.10000000000000001");
  EXPECT_EQ(format_number(0.2149875, 7), "0.2149875");
  EXPECT_EQ(format_number(1.0, 17), "1");
  EXPECT_EQ(format_number(1e-20, 7), "1e-20");
}

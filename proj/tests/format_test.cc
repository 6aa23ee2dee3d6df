// Copyright 2026 The hubcover Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "hubcover/approx.h"
#include "hubcover/exact_solver.h"
#include "hubcover/hcp_format.h"
#include "hubcover/reductions.h"
#include "test_util.h"

namespace hubcover {
namespace {

using test::CodeOf;

std::optional<int> LineOf(std::string_view text) {
  try {
    ParseInstance(text);
  } catch (const Error& e) {
    return e.line();
  }
  return std::nullopt;
}

TEST(InstanceFormatTest, MinimalV3File) {
  const HcpInstance in = ParseInstance(
      "hcpi 1\nvariant v3\nbranch B\nhub H cost 1\nedge B H\n");
  EXPECT_EQ(in.variant(), Variant::kV3);
  EXPECT_TRUE(in.graph().BranchHub(0, 0));
}

TEST(InstanceFormatTest, MissingPhiForV1) {
  try {
    ParseInstance(
        "hcpi 1\nvariant v1\nallocation multi\nalpha 1\nbranch B\n"
        "hub H cost 1\ndist B H 1\n");
    FAIL() << "expected a syntax error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSyntax);
    EXPECT_NE(std::string(e.what()).find("phi"), std::string::npos);
  }
}

TEST(InstanceFormatTest, ErrorsCarryLineNumbers) {
  EXPECT_EQ(LineOf("hcpi 1\nvariant v3\nbranch B\nhub H cost x\n"), 4);
  EXPECT_EQ(LineOf("hcpi 1\n# comment\nvariant v3\nfrobnicate\n"), 4);
  EXPECT_EQ(LineOf("hcpi 2\n"), 1);
  EXPECT_EQ(LineOf("hcpi 1\nvariant v3\nbranch B\nhub H cost 1\nedge B Q\n"), 5);
  EXPECT_EQ(LineOf("hcpi 1\nvariant v2\nvariant v2\n"), 3);
}

TEST(InstanceFormatTest, SemanticErrorsKeepTheirCode) {
  EXPECT_EQ(CodeOf([] {
              ParseInstance("hcpi 1\nvariant v3\nbranch B\nhub H cost 0\n");
            }),
            ErrorCode::kNonPositiveCost);
  EXPECT_EQ(CodeOf([] {
              ParseInstance(
                  "hcpi 1\nvariant v3\nbranch B\nhub H cost 1\nhub G cost 1\n"
                  "edge H G\n");
            }),
            ErrorCode::kGeometryVariantMismatch);
}

TEST(InstanceFormatTest, V1NeedsEveryPair) {
  EXPECT_EQ(CodeOf([] {
              ParseInstance(
                  "hcpi 1\nvariant v1\nallocation multi\nalpha 1\nphi 1\n"
                  "branch A\nbranch B\nhub H cost 1\ndist A H 1\ndist B H 1\n");
            }),
            ErrorCode::kSyntax);
}

TEST(InstanceFormatTest, PhiOnlyForV1) {
  EXPECT_EQ(CodeOf([] {
              ParseInstance("hcpi 1\nvariant v3\nphi 1\nbranch B\nhub H cost 1\n");
            }),
            ErrorCode::kSyntax);
}

TEST(InstanceFormatTest, GoldenCorpusIsCanonicalAfterOneRoundTrip) {
  for (const char* name : {"relay_v2.hcpi", "chain_v3.hcpi", "relay_v1.hcpi",
                           "queens3_c3_sa2.hcpi"}) {
    const std::string text = test::ReadData(name);
    const HcpInstance in = ParseInstance(text);
    const std::string canonical = SerializeInstance(in);
    EXPECT_EQ(ParseInstance(canonical), in) << name;
    EXPECT_EQ(SerializeInstance(ParseInstance(canonical)), canonical) << name;
  }
  // The derived files are stored in canonical form.
  EXPECT_EQ(SerializeInstance(
                ReduceV2ToV1(test::LoadInstance("relay_v2.hcpi")).target_instance()),
            test::ReadData("relay_v1.hcpi"));
  EXPECT_EQ(SerializeInstance(
                QueensToSa2(ParseQueens(test::ReadData("queens3_c3.hcpi")))
                    .target_instance()),
            test::ReadData("queens3_c3_sa2.hcpi"));
}

TEST(InstanceFormatTest, CanonicalFormSortsRelations) {
  const HcpInstance in = test::LoadInstance("relay_v2.hcpi");
  const std::string canonical = SerializeInstance(in);
  EXPECT_NE(canonical.find("edge B1 H1\nedge B1 H2\nedge B1 H3\nedge B2 H1\n"
                           "edge B2 H2\nedge H2 H3\ntask B1 B2\n"),
            std::string::npos);
  EXPECT_EQ(canonical.rfind("hcpi 1\nvariant v2\nallocation multi\nalpha 1\n", 0),
            0u);
}

TEST(InstanceFormatProperty, RoundTripIsIdentity) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    for (Family f : {Family::kEuclideanV1, Family::kRandomGraphV2,
                     Family::kBipartiteV3}) {
      const HcpInstance in = test::SmallInstance(
          f, seed % 2 ? Allocation::kMulti : Allocation::kSingle, seed, 6, 6, 9);
      const HcpInstance capped =
          seed % 5 == 0 ? in.WithCapacity(in.hub_count()) : in;
      const std::string text = SerializeInstance(capped);
      EXPECT_EQ(ParseInstance(text), capped);
      EXPECT_EQ(SerializeInstance(ParseInstance(text)), text);
    }
  }
}

TEST(SolutionFormatTest, RoundTripsEveryWitnessKind) {
  std::vector<HcpInstance> instances = {
      test::LoadInstance("relay_v2.hcpi"), test::LoadInstance("chain_v3.hcpi"),
      test::LoadInstance("relay_v2.hcpi").WithAllocation(Allocation::kSingle)};
  for (const HcpInstance& in : instances) {
    const OptimalResult r = SolveExact(in);
    ASSERT_EQ(r.status, SolveStatus::kOptimal);
    const std::string text = SerializeSolution(in, *r.solution);
    const Solution back = ParseSolution(in, text);
    EXPECT_EQ(back.open_hubs(), r.solution->open_hubs());
    EXPECT_EQ(back.witness(), r.solution->witness());
    EXPECT_EQ(SerializeSolution(in, back), text);
  }
}

TEST(SolutionFormatTest, RejectsWrongLinesAndCosts) {
  const HcpInstance in = test::LoadInstance("relay_v2.hcpi");
  EXPECT_EQ(CodeOf([&] { ParseSolution(in, "hcps 1\nopen H1\nassign B1 H1\n"); }),
            ErrorCode::kSyntax);
  EXPECT_EQ(CodeOf([&] {
              ParseSolution(in, "hcps 1\ncost 2\nopen H1\ntour B1 H1 H1 B2\n");
            }),
            ErrorCode::kSemantic);
  EXPECT_EQ(CodeOf([&] { ParseSolution(in, "hcps 1\nopen H9\n"); }),
            ErrorCode::kSyntax);
  EXPECT_NO_THROW(ParseSolution(in, "hcps 1\nopen H1\ntour B1 H1 H1 B2\n"));
}

TEST(OtherFormatsTest, SetCoverQueensPlacementCover) {
  const SetCoverInstance sc = ParseSetCover(test::ReadData("chain.setcover"));
  EXPECT_EQ(SerializeSetCover(sc), test::ReadData("chain.setcover"));
  const CoverSelection pick = ParseCoverSelection(sc, "cover 1\nchoose H3\nchoose H1\n");
  EXPECT_EQ(pick.sets, (std::vector<int>{0, 2}));
  EXPECT_EQ(SerializeCoverSelection(sc, pick), "cover 1\nweight 2\nchoose H1\nchoose H3\n");
  EXPECT_EQ(CodeOf([&] { ParseCoverSelection(sc, "cover 1\nweight 3\nchoose H1\n"); }),
            ErrorCode::kSemantic);

  const QueensInstance q = ParseQueens(test::ReadData("queens3_c3.hcpi"));
  EXPECT_EQ(q.n(), 3);
  EXPECT_EQ(SerializeQueens(q), test::ReadData("queens3_c3.hcpi"));
  const QueensPlacement p{{{1, 2}, {2, 4}, {3, 1}, {4, 3}}};
  EXPECT_EQ(ParsePlacement(SerializePlacement(p)).queens, p.queens);
  EXPECT_EQ(CodeOf([] { ParseQueens("queens 1\nn 3\nqueen 1 1\nqueen 2 2\n"); }),
            ErrorCode::kInvalidBoard);
}

TEST(SniffTest, RecognisesEveryHeader) {
  EXPECT_EQ(SniffDocument("# c\nhcpi 1\n"), DocumentKind::kInstance);
  EXPECT_EQ(SniffDocument("hcps 1\n"), DocumentKind::kSolution);
  EXPECT_EQ(SniffDocument("setcover 1\n"), DocumentKind::kSetCover);
  EXPECT_EQ(SniffDocument("queens 1\n"), DocumentKind::kQueens);
  EXPECT_EQ(SniffDocument("placement 1\n"), DocumentKind::kPlacement);
  EXPECT_EQ(SniffDocument("cover 1\n"), DocumentKind::kCoverSelection);
  EXPECT_EQ(SniffDocument("hcpm 1\n"), DocumentKind::kMapping);
  EXPECT_EQ(CodeOf([] { SniffDocument("nonsense\n"); }), ErrorCode::kSyntax);
  EXPECT_EQ(CodeOf([] { SniffDocument("\n\n"); }), ErrorCode::kSyntax);
}

TEST(DigestTest, Fnv1a64) {
  EXPECT_EQ(ContentDigest(""), "cbf29ce484222325");
  EXPECT_EQ(ContentDigest("a"), "af63dc4c8601ec8c");
}

TEST(RecordFormatTest, RoundTripsEveryReduction) {
  const HcpInstance v2 = test::LoadInstance("relay_v2.hcpi");
  const HcpInstance v3 = test::LoadInstance("chain_v3.hcpi");
  std::vector<ReductionRecord> records = {
      ReduceV2ToV1(v2),
      ReduceV3ToV2(v3, 1, Allocation::kMulti),
      V3ToSetCover(v3),
      SetCoverToV3(ParseSetCover(test::ReadData("chain.setcover"))),
      QueensToSa2(QueensInstance::Build(4, {{2, 4}})),
  };
  for (const ReductionRecord& r : records) {
    const std::string text = SerializeRecord(r);
    const ReductionRecord back = ParseRecord(text);
    EXPECT_EQ(back.kind, r.kind);
    EXPECT_EQ(back.source_digest, r.source_digest);
    EXPECT_EQ(back.branch_map, r.branch_map);
    EXPECT_EQ(back.hub_map, r.hub_map);
    EXPECT_EQ(back.b0, r.b0);
    EXPECT_EQ(SerializeRecord(back), text);
  }
}

TEST(RecordFormatTest, DetectsTampering) {
  std::string text = SerializeRecord(ReduceV2ToV1(test::LoadInstance("relay_v2.hcpi")));
  const auto pos = text.find("task B1 B2\nend source");
  ASSERT_NE(pos, std::string::npos);
  std::string tampered = text;
  tampered.replace(pos, 10, "task B2 B1");
  EXPECT_EQ(CodeOf([&] { ParseRecord(tampered); }), ErrorCode::kSemantic);
  std::string unmapped = text;
  unmapped.erase(unmapped.find("map-hub H1 H1\n"), 14);
  EXPECT_EQ(CodeOf([&] { ParseRecord(unmapped); }), ErrorCode::kSemantic);
}

}  // namespace
}  // namespace hubcover

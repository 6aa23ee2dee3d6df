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

#ifndef HUBCOVER_HCP_FORMAT_H_
#define HUBCOVER_HCP_FORMAT_H_

#include <string>
#include <string_view>

#include "hubcover/instance.h"
#include "hubcover/queens.h"
#include "hubcover/reductions.h"
#include "hubcover/set_cover.h"
#include "hubcover/solution.h"

namespace hubcover {

// Line-oriented text formats. '#' starts a comment, blank lines are ignored,
// the first content line is a "<magic> 1" header. Rationals are "p/q" or
// integers. Canonical output: header, scalar keys in fixed order, declaration
// lines in index order, relation lines sorted lexicographically.
//
//   hcpi 1                          instance
//   variant v1|v2|v3
//   allocation single|multi         (optional for v3, default single)
//   alpha p/q                       (optional for v3, default 0)
//   phi p/q                         (v1 only, required)
//   capacity N                      (optional)
//   branch <name>
//   hub <name> cost p/q
//   dist <u> <v> p/q                (v1, every vertex pair exactly once)
//   edge <u> <v>                    (v2/v3)
//   task <b> <b'>                   (v1/v2)
//
//   hcps 1                          solution
//   cost p/q                        (optional on input, checked)
//   open <hub>
//   tour <b> <h> <h'> <b'>  |  assign <b> <h>
//
//   setcover 1 / element <name> / set <name> weight p/q covers <e>...
//   queens 1 / n N / queen <row> <col>
//   placement 1 / n N / queen <row> <col>
//   cover 1 / weight p/q / choose <set>
//   hcpm 1 (reduction mapping sidecar, see SerializeRecord)
//
// Parse errors throw Error(kSyntax) with the line number; semantic problems
// propagate the instance construction error code.

enum class DocumentKind {
  kInstance,
  kSolution,
  kSetCover,
  kQueens,
  kPlacement,
  kCoverSelection,
  kMapping,
};

// Identifies a document by its header line. Throws Error(kSyntax).
DocumentKind SniffDocument(std::string_view text);

HcpInstance ParseInstance(std::string_view text);
std::string SerializeInstance(const HcpInstance& instance);

Solution ParseSolution(const HcpInstance& instance, std::string_view text);
std::string SerializeSolution(const HcpInstance& instance,
                              const Solution& solution);

SetCoverInstance ParseSetCover(std::string_view text);
std::string SerializeSetCover(const SetCoverInstance& instance);

QueensInstance ParseQueens(std::string_view text);
std::string SerializeQueens(const QueensInstance& instance);

QueensPlacement ParsePlacement(std::string_view text);
std::string SerializePlacement(const QueensPlacement& placement);

CoverSelection ParseCoverSelection(const SetCoverInstance& instance,
                                   std::string_view text);
std::string SerializeCoverSelection(const SetCoverInstance& instance,
                                    const CoverSelection& selection);

// Canonical text of any source problem.
std::string SerializeProblem(const SourceProblem& problem);
// 64-bit FNV-1a of the canonical text, 16 lowercase hex digits.
std::string ContentDigest(std::string_view canonical_text);
std::string ProblemDigest(const SourceProblem& problem);

// Mapping sidecar: kind, source digest, b0, the mapping tables by name, and
// the embedded canonical source and target between "begin source"/"end
// source" and "begin target"/"end target" lines.
std::string SerializeRecord(const ReductionRecord& record);
// Throws Error(kSemantic) if the embedded source does not match the digest.
ReductionRecord ParseRecord(std::string_view text);

}  // namespace hubcover

#endif  // HUBCOVER_HCP_FORMAT_H_

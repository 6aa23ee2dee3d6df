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

#ifndef HUBCOVER_QUEENS_H_
#define HUBCOVER_QUEENS_H_

#include <compare>
#include <optional>
#include <vector>

namespace hubcover {

// 1-based board coordinates.
struct Square {
  int row = 1;
  int col = 1;
  auto operator<=>(const Square&) const = default;
};

// True if two queens on distinct squares attack each other: same row, same
// column, or same diagonal (|row - row'| == |col - col'|).
bool Attacks(Square a, Square b);

// n-queens completion: an n x n board with some non-attacking queens already
// placed, at most one per row.
class QueensInstance {
 public:
  // Throws Error(kInvalidBoard) for n < 1, coordinates outside [1, n], two
  // queens in one row, or attacking queens.
  static QueensInstance Build(int n, std::vector<Square> placed);

  int n() const { return n_; }
  // Sorted by row.
  const std::vector<Square>& placed() const { return placed_; }
  // Column of the queen fixed in `row`, if any.
  std::optional<int> FixedColumn(int row) const;

  bool operator==(const QueensInstance&) const = default;

 private:
  QueensInstance() = default;

  int n_ = 0;
  std::vector<Square> placed_;
};

// One queen per row, sorted by row.
struct QueensPlacement {
  std::vector<Square> queens;
  bool operator==(const QueensPlacement&) const = default;
};

// n mutually non-attacking queens, one per row, containing every fixed queen.
bool IsValidCompletion(const QueensInstance& instance,
                       const QueensPlacement& placement);

}  // namespace hubcover

#endif  // HUBCOVER_QUEENS_H_

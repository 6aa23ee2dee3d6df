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

#include "hubcover/queens.h"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

#include "hubcover/error.h"

namespace hubcover {

bool Attacks(Square a, Square b) {
  return a.row == b.row || a.col == b.col ||
         std::abs(a.row - b.row) == std::abs(a.col - b.col);
}

QueensInstance QueensInstance::Build(int n, std::vector<Square> placed) {
  if (n < 1) throw Error(ErrorCode::kInvalidBoard, "board size must be >= 1");
  for (const Square& s : placed) {
    if (s.row < 1 || s.row > n || s.col < 1 || s.col > n) {
      throw Error(ErrorCode::kInvalidBoard,
                  "queen (" + std::to_string(s.row) + "," +
                      std::to_string(s.col) + ") is off the board");
    }
  }
  std::sort(placed.begin(), placed.end());
  for (std::size_t i = 0; i < placed.size(); ++i) {
    for (std::size_t j = i + 1; j < placed.size(); ++j) {
      if (placed[i].row == placed[j].row) {
        throw Error(ErrorCode::kInvalidBoard,
                    "two queens in row " + std::to_string(placed[i].row));
      }
      if (Attacks(placed[i], placed[j])) {
        throw Error(ErrorCode::kInvalidBoard,
                    "queens in rows " + std::to_string(placed[i].row) +
                        " and " + std::to_string(placed[j].row) +
                        " attack each other");
      }
    }
  }
  QueensInstance instance;
  instance.n_ = n;
  instance.placed_ = std::move(placed);
  return instance;
}

std::optional<int> QueensInstance::FixedColumn(int row) const {
  for (const Square& s : placed_) {
    if (s.row == row) return s.col;
  }
  return std::nullopt;
}

bool IsValidCompletion(const QueensInstance& instance,
                       const QueensPlacement& placement) {
  const int n = instance.n();
  if (static_cast<int>(placement.queens.size()) != n) return false;
  for (int r = 0; r < n; ++r) {
    const Square s = placement.queens[r];
    if (s.row != r + 1 || s.col < 1 || s.col > n) return false;
    for (int q = 0; q < r; ++q) {
      if (Attacks(placement.queens[q], s)) return false;
    }
  }
  for (const Square& fixed : instance.placed()) {
    if (placement.queens[fixed.row - 1] != fixed) return false;
  }
  return true;
}

}  // namespace hubcover

// Copyright 2026 The Eqlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EQLAB_SPERNER_H_
#define EQLAB_SPERNER_H_

#include <array>
#include <string>
#include <vector>

namespace eqlab {

enum class Color { kRed = 0, kGreen = 1, kBlue = 2 };

// Lattice vertex of the subdivided 2-simplex in integer barycentric
// coordinates: a + b + c = N.  Corner (N,0,0) is the red corner, (0,N,0)
// green, (0,0,N) blue.
struct LatticeVertex {
  int a = 0;
  int b = 0;
  int c = 0;

  friend bool operator==(const LatticeVertex& u, const LatticeVertex& v) {
    return u.a == v.a && u.b == v.b && u.c == v.c;
  }
};

// A small triangle of the subdivision.  Upward cells sit on a base point r
// with corners r+e1, r+e2, r+e3 (sum N-1); downward cells hang from an apex
// s with corners s-e1, s-e2, s-e3 (sum N+1, all coordinates >= 1).
struct Cell {
  LatticeVertex anchor;
  bool upward = true;

  std::array<LatticeVertex, 3> Corners() const;

  friend bool operator==(const Cell& x, const Cell& y) {
    return x.anchor == y.anchor && x.upward == y.upward;
  }
};

// Legal three-coloring of the subdivided triangle: corners fixed to their
// colors, each side restricted to its endpoints' colors, interior free.
class SpernerInstance {
 public:
  // colors indexed canonically: offset(a) + b with c = N - a - b implied,
  // a ascending then b ascending.
  SpernerInstance(int subdivision, std::vector<Color> colors);

  int subdivision() const { return n_; }
  Color ColorAt(const LatticeVertex& v) const;
  int num_lattice_vertices() const { return static_cast<int>(colors_.size()); }

  bool IsTrichromatic(const Cell& cell) const;

 private:
  int n_;
  std::vector<Color> colors_;
};

// Follows the red-green door path from the boundary into the subdivision and
// returns a trichromatic cell.  Doors are crossings of edges with one red
// and one green endpoint; entry is through the unused boundary door nearest
// the green corner, and the walk through degree-<=2 corridor cells is the
// canonical directed path of the constructive proof.
Cell SpernerFind(const SpernerInstance& instance);

// Exhaustive scan over all N^2 cells; the count is odd for every legal
// coloring.
long SpernerCount(const SpernerInstance& instance);
std::vector<Cell> SpernerTrichromaticCells(const SpernerInstance& instance);

// File format: "n <N>" then N+1 lines, apex (a = N) first; line for level a
// holds N-a+1 tokens from {r,g,b} for b = 0..N-a.
SpernerInstance LoadSpernerInstance(const std::string& path);

}  // namespace eqlab

#endif  // EQLAB_SPERNER_H_

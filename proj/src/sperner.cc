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

#include "eqlab/sperner.h"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "eqlab/errors.h"

namespace eqlab {

std::array<LatticeVertex, 3> Cell::Corners() const {
  const int a = anchor.a, b = anchor.b, c = anchor.c;
  if (upward) {
    return {LatticeVertex{a + 1, b, c}, LatticeVertex{a, b + 1, c},
            LatticeVertex{a, b, c + 1}};
  }
  return {LatticeVertex{a - 1, b, c}, LatticeVertex{a, b - 1, c},
          LatticeVertex{a, b, c - 1}};
}

namespace {

int LatticeOffset(int n, int a) {
  // Number of vertices with first coordinate < a.
  return a * (n + 1) - a * (a - 1) / 2;
}

std::string VertexName(const LatticeVertex& v) {
  std::ostringstream oss;
  oss << "(" << v.a << "," << v.b << "," << v.c << ")";
  return oss.str();
}

}  // namespace

SpernerInstance::SpernerInstance(int subdivision, std::vector<Color> colors)
    : n_(subdivision), colors_(std::move(colors)) {
  if (n_ < 1) throw InputError("subdivision parameter must be >= 1");
  const int expected = (n_ + 1) * (n_ + 2) / 2;
  if (static_cast<int>(colors_.size()) != expected) {
    throw InputError("coloring has wrong size for the lattice");
  }
  // Legality: fixed corners, sides restricted to their endpoint colors.
  auto check = [this](const LatticeVertex& v, Color c1, Color c2) {
    const Color c = ColorAt(v);
    if (c != c1 && c != c2) {
      throw InputError("illegal coloring at boundary vertex " + VertexName(v));
    }
  };
  const LatticeVertex red_corner{n_, 0, 0}, green_corner{0, n_, 0},
      blue_corner{0, 0, n_};
  check(red_corner, Color::kRed, Color::kRed);
  check(green_corner, Color::kGreen, Color::kGreen);
  check(blue_corner, Color::kBlue, Color::kBlue);
  for (int a = 1; a < n_; ++a) {
    check(LatticeVertex{a, n_ - a, 0}, Color::kRed, Color::kGreen);
    check(LatticeVertex{a, 0, n_ - a}, Color::kRed, Color::kBlue);
    check(LatticeVertex{0, a, n_ - a}, Color::kGreen, Color::kBlue);
  }
}

Color SpernerInstance::ColorAt(const LatticeVertex& v) const {
  if (v.a < 0 || v.b < 0 || v.c < 0 || v.a + v.b + v.c != n_) {
    throw InputError("lattice vertex outside the simplex: " + VertexName(v));
  }
  return colors_[LatticeOffset(n_, v.a) + v.b];
}

bool SpernerInstance::IsTrichromatic(const Cell& cell) const {
  const auto corners = cell.Corners();
  bool seen[3] = {false, false, false};
  for (const LatticeVertex& v : corners) {
    seen[static_cast<int>(ColorAt(v))] = true;
  }
  return seen[0] && seen[1] && seen[2];
}

namespace {

// An undirected lattice edge; endpoints stored in a canonical order.
struct Door {
  LatticeVertex p, q;

  friend bool operator<(const Door& x, const Door& y) {
    auto key = [](const Door& d) {
      return std::array<int, 6>{d.p.a, d.p.b, d.p.c, d.q.a, d.q.b, d.q.c};
    };
    return key(x) < key(y);
  }
  friend bool operator==(const Door& x, const Door& y) {
    return x.p == y.p && x.q == y.q;
  }
};

Door MakeDoor(const LatticeVertex& u, const LatticeVertex& v) {
  const std::array<int, 3> ku{u.a, u.b, u.c}, kv{v.a, v.b, v.c};
  return ku <= kv ? Door{u, v} : Door{v, u};
}

// Both cells adjacent to an edge: the upward cell always exists; the
// downward cell exists when the apex has all coordinates >= 1.
std::vector<Cell> CellsTouching(const Door& door, int n) {
  // door endpoints differ by +1 in one coordinate and -1 in another.
  const LatticeVertex& p = door.p;
  const LatticeVertex& q = door.q;
  const LatticeVertex base{std::min(p.a, q.a), std::min(p.b, q.b),
                           std::min(p.c, q.c)};
  const LatticeVertex apex{std::max(p.a, q.a), std::max(p.b, q.b),
                           std::max(p.c, q.c)};
  std::vector<Cell> cells;
  EQLAB_CHECK(base.a + base.b + base.c == n - 1);
  cells.push_back(Cell{base, true});
  if (apex.a >= 1 && apex.b >= 1 && apex.c >= 1) {
    cells.push_back(Cell{apex, false});
  }
  return cells;
}

bool IsRedGreen(const SpernerInstance& instance, const Door& door) {
  const Color cp = instance.ColorAt(door.p);
  const Color cq = instance.ColorAt(door.q);
  return (cp == Color::kRed && cq == Color::kGreen) ||
         (cp == Color::kGreen && cq == Color::kRed);
}

// The red-green doors of a cell (0, 1, or 2 of them; 1 iff trichromatic).
std::vector<Door> RedGreenDoors(const SpernerInstance& instance,
                                const Cell& cell) {
  const auto corners = cell.Corners();
  std::vector<Door> doors;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const Door d = MakeDoor(corners[i], corners[j]);
      if (IsRedGreen(instance, d)) doors.push_back(d);
    }
  }
  return doors;
}

}  // namespace

Cell SpernerFind(const SpernerInstance& instance) {
  const int n = instance.subdivision();

  // Boundary doors live only on the red-green side (c = 0); order them from
  // the green corner (a = 0) upward and enter through the first unused one.
  std::vector<Door> boundary_doors;
  for (int a = 0; a < n; ++a) {
    const Door d =
        MakeDoor(LatticeVertex{a, n - a, 0}, LatticeVertex{a + 1, n - a - 1, 0});
    if (IsRedGreen(instance, d)) boundary_doors.push_back(d);
  }
  EQLAB_CHECK(!boundary_doors.empty());  // odd count for legal colorings

  std::set<Door> used;
  for (const Door& entry_door : boundary_doors) {
    if (used.count(entry_door) > 0) continue;
    Door entry = entry_door;
    used.insert(entry);
    Cell cell = CellsTouching(entry, n).front();  // boundary: upward cell only
    while (true) {
      if (instance.IsTrichromatic(cell)) return cell;
      const std::vector<Door> doors = RedGreenDoors(instance, cell);
      EQLAB_CHECK(doors.size() == 2);  // corridor cell
      EQLAB_CHECK(doors[0] == entry || doors[1] == entry);
      const Door exit = doors[0] == entry ? doors[1] : doors[0];
      EQLAB_CHECK(used.insert(exit).second);
      const std::vector<Cell> neighbors = CellsTouching(exit, n);
      if (neighbors.size() == 1) break;  // path leaves through the boundary
      cell = neighbors[0] == cell ? neighbors[1] : neighbors[0];
      entry = exit;
    }
  }
  throw InternalError("no trichromatic cell found for a legal coloring");
}

std::vector<Cell> SpernerTrichromaticCells(const SpernerInstance& instance) {
  const int n = instance.subdivision();
  std::vector<Cell> cells;
  for (int a = 0; a + 1 <= n; ++a) {
    for (int b = 0; a + b + 1 <= n; ++b) {
      const Cell up{LatticeVertex{a, b, n - 1 - a - b}, true};
      if (instance.IsTrichromatic(up)) cells.push_back(up);
    }
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; a + b <= n; ++b) {
      const int c = n + 1 - a - b;
      if (c < 1) continue;
      const Cell down{LatticeVertex{a, b, c}, false};
      if (instance.IsTrichromatic(down)) cells.push_back(down);
    }
  }
  return cells;
}

long SpernerCount(const SpernerInstance& instance) {
  return static_cast<long>(SpernerTrichromaticCells(instance).size());
}

SpernerInstance LoadSpernerInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open Sperner file: " + path);
  std::string keyword;
  int n = 0;
  if (!(in >> keyword >> n) || keyword != "n") {
    throw InputError("Sperner file must start with 'n <N>'");
  }
  if (n < 1) throw InputError("subdivision parameter must be >= 1");
  const int total = (n + 1) * (n + 2) / 2;
  std::vector<Color> colors(total, Color::kRed);
  // Apex-first rows: a = N down to 0, b ascending within a row.
  for (int a = n; a >= 0; --a) {
    for (int b = 0; b <= n - a; ++b) {
      std::string token;
      if (!(in >> token) || token.size() != 1) {
        throw InputError("truncated Sperner coloring");
      }
      Color color;
      switch (token[0]) {
        case 'r': color = Color::kRed; break;
        case 'g': color = Color::kGreen; break;
        case 'b': color = Color::kBlue; break;
        default:
          throw InputError("unknown color token '" + token + "'");
      }
      colors[LatticeOffset(n, a) + b] = color;
    }
  }
  return SpernerInstance(n, std::move(colors));
}

}  // namespace eqlab

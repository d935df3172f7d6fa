#include "polyomino/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "polyomino/error.hpp"

namespace polyomino {

namespace {

bool sorted_contains(std::span<const Cell> sorted, const Cell& cell) {
  return std::binary_search(sorted.begin(), sorted.end(), cell);
}

// BFS over a sorted, duplicate-free cell list.
bool sorted_is_connected(std::span<const Cell> sorted) {
  if (sorted.empty()) return false;
  std::vector<char> seen(sorted.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Cell cell = sorted[stack.back()];
    stack.pop_back();
    for (const Cell& offset : kNeighborOffsets) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), cell + offset);
      if (it == sorted.end() || *it != cell + offset) continue;
      auto index = static_cast<std::size_t>(it - sorted.begin());
      if (seen[index]) continue;
      seen[index] = 1;
      ++reached;
      stack.push_back(index);
    }
  }
  return reached == sorted.size();
}

std::vector<Cell> translated(std::span<const Cell> cells, const Cell& offset) {
  std::vector<Cell> out;
  out.reserve(cells.size());
  for (const Cell& cell : cells) out.push_back(cell + offset);
  return out;
}

}  // namespace

bool Polyomino::contains(const Cell& cell) const { return sorted_contains(cells_, cell); }

void sort_cells(std::vector<Cell>& cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
}

bool is_connected(std::span<const Cell> cells) {
  std::vector<Cell> sorted(cells.begin(), cells.end());
  sort_cells(sorted);
  return sorted_is_connected(sorted);
}

Polyomino normalize_unchecked(std::vector<Cell> cells) {
  sort_cells(cells);
  const Cell anchor = cells.front();
  for (Cell& cell : cells) cell = cell - anchor;
  return Polyomino(std::move(cells));
}

Polyomino normalize(std::span<const Cell> cells) {
  if (cells.empty()) throw Error("empty", "a polyomino needs at least one cell");
  std::vector<Cell> sorted(cells.begin(), cells.end());
  sort_cells(sorted);
  if (!sorted_is_connected(sorted)) {
    throw Error("disconnected", "cells " + format_cells(sorted) + " are not 4-connected");
  }
  return normalize_unchecked(std::move(sorted));
}

namespace {

// Offset from the second operand's smallest cell to the first operand's
// largest cell.
Cell junction_offset(Junction junction) {
  return junction == Junction::left ? Cell{-1, 0} : Cell{0, -1};
}

}  // namespace

Polyomino concat(const Polyomino& first, const Polyomino& second, Junction junction) {
  // second is normalized, so its smallest cell is (0, 0).
  const Cell offset = junction_offset(junction) - first.largest();
  std::vector<Cell> cells = translated(first.cells(), offset);
  cells.insert(cells.end(), second.cells().begin(), second.cells().end());
  return normalize_unchecked(std::move(cells));
}

bool is_constructible(const Polyomino& shape, Junction junction) {
  const Cell step = Cell{0, 0} - junction_offset(junction);
  const auto cells = shape.cells();
  for (std::size_t k = 1; k < cells.size(); ++k) {
    if (cells[k] != cells[k - 1] + step) continue;
    if (sorted_is_connected(cells.first(k)) && sorted_is_connected(cells.subspan(k))) {
      return true;
    }
  }
  return false;
}

std::vector<Polyomino> compositions(const Polyomino& first, const Polyomino& second) {
  // Offsets that put some cell of `second` edge-adjacent to some cell of
  // `first`: offset = a + d - b.
  std::set<Cell> offsets;
  for (const Cell& a : first.cells()) {
    for (const Cell& d : kNeighborOffsets) {
      for (const Cell& b : second.cells()) offsets.insert(a + d - b);
    }
  }
  std::set<Polyomino> shapes;
  for (const Cell& offset : offsets) {
    std::vector<Cell> moved = translated(second.cells(), offset);
    bool overlaps = std::any_of(moved.begin(), moved.end(),
                                [&](const Cell& cell) { return first.contains(cell); });
    if (overlaps) continue;
    moved.insert(moved.end(), first.cells().begin(), first.cells().end());
    // Both parts are connected and some pair touches, so the union is too.
    shapes.insert(normalize_unchecked(std::move(moved)));
  }
  return {shapes.begin(), shapes.end()};
}

SplitResult decompose_balanced(const Polyomino& shape) {
  const auto cells = shape.cells();
  const std::size_t n = cells.size();
  if (n < 2) throw Error("too small", "a balanced split needs at least two cells");

  auto index_of = [&](const Cell& cell) -> std::ptrdiff_t {
    auto it = std::lower_bound(cells.begin(), cells.end(), cell);
    if (it == cells.end() || *it != cell) return -1;
    return it - cells.begin();
  };

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(n, kNone);
  std::vector<std::size_t> subtree(n, 1);
  std::vector<char> visited(n, 0);

  // Iterative DFS; each frame remembers the next neighbor slot to try.
  struct Frame {
    std::size_t vertex;
    int next_neighbor;
  };
  std::vector<Frame> stack{{0, 0}};
  visited[0] = 1;
  std::size_t chosen = kNone;
  while (!stack.empty() && chosen == kNone) {
    Frame& frame = stack.back();
    if (frame.next_neighbor < 4) {
      const Cell next = cells[frame.vertex] + kNeighborOffsets[frame.next_neighbor++];
      const std::ptrdiff_t index = index_of(next);
      if (index < 0 || visited[index]) continue;
      visited[index] = 1;
      parent[index] = frame.vertex;
      stack.push_back({static_cast<std::size_t>(index), 0});
      continue;
    }
    const std::size_t vertex = frame.vertex;
    stack.pop_back();
    if (parent[vertex] != kNone) subtree[parent[vertex]] += subtree[vertex];
    const std::size_t size = subtree[vertex];
    if (4 * size + 1 >= n && 4 * size <= 3 * n + 1) chosen = vertex;
  }
  if (chosen == kNone) {
    throw Error("internal", "no balanced subtree in " + format_polyomino(shape));
  }

  // The chosen subtree is complete at postorder time: collect it by walking
  // the parent links of every cell.
  std::vector<char> in_part_a(n, 0);
  in_part_a[chosen] = 1;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t walk = v;
    while (walk != kNone && walk != chosen) walk = parent[walk];
    if (walk == chosen) in_part_a[v] = 1;
  }
  SplitResult result;
  for (std::size_t v = 0; v < n; ++v) {
    (in_part_a[v] ? result.part_a : result.part_b).push_back(cells[v]);
  }
  result.size_a = result.part_a.size();
  return result;
}

std::string format_cells(std::span<const Cell> cells) {
  std::string out;
  for (const Cell& cell : cells) {
    if (!out.empty()) out.push_back(' ');
    out += std::to_string(cell.column) + "," + std::to_string(cell.row);
  }
  return out;
}

std::string format_polyomino(const Polyomino& shape) { return format_cells(shape.cells()); }

Polyomino parse_polyomino(std::string_view text) {
  std::vector<Cell> cells;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    const auto comma = token.find(',');
    Cell cell;
    auto parse_int = [&](std::string_view part, int& value) {
      auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
      return ec == std::errc() && ptr == part.data() + part.size();
    };
    if (comma == std::string::npos ||
        !parse_int(std::string_view(token).substr(0, comma), cell.column) ||
        !parse_int(std::string_view(token).substr(comma + 1), cell.row)) {
      throw Error("malformed", "expected 'col,row', got '" + token + "'");
    }
    cells.push_back(cell);
  }
  return normalize(cells);
}

}  // namespace polyomino

#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

// Lattice cells and fixed polyominoes on the square lattice.
//
// Cell order. A cell c1 is smaller than c2 when c1 lies in a column to the
// left of c2, or in the same column and below it. With column = x growing
// rightward and row = y growing upward this is plain lexicographic order on
// (column, row), which is what Cell's defaulted comparison gives.
//
// Concatenation. concat(X, Y) translates X so that its largest cell sits
// next to the smallest cell of Y: directly to its left (Junction::left) or
// directly below it (Junction::below). Every translated X cell is smaller
// than every Y cell either way, so the union never overlaps and has
// |X| + |Y| cells.
//
// Constructibility. In concat(X, Y) every cell of X precedes every cell of
// Y in cell order, so X is exactly the first |X| cells c_1..c_k of the
// result and c_{k+1} is the neighbor of c_k on the junction side.
// Conversely, if for some k the cell c_{k+1} is that neighbor of c_k and
// both {c_1..c_k} and {c_{k+1}..c_n} are connected, those two parts
// concatenate back to W. Scanning k = 1..n-1 decides constructibility
// exactly, without trying pairs (X, Y).
//
// The two junctions give different inconstructible sets. With
// Junction::left, X fills columns <= c and Y columns > c, and the only
// edge between them is the junction itself. The split into an
// inconstructible head and an arbitrary tail is then unique (take the
// leftmost valid cut), which is what P(n) = sum_{i=1}^{n} Q(i) P(n-i)
// needs. With Junction::below that fails: the 2x2 square is both
// monomino + L-tromino and L-tromino + monomino with inconstructible heads,
// and from n = 4 on the direct count exceeds the recurrence (9 vs 8).
namespace polyomino {

struct Cell {
  int column = 0;
  int row = 0;

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;

  constexpr Cell operator+(const Cell& other) const {
    return {column + other.column, row + other.row};
  }
  constexpr Cell operator-(const Cell& other) const {
    return {column - other.column, row - other.row};
  }
};

inline constexpr Cell kNeighborOffsets[4] = {{-1, 0}, {0, -1}, {0, 1}, {1, 0}};

// Where the first operand's largest cell goes relative to the second
// operand's smallest cell.
enum class Junction { left, below };

// A normalized fixed polyomino: nonempty, 4-connected, cells sorted in cell
// order without duplicates, smallest cell at (0, 0). Only normalize() and
// the operations below build one, so every instance satisfies these.
class Polyomino {
 public:
  std::span<const Cell> cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  const Cell& smallest() const { return cells_.front(); }
  const Cell& largest() const { return cells_.back(); }
  bool contains(const Cell& cell) const;

  friend auto operator<=>(const Polyomino&, const Polyomino&) = default;
  friend bool operator==(const Polyomino&, const Polyomino&) = default;

 private:
  friend Polyomino normalize(std::span<const Cell> cells);
  friend Polyomino normalize_unchecked(std::vector<Cell> cells);
  explicit Polyomino(std::vector<Cell> cells) : cells_(std::move(cells)) {}

  std::vector<Cell> cells_;
};

struct SplitResult {
  std::vector<Cell> part_a;
  std::vector<Cell> part_b;
  std::size_t size_a = 0;
};

// Sorts and dedupes in place.
void sort_cells(std::vector<Cell>& cells);

// True iff the 4-adjacency graph on `cells` is connected. Empty -> false.
bool is_connected(std::span<const Cell> cells);

// Translates so the smallest cell is (0, 0). Throws Error("empty") or
// Error("disconnected").
Polyomino normalize(std::span<const Cell> cells);

// Same, for callers that already know the cells are a connected set.
// Skips the connectivity test; still sorts, dedupes and translates.
Polyomino normalize_unchecked(std::vector<Cell> cells);

Polyomino concat(const Polyomino& first, const Polyomino& second,
                 Junction junction = Junction::left);

bool is_constructible(const Polyomino& shape, Junction junction = Junction::left);

// All distinct polyominoes formed by a disjoint connected union of a
// translate of `first` and a translate of `second`, sorted.
std::vector<Polyomino> compositions(const Polyomino& first, const Polyomino& second);

// Splits a polyomino of n >= 2 cells into two connected parts, the first of
// size l with (n-1)/4 <= l <= (3n+1)/4.
//
// Builds a depth-first spanning tree rooted at the smallest cell (neighbors
// visited in cell order) and takes the first subtree, in postorder, whose
// size lands in range. Removing a subtree from a tree leaves a tree, so the
// complement is connected. Such a subtree always exists: if none did, the
// root's (at most 4) subtrees hold n-1 cells, so one exceeds (3n+1)/4. Take
// a smallest oversized subtree; its root has at most 3 children, all below
// (n-1)/4, capping it at 3(n-1)/4 + 1 = (3n+1)/4. Contradiction.
//
// Throws Error("too small") when n < 2.
SplitResult decompose_balanced(const Polyomino& shape);

// Text form "col,row col,row ..."; parse normalizes.
std::string format_polyomino(const Polyomino& shape);
std::string format_cells(std::span<const Cell> cells);
Polyomino parse_polyomino(std::string_view text);

}  // namespace polyomino

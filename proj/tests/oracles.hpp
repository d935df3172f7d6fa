#pragma once

// Slow, obviously-correct reference implementations used only by tests.
// None of these call into the enumeration or composition code they check.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "polyomino/count_table.hpp"
#include "polyomino/geometry.hpp"

namespace oracle {

using polyomino::Cell;
using Shape = std::set<Cell>;

// Translate so the smallest cell (column, then row) is the origin.
Shape normalized(const Shape& cells);

bool connected(const Shape& cells);

// All fixed polyominoes of each size 1..n_max, grown one cell at a time
// from every shape of the previous size and deduped by normalized form.
std::vector<std::set<Shape>> grow_and_dedupe(int n_max);

// Every offset in a box wide enough to cover all contacts, kept when the
// translates are disjoint and the union is connected.
std::set<Shape> brute_compositions(const Shape& first, const Shape& second);

Shape to_shape(const polyomino::Polyomino& shape);

// A random connected cell set of `size` cells at a random offset.
std::vector<Cell> random_connected(std::mt19937_64& rng, int size);

// The bundled 56-row table.
polyomino::CountTable published_table();

}  // namespace oracle

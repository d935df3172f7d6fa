#pragma once

#include <cstdint>
#include <functional>

#include "polyomino/count_table.hpp"
#include "polyomino/geometry.hpp"

namespace polyomino {

struct EnumerationLimits {
  int counting = 16;
  int streaming = 13;
};

struct EnumerationOptions {
  EnumerationLimits limits;
  // 0 means std::thread::hardware_concurrency().
  unsigned workers = 0;
};

// Exact fixed-polyomino counts for sizes 0..n_max (P(0) = 1).
// Errors: "range" for n_max < 1, "limit" above limits.counting.
CountTable count_fixed(int n_max, const EnumerationOptions& options = {});

using PolyominoVisitor = std::function<void(const Polyomino&)>;

// Calls visitor once per fixed polyomino of exactly n cells, from the
// calling thread, in unspecified order. Returns the number of visits.
// Errors: "range" for n < 1, "limit" above limits.streaming.
std::uint64_t for_each_polyomino(int n, const PolyominoVisitor& visitor,
                                 const EnumerationLimits& limits = {});

// Like for_each_polyomino, but visits every size 1..n_max in one pass.
std::uint64_t for_each_polyomino_up_to(int n_max, const PolyominoVisitor& visitor,
                                       const EnumerationLimits& limits = {});

// Number of polyominoes of each size that are not a concatenation of two
// smaller ones, by direct test of every shape. Q(0) = 1. With the default
// junction this matches derive_q of the P table.
CountTable count_inconstructible(int n_max, const EnumerationLimits& limits = {},
                                 Junction junction = Junction::left);

}  // namespace polyomino

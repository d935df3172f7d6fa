#include "polyomino/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

#include "polyomino/error.hpp"

namespace polyomino {

namespace {

// Redelmeier's growth on a padded grid. A polyomino is grown from the
// origin cell (0, 0), which is forced to be its smallest cell by blocking
// every cell with column < 0 or (column == 0 and row < 0). Each cell enters
// the untried set at most once along a branch ("reached"), and a cell popped
// from the untried set stays reached for all later siblings, so every
// polyomino is produced exactly once.
class Grower {
 public:
  explicit Grower(int n_max)
      : n_max_(n_max),
        height_(2 * n_max + 1),
        reached_(static_cast<std::size_t>((n_max + 2) * height_), 0),
        levels_(static_cast<std::size_t>(n_max + 1)),
        path_(static_cast<std::size_t>(n_max), 0),
        counts_(static_cast<std::size_t>(n_max + 1), 0) {
    for (int column = -1; column <= n_max; ++column) {
      for (int row = -n_max; row <= n_max; ++row) {
        const bool blocked = column < 0 || column >= n_max || row <= -n_max ||
                             row >= n_max || (column == 0 && row < 0);
        if (blocked) reached_[index(column, row)] = 1;
      }
    }
    for (auto& level : levels_) level.reserve(static_cast<std::size_t>(4 * n_max + 4));
    offsets_[0] = -height_;
    offsets_[1] = -1;
    offsets_[2] = 1;
    offsets_[3] = height_;
  }

  std::size_t index(int column, int row) const {
    return static_cast<std::size_t>((column + 1) * height_ + (row + n_max_));
  }

  Cell cell_at(int idx) const { return {idx / height_ - 1, idx % height_ - n_max_}; }

  // Task snapshot: the state right before expanding a node with `depth`
  // cells.
  struct Task {
    int depth = 0;
    std::vector<std::uint8_t> reached;
    std::vector<int> untried;
    std::vector<int> path;
  };

  void start() {
    const int origin = static_cast<int>(index(0, 0));
    reached_[static_cast<std::size_t>(origin)] = 1;
    levels_[0].assign(1, origin);
  }

  void load(const Task& task) {
    reached_ = task.reached;
    levels_[static_cast<std::size_t>(task.depth)] = task.untried;
    std::copy(task.path.begin(), task.path.end(), path_.begin());
  }

  // Expands the untried set stored at levels_[depth]; the node being
  // expanded has `depth` cells. With a split depth set, nodes that reach it
  // are saved to `tasks` instead of being expanded.
  template <typename OnShape>
  void grow(int depth, OnShape& on_shape, int split_depth = -1, std::vector<Task>* tasks = nullptr) {
    auto& untried = levels_[static_cast<std::size_t>(depth)];
    while (!untried.empty()) {
      const int cell = untried.back();
      untried.pop_back();
      path_[static_cast<std::size_t>(depth)] = cell;
      const int size = depth + 1;
      ++counts_[static_cast<std::size_t>(size)];
      on_shape(size);
      if (size >= n_max_) continue;

      auto& next = levels_[static_cast<std::size_t>(size)];
      next.assign(untried.begin(), untried.end());
      // Freshly reached cells, released again after the subtree.
      int added[4];
      int added_count = 0;
      for (int offset : offsets_) {
        const int neighbor = cell + offset;
        auto& mark = reached_[static_cast<std::size_t>(neighbor)];
        if (mark) continue;
        mark = 1;
        next.push_back(neighbor);
        added[added_count++] = neighbor;
      }
      if (size == split_depth && tasks != nullptr) {
        tasks->push_back({size, reached_, next,
                          {path_.begin(), path_.begin() + size}});
      } else {
        grow(size, on_shape, split_depth, tasks);
      }
      for (int i = 0; i < added_count; ++i) reached_[static_cast<std::size_t>(added[i])] = 0;
    }
  }

  const std::vector<std::uint64_t>& counts() const { return counts_; }

  std::vector<Cell> current_cells(int size) const {
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) cells.push_back(cell_at(path_[static_cast<std::size_t>(i)]));
    return cells;
  }

 private:
  int n_max_;
  int height_;
  int offsets_[4] = {};
  std::vector<std::uint8_t> reached_;
  std::vector<std::vector<int>> levels_;
  std::vector<int> path_;
  std::vector<std::uint64_t> counts_;
};

void check_size(int n, int limit) {
  if (n < 1) throw Error("range", "size must be at least 1, got " + std::to_string(n));
  if (n > limit) {
    throw Error("limit", "size " + std::to_string(n) + " exceeds the configured limit " +
                             std::to_string(limit));
  }
}

CountTable to_table(const std::vector<std::uint64_t>& counts, Origin origin) {
  std::vector<BigInt> values;
  values.reserve(counts.size());
  values.emplace_back(1);
  for (std::size_t n = 1; n < counts.size(); ++n) {
    BigInt value;
    mpz_import(value.get_mpz_t(), 1, 1, sizeof(counts[n]), 0, 0, &counts[n]);
    values.push_back(std::move(value));
  }
  return CountTable(std::move(values), origin);
}

constexpr int kSplitDepth = 7;

}  // namespace

CountTable count_fixed(int n_max, const EnumerationOptions& options) {
  check_size(n_max, options.limits.counting);
  auto ignore = [](int) {};

  Grower top(n_max);
  top.start();
  if (n_max <= kSplitDepth + 1) {
    top.grow(0, ignore);
    return to_table(top.counts(), Origin::enumerated);
  }

  std::vector<Grower::Task> tasks;
  top.grow(0, ignore, kSplitDepth, &tasks);

  unsigned workers = options.workers != 0 ? options.workers : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(tasks.size()));

  std::vector<std::vector<std::uint64_t>> partial(workers);
  std::atomic<std::size_t> next_task{0};
  auto work = [&](unsigned id) {
    Grower grower(n_max);
    while (true) {
      const std::size_t t = next_task.fetch_add(1);
      if (t >= tasks.size()) break;
      grower.load(tasks[t]);
      grower.grow(tasks[t].depth, ignore);
    }
    partial[id] = grower.counts();
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned id = 0; id < workers; ++id) threads.emplace_back(work, id);
  }

  std::vector<std::uint64_t> totals = top.counts();
  for (const auto& counts : partial) {
    for (std::size_t n = 0; n < totals.size(); ++n) totals[n] += counts[n];
  }
  return to_table(totals, Origin::enumerated);
}

std::uint64_t for_each_polyomino_up_to(int n_max, const PolyominoVisitor& visitor,
                                       const EnumerationLimits& limits) {
  check_size(n_max, limits.streaming);
  Grower grower(n_max);
  grower.start();
  std::uint64_t visits = 0;
  auto on_shape = [&](int size) {
    ++visits;
    visitor(normalize_unchecked(grower.current_cells(size)));
  };
  grower.grow(0, on_shape);
  return visits;
}

std::uint64_t for_each_polyomino(int n, const PolyominoVisitor& visitor,
                                 const EnumerationLimits& limits) {
  check_size(n, limits.streaming);
  Grower grower(n);
  grower.start();
  std::uint64_t visits = 0;
  auto on_shape = [&](int size) {
    if (size != n) return;
    ++visits;
    visitor(normalize_unchecked(grower.current_cells(size)));
  };
  grower.grow(0, on_shape);
  return visits;
}

CountTable count_inconstructible(int n_max, const EnumerationLimits& limits, Junction junction) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n_max) + 1, 0);
  for_each_polyomino_up_to(
      n_max,
      [&](const Polyomino& shape) {
        if (!is_constructible(shape, junction)) ++counts[shape.size()];
      },
      limits);
  counts[0] = 1;
  return to_table(counts, Origin::enumerated);
}

}  // namespace polyomino

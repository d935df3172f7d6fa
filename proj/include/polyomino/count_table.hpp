#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polyomino/numeric.hpp"

namespace polyomino {

enum class Origin { enumerated, ingested, derived };

std::string_view origin_name(Origin origin);

// Exact counts indexed by size, contiguous from 0 to max_n. Index 0 holds
// the empty-polyomino convention P(0) = Q(0) = 1.
class CountTable {
 public:
  // Throws Error("malformed") if values is empty or has a negative entry.
  CountTable(std::vector<BigInt> values, Origin origin);

  int max_n() const { return static_cast<int>(values_.size()) - 1; }
  Origin origin() const { return origin_; }
  std::span<const BigInt> values() const { return values_; }

  // Throws Error("range") outside 0..max_n.
  const BigInt& at(int n) const;
  const BigInt& operator[](int n) const { return values_[static_cast<std::size_t>(n)]; }

  // Entries 0..n (n <= max_n).
  CountTable truncated(int n) const;

  friend bool operator==(const CountTable& a, const CountTable& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<BigInt> values_;
  Origin origin_;
};

// Reads "n<ws>value" lines or bare values (numbered from 1 upward), with
// '#' comments and blank lines skipped. P(0) = 1 is inserted.
// Errors: "malformed", "duplicate", "non-contiguous", "empty".
CountTable ingest_counts(std::istream& in);
CountTable ingest_counts_file(const std::filesystem::path& path);

// "n<TAB>value" for n = 1..max_n.
void write_counts(std::ostream& out, const CountTable& table);

// {"origin": "...", "max_n": N, "values": {"1": "1", ...}}, counts as
// decimal strings.
std::string table_to_json(const CountTable& table);
CountTable table_from_json(std::string_view json);

// On-disk cache: the count-table text plus a trailing "# checksum <hex>"
// line over the body. Written to a temporary and renamed into place.
void write_cache(const std::filesystem::path& path, const CountTable& table);
// nullopt when the file is missing, unparsable, or the checksum disagrees.
std::optional<CountTable> read_cache(const std::filesystem::path& path);

}  // namespace polyomino

#include "polyomino/count_table.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include <json.hpp>

#include "polyomino/error.hpp"

namespace polyomino {

namespace {

bool is_unsigned_decimal(std::string_view token) {
  return !token.empty() && std::all_of(token.begin(), token.end(), [](char ch) {
    return std::isdigit(static_cast<unsigned char>(ch)) != 0;
  });
}

BigInt parse_count(std::string_view token, int line_number) {
  if (!is_unsigned_decimal(token)) {
    throw Error("malformed", "line " + std::to_string(line_number) + ": '" +
                                 std::string(token) + "' is not a nonnegative integer");
  }
  return BigInt(std::string(token), 10);
}

// FNV-1a, 64-bit.
std::uint64_t checksum(std::string_view body) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : body) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string hex(std::uint64_t value) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << value;
  return out.str();
}

}  // namespace

std::string_view origin_name(Origin origin) {
  switch (origin) {
    case Origin::enumerated:
      return "enumerated";
    case Origin::ingested:
      return "ingested";
    case Origin::derived:
      return "derived";
  }
  return "unknown";
}

CountTable::CountTable(std::vector<BigInt> values, Origin origin)
    : values_(std::move(values)), origin_(origin) {
  if (values_.empty()) throw Error("malformed", "a count table needs at least the n = 0 entry");
  for (std::size_t n = 0; n < values_.size(); ++n) {
    if (values_[n] < 0) {
      throw Error("malformed", "negative count at n = " + std::to_string(n));
    }
  }
}

const BigInt& CountTable::at(int n) const {
  if (n < 0 || n > max_n()) {
    throw Error("range", "n = " + std::to_string(n) + " outside 0.." + std::to_string(max_n()));
  }
  return values_[static_cast<std::size_t>(n)];
}

CountTable CountTable::truncated(int n) const {
  at(n);
  return CountTable({values_.begin(), values_.begin() + n + 1}, origin_);
}

CountTable ingest_counts(std::istream& in) {
  std::map<long, BigInt> rows;
  std::string line;
  int line_number = 0;
  long next_bare = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string token; fields >> token;) tokens.push_back(token);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    long n = next_bare;
    std::string_view value_token;
    if (tokens.size() == 1) {
      value_token = tokens[0];
    } else if (tokens.size() == 2) {
      if (!is_unsigned_decimal(tokens[0]) || tokens[0].size() > 9) {
        throw Error("malformed", "line " + std::to_string(line_number) + ": bad index '" +
                                     tokens[0] + "'");
      }
      n = std::stol(tokens[0]);
      value_token = tokens[1];
    } else {
      throw Error("malformed", "line " + std::to_string(line_number) +
                                   ": expected 'n value' or a bare value");
    }
    if (n < 1) {
      throw Error("malformed", "line " + std::to_string(line_number) + ": indices start at 1");
    }
    BigInt value = parse_count(value_token, line_number);
    if (value == 0) {
      throw Error("malformed", "line " + std::to_string(line_number) + ": counts must be positive");
    }
    if (!rows.emplace(n, std::move(value)).second) {
      throw Error("duplicate", "n = " + std::to_string(n) + " appears twice");
    }
    next_bare = n + 1;
  }
  if (rows.empty()) throw Error("empty", "no counts in input");

  std::vector<BigInt> values{BigInt(1)};
  long expected = 1;
  for (auto& [n, value] : rows) {
    if (n != expected) {
      throw Error("non-contiguous", "missing n = " + std::to_string(expected));
    }
    values.push_back(std::move(value));
    ++expected;
  }
  return CountTable(std::move(values), Origin::ingested);
}

CountTable ingest_counts_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("io", "cannot open counts file '" + path.string() + "'");
  return ingest_counts(in);
}

void write_counts(std::ostream& out, const CountTable& table) {
  for (int n = 1; n <= table.max_n(); ++n) out << n << '\t' << table[n].get_str() << '\n';
}

std::string table_to_json(const CountTable& table) {
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  for (int n = 1; n <= table.max_n(); ++n) values[std::to_string(n)] = table[n].get_str();
  nlohmann::ordered_json doc;
  doc["origin"] = origin_name(table.origin());
  doc["max_n"] = table.max_n();
  doc["values"] = std::move(values);
  return doc.dump();
}

CountTable table_from_json(std::string_view json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed", e.what());
  }
  if (!doc.is_object() || !doc.contains("values") || !doc["values"].is_object() ||
      !doc.contains("max_n") || !doc["max_n"].is_number_integer()) {
    throw Error("malformed", "expected an object with 'max_n' and 'values'");
  }
  const int max_n = doc["max_n"].get<int>();
  Origin origin = Origin::ingested;
  if (doc.contains("origin") && doc["origin"].is_string()) {
    const std::string name = doc["origin"].get<std::string>();
    if (name == "enumerated") origin = Origin::enumerated;
    if (name == "derived") origin = Origin::derived;
  }
  std::vector<BigInt> values{BigInt(1)};
  const auto& rows = doc["values"];
  if (static_cast<int>(rows.size()) != max_n) {
    throw Error("non-contiguous", "expected " + std::to_string(max_n) + " values");
  }
  for (int n = 1; n <= max_n; ++n) {
    const std::string key = std::to_string(n);
    if (!rows.contains(key) || !rows[key].is_string()) {
      throw Error("non-contiguous", "missing n = " + key);
    }
    values.push_back(parse_count(rows[key].get<std::string>(), n));
  }
  return CountTable(std::move(values), origin);
}

void write_cache(const std::filesystem::path& path, const CountTable& table) {
  std::ostringstream body;
  write_counts(body, table);
  const std::string text = body.str();
  const std::filesystem::path temporary = path.string() + ".tmp";
  {
    std::ofstream out(temporary, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("io", "cannot write cache '" + temporary.string() + "'");
    out << text << "# checksum " << hex(checksum(text)) << '\n';
    if (!out.flush()) throw Error("io", "cannot write cache '" + temporary.string() + "'");
  }
  std::filesystem::rename(temporary, path);
}

std::optional<CountTable> read_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::string body;
  std::string stored;
  for (std::string line; std::getline(in, line);) {
    constexpr std::string_view kTag = "# checksum ";
    if (line.rfind(kTag, 0) == 0) {
      stored = line.substr(kTag.size());
      break;
    }
    body += line;
    body += '\n';
  }
  if (stored.empty() || stored != hex(checksum(body))) return std::nullopt;
  try {
    std::istringstream text(body);
    CountTable table = ingest_counts(text);
    return CountTable({table.values().begin(), table.values().end()}, Origin::enumerated);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace polyomino

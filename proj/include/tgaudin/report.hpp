#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "tgaudin/gaudin.hpp"

namespace tgaudin {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, info };
std::string to_string(Status s);

/// One verified statement. `info` records describe exploratory output and
/// never fail a suite.
struct CheckRecord {
  std::string id;
  std::string anchor;  // the statement being checked, in words
  Status status = Status::pass;
  Json witness = Json::object();
};

struct Report {
  std::string suite;
  std::vector<CheckRecord> records;

  void add(std::string id, std::string anchor, bool ok, Json witness = Json::object());
  void info(std::string id, std::string anchor, Json witness);
  void append(const Report& other);
  [[nodiscard]] bool pass() const;
  [[nodiscard]] std::size_t failures() const;
};

/// Exact "num/den" string.
std::string rational_string(const Rational& r);

/// Sparse triplets [[row, col, "num/den"], ...] in row-major order.
Json sparse_entries(const QOp& t);
/// {dim, nnz, entries}.
Json operator_json(const QOp& t);

Json report_json(const Report& r, const Json& config);

}  // namespace tgaudin

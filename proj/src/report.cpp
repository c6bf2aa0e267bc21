#include "tgaudin/report.hpp"

#include <algorithm>

namespace tgaudin {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::info:
      return "info";
  }
  return "?";
}

void Report::add(std::string id, std::string anchor, bool ok, Json witness) {
  records.push_back({std::move(id), std::move(anchor), ok ? Status::pass : Status::fail, std::move(witness)});
}

void Report::info(std::string id, std::string anchor, Json witness) {
  records.push_back({std::move(id), std::move(anchor), Status::info, std::move(witness)});
}

void Report::append(const Report& other) {
  for (const auto& r : other.records) {
    records.push_back(r);
    records.back().id = other.suite + "/" + r.id;
  }
}

bool Report::pass() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return r.status == Status::fail; }));
}

std::string rational_string(const Rational& r) { return r.num().get_str() + "/" + r.den().get_str(); }

Json sparse_entries(const QOp& t) {
  Json out = Json::array();
  for (const auto& [key, v] : t.entries()) out.push_back(Json::array({key.first, key.second, rational_string(v)}));
  return out;
}

Json operator_json(const QOp& t) {
  Json j;
  j["dim"] = t.space().dim();
  j["nnz"] = t.nnz();
  j["entries"] = sparse_entries(t);
  return j;
}

Json report_json(const Report& r, const Json& config) {
  Json j;
  j["suite"] = r.suite;
  j["config"] = config;
  std::size_t passed = 0, info = 0;
  for (const auto& rec : r.records) {
    if (rec.status == Status::pass) ++passed;
    if (rec.status == Status::info) ++info;
  }
  j["summary"] = {{"status", r.pass() ? "pass" : "fail"},
                  {"checks", r.records.size()},
                  {"passed", passed},
                  {"failed", r.failures()},
                  {"info", info}};
  Json recs = Json::array();
  for (const auto& rec : r.records)
    recs.push_back({{"id", rec.id}, {"anchor", rec.anchor}, {"status", to_string(rec.status)}, {"witness", rec.witness}});
  j["records"] = std::move(recs);
  return j;
}

}  // namespace tgaudin

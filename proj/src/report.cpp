#include "fockbound/report.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace fockbound {

namespace {

using nlohmann::json;

// Exact histogram boundaries on slack; counted with rational comparisons so
// the report bytes cannot depend on floating-point rounding.
const std::vector<std::pair<std::string, Rational>>& histogram_edges() {
  static const std::vector<std::pair<std::string, Rational>> edges = {
      {"<=0", Rational(0)},          {"<=1/1000", Rational(1, 1000)},
      {"<=1/100", Rational(1, 100)}, {"<=1/10", Rational(1, 10)},
      {"<=1/2", Rational(1, 2)},     {"<=1", Rational(1)},
      {"<=10", Rational(10)},
  };
  return edges;
}

void write_atomically(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for write: " + tmp);
    out << contents;
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

VerificationRecord make_record(std::string_view claim, std::string instance,
                               Rational lhs, Rational rhs) {
  VerificationRecord r;
  r.claim = std::string(claim);
  r.instance = std::move(instance);
  r.lhs = lhs;
  r.rhs = rhs;
  r.pass = lhs <= rhs;
  return r;
}

void ReportSink::add(VerificationRecord r) { records_.push_back(std::move(r)); }

void ReportSink::merge(std::vector<VerificationRecord> rs) {
  for (auto& r : rs) records_.push_back(std::move(r));
}

std::size_t ReportSink::violation_count() const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(),
                    [](const VerificationRecord& r) { return !r.pass; }));
}

std::vector<VerificationRecord> ReportSink::sorted() const {
  auto rs = records_;
  std::stable_sort(rs.begin(), rs.end(),
                   [](const VerificationRecord& a, const VerificationRecord& b) {
                     if (a.claim != b.claim) return a.claim < b.claim;
                     return a.instance < b.instance;
                   });
  return rs;
}

void ReportSink::write(const std::string& out_dir, const std::string& suite) const {
  std::filesystem::create_directories(out_dir);
  const auto rs = sorted();

  std::string jsonl;
  std::string csv = "claim,instance,lhs,rhs,slack,pass\n";
  for (const auto& r : rs) {
    json line;
    line["claim"] = r.claim;
    line["instance"] = r.instance;
    line["lhs"] = r.lhs.to_string();
    line["rhs"] = r.rhs.to_string();
    line["slack"] = r.slack().to_string();
    line["pass"] = r.pass;
    jsonl += line.dump();
    jsonl += '\n';
    csv += csv_escape(r.claim) + ',' + csv_escape(r.instance) + ',' +
           r.lhs.to_string() + ',' + r.rhs.to_string() + ',' +
           r.slack().to_string() + ',' + (r.pass ? "1" : "0") + '\n';
  }

  json summary;
  summary["suite"] = suite;
  summary["records"] = rs.size();
  summary["violations"] = violation_count();
  json claims = json::object();
  for (std::size_t i = 0; i < rs.size();) {
    std::size_t j = i;
    std::size_t violations = 0;
    Rational min_slack = rs[i].slack();
    std::vector<std::size_t> buckets(histogram_edges().size() + 1, 0);
    while (j < rs.size() && rs[j].claim == rs[i].claim) {
      const auto slack = rs[j].slack();
      if (!rs[j].pass) ++violations;
      if (slack < min_slack) min_slack = slack;
      std::size_t b = 0;
      while (b < histogram_edges().size() && slack > histogram_edges()[b].second)
        ++b;
      ++buckets[b];
      ++j;
    }
    json entry;
    entry["count"] = j - i;
    entry["violations"] = violations;
    entry["min_slack"] = min_slack.to_string();
    json hist = json::object();
    for (std::size_t b = 0; b < histogram_edges().size(); ++b)
      hist[histogram_edges()[b].first] = buckets[b];
    hist[">10"] = buckets.back();
    entry["slack_histogram"] = hist;
    claims[rs[i].claim] = entry;
    i = j;
  }
  summary["claims"] = claims;

  write_atomically(out_dir + "/" + suite + "_records.jsonl", jsonl);
  write_atomically(out_dir + "/" + suite + "_records.csv", csv);
  write_atomically(out_dir + "/" + suite + "_summary.json", summary.dump(2) + "\n");
}

}  // namespace fockbound

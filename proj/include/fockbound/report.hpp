#pragma once

#include <string>
#include <vector>

#include "fockbound/rational.hpp"

namespace fockbound {

// One checked identity or inequality instance. The orientation is always
// lhs <= rhs; slack = rhs - lhs, and the record passes iff slack >= 0.
// Exact equality claims report the (nonnegative) deviation as lhs with
// rhs = 0.
struct VerificationRecord {
  std::string claim;
  std::string instance;
  Rational lhs;
  Rational rhs;
  bool pass = false;

  Rational slack() const { return rhs - lhs; }
};

VerificationRecord make_record(std::string_view claim, std::string instance,
                               Rational lhs, Rational rhs);

// Accumulates records and writes the report files: JSON lines (one record
// per line), a summary JSON with per-claim slack histograms, and a derived
// CSV. Output is deterministic: records are sorted by (claim, instance)
// and all exact values are serialized as rational strings. Files are
// written atomically (temp file + rename).
class ReportSink {
 public:
  void add(VerificationRecord r);
  void merge(std::vector<VerificationRecord> rs);

  const std::vector<VerificationRecord>& records() const { return records_; }
  std::size_t violation_count() const;

  void write(const std::string& out_dir, const std::string& suite) const;

 private:
  std::vector<VerificationRecord> sorted() const;
  std::vector<VerificationRecord> records_;
};

}  // namespace fockbound

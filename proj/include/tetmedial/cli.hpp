#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "tetmedial/geometry.hpp"
#include "tetmedial/oracle.hpp"
#include "tetmedial/types.hpp"

namespace tetmedial::cli {

/// Malformed input stream; carries the offending line or record position.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json };

/// One parsed batch entry. Lengths are raw parsed values; positivity is
/// checked per record during report computation, not at parse time.
struct InputRecord {
  std::string id;  // defaults to the 1-based record index
  SixEdgeLengths lengths;
};

/// Everything the `compute` subcommand reports for one record. Numeric
/// fields are meaningful only when has_values is true (status Realizable or
/// Degenerate and no per-record error).
struct ReportRecord {
  std::string id;
  SixEdgeLengths lengths;
  Status status = Status::NotRealizable;
  bool degenerate = false;
  bool has_values = false;
  double volume = 0.0;
  std::array<double, 4> face_areas{};  // kFaceKeys order
  MedialAreas medial_areas;
  MedialAreas cosines;
  std::string error;  // empty when none
};

enum class PairSelection { All, DE, AC, BF };

/// Reads the whole stream as CSV (mandatory header `a,b,c,d,e,f`, optional
/// leading `id` column) or as a JSON array of {"id", "edges"} objects.
/// Throws ParseError on malformed input.
std::vector<InputRecord> parse_records(std::istream& in, Format format);

/// Full mensuration report for one record. Never throws: per-record
/// failures land in the error field. The tolerance drives the internal
/// sine-cosine consistency self-check.
ReportRecord compute_report(const InputRecord& record, double tolerance = tol::kCompareRel);

nlohmann::ordered_json report_to_json(const ReportRecord& record,
                                      PairSelection selection = PairSelection::All);

nlohmann::ordered_json summary_to_json(const oracle::SweepSummary& summary);

/// Entry point behind the binary; args exclude the program name. Streams
/// stand in for stdin/stdout/stderr so the whole surface is testable
/// in-process. Exit codes: 0 success, 1 usage or parse failure,
/// 2 unrealizable record under --strict, 3 selftest failure.
int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tetmedial::cli

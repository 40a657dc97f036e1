#include "tetmedial/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include "CLI11.hpp"

namespace tetmedial::cli {

namespace {

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t");
  if (begin == std::string_view::npos) return "";
  const auto end = s.find_last_not_of(" \t");
  return std::string(s.substr(begin, end - begin + 1));
}

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

double parse_real(const std::string& token, int line_no) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || token.empty()) {
    throw ParseError("line " + std::to_string(line_no) + ": '" + token +
                     "' is not a decimal real");
  }
  return value;
}

std::vector<InputRecord> parse_csv(std::istream& in) {
  std::vector<InputRecord> records;
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  bool has_id_column = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;

    const auto fields = split_fields(line);
    if (!header_seen) {
      const std::vector<std::string> plain = {"a", "b", "c", "d", "e", "f"};
      std::vector<std::string> with_id = {"id"};
      with_id.insert(with_id.end(), plain.begin(), plain.end());
      if (fields == plain) {
        has_id_column = false;
      } else if (fields == with_id) {
        has_id_column = true;
      } else {
        throw ParseError("line " + std::to_string(line_no) +
                         ": header must be 'a,b,c,d,e,f' or 'id,a,b,c,d,e,f'");
      }
      header_seen = true;
      continue;
    }

    const std::size_t expected = has_id_column ? 7 : 6;
    if (fields.size() != expected) {
      throw ParseError("line " + std::to_string(line_no) + " (record " +
                       std::to_string(records.size() + 1) + "): expected " +
                       std::to_string(expected) + " fields, got " +
                       std::to_string(fields.size()));
    }

    InputRecord record;
    std::size_t offset = 0;
    if (has_id_column) {
      record.id = fields[0];
      offset = 1;
    }
    if (record.id.empty()) record.id = std::to_string(records.size() + 1);

    std::array<double, 6> values{};
    for (int i = 0; i < 6; ++i) values[i] = parse_real(fields[offset + i], line_no);
    record.lengths = {values[0], values[1], values[2], values[3], values[4], values[5]};
    records.push_back(std::move(record));
  }

  if (!header_seen) {
    throw ParseError("empty input: missing CSV header 'a,b,c,d,e,f'");
  }
  return records;
}

std::vector<InputRecord> parse_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("JSON parse failure: ") + e.what());
  }
  if (!doc.is_array()) {
    throw ParseError("JSON input must be an array of records");
  }

  std::vector<InputRecord> records;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& entry = doc[i];
    const std::string where = "record " + std::to_string(i + 1);
    if (!entry.is_object()) throw ParseError(where + ": expected an object");
    if (!entry.contains("edges") || !entry["edges"].is_array() || entry["edges"].size() != 6) {
      throw ParseError(where + ": 'edges' must be an array of 6 numbers");
    }
    InputRecord record;
    std::array<double, 6> values{};
    for (int k = 0; k < 6; ++k) {
      const auto& v = entry["edges"][k];
      if (!v.is_number()) throw ParseError(where + ": 'edges' must be an array of 6 numbers");
      values[k] = v.get<double>();
    }
    record.lengths = {values[0], values[1], values[2], values[3], values[4], values[5]};
    if (entry.contains("id")) {
      if (!entry["id"].is_string()) throw ParseError(where + ": 'id' must be a string");
      record.id = entry["id"].get<std::string>();
    }
    if (record.id.empty()) record.id = std::to_string(i + 1);
    records.push_back(std::move(record));
  }
  return records;
}

nlohmann::json edges_json(const SixEdgeLengths& lengths) {
  return nlohmann::json::array(
      {lengths.a, lengths.b, lengths.c, lengths.d, lengths.e, lengths.f});
}

std::string face_failure_message(const RealizabilityReport& report) {
  std::string names;
  int failing = 0;
  for (int i = 0; i < 4; ++i) {
    if (!report.face_ok[i]) {
      if (!names.empty()) names += ", ";
      names += kFaceKeys[i];
      ++failing;
    }
  }
  return (failing > 1 ? "faces " + names + " violate" : "face " + names + " violates") +
         std::string(" the triangle inequality");
}

bool selection_includes(PairSelection selection, OppositePair pair) {
  switch (selection) {
    case PairSelection::All: return true;
    case PairSelection::DE: return pair == OppositePair::DE;
    case PairSelection::AC: return pair == OppositePair::AC;
    case PairSelection::BF: return pair == OppositePair::BF;
  }
  return false;
}

nlohmann::ordered_json pair_map(const MedialAreas& values, PairSelection selection) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (OppositePair pair : kAllPairs) {
    if (selection_includes(selection, pair)) obj[to_string(pair)] = values[pair];
  }
  return obj;
}

}  // namespace

std::vector<InputRecord> parse_records(std::istream& in, Format format) {
  return format == Format::Csv ? parse_csv(in) : parse_json(in);
}

ReportRecord compute_report(const InputRecord& record, double tolerance) {
  ReportRecord report;
  report.id = record.id;
  report.lengths = record.lengths;

  RealizabilityReport validity;
  try {
    validity = validate_edge_lengths(record.lengths);
  } catch (const NonPositiveLength& e) {
    report.status = Status::NotRealizable;
    report.error = e.what();
    return report;
  }

  report.status = validity.status;
  if (validity.status == Status::NotRealizable) {
    if (!validity.all_faces_ok()) {
      report.error = face_failure_message(validity);
    } else {
      report.error = "Cayley-Menger determinant is negative; lengths are not realizable";
    }
    return report;
  }

  try {
    report.degenerate = validity.status == Status::Degenerate;
    report.volume = validity.volume;
    report.face_areas = face_areas(record.lengths);
    report.medial_areas = medial_area_all(record.lengths);
    report.cosines = {opposite_edge_cosine(record.lengths, OppositePair::DE),
                      opposite_edge_cosine(record.lengths, OppositePair::AC),
                      opposite_edge_cosine(record.lengths, OppositePair::BF)};
    report.has_values = true;
  } catch (const GeometryError& e) {
    report.error = e.what();
    return report;
  }

  // Sine-cosine consistency self-check, scaled by the pair product (the
  // natural unit of each comparison); relaxed for flat inputs.
  const double check_tol =
      report.degenerate ? std::max(tolerance, tol::kCompareRelDegenerate) : tolerance;
  for (OppositePair pair : kAllPairs) {
    const auto terms = detail::pair_terms(record.lengths, pair);
    const double cosine = report.cosines[pair];
    const double from_cosine =
        0.25 * terms.product * std::sqrt(std::max(1.0 - cosine * cosine, 0.0));
    if (std::abs(report.medial_areas[pair] - from_cosine) >
        check_tol * 0.25 * terms.product) {
      report.error = "internal consistency check failed for pair " +
                     std::string(to_string(pair));
      break;
    }
  }
  return report;
}

nlohmann::ordered_json report_to_json(const ReportRecord& record, PairSelection selection) {
  nlohmann::ordered_json obj;
  obj["id"] = record.id;
  obj["edges"] = edges_json(record.lengths);
  obj["status"] = to_string(record.status);
  if (record.has_values) {
    obj["degenerate"] = record.degenerate;
    obj["volume"] = record.volume;
    nlohmann::ordered_json faces = nlohmann::ordered_json::object();
    for (int i = 0; i < 4; ++i) faces[kFaceKeys[i]] = record.face_areas[i];
    obj["face_areas"] = faces;
    obj["medial_areas"] = pair_map(record.medial_areas, selection);
    obj["cosines"] = pair_map(record.cosines, selection);
  }
  if (!record.error.empty()) obj["error"] = record.error;
  return obj;
}

nlohmann::ordered_json summary_to_json(const oracle::SweepSummary& summary) {
  nlohmann::ordered_json obj;
  obj["seed"] = summary.seed;
  obj["count"] = summary.count;
  obj["comparisons"] = summary.comparisons;
  obj["bounds"] = summary.bounds;
  obj["tolerance"] = summary.tolerance;
  obj["max_rel_error"] = summary.max_rel_error;
  obj["failures"] = nlohmann::ordered_json::array();
  for (const auto& failure : summary.failures) {
    nlohmann::ordered_json entry;
    entry["edges"] = edges_json(failure.lengths);
    entry["pair"] = to_string(failure.pair);
    entry["formula_area"] = failure.formula_area;
    entry["oracle_area"] = failure.oracle_area;
    entry["rel_error"] = failure.rel_error;
    obj["failures"].push_back(entry);
  }
  return obj;
}

namespace {

struct IoOptions {
  std::string input = "-";
  std::string output = "-";
  std::string format = "csv";
  std::string pair = "all";
  double tolerance = tol::kCompareRel;
  bool strict = false;
};

void add_io_options(CLI::App* cmd, IoOptions& opts, bool with_pair) {
  cmd->add_option("--input,-i", opts.input, "input path or - for stdin");
  cmd->add_option("--format,-f", opts.format, "input format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output,-o", opts.output, "output path or - for stdout");
  if (with_pair) {
    cmd->add_option("--pair", opts.pair, "restrict medial output to one opposite pair")
        ->check(CLI::IsMember({"de", "ac", "bf", "all"}));
  }
  cmd->add_option("--tolerance", opts.tolerance, "relative tolerance for consistency checks");
  cmd->add_flag("--strict", opts.strict, "exit 2 when any record is unrealizable");
}

PairSelection selection_from(const std::string& pair) {
  if (pair == "de") return PairSelection::DE;
  if (pair == "ac") return PairSelection::AC;
  if (pair == "bf") return PairSelection::BF;
  return PairSelection::All;
}

nlohmann::ordered_json validation_to_json(const InputRecord& record) {
  nlohmann::ordered_json obj;
  obj["id"] = record.id;
  obj["edges"] = edges_json(record.lengths);
  try {
    const RealizabilityReport report = validate_edge_lengths(record.lengths);
    obj["status"] = to_string(report.status);
    nlohmann::ordered_json faces = nlohmann::ordered_json::object();
    for (int i = 0; i < 4; ++i) faces[kFaceKeys[i]] = report.face_ok[i];
    obj["faces_ok"] = faces;
    obj["cm"] = report.cm_value;
    if (std::isfinite(report.volume)) obj["volume"] = report.volume;
    obj["degenerate"] = report.status == Status::Degenerate;
  } catch (const NonPositiveLength& e) {
    obj["status"] = to_string(Status::NotRealizable);
    obj["error"] = e.what();
  }
  return obj;
}

int process_batch(const IoOptions& opts, bool full_report, std::istream& in,
                  std::ostream& out, std::ostream& err) {
  std::ifstream file_in;
  std::istream* source = &in;
  if (opts.input != "-") {
    file_in.open(opts.input);
    if (!file_in) {
      err << "tetmedial: cannot open input '" << opts.input << "'\n";
      return 1;
    }
    source = &file_in;
  }

  std::ofstream file_out;
  std::ostream* sink = &out;
  if (opts.output != "-") {
    file_out.open(opts.output);
    if (!file_out) {
      err << "tetmedial: cannot open output '" << opts.output << "'\n";
      return 1;
    }
    sink = &file_out;
  }

  std::vector<InputRecord> records;
  try {
    records = parse_records(*source, opts.format == "csv" ? Format::Csv : Format::Json);
  } catch (const ParseError& e) {
    err << "tetmedial: " << e.what() << "\n";
    return 1;
  }

  const PairSelection selection = selection_from(opts.pair);
  bool any_unrealizable = false;
  for (const auto& record : records) {
    nlohmann::ordered_json line;
    if (full_report) {
      const ReportRecord report = compute_report(record, opts.tolerance);
      any_unrealizable |= report.status == Status::NotRealizable;
      line = report_to_json(report, selection);
    } else {
      line = validation_to_json(record);
      any_unrealizable |= line["status"].get<std::string>() == "NotRealizable";
    }
    *sink << line.dump() << "\n";
  }
  sink->flush();
  return opts.strict && any_unrealizable ? 2 : 0;
}

}  // namespace

int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"medial parallelogram areas and mensuration for a tetrahedron"};
  app.require_subcommand(1);

  IoOptions compute_opts;
  CLI::App* compute = app.add_subcommand(
      "compute", "full mensuration report per record (JSON lines)");
  add_io_options(compute, compute_opts, /*with_pair=*/true);

  IoOptions validate_opts;
  CLI::App* validate = app.add_subcommand(
      "validate", "realizability report per record (JSON lines)");
  add_io_options(validate, validate_opts, /*with_pair=*/false);

  std::uint64_t seed = 42;
  int count = 10000;
  double selftest_tol = tol::kCompareRel;
  CLI::App* selftest = app.add_subcommand(
      "selftest", "random sweep comparing the closed form against the coordinate oracle");
  selftest->add_option("--seed", seed, "sweep seed");
  selftest->add_option("--count", count, "number of random tetrahedra")
      ->check(CLI::PositiveNumber);
  selftest->add_option("--tolerance", selftest_tol, "relative pass tolerance");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("tetmedial");
  for (auto& a : args) argv_storage.push_back(std::move(a));
  std::vector<const char*> argv;
  argv.reserve(argv_storage.size());
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    // Prints (sub)command help for --help, the diagnostic otherwise.
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  if (compute->parsed()) return process_batch(compute_opts, true, in, out, err);
  if (validate->parsed()) return process_batch(validate_opts, false, in, out, err);

  // selftest
  const oracle::SweepSummary summary = oracle::run_sweep(seed, count, 1.0, selftest_tol);
  out << summary_to_json(summary).dump() << "\n";
  out.flush();
  return summary.failures.empty() ? 0 : 3;
}

}  // namespace tetmedial::cli

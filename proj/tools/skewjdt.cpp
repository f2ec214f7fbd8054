// skewjdt: command-line front end for the tableau bijections and the
// exhaustive verifiers. Exit status: 0 success, 1 verification failure,
// 2 usage or input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "skewjdt/bijections.hpp"
#include "skewjdt/errors.hpp"
#include "skewjdt/io.hpp"
#include "skewjdt/report.hpp"
#include "skewjdt/verify.hpp"

namespace {

using namespace skewjdt;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kInputError = 2;

enum class Format { kText, kStructured };

struct Options {
  std::string in, in_r, in_t;
  std::string out, out_r, out_t;
  std::string shape;
  std::string format = "text";
  std::int64_t a = 0;
  int max_degree = 20;
  Entry max_norm = 8;
  Entry norm = 0;
  bool trace = false;
  bool strict = false;
  bool skip_step_invariants = false;
};

std::string read_source(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_sink(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write " + path);
  out << data;
}

bool looks_structured(const std::string& text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

Tabloid as_tabloid(const TableauDocument& doc, const char* what) {
  if (auto* t = std::get_if<Tabloid>(&doc)) return *t;
  throw ParseError(1, 0, std::string(what) + " must be a complete tabloid");
}

Tabloid read_tabloid(const std::string& path) {
  const std::string text = read_source(path);
  return as_tabloid(looks_structured(text) ? parse_structured(text) : parse_tableau(text), "input");
}

TabloidPair read_pair(const Options& o) {
  if (!o.in_r.empty() || !o.in_t.empty()) {
    if (o.in_r.empty() || o.in_t.empty()) throw PreconditionError("--in-r and --in-t go together");
    return {read_tabloid(o.in_r), read_tabloid(o.in_t)};
  }
  const std::string text = read_source(o.in);
  if (looks_structured(text)) {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(1, e.byte, e.what());
    }
    if (!j.contains("R") || !j.contains("T")) throw ParseError(1, 0, "expected keys \"R\" and \"T\"");
    return {as_tabloid(tableau_from_json(j["R"]), "R"), as_tabloid(tableau_from_json(j["T"]), "T")};
  }
  auto docs = parse_documents(text);
  if (docs.size() < 2) throw ParseError(1, 0, "expected two documents: R then T");
  return {as_tabloid(docs[0], "R"), as_tabloid(docs[1], "T")};
}

std::string render(const Tabloid& t, Format f) {
  return f == Format::kText ? serialize_tableau(t) : to_json(t).dump(2) + "\n";
}

/// Writes labelled results. Each label with a destination file goes there;
/// the rest (and any traces) go to standard output.
void emit(const std::vector<std::pair<std::string, const Tabloid*>>& results,
          const std::vector<std::string>& destinations,
          const std::vector<const BijectionTrace*>& traces, Format f) {
  if (f == Format::kStructured) {
    json stdout_doc = json::object();
    for (std::size_t k = 0; k < results.size(); ++k) {
      if (!destinations[k].empty()) {
        write_sink(destinations[k], render(*results[k].second, f));
      } else {
        stdout_doc[results[k].first] = to_json(*results[k].second);
      }
    }
    if (!traces.empty()) {
      json list = json::array();
      for (const auto* t : traces) list.push_back(trace_to_json(*t));
      stdout_doc["trace"] = list;
    }
    if (!stdout_doc.empty()) std::cout << stdout_doc.dump(2) << "\n";
    return;
  }
  std::vector<std::string> blocks;
  for (std::size_t k = 0; k < results.size(); ++k) {
    if (!destinations[k].empty()) {
      write_sink(destinations[k], render(*results[k].second, f));
    } else {
      blocks.push_back(serialize_tableau(*results[k].second));
    }
  }
  for (const auto* t : traces) blocks.push_back(format_trace(*t));
  for (std::size_t k = 0; k < blocks.size(); ++k) std::cout << (k ? "\n" : "") << blocks[k];
}

Format parse_format(const std::string& s) {
  if (s == "text") return Format::kText;
  if (s == "structured" || s == "json") return Format::kStructured;
  throw PreconditionError("unknown format '" + s + "'");
}

TraceOptions trace_opts(const Options& o) { return TraceOptions{o.trace}; }

int run_evacuate(const Options& o, bool inverse) {
  const Format f = parse_format(o.format);
  const Tabloid input = read_tabloid(o.in);
  auto result = inverse ? unevacuate(input, trace_opts(o)) : evacuate(input, trace_opts(o));
  std::vector<const BijectionTrace*> traces;
  if (o.trace) traces.push_back(&result.trace);
  emit({{inverse ? "P" : "Q", &result.value}}, {o.out}, traces, f);
  return kOk;
}

int run_split(const Options& o) {
  const Format f = parse_format(o.format);
  const Tabloid q = read_tabloid(o.in);
  auto result = split(q, o.a, trace_opts(o));
  std::vector<const BijectionTrace*> traces;
  if (o.trace) traces.push_back(&result.trace);
  emit({{"R", &result.value.r}, {"T", &result.value.t}}, {o.out_r, o.out_t}, traces, f);
  return kOk;
}

int run_unsplit(const Options& o) {
  const Format f = parse_format(o.format);
  auto result = unsplit(read_pair(o), o.a, trace_opts(o), o.strict);
  std::vector<const BijectionTrace*> traces;
  if (o.trace) traces.push_back(&result.trace);
  emit({{"Q", &result.value}}, {o.out}, traces, f);
  return kOk;
}

int run_map(const Options& o) {
  const Format f = parse_format(o.format);
  const Tabloid p = read_tabloid(o.in);
  require_valid_a(p.shape(), o.a);
  auto q = evacuate(p, trace_opts(o));
  auto rt = split(q.value, o.a, trace_opts(o));
  std::vector<const BijectionTrace*> traces;
  if (o.trace) traces = {&q.trace, &rt.trace};
  emit({{"R", &rt.value.r}, {"T", &rt.value.t}}, {o.out_r, o.out_t}, traces, f);
  return kOk;
}

int run_unmap(const Options& o) {
  const Format f = parse_format(o.format);
  auto q = unsplit(read_pair(o), o.a, trace_opts(o), o.strict);
  auto p = unevacuate(q.value, trace_opts(o));
  std::vector<const BijectionTrace*> traces;
  if (o.trace) traces = {&q.trace, &p.trace};
  emit({{"P", &p.value}}, {o.out}, traces, f);
  return kOk;
}

int run_verify(const Options& o) {
  const Format f = parse_format(o.format);
  auto report = verify_identity(parse_shape(o.shape), o.a, o.max_degree);
  write_sink(o.out, f == Format::kText ? format_identity_report(report)
                                       : identity_report_to_json(report).dump(2) + "\n");
  return report.ok() ? kOk : kVerificationFailed;
}

int run_check(const Options& o) {
  const Format f = parse_format(o.format);
  BijectionCheckOptions opts;
  opts.step_invariants = !o.skip_step_invariants;
  auto report = verify_bijection_exhaustive(parse_shape(o.shape), o.a, o.max_norm, opts);
  write_sink(o.out, f == Format::kText ? format_bijection_report(report)
                                       : bijection_report_to_json(report).dump(2) + "\n");
  return report.ok() ? kOk : kVerificationFailed;
}

int run_matchup(const Options& o) {
  const Format f = parse_format(o.format);
  const SkewShape shape = parse_shape(o.shape);
  auto rows = matchup(shape, o.a, o.norm);
  write_sink(o.out, f == Format::kText ? format_matchup(shape, o.a, o.norm, rows)
                                       : matchup_to_json(shape, o.a, o.norm, rows).dump(2) + "\n");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evacuation and modified jeu de taquin bijections on skew tableaux"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "text | structured")->capture_default_str();
  };
  auto add_a = [&](CLI::App* cmd) {
    cmd->add_option("--a", o.a, "parameter a with a + c(cell) > 0 on every cell")->required();
  };
  auto add_trace = [&](CLI::App* cmd) {
    cmd->add_flag("--trace", o.trace, "emit the step table after the result");
  };

  auto* evac = app.add_subcommand("evacuate", "SSYT -> reverse SSYT");
  auto* unevac = app.add_subcommand("unevacuate", "reverse SSYT -> SSYT");
  for (auto* cmd : {evac, unevac}) {
    cmd->add_option("--in", o.in, "input tableau (default: stdin)");
    cmd->add_option("--out", o.out, "output tableau (default: stdout)");
    add_trace(cmd);
    add_format(cmd);
  }

  auto* split_cmd = app.add_subcommand("split", "reverse SSYT Q -> (R, T)");
  auto* map_cmd = app.add_subcommand("map", "SSYT P -> (R, T)");
  for (auto* cmd : {split_cmd, map_cmd}) {
    cmd->add_option("--in", o.in, "input tableau (default: stdin)");
    cmd->add_option("--out-r", o.out_r, "file for R (default: stdout)");
    cmd->add_option("--out-t", o.out_t, "file for T (default: stdout)");
    add_a(cmd);
    add_trace(cmd);
    add_format(cmd);
  }

  auto* unsplit_cmd = app.add_subcommand("unsplit", "(R, T) -> reverse SSYT Q");
  auto* unmap_cmd = app.add_subcommand("unmap", "(R, T) -> SSYT P");
  for (auto* cmd : {unsplit_cmd, unmap_cmd}) {
    cmd->add_option("--in", o.in, "stream holding R then T (default: stdin)");
    cmd->add_option("--in-r", o.in_r, "file holding R");
    cmd->add_option("--in-t", o.in_t, "file holding T");
    cmd->add_option("--out", o.out, "output tableau (default: stdout)");
    cmd->add_flag("--strict", o.strict, "re-split the result and compare with the input");
    add_a(cmd);
    add_trace(cmd);
    add_format(cmd);
  }

  auto* verify_cmd = app.add_subcommand("verify", "check the generating-function identity");
  verify_cmd->add_option("--shape", o.shape, "skew shape, e.g. \"3,2/1\"")->required();
  add_a(verify_cmd);
  verify_cmd->add_option("--max-degree", o.max_degree, "truncation degree")->capture_default_str();
  verify_cmd->add_option("--out", o.out, "report file (default: stdout)");
  add_format(verify_cmd);

  auto* check_cmd = app.add_subcommand("check-bijection", "exhaustive bijection check");
  check_cmd->add_option("--shape", o.shape, "skew shape, e.g. \"3,2/1\"")->required();
  add_a(check_cmd);
  check_cmd->add_option("--max-norm", o.max_norm, "norm budget")->capture_default_str();
  check_cmd->add_flag("--skip-step-invariants", o.skip_step_invariants,
                      "only check end-to-end properties");
  check_cmd->add_option("--out", o.out, "report file (default: stdout)");
  add_format(check_cmd);

  auto* matchup_cmd = app.add_subcommand("matchup", "table of P, Q, R, T for one norm");
  matchup_cmd->add_option("--shape", o.shape, "skew shape, e.g. \"3,2/1\"")->required();
  add_a(matchup_cmd);
  matchup_cmd->add_option("--norm", o.norm, "norm of P")->required();
  matchup_cmd->add_option("--out", o.out, "table file (default: stdout)");
  add_format(matchup_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (evac->parsed()) return run_evacuate(o, false);
    if (unevac->parsed()) return run_evacuate(o, true);
    if (split_cmd->parsed()) return run_split(o);
    if (unsplit_cmd->parsed()) return run_unsplit(o);
    if (map_cmd->parsed()) return run_map(o);
    if (unmap_cmd->parsed()) return run_unmap(o);
    if (verify_cmd->parsed()) return run_verify(o);
    if (check_cmd->parsed()) return run_check(o);
    if (matchup_cmd->parsed()) return run_matchup(o);
  } catch (const skewjdt::Error& e) {
    std::cerr << "skewjdt: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

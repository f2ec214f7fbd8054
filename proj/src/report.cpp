#include "skewjdt/report.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "skewjdt/io.hpp"

namespace skewjdt {

namespace {

std::string indent_rows(const PartialFilling& p) {
  std::string body = serialize_tableau(p);
  body = body.substr(body.find('\n') + 1);  // drop the shape header
  std::string out;
  std::istringstream in(body);
  for (std::string line; std::getline(in, line);) out += "  " + line + "\n";
  return out;
}

void append_snapshots(std::string& out, const std::vector<TraceSnapshot>& snaps) {
  for (const auto& s : snaps) out += s.label + ":\n" + indent_rows(s.filling);
}

nlohmann::json cell_json(Cell c) { return nlohmann::json::array({c.row, c.col}); }

nlohmann::json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string table(const std::vector<std::vector<std::string>>& rows, bool right_align) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += right_align ? "  " : " | ";
      const bool last = c + 1 == row.size();
      if (right_align) {
        line += pad_left(row[c], width[c]);
      } else {
        line += last ? row[c] : pad_right(row[c], width[c]);
      }
    }
    out += line + "\n";
  }
  return out;
}

std::string header(const SkewShape& shape, std::int64_t a) {
  const std::string s = format_shape(shape);
  return "shape " + (s.empty() ? std::string("(empty)") : s) + ", a = " + std::to_string(a);
}

}  // namespace

std::string format_trace(const BijectionTrace& trace) {
  std::string out = "trace: " + trace.algorithm + "\n";
  if (!trace.initial.empty()) {
    out += "initial\n";
    append_snapshots(out, trace.initial);
  }
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const TraceStep& step = trace.steps[k];
    out += "step " + std::to_string(k + 1) + ": select " + to_string(step.selected) +
           " e=" + std::to_string(step.e) + " path " + to_string(step.path) + " stop " +
           to_string(step.path.stop()) + "\n";
    append_snapshots(out, step.snapshots);
  }
  return out;
}

nlohmann::json trace_to_json(const BijectionTrace& trace) {
  auto snaps = [](const std::vector<TraceSnapshot>& v) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& s : v) j[s.label] = to_json(s.filling);
    return j;
  };
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& step : trace.steps) {
    nlohmann::json path = nlohmann::json::array();
    for (Cell c : step.path.cells) path.push_back(cell_json(c));
    steps.push_back({{"selected", cell_json(step.selected)},
                     {"e", step.e},
                     {"path", path},
                     {"stop", cell_json(step.path.stop())},
                     {"snapshots", snaps(step.snapshots)}});
  }
  return {{"algorithm", trace.algorithm}, {"initial", snaps(trace.initial)}, {"steps", steps}};
}

std::string format_identity_report(const IdentityReport& r) {
  std::string out = "identity: " + header(r.shape, r.a) + ", degree <= " +
                    std::to_string(r.max_degree) + "\n";
  out += "bounded side: " + to_string(r.bounded) + "\n";
  std::vector<std::vector<std::string>> rows{
      {"degree", "ssyt", "bounded*hook", "bounded", "ssyt*inverse"}};
  for (int d = 0; d <= r.max_degree; ++d) {
    rows.push_back({std::to_string(d), r.ssyt[d].str(), r.bounded_times_hook[d].str(),
                    r.bounded[d].str(), r.ssyt_times_inverse[d].str()});
  }
  out += table(rows, true);
  if (r.ok()) {
    out += "result: holds through q^" + std::to_string(r.max_degree) + "\n";
  } else {
    out += "result: FAILS, first discrepancy at q^" + std::to_string(*r.first_discrepancy) + "\n";
  }
  return out;
}

nlohmann::json identity_report_to_json(const IdentityReport& r) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (int d = 0; d <= r.max_degree; ++d) {
    coeffs.push_back({{"degree", d},
                      {"ssyt", big_json(r.ssyt[d])},
                      {"bounded_times_hook", big_json(r.bounded_times_hook[d])},
                      {"bounded", big_json(r.bounded[d])},
                      {"ssyt_times_inverse", big_json(r.ssyt_times_inverse[d])}});
  }
  return {{"report", "identity"},
          {"shape", format_shape(r.shape)},
          {"a", r.a},
          {"max_degree", r.max_degree},
          {"ok", r.ok()},
          {"first_discrepancy",
           r.first_discrepancy ? nlohmann::json(*r.first_discrepancy) : nlohmann::json(nullptr)},
          {"coefficients", coeffs}};
}

std::string format_bijection_report(const BijectionReport& r) {
  std::string out = "bijection check: " + header(r.shape, r.a) + ", norm <= " +
                    std::to_string(r.max_norm) + "\n";
  out += "instances: " + std::to_string(r.instances) + "\n";
  std::vector<std::vector<std::string>> rows{{"norm", "ssyt", "reverse", "pairs", "image"}};
  for (std::size_t n = 0; n < r.ssyt_per_norm.size(); ++n) {
    rows.push_back({std::to_string(n), std::to_string(r.ssyt_per_norm[n]),
                    std::to_string(r.reverse_per_norm[n]), std::to_string(r.pairs_per_norm[n]),
                    std::to_string(r.image_per_norm[n])});
  }
  out += table(rows, true);
  out += "failures: " + std::to_string(r.failure_count) + "\n";
  for (const auto& f : r.failures) out += "  " + f + "\n";
  out += std::string("result: ") + (r.ok() ? "OK" : "FAILED") + "\n";
  return out;
}

nlohmann::json bijection_report_to_json(const BijectionReport& r) {
  nlohmann::json per_norm = nlohmann::json::array();
  for (std::size_t n = 0; n < r.ssyt_per_norm.size(); ++n) {
    per_norm.push_back({{"norm", n},
                        {"ssyt", r.ssyt_per_norm[n]},
                        {"reverse", r.reverse_per_norm[n]},
                        {"pairs", r.pairs_per_norm[n]},
                        {"image", r.image_per_norm[n]}});
  }
  return {{"report", "bijection"},
          {"shape", format_shape(r.shape)},
          {"a", r.a},
          {"max_norm", r.max_norm},
          {"ok", r.ok()},
          {"instances", r.instances},
          {"failure_count", r.failure_count},
          {"failures", r.failures},
          {"per_norm", per_norm}};
}

std::string format_matchup(const SkewShape& shape, std::int64_t a, Entry norm_value,
                           const std::vector<MatchupRow>& rows) {
  std::string out = "matchup: " + header(shape, a) + ", norm " + std::to_string(norm_value) +
                    ", " + std::to_string(rows.size()) + " tableaux\n";
  std::vector<std::vector<std::string>> cells{{"P", "Q", "R", "T"}};
  for (const auto& row : rows) {
    cells.push_back({compact(row.p), compact(row.q), compact(row.r), compact(row.t)});
  }
  out += table(cells, false);
  return out;
}

nlohmann::json matchup_to_json(const SkewShape& shape, std::int64_t a, Entry norm_value,
                               const std::vector<MatchupRow>& rows) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& row : rows) {
    list.push_back(
        {{"P", to_json(row.p)}, {"Q", to_json(row.q)}, {"R", to_json(row.r)}, {"T", to_json(row.t)}});
  }
  return {{"report", "matchup"},
          {"shape", format_shape(shape)},
          {"a", a},
          {"norm", norm_value},
          {"rows", list}};
}

}  // namespace skewjdt

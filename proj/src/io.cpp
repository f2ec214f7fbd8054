#include "skewjdt/io.hpp"

#include <charconv>
#include <memory>

#include "skewjdt/errors.hpp"

namespace skewjdt {

namespace {

std::string token(const std::optional<Entry>& value) {
  return value ? std::to_string(*value) : std::string("-");
}

std::string render_rows(const PartialFilling& p, const std::string& row_sep) {
  const SkewShape& shape = p.shape();
  std::string out;
  for (int i = 1; i <= shape.rows(); ++i) {
    if (i > 1) out += row_sep;
    for (int j = 1; j < shape.end_col(i); ++j) {
      if (j > 1) out += ' ';
      out += j < shape.first_col(i) ? std::string(".") : token(p.get({i, j}));
    }
  }
  return out;
}

struct Line {
  std::size_t number;  // 1-based within the whole input
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({number++, line});
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

bool blank(std::string_view s) {
  return s.find_first_not_of(" \t") == std::string_view::npos;
}

bool comment(std::string_view s) {
  auto pos = s.find_first_not_of(" \t");
  return pos != std::string_view::npos && s[pos] == '#';
}

struct Token {
  std::size_t column;  // 1-based
  std::string_view text;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    tokens.push_back({start + 1, line.substr(start, pos - start)});
  }
  return tokens;
}

TableauDocument parse_lines(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(1, 0, "empty document");
  const Line& header = lines.front();
  constexpr std::string_view kKey = "shape:";
  auto start = header.text.find_first_not_of(" \t");
  if (start == std::string_view::npos || header.text.substr(start, kKey.size()) != kKey) {
    throw ParseError(header.number, 1, "expected header 'shape: <outer>/<inner>'");
  }
  SkewShape shape;
  try {
    shape = parse_shape(header.text.substr(start + kKey.size()));
  } catch (const ParseError& e) {
    throw ParseError(header.number, e.column() ? start + kKey.size() + e.column() : 0,
                     std::string("bad shape: ") + e.what());
  }
  if (lines.size() - 1 != static_cast<std::size_t>(shape.rows())) {
    throw ParseError(lines.size() > 1 ? lines.back().number : header.number, 0,
                     "shape " + format_shape(shape) + " needs " + std::to_string(shape.rows()) +
                         " rows, found " + std::to_string(lines.size() - 1));
  }
  auto shared = std::make_shared<const SkewShape>(shape);
  std::vector<std::optional<Entry>> entries;
  entries.reserve(shape.size());
  bool partial = false;
  for (int i = 1; i <= shape.rows(); ++i) {
    const Line& line = lines[i];
    auto tokens = tokenize(line.text);
    const auto width = static_cast<std::size_t>(shape.end_col(i) - 1);
    if (tokens.size() != width) {
      throw ParseError(line.number, 0,
                       "row " + std::to_string(i) + " needs " + std::to_string(width) +
                           " tokens, found " + std::to_string(tokens.size()));
    }
    for (int j = 1; j <= static_cast<int>(width); ++j) {
      const Token& tok = tokens[j - 1];
      if (j < shape.first_col(i)) {
        if (tok.text != ".") {
          throw ParseError(line.number, tok.column, "expected '.' for an inner cell");
        }
        continue;
      }
      if (tok.text == "-") {
        partial = true;
        entries.emplace_back();
        continue;
      }
      if (tok.text == ".") throw ParseError(line.number, tok.column, "unexpected inner cell '.'");
      if (tok.text.front() == '-') {
        throw ParseError(line.number, tok.column, "negative entry " + std::string(tok.text));
      }
      Entry value = 0;
      auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
      if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
        throw ParseError(line.number, tok.column, "bad entry '" + std::string(tok.text) + "'");
      }
      entries.emplace_back(value);
    }
  }
  PartialFilling filling(shared, std::move(entries));
  if (partial) return filling;
  return filling.to_tabloid();
}

std::vector<std::vector<Line>> group_documents(std::string_view text) {
  std::vector<std::vector<Line>> docs;
  std::vector<Line> current;
  for (const Line& line : split_lines(text)) {
    if (comment(line.text)) continue;
    if (blank(line.text)) {
      if (!current.empty()) docs.push_back(std::move(current));
      current.clear();
      continue;
    }
    current.push_back(line);
  }
  if (!current.empty()) docs.push_back(std::move(current));
  return docs;
}

nlohmann::json rows_json(const PartialFilling& p) {
  const SkewShape& shape = p.shape();
  auto rows = nlohmann::json::array();
  for (int i = 1; i <= shape.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (int j = shape.first_col(i); j < shape.end_col(i); ++j) {
      auto v = p.get({i, j});
      row.push_back(v ? nlohmann::json(*v) : nlohmann::json(nullptr));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json document_json(const PartialFilling& p, const char* kind) {
  const SkewShape& shape = p.shape();
  return {{"kind", kind},
          {"lambda", std::vector<int>(shape.outer().parts().begin(), shape.outer().parts().end())},
          {"mu", std::vector<int>(shape.inner().parts().begin(), shape.inner().parts().end())},
          {"rows", rows_json(p)}};
}

}  // namespace

std::string serialize_tableau(const PartialFilling& p) {
  std::string out = "shape:";
  std::string shape = format_shape(p.shape());
  if (!shape.empty()) out += " " + shape;
  out += "\n";
  if (p.shape().rows() > 0) out += render_rows(p, "\n") + "\n";
  return out;
}

std::string serialize_tableau(const Tabloid& t) { return serialize_tableau(PartialFilling(t)); }

std::string serialize_tableau(const TableauDocument& doc) {
  return std::visit([](const auto& x) { return serialize_tableau(x); }, doc);
}

TableauDocument parse_tableau(std::string_view text) {
  auto docs = group_documents(text);
  if (docs.empty()) throw ParseError(1, 0, "no tableau document found");
  if (docs.size() > 1) {
    throw ParseError(docs[1].front().number, 0, "expected a single tableau document");
  }
  return parse_lines(docs.front());
}

Tabloid parse_tabloid(std::string_view text) {
  auto doc = parse_tableau(text);
  if (auto* t = std::get_if<Tabloid>(&doc)) return *t;
  throw ParseError(1, 0, "expected a complete tabloid, found empty cells");
}

std::vector<TableauDocument> parse_documents(std::string_view text) {
  std::vector<TableauDocument> out;
  for (const auto& doc : group_documents(text)) out.push_back(parse_lines(doc));
  return out;
}

nlohmann::json to_json(const Tabloid& t) { return document_json(PartialFilling(t), "tabloid"); }
nlohmann::json to_json(const PartialFilling& p) { return document_json(p, "partial"); }

TableauDocument tableau_from_json(const nlohmann::json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind != "tabloid" && kind != "partial") {
      throw ParseError(1, 0, "'kind' must be \"tabloid\" or \"partial\", found \"" + kind + "\"");
    }
    bool partial = kind == "partial";
    auto lambda = j.at("lambda").get<std::vector<int>>();
    auto mu = j.contains("mu") ? j.at("mu").get<std::vector<int>>() : std::vector<int>{};
    auto shape = std::make_shared<const SkewShape>(Partition(lambda), Partition(mu));
    const auto& rows = j.at("rows");
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(shape->rows())) {
      throw ParseError(1, 0, "'rows' must list " + std::to_string(shape->rows()) + " rows");
    }
    std::vector<std::optional<Entry>> entries;
    for (int i = 1; i <= shape->rows(); ++i) {
      const auto& row = rows[i - 1];
      const auto width = static_cast<std::size_t>(shape->end_col(i) - shape->first_col(i));
      if (!row.is_array() || row.size() != width) {
        throw ParseError(1, 0, "row " + std::to_string(i) + " must hold " +
                                   std::to_string(width) + " entries");
      }
      for (const auto& v : row) {
        if (v.is_null()) {
          if (!partial) throw ParseError(1, 0, "null entry in a tabloid");
          entries.emplace_back();
        } else {
          entries.emplace_back(v.get<Entry>());
        }
      }
    }
    PartialFilling filling(shape, std::move(entries));
    if (partial) return filling;
    return filling.to_tabloid();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(1, 0, e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, 0, e.what());
  }
}

TableauDocument parse_structured(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, e.byte, e.what());
  }
  return tableau_from_json(j);
}

std::string compact(const PartialFilling& p) { return render_rows(p, " / "); }
std::string compact(const Tabloid& t) { return compact(PartialFilling(t)); }

}  // namespace skewjdt

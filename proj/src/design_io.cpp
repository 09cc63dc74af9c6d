#include "designlab/design_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace designlab::io {

namespace {

using nlohmann::json;

std::string at_position(std::size_t line, std::size_t column) {
  if (line == 0) return "";
  return " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")";
}

// 1-based line and column of a byte offset.
std::pair<std::size_t, std::size_t> locate(std::string_view content, std::size_t offset) {
  offset = std::min(offset, content.size());
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (content[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

std::size_t parse_count(const Token& t, std::size_t line_no, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
    throw ParseError("expected a non-negative integer " + std::string(what) + ", got '" + std::string(t.text) + "'",
                     line_no, t.column);
  }
  return value;
}

IncidenceSystem parse_text(std::string_view content) {
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start <= content.size();) {
    const std::size_t end = content.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < content.size()) lines.push_back(content.substr(start));
      break;
    }
    lines.push_back(content.substr(start, end - start));
    start = end + 1;
  }
  if (lines.empty()) throw ParseError("empty input: expected a header line 'v b'", 1, 1);

  const std::vector<Token> header = split_tokens(lines[0]);
  if (header.size() != 2) throw ParseError("header must be exactly 'v b'", 1, 1);
  const std::size_t v = parse_count(header[0], 1, "for v");
  const std::size_t b = parse_count(header[1], 1, "for b");

  if (lines.size() - 1 < b) {
    throw ParseError("expected " + std::to_string(b) + " block lines, found " + std::to_string(lines.size() - 1),
                     lines.size(), 1);
  }
  for (std::size_t extra = b + 1; extra < lines.size(); ++extra) {
    if (!split_tokens(lines[extra]).empty()) {
      throw ParseError("unexpected content after " + std::to_string(b) + " blocks", extra + 1, 1);
    }
  }

  std::vector<Block> blocks;
  blocks.reserve(b);
  for (std::size_t j = 0; j < b; ++j) {
    const std::size_t line_no = j + 2;
    Block block;
    for (const Token& t : split_tokens(lines[j + 1])) {
      const std::size_t x = parse_count(t, line_no, "point index");
      if (x >= v) {
        throw ParseError("point index " + std::to_string(x) + " out of range (v = " + std::to_string(v) + ")", line_no,
                         t.column);
      }
      if (std::find(block.begin(), block.end(), x) != block.end()) {
        throw ParseError("duplicate point " + std::to_string(x) + " in block " + std::to_string(j), line_no, t.column);
      }
      block.push_back(x);
    }
    blocks.push_back(std::move(block));
  }
  return IncidenceSystem(v, std::move(blocks));
}

IncidenceSystem parse_json(std::string_view content) {
  json doc;
  try {
    doc = json::parse(content);
  } catch (const json::parse_error& e) {
    const auto [line, column] = locate(content, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON: " + std::string(e.what()), line, column);
  }
  if (!doc.is_object()) throw ParseError("design must be a JSON object", 0, 0);
  if (!doc.contains("v") || !doc["v"].is_number_unsigned()) {
    throw ParseError("field \"v\" must be a non-negative integer", 0, 0);
  }
  if (!doc.contains("blocks") || !doc["blocks"].is_array()) throw ParseError("field \"blocks\" must be an array", 0, 0);

  const std::size_t v = doc["v"].get<std::size_t>();
  std::vector<Block> blocks;
  const json& raw_blocks = doc["blocks"];
  for (std::size_t j = 0; j < raw_blocks.size(); ++j) {
    const json& raw = raw_blocks[j];
    const std::string where = "blocks[" + std::to_string(j) + "]";
    if (!raw.is_array()) throw ParseError(where + " must be an array", 0, 0);
    Block block;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const std::string item = where + "[" + std::to_string(i) + "]";
      if (!raw[i].is_number_unsigned()) throw ParseError(item + " must be a non-negative integer", 0, 0);
      const std::size_t x = raw[i].get<std::size_t>();
      if (x >= v) {
        throw ParseError(item + ": index " + std::to_string(x) + " out of range (v = " + std::to_string(v) + ")", 0, 0);
      }
      if (std::find(block.begin(), block.end(), x) != block.end()) {
        throw ParseError(item + ": duplicate point " + std::to_string(x), 0, 0);
      }
      block.push_back(x);
    }
    blocks.push_back(std::move(block));
  }
  return IncidenceSystem(v, std::move(blocks));
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(message + at_position(line, column)), line_(line), column_(column) {}

IncidenceSystem parse_design(std::string_view content, DesignFormat format) {
  return format == DesignFormat::json ? parse_json(content) : parse_text(content);
}

DesignFormat infer_format(const std::filesystem::path& path, std::string_view content) {
  const std::string ext = path.extension().string();
  if (ext == ".json") return DesignFormat::json;
  if (ext == ".txt" || ext == ".design") return DesignFormat::text;
  const auto first = content.find_first_not_of(" \t\r\n");
  return first != std::string_view::npos && content[first] == '{' ? DesignFormat::json : DesignFormat::text;
}

DesignFile read_design(const std::filesystem::path& path, std::optional<DesignFormat> format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();

  DesignFile file;
  file.content = buffer.str();
  file.format = format.value_or(infer_format(path, file.content));
  file.system = parse_design(file.content, file.format);
  return file;
}

std::string write_design(const IncidenceSystem& s, DesignFormat format) {
  if (format == DesignFormat::json) {
    json blocks = json::array();
    for (const Block& b : s.blocks()) blocks.push_back(b);
    json doc = {{"v", s.point_count()}, {"blocks", std::move(blocks)}};
    return doc.dump() + "\n";
  }
  std::string out = std::to_string(s.point_count()) + " " + std::to_string(s.block_count()) + "\n";
  for (const Block& b : s.blocks()) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i != 0) out += ' ';
      out += std::to_string(b[i]);
    }
    out += '\n';
  }
  return out;
}

std::optional<DesignFormat> parse_format(std::string_view name) {
  if (name == "json") return DesignFormat::json;
  if (name == "text") return DesignFormat::text;
  return std::nullopt;
}

const char* to_string(DesignFormat format) { return format == DesignFormat::json ? "json" : "text"; }

}  // namespace designlab::io

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "designlab/incidence.hpp"

namespace designlab::io {

enum class DesignFormat { json, text };

/// Malformed design input. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct DesignFile {
  DesignFormat format = DesignFormat::json;
  IncidenceSystem system;
  std::string content;  ///< raw bytes as read, for digests
};

/// JSON: {"v": <int>, "blocks": [[<int>, ...], ...]} with 0-based points.
/// Text: a first line "v b", then b lines of space-separated point indices,
/// one block per line; a blank line is an empty block. Trailing blank lines
/// past the b-th block are ignored.
IncidenceSystem parse_design(std::string_view content, DesignFormat format);

/// ".json" or ".txt"/".design" by extension, otherwise by the first
/// non-blank character ('{' means JSON).
DesignFormat infer_format(const std::filesystem::path& path, std::string_view content);

DesignFile read_design(const std::filesystem::path& path, std::optional<DesignFormat> format = std::nullopt);

/// Inverse of parse_design: parse_design(write_design(s, f), f) == s.
std::string write_design(const IncidenceSystem& s, DesignFormat format);

std::optional<DesignFormat> parse_format(std::string_view name);
const char* to_string(DesignFormat format);

}  // namespace designlab::io

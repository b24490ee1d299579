#include "quasilab/table_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "quasilab/error.hpp"

namespace quasilab {
namespace {

struct Line {
  std::size_t number;  // 1-based
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> Tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

// Lines with comments stripped. Blank lines are kept as empty token lists so
// that table blocks can be told apart.
std::vector<Line> SplitLines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    bool had_comment = false;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
      had_comment = true;
    }
    auto tokens = Tokenize(line);
    // Comment-only lines vanish; they never separate blocks.
    if (!tokens.empty() || !had_comment) lines.push_back({number, std::move(tokens)});
    pos = end + 1;
  }
  return lines;
}

int ParseInt(std::string_view token, std::size_t line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::kFormatError, "line " + std::to_string(line) +
                                             ": expected an integer, got '" +
                                             std::string(token) + "'");
  }
  return value;
}

// Reads one table starting at the first non-blank line at or after `i`.
// Returns nullopt when only blank lines remain.
std::optional<Quasigroup> ReadBlock(const std::vector<Line>& lines, std::size_t& i) {
  while (i < lines.size() && lines[i].tokens.empty()) ++i;
  if (i == lines.size()) return std::nullopt;
  const Line& header = lines[i];
  if (header.tokens.size() != 2 || header.tokens[0] != "order") {
    throw Error(ErrorCode::kFormatError,
                "line " + std::to_string(header.number) + ": expected 'order <n>'");
  }
  const int n = ParseInt(header.tokens[1], header.number);
  if (n <= 0) {
    throw Error(ErrorCode::kFormatError,
                "line " + std::to_string(header.number) + ": order must be positive");
  }
  ++i;
  std::vector<std::vector<int>> rows;
  while (static_cast<int>(rows.size()) < n) {
    if (i == lines.size() || lines[i].tokens.empty()) {
      throw Error(ErrorCode::kNotSquare, "expected " + std::to_string(n) +
                                             " rows, found " + std::to_string(rows.size()));
    }
    std::vector<int> row;
    for (auto tok : lines[i].tokens) row.push_back(ParseInt(tok, lines[i].number));
    rows.push_back(std::move(row));
    ++i;
  }
  return Quasigroup::FromRows(rows);
}

}  // namespace

Quasigroup ParseTable(std::string_view text) {
  const auto lines = SplitLines(text);
  std::size_t i = 0;
  auto q = ReadBlock(lines, i);
  if (!q) throw Error(ErrorCode::kFormatError, "no table found");
  for (; i < lines.size(); ++i) {
    if (!lines[i].tokens.empty()) {
      throw Error(ErrorCode::kFormatError, "line " + std::to_string(lines[i].number) +
                                               ": unexpected content after table");
    }
  }
  return *std::move(q);
}

std::vector<Quasigroup> ParseTables(std::string_view text) {
  const auto lines = SplitLines(text);
  std::vector<Quasigroup> out;
  std::size_t i = 0;
  while (auto q = ReadBlock(lines, i)) out.push_back(*std::move(q));
  return out;
}

Quasigroup ReadTableFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kFormatError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseTable(buf.str());
}

void WriteTable(std::ostream& os, const Quasigroup& q,
                const std::vector<std::string>& comments) {
  for (const auto& c : comments) os << "# " << c << '\n';
  const int n = q.order();
  os << "order " << n << '\n';
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (y) os << ' ';
      os << q(x, y);
    }
    os << '\n';
  }
}

std::string FormatTable(const Quasigroup& q, const std::vector<std::string>& comments) {
  std::ostringstream os;
  WriteTable(os, q, comments);
  return os.str();
}

}  // namespace quasilab

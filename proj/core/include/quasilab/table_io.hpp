#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "quasilab/quasigroup.hpp"

namespace quasilab {

// Cayley table text format:
//
//   # optional comment lines (anything after '#' is ignored)
//   order 3
//   0 2 1
//   1 0 2
//   2 1 0
//
// Several tables may follow each other in one stream, separated by blank
// lines.

// Parses exactly one table; trailing content other than comments and blank
// lines is a kFormatError.
Quasigroup ParseTable(std::string_view text);
Quasigroup ReadTableFile(const std::string& path);

// Parses zero or more consecutive tables.
std::vector<Quasigroup> ParseTables(std::string_view text);

// Writes `# <comment>` lines (if any) followed by the table.
void WriteTable(std::ostream& os, const Quasigroup& q,
                const std::vector<std::string>& comments = {});
std::string FormatTable(const Quasigroup& q,
                        const std::vector<std::string>& comments = {});

}  // namespace quasilab

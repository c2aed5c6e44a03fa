#pragma once

// Text and JSON serialization of design matrices.
//
// Text form:
//   order 4; vars 3; group SQ; type 1,1,2
//   +g1g2*x1,+g1*x2,+g2*x3,+x3
//   ...
// Entries are `0` or `[+-]<generator word>*x<i>` (generators and variables are
// 1-indexed).  The writer always emits the canonical form, so write -> read ->
// write is byte-identical.

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "sodforge/design.hpp"

namespace sodforge {

std::string format_entry(const GroupPresentation& group, const Entry& e);
Entry parse_entry(const GroupPresentation& group, std::string_view token);

void write_design_header(std::ostream& os, std::size_t order, const GroupPresentation& group,
                         std::span<const std::int64_t> type);
void write_design_row(std::ostream& os, const GroupPresentation& group, std::span<const Entry> row);

void write_design_text(std::ostream& os, const DesignMatrix& x);
void write_design_json(std::ostream& os, const DesignMatrix& x);

DesignMatrix read_design_text(std::istream& is);
DesignMatrix read_design_json(std::istream& is);
/// Dispatches on the first non-blank character ('{' means JSON).
DesignMatrix read_design(std::istream& is);

DesignMatrix load_design(const std::string& path);  // "-" reads stdin
void save_design(const std::string& path, const DesignMatrix& x, bool json = false);

}  // namespace sodforge

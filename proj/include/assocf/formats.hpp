#pragma once

#include <string>
#include <string_view>

#include "assocf/magma.hpp"
#include "assocf/rewrite.hpp"

namespace assocf {

/// Magma file: element names on the first content line, then one row per
/// element giving the products with each column. '#' starts a comment;
/// blank lines are skipped. Throws FormatError with the 1-based line.
Magma parse_magma(std::string_view text);
std::string emit_magma(const Magma& m);

/// One law "TREE = TREE" per line, with the same comment rules.
VarietyPresentation parse_variety(std::string_view text);
std::string emit_variety(const VarietyPresentation& v);

/// Reads a file; throws std::runtime_error when it cannot be opened.
std::string read_file(const std::string& path);
Magma load_magma(const std::string& path);
VarietyPresentation load_variety(const std::string& path);

}  // namespace assocf

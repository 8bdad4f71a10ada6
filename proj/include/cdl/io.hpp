#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cdl/family.hpp"
#include "cdl/moments.hpp"
#include "cdl/weights.hpp"

namespace cdl::io {

/// Key-value weight spec, one `key = value` per line; '#' starts a comment:
///
///   kind = explicit            kind = family
///   sq   = [1/2, 1, 5/4]       x    = 1/2
///   tail = xi(w2sq=5/4)
///
/// `tail` is one of ones, const(v), xi(w2sq=v), inv_xi(w2sq=v) and defaults
/// to ones. Throws DomainError on malformed input.
SquaredWeights parse_weight_spec(std::string_view text);
SquaredWeights read_weight_spec(const std::string& path);

/// Inverse of parse_weight_spec for kind = explicit.
std::string format_weight_spec(const SquaredWeights& w);

/// One value per line ("p/q" or a decimal literal); '#' starts a comment and
/// blank lines are skipped.
ExactSequence parse_sequence(std::string_view text);
ExactSequence read_sequence(const std::string& path);

/// Header `x,D<m>...`, one row per sample. Values are rounded half-even to
/// 12 significant digits, or printed as "p/q" when `exact` is set.
void write_figure_csv(std::ostream& os, const family::FigureTable& table, bool exact);

/// Whole file contents; throws DomainError when the file cannot be read.
std::string slurp(const std::string& path);

}  // namespace cdl::io

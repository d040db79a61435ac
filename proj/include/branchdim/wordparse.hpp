#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "branchdim/elements.hpp"

namespace branchdim {

/// Text of the bundled second Grigorchuk group definition (data/grigorchuk2.grp).
extern const std::string_view kGrigorchuk2Source;

/// Parses a group-definition document:
///
///     # comment
///     alphabet 4
///     gen a = ((1 2 3 4); e, e, e, e)
///     gen b = (e; a, e, a, b)
///
/// Section words may use the full word syntax and may reference generators
/// declared later in the file. Throws ParseError with line and column.
GroupDefPtr parse_group_def(std::string_view source, std::size_t word_length_guard = kDefaultWordLengthGuard);
GroupDefPtr load_group_def(const std::filesystem::path& path,
                           std::size_t word_length_guard = kDefaultWordLengthGuard);
GroupDefPtr grigorchuk2();

/// Parses a word expression: juxtaposition (or '*'), integer powers "x^-2",
/// conjugation "x^y" = y^-1 x y, left-normed commutators "[x, y, z]" =
/// [[x, y], z], parentheses, and the identity token "e".
Element parse_word(std::string_view text, const GroupDefPtr& def);

/// Run-length text accepted back by parse_word, e.g. "a^2 b^-1"; "e" when empty.
std::string format_element(const Element& g);

}  // namespace branchdim

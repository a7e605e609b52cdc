#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>

#include "kemeny/matrix.hpp"
#include "kemeny/preferences.hpp"

namespace kemeny {

// Profile file: "k n" then n lines, each a space-separated permutation of 0..k-1, best first.
// Matrix file:  "k" then k rows of k space-separated decimals.
// Blank lines and lines starting with '#' are skipped; ParseError carries the line number.

PreferenceProfile read_profile(std::istream& in);
SquareMatrix read_matrix(std::istream& in);

/// Dispatches on the header: one integer means matrix, two mean profile.
std::variant<SquareMatrix, PreferenceProfile> read_matrix_or_profile(std::istream& in);

void write_profile(std::ostream& out, const PreferenceProfile& p);
void write_matrix(std::ostream& out, const SquareMatrix& q);

/// Throws IoError when the file cannot be opened.
std::variant<SquareMatrix, PreferenceProfile> load_matrix_or_profile(const std::filesystem::path& path);

}  // namespace kemeny

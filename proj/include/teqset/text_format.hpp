#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "teqset/tournament.hpp"

namespace teqset {

/// Malformed tournament text. `line()` is 1-based.
class FormatError : public std::runtime_error {
public:
    FormatError(int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

/// Reads the canonical text format: a line holding n, then n rows of n '0'/'1'
/// characters where row i, column j is 1 iff i dominates j. The final newline
/// is optional.
Tournament parse_tournament(std::string_view text);

/// Writes the canonical text format, newline-terminated.
std::string serialize_tournament(const Tournament& t);

Tournament load_tournament(const std::string& path);
void save_tournament(const Tournament& t, const std::string& path);

}  // namespace teqset

#pragma once

#include <iosfwd>
#include <string>

#include "rsparse/types.hpp"

namespace rsparse {

/// Shortest decimal text that round-trips to the same double.
std::string format_double(double value);

/// One sample per row, comma-separated decimal floats. Returns d x n (one
/// sample per column). Throws Io with the offending line number.
Matrix read_samples_csv(std::istream& in, bool skip_header = false);
Matrix read_samples_csv(const std::string& path, bool skip_header = false);

/// Writes a vector as a single comma-separated line.
void write_vector_csv(std::ostream& out, const Vector& v);

}  // namespace rsparse

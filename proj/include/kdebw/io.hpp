#pragma once

#include "kdebw/errors.hpp"
#include "kdebw/sample.hpp"

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace kdebw {

//! Unreadable or malformed input file.
class InputError : public Error
{
public:
  using Error::Error;
};

//! Parsed sample file: whitespace-separated numeric columns, one point per
//! line, '#' starts a comment line.
struct SampleTable
{
  int columns = 0;
  std::vector<double> values; // row-major, columns per row

  std::size_t rows() const { return columns == 0 ? 0 : values.size() / columns; }
};

SampleTable parse_sample_table(std::istream& in);
SampleTable read_sample_table(const std::string& path);

//! Converts a table to a sample, checking the column count against `dim`.
Sample1D to_sample_1d(const SampleTable& table);
Sample3D to_sample_3d(const SampleTable& table);

//! Header lines are written as "# <line>". Values use %.17g so a reread is exact.
void write_sample(std::ostream& out, const std::vector<std::string>& header, const Sample1D& sample);
void write_sample(std::ostream& out, const std::vector<std::string>& header, const Sample3D& sample);

} // namespace kdebw

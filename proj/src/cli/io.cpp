#include "kdebw/io.hpp"

#include <charconv>
#include <fmt/format.h>
#include <fstream>
#include <istream>
#include <ostream>

namespace kdebw {

namespace {

bool is_space(char c)
{
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

double parse_number(std::string_view token, std::size_t line_no)
{
  // from_chars rejects a leading '+', which plain text files do contain.
  if (!token.empty() && token.front() == '+')
    token.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size() || !std::isfinite(value))
    throw InputError(fmt::format("line {}: cannot parse '{}' as a number", line_no, token));
  return value;
}

} // namespace

SampleTable parse_sample_table(std::istream& in)
{
  SampleTable table;
  std::string line;
  std::size_t line_no = 0;
  std::vector<double> row;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest(line);
    while (!rest.empty() && is_space(rest.front()))
      rest.remove_prefix(1);
    if (rest.empty() || rest.front() == '#')
      continue;
    row.clear();
    while (!rest.empty()) {
      std::size_t len = 0;
      while (len < rest.size() && !is_space(rest[len]))
        ++len;
      row.push_back(parse_number(rest.substr(0, len), line_no));
      rest.remove_prefix(len);
      while (!rest.empty() && is_space(rest.front()))
        rest.remove_prefix(1);
    }
    const int columns = static_cast<int>(row.size());
    if (columns != 1 && columns != 3)
      throw InputError(fmt::format("line {}: expected 1 or 3 columns, found {}", line_no, columns));
    if (table.columns == 0)
      table.columns = columns;
    else if (table.columns != columns)
      throw InputError(fmt::format(
        "line {}: found {} columns but earlier rows have {}", line_no, columns, table.columns));
    table.values.insert(table.values.end(), row.begin(), row.end());
  }
  if (table.values.empty())
    throw InputError("no data rows");
  return table;
}

SampleTable read_sample_table(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw InputError(fmt::format("cannot open '{}'", path));
  return parse_sample_table(in);
}

Sample1D to_sample_1d(const SampleTable& table)
{
  if (table.columns != 1)
    throw InputError(
      fmt::format("dimension mismatch: file has {} columns but dimension 1 was requested", table.columns));
  return Sample1D(table.values);
}

Sample3D to_sample_3d(const SampleTable& table)
{
  if (table.columns != 3)
    throw InputError(
      fmt::format("dimension mismatch: file has {} columns but dimension 3 was requested", table.columns));
  std::vector<Vec3> points(table.rows());
  for (std::size_t i = 0; i < points.size(); ++i)
    points[i] = { table.values[3 * i], table.values[3 * i + 1], table.values[3 * i + 2] };
  return Sample3D(std::move(points));
}

void write_sample(std::ostream& out, const std::vector<std::string>& header, const Sample1D& sample)
{
  for (const auto& h : header)
    out << "# " << h << '\n';
  for (double x : sample.points())
    out << fmt::format("{:.17g}\n", x);
}

void write_sample(std::ostream& out, const std::vector<std::string>& header, const Sample3D& sample)
{
  for (const auto& h : header)
    out << "# " << h << '\n';
  for (const auto& p : sample.points())
    out << fmt::format("{:.17g} {:.17g} {:.17g}\n", p[0], p[1], p[2]);
}

} // namespace kdebw

#ifndef BSIG_TOOLS_CSV_HPP_
#define BSIG_TOOLS_CSV_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace bsig::cli {

/// Shortest decimal text that parses back to the same double ('.' decimal
/// separator regardless of locale).  Non-finite values print as nan, inf, -inf.
std::string format_number(double x);

/// RFC 4180 writer: CRLF-free ('\n') rows, fields quoted only when needed.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void row(const std::vector<std::string>& fields);

 private:
  std::ostream& out_;
};

}  // namespace bsig::cli

#endif  // BSIG_TOOLS_CSV_HPP_

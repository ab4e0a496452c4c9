#ifndef CHARTWO_FORM_IO_HPP
#define CHARTWO_FORM_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include "chartwo/quadratic_form.hpp"

namespace chartwo {

/// Malformed form file; carries the 1-based line number of the offense.
class FormParseError : public std::runtime_error {
 public:
  FormParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

using ParsedForm =
    std::variant<QuadraticForm<Gf2kField>, QuadraticForm<FunctionField>>;

/// Text format, one declaration per line, '#' starts a comment:
///   field gf2^k        (or: field rational)
///   dim n
///   term i j <scalar-literal>     (1-based, i <= j; missing terms are 0)
/// Unknown directives, bad indices and duplicate terms are errors.
ParsedForm parse_form(std::istream& in);
ParsedForm parse_form_file(const std::string& path);

std::string print_form(const QuadraticForm<Gf2kField>& q);
std::string print_form(const QuadraticForm<FunctionField>& q);

}  // namespace chartwo

#endif  // CHARTWO_FORM_IO_HPP

#include "chartwo/form_io.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <vector>

namespace chartwo {

namespace {

struct RawForm {
  std::string field_spec;
  std::optional<std::size_t> dim;
  // (line, i, j, literal), indices already 0-based
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::string>> terms;
};

template <ScalarField F>
QuadraticForm<F> assemble(const RawForm& raw, F field) {
  QuadraticForm<F> q(field, *raw.dim);
  std::vector<bool> seen(*raw.dim * (*raw.dim + 1) / 2, false);
  for (const auto& [line, i, j, literal] : raw.terms) {
    const auto value = field.parse(literal);
    if (!value) throw FormParseError(line, "bad scalar literal '" + literal + "'");
    const std::size_t slot = i * *raw.dim - i * (i - 1) / 2 + (j - i);
    if (seen[slot]) throw FormParseError(line, "duplicate term");
    seen[slot] = true;
    q.set_coeff(i, j, *value);
  }
  return q;
}

}  // namespace

ParsedForm parse_form(std::istream& in) {
  RawForm raw;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string directive;
    if (!(ls >> directive)) continue;  // blank line
    if (directive == "field") {
      std::string spec;
      if (!(ls >> spec)) throw FormParseError(lineno, "field needs an argument");
      if (!raw.field_spec.empty()) throw FormParseError(lineno, "field declared twice");
      raw.field_spec = spec;
    } else if (directive == "dim") {
      long n = 0;
      if (!(ls >> n) || n < 1) throw FormParseError(lineno, "dim needs a positive count");
      if (raw.dim) throw FormParseError(lineno, "dim declared twice");
      raw.dim = static_cast<std::size_t>(n);
    } else if (directive == "term") {
      long i = 0, j = 0;
      std::string literal;
      if (!(ls >> i >> j >> literal)) {
        throw FormParseError(lineno, "term needs: i j literal");
      }
      if (!raw.dim) throw FormParseError(lineno, "term before dim");
      if (i < 1 || j < 1 || i > j || static_cast<std::size_t>(j) > *raw.dim) {
        throw FormParseError(lineno, "term indices need 1 <= i <= j <= dim");
      }
      raw.terms.emplace_back(lineno, static_cast<std::size_t>(i - 1),
                             static_cast<std::size_t>(j - 1), literal);
    } else {
      throw FormParseError(lineno, "unknown directive '" + directive + "'");
    }
    std::string trailing;
    if (ls >> trailing) throw FormParseError(lineno, "trailing tokens");
  }
  if (raw.field_spec.empty()) throw FormParseError(lineno + 1, "missing field declaration");
  if (!raw.dim) throw FormParseError(lineno + 1, "missing dim declaration");

  if (raw.field_spec == "rational") {
    return assemble(raw, FunctionField{1});
  }
  if (raw.field_spec.rfind("gf2^", 0) == 0) {
    int k = 0;
    try {
      k = std::stoi(raw.field_spec.substr(4));
    } catch (const std::exception&) {
      throw FormParseError(1, "bad field spec '" + raw.field_spec + "'");
    }
    if (k < 1 || k > Gf2k::kMaxDegree) {
      throw FormParseError(1, "field degree out of range");
    }
    return assemble(raw, Gf2kField{k});
  }
  throw FormParseError(1, "unknown field '" + raw.field_spec + "'");
}

ParsedForm parse_form_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open form file '" + path + "'");
  return parse_form(in);
}

namespace {

template <ScalarField F>
std::string print_form_impl(const QuadraticForm<F>& q, const std::string& field_spec) {
  std::ostringstream os;
  os << "field " << field_spec << '\n';
  os << "dim " << q.dim() << '\n';
  for (std::size_t i = 0; i < q.dim(); ++i) {
    for (std::size_t j = i; j < q.dim(); ++j) {
      if (q.coeff(i, j).is_zero()) continue;
      os << "term " << i + 1 << ' ' << j + 1 << ' '
         << q.field().to_string(q.coeff(i, j)) << '\n';
    }
  }
  return os.str();
}

}  // namespace

std::string print_form(const QuadraticForm<Gf2kField>& q) {
  return print_form_impl(q, "gf2^" + std::to_string(q.field().k));
}

std::string print_form(const QuadraticForm<FunctionField>& q) {
  return print_form_impl(q, "rational");
}

}  // namespace chartwo

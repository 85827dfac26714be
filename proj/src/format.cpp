// format.cpp
//
// Tuple-style numeral rendering and the inverse parsers used by the CLI.

#include "permutiple/format.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace permutiple {

namespace {

std::string join(const std::vector<int>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ",";
    out << values[i];
  }
  return out.str();
}

}  // namespace

std::string render_digits(const DigitString& ds) {
  return "(" + join(ds.big_endian()) + ")_" + std::to_string(ds.base);
}

std::string render_equality(const DigitString& product, const DigitString& multiplicand, int n) {
  return render_digits(product) + " = " + std::to_string(n) + " * " + render_digits(multiplicand);
}

std::string render_cycle(const DigitCycle& c) { return "(" + join(c.vertices) + ")"; }

std::string render_combo(const CycleCombo& c) {
  std::string out;
  for (const auto& cyc : c.cycles) out += render_cycle(cyc);
  return out;
}

std::string render_string(const InputString& s) {
  std::ostringstream out;
  for (const auto& in : s.inputs) out << "(" << in.first << "," << in.second << ")";
  return out.str();
}

std::string render_permutation(const Permutation& p) {
  std::string out;
  for (const auto& cyc : p.cycles()) out += "(" + join(cyc) + ")";
  return out.empty() ? "()" : out;
}

std::string render_carries(const CarrySequence& c) { return join(c.carries); }

DigitString parse_numeral(const std::string& text, int b) {
  if (text.empty()) throw std::invalid_argument("empty numeral");

  if (text.front() == '(') {
    if (text.back() != ')') throw std::invalid_argument("unbalanced parentheses in numeral");
    std::vector<int> big_endian;
    std::string body = text.substr(1, text.size() - 2);
    std::istringstream in(body);
    std::string part;
    while (std::getline(in, part, ',')) {
      if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad digit component '" + part + "' in numeral");
      big_endian.push_back(std::stoi(part));
    }
    if (big_endian.empty()) throw std::invalid_argument("empty numeral");
    return DigitString::from_big_endian(std::move(big_endian), b);
  }

  std::vector<int> big_endian;
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("bad character '" + std::string(1, ch) + "' in numeral");
    big_endian.push_back(ch - '0');
  }
  return DigitString::from_big_endian(std::move(big_endian), b);
}

std::vector<InputPair> parse_pairs(const std::string& text) {
  std::vector<InputPair> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in pair list");
    std::size_t close = text.find(')', pos);
    if (close == std::string::npos) throw std::invalid_argument("unbalanced pair list");
    std::string body = text.substr(pos + 1, close - pos - 1);
    std::size_t comma = body.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("pair needs two components");
    auto number = [](const std::string& s) {
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad pair component '" + s + "'");
      return std::stoi(s);
    };
    out.emplace_back(number(body.substr(0, comma)), number(body.substr(comma + 1)));
    pos = close + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty pair list");
  return out;
}

}  // namespace permutiple

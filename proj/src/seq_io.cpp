#include "diotrip/seq_io.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

namespace diotrip {
namespace {

using nlohmann::ordered_json;

mpq_class parse_rational(const std::string& s, const std::string& path) {
  mpq_class q;
  try {
    q = mpq_class(s, 10);
  } catch (const std::invalid_argument&) {
    throw ParseError(path, "not an exact rational: '" + s + "'");
  }
  if (q.get_den() == 0) throw ParseError(path, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

FieldElement parse_scalar(const ordered_json& node, const FieldSpec& field,
                          const std::string& path) {
  if (node.is_string()) return FieldElement(parse_rational(node.get<std::string>(), path));
  if (node.is_array() && node.size() == 2 && node[0].is_string() && node[1].is_string()) {
    const mpq_class a = parse_rational(node[0].get<std::string>(), path + "[0]");
    const mpq_class b = parse_rational(node[1].get<std::string>(), path + "[1]");
    try {
      return FieldElement(field, a, b);
    } catch (const std::invalid_argument& e) {
      throw ParseError(path, e.what());
    }
  }
  throw ParseError(path, "expected a rational string or a two-component array");
}

Polynomial parse_poly_node(const ordered_json& node, const FieldSpec& field,
                           const std::string& path) {
  if (!node.is_array()) throw ParseError(path, "expected a coefficient array");
  std::vector<FieldElement> coeffs;
  for (std::size_t i = 0; i < node.size(); ++i)
    coeffs.push_back(parse_scalar(node[i], field, path + "[" + std::to_string(i) + "]"));
  return Polynomial::from_coefficients(std::move(coeffs));
}

RationalFunction parse_fraction_node(const ordered_json& node, const FieldSpec& field,
                                     const std::string& path) {
  if (!node.is_object() || !node.contains("num") || !node.contains("den"))
    throw ParseError(path, "expected an object with 'num' and 'den'");
  for (const auto& item : node.items())
    if (item.key() != "num" && item.key() != "den")
      throw ParseError(path + "." + item.key(), "unknown key");
  const Polynomial num = parse_poly_node(node["num"], field, path + ".num");
  const Polynomial den = parse_poly_node(node["den"], field, path + ".den");
  if (den.is_zero()) throw ParseError(path + ".den", "zero denominator polynomial");
  return RationalFunction(num, den);
}

ordered_json scalar_node(const FieldElement& c) {
  if (c.is_rational()) return c.as_rational().get_str();
  return ordered_json::array({c.rational_part().get_str(), c.extension_part().get_str()});
}

ordered_json poly_node(const Polynomial& f) {
  ordered_json arr = ordered_json::array();
  if (f.is_zero()) return arr;
  const long deg = f.degree().value();
  for (long i = 0; i <= deg; ++i) arr.push_back(scalar_node(f.coefficient(i)));
  return arr;
}

ordered_json fraction_node(const RationalFunction& f) {
  ordered_json node;
  node["num"] = poly_node(f.num());
  node["den"] = poly_node(f.den());
  return node;
}

}  // namespace

std::string write_sequence_spec(const SequenceSpecFile& spec) {
  ordered_json j;
  j["schema"] = 1;
  j["field"] = spec.sequence.field().name();
  ordered_json roots = ordered_json::array();
  ordered_json coefficients = ordered_json::array();
  for (long i = 0; i < spec.sequence.order(); ++i) {
    roots.push_back(poly_node(spec.sequence.root(i)));
    coefficients.push_back(fraction_node(spec.sequence.coefficient(i)));
  }
  j["roots"] = roots;
  j["coefficients"] = coefficients;
  if (spec.shift) j["p"] = poly_node(*spec.shift);
  return j.dump(2) + "\n";
}

SequenceSpecFile read_sequence_spec(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("$", e.what());
  }
  if (!j.is_object()) throw ParseError("$", "expected an object");
  for (const auto& item : j.items())
    if (item.key() != "schema" && item.key() != "field" && item.key() != "roots" &&
        item.key() != "coefficients" && item.key() != "p")
      throw ParseError("$." + item.key(), "unknown key");

  if (!j.contains("schema") || !j["schema"].is_number_integer())
    throw ParseError("$.schema", "expected an integer schema version");
  if (j["schema"].get<long>() != 1)
    throw ParseError("$.schema", "unsupported schema version " + j["schema"].dump());

  if (!j.contains("field") || !j["field"].is_string())
    throw ParseError("$.field", "expected a field name string");
  FieldSpec field;
  try {
    field = FieldSpec::parse(j["field"].get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError("$.field", e.what());
  }

  if (!j.contains("roots") || !j["roots"].is_array() || j["roots"].empty())
    throw ParseError("$.roots", "expected a nonempty array");
  if (!j.contains("coefficients") || !j["coefficients"].is_array())
    throw ParseError("$.coefficients", "expected an array");
  if (j["coefficients"].size() != j["roots"].size())
    throw ParseError("$.coefficients",
                     "expected as many coefficients as roots (" +
                         std::to_string(j["roots"].size()) + ")");

  std::vector<Polynomial> roots;
  std::vector<RationalFunction> coefficients;
  for (std::size_t i = 0; i < j["roots"].size(); ++i) {
    const std::string tag = "[" + std::to_string(i) + "]";
    roots.push_back(parse_poly_node(j["roots"][i], field, "$.roots" + tag));
    coefficients.push_back(
        parse_fraction_node(j["coefficients"][i], field, "$.coefficients" + tag));
  }

  std::optional<Polynomial> shift;
  if (j.contains("p")) shift = parse_poly_node(j["p"], field, "$.p");

  try {
    return {PowerSum(std::move(coefficients), std::move(roots)), std::move(shift)};
  } catch (const std::invalid_argument& e) {
    throw ParseError("$", e.what());
  }
}

SequenceSpecFile load_sequence_spec(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw ParseError(filename, "cannot read file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_sequence_spec(buffer.str());
}

void save_sequence_spec(const SequenceSpecFile& spec, const std::string& filename) {
  std::ofstream out(filename);
  if (!out) throw ParseError(filename, "cannot write file");
  out << write_sequence_spec(spec);
  if (!out) throw ParseError(filename, "write failed");
}

Polynomial parse_polynomial(const std::string& text) {
  std::size_t i = 0;
  const auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  const auto fail = [&](const std::string& message) {
    return ParseError("column " + std::to_string(i + 1), message);
  };
  const auto digits = [&]() -> std::string {
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw fail("expected digits");
    return text.substr(start, i - start);
  };

  Polynomial result;
  skip();
  if (i >= text.size()) throw fail("empty polynomial");
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw fail("expected '+' or '-' between terms");
    }

    mpq_class coef(1);
    bool have_coef = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      const std::string num = digits();
      std::string den = "1";
      if (i < text.size() && text[i] == '/') {
        ++i;
        den = digits();
      }
      coef = mpq_class(num + "/" + den, 10);
      if (coef.get_den() == 0) throw fail("zero denominator");
      coef.canonicalize();
      have_coef = true;
      skip();
    }

    bool starred = false;
    if (have_coef && i < text.size() && text[i] == '*') {
      ++i;
      starred = true;
      skip();
    }

    long exponent = 0;
    bool have_variable = false;
    if (i < text.size() && (text[i] == 'x' || text[i] == 'X')) {
      ++i;
      have_variable = true;
      exponent = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        const std::string raw = digits();
        if (raw.size() > 6) throw fail("exponent out of range");
        exponent = std::stol(raw);
      }
      skip();
    }

    if (starred && !have_variable) throw fail("expected the variable after '*'");
    if (!have_coef && !have_variable) throw fail("expected a term");

    result = result + Polynomial::monomial(FieldElement(mpq_class(sign) * coef),
                                           static_cast<std::size_t>(exponent));
    first = false;
  }
  return result;
}

}  // namespace diotrip

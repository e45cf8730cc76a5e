#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "diotrip/bounds.hpp"
#include "diotrip/degenerate.hpp"
#include "diotrip/expansion.hpp"
#include "diotrip/places.hpp"
#include "diotrip/power_sum.hpp"
#include "diotrip/search.hpp"
#include "diotrip/seq_io.hpp"

namespace {

using diotrip::FieldElement;
using diotrip::Polynomial;
using diotrip::RationalFunction;
using nlohmann::ordered_json;

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

ordered_json valuation_node(const diotrip::Valuation& v) {
  if (v.is_infinity()) return "infinity";
  return v.value();
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// Shift polynomial for a loaded spec: the --p flag wins, then the file's own
// "p" entry, then zero.
Polynomial resolve_shift(const diotrip::SequenceSpecFile& spec, const std::string& p_text) {
  if (!p_text.empty()) return diotrip::parse_polynomial(p_text);
  if (spec.shift) return *spec.shift;
  return Polynomial();
}

int cmd_check(const std::string& seq_file) {
  const diotrip::SequenceSpecFile spec = diotrip::load_sequence_spec(seq_file);
  const diotrip::HypothesisReport r = diotrip::check_hypotheses(spec.sequence);
  ordered_json j;
  j["pass"] = r.pass();
  j["dominant_root"] = r.dominant_root;
  j["tied_top_degree_count"] = r.tied_top_degree_count;
  j["f1_not_square"] = r.coefficient_not_square;
  j["f1_a1_not_square"] = r.coefficient_root_not_square;
  ordered_json failures = ordered_json::array();
  if (!r.dominant_root) failures.push_back("no_dominant_root");
  if (!r.coefficient_not_square) failures.push_back("f1_is_square");
  if (!r.coefficient_root_not_square) failures.push_back("f1_a1_is_square");
  j["failures"] = failures;
  emit(j);
  return r.pass() ? 0 : 1;
}

int cmd_search(const std::string& seq_file, const std::string& p_text, long max_index,
               long min_index, int jobs, const std::string& format) {
  const diotrip::SequenceSpecFile spec = diotrip::load_sequence_spec(seq_file);
  const Polynomial p = resolve_shift(spec, p_text);
  const diotrip::SearchOutcome out =
      diotrip::search(spec.sequence, p, max_index, min_index, jobs);

  bool all_verified = true;
  if (format == "tsv") {
    std::cout << "x\ty\tz\ta\tb\tc\tlambda\tverified\n";
    for (const diotrip::TripleSolution& sol : out.solutions) {
      const bool ok = verify_triple(sol, spec.sequence, p);
      all_verified = all_verified && ok;
      std::cout << sol.x << "\t" << sol.y << "\t" << sol.z << "\t" << sol.a.str() << "\t"
                << sol.b.str() << "\t" << sol.c.str() << "\t"
                << (sol.lambda ? sol.lambda->get_str() : "-") << "\t" << (ok ? 1 : 0) << "\n";
    }
    for (const diotrip::SkipRecord& skip : out.skipped)
      std::cout << "# skipped " << skip.n << ": " << skip.reason << "\n";
    return all_verified ? 0 : 1;
  }

  ordered_json j;
  j["p"] = p.str();
  j["max_index"] = max_index;
  j["min_index"] = min_index;
  ordered_json solutions = ordered_json::array();
  for (const diotrip::TripleSolution& sol : out.solutions) {
    const bool ok = verify_triple(sol, spec.sequence, p);
    all_verified = all_verified && ok;
    const diotrip::DegreeRelations rel = degree_relations(sol, spec.sequence);
    ordered_json node;
    node["x"] = sol.x;
    node["y"] = sol.y;
    node["z"] = sol.z;
    node["a"] = poly_node(sol.a);
    node["b"] = poly_node(sol.b);
    node["c"] = poly_node(sol.c);
    node["lambda"] = sol.lambda ? ordered_json(sol.lambda->get_str()) : ordered_json(nullptr);
    node["verified"] = ok;
    ordered_json degrees;
    degrees["y_product"] = rel.y_product;
    degrees["z_product"] = rel.z_product;
    degrees["index_gap"] =
        rel.index_gap ? ordered_json(*rel.index_gap) : ordered_json(nullptr);
    node["degree_relations"] = degrees;
    solutions.push_back(node);
  }
  j["solutions"] = solutions;
  ordered_json skipped = ordered_json::array();
  for (const diotrip::SkipRecord& skip : out.skipped)
    skipped.push_back(ordered_json{{"n", skip.n}, {"reason", skip.reason}});
  j["skipped"] = skipped;
  emit(j);
  return all_verified ? 0 : 1;
}

int cmd_degenerate(const std::string& emit_path, long bound) {
  const diotrip::CounterexampleSpec spec = diotrip::canonical_counterexample();
  ordered_json j;
  j["pass"] = spec.report.pass();
  ordered_json constraints;
  constraints["inputs_single_term"] = spec.report.inputs_single_term;
  constraints["coefficients_polynomial"] = spec.report.coefficients_polynomial;
  constraints["roots_squares"] = spec.report.roots_squares;
  constraints["roots_nonconstant"] = spec.report.roots_nonconstant;
  constraints["roots_pairwise_distinct"] = spec.report.roots_pairwise_distinct;
  constraints["roots_pairwise_coprime"] = spec.report.roots_pairwise_coprime;
  constraints["coefficients_nonconstant"] = spec.report.coefficients_nonconstant;
  constraints["coefficients_squarefree"] = spec.report.coefficients_squarefree;
  constraints["coefficients_pairwise_distinct"] = spec.report.coefficients_pairwise_distinct;
  constraints["coefficients_pairwise_coprime"] = spec.report.coefficients_pairwise_coprime;
  constraints["no_shared_zeros"] = spec.report.no_shared_zeros;
  constraints["no_dominant_root"] = spec.report.no_dominant_root;
  constraints["square_condition_entangled"] = spec.report.square_condition_entangled;
  j["constraints"] = constraints;

  ordered_json planted = ordered_json::array();
  for (const diotrip::PlantedTriple& t : diotrip::planted_triples(spec, bound)) {
    ordered_json node;
    node["x"] = t.x;
    node["y"] = t.y;
    node["z"] = t.z;
    node["a"] = poly_node(t.a);
    node["b"] = poly_node(t.b);
    node["c"] = poly_node(t.c);
    planted.push_back(node);
  }
  j["planted"] = planted;

  if (!emit_path.empty()) {
    diotrip::save_sequence_spec({spec.g, Polynomial(1)}, emit_path);
    j["emitted"] = emit_path;
  }
  emit(j);
  return spec.report.pass() ? 0 : 1;
}

int cmd_expand(const std::string& seq_file, const std::string& p_text, long n, long J,
               bool table) {
  const diotrip::SequenceSpecFile spec = diotrip::load_sequence_spec(seq_file);
  const Polynomial p = resolve_shift(spec, p_text);
  const diotrip::TruncatedExpansion expansion =
      diotrip::truncated_sum(spec.sequence, p, n, J);
  const diotrip::SquareCertificate cert = diotrip::certify_square(spec.sequence, p, n, J);

  if (table) {
    std::ostringstream body;
    body << std::left << std::setw(12) << "index" << std::setw(8) << "bound" << std::setw(10)
         << "order" << "value" << "\n";
    for (const diotrip::SeriesTerm& term : expansion.terms) {
      const diotrip::Valuation actual = term.value.is_zero()
                                            ? diotrip::Valuation::infinity()
                                            : diotrip::Valuation::of(term.value.order_at_infinity());
      body << std::left << std::setw(12) << term.index.str() << std::setw(8)
           << term.certified_bound << std::setw(10) << actual.str() << term.value.str() << "\n";
    }
    body << "defect order " << cert.valuation.str() << " >= bound " << cert.bound << "\n";
    std::cout << body.str();
    return 0;
  }

  ordered_json j;
  j["n"] = n;
  j["J"] = J;
  j["p"] = p.str();
  ordered_json terms = ordered_json::array();
  for (const diotrip::SeriesTerm& term : expansion.terms) {
    ordered_json node;
    node["index"] = term.index.h;
    node["value"] = fraction_node(term.value);
    node["certified_bound"] = term.certified_bound;
    const diotrip::Valuation actual = term.value.is_zero()
                                          ? diotrip::Valuation::infinity()
                                          : diotrip::Valuation::of(term.value.order_at_infinity());
    node["order_at_infinity"] = valuation_node(actual);
    terms.push_back(node);
  }
  j["terms"] = terms;
  j["truncated_sum"] = fraction_node(expansion.sum);
  ordered_json defect;
  defect["order_at_infinity"] = valuation_node(cert.valuation);
  defect["required_bound"] = cert.bound;
  j["defect"] = defect;
  emit(j);
  return 0;
}

int cmd_bounds(const std::string& seq_file, const std::string& p_text, bool table) {
  const diotrip::SequenceSpecFile spec = diotrip::load_sequence_spec(seq_file);
  const Polynomial p = resolve_shift(spec, p_text);
  const diotrip::ConstantLedger ledger = diotrip::make_ledger(spec.sequence, p);

  if (table) {
    std::cout << ledger.str();
    return 0;
  }

  ordered_json j;
  ordered_json constants = ordered_json::array();
  for (const diotrip::LedgerEntry& entry : ledger.entries) {
    ordered_json node;
    node["name"] = entry.name;
    node["value"] = entry.value.get_str();
    node["derivation"] = entry.derivation;
    constants.push_back(node);
  }
  j["constants"] = constants;
  emit(j);
  return 0;
}

int cmd_heights(long suite, unsigned long seed) {
  std::mt19937_64 gen(seed);
  const auto pick = [&](long lo, long hi) {
    return lo + static_cast<long>(gen() % static_cast<unsigned long>(hi - lo + 1));
  };
  const auto random_poly = [&](long max_degree) {
    while (true) {
      const long degree = pick(0, max_degree);
      std::vector<FieldElement> coeffs;
      for (long i = 0; i <= degree; ++i) coeffs.push_back(FieldElement(pick(-9, 9)));
      const Polynomial f = Polynomial::from_coefficients(coeffs);
      if (!f.is_zero()) return f;
    }
  };

  std::vector<std::pair<RationalFunction, RationalFunction>> samples;
  std::vector<Polynomial> outer;
  samples.reserve(suite);
  for (long i = 0; i < suite; ++i) {
    const RationalFunction f(random_poly(8), random_poly(8));
    const RationalFunction g(random_poly(8), random_poly(8));
    samples.emplace_back(f, g);
    outer.push_back(random_poly(3));
  }

  diotrip::HeightPropertyReport report = diotrip::height_property_suite(samples, outer);
  for (const auto& [f, g] : samples) {
    if (f.is_zero()) continue;
    report.add("sum_formula", diotrip::sum_formula_check(f), f.str());
    report.add("height_definitional",
               diotrip::height(f) == diotrip::height_definitional(f), f.str());
  }

  ordered_json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["records"] = report.records.size();
  j["all_pass"] = report.all_pass;
  j["first_violation"] = report.first_violation;
  emit(j);
  return report.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diophantine triples in polynomial power sums"};
  app.require_subcommand(1);

  std::string seq_file;
  std::string p_text;
  std::string format = "json";
  std::string emit_path;
  long max_index = 0;
  long min_index = 0;
  int jobs = 1;
  long bound = 8;
  long n = 0;
  long J = 1;
  long suite = 200;
  unsigned long seed = 7;
  bool table = false;

  CLI::App* check = app.add_subcommand("check", "report the finiteness hypotheses");
  check->add_option("--seq", seq_file, "sequence spec file")->required();

  CLI::App* search = app.add_subcommand("search", "enumerate Diophantine triples by index");
  search->add_option("--seq", seq_file, "sequence spec file")->required();
  search->add_option("--p", p_text, "shift polynomial (overrides the file's entry)");
  search->add_option("--max-index", max_index, "largest index to scan")->required();
  search->add_option("--min-index", min_index, "smallest index to scan");
  search->add_option("--jobs", jobs, "worker count (0 = all cores)");
  search->add_option("--out", format, "output format")
      ->check(CLI::IsMember({"json", "tsv"}));

  CLI::App* degenerate =
      app.add_subcommand("degenerate", "build the dominant-root counterexample");
  degenerate->add_option("--emit", emit_path, "write the sequence spec to this file");
  degenerate->add_option("--bound", bound, "largest planted index to list");

  CLI::App* expand = app.add_subcommand("expand", "truncated square-root expansion table");
  expand->add_option("--seq", seq_file, "sequence spec file")->required();
  expand->add_option("--p", p_text, "shift polynomial (overrides the file's entry)");
  expand->add_option("--n", n, "sequence index")->required();
  expand->add_option("--J", J, "truncation order")->required();
  expand->add_flag("--table", table, "aligned text table instead of JSON");

  CLI::App* bounds = app.add_subcommand("bounds", "explicit constant ledger");
  bounds->add_option("--seq", seq_file, "sequence spec file")->required();
  bounds->add_option("--p", p_text, "shift polynomial (overrides the file's entry)");
  bounds->add_flag("--table", table, "aligned text table instead of JSON");

  CLI::App* heights = app.add_subcommand("heights", "random height/valuation law suite");
  heights->add_option("--suite", suite, "sample count");
  heights->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return cmd_check(seq_file);
    if (search->parsed()) return cmd_search(seq_file, p_text, max_index, min_index, jobs, format);
    if (degenerate->parsed()) return cmd_degenerate(emit_path, bound);
    if (expand->parsed()) return cmd_expand(seq_file, p_text, n, J, table);
    if (bounds->parsed()) return cmd_bounds(seq_file, p_text, table);
    if (heights->parsed()) return cmd_heights(suite, seed);
  } catch (const diotrip::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

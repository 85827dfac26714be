// permutiple CLI: every library entry point behind one subcommand surface.
//
// Exit codes: 0 success (for verify/cross-check: the check held),
// 1 a check ran and came back negative, 2 invalid parameters,
// 3 output truncated by a cap or budget (partial output is still emitted,
// with a marker on stderr).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <permutiple/classify.hpp>
#include <permutiple/dot.hpp>
#include <permutiple/enumerate.hpp>
#include <permutiple/format.hpp>
#include <permutiple/oracle.hpp>

using nlohmann::ordered_json;
using namespace permutiple;

namespace {

constexpr int kSchemaVersion = 1;

enum class Format { table, json_lines, dot };

struct CommonArgs {
  int n = 0;
  int b = 0;
  std::string format = "table";
  std::string out_path;
  bool no_boundary_zeros = false;
  bool serial = false;
  std::size_t cap = 10000;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool with_format = true) {
  cmd->add_option("--n", a.n, "multiplier")->required();
  cmd->add_option("--b", a.b, "base")->required();
  if (with_format)
    cmd->add_option("--format", a.format, "table | json-lines | dot")
        ->check(CLI::IsMember({"table", "json-lines", "dot"}));
  cmd->add_option("--out", a.out_path, "write output here instead of stdout");
}

void add_search_flags(CLI::App* cmd, CommonArgs& a) {
  cmd->add_flag("--no-boundary-zeros", a.no_boundary_zeros,
                "drop equalities with a leading zero on either side");
  cmd->add_flag("--serial", a.serial, "disable parallel kernels");
  cmd->add_option("--cap", a.cap, "walk-enumeration cap per digit multiset");
}

Format parse_format(const std::string& f) {
  if (f == "json-lines") return Format::json_lines;
  if (f == "dot") return Format::dot;
  return Format::table;
}

// Output sink: stdout by default, --out redirects.
struct Sink {
  std::ofstream file;
  std::ostream* os = &std::cout;

  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw std::invalid_argument("cannot open output file: " + path);
      os = &file;
    }
  }
  std::ostream& out() { return *os; }
};

SearchOptions search_options(const CommonArgs& a) {
  SearchOptions o;
  o.allow_boundary_zeros = !a.no_boundary_zeros;
  o.string_cap = a.cap;
  o.parallel = !a.serial;
  return o;
}

ordered_json digits_json(const DigitString& ds) { return ordered_json(ds.big_endian()); }

ordered_json combo_json(const CycleCombo& c) {
  ordered_json j = ordered_json::array();
  for (const auto& cyc : c.cycles) j.push_back(cyc.vertices);
  return j;
}

ordered_json string_json(const InputString& s) {
  ordered_json j = ordered_json::array();
  for (const auto& [d1, d2] : s.inputs) j.push_back(ordered_json::array({d1, d2}));
  return j;
}

ordered_json found_json(const FoundPermutiple& f) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = f.witness.params.n;
  j["b"] = f.witness.params.b;
  j["product"] = digits_json(f.witness.digits);
  j["multiplicand"] = digits_json(f.witness.multiplicand());
  j["combo"] = combo_json(f.source_combo);
  j["string"] = string_json(f.string);
  return j;
}

std::string equality_line(const PermutipleWitness& w) {
  return render_equality(w.digits, w.multiplicand(), w.params.n);
}

// Members grouped under their source combo, combos in enumeration order;
// empty groups are not printed.
void print_grouped(std::ostream& os, const std::vector<FoundPermutiple>& found) {
  std::vector<CycleCombo> combos;
  for (const auto& f : found) {
    bool seen = false;
    for (const auto& c : combos) seen = seen || c == f.source_combo;
    if (!seen) combos.push_back(f.source_combo);
  }
  std::sort(combos.begin(), combos.end(), combo_less);
  for (const auto& c : combos) {
    os << "combo " << render_combo(c) << "\n";
    for (const auto& f : found)
      if (f.source_combo == c) os << "  " << equality_line(f.witness) << "\n";
  }
}

int emit_found(Sink& sink, const FindResult& res, Format fmt) {
  if (fmt == Format::json_lines) {
    for (const auto& f : res.found) sink.out() << found_json(f).dump() << "\n";
  } else {
    print_grouped(sink.out(), res.found);
    sink.out() << res.found.size() << " permutiples\n";
  }
  if (res.truncated) {
    std::cerr << "truncated: string cap reached; output is partial\n";
    return 3;
  }
  return 0;
}

std::optional<PermutipleWitness> witness_from_args(const Params& p, const std::string& product,
                                                   const std::string& multiplicand) {
  DigitString prod = parse_numeral(product, p.b);
  DigitString mult = parse_numeral(multiplicand, p.b);
  if (prod.length() != mult.length())
    throw std::invalid_argument("product and multiplicand lengths differ");
  InputString s;
  for (int j = 0; j < prod.length(); ++j)
    s.inputs.emplace_back(prod.digits[j], mult.digits[j]);
  return string_to_witness(s, p);
}

int run_mother_graph(const CommonArgs& a, const std::string& highlight) {
  Params p(a.n, a.b);
  auto m = build_mother_graph(p);
  Sink sink(a.out_path);
  switch (parse_format(a.format)) {
    case Format::dot: {
      std::set<std::pair<int, int>> hl;
      if (!highlight.empty())
        for (const auto& e : parse_pairs(highlight)) hl.insert(e);
      sink.out() << to_dot(m, hl);
      break;
    }
    case Format::json_lines: {
      ordered_json j;
      j["schema_version"] = kSchemaVersion;
      j["n"] = p.n;
      j["b"] = p.b;
      j["edges"] = ordered_json::array();
      for (const auto& [d1, d2] : m.edges()) j["edges"].push_back({d1, d2});
      sink.out() << j.dump() << "\n";
      break;
    }
    case Format::table: {
      for (const auto& [d1, d2] : m.edges()) sink.out() << d1 << " -> " << d2 << "\n";
      sink.out() << m.edge_count() << " edges\n";
      break;
    }
  }
  return 0;
}

int run_cycles(const CommonArgs& a) {
  Params p(a.n, a.b);
  auto cycles = enumerate_cycles(build_mother_graph(p));
  Sink sink(a.out_path);
  if (parse_format(a.format) == Format::json_lines) {
    for (const auto& c : cycles) {
      ordered_json j;
      j["schema_version"] = kSchemaVersion;
      j["cycle"] = c.vertices;
      sink.out() << j.dump() << "\n";
    }
  } else {
    for (std::size_t i = 0; i < cycles.size(); ++i)
      sink.out() << "C_" << i << " " << render_cycle(cycles[i]) << "\n";
    sink.out() << cycles.size() << " cycles\n";
  }
  return 0;
}

int run_machine(const CommonArgs& a) {
  Params p(a.n, a.b);
  auto machine = build_machine(p);
  Sink sink(a.out_path);
  switch (parse_format(a.format)) {
    case Format::dot:
      sink.out() << to_dot(machine);
      break;
    case Format::json_lines: {
      ordered_json j;
      j["schema_version"] = kSchemaVersion;
      j["n"] = p.n;
      j["b"] = p.b;
      j["transitions"] = ordered_json::array();
      for (const auto& [edge, labels] : machine.labels) {
        ordered_json t;
        t["from"] = edge.first;
        t["to"] = edge.second;
        t["labels"] = ordered_json::array();
        for (const auto& [d1, d2] : labels) t["labels"].push_back({d1, d2});
        j["transitions"].push_back(t);
      }
      sink.out() << j.dump() << "\n";
      break;
    }
    case Format::table:
      for (const auto& [edge, labels] : machine.labels) {
        sink.out() << edge.first << " -> " << edge.second << "  ";
        for (std::size_t i = 0; i < labels.size(); ++i) {
          if (i) sink.out() << ",";
          sink.out() << "(" << labels[i].first << "," << labels[i].second << ")";
        }
        sink.out() << "\n";
      }
      break;
  }
  return 0;
}

int run_images(const CommonArgs& a, int max_cycle_length) {
  Params p(a.n, a.b);
  auto machine = build_machine(p);
  auto cycles = enumerate_cycles(build_mother_graph(p));
  Sink sink(a.out_path);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (max_cycle_length > 0 && cycles[i].length() > max_cycle_length) continue;
    auto img = cycle_image(cycles[i], machine);
    sink.out() << "C_" << i << " " << render_cycle(cycles[i])
               << (is_viable(img) ? "  viable " : "  not viable ");
    bool first = true;
    for (const auto& [edge, labels] : img.labels) {
      for (const auto& [d1, d2] : labels) {
        if (!first) sink.out() << " ";
        sink.out() << edge.first << "->" << edge.second << "(" << d1 << "," << d2 << ")";
        first = false;
      }
    }
    sink.out() << "\n";
  }
  return 0;
}

int run_find(const CommonArgs& a, int length) {
  Params p(a.n, a.b);
  auto res = find_all(p, length, search_options(a));
  Sink sink(a.out_path);
  return emit_found(sink, res, parse_format(a.format));
}

int run_generate(const CommonArgs& a, int max_length) {
  Params p(a.n, a.b);
  auto res = generate_from_unions(p, max_length, search_options(a));
  Sink sink(a.out_path);
  return emit_found(sink, res, parse_format(a.format));
}

int run_strings(const CommonArgs& a, const std::string& pairs) {
  Params p(a.n, a.b);
  auto machine = build_machine(p);
  StringOptions opts;
  opts.allow_boundary_zeros = !a.no_boundary_zeros;
  opts.cap = a.cap;
  auto multiset = parse_pairs(pairs);
  auto res = enumerate_strings(multiset, machine, opts);
  Sink sink(a.out_path);
  for (const auto& s : res.strings) {
    sink.out() << render_string(s);
    if (auto w = string_to_witness(s, p)) sink.out() << "  " << equality_line(*w);
    sink.out() << "\n";
  }
  sink.out() << res.strings.size() << " strings\n";
  if (res.truncated) {
    std::cerr << "truncated: string cap reached; output is partial\n";
    return 3;
  }
  return 0;
}

int run_verify(const CommonArgs& a, const std::string& product, const std::string& multiplicand) {
  Params p(a.n, a.b);
  Sink sink(a.out_path);
  auto w = witness_from_args(p, product, multiplicand);
  if (!w) {
    // Distinguish "digits do not even permute" from a failed carry run.
    DigitString prod = parse_numeral(product, p.b);
    DigitString mult = parse_numeral(multiplicand, p.b);
    if (prod.sorted_digits() != mult.sorted_digits()) {
      sink.out() << "not a permutiple: digit multisets differ\n";
    } else {
      InputString s;
      for (int j = 0; j < prod.length(); ++j)
        s.inputs.emplace_back(prod.digits[j], mult.digits[j]);
      Permutation sigma = Permutation::identity(prod.length());
      auto chk = compute_carries(prod, [&] {
        std::vector<int> m(prod.digits.size(), -1);
        std::vector<char> used(prod.digits.size(), 0);
        for (std::size_t j = 0; j < mult.digits.size(); ++j)
          for (std::size_t i = 0; i < prod.digits.size(); ++i)
            if (!used[i] && prod.digits[i] == mult.digits[j]) {
              m[j] = static_cast<int>(i);
              used[i] = 1;
              break;
            }
        return Permutation(m);
      }(), p);
      sink.out() << "not a permutiple: " << chk.reason() << " at place " << chk.fail_index
                 << "\n";
    }
    return 1;
  }
  sink.out() << equality_line(*w) << "\n";
  sink.out() << "sigma " << render_permutation(w->sigma) << "\n";
  sink.out() << "carries " << render_carries(w->carries) << "\n";
  sink.out() << "OK\n";
  return 0;
}

int run_classify(const CommonArgs& a, const std::string& product,
                 const std::string& multiplicand) {
  Params p(a.n, a.b);
  auto w = witness_from_args(p, product, multiplicand);
  Sink sink(a.out_path);
  if (!w) {
    sink.out() << "not a permutiple\n";
    return 1;
  }
  auto classes = conjugacy_classes(*w, search_options(a));
  if (parse_format(a.format) == Format::json_lines) {
    for (std::size_t i = 0; i < classes.size(); ++i) {
      ordered_json j;
      j["schema_version"] = kSchemaVersion;
      j["class"] = i;
      j["keys"] = ordered_json::array();
      for (const auto& k : classes[i].keys) j["keys"].push_back(render_permutation(k));
      j["members"] = ordered_json::array();
      for (const auto& m : classes[i].members) {
        ordered_json mj;
        mj["product"] = digits_json(m.witness.digits);
        mj["multiplicand"] = digits_json(m.witness.multiplicand());
        j["members"].push_back(mj);
      }
      sink.out() << j.dump() << "\n";
    }
  } else {
    for (std::size_t i = 0; i < classes.size(); ++i) {
      sink.out() << "class " << i << " (" << classes[i].members.size() << " members; keys";
      for (const auto& k : classes[i].keys) sink.out() << " " << render_permutation(k);
      sink.out() << ")\n";
      for (const auto& m : classes[i].members)
        sink.out() << "  " << equality_line(m.witness) << "\n";
    }
    sink.out() << classes.size() << " classes\n";
  }
  return 0;
}

int run_palintiples(const CommonArgs& a, int max_length) {
  Params p(a.n, a.b);
  auto res = palintiples(p, max_length, search_options(a));
  Sink sink(a.out_path);
  if (parse_format(a.format) == Format::json_lines) {
    for (const auto& f : res.found) sink.out() << found_json(f).dump() << "\n";
  } else {
    for (const auto& f : res.found) sink.out() << equality_line(f.witness) << "\n";
    sink.out() << res.found.size() << " palintiples\n";
  }
  if (res.truncated) {
    std::cerr << "truncated: string cap reached; output is partial\n";
    return 3;
  }
  return 0;
}

int run_derived(const CommonArgs& a, const std::string& product,
                const std::string& multiplicand) {
  Params p(a.n, a.b);
  auto w = witness_from_args(p, product, multiplicand);
  Sink sink(a.out_path);
  if (!w) {
    sink.out() << "not a permutiple\n";
    return 1;
  }
  auto check = is_derived(*w);
  if (check.derived) {
    const auto& inner = check.derived->inner;
    sink.out() << "derived: " << equality_line(inner) << " (m=" << check.derived->multiplier
               << ")\n";
  } else {
    sink.out() << "not derived\n";
    if (check.near_miss_m_equals_n)
      sink.out() << "note: carry string rearranges at m=n, outside 1<m<n\n";
  }
  return 0;
}

int run_oracle(const CommonArgs& a, int length, std::uint64_t budget) {
  Params p(a.n, a.b);
  oracle::OracleOptions opts;
  opts.allow_boundary_zeros = !a.no_boundary_zeros;
  opts.budget = budget;
  opts.parallel = !a.serial;
  std::optional<oracle::OracleResult> scanned;
  try {
    scanned = oracle::brute_force(p, length, opts);
  } catch (const std::runtime_error& e) {
    std::cerr << "truncated: " << e.what() << "\n";
    return 3;
  }
  const auto& res = *scanned;
  Sink sink(a.out_path);
  if (parse_format(a.format) == Format::json_lines) {
    for (const auto& [prod, mult] : res.pairs) {
      ordered_json j;
      j["schema_version"] = kSchemaVersion;
      j["n"] = p.n;
      j["b"] = p.b;
      j["product"] = digits_json(prod);
      j["multiplicand"] = digits_json(mult);
      sink.out() << j.dump() << "\n";
    }
  } else {
    for (const auto& [prod, mult] : res.pairs)
      sink.out() << render_equality(prod, mult, p.n) << "\n";
    sink.out() << res.pairs.size() << " permutiples\n";
  }
  return 0;
}

int run_cross_check(const CommonArgs& a, int length, std::uint64_t budget) {
  Params p(a.n, a.b);
  oracle::OracleOptions opts;
  opts.allow_boundary_zeros = !a.no_boundary_zeros;
  opts.budget = budget;
  opts.parallel = !a.serial;
  std::optional<oracle::CrossCheckReport> checked;
  try {
    checked = oracle::cross_check(p, length, opts);
  } catch (const std::runtime_error& e) {
    std::cerr << "truncated: " << e.what() << "\n";
    return 3;
  }
  const auto& rep = *checked;
  Sink sink(a.out_path);
  sink.out() << "n=" << p.n << " b=" << p.b << " length=" << length << "\n";
  sink.out() << "agreed " << rep.agreed << "\n";
  for (const auto& [prod, mult] : rep.only_in_search)
    sink.out() << "only in search: " << render_equality(prod, mult, p.n) << "\n";
  for (const auto& [prod, mult] : rep.only_in_oracle)
    sink.out() << "only in oracle: " << render_equality(prod, mult, p.n) << "\n";
  sink.out() << "search " << rep.search_ms << " ms, oracle " << rep.oracle_ms << " ms\n";
  sink.out() << (rep.ok() ? "OK" : "MISMATCH") << "\n";
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permutiple search: mother-graph cycles and machine walks"};
  app.require_subcommand(1);

  CommonArgs args;
  int length = 0;
  int max_length = 0;
  int max_cycle_length = 0;
  std::uint64_t budget = 100'000'000;
  std::string pairs, product, multiplicand, highlight;

  auto* mother = app.add_subcommand("mother-graph", "digit graph of allowed pairs");
  add_common(mother, args);
  mother->add_option("--highlight", highlight, "edge list to mark, e.g. \"(2,8)(8,2)\"");

  auto* cycles = app.add_subcommand("cycles", "simple cycles of the mother graph");
  add_common(cycles, args);

  auto* machine = app.add_subcommand("machine", "carry-state machine over digit pairs");
  add_common(machine, args);

  auto* images = app.add_subcommand("images", "cycle images and viability verdicts");
  add_common(images, args, /*with_format=*/false);
  images->add_option("--max-cycle-length", max_cycle_length, "skip longer cycles (0 = all)");

  auto* find = app.add_subcommand("find", "all permutiples of one length (cycle combinations)");
  add_common(find, args);
  add_search_flags(find, args);
  find->add_option("--length", length, "digit count")->required();

  auto* generate = app.add_subcommand("generate", "all permutiples up to a length (image unions)");
  add_common(generate, args);
  add_search_flags(generate, args);
  generate->add_option("--max-length", max_length, "largest digit count")->required();

  auto* strings = app.add_subcommand("strings", "order an explicit pair multiset into walks");
  add_common(strings, args, /*with_format=*/false);
  strings->add_option("--pairs", pairs, "input multiset, e.g. \"(2,1)(0,2)(1,0)\"")->required();
  strings->add_flag("--no-boundary-zeros", args.no_boundary_zeros,
                    "drop walks ending in a zero component");
  strings->add_option("--cap", args.cap, "walk cap");

  auto* verify = app.add_subcommand("verify", "check one equality");
  add_common(verify, args, /*with_format=*/false);
  verify->add_option("product", product, "product numeral")->required();
  verify->add_option("multiplicand", multiplicand, "multiplicand numeral")->required();

  auto* classify = app.add_subcommand("classify", "conjugacy classes over an equality's digits");
  add_common(classify, args);
  add_search_flags(classify, args);
  classify->add_option("product", product, "product numeral")->required();
  classify->add_option("multiplicand", multiplicand, "multiplicand numeral")->required();

  auto* pal = app.add_subcommand("palintiples", "reversal permutiples up to a length");
  add_common(pal, args);
  add_search_flags(pal, args);
  pal->add_option("--max-length", max_length, "largest digit count")->required();

  auto* derived = app.add_subcommand("derived", "read the carry string as a smaller-base equality");
  add_common(derived, args, /*with_format=*/false);
  derived->add_option("product", product, "product numeral")->required();
  derived->add_option("multiplicand", multiplicand, "multiplicand numeral")->required();

  auto* orc = app.add_subcommand("oracle", "brute-force scan at one length");
  add_common(orc, args);
  orc->add_flag("--no-boundary-zeros", args.no_boundary_zeros, "drop leading-zero equalities");
  orc->add_flag("--serial", args.serial, "disable parallel scan");
  orc->add_option("--length", length, "digit count")->required();
  orc->add_option("--budget", budget, "maximum strings scanned");

  auto* cross = app.add_subcommand("cross-check", "search vs brute force at one length");
  add_common(cross, args, /*with_format=*/false);
  cross->add_flag("--no-boundary-zeros", args.no_boundary_zeros, "drop leading-zero equalities");
  cross->add_flag("--serial", args.serial, "disable parallelism");
  cross->add_option("--length", length, "digit count")->required();
  cross->add_option("--budget", budget, "maximum strings scanned");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (mother->parsed()) return run_mother_graph(args, highlight);
    if (cycles->parsed()) return run_cycles(args);
    if (machine->parsed()) return run_machine(args);
    if (images->parsed()) return run_images(args, max_cycle_length);
    if (find->parsed()) return run_find(args, length);
    if (generate->parsed()) return run_generate(args, max_length);
    if (strings->parsed()) return run_strings(args, pairs);
    if (verify->parsed()) return run_verify(args, product, multiplicand);
    if (classify->parsed()) return run_classify(args, product, multiplicand);
    if (pal->parsed()) return run_palintiples(args, max_length);
    if (derived->parsed()) return run_derived(args, product, multiplicand);
    if (orc->parsed()) return run_oracle(args, length, budget);
    if (cross->parsed()) return run_cross_check(args, length, budget);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

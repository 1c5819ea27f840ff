// Command-line front end: counting, pattern classification, decompositions,
// generators, reference oracles, a benchmark ladder, and a differential test
// driver. Exit codes: 2 for input errors, 1 for guard violations, 3 for
// internal consistency failures.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypercount/counting.hpp"
#include "hypercount/dagdecomp.hpp"
#include "hypercount/degeneracy.hpp"
#include "hypercount/errors.hpp"
#include "hypercount/generators.hpp"
#include "hypercount/io.hpp"
#include "hypercount/oracle.hpp"
#include "hypercount/patterns.hpp"
#include "hypercount/reductions.hpp"

namespace {

using namespace hypercount;
using Clock = std::chrono::steady_clock;

long long parse_level(const std::string& text) {
  if (text == "inf") return kLInf;
  if (!text.empty() && text.find_first_not_of("0123456789") == std::string::npos) {
    errno = 0;
    long long value = std::strtoll(text.c_str(), nullptr, 10);
    if (errno == 0) return value;
  }
  throw input_error("--l expects a nonnegative integer or 'inf', got '" + text + "'");
}

std::string level_text(long long l) {
  return l >= kLInf ? "inf" : std::to_string(l);
}

int resolve_threads(int flag_value) {
  if (flag_value != 0) {
    if (flag_value < 0) throw input_error("--threads must be positive");
    return flag_value;
  }
  const char* env = std::getenv("HYPERCOUNT_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  long value = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || value <= 0 || value > 4096)
    throw input_error(std::string("HYPERCOUNT_THREADS must be a positive integer, got '") +
                      env + "'");
  return static_cast<int>(value);
}

long long whole_millis(Clock::time_point t0, Clock::time_point t1) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
}

std::string label_list(const std::vector<std::string>& labels, const std::vector<int>& ids) {
  std::string out;
  for (int id : ids) {
    if (!out.empty()) out += ' ';
    out += labels[id];
  }
  return out;
}

struct CsvRow {
  long long n = 0;
  long long m = 0;
  int kappa_l = 0;
  std::string pattern;
  std::string l;
  std::string mode;
  long long count = 0;
  long long millis = 0;
};

void write_csv(std::ostream& out, const std::vector<CsvRow>& rows) {
  out << "n,m,kappa_l,pattern,l,mode,count,millis\n";
  for (const CsvRow& r : rows)
    out << r.n << ',' << r.m << ',' << r.kappa_l << ',' << r.pattern << ',' << r.l << ','
        << r.mode << ',' << r.count << ',' << r.millis << '\n';
}

void write_csv_file(const std::string& path, const std::vector<CsvRow>& rows) {
  std::ofstream out(path);
  if (!out) throw input_error("--csv: cannot open '" + path + "' for writing");
  write_csv(out, rows);
}

long long to_count(const Rational& total) {
  if (boost::multiprecision::denominator(total) != 1)
    throw internal_error("count aggregation left a non-integer total");
  BigInt value = boost::multiprecision::numerator(total);
  if (value < std::numeric_limits<long long>::min() ||
      value > std::numeric_limits<long long>::max())
    throw guard_error("count exceeds the 64-bit result range");
  return static_cast<long long>(value);
}

// Every pattern edge arity must occur among the input arities for an
// arity-preserving homomorphism to exist at all.
bool arity_feasible(const Hypergraph& term, const std::vector<char>& present) {
  for (const Edge& e : term.edges()) {
    std::size_t a = e.size();
    if (a >= present.size() || !present[a]) return false;
  }
  return true;
}

int run_count(const std::string& mode, const std::string& level, const std::string& pattern_path,
              const std::string& input_path, int threads_flag, const std::string& csv_path) {
  long long l = parse_level(level);
  int threads = resolve_threads(threads_flag);
  HgFile pattern = load_hg_file(pattern_path);
  HgFile input = load_hg_file(input_path);
  Clock::time_point t_all = Clock::now();
  DegeneracyResult ord = compute_ordering(input.hg, l);
  std::cout << "input: n=" << input.hg.vertex_count() << " m=" << input.hg.edge_count()
            << " kappa_" << level_text(l) << "=" << ord.kappa_l << "\n";
  std::cout << "pattern: n=" << pattern.hg.vertex_count()
            << " m=" << pattern.hg.edge_count() << "\n";

  std::vector<char> present(static_cast<std::size_t>(input.hg.rank()) + 1, 0);
  for (const Edge& e : input.hg.edges()) present[e.size()] = 1;
  Rational total = 0;
  if (mode == "hom") {
    Dah gd = orient(input.hg, ord.ordering);
    std::vector<WeightedPattern> terms = contract_set(pattern.hg);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      Clock::time_point t0 = Clock::now();
      BigInt value = 0;
      if (arity_feasible(terms[i].hg, present)) {
        for (const OrientationClass& cls : orientation_classes(terms[i].hg))
          value += BigInt(cls.size) * count_dah_homs(cls.rep, gd, l);
      }
      total += terms[i].coeff * Rational(value);
      std::cout << "term " << i + 1 << "/" << terms.size() << ": n="
                << terms[i].hg.vertex_count() << " m=" << terms[i].hg.edge_count()
                << " coeff=" << terms[i].coeff << " value=" << value
                << " millis=" << whole_millis(t0, Clock::now()) << "\n";
    }
  } else {
    std::vector<WeightedPattern> terms = quotient_set(pattern.hg);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      Clock::time_point t0 = Clock::now();
      long long value = count_homs(input.hg, terms[i].hg, l, threads);
      total += terms[i].coeff * value;
      std::cout << "term " << i + 1 << "/" << terms.size() << ": n="
                << terms[i].hg.vertex_count() << " m=" << terms[i].hg.edge_count()
                << " coeff=" << terms[i].coeff << " value=" << value
                << " millis=" << whole_millis(t0, Clock::now()) << "\n";
    }
  }
  long long count = to_count(total);
  long long millis = whole_millis(t_all, Clock::now());
  std::cout << "count=" << count << "\n";
  std::cout << "millis=" << millis << "\n";
  if (!csv_path.empty())
    write_csv_file(csv_path, {{input.hg.vertex_count(), input.hg.edge_count(), ord.kappa_l,
                               pattern_path, level_text(l), mode, count, millis}});
  return 0;
}

void print_decomposition(const std::vector<std::string>& labels,
                         const OrientedDecomposition& od) {
  std::cout << "tau=" << od.tau << "\n";
  std::cout << "ordering= " << label_list(labels, od.ordering) << "\n";
  for (std::size_t b = 0; b < od.decomposition.bags.size(); ++b)
    std::cout << "bag " << b << ": {" << label_list(labels, od.decomposition.bags[b])
              << "} parent=" << od.decomposition.parent[b] << "\n";
}

int run_classify(const std::string& level, const std::string& path) {
  long long l = parse_level(level);
  HgFile file = load_hg_file(path);
  ClassifyReport report = classify(file.hg, l);
  std::cout << "its_free=" << (report.its_free ? "true" : "false") << "\n";
  std::cout << "tau=" << report.tau << "\n";
  if (report.licl_value) std::cout << "licl=" << *report.licl_value << "\n";
  if (!report.its_free) {
    const ItsFreeResult& d = report.detail;
    auto to_h = [&](const std::vector<int>& trimmed_ids) {
      std::vector<int> out;
      for (int v : trimmed_ids) out.push_back(d.trimmed_to_h[v]);
      return out;
    };
    std::cout << "witness_subset= " << label_list(file.labels, d.subset) << "\n";
    std::cout << "witness_core= " << label_list(file.labels, to_h(d.witness.core)) << "\n";
    for (std::size_t i = 0; i < d.witness.components.size(); ++i) {
      std::cout << "component " << i << ": vertices= "
                << label_list(file.labels, to_h(d.witness.components[i])) << "; connectors=";
      for (int edge_index : d.witness.connectors[i])
        std::cout << " {" << label_list(file.labels, to_h(d.trimmed.edge(edge_index))) << "}";
      std::cout << "\n";
    }
    std::cout << "assignment=";
    for (std::size_t c = 0; c < d.witness.core.size(); ++c)
      std::cout << " " << file.labels[d.trimmed_to_h[d.witness.core[c]]] << "->component "
                << d.witness.assignment[c];
    std::cout << "\n";
  } else {
    print_decomposition(file.labels, l_dag_treewidth_report(file.hg, l));
  }
  return 0;
}

int run_dtw(const std::string& level, const std::string& path) {
  long long l = parse_level(level);
  HgFile file = load_hg_file(path);
  print_decomposition(file.labels, l_dag_treewidth_report(file.hg, l));
  return 0;
}

int run_degeneracy(const std::string& level, const std::string& path, bool emit_ordering) {
  long long l = parse_level(level);
  HgFile file = load_hg_file(path);
  DegeneracyResult r = compute_ordering(file.hg, l);
  std::cout << "kappa_" << level_text(l) << "=" << r.kappa_l << "\n";
  std::cout << "max_l_outdegree=" << r.max_l_outdegree << "\n";
  if (emit_ordering) std::cout << "ordering= " << label_list(file.labels, r.ordering) << "\n";
  return 0;
}

void save_result(const Hypergraph& hg, const std::string& path) {
  save_hg_file(to_hg_file(hg), path);
  std::cout << "wrote " << path << ": n=" << hg.vertex_count() << " m=" << hg.edge_count()
            << "\n";
}

int run_gen_random(int n, long long m, int rank, int bound, unsigned long long seed,
                   const std::string& out_path) {
  save_result(random_bounded_degeneracy(n, m, rank, bound, seed), out_path);
  return 0;
}

int run_gen_simplex(int k, const std::string& out_path) {
  save_result(build_simplex(k), out_path);
  return 0;
}

int run_gen_tensor(const std::string& a_path, const std::string& b_path,
                   const std::string& out_path) {
  HgFile a = load_hg_file(a_path);
  HgFile b = load_hg_file(b_path);
  save_result(tensor_product(a.hg, b.hg), out_path);
  return 0;
}

int run_gen_gadget(const std::string& pattern_path, const std::string& witness,
                   const std::string& input_path, const std::string& level,
                   const std::string& out_path) {
  if (witness != "auto")
    throw input_error("--witness supports only 'auto', got '" + witness + "'");
  long long l = parse_level(level);
  HgFile pattern = load_hg_file(pattern_path);
  HgFile input = load_hg_file(input_path);
  GadgetSpec spec = make_gadget_spec(pattern.hg, l);
  ColoredHypergraph gadget = build_gadget(to_colored(input), spec, l);
  save_hg_file(to_hg_file(gadget), out_path);
  std::cout << "wrote " << out_path << ": n=" << gadget.hg.vertex_count()
            << " m=" << gadget.hg.edge_count() << " core_size=" << spec.core.size()
            << " degeneracy=" << gadget_degeneracy_check(gadget, l) << "\n";
  return 0;
}

int run_oracle(const std::string& kind, const std::string& pattern_path,
               const std::string& input_path, int k) {
  HgFile input = load_hg_file(input_path);
  long long count = 0;
  if (kind == "hom" || kind == "sub" || kind == "colhom") {
    if (pattern_path.empty()) throw input_error("oracle " + kind + " requires --pattern");
    HgFile pattern = load_hg_file(pattern_path);
    if (kind == "hom")
      count = brute_hom_count(input.hg, pattern.hg);
    else if (kind == "sub")
      count = brute_sub_count(input.hg, pattern.hg);
    else
      count = brute_colorful_hom_count(to_colored(input), pattern.hg);
  } else {
    count = brute_simplex_count(input.hg, k);
  }
  std::cout << "count=" << count << "\n";
  return 0;
}

int run_bench(const std::string& sizes_text, int reps, unsigned long long seed,
              long long edge_factor, int rank, int bound, const std::string& level,
              const std::string& mode, const std::string& pattern_path, int threads_flag,
              const std::string& csv_path) {
  long long l = parse_level(level);
  int threads = resolve_threads(threads_flag);
  std::vector<int> sizes;
  std::stringstream ss(sizes_text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw input_error("--sizes expects a comma-separated list of integers, got '" +
                        sizes_text + "'");
    sizes.push_back(std::atoi(item.c_str()));
  }
  if (sizes.empty()) throw input_error("--sizes expects at least one size");

  Hypergraph pattern(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  std::string pattern_name = "C5";
  if (!pattern_path.empty()) {
    pattern = load_hg_file(pattern_path).hg;
    pattern_name = pattern_path;
  }

  std::vector<CsvRow> rows;
  for (int n : sizes) {
    Hypergraph g = random_bounded_degeneracy(n, edge_factor * n, rank, bound, seed);
    int kappa = compute_ordering(g, l).kappa_l;
    for (int rep = 0; rep < reps; ++rep) {
      Clock::time_point t0 = Clock::now();
      long long count = mode == "hom" ? count_homs(g, pattern, l, threads)
                                      : count_subs(g, pattern, l, threads);
      long long millis = whole_millis(t0, Clock::now());
      rows.push_back({g.vertex_count(), g.edge_count(), kappa, pattern_name, level_text(l),
                      mode, count, millis});
      std::cerr << "bench n=" << n << " rep=" << rep << " count=" << count
                << " millis=" << millis << "\n";
    }
  }
  if (csv_path.empty())
    write_csv(std::cout, rows);
  else
    write_csv_file(csv_path, rows);
  return 0;
}

// Compares the counting engine against the exhaustive oracles on seeded
// random instances; any disagreement is an internal consistency failure.
int run_difftest(int trials, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  const long long levels[] = {0, 1, 2, kLInf};
  for (int trial = 0; trial < trials; ++trial) {
    int pn = 2 + static_cast<int>(rng() % 3);
    Hypergraph pattern = random_hypergraph(pn, 1 + rng() % 4, 2 + static_cast<int>(rng() % 2),
                                           rng());
    int gn = 3 + static_cast<int>(rng() % 5);
    Hypergraph input = random_hypergraph(gn, rng() % 10, 2 + static_cast<int>(rng() % 2),
                                         rng());

    long long hom_oracle = brute_hom_count(input, pattern);
    for (long long l : levels) {
      long long hom_engine = count_homs(input, pattern, l);
      if (hom_engine != hom_oracle)
        throw internal_error("difftest trial " + std::to_string(trial) + ": hom mismatch at l=" +
                             level_text(l) + " engine=" + std::to_string(hom_engine) +
                             " oracle=" + std::to_string(hom_oracle));
    }

    long long sub_oracle = brute_sub_count(input, pattern);
    for (long long l : {0LL, kLInf}) {
      long long sub_engine = count_subs(input, pattern, l);
      if (sub_engine != sub_oracle)
        throw internal_error("difftest trial " + std::to_string(trial) + ": sub mismatch at l=" +
                             level_text(l) + " engine=" + std::to_string(sub_engine) +
                             " oracle=" + std::to_string(sub_oracle));
    }

    for (long long l : {0LL, 1LL, kLInf}) {
      DegeneracyResult ord = compute_ordering(input, l);
      int exact = brute_degeneracy(input, l);
      if (ord.kappa_l != exact)
        throw internal_error("difftest trial " + std::to_string(trial) +
                             ": degeneracy mismatch at l=" + level_text(l) + " greedy=" +
                             std::to_string(ord.kappa_l) + " exact=" + std::to_string(exact));
      if (input.rank() > 0 &&
          ord.max_l_outdegree > ord.kappa_l * input.rank())
        throw internal_error("difftest trial " + std::to_string(trial) +
                             ": out-degree bound violated at l=" + level_text(l));
    }

    if (gn >= pn) {
      std::vector<int> color(gn);
      for (int v = 0; v < gn; ++v) color[v] = v % pn;
      ColoredHypergraph colored{input, color};
      long long colorful_engine = colorful_hom_count(
          colored, pattern, kLInf,
          [](const Hypergraph& g, const Hypergraph& h, long long l) {
            return count_homs(g, h, l);
          });
      long long colorful_oracle = brute_colorful_hom_count(colored, pattern);
      if (colorful_engine != colorful_oracle)
        throw internal_error("difftest trial " + std::to_string(trial) +
                             ": colorful hom mismatch engine=" +
                             std::to_string(colorful_engine) + " oracle=" +
                             std::to_string(colorful_oracle));
    }

    if ((trial + 1) % 50 == 0)
      std::cerr << "difftest: " << trial + 1 << "/" << trials << " trials passed\n";
  }
  std::cout << "difftest: " << trials << " trials passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact hypergraph pattern counting on degenerate inputs"};
  app.require_subcommand(1);

  std::string mode = "hom", level = "inf", pattern_path, input_path, csv_path;
  int threads_flag = 0;
  CLI::App* count = app.add_subcommand("count", "Count pattern occurrences in an input");
  count->add_option("--mode", mode, "hom or sub")->check(CLI::IsMember({"hom", "sub"}));
  count->add_option("--l", level, "trimming level (integer or 'inf')");
  count->add_option("--pattern", pattern_path, "pattern .hg file")->required();
  count->add_option("--input", input_path, "input .hg file")->required();
  count->add_option("--threads", threads_flag, "engine fan-out (default HYPERCOUNT_THREADS)");
  count->add_option("--csv", csv_path, "write a CSV row to this file");

  std::string classify_level = "inf", classify_path;
  CLI::App* classify_cmd = app.add_subcommand("classify", "Obstruction dichotomy report");
  classify_cmd->add_option("--l", classify_level, "trimming level (integer or 'inf')");
  classify_cmd->add_option("pattern", classify_path, "pattern .hg file")->required();

  std::string dtw_level = "inf", dtw_path;
  CLI::App* dtw_cmd = app.add_subcommand("dtw", "DAG-treewidth and a witness decomposition");
  dtw_cmd->add_option("--l", dtw_level, "trimming level (integer or 'inf')");
  dtw_cmd->add_option("pattern", dtw_path, "pattern .hg file")->required();

  std::string deg_level = "inf", deg_path;
  bool emit_ordering = false;
  CLI::App* deg_cmd = app.add_subcommand("degeneracy", "Peeling value and ordering");
  deg_cmd->add_option("--l", deg_level, "trimming level (integer or 'inf')");
  deg_cmd->add_flag("--emit-ordering", emit_ordering, "also print the deletion order");
  deg_cmd->add_option("input", deg_path, "input .hg file")->required();

  CLI::App* gen = app.add_subcommand("gen", "Instance generators");
  gen->require_subcommand(1);
  int gen_n = 0, gen_rank = 2, gen_bound = 1, gen_k = 2;
  long long gen_m = 0;
  unsigned long long gen_seed = 1;
  std::string gen_out, gadget_pattern, gadget_witness = "auto", gadget_input,
              gadget_level = "inf", tensor_a, tensor_b;
  CLI::App* gen_random = gen->add_subcommand("random", "Bounded-degeneracy random input");
  gen_random->add_option("--n", gen_n, "vertex count")->required();
  gen_random->add_option("--m", gen_m, "edge count")->required();
  gen_random->add_option("--rank", gen_rank, "maximum edge arity");
  gen_random->add_option("--degeneracy", gen_bound, "peeling bound")->required();
  gen_random->add_option("--seed", gen_seed, "random seed");
  gen_random->add_option("-o,--out", gen_out, "output .hg file")->required();
  CLI::App* gen_simplex = gen->add_subcommand("simplex", "k+1 vertices, all k-subsets");
  gen_simplex->add_option("--k", gen_k, "simplex dimension")->required();
  gen_simplex->add_option("-o,--out", gen_out, "output .hg file")->required();
  CLI::App* gen_tensor = gen->add_subcommand("tensor", "Tensor product of two inputs");
  gen_tensor->add_option("a", tensor_a, "first .hg file")->required();
  gen_tensor->add_option("b", tensor_b, "second .hg file")->required();
  gen_tensor->add_option("-o,--out", gen_out, "output .hg file")->required();
  CLI::App* gen_gadget = gen->add_subcommand("gadget", "Hardness gadget for a colored input");
  gen_gadget->add_option("--pattern", gadget_pattern, "pattern .hg file")->required();
  gen_gadget->add_option("--witness", gadget_witness, "witness selection (auto)");
  gen_gadget->add_option("--input", gadget_input, "colored input .hg file")->required();
  gen_gadget->add_option("--l", gadget_level, "trimming level (integer or 'inf')");
  gen_gadget->add_option("-o,--out", gen_out, "output .hg file")->required();

  std::string oracle_kind, oracle_pattern, oracle_input;
  int oracle_k = 2;
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Exhaustive reference counters");
  oracle_cmd->add_option("kind", oracle_kind, "hom, sub, colhom, or simplex")
      ->required()
      ->check(CLI::IsMember({"hom", "sub", "colhom", "simplex"}));
  oracle_cmd->add_option("--pattern", oracle_pattern, "pattern .hg file");
  oracle_cmd->add_option("--input", oracle_input, "input .hg file")->required();
  oracle_cmd->add_option("--k", oracle_k, "simplex dimension");

  std::string bench_sizes = "1000,10000,100000", bench_level = "0", bench_mode = "hom",
              bench_pattern, bench_csv;
  int bench_reps = 3, bench_rank = 2, bench_bound = 4, bench_threads = 0;
  long long bench_factor = 3;
  unsigned long long bench_seed = 42;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Deterministic benchmark ladder CSV");
  bench_cmd->add_option("--sizes", bench_sizes, "comma-separated vertex counts");
  bench_cmd->add_option("--reps", bench_reps, "repetitions per size");
  bench_cmd->add_option("--seed", bench_seed, "generator seed");
  bench_cmd->add_option("--edge-factor", bench_factor, "edges per vertex");
  bench_cmd->add_option("--rank", bench_rank, "maximum edge arity");
  bench_cmd->add_option("--degeneracy", bench_bound, "peeling bound");
  bench_cmd->add_option("--l", bench_level, "trimming level (integer or 'inf')");
  bench_cmd->add_option("--mode", bench_mode, "hom or sub")
      ->check(CLI::IsMember({"hom", "sub"}));
  bench_cmd->add_option("--pattern", bench_pattern, "pattern .hg file (default C5)");
  bench_cmd->add_option("--threads", bench_threads, "engine fan-out");
  bench_cmd->add_option("--csv", bench_csv, "CSV output file (default stdout)");

  int diff_trials = 200;
  unsigned long long diff_seed = 7;
  CLI::App* diff_cmd = app.add_subcommand("difftest", "Engine versus oracle on random instances");
  diff_cmd->add_option("--trials", diff_trials, "number of random instances");
  diff_cmd->add_option("--seed", diff_seed, "random seed");

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      int code = app.exit(e);
      return code == 0 ? 0 : 2;
    }
    if (count->parsed())
      return run_count(mode, level, pattern_path, input_path, threads_flag, csv_path);
    if (classify_cmd->parsed()) return run_classify(classify_level, classify_path);
    if (dtw_cmd->parsed()) return run_dtw(dtw_level, dtw_path);
    if (deg_cmd->parsed()) return run_degeneracy(deg_level, deg_path, emit_ordering);
    if (gen->parsed()) {
      if (gen_random->parsed())
        return run_gen_random(gen_n, gen_m, gen_rank, gen_bound, gen_seed, gen_out);
      if (gen_simplex->parsed()) return run_gen_simplex(gen_k, gen_out);
      if (gen_tensor->parsed()) return run_gen_tensor(tensor_a, tensor_b, gen_out);
      return run_gen_gadget(gadget_pattern, gadget_witness, gadget_input, gadget_level,
                            gen_out);
    }
    if (oracle_cmd->parsed())
      return run_oracle(oracle_kind, oracle_pattern, oracle_input, oracle_k);
    if (bench_cmd->parsed())
      return run_bench(bench_sizes, bench_reps, bench_seed, bench_factor, bench_rank,
                       bench_bound, bench_level, bench_mode, bench_pattern, bench_threads,
                       bench_csv);
    return run_difftest(diff_trials, diff_seed);
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const guard_error& e) {
    std::cerr << "guard error: " << e.what() << "\n";
    return 1;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}

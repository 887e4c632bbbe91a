// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "poslam.h"

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct TermDeleter {
  void operator()(poslam_term* t) const { poslam_term_free(t); }
};
using TermPtr = std::unique_ptr<poslam_term, TermDeleter>;

struct Owned {
  char* s = nullptr;
  ~Owned() { poslam_string_free(s); }
};

int fail(poslam_status st) {
  std::cerr << "poslam: " << poslam_last_error() << "\n";
  switch (st) {
    case POSLAM_ERR_PARSE:
    case POSLAM_ERR_ARGUMENT:
    case POSLAM_ERR_PRECONDITION: return kUsage;
    default: return kViolation;
  }
}

// "-" reads the term from standard input.
std::string term_text(const std::string& arg) {
  if (arg != "-") return arg;
  return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

std::uint64_t default_seed() {
  const char* env = std::getenv("POSLAM_SEED");
  if (!env || !*env) return 0;
  return std::strtoull(env, nullptr, 10);
}

int load(const std::string& arg, bool translated, TermPtr& out) {
  poslam_term* t = nullptr;
  if (poslam_status st = poslam_parse(term_text(arg).c_str(), &t)) return fail(st);
  out.reset(t);
  if (translated) {
    poslam_term* u = nullptr;
    if (poslam_status st = poslam_translate(out.get(), &u)) return fail(st);
    out.reset(u);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduction engines and property checks for the value substitution and positive "
               "lambda calculi"};
  app.require_subcommand(1);

  std::string term;
  std::string calculus = "vsc";
  bool no_var_values = false;
  bool translated = false;

  auto* reduce = app.add_subcommand("reduce", "Reduce a term and print the trace");
  std::string strategy = "lo";
  std::size_t fuel = 1000;
  std::string trace_format = "text";
  reduce->add_option("term", term, "Term, or - for standard input")->required();
  reduce->add_option("--calculus", calculus, "vsc, vsc-core, opos or oxpos")
      ->check(CLI::IsMember({"vsc", "vsc-core", "opos", "oxpos"}));
  reduce->add_option("--strategy", strategy, "lo, random, random:SEED or priority:L1,L2,...");
  reduce->add_option("--fuel", fuel, "Maximum number of steps");
  reduce->add_flag("--no-var-values", no_var_values, "Variables are not values");
  reduce->add_flag("--translate", translated, "Translate the term first");
  reduce->add_option("--trace", trace_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* translate = app.add_subcommand("translate", "Translate a term to the explicit positive calculus");
  translate->add_option("term", term, "Term, or - for standard input")->required();

  auto* classify = app.add_subcommand("classify", "List redexes with usefulness verdicts");
  classify->add_option("term", term, "Term, or - for standard input")->required();
  classify->add_option("--calculus", calculus, "vsc, vsc-core, opos or oxpos")
      ->check(CLI::IsMember({"vsc", "vsc-core", "opos", "oxpos"}));
  classify->add_flag("--no-var-values", no_var_values, "Variables are not values");

  auto* type_of = app.add_subcommand("typeof", "Principal simple typing of a positive term");
  type_of->add_option("term", term, "Term, or - for standard input")->required();
  type_of->add_flag("--translate", translated, "Translate the term first");

  auto* graph = app.add_subcommand("graph", "Explore the reduction graph of a term");
  std::size_t cap = 1000;
  bool dot = false;
  graph->add_option("term", term, "Term, or - for standard input")->required();
  graph->add_option("--calculus", calculus, "vsc, vsc-core, opos or oxpos")
      ->check(CLI::IsMember({"vsc", "vsc-core", "opos", "oxpos"}));
  graph->add_option("--cap", cap, "Node cap");
  graph->add_flag("--dot", dot, "Print DOT instead of a summary");
  graph->add_flag("--no-var-values", no_var_values, "Variables are not values");
  graph->add_flag("--translate", translated, "Translate the term first");

  auto* check = app.add_subcommand("check", "Run a property suite");
  std::string suite = "all";
  std::size_t size = 0, count = 0;
  std::uint64_t seed = default_seed();
  unsigned threads = 0;
  bool list = false;
  check->add_option("--suite", suite, "Suite name, or all");
  check->add_option("--size", size, "Enumeration bound in nodes (0: suite default)");
  check->add_option("--seed", seed, "Random seed (default: POSLAM_SEED or 0)");
  check->add_option("--count", count, "Random instances (0: suite default)");
  check->add_option("--threads", threads, "Worker threads (0: all cores)");
  check->add_flag("--list", list, "List suite names");

  auto* bench = app.add_subcommand("bench-omega", "Count steps of the looping combinator");
  std::size_t m_steps = 10;
  std::string variant = "vars-as-values";
  bench->add_option("--m-steps", m_steps, "Number of multiplicative steps")->check(CLI::PositiveNumber);
  bench->add_option("--variant", variant, "vars-as-values, no-var-values or oxpos")
      ->check(CLI::IsMember({"vars-as-values", "no-var-values", "oxpos"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const int vars = no_var_values ? 0 : 1;
  TermPtr t;
  Owned text;

  if (reduce->parsed()) {
    if (int rc = load(term, translated, t)) return rc;
    if (strategy == "random") strategy = "random:" + std::to_string(default_seed());
    poslam_reduce_options opts{calculus.c_str(), vars, strategy.c_str(), fuel,
                               trace_format == "json"};
    if (poslam_status st = poslam_reduce(t.get(), &opts, &text.s, nullptr)) return fail(st);
    std::cout << text.s;
    return kOk;
  }
  if (translate->parsed()) {
    if (int rc = load(term, true, t)) return rc;
    if (poslam_status st = poslam_print(t.get(), &text.s)) return fail(st);
    std::cout << text.s << "\n";
    return kOk;
  }
  if (classify->parsed()) {
    if (int rc = load(term, false, t)) return rc;
    if (poslam_status st = poslam_classify(t.get(), calculus.c_str(), vars, &text.s)) return fail(st);
    std::cout << text.s;
    return kOk;
  }
  if (type_of->parsed()) {
    if (int rc = load(term, translated, t)) return rc;
    int typable = 0;
    if (poslam_status st = poslam_typeof(t.get(), &typable, &text.s)) return fail(st);
    if (typable) std::cout << text.s << "\n";
    else std::cout << "untypable: " << text.s << "\n";
    return kOk;
  }
  if (graph->parsed()) {
    if (int rc = load(term, translated, t)) return rc;
    if (poslam_status st = poslam_graph(t.get(), calculus.c_str(), vars, cap, dot, &text.s))
      return fail(st);
    std::cout << text.s;
    return kOk;
  }
  if (check->parsed()) {
    if (list) {
      if (poslam_status st = poslam_suite_names(&text.s)) return fail(st);
      std::cout << text.s;
      return kOk;
    }
    poslam_check_options opts{suite.c_str(), size, seed, count, threads};
    std::size_t violations = 0;
    if (poslam_status st = poslam_check(&opts, &text.s, &violations)) return fail(st);
    std::cout << text.s;
    return violations ? kViolation : kOk;
  }
  if (bench->parsed()) {
    poslam_omega_counts c{};
    if (poslam_status st = poslam_bench_omega(m_steps, variant.c_str(), &c)) return fail(st);
    std::cout << "{\"variant\":\"" << variant << "\",\"m_steps\":" << c.m_steps
              << ",\"e_steps\":" << c.e_steps << ",\"gc_steps\":" << c.gc_steps
              << ",\"total_steps\":" << c.total_steps << "}\n";
    return kOk;
  }
  return kUsage;
}

// ipd: interval posets of permutations and their polygon dissections.
//
//   ipd analyze 314297856 [--dot out.dot] [--json out.json]
//   ipd convert fixtures/tengon_dissection.json --to poset [--map phi|psi]
//   ipd enumerate all --from 2 --to 7 [--methods formula,brute_perm] [--format csv|json]
//   ipd verify --max-n 6 [--suites roundtrip_phi,realize] [--fixture poset.json]
//
// Exit codes: 0 pass, 1 verification failure, 2 parse error, 3 domain
// violation, 4 method mismatch, 5 size cap exceeded.

#include <chrono>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ipd/bijection.hpp"
#include "ipd/enumeration.hpp"
#include "ipd/error.hpp"
#include "ipd/io.hpp"
#include "ipd/parallel.hpp"
#include "ipd/verify.hpp"

namespace {

using namespace ipd;

enum Exit : int {
  kPass = 0,
  kVerifyFailed = 1,
  kParse = 2,
  kDomain = 3,
  kMismatch = 4,
  kCap = 5,
};

int exit_code_for(ErrorCode code) {
  switch (code) {
  case ErrorCode::MalformedInput:
  case ErrorCode::NotAPermutation:
    return kParse;
  case ErrorCode::TooLarge:
    return kCap;
  default:
    return kDomain;
  }
}

struct RunReport {
  std::string command;
  bool passed = true;
  nlohmann::json rows = nlohmann::json::array();
  double wall_time = 0;

  std::string to_json() const {
    return nlohmann::json{{"command", command},
                          {"status", passed ? "pass" : "fail"},
                          {"rows", rows},
                          {"wall_time", wall_time}}
               .dump(2) +
           "\n";
  }
};

std::vector<std::string> split_list(const std::string &s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty())
      out.push_back(item);
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// --- analyze ---------------------------------------------------------------

struct AnalyzeOptions {
  std::string perm;
  std::string dot;
  std::string json;
};

int cmd_analyze(const AnalyzeOptions &opt, RunReport &report) {
  const auto p = parse_permutation(opt.perm);
  const auto P = build_poset(p);
  const auto c = classify(P);

  std::cout << "permutation: " << p << "\n";
  std::cout << "size: " << p.size() << "\n";
  std::cout << "intervals:";
  for (const auto &iv : P.intervals())
    std::cout << ' ' << iv;
  std::cout << "\nproper intervals:";
  for (const auto &iv : P.intervals())
    if (!iv.singleton() && iv != P.top())
      std::cout << ' ' << iv;
  std::cout << "\n";
  std::cout << "simple: " << yes_no(is_simple(p)) << "\n";
  std::cout << "separable: " << yes_no(is_separable(p)) << "\n";
  std::cout << "block-wise simple: " << yes_no(is_block_wise_simple(p)) << "\n";
  std::cout << "poset tree: " << yes_no(c.tree) << "\n";
  std::cout << "poset binary: " << yes_no(c.binary) << "\n";
  std::cout << "poset dual claw: " << yes_no(c.dual_claw) << "\n";
  std::cout << "poset argyle: " << yes_no(c.argyle) << "\n";
  std::cout << "dissection: " << dissection_to_json(phi(P));

  if (!opt.dot.empty())
    write_file(opt.dot, to_dot(P));
  if (!opt.json.empty())
    write_file(opt.json, poset_to_json(P));
  report.rows.push_back({{"permutation", p.str()}, {"intervals", P.size()}});
  return kPass;
}

// --- convert ---------------------------------------------------------------

struct ConvertOptions {
  std::string input;
  std::string to = "dissection";
  std::string map = "phi";
  std::string out;
  std::string svg;
  std::string dot;
};

std::string load_input(const std::string &input) {
  const auto first = input.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && input[first] == '{')
    return input;
  return read_file(input);
}

int cmd_convert(const ConvertOptions &opt, RunReport &report) {
  const auto text = load_input(opt.input);
  const bool use_psi = opt.map == "psi";
  std::string output;
  std::optional<Dissection> dissection;
  std::optional<IntervalPoset> poset;

  if (opt.to == "dissection") {
    poset = poset_from_json(text);
    if (auto v = validate_interval_poset(poset->intervals(), poset->n()); !v)
      throw Error(*v.reason, v.detail);
    dissection = use_psi ? psi(*poset) : phi(*poset);
    output = dissection_to_json(*dissection);
  } else {
    dissection = dissection_from_json(text);
    poset = use_psi ? b_poset(*dissection) : phi_inverse(*dissection);
    output = poset_to_json(*poset);
  }

  if (opt.out.empty())
    std::cout << output;
  else
    write_file(opt.out, output);
  if (!opt.svg.empty())
    write_file(opt.svg, render_svg(*dissection));
  if (!opt.dot.empty())
    write_file(opt.dot, to_dot(*poset));
  report.rows.push_back({{"to", opt.to}, {"map", opt.map}});
  return kPass;
}

// --- enumerate -------------------------------------------------------------

struct EnumerateOptions {
  std::string family;
  int from = 2;
  int to = 7;
  std::string methods;
  std::string format = "csv";
  std::string out;
  int workers = default_workers();
  bool big = false;
  bool permutations = false;
};

bool method_applies(Family f, Method m, int n, bool permutations) {
  switch (m) {
  case Method::Formula: return formula_count(f, n, permutations).has_value();
  case Method::BrutePerm: return true;
  case Method::BruteDissection: return !permutations && n + 1 <= default_subset_cap;
  case Method::StructuredDissection: return !permutations && f != Family::All;
  }
  return false;
}

int cmd_enumerate(const EnumerateOptions &opt, RunReport &report) {
  const auto family = parse_family(opt.family);
  if (!family)
    throw Error(ErrorCode::MalformedInput, "unknown family '" + opt.family + "'");
  if (opt.from < 1 || opt.to < opt.from)
    throw Error(ErrorCode::MalformedInput, "bad size range");

  const bool explicit_methods = !opt.methods.empty();
  std::vector<Method> methods;
  if (explicit_methods) {
    for (const auto &name : split_list(opt.methods)) {
      const auto m = parse_method(name);
      if (!m)
        throw Error(ErrorCode::MalformedInput, "unknown method '" + name + "'");
      methods.push_back(*m);
    }
  } else {
    methods = {Method::Formula, Method::BrutePerm, Method::BruteDissection,
               Method::StructuredDissection};
  }

  const int perm_cap = opt.big ? brute_perm_big_cap : brute_perm_cap;
  CountTable table;
  for (int n = opt.from; n <= opt.to; ++n) {
    for (const auto m : methods) {
      if (!method_applies(*family, m, n, opt.permutations)) {
        const bool over_cap =
            m == Method::BruteDissection && !opt.permutations && n + 1 > default_subset_cap;
        if (explicit_methods && over_cap)
          throw Error(ErrorCode::TooLarge, std::string(to_string(m)) + " needs n + 1 <= " +
                                               std::to_string(default_subset_cap));
        continue;
      }
      if (m == Method::BrutePerm && n > perm_cap) {
        if (explicit_methods)
          throw Error(ErrorCode::TooLarge, "brute_perm needs n <= " + std::to_string(perm_cap) +
                                               (opt.big ? "" : " (use --big for 10)"));
        continue;
      }
      if (m == Method::StructuredDissection && n + 1 > structured_cap) {
        if (explicit_methods)
          throw Error(ErrorCode::TooLarge, "structured_dissection needs n + 1 <= " +
                                               std::to_string(structured_cap));
        continue;
      }
      BigInt count;
      switch (m) {
      case Method::Formula: count = *formula_count(*family, n, opt.permutations); break;
      case Method::BrutePerm:
        count = brute_count(*family, n, opt.permutations, opt.workers, perm_cap);
        break;
      case Method::BruteDissection:
        count = dissection_count_by_subsets(n + 1, *family, opt.workers);
        break;
      case Method::StructuredDissection: count = dissection_count(n + 1, *family); break;
      }
      table.rows.push_back({*family, n, count, m});
    }
  }
  table.sort();

  const auto text = opt.format == "json" ? table.to_json() : table.to_csv();
  if (opt.out.empty())
    std::cout << text;
  else
    write_file(opt.out, text);

  for (const auto &row : table.rows)
    report.rows.push_back({{"family", to_string(row.family)},
                           {"n", row.n},
                           {"count", row.count.str()},
                           {"method", to_string(row.method)}});
  if (const auto bad = table.mismatch()) {
    std::cerr << "methods disagree for " << to_string(bad->first) << " at n = " << bad->second
              << "\n";
    report.passed = false;
    return kMismatch;
  }
  return kPass;
}

// --- verify ----------------------------------------------------------------

struct VerifyOptions {
  int max_n = 6;
  std::string suites;
  std::string fixture;
  int workers = default_workers();
  bool big = false;
};

int verify_fixture(const std::string &path, RunReport &report) {
  const auto text = read_file(path);
  const auto j = nlohmann::json::parse(text, nullptr, false);
  Validation v;
  if (j.is_object() && j.contains("m")) {
    const auto D = dissection_from_json(text);
    if (!is_diagonally_framed(D))
      v = {ErrorCode::NotFramed, "crossing chords without their frame"};
    else if (has_quadrilateral(D))
      v = {ErrorCode::HasQuadrilateral, "empty quadrilateral"};
  } else {
    const auto P = poset_from_json(text);
    v = validate_interval_poset(P.intervals(), P.n());
  }
  if (v) {
    std::cout << "fixture " << path << ": pass\n";
    report.rows.push_back({{"fixture", path}, {"status", "pass"}});
    return kPass;
  }
  std::cout << "fixture " << path << ": fail (" << to_string(*v.reason) << ": " << v.detail
            << ")\n";
  report.rows.push_back({{"fixture", path}, {"status", "fail"}, {"reason", to_string(*v.reason)}});
  report.passed = false;
  return kVerifyFailed;
}

int cmd_verify(const VerifyOptions &opt, RunReport &report) {
  if (!opt.fixture.empty())
    return verify_fixture(opt.fixture, report);

  const int cap = opt.big ? brute_perm_big_cap : brute_perm_cap;
  if (opt.max_n > cap)
    throw Error(ErrorCode::TooLarge, "--max-n above " + std::to_string(cap) +
                                         (opt.big ? "" : " needs --big"));
  std::vector<std::string> suites = split_list(opt.suites);
  if (suites.empty())
    for (auto s : suite_names())
      suites.emplace_back(s);

  int status = kPass;
  for (const auto &name : suites) {
    const auto r = run_suite(name, opt.max_n, opt.workers);
    std::cout << "suite " << r.name << ": " << (r.passed ? "pass" : "FAIL") << " (checked "
              << r.checked << ")\n";
    if (!r.passed) {
      std::cout << "  counterexample: " << r.counterexample;
      if (r.counterexample.empty() || r.counterexample.back() != '\n')
        std::cout << "\n";
      status = kVerifyFailed;
      report.passed = false;
    }
    report.rows.push_back({{"suite", r.name}, {"passed", r.passed}, {"checked", r.checked}});
  }
  return status;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Interval posets of permutations and diagonally framed polygon dissections"};
  app.require_subcommand(1);
  std::string report_path;
  app.add_option("--report", report_path, "Write a JSON run report (includes wall time)");

  AnalyzeOptions analyze;
  auto *a = app.add_subcommand("analyze", "Intervals and classification of a permutation");
  a->add_option("permutation", analyze.perm, "e.g. 314297856 or 2,4,1,3")->required();
  a->add_option("--dot", analyze.dot, "Write the Hasse diagram as DOT");
  a->add_option("--json", analyze.json, "Write the poset as JSON");

  ConvertOptions convert;
  auto *c = app.add_subcommand("convert", "Map a poset to a dissection or back");
  c->add_option("input", convert.input, "JSON file, or inline JSON text")->required();
  c->add_option("--to", convert.to, "Target object")
      ->check(CLI::IsMember({"dissection", "poset"}));
  c->add_option("--map", convert.map, "phi (all posets) or psi (binary posets)")
      ->check(CLI::IsMember({"phi", "psi"}));
  c->add_option("--out", convert.out, "Write JSON here instead of stdout");
  c->add_option("--svg", convert.svg, "Render the dissection as SVG");
  c->add_option("--dot", convert.dot, "Render the poset as DOT");

  EnumerateOptions enumerate;
  auto *e = app.add_subcommand("enumerate", "Count a family by several independent methods");
  e->add_option("family", enumerate.family, "all, tree, blockwise, binary, binary_tree")
      ->required();
  e->add_option("--from", enumerate.from, "Smallest n");
  e->add_option("--to", enumerate.to, "Largest n");
  e->add_option("--methods", enumerate.methods,
                "Comma list of formula, brute_perm, brute_dissection, structured_dissection");
  e->add_option("--format", enumerate.format)->check(CLI::IsMember({"csv", "json"}));
  e->add_option("--out", enumerate.out, "Write the table here instead of stdout");
  e->add_option("--workers", enumerate.workers)->check(CLI::PositiveNumber);
  e->add_flag("--big", enumerate.big, "Allow the n = 10 permutation scan");
  e->add_flag("--permutations", enumerate.permutations, "Count permutations, not posets");

  VerifyOptions verify;
  auto *v = app.add_subcommand("verify", "Run the exhaustive oracle suites");
  v->add_option("--max-n", verify.max_n, "Largest permutation size");
  v->add_option("--suites", verify.suites, "Comma list; default runs every suite");
  v->add_option("--fixture", verify.fixture, "Validate a poset or dissection JSON file");
  v->add_option("--workers", verify.workers)->check(CLI::PositiveNumber);
  v->add_flag("--big", verify.big, "Allow --max-n 10");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &err) {
    return app.exit(err);
  } catch (const CLI::ParseError &err) {
    app.exit(err);
    return kParse;
  }

  RunReport report;
  const auto start = std::chrono::steady_clock::now();
  int status = kPass;
  try {
    if (*a) {
      report.command = "analyze";
      status = cmd_analyze(analyze, report);
    } else if (*c) {
      report.command = "convert";
      status = cmd_convert(convert, report);
    } else if (*e) {
      report.command = "enumerate";
      status = cmd_enumerate(enumerate, report);
    } else if (*v) {
      report.command = "verify";
      status = cmd_verify(verify, report);
    }
  } catch (const Error &err) {
    std::cerr << "error: " << err.what() << "\n";
    status = exit_code_for(err.code());
    report.passed = false;
  } catch (const std::exception &err) {
    std::cerr << "error: " << err.what() << "\n";
    status = kParse;
    report.passed = false;
  }
  report.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!report_path.empty())
    write_file(report_path, report.to_json());
  return status;
}

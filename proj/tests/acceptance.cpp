// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any
// failure. All comparisons are exact.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "ipd/bijection.hpp"
#include "ipd/enumeration.hpp"
#include "ipd/io.hpp"
#include "ipd/parallel.hpp"
#include "ipd/verify.hpp"

namespace {

using namespace ipd;

const int workers = default_workers();

// Collects the first failure of a criterion.
class Check {
public:
  void expect(bool ok, const std::string &what) {
    ++checks_;
    if (!ok && first_.empty())
      first_ = what;
  }
  void equal(const BigInt &got, const BigInt &want, const std::string &what) {
    expect(got == want, what + ": got " + got.str() + ", expected " + want.str());
  }
  bool ok() const { return first_.empty(); }
  int checks() const { return checks_; }
  const std::string &failure() const { return first_; }

private:
  int checks_ = 0;
  std::string first_;
};

struct Criterion {
  int id;
  std::string title;
  double budget_s; // 0 means no stated budget
  std::function<void(Check &)> run;
};

std::string at(std::string_view family, int n) {
  return std::string(family) + " n=" + std::to_string(n);
}

std::string fixture(const char *name) {
  return read_file(std::string(IPD_FIXTURES "/") + name);
}

std::string cli(const std::string &args, int &status) {
  const std::string cmd = std::string(IPD_CLI) + " " + args + " 2>/dev/null";
  std::string out;
  FILE *pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  const int raw = pclose(pipe);
  status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

void suite(Check &c, std::string_view name, int max_n) {
  const auto r = run_suite(name, max_n, workers);
  c.expect(r.passed, std::string(name) + " counterexample " + r.counterexample);
  c.expect(r.checked > 0, std::string(name) + " checked nothing");
}

void formula_brute_geometry(Check &c) {
  c.equal(count_interval_posets(2), 1, "anchor n=2");
  c.equal(count_interval_posets(3), 3, "anchor n=3");
  for (int n = 2; n <= 9; ++n) {
    const auto formula = count_interval_posets(n);
    c.equal(brute_count(Family::All, n, false, workers), formula, at("brute all", n));
    if (n <= 7)
      c.equal(dissection_count(n + 1, Family::All, workers), formula, at("framed quad-free", n));
  }
}

void tree_family(Check &c) {
  c.equal(brute_count(Family::Tree, 3, false, workers), 2, "anchor n=3");
  for (int n = 2; n <= 9; ++n)
    c.equal(brute_count(Family::Tree, n, false, workers), dissection_count(n + 1, Family::Tree),
            at("tree", n));
}

void blockwise_family(Check &c) {
  const std::array<int, 4> anchors{1, 1, 1, 5};
  for (int n = 4; n <= 7; ++n)
    c.equal(count_blockwise_posets(n), anchors[static_cast<std::size_t>(n - 4)], at("anchor", n));
  for (int n = 4; n <= 9; ++n) {
    const auto formula = count_blockwise_posets(n);
    c.equal(brute_count(Family::Blockwise, n, false, workers), formula, at("brute blockwise", n));
    c.equal(dissection_count(n + 1, Family::Blockwise), formula, at("dissections blockwise", n));
  }
}

void separable_family(Check &c) {
  c.equal(brute_count(Family::Binary, 3, false, workers), 3, "anchor n=3");
  c.equal(brute_count(Family::Binary, 4, false, workers), 11, "anchor n=4");
  c.equal(large_schroeder(2), 6, "separable anchor n=3");
  for (int n = 2; n <= 9; ++n) {
    c.equal(brute_count(Family::Binary, n, false, workers), dissection_count(n + 1, Family::Binary),
            at("binary", n));
    // Separable permutations counted directly on the permutation side.
    std::uint64_t separable = 0;
    for_each_permutation(n, [&](const Permutation &p) { separable += is_separable(p); });
    c.equal(separable, large_schroeder(n - 1), at("separable permutations", n));
    c.equal(brute_count(Family::Binary, n, true, workers), large_schroeder(n - 1),
            at("binary-poset permutations", n));
  }
}

void round_trips(Check &c) {
  suite(c, "roundtrip_phi", 8); // posets n <= 8 and framed quad-free m <= 8
  suite(c, "roundtrip_psi", 8); // binary posets n <= 8 and non-crossing m <= 9
}

void structural(Check &c) {
  suite(c, "no_three_cover", 9);
  suite(c, "framed_image", 9);
  suite(c, "component_completeness", 9); // framed dissections m <= 8
}

void realization(Check &c) {
  suite(c, "realize", 7);
  for (int k = 4; k <= 7; ++k) {
    const auto claw = dual_claw_poset(k);
    const auto p = realize(claw);
    c.expect(build_poset(p) == claw, "dual claw arity " + std::to_string(k));
    c.expect(p == smallest_simple(k), "dual claw witness arity " + std::to_string(k));
  }
}

void catalan_anchor(Check &c) {
  for (int n = 2; n <= 9; ++n) {
    const auto cat = catalan(n - 1);
    c.equal(brute_count(Family::BinaryTree, n, true, workers), 2 * cat,
            at("binary tree permutations", n));
    c.equal(brute_count(Family::BinaryTree, n, false, workers), cat, at("binary tree posets", n));
  }
}

void golden(Check &c) {
  // The 10-gon example and its interval set, written out by hand.
  const auto tengon = dissection_from_json(fixture("tengon_dissection.json"));
  std::vector<Interval> expected{{1, 9}, {1, 4}, {5, 6}, {7, 8}, {1, 6}, {5, 8}, {1, 8}};
  for (int a = 1; a <= 9; ++a)
    expected.push_back({a, a});
  c.expect(phi_inverse(tengon) == IntervalPoset(9, expected), "10-gon to poset");
  c.expect(poset_to_json(phi_inverse(tengon)) == fixture("tengon_poset.json"), "10-gon JSON bytes");

  const auto claw = poset_from_json(fixture("dual_claw_4.json"));
  c.expect(phi(claw) == Dissection(5), "dual claw to empty pentagon");
  c.expect(dissection_to_json(phi(claw)) == fixture("empty_pentagon.json"), "pentagon JSON bytes");

  int status = 0;
  const auto via_cli = cli("convert " IPD_FIXTURES "/tengon_dissection.json --to poset", status);
  c.expect(status == 0 && via_cli == fixture("tengon_poset.json"), "cli 10-gon conversion");
  const auto pent = cli("convert " IPD_FIXTURES "/dual_claw_4.json --to dissection", status);
  c.expect(status == 0 && pent == fixture("empty_pentagon.json"), "cli dual claw conversion");

  // Byte stability across runs.
  const auto tmp = std::filesystem::temp_directory_path();
  std::array<std::string, 2> svg, dot;
  for (int run = 0; run < 2; ++run) {
    const auto s = (tmp / ("ipd_accept_" + std::to_string(run) + ".svg")).string();
    const auto d = (tmp / ("ipd_accept_" + std::to_string(run) + ".dot")).string();
    cli("convert " IPD_FIXTURES "/tengon_dissection.json --to poset --svg " + s + " --dot " + d,
        status);
    c.expect(status == 0, "cli render run " + std::to_string(run));
    svg[static_cast<std::size_t>(run)] = read_file(s);
    dot[static_cast<std::size_t>(run)] = read_file(d);
  }
  c.expect(svg[0] == svg[1] && !svg[0].empty(), "SVG bytes differ between runs");
  c.expect(dot[0] == dot[1] && !dot[0].empty(), "DOT bytes differ between runs");

  // Byte stability across worker counts.
  std::string first;
  for (int w : {1, 2, 4}) {
    const auto out = cli("enumerate all --from 2 --to 8 --format json --workers " +
                             std::to_string(w),
                         status);
    c.expect(status == 0, "enumerate with workers " + std::to_string(w));
    if (first.empty())
      first = out;
    c.expect(out == first, "enumerate JSON differs at workers " + std::to_string(w));
  }
  std::string verified;
  for (int w : {1, 3}) {
    const auto out = cli("verify --max-n 5 --workers " + std::to_string(w), status);
    c.expect(status == 0, "verify with workers " + std::to_string(w));
    if (verified.empty())
      verified = out;
    c.expect(out == verified, "verify output differs at workers " + std::to_string(w));
  }
  c.expect(tally_posets(8, 1) == tally_posets(8, 4), "tally differs across workers");
}

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "interval posets: formula = permutation scan = framed quad-free dissections", 120,
       formula_brute_geometry},
      {2, "tree posets = non-crossing quad-free dissections", 60, tree_family},
      {3, "block-wise posets: formula = scan = non-crossing triangle/quad-free dissections", 120,
       blockwise_family},
      {4, "binary posets = non-crossing dissections; separable = large Schroeder", 60,
       separable_family},
      {5, "round trips phi/phi_inverse and psi/b_poset", 300, round_trips},
      {6, "no 3-cover, framed quad-free image, complete component supports", 0, structural},
      {7, "realize round trip n <= 7 with dual claws up to arity 7", 60, realization},
      {8, "binary tree family: 2 C(n-1) permutations, C(n-1) posets", 0, catalan_anchor},
      {9, "golden fixtures and byte-stable DOT/JSON/SVG", 0, golden},
  };

  std::cout << "acceptance (workers " << workers << ")\n";
  int failed = 0;
  for (const auto &cr : criteria) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception &e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.budget_s > 0) {
      std::ostringstream over;
      over << "runtime " << std::fixed << std::setprecision(1) << secs << " s over budget "
           << cr.budget_s << " s";
      c.expect(secs <= cr.budget_s, over.str());
    }
    std::cout << (c.ok() ? "PASS" : "FAIL") << "  criterion " << cr.id << ": " << cr.title
              << "  [" << c.checks() << " checks, " << std::fixed << std::setprecision(2) << secs
              << " s]";
    if (!c.ok())
      std::cout << "  first failure: " << c.failure();
    std::cout << "\n" << std::flush;
    failed += !c.ok();
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << "\n";
  return failed == 0 ? 0 : 1;
}

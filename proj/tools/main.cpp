#include <algorithm>
#include <cstdint>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symbez/errors.hpp"
#include "symbez/fixedpoints.hpp"
#include "symbez/json.hpp"
#include "symbez/parse.hpp"
#include "symbez/random.hpp"
#include "symbez/solver.hpp"
#include "symbez/verify.hpp"

using namespace symbez;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerificationFailed = 1, kUsage = 2, kNumerical = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Args {
  std::string space = "p2";
  std::string f, g, h;
  std::string basis = "monomial";
  long precision = kDefaultPrecisionBits;
  std::uint64_t seed = 0;
  int trials = 10;
  std::optional<int> max_product;
  bool json = false;
  double tolerance = kDefaultMatchTolerance;
  std::vector<int> degrees;
  bool check = false;
};

int dimension_of(const Args& a) { return a.space == "p3" ? 3 : 2; }

SolveOptions solve_options(const Args& a) {
  SolveOptions o;
  o.precision_bits = a.precision;
  o.max_precision_bits = std::max<long>(512, a.precision);
  o.match_tolerance = a.tolerance;
  o.seed = a.seed;
  if (a.max_product) o.max_product = *a.max_product;
  return o;
}

VerifyOptions verify_options(const Args& a) {
  VerifyOptions o;
  o.solve = solve_options(a);
  o.solve.seed = 0;
  if (a.max_product) {
    o.max_product_p2 = std::max(o.max_product_p2, *a.max_product);
    o.max_product_p3 = std::max(o.max_product_p3, *a.max_product);
  }
  return o;
}

std::vector<MultiPoly> read_inputs(const Args& a) {
  const int dim = dimension_of(a);
  const BasisMode mode = a.basis == "elementary" ? BasisMode::kElementary : BasisMode::kMonomial;
  std::vector<std::string> texts{a.f, a.g};
  if (dim == 3) texts.push_back(a.h);
  std::vector<MultiPoly> fs;
  const char* flags[] = {"-f", "-g", "-h"};
  for (size_t k = 0; k < texts.size(); ++k) {
    if (texts[k].empty()) throw UsageError(std::string("missing ") + flags[k] + " for --space " + a.space);
    fs.push_back(parse_poly(texts[k], dim + 1, mode));
  }
  if (dim == 2 && !a.h.empty()) throw UsageError("-h is only used with --space p3");
  return fs;
}

IntersectionReport solve_inputs(const Args& a) {
  const auto fs = read_inputs(a);
  const auto opt = solve_options(a);
  return fs.size() == 2 ? solve_p2(fs[0], fs[1], opt) : solve_p3(fs[0], fs[1], fs[2], opt);
}

std::string degrees_text(const std::vector<int>& d) {
  std::string s;
  for (size_t k = 0; k < d.size(); ++k) s += (k ? "," : "") + std::to_string(d[k]);
  return "(" + s + ")";
}

std::string sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << v;
  return os.str();
}

void print_report(const IntersectionReport& r) {
  std::cout << "space: P" << r.dimension << "\n";
  std::cout << "degrees: " << degrees_text(r.degrees) << "  bezout number: " << r.bezout_count << "\n";
  std::cout << "points: " << r.points.size() << "\n";
  for (size_t k = 0; k < r.points.size(); ++k) {
    const auto& p = r.points[k];
    std::cout << "  " << std::setw(3) << k + 1 << "  " << (p.exact ? p.exact->to_string() : p.numeric.to_string(12))
              << (p.exact ? "  (exact)" : "") << "  stabilizer " << p.stabilizer << "  orbit " << p.orbit_id;
    if (p.multiplicity > 1) std::cout << "  multiplicity " << p.multiplicity;
    if (p.is_real) std::cout << "  real";
    std::cout << "  residual " << sci(p.residual) << "  jacobian " << sci(p.jacobian_score) << "\n";
  }
  std::cout << "orbit type: " << r.orbit_type.to_string() << "\n";
  std::cout << "real points: " << r.real_count << "\n";
  std::cout << "transversality: " << transversality_name(r.transversality) << "\n";
  if (r.obstruction) std::cout << "obstruction: " << r.obstruction->kind_name() << ": " << r.obstruction->to_string() << "\n";
  if (!r.complete) std::cout << "note: the multiplicities found do not add up to the Bezout number\n";
}

int run_solve(const Args& a) {
  const auto r = solve_inputs(a);
  if (a.json) {
    std::cout << render(to_json(r));
  } else {
    print_report(r);
  }
  return kOk;
}

int run_orbit_type(const Args& a) {
  if (a.f.empty() && a.g.empty()) {
    if (a.space != "p2" || a.degrees.size() != 2) {
      throw UsageError("orbit-type needs -f/-g (and -h), or --degrees d,e with --space p2");
    }
    const auto t = expected_orbit_type_p2(a.degrees[0], a.degrees[1]);
    if (a.json) {
      std::cout << render({{"space", "P2"}, {"degrees", a.degrees}, {"expected", t ? json(t->to_string()) : json(nullptr)}});
    } else {
      std::cout << "orbit type: " << (t ? t->to_string() : std::string("impossible (no transverse intersection)")) << "\n";
    }
    return kOk;
  }
  const auto r = solve_inputs(a);
  if (a.json) {
    std::cout << render({{"space", r.dimension == 2 ? "P2" : "P3"},
                         {"degrees", r.degrees},
                         {"orbit_type", r.orbit_type.to_string()},
                         {"transverse", r.transverse},
                         {"real_count", r.real_count}});
  } else {
    std::cout << "orbit type: " << r.orbit_type.to_string() << "\n";
    std::cout << "transversality: " << transversality_name(r.transversality) << "\n";
  }
  return kOk;
}

std::vector<std::vector<int>> degree_grid(int dim, int max_product) {
  std::vector<std::vector<int>> out;
  if (dim == 2) {
    for (int d = 1; d * d <= max_product; ++d) {
      for (int e = d; d * e <= max_product; ++e) out.push_back({d, e});
    }
  } else {
    for (int a = 1; a * a * a <= max_product; ++a) {
      for (int b = a; a * b * b <= max_product; ++b) {
        for (int c = b; a * b * c <= max_product; ++c) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

int exit_for(const std::vector<VerificationRun>& runs) {
  const bool all_pass = std::all_of(runs.begin(), runs.end(), [](const auto& r) { return r.verdict == Verdict::kPass; });
  return all_pass ? kOk : kVerificationFailed;
}

void print_runs(const std::vector<VerificationRun>& runs, bool with_expected) {
  for (const auto& r : runs) {
    std::cout << std::left << std::setw(10) << degrees_text(r.degrees);
    if (with_expected) {
      const auto t = expected_orbit_type_p2(r.degrees[0], r.degrees[1]);
      std::cout << std::setw(34) << (t ? t->to_string() : std::string("impossible"));
    }
    std::cout << std::setw(14) << verdict_name(r.verdict) << "passed " << r.passed << ", failed " << r.failed << ", rejected "
              << r.rejected << (r.vacuous ? " (vacuous)" : "") << std::right << "\n";
    for (const auto& t : r.trials) {
      if (t.counted && !t.ok) std::cout << "    trial " << t.index << " (seed " << t.seed << "): " << t.note << "\n";
    }
  }
}

void emit_runs(const std::vector<VerificationRun>& runs, bool as_json, bool with_expected) {
  if (as_json) {
    json arr = json::array();
    for (const auto& r : runs) arr.push_back(to_json(r));
    std::cout << render({{"runs", std::move(arr)}, {"verdict", exit_for(runs) == kOk ? "pass" : "fail"}});
  } else {
    print_runs(runs, with_expected);
  }
}

int run_verify_table(const Args& a) {
  const int dim = dimension_of(a);
  const int cap = a.max_product.value_or(dim == 2 ? 20 : 24);
  const auto grid = degree_grid(dim, cap);
  const auto opt = verify_options(a);
  std::vector<std::future<VerificationRun>> jobs;
  for (const auto& d : grid) {
    jobs.push_back(std::async(std::launch::async, [&, d] {
      return dim == 2 ? verify_p2_table(d[0], d[1], a.trials, a.seed, opt) : verify_p3(d[0], d[1], d[2], a.trials, a.seed, opt);
    }));
  }
  std::vector<VerificationRun> runs;
  for (auto& j : jobs) runs.push_back(j.get());
  emit_runs(runs, a.json, dim == 2);
  return exit_for(runs);
}

int run_verify_p3(const Args& a) {
  if (!a.f.empty() || !a.g.empty() || !a.h.empty()) {
    Args b = a;
    b.space = "p3";
    const auto r = solve_inputs(b);
    json j = to_json(r);
    int code = kOk;
    if (!r.transverse) {
      j["constraints"] = {{"ok", nullptr}, {"reasons", {"the intersection is not certified transverse"}}};
      code = kVerificationFailed;
    } else {
      const auto c = check_p3_constraints(r);
      j["constraints"] = {{"ok", c.ok}, {"reasons", c.reasons}};
      if (!c.ok) code = kVerificationFailed;
    }
    j["degree_congruence"] = p3_degree_congruence(r.degrees[0], r.degrees[1], r.degrees[2]);
    if (a.json) {
      std::cout << render(j);
    } else {
      print_report(r);
      std::cout << "degree congruence: " << (j["degree_congruence"].get<bool>() ? "holds" : "fails") << "\n";
      if (!r.transverse) {
        std::cout << "constraints: not applicable (not certified transverse)\n";
      } else {
        std::cout << "constraints: " << (code == kOk ? "pass" : "fail") << "\n";
        for (const auto& why : j["constraints"]["reasons"]) std::cout << "  " << why.get<std::string>() << "\n";
      }
    }
    return code;
  }
  if (a.degrees.size() != 3) throw UsageError("verify-p3 needs -f/-g/-h or --degrees d1,d2,d3");
  const auto run = verify_p3(a.degrees[0], a.degrees[1], a.degrees[2], a.trials, a.seed, verify_options(a));
  emit_runs({run}, a.json, false);
  return exit_for({run});
}

int run_independence(const Args& a) {
  const int dim = dimension_of(a);
  if (static_cast<int>(a.degrees.size()) != dim) throw UsageError("independence needs --degrees with one entry per equation");
  const auto run = orbit_type_independence(dim, a.degrees, a.trials, a.seed, verify_options(a));
  if (a.json) {
    std::cout << render(to_json(run));
  } else {
    std::cout << run.summary << "\n" << "verdict: " << verdict_name(run.verdict) << "\n";
  }
  return run.verdict == Verdict::kPass ? kOk : kVerificationFailed;
}

int run_fixed_points(const Args& a) {
  const int dim = dimension_of(a);
  const auto& cat = fixed_point_catalog(dim);
  std::optional<CatalogReport> report;
  if (a.check) report = verify_catalog_by_stabilizer(dim, a.seed == 0 ? 1 : a.seed);
  if (a.json) {
    json fams = json::array();
    for (const auto& f : cat) {
      json ex = json::array();
      for (const auto& v : f.excluded) ex.push_back(v.to_string());
      fams.push_back({{"stabilizer", f.stabilizer},
                      {"points", f.all_points ? "all" : f.text},
                      {"parameters", f.num_params},
                      {"admissible", f.admissible},
                      {"excluded", std::move(ex)},
                      {"reason", f.reason}});
    }
    json j{{"space", dim == 2 ? "P2" : "P3"}, {"families", std::move(fams)}};
    if (report) {
      json checks = json::array();
      for (const auto& c : report->checks) {
        checks.push_back({{"subgroup", c.subgroup}, {"family", c.family}, {"property", c.property}, {"ok", c.ok}, {"detail", c.detail}});
      }
      j["checks"] = std::move(checks);
      j["verdict"] = report->all_ok() ? "pass" : "fail";
    }
    std::cout << render(j);
  } else {
    for (const auto& f : cat) {
      std::cout << std::left << std::setw(8) << f.stabilizer << std::setw(22) << (f.all_points ? std::string("all points") : f.text)
                << (f.admissible ? "admissible" : "excluded") << std::right;
      if (!f.excluded.empty()) {
        std::cout << "  (a not in {";
        for (size_t k = 0; k < f.excluded.size(); ++k) std::cout << (k ? ", " : "") << f.excluded[k].to_string();
        std::cout << "})";
      }
      if (!f.reason.empty()) std::cout << "  " << f.reason;
      std::cout << "\n";
    }
    if (report) {
      int failed = 0;
      for (const auto& c : report->checks) {
        if (!c.ok) {
          ++failed;
          std::cout << "check failed: " << c.subgroup << " " << c.family << " " << c.property << ": " << c.detail << "\n";
        }
      }
      std::cout << "catalog checks: " << report->checks.size() - failed << "/" << report->checks.size() << " passed\n";
    }
  }
  return report && !report->all_ok() ? kVerificationFailed : kOk;
}

int run_random_instance(const Args& a) {
  const int dim = dimension_of(a);
  if (static_cast<int>(a.degrees.size()) != dim) throw UsageError("random-instance needs --degrees with one entry per equation");
  std::vector<std::string> polys;
  for (size_t k = 0; k < a.degrees.size(); ++k) {
    if (a.degrees[k] < 1) throw UsageError("degrees must be positive");
    polys.push_back(random_symmetric(dim + 1, a.degrees[k], derive_seed(a.seed, k)).to_string());
  }
  if (a.json) {
    std::cout << render({{"space", dim == 2 ? "P2" : "P3"}, {"degrees", a.degrees}, {"seed", a.seed}, {"inputs", polys}});
  } else {
    const char* flags[] = {"-f", "-g", "-h"};
    for (size_t k = 0; k < polys.size(); ++k) std::cout << flags[k] << " \"" << polys[k] << "\"\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbit types of symmetric intersections in P2 and P3"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Args a;

  auto common = [&](CLI::App* sub, bool polys) {
    sub->set_help_flag("--help", "Print this help message and exit");
    sub->add_option("--space", a.space, "Ambient space")->check(CLI::IsMember({"p2", "p3"}));
    if (polys) {
      sub->add_option("-f", a.f, "First polynomial");
      sub->add_option("-g", a.g, "Second polynomial");
      sub->add_option("-h", a.h, "Third polynomial (p3)");
      sub->add_option("--basis", a.basis, "Input basis")->check(CLI::IsMember({"monomial", "elementary"}));
    }
    sub->add_option("--precision", a.precision, "Working precision in bits")->check(CLI::Range(32L, 1L << 16));
    sub->add_option("--seed", a.seed, "Random seed");
    sub->add_option("--trials", a.trials, "Trials per cell")->check(CLI::Range(1, 100000));
    sub->add_option("--max-product", a.max_product, "Cap on the product of the degrees")->check(CLI::PositiveNumber);
    sub->add_option("--tolerance", a.tolerance, "Point matching tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--degrees", a.degrees, "Degrees, comma separated")->delimiter(',');
    sub->add_flag("--json", a.json, "Machine-readable output");
  };

  auto* solve = app.add_subcommand("solve", "Solve a symmetric system and print its orbit decomposition");
  common(solve, true);
  auto* orbit = app.add_subcommand("orbit-type", "Orbit type of a system, or the expected type for --degrees in P2");
  common(orbit, true);
  auto* table = app.add_subcommand("verify-table", "Verify the orbit-type table over all degrees up to --max-product");
  common(table, false);
  auto* p3 = app.add_subcommand("verify-p3", "Check the P3 constraints on a system or on random trials");
  common(p3, true);
  auto* indep = app.add_subcommand("independence", "Check that random instances share one orbit type");
  common(indep, false);
  auto* fixed = app.add_subcommand("fixed-points", "Print the fixed-point catalog");
  common(fixed, false);
  fixed->add_flag("--check", a.check, "Machine-check the catalog");
  auto* random = app.add_subcommand("random-instance", "Print a random symmetric system");
  common(random, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (a.space == "p2" && !a.h.empty() && !p3->parsed()) throw UsageError("-h is only used with --space p3");
    if (solve->parsed()) return run_solve(a);
    if (orbit->parsed()) return run_orbit_type(a);
    if (table->parsed()) return run_verify_table(a);
    if (p3->parsed()) return run_verify_p3(a);
    if (indep->parsed()) return run_independence(a);
    if (fixed->parsed()) return run_fixed_points(a);
    if (random->parsed()) return run_random_instance(a);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: parse: " << e.what() << "\n";
    return kUsage;
  } catch (const CommonFactorError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NumericalError& e) {
    std::cerr << "error: numerical: " << e.what() << "\n";
    return kNumerical;
  } catch (const NotClosedError& e) {
    std::cerr << "error: numerical: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumerical;
  }
  return kUsage;
}

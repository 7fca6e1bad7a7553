#include "symbez/verify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "symbez/errors.hpp"
#include "symbez/random.hpp"

namespace symbez {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kInconclusive: return "inconclusive";
  }
  return "inconclusive";
}

int VerificationRun::transverse_count() const {
  return static_cast<int>(std::count_if(trials.begin(), trials.end(), [](const TrialOutcome& t) { return t.status == "transverse"; }));
}

std::optional<OrbitType> expected_orbit_type_p2(int d, int e) {
  if (d < 1 || e < 1) throw std::invalid_argument("degrees must be positive");
  const int de = d * e;
  const int k = de / 6;
  OrbitType t(3);
  if (k > 0) t.add(subgroup_class(3, "Trivial"), k);
  switch (de % 6) {
    case 0: break;
    case 2: t.add(subgroup_class(3, "C3")); break;
    case 3: t.add(subgroup_class(3, "C2")); break;
    case 5:
      t.add(subgroup_class(3, "C2"));
      t.add(subgroup_class(3, "C3"));
      break;
    default: return std::nullopt;
  }
  return t;
}

bool p3_degree_congruence(int d1, int d2, int d3) {
  if (d1 < 1 || d2 < 1 || d3 < 1) throw std::invalid_argument("degrees must be positive");
  const long r = (static_cast<long>(d1) * d2 * d3) % 12;
  return r == 0 || r == 2 || r == 6 || r == 8;
}

CheckResult check_real_count_p2(const IntersectionReport& report) {
  if (report.dimension != 2) throw std::invalid_argument("not a plane report");
  if (!report.transverse) throw std::invalid_argument("real-point bounds apply to transverse intersections only");
  for (const auto& f : report.inputs) {
    if (!f.has_real_coefficients()) throw std::invalid_argument("real-point bounds need real inputs");
  }
  const int de = report.bezout_count;
  const int r = report.real_count;
  CheckResult out;
  std::vector<int> allowed;
  switch (de % 6) {
    case 3:
    case 5:
      for (int k = 0; 6 * k < de; ++k) allowed.push_back(3 + 6 * k);
      break;
    case 0:
    case 2:
      for (int k = 0; 6 * k <= de; ++k) allowed.push_back(6 * k);
      break;
    default:
      out.ok = false;
      out.reasons.push_back("a transverse report with de = " + std::to_string(de) + " contradicts de = 1 mod 3");
      return out;
  }
  if (std::find(allowed.begin(), allowed.end(), r) == allowed.end()) {
    out.ok = false;
    out.reasons.push_back(std::to_string(r) + " real points is not an allowed count for de = " + std::to_string(de));
  }
  return out;
}

CheckResult check_p3_constraints(const IntersectionReport& report) {
  if (report.dimension != 3) throw std::invalid_argument("not a space report");
  if (!report.transverse) throw std::invalid_argument("constraints apply to transverse intersections only");
  CheckResult out;
  auto fail = [&](std::string why) {
    out.ok = false;
    out.reasons.push_back(std::move(why));
  };
  static const std::set<std::string> admissible{"Trivial", "C2e", "C3", "C4"};
  for (const auto& [cls, mult] : report.orbit_type.terms()) {
    if (!admissible.contains(cls.name)) fail("orbit with stabilizer " + cls.name + " cannot occur transversally");
  }
  if (report.orbit_type.multiplicity("C4") > 1) fail("more than one orbit [S4/C4]");
  if (report.orbit_type.multiplicity("C3") > 1) fail("more than one orbit [S4/C3]");
  if (report.real_count % 12 != 0) fail(std::to_string(report.real_count) + " real points is not a multiple of 12");
  for (const auto& p : report.points) {
    if (p.is_real && p.stabilizer != "Trivial" && p.stabilizer != "C2e") {
      fail("real point with stabilizer " + p.stabilizer);
      break;
    }
  }
  return out;
}

namespace {

struct Trial {
  TrialOutcome outcome;
  std::optional<IntersectionReport> report;
};

Trial run_trial(int dimension, const std::vector<int>& degrees, int index, std::uint64_t seed, const VerifyOptions& opt) {
  Trial t;
  t.outcome.index = index;
  t.outcome.seed = seed;
  const int n = dimension + 1;
  std::vector<MultiPoly> fs;
  for (size_t k = 0; k < degrees.size(); ++k) {
    fs.push_back(random_symmetric(n, degrees[k], derive_seed(seed, k), opt.coeff_bound));
    t.outcome.inputs.push_back(fs.back().to_string());
  }
  SolveOptions so = opt.solve;
  so.seed = derive_seed(seed, 100);
  so.max_product = opt.max_product_p3;
  try {
    IntersectionReport r = dimension == 2 ? solve_p2(fs[0], fs[1], so) : solve_p3(fs[0], fs[1], fs[2], so);
    switch (r.transversality) {
      case Transversality::kTransverse: t.outcome.status = "transverse"; break;
      case Transversality::kNotTransverse: t.outcome.status = "not_transverse"; break;
      case Transversality::kUndetermined: t.outcome.status = "undetermined"; break;
    }
    t.outcome.orbit_type = r.orbit_type.to_string();
    t.outcome.real_count = r.real_count;
    if (r.obstruction) t.outcome.obstruction = r.obstruction->kind_name() + ": " + r.obstruction->to_string();
    if (!r.complete) t.outcome.note = "incomplete assembly";
    t.report = std::move(r);
  } catch (const CommonFactorError& e) {
    t.outcome.status = "common_factor";
    t.outcome.note = e.what();
  } catch (const std::exception& e) {
    t.outcome.status = "error";
    t.outcome.note = e.what();
  }
  return t;
}

void finish(VerificationRun& run) {
  run.passed = run.failed = run.rejected = 0;
  for (const auto& t : run.trials) {
    if (!t.counted) {
      ++run.rejected;
    } else if (t.ok) {
      ++run.passed;
    } else {
      ++run.failed;
    }
  }
  if (run.failed > 0) {
    run.verdict = Verdict::kFail;
  } else if (run.passed > 0 || run.vacuous) {
    run.verdict = Verdict::kPass;
  } else {
    run.verdict = Verdict::kInconclusive;
  }
}

std::string degrees_text(const std::vector<int>& d) {
  std::string s = "(";
  for (size_t k = 0; k < d.size(); ++k) s += (k ? "," : "") + std::to_string(d[k]);
  return s + ")";
}

// Only one symmetric linear form exists up to scalar, so two linear inputs
// always share a component.
bool structurally_vacuous(const std::vector<int>& degrees) {
  return std::count(degrees.begin(), degrees.end(), 1) >= 2;
}

template <typename Judge>
void sample(VerificationRun& run, const VerifyOptions& opt, int wanted, Judge judge) {
  const int budget = std::max(wanted, wanted * opt.resample_factor);
  int counted = 0;
  for (int draw = 0; draw < budget && counted < wanted; ++draw) {
    Trial t = run_trial(run.dimension, run.degrees, draw, derive_seed(run.seed, static_cast<std::uint64_t>(draw)), opt);
    judge(t);
    if (t.outcome.counted) ++counted;
    run.trials.push_back(std::move(t.outcome));
  }
}

void vacuous_run(VerificationRun& run, const VerifyOptions& opt, int trials) {
  run.vacuous = true;
  for (int draw = 0; draw < trials; ++draw) {
    Trial t = run_trial(run.dimension, run.degrees, draw, derive_seed(run.seed, static_cast<std::uint64_t>(draw)), opt);
    if (t.outcome.status != "common_factor") {
      t.outcome.counted = true;
      t.outcome.ok = false;
      t.outcome.note = "expected a common factor";
    }
    run.trials.push_back(std::move(t.outcome));
  }
  finish(run);
  if (run.verdict == Verdict::kPass) {
    run.summary = "pass by vacuity: every symmetric linear form is a multiple of e1, so no transverse instance exists";
  }
}

VerificationRun new_run(const std::string& theorem, int dimension, std::vector<int> degrees, int trials, std::uint64_t seed,
                        const VerifyOptions& opt) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  for (int d : degrees) {
    if (d < 1) throw std::invalid_argument("degrees must be positive");
  }
  VerificationRun run;
  run.theorem = theorem;
  run.dimension = dimension;
  run.degrees = std::move(degrees);
  run.trials_requested = trials;
  run.seed = seed;
  run.precision_bits = opt.solve.precision_bits;
  return run;
}

}  // namespace

VerificationRun verify_p2_table(int d, int e, int trials, std::uint64_t seed, const VerifyOptions& options) {
  VerificationRun run = new_run("p2-orbit-type-table", 2, {d, e}, trials, seed, options);
  if (d * e > options.max_product_p2) {
    throw CapExceededError("de = " + std::to_string(d * e) + " exceeds the cap " + std::to_string(options.max_product_p2));
  }
  if (structurally_vacuous(run.degrees)) {
    vacuous_run(run, options, trials);
    return run;
  }
  const auto expected = expected_orbit_type_p2(d, e);
  sample(run, options, trials, [&](Trial& t) {
    auto& o = t.outcome;
    if (o.status == "common_factor" || o.status == "error") return;
    if (!expected) {
      o.counted = true;
      o.ok = o.status == "not_transverse" && !o.obstruction.empty();
      if (!o.ok) o.note = o.status == "transverse" ? "transverse although de = 1 mod 3" : "no obstruction certificate";
      return;
    }
    if (o.status != "transverse") return;
    o.counted = true;
    o.ok = o.orbit_type == expected->to_string();
    if (!o.ok) o.note = "expected " + expected->to_string();
    const bool real_inputs = std::all_of(t.report->inputs.begin(), t.report->inputs.end(),
                                         [](const MultiPoly& f) { return f.has_real_coefficients(); });
    if (real_inputs) {
      const auto rc = check_real_count_p2(*t.report);
      o.real_ok = rc.ok;
      if (!rc.ok) {
        o.ok = false;
        o.note += (o.note.empty() ? "" : "; ") + rc.reasons.front();
      }
    }
  });
  finish(run);
  run.summary = degrees_text(run.degrees) + " expected " + (expected ? expected->to_string() : std::string("no transverse intersection")) +
                ": " + std::to_string(run.passed) + " passed, " + std::to_string(run.failed) + " failed, " +
                std::to_string(run.rejected) + " rejected";
  return run;
}

VerificationRun verify_p3(int d1, int d2, int d3, int trials, std::uint64_t seed, const VerifyOptions& options) {
  VerificationRun run = new_run("p3-constraints", 3, {d1, d2, d3}, trials, seed, options);
  if (d1 * d2 * d3 > options.max_product_p3) {
    throw CapExceededError("d1 d2 d3 = " + std::to_string(d1 * d2 * d3) + " exceeds the cap " +
                           std::to_string(options.max_product_p3));
  }
  if (structurally_vacuous(run.degrees)) {
    vacuous_run(run, options, trials);
    return run;
  }
  const bool congruent = p3_degree_congruence(d1, d2, d3);
  sample(run, options, trials, [&](Trial& t) {
    auto& o = t.outcome;
    if (o.status != "transverse") return;
    o.counted = true;
    if (!congruent) {
      o.ok = false;
      o.note = "transverse although d1 d2 d3 is not 0, 2, 6 or 8 mod 12";
      return;
    }
    const auto c = check_p3_constraints(*t.report);
    o.ok = c.ok;
    for (const auto& r : c.reasons) o.note += (o.note.empty() ? "" : "; ") + r;
  });
  finish(run);
  run.summary = degrees_text(run.degrees) + ": " + std::to_string(run.passed) + " passed, " + std::to_string(run.failed) +
                " failed, " + std::to_string(run.rejected) + " rejected";
  return run;
}

VerificationRun orbit_type_independence(int dimension, const std::vector<int>& degrees, int trials, std::uint64_t seed,
                                        const VerifyOptions& options) {
  if (dimension != 2 && dimension != 3) throw std::invalid_argument("dimension must be 2 or 3");
  if (static_cast<int>(degrees.size()) != dimension) throw std::invalid_argument("need one degree per equation");
  VerificationRun run = new_run("orbit-type-independence", dimension, degrees, trials, seed, options);
  int product = 1;
  for (int d : degrees) product *= d;
  const int cap = dimension == 2 ? options.max_product_p2 : options.max_product_p3;
  if (product > cap) throw CapExceededError("product of degrees " + std::to_string(product) + " exceeds the cap " + std::to_string(cap));
  if (structurally_vacuous(run.degrees)) {
    vacuous_run(run, options, trials);
    return run;
  }
  const bool impossible = dimension == 2 && !expected_orbit_type_p2(degrees[0], degrees[1]);
  std::string first;
  sample(run, options, trials, [&](Trial& t) {
    auto& o = t.outcome;
    if (impossible) {
      if (o.status == "common_factor" || o.status == "error") return;
      o.counted = true;
      o.ok = o.status != "transverse";
      if (!o.ok) o.note = "transverse although de = 1 mod 3";
      return;
    }
    if (o.status != "transverse") return;
    o.counted = true;
    if (first.empty()) first = o.orbit_type;
    o.ok = o.orbit_type == first;
    if (!o.ok) o.note = "differs from the first transverse trial (" + first + ")";
  });
  finish(run);
  if (!impossible && run.verdict == Verdict::kPass && run.passed < 2) run.verdict = Verdict::kInconclusive;
  run.summary = degrees_text(run.degrees) + ": " +
                (impossible ? std::string("no transverse trial expected")
                            : (first.empty() ? std::string("no transverse trial") : "orbit type " + first)) +
                ", " + std::to_string(run.passed) + " consistent, " + std::to_string(run.failed) + " inconsistent, " +
                std::to_string(run.rejected) + " rejected";
  return run;
}

}  // namespace symbez

// dyb: command-line front end for the dyadic two-weight certification library.
//
// Exit codes: 0 all checks passed, 1 at least one inequality violation,
// 2 configuration error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dyb/acceptance.hpp"
#include "dyb/instances.hpp"
#include "dyb/verify.hpp"

using json = nlohmann::ordered_json;
using namespace dyb;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitConfig = 2;

json cube_json(const CubeId& q) {
  return json{{"shift", q.shift}, {"level", q.level}, {"index", q.index}};
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw CLI::ValidationError("--out", "cannot open " + out_path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

// Options shared by every subcommand that works on a domain.
struct DomainOpts {
  int depth = 8;
  std::string masses_csv;
  std::uint64_t mass_seed = 0;  // 0 = uniform masses
  std::vector<double> shifts = {0.0, 1.0 / 3.0};

  void attach(CLI::App* cmd) {
    cmd->add_option("--depth", depth, "grid depth L (N = 2^L cells)")
        ->check(CLI::Range(1, 24));
    cmd->add_option("--masses", masses_csv, "CSV file with one cell mass per row");
    cmd->add_option("--mass-seed", mass_seed,
                    "seed for random lognormal cell masses (0 = uniform)");
    cmd->add_option("--shifts", shifts, "grid shifts in [0,1)");
  }

  DyadicDomain build() const {
    const std::int64_t n = std::int64_t(1) << depth;
    if (!masses_csv.empty()) {
      std::ifstream in(masses_csv);
      if (!in) throw CLI::ValidationError("--masses", "cannot open " + masses_csv);
      std::vector<double> mass;
      std::string line;
      while (std::getline(in, line)) {
        if (!line.empty()) mass.push_back(std::stod(line));
      }
      return DyadicDomain(depth, std::move(mass), shifts);
    }
    if (mass_seed != 0) {
      Rng rng(mass_seed);
      std::vector<double> mass(std::size_t(n), 0.0);
      for (auto& m : mass) m = std::exp(0.5 * rng.normal());
      return DyadicDomain(depth, std::move(mass), shifts);
    }
    return DyadicDomain::uniform(depth, shifts);
  }
};

// Named grid-function generators, reusable with a flag prefix so a command
// can take several functions (e.g. both weights of a pair).
struct FnOpts {
  std::string kind = "lognormal";
  double value = 1.0;
  double x0 = 0.5;
  double alpha = 0.3;
  double sigma = 0.75;
  std::uint64_t seed = 1;
  std::string csv;
  std::int64_t cell = 0;

  void attach(CLI::App* cmd, const std::string& prefix, const std::string& what) {
    const std::string p = prefix.empty() ? "--fn" : "--" + prefix;
    cmd->add_option(p, kind, what + " generator: constant|power|lognormal|indicator|csv");
    cmd->add_option(p + "-value", value, what + ": constant value");
    cmd->add_option(p + "-x0", x0, what + ": power singularity location");
    cmd->add_option(p + "-alpha", alpha, what + ": power singularity exponent");
    cmd->add_option(p + "-sigma", sigma, what + ": lognormal sigma");
    cmd->add_option(p + "-seed", seed, what + ": lognormal seed");
    cmd->add_option(p + "-csv", csv, what + ": CSV file, one value per row");
    cmd->add_option(p + "-cell", cell, what + ": indicator cell");
  }

  GridFunction build(const DyadicDomain& d) const {
    if (kind == "constant") return GridFunction::constant(d, value);
    if (kind == "power") return GridFunction::power_singularity(d, x0, alpha);
    if (kind == "lognormal") return GridFunction::lognormal(d, seed, sigma);
    if (kind == "indicator") return GridFunction::indicator(d, {cell});
    if (kind == "csv") return GridFunction::from_csv(d, csv);
    throw CLI::ValidationError("--fn", "unknown generator " + kind);
  }
};

// Young-function selection shared by bp-test / norms / maximal.
struct YoungOpts {
  std::string family = "power";
  double r = 2.0;
  double p0 = 2.0;
  double delta = 1.0;
  std::string csv;
  bool normalize = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family, "power|log-bump|loglog-bump|table");
    cmd->add_option("--r", r, "power family exponent");
    cmd->add_option("--p0", p0, "bump families: main exponent");
    cmd->add_option("--delta", delta, "bump families: log exponent");
    cmd->add_option("--table-csv", csv, "table family: two-column CSV (t, A(t))");
    cmd->add_flag("--normalize", normalize, "rescale so that A(1) = 1");
  }

  YoungFunction build() const {
    YoungFunction a = [&] {
      if (family == "power") return YoungFunction::power(r);
      if (family == "log-bump") return YoungFunction::log_bump(p0, delta);
      if (family == "loglog-bump") return YoungFunction::loglog_bump(p0, delta);
      if (family == "table") return YoungFunction::table_from_csv(csv);
      throw CLI::ValidationError("--family", "unknown family " + family);
    }();
    return normalize ? a.normalized() : a;
  }
};

struct SpaceOpts {
  std::string space = "lr";
  double r = 2.0;
  YoungOpts young;

  void attach(CLI::App* cmd) {
    cmd->add_option("--space", space, "lr|orlicz");
    cmd->add_option("--lr", r, "exponent for --space lr (inf allowed)");
    young.attach(cmd);
  }

  BanachSpaceSpec build() const {
    if (space == "lr") return BanachSpaceSpec::Lr(r);
    if (space == "orlicz") return BanachSpaceSpec::orlicz(young.build());
    throw CLI::ValidationError("--space", "unknown space " + space);
  }
};

int cmd_bp_test(const YoungOpts& yo, double p, const std::string& out_path) {
  const YoungFunction a = yo.build();
  const BpTestResult r = a.bp_test(p);
  json rep{{"young", a.describe()},
           {"p", p},
           {"verdict", to_string(r.verdict)},
           {"numeric", to_string(r.numeric)},
           {"analytic", r.analytic ? json(to_string(*r.analytic)) : json(nullptr)},
           {"tail_integrals", r.tail_integrals}};
  emit(rep.dump(2), out_path);
  return kExitOk;
}

int cmd_norms(const DomainOpts& dom, const FnOpts& fn, const SpaceOpts& sp,
              const std::string& out_path) {
  const DyadicDomain d = dom.build();
  const GridFunction f = fn.build(d);
  const BanachSpaceSpec y = sp.build();
  std::ostringstream out;
  out << "shift,level,index,norm\n";
  for (int s = 0; s < d.num_shifts(); ++s) {
    for (int level = 0; level <= d.depth(); ++level) {
      for (std::int64_t i = 0; i < (std::int64_t(1) << level); ++i) {
        const CubeId q{s, level, i};
        out << s << "," << level << "," << i << "," << y.norm_on_cube(d, f, q) << "\n";
      }
    }
  }
  emit(out.str(), out_path);
  return kExitOk;
}

int cmd_maximal(const DomainOpts& dom, const FnOpts& fn, const std::string& kind,
                const SpaceOpts& sp, std::optional<int> only_shift,
                const std::string& out_path) {
  const DyadicDomain d = dom.build();
  const GridFunction f = fn.build(d);
  MaximalSpec spec = [&] {
    if (kind == "hl") return MaximalSpec::hl();
    if (kind == "lq") return MaximalSpec::lq(sp.r);
    if (kind == "orlicz") return MaximalSpec::orlicz(sp.young.build());
    if (kind == "associate") return MaximalSpec::associate(sp.build());
    throw CLI::ValidationError("--kind", "unknown maximal kind " + kind);
  }();
  const GridFunction m = maximal(d, f, spec, only_shift);
  std::ostringstream out;
  out << "cell,f,maximal\n";
  for (std::int64_t i = 0; i < d.size(); ++i) {
    out << i << "," << f[i] << "," << m[i] << "\n";
  }
  emit(out.str(), out_path);
  return kExitOk;
}

int cmd_sparse(const DomainOpts& dom, const FnOpts& fn, double lambda, int shift,
               std::uint64_t random_seed, const std::string& verify_path,
               const std::string& family_out, const std::string& out_path) {
  const DyadicDomain d = dom.build();
  std::optional<SparseFamily> s;
  if (!verify_path.empty()) {
    std::ifstream in(verify_path);
    if (!in) throw CLI::ValidationError("--verify", "cannot open " + verify_path);
    std::stringstream buf;
    buf << in.rdbuf();
    s.emplace(SparseFamily::deserialize(d, buf.str()));
  } else if (random_seed != 0) {
    Rng rng(random_seed);
    s.emplace(random_sparse(d, rng, shift));
  } else {
    s.emplace(build_cz_sparse(d, fn.build(d), lambda, shift));
  }
  const auto [ok, worst] = verify_sparsity(d, *s);
  json cubes = json::array();
  for (const auto& q : s->cubes()) cubes.push_back(cube_json(q));
  json rep{{"size", s->size()},
           {"sparsity_ok", ok},
           {"worst_covered_ratio", worst},
           {"cubes", cubes}};
  if (!family_out.empty()) {
    std::ofstream out(family_out);
    if (!out) throw CLI::ValidationError("--family-out", "cannot open " + family_out);
    out << s->serialize();
  }
  emit(rep.dump(2), out_path);
  return ok ? kExitOk : kExitViolation;
}

int cmd_constants(const DomainOpts& dom, const FnOpts& wfn, const FnOpts& vfn,
                  const SpaceOpts& sp, double p, double q, double r,
                  const std::string& which, const std::string& out_path) {
  const DyadicDomain d = dom.build();
  const GridFunction w = wfn.build(d);
  const GridFunction v = vfn.build(d);
  json rep = json::array();
  auto record = [&](const std::string& name, const WitnessedConstant& c, json params) {
    rep.push_back(json{{"name", name},
                       {"constant", c.value},
                       {"witness_cube", cube_json(c.witness)},
                       {"parameters", std::move(params)}});
  };
  const bool all = which == "all";
  if (all || which == "ap") {
    record("two_weight_ap", two_weight_ap_constant(d, w, v, p), json{{"p", p}});
  }
  if (all || which == "neugebauer") {
    record("neugebauer", neugebauer_constant(d, w, v, p, r), json{{"p", p}, {"r", r}});
  }
  if (all || which == "bump") {
    const WeightPair pair{w, v, sp.build(), q};
    record("bump", bump_constant(d, pair, q), json{{"q", q}, {"space", pair.y.describe()}});
  }
  if (all || which == "rh") {
    record("reverse_holder", reverse_holder_constant(d, w, p), json{{"p", p}});
  }
  if (all || which == "a1") {
    rep.push_back(json{{"name", "a1"},
                       {"constant", a1_constant(d, w)},
                       {"witness_cube", nullptr},
                       {"parameters", json::object()}});
  }
  if (rep.empty()) throw CLI::ValidationError("--which", "unknown constant " + which);
  emit(rep.dump(2), out_path);
  return kExitOk;
}

json instance_json(const VerifyInstance& inst) {
  return json{{"depth", inst.d.depth()},     {"p", inst.p},
              {"q", inst.pair.q},            {"space", inst.pair.y.describe()},
              {"sparse_size", inst.s.size()}, {"sparse_shift", inst.s.shift()}};
}

int cmd_verify_step1(const std::string& preset, std::uint64_t seed, int depth, int count,
                     int jobs, const std::string& out_path) {
  const PairPreset pp = pair_preset_from_string(preset);
  std::vector<json> lines(static_cast<std::size_t>(count));
  std::atomic<int> violations{0};
  detail::parallel_for(count, jobs, [&](int i) {
    const VerifyInstance inst = make_verify_instance(seed + std::uint64_t(i), depth, pp);
    const Step1Report rep = step1_check(inst.d, inst.s, inst.pair, inst.f, inst.rho, inst.p);
    if (!rep.pass) ++violations;
    lines[std::size_t(i)] =
        json{{"instance", i},
             {"seed", seed + std::uint64_t(i)},
             {"preset", to_string(pp)},
             {"parameters", instance_json(inst)},
             {"lhs", rep.lhs},
             {"rhs", rep.rhs},
             {"gamma", rep.gamma},
             {"bump_k", rep.bump_k},
             {"rh_kappa", rep.rh_kappa},
             {"tracked_constant", rep.tracked_constant},
             {"pass", rep.pass}};
  });
  std::ostringstream out;
  for (const auto& l : lines) out << l.dump() << "\n";
  emit(out.str(), out_path);
  return violations.load() == 0 ? kExitOk : kExitViolation;
}

int cmd_verify_main(const std::string& preset, std::uint64_t seed, int depth, int count,
                    int jobs, const std::string& out_path) {
  const PairPreset pp = pair_preset_from_string(preset);
  std::vector<json> lines(static_cast<std::size_t>(count));
  std::atomic<int> violations{0};
  detail::parallel_for(count, jobs, [&](int i) {
    const VerifyInstance inst = make_verify_instance(seed + std::uint64_t(i), depth, pp);
    const MainTheoremReport rep =
        main_theorem_check(inst.d, inst.s, inst.pair, inst.f, inst.p, inst.cfg);
    if (!rep.pass) ++violations;
    lines[std::size_t(i)] = json{{"instance", i},
                                 {"seed", seed + std::uint64_t(i)},
                                 {"preset", to_string(pp)},
                                 {"parameters", instance_json(inst)},
                                 {"lhs", rep.lhs},
                                 {"rhs", rep.rhs},
                                 {"bump_k", rep.bump_k},
                                 {"gamma_star", rep.gamma_star},
                                 {"kappa_star", rep.kappa_star},
                                 {"tight_constant", rep.tight_constant},
                                 {"coarse_constant", rep.coarse_constant},
                                 {"tight_pass", rep.tight_pass},
                                 {"coarse_pass", rep.coarse_pass},
                                 {"pass", rep.pass}};
  });
  std::ostringstream out;
  for (const auto& l : lines) out << l.dump() << "\n";
  emit(out.str(), out_path);
  return violations.load() == 0 ? kExitOk : kExitViolation;
}

int cmd_verify_perez(double p, double r_prime, double q, int min_depth, int max_depth,
                     const std::string& out_path) {
  std::vector<int> depths;
  for (int l = min_depth; l <= max_depth; ++l) depths.push_back(l);
  const StabilityReport rep = perez_stability(p, r_prime, q, depths);
  json j{{"p", p},       {"r_prime", r_prime},   {"q", q},
         {"depths", rep.depths}, {"ratios", rep.ratios}, {"drift", rep.drift},
         {"pass", rep.pass}};
  emit(j.dump(2), out_path);
  return rep.pass ? kExitOk : kExitViolation;
}

int cmd_verify_rh(std::uint64_t seed, int depth, int samples, double p, double q,
                  double ceiling, const std::string& out_path) {
  // Step-2 shaped check: S1 = T^S f w, S2 = C M_{Y'}(f v) from a step-1
  // configuration, screened over random reverse-Holder candidates.
  const VerifyInstance inst = make_verify_instance(seed, depth, PairPreset::mq);
  const Step1Report s1rep = step1_check(inst.d, inst.s, inst.pair, inst.f, inst.rho, inst.p);
  GridFunction s1 = sparse_operator(inst.d, inst.s, inst.f);
  for (std::int64_t i = 0; i < inst.d.size(); ++i) s1[i] *= inst.pair.w[i];
  GridFunction s2 = maximal(inst.d, [&] {
    GridFunction fv = inst.f;
    for (std::int64_t i = 0; i < inst.d.size(); ++i) fv[i] *= inst.pair.v[i];
    return fv;
  }(), MaximalSpec::associate(inst.pair.y));
  for (auto& x : s2.values()) x *= s1rep.tracked_constant;

  Rng rng(seed + 99);
  std::vector<GridFunction> rhos;
  for (int i = 0; i < samples; ++i) {
    rhos.push_back(GridFunction::lognormal(inst.d, rng.next_u64(), rng.uniform(0.1, 0.6)));
  }
  const RhExtrapolationReport rep =
      rh_extrapolation_check(inst.d, s1, s2, inst.p, inst.pair.q, rhos, ceiling);
  json j{{"seed", seed},
         {"depth", depth},
         {"p", inst.p},
         {"q", inst.pair.q},
         {"rh_ceiling", ceiling},
         {"admitted", rep.admitted},
         {"discarded", rep.discarded},
         {"hypothesis_pass", rep.hypothesis_pass},
         {"witness_hypothesis_pass", rep.witness_hypothesis_pass},
         {"c_emp", rep.c_emp},
         {"c_bound", rep.c_bound},
         {"conclusion_pass", rep.conclusion_pass},
         {"flags_bug", rep.flags_bug}};
  emit(j.dump(2), out_path);
  return (!rep.flags_bug && rep.conclusion_pass) ? kExitOk : kExitViolation;
}

int cmd_blowup(double alpha, double beta, double p, int min_depth, int max_depth,
               const std::string& out_path) {
  std::vector<int> depths;
  for (int l = min_depth; l <= max_depth; ++l) depths.push_back(l);
  const std::vector<double> vals = power_weight_blowup(alpha, beta, p, depths);
  std::ostringstream out;
  out << "depth,product,ratio_to_previous\n";
  for (std::size_t i = 0; i < vals.size(); ++i) {
    out << depths[i] << "," << vals[i] << ",";
    if (i > 0) out << vals[i] / vals[i - 1];
    out << "\n";
  }
  emit(out.str(), out_path);
  return kExitOk;
}

int cmd_suite(bool quick, int jobs, std::uint64_t seed, const std::string& out_path) {
  AcceptanceConfig cfg;
  cfg.jobs = jobs;
  cfg.seed = seed;
  if (quick) {
    cfg.scale = 0.1;
    cfg.max_depth = 12;
  }
  const std::vector<CriterionResult> results = run_acceptance(cfg);
  std::ostringstream out;
  bool all = true;
  for (const auto& r : results) {
    out << "criterion " << r.id << " (" << r.name << "): " << (r.pass ? "PASS" : "FAIL")
        << " — " << r.detail << "\n";
    all = all && r.pass;
  }
  out << (all ? "suite: PASS" : "suite: FAIL") << "\n";
  emit(out.str(), out_path);
  return all ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dyadic two-weight inequality certification toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key = value config file; flags override it");

  std::string out_path;
  app.add_option("--out", out_path, "write output to this file instead of stdout")
      ->configurable(false);

  // bp-test
  auto* bp = app.add_subcommand("bp-test", "B_p membership of a Young function");
  YoungOpts bp_young;
  bp_young.attach(bp);
  double bp_p = 2.0;
  bp->add_option("--p", bp_p, "target exponent p");

  // norms
  auto* norms = app.add_subcommand("norms", "cube norm table (CSV)");
  DomainOpts norms_dom;
  FnOpts norms_fn;
  SpaceOpts norms_sp;
  norms_dom.attach(norms);
  norms_fn.attach(norms, "", "function");
  norms_sp.attach(norms);

  // maximal
  auto* mx = app.add_subcommand("maximal", "apply a maximal operator (CSV)");
  DomainOpts mx_dom;
  FnOpts mx_fn;
  SpaceOpts mx_sp;
  std::string mx_kind = "hl";
  int mx_shift = -1;
  mx_dom.attach(mx);
  mx_fn.attach(mx, "", "function");
  mx_sp.attach(mx);
  mx->add_option("--kind", mx_kind, "hl|lq|orlicz|associate");
  mx->add_option("--only-shift", mx_shift, "restrict to one grid (-1 = all)");

  // sparse
  auto* sp = app.add_subcommand("sparse", "build or verify a sparse family");
  DomainOpts sp_dom;
  FnOpts sp_fn;
  double sp_lambda = 2.0;
  int sp_shift = 0;
  std::uint64_t sp_random = 0;
  std::string sp_verify, sp_family_out;
  sp_dom.attach(sp);
  sp_fn.attach(sp, "", "stopping-time function");
  sp->add_option("--lambda", sp_lambda, "stopping threshold (>= 2)");
  sp->add_option("--shift", sp_shift, "grid shift");
  sp->add_option("--random-seed", sp_random, "build a random family instead (0 = off)");
  sp->add_option("--verify", sp_verify, "verify a serialized family from this file");
  sp->add_option("--family-out", sp_family_out, "write the serialized family here");

  // constants
  auto* cst = app.add_subcommand("constants", "weight-class constants (JSON)");
  DomainOpts cst_dom;
  FnOpts cst_w, cst_v;
  SpaceOpts cst_sp;
  double cst_p = 2.0, cst_q = 3.0, cst_r = 1.5;
  std::string cst_which = "all";
  cst_dom.attach(cst);
  cst_w.attach(cst, "w", "weight w");
  cst_v.attach(cst, "v", "weight v");
  cst_sp.attach(cst);
  cst->add_option("--p", cst_p, "exponent p");
  cst->add_option("--q", cst_q, "bump exponent q");
  cst->add_option("--neugebauer-r", cst_r, "Neugebauer power r");
  cst->add_option("--which", cst_which, "ap|neugebauer|bump|rh|a1|all");

  // verify-step1 / verify-main
  auto* v1 = app.add_subcommand("verify-step1", "randomized step-1 inequality sweep");
  auto* vm = app.add_subcommand("verify-main", "randomized main-theorem sweep");
  std::string v1_preset = "mq-pair", vm_preset = "mq-pair";
  std::uint64_t v1_seed = 1, vm_seed = 1;
  int v1_depth = 10, vm_depth = 9, v1_count = 20, vm_count = 20;
  int jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for instance sweeps")->configurable(false);
  v1->add_option("--preset", v1_preset, "mq-pair|ma-pair|constant");
  v1->add_option("--seed", v1_seed, "base seed");
  v1->add_option("--depth", v1_depth, "grid depth");
  v1->add_option("--count", v1_count, "number of instances");
  vm->add_option("--preset", vm_preset, "mq-pair|ma-pair|constant");
  vm->add_option("--seed", vm_seed, "base seed");
  vm->add_option("--depth", vm_depth, "grid depth");
  vm->add_option("--count", vm_count, "number of instances");

  // verify-perez
  auto* vp = app.add_subcommand("verify-perez", "maximal-theorem stability ladder");
  double vp_p = 2.0, vp_rp = 1.5, vp_q = 3.0;
  int vp_min = 8, vp_max = 14;
  vp->add_option("--p", vp_p, "exponent p");
  vp->add_option("--rprime", vp_rp, "associate exponent r' (Y' = L^{r'})");
  vp->add_option("--q", vp_q, "pair exponent q");
  vp->add_option("--min-depth", vp_min, "first depth");
  vp->add_option("--max-depth", vp_max, "last depth");

  // verify-rh
  auto* vr = app.add_subcommand("verify-rh", "reverse-Holder extrapolation harness");
  std::uint64_t vr_seed = 1;
  int vr_depth = 9, vr_samples = 50;
  double vr_p = 0.0, vr_q = 0.0, vr_ceiling = 8.0;
  vr->add_option("--seed", vr_seed, "instance seed");
  vr->add_option("--depth", vr_depth, "grid depth");
  vr->add_option("--samples", vr_samples, "number of rho samples");
  vr->add_option("--ceiling", vr_ceiling, "RH_{q'} admission ceiling");

  // blowup
  auto* bl = app.add_subcommand("blowup", "centered power-weight products (CSV)");
  double bl_alpha = 0.4, bl_beta = 0.2, bl_p = 2.0;
  int bl_min = 8, bl_max = 16;
  bl->add_option("--alpha", bl_alpha, "exponent of w");
  bl->add_option("--beta", bl_beta, "exponent of v");
  bl->add_option("--p", bl_p, "exponent p");
  bl->add_option("--min-depth", bl_min, "first depth");
  bl->add_option("--max-depth", bl_max, "last depth");

  // suite
  auto* su = app.add_subcommand("suite", "full randomized acceptance run");
  bool su_quick = false;
  std::uint64_t su_seed = 20240901;
  su->add_flag("--quick", su_quick, "reduced instance counts and depths");
  su->add_option("--seed", su_seed, "base seed");

  (void)vr_p;
  (void)vr_q;

  // Let global options (--out, --jobs, --config) appear after the subcommand.
  for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; })) {
    sc->fallthrough();
  }

  try {
    app.parse(argc, argv);
    if (bp->parsed()) return cmd_bp_test(bp_young, bp_p, out_path);
    if (norms->parsed()) return cmd_norms(norms_dom, norms_fn, norms_sp, out_path);
    if (mx->parsed()) {
      return cmd_maximal(mx_dom, mx_fn, mx_kind, mx_sp,
                         mx_shift < 0 ? std::nullopt : std::optional<int>(mx_shift), out_path);
    }
    if (sp->parsed()) {
      return cmd_sparse(sp_dom, sp_fn, sp_lambda, sp_shift, sp_random, sp_verify,
                        sp_family_out, out_path);
    }
    if (cst->parsed()) {
      return cmd_constants(cst_dom, cst_w, cst_v, cst_sp, cst_p, cst_q, cst_r, cst_which,
                           out_path);
    }
    if (v1->parsed()) {
      return cmd_verify_step1(v1_preset, v1_seed, v1_depth, v1_count, jobs, out_path);
    }
    if (vm->parsed()) {
      return cmd_verify_main(vm_preset, vm_seed, vm_depth, vm_count, jobs, out_path);
    }
    if (vp->parsed()) return cmd_verify_perez(vp_p, vp_rp, vp_q, vp_min, vp_max, out_path);
    if (vr->parsed()) {
      return cmd_verify_rh(vr_seed, vr_depth, vr_samples, vr_p, vr_q, vr_ceiling, out_path);
    }
    if (bl->parsed()) return cmd_blowup(bl_alpha, bl_beta, bl_p, bl_min, bl_max, out_path);
    if (su->parsed()) return cmd_suite(su_quick, jobs, su_seed, out_path);
    std::cerr << "no subcommand given\n";
    return kExitConfig;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" || e.get_name() == "CallForVersion" ? kExitOk
                                                                             : kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}

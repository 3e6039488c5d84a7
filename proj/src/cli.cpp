#include "liftlab/cli.hpp"

#include "liftlab/behavioural.hpp"
#include "liftlab/convex_powerset.hpp"
#include "liftlab/guards.hpp"
#include "liftlab/json_io.hpp"
#include "liftlab/levy_prokhorov.hpp"
#include "liftlab/liftings.hpp"
#include "liftlab/random_instances.hpp"
#include "liftlab/transport.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>

namespace liftlab {

namespace {

// Thrown by --verify when a witness does not re-check.
void require_verified(bool ok, const std::string& what) {
  if (!ok) throw InternalError(what + " failed independent verification");
}

// The carrier(s) of a command: a pseudometric space or a fuzzy relation.
struct Carrier {
  std::optional<PseudometricSpace> space;
  FuzzyRelation relation;

  const std::vector<std::string>& sources() const { return relation.sources; }
  const std::vector<std::string>& targets() const { return relation.targets; }
};

Carrier load_carrier(const std::string& space_path, const std::string& relation_path) {
  if (space_path.empty() == relation_path.empty()) {
    throw ValidationError("give exactly one of --space and --relation");
  }
  Carrier c;
  if (!space_path.empty()) {
    c.space = space_from_json(load_json_file(space_path));
    c.relation = as_relation(*c.space);
  } else {
    c.relation = relation_from_json(load_json_file(relation_path));
  }
  return c;
}

ModalArgument load_argument(const Modality& m, const std::string& path, const std::vector<std::string>& points) {
  const Json j = load_json_file(path);
  switch (m.kind) {
    case ModalityKind::sup:
    case ModalityKind::inf:
      return point_set_from_json(j, points);
    case ModalityKind::convex_sup_expectation:
      return convex_set_from_json(j, points);
    default:
      return distribution_from_json(j, points);
  }
}

const Distribution& as_distribution(const ModalArgument& arg) {
  if (const auto* mu = std::get_if<Distribution>(&arg)) return *mu;
  throw ValidationError("this construction needs distributions");
}

const PseudometricSpace& need_space(const Carrier& c, const std::string& what) {
  if (!c.space) throw ValidationError(what + " needs --space");
  return *c.space;
}

void print(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json modality_json(const Modality& m) {
  if (m.kind == ModalityKind::p_moment) return Json{{"p_moment", to_string(m.p)}, {"digits", m.digits}};
  return m.name();
}

// ---------------------------------------------------------------- dist

struct DistArgs {
  std::string modality = "expectation";
  std::string construction = "wasserstein";
  std::string space;
  std::string relation;
  std::string mu;
  std::string nu;
  std::string delta = "1/16";
  int digits = kDefaultDecimalDigits;
  bool witness = false;
  bool verify = false;
  bool symmetrized = false;
};

void run_dist(const DistArgs& a, std::ostream& out) {
  const Carrier c = load_carrier(a.space, a.relation);
  Json result;
  if (a.construction == "lp-direct") {
    const PseudometricSpace& d = need_space(c, "lp-direct");
    const Distribution mu = distribution_from_json(load_json_file(a.mu), d.points);
    const Distribution nu = distribution_from_json(load_json_file(a.nu), d.points);
    const Rational value = lp_direct(d, mu, nu, a.symmetrized);
    result["construction"] = a.construction;
    result["symmetrized"] = a.symmetrized;
    result["value"] = scalar_to_json(value, a.digits);
    if (a.verify) {
      require_verified(lp_direct(d, mu, nu, !a.symmetrized) == value, "lp-direct value");
      result["verified"] = true;
    }
    print(out, result);
    return;
  }
  const Modality m = a.construction == "ky-fan" ? Modality::generally() : parse_modality(a.modality);
  const ModalArgument s = load_argument(m, a.mu, c.sources());
  const ModalArgument t = load_argument(m, a.nu, c.targets());
  LiftOptions options;
  options.grid_delta = parse_rational(a.delta);
  LiftedValue v;
  if (a.construction == "wasserstein") {
    v = wasserstein(m, c.relation, s, t, options);
  } else if (a.construction == "ky-fan") {
    v = ky_fan(c.relation, as_distribution(s), as_distribution(t));
  } else if (a.construction == "kantorovich") {
    v = c.space ? kantorovich(m, *c.space, s, t, options) : kantorovich_relational(m, c.relation, s, t, options);
  } else {
    throw ValidationError("unknown construction \"" + a.construction + "\"");
  }
  const int digits = m.kind == ModalityKind::p_moment ? m.digits : a.digits;
  result["modality"] = modality_json(m);
  result["construction"] = a.construction;
  const Json lifted = to_json(v, c.sources(), c.targets(), digits, a.witness);
  for (const auto& [key, value] : lifted.items()) result[key] = value;
  if (a.verify) {
    require_verified(verify_lifted_value(m, c.relation, s, t, v), "lifted value witness");
    result["verified"] = true;
  }
  print(out, result);
}

// ---------------------------------------------------------------- duality-check

struct DualityArgs {
  std::string modality = "expectation";
  std::string space;
  std::string relation;
  std::string mu;
  std::string nu;
  std::string delta = "1/16";
  int digits = kDefaultDecimalDigits;
};

void run_duality(const DualityArgs& a, std::ostream& out) {
  const Carrier c = load_carrier(a.space, a.relation);
  const Modality m = parse_modality(a.modality);
  const ModalArgument s = load_argument(m, a.mu, c.sources());
  const ModalArgument t = load_argument(m, a.nu, c.targets());
  LiftOptions options;
  options.grid_delta = parse_rational(a.delta);
  const LiftedValue w = wasserstein(m, c.relation, s, t, options);
  const LiftedValue k =
      c.space ? kantorovich(m, *c.space, s, t, options) : kantorovich_relational(m, c.relation, s, t, options);
  const int digits = m.kind == ModalityKind::p_moment ? m.digits : a.digits;
  Json result;
  result["modality"] = modality_json(m);
  result["kantorovich"] = to_json(k, c.sources(), c.targets(), digits, false);
  result["wasserstein"] = to_json(w, c.sources(), c.targets(), digits, false);
  if (is_exact(k.value) && is_exact(w.value) && k.exactness == Exactness::exact) {
    const Rational gap = exact_value(w.value) - exact_value(k.value);
    result["equal"] = gap == 0;
    result["gap"] = to_string(gap);
  } else {
    // Only bounds are known: the gap lies in [0, W - lower].
    result["equal"] = nullptr;
    result["gap_upper_bound"] = to_decimal_string(Decimal(to_decimal(w.value) - to_decimal(k.value)), digits);
  }
  if (m.kind == ModalityKind::generally && c.space) {
    result["lp_direct"] = to_string(lp_direct(*c.space, as_distribution(s), as_distribution(t)));
  }
  print(out, result);
}

// ---------------------------------------------------------------- witness

struct WitnessArgs {
  std::string kind = "duality";
  std::string epsilon;
  std::string space;
  std::string relation;
  std::string mu;
  std::string nu;
  bool verify = false;
};

void run_witness(const WitnessArgs& a, std::ostream& out) {
  const Carrier c = load_carrier(a.space, a.relation);
  const Rational eps = parse_rational(a.epsilon);
  const Distribution mu = distribution_from_json(load_json_file(a.mu), c.sources());
  const Distribution nu = distribution_from_json(load_json_file(a.nu), c.targets());
  Json result;
  result["kind"] = a.kind;
  if (a.kind == "duality") {
    const DualityWitness w = duality_witness(c.relation, mu, nu, eps);
    result["witness"] = to_json(w, c.sources(), c.targets());
    if (a.verify) {
      require_verified(verify_duality_witness(c.relation, mu, nu, w), "duality witness");
      result["verified"] = true;
    }
  } else if (a.kind == "crisp") {
    const CrispRelation r = crisp_threshold(c.relation, eps);
    const CrispPricePair pair = crisp_price_pair(r, mu, nu);
    result["epsilon"] = to_string(eps);
    result["witness"] = to_json(pair, c.sources(), c.targets());
    if (a.verify) {
      require_verified(verify_crisp_price_pair(r, mu, nu, pair), "crisp price pair");
      result["verified"] = true;
    }
  } else {
    throw ValidationError("unknown witness kind \"" + a.kind + "\"");
  }
  print(out, result);
}

// ---------------------------------------------------------------- convex

bool verify_hk(const PseudometricSpace& d, const ConvexSet& a, const ConvexSet& b, const HkResult& hk) {
  if (hk.dual) {
    return is_nonexpansive(d, *hk.dual) && convex_price_gap(*hk.dual, a, b) == hk.value;
  }
  auto direction = [&](const DirectionWitness& w, const ConvexSet& from, const ConvexSet& to) {
    const Distribution nearest = convex_combine(w.coefficients, to.generators());
    if (nearest != w.nearest) return false;
    return solve_transport(d.d, from.generators().at(w.generator), nearest).cost == w.value &&
           point_to_set_distance(d, from.generators()[w.generator], to).value == w.value;
  };
  if (!hk.a_to_b || !hk.b_to_a) return false;
  return direction(*hk.a_to_b, a, b) && direction(*hk.b_to_a, b, a) &&
         std::max(hk.a_to_b->value, hk.b_to_a->value) == hk.value;
}

HkResult run_hk(const std::string& algorithm, const PseudometricSpace& d, const ConvexSet& a, const ConvexSet& b) {
  if (algorithm == "composite") return dhk_composite(d, a, b);
  if (algorithm == "spanning-tree") return dhk_spanning_tree(d, a, b);
  if (algorithm == "dual") return dhk_dual(d, a, b);
  throw ValidationError("unknown algorithm \"" + algorithm + "\"");
}

struct ConvexArgs {
  std::string algorithm = "composite";
  std::string space;
  std::string a;
  std::string b;
  bool verify = false;
};

void run_convex(const ConvexArgs& args, std::ostream& out) {
  const PseudometricSpace d = space_from_json(load_json_file(args.space));
  const ConvexSet a = convex_set_from_json(load_json_file(args.a), d.points);
  const ConvexSet b = convex_set_from_json(load_json_file(args.b), d.points);
  const HkResult hk = run_hk(args.algorithm, d, a, b);
  Json result = to_json(hk, d.points);
  if (args.verify) {
    require_verified(verify_hk(d, a, b, hk), "convex-powerset witness");
    result["verified"] = true;
  }
  print(out, result);
}

// ---------------------------------------------------------------- behavioural

struct BehaviouralArgs {
  std::string coalgebra;
  std::string modality = "expectation";
  std::string construction = "wasserstein";
  std::size_t max_iterations = 1000;
  double tolerance = 1e-9;
};

void run_behavioural(const BehaviouralArgs& a, std::ostream& out) {
  const Coalgebra c = coalgebra_from_json(load_json_file(a.coalgebra));
  Lifting lifting;
  lifting.modality = parse_modality(a.modality);
  if (a.construction == "kantorovich") {
    lifting.construction = Construction::kantorovich;
  } else if (a.construction != "wasserstein") {
    throw ValidationError("unknown construction \"" + a.construction + "\"");
  }
  const MetricIterate it = behavioural_distance(c, lifting, a.max_iterations, a.tolerance);
  Json result;
  result["states"] = c.states;
  result["modality"] = modality_json(lifting.modality);
  result["construction"] = to_string(lifting.construction);
  result["distance"] = to_json(it.d);
  result["iterations"] = it.iteration;
  result["converged"] = it.converged;
  result["stop_reason"] = to_string(it.reason);
  result["monotone"] = it.monotone;
  print(out, result);
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::string suite = "convex";
  std::vector<std::size_t> sizes{3, 4, 5, 10};
  std::size_t generators = 5;
  std::size_t repeats = 3;
  std::uint64_t seed = 1;
};

void run_bench(const BenchArgs& a, std::ostream& out) {
  if (a.suite != "convex") throw ValidationError("unknown bench suite \"" + a.suite + "\"");
  if (a.repeats == 0) throw ValidationError("--repeats must be positive");
  out << "algorithm,n,a0,b0,seconds,value,note\n";
  for (std::size_t n : a.sizes) {
    InstanceGenerator gen(a.seed + n);
    const PseudometricSpace d = gen.pseudometric(n);
    const ConvexSet sa = gen.convex_set(n, a.generators);
    const ConvexSet sb = gen.convex_set(n, a.generators);
    for (const std::string algorithm : {"composite", "dual", "spanning-tree"}) {
      const std::string prefix =
          algorithm + "," + std::to_string(n) + "," + std::to_string(a.generators) + "," + std::to_string(a.generators);
      if (algorithm == "spanning-tree" && n > guard_limits().spanning_tree_points) {
        out << prefix << ",,,guarded: K_{n,n} has " << bipartite_spanning_tree_count(n)
            << " spanning trees (n^(2n-2))\n";
        continue;
      }
      std::vector<double> seconds;
      Rational value;
      for (std::size_t r = 0; r < a.repeats; ++r) {
        const auto start = std::chrono::steady_clock::now();
        value = run_hk(algorithm, d, sa, sb).value;
        const auto stop = std::chrono::steady_clock::now();
        seconds.push_back(std::chrono::duration<double>(stop - start).count());
      }
      std::sort(seconds.begin(), seconds.end());
      std::string note;
      if (algorithm == "spanning-tree") note = std::to_string(bipartite_spanning_tree_count(n)) + " spanning trees";
      out << prefix << "," << seconds[seconds.size() / 2] << "," << to_string(value) << "," << note << "\n";
    }
  }
}

// ---------------------------------------------------------------- examples

Json check(const std::string& quantity, const std::string& expected, const std::string& computed, bool match) {
  return Json{{"quantity", quantity}, {"expected", expected}, {"computed", computed}, {"match", match}};
}

Json check(const std::string& quantity, const Rational& expected, const Rational& computed) {
  return check(quantity, to_string(expected), to_string(computed), expected == computed);
}

Json example_hexagon() {
  const PseudometricSpace d = discrete_space({"x", "y", "z"});
  auto dist = [](int a, int b, int c) {
    return Distribution::from_masses({Rational(a, 6), Rational(b, 6), Rational(c, 6)});
  };
  const Distribution mu0 = dist(2, 2, 2);
  const Distribution mu1 = dist(4, 2, 0);
  const Distribution mu2 = dist(0, 4, 2);
  const Distribution mu3 = dist(2, 0, 4);
  const ConvexSet a({mu0, mu1});
  const ConvexSet b({mu2, mu3});
  const PointToSet p = point_to_set_distance(d, mu1, b);
  const Distribution expected_nearest = dist(1, 2, 3);
  const Rational vertices = generator_only_distance(d, mu1, b);
  const HkResult composite = dhk_composite(d, a, b);
  const HkResult dual = dhk_dual(d, a, b);
  const HkResult tree = dhk_spanning_tree(d, a, b);
  Json checks = Json::array();
  checks.push_back(check("distance from mu1 to conv(B0)", Rational(1, 2), p.value));
  checks.push_back(check("nearest point of conv(B0)", to_json(expected_nearest, d.points).dump(),
                         to_json(p.nearest, d.points).dump(), p.nearest == expected_nearest));
  checks.push_back(check("distance from mu1 to the generators of B0", Rational(2, 3), vertices));
  checks.push_back(check("d_HK (composite)", Rational(1, 2), composite.value));
  checks.push_back(check("d_HK (dual)", Rational(1, 2), dual.value));
  checks.push_back(check("d_HK (spanning tree)", Rational(1, 2), tree.value));
  return checks;
}

Json example_p_wasserstein_gap() {
  const PseudometricSpace d = discrete_space({"x", "y"});
  const Distribution mu = Distribution::from_masses({Rational(2, 3), Rational(1, 3)});
  const Distribution nu = Distribution::from_masses({Rational(1, 3), Rational(2, 3)});
  const Modality m = Modality::p_moment(Rational(2));
  const LiftedValue w = wasserstein(m, d, mu, nu);
  const Decimal expected = 1 / boost::multiprecision::sqrt(Decimal(3));
  const Decimal computed = to_decimal(w.value);
  const LiftedValue lower = kantorovich_grid_oracle(m, d, mu, nu, Rational(1, 32));
  const Rational proved_upper(1, 3);  // the bound shown for this instance
  const Rational expectation_distance = exact_value(wasserstein(Modality::expectation(), d, mu, nu).value);
  Json checks = Json::array();
  checks.push_back(check("W_E", Rational(1, 3), expectation_distance));
  checks.push_back(check("W for p = 2", to_decimal_string(expected), to_decimal_string(computed),
                         abs(expected - computed) <= decimal_tolerance()));
  checks.push_back(check("K lower bound (grid 1/32) <= 1/3", "<= 1/3", to_decimal_string(lower.value),
                         to_decimal(lower.value) <= to_decimal(proved_upper)));
  checks.push_back(check("K upper bound < W", "1/3 < " + to_decimal_string(computed), to_string(proved_upper),
                         to_decimal(proved_upper) < computed));
  return checks;
}

Json example_lp_duality() {
  const PseudometricSpace d = discrete_space({"x", "y"});
  const Distribution mu = Distribution::from_masses({Rational(2, 3), Rational(1, 3)});
  const Distribution nu = Distribution::from_masses({Rational(1, 3), Rational(2, 3)});
  const FuzzyRelation r = as_relation(d);
  const Modality g = Modality::generally();
  const DualityWitness w = duality_witness(r, mu, nu, Rational(1, 4));
  const FuzzyPredicate f({Rational(1, 5), Rational(7, 10)});
  const Distribution half = Distribution::from_masses({Rational(1, 2), Rational(1, 2)});
  Json checks = Json::array();
  checks.push_back(check("lp_direct", Rational(1, 3), lp_direct(d, mu, nu)));
  checks.push_back(check("ky_fan", Rational(1, 3), exact_value(ky_fan(r, mu, nu).value)));
  checks.push_back(check("kantorovich (generally)", Rational(1, 3), exact_value(kantorovich(g, d, mu, nu).value)));
  checks.push_back(
      check("kantorovich_relational (generally)", Rational(1, 3), exact_value(kantorovich_relational(g, r, mu, nu).value)));
  checks.push_back(check("witness margin at eps = 1/4", ">= 1/4", to_string(w.margin), w.margin >= Rational(1, 4)));
  checks.push_back(check("generally on range {1/5, 7/10}", Rational(1, 2), eval_generally(f, half)));
  return checks;
}

void run_examples(const std::string& name, std::ostream& out) {
  Json checks;
  if (name == "hexagon") {
    checks = example_hexagon();
  } else if (name == "p-wasserstein-gap") {
    checks = example_p_wasserstein_gap();
  } else if (name == "lp-duality") {
    checks = example_lp_duality();
  } else {
    throw ValidationError("unknown example \"" + name + "\"");
  }
  bool all = true;
  for (const auto& c : checks) all = all && c.at("match").get<bool>();
  print(out, Json{{"example", name}, {"checks", checks}, {"all_match", all}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact distances between distributions and convex sets of distributions", "liftlab"};
  app.require_subcommand(1);

  DistArgs dist;
  auto* dist_cmd = app.add_subcommand("dist", "Lifted distance between two distributions or point sets");
  dist_cmd->add_option("--modality", dist.modality, "expectation|sup|inf|generally|p_moment:P|convex_sup_expectation");
  dist_cmd->add_option("--construction", dist.construction, "kantorovich|wasserstein|lp-direct|ky-fan");
  dist_cmd->add_option("--space", dist.space, "Pseudometric space JSON");
  dist_cmd->add_option("--relation", dist.relation, "Fuzzy relation JSON");
  dist_cmd->add_option("--mu", dist.mu, "Source distribution / point set")->required();
  dist_cmd->add_option("--nu", dist.nu, "Target distribution / point set")->required();
  dist_cmd->add_option("--delta", dist.delta, "Grid step for p-moment lower bounds");
  dist_cmd->add_option("--digits", dist.digits, "Decimal digits in reports");
  dist_cmd->add_flag("--witness", dist.witness, "Attach the witness");
  dist_cmd->add_flag("--verify", dist.verify, "Re-check the witness independently");
  dist_cmd->add_flag("--symmetrized", dist.symmetrized, "lp-direct: impose both conditions");

  DualityArgs duality;
  auto* duality_cmd = app.add_subcommand("duality-check", "Compare the Kantorovich and Wasserstein liftings");
  duality_cmd->add_option("--modality", duality.modality, "Modality");
  duality_cmd->add_option("--space", duality.space, "Pseudometric space JSON");
  duality_cmd->add_option("--relation", duality.relation, "Fuzzy relation JSON");
  duality_cmd->add_option("--mu", duality.mu, "Source argument")->required();
  duality_cmd->add_option("--nu", duality.nu, "Target argument")->required();
  duality_cmd->add_option("--delta", duality.delta, "Grid step for p-moment lower bounds");
  duality_cmd->add_option("--digits", duality.digits, "Decimal digits in reports");

  WitnessArgs witness;
  auto* witness_cmd = app.add_subcommand("witness", "Price functions certifying a Levy-Prokhorov lower bound");
  witness_cmd->add_option("--kind", witness.kind, "duality|crisp");
  witness_cmd->add_option("--epsilon", witness.epsilon, "Threshold")->required();
  witness_cmd->add_option("--space", witness.space, "Pseudometric space JSON");
  witness_cmd->add_option("--relation", witness.relation, "Fuzzy relation JSON");
  witness_cmd->add_option("--mu", witness.mu, "Source distribution")->required();
  witness_cmd->add_option("--nu", witness.nu, "Target distribution")->required();
  witness_cmd->add_flag("--verify", witness.verify, "Re-check the witness independently");

  ConvexArgs convex;
  auto* convex_cmd = app.add_subcommand("convex", "Hausdorff-Kantorovich distance between convex sets");
  convex_cmd->add_option("--algorithm", convex.algorithm, "composite|spanning-tree|dual");
  convex_cmd->add_option("--space", convex.space, "Pseudometric space JSON")->required();
  convex_cmd->add_option("--a", convex.a, "First convex set")->required();
  convex_cmd->add_option("--b", convex.b, "Second convex set")->required();
  convex_cmd->add_flag("--verify", convex.verify, "Re-check the witnesses independently");

  BehaviouralArgs behavioural;
  auto* behavioural_cmd = app.add_subcommand("behavioural", "Behavioural distance by fixpoint iteration");
  behavioural_cmd->add_option("--coalgebra", behavioural.coalgebra, "Coalgebra JSON")->required();
  behavioural_cmd->add_option("--modality", behavioural.modality, "Modality");
  behavioural_cmd->add_option("--construction", behavioural.construction, "kantorovich|wasserstein");
  behavioural_cmd->add_option("--max-iters", behavioural.max_iterations, "Iteration cap");
  behavioural_cmd->add_option("--tolerance", behavioural.tolerance, "Stop when no entry moves more than this");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Timing CSV for the convex-powerset algorithms");
  bench_cmd->add_option("--suite", bench.suite, "convex");
  bench_cmd->add_option("--sizes", bench.sizes, "Carrier sizes")->delimiter(',');
  bench_cmd->add_option("--generators", bench.generators, "Generators per side");
  bench_cmd->add_option("--repeats", bench.repeats, "Runs per cell; the median is reported");
  bench_cmd->add_option("--seed", bench.seed, "Instance seed");

  std::string example;
  auto* examples_cmd = app.add_subcommand("examples", "Reproduce worked instances");
  examples_cmd->add_option("--name", example, "p-wasserstein-gap|hexagon|lp-duality")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return e.get_exit_code() == 0 ? app.exit(e, out, err) : (app.exit(e, out, err), 1);
  }

  try {
    if (dist_cmd->parsed()) run_dist(dist, out);
    if (duality_cmd->parsed()) run_duality(duality, out);
    if (witness_cmd->parsed()) run_witness(witness, out);
    if (convex_cmd->parsed()) run_convex(convex, out);
    if (behavioural_cmd->parsed()) run_behavioural(behavioural, out);
    if (bench_cmd->parsed()) run_bench(bench, out);
    if (examples_cmd->parsed()) run_examples(example, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const GuardError& e) {
    err << "refused: " << e.what() << '\n';
    return 1;
  } catch (const Json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace liftlab

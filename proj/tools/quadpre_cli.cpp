// quadpre: command-line front end.
//
// Exit codes: 0 success, 1 a check failed (verify-paper), 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "quadpre/quadpre.hpp"
#include "quadpre/verify/checks.hpp"

namespace {

using namespace quadpre;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Values settable from the config file; flags override them.
struct Settings {
  std::optional<unsigned long> height_bound;
  FactorBudget budget;
  int precision = 0;  // digits of decimal approximation in human output, 0 = none
  std::optional<std::string> checkpoint_dir;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

Settings load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  Settings s;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    try {
      if (key == "height_bound") s.height_bound = std::stoul(value);
      else if (key == "factor_trial_limit") s.budget.trial_limit = std::stoul(value);
      else if (key == "factor_rho_iterations") s.budget.rho_iterations = std::stoull(value);
      else if (key == "display_precision") s.precision = std::stoi(value);
      else if (key == "checkpoint_dir") s.checkpoint_dir = value;
      else throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    } catch (const std::logic_error&) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": bad value for " + key);
    }
  }
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, sep);) out.push_back(trim(part));
  return out;
}

WeierstrassCurve parse_curve(const std::string& s) {
  auto parts = split(s, ',');
  if (parts.size() != 5) throw UsageError("--curve expects a1,a2,a3,a4,a6");
  return {Rat::parse(parts[0]), Rat::parse(parts[1]), Rat::parse(parts[2]), Rat::parse(parts[3]),
          Rat::parse(parts[4])};
}

ECPoint parse_point(const std::string& s) {
  if (s == "O") return ECPoint::infinity();
  auto parts = split(s, ',');
  if (parts.size() != 2) throw UsageError("--point expects x,y or O");
  return {Rat::parse(parts[0]), Rat::parse(parts[1])};
}

// "2,4,6", "2-4-6" or "246".
ArrangementSignature parse_target(const std::string& s) {
  ArrangementSignature out;
  if (s.find_first_of(",-") == std::string::npos) {
    for (char ch : s) {
      if (ch < '0' || ch > '9') throw UsageError("bad --target '" + s + "'");
      out.push_back(static_cast<std::size_t>(ch - '0'));
    }
  } else {
    for (auto& part : split(s, s.find(',') != std::string::npos ? ',' : '-')) {
      if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("bad --target '" + s + "'");
      out.push_back(std::stoul(part));
    }
  }
  if (out.empty()) throw UsageError("empty --target");
  return out;
}

std::pair<unsigned, unsigned> parse_shard(const std::string& s) {
  auto parts = split(s, '/');
  if (parts.size() != 2) throw UsageError("--shard expects i/T");
  try {
    return {static_cast<unsigned>(std::stoul(parts[0])), static_cast<unsigned>(std::stoul(parts[1]))};
  } catch (const std::logic_error&) {
    throw UsageError("--shard expects i/T");
  }
}

class Printer {
 public:
  Printer(bool structured, int precision) : json_(structured), precision_(precision) {}
  bool structured() const { return json_; }

  std::string rat(const Rat& q) const {
    if (precision_ <= 0) return q.str();
    std::ostringstream os;
    os.precision(precision_);
    os << q.str() << " (~" << q.to_double() << ")";
    return os.str();
  }
  std::string point(const ECPoint& p) const {
    return p.is_infinity() ? "O" : "(" + rat(p.x()) + ", " + rat(p.y()) + ")";
  }
  std::string curve(const WeierstrassCurve& e) const {
    return "[a1, a2, a3, a4, a6] = [" + rat(e.a1) + ", " + rat(e.a2) + ", " + rat(e.a3) + ", " + rat(e.a4) + ", " +
           rat(e.a6) + "]";
  }
  void line(const json& j) const { std::cout << j.dump() << "\n"; }

 private:
  bool json_;
  int precision_;
};

std::string order_str(const std::optional<unsigned>& o) { return o ? std::to_string(*o) : "infinite"; }

json opt_rat_json(const std::optional<Rat>& q) { return q ? rat_json(*q) : json(nullptr); }

void print_fiber(const Printer& out, const std::string& surface, const SurfaceFiber& f,
                 const std::optional<Rat>& closed_disc, const std::optional<Rat>& closed_j) {
  std::vector<std::optional<unsigned>> orders;
  for (const auto& p : f.sections)
    orders.push_back(f.singular ? std::nullopt : point_order(f.curve, p));
  if (out.structured()) {
    json secs = json::array(), ords = json::array();
    for (std::size_t i = 0; i < f.sections.size(); ++i) {
      secs.push_back(point_json(f.sections[i]));
      ords.push_back(f.singular ? json(nullptr) : orders[i] ? json(*orders[i]) : json("infinite"));
    }
    out.line({{"surface", surface},
              {"a", rat_json(f.a)},
              {"curve", curve_json(f.curve)},
              {"sections", secs},
              {"orders", ords},
              {"closed_discriminant", opt_rat_json(closed_disc)},
              {"closed_j", opt_rat_json(closed_j)}});
    return;
  }
  std::cout << surface << "(" << out.rat(f.a) << "): " << out.curve(f.curve) << "\n";
  std::cout << "discriminant " << out.rat(f.discriminant) << (f.singular ? " (singular fibre)" : "") << "\n";
  std::cout << "j " << (f.j ? out.rat(*f.j) : std::string("undefined")) << "\n";
  if (closed_disc) std::cout << "closed-form discriminant " << out.rat(*closed_disc) << "\n";
  if (closed_j) std::cout << "closed-form j " << out.rat(*closed_j) << "\n";
  const char* names = surface == "E24" ? "T" : "PQ";
  for (std::size_t i = 0; i < f.sections.size(); ++i)
    std::cout << names[i] << " = " << out.point(f.sections[i]) << ", order "
              << (f.singular ? std::string("n/a") : order_str(orders[i])) << "\n";
}

void print_torsion(const Printer& out, const TorsionGroup& g) {
  if (out.structured()) {
    json gens = json::array(), pts = json::array();
    for (const auto& p : g.generators) gens.push_back(point_json(p));
    for (const auto& p : g.points) pts.push_back(point_json(p));
    out.line({{"invariants", {g.n1, g.n2}}, {"order", g.order()}, {"generators", gens}, {"points", pts}});
    return;
  }
  std::cout << "torsion Z/" << g.n1 << " x Z/" << g.n2 << " (order " << g.order() << ")\n";
  for (const auto& p : g.generators) std::cout << "generator " << out.point(p) << "\n";
  for (const auto& p : g.points) std::cout << "  " << out.point(p) << "\n";
}

int run_verify(const std::string& section, const verify::Options& opt, const Printer& out) {
  const auto& sections = verify::sections();
  auto it = sections.find(section);
  if (it == sections.end()) {
    std::string names;
    for (const auto& [k, v] : sections) names += " " + k;
    throw UsageError("unknown section '" + section + "'; choose from" + names);
  }
  bool all_ok = true;
  if (!out.structured()) std::cout << "seed " << opt.seed << "\n";
  for (unsigned n : it->second) {
    auto r = verify::criteria()[n - 1](opt);
    all_ok = all_ok && r.pass();
    if (out.structured()) {
      for (const auto& c : r.checks)
        out.line({{"criterion", n}, {"anchor", c.anchor}, {"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      out.line({{"criterion", n}, {"title", r.title}, {"pass", r.pass()}, {"seconds", r.seconds},
                {"budget_seconds", r.budget_seconds}});
      continue;
    }
    std::printf("[%s] %u %s (%.2f s of %.0f s)\n", r.pass() ? "PASS" : "FAIL", n, r.title.c_str(), r.seconds,
                r.budget_seconds);
    for (const auto& c : r.checks)
      std::printf("  %s %s: %s%s%s\n", c.pass ? "ok  " : "FAIL", c.anchor.c_str(), c.name.c_str(),
                  c.detail.empty() ? "" : " -- ", c.detail.c_str());
  }
  std::fflush(stdout);
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational pre-images of quadratic polynomials: trees, surfaces, models and searches"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path, format;  // empty: per-command default
  int precision = -1;
  app.add_option("--config", config_path, "key = value settings file")->check(CLI::ExistingFile);
  app.add_option("--format", format, "human or json (search defaults to json lines)")->check(CLI::IsMember({"human", "json"}));
  app.add_option("--precision", precision, "decimal digits shown next to rationals (human output)");

  // tree
  auto* tree = app.add_subcommand("tree", "pre-image tree of a under x^2 + c");
  std::string tree_c, tree_a;
  unsigned tree_depth = 3;
  tree->add_option("--c", tree_c, "parameter c")->required();
  tree->add_option("--a", tree_a, "root a")->required();
  tree->add_option("--depth", tree_depth, "levels")->check(CLI::Range(1u, 64u));

  // critical
  auto* critical = app.add_subcommand("critical", "critical polynomial and critical a-values");
  unsigned crit_n = 3;
  critical->add_option("--n", crit_n, "iterate N")->check(CLI::Range(2u, 6u));

  // ec
  auto* ec = app.add_subcommand("ec", "elliptic surfaces and curves");
  ec->require_subcommand(1);
  std::string ec_a, ec_curve, ec_point, ec_kind, ec_t;
  auto* e24 = ec->add_subcommand("specialize-e24", "fibre of the 24 surface");
  e24->add_option("--a", ec_a)->required();
  auto* e222 = ec->add_subcommand("specialize-e222", "fibre of the 222 surface");
  e222->add_option("--a", ec_a)->required();
  auto* order = ec->add_subcommand("order", "order of a point");
  order->add_option("--curve", ec_curve, "a1,a2,a3,a4,a6")->required();
  order->add_option("--point", ec_point, "x,y")->required();
  auto* torsion = ec->add_subcommand("torsion", "rational torsion subgroup");
  auto* tor_curve = torsion->add_option("--curve", ec_curve, "a1,a2,a3,a4,a6");
  torsion->add_option("--e24", ec_a, "use the 24 surface fibre at this a")->excludes(tor_curve);
  auto* family = ec->add_subcommand("family", "a-value of a torsion family");
  bool family_torsion = false;
  family->add_option("--kind", ec_kind, "Z2xZ4, Z8, Z2xZ8 or Z12")->required();
  family->add_option("--t", ec_t, "family parameter")->required();
  family->add_flag("--torsion", family_torsion, "also compute the torsion of the fibre");
  auto* c244 = ec->add_subcommand("curve-244", "the curve over a = -1/4");

  // model
  auto* model = app.add_subcommand("model", "projective models");
  std::string model_tag;
  unsigned model_n = 0;
  auto* tag_opt = model->add_option("--tag", model_tag, "224, 242 or 2222");
  model->add_option("--n", model_n, "ideal J of level N")->check(CLI::Range(2u, 16u))->excludes(tag_opt);

  // genus
  auto* genus = app.add_subcommand("genus", "genus bookkeeping");
  unsigned genus_n = 4, plane_degree = 0;
  std::vector<unsigned long> deltas;
  genus->add_option("--n", genus_n, "level N")->check(CLI::Range(2u, 64u));
  genus->add_option("--delta", deltas, "delta invariants of the singular points")->delimiter(',');
  genus->add_option("--plane-degree", plane_degree, "do the bookkeeping on a plane model of this degree");

  // search
  auto* search = app.add_subcommand("search", "search for parameters with many rational pre-images");
  std::string strategy = "thirdpair", target = "2,4,6", shard, checkpoint, output;
  unsigned long height_bound = 0, checkpoint_every = 2000;
  unsigned depth = 3, jobs = 1;
  bool resume = false, progress = false;
  search->add_option("--strategy", strategy)->check(CLI::IsMember({"thirdpair", "forward"}));
  search->add_option("--height-bound", height_bound, "height bound H");
  search->add_option("--depth", depth, "tree depth")->check(CLI::Range(1u, 16u));
  search->add_option("--target", target, "signature to dominate, e.g. 2,4,6");
  search->add_option("--shard", shard, "i/T");
  search->add_option("--checkpoint", checkpoint, "checkpoint file");
  search->add_option("--checkpoint-every", checkpoint_every, "outer candidates between checkpoints");
  search->add_flag("--resume", resume, "resume from the checkpoint");
  search->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
  search->add_option("--output", output, "write records here instead of stdout");
  search->add_flag("--progress", progress, "progress on stderr");

  // verify-paper
  auto* vp = app.add_subcommand("verify-paper", "replay the reproducible results");
  std::string section = "all";
  verify::Options vopt;
  vp->add_option("--section", section, "pairs, genus, delta, e24, e222, torsion, critical, model, singular, 244, "
                                       "properties or all");
  vp->add_option("--seed", vopt.seed, "seed for randomized checks");
  vp->add_option("--rediscovery-bound", vopt.rediscovery_bound, "height bound of the rediscovery scan");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Settings settings = config_path.empty() ? Settings{} : load_config(config_path);
    if (precision >= 0) settings.precision = precision;
    const Printer out(format == "json", settings.precision);

    if (*tree) {
      Rat c = Rat::parse(tree_c), a = Rat::parse(tree_a);
      PreimageTree t = preimage_tree(c, a, tree_depth);
      if (out.structured()) {
        out.line(tree_json(t));
        return 0;
      }
      std::cout << "c = " << out.rat(c) << ", a = " << out.rat(a) << "\n";
      for (std::size_t k = 0; k < t.levels.size(); ++k) {
        std::cout << "level " << k + 1 << ":";
        for (const auto& n : t.levels[k]) std::cout << " " << out.rat(n.value);
        std::cout << "\n";
      }
      std::cout << "signature " << verify::detail::sig_str(signature(t)) << "\n";
      std::cout << "union " << t.union_count() << "\n";
      return 0;
    }

    if (*critical) {
      CriticalData d = critical_avalues(crit_n);
      if (out.structured()) {
        out.line({{"n", crit_n}, {"critical_poly", poly_json(d.crit_poly_c)}, {"avalue_minpoly", poly_json(d.avalue_minpoly)}});
      } else {
        std::cout << "critical polynomial " << d.crit_poly_c.to_string("c") << "\n";
        std::cout << "critical a-values   " << d.avalue_minpoly.to_string("a") << "\n";
      }
      return 0;
    }

    if (*ec) {
      if (*e24) {
        Rat a = Rat::parse(ec_a);
        print_fiber(out, "E24", specialize_E24(a), e24_closed_discriminant(a), e24_closed_j(a));
      } else if (*e222) {
        Rat a = Rat::parse(ec_a);
        print_fiber(out, "E222", specialize_E222(a), e222_closed_discriminant(a), e222_closed_j(a));
      } else if (*order) {
        WeierstrassCurve e = parse_curve(ec_curve);
        ECPoint p = parse_point(ec_point);
        if (e.is_singular()) throw UsageError("singular curve");
        require_on_curve(e, p);
        auto o = point_order(e, p);
        if (out.structured()) out.line({{"point", point_json(p)}, {"order", o ? json(*o) : json("infinite")}});
        else std::cout << "order " << order_str(o) << "\n";
      } else if (*torsion) {
        WeierstrassCurve e = !ec_a.empty() ? specialize_E24(Rat::parse(ec_a)).curve
                             : !ec_curve.empty() ? parse_curve(ec_curve)
                                                 : throw UsageError("torsion needs --curve or --e24");
        print_torsion(out, torsion_subgroup(e, settings.budget));
      } else if (*family) {
        TorsionKind kind = parse_torsion_kind(ec_kind);
        Rat t = Rat::parse(ec_t);
        auto a = torsion_family_a(kind, t);
        std::optional<TorsionGroup> g;
        if (a && family_torsion && !specialize_E24(*a).singular)
          g = torsion_subgroup(specialize_E24(*a).curve, settings.budget);
        if (out.structured()) {
          json j{{"kind", std::string(to_string(kind))}, {"t", rat_json(t)}, {"a", opt_rat_json(a)}};
          if (g) j["torsion"] = {g->n1, g->n2};
          out.line(j);
        } else {
          std::cout << to_string(kind) << " family at t = " << out.rat(t) << ": a = "
                    << (a ? out.rat(*a) : std::string("excluded")) << "\n";
          if (g) std::cout << "torsion Z/" << g->n1 << " x Z/" << g->n2 << "\n";
        }
      } else if (*c244) {
        Curve244 c = curve_244();
        auto o = point_order(c.curve, c.sample_point);
        if (out.structured()) {
          out.line({{"curve", curve_json(c.curve)}, {"point", point_json(c.sample_point)},
                    {"order", o ? json(*o) : json("infinite")}});
        } else {
          std::cout << out.curve(c.curve) << "\n";
          std::cout << "point " << out.point(c.sample_point) << ", order " << order_str(o) << "\n";
        }
      }
      return 0;
    }

    if (*model) {
      if (model_tag.empty() && model_n == 0) throw UsageError("model needs --tag or --n");
      QuadricModel m = model_n ? ideal_J(model_n) : arrangement_curve(parse_arrangement_tag(model_tag));
      if (out.structured()) {
        json gens = json::array();
        for (std::size_t g = 0; g < m.generators().size(); ++g) gens.push_back(generator_string(m, g));
        out.line({{"name", m.name()}, {"vars", m.vars()}, {"ambient_dim", m.ambient_dim()}, {"generators", gens}});
      } else {
        std::cout << export_model(m);
      }
      return 0;
    }

    if (*genus) {
      BigInt closed = genus_closed(genus_n), hilbert = genus_hilbert(genus_n);
      std::optional<BigInt> dropped;
      if (!deltas.empty() || plane_degree)
        dropped = plane_degree ? genus_with_delta_plane(plane_degree, deltas) : genus_with_delta(genus_n, deltas);
      if (out.structured()) {
        json j{{"n", genus_n}, {"genus_closed", closed.get_str()}, {"genus_hilbert", hilbert.get_str()}};
        if (plane_degree) j["plane_arithmetic_genus"] = plane_arithmetic_genus(plane_degree).get_str();
        if (dropped) j["genus_with_delta"] = dropped->get_str();
        out.line(j);
      } else {
        std::cout << "closed form " << closed << ", complete intersection " << hilbert << "\n";
        if (plane_degree) std::cout << "plane model arithmetic genus " << plane_arithmetic_genus(plane_degree) << "\n";
        if (dropped) std::cout << "after delta drop " << *dropped << "\n";
      }
      return 0;
    }

    if (*search) {
      SearchConfig cfg;
      cfg.strategy = parse_strategy(strategy);
      cfg.height_bound = height_bound ? height_bound : settings.height_bound.value_or(0);
      if (cfg.height_bound == 0) throw UsageError("search needs --height-bound (or height_bound in the config)");
      cfg.depth = depth;
      cfg.target = parse_target(target);
      if (!shard.empty()) std::tie(cfg.shard_index, cfg.shard_total) = parse_shard(shard);
      cfg.checkpoint_every = checkpoint_every;
      cfg.resume = resume;
      std::optional<std::string> dir = settings.checkpoint_dir;
      if (const char* env = std::getenv("PREIMAGE_CHECKPOINT_DIR"); env && *env && !dir) dir = env;
      if (!checkpoint.empty()) cfg.checkpoint_path = checkpoint;
      else if (dir) cfg.checkpoint_path = *dir + "/search-" + config_hash(cfg) + ".json";
      if (resume && !cfg.checkpoint_path) throw UsageError("--resume needs a checkpoint");
      cfg.validate();

      SearchResult result;
      if (jobs > 1) {
        result = run_search_parallel(cfg, jobs);
      } else {
        ProgressFn report;
        if (progress)
          report = [](std::size_t done, std::size_t total) { std::fprintf(stderr, "progress %zu/%zu\n", done, total); };
        result = run_search(cfg, report);
      }
      std::ofstream file;
      if (!output.empty()) {
        file.open(output);
        if (!file) throw UsageError("cannot write " + output);
      }
      std::ostream& sink = output.empty() ? std::cout : file;
      for (const auto& r : result.records) {
        if (format != "human" || !output.empty()) sink << record_json(r).dump() << "\n";
        else sink << r.c.str() << " " << r.a.str() << " " << verify::detail::sig_str(r.signature) << "\n";
      }
      std::fprintf(stderr, "%zu records, %zu candidates, %llu pairs tested%s\n", result.records.size(),
                   result.stats.candidates, static_cast<unsigned long long>(result.stats.pairs_tested),
                   result.stats.pruned ? ", pruned" : "");
      return 0;
    }

    if (*vp) return run_verify(section, vopt, out);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ContractViolation& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const OffCurve& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const CheckpointError& e) {
    std::cerr << "checkpoint error: " << e.what() << "\n";
    return 2;
  } catch (const FactorizationBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

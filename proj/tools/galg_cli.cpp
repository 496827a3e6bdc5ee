// galg: generate groupoids, query their algebras and run the verification
// checks on concrete instances.
//
// Exit codes: 0 ok / all verified, 1 refuted (or invalid groupoid for
// `validate`), 2 usage or parse error, 3 bound exceeded or skipped checks,
// 4 unsupported ring/isotropy combination.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "galg/effros_hahn.hpp"
#include "galg/generators.hpp"

using namespace galg;

namespace {

enum Exit { kOk = 0, kRefuted = 1, kUsage = 2, kBound = 3, kUnsupported = 4 };

struct RunConfig {
  std::string ring = "q";
  std::uint64_t seed = 0;
  std::uint64_t bound = Limits::kDefaultBound;
  std::string format = "json";
  std::string out;
  std::string input;
  std::string gen;
  bool timing = false;
};

// Errors that map straight to an exit code.
struct Failure {
  Exit code;
  std::string message;
};

[[noreturn]] void fail(Exit code, std::string message) { throw Failure{code, std::move(message)}; }

void add_run_options(CLI::App* cmd, RunConfig& cfg, bool instance) {
  cmd->add_option("--ring", cfg.ring, "Coefficient ring: q, fp:<p> or zn:<n>")->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "Seed for randomised isomorphism trials")->capture_default_str();
  cmd->add_option("--bound", cfg.bound, "Enumeration bound")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  cmd->add_option("--out", cfg.out, "Write output to this file instead of stdout");
  if (instance) {
    auto* in = cmd->add_option("--input", cfg.input, "Groupoid JSON file ('-' for stdin)");
    auto* gen = cmd->add_option("--gen", cfg.gen, "Generator spec, e.g. pair:3, group:z4, action:z2:swap01fix2");
    in->excludes(gen);
  }
}

Ring ring_of(const RunConfig& cfg) {
  try {
    return Ring::parse(cfg.ring);
  } catch (const std::exception& e) {
    fail(kUsage, e.what());
  }
}

Limits limits_of(const RunConfig& cfg) {
  Limits l;
  l.bound = cfg.bound;
  return l;
}

std::string source_of(const RunConfig& cfg) { return cfg.gen.empty() ? cfg.input : cfg.gen; }

FiniteGroupoid load_unvalidated(const RunConfig& cfg) {
  if (cfg.input.empty() == cfg.gen.empty()) fail(kUsage, "give exactly one of --input or --gen");
  try {
    if (!cfg.gen.empty()) return parse_generator(cfg.gen);
    std::string text;
    if (cfg.input == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream f(cfg.input);
      if (!f) fail(kUsage, "cannot read " + cfg.input);
      text.assign(std::istreambuf_iterator<char>(f), {});
    }
    return groupoid_from_text(text);
  } catch (const ParseError& e) {
    fail(kUsage, std::string("malformed groupoid JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    fail(kUsage, e.what());
  }
}

GroupoidPtr load(const RunConfig& cfg) {
  auto g = load_unvalidated(cfg);
  auto bad = validate(g);
  if (!bad.empty()) fail(kUsage, "input is not a groupoid: " + bad.front().axiom + ": " + bad.front().detail);
  return std::make_shared<const FiniteGroupoid>(std::move(g));
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) fail(kUsage, "cannot write " + cfg.out);
  f << text;
}

std::string render(const RunConfig& cfg, const json& j) { return (cfg.format == "text" ? j.dump(2) : j.dump()) + "\n"; }

ObjectId object_in(const FiniteGroupoid& g, long long u) {
  if (u < 0 || static_cast<std::size_t>(u) >= g.n_objects())
    fail(kUsage, "object " + std::to_string(u) + " out of range (groupoid has " + std::to_string(g.n_objects()) +
                     " objects)");
  return static_cast<ObjectId>(u);
}

IsotropyModule module_named(const FiniteGroupoid& g, ObjectId u, const std::string& name, const Ring& R,
                            const Limits& limits) {
  try {
    return isotropy_module_named(g, u, name, R, limits);
  } catch (const std::invalid_argument& e) {
    fail(kUsage, e.what());
  }
}

struct NamedModule {
  std::string name;
  IsotropyModule module;
};

// Trivial, sign where defined, regular, and the simple modules when available.
std::vector<NamedModule> standard_modules(const FiniteGroupoid& g, ObjectId u, const Ring& R, const Limits& limits) {
  auto G = isotropy(g, u);
  std::vector<NamedModule> out{{"trivial", trivial_module(G, R)}};
  try {
    out.push_back({"sign", sign_module(G, R)});
  } catch (const std::invalid_argument&) {
  }
  out.push_back({"regular", regular_module(G, R)});
  try {
    auto simples = simple_modules_group(G, R, limits);
    for (std::size_t i = 0; i < simples.size(); ++i) out.push_back({"simple:" + std::to_string(i), simples[i]});
  } catch (const Unsupported&) {
  } catch (const BoundExceeded&) {
  }
  return out;
}

// ---- generate / validate ------------------------------------------------

int cmd_generate(const std::string& kind, const std::vector<std::string>& params, const RunConfig& cfg) {
  FiniteGroupoid g;
  try {
    g = generate(kind, params);
  } catch (const std::invalid_argument& e) {
    fail(kUsage, e.what());
  }
  emit(cfg, render(cfg, to_json(g)));
  return kOk;
}

int cmd_validate(const RunConfig& cfg) {
  auto g = load_unvalidated(cfg);
  auto bad = validate(g);
  json j{{"valid", bad.empty()}, {"objects", g.n_objects()}, {"arrows", g.n_arrows()}, {"violations", to_json(bad)}};
  emit(cfg, render(cfg, j));
  return bad.empty() ? kOk : kRefuted;
}

// ---- compute ------------------------------------------------------------

struct ComputeOptions {
  std::string what;
  long long object = -1;
  std::string module;
};

json compute(const ComputeOptions& opt, const RunConfig& cfg) {
  auto g = load(cfg);
  const Ring R = ring_of(cfg);
  const Limits limits = limits_of(cfg);
  std::vector<ObjectId> objects;
  if (opt.object >= 0) {
    objects.push_back(object_in(*g, opt.object));
  } else {
    for (ObjectId u = 0; u < static_cast<ObjectId>(g->n_objects()); ++u) objects.push_back(u);
  }
  auto chosen = [&] {
    ObjectId u = opt.object >= 0 ? object_in(*g, opt.object) : 0;
    return module_named(*g, u, opt.module.empty() ? "trivial" : opt.module, R, limits);
  };

  if (opt.what == "orbits") return orbits(*g).classes;
  if (opt.what == "isotropy") {
    json out = json::array();
    for (auto u : objects) {
      auto G = isotropy(*g, u);
      json table = json::array();
      for (std::size_t a = 0; a < G.order(); ++a) {
        json row = json::array();
        for (std::size_t b = 0; b < G.order(); ++b) row.push_back(G.elements[G.table.mul(a, b)]);
        table.push_back(row);
      }
      out.push_back({{"object", u}, {"elements", G.elements}, {"table", table}});
    }
    return out;
  }
  if (opt.what == "induce") {
    auto ind = induce(g, chosen());
    return {{"object", ind.transversal.base},
            {"orbit", ind.transversal.orbit},
            {"transversal", ind.transversal.arrows},
            {"rep", to_json(ind.rep)}};
  }
  if (opt.what == "annihilator") {
    auto n = chosen();
    return {{"object", n.group.base}, {"ideal", to_json(induced_annihilator_direct(g, n))}};
  }
  if (opt.what == "stalks") {
    Rep rho = opt.module.empty() && opt.object < 0 ? regular_rep(g, R) : induce(g, chosen()).rep;
    return to_json(sheaf_of(rho));
  }
  if (opt.what == "primitive-ideals") {
    json out = json::array();
    for (const auto& p : primitive_inducers(g, R, limits))
      out.push_back({{"object", p.object}, {"module_gens", p.module.dim()}, {"ideal", to_json(p.ideal)}});
    return out;
  }
  fail(kUsage, "unknown computation '" + opt.what + "'");
}

int cmd_compute(const ComputeOptions& opt, const RunConfig& cfg) {
  try {
    emit(cfg, render(cfg, compute(opt, cfg)));
  } catch (const BoundExceeded& e) {
    fail(kBound, e.what());
  } catch (const Unsupported& e) {
    fail(kUnsupported, e.what());
  }
  return kOk;
}

// ---- verify -------------------------------------------------------------

const std::map<std::string, std::string>& theorem_aliases() {
  static const std::map<std::string, std::string> m{
      {"prop2.1", kInducedAnnihilator}, {"thm2.2", kInducedSimple},     {"thm2.3", kDisintegration},
      {"thm3.1", kIdealIntersection},   {"thm3.2", kPrimitiveInducer},  {"thm3.3", kPrimitiveIdeals},
      {"cor3.4", kInducedFromSimples},
  };
  return m;
}

const std::vector<std::string>& theorem_order() {
  static const std::vector<std::string> v{kInducedAnnihilator, kInducedSimple,    kDisintegration,     kIdealIntersection,
                                          kPrimitiveInducer,   kPrimitiveIdeals, kInducedFromSimples};
  return v;
}

struct VerifyOptions {
  std::string theorem;
  bool all_ideals = false;
  std::string ideal;
  long long object = -1;
  std::string module;
};

VerificationReport skipped(const std::string& theorem, const FiniteGroupoid& g, const Ring& R,
                           const std::string& reason) {
  VerificationReport r;
  r.theorem = theorem;
  r.instance = {{"ring", R.spec()}, {"objects", g.n_objects()}, {"arrows", g.n_arrows()}};
  r.verdict = Verdict::skipped;
  r.reason = reason;
  return r;
}

std::vector<VerificationReport> run_theorem(const std::string& theorem, GroupoidPtr g, const Ring& R,
                                            const VerifyOptions& opt, const Limits& limits) {
  std::vector<VerificationReport> out;
  auto orb = orbits(*g);
  // (object, module) pairs to induce from
  auto inducers = [&](bool simples_only) {
    std::vector<NamedModule> mods;
    std::vector<ObjectId> objs;
    if (opt.object >= 0) {
      objs.push_back(object_in(*g, opt.object));
    } else if (simples_only) {
      for (const auto& c : orb.classes) objs.push_back(c.front());
    } else {
      for (ObjectId u = 0; u < static_cast<ObjectId>(g->n_objects()); ++u) objs.push_back(u);
    }
    for (auto u : objs) {
      if (!opt.module.empty()) {
        mods.push_back({opt.module, module_named(*g, u, opt.module, R, limits)});
        continue;
      }
      for (auto& m : standard_modules(*g, u, R, limits))
        if (!simples_only || m.name.rfind("simple:", 0) == 0) mods.push_back(std::move(m));
    }
    return mods;
  };
  auto tag = [](VerificationReport r, const std::string& module) {
    r.instance["module"] = module;
    return r;
  };

  try {
    if (theorem == kInducedAnnihilator) {
      for (const auto& m : inducers(false)) out.push_back(tag(verify_induced_annihilator(g, m.module), m.name));
    } else if (theorem == kInducedSimple) {
      auto mods = inducers(true);
      if (mods.empty()) out.push_back(skipped(theorem, *g, R, "no simple isotropy modules available"));
      for (const auto& m : mods) out.push_back(tag(verify_induced_simple(g, m.module, limits), m.name));
    } else if (theorem == kDisintegration) {
      out.push_back(tag(verify_disintegration(regular_rep(g, R)), "regular"));
      for (const auto& m : inducers(false))
        out.push_back(tag(verify_disintegration(induce(g, m.module).rep), "induced@" +
                                                                              std::to_string(m.module.group.base) +
                                                                              ":" + m.name));
      if (opt.all_ideals) {
        auto ideals = enumerate_all_ideals(g, R, limits);
        for (std::size_t i = 0; i < ideals.size(); ++i)
          out.push_back(tag(verify_disintegration(quotient_algebra_rep(ideals[i])), "quotient:" + std::to_string(i)));
      }
    } else if (theorem == kIdealIntersection) {
      std::vector<Ideal> ideals;
      if (!opt.ideal.empty()) {
        json gens;
        try {
          gens = json::parse(opt.ideal);
          if (!gens.is_array()) throw ParseError("--ideal takes a JSON array of coefficient arrays");
          std::vector<Vec> vs;
          for (const auto& v : gens) {
            vs.push_back(vec_from_json(R, v));
            if (vs.back().size() != g->n_arrows()) throw ParseError("ideal generator has the wrong length");
          }
          ideals.push_back(ideal_from_generators(g, R, vs));
        } catch (const json::exception& e) {
          fail(kUsage, std::string("malformed --ideal: ") + e.what());
        } catch (const ParseError& e) {
          fail(kUsage, std::string("malformed --ideal: ") + e.what());
        }
      } else if (opt.all_ideals) {
        ideals = enumerate_all_ideals(g, R, limits);
      } else {
        ideals.push_back(zero_ideal(g, R));
        ideals.push_back(whole_ideal(g, R));
      }
      for (const auto& I : ideals) out.push_back(verify_ideal_is_intersection(I, limits));
    } else if (theorem == kPrimitiveInducer) {
      if (R.is_finite()) {
        for (const auto& rho : simple_quotients_of_regular(g, R, limits))
          out.push_back(tag(verify_primitive_single_inducer(rho, limits), "regular-quotient"));
      } else {
        for (const auto& m : inducers(true))
          out.push_back(tag(verify_primitive_single_inducer(induce(g, m.module).rep, limits),
                            "induced@" + std::to_string(m.module.group.base) + ":" + m.name));
      }
      if (out.empty()) out.push_back(skipped(theorem, *g, R, "no simple representations available"));
    } else if (theorem == kPrimitiveIdeals) {
      out.push_back(verify_primitive_ideals(g, R, limits));
    } else if (theorem == kInducedFromSimples) {
      out.push_back(verify_induced_from_simples(g, R, limits));
    }
  } catch (const BoundExceeded& e) {
    out.push_back(skipped(theorem, *g, R, std::string("bound exceeded: ") + e.what()));
  } catch (const Unsupported& e) {
    out.push_back(skipped(theorem, *g, R, std::string("unsupported: ") + e.what()));
  }
  return out;
}

int cmd_verify(const VerifyOptions& opt, const RunConfig& cfg) {
  std::vector<std::string> theorems;
  if (opt.theorem == "all") {
    theorems = theorem_order();
  } else if (auto it = theorem_aliases().find(opt.theorem); it != theorem_aliases().end()) {
    theorems = {it->second};
  } else if (std::find(theorem_order().begin(), theorem_order().end(), opt.theorem) != theorem_order().end()) {
    theorems = {opt.theorem};
  } else {
    fail(kUsage, "unknown theorem id '" + opt.theorem + "'");
  }
  auto g = load(cfg);
  const Ring R = ring_of(cfg);
  const Limits limits = limits_of(cfg);

  std::vector<VerificationReport> reports;
  for (const auto& t : theorems)
    for (auto& r : run_theorem(t, g, R, opt, limits)) reports.push_back(std::move(r));

  std::ostringstream os;
  std::size_t verified = 0, refuted = 0, skipped_count = 0;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::verified) ++verified;
    if (r.verdict == Verdict::refuted) ++refuted;
    if (r.verdict == Verdict::skipped) ++skipped_count;
  }
  if (cfg.format == "json") {
    for (const auto& r : reports) {
      json j = to_json(r);
      j["instance"]["source"] = source_of(cfg);
      j["seed"] = cfg.seed;
      os << j.dump() << "\n";
    }
  } else {
    os << "source: " << source_of(cfg) << "  ring: " << R.spec() << "  seed: " << cfg.seed << "\n";
    for (const auto& r : reports) {
      std::string what = r.instance.contains("module") ? r.instance["module"].get<std::string>() : "";
      os << std::left << std::setw(22) << r.theorem << std::setw(10) << to_string(r.verdict) << what;
      if (!r.reason.empty()) os << (what.empty() ? "" : "  ") << r.reason;
      os << "\n";
    }
    os << verified << " verified, " << refuted << " refuted, " << skipped_count << " skipped\n";
  }
  emit(cfg, os.str());
  if (cfg.timing)
    for (const auto& r : reports) std::cerr << r.theorem << " " << r.wall_seconds << " s\n";
  if (refuted) return kRefuted;
  if (skipped_count) return kBound;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite groupoid algebras: induction, disintegration and primitive ideals"};
  app.require_subcommand(1);
  RunConfig cfg;

  std::string kind;
  std::vector<std::string> params;
  auto* gen = app.add_subcommand("generate", "Emit the JSON of a generated groupoid");
  gen->add_option("kind", kind, "pair | group | action | union")->required();
  gen->add_option("params", params, "Kind parameters (see README)");
  add_run_options(gen, cfg, false);

  auto* val = app.add_subcommand("validate", "Check the groupoid axioms");
  add_run_options(val, cfg, true);

  ComputeOptions copt;
  auto* comp = app.add_subcommand("compute", "Orbits, isotropy, induction, annihilators, stalks, primitive ideals");
  comp->add_option("what", copt.what, "orbits | isotropy | induce | annihilator | stalks | primitive-ideals")
      ->required()
      ->check(CLI::IsMember({"orbits", "isotropy", "induce", "annihilator", "stalks", "primitive-ideals"}));
  comp->add_option("--object", copt.object, "Base object");
  comp->add_option("--module", copt.module, "Isotropy module: trivial | sign | regular | simple:<i>");
  add_run_options(comp, cfg, true);

  VerifyOptions vopt;
  auto* ver = app.add_subcommand("verify", "Run verification checks and emit reports");
  std::string ids = "all";
  for (const auto& t : theorem_order()) ids += " | " + t;
  ver->add_option("theorem", vopt.theorem, ids + " (numbered aliases are also accepted)")->required();
  ver->add_flag("--all-ideals", vopt.all_ideals, "Check every two-sided ideal (finite rings)");
  ver->add_option("--ideal", vopt.ideal, "Ideal generators as a JSON array of coefficient arrays");
  ver->add_option("--object", vopt.object, "Restrict to one base object");
  ver->add_option("--module", vopt.module, "Restrict to one isotropy module");
  ver->add_flag("--timing", cfg.timing, "Print per-report wall time to stderr");
  add_run_options(ver, cfg, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return cmd_generate(kind, params, cfg);
    if (*val) return cmd_validate(cfg);
    if (*comp) return cmd_compute(copt, cfg);
    if (*ver) return cmd_verify(vopt, cfg);
  } catch (const Failure& f) {
    std::cerr << "galg: " << f.message << "\n";
    return f.code;
  } catch (const BoundExceeded& e) {
    std::cerr << "galg: bound exceeded: " << e.what() << "\n";
    return kBound;
  } catch (const Unsupported& e) {
    std::cerr << "galg: unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const std::invalid_argument& e) {
    std::cerr << "galg: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

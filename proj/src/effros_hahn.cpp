#include "galg/effros_hahn.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

namespace galg {

namespace {

json describe(const FiniteGroupoid& g, const Ring& R) {
  return {{"ring", R.spec()}, {"objects", g.n_objects()}, {"arrows", g.n_arrows()}};
}

// Runs body and converts the expected failure modes into verdicts.
VerificationReport run(const char* theorem, json instance, const std::function<void(VerificationReport&)>& body) {
  VerificationReport r;
  r.theorem = theorem;
  r.instance = std::move(instance);
  auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const BoundExceeded& e) {
    r.verdict = Verdict::skipped;
    r.reason = std::string("bound exceeded: ") + e.what();
  } catch (const Unsupported& e) {
    r.verdict = Verdict::skipped;
    r.reason = std::string("unsupported: ") + e.what();
  } catch (const std::invalid_argument& e) {
    r.verdict = Verdict::skipped;
    r.reason = std::string("invalid input: ") + e.what();
  } catch (const std::logic_error& e) {
    r.verdict = Verdict::refuted;
    r.reason = e.what();
  }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void compare(VerificationReport& r, const char* lhs, const Ideal& a, const char* rhs, const Ideal& b) {
  r.witnesses[lhs] = to_json(a.space);
  r.witnesses[rhs] = to_json(b.space);
  if (ideal_equal(a, b)) {
    r.verdict = Verdict::verified;
  } else {
    r.verdict = Verdict::refuted;
    r.reason = std::string(lhs) + " differs from " + rhs;
  }
}

json module_size(const ModuleAction& m) {
  if (m.ring.is_field()) return m.gens;
  auto s = m.size();
  return s ? json(*s) : json(nullptr);
}

json ideal_list(const std::vector<Ideal>& ideals) {
  json out = json::array();
  for (const auto& I : ideals) out.push_back(to_json(I.space));
  return out;
}

bool same_ideals(const std::vector<Ideal>& a, const std::vector<Ideal>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a)
    if (std::none_of(b.begin(), b.end(), [&](const Ideal& y) { return ideal_equal(x, y); })) return false;
  return true;
}

void sort_unique(std::vector<Ideal>& ideals) {
  std::sort(ideals.begin(), ideals.end(), [](const Ideal& a, const Ideal& b) { return a.space < b.space; });
  ideals.erase(std::unique(ideals.begin(), ideals.end()), ideals.end());
}

bool killed_by_radical(const ModuleAction& m) {
  for (const auto& j : m.ring.jacobson_radical_gens())
    for (std::size_t i = 0; i < m.gens; ++i) {
      Vec v = zero_vec(m.ring, m.gens);
      v[i] = j;
      if (!m.relations.contains(v)) return false;
    }
  return true;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::refuted: return "refuted";
    case Verdict::skipped: return "skipped";
  }
  return "skipped";
}

json to_json(const VerificationReport& r) {
  json j{{"theorem", r.theorem}, {"instance", r.instance}, {"verdict", to_string(r.verdict)}};
  if (!r.reason.empty()) j["reason"] = r.reason;
  j["witnesses"] = r.witnesses;
  return j;
}

VerificationReport verify_induced_annihilator(GroupoidPtr g, const IsotropyModule& n) {
  json inst = describe(*g, n.ring());
  inst["object"] = n.group.base;
  inst["module_gens"] = n.dim();
  return run(kInducedAnnihilator, inst, [&](VerificationReport& r) {
    auto ind = induce(g, n);
    r.witnesses["induced_gens"] = ind.rep.dim();
    compare(r, "direct", induced_annihilator_direct(g, n, ind.transversal), "kernel", annihilator(ind.rep));
  });
}

VerificationReport verify_induced_simple(GroupoidPtr g, const IsotropyModule& n, const Limits& limits) {
  json inst = describe(*g, n.ring());
  inst["object"] = n.group.base;
  inst["module_gens"] = n.dim();
  return run(kInducedSimple, inst, [&](VerificationReport& r) {
    if (!is_simple(n, limits)) {
      r.verdict = Verdict::skipped;
      r.reason = "isotropy module is not simple";
      return;
    }
    auto ind = induce(g, n);
    bool simple = is_simple(ind.rep, limits);
    r.witnesses["induced_gens"] = ind.rep.dim();
    r.witnesses["induced_simple"] = simple;
    r.verdict = simple ? Verdict::verified : Verdict::refuted;
    if (!simple) r.reason = "induced module has a proper nonzero submodule";
  });
}

VerificationReport verify_disintegration(const Rep& rho) {
  json inst = describe(*rho.groupoid, rho.ring());
  inst["rep_gens"] = rho.dim();
  return run(kDisintegration, inst, [&](VerificationReport& r) {
    auto s = sheaf_of(rho);
    auto bad = sheaf_validate(s);
    json stalks = json::array();
    for (ObjectId u = 0; u < static_cast<ObjectId>(s.gens.size()); ++u) {
      ModuleAction stalk(s.ring, s.gens[u], s.relations[u], {});
      stalks.push_back(module_size(stalk));
    }
    r.witnesses["stalks"] = stalks;
    if (!bad.empty()) {
      r.verdict = Verdict::refuted;
      r.reason = "sheaf axioms fail";
      r.witnesses["violations"] = to_json(bad);
      return;
    }
    compare(r, "annihilator", annihilator(rho), "sections_annihilator", annihilator(gamma_c(s)));
    if (r.verdict != Verdict::verified) return;
    r.witnesses["iso_rows"] = disintegration_iso(rho).rows();  // throws on failure
  });
}

VerificationReport verify_ideal_is_intersection(const Ideal& I, const Limits&) {
  const auto& g = *I.groupoid;
  json inst = describe(g, I.ring());
  inst["ideal"] = to_json(I.space);
  return run(kIdealIntersection, inst, [&](VerificationReport& r) {
    if (!is_two_sided(g, I.space)) {
      r.verdict = Verdict::skipped;
      r.reason = "input is not a two-sided ideal";
      return;
    }
    auto s = sheaf_of(quotient_algebra_rep(I));
    auto orb = orbits(g);
    Ideal reps = whole_ideal(I.groupoid, I.ring()), all = reps;
    json per = json::array();
    for (ObjectId u = 0; u < static_cast<ObjectId>(g.n_objects()); ++u) {
      auto stalk = stalk_isotropy_module(s, u);
      auto J = induced_annihilator_direct(I.groupoid, stalk);
      bool rep = orb.representative(u) == u;
      if (rep) reps = ideal_intersect(reps, J);
      all = ideal_intersect(all, J);
      per.push_back({{"object", u}, {"representative", rep}, {"stalk", module_size(stalk.module)},
                     {"annihilator", to_json(J.space)}});
    }
    r.witnesses["per_object"] = per;
    bool agree = ideal_equal(reps, all);
    r.witnesses["all_objects_agree"] = agree;
    compare(r, "ideal", I, "intersection", reps);
    if (!agree) r.reason += (r.reason.empty() ? "" : "; ") + std::string("orbit representatives and all objects disagree");
  });
}

VerificationReport verify_primitive_single_inducer(const Rep& rho, const Limits& limits) {
  json inst = describe(*rho.groupoid, rho.ring());
  inst["rep_gens"] = rho.dim();
  return run(kPrimitiveInducer, inst, [&](VerificationReport& r) {
    if (!is_simple(rho, limits)) {
      r.verdict = Verdict::skipped;
      r.reason = "representation is not simple";
      return;
    }
    auto s = sheaf_of(rho);
    auto support = s.support();
    ObjectId u = support.front();
    auto stalk = stalk_isotropy_module(s, u);
    r.witnesses["object"] = u;
    r.witnesses["support"] = support;
    r.witnesses["stalk"] = module_size(stalk.module);
    try {
      r.witnesses["stalk_simple"] = is_simple(stalk, limits);
    } catch (const BoundExceeded&) {
      r.witnesses["stalk_simple"] = nullptr;
    }
    compare(r, "annihilator", annihilator(rho), "induced_annihilator", induced_annihilator_direct(rho.groupoid, stalk));
  });
}

std::vector<PrimitiveInducer> primitive_inducers(GroupoidPtr g, const Ring& R, const Limits& limits) {
  std::vector<PrimitiveInducer> out;
  for (const auto& cls : orbits(*g).classes) {
    ObjectId u = cls.front();
    for (auto& n : simple_modules_group(isotropy(*g, u), R, limits)) {
      auto I = induced_annihilator_direct(g, n);
      bool seen = std::any_of(out.begin(), out.end(), [&](const PrimitiveInducer& p) { return ideal_equal(p.ideal, I); });
      if (!seen) out.push_back({std::move(I), u, std::move(n)});
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const PrimitiveInducer& a, const PrimitiveInducer& b) { return a.ideal.space < b.ideal.space; });
  return out;
}

std::vector<Ideal> enumerate_primitive_ideals(GroupoidPtr g, const Ring& R, const Limits& limits) {
  std::vector<Ideal> out;
  for (auto& p : primitive_inducers(g, R, limits)) out.push_back(std::move(p.ideal));
  return out;
}

std::vector<Rep> simple_quotients_of_regular(GroupoidPtr g, const Ring& R, const Limits& limits) {
  if (!R.is_finite()) throw Unsupported("the primitive-ideal oracle needs a finite ring");
  limits.require_power(R.modulus(), g->n_arrows(), "regular representation");
  auto reg = regular_rep(g, R);
  auto subs = all_submodules(reg.module, limits);
  std::vector<Subspace> proper;
  for (auto& s : subs)
    if (!s.is_full()) proper.push_back(std::move(s));
  std::vector<Rep> out;
  for (const auto& s : proper) {
    bool maximal = std::none_of(proper.begin(), proper.end(),
                                [&](const Subspace& t) { return !(t == s) && is_subset(s, t); });
    if (maximal) out.push_back(make_rep(g, quotient_module(reg.module, s)));
  }
  return out;
}

std::vector<Ideal> primitive_ideal_oracle(GroupoidPtr g, const Ring& R, const Limits& limits) {
  std::vector<Ideal> out;
  for (const auto& rho : simple_quotients_of_regular(g, R, limits)) out.push_back(annihilator(rho));
  sort_unique(out);
  return out;
}

VerificationReport verify_primitive_ideals(GroupoidPtr g, const Ring& R, const Limits& limits) {
  return run(kPrimitiveIdeals, describe(*g, R), [&](VerificationReport& r) {
    auto found = enumerate_primitive_ideals(g, R, limits);
    r.witnesses["primitive"] = ideal_list(found);
    if (!R.is_finite()) {
      r.verdict = Verdict::skipped;
      r.reason = "no independent oracle over Q";
      return;
    }
    auto oracle = primitive_ideal_oracle(g, R, limits);
    r.witnesses["oracle"] = ideal_list(oracle);
    r.verdict = same_ideals(found, oracle) ? Verdict::verified : Verdict::refuted;
    if (r.verdict == Verdict::refuted) r.reason = "induced annihilators differ from the oracle";
  });
}

VerificationReport verify_induced_from_simples(GroupoidPtr g, const Ring& R, const Limits& limits) {
  return run(kInducedFromSimples, describe(*g, R), [&](VerificationReport& r) {
    auto inducers = primitive_inducers(g, R, limits);
    json items = json::array();
    std::vector<Ideal> found;
    std::string failure;
    for (const auto& p : inducers) {
      auto ind = induce(g, p.module);
      bool simple_n = is_simple(p.module, limits);
      bool simple_ind = is_simple(ind.rep, limits);
      bool radical = killed_by_radical(p.module.module);
      bool ann = ideal_equal(annihilator(ind.rep), p.ideal);
      items.push_back({{"object", p.object},
                       {"module_gens", p.module.dim()},
                       {"module_simple", simple_n},
                       {"induced_simple", simple_ind},
                       {"killed_by_radical", radical},
                       {"annihilator_matches", ann},
                       {"ideal", to_json(p.ideal.space)}});
      if (failure.empty() && !(simple_n && simple_ind && radical && ann))
        failure = "inducer at object " + std::to_string(p.object) + " fails";
      found.push_back(p.ideal);
    }
    r.witnesses["primitive"] = items;
    r.witnesses["count"] = found.size();
    if (failure.empty() && R.is_finite()) {
      auto oracle = primitive_ideal_oracle(g, R, limits);
      r.witnesses["oracle"] = ideal_list(oracle);
      if (!same_ideals(found, oracle)) failure = "induced annihilators differ from the oracle";
    }
    r.verdict = failure.empty() ? Verdict::verified : Verdict::refuted;
    r.reason = failure;
  });
}

}  // namespace galg

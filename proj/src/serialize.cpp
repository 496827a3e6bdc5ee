#include "galg/serialize.hpp"

namespace galg {

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field \"") + key + "\": " + e.what());
  }
}

json module_json(const ModuleAction& m) {
  json j{{"ring", m.ring.spec()}, {"gens", m.gens}};
  if (!m.relations.is_zero()) j["relations"] = to_json(m.relations);
  json ops = json::array();
  for (const auto& a : m.ops) ops.push_back(to_json(m.ring, a));
  j["ops"] = std::move(ops);
  return j;
}

}  // namespace

json to_json(const FiniteGroupoid& g) {
  json arrows = json::array();
  for (const auto& a : g.arrows()) arrows.push_back({{"d", a.d}, {"r", a.r}});
  json comp = json::array();
  for (const auto& c : g.comp()) comp.push_back({c[0], c[1], c[2]});
  return {{"objects", g.n_objects()}, {"arrows", arrows}, {"units", g.units()}, {"comp", comp}, {"inv", g.inverses()}};
}

FiniteGroupoid groupoid_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("groupoid must be a JSON object");
  auto k = field<long long>(j, "objects");
  if (k < 0) throw ParseError("negative object count");
  std::vector<Arrow> arrows;
  auto arr = field<json>(j, "arrows");
  if (!arr.is_array()) throw ParseError("\"arrows\" must be an array");
  for (const auto& a : arr) arrows.push_back({field<int>(a, "d"), field<int>(a, "r")});
  auto units = field<std::vector<ArrowId>>(j, "units");
  auto inv = field<std::vector<ArrowId>>(j, "inv");
  std::vector<CompEntry> comp;
  for (const auto& c : field<std::vector<std::vector<ArrowId>>>(j, "comp")) {
    if (c.size() != 3) throw ParseError("composition entries are [alpha, beta, alpha*beta]");
    comp.push_back({c[0], c[1], c[2]});
  }
  return FiniteGroupoid(static_cast<std::size_t>(k), std::move(arrows), std::move(units), std::move(comp),
                        std::move(inv));
}

FiniteGroupoid groupoid_from_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  return groupoid_from_json(j);
}

json to_json(const Ring& R, const Scalar& x) { return R.format(x); }

json to_json(const Ring& R, std::span<const Scalar> v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(R.format(x));
  return out;
}

json to_json(const Ring& R, const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(R, m.row(i)));
  return out;
}

Vec vec_from_json(const Ring& R, const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of scalars");
  Vec v;
  for (const auto& x : j) {
    try {
      if (x.is_number_integer())
        v.push_back(R.from_int(x.get<std::int64_t>()));
      else if (x.is_string())
        v.push_back(R.parse_scalar(x.get<std::string>()));
      else
        throw ParseError("scalars are integers or strings");
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return v;
}

json to_json(const Subspace& s) {
  json basis = json::array();
  for (const auto& b : s.basis()) basis.push_back(to_json(s.ring(), b));
  return basis;
}

json to_json(const AlgebraElement& f) { return {{"ring", f.ring.spec()}, {"coeffs", to_json(f.ring, f.coeffs)}}; }

json to_json(const Ideal& I) {
  return {{"ring", I.ring().spec()}, {"arrows", I.space.ambient_dim()}, {"rank", I.space.rank()},
          {"basis", to_json(I.space)}};
}

json to_json(const Rep& rho) {
  json j = module_json(rho.module);
  j["dim"] = rho.dim();
  return j;
}

json to_json(const IsotropyModule& n) {
  json j = module_json(n.module);
  j["object"] = n.group.base;
  j["elements"] = n.group.elements;
  return j;
}

json to_json(const SheafData& s) {
  json stalks = json::array();
  for (std::size_t u = 0; u < s.gens.size(); ++u) {
    json st{{"object", u}, {"gens", s.gens[u]}};
    if (s.ring.is_field())
      st["dim"] = s.gens[u];
    else
      st["relations"] = to_json(s.relations[u]);
    stalks.push_back(std::move(st));
  }
  json arrows = json::array();
  for (const auto& a : s.arrows) arrows.push_back(to_json(s.ring, a));
  return {{"ring", s.ring.spec()}, {"stalks", stalks}, {"arrows", arrows}};
}

json to_json(const std::vector<Violation>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back({{"axiom", x.axiom}, {"detail", x.detail}});
  return out;
}

}  // namespace galg

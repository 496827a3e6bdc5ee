#include "galg/generators.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace galg {

namespace {

std::size_t parse_count(std::string_view s, const char* what) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || v == 0)
    throw std::invalid_argument(std::string(what) + " must be a positive integer, got '" + std::string(s) + "'");
  return v;
}

// One permutation per group element, separated by ';', images by spaces or commas.
std::vector<std::vector<std::size_t>> parse_perms(const std::string& text) {
  std::vector<std::vector<std::size_t>> perms;
  std::stringstream all(text);
  std::string one;
  while (std::getline(all, one, ';')) {
    for (auto& c : one)
      if (c == ',') c = ' ';
    std::stringstream in(one);
    std::vector<std::size_t> p;
    std::string tok;
    while (in >> tok) {
      std::size_t v = 0;
      auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || end != tok.data() + tok.size())
        throw std::invalid_argument("bad point '" + tok + "' in action");
      p.push_back(v);
    }
    perms.push_back(std::move(p));
  }
  return perms;
}

FiniteGroupoid action(const std::string& group, const std::string& how) {
  GroupTable G = GroupTable::named(group);
  const std::size_t n = G.order();
  if (how == "swap01fix2") {
    if (n != 2) throw std::invalid_argument("swap01fix2 needs a group of order 2");
    return action_groupoid(G, 3, [&](std::size_t h, std::size_t x) { return h != G.identity() && x < 2 ? 1 - x : x; });
  }
  if (how == "s3-triangle") {
    if (group != "s3") throw std::invalid_argument("s3-triangle needs the group s3");
    return action_groupoid(G, 3, [](std::size_t g, std::size_t x) {
      std::size_t k = g % 3;
      return g / 3 ? (k + 3 - x) % 3 : (k + x) % 3;
    });
  }
  if (how == "z4-on-two") {
    if (group != "z4") throw std::invalid_argument("z4-on-two needs the group z4");
    return action_groupoid(G, 2, [](std::size_t g, std::size_t x) { return (g + x) % 2; });
  }
  if (how == "regular") return action_groupoid(G, n, [&](std::size_t g, std::size_t x) { return G.mul(g, x); });
  auto perms = parse_perms(how);
  if (perms.size() != n)
    throw std::invalid_argument("action needs one permutation per group element (" + std::to_string(n) + ")");
  const std::size_t X = perms[0].size();
  for (const auto& p : perms)
    if (p.size() != X) throw std::invalid_argument("permutations of different lengths");
  return action_groupoid(G, X, [&](std::size_t g, std::size_t x) { return perms[g][x]; });
}

}  // namespace

FiniteGroupoid generate(std::string_view kind, const std::vector<std::string>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw std::invalid_argument(std::string(kind) + " takes " + std::to_string(k) + " parameter(s)");
  };
  if (kind == "pair") {
    need(1);
    return pair_groupoid(parse_count(params[0], "pair size"));
  }
  if (kind == "group") {
    need(1);
    return group_groupoid(GroupTable::named(params[0]));
  }
  if (kind == "action") {
    need(2);
    return action(params[0], params[1]);
  }
  if (kind == "union") {
    if (params.empty()) throw std::invalid_argument("union needs at least one part");
    FiniteGroupoid g = parse_generator(params[0]);
    for (std::size_t i = 1; i < params.size(); ++i) g = disjoint_union(g, parse_generator(params[i]));
    return g;
  }
  throw std::invalid_argument("unknown groupoid kind '" + std::string(kind) + "' (pair, group, action, union)");
}

FiniteGroupoid parse_generator(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("generator spec needs KIND:PARAMS");
  std::string_view kind = spec.substr(0, colon), rest = spec.substr(colon + 1);
  std::vector<std::string> params;
  if (kind == "action") {
    auto c = rest.find(':');
    if (c == std::string_view::npos) throw std::invalid_argument("action spec is action:GROUP:ACTION");
    params = {std::string(rest.substr(0, c)), std::string(rest.substr(c + 1))};
  } else if (kind == "union") {
    std::size_t start = 0;
    while (true) {
      auto plus = rest.find('+', start);
      params.emplace_back(rest.substr(start, plus - start));
      if (plus == std::string_view::npos) break;
      start = plus + 1;
    }
  } else {
    params = {std::string(rest)};
  }
  return generate(kind, params);
}

IsotropyModule isotropy_module_named(const FiniteGroupoid& g, ObjectId u, std::string_view name, const Ring& R,
                                     const Limits& limits) {
  auto G = isotropy(g, u);
  if (name == "trivial") return trivial_module(G, R);
  if (name == "sign") return sign_module(G, R);
  if (name == "regular") return regular_module(G, R);
  if (name.starts_with("simple:")) {
    auto simples = simple_modules_group(G, R, limits);
    auto digits = name.substr(7);
    std::size_t i = 0;
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), i);
    if (digits.empty() || ec != std::errc{} || p != digits.data() + digits.size())
      throw std::invalid_argument("bad simple module index in '" + std::string(name) + "'");
    if (i >= simples.size())
      throw std::invalid_argument("only " + std::to_string(simples.size()) + " simple modules at object " +
                                  std::to_string(u));
    return simples[i];
  }
  throw std::invalid_argument("unknown module '" + std::string(name) + "' (trivial, sign, regular, simple:<i>)");
}

}  // namespace galg

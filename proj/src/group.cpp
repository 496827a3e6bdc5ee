#include "galg/group.hpp"

#include <charconv>
#include <optional>
#include <stdexcept>

namespace galg {

GroupTable::GroupTable(std::size_t order, std::vector<std::size_t> table) : n_(order), table_(std::move(table)) {
  if (n_ == 0) throw std::invalid_argument("group must be nonempty");
  if (table_.size() != n_ * n_) throw std::invalid_argument("group table has wrong size");
  for (auto x : table_)
    if (x >= n_) throw std::invalid_argument("group table entry out of range");

  std::optional<std::size_t> e;
  for (std::size_t a = 0; a < n_ && !e; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < n_ && ok; ++b) ok = mul(a, b) == b && mul(b, a) == b;
    if (ok) e = a;
  }
  if (!e) throw std::invalid_argument("group table has no identity");
  e_ = *e;

  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      for (std::size_t c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw std::invalid_argument("group table is not associative");

  inv_.assign(n_, n_);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (mul(a, b) == e_ && mul(b, a) == e_) inv_[a] = b;
  for (auto i : inv_)
    if (i == n_) throw std::invalid_argument("group table has an element without inverse");
}

GroupTable GroupTable::cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group of order 0");
  std::vector<std::size_t> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  return {n, std::move(t)};
}

GroupTable GroupTable::dihedral(std::size_t n) {
  if (n < 1) throw std::invalid_argument("dihedral group needs n >= 1");
  // element (k, f) = r^k s^f stored as k + n*f
  const std::size_t N = 2 * n;
  std::vector<std::size_t> t(N * N);
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y) {
      std::size_t k1 = x % n, f1 = x / n, k2 = y % n, f2 = y / n;
      std::size_t k = f1 ? (k1 + n - k2) % n : (k1 + k2) % n;
      t[x * N + y] = k + n * (f1 ^ f2);
    }
  return {N, std::move(t)};
}

GroupTable GroupTable::klein() { return direct_product(cyclic(2), cyclic(2)); }

GroupTable GroupTable::symmetric3() { return dihedral(3); }

GroupTable GroupTable::direct_product(const GroupTable& a, const GroupTable& b) {
  const std::size_t n = a.order() * b.order();
  std::vector<std::size_t> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t xa = x / b.order(), xb = x % b.order(), ya = y / b.order(), yb = y % b.order();
      t[x * n + y] = a.mul(xa, ya) * b.order() + b.mul(xb, yb);
    }
  return {n, std::move(t)};
}

GroupTable GroupTable::named(std::string_view name) {
  if (auto x = name.find('x'); x != std::string_view::npos)
    return direct_product(named(name.substr(0, x)), named(name.substr(x + 1)));
  auto number = [&](std::string_view s) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || v == 0)
      throw std::invalid_argument("bad group name '" + std::string(name) + "'");
    return v;
  };
  if (name == "v4") return klein();
  if (name == "s3") return symmetric3();
  if (name.starts_with("z")) return cyclic(number(name.substr(1)));
  if (name.starts_with("d")) return dihedral(number(name.substr(1)));
  throw std::invalid_argument("unknown group '" + std::string(name) + "' (expected z<n>, d<n>, v4, s3, AxB)");
}

std::size_t GroupTable::element_order(std::size_t a) const {
  std::size_t k = 1, x = a;
  while (x != e_) x = mul(x, a), ++k;
  return k;
}

bool GroupTable::is_abelian() const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

}  // namespace galg

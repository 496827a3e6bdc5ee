#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace galg {

/// A finite group as an explicit multiplication table.
class GroupTable {
 public:
  GroupTable() = default;
  /// table[a * n + b] = a*b. Throws std::invalid_argument unless the table
  /// is a group.
  GroupTable(std::size_t order, std::vector<std::size_t> table);

  static GroupTable cyclic(std::size_t n);
  static GroupTable dihedral(std::size_t n);  // order 2n
  static GroupTable klein();
  static GroupTable symmetric3();
  static GroupTable direct_product(const GroupTable& a, const GroupTable& b);
  /// "z<n>", "d<n>", "v4", "s3", and products joined by 'x' ("z2xz3").
  static GroupTable named(std::string_view name);

  std::size_t order() const { return n_; }
  std::size_t identity() const { return e_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }
  std::size_t inverse(std::size_t a) const { return inv_[a]; }
  std::size_t element_order(std::size_t a) const;
  bool is_abelian() const;
  const std::vector<std::size_t>& table() const { return table_; }

  friend bool operator==(const GroupTable& a, const GroupTable& b) { return a.table_ == b.table_; }

 private:
  std::size_t n_ = 0;
  std::size_t e_ = 0;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inv_;
};

}  // namespace galg

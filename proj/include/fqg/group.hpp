#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fqg {

/// table[g][h] = index of g*h.
using CayleyTable = std::vector<std::vector<int>>;

/// A validated finite group given by its Cayley table.
class FiniteGroup {
 public:
  /// Throws NotAGroup naming the failing axiom.
  explicit FiniteGroup(CayleyTable table, std::string name = {});

  static FiniteGroup cyclic(int n);
  /// S3 with elements ordered e, (123), (132), (12), (13), (23).
  static FiniteGroup symmetric3();

  int order() const noexcept { return static_cast<int>(table_.size()); }
  int mul(int g, int h) const { return table_[g][h]; }
  int identity() const noexcept { return identity_; }
  int inverse(int g) const { return inverse_[g]; }
  bool is_abelian() const;
  const CayleyTable& table() const noexcept { return table_; }
  const std::string& name() const noexcept { return name_; }

  /// Every subgroup as a sorted element list, ordered by (size, elements).
  std::vector<std::vector<int>> subgroups() const;
  /// Left cosets gH, each sorted, deduplicated.
  std::vector<std::vector<int>> left_cosets(const std::vector<int>& subgroup) const;
  std::vector<std::vector<int>> right_cosets(const std::vector<int>& subgroup) const;

 private:
  CayleyTable table_;
  std::string name_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

}  // namespace fqg

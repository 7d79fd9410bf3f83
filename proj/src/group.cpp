#include "fqg/group.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "fqg/error.hpp"

namespace fqg {

FiniteGroup::FiniteGroup(CayleyTable table, std::string name) : table_(std::move(table)), name_(std::move(name)) {
  const int n = order();
  if (n == 0) throw Error(ErrorKind::NotAGroup, "empty table");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::NotAGroup, "table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw Error(ErrorKind::NotAGroup, "closure: entry out of range");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw Error(ErrorKind::NotAGroup, "associativity fails");
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g) ok = table_[e][g] == g && table_[g][e] == g;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw Error(ErrorKind::NotAGroup, "no identity element");
  inverse_.assign(n, -1);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (table_[g][h] == identity_ && table_[h][g] == identity_) inverse_[g] = h;
  if (std::find(inverse_.begin(), inverse_.end(), -1) != inverse_.end())
    throw Error(ErrorKind::NotAGroup, "an element has no inverse");
}

FiniteGroup FiniteGroup::cyclic(int n) {
  CayleyTable t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup(std::move(t), "Z" + std::to_string(n));
}

FiniteGroup FiniteGroup::symmetric3() {
  // permutations of {0,1,2} in image notation
  const std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
  auto index_of = [&](const std::array<int, 3>& p) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), p) - perms.begin());
  };
  CayleyTable t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];  // (ab)(i) = a(b(i))
      t[a][b] = index_of(c);
    }
  return FiniteGroup(std::move(t), "S3");
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < order(); ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

std::vector<std::vector<int>> FiniteGroup::subgroups() const {
  const int n = order();
  std::set<std::vector<int>> found;
  // Every subgroup of the small groups used here is generated by at most two
  // elements, so closing all pairs is exhaustive for them; it is exhaustive in
  // general only for groups whose subgroups are 2-generated.
  auto close = [&](std::vector<int> gens) {
    std::set<int> s{identity_};
    s.insert(gens.begin(), gens.end());
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(s.begin(), s.end());
      for (int a : cur)
        for (int b : cur)
          if (s.insert(table_[a][b]).second) grew = true;
    }
    return std::vector<int>(s.begin(), s.end());
  };
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) found.insert(close({a, b}));
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

std::vector<std::vector<int>> FiniteGroup::left_cosets(const std::vector<int>& subgroup) const {
  std::set<std::vector<int>> cosets;
  for (int g = 0; g < order(); ++g) {
    std::vector<int> c;
    for (int h : subgroup) c.push_back(table_[g][h]);
    std::sort(c.begin(), c.end());
    cosets.insert(c);
  }
  return {cosets.begin(), cosets.end()};
}

std::vector<std::vector<int>> FiniteGroup::right_cosets(const std::vector<int>& subgroup) const {
  std::set<std::vector<int>> cosets;
  for (int g = 0; g < order(); ++g) {
    std::vector<int> c;
    for (int h : subgroup) c.push_back(table_[h][g]);
    std::sort(c.begin(), c.end());
    cosets.insert(c);
  }
  return {cosets.begin(), cosets.end()};
}

}  // namespace fqg

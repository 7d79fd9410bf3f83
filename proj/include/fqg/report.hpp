#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fqg {

/// One verified statement. For identities lhs/rhs are the two sides' sizes
/// (or 0) and residual their distance; for inequalities residual is lhs - rhs.
struct Check {
  std::string name;
  std::string anchor;  // the statement being checked, in words
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  bool holds = false;
  std::string note;
};

inline constexpr std::string_view kTrivialNote = "trivially satisfied (finite-dimensional Kac case)";

class CheckList {
 public:
  Check& add(Check c) {
    checks_.push_back(std::move(c));
    return checks_.back();
  }
  /// Identity check: holds iff residual <= tol.
  Check& identity(std::string name, std::string anchor, double residual, double tol) {
    return add({std::move(name), std::move(anchor), 0.0, 0.0, residual, residual <= tol, {}});
  }
  Check& trivial(std::string name, std::string anchor) {
    return add({std::move(name), std::move(anchor), 0.0, 0.0, 0.0, true, std::string(kTrivialNote)});
  }
  void append(const CheckList& other) { checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end()); }

  bool all_hold() const {
    for (const auto& c : checks_)
      if (!c.holds) return false;
    return true;
  }
  const Check* find(std::string_view name) const {
    for (const auto& c : checks_)
      if (c.name == name) return &c;
    return nullptr;
  }
  const std::vector<Check>& checks() const noexcept { return checks_; }
  std::vector<Check>& checks() noexcept { return checks_; }
  bool empty() const noexcept { return checks_.empty(); }

 private:
  std::vector<Check> checks_;
};

}  // namespace fqg

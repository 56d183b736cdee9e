#pragma once

#include "tcurv/rational.hpp"
#include "tcurv/tensor.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tcurv {

/// Exact counterexample attached to a failing check. Index tuples are
/// 1-based, matching the frame notation e_1..e_m used in reports.
struct Witness {
  std::vector<int> index;
  std::string expected;
  std::string actual;
};

struct CheckResult {
  std::string id;
  bool pass = false;
  std::optional<Witness> witness;  // present iff !pass

  static CheckResult passed(std::string id) { return {std::move(id), true, std::nullopt}; }
  static CheckResult failed(std::string id, Witness w) {
    return {std::move(id), false, std::move(w)};
  }
};

/// Ordered list of named checks; ordering is declaration order and stable.
struct CheckReport {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  void add(CheckResult c) { checks.push_back(std::move(c)); }
  void append(const CheckReport& other);
  const CheckResult* find(std::string_view id) const;
};

std::vector<int> to_one_based(std::span<const int> idx);

/// PASS iff the two tensors agree entrywise; FAIL carries the first
/// mismatching index with both exact values.
CheckResult check_tensors_equal(std::string id, const Tensor& actual, const Tensor& expected);

/// PASS iff the tensor is identically zero.
CheckResult check_tensor_zero(std::string id, const Tensor& defect);

CheckResult check_scalar_equal(std::string id, const Rational& actual, const Rational& expected);

}  // namespace tcurv

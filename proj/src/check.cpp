#include "tcurv/check.hpp"

namespace tcurv {

bool CheckReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void CheckReport::append(const CheckReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

const CheckResult* CheckReport::find(std::string_view id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

std::vector<int> to_one_based(std::span<const int> idx) {
  std::vector<int> out(idx.begin(), idx.end());
  for (int& v : out) ++v;
  return out;
}

CheckResult check_tensors_equal(std::string id, const Tensor& actual, const Tensor& expected) {
  if (auto idx = first_mismatch(actual, expected)) {
    return CheckResult::failed(std::move(id),
                               Witness{to_one_based(*idx), expected.at(*idx).str(),
                                       actual.at(*idx).str()});
  }
  return CheckResult::passed(std::move(id));
}

CheckResult check_tensor_zero(std::string id, const Tensor& defect) {
  for (std::size_t p = 0; p < defect.entries().size(); ++p) {
    if (!defect.entries()[p].is_zero()) {
      auto idx = defect.unflatten(p);
      return CheckResult::failed(std::move(id),
                                 Witness{to_one_based(idx), "0", defect.entries()[p].str()});
    }
  }
  return CheckResult::passed(std::move(id));
}

CheckResult check_scalar_equal(std::string id, const Rational& actual, const Rational& expected) {
  if (actual == expected) return CheckResult::passed(std::move(id));
  return CheckResult::failed(std::move(id), Witness{{}, expected.str(), actual.str()});
}

}  // namespace tcurv

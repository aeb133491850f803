#include "hyperops/report.hpp"

namespace hyperops {

Report& Report::pass(std::string id, std::vector<int> indices) {
  return add(Claim{std::move(id), std::move(indices), true, ClaimKind::Check, std::nullopt});
}

Report& Report::fail(std::string id, std::vector<int> indices, Counterexample cx, ClaimKind kind) {
  return add(Claim{std::move(id), std::move(indices), false, kind, std::move(cx)});
}

Report& Report::precondition(std::string id, std::vector<int> indices, bool ok,
                             std::optional<Counterexample> cx) {
  return add(Claim{std::move(id), std::move(indices), ok, ClaimKind::Precondition, ok ? std::nullopt : std::move(cx)});
}

Report& Report::add(Claim claim) {
  claims_.push_back(std::move(claim));
  return *this;
}

Report& Report::merge(const Report& other, std::string_view prefix, const std::vector<int>& indices) {
  for (Claim c : other.claims_) {
    if (!prefix.empty()) c.id = std::string(prefix) + "." + c.id;
    if (!indices.empty()) c.indices.insert(c.indices.begin(), indices.begin(), indices.end());
    claims_.push_back(std::move(c));
  }
  if (other.real_inputs) note_inputs_real(*other.real_inputs);
  return *this;
}

Report& Report::merge_as_precondition(const Report& other, std::string_view prefix,
                                      const std::vector<int>& indices) {
  const std::size_t start = claims_.size();
  merge(other, prefix, indices);
  for (std::size_t i = start; i < claims_.size(); ++i) claims_[i].kind = ClaimKind::Precondition;
  return *this;
}

Report& Report::merge_as_check(const Report& other, std::string_view prefix, const std::vector<int>& indices) {
  const std::size_t start = claims_.size();
  merge(other, prefix, indices);
  for (std::size_t i = start; i < claims_.size(); ++i) claims_[i].kind = ClaimKind::Check;
  return *this;
}

bool Report::ok() const {
  for (const auto& c : claims_)
    if (!c.pass) return false;
  return true;
}

bool Report::preconditions_ok() const {
  for (const auto& c : claims_)
    if (!c.pass && c.kind == ClaimKind::Precondition) return false;
  return true;
}

const Claim* Report::first_failure() const {
  for (const auto& c : claims_)
    if (!c.pass) return &c;
  return nullptr;
}

void Report::note_inputs_real(bool real) { real_inputs = real_inputs.value_or(true) && real; }

}  // namespace hyperops

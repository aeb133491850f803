#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hyperops {

/// Basis tuple (1-based) witnessing a failed identity.
struct Counterexample {
  std::vector<int> basis;
  std::string detail;
};

enum class ClaimKind { Check, Precondition };

struct Claim {
  std::string id;
  std::vector<int> indices;  // structure indices such as (i, k) in T_i, d_k
  bool pass = true;
  ClaimKind kind = ClaimKind::Check;
  std::optional<Counterexample> counterexample;
};

/// Ordered list of claims produced by a check. A report passes when every
/// claim passes; precondition claims are tracked separately so callers can
/// tell "the structure fails" from "the question was ill-posed".
class Report {
public:
  Report& pass(std::string id, std::vector<int> indices = {});
  Report& fail(std::string id, std::vector<int> indices, Counterexample cx,
               ClaimKind kind = ClaimKind::Check);
  Report& precondition(std::string id, std::vector<int> indices, bool ok,
                       std::optional<Counterexample> cx = std::nullopt);
  Report& add(Claim claim);

  /// Appends every claim of `other`, prefixing ids with `prefix` and
  /// prepending `indices` to each claim's index tuple.
  Report& merge(const Report& other, std::string_view prefix = {}, const std::vector<int>& indices = {});
  /// Appends `other` with all of its claims demoted to preconditions.
  Report& merge_as_precondition(const Report& other, std::string_view prefix = {},
                                const std::vector<int>& indices = {});

  /// Appends `other` with every claim counted as an ordinary check.
  Report& merge_as_check(const Report& other, std::string_view prefix = {}, const std::vector<int>& indices = {});

  bool ok() const;
  bool preconditions_ok() const;
  const Claim* first_failure() const;
  const std::vector<Claim>& claims() const noexcept { return claims_; }
  bool empty() const noexcept { return claims_.empty(); }

  /// Whether every numeric input of the check was real; unset when the
  /// check had no numeric inputs worth flagging.
  std::optional<bool> real_inputs;
  void note_inputs_real(bool real);

private:
  std::vector<Claim> claims_;
};

}  // namespace hyperops

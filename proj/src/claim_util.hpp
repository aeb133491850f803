#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hyperops/matrix.hpp"
#include "hyperops/report.hpp"

namespace hyperops::detail {

/// Records `lhs == rhs`; on failure the counterexample is the first basis
/// vector (column) on which the two maps differ.
inline bool expect_equal(Report& report, std::string id, std::vector<int> indices, const Matrix& lhs,
                         const Matrix& rhs, std::string_view lhs_name, std::string_view rhs_name,
                         ClaimKind kind = ClaimKind::Check) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    report.fail(std::move(id), std::move(indices),
                {{}, std::string(lhs_name) + " has shape " + lhs.shape_str() + " but " + std::string(rhs_name) +
                         " has shape " + rhs.shape_str()},
                kind);
    return false;
  }
  for (std::size_t j = 0; j < lhs.cols(); ++j)
    if (lhs.col(j) != rhs.col(j)) {
      report.fail(std::move(id), std::move(indices),
                  {{static_cast<int>(j) + 1}, std::string(lhs_name) + " e" + std::to_string(j + 1) + "=" +
                                                  vector_str(lhs.col(j)) + " but " + std::string(rhs_name) + " e" +
                                                  std::to_string(j + 1) + "=" + vector_str(rhs.col(j))},
                  kind);
      return false;
    }
  if (kind == ClaimKind::Precondition)
    report.precondition(std::move(id), std::move(indices), true);
  else
    report.pass(std::move(id), std::move(indices));
  return true;
}

inline Scalar sign(int e) { return Scalar(static_cast<long>(e)); }

}  // namespace hyperops::detail

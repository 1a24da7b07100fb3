#pragma once

#include <optional>
#include <vector>

namespace treelasso::detail {

/// Finds x >= 0 with A x = b by phase-one simplex (Bland's rule, dense
/// tableau). Returns nullopt when the system is infeasible. The returned
/// point satisfies every row to within `residual` * max(1, |b_i|).
std::optional<std::vector<double>> nonnegative_solution(const std::vector<std::vector<double>>& a,
                                                        const std::vector<double>& b,
                                                        double residual = 1e-7);

}  // namespace treelasso::detail

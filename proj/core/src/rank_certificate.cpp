#include "treelasso/rank_certificate.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>

#include "detail/rooted.hpp"

namespace treelasso {

std::vector<std::vector<std::uint8_t>> path_incidence_matrix(const XTree& tree,
                                                             const CordSet& cords) {
  std::vector<std::vector<std::uint8_t>> rows;
  rows.reserve(cords.size());
  for (const auto& cord : cords) {
    std::vector<std::uint8_t> row(tree.edge_count(), 0);
    const auto a = tree.taxon_index(cord.first());
    const auto b = tree.taxon_index(cord.second());
    for (auto e : detail::edge_path(tree, a, b)) row[e] = 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::size_t exact_rank(const std::vector<std::vector<std::uint8_t>>& matrix) {
  using Int = boost::multiprecision::cpp_int;
  if (matrix.empty()) return 0;
  const std::size_t rows = matrix.size();
  const std::size_t cols = matrix.front().size();
  std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = matrix[i][j];
  }

  Int previous = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / previous;
      }
      m[i][col] = 0;
    }
    previous = m[rank][col];
    ++rank;
  }
  return rank;
}

bool edge_weight_lasso_certificate(const XTree& tree, const CordSet& cords) {
  if (cords.size() < tree.edge_count()) return false;
  return exact_rank(path_incidence_matrix(tree, cords)) == tree.edge_count();
}

}  // namespace treelasso

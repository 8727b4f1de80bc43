#include "lindyn/linalg.hpp"

#include <Eigen/Dense>

#include <stdexcept>

namespace lindyn {

LsqResult lsq_fit(const std::vector<TruncatedVector>& columns,
                  const TruncatedVector& target, std::size_t dim) {
  if (columns.empty()) throw std::invalid_argument("lsq_fit: no columns");
  if (dim == 0) throw std::invalid_argument("lsq_fit: zero dimension");

  const auto rows = static_cast<Eigen::Index>(dim);
  const auto cols = static_cast<Eigen::Index>(columns.size());
  Eigen::MatrixXcd A(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) {
    const auto& col = columns[static_cast<std::size_t>(c)];
    for (Eigen::Index r = 0; r < rows; ++r) {
      A(r, c) = col.at(static_cast<std::size_t>(r));
    }
  }
  Eigen::VectorXcd b(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    b(r) = target.at(static_cast<std::size_t>(r));
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeThinU |
                                                Eigen::ComputeThinV);
  svd.setThreshold(1e-12);
  const Eigen::VectorXcd x = svd.solve(b);

  LsqResult out;
  out.coefficients.resize(static_cast<std::size_t>(cols));
  for (Eigen::Index c = 0; c < cols; ++c) {
    out.coefficients[static_cast<std::size_t>(c)] = x(c);
  }
  out.residual = (A * x - b).norm();
  out.rank_deficient = svd.rank() < std::min(rows, cols);
  return out;
}

}  // namespace lindyn

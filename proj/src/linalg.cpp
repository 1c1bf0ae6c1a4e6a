#include "linalg.hpp"

#include <Eigen/SVD>

namespace webclass {

namespace {

using ZRow = std::vector<mpz_class>;

ZRow integer_row(const RVec& r) {
  mpz_class l = 1;
  for (const auto& q : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  ZRow out(r.size());
  for (size_t j = 0; j < r.size(); ++j) out[j] = r[j].get_num() * (l / r[j].get_den());
  return out;
}

void remove_content(ZRow& r) {
  mpz_class g = 0;
  for (const auto& v : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g > 1)
    for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

Echelon row_reduce(const RMat& m, size_t ncols) {
  std::vector<ZRow> rows;
  for (const auto& r : m) {
    if (r.size() != ncols) throw Error(ErrorCode::Precondition, "ragged matrix");
    rows.push_back(integer_row(r));
  }
  std::vector<size_t> pivots;
  size_t prow = 0;
  for (size_t col = 0; col < ncols && prow < rows.size(); ++col) {
    size_t sel = rows.size();
    for (size_t i = prow; i < rows.size(); ++i)
      if (rows[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel == rows.size()) continue;
    std::swap(rows[prow], rows[sel]);
    const mpz_class piv = rows[prow][col];
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == prow || rows[i][col] == 0) continue;
      mpz_class f = rows[i][col];
      for (size_t j = 0; j < ncols; ++j) rows[i][j] = piv * rows[i][j] - f * rows[prow][j];
      remove_content(rows[i]);
    }
    pivots.push_back(col);
    ++prow;
  }
  Echelon e;
  e.pivots = pivots;
  for (size_t i = 0; i < pivots.size(); ++i) {
    RVec r(ncols);
    const mpz_class& piv = rows[i][pivots[i]];
    for (size_t j = 0; j < ncols; ++j) {
      r[j] = Rational(rows[i][j], piv);
      r[j].canonicalize();
    }
    e.rref.push_back(std::move(r));
  }
  return e;
}

size_t rank(const RMat& m, size_t ncols) { return row_reduce(m, ncols).pivots.size(); }

std::vector<RVec> nullspace(const RMat& m, size_t ncols) {
  Echelon e = row_reduce(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (size_t p : e.pivots) is_pivot[p] = true;
  std::vector<RVec> basis;
  for (size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    RVec v(ncols, Rational(0));
    v[f] = 1;
    for (size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rref[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RVec> solve_combination(const std::vector<RVec>& basis, const RVec& target) {
  size_t n = target.size();
  size_t k = basis.size();
  // columns are basis vectors, augmented by target
  RMat m(n, RVec(k + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < k; ++j) m[i][j] = basis[j][i];
    m[i][k] = target[i];
  }
  Echelon e = row_reduce(m, k + 1);
  RVec coeffs(k, Rational(0));
  for (size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == k) return std::nullopt;
    coeffs[e.pivots[i]] = e.rref[i][k];
  }
  return coeffs;
}

NumericRank numeric_rank(const std::vector<std::vector<double>>& rows, size_t ncols, double rel_tol) {
  NumericRank out;
  out.cols = ncols;
  if (rows.empty() || ncols == 0) return out;
  Eigen::MatrixXd a(rows.size(), ncols);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < ncols; ++j) a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& sv = svd.singularValues();
  double smax = sv.size() ? sv(0) : 0.0;
  if (smax == 0.0) return out;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * smax) ++out.rank;
  out.smallest_ratio = sv(sv.size() - 1) / smax;
  if (static_cast<size_t>(sv.size()) < ncols) out.smallest_ratio = 0.0;
  return out;
}

}  // namespace webclass

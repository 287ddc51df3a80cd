#include "corners/smith.hpp"

#include <algorithm>
#include <boost/multiprecision/integer.hpp>
#include <limits>
#include <utility>

namespace corners {
namespace {

using boost::multiprecision::abs;

class SmithReducer {
 public:
  explicit SmithReducer(IntegerMatrix m) : a_(std::move(m)) {}

  std::vector<BigInt> run() {
    std::vector<BigInt> diagonal;
    const std::size_t limit = std::min(a_.rows(), a_.cols());
    for (std::size_t k = 0; k < limit; ++k) {
      if (!bring_pivot_to(k)) break;
      while (!eliminate_cross(k)) promote_smallest_in_cross(k);
      diagonal.push_back(abs(a_(k, k)));
    }
    return diagonal;
  }

 private:
  // Chooses the nonzero entry of the trailing block with the smallest
  // magnitude, breaking ties by (row nnz - 1) * (col nnz - 1).
  bool bring_pivot_to(std::size_t k) {
    const std::size_t m = a_.rows(), n = a_.cols();
    std::vector<std::size_t> row_nnz(m, 0), col_nnz(n, 0);
    for (std::size_t i = k; i < m; ++i)
      for (std::size_t j = k; j < n; ++j)
        if (a_(i, j) != 0) {
          ++row_nnz[i];
          ++col_nnz[j];
        }

    bool found = false;
    std::size_t best_r = 0, best_c = 0, best_fill = 0;
    BigInt best_abs;
    for (std::size_t i = k; i < m; ++i) {
      if (row_nnz[i] == 0) continue;
      for (std::size_t j = k; j < n; ++j) {
        if (a_(i, j) == 0) continue;
        BigInt mag = abs(a_(i, j));
        const std::size_t fill = (row_nnz[i] - 1) * (col_nnz[j] - 1);
        if (!found || mag < best_abs || (mag == best_abs && fill < best_fill)) {
          found = true;
          best_abs = std::move(mag);
          best_fill = fill;
          best_r = i;
          best_c = j;
        }
      }
    }
    if (!found) return false;
    swap_rows(k, best_r);
    swap_cols(k, best_c);
    return true;
  }

  // Clears row k and column k against the pivot by truncated division.
  // Returns true when the cross is clean; otherwise remainders smaller than
  // the pivot are left behind.
  bool eliminate_cross(std::size_t k) {
    const std::size_t m = a_.rows(), n = a_.cols();
    const BigInt pivot = a_(k, k);
    bool clean = true;
    for (std::size_t i = k + 1; i < m; ++i) {
      if (a_(i, k) == 0) continue;
      const BigInt q = a_(i, k) / pivot;
      if (q != 0)
        for (std::size_t j = k; j < n; ++j)
          if (a_(k, j) != 0) a_(i, j) -= q * a_(k, j);
      if (a_(i, k) != 0) clean = false;
    }
    for (std::size_t j = k + 1; j < n; ++j) {
      if (a_(k, j) == 0) continue;
      const BigInt q = a_(k, j) / pivot;
      if (q != 0)
        for (std::size_t i = k; i < m; ++i)
          if (a_(i, k) != 0) a_(i, j) -= q * a_(i, k);
      if (a_(k, j) != 0) clean = false;
    }
    return clean;
  }

  void promote_smallest_in_cross(std::size_t k) {
    std::size_t best = 0;
    bool in_row = false, found = false;
    BigInt best_abs;
    auto consider = [&](const BigInt& v, std::size_t idx, bool row) {
      if (v == 0) return;
      BigInt mag = abs(v);
      if (!found || mag < best_abs) {
        found = true;
        best_abs = std::move(mag);
        best = idx;
        in_row = row;
      }
    };
    for (std::size_t i = k + 1; i < a_.rows(); ++i) consider(a_(i, k), i, false);
    for (std::size_t j = k + 1; j < a_.cols(); ++j) consider(a_(k, j), j, true);
    if (in_row)
      swap_cols(k, best);
    else
      swap_rows(k, best);
  }

  void swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t j = 0; j < a_.cols(); ++j) std::swap(a_(r1, j), a_(r2, j));
  }

  void swap_cols(std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t i = 0; i < a_.rows(); ++i) std::swap(a_(i, c1), a_(i, c2));
  }

  IntegerMatrix a_;
};

}  // namespace

std::vector<BigInt> normalize_invariant_factors(std::vector<BigInt> d) {
  for (auto& x : d) x = abs(x);
  std::erase(d, BigInt(0));
  std::sort(d.begin(), d.end());
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[j] % d[i] == 0) continue;
      const BigInt g = boost::multiprecision::gcd(d[i], d[j]);
      d[j] = d[i] / g * d[j];
      d[i] = g;
    }
  }
  return d;
}

SmithDecomposition smith_normal_form(IntegerMatrix m) {
  SmithDecomposition out;
  out.rows = m.rows();
  out.cols = m.cols();
  out.diagonal = normalize_invariant_factors(SmithReducer(std::move(m)).run());
  return out;
}

}  // namespace corners

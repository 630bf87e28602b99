#pragma once

#include "ixcalc/integer.hpp"
#include "ixcalc/normal_form.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ixcalc {

/// Triangle of Bessel numbers (OEIS A001498), generated by
///
///   a(n,k) = a(n-1,k) + (n-k+1) a(n,k-1),  a(0,0) = 1,
///
/// with out-of-range entries read as zero. Row n holds a(n,0..n); these
/// are, up to sign, the coefficients of the normal ordering of (xI)^n.
class BesselTriangle {
public:
    /// Builds rows 0..max_row.
    explicit BesselTriangle(std::size_t max_row) {
        rows_.reserve(max_row + 1);
        rows_.push_back({1});
        for (std::size_t n = 1; n <= max_row; ++n) {
            const auto& prev = rows_.back();
            std::vector<Integer> row(n + 1);
            for (std::size_t k = 0; k <= n; ++k) {
                Integer v = k < prev.size() ? prev[k] : 0;
                if (k > 0)
                    v += Integer(n - k + 1) * row[k - 1];
                row[k] = std::move(v);
            }
            rows_.push_back(std::move(row));
        }
    }

    const std::vector<std::vector<Integer>>& rows() const { return rows_; }
    const std::vector<Integer>& row(std::size_t n) const { return rows_.at(n); }
    std::size_t max_row() const { return rows_.size() - 1; }

private:
    std::vector<std::vector<Integer>> rows_;
};

/// Row n of the Bessel triangle: [a(n,0), ..., a(n,n)].
inline std::vector<Integer> bessel_row(std::size_t n) {
    return BesselTriangle(n).row(n);
}

/// a(n,i) through the reindexing identity
///
///   a(n,i) = sum_{k=0}^{min(n-1,i)} (n-k)_{i-k} a(n-1,k),
///
/// which expresses row n in terms of row n-1 alone. Requires n >= 1 and
/// i <= n.
inline Integer bessel_via_identity(std::size_t n, std::size_t i) {
    if (n == 0)
        throw std::invalid_argument("bessel_via_identity: n must be >= 1");
    if (i > n)
        throw std::invalid_argument("bessel_via_identity: i must be <= n");
    const auto prev = bessel_row(n - 1);
    const std::size_t kmax = std::min(n - 1, i);
    Integer sum = 0;
    for (std::size_t k = 0; k <= kmax; ++k)
        sum += falling_factorial(n - k, i - k) * prev[k];
    return sum;
}

/// Normal ordering of (xI)^n without running the rewrite engine:
///
///   (xI)^n = sum_{k=0}^{n-1} (-1)^k a(n-1,k) x^{n-k} I^{n+k}.
///
/// n = 0 is rejected here; the identity word belongs to normal_order.
inline NormalForm xi_power_normal_form(std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("xi_power_normal_form: n must be >= 1");
    const auto row = bessel_row(n - 1);
    NormalForm out;
    for (std::size_t k = 0; k < n; ++k) {
        Integer c = row[k];
        if (k % 2 == 1)
            c = -c;
        out.add_term({n - k, n + k}, std::move(c));
    }
    return out;
}

} // namespace ixcalc

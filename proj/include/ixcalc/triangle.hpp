#pragma once

#include "ixcalc/integer.hpp"
#include "ixcalc/normal_form.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ixcalc {

/// Two-parameter coefficient triangle a^(lambda,delta)_{n,k} giving the
/// normal ordering of (x^lambda I^delta)^n. Row n (n >= 1) has
/// lambda(n-1)+1 entries; row 1 is [1]. Rows follow the recurrence
///
///   a_{n+1,j} = sum_{k=0}^{min(j, lambda(n-1))}
///               (lambda n - k)_{j-k} C(j-k+delta-1, delta-1) a_{n,k},
///
/// which collapses the delta-fold integration by parts of one more
/// x^lambda I^delta factor. At lambda = delta = 1 this reproduces the
/// Bessel triangle shifted by one row.
class GeneralizedTriangle {
public:
    GeneralizedTriangle(std::uint64_t lambda, std::uint64_t delta, std::size_t n_max)
        : lambda_(lambda), delta_(delta) {
        if (lambda == 0 || delta == 0)
            throw std::invalid_argument("GeneralizedTriangle: lambda and delta must be >= 1");
        if (n_max == 0)
            throw std::invalid_argument("GeneralizedTriangle: n_max must be >= 1");
        rows_.reserve(n_max);
        rows_.push_back({1});
        for (std::size_t n = 1; n < n_max; ++n) {
            const auto& prev = rows_.back(); // row n, lambda(n-1)+1 entries
            std::vector<Integer> row(lambda * n + 1);
            for (std::uint64_t j = 0; j < row.size(); ++j) {
                Integer sum = 0;
                const std::uint64_t kmax = std::min<std::uint64_t>(j, prev.size() - 1);
                for (std::uint64_t k = 0; k <= kmax; ++k)
                    sum += falling_factorial(lambda * n - k, j - k) *
                           weak_composition_count(j - k, delta) * prev[k];
                row[j] = std::move(sum);
            }
            rows_.push_back(std::move(row));
        }
    }

    std::uint64_t lambda() const { return lambda_; }
    std::uint64_t delta() const { return delta_; }

    /// Rows 1..n_max; rows() [i] is row i+1.
    const std::vector<std::vector<Integer>>& rows() const { return rows_; }

    /// Row n, 1-based.
    const std::vector<Integer>& row(std::size_t n) const {
        if (n == 0 || n > rows_.size())
            throw std::out_of_range("GeneralizedTriangle::row: n out of range");
        return rows_[n - 1];
    }

private:
    std::uint64_t lambda_;
    std::uint64_t delta_;
    std::vector<std::vector<Integer>> rows_;
};

inline GeneralizedTriangle generalized_triangle(std::uint64_t lambda, std::uint64_t delta,
                                                std::size_t n_max) {
    return GeneralizedTriangle(lambda, delta, n_max);
}

/// Normal ordering of (x^lambda I^delta)^n straight from the triangle:
///
///   (x^lambda I^delta)^n = sum_{k=0}^{lambda(n-1)} (-1)^k
///                          a^(lambda,delta)_{n,k} x^{lambda n - k} I^{delta n + k}.
inline NormalForm general_power_normal_form(std::uint64_t lambda, std::uint64_t delta,
                                            std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("general_power_normal_form: n must be >= 1");
    const GeneralizedTriangle table(lambda, delta, n);
    const auto& row = table.row(n);
    NormalForm out;
    for (std::uint64_t k = 0; k < row.size(); ++k) {
        Integer c = row[k];
        if (k % 2 == 1)
            c = -c;
        out.add_term({lambda * n - k, delta * n + k}, std::move(c));
    }
    return out;
}

} // namespace ixcalc

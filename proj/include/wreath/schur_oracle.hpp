#pragma once

// Independent check for the Littlewood-Richardson rule: multiply two Schur
// polynomials as ordinary polynomials and read off the Schur expansion of
// the product by repeatedly peeling the leading monomial. Nothing in here
// uses lattice words or skew tableaux.

#include <cstdint>
#include <map>
#include <vector>

#include "wreath/checked.hpp"
#include "wreath/error.hpp"
#include "wreath/partition.hpp"

namespace wreath {

/// Partition -> positive coefficient; all keys have the same size.
using SchurExpansion = std::map<Partition, Count>;

inline constexpr int kDefaultSchurOracleBound = 10;

namespace detail {

using Exponent = std::vector<int>;
using Polynomial = std::map<Exponent, std::int64_t>;

inline bool weakly_decreasing(const Exponent& e) {
    for (std::size_t i = 1; i < e.size(); ++i)
        if (e[i] > e[i - 1]) return false;
    return true;
}

/// Monomials x^content of s_shape in `vars` variables: one per semistandard
/// tableau of the shape with entries in 1..vars. With only_dominant set,
/// monomials whose exponent is not weakly decreasing are skipped.
inline Polynomial schur_polynomial(const Partition& shape, int vars, bool only_dominant) {
    Polynomial poly;
    std::vector<std::vector<int>> rows;
    for (int len : shape.parts()) rows.emplace_back(len, 0);
    Exponent content(vars, 0);

    auto rec = [&](auto&& self, std::size_t r, int c) -> void {
        if (r == rows.size()) {
            if (!only_dominant || weakly_decreasing(content)) ++poly[content];
            return;
        }
        if (c == int(rows[r].size())) {
            self(self, r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) lo = rows[r][c - 1];
        if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
        for (int v = lo; v <= vars; ++v) {
            rows[r][c] = v;
            ++content[v - 1];
            self(self, r, c + 1);
            --content[v - 1];
        }
    };
    rec(rec, 0, 0);
    return poly;
}

}  // namespace detail

/// Expansion of s_alpha * s_beta in the Schur basis, computed in
/// N = |alpha| + |beta| variables.
///
/// Symmetric polynomials are determined by their coefficients on weakly
/// decreasing exponents, so the product and every subtracted s_lambda are
/// tracked on those exponents only. The lexicographically greatest surviving
/// exponent is always the leading term x^lambda of the next Schur summand.
inline SchurExpansion schur_product_oracle(const Partition& alpha, const Partition& beta,
                                           int bound = kDefaultSchurOracleBound) {
    const int vars = alpha.size() + beta.size();
    if (vars > bound) throw Error("oracle_bound_exceeded", "oracle bound exceeded");
    SchurExpansion result;
    if (vars == 0) {
        result[Partition{}] = 1;
        return result;
    }

    auto pa = detail::schur_polynomial(alpha, vars, false);
    auto pb = detail::schur_polynomial(beta, vars, false);
    detail::Polynomial product;
    detail::Exponent e(vars);
    for (const auto& [ea, ca] : pa)
        for (const auto& [eb, cb] : pb) {
            for (int k = 0; k < vars; ++k) e[k] = ea[k] + eb[k];
            if (detail::weakly_decreasing(e)) product[e] += ca * cb;
        }

    while (!product.empty()) {
        auto lead = std::prev(product.end());
        if (lead->second == 0) {
            product.erase(lead);
            continue;
        }
        if (lead->second < 0) throw Error("internal", "negative coefficient while peeling Schur expansion");
        const Partition lambda(lead->first);
        const std::int64_t c = lead->second;
        result[lambda] = Count(c);
        for (const auto& [ex, coeff] : detail::schur_polynomial(lambda, vars, true)) {
            auto it = product.find(ex);
            std::int64_t v = (it == product.end() ? 0 : it->second) - c * coeff;
            if (v == 0) {
                if (it != product.end()) product.erase(it);
            } else if (it == product.end()) {
                product.emplace(ex, v);
            } else {
                it->second = v;
            }
        }
    }
    return result;
}

}  // namespace wreath

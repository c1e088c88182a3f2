#pragma once

#include "kkv/laurent_poly.hpp"
#include "kkv/laurent_series.hpp"
#include "kkv/scalar.hpp"

#include <vector>

namespace kkv {

// Series in q whose coefficients are symmetric Laurent polynomials in z.
using KkvSeries = LaurentSeries<SymLaurentPoly>;

/// prod_{n>=1} 1 / ((1-q^n)^20 (1-z q^n)^2 (1-z^{-1} q^n)^2) through q^q_order.
KkvSeries kkv_product(int q_order);

/// Coefficients c_0..c_D with p = sum_g c_g (z - 2 + 1/z)^g.
std::vector<Rational> lambda_decompose(const SymLaurentPoly& p);
std::vector<Rational> lambda_decompose(const LaurentPolynomial& p); // validates symmetry
SymLaurentPoly lambda_recompose(const std::vector<Rational>& coeffs);

/// BPS numbers n_{g,h} of K3 surfaces for 0 <= g, h <= bound.
class KkvBpsGrid {
public:
    KkvBpsGrid(int bound, std::vector<std::vector<Integer>> by_h);

    int bound() const noexcept { return bound_; }

    /// n_{g,h}. Zero for h < 0 (no curve classes of square below -2) and for g > h;
    /// throws TruncationError for h beyond the computed bound.
    Integer at(int genus, int h) const;

    // n_{0..h, h}
    const std::vector<Integer>& column(int h) const;

private:
    int bound_;
    std::vector<std::vector<Integer>> by_h_;
};

KkvBpsGrid bps_grid_from_kkv(int h_max);

/// prod_{n>=1} (1 - q^n)^(-24) through q^h_max.
RationalSeries yau_zaslow_series(int h_max);

} // namespace kkv

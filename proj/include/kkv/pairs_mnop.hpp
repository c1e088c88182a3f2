#pragma once

#include "kkv/bps_transform.hpp"
#include "kkv/graded_series.hpp"
#include "kkv/kkv_engine.hpp"
#include "kkv/laurent_series.hpp"
#include "kkv/rational_function.hpp"

#include <map>
#include <optional>
#include <utility>

namespace kkv {

/// The class d*beta on a K3 surface, beta primitive with beta^2 = 2h - 2.
struct HodgeLabel {
    int d = 1;
    int h = 0;

    /// Genus label of the class (d/k) beta: ((d/k) beta)^2 = 2 h_of(k) - 2.
    int h_of(int k) const;

    // Largest h_of(k) over divisors k of d, i.e. the grid bound this label needs.
    int required_grid_bound() const;

    friend auto operator<=>(const HodgeLabel&, const HodgeLabel&) = default;
};

/// sum_{g=0}^{h} n_{g,h} q^(1-g) (1+q)^(2g-2): the connected pairs series of a
/// primitive class of square 2h - 2. Zero for h < 0.
RationalFunction primitive_pairs_ratfn(int h, const KkvBpsGrid& grid);

/// sum_{k | d} (1/k) P_{h_of(k)}(-(-q)^k).
RationalFunction multiple_cover(const HodgeLabel& label, const KkvBpsGrid& grid);

/// Expands r(q) at q = -e^{iu} as a Laurent series in u through u_order.
/// The composition runs over Gaussian rationals; every coefficient must come
/// out real and every odd-degree coefficient must vanish.
RationalSeries substitute_q_minus_exp(const RationalFunction& r, int u_order);

/// BPS table on multiples D*beta (D <= d_max) populated from KKV data by square:
/// n_{g, D beta} = n_{g, D^2 (h-1) + 1}.
BpsTable kkv_bps_table(const KkvBpsGrid& grid, int h, int d_max);

/// Connected GW u-series of the class label.d * beta.
RationalSeries gw_connected_series(const HodgeLabel& label, const KkvBpsGrid& grid, int u_order);

struct MnopReport {
    bool equal = false;
    std::optional<int> first_mismatch; // u-degree
    RationalSeries gw_side;
    RationalSeries pairs_side;
};

MnopReport mnop_check(const HodgeLabel& label, const KkvBpsGrid& grid, int u_order);

/// Connected pairs series keyed by square (primitive) and by (d, h) (imprimitive).
/// Every stored function is checked for q <-> 1/q invariance on insertion.
class PairsLedger {
public:
    void insert_primitive(int h, RationalFunction r);
    void insert_imprimitive(const HodgeLabel& label, RationalFunction r);

    const RationalFunction& primitive(int h) const;
    const RationalFunction& imprimitive(const HodgeLabel& label) const;

    const std::map<int, RationalFunction>& primitives() const noexcept { return primitive_; }
    const std::map<std::pair<int, int>, RationalFunction>& imprimitives() const noexcept { return imprimitive_; }

private:
    std::map<int, RationalFunction> primitive_;
    std::map<std::pair<int, int>, RationalFunction> imprimitive_; // (d, h)
};

/// Ledger for all primitive squares 0..h_max and all (d, h) with d <= d_max.
PairsLedger build_pairs_ledger(const KkvBpsGrid& grid, int h_max, int d_max);

/// {d -> multiple_cover(d, h)} for d = 1..d_max.
GradedSeries<RationalFunction> connected_pairs_ledger(const KkvBpsGrid& grid, int h, int d_max);

/// exp of the connected ledger: the disconnected pairs partition function.
GradedSeries<RationalFunction> disconnected_partition(const KkvBpsGrid& grid, int h, int d_max);

} // namespace kkv

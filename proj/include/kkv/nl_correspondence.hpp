#pragma once

#include "kkv/errors.hpp"
#include "kkv/laurent_series.hpp"
#include "kkv/pairs_mnop.hpp"
#include "kkv/rational_function.hpp"
#include "kkv/scalar.hpp"

#include <algorithm>
#include <compare>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace kkv {

// A K3 class of divisibility m and square 2h - 2.
struct ClassLabel {
    int m = 1;
    int h = 0;

    friend auto operator<=>(const ClassLabel&, const ClassLabel&) = default;
};

// A fibre class beta of a K3-fibred 3-fold, identified by name only.
struct FibreClass {
    std::string name;

    friend auto operator<=>(const FibreClass&, const FibreClass&) = default;
};

std::string to_string(const ClassLabel& l);
inline const std::string& to_string(const FibreClass& b) { return b.name; }

// (m, h) for the class m*beta with beta primitive of square label.h.
ClassLabel class_label_of(const HodgeLabel& label);
// Inverse of class_label_of; throws DomainError when m^2 does not divide h - 1.
HodgeLabel hodge_label_of(const ClassLabel& label);

/// Noether-Lefschetz numbers NL_{m,h,beta}: rows are fibre classes, columns K3
/// labels. In this library the entries are synthetic rationals.
class NlMatrix {
public:
    NlMatrix(std::vector<FibreClass> rows, std::vector<ClassLabel> cols, std::vector<Rational> entries);

    static NlMatrix identity(std::vector<FibreClass> rows, std::vector<ClassLabel> cols);
    static NlMatrix zero(std::vector<FibreClass> rows, std::vector<ClassLabel> cols);
    // Unit upper triangular with small random entries above the diagonal.
    static NlMatrix random_unit_triangular(std::vector<FibreClass> rows, std::vector<ClassLabel> cols,
                                           std::mt19937_64& rng);
    // Dense random rational matrix, resampled until invertible.
    static NlMatrix random_invertible(std::vector<FibreClass> rows, std::vector<ClassLabel> cols,
                                      std::mt19937_64& rng);

    const std::vector<FibreClass>& rows() const noexcept { return rows_; }
    const std::vector<ClassLabel>& cols() const noexcept { return cols_; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_.size() + c]; }

    std::size_t rank() const;

    friend bool operator==(const NlMatrix&, const NlMatrix&) = default;

private:
    std::vector<FibreClass> rows_;
    std::vector<ClassLabel> cols_;
    std::vector<Rational> entries_; // row-major
};

/// Values indexed by K3 labels or fibre classes.
template <typename Label, typename V>
struct InvariantVector {
    std::vector<Label> index;
    std::vector<V> values;

    const V& at(const Label& label) const
    {
        auto it = std::find(index.begin(), index.end(), label);
        if (it == index.end()) {
            throw IndexMismatch("label " + to_string(label) + " not present in invariant vector");
        }
        return values[static_cast<std::size_t>(it - index.begin())];
    }

    friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

template <typename V>
using K3Vector = InvariantVector<ClassLabel, V>;
template <typename V>
using FibreVector = InvariantVector<FibreClass, V>;

namespace detail {

template <typename V>
void accumulate(std::optional<V>& acc, const V& value, const Rational& weight)
{
    if (sgn(weight) == 0) {
        return;
    }
    V term = value * weight;
    acc = acc ? V(*acc + term) : std::move(term);
}

// A zero of the same shape as `sample` (same variable and order for series).
template <typename V>
V zero_like(const V& sample)
{
    return sample * Rational(0);
}

} // namespace detail

/// fibre_beta = sum_{(m,h)} k3_{(m,h)} * NL_{m,h,beta}
template <typename V>
FibreVector<V> combine(const K3Vector<V>& k3, const NlMatrix& nl)
{
    if (k3.index.size() != k3.values.size()) {
        throw IndexMismatch("invariant vector has mismatched index and value lengths");
    }
    std::vector<const V*> by_col;
    by_col.reserve(nl.cols().size());
    for (const auto& label : nl.cols()) {
        by_col.push_back(&k3.at(label));
    }
    if (k3.index.size() != nl.cols().size()) {
        throw IndexMismatch("K3 vector has labels the NL matrix does not use");
    }
    FibreVector<V> out;
    out.index = nl.rows();
    out.values.reserve(nl.rows().size());
    for (std::size_t r = 0; r < nl.rows().size(); ++r) {
        std::optional<V> acc;
        for (std::size_t c = 0; c < nl.cols().size(); ++c) {
            detail::accumulate(acc, *by_col[c], nl.at(r, c));
        }
        out.values.push_back(acc ? std::move(*acc) : detail::zero_like(*by_col.front()));
    }
    return out;
}

/// The unique K3 vector v with combine(v, nl) == fib, by exact Gauss-Jordan
/// elimination over the rationals carrying V-valued right-hand sides.
template <typename V>
K3Vector<V> invert_correspondence(const FibreVector<V>& fib, const NlMatrix& nl)
{
    const std::size_t n = nl.rows().size();
    if (nl.cols().size() != n) {
        throw IndexMismatch("NL matrix is not square");
    }
    std::vector<Rational> a(n * n);
    std::vector<V> rhs;
    rhs.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            a[r * n + c] = nl.at(r, c);
        }
        rhs.push_back(fib.at(nl.rows()[r]));
    }
    if (fib.index.size() != n) {
        throw IndexMismatch("fibre vector has classes the NL matrix does not use");
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sgn(a[pivot * n + col]) == 0) {
            ++pivot;
        }
        if (pivot == n) {
            throw SingularMatrix(nl.rank(), n);
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a[pivot * n + c], a[col * n + c]);
            }
            std::swap(rhs[pivot], rhs[col]);
        }
        const Rational inv = 1 / a[col * n + col];
        for (std::size_t c = 0; c < n; ++c) {
            a[col * n + c] *= inv;
        }
        rhs[col] = rhs[col] * inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || sgn(a[r * n + col]) == 0) {
                continue;
            }
            const Rational factor = a[r * n + col];
            for (std::size_t c = 0; c < n; ++c) {
                a[r * n + c] -= factor * a[col * n + c];
            }
            rhs[r] = rhs[r] - rhs[col] * factor;
        }
    }
    K3Vector<V> out;
    out.index = nl.cols();
    out.values = std::move(rhs);
    return out;
}

struct TransferReport {
    bool consistent = false;
    std::optional<ClassLabel> failing;
    std::optional<int> degree; // u-degree of the first disagreement, when located
    std::string reason;
};

/// Recovers the K3 GW and pairs vectors from fibration data and checks the
/// local correspondence label by label:
///   recovered GW u-series == recovered pairs function at q = -e^{iu}.
TransferReport transfer_mnop(const FibreVector<RationalSeries>& fib_gw, const FibreVector<RationalFunction>& fib_pairs,
                             const NlMatrix& nl, int u_order);

/// K3-side vectors over `labels`, built from KKV data:
/// GW entries are connected u-series, pairs entries are multiple-cover functions.
K3Vector<RationalSeries> k3_gw_vector(const std::vector<ClassLabel>& labels, const KkvBpsGrid& grid, int u_order);
K3Vector<RationalFunction> k3_pairs_vector(const std::vector<ClassLabel>& labels, const KkvBpsGrid& grid);

/// Grid bound needed to build K3 vectors over `labels`.
int required_grid_bound(const std::vector<ClassLabel>& labels);

struct SyntheticFibration {
    NlMatrix nl;
    FibreVector<RationalSeries> gw;
    FibreVector<RationalFunction> pairs;
};

/// A consistent fibration: both fibre vectors are `nl` applied to KKV-built K3 data.
SyntheticFibration make_synthetic_fibration(const std::vector<ClassLabel>& labels, const KkvBpsGrid& grid,
                                            NlMatrix nl, int u_order);

std::vector<FibreClass> fibre_classes(std::size_t count);

} // namespace kkv

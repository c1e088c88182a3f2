#include "kkv/nl_correspondence.hpp"

#include <set>

namespace kkv {

std::string to_string(const ClassLabel& l)
{
    return "(m=" + std::to_string(l.m) + ", h=" + std::to_string(l.h) + ")";
}

ClassLabel class_label_of(const HodgeLabel& label) { return ClassLabel{label.d, label.h_of(1)}; }

HodgeLabel hodge_label_of(const ClassLabel& label)
{
    if (label.m < 1) {
        throw DomainError("class label " + to_string(label) + " needs divisibility m >= 1");
    }
    const int m2 = label.m * label.m;
    if ((label.h - 1) % m2 != 0) {
        throw DomainError("class label " + to_string(label) + ": square 2h-2 is not divisible by 2m^2");
    }
    return HodgeLabel{label.m, (label.h - 1) / m2 + 1};
}

namespace {

template <typename T>
void require_unique(const std::vector<T>& v, const char* what)
{
    std::set<T> seen(v.begin(), v.end());
    if (seen.size() != v.size()) {
        throw IndexMismatch(std::string("duplicate ") + what + " in NL matrix");
    }
}

Rational small_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    return make_rational(num(rng), den(rng));
}

} // namespace

NlMatrix::NlMatrix(std::vector<FibreClass> rows, std::vector<ClassLabel> cols, std::vector<Rational> entries)
    : rows_(std::move(rows)), cols_(std::move(cols)), entries_(std::move(entries))
{
    if (entries_.size() != rows_.size() * cols_.size()) {
        throw IndexMismatch("NL matrix entry count does not match rows x cols");
    }
    require_unique(rows_, "fibre class");
    require_unique(cols_, "class label");
}

NlMatrix NlMatrix::zero(std::vector<FibreClass> rows, std::vector<ClassLabel> cols)
{
    std::vector<Rational> e(rows.size() * cols.size(), Rational(0));
    return NlMatrix(std::move(rows), std::move(cols), std::move(e));
}

NlMatrix NlMatrix::identity(std::vector<FibreClass> rows, std::vector<ClassLabel> cols)
{
    if (rows.size() != cols.size()) {
        throw IndexMismatch("identity NL matrix must be square");
    }
    std::vector<Rational> e(rows.size() * cols.size(), Rational(0));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        e[i * cols.size() + i] = 1;
    }
    return NlMatrix(std::move(rows), std::move(cols), std::move(e));
}

NlMatrix NlMatrix::random_unit_triangular(std::vector<FibreClass> rows, std::vector<ClassLabel> cols,
                                          std::mt19937_64& rng)
{
    if (rows.size() != cols.size()) {
        throw IndexMismatch("triangular NL matrix must be square");
    }
    const std::size_t n = rows.size();
    std::vector<Rational> e(n * n, Rational(0));
    for (std::size_t r = 0; r < n; ++r) {
        e[r * n + r] = 1;
        for (std::size_t c = r + 1; c < n; ++c) {
            e[r * n + c] = small_rational(rng);
        }
    }
    return NlMatrix(std::move(rows), std::move(cols), std::move(e));
}

NlMatrix NlMatrix::random_invertible(std::vector<FibreClass> rows, std::vector<ClassLabel> cols,
                                     std::mt19937_64& rng)
{
    if (rows.size() != cols.size()) {
        throw IndexMismatch("invertible NL matrix must be square");
    }
    const std::size_t n = rows.size();
    while (true) {
        std::vector<Rational> e;
        e.reserve(n * n);
        for (std::size_t i = 0; i < n * n; ++i) {
            e.push_back(small_rational(rng));
        }
        NlMatrix m(rows, cols, std::move(e));
        if (m.rank() == n) {
            return m;
        }
    }
}

std::size_t NlMatrix::rank() const
{
    const std::size_t nr = rows_.size();
    const std::size_t nc = cols_.size();
    std::vector<Rational> a = entries_;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nc && rank < nr; ++col) {
        std::size_t pivot = rank;
        while (pivot < nr && sgn(a[pivot * nc + col]) == 0) {
            ++pivot;
        }
        if (pivot == nr) {
            continue;
        }
        for (std::size_t c = 0; c < nc; ++c) {
            std::swap(a[pivot * nc + c], a[rank * nc + c]);
        }
        for (std::size_t r = rank + 1; r < nr; ++r) {
            if (sgn(a[r * nc + col]) == 0) {
                continue;
            }
            const Rational factor = a[r * nc + col] / a[rank * nc + col];
            for (std::size_t c = col; c < nc; ++c) {
                a[r * nc + c] -= factor * a[rank * nc + c];
            }
        }
        ++rank;
    }
    return rank;
}

TransferReport transfer_mnop(const FibreVector<RationalSeries>& fib_gw, const FibreVector<RationalFunction>& fib_pairs,
                             const NlMatrix& nl, int u_order)
{
    const K3Vector<RationalSeries> gw = invert_correspondence(fib_gw, nl);
    const K3Vector<RationalFunction> pairs = invert_correspondence(fib_pairs, nl);
    for (std::size_t i = 0; i < gw.index.size(); ++i) {
        const ClassLabel& label = gw.index[i];
        const RationalSeries& lhs = gw.values[i];
        if (lhs.order() < u_order) {
            throw TruncationError("GW series for " + to_string(label) + " is only known to u^" +
                                  std::to_string(lhs.order()));
        }
        RationalSeries rhs = RationalSeries::zero(Variable::u, u_order);
        try {
            rhs = substitute_q_minus_exp(pairs.at(label), u_order);
        } catch (const NonRealSubstitution& e) {
            // An asymmetric pairs function cannot match any real GW series.
            return TransferReport{false, label, e.degree(), e.what()};
        }
        if (auto k = first_mismatch(lhs.truncated(u_order), rhs)) {
            return TransferReport{false, label, *k, "GW and pairs series differ at u^" + std::to_string(*k)};
        }
    }
    return TransferReport{true, std::nullopt, std::nullopt, "all labels agree"};
}

int required_grid_bound(const std::vector<ClassLabel>& labels)
{
    int out = 0;
    for (const auto& l : labels) {
        out = std::max(out, hodge_label_of(l).required_grid_bound());
    }
    return out;
}

K3Vector<RationalSeries> k3_gw_vector(const std::vector<ClassLabel>& labels, const KkvBpsGrid& grid, int u_order)
{
    K3Vector<RationalSeries> out;
    out.index = labels;
    for (const auto& l : labels) {
        out.values.push_back(gw_connected_series(hodge_label_of(l), grid, u_order));
    }
    return out;
}

K3Vector<RationalFunction> k3_pairs_vector(const std::vector<ClassLabel>& labels, const KkvBpsGrid& grid)
{
    K3Vector<RationalFunction> out;
    out.index = labels;
    for (const auto& l : labels) {
        out.values.push_back(multiple_cover(hodge_label_of(l), grid));
    }
    return out;
}

SyntheticFibration make_synthetic_fibration(const std::vector<ClassLabel>& labels, const KkvBpsGrid& grid,
                                            NlMatrix nl, int u_order)
{
    auto gw = combine(k3_gw_vector(labels, grid, u_order), nl);
    auto pairs = combine(k3_pairs_vector(labels, grid), nl);
    return SyntheticFibration{std::move(nl), std::move(gw), std::move(pairs)};
}

std::vector<FibreClass> fibre_classes(std::size_t count)
{
    std::vector<FibreClass> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(FibreClass{"beta" + std::to_string(i + 1)});
    }
    return out;
}

} // namespace kkv

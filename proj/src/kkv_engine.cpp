#include "kkv/kkv_engine.hpp"

#include "kkv/errors.hpp"

#include <string>

namespace kkv {

namespace {

// Coefficient of q^j stored as a dense integer vector over z^-j .. z^j.
class ZGrid {
public:
    explicit ZGrid(int q_order) : q_order_(q_order), rows_(static_cast<std::size_t>(q_order) + 1)
    {
        for (int j = 0; j <= q_order; ++j) {
            rows_[static_cast<std::size_t>(j)].assign(static_cast<std::size_t>(2 * j + 1), Integer(0));
        }
        rows_[0][0] = 1;
    }

    // Multiply by 1 / (1 - z^s q^n) with s in {-1, 0, 1}. Processing j upwards
    // makes f_j += z^s f_{j-n} use the already-updated f_{j-n}, which is the
    // full geometric series.
    void divide_by_one_minus(int s, int n)
    {
        for (int j = n; j <= q_order_; ++j) {
            const auto& src = rows_[static_cast<std::size_t>(j - n)];
            auto& dst = rows_[static_cast<std::size_t>(j)];
            const int src_low = -(j - n);
            for (std::size_t i = 0; i < src.size(); ++i) {
                if (sgn(src[i]) == 0) {
                    continue;
                }
                const int deg = src_low + static_cast<int>(i) + s;
                dst[static_cast<std::size_t>(deg + j)] += src[i];
            }
        }
    }

    LaurentPolynomial row(int j) const
    {
        const auto& r = rows_[static_cast<std::size_t>(j)];
        std::vector<Rational> coeffs(r.begin(), r.end());
        return LaurentPolynomial(-j, std::move(coeffs));
    }

private:
    int q_order_;
    std::vector<std::vector<Integer>> rows_;
};

} // namespace

KkvSeries kkv_product(int q_order)
{
    if (q_order < 0) {
        throw DomainError("kkv_product needs q_order >= 0");
    }
    // Factor n only contributes from q^n on, so n <= q_order is exact.
    ZGrid grid(q_order);
    for (int n = 1; n <= q_order; ++n) {
        for (int rep = 0; rep < 20; ++rep) {
            grid.divide_by_one_minus(0, n);
        }
        for (int rep = 0; rep < 2; ++rep) {
            grid.divide_by_one_minus(1, n);
            grid.divide_by_one_minus(-1, n);
        }
    }
    std::vector<SymLaurentPoly> coeffs;
    coeffs.reserve(static_cast<std::size_t>(q_order) + 1);
    for (int h = 0; h <= q_order; ++h) {
        LaurentPolynomial p = grid.row(h);
        if (!p.is_zero() && (p.high_degree() > h || p.low_degree() < -h)) {
            throw DomainError("internal error: z-degree of q^" + std::to_string(h) + " coefficient exceeds " +
                              std::to_string(h));
        }
        coeffs.emplace_back(std::move(p)); // validates z <-> 1/z symmetry
    }
    return KkvSeries(Variable::q, 0, std::move(coeffs));
}

std::vector<Rational> lambda_decompose(const SymLaurentPoly& p)
{
    const int top = p.degree();
    if (top < 0) {
        return {};
    }
    std::vector<Rational> c(static_cast<std::size_t>(top) + 1, Rational(0));
    LaurentPolynomial residual = p.polynomial();
    // lambda^g has z-degree g with leading coefficient 1.
    for (int g = top; g >= 0; --g) {
        const Rational lead = residual.coefficient(g);
        if (sgn(lead) == 0) {
            continue;
        }
        c[static_cast<std::size_t>(g)] = lead;
        residual -= SymLaurentPoly::lambda_power(g).polynomial() * lead;
    }
    if (!residual.is_zero()) {
        throw DomainError("internal error: lambda decomposition left a residual");
    }
    return c;
}

std::vector<Rational> lambda_decompose(const LaurentPolynomial& p) { return lambda_decompose(SymLaurentPoly(p)); }

SymLaurentPoly lambda_recompose(const std::vector<Rational>& coeffs)
{
    SymLaurentPoly out;
    for (std::size_t g = 0; g < coeffs.size(); ++g) {
        out += SymLaurentPoly::lambda_power(static_cast<int>(g)) * coeffs[g];
    }
    return out;
}

KkvBpsGrid::KkvBpsGrid(int bound, std::vector<std::vector<Integer>> by_h) : bound_(bound), by_h_(std::move(by_h))
{
    if (bound < 0 || by_h_.size() != static_cast<std::size_t>(bound) + 1) {
        throw DomainError("KKV grid shape does not match its bound");
    }
    for (int h = 0; h <= bound; ++h) {
        by_h_[static_cast<std::size_t>(h)].resize(static_cast<std::size_t>(h) + 1, Integer(0));
    }
}

Integer KkvBpsGrid::at(int genus, int h) const
{
    if (genus < 0) {
        throw DomainError("negative genus");
    }
    if (h > bound_) {
        throw TruncationError("KKV grid computed to h = " + std::to_string(bound_) + ", column " +
                              std::to_string(h) + " requested");
    }
    if (h < 0 || genus > h) {
        return Integer(0);
    }
    return by_h_[static_cast<std::size_t>(h)][static_cast<std::size_t>(genus)];
}

const std::vector<Integer>& KkvBpsGrid::column(int h) const
{
    if (h < 0 || h > bound_) {
        throw TruncationError("KKV grid column " + std::to_string(h) + " outside 0.." + std::to_string(bound_));
    }
    return by_h_[static_cast<std::size_t>(h)];
}

KkvBpsGrid bps_grid_from_kkv(int h_max)
{
    const KkvSeries product = kkv_product(h_max);
    std::vector<std::vector<Integer>> by_h;
    by_h.reserve(static_cast<std::size_t>(h_max) + 1);
    for (int h = 0; h <= h_max; ++h) {
        const std::vector<Rational> c = lambda_decompose(product.coefficient(h));
        std::vector<Integer> column(static_cast<std::size_t>(h) + 1, Integer(0));
        for (std::size_t g = 0; g < c.size(); ++g) {
            if (!is_integral(c[g])) {
                throw DomainError("internal error: non-integral lambda coefficient at g=" + std::to_string(g) +
                                  ", h=" + std::to_string(h));
            }
            // The generating function carries (-1)^g in front of n_{g,h}.
            column[g] = (g % 2 == 0) ? c[g].get_num() : Integer(-c[g].get_num());
        }
        by_h.push_back(std::move(column));
    }
    return KkvBpsGrid(h_max, std::move(by_h));
}

RationalSeries yau_zaslow_series(int h_max)
{
    if (h_max < 0) {
        throw DomainError("yau_zaslow_series needs h_max >= 0");
    }
    // Logarithmic derivative: m a_m = 24 sum_{k=1}^m sigma(k) a_{m-k}.
    std::vector<Integer> sigma(static_cast<std::size_t>(h_max) + 1, Integer(0));
    for (int d = 1; d <= h_max; ++d) {
        for (int m = d; m <= h_max; m += d) {
            sigma[static_cast<std::size_t>(m)] += d;
        }
    }
    std::vector<Integer> a{Integer(1)};
    for (int m = 1; m <= h_max; ++m) {
        Integer acc(0);
        for (int k = 1; k <= m; ++k) {
            acc += sigma[static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(m - k)];
        }
        acc *= 24;
        if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(m))) {
            throw DomainError("internal error: Yau-Zaslow recursion lost integrality");
        }
        a.push_back(Integer(acc / m));
    }
    return RationalSeries(Variable::q, 0, std::vector<Rational>(a.begin(), a.end()));
}

} // namespace kkv

#include "kkv/nl_correspondence.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace kkv;

namespace {

const std::vector<ClassLabel> kLabels = {{1, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 5}};

const KkvBpsGrid& grid()
{
    static const KkvBpsGrid g = bps_grid_from_kkv(required_grid_bound(kLabels));
    return g;
}

} // namespace

TEST_CASE("label conversions")
{
    CHECK(class_label_of(HodgeLabel{2, 2}) == ClassLabel{2, 5});
    CHECK(hodge_label_of(ClassLabel{2, 5}) == HodgeLabel{2, 2});
    CHECK(hodge_label_of(ClassLabel{1, 7}) == HodgeLabel{1, 7});
    CHECK(hodge_label_of(ClassLabel{3, -8}) == HodgeLabel{3, 0});
    CHECK_THROWS_AS(hodge_label_of(ClassLabel{2, 2}), DomainError);
    CHECK_THROWS_AS(hodge_label_of(ClassLabel{0, 1}), DomainError);
    CHECK(required_grid_bound(kLabels) == 5);
}

TEST_CASE("NL matrices validate their shape")
{
    const auto rows = fibre_classes(2);
    CHECK(rows[1].name == "beta2");
    CHECK_THROWS_AS(NlMatrix(rows, {{1, 0}, {1, 1}}, {Rational(1)}), IndexMismatch);
    CHECK_THROWS_AS(NlMatrix(rows, {{1, 0}, {1, 0}}, std::vector<Rational>(4, Rational(1))), IndexMismatch);
    CHECK_THROWS_AS(NlMatrix::identity(fibre_classes(3), {{1, 0}}), IndexMismatch);
    CHECK(NlMatrix::identity(rows, {{1, 0}, {1, 1}}).rank() == 2);
    CHECK(NlMatrix::zero(rows, {{1, 0}, {1, 1}}).rank() == 0);
}

TEST_CASE("combine is a matrix-vector product")
{
    const std::vector<ClassLabel> cols = {{1, 0}, {1, 1}};
    const NlMatrix nl(fibre_classes(2), cols, {Rational(1), Rational(2), Rational(0), make_rational(1, 2)});
    const K3Vector<RationalFunction> k3{cols, {RationalFunction(3), RationalFunction::monomial(Rational(1), 1)}};
    const auto fib = combine(k3, nl);
    CHECK(fib.at(FibreClass{"beta1"}) ==
          RationalFunction(3) + RationalFunction::monomial(Rational(2), 1));
    CHECK(fib.at(FibreClass{"beta2"}) == RationalFunction::monomial(make_rational(1, 2), 1));
    CHECK(invert_correspondence(fib, nl) == k3);
    CHECK_THROWS_AS(fib.at(FibreClass{"beta9"}), IndexMismatch);
}

TEST_CASE("combine needs every label")
{
    const std::vector<ClassLabel> cols = {{1, 0}, {1, 1}};
    const NlMatrix nl = NlMatrix::identity(fibre_classes(2), cols);
    const K3Vector<RationalFunction> partial{{{1, 0}}, {RationalFunction(1)}};
    CHECK_THROWS_AS(combine(partial, nl), IndexMismatch);
}

TEST_CASE("singular matrices are reported with their rank")
{
    const std::vector<ClassLabel> cols = {{1, 0}, {1, 1}};
    const NlMatrix nl(fibre_classes(2), cols, {Rational(1), Rational(2), Rational(2), Rational(4)});
    const FibreVector<RationalFunction> fib{fibre_classes(2), {RationalFunction(1), RationalFunction(2)}};
    CHECK_THROWS_AS(invert_correspondence(fib, nl), SingularMatrix);
    try {
        invert_correspondence(fib, nl);
    } catch (const SingularMatrix& e) {
        CHECK(e.rank() == 1);
        CHECK(e.size() == 2);
    }
}

TEST_CASE("transfer on a consistent synthetic fibration")
{
    std::mt19937_64 rng(7);
    for (const bool triangular : {true, false}) {
        NlMatrix nl = triangular ? NlMatrix::random_unit_triangular(fibre_classes(5), kLabels, rng)
                                 : NlMatrix::random_invertible(fibre_classes(5), kLabels, rng);
        const SyntheticFibration fib = make_synthetic_fibration(kLabels, grid(), nl, 12);
        const TransferReport report = transfer_mnop(fib.gw, fib.pairs, fib.nl, 12);
        CHECK(report.consistent);
        CHECK_FALSE(report.failing);
    }
}

TEST_CASE("transfer locates a corrupted GW entry")
{
    const NlMatrix nl = NlMatrix::identity(fibre_classes(5), kLabels);
    SyntheticFibration fib = make_synthetic_fibration(kLabels, grid(), nl, 12);
    fib.gw.values[3] += RationalSeries::monomial(Variable::u, Rational(1), 4, 12);
    const TransferReport report = transfer_mnop(fib.gw, fib.pairs, fib.nl, 12);
    CHECK_FALSE(report.consistent);
    REQUIRE(report.failing);
    CHECK(*report.failing == kLabels[3]);
    CHECK(report.degree == 4);
}

TEST_CASE("transfer reports an asymmetric pairs entry as a failure")
{
    const NlMatrix nl = NlMatrix::identity(fibre_classes(5), kLabels);
    SyntheticFibration fib = make_synthetic_fibration(kLabels, grid(), nl, 12);
    fib.pairs.values[1] += RationalFunction::monomial(Rational(1), 1);
    const TransferReport report = transfer_mnop(fib.gw, fib.pairs, fib.nl, 12);
    CHECK_FALSE(report.consistent);
    CHECK(report.failing == kLabels[1]);
}

TEST_CASE("transfer refuses GW data that is too short")
{
    const NlMatrix nl = NlMatrix::identity(fibre_classes(5), kLabels);
    const SyntheticFibration fib = make_synthetic_fibration(kLabels, grid(), nl, 6);
    CHECK_THROWS_AS(transfer_mnop(fib.gw, fib.pairs, fib.nl, 12), TruncationError);
}

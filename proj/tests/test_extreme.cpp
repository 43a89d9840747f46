#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"
#include "wedgecert/extreme.hpp"

using namespace wedgecert;
using namespace wedgecert::testutil;

TEST_CASE("enumeration order and counts") {
    const auto pts = enumerate_extreme_points(2);
    REQUIRE(pts.size() == 6);
    CHECK(pts[0] == ExtremePoint::plus_unit(1, 2));
    CHECK(pts[1] == ExtremePoint::minus_unit(1, 2));
    CHECK(pts[2] == ExtremePoint::plus_unit(2, 2));
    CHECK(pts[3] == ExtremePoint::minus_unit(2, 2));
    CHECK(pts[4] == ExtremePoint::difference(1, 2, 2));
    CHECK(pts[5] == ExtremePoint::difference(2, 1, 2));

    CHECK(enumerate_extreme_points(3).size() == 12);
    for (int n = 2; n <= 6; ++n)
        CHECK(enumerate_extreme_points(n).size() ==
              static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) + 1));
    CHECK_THROWS_AS(enumerate_extreme_points(1), DomainError);
}

TEST_CASE("every enumerated point is on the unit sphere of the norm") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& p : enumerate_extreme_points(n))
            CHECK(schinzel_norm(embed(p)) == Rational(1));
}

TEST_CASE("embedding") {
    CHECK(embed(ExtremePoint::plus_unit(2, 3)) == vec({0, 1, 0}));
    CHECK(embed(ExtremePoint::difference(1, 3, 3)) == vec({1, 0, -1}));
    CHECK(embed(ExtremePoint::minus_unit(1, 2)) == vec({-1, 0}));
}

TEST_CASE("rendering and parsing") {
    CHECK(ExtremePoint::plus_unit(3, 5).str() == "+e3");
    CHECK(ExtremePoint::minus_unit(1, 5).str() == "-e1");
    CHECK(ExtremePoint::difference(2, 5, 5).str() == "e2-e5");
    for (const auto& p : enumerate_extreme_points(5)) {
        auto q = parse_extreme_point(p.str(), 5);
        REQUIRE(q);
        CHECK(*q == p);
    }
    CHECK(!parse_extreme_point("e7", 5));
    CHECK(!parse_extreme_point("+e9", 5));
}

TEST_CASE("restriction") {
    const auto d13 = ExtremePoint::difference(1, 3, 4);
    auto r = restrict_point(d13, SubsetIndex({1, 3}));
    REQUIRE(r);
    CHECK(*r == ExtremePoint::difference(1, 2, 2));

    CHECK(!restrict_point(d13, SubsetIndex({2, 4})));

    r = restrict_point(d13, SubsetIndex({1, 2}));
    REQUIRE(r);
    CHECK(*r == ExtremePoint::plus_unit(1, 2));

    r = restrict_point(d13, SubsetIndex({2, 3}));
    REQUIRE(r);
    CHECK(*r == ExtremePoint::minus_unit(2, 2));
}

TEST_CASE("restriction commutes with embedding") {
    Rng rng(21);
    for (int t = 0; t < 100; ++t) {
        const int n = static_cast<int>(rng.integer(2, 6));
        const auto pts = enumerate_extreme_points(n);
        const auto& p = pts[static_cast<std::size_t>(
            rng.integer(0, static_cast<long>(pts.size()) - 1))];
        std::vector<int> members;
        for (int k = 1; k <= n; ++k)
            if (rng.integer(0, 1))
                members.push_back(k);
        if (members.empty())
            continue;
        const SubsetIndex idx(members);
        const RationalVector full = embed(p);
        std::vector<Rational> selected;
        for (int member : idx.members())
            selected.push_back(full[static_cast<std::size_t>(member) - 1]);
        const RationalVector expect(selected);
        const auto r = restrict_point(p, idx);
        if (r)
            CHECK(embed(*r) == expect);
        else
            CHECK(expect.is_zero());
    }
}

TEST_CASE("exposing functionals certify the extreme points") {
    // phi_m(x) = (sum x + x_m)/2 attains 1 exactly at +e_m among the
    // enumerated points; psi_{mn}(x) = (x_m - x_n)/2 exactly at e_m - e_n.
    for (int n = 2; n <= 5; ++n) {
        const auto pts = enumerate_extreme_points(n);
        for (int m = 1; m <= n; ++m) {
            const auto target = ExtremePoint::plus_unit(m, n);
            for (const auto& p : pts) {
                const RationalVector x = embed(p);
                Rational sum(0);
                for (std::size_t i = 0; i < x.dim(); ++i)
                    sum += x[i];
                const Rational phi = (sum + x[static_cast<std::size_t>(m) - 1]) / 2;
                if (p == target)
                    CHECK(phi == Rational(1));
                else
                    CHECK(phi < Rational(1));
            }
        }
        for (int m = 1; m <= n; ++m)
            for (int k = 1; k <= n; ++k) {
                if (m == k)
                    continue;
                const auto target = ExtremePoint::difference(m, k, n);
                for (const auto& p : pts) {
                    const RationalVector x = embed(p);
                    const Rational psi = (x[static_cast<std::size_t>(m) - 1] -
                                          x[static_cast<std::size_t>(k) - 1]) /
                                         2;
                    if (p == target)
                        CHECK(psi == Rational(1));
                    else
                        CHECK(psi < Rational(1));
                }
            }
    }
}

TEST_CASE("convex decomposition of the worked boundary points") {
    const auto comb = convex_decompose(RationalVector(
        {make_rational(1, 2), make_rational(1, 2), Rational(-1)}));
    REQUIRE(comb.terms.size() == 2);
    CHECK(comb.terms[0].first == make_rational(1, 2));
    CHECK(comb.terms[0].second == ExtremePoint::difference(1, 3, 3));
    CHECK(comb.terms[1].first == make_rational(1, 2));
    CHECK(comb.terms[1].second == ExtremePoint::difference(2, 3, 3));

    const auto unit = convex_decompose(vec({1, 0, 0}));
    REQUIRE(unit.terms.size() == 1);
    CHECK(unit.terms[0].first == Rational(1));
    CHECK(unit.terms[0].second == ExtremePoint::plus_unit(1, 3));

    const auto half = convex_decompose(
        RationalVector({make_rational(1, 2), make_rational(-1, 2), make_rational(1, 2),
                        make_rational(-1, 2)}));
    REQUIRE(half.terms.size() == 4);
    for (const auto& [coeff, point] : half.terms) {
        CHECK(coeff == make_rational(1, 4));
        CHECK(point.kind() == ExtremePoint::Kind::Difference);
    }
    CHECK(half.coefficient_sum() == Rational(1));

    CHECK_THROWS_AS(convex_decompose(vec({2, 0, 0})), PreconditionError);
}

TEST_CASE("convex decomposition round-trips on random boundary points") {
    Rng rng(22);
    for (int n = 2; n <= 5; ++n) {
        int done = 0;
        while (done < 100) {
            RationalVector x = rng.vector(static_cast<std::size_t>(n));
            const Rational norm = schinzel_norm(x);
            if (norm == 0)
                continue;
            for (std::size_t i = 0; i < x.dim(); ++i)
                x[i] /= norm;
            const auto comb = convex_decompose(x);
            CHECK(comb.coefficient_sum() == Rational(1));
            CHECK(comb.reconstruct(n) == x);
            for (const auto& [coeff, point] : comb.terms)
                CHECK(coeff > Rational(0));
            ++done;
        }
    }
}

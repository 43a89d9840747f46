#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "testutil.hpp"
#include "wedgecert/linalg.hpp"
#include "wedgecert/matrix_io.hpp"

using namespace wedgecert;
using namespace wedgecert::testutil;

TEST_CASE("determinant basics") {
    CHECK(det_exact(RationalMatrix::from_rows({{Rational(5)}})) == Rational(5));
    CHECK(det_exact(RationalMatrix::from_rows({{Rational(1), Rational(0)},
                                               {Rational(-1), Rational(-1)}})) ==
          Rational(-1));
    // repeated column
    const RationalMatrix m = cols({vec({1, 2, 3}), vec({1, 2, 3}), vec({0, 1, 0})});
    CHECK(det_exact(m) == Rational(0));
    CHECK_THROWS_AS(det_exact(cols({vec({1, 2})})), DimensionError);
}

TEST_CASE("determinant agrees with cofactor expansion on random 4x4") {
    Rng rng(11);
    auto cofactor_det = [](const auto& self, const RationalMatrix& m) -> Rational {
        const std::size_t n = m.rows();
        if (n == 1)
            return m.at(0, 0);
        Rational acc(0);
        int sign = 1;
        for (std::size_t r = 0; r < n; ++r) {
            RationalMatrix sub(n - 1, n - 1);
            for (std::size_t i = 0, ii = 0; i < n; ++i) {
                if (i == r)
                    continue;
                for (std::size_t j = 1; j < n; ++j)
                    sub.at(ii, j - 1) = m.at(i, j);
                ++ii;
            }
            acc += Rational(sign) * m.at(r, 0) * self(self, sub);
            sign = -sign;
        }
        return acc;
    };
    for (int t = 0; t < 25; ++t) {
        const RationalMatrix m = rng.matrix(4, 4, 5, 4);
        CHECK(det_exact(m) == cofactor_det(cofactor_det, m));
    }
}

TEST_CASE("wedge coordinates of identity columns") {
    const WedgeCoordinates w = wedge_coordinates(cols({vec({1, 0, 0}), vec({0, 1, 0})}));
    CHECK(w.coords.size() == 3);
    CHECK(w.at(SubsetIndex({1, 2})) == Rational(1));
    CHECK(w.at(SubsetIndex({1, 3})) == Rational(0));
    CHECK(w.at(SubsetIndex({2, 3})) == Rational(0));
    CHECK(w.l1 == Rational(1));
}

TEST_CASE("wedge coordinates of the orthogonal pair construction") {
    const WedgeCoordinates w =
        wedge_coordinates(cols({vec({1, -1, 0, 0}), vec({0, 0, 1, -1})}));
    CHECK(w.l1 == Rational(4));
}

TEST_CASE("wedge coordinates: three hand minors") {
    const WedgeCoordinates w = wedge_coordinates(cols({vec({1, 0, -1}), vec({0, 1, -1})}));
    CHECK(w.at(SubsetIndex({1, 2})) == Rational(1));
    CHECK(w.at(SubsetIndex({1, 3})) == Rational(-1));
    CHECK(w.at(SubsetIndex({2, 3})) == Rational(1));
    CHECK(w.l1 == Rational(3));
    CHECK_THROWS_AS(wedge_coordinates(cols({vec({1, 0}), vec({0, 1}), vec({1, 1})})),
                    DimensionError);
}

TEST_CASE("wedge norm vanishes on repeated and zero columns") {
    Rng rng(12);
    for (int t = 0; t < 20; ++t) {
        const RationalVector a = rng.vector(4);
        const RationalVector z = vec({0, 0, 0, 0});
        CHECK(wedge_coordinates(cols({a, a})).l1 == Rational(0));
        CHECK(wedge_coordinates(cols({a, z})).l1 == Rational(0));
    }
}

TEST_CASE("wedge norm is multilinear and antisymmetric") {
    Rng rng(13);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.integer(2, 5));
        const std::size_t l = static_cast<std::size_t>(rng.integer(2, static_cast<long>(n)));
        const RationalMatrix m = rng.matrix(n, l, 5, 4);
        const Rational c = rng.rational(5, 4);
        const std::size_t j = static_cast<std::size_t>(rng.integer(0, static_cast<long>(l) - 1));

        RationalMatrix scaled = m;
        for (std::size_t i = 0; i < n; ++i)
            scaled.at(i, j) = c * m.at(i, j);
        const WedgeCoordinates base = wedge_coordinates(m);
        const WedgeCoordinates after = wedge_coordinates(scaled);
        CHECK(after.l1 == rat_abs(c) * base.l1);
        for (std::size_t k = 0; k < base.coords.size(); ++k)
            CHECK(after.coords[k].second == c * base.coords[k].second);

        std::size_t a = static_cast<std::size_t>(rng.integer(0, static_cast<long>(l) - 1));
        std::size_t b = static_cast<std::size_t>(rng.integer(0, static_cast<long>(l) - 1));
        if (a == b)
            continue;
        RationalMatrix swapped = m;
        for (std::size_t i = 0; i < n; ++i) {
            swapped.at(i, a) = m.at(i, b);
            swapped.at(i, b) = m.at(i, a);
        }
        const WedgeCoordinates sw = wedge_coordinates(swapped);
        CHECK(sw.l1 == base.l1);
        for (std::size_t k = 0; k < base.coords.size(); ++k)
            CHECK(sw.coords[k].second == -base.coords[k].second);
    }
}

TEST_CASE("schinzel norm values") {
    CHECK(schinzel_norm(vec({1, 2, -1})) == Rational(3));
    CHECK(schinzel_norm(vec({0, 0, 0})) == Rational(0));
    CHECK(schinzel_norm(vec({0, 1, 0})) == Rational(1));
    CHECK(schinzel_norm(vec({1, 0, -1})) == Rational(1));
    CHECK(schinzel_norm(vec({-1, 0, 0})) == Rational(1));
}

TEST_CASE("schinzel norm is a norm") {
    Rng rng(14);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.integer(1, 6));
        const RationalVector x = rng.vector(n);
        const RationalVector y = rng.vector(n);
        const Rational c = rng.rational();

        CHECK((schinzel_norm(x) == 0) == x.is_zero());

        std::vector<Rational> cx(n), xy(n);
        for (std::size_t i = 0; i < n; ++i) {
            cx[i] = c * x[i];
            xy[i] = x[i] + y[i];
        }
        CHECK(schinzel_norm(RationalVector(cx)) == rat_abs(c) * schinzel_norm(x));
        CHECK(schinzel_norm(RationalVector(xy)) <= schinzel_norm(x) + schinzel_norm(y));
    }
}

TEST_CASE("schinzel norm is half the l1 norm on the diagonal subspace") {
    Rng rng(15);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.integer(2, 6));
        const RationalVector x = rng.diagonal_vector(n);
        CHECK(schinzel_norm(x) * 2 == l1_norm(x));
    }
}

TEST_CASE("vector norms and gram") {
    CHECK(l1_norm(vec({1, -1, 0})) == Rational(2));
    CHECK(linf_norm(RationalVector({make_rational(1, 2), Rational(-3), Rational(2)})) ==
          Rational(3));
    const RationalMatrix g = gram(cols({vec({1, -1, 0, 0}), vec({0, 0, 1, -1})}));
    CHECK(g.at(0, 0) == Rational(2));
    CHECK(g.at(0, 1) == Rational(0));
    CHECK(g.at(1, 0) == Rational(0));
    CHECK(g.at(1, 1) == Rational(2));
}

TEST_CASE("Cauchy-Binet identity") {
    const CauchyBinetCheck id = cauchy_binet_check(cols({vec({1, 0, 0}), vec({0, 1, 0})}));
    CHECK(id.lhs == Rational(1));
    CHECK(id.rhs == Rational(1));
    CHECK(id.equal);

    const CauchyBinetCheck pair =
        cauchy_binet_check(cols({vec({1, -1, 0, 0}), vec({0, 0, 1, -1})}));
    CHECK(pair.lhs == Rational(4));
    CHECK(pair.equal);

    const CauchyBinetCheck tri = cauchy_binet_check(cols({vec({1, 0, -1}), vec({0, 1, -1})}));
    CHECK(tri.lhs == Rational(3));
    CHECK(tri.rhs == Rational(3));
    CHECK(tri.equal);
}

TEST_CASE("Cauchy-Binet holds on 200 random integer matrices") {
    Rng rng(16);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.integer(1, 6));
        const std::size_t l = static_cast<std::size_t>(rng.integer(1, static_cast<long>(n)));
        CHECK(cauchy_binet_check(rng.integer_matrix(n, l, -4, 4)).equal);
    }
}

TEST_CASE("matrix text format round-trips exactly") {
    Rng rng(17);
    for (int t = 0; t < 25; ++t) {
        const RationalMatrix m = rng.matrix(static_cast<std::size_t>(rng.integer(1, 5)),
                                            static_cast<std::size_t>(rng.integer(1, 5)), 40, 12);
        std::istringstream in(matrix_str(m));
        CHECK(read_matrix(in) == m);
    }
}

TEST_CASE("matrix parser reports the offending line") {
    std::istringstream bad("1 2\n# comment\n3 x\n");
    try {
        read_matrix(bad);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    std::istringstream ragged("1 2\n3\n");
    CHECK_THROWS_AS(read_matrix(ragged), ParseError);
    std::istringstream zero_den("1/0\n");
    CHECK_THROWS_AS(read_matrix(zero_den), ParseError);
    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(read_matrix(empty), ParseError);
}

TEST_CASE("rank") {
    CHECK(rank_exact(cols({vec({1, 0, -1}), vec({0, 1, -1})})) == 2);
    CHECK(rank_exact(cols({vec({1, 2}), vec({2, 4})})) == 1);
}

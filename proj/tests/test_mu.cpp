#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "testutil.hpp"
#include "wedgecert/mu.hpp"

using namespace wedgecert;
using namespace wedgecert::testutil;

namespace {

Rational wedge_of(const std::vector<ExtremePoint>& pts) {
    std::vector<RationalVector> cols;
    for (const auto& p : pts)
        cols.push_back(embed(p));
    return wedge_coordinates(RationalMatrix::from_columns(cols)).l1;
}

} // namespace

TEST_CASE("small exact values with witnesses") {
    const MuResult m12 = mu_exact(1, 2);
    CHECK(m12.value == 2);
    REQUIRE(m12.witness.size() == 1);
    CHECK(m12.witness[0] == ExtremePoint::difference(1, 2, 2));

    const MuResult m23 = mu_exact(2, 3);
    CHECK(m23.value == 3);
    CHECK(wedge_of(m23.witness) == Rational(3));

    const MuResult m33 = mu_exact(3, 3);
    CHECK(m33.value == 1);

    const MuResult m35 = mu_exact(3, 5);
    CHECK(m35.value == 6);
    CHECK(Rational(m35.value) <= *m35.bound_ratio);

    CHECK_THROWS_AS(mu_exact(3, 2), DomainError);
    CHECK_THROWS_AS(mu_exact(0, 2), DomainError);
}

TEST_CASE("budget is enforced with the tuple count in the message") {
    MuOptions opts;
    opts.budget = Integer(10);
    try {
        mu_exact(2, 4, opts);
        FAIL("expected a resource error");
    } catch (const ResourceError& e) {
        CHECK(std::string(e.what()).find("tuples") != std::string::npos);
    }
}

TEST_CASE("parallel search is bit-identical to serial") {
    for (int workers : {2, 3, 5}) {
        MuOptions opts;
        opts.workers = workers;
        for (auto [l, n] : {std::pair{2, 4}, std::pair{3, 4}, std::pair{2, 5}}) {
            const MuResult serial = mu_exact(l, n);
            const MuResult parallel = mu_exact(l, n, opts);
            CHECK(serial.value == parallel.value);
            REQUIRE(serial.witness.size() == parallel.witness.size());
            for (std::size_t i = 0; i < serial.witness.size(); ++i)
                CHECK(serial.witness[i] == parallel.witness[i]);
        }
    }
}

TEST_CASE("mu table invariants for L <= N <= 5") {
    for (int n = 2; n <= 5; ++n)
        for (int l = 1; l <= n; ++l) {
            const MuResult res = mu_exact(l, n);
            CHECK(res.value <= res.binom_bound);
            CHECK(wedge_of(res.witness) == Rational(res.value));
            if (l == n || l == n - 1)
                CHECK(res.value == res.binom_bound);
            if (l < n) {
                CHECK(res.value <= res.bound_2l);
                if (2 * l <= n)
                    CHECK(res.value == res.bound_2l);
                else
                    CHECK(Rational(res.value) <= *res.bound_ratio);
            }
        }
}

TEST_CASE("bound constant") {
    for (int r = 1; r <= 6; ++r)
        CHECK(c_bound(r, r) == Rational(r + 1));
    CHECK(c_bound(1, 3) == Rational(2));
    CHECK(c_bound(3, 4) == make_rational(25, 4));
    CHECK(c_bound(2, 3) == Rational(4));         // 2q = r+1: both regimes give 4
    CHECK(c_bound(2, 5) == Rational(4));         // 2q <= r+1
    CHECK(c_bound(4, 5) == Rational(9)); // ratio regime: (6/2)^2 = 9 < 16
    CHECK_THROWS_AS(c_bound(3, 2), DomainError);
    CHECK_THROWS_AS(c_bound(0, 1), DomainError);
}

TEST_CASE("wedge bound report on worked instances") {
    // identity columns, L = N = 3: equality at constant 1
    std::vector<RationalVector> id = {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})};
    BoundReport rep = verify_wedge_bound(id);
    CHECK(rep.lhs == Rational(1));
    CHECK(rep.rhs == Rational(1));
    CHECK(rep.satisfied);
    CHECK(rep.regime == "determinant");

    // orthogonal construction, L = 2, N = 4: tight at 2^L
    rep = verify_wedge_bound({vec({1, -1, 0, 0}), vec({0, 0, 1, -1})});
    CHECK(rep.lhs == Rational(4));
    CHECK(rep.rhs == Rational(4));
    CHECK(rep.constant_used == Rational(4));
    CHECK(rep.regime == "power");
    CHECK(rep.satisfied);

    CHECK_THROWS_AS(verify_wedge_bound({vec({1, 0}), vec({0, 1}), vec({1, 1})}),
                    DimensionError);
    CHECK_THROWS_AS(verify_wedge_bound({vec({1, 0}), vec({0, 1, 0})}), DimensionError);
}

TEST_CASE("wedge bound holds on 100 seeded matrices") {
    Rng rng(41);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.integer(1, 6));
        const std::size_t l = static_cast<std::size_t>(rng.integer(1, static_cast<long>(n)));
        std::vector<RationalVector> vecs;
        for (std::size_t j = 0; j < l; ++j)
            vecs.push_back(rng.vector(n));
        CHECK(verify_wedge_bound(vecs).satisfied);
    }
}

TEST_CASE("diagonal bound") {
    // q = 1 reduces to equality of l1 norms
    BoundReport rep = verify_diagonal_bound({vec({1, 0, -1})});
    CHECK(rep.lhs == Rational(2));
    CHECK(rep.rhs == Rational(2));
    CHECK(rep.satisfied);

    Rng rng(42);
    for (int t = 0; t < 100; ++t) {
        const int r = static_cast<int>(rng.integer(1, 5));
        const int q = static_cast<int>(rng.integer(1, r));
        std::vector<RationalVector> vecs;
        for (int j = 0; j < q; ++j)
            vecs.push_back(rng.diagonal_vector(static_cast<std::size_t>(r) + 1));
        rep = verify_diagonal_bound(vecs);
        CHECK(rep.satisfied);
        // the weaker product bound from the unit constant
        Rational product(1);
        for (const auto& v : vecs)
            product *= l1_norm(v);
        CHECK(rep.lhs <= product);
    }

    CHECK_THROWS_AS(verify_diagonal_bound({vec({1, 1, -1})}), PreconditionError);
    CHECK_THROWS_AS(
        verify_diagonal_bound({vec({1, -1}), vec({1, -1})}, Rational(0)),
        DomainError); // q = 2 > r = 1
}

TEST_CASE("diagonal bound accepts near-diagonal data within tolerance") {
    const RationalVector off({Rational(1), make_rational(-99, 100)});
    CHECK_THROWS_AS(verify_diagonal_bound({off}), PreconditionError);
    const BoundReport rep = verify_diagonal_bound({off}, make_rational(1, 10));
    CHECK(rep.satisfied);
}

TEST_CASE("orthogonal equality construction") {
    CHECK(wedge_coordinates(equality_construction(2, 4)).l1 == Rational(4));
    const RationalMatrix small = equality_construction(1, 2);
    CHECK(small.at(0, 0) == Rational(1));
    CHECK(small.at(1, 0) == Rational(-1));
    CHECK(wedge_coordinates(equality_construction(3, 6)).l1 == Rational(8));
    CHECK(wedge_coordinates(equality_construction(2, 5)).l1 == Rational(4));
    CHECK_THROWS_AS(equality_construction(3, 5), DomainError);
}

TEST_CASE("mixed-family reduction preserves the wedge norm") {
    const std::vector<ExtremePoint> xi = {ExtremePoint::plus_unit(1, 4),
                                          ExtremePoint::difference(2, 3, 4),
                                          ExtremePoint::difference(3, 4, 4)};
    const auto eta = reduce_mixed(xi);
    REQUIRE(eta.size() == 2);
    CHECK(eta[0] == ExtremePoint::difference(1, 2, 3));
    CHECK(eta[1] == ExtremePoint::difference(2, 3, 3));
    CHECK(wedge_of(xi) == Rational(3));
    CHECK(wedge_of(eta) == Rational(3));

    const std::vector<ExtremePoint> xi2 = {ExtremePoint::plus_unit(1, 3),
                                           ExtremePoint::difference(2, 3, 3)};
    const auto eta2 = reduce_mixed(xi2);
    REQUIRE(eta2.size() == 1);
    CHECK(eta2[0] == ExtremePoint::difference(1, 2, 2));
    CHECK(wedge_of(xi2) == wedge_of(eta2));

    // all units / all differences: no proper mix
    CHECK_THROWS_AS(reduce_mixed({ExtremePoint::plus_unit(1, 3),
                                  ExtremePoint::plus_unit(2, 3)}),
                    PreconditionError);
    // dependent family
    CHECK_THROWS_AS(reduce_mixed({ExtremePoint::plus_unit(1, 3),
                                  ExtremePoint::minus_unit(1, 3),
                                  ExtremePoint::difference(2, 3, 3)}),
                    PreconditionError);
}

TEST_CASE("seeded mixed families reduce norm-exactly") {
    Rng rng(43);
    int done = 0;
    while (done < 100) {
        const int n = static_cast<int>(rng.integer(3, 6));
        const int l = static_cast<int>(rng.integer(2, std::min(n, 4)));
        const int k = static_cast<int>(rng.integer(1, l - 1));
        std::vector<ExtremePoint> pts;
        std::vector<int> used;
        for (int i = 0; i < k; ++i) {
            int mrow;
            do {
                mrow = static_cast<int>(rng.integer(1, n));
            } while (std::find(used.begin(), used.end(), mrow) != used.end());
            used.push_back(mrow);
            pts.push_back(rng.integer(0, 1) ? ExtremePoint::plus_unit(mrow, n)
                                            : ExtremePoint::minus_unit(mrow, n));
        }
        for (int i = k; i < l; ++i) {
            const int a = static_cast<int>(rng.integer(1, n));
            int b;
            do {
                b = static_cast<int>(rng.integer(1, n));
            } while (b == a);
            pts.push_back(ExtremePoint::difference(a, b, n));
        }
        const Rational before = wedge_of(pts);
        if (before == 0)
            continue; // dependent draw; the operation rejects these
        const auto reduced = reduce_mixed(pts);
        CHECK(wedge_of(reduced) == before);
        CHECK(reduced.size() == static_cast<std::size_t>(l - k));
        for (const auto& p : reduced)
            CHECK(p.ambient() == n - k);
        ++done;
    }
}

TEST_CASE("single minors of extreme-point tuples") {
    CHECK(extreme_minor_check({ExtremePoint::plus_unit(1, 3), ExtremePoint::plus_unit(2, 3)},
                              SubsetIndex({1, 2})) == 1);
    CHECK(extreme_minor_check({ExtremePoint::plus_unit(1, 3), ExtremePoint::plus_unit(2, 3)},
                              SubsetIndex({1, 3})) == 0);
    CHECK(extreme_minor_check({ExtremePoint::difference(1, 2, 3),
                               ExtremePoint::difference(2, 3, 3)},
                              SubsetIndex({1, 2})) == 1);
    CHECK_THROWS_AS(extreme_minor_check({ExtremePoint::plus_unit(1, 3)}, SubsetIndex({1, 2})),
                    DimensionError);
}

TEST_CASE("result cache round-trips and tolerates corruption") {
    const auto dir = std::filesystem::temp_directory_path() / "wedgecert_mu_cache_test";
    std::filesystem::remove_all(dir);
    const MuCache cache(dir);
    CHECK(!cache.lookup(2, 3));

    const MuResult res = mu_exact(2, 3);
    cache.store(res, Integer(100000000));
    const auto hit = cache.lookup(2, 3);
    REQUIRE(hit);
    CHECK(hit->value == res.value);
    REQUIRE(hit->witness.size() == res.witness.size());
    for (std::size_t i = 0; i < res.witness.size(); ++i)
        CHECK(hit->witness[i] == res.witness[i]);
    CHECK(!cache.lookup(2, 4));

    const MuResult other = mu_exact(1, 2);
    cache.store(other, Integer(50));
    CHECK(cache.lookup(2, 3));
    CHECK(cache.lookup(1, 2));

    // a tampered value must be rejected, not trusted
    {
        std::ofstream out(cache.file(), std::ios::trunc);
        out << "2 3 7 e1-e2 e1-e3 # budget=1\n";
    }
    CHECK(!cache.lookup(2, 3));
    std::filesystem::remove_all(dir);
}

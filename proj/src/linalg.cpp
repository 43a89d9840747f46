#include "wedgecert/linalg.hpp"

#include <algorithm>

#include "wedgecert/errors.hpp"

namespace wedgecert {

const Rational& WedgeCoordinates::at(const SubsetIndex& i) const {
    auto it = std::lower_bound(coords.begin(), coords.end(), i,
                               [](const auto& entry, const SubsetIndex& key) {
                                   return entry.first < key;
                               });
    if (it == coords.end() || !(it->first == i))
        throw DomainError("no coordinate for subset " + i.str());
    return it->second;
}

namespace {

// Fraction-free (Bareiss) elimination on a working copy.  Exact in any
// field; pivot ties are broken by the smallest row index so the
// elimination path is deterministic.
Rational det_inplace(std::vector<Rational>& a, std::size_t n) {
    if (n == 0)
        return Rational(1);
    auto at = [&](std::size_t r, std::size_t c) -> Rational& { return a[r * n + c]; };
    int sign = 1;
    Rational prev_pivot(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && at(p, k) == 0)
            ++p;
        if (p == n)
            return Rational(0);
        if (p != k) {
            for (std::size_t j = k; j < n; ++j)
                std::swap(at(p, j), at(k, j));
            sign = -sign;
        }
        const Rational pivot = at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * pivot - at(i, k) * at(k, j)) / prev_pivot;
            at(i, k) = Rational(0);
        }
        prev_pivot = pivot;
    }
    Rational d = at(n - 1, n - 1);
    return sign < 0 ? Rational(-d) : d;
}

} // namespace

Rational det_exact(const RationalMatrix& m) {
    if (m.rows() != m.cols())
        throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Rational> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i * n + j] = m.at(i, j);
    return det_inplace(a, n);
}

WedgeCoordinates wedge_coordinates(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    const std::size_t l = m.cols();
    if (l > n)
        throw DimensionError("grade exceeds ambient dimension");
    WedgeCoordinates w;
    w.n = n;
    w.l = l;
    w.l1 = Rational(0);
    for (auto& subset : SubsetIndex::all(static_cast<int>(n), static_cast<int>(l))) {
        std::vector<Rational> sub(l * l);
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < l; ++j)
                sub[i * l + j] = m.at(static_cast<std::size_t>(subset[i]) - 1, j);
        Rational d = det_inplace(sub, l);
        w.l1 += rat_abs(d);
        w.coords.emplace_back(std::move(subset), std::move(d));
    }
    return w;
}

Rational schinzel_norm(const RationalVector& v) {
    Rational pos(0), neg(0), sum(0), abs_sum(0);
    for (std::size_t i = 0; i < v.dim(); ++i) {
        const Rational& x = v[i];
        if (x > 0)
            pos += x;
        else
            neg -= x;
        sum += x;
        abs_sum += rat_abs(x);
    }
    const Rational by_max = std::max(pos, neg);
    const Rational by_half = (rat_abs(sum) + abs_sum) / 2;
    if (by_max != by_half)
        throw InternalFault("schinzel norm formulas disagree");
    return by_max;
}

Rational l1_norm(const RationalVector& v) {
    Rational s(0);
    for (std::size_t i = 0; i < v.dim(); ++i)
        s += rat_abs(v[i]);
    return s;
}

Rational linf_norm(const RationalVector& v) {
    Rational s(0);
    for (std::size_t i = 0; i < v.dim(); ++i)
        s = std::max(s, rat_abs(v[i]));
    return s;
}

RationalMatrix gram(const RationalMatrix& m) {
    if (m.cols() > m.rows())
        throw DimensionError("gram needs at most as many columns as rows");
    const std::size_t l = m.cols();
    RationalMatrix g(l, l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = i; j < l; ++j) {
            Rational s(0);
            for (std::size_t r = 0; r < m.rows(); ++r)
                s += m.at(r, i) * m.at(r, j);
            g.at(i, j) = s;
            g.at(j, i) = s;
        }
    return g;
}

CauchyBinetCheck cauchy_binet_check(const RationalMatrix& m) {
    CauchyBinetCheck c;
    c.lhs = Rational(0);
    for (const auto& [subset, minor] : wedge_coordinates(m).coords)
        c.lhs += minor * minor;
    c.rhs = det_exact(gram(m));
    c.equal = (c.lhs == c.rhs);
    return c;
}

std::size_t rank_exact(const RationalMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<Rational> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            a[i * cols + j] = m.at(i, j);
    auto at = [&](std::size_t r, std::size_t c) -> Rational& { return a[r * cols + c]; };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t p = rank;
        while (p < rows && at(p, col) == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != rank)
            for (std::size_t j = col; j < cols; ++j)
                std::swap(at(p, j), at(rank, j));
        const Rational pivot = at(rank, col);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (at(i, col) == 0)
                continue;
            const Rational f = at(i, col) / pivot;
            for (std::size_t j = col; j < cols; ++j)
                at(i, j) -= f * at(rank, j);
        }
        ++rank;
    }
    return rank;
}

} // namespace wedgecert

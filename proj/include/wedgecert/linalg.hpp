#pragma once

#include <utility>
#include <vector>

#include "wedgecert/vecmat.hpp"

namespace wedgecert {

// Grassmann coordinates of a column family: one exact minor per row subset
// of size l, in lexicographic subset order, plus their l1 norm.
struct WedgeCoordinates {
    std::size_t n = 0; // ambient dimension (rows)
    std::size_t l = 0; // grade (columns)
    std::vector<std::pair<SubsetIndex, Rational>> coords;
    Rational l1;

    const Rational& at(const SubsetIndex& i) const;
};

struct CauchyBinetCheck {
    Rational lhs; // sum of squared minors
    Rational rhs; // det of the Gram matrix
    bool equal = false;
};

// Exact determinant by fraction-free elimination; pivot is the first
// nonzero entry scanning rows upward (smallest row index).
Rational det_exact(const RationalMatrix& m);

WedgeCoordinates wedge_coordinates(const RationalMatrix& m);

// max(sum of positive parts, sum of negative parts).  Also evaluated as
// (|sum| + sum of |entries|)/2; disagreement raises InternalFault.
Rational schinzel_norm(const RationalVector& v);

Rational l1_norm(const RationalVector& v);
Rational linf_norm(const RationalVector& v);

// L x L matrix of pairwise column inner products.
RationalMatrix gram(const RationalMatrix& m);

CauchyBinetCheck cauchy_binet_check(const RationalMatrix& m);

// Exact column rank via elimination on a working copy.
std::size_t rank_exact(const RationalMatrix& m);

} // namespace wedgecert

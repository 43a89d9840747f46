#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wedgecert/linalg.hpp"

namespace wedgecert {

// Symbolic extreme point of the Schinzel-norm unit ball: +-e_m or
// e_m - e_n.  Indices are 1-based; `ambient` is the dimension N.
class ExtremePoint {
public:
    enum class Kind { PlusUnit, MinusUnit, Difference };

    static ExtremePoint plus_unit(int m, int ambient);
    static ExtremePoint minus_unit(int m, int ambient);
    static ExtremePoint difference(int m, int n, int ambient);

    Kind kind() const { return kind_; }
    int m() const { return m_; }
    int n() const { return n_; }
    int ambient() const { return ambient_; }
    bool is_unit() const { return kind_ != Kind::Difference; }

    // Nonzero rows with their signs: one entry for units, two for differences.
    std::vector<std::pair<int, int>> support() const;

    std::string str() const; // "+e3", "-e1", "e2-e5"

    // Canonical order: units first (by index, + before -), then
    // differences in lexicographic (m, n) order.
    friend bool operator<(const ExtremePoint& a, const ExtremePoint& b);
    friend bool operator==(const ExtremePoint& a, const ExtremePoint& b);

private:
    ExtremePoint(Kind k, int m, int n, int ambient);

    Kind kind_;
    int m_, n_;
    int ambient_;
};

// A point written as sum(coefficient * extreme point) with nonnegative
// coefficients adding to 1.
struct ConvexCombination {
    std::vector<std::pair<Rational, ExtremePoint>> terms;

    RationalVector reconstruct(int ambient) const;
    Rational coefficient_sum() const;
};

// All N^2 + N extreme points: the 2N signed units first, then the N^2 - N
// differences, each block in lexicographic order.  Requires n >= 2.
std::vector<ExtremePoint> enumerate_extreme_points(int n);

RationalVector embed(const ExtremePoint& p);

// Restriction to the rows in `i`, relabeled into dimension |i|.  Empty
// restriction comes back as nullopt.
std::optional<ExtremePoint> restrict_point(const ExtremePoint& p, const SubsetIndex& i);

// Decomposition of a boundary point (schinzel_norm(x) = 1 exactly) as a
// convex combination of extreme points.
ConvexCombination convex_decompose(const RationalVector& x);

std::optional<ExtremePoint> parse_extreme_point(const std::string& token, int ambient);

} // namespace wedgecert

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wedgecert/extreme.hpp"

namespace wedgecert {

struct MuOptions {
    Integer budget = Integer(100000000); // minor-evaluation budget
    int workers = 1;
};

struct MuResult {
    int l = 0;
    int n = 0;
    Integer value;                       // exact maximum of the wedge l1 norm
    std::vector<ExtremePoint> witness;   // attaining tuple, canonical order
    Integer bound_2l;                    // 2^L
    std::optional<Rational> bound_ratio; // (N/(N-L))^(N-L), absent when L = N
    Integer binom_bound;                 // C(N,L)
    unsigned long long minor_evaluations = 0;
};

struct BoundReport {
    Rational lhs;           // wedge l1 norm
    Rational rhs;           // constant times the norm product
    Rational constant_used;
    bool satisfied = false;
    std::string regime; // which constant applied
};

// Exact maximum of the wedge l1 norm over tuples of extreme points, with a
// witness.  Tuples are enumerated as strictly increasing sequences in the
// canonical point order; partial tuples with vanishing wedge coordinates
// are pruned.
MuResult mu_exact(int l, int n, const MuOptions& opts = {});

// min(2^q, ((r+1)/(r+1-q))^(r+1-q)) for 1 <= q <= r.
Rational c_bound(int q, int r);

// Wedge l1 against the norm-product bound with the constant matching the
// (L, N) regime: |det| form at full grade, otherwise the min of the power
// and ratio constants.
BoundReport verify_wedge_bound(const std::vector<RationalVector>& vectors);

// Diagonal form: entries of every vector must sum to zero within tol; the
// bound is 2^{-q} C(q, r) times the product of l1 norms with r+1 = dim.
BoundReport verify_diagonal_bound(const std::vector<RationalVector>& vectors,
                                  const Rational& tol = Rational(0));

// N x L matrix with column j supported on rows 2j-1, 2j with entries +1,
// -1; its wedge l1 norm is exactly 2^L.
RationalMatrix equality_construction(int l, int n);

// Norm-preserving elimination of the K unit-vector columns: deletes their
// support rows from the difference columns and relabels into dimension
// N - K.  Requires 1 <= K < L and a linearly independent input.
std::vector<ExtremePoint> reduce_mixed(const std::vector<ExtremePoint>& points);

// det of the rows `i` of the tuple's matrix; always lands in {-1, 0, 1}.
int extreme_minor_check(const std::vector<ExtremePoint>& points, const SubsetIndex& i);

// One-line-per-entry table of solved (L, N) searches.
class MuCache {
public:
    explicit MuCache(std::filesystem::path dir);

    std::optional<MuResult> lookup(int l, int n) const;
    void store(const MuResult& result, const Integer& budget) const;

    const std::filesystem::path& file() const { return file_; }

private:
    std::filesystem::path file_;
};

} // namespace wedgecert

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wedgecert/linalg.hpp"

namespace wedgecert {

// Norm y -> ||X y||_1 on R^L defined by a full-column-rank N x L matrix.
class NormBallSpec {
public:
    explicit NormBallSpec(RationalMatrix x);

    const RationalMatrix& matrix() const { return x_; }
    std::size_t ambient() const { return x_.rows(); }  // N
    std::size_t grade() const { return x_.cols(); }    // L

private:
    RationalMatrix x_;
};

struct MinimaResult {
    std::vector<Rational> lambdas;                // nondecreasing
    std::vector<std::vector<Integer>> minimizers; // independent lattice points
    std::vector<RationalVector> reduced;          // X m_l
    Integer index;                                // |det(m_1 ... m_L)|
};

struct VolumeReport {
    Rational dual_volume;
    std::optional<Rational> primal_volume; // exact path, grade <= 3
    Rational reisner_lhs;                  // 4^L / L!
    std::optional<bool> reisner_ok;
    Rational minkowski_low;                // 2^L / L!
    Rational minkowski_high;               // 2^L
    std::optional<bool> minkowski_ok;
};

struct DiagonalReduction {
    MinimaResult minima;
    Rational height_product; // product of l1 norms of the reduced points
    Integer index_bound;     // q!
};

struct LatticeOptions {
    Integer node_budget = Integer(100000000);
    int workers = 1;
};

Rational ball_norm(const NormBallSpec& spec, const RationalVector& y);

// Volume of the dual ball: 2^L times the wedge l1 norm of the columns.
Rational dual_volume(const NormBallSpec& spec);

// Exact volume of {y : ||X y||_1 <= 1} by vertex enumeration over the
// sign-pattern halfspaces; grades 1 to 3 only.
Rational primal_volume(const NormBallSpec& spec);

// Seeded Monte Carlo estimate over a certified bounding box; reported as a
// rational but not suitable for exact checks.
Rational primal_volume_estimate(const NormBallSpec& spec, std::uint64_t samples,
                                std::uint64_t seed);

// Exact successive minima of the ball against the integer lattice, with
// minimizers.  Ties are broken by the lexicographically smallest vector
// whose first nonzero entry is positive.
MinimaResult successive_minima(const NormBallSpec& spec, const LatticeOptions& opts = {});

// successive_minima plus the certified postconditions: the lambda product
// is at most L! times the wedge l1 norm and the index is at most L!.
MinimaResult reduce_basis(const NormBallSpec& spec, const LatticeOptions& opts = {});

// Reduction for independent vectors in the diagonal subspace, reporting
// the height product and the q! index bound.
DiagonalReduction reduce_diagonal_basis(const std::vector<RationalVector>& vectors,
                                        const LatticeOptions& opts = {});

VolumeReport reisner_minkowski_report(const NormBallSpec& spec,
                                      const LatticeOptions& opts = {});

} // namespace wedgecert

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wedgecert/linalg.hpp"

namespace wedgecert {

// Subsets of {1,...,N} as bitmasks (bit k-1 <-> element k).  Ground sets
// are capped at N <= 63.
using SubsetMask = std::uint64_t;

constexpr int kMaxGroundSet = 63;

SubsetMask full_mask(int n);
std::string mask_str(SubsetMask a); // "{1,2,3}"

// L distinct 2-element subsets of {1,...,N} whose union covers the whole
// ground set.  Systems that fail covering or distinctness are rejected at
// construction.
class PairSystem {
public:
    PairSystem(int n, std::vector<std::pair<int, int>> pairs);

    int ground_size() const { return n_; }
    std::size_t pair_count() const { return pairs_.size(); }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    SubsetMask pair_mask(std::size_t l) const { return masks_[l]; }

private:
    int n_;
    std::vector<std::pair<int, int>> pairs_; // each (a, b) with a < b
    std::vector<SubsetMask> masks_;
};

struct MinimalPartition {
    std::vector<SubsetMask> blocks; // disjoint, covering, each a minimal fixed set
};

struct RankRelation {
    std::size_t block_count = 0; // r
    long n_minus_l = 0;
    bool equal = false;
};

struct AmgmBound {
    Integer product; // product of block sizes
    Rational bound;  // (N/(N-L))^(N-L)
};

struct DependencyEquivalence {
    bool in_fixed_family = false; // eta(a) = a
    bool sums_zero = false;       // rows of the matrix indexed by a sum to 0
};

// Reads the pair system off an N x L matrix whose columns are difference
// vectors (one +1, one -1).  Throws PreconditionError naming the offending
// column or row.
PairSystem pair_system_from_columns(const RationalMatrix& y);

// Union of the pairs meeting `a`.
SubsetMask eta(const PairSystem& sys, SubsetMask a);

// Least fixed point of eta containing nonempty `a`.
SubsetMask closure(const PairSystem& sys, SubsetMask a);

// Closures of all singletons, deduplicated: the unique partition of the
// ground set into minimal fixed sets.
MinimalPartition minimal_partition(const PairSystem& sys);

// With a and b fixed points, checks that complement, union and
// intersection are fixed points again.
bool verify_fixed_point_algebra(const PairSystem& sys, SubsetMask a, SubsetMask b);

// Equivalence between "a is a fixed set" and "the selected rows sum to
// zero".  Disagreement is a certified-identity failure.
DependencyEquivalence verify_dependency_equiv(const RationalMatrix& y, SubsetMask a);

// For a minimal block: rank of its row family is |a| - 1 and every proper
// subfamily is linearly independent.
bool verify_minimal_rank(const RationalMatrix& y, SubsetMask a);

RankRelation rank_relation(const RationalMatrix& y);

AmgmBound amgm_bound(const MinimalPartition& partition, std::size_t l);

} // namespace wedgecert

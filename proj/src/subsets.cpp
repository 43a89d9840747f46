#include "wedgecert/subsets.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace wedgecert {

SubsetMask full_mask(int n) {
    if (n < 0 || n > kMaxGroundSet)
        throw DomainError("ground set size out of range");
    return n == 0 ? 0 : (SubsetMask(~0ULL) >> (64 - n));
}

std::string mask_str(SubsetMask a) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int k = 1; k <= kMaxGroundSet; ++k)
        if (a & (SubsetMask(1) << (k - 1))) {
            if (!first)
                os << ',';
            os << k;
            first = false;
        }
    os << '}';
    return os.str();
}

PairSystem::PairSystem(int n, std::vector<std::pair<int, int>> pairs)
    : n_(n), pairs_(std::move(pairs)) {
    if (n < 2 || n > kMaxGroundSet)
        throw DomainError("ground set size must be between 2 and 63");
    if (pairs_.empty())
        throw PreconditionError("pair system must contain at least one pair");
    SubsetMask covered = 0;
    for (auto& [a, b] : pairs_) {
        if (a > b)
            std::swap(a, b);
        if (a < 1 || b > n || a == b)
            throw PreconditionError("pair members must be distinct elements of the ground set");
        masks_.push_back((SubsetMask(1) << (a - 1)) | (SubsetMask(1) << (b - 1)));
        covered |= masks_.back();
    }
    for (std::size_t i = 0; i < masks_.size(); ++i)
        for (std::size_t j = i + 1; j < masks_.size(); ++j)
            if (masks_[i] == masks_[j])
                throw PreconditionError("pairs must be distinct");
    if (covered != full_mask(n))
        throw PreconditionError("pairs do not cover the ground set");
}

PairSystem pair_system_from_columns(const RationalMatrix& y) {
    const std::size_t n = y.rows();
    const std::size_t l = y.cols();
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t j = 0; j < l; ++j) {
        int plus = 0, minus = 0, nonzeros = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const Rational& v = y.at(i, j);
            if (v == 0)
                continue;
            ++nonzeros;
            if (v == 1)
                plus = static_cast<int>(i) + 1;
            else if (v == -1)
                minus = static_cast<int>(i) + 1;
            else
                throw PreconditionError("column " + std::to_string(j + 1) +
                                        " has an entry outside {-1,0,1}");
        }
        if (nonzeros != 2 || plus == 0 || minus == 0)
            throw PreconditionError("column " + std::to_string(j + 1) +
                                    " is not a difference of two unit vectors");
        pairs.emplace_back(plus, minus);
    }
    for (std::size_t i = 0; i < n; ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < l && zero; ++j)
            zero = (y.at(i, j) == 0);
        if (zero)
            throw PreconditionError("row " + std::to_string(i + 1) + " is identically zero");
    }
    return PairSystem(static_cast<int>(n), std::move(pairs));
}

SubsetMask eta(const PairSystem& sys, SubsetMask a) {
    a &= full_mask(sys.ground_size());
    SubsetMask out = 0;
    for (std::size_t l = 0; l < sys.pair_count(); ++l)
        if (sys.pair_mask(l) & a)
            out |= sys.pair_mask(l);
    return out;
}

SubsetMask closure(const PairSystem& sys, SubsetMask a) {
    a &= full_mask(sys.ground_size());
    if (a == 0)
        throw PreconditionError("closure of the empty set is not defined");
    // Covering makes eta extensive, so the iteration is increasing and
    // stabilizes within N steps.
    for (int step = 0; step <= sys.ground_size(); ++step) {
        SubsetMask next = eta(sys, a);
        if (next == a)
            return a;
        a = next;
    }
    throw InternalFault("closure iteration failed to stabilize");
}

MinimalPartition minimal_partition(const PairSystem& sys) {
    MinimalPartition part;
    SubsetMask seen = 0;
    for (int k = 1; k <= sys.ground_size(); ++k) {
        const SubsetMask singleton = SubsetMask(1) << (k - 1);
        if (seen & singleton)
            continue;
        const SubsetMask block = closure(sys, singleton);
        if (block & seen)
            throw InternalFault("minimal blocks are not disjoint");
        part.blocks.push_back(block);
        seen |= block;
    }
    if (seen != full_mask(sys.ground_size()))
        throw InternalFault("minimal blocks do not cover the ground set");
    return part;
}

bool verify_fixed_point_algebra(const PairSystem& sys, SubsetMask a, SubsetMask b) {
    const SubsetMask ground = full_mask(sys.ground_size());
    a &= ground;
    b &= ground;
    if (eta(sys, a) != a || eta(sys, b) != b)
        throw PreconditionError("algebra check needs two fixed points");
    const SubsetMask complement = ground & ~a;
    return eta(sys, complement) == complement && eta(sys, a | b) == (a | b) &&
           eta(sys, a & b) == (a & b);
}

DependencyEquivalence verify_dependency_equiv(const RationalMatrix& y, SubsetMask a) {
    const PairSystem sys = pair_system_from_columns(y);
    a &= full_mask(sys.ground_size());
    DependencyEquivalence out;
    out.in_fixed_family = (eta(sys, a) == a);
    out.sums_zero = true;
    for (std::size_t j = 0; j < y.cols() && out.sums_zero; ++j) {
        Rational s(0);
        for (std::size_t i = 0; i < y.rows(); ++i)
            if (a & (SubsetMask(1) << i))
                s += y.at(i, j);
        out.sums_zero = (s == 0);
    }
    if (out.in_fixed_family != out.sums_zero)
        throw InternalFault("fixed-set and zero-sum criteria disagree on " + mask_str(a));
    return out;
}

namespace {

RationalMatrix rows_of(const RationalMatrix& y, SubsetMask a) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < y.rows(); ++i)
        if (a & (SubsetMask(1) << i))
            idx.push_back(i);
    return y.select_rows(idx);
}

} // namespace

bool verify_minimal_rank(const RationalMatrix& y, SubsetMask a) {
    const PairSystem sys = pair_system_from_columns(y);
    a &= full_mask(sys.ground_size());
    const MinimalPartition part = minimal_partition(sys);
    if (std::find(part.blocks.begin(), part.blocks.end(), a) == part.blocks.end())
        throw PreconditionError("subset " + mask_str(a) + " is not a minimal block");
    const std::size_t size = static_cast<std::size_t>(std::popcount(a));
    if (rank_exact(rows_of(y, a)) != size - 1)
        return false;
    // Independence is inherited by subsets, so checking the maximal proper
    // subfamilies is enough.
    for (std::size_t i = 0; i < y.rows(); ++i) {
        const SubsetMask bit = SubsetMask(1) << i;
        if (!(a & bit))
            continue;
        const SubsetMask sub = a & ~bit;
        if (sub == 0)
            continue;
        if (rank_exact(rows_of(y, sub)) != size - 1)
            return false;
    }
    return true;
}

RankRelation rank_relation(const RationalMatrix& y) {
    const PairSystem sys = pair_system_from_columns(y);
    const MinimalPartition part = minimal_partition(sys);
    RankRelation out;
    out.block_count = part.blocks.size();
    out.n_minus_l = static_cast<long>(y.rows()) - static_cast<long>(y.cols());
    out.equal = (static_cast<long>(out.block_count) == out.n_minus_l);
    if (static_cast<long>(out.block_count) < out.n_minus_l)
        throw InternalFault("fewer minimal blocks than N - L");
    if (rank_exact(y) == y.cols() && !out.equal)
        throw InternalFault("full-rank system with block count above N - L");
    return out;
}

AmgmBound amgm_bound(const MinimalPartition& partition, std::size_t l) {
    SubsetMask ground = 0;
    Integer product(1);
    for (SubsetMask block : partition.blocks) {
        if (block == 0 || (block & ground))
            throw PreconditionError("partition blocks must be nonempty and disjoint");
        ground |= block;
        product *= std::popcount(block);
    }
    const std::size_t n = static_cast<std::size_t>(std::popcount(ground));
    if (!(l < n && n <= 2 * l))
        throw PreconditionError("arithmetic-geometric bound needs L < N <= 2L");
    if (partition.blocks.size() != n - l)
        throw PreconditionError("partition does not come from a full-rank system");
    AmgmBound out;
    out.product = product;
    out.bound = rat_pow(make_rational(Integer(n), Integer(n - l)),
                        static_cast<unsigned>(n - l));
    if (Rational(out.product) > out.bound)
        throw InternalFault("block-size product exceeds the arithmetic-geometric bound");
    return out;
}

} // namespace wedgecert

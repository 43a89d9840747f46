#include "wedgecert/mu.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

namespace wedgecert {

namespace {

constexpr int kMaxMuDimension = 20; // dense 2^N coordinate tables

// One shard of the search: all tuples whose first point has a fixed index.
struct ShardResult {
    long long best = -1;
    std::vector<int> witness_idx;
    unsigned long long minors = 0;
};

// Incremental wedge evaluation.  Level k holds det(Xi_S) for every k-row
// subset S, stored densely by bitmask; appending an extreme point extends
// each nonzero minor through its (at most two) support rows.  Every minor
// of an extreme-point tuple lies in {-1, 0, 1}, which we assert as we go.
class TupleSearch {
public:
    TupleSearch(const std::vector<ExtremePoint>& points, int l, int n)
        : points_(points), l_(l), n_(n), levels_(static_cast<std::size_t>(l) + 1),
          touched_(static_cast<std::size_t>(l) + 1) {
        for (auto& lvl : levels_)
            lvl.assign(std::size_t(1) << n, 0);
        supports_.reserve(points.size());
        for (const auto& p : points_)
            supports_.push_back(p.support());
        levels_[0][0] = 1;
        touched_[0] = {0};
    }

    ShardResult run_shard(int first_idx) {
        shard_ = ShardResult{};
        chosen_.assign(1, first_idx);
        if (extend_with(0, first_idx)) {
            if (l_ == 1)
                record_leaf();
            else
                recurse(1, first_idx + 1);
            unwind(1);
        }
        return shard_;
    }

private:
    // Appends point `idx` as column k+1, filling level k+1 from level k.
    // Returns false when every new coordinate vanished (prune).
    bool extend_with(int k, int idx) {
        auto& next = levels_[static_cast<std::size_t>(k) + 1];
        auto& marks = touched_[static_cast<std::size_t>(k) + 1];
        marks.clear();
        for (const auto& [row, sign] : supports_[static_cast<std::size_t>(idx)]) {
            const std::uint32_t bit = std::uint32_t(1) << (row - 1);
            for (std::uint32_t mask : touched_[static_cast<std::size_t>(k)]) {
                if (mask & bit)
                    continue;
                const int below = std::popcount(mask & (bit - 1));
                const int parity = (below + k) & 1;
                const int term = parity ? -sign : sign;
                const std::uint32_t target = mask | bit;
                if (next[target] == 0 && levels_[static_cast<std::size_t>(k)][mask] != 0)
                    marks.push_back(target);
                next[target] += term * levels_[static_cast<std::size_t>(k)][mask];
                ++shard_.minors;
            }
        }
        bool any = false;
        for (std::uint32_t mask : marks) {
            const int v = next[mask];
            if (v < -1 || v > 1)
                throw InternalFault("extreme-point minor outside {-1,0,1}");
            if (v != 0)
                any = true;
        }
        return any;
    }

    void unwind(int level) {
        auto& arr = levels_[static_cast<std::size_t>(level)];
        for (std::uint32_t mask : touched_[static_cast<std::size_t>(level)])
            arr[mask] = 0;
        touched_[static_cast<std::size_t>(level)].clear();
    }

    void record_leaf() {
        long long norm = 0;
        for (std::uint32_t mask : touched_[static_cast<std::size_t>(l_)])
            norm += std::abs(static_cast<long long>(levels_[static_cast<std::size_t>(l_)][mask]));
        if (norm > shard_.best) {
            shard_.best = norm;
            shard_.witness_idx = chosen_;
        }
    }

    void recurse(int k, int start) {
        const int total = static_cast<int>(points_.size());
        for (int idx = start; idx <= total - (l_ - k); ++idx) {
            chosen_.push_back(idx);
            if (extend_with(k, idx)) {
                if (k + 1 == l_)
                    record_leaf();
                else
                    recurse(k + 1, idx + 1);
                unwind(k + 1);
            } else {
                unwind(k + 1);
            }
            chosen_.pop_back();
        }
    }

    const std::vector<ExtremePoint>& points_;
    int l_, n_;
    std::vector<std::vector<std::pair<int, int>>> supports_;
    std::vector<std::vector<int>> levels_;
    std::vector<std::vector<std::uint32_t>> touched_;
    std::vector<int> chosen_;
    ShardResult shard_;
};

Rational ratio_bound(int l, int n) {
    return rat_pow(make_rational(Integer(n), Integer(n - l)), static_cast<unsigned>(n - l));
}

Integer ceil_rational(const Rational& r) {
    Integer q = rat_num(r) / rat_den(r);
    if (q * rat_den(r) < rat_num(r))
        ++q;
    return q;
}

void check_result_invariants(const MuResult& res) {
    if (res.value < 0 || res.value > res.binom_bound)
        throw InternalFault("mu value outside [0, C(N,L)]");
    if (res.l < res.n) {
        if (res.value > res.bound_2l)
            throw InternalFault("mu value above the 2^L bound");
        if (res.n <= 2 * res.l && res.bound_ratio &&
            res.value > ceil_rational(*res.bound_ratio))
            throw InternalFault("mu value above the ratio bound");
    }
    std::vector<RationalVector> cols;
    cols.reserve(res.witness.size());
    for (const auto& p : res.witness)
        cols.push_back(embed(p));
    const Rational recomputed = wedge_coordinates(RationalMatrix::from_columns(cols)).l1;
    if (recomputed != Rational(res.value))
        throw InternalFault("mu witness does not attain the reported value");
}

} // namespace

MuResult mu_exact(int l, int n, const MuOptions& opts) {
    if (l < 1 || l > n)
        throw DomainError("mu needs 1 <= L <= N");
    if (n > kMaxMuDimension)
        throw ResourceError("mu search supports dimensions up to " +
                            std::to_string(kMaxMuDimension));
    const std::vector<ExtremePoint> points = enumerate_extreme_points(n);
    const int total = static_cast<int>(points.size());

    const Integer tuple_count = binomial(static_cast<unsigned>(total), static_cast<unsigned>(l));
    const Integer minors_per_tuple = binomial(static_cast<unsigned>(n), static_cast<unsigned>(l));
    if (tuple_count * minors_per_tuple > opts.budget) {
        std::ostringstream os;
        os << "mu search over " << tuple_count.str() << " tuples (about "
           << Integer(tuple_count * minors_per_tuple).str()
           << " minor evaluations) exceeds the budget of " << opts.budget.str();
        throw ResourceError(os.str());
    }

    const int shard_count = total - l + 1;
    std::vector<ShardResult> shards(static_cast<std::size_t>(shard_count));
    const int workers = std::max(1, opts.workers);
    auto worker_fn = [&](int w) {
        TupleSearch search(points, l, n);
        for (int s = w; s < shard_count; s += workers)
            shards[static_cast<std::size_t>(s)] = search.run_shard(s);
    };
    if (workers == 1) {
        worker_fn(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(worker_fn, w);
        for (auto& t : pool)
            t.join();
    }

    // Deterministic max-reduction: strictly better values win, so ties keep
    // the canonically earliest witness regardless of worker count.
    ShardResult best;
    unsigned long long minors = 0;
    for (const auto& s : shards) {
        minors += s.minors;
        if (s.best > best.best) {
            best.best = s.best;
            best.witness_idx = s.witness_idx;
        }
    }
    if (best.best < 0)
        throw InternalFault("mu search visited no tuple");

    MuResult res;
    res.l = l;
    res.n = n;
    res.value = Integer(best.best);
    for (int idx : best.witness_idx)
        res.witness.push_back(points[static_cast<std::size_t>(idx)]);
    res.bound_2l = int_pow(Integer(2), static_cast<unsigned>(l));
    if (l < n)
        res.bound_ratio = ratio_bound(l, n);
    res.binom_bound = binomial(static_cast<unsigned>(n), static_cast<unsigned>(l));
    res.minor_evaluations = minors;
    check_result_invariants(res);
    return res;
}

Rational c_bound(int q, int r) {
    if (q < 1 || r < 1 || q > r)
        throw DomainError("constant needs 1 <= q <= r");
    const Rational power(int_pow(Integer(2), static_cast<unsigned>(q)));
    const Rational ratio = rat_pow(make_rational(Integer(r + 1), Integer(r + 1 - q)),
                                   static_cast<unsigned>(r + 1 - q));
    return std::min(power, ratio);
}

namespace {

RationalMatrix matrix_of(const std::vector<RationalVector>& vectors) {
    if (vectors.empty())
        throw PreconditionError("need at least one vector");
    const std::size_t dim = vectors.front().dim();
    for (const auto& v : vectors)
        if (v.dim() != dim)
            throw DimensionError("vectors have mixed dimensions");
    return RationalMatrix::from_columns(vectors);
}

} // namespace

BoundReport verify_wedge_bound(const std::vector<RationalVector>& vectors) {
    const RationalMatrix m = matrix_of(vectors);
    const std::size_t l = m.cols(), n = m.rows();
    if (l > n)
        throw DimensionError("more vectors than ambient dimensions");
    BoundReport rep;
    rep.lhs = wedge_coordinates(m).l1;
    Rational norm_product(1);
    for (std::size_t j = 0; j < l; ++j)
        norm_product *= schinzel_norm(m.column(j));
    if (l == n) {
        rep.constant_used = Rational(1);
        rep.regime = "determinant";
    } else {
        const Rational power(int_pow(Integer(2), static_cast<unsigned>(l)));
        const Rational ratio = ratio_bound(static_cast<int>(l), static_cast<int>(n));
        rep.constant_used = std::min(power, ratio);
        rep.regime = n >= 2 * l ? "power" : "ratio";
    }
    rep.rhs = rep.constant_used * norm_product;
    rep.satisfied = rep.lhs <= rep.rhs;
    return rep;
}

BoundReport verify_diagonal_bound(const std::vector<RationalVector>& vectors,
                                  const Rational& tol) {
    if (tol < 0)
        throw DomainError("tolerance must be nonnegative");
    const RationalMatrix m = matrix_of(vectors);
    const int q = static_cast<int>(m.cols());
    const int r = static_cast<int>(m.rows()) - 1;
    if (q > r)
        throw DomainError("diagonal bound needs q <= dim - 1");
    for (int j = 0; j < q; ++j) {
        Rational s(0);
        for (std::size_t i = 0; i < m.rows(); ++i)
            s += m.at(i, static_cast<std::size_t>(j));
        if (rat_abs(s) > tol)
            throw PreconditionError("vector " + std::to_string(j + 1) +
                                    " is not diagonal: entry sum " + rational_str(s));
    }
    BoundReport rep;
    rep.lhs = wedge_coordinates(m).l1;
    rep.constant_used =
        c_bound(q, r) / Rational(int_pow(Integer(2), static_cast<unsigned>(q)));
    Rational product(1);
    for (int j = 0; j < q; ++j)
        product *= l1_norm(m.column(static_cast<std::size_t>(j)));
    rep.rhs = rep.constant_used * product;
    rep.satisfied = rep.lhs <= rep.rhs;
    rep.regime = "diagonal";
    return rep;
}

RationalMatrix equality_construction(int l, int n) {
    if (l < 1 || 2 * l > n)
        throw DomainError("construction needs 2L <= N");
    RationalMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(l));
    for (int j = 0; j < l; ++j) {
        m.at(static_cast<std::size_t>(2 * j), static_cast<std::size_t>(j)) = Rational(1);
        m.at(static_cast<std::size_t>(2 * j + 1), static_cast<std::size_t>(j)) = Rational(-1);
    }
    if (wedge_coordinates(m).l1 != Rational(int_pow(Integer(2), static_cast<unsigned>(l))))
        throw InternalFault("orthogonal construction misses the 2^L norm");
    return m;
}

std::vector<ExtremePoint> reduce_mixed(const std::vector<ExtremePoint>& points) {
    const std::size_t l = points.size();
    if (l < 2)
        throw PreconditionError("reduction needs at least two points");
    const int n = points.front().ambient();
    for (const auto& p : points)
        if (p.ambient() != n)
            throw DimensionError("points have mixed ambient dimensions");

    std::vector<int> unit_rows;
    std::vector<ExtremePoint> difference_points;
    for (const auto& p : points) {
        if (p.is_unit())
            unit_rows.push_back(p.m());
        else
            difference_points.push_back(p);
    }
    const std::size_t k = unit_rows.size();
    if (k == 0 || k == l)
        throw PreconditionError("reduction needs a proper mix of unit and difference points");

    std::vector<RationalVector> cols;
    cols.reserve(l);
    for (const auto& p : points)
        cols.push_back(embed(p));
    const Rational before = wedge_coordinates(RationalMatrix::from_columns(cols)).l1;
    if (before == 0)
        throw PreconditionError("points are linearly dependent");

    std::sort(unit_rows.begin(), unit_rows.end());
    std::vector<int> kept;
    for (int row = 1; row <= n; ++row)
        if (!std::binary_search(unit_rows.begin(), unit_rows.end(), row))
            kept.push_back(row);
    const SubsetIndex complement(kept);

    std::vector<ExtremePoint> reduced;
    reduced.reserve(l - k);
    for (const auto& p : difference_points) {
        auto r = restrict_point(p, complement);
        if (!r)
            throw InternalFault("difference column vanished under an independent reduction");
        reduced.push_back(*r);
    }

    std::vector<RationalVector> reduced_cols;
    reduced_cols.reserve(reduced.size());
    for (const auto& p : reduced)
        reduced_cols.push_back(embed(p));
    const Rational after = wedge_coordinates(RationalMatrix::from_columns(reduced_cols)).l1;
    if (after != before)
        throw InternalFault("reduction changed the wedge norm");
    return reduced;
}

int extreme_minor_check(const std::vector<ExtremePoint>& points, const SubsetIndex& i) {
    if (i.size() != points.size())
        throw DimensionError("row subset size must match the tuple length");
    std::vector<RationalVector> cols;
    cols.reserve(points.size());
    for (const auto& p : points)
        cols.push_back(embed(p));
    std::vector<std::size_t> rows;
    rows.reserve(i.size());
    for (std::size_t t = 0; t < i.size(); ++t)
        rows.push_back(static_cast<std::size_t>(i[t]) - 1);
    const Rational d = det_exact(RationalMatrix::from_columns(cols).select_rows(rows));
    if (d != -1 && d != 0 && d != 1)
        throw InternalFault("extreme-point minor outside {-1,0,1}");
    return d == 0 ? 0 : (d > 0 ? 1 : -1);
}

MuCache::MuCache(std::filesystem::path dir) : file_(std::move(dir)) {
    file_ /= "mu_table.txt";
}

std::optional<MuResult> MuCache::lookup(int l, int n) const {
    std::ifstream in(file_);
    if (!in)
        return std::nullopt;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::istringstream is(line);
        int fl = 0, fn = 0;
        long long value = 0;
        if (!(is >> fl >> fn >> value))
            continue;
        if (fl != l || fn != n)
            continue;
        std::vector<ExtremePoint> witness;
        std::string token;
        bool ok = true;
        while (is >> token) {
            auto p = parse_extreme_point(token, n);
            if (!p) {
                ok = false;
                break;
            }
            witness.push_back(*p);
        }
        if (!ok || static_cast<int>(witness.size()) != l || value < 0)
            return std::nullopt; // malformed entry: treat as a miss
        MuResult res;
        res.l = l;
        res.n = n;
        res.value = Integer(value);
        res.witness = std::move(witness);
        res.bound_2l = int_pow(Integer(2), static_cast<unsigned>(l));
        if (l < n)
            res.bound_ratio = ratio_bound(l, n);
        res.binom_bound = binomial(static_cast<unsigned>(n), static_cast<unsigned>(l));
        try {
            check_result_invariants(res);
        } catch (const InternalFault&) {
            return std::nullopt; // stale or corrupt record
        }
        return res;
    }
    return std::nullopt;
}

void MuCache::store(const MuResult& result, const Integer& budget) const {
    std::map<std::pair<int, int>, std::string> records;
    {
        std::ifstream in(file_);
        std::string line;
        while (in && std::getline(in, line)) {
            std::istringstream is(line);
            int fl = 0, fn = 0;
            if (is >> fl >> fn)
                records[{fl, fn}] = line;
        }
    }
    std::ostringstream os;
    os << result.l << ' ' << result.n << ' ' << result.value.str();
    for (const auto& p : result.witness)
        os << ' ' << p.str();
    os << " # budget=" << budget.str() << " minors=" << result.minor_evaluations;
    records[{result.l, result.n}] = os.str();

    std::filesystem::create_directories(file_.parent_path());
    std::ofstream out(file_, std::ios::trunc);
    if (!out)
        throw ResourceError("cannot write cache file " + file_.string());
    for (const auto& [key, rec] : records)
        out << rec << '\n';
}

} // namespace wedgecert

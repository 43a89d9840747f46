#include "wedgecert/lattice.hpp"

#include <algorithm>
#include <random>
#include <thread>

namespace wedgecert {

namespace {

Integer floor_rat(const Rational& r) {
    Integer q = rat_num(r) / rat_den(r); // truncates toward zero
    if (q * rat_den(r) > rat_num(r))
        --q;
    return q;
}

Integer ceil_rat(const Rational& r) {
    Integer q = rat_num(r) / rat_den(r);
    if (q * rat_den(r) < rat_num(r))
        ++q;
    return q;
}

// Largest integer t with t <= base + sqrt(rad2), exactly.
Integer upper_bound_int(const Rational& base, const Rational& rad2) {
    if (rad2 < 0)
        throw InternalFault("negative radius in enumeration interval");
    Integer t = floor_rat(base) + boost::multiprecision::sqrt(ceil_rat(rad2)) + 2;
    auto admissible = [&](const Integer& v) {
        const Rational diff = Rational(v) - base;
        return diff <= 0 || diff * diff <= rad2;
    };
    while (!admissible(t))
        --t;
    return t;
}

Integer lower_bound_int(const Rational& base, const Rational& rad2) {
    return -upper_bound_int(-base, rad2);
}

// Crude but exact lower bound for the least eigenvalue of the Gram
// matrix: det(G) / (trace(G)/(L-1))^(L-1), and G(0,0) itself at L = 1.
Rational gram_min_eigen_lower(const RationalMatrix& g) {
    const std::size_t l = g.rows();
    if (l == 1)
        return g.at(0, 0);
    Rational trace(0);
    for (std::size_t i = 0; i < l; ++i)
        trace += g.at(i, i);
    const Rational denom = rat_pow(trace / Rational(static_cast<long>(l) - 1),
                                   static_cast<unsigned>(l - 1));
    return det_exact(g) / denom;
}

struct LdlDecomposition {
    std::vector<Rational> d;               // positive diagonal
    std::vector<std::vector<Rational>> lt; // lt[i][j] for i > j
};

LdlDecomposition ldl(const RationalMatrix& g) {
    const std::size_t l = g.rows();
    LdlDecomposition out;
    out.d.assign(l, Rational(0));
    out.lt.assign(l, std::vector<Rational>(l, Rational(0)));
    for (std::size_t j = 0; j < l; ++j) {
        Rational dj = g.at(j, j);
        for (std::size_t k = 0; k < j; ++k)
            dj -= out.lt[j][k] * out.lt[j][k] * out.d[k];
        if (dj <= 0)
            throw InternalFault("Gram matrix is not positive definite");
        out.d[j] = dj;
        for (std::size_t i = j + 1; i < l; ++i) {
            Rational v = g.at(i, j);
            for (std::size_t k = 0; k < j; ++k)
                v -= out.lt[i][k] * out.lt[j][k] * out.d[k];
            out.lt[i][j] = v / dj;
        }
    }
    return out;
}

struct Candidate {
    std::vector<Integer> y;
    Rational norm;
};

// Depth-first scan of the ellipsoid y^T G y <= c^2 (which contains every
// lattice point with ||X y||_1 <= c), outermost coordinate last.
class LatticeScan {
public:
    LatticeScan(const RationalMatrix& x, const LdlDecomposition& ldl, Rational cutoff,
                Integer box)
        : x_(x), ldl_(ldl), cutoff_(std::move(cutoff)), box_(std::move(box)),
          l_(x.cols()), y_(l_, Integer(0)), centers_(l_, Rational(0)) {}

    // Enumerates the subtree with the outermost coordinate fixed.
    void run_stripe(const Integer& outer_value, std::vector<Candidate>& out) {
        out_ = &out;
        const std::size_t i = l_ - 1;
        const Rational c2 = cutoff_ * cutoff_;
        const Rational term = ldl_.d[i] * Rational(outer_value) * Rational(outer_value);
        if (term > c2)
            return;
        assign(i, outer_value);
        if (l_ == 1)
            leaf();
        else
            descend(i - 1, c2 - term);
        unassign(i, outer_value);
    }

    // Outermost admissible range, used for striping.
    std::pair<Integer, Integer> outer_range() const {
        const std::size_t i = l_ - 1;
        const Rational c2 = cutoff_ * cutoff_;
        Integer hi = upper_bound_int(Rational(0), c2 / ldl_.d[i]);
        hi = std::min(hi, box_);
        return {-hi, hi};
    }

private:
    void assign(std::size_t i, const Integer& v) {
        y_[i] = v;
        for (std::size_t j = 0; j < i; ++j)
            centers_[j] += ldl_.lt[i][j] * Rational(v);
    }

    void unassign(std::size_t i, const Integer& v) {
        for (std::size_t j = 0; j < i; ++j)
            centers_[j] -= ldl_.lt[i][j] * Rational(v);
        y_[i] = 0;
    }

    void leaf() {
        bool zero = true;
        for (const auto& v : y_)
            if (v != 0) {
                zero = false;
                break;
            }
        if (zero)
            return;
        Rational norm(0);
        for (std::size_t r = 0; r < x_.rows(); ++r) {
            Rational s(0);
            for (std::size_t j = 0; j < l_; ++j)
                if (y_[j] != 0)
                    s += x_.at(r, j) * Rational(y_[j]);
            norm += rat_abs(s);
        }
        if (norm <= cutoff_)
            out_->push_back(Candidate{y_, std::move(norm)});
    }

    void descend(std::size_t i, const Rational& rem) {
        const Rational base = -centers_[i];
        const Rational rad2 = rem / ldl_.d[i];
        Integer lo = std::max(lower_bound_int(base, rad2), Integer(-box_));
        Integer hi = std::min(upper_bound_int(base, rad2), box_);
        for (Integer v = lo; v <= hi; ++v) {
            const Rational offset = Rational(v) + centers_[i];
            const Rational term = ldl_.d[i] * offset * offset;
            if (term > rem)
                continue;
            assign(i, v);
            if (i == 0)
                leaf();
            else
                descend(i - 1, rem - term);
            unassign(i, v);
        }
    }

    const RationalMatrix& x_;
    const LdlDecomposition& ldl_;
    Rational cutoff_;
    Integer box_;
    std::size_t l_;
    std::vector<Integer> y_;
    std::vector<Rational> centers_;
    std::vector<Candidate>* out_ = nullptr;
};

bool lex_less(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i])
            return a[i] < b[i];
    }
    return false;
}

// Sign-normalized form: first nonzero entry positive.
bool is_canonical(const std::vector<Integer>& y) {
    for (const auto& v : y) {
        if (v != 0)
            return v > 0;
    }
    return false;
}

RationalVector apply_matrix(const RationalMatrix& x, const std::vector<Integer>& y) {
    RationalVector out(x.rows());
    for (std::size_t r = 0; r < x.rows(); ++r) {
        Rational s(0);
        for (std::size_t j = 0; j < x.cols(); ++j)
            if (y[j] != 0)
                s += x.at(r, j) * Rational(y[j]);
        out[r] = s;
    }
    return out;
}

} // namespace

NormBallSpec::NormBallSpec(RationalMatrix x) : x_(std::move(x)) {
    if (x_.cols() > x_.rows())
        throw DimensionError("norm matrix needs at least as many rows as columns");
    if (rank_exact(x_) != x_.cols())
        throw PreconditionError("norm matrix must have full column rank");
}

Rational ball_norm(const NormBallSpec& spec, const RationalVector& y) {
    if (y.dim() != spec.grade())
        throw DimensionError("argument dimension must equal the grade");
    Rational norm(0);
    const RationalMatrix& x = spec.matrix();
    for (std::size_t r = 0; r < x.rows(); ++r) {
        Rational s(0);
        for (std::size_t j = 0; j < x.cols(); ++j)
            s += x.at(r, j) * y[j];
        norm += rat_abs(s);
    }
    return norm;
}

Rational dual_volume(const NormBallSpec& spec) {
    return Rational(int_pow(Integer(2), static_cast<unsigned>(spec.grade()))) *
           wedge_coordinates(spec.matrix()).l1;
}

namespace {

// Comparator for exact counterclockwise order around the origin.
bool angular_less(const std::pair<Rational, Rational>& a,
                  const std::pair<Rational, Rational>& b) {
    auto upper = [](const std::pair<Rational, Rational>& p) {
        return p.second > 0 || (p.second == 0 && p.first > 0);
    };
    const bool ua = upper(a), ub = upper(b);
    if (ua != ub)
        return ua;
    return a.first * b.second - a.second * b.first > 0;
}

std::vector<RationalVector> ball_vertices(const NormBallSpec& spec) {
    const RationalMatrix& x = spec.matrix();
    const std::size_t n = x.rows(), l = x.cols();
    if (n > 16)
        throw ResourceError("exact volume enumerates 2^N sign patterns; N is too large");

    std::vector<std::vector<Rational>> normals;
    for (std::uint32_t s = 0; s < (std::uint32_t(1) << n); ++s) {
        std::vector<Rational> a(l, Rational(0));
        bool zero = true;
        for (std::size_t r = 0; r < n; ++r) {
            const int sign = (s >> r) & 1u ? 1 : -1;
            for (std::size_t j = 0; j < l; ++j)
                a[j] += sign > 0 ? x.at(r, j) : Rational(-x.at(r, j));
        }
        for (const auto& v : a)
            if (v != 0)
                zero = false;
        if (!zero)
            normals.push_back(std::move(a));
    }
    std::sort(normals.begin(), normals.end());
    normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
    if (normals.size() > 128)
        throw ResourceError("exact volume supports at most 128 distinct facet normals");

    // Vertices: feasible solutions of l active constraints a_i . y = 1.
    std::vector<std::vector<Rational>> verts;
    auto solve_and_check = [&](const std::vector<std::size_t>& idx) {
        RationalMatrix sys(l, l);
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < l; ++j)
                sys.at(i, j) = normals[idx[i]][j];
        // Solve by Cramer's rule.
        const Rational den = det_exact(sys);
        if (den == 0)
            return;
        std::vector<Rational> v(l);
        for (std::size_t j = 0; j < l; ++j) {
            RationalMatrix col = sys;
            for (std::size_t i = 0; i < l; ++i)
                col.at(i, j) = Rational(1);
            v[j] = det_exact(col) / den;
        }
        for (const auto& a : normals) {
            Rational dot(0);
            for (std::size_t j = 0; j < l; ++j)
                dot += a[j] * v[j];
            if (dot > 1)
                return;
        }
        verts.push_back(std::move(v));
    };
    std::vector<std::size_t> idx(l);
    auto combos = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
        if (depth == l) {
            solve_and_check(idx);
            return;
        }
        for (std::size_t i = start; i < normals.size(); ++i) {
            idx[depth] = i;
            self(self, depth + 1, i + 1);
        }
    };
    combos(combos, 0, 0);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

    std::vector<RationalVector> out;
    out.reserve(verts.size());
    for (auto& v : verts)
        out.emplace_back(std::move(v));
    return out;
}

Rational polygon_cone_area(std::vector<std::pair<Rational, Rational>> pts) {
    std::sort(pts.begin(), pts.end(), angular_less);
    Rational twice(0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& a = pts[i];
        const auto& b = pts[(i + 1) % pts.size()];
        twice += rat_abs(a.first * b.second - a.second * b.first);
    }
    return twice / 2;
}

} // namespace

Rational primal_volume(const NormBallSpec& spec) {
    const std::size_t l = spec.grade();
    if (l > 3)
        throw DomainError("exact volume supports grade <= 3; use the sampling estimate");
    const std::vector<RationalVector> verts = ball_vertices(spec);
    if (verts.empty())
        throw InternalFault("norm ball has no vertices");

    if (l == 1) {
        Rational lo = verts.front()[0], hi = verts.front()[0];
        for (const auto& v : verts) {
            lo = std::min(lo, v[0]);
            hi = std::max(hi, v[0]);
        }
        return hi - lo;
    }

    if (l == 2) {
        std::vector<std::pair<Rational, Rational>> pts;
        pts.reserve(verts.size());
        for (const auto& v : verts)
            pts.emplace_back(v[0], v[1]);
        return polygon_cone_area(std::move(pts));
    }

    // Grade 3: sum cone volumes over the facets.  Each facet lives on a
    // plane a . y = 1 for one of the (deduplicated) sign-pattern normals.
    const RationalMatrix& x = spec.matrix();
    const std::size_t n = x.rows();
    std::vector<std::vector<Rational>> normals;
    for (std::uint32_t s = 0; s < (std::uint32_t(1) << n); ++s) {
        std::vector<Rational> a(l, Rational(0));
        for (std::size_t r = 0; r < n; ++r) {
            const int sign = (s >> r) & 1u ? 1 : -1;
            for (std::size_t j = 0; j < l; ++j)
                a[j] += sign > 0 ? x.at(r, j) : Rational(-x.at(r, j));
        }
        normals.push_back(std::move(a));
    }
    std::sort(normals.begin(), normals.end());
    normals.erase(std::unique(normals.begin(), normals.end()), normals.end());

    Rational volume(0);
    for (const auto& a : normals) {
        std::vector<const RationalVector*> facet;
        for (const auto& v : verts) {
            Rational dot(0);
            for (std::size_t j = 0; j < l; ++j)
                dot += a[j] * v[j];
            if (dot == 1)
                facet.push_back(&v);
        }
        if (facet.size() < 3)
            continue;
        // Exact planar coordinates: basis from the first three vertices
        // spanning the facet.
        const RationalVector& origin = *facet[0];
        std::vector<Rational> u1(l), u2(l);
        for (std::size_t j = 0; j < l; ++j)
            u1[j] = (*facet[1])[j] - origin[j];
        bool found = false;
        for (std::size_t k = 2; k < facet.size() && !found; ++k) {
            for (std::size_t j = 0; j < l; ++j)
                u2[j] = (*facet[k])[j] - origin[j];
            // independent iff some 2x2 minor of (u1 u2) is nonzero
            for (std::size_t p = 0; p < l && !found; ++p)
                for (std::size_t q = p + 1; q < l && !found; ++q)
                    if (u1[p] * u2[q] - u1[q] * u2[p] != 0)
                        found = true;
        }
        if (!found)
            throw InternalFault("degenerate facet in volume computation");
        std::size_t rp = 0, rq = 1;
        Rational basis_det;
        for (std::size_t p = 0; p < l; ++p)
            for (std::size_t q = p + 1; q < l; ++q) {
                basis_det = u1[p] * u2[q] - u1[q] * u2[p];
                if (basis_det != 0) {
                    rp = p;
                    rq = q;
                    goto basis_found;
                }
            }
    basis_found:
        std::vector<std::pair<Rational, Rational>> planar;
        std::vector<std::size_t> order(facet.size());
        Rational cp(0), cq(0);
        for (const auto* w : facet) {
            const Rational wp = (*w)[rp] - origin[rp];
            const Rational wq = (*w)[rq] - origin[rq];
            const Rational coord_p = (wp * u2[rq] - wq * u2[rp]) / basis_det;
            const Rational coord_q = (u1[rp] * wq - u1[rq] * wp) / basis_det;
            planar.emplace_back(coord_p, coord_q);
            cp += coord_p;
            cq += coord_q;
        }
        cp /= Rational(static_cast<long>(facet.size()));
        cq /= Rational(static_cast<long>(facet.size()));
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a_i, std::size_t b_i) {
            return angular_less({planar[a_i].first - cp, planar[a_i].second - cq},
                                {planar[b_i].first - cp, planar[b_i].second - cq});
        });
        for (std::size_t t = 1; t + 1 < order.size(); ++t) {
            RationalMatrix tet(3, 3);
            const RationalVector* tri[3] = {facet[order[0]], facet[order[t]],
                                            facet[order[t + 1]]};
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t col = 0; col < 3; ++col)
                    tet.at(j, col) = (*tri[col])[j];
            volume += rat_abs(det_exact(tet)) / 6;
        }
    }
    return volume;
}

Rational primal_volume_estimate(const NormBallSpec& spec, std::uint64_t samples,
                                std::uint64_t seed) {
    if (samples == 0)
        throw DomainError("sample count must be positive");
    const RationalMatrix& x = spec.matrix();
    const std::size_t l = spec.grade();
    const Rational lb = gram_min_eigen_lower(gram(x));

    // Rational box half-width u >= 1/sqrt(lb), so the box contains the ball.
    Rational u(1);
    {
        const double approx = 1.0 / std::sqrt(to_double(lb));
        u = Rational(approx * 1.000001);
        while (u * u * lb < 1)
            u *= Rational(1000001, 1000000);
    }

    std::vector<double> xd(x.rows() * l);
    for (std::size_t r = 0; r < x.rows(); ++r)
        for (std::size_t j = 0; j < l; ++j)
            xd[r * l + j] = to_double(x.at(r, j));
    const double ud = to_double(u);

    std::mt19937_64 rng(seed);
    std::uint64_t hits = 0;
    std::vector<double> y(l);
    for (std::uint64_t s = 0; s < samples; ++s) {
        for (std::size_t j = 0; j < l; ++j) {
            const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            y[j] = (2.0 * unit - 1.0) * ud;
        }
        double norm = 0.0;
        for (std::size_t r = 0; r < x.rows(); ++r) {
            double dot = 0.0;
            for (std::size_t j = 0; j < l; ++j)
                dot += xd[r * l + j] * y[j];
            norm += std::abs(dot);
        }
        if (norm <= 1.0)
            ++hits;
    }
    const Rational box_volume = rat_pow(2 * u, static_cast<unsigned>(l));
    return box_volume * Rational(Integer(hits), Integer(samples));
}

MinimaResult successive_minima(const NormBallSpec& spec, const LatticeOptions& opts) {
    const RationalMatrix& x = spec.matrix();
    const std::size_t l = spec.grade();

    Rational cutoff(0);
    for (std::size_t j = 0; j < l; ++j)
        cutoff = std::max(cutoff, l1_norm(x.column(j)));

    const RationalMatrix g = gram(x);
    const Rational lb = gram_min_eigen_lower(g);
    if (lb <= 0)
        throw InternalFault("eigenvalue lower bound is not positive");

    // Certified box: ||X y||_1 <= cutoff forces |y_i| <= B.
    Integer box(1);
    while (Rational(box) * Rational(box) * lb < cutoff * cutoff)
        ++box;
    Integer box_points(1);
    for (std::size_t j = 0; j < l; ++j)
        box_points *= 2 * box + 1;
    if (box_points > opts.node_budget)
        throw ResourceError("enumeration box of " + box_points.str() +
                            " lattice points (coordinates up to " + box.str() +
                            ") exceeds the budget of " + opts.node_budget.str());

    const LdlDecomposition dec = ldl(g);
    LatticeScan probe(x, dec, cutoff, box);
    const auto [outer_lo, outer_hi] = probe.outer_range();
    if (outer_hi - outer_lo + 1 > 1000000)
        throw ResourceError("enumeration box of " + box_points.str() +
                            " lattice points is too large to stripe");

    std::vector<Integer> stripe_values;
    for (Integer v = outer_lo; v <= outer_hi; ++v)
        stripe_values.push_back(v);

    const int workers = std::max(1, opts.workers);
    std::vector<std::vector<Candidate>> per_stripe(stripe_values.size());
    auto worker_fn = [&](int w) {
        LatticeScan scan(x, dec, cutoff, box);
        for (std::size_t s = static_cast<std::size_t>(w); s < stripe_values.size();
             s += static_cast<std::size_t>(workers))
            scan.run_stripe(stripe_values[s], per_stripe[s]);
    };
    if (workers == 1) {
        worker_fn(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(worker_fn, w);
        for (auto& t : pool)
            t.join();
    }

    std::vector<Candidate> candidates;
    for (auto& stripe : per_stripe)
        for (auto& cand : stripe)
            if (is_canonical(cand.y))
                candidates.push_back(std::move(cand));
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.norm != b.norm)
            return a.norm < b.norm;
        return lex_less(a.y, b.y);
    });

    MinimaResult res;
    std::vector<RationalVector> chosen_cols;
    for (const auto& cand : candidates) {
        if (res.minimizers.size() == l)
            break;
        std::vector<Rational> col(l);
        for (std::size_t j = 0; j < l; ++j)
            col[j] = Rational(cand.y[j]);
        chosen_cols.emplace_back(col);
        if (wedge_coordinates(RationalMatrix::from_columns(chosen_cols)).l1 == 0) {
            chosen_cols.pop_back();
            continue;
        }
        res.lambdas.push_back(cand.norm);
        res.minimizers.push_back(cand.y);
        res.reduced.push_back(apply_matrix(x, cand.y));
    }
    if (res.minimizers.size() != l)
        throw InternalFault("enumeration found fewer independent minimizers than the grade");

    RationalMatrix mm(l, l);
    for (std::size_t c = 0; c < l; ++c)
        for (std::size_t r = 0; r < l; ++r)
            mm.at(r, c) = Rational(res.minimizers[c][r]);
    const Rational idx = rat_abs(det_exact(mm));
    if (rat_den(idx) != 1 || idx == 0)
        throw InternalFault("minimizer index is not a positive integer");
    res.index = rat_num(idx);
    if (res.index > factorial(static_cast<unsigned>(l)))
        throw InternalFault("minimizer index exceeds L!");
    for (std::size_t j = 0; j < l; ++j)
        if (l1_norm(res.reduced[j]) != res.lambdas[j])
            throw InternalFault("reduced point does not attain its minimum");
    return res;
}

MinimaResult reduce_basis(const NormBallSpec& spec, const LatticeOptions& opts) {
    MinimaResult res = successive_minima(spec, opts);
    Rational product(1);
    for (const auto& beta : res.reduced)
        product *= l1_norm(beta);
    const Rational wedge = wedge_coordinates(spec.matrix()).l1;
    if (product > Rational(factorial(static_cast<unsigned>(spec.grade()))) * wedge)
        throw InternalFault("reduced norm product exceeds L! times the wedge norm");
    return res;
}

DiagonalReduction reduce_diagonal_basis(const std::vector<RationalVector>& vectors,
                                        const LatticeOptions& opts) {
    if (vectors.empty())
        throw PreconditionError("need at least one vector");
    const RationalMatrix m = RationalMatrix::from_columns(vectors);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Rational s(0);
        for (std::size_t i = 0; i < m.rows(); ++i)
            s += m.at(i, j);
        if (s != 0)
            throw PreconditionError("vector " + std::to_string(j + 1) +
                                    " is not in the diagonal subspace");
    }
    if (rank_exact(m) != m.cols())
        throw PreconditionError("vectors are linearly dependent");

    DiagonalReduction out;
    out.minima = reduce_basis(NormBallSpec(m), opts);
    out.height_product = Rational(1);
    for (const auto& beta : out.minima.reduced) {
        Rational s(0);
        for (std::size_t i = 0; i < beta.dim(); ++i)
            s += beta[i];
        if (s != 0)
            throw InternalFault("reduced point left the diagonal subspace");
        // On the diagonal the Schinzel norm is half the l1 norm, so twice
        // the norm is exactly the l1 norm.
        if (2 * schinzel_norm(beta) != l1_norm(beta))
            throw InternalFault("diagonal norm identity failed");
        out.height_product *= l1_norm(beta);
    }
    out.index_bound = factorial(static_cast<unsigned>(m.cols()));
    return out;
}

VolumeReport reisner_minkowski_report(const NormBallSpec& spec, const LatticeOptions& opts) {
    const std::size_t l = spec.grade();
    const Rational lf(factorial(static_cast<unsigned>(l)));
    VolumeReport rep;
    rep.dual_volume = dual_volume(spec);
    rep.reisner_lhs = Rational(int_pow(Integer(4), static_cast<unsigned>(l))) / lf;
    rep.minkowski_low = Rational(int_pow(Integer(2), static_cast<unsigned>(l))) / lf;
    rep.minkowski_high = Rational(int_pow(Integer(2), static_cast<unsigned>(l)));
    if (l <= 3) {
        rep.primal_volume = primal_volume(spec);
        rep.reisner_ok = rep.reisner_lhs <= *rep.primal_volume * rep.dual_volume;
        const MinimaResult minima = successive_minima(spec, opts);
        Rational lambda_product(1);
        for (const auto& lam : minima.lambdas)
            lambda_product *= lam;
        const Rational scaled = *rep.primal_volume * lambda_product;
        rep.minkowski_ok = rep.minkowski_low <= scaled && scaled <= rep.minkowski_high;
        if (!*rep.reisner_ok)
            throw InternalFault("volume product fell below the Reisner bound");
        if (!*rep.minkowski_ok)
            throw InternalFault("lambda-volume product left the Minkowski range");
    }
    return rep;
}

} // namespace wedgecert

#include "wedgecert/extreme.hpp"

#include <tuple>

namespace wedgecert {

ExtremePoint::ExtremePoint(Kind k, int m, int n, int ambient)
    : kind_(k), m_(m), n_(n), ambient_(ambient) {
    if (ambient < 1)
        throw DomainError("extreme point needs a positive ambient dimension");
    if (m < 1 || m > ambient)
        throw DomainError("extreme point index out of range");
    if (k == Kind::Difference) {
        if (n < 1 || n > ambient)
            throw DomainError("extreme point index out of range");
        if (n == m)
            throw DomainError("difference point needs distinct indices");
    }
}

ExtremePoint ExtremePoint::plus_unit(int m, int ambient) {
    return ExtremePoint(Kind::PlusUnit, m, 0, ambient);
}

ExtremePoint ExtremePoint::minus_unit(int m, int ambient) {
    return ExtremePoint(Kind::MinusUnit, m, 0, ambient);
}

ExtremePoint ExtremePoint::difference(int m, int n, int ambient) {
    return ExtremePoint(Kind::Difference, m, n, ambient);
}

std::vector<std::pair<int, int>> ExtremePoint::support() const {
    switch (kind_) {
    case Kind::PlusUnit:
        return {{m_, 1}};
    case Kind::MinusUnit:
        return {{m_, -1}};
    case Kind::Difference:
        return {{m_, 1}, {n_, -1}};
    }
    return {};
}

std::string ExtremePoint::str() const {
    switch (kind_) {
    case Kind::PlusUnit:
        return "+e" + std::to_string(m_);
    case Kind::MinusUnit:
        return "-e" + std::to_string(m_);
    case Kind::Difference:
        return "e" + std::to_string(m_) + "-e" + std::to_string(n_);
    }
    return {};
}

namespace {

// (block, m, n) with units in block 0 ordered +e1, -e1, +e2, ...
std::tuple<int, int, int> order_key(const ExtremePoint& p) {
    switch (p.kind()) {
    case ExtremePoint::Kind::PlusUnit:
        return {0, p.m(), 0};
    case ExtremePoint::Kind::MinusUnit:
        return {0, p.m(), 1};
    case ExtremePoint::Kind::Difference:
        return {1, p.m(), p.n()};
    }
    return {2, 0, 0};
}

} // namespace

bool operator<(const ExtremePoint& a, const ExtremePoint& b) {
    return order_key(a) < order_key(b);
}

bool operator==(const ExtremePoint& a, const ExtremePoint& b) {
    return a.kind_ == b.kind_ && a.m_ == b.m_ && a.n_ == b.n_ && a.ambient_ == b.ambient_;
}

RationalVector ConvexCombination::reconstruct(int ambient) const {
    RationalVector x(static_cast<std::size_t>(ambient));
    for (const auto& [coeff, point] : terms)
        for (const auto& [row, sign] : point.support())
            x[static_cast<std::size_t>(row) - 1] += sign > 0 ? coeff : Rational(-coeff);
    return x;
}

Rational ConvexCombination::coefficient_sum() const {
    Rational s(0);
    for (const auto& [coeff, point] : terms)
        s += coeff;
    return s;
}

std::vector<ExtremePoint> enumerate_extreme_points(int n) {
    if (n < 2)
        throw DomainError("extreme point enumeration needs dimension >= 2");
    std::vector<ExtremePoint> out;
    out.reserve(static_cast<std::size_t>(n) * (n + 1));
    for (int m = 1; m <= n; ++m) {
        out.push_back(ExtremePoint::plus_unit(m, n));
        out.push_back(ExtremePoint::minus_unit(m, n));
    }
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k)
            if (k != m)
                out.push_back(ExtremePoint::difference(m, k, n));
    return out;
}

RationalVector embed(const ExtremePoint& p) {
    RationalVector x(static_cast<std::size_t>(p.ambient()));
    for (const auto& [row, sign] : p.support())
        x[static_cast<std::size_t>(row) - 1] = Rational(sign);
    return x;
}

std::optional<ExtremePoint> restrict_point(const ExtremePoint& p, const SubsetIndex& i) {
    if (i.size() == 0)
        throw PreconditionError("restriction subset must be nonempty");
    if (i.max_member() > p.ambient())
        throw PreconditionError("restriction subset exceeds ambient dimension");
    const int dim = static_cast<int>(i.size());
    auto position = [&](int member) {
        for (std::size_t k = 0; k < i.size(); ++k)
            if (i[k] == member)
                return static_cast<int>(k) + 1;
        return 0;
    };
    const bool has_m = i.contains(p.m());
    if (p.kind() != ExtremePoint::Kind::Difference) {
        if (!has_m)
            return std::nullopt;
        return p.kind() == ExtremePoint::Kind::PlusUnit
                   ? ExtremePoint::plus_unit(position(p.m()), dim)
                   : ExtremePoint::minus_unit(position(p.m()), dim);
    }
    const bool has_n = i.contains(p.n());
    if (has_m && has_n)
        return ExtremePoint::difference(position(p.m()), position(p.n()), dim);
    if (has_m)
        return ExtremePoint::plus_unit(position(p.m()), dim);
    if (has_n)
        return ExtremePoint::minus_unit(position(p.n()), dim);
    return std::nullopt;
}

ConvexCombination convex_decompose(const RationalVector& x) {
    if (schinzel_norm(x) != 1)
        throw PreconditionError("convex decomposition needs a boundary point (norm exactly 1)");
    const int n = static_cast<int>(x.dim());
    Rational sigma_pos(0), sigma_neg(0);
    std::vector<Rational> pos(x.dim()), neg(x.dim());
    for (std::size_t k = 0; k < x.dim(); ++k) {
        if (x[k] > 0) {
            pos[k] = x[k];
            sigma_pos += x[k];
        } else if (x[k] < 0) {
            neg[k] = -x[k];
            sigma_neg -= x[k];
        }
    }
    ConvexCombination out;
    const Rational unit_pos_scale = Rational(1) - sigma_neg;
    const Rational unit_neg_scale = Rational(1) - sigma_pos;
    for (int m = 1; m <= n; ++m) {
        const Rational c = unit_pos_scale * pos[static_cast<std::size_t>(m) - 1];
        if (c != 0)
            out.terms.emplace_back(c, ExtremePoint::plus_unit(m, n));
    }
    for (int k = 1; k <= n; ++k) {
        const Rational c = unit_neg_scale * neg[static_cast<std::size_t>(k) - 1];
        if (c != 0)
            out.terms.emplace_back(c, ExtremePoint::minus_unit(k, n));
    }
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k) {
            if (k == m)
                continue;
            const Rational c =
                pos[static_cast<std::size_t>(m) - 1] * neg[static_cast<std::size_t>(k) - 1];
            if (c != 0)
                out.terms.emplace_back(c, ExtremePoint::difference(m, k, n));
        }
    if (out.coefficient_sum() != 1)
        throw InternalFault("convex decomposition coefficients do not sum to 1");
    if (!(out.reconstruct(n) == x))
        throw InternalFault("convex decomposition does not reconstruct its input");
    return out;
}

std::optional<ExtremePoint> parse_extreme_point(const std::string& token, int ambient) {
    auto parse_index = [](const std::string& s) -> int {
        if (s.size() < 2 || s[0] != 'e')
            return 0;
        for (std::size_t k = 1; k < s.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(s[k])))
                return 0;
        return std::stoi(s.substr(1));
    };
    try {
        if (!token.empty() && (token[0] == '+' || token[0] == '-')) {
            const int m = parse_index(token.substr(1));
            if (m == 0)
                return std::nullopt;
            return token[0] == '+' ? ExtremePoint::plus_unit(m, ambient)
                                   : ExtremePoint::minus_unit(m, ambient);
        }
        if (auto dash = token.find('-'); dash != std::string::npos) {
            const int m = parse_index(token.substr(0, dash));
            const int n = parse_index(token.substr(dash + 1));
            if (m == 0 || n == 0)
                return std::nullopt;
            return ExtremePoint::difference(m, n, ambient);
        }
    } catch (const DomainError&) {
        return std::nullopt;
    }
    return std::nullopt;
}

} // namespace wedgecert

#include "wedgecert/sunit.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "wedgecert/mu.hpp"

namespace wedgecert {

const UnitLogRecord& EmbeddingTable::find(const std::string& label) const {
    for (const auto& u : units)
        if (u.label == label)
            return u;
    throw PreconditionError("no unit labeled '" + label + "' in the table");
}

EmbeddingTable parse_embedding(std::istream& in, double tolerance) {
    if (tolerance < 0)
        throw DomainError("tolerance must be nonnegative");
    EmbeddingTable table;
    table.tolerance = tolerance;
    bool have_degree = false;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream is(line);
        std::string head;
        if (!(is >> head) || head.front() == '#')
            continue;
        if (head == "degree") {
            if (!(is >> table.global_degree) || table.global_degree < 1)
                throw ParseError("expected a positive global degree", lineno);
            have_degree = true;
        } else if (head == "places") {
            std::string tok;
            while (is >> tok) {
                auto colon = tok.find(':');
                if (colon == std::string::npos)
                    throw ParseError("place token '" + tok + "' is not id:degree", lineno);
                PlaceRecord rec;
                rec.place_id = tok.substr(0, colon);
                try {
                    rec.local_degree = std::stoi(tok.substr(colon + 1));
                } catch (const std::exception&) {
                    throw ParseError("bad local degree in '" + tok + "'", lineno);
                }
                if (rec.place_id.empty() || rec.local_degree < 1)
                    throw ParseError("bad place token '" + tok + "'", lineno);
                for (const auto& other : table.places)
                    if (other.place_id == rec.place_id)
                        throw ParseError("duplicate place id '" + rec.place_id + "'", lineno);
                table.places.push_back(std::move(rec));
            }
            if (table.places.empty())
                throw ParseError("empty place list", lineno);
        } else if (head == "unit") {
            if (table.places.empty())
                throw ParseError("unit record before the place list", lineno);
            UnitLogRecord rec;
            if (!(is >> rec.label))
                throw ParseError("unit record without a label", lineno);
            double v = 0.0;
            while (is >> v)
                rec.logs.push_back(v);
            if (!is.eof())
                throw ParseError("bad log value for unit '" + rec.label + "'", lineno);
            if (rec.logs.size() != table.places.size())
                throw ParseError("unit '" + rec.label + "' has " +
                                     std::to_string(rec.logs.size()) + " logs for " +
                                     std::to_string(table.places.size()) + " places",
                                 lineno);
            double residual = 0.0;
            for (double x : rec.logs)
                residual += x;
            if (std::abs(residual) > tolerance) {
                std::ostringstream os;
                os << "unit '" << rec.label << "' violates the product formula: residual "
                   << residual << " exceeds tolerance " << tolerance;
                throw PreconditionError(os.str());
            }
            for (const auto& other : table.units)
                if (other.label == rec.label)
                    throw ParseError("duplicate unit label '" + rec.label + "'", lineno);
            table.units.push_back(std::move(rec));
        } else {
            throw ParseError("unknown record '" + head + "'", lineno);
        }
    }
    if (!have_degree)
        throw ParseError("missing 'degree' header");
    if (table.places.empty())
        throw ParseError("missing 'places' record");
    return table;
}

EmbeddingTable load_embedding(const std::string& path, double tolerance) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open embedding table '" + path + "'");
    return parse_embedding(in, tolerance);
}

double unit_height(const UnitLogRecord& u, int global_degree) {
    if (global_degree < 1)
        throw DomainError("global degree must be positive");
    double l1 = 0.0;
    for (double x : u.logs)
        l1 += std::abs(x);
    return l1 / (2.0 * global_degree);
}

double float_wedge_l1(const std::vector<std::vector<double>>& columns) {
    if (columns.empty())
        throw PreconditionError("need at least one column");
    const std::size_t n = columns.front().size();
    const std::size_t q = columns.size();
    for (const auto& c : columns)
        if (c.size() != n)
            throw DimensionError("columns have mixed dimensions");
    if (q > n)
        throw DimensionError("more columns than rows");

    // Gaussian elimination with partial pivoting per row subset.
    std::vector<std::size_t> idx(q);
    double total = 0.0;
    auto det_of = [&](const std::vector<std::size_t>& rows) {
        std::vector<double> a(q * q);
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = 0; j < q; ++j)
                a[i * q + j] = columns[j][rows[i]];
        double det = 1.0;
        for (std::size_t k = 0; k < q; ++k) {
            std::size_t p = k;
            for (std::size_t i = k + 1; i < q; ++i)
                if (std::abs(a[i * q + k]) > std::abs(a[p * q + k]))
                    p = i;
            if (a[p * q + k] == 0.0)
                return 0.0;
            if (p != k) {
                for (std::size_t j = 0; j < q; ++j)
                    std::swap(a[p * q + j], a[k * q + j]);
                det = -det;
            }
            det *= a[k * q + k];
            for (std::size_t i = k + 1; i < q; ++i) {
                const double f = a[i * q + k] / a[k * q + k];
                for (std::size_t j = k; j < q; ++j)
                    a[i * q + j] -= f * a[k * q + j];
            }
        }
        return det;
    };
    auto combos = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
        if (depth == q) {
            total += std::abs(det_of(idx));
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            idx[depth] = i;
            self(self, depth + 1, i + 1);
        }
    };
    combos(combos, 0, 0);
    return total;
}

namespace {

std::vector<std::vector<double>> collect_columns(const EmbeddingTable& table,
                                                 const std::vector<std::string>& labels) {
    std::vector<std::vector<double>> cols;
    cols.reserve(labels.size());
    for (const auto& label : labels)
        cols.push_back(table.find(label).logs);
    return cols;
}

double product_l1(const std::vector<std::vector<double>>& cols) {
    double prod = 1.0;
    for (const auto& c : cols) {
        double l1 = 0.0;
        for (double x : c)
            l1 += std::abs(x);
        prod *= l1;
    }
    return prod;
}

} // namespace

RegulatorResult regulator_from_basis(const EmbeddingTable& table,
                                     const std::vector<std::string>& labels,
                                     double dependence_threshold) {
    const int r = table.rank();
    if (r < 1)
        throw PreconditionError("table has rank 0; no regulator to compute");
    if (static_cast<int>(labels.size()) != r)
        throw PreconditionError("need exactly " + std::to_string(r) + " basis units, got " +
                                std::to_string(labels.size()));
    const auto cols = collect_columns(table, labels);
    RegulatorResult out;
    out.wedge_l1 = float_wedge_l1(cols);
    out.product_l1 = product_l1(cols);
    out.relative_scale = out.product_l1 > 0.0 ? out.wedge_l1 / out.product_l1 : 0.0;
    if (out.wedge_l1 <= dependence_threshold * out.product_l1)
        throw PreconditionError("chosen units are numerically dependent: wedge l1 " +
                                std::to_string(out.wedge_l1));
    out.regulator = out.wedge_l1 / (r + 1);
    return out;
}

Integer subgroup_index(const std::vector<std::vector<Integer>>& b) {
    const std::size_t n = b.size();
    if (n == 0)
        throw DimensionError("index of an empty matrix");
    for (const auto& row : b)
        if (row.size() != n)
            throw DimensionError("index needs a square matrix");

    // Fraction-free integer elimination.
    std::vector<Integer> a;
    a.reserve(n * n);
    for (const auto& row : b)
        for (const auto& v : row)
            a.push_back(v);
    auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * n + c]; };
    int sign = 1;
    Integer prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && at(p, k) == 0)
            ++p;
        if (p == n)
            throw DomainError("matrix is singular");
        if (p != k) {
            for (std::size_t j = k; j < n; ++j)
                std::swap(at(p, j), at(k, j));
            sign = -sign;
        }
        const Integer pivot = at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * pivot - at(i, k) * at(k, j)) / prev;
            at(i, k) = 0;
        }
        prev = pivot;
    }
    Integer det = at(n - 1, n - 1);
    if (det == 0)
        throw DomainError("matrix is singular");
    return det < 0 ? Integer(-det) : det;
}

ConjectureReport conjecture_report(const EmbeddingTable& table,
                                   const std::vector<std::string>& labels,
                                   double dependence_threshold) {
    if (labels.empty())
        throw PreconditionError("need at least one unit");
    const int r = table.rank();
    const int q = static_cast<int>(labels.size());
    if (q > r)
        throw DomainError("more units than the rank of the table");
    const auto cols = collect_columns(table, labels);

    ConjectureReport rep;
    rep.q = q;
    rep.r = r;
    rep.wedge_l1 = float_wedge_l1(cols);
    rep.product_l1 = product_l1(cols);
    if (rep.wedge_l1 <= dependence_threshold * rep.product_l1)
        throw PreconditionError("chosen units are numerically dependent");
    const double constant = to_double(c_bound(q, r)) / std::pow(2.0, static_cast<double>(q));
    rep.sandwich_rhs = constant * rep.product_l1;
    rep.wedge_over_product = rep.product_l1 > 0.0 ? rep.wedge_l1 / rep.product_l1 : 0.0;
    rep.sandwich_ok = rep.wedge_l1 <= rep.sandwich_rhs * (1.0 + 1e-9);
    rep.ratio_le_one = rep.wedge_over_product <= 1.0 + 1e-9;
    return rep;
}

} // namespace wedgecert

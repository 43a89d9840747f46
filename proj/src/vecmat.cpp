#include "wedgecert/vecmat.hpp"

#include <algorithm>
#include <sstream>

namespace wedgecert {

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& cols) {
    if (cols.empty())
        throw DimensionError("matrix needs at least one column");
    const std::size_t n = cols.front().dim();
    if (n == 0)
        throw DimensionError("matrix needs at least one row");
    for (const auto& c : cols)
        if (c.dim() != n)
            throw DimensionError("columns have mixed dimensions");
    RationalMatrix m(n, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, j) = cols[j][i];
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty())
        throw DimensionError("matrix needs at least one row");
    const std::size_t l = rows.front().size();
    if (l == 0)
        throw DimensionError("matrix needs at least one column");
    for (const auto& r : rows)
        if (r.size() != l)
            throw DimensionError("rows have mixed lengths");
    RationalMatrix m(rows.size(), l);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < l; ++j)
            m.at(i, j) = rows[i][j];
    return m;
}

RationalVector RationalMatrix::column(std::size_t c) const {
    std::vector<Rational> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = at(i, c);
    return RationalVector(std::move(v));
}

RationalVector RationalMatrix::row(std::size_t r) const {
    std::vector<Rational> v(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        v[j] = at(r, j);
    return RationalVector(std::move(v));
}

RationalMatrix RationalMatrix::select_rows(const std::vector<std::size_t>& row_idx) const {
    if (row_idx.empty())
        throw DimensionError("row selection must be nonempty");
    RationalMatrix m(row_idx.size(), cols_);
    for (std::size_t i = 0; i < row_idx.size(); ++i) {
        if (row_idx[i] >= rows_)
            throw DimensionError("row index out of range");
        for (std::size_t j = 0; j < cols_; ++j)
            m.at(i, j) = at(row_idx[i], j);
    }
    return m;
}

SubsetIndex::SubsetIndex(std::vector<int> members) : members_(std::move(members)) {
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i] < 1)
            throw DomainError("subset members are 1-based positive integers");
        if (i > 0 && members_[i] <= members_[i - 1])
            throw DomainError("subset members must be strictly increasing");
    }
}

bool SubsetIndex::contains(int m) const {
    return std::binary_search(members_.begin(), members_.end(), m);
}

std::string SubsetIndex::str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i)
            os << ',';
        os << members_[i];
    }
    os << '}';
    return os.str();
}

std::vector<SubsetIndex> SubsetIndex::all(int n, int k) {
    std::vector<SubsetIndex> out;
    if (k < 0 || k > n)
        return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i)
        cur[i] = i + 1;
    while (true) {
        out.emplace_back(cur);
        // advance to the next subset in lexicographic order
        int i = k - 1;
        while (i >= 0 && cur[i] == n - (k - 1 - i))
            --i;
        if (i < 0)
            break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    return out;
}

} // namespace wedgecert

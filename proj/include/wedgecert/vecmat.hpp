#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "wedgecert/rational.hpp"

namespace wedgecert {

class RationalVector {
public:
    RationalVector() = default;
    explicit RationalVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
    RationalVector(std::initializer_list<Rational> entries) : entries_(entries) {}
    explicit RationalVector(std::size_t dim) : entries_(dim, Rational(0)) {}

    std::size_t dim() const { return entries_.size(); }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    Rational& operator[](std::size_t i) { return entries_[i]; }

    const std::vector<Rational>& entries() const { return entries_; }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (e != 0)
                return false;
        return true;
    }

    friend bool operator==(const RationalVector& a, const RationalVector& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::vector<Rational> entries_;
};

// Column-major N x L matrix of exact rationals.  Treated as an immutable
// value: operations build fresh matrices.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}

    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {
        if (rows == 0 || cols == 0)
            throw DimensionError("matrix dimensions must be positive");
    }

    static RationalMatrix from_columns(const std::vector<RationalVector>& cols);
    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& at(std::size_t r, std::size_t c) const { return a_[c * rows_ + r]; }
    Rational& at(std::size_t r, std::size_t c) { return a_[c * rows_ + r]; }

    RationalVector column(std::size_t c) const;
    RationalVector row(std::size_t r) const;

    // Rows restricted to the 0-based index list, all columns kept.
    RationalMatrix select_rows(const std::vector<std::size_t>& row_idx) const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

// Strictly increasing 1-based index set I subseteq {1, ..., N}.
class SubsetIndex {
public:
    SubsetIndex() = default;
    explicit SubsetIndex(std::vector<int> members);

    std::size_t size() const { return members_.size(); }
    int operator[](std::size_t i) const { return members_[i]; }
    const std::vector<int>& members() const { return members_; }
    bool contains(int m) const;
    int max_member() const { return members_.empty() ? 0 : members_.back(); }

    std::string str() const; // "{1,3,4}"

    friend bool operator==(const SubsetIndex& a, const SubsetIndex& b) {
        return a.members_ == b.members_;
    }
    friend bool operator<(const SubsetIndex& a, const SubsetIndex& b) {
        return a.members_ < b.members_;
    }

    // All size-k subsets of {1,...,n} in lexicographic order.
    static std::vector<SubsetIndex> all(int n, int k);

private:
    std::vector<int> members_;
};

} // namespace wedgecert

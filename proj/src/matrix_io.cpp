#include "wedgecert/matrix_io.hpp"

#include <fstream>
#include <sstream>

namespace wedgecert {

namespace {

bool comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r')
            continue;
        return c == '#';
    }
    return true;
}

} // namespace

RationalMatrix read_matrix(std::istream& in) {
    std::vector<std::vector<Rational>> rows;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (comment_or_blank(line))
            continue;
        std::istringstream is(line);
        std::vector<Rational> row;
        std::string token;
        while (is >> token) {
            auto r = parse_rational(token);
            if (!r)
                throw ParseError("bad rational token '" + token + "'", lineno);
            row.push_back(std::move(*r));
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(rows.front().size()),
                             lineno);
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw ParseError("no matrix rows found");
    return RationalMatrix::from_rows(rows);
}

RationalMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open matrix file '" + path + "'");
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const RationalMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j)
                out << ' ';
            out << rational_str(m.at(i, j));
        }
        out << '\n';
    }
}

std::string matrix_str(const RationalMatrix& m) {
    std::ostringstream os;
    write_matrix(os, m);
    return os.str();
}

std::vector<std::pair<int, int>> read_pairs(std::istream& in) {
    std::vector<std::pair<int, int>> pairs;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (comment_or_blank(line))
            continue;
        std::istringstream is(line);
        int a = 0, b = 0;
        if (!(is >> a >> b))
            throw ParseError("expected two integers", lineno);
        std::string extra;
        if (is >> extra)
            throw ParseError("trailing token '" + extra + "'", lineno);
        pairs.emplace_back(a, b);
    }
    if (pairs.empty())
        throw ParseError("no pairs found");
    return pairs;
}

std::vector<std::pair<int, int>> read_pairs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open pair-system file '" + path + "'");
    return read_pairs(in);
}

} // namespace wedgecert

#pragma once

#include <string>
#include <vector>

#include "wedgecert/rational.hpp"

namespace wedgecert {

struct PlaceRecord {
    std::string place_id;
    int local_degree = 0;
};

// One unit's logarithmic embedding: the file stores d_v * log ||a||_v
// directly, one value per place.
struct UnitLogRecord {
    std::string label;
    std::vector<double> logs;
};

struct EmbeddingTable {
    std::vector<PlaceRecord> places;
    std::vector<UnitLogRecord> units;
    int global_degree = 0;
    double tolerance = 1e-9; // product-formula residual bound

    int rank() const { return static_cast<int>(places.size()) - 1; }
    const UnitLogRecord& find(const std::string& label) const;
};

struct RegulatorResult {
    double regulator = 0.0;
    double wedge_l1 = 0.0;
    double product_l1 = 0.0;     // product of the basis l1 norms
    double relative_scale = 0.0; // wedge_l1 / product_l1, the dependence measure
};

struct ConjectureReport {
    int q = 0;
    int r = 0;
    double wedge_l1 = 0.0;
    double product_l1 = 0.0;
    double sandwich_rhs = 0.0; // 2^{-q} C(q,r) * product
    double wedge_over_product = 0.0;
    bool sandwich_ok = false;
    bool ratio_le_one = false;
};

// Line-oriented table: "degree d", "places id:d_v ...", then one
// "unit label v1 ... v_{r+1}" per unit; '#' starts a comment line.
// Every unit must satisfy the product formula within the tolerance.
EmbeddingTable load_embedding(const std::string& path, double tolerance = 1e-9);
EmbeddingTable parse_embedding(std::istream& in, double tolerance = 1e-9);

// l1 norm of the log vector divided by twice the global degree.
double unit_height(const UnitLogRecord& u, int global_degree);

// The wedge l1 norm of r chosen units divided by r + 1.  Near-dependent
// bases (wedge below threshold * product) are rejected.
RegulatorResult regulator_from_basis(const EmbeddingTable& table,
                                     const std::vector<std::string>& labels,
                                     double dependence_threshold = 1e-9);

// |det B| for a nonsingular integer matrix.
Integer subgroup_index(const std::vector<std::vector<Integer>>& b);

// Reports the exterior-product and height-product statistics for q chosen
// units without asserting anything beyond the proven sandwich.
ConjectureReport conjecture_report(const EmbeddingTable& table,
                                   const std::vector<std::string>& labels,
                                   double dependence_threshold = 1e-9);

// Sum over all size-q row subsets of |det| of the chosen submatrix,
// evaluated in floating point.
double float_wedge_l1(const std::vector<std::vector<double>>& columns);

} // namespace wedgecert

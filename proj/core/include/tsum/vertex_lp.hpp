#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tsum/rational.hpp"

namespace tsum::lp {

/// One linear constraint over variables x_0..x_{nvars-1}. Inequalities are in
/// the form terms . x <= rhs; callers normalize >= rows by negation.
struct Row {
    std::vector<std::pair<std::size_t, int>> terms;
    Rational rhs;
    bool is_equality = false;
};

struct VertexResult {
    std::vector<Rational> point;          // one coordinate per variable
    std::vector<std::size_t> basis_rows;  // nvars independent rows, tight at point
    std::uint64_t phase1_pivots = 0;
};

/// Finds a vertex (basic feasible point) of the polyhedron defined by `rows`,
/// which must be bounded. Equality rows must have rhs 0 (the Phase-I
/// relaxation starts from the origin). Returns nullopt when infeasible.
///
/// Method: single-artificial-variable Phase I (minimize the relaxation t with
/// Bland pivoting on an exactly maintained basis inverse), then a rank
/// completion walk to a vertex of the original polyhedron.
std::optional<VertexResult> find_vertex(std::size_t nvars, const std::vector<Row>& rows);

} // namespace tsum::lp

#include "tsum/vertex_lp.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace tsum::lp {

namespace {

using Vec = std::vector<mpq_class>;

struct WorkRow {
    std::vector<std::pair<std::size_t, int>> terms;
    mpq_class rhs;
    bool eq = false;
};

mpq_class eval(const WorkRow& row, const Vec& z) {
    mpq_class acc = 0;
    for (const auto& [var, coef] : row.terms) {
        if (coef == 1) {
            acc += z[var];
        } else if (coef == -1) {
            acc -= z[var];
        } else {
            acc += coef * z[var];
        }
    }
    return acc;
}

// Incremental reduced row echelon form over exact rationals; used to pick
// maximal independent subsets of tight rows and to produce null directions.
class Echelon {
public:
    explicit Echelon(std::size_t cols) : cols_(cols), is_pivot_(cols, false) {}

    std::size_t rank() const { return rows_.size(); }
    bool full() const { return rows_.size() == cols_; }

    // Returns true when the row is independent of everything stored so far.
    bool add(Vec row) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            mpq_class coef = row[pivot_[r]];
            if (coef != 0) {
                for (std::size_t c = 0; c < cols_; ++c) {
                    row[c] -= coef * rows_[r][c];
                }
            }
        }
        std::size_t p = 0;
        while (p < cols_ && row[p] == 0) ++p;
        if (p == cols_) {
            return false;
        }
        mpq_class head = row[p];
        for (std::size_t c = 0; c < cols_; ++c) {
            row[c] /= head;
        }
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            mpq_class coef = rows_[r][p];
            if (coef != 0) {
                for (std::size_t c = 0; c < cols_; ++c) {
                    rows_[r][c] -= coef * row[c];
                }
            }
        }
        rows_.push_back(std::move(row));
        pivot_.push_back(p);
        is_pivot_[p] = true;
        return true;
    }

    // Some nonzero d with E d = 0; requires rank < cols.
    Vec null_vector() const {
        std::size_t free_col = cols_;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!is_pivot_[c]) {
                free_col = c;
                break;
            }
        }
        if (free_col == cols_) {
            throw std::logic_error("null_vector on full-rank echelon");
        }
        Vec d(cols_, 0);
        d[free_col] = 1;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            d[pivot_[r]] = -rows_[r][free_col];
        }
        return d;
    }

private:
    std::size_t cols_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivot_;
    std::vector<bool> is_pivot_;
};

Vec dense_of(const WorkRow& row, std::size_t cols) {
    Vec out(cols, 0);
    for (const auto& [var, coef] : row.terms) {
        out[var] = coef;
    }
    return out;
}

// Seeds the echelon with a maximal independent subset of the rows tight at z,
// equalities first, then walks null directions until the tight set has full
// rank. Every step keeps z feasible; the walk is finite because the
// polyhedron is bounded and each step adds one independent row.
void crawl_to_vertex(const std::vector<WorkRow>& rows, std::size_t nvars, Vec& z,
                     Echelon& ech, std::vector<std::size_t>& basis) {
    std::vector<mpq_class> slack(rows.size());
    std::vector<bool> tight(rows.size());
    for (std::size_t q = 0; q < rows.size(); ++q) {
        slack[q] = rows[q].rhs - eval(rows[q], z);
        if (rows[q].eq && slack[q] != 0) {
            throw std::logic_error("vertex walk started off an equality row");
        }
        if (slack[q] < 0) {
            throw std::logic_error("vertex walk started from an infeasible point");
        }
        tight[q] = slack[q] == 0;
    }
    for (int pass = 0; pass < 2; ++pass) {
        // equalities on the first pass so dependent equalities stay spanned
        for (std::size_t q = 0; q < rows.size() && !ech.full(); ++q) {
            if (tight[q] && (rows[q].eq == (pass == 0))) {
                if (ech.add(dense_of(rows[q], nvars))) {
                    basis.push_back(q);
                }
            }
        }
    }

    std::vector<mpq_class> ad(rows.size());
    while (!ech.full()) {
        Vec d = ech.null_vector();
        bool moved = false;
        for (int attempt = 0; attempt < 2 && !moved; ++attempt) {
            bool found = false;
            mpq_class best_theta;
            std::size_t best_row = 0;
            for (std::size_t q = 0; q < rows.size(); ++q) {
                ad[q] = eval(rows[q], d);
                if (rows[q].eq || ad[q] <= 0) {
                    continue; // moving along d cannot violate this row
                }
                mpq_class theta = slack[q] / ad[q];
                if (!found || theta < best_theta) {
                    found = true;
                    best_theta = theta;
                    best_row = q;
                }
            }
            if (!found) {
                for (auto& v : d) v = -v;
                continue; // bounded polyhedron: the other direction blocks
            }
            if (best_theta != 0) {
                for (std::size_t v = 0; v < nvars; ++v) {
                    if (d[v] != 0) z[v] += best_theta * d[v];
                }
                for (std::size_t q = 0; q < rows.size(); ++q) {
                    if (ad[q] != 0) slack[q] -= best_theta * ad[q];
                }
            }
            if (!ech.add(dense_of(rows[best_row], nvars))) {
                throw std::logic_error("blocking row dependent on tight set");
            }
            basis.push_back(best_row);
            moved = true;
        }
        if (!moved) {
            throw std::logic_error("vertex walk found an unbounded direction");
        }
    }
}

} // namespace

std::optional<VertexResult> find_vertex(std::size_t nvars, const std::vector<Row>& rows) {
    for (const auto& row : rows) {
        if (row.is_equality && sgn(row.rhs.mpq()) != 0) {
            throw std::invalid_argument("find_vertex requires equality rows through the origin");
        }
    }

    // Relaxed system over (x, t): inequalities violated at the origin get a
    // -t term, so (0, 1) is feasible. Phase I drives t to 0.
    const std::size_t tvar = nvars;
    const std::size_t ntot = nvars + 1;
    std::vector<WorkRow> relaxed;
    relaxed.reserve(rows.size() + 2);
    for (const auto& row : rows) {
        WorkRow w;
        w.terms = row.terms;
        w.rhs = row.rhs.mpq();
        w.eq = row.is_equality;
        if (!w.eq && w.rhs < 0) {
            w.terms.emplace_back(tvar, -1);
        }
        relaxed.push_back(std::move(w));
    }
    relaxed.push_back({{{tvar, 1}}, mpq_class(1), false});  // t <= 1
    relaxed.push_back({{{tvar, -1}}, mpq_class(0), false}); // t >= 0

    Vec z(ntot, 0);
    z[tvar] = 1;

    Echelon ech(ntot);
    std::vector<std::size_t> basis;
    crawl_to_vertex(relaxed, ntot, z, ech, basis);

    // Basis inverse, maintained exactly across pivots; binv[v][slot] with
    // B . binv = I where row `slot` of B is the normal of basis row `slot`.
    std::vector<Vec> binv(ntot, Vec(ntot, 0));
    {
        std::vector<Vec> aug(ntot, Vec(2 * ntot, 0));
        for (std::size_t slot = 0; slot < ntot; ++slot) {
            Vec dense = dense_of(relaxed[basis[slot]], ntot);
            for (std::size_t c = 0; c < ntot; ++c) aug[slot][c] = dense[c];
            aug[slot][ntot + slot] = 1;
        }
        for (std::size_t col = 0; col < ntot; ++col) {
            std::size_t piv = col;
            while (piv < ntot && aug[piv][col] == 0) ++piv;
            if (piv == ntot) {
                throw std::logic_error("basis matrix singular");
            }
            std::swap(aug[col], aug[piv]);
            mpq_class head = aug[col][col];
            for (std::size_t c = 0; c < 2 * ntot; ++c) aug[col][c] /= head;
            for (std::size_t r = 0; r < ntot; ++r) {
                if (r == col) continue;
                mpq_class coef = aug[r][col];
                if (coef == 0) continue;
                for (std::size_t c = 0; c < 2 * ntot; ++c) {
                    aug[r][c] -= coef * aug[col][c];
                }
            }
        }
        for (std::size_t v = 0; v < ntot; ++v) {
            for (std::size_t slot = 0; slot < ntot; ++slot) {
                binv[v][slot] = aug[v][ntot + slot];
            }
        }
    }

    std::vector<mpq_class> slack(relaxed.size());
    for (std::size_t q = 0; q < relaxed.size(); ++q) {
        slack[q] = relaxed[q].rhs - eval(relaxed[q], z);
    }
    std::vector<bool> in_basis(relaxed.size(), false);
    for (std::size_t slot = 0; slot < ntot; ++slot) in_basis[basis[slot]] = true;

    std::uint64_t pivots = 0;
    constexpr std::uint64_t kPivotCap = 2'000'000;
    std::vector<mpq_class> ad(relaxed.size());
    while (z[tvar] != 0) {
        // Multipliers for the objective min t: y = row tvar of the inverse.
        // Bland: leave at the lowest-index inequality row with y > 0.
        std::size_t leave_slot = ntot;
        std::size_t leave_row = relaxed.size();
        for (std::size_t slot = 0; slot < ntot; ++slot) {
            if (relaxed[basis[slot]].eq) continue;
            if (binv[tvar][slot] > 0 && basis[slot] < leave_row) {
                leave_row = basis[slot];
                leave_slot = slot;
            }
        }
        if (leave_slot == ntot) {
            return std::nullopt; // optimal with t > 0: the system is infeasible
        }

        Vec d(ntot);
        for (std::size_t v = 0; v < ntot; ++v) d[v] = -binv[v][leave_slot];

        // Ratio test; the t >= 0 row always blocks, so theta is finite.
        bool found = false;
        mpq_class best_theta;
        std::size_t enter_row = 0;
        for (std::size_t q = 0; q < relaxed.size(); ++q) {
            ad[q] = eval(relaxed[q], d);
            if (in_basis[q] || relaxed[q].eq || ad[q] <= 0) continue;
            mpq_class theta = slack[q] / ad[q];
            if (!found || theta < best_theta || (theta == best_theta && q < enter_row)) {
                found = true;
                best_theta = theta;
                enter_row = q;
            }
        }
        if (!found) {
            throw std::logic_error("phase 1 ratio test found no blocking row");
        }

        if (best_theta != 0) {
            for (std::size_t v = 0; v < ntot; ++v) {
                if (d[v] != 0) z[v] += best_theta * d[v];
            }
            for (std::size_t q = 0; q < relaxed.size(); ++q) {
                if (ad[q] != 0) slack[q] -= best_theta * ad[q];
            }
        }

        // Rank-one update of the inverse for the basis row replacement.
        Vec col(ntot);
        for (std::size_t v = 0; v < ntot; ++v) col[v] = binv[v][leave_slot];
        Vec rowv(ntot, 0);
        const auto accumulate = [&](const WorkRow& r, int sign) {
            for (const auto& [var, coef] : r.terms) {
                mpq_class c = sign * coef;
                for (std::size_t slot = 0; slot < ntot; ++slot) {
                    if (binv[var][slot] != 0) rowv[slot] += c * binv[var][slot];
                }
            }
        };
        accumulate(relaxed[enter_row], 1);
        accumulate(relaxed[basis[leave_slot]], -1);
        mpq_class denom = 1 + rowv[leave_slot];
        if (denom == 0) {
            throw std::logic_error("entering row dependent on basis");
        }
        for (std::size_t v = 0; v < ntot; ++v) {
            if (col[v] == 0) continue;
            mpq_class f = col[v] / denom;
            for (std::size_t slot = 0; slot < ntot; ++slot) {
                if (rowv[slot] != 0) binv[v][slot] -= f * rowv[slot];
            }
        }
        in_basis[basis[leave_slot]] = false;
        in_basis[enter_row] = true;
        basis[leave_slot] = enter_row;

        if (++pivots > kPivotCap) {
            throw std::logic_error("phase 1 pivot cap exceeded");
        }
    }

    // t reached 0: x is feasible for the original rows. Walk to a vertex of
    // the original polyhedron and report the tight basis there.
    std::vector<WorkRow> original;
    original.reserve(rows.size());
    for (const auto& row : rows) {
        original.push_back({row.terms, mpq_class(row.rhs.mpq()), row.is_equality});
    }
    Vec x(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(nvars));
    for (std::size_t q = 0; q < original.size(); ++q) {
        mpq_class lhs = eval(original[q], x);
        if (original[q].eq ? lhs != original[q].rhs : lhs > original[q].rhs) {
            throw std::logic_error("phase 1 result violates an original row");
        }
    }
    Echelon ech2(nvars);
    std::vector<std::size_t> basis2;
    crawl_to_vertex(original, nvars, x, ech2, basis2);
    std::sort(basis2.begin(), basis2.end());

    VertexResult result;
    result.point.reserve(nvars);
    for (std::size_t v = 0; v < nvars; ++v) {
        result.point.emplace_back(x[v]);
    }
    result.basis_rows = std::move(basis2);
    result.phase1_pivots = pivots;
    return result;
}

} // namespace tsum::lp

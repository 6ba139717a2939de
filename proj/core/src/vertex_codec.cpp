#include "tsum/vertex_codec.hpp"

#include <stdexcept>

#include "tsum/bit_array.hpp"
#include "tsum/envelope.hpp"
#include "tsum/errors.hpp"
#include "tsum/table_codec.hpp"
#include "tsum/vertex_lp.hpp"

namespace tsum {

namespace {

BigInt box_bound(std::size_t n) {
    BigInt b;
    mpz_ui_pow_ui(b.get_mpz_t(), 2, 6 * static_cast<unsigned long>(n));
    return b;
}

std::size_t var_of(ArrayId arr, std::size_t n, std::size_t index) {
    return static_cast<std::size_t>(arr) * n + (index - 1);
}

// Translates a constraint into an LP row; inequalities normalized to <=.
lp::Row to_lp_row(const Constraint& c, std::size_t n, const Rational& box) {
    lp::Row row;
    switch (c.kind) {
        case ConstraintKind::Sign: {
            std::size_t xi = var_of(ArrayId::A, n, c.i);
            std::size_t yj = var_of(ArrayId::B, n, c.j);
            std::size_t zk = var_of(ArrayId::C, n, c.k);
            switch (c.rel) {
                case SignRelation::Eq:
                    row.terms = {{xi, 1}, {yj, 1}, {zk, 1}};
                    row.rhs = 0;
                    row.is_equality = true;
                    break;
                case SignRelation::Geq: // x+y+z >= 1  ->  -x-y-z <= -1
                    row.terms = {{xi, -1}, {yj, -1}, {zk, -1}};
                    row.rhs = -1;
                    break;
                case SignRelation::Leq: // x+y+z <= -1
                    row.terms = {{xi, 1}, {yj, 1}, {zk, 1}};
                    row.rhs = -1;
                    break;
            }
            break;
        }
        case ConstraintKind::Order: {
            std::size_t lo = var_of(c.array, n, c.i);
            row.terms = {{lo, 1}, {lo + 1, -1}};
            row.rhs = -1;
            break;
        }
        case ConstraintKind::Box: {
            std::size_t v = var_of(c.array, n, c.i);
            row.terms = {{v, c.j == 0 ? -1 : 1}};
            row.rhs = box;
            break;
        }
    }
    return row;
}

// The tight equality a constraint contributes to the decoded linear system.
void as_equality(const Constraint& c, std::size_t n, const Rational& box,
                 std::vector<std::pair<std::size_t, int>>& terms, Rational& rhs) {
    switch (c.kind) {
        case ConstraintKind::Sign: {
            terms = {{var_of(ArrayId::A, n, c.i), 1},
                     {var_of(ArrayId::B, n, c.j), 1},
                     {var_of(ArrayId::C, n, c.k), 1}};
            rhs = c.rel == SignRelation::Eq ? 0 : (c.rel == SignRelation::Geq ? 1 : -1);
            break;
        }
        case ConstraintKind::Order: {
            std::size_t lo = var_of(c.array, n, c.i);
            terms = {{lo, 1}, {lo + 1, -1}};
            rhs = Rational(-1);
            break;
        }
        case ConstraintKind::Box: {
            terms = {{var_of(c.array, n, c.i), 1}};
            rhs = c.j == 0 ? -box : box;
            break;
        }
    }
}

void check_constraint(const Constraint& c, std::size_t n) {
    auto bad = [&] { throw CorruptEncoding("constraint descriptor out of range"); };
    switch (c.kind) {
        case ConstraintKind::Sign:
            if (c.i < 1 || c.i > n || c.j < 1 || c.j > n || c.k < 1 || c.k > n) bad();
            if (static_cast<unsigned>(c.rel) > 2) bad();
            break;
        case ConstraintKind::Order:
            if (c.i < 1 || c.i + 1 > n || c.j != 0 || c.k != 0) bad();
            break;
        case ConstraintKind::Box:
            if (c.i < 1 || c.i > n || c.j > 1 || c.k != 0) bad();
            break;
        default:
            bad();
    }
}

IntegerInstance point_to_integer_instance(const std::vector<Rational>& point, std::size_t n) {
    // Scale by the least common multiple of the denominators.
    BigInt lcm = 1;
    for (const auto& v : point) {
        BigInt den = v.denominator();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    IntegerInstance out;
    out.a.reserve(n);
    out.b.reserve(n);
    out.c.reserve(n);
    for (std::size_t v = 0; v < 3 * n; ++v) {
        BigInt scaled = point[v].numerator() * (lcm / point[v].denominator());
        (v < n ? out.a : v < 2 * n ? out.b : out.c).push_back(std::move(scaled));
    }
    return out;
}

} // namespace

ConstraintSystem build_constraints(const Instance& inst) {
    auto th = pairwise_thresholds(inst);
    const std::size_t n = inst.n();
    ConstraintSystem sys;
    sys.n = n;
    for (std::uint32_t i = 1; i <= n; ++i) {
        for (std::uint32_t j = 1; j <= n; ++j) {
            std::uint32_t lt = th.lt(i, j);
            std::uint32_t gt = th.gt(i, j);
            if (lt >= 1) {
                sys.constraints.push_back({ConstraintKind::Sign, SignRelation::Leq, ArrayId::A, i, j, lt});
            }
            for (std::uint32_t k = lt + 1; k < gt; ++k) {
                sys.constraints.push_back({ConstraintKind::Sign, SignRelation::Eq, ArrayId::A, i, j, k});
            }
            if (gt <= n) {
                sys.constraints.push_back({ConstraintKind::Sign, SignRelation::Geq, ArrayId::A, i, j, gt});
            }
        }
    }
    for (int arr = 0; arr < 3; ++arr) {
        for (std::uint32_t i = 1; i + 1 <= n; ++i) {
            sys.constraints.push_back(
                {ConstraintKind::Order, SignRelation::Eq, static_cast<ArrayId>(arr), i, 0, 0});
        }
    }
    for (int arr = 0; arr < 3; ++arr) {
        for (std::uint32_t i = 1; i <= n; ++i) {
            for (std::uint32_t side = 0; side <= 1; ++side) {
                sys.constraints.push_back(
                    {ConstraintKind::Box, SignRelation::Eq, static_cast<ArrayId>(arr), i, side, 0});
            }
        }
    }
    return sys;
}

VertexSolution solve_vertex(const ConstraintSystem& sys) {
    const std::size_t n = sys.n;
    const Rational box{box_bound(n)};
    std::vector<lp::Row> rows;
    rows.reserve(sys.constraints.size());
    for (const auto& c : sys.constraints) {
        rows.push_back(to_lp_row(c, n, box));
    }
    auto res = lp::find_vertex(3 * n, rows);
    if (!res) {
        throw CorruptEncoding("infeasible constraint system: inconsistent sign thresholds");
    }
    VertexSolution sol;
    sol.point = std::move(res->point);
    sol.phase1_pivots = res->phase1_pivots;
    sol.basis.n = n;
    sol.basis.rows.reserve(res->basis_rows.size());
    for (std::size_t idx : res->basis_rows) {
        sol.basis.rows.push_back(sys.constraints[idx]);
    }
    return sol;
}

IntegerInstance round_to_integers(const Instance& inst) {
    auto sol = solve_vertex(build_constraints(inst));
    return point_to_integer_instance(sol.point, inst.n());
}

std::vector<std::uint8_t> encode_basis(const VertexBasis& basis) {
    const std::size_t n = basis.n;
    if (basis.rows.size() != 3 * n) {
        throw std::invalid_argument("vertex basis must have exactly 3n rows");
    }
    const unsigned w = bits_for(n + 2);
    BitWriter writer;
    for (const auto& c : basis.rows) {
        writer.put(static_cast<std::uint64_t>(c.kind), 2);
        writer.put(c.i, w);
        writer.put(c.j, w);
        writer.put(c.k, w);
        writer.put(c.kind == ConstraintKind::Sign ? static_cast<std::uint64_t>(c.rel)
                                                  : static_cast<std::uint64_t>(c.array),
                   2);
    }
    return envelope_seal(CodecId::Vertex, n, writer.bit_count(), writer.bytes());
}

IntegerInstance decode_basis(std::span<const std::uint8_t> bytes) {
    Payload p = envelope_open(bytes);
    if (p.codec != CodecId::Vertex) {
        throw CorruptEncoding("not a vertex encoding");
    }
    const std::size_t n = static_cast<std::size_t>(p.n);
    if (n == 0 || p.n > (1ull << 32)) {
        throw CorruptEncoding("vertex encoding with out-of-range n");
    }
    const unsigned w = bits_for(n + 2);
    unsigned __int128 expect = 3 * static_cast<unsigned __int128>(n) * (4 + 3ull * w);
    if (expect != p.bit_length) {
        throw CorruptEncoding("vertex payload bit length mismatch");
    }
    BitReader r(p.bytes, p.bit_length);
    std::vector<Constraint> rows;
    rows.reserve(3 * n);
    for (std::size_t d = 0; d < 3 * n; ++d) {
        Constraint c;
        std::uint64_t kind = r.get(2);
        if (kind > 2) {
            throw CorruptEncoding("constraint descriptor with reserved kind");
        }
        c.kind = static_cast<ConstraintKind>(kind);
        c.i = static_cast<std::uint32_t>(r.get(w));
        c.j = static_cast<std::uint32_t>(r.get(w));
        c.k = static_cast<std::uint32_t>(r.get(w));
        std::uint64_t rel = r.get(2);
        if (rel > 2) {
            throw CorruptEncoding("constraint descriptor with reserved relation");
        }
        if (c.kind == ConstraintKind::Sign) {
            c.rel = static_cast<SignRelation>(rel);
        } else {
            c.array = static_cast<ArrayId>(rel);
        }
        check_constraint(c, n);
        rows.push_back(c);
    }

    // Solve the 3n x 3n tight system exactly by Gaussian elimination.
    const std::size_t dim = 3 * n;
    const Rational box{box_bound(n)};
    std::vector<std::vector<mpq_class>> aug(dim, std::vector<mpq_class>(dim + 1, 0));
    for (std::size_t row = 0; row < dim; ++row) {
        std::vector<std::pair<std::size_t, int>> terms;
        Rational rhs;
        as_equality(rows[row], n, box, terms, rhs);
        for (const auto& [var, coef] : terms) {
            aug[row][var] = coef;
        }
        aug[row][dim] = rhs.mpq();
    }
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t piv = col;
        while (piv < dim && aug[piv][col] == 0) ++piv;
        if (piv == dim) {
            throw CorruptEncoding("vertex basis is singular");
        }
        std::swap(aug[col], aug[piv]);
        mpq_class head = aug[col][col];
        for (std::size_t c2 = col; c2 <= dim; ++c2) aug[col][c2] /= head;
        for (std::size_t r2 = 0; r2 < dim; ++r2) {
            if (r2 == col) continue;
            mpq_class coef = aug[r2][col];
            if (coef == 0) continue;
            for (std::size_t c2 = col; c2 <= dim; ++c2) {
                aug[r2][c2] -= coef * aug[col][c2];
            }
        }
    }
    std::vector<Rational> point;
    point.reserve(dim);
    for (std::size_t v = 0; v < dim; ++v) {
        point.emplace_back(mpq_class(aug[v][dim]));
    }
    IntegerInstance out = point_to_integer_instance(point, n);
    auto report = validate(out.to_rational());
    if (!report.ok()) {
        throw CorruptEncoding("decoded vertex is not a valid instance: " +
                              report.violations.front().message);
    }
    return out;
}

VertexEncoding VertexEncoding::build(const Instance& inst) {
    auto sol = solve_vertex(build_constraints(inst));
    VertexEncoding enc;
    enc.n_ = inst.n();
    enc.bytes_ = encode_basis(sol.basis);
    enc.decoded_ = std::make_shared<const IntegerInstance>(decode_basis(enc.bytes_));
    return enc;
}

VertexEncoding VertexEncoding::open(std::span<const std::uint8_t> bytes) {
    VertexEncoding enc;
    enc.bytes_.assign(bytes.begin(), bytes.end());
    enc.decoded_ = std::make_shared<const IntegerInstance>(decode_basis(enc.bytes_));
    enc.n_ = enc.decoded_->n();
    return enc;
}

std::uint64_t VertexEncoding::payload_bits() const {
    const unsigned w = bits_for(n_ + 2);
    return 3ull * n_ * (4 + 3ull * w);
}

Sign VertexEncoding::query(std::size_t i, std::size_t j, std::size_t k) const {
    const auto& inst = *decoded_;
    const std::size_t n = inst.n();
    if (i < 1 || i > n || j < 1 || j > n || k < 1 || k > n) {
        throw std::out_of_range("query index out of range");
    }
    BigInt sum = inst.a[i - 1] + inst.b[j - 1];
    sum += inst.c[k - 1];
    return sign_of_cmp(sgn(sum));
}

} // namespace tsum

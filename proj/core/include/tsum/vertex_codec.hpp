#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "tsum/instance.hpp"
#include "tsum/sign.hpp"

namespace tsum {

enum class ConstraintKind : std::uint8_t { Sign = 0, Order = 1, Box = 2 };

/// Relation code of a Sign constraint: sum >= +1, sum = 0, sum <= -1.
enum class SignRelation : std::uint8_t { Geq = 0, Eq = 1, Leq = 2 };

enum class ArrayId : std::uint8_t { A = 0, B = 1, C = 2 };

/// One row of the shrunken-cell system over variables
/// (x_1..x_n, y_1..y_n, z_1..z_n):
///   Sign(i,j,k,rel):  x_i + y_j + z_k  rel-of {>=1, =0, <=-1}
///   Order(arr,i):     v_i - v_{i+1} <= -1          (strict order, unit slack)
///   Box(arr,i,side):  -v_i <= 2^{6n} (side 0) or v_i <= 2^{6n} (side 1)
/// Wire form: 2-bit kind, three index fields of ceil(log2(n+2)) bits, 2-bit
/// relation code. Order/Box store (i, side, 0) and carry the array id in the
/// relation field; unused fields are zero.
struct Constraint {
    ConstraintKind kind = ConstraintKind::Sign;
    SignRelation rel = SignRelation::Eq; // Sign rows only
    ArrayId array = ArrayId::A;          // Order/Box rows only
    std::uint32_t i = 0;
    std::uint32_t j = 0;                 // Box: side (0 lower, 1 upper)
    std::uint32_t k = 0;
};

struct ConstraintSystem {
    std::size_t n = 0;
    std::vector<Constraint> constraints;
};

/// Emits, per pair (i,j), the zero equalities plus the two tightest
/// inequalities (at k_lt and k_gt, clipped at the sentinels); together with
/// the order rows these imply all n^3 sign constraints. Box rows make the
/// polyhedron bounded so a vertex always exists.
ConstraintSystem build_constraints(const Instance& inst);

/// Exactly 3n linearly independent constraints tight at one vertex.
struct VertexBasis {
    std::size_t n = 0;
    std::vector<Constraint> rows;
};

struct VertexSolution {
    std::vector<Rational> point; // 3n coordinates: x then y then z
    VertexBasis basis;
    std::uint64_t phase1_pivots = 0;
};

/// Finds a vertex of the system's polyhedron with exact rational pivoting
/// (Phase-I feasibility, Bland's rule) and extracts a full-rank tight basis.
/// Throws CorruptEncoding when the system is infeasible.
VertexSolution solve_vertex(const ConstraintSystem& sys);

/// Vertex point scaled by the least common denominator: an equivalent
/// integer instance with values of bit length O(n).
IntegerInstance round_to_integers(const Instance& inst);

std::vector<std::uint8_t> encode_basis(const VertexBasis& basis);

/// Rebuilds the 3n x 3n tight system from the descriptors, solves it exactly
/// and rescales to integers. Throws CorruptEncoding on out-of-range
/// descriptors, a singular system, or a decode that is not a valid instance.
IntegerInstance decode_basis(std::span<const std::uint8_t> bytes);

/// Query surface over a sealed basis; decodes once and answers queries by
/// integer arithmetic on the decoded instance.
class VertexEncoding {
public:
    static VertexEncoding build(const Instance& inst);
    static VertexEncoding open(std::span<const std::uint8_t> bytes);

    Sign query(std::size_t i, std::size_t j, std::size_t k) const;

    std::size_t n() const { return n_; }
    std::uint64_t payload_bits() const;
    const IntegerInstance& decoded() const { return *decoded_; }

    std::vector<std::uint8_t> seal() const { return bytes_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> bytes_; // sealed envelope
    std::shared_ptr<const IntegerInstance> decoded_;
};

} // namespace tsum

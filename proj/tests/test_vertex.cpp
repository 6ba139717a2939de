#include <doctest.h>

#include "helpers.hpp"
#include "tsum/envelope.hpp"
#include "tsum/errors.hpp"
#include "tsum/generators.hpp"
#include "tsum/oracle.hpp"
#include "tsum/table_codec.hpp"
#include "tsum/vertex_codec.hpp"

using namespace tsum;

namespace {

const Instance kFour = instance_from_ints({0, 1, 10, 11}, {0, 2, 20, 22}, {-33, -12, -3, 30});

BigInt pow2(unsigned long e) {
    BigInt b;
    mpz_ui_pow_ui(b.get_mpz_t(), 2, e);
    return b;
}

// Independent constraint checker against a rational point (x | y | z).
bool satisfies(const Constraint& c, const std::vector<Rational>& p, std::size_t n) {
    auto var = [&](ArrayId arr, std::size_t i) -> const Rational& {
        return p[static_cast<std::size_t>(arr) * n + (i - 1)];
    };
    switch (c.kind) {
        case ConstraintKind::Sign: {
            Rational sum = var(ArrayId::A, c.i) + var(ArrayId::B, c.j) + var(ArrayId::C, c.k);
            if (c.rel == SignRelation::Eq) return sum == Rational(0);
            if (c.rel == SignRelation::Geq) return sum >= Rational(1);
            return sum <= Rational(-1);
        }
        case ConstraintKind::Order:
            return var(c.array, c.i) - var(c.array, c.i + 1) <= Rational(-1);
        case ConstraintKind::Box: {
            Rational bound{pow2(6 * static_cast<unsigned long>(n))};
            return c.j == 0 ? var(c.array, c.i) >= -bound : var(c.array, c.i) <= bound;
        }
    }
    return false;
}

std::size_t count_kind(const ConstraintSystem& sys, ConstraintKind kind) {
    std::size_t count = 0;
    for (const auto& c : sys.constraints) count += c.kind == kind;
    return count;
}

} // namespace

TEST_CASE("build_constraints for single-entry instances") {
    auto plus = build_constraints(instance_from_ints({1}, {1}, {1}));
    CHECK(plus.constraints.size() == 7); // one sign row plus six box rows
    CHECK(count_kind(plus, ConstraintKind::Order) == 0);
    CHECK(count_kind(plus, ConstraintKind::Box) == 6);
    REQUIRE(plus.constraints[0].kind == ConstraintKind::Sign);
    CHECK(plus.constraints[0].rel == SignRelation::Geq);

    auto zero = build_constraints(instance_from_ints({0}, {0}, {0}));
    REQUIRE(zero.constraints[0].kind == ConstraintKind::Sign);
    CHECK(zero.constraints[0].rel == SignRelation::Eq);
}

TEST_CASE("build_constraints emits zeros plus clipped tightest rows") {
    auto sys = build_constraints(kFour);
    auto th = pairwise_thresholds(kFour);
    std::size_t zeros = 0, tight = 0;
    for (std::size_t i = 1; i <= 4; ++i) {
        for (std::size_t j = 1; j <= 4; ++j) {
            zeros += th.gt(i, j) - th.lt(i, j) - 1;
            tight += (th.lt(i, j) >= 1) + (th.gt(i, j) <= 4);
        }
    }
    CHECK(count_kind(sys, ConstraintKind::Order) == 9);
    CHECK(count_kind(sys, ConstraintKind::Box) == 24);
    CHECK(sys.constraints.size() == zeros + tight + 9 + 24);

    // every sign row agrees with the pairwise thresholds
    for (const auto& c : sys.constraints) {
        if (c.kind != ConstraintKind::Sign) continue;
        if (c.rel == SignRelation::Leq) CHECK(c.k == th.lt(c.i, c.j));
        if (c.rel == SignRelation::Geq) CHECK(c.k == th.gt(c.i, c.j));
        if (c.rel == SignRelation::Eq) {
            CHECK(c.k > th.lt(c.i, c.j));
            CHECK(c.k < th.gt(c.i, c.j));
        }
    }
}

TEST_CASE("solve_vertex returns a point satisfying every constraint") {
    for (const Instance& inst :
         {instance_from_ints({1}, {1}, {1}), instance_from_ints({0}, {0}, {0}), kFour}) {
        auto sys = build_constraints(inst);
        auto sol = solve_vertex(sys);
        REQUIRE(sol.point.size() == 3 * inst.n());
        REQUIRE(sol.basis.rows.size() == 3 * inst.n());
        for (const auto& c : sys.constraints) {
            CHECK(satisfies(c, sol.point, inst.n()));
        }
        // basis rows are tight: they hold as equalities in the decoded system,
        // which decode_basis exercises; here check they at least hold.
        for (const auto& c : sol.basis.rows) {
            CHECK(satisfies(c, sol.point, inst.n()));
        }
    }
}

TEST_CASE("solve_vertex rejects inconsistent systems") {
    ConstraintSystem sys;
    sys.n = 1;
    sys.constraints.push_back({ConstraintKind::Sign, SignRelation::Geq, ArrayId::A, 1, 1, 1});
    sys.constraints.push_back({ConstraintKind::Sign, SignRelation::Leq, ArrayId::A, 1, 1, 1});
    for (int arr = 0; arr < 3; ++arr) {
        for (std::uint32_t side = 0; side <= 1; ++side) {
            sys.constraints.push_back(
                {ConstraintKind::Box, SignRelation::Eq, static_cast<ArrayId>(arr), 1, side, 0});
        }
    }
    CHECK_THROWS_AS(solve_vertex(sys), CorruptEncoding);
}

TEST_CASE("the reduced system's vertex satisfies all n^3 sign constraints") {
    // The per-pair reduction keeps only the two tightest inequalities; with
    // the order rows they must imply the full constraint set.
    for (std::size_t n : {2u, 3u, 4u}) {
        std::vector<Instance> corpus;
        corpus.push_back(gen_random(n, 70 + n, std::max<std::uint64_t>(3 * n, 8)));
        corpus.push_back(gen_ties(n));
        corpus.push_back(gen_fibonacci(n));
        if (n == 4) corpus.push_back(kFour);
        for (const auto& inst : corpus) {
            auto table = type_table(inst);
            auto sol = solve_vertex(build_constraints(inst));
            for (std::uint32_t i = 1; i <= n; ++i) {
                for (std::uint32_t j = 1; j <= n; ++j) {
                    for (std::uint32_t k = 1; k <= n; ++k) {
                        SignRelation rel = table.at(i, j, k) == Sign::Zero ? SignRelation::Eq
                                           : table.at(i, j, k) == Sign::Plus ? SignRelation::Geq
                                                                             : SignRelation::Leq;
                        Constraint full{ConstraintKind::Sign, rel, ArrayId::A, i, j, k};
                        CHECK(satisfies(full, sol.point, n));
                    }
                }
            }
        }
    }
}

TEST_CASE("solve_vertex preserves every triple sign") {
    auto sol = solve_vertex(build_constraints(kFour));
    Instance vertex;
    for (std::size_t v = 0; v < 4; ++v) vertex.a.push_back(sol.point[v]);
    for (std::size_t v = 4; v < 8; ++v) vertex.b.push_back(sol.point[v]);
    for (std::size_t v = 8; v < 12; ++v) vertex.c.push_back(sol.point[v]);
    REQUIRE(validate(vertex).ok());
    CHECK(equivalent(kFour, vertex));
}

TEST_CASE("round_to_integers yields an equivalent integer instance") {
    Instance rational_inst;
    rational_inst.a.push_back(Rational::parse("1/3"));
    rational_inst.b.push_back(Rational::parse("1/7"));
    rational_inst.c.push_back(Rational::parse("2/21"));
    auto rounded = round_to_integers(rational_inst);
    REQUIRE(rounded.n() == 1);
    CHECK(rounded.a[0] + rounded.b[0] + rounded.c[0] > 0); // sum sign preserved
    CHECK(equivalent(rational_inst, rounded));

    auto fib = gen_fibonacci(8);
    auto fib_rounded = round_to_integers(fib);
    CHECK(equivalent(fib, fib_rounded));
    BigInt max_abs = 0;
    for (const auto* arr : {&fib_rounded.a, &fib_rounded.b, &fib_rounded.c}) {
        for (const auto& v : *arr) {
            BigInt a = abs(v);
            if (a > max_abs) max_abs = a;
        }
    }
    CHECK(max_abs >= 34); // the growth forced by the recurrence

    auto integral = instance_from_ints({1, 2}, {10, 20}, {-30, -12});
    CHECK(equivalent(integral, round_to_integers(integral)));
}

TEST_CASE("decoded integers stay within the O(n) bit-length bound") {
    for (std::size_t n : {1u, 2u, 4u, 8u}) {
        auto inst = gen_random(n, 17 * n + 1, std::max<std::uint64_t>(5 * n, 10));
        auto rounded = round_to_integers(inst);
        CHECK(equivalent(inst, rounded));
        for (const auto* arr : {&rounded.a, &rounded.b, &rounded.c}) {
            for (const auto& v : *arr) {
                CHECK(mpz_sizeinbase(v.get_mpz_t(), 2) <= 12 * n);
            }
        }
    }
}

TEST_CASE("basis round-trips through the envelope") {
    auto sol = solve_vertex(build_constraints(kFour));
    auto bytes = encode_basis(sol.basis);
    // payload: 3n descriptors of 4 + 3 ceil(log2(n+2)) bits
    auto opened = envelope_open(bytes);
    CHECK(opened.codec == CodecId::Vertex);
    CHECK(opened.bit_length == 12 * (4 + 3 * 3));

    auto decoded = decode_basis(bytes);
    CHECK(equivalent(kFour, decoded));

    auto plus_sol = solve_vertex(build_constraints(instance_from_ints({1}, {1}, {1})));
    auto plus_decoded = decode_basis(encode_basis(plus_sol.basis));
    CHECK(plus_decoded.a[0] + plus_decoded.b[0] + plus_decoded.c[0] > 0);
}

TEST_CASE("decode rejects tampered descriptors") {
    auto sol = solve_vertex(build_constraints(kFour));
    auto bytes = encode_basis(sol.basis);
    for (std::size_t byte = 22; byte < std::min<std::size_t>(bytes.size(), 30); ++byte) {
        auto bad = bytes;
        bad[byte] ^= 0xff;
        CHECK_THROWS_AS(decode_basis(bad), CorruptEncoding);
    }
}

TEST_CASE("byte flips in the basis either decode to some instance or are corrupt") {
    auto sol = solve_vertex(build_constraints(kFour));
    auto bytes = encode_basis(sol.basis);
    for (std::size_t at = 22; at < bytes.size(); ++at) {
        auto bad = bytes;
        bad[at] ^= 0xff;
        try {
            auto decoded = decode_basis(bad);
            CHECK(validate(decoded.to_rational()).ok()); // decode guarantees validity
        } catch (const CorruptEncoding&) {
            // fine: detected
        }
    }
}

TEST_CASE("vertex encoding answers queries like the oracle") {
    for (std::size_t n : {1u, 2u, 4u, 9u}) {
        std::vector<Instance> corpus;
        corpus.push_back(gen_random(n, 3 * n + 5, std::max<std::uint64_t>(4 * n, 9)));
        corpus.push_back(gen_ties(n));
        if (n >= 2) corpus.push_back(gen_fibonacci(n));
        for (const auto& inst : corpus) {
            auto enc = VertexEncoding::open(VertexEncoding::build(inst).seal());
            CHECK(enc.payload_bits() == 3ull * n * (4 + 3 * bits_for(n + 2)));
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t j = 1; j <= n; ++j)
                    for (std::size_t k = 1; k <= n; ++k)
                        CHECK(enc.query(i, j, k) == oracle_sign(inst, i, j, k));
        }
    }
}

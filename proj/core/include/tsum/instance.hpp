#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "tsum/rational.hpp"

namespace tsum {

/// Three strictly increasing arrays of equal length n >= 1.
struct Instance {
    std::vector<Rational> a;
    std::vector<Rational> b;
    std::vector<Rational> c;

    std::size_t n() const { return a.size(); }
};

/// Same shape as Instance with integer entries.
struct IntegerInstance {
    std::vector<BigInt> a;
    std::vector<BigInt> b;
    std::vector<BigInt> c;

    std::size_t n() const { return a.size(); }
    Instance to_rational() const;
};

struct Violation {
    char array;        // 'A', 'B', 'C', or '*' for whole-instance problems
    std::size_t index; // 1-based position of the earlier element in a bad pair, 0 if n/a
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks array lengths and strict per-array ordering; every violation is
/// reported with its position.
ValidationReport validate(const Instance& inst);

/// Throws std::invalid_argument when validate() fails. Encoders call this on
/// entry.
void require_valid(const Instance& inst);

/// Convenience constructor used by tests and generators.
Instance instance_from_ints(const std::vector<long>& a,
                            const std::vector<long>& b,
                            const std::vector<long>& c);

// Instance text format: line 1 is N, then three blocks labeled A, B, C, each
// followed by N whitespace-separated values. A value is an optional-sign
// decimal integer or p/q rational. UTF-8, LF line endings.
Instance read_instance(std::istream& in);
Instance read_instance_file(const std::string& path);
void write_instance(std::ostream& out, const Instance& inst);
void write_instance_file(const std::string& path, const Instance& inst);

} // namespace tsum

#include "tsum/instance.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "tsum/errors.hpp"

namespace tsum {

Instance IntegerInstance::to_rational() const {
    Instance out;
    out.a.reserve(a.size());
    out.b.reserve(b.size());
    out.c.reserve(c.size());
    for (const auto& v : a) out.a.emplace_back(v);
    for (const auto& v : b) out.b.emplace_back(v);
    for (const auto& v : c) out.c.emplace_back(v);
    return out;
}

namespace {

void check_sorted(const std::vector<Rational>& arr, char name,
                  std::vector<Violation>& out) {
    for (std::size_t i = 0; i + 1 < arr.size(); ++i) {
        if (!(arr[i] < arr[i + 1])) {
            out.push_back({name, i + 1, std::string(1, name) + " not strictly increasing at index " +
                                            std::to_string(i + 1)});
        }
    }
}

} // namespace

ValidationReport validate(const Instance& inst) {
    ValidationReport report;
    if (inst.a.empty()) {
        report.violations.push_back({'*', 0, "instance must have n >= 1"});
    }
    if (inst.b.size() != inst.a.size() || inst.c.size() != inst.a.size()) {
        report.violations.push_back({'*', 0, "length mismatch between arrays"});
        return report;
    }
    check_sorted(inst.a, 'A', report.violations);
    check_sorted(inst.b, 'B', report.violations);
    check_sorted(inst.c, 'C', report.violations);
    return report;
}

void require_valid(const Instance& inst) {
    auto report = validate(inst);
    if (!report.ok()) {
        throw std::invalid_argument("invalid instance: " + report.violations.front().message);
    }
}

Instance instance_from_ints(const std::vector<long>& a,
                            const std::vector<long>& b,
                            const std::vector<long>& c) {
    Instance out;
    out.a.reserve(a.size());
    out.b.reserve(b.size());
    out.c.reserve(c.size());
    for (long v : a) out.a.emplace_back(v);
    for (long v : b) out.b.emplace_back(v);
    for (long v : c) out.c.emplace_back(v);
    return out;
}

namespace {

std::string next_token(std::istream& in, const char* what) {
    std::string tok;
    if (!(in >> tok)) {
        throw std::invalid_argument(std::string("instance file ended while reading ") + what);
    }
    return tok;
}

std::vector<Rational> read_block(std::istream& in, char label, std::size_t n) {
    std::string tok = next_token(in, "array label");
    if (tok.size() != 1 || tok[0] != label) {
        throw std::invalid_argument(std::string("expected label ") + label + ", got '" + tok + "'");
    }
    std::vector<Rational> values;
    values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        values.push_back(Rational::parse(next_token(in, "value")));
    }
    return values;
}

} // namespace

Instance read_instance(std::istream& in) {
    std::string tok = next_token(in, "instance size");
    unsigned long long n = 0;
    try {
        std::size_t used = 0;
        n = std::stoull(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid instance size: '" + tok + "'");
    }
    if (n == 0) {
        throw std::invalid_argument("instance size must be >= 1");
    }
    if (n > (1ull << 32)) {
        throw std::invalid_argument("instance size out of range");
    }
    Instance inst;
    inst.a = read_block(in, 'A', n);
    inst.b = read_block(in, 'B', n);
    inst.c = read_block(in, 'C', n);
    std::string extra;
    if (in >> extra) {
        throw std::invalid_argument("trailing content in instance file: '" + extra + "'");
    }
    return inst;
}

Instance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open instance file: " + path);
    }
    return read_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst) {
    out << inst.n() << '\n';
    const char* labels = "ABC";
    const std::vector<Rational>* arrays[] = {&inst.a, &inst.b, &inst.c};
    for (int block = 0; block < 3; ++block) {
        out << labels[block] << '\n';
        const auto& arr = *arrays[block];
        for (std::size_t i = 0; i < arr.size(); ++i) {
            if (i) out << ' ';
            out << arr[i].str();
        }
        out << '\n';
    }
}

void write_instance_file(const std::string& path, const Instance& inst) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open output file: " + path);
    }
    write_instance(out, inst);
    out.flush();
    if (!out) {
        throw IoError("failed writing instance file: " + path);
    }
}

} // namespace tsum

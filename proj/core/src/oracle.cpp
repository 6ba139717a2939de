#include "tsum/oracle.hpp"

#include <stdexcept>

namespace tsum {

namespace {

void check_index(std::size_t v, std::size_t n, const char* name) {
    if (v < 1 || v > n) {
        throw std::out_of_range(std::string(name) + " index out of range");
    }
}

} // namespace

Sign oracle_sign(const Instance& inst, std::size_t i, std::size_t j, std::size_t k) {
    const std::size_t n = inst.n();
    check_index(i, n, "i");
    check_index(j, n, "j");
    check_index(k, n, "k");
    mpq_class sum = inst.a[i - 1].mpq() + inst.b[j - 1].mpq();
    sum += inst.c[k - 1].mpq();
    return sign_of_cmp(sgn(sum));
}

Sign TypeTable::at(std::size_t i, std::size_t j, std::size_t k) const {
    check_index(i, n, "i");
    check_index(j, n, "j");
    check_index(k, n, "k");
    return signs[((i - 1) * n + (j - 1)) * n + (k - 1)];
}

TypeTable type_table(const Instance& inst) {
    require_valid(inst);
    const std::size_t n = inst.n();
    TypeTable table;
    table.n = n;
    table.signs.reserve(n * n * n);
    mpq_class pair_sum;
    mpq_class sum;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            pair_sum = inst.a[i].mpq() + inst.b[j].mpq();
            for (std::size_t k = 0; k < n; ++k) {
                sum = pair_sum + inst.c[k].mpq();
                table.signs.push_back(sign_of_cmp(sgn(sum)));
            }
        }
    }
    return table;
}

bool equivalent(const Instance& x, const Instance& y) {
    if (x.n() != y.n()) {
        throw std::invalid_argument("equivalent: instance length mismatch");
    }
    return type_table(x) == type_table(y);
}

bool equivalent(const Instance& x, const IntegerInstance& y) {
    return equivalent(x, y.to_rational());
}

bool equivalent(const IntegerInstance& x, const Instance& y) {
    return equivalent(x.to_rational(), y);
}

bool equivalent(const IntegerInstance& x, const IntegerInstance& y) {
    return equivalent(x.to_rational(), y.to_rational());
}

} // namespace tsum

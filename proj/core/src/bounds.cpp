#include "pitree/bounds.hpp"

#include "pitree/errors.hpp"

#include <string>

namespace pitree {

namespace {

color_t checked_mul(color_t a, color_t b) {
    color_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error("bound table overflow: values exceed 64 bits");
    return r;
}

color_t checked_add(color_t a, color_t b) {
    color_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error("bound table overflow: values exceed 64 bits");
    return r;
}

} // namespace

std::vector<color_t> creature_parameters(int d, int k) {
    if (d < 2 || k < 1) throw InputError("creature parameters need d >= 2, k >= 1");
    std::vector<color_t> c(k + 1, 0);
    color_t power = d;
    c[1] = d;
    for (int j = 2; j <= k; ++j) {
        power = checked_mul(power, d);
        c[j] = checked_add(c[j - 1], power);
    }
    return c;
}

std::vector<color_t> witness_bounds(int d, int k, color_t tau) {
    auto c = creature_parameters(d, k);
    std::vector<color_t> f(k + 1, 0);
    f[1] = 1;
    for (int j = 2; j <= k; ++j)
        f[j] = checked_add(checked_mul(f[j - 1], c[j - 1]), tau);
    return f;
}

BoundTable bounds(int d, int k, int t) {
    if (d < 2) throw InputError("bound table requires d >= 2");
    if (k < 1) throw InputError("bound table requires k >= 1");
    if (t < 1) throw InputError("bound table requires t >= 1");

    BoundTable table;
    table.d = d;
    table.k = k;
    table.t = t;
    table.c = creature_parameters(d, k);

    table.B.assign(t + 1, 0);
    table.tau.assign(t + 1, 0);
    table.B[1] = 0;
    if (t >= 2) table.B[2] = 1;
    for (int level = 3; level <= t; ++level) {
        table.tau[level] = table.B[level - 1];
        auto f = witness_bounds(d, k, table.tau[level]);
        table.B[level] = checked_mul(table.c[k], f[k]);
    }
    if (t >= 2) table.tau[2] = table.B[1];

    table.f = witness_bounds(d, k, t >= 2 ? table.B[t - 1] : 0);
    return table;
}

} // namespace pitree

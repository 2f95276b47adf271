#ifndef PITREE_BOUNDS_HPP
#define PITREE_BOUNDS_HPP

#include "pitree/graph.hpp"

#include <vector>

namespace pitree {

/// Recurrence tables behind the dichotomy engine, all 1-indexed.
///
/// The creature parameter follows the corrected recurrence
///   c(1) = d,   c(j) = c(j-1) + d^j,
/// which is what the engine's runtime checks actually need. The witness
/// bound is f(1) = 1, f(j) = f(j-1)*c(j-1) + tau, and the level bounds
/// are B(1) = 0, B(2) = 1, B(t) = c(k)*f(k) with tau = B(t-1).
struct BoundTable {
    int d = 0, k = 0, t = 0;
    std::vector<color_t> c;   // c[1..k]
    std::vector<color_t> f;   // f[1..k] at the top level (tau = B(t-1))
    std::vector<color_t> tau; // tau[1..t], tau[l] = B(l-1)
    std::vector<color_t> B;   // B[1..t]

    color_t bound() const { return B[t]; }
};

/// Builds the table; throws InputError for invalid parameters and Error
/// when any value overflows 64 bits (the bounds explode quickly).
BoundTable bounds(int d, int k, int t);

/// f(1..k) for a given tau; exposed for the engine's per-level use.
std::vector<color_t> witness_bounds(int d, int k, color_t tau);

/// c(1..k) of the corrected recurrence.
std::vector<color_t> creature_parameters(int d, int k);

} // namespace pitree

#endif // PITREE_BOUNDS_HPP

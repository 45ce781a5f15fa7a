#pragma once

#include "qsm/errors.hpp"

namespace qsm {

/// Return-rate lattice of a market with a +/- q% daily price limit.
///
/// The admissible returns are n/100 for n in {-q, ..., q}, d = 2q+1 values
/// in total. States and operators are stored in lattice order, so signed
/// indices are the public currency; `offset` maps them to storage offsets.
struct GridSpec {
    int q = 0; ///< price-limit percent
    int d = 0; ///< lattice size, always 2q+1 (odd)

    /// Lattice value r(n) = n/100, the dimensionless return fraction.
    [[nodiscard]] double value(int n) const { return n / 100.0; }

    [[nodiscard]] int offset(int n) const { return n + q; }
    [[nodiscard]] int index(int i) const { return i - q; }
    [[nodiscard]] bool contains(int n) const { return -q <= n && n <= q; }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Builds the lattice for price-limit percent q >= 1.
GridSpec make_grid(int q);

} // namespace qsm

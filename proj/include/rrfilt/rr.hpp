#pragma once

#include <cstdint>

#include "rrfilt/ideal.hpp"

namespace rrfilt {

struct ReductionIndex {
    std::int64_t v_min; // valuation of the principal reduction t^v_min
    std::int64_t r_x;   // least n with t^v_min * I^n = I^(n+1)
};

/// Stabilization and reduction indices of the colon chains attached to a
/// triple (I, t, M):
///   s     : least k with (I^(t+k) M : I^k M) ∩ A equal to the stable value
///   rho   : least k with (I^(t+k) M :_M I^k) equal to the stable value
///   s_star: least n with widetilde(I^m M) = I^m M for all m >= n
/// Always s <= rho <= max(0, s_star - t) and s_star <= r_x.
struct RRIndices {
    std::int64_t v_min;
    std::int64_t r_x;
    std::int64_t s_star;
    std::int64_t rho;
    std::int64_t s;
};

/// Requires a proper ideal of A: a subset of S with 0 not a member.
/// The chain I^n shifted by v_min ascends strictly until it stabilizes, so
/// r_x is reached within F + 2 steps; the cap F + 2*v_min is a hard guard.
ReductionIndex reduction_index(const NormalizedIdeal& i);

/// The Ratliff-Rush ideal of I^t with respect to M: the stable value of the
/// ascending chain (I^(t+k) M :_A I^k M). Computed as the single colon at
/// k = r_x(I), which is exact because I^(k+1) M = v_min + I^k M for every
/// k >= r_x, making the chain literally constant from there.
NormalizedIdeal rr_ideal(const NormalizedIdeal& i, std::int64_t t, const NormalizedIdeal& m);

/// widetilde(I^t) = the Ratliff-Rush closure, i.e. rr_ideal with M = A.
NormalizedIdeal rr_closure(const NormalizedIdeal& i, std::int64_t t);

/// widetilde(I^t M): the stable value of (I^(t+k) M :_M I^k).
NormalizedIdeal rr_module_closure(const NormalizedIdeal& i, std::int64_t t, const NormalizedIdeal& m);

RRIndices indices(const NormalizedIdeal& i, std::int64_t t, const NormalizedIdeal& m);

} // namespace rrfilt

#include "rrfilt/rr.hpp"

#include <algorithm>
#include <vector>

namespace rrfilt {

namespace {

void check_proper(const NormalizedIdeal& i) {
    if (i.min() < 1) throw ValidationError("a proper ideal of A is required (0 must not be a member)");
    const auto& S = *i.ambient();
    if (i.conductor() <= S.frobenius())
        throw ValidationError("a proper ideal of A is required (subset of S)");
    for (std::int64_t z : i.window_members())
        if (!S.contains(z)) throw ValidationError("a proper ideal of A is required (subset of S)");
}

void check_t(std::int64_t t) {
    if (t < 1) throw ValidationError("t must be at least 1");
    if (t > (std::int64_t{1} << 20)) throw InputTooLarge("t beyond the supported size");
}

// Powers I^0..I^n, reusing each step.
std::vector<NormalizedIdeal> power_list(const NormalizedIdeal& i, std::int64_t n) {
    std::vector<NormalizedIdeal> pw;
    pw.reserve(static_cast<std::size_t>(n + 1));
    pw.push_back(NormalizedIdeal::semigroup_ideal(i.ambient()));
    for (std::int64_t j = 1; j <= n; ++j) pw.push_back(product(pw.back(), i));
    return pw;
}

} // namespace

ReductionIndex reduction_index(const NormalizedIdeal& i) {
    check_proper(i);
    const std::int64_t v = i.min();
    const std::int64_t cap = i.ambient()->frobenius() + 2 * v;
    NormalizedIdeal prev = NormalizedIdeal::semigroup_ideal(i.ambient());
    NormalizedIdeal cur = i;
    for (std::int64_t n = 0; n <= cap; ++n) {
        if (shift(prev, v) == cur) return {v, n};
        prev = cur;
        cur = product(cur, i);
    }
    throw SafetyCapExceeded("reduction index did not stabilize within F + 2*v_min steps");
}

NormalizedIdeal rr_ideal(const NormalizedIdeal& i, std::int64_t t, const NormalizedIdeal& m) {
    check_t(t);
    const std::int64_t r = reduction_index(i).r_x;
    const auto pw = power_list(i, t + r);
    const NormalizedIdeal lhs = product(pw[static_cast<std::size_t>(t + r)], m);
    const NormalizedIdeal rhs = product(pw[static_cast<std::size_t>(r)], m);
    return colon_in(lhs, rhs, NormalizedIdeal::semigroup_ideal(i.ambient()));
}

NormalizedIdeal rr_closure(const NormalizedIdeal& i, std::int64_t t) {
    check_t(t);
    const std::int64_t r = reduction_index(i).r_x;
    const auto pw = power_list(i, t + r);
    return colon_in(pw[static_cast<std::size_t>(t + r)], pw[static_cast<std::size_t>(r)],
                    NormalizedIdeal::semigroup_ideal(i.ambient()));
}

NormalizedIdeal rr_module_closure(const NormalizedIdeal& i, std::int64_t t, const NormalizedIdeal& m) {
    check_t(t);
    const std::int64_t r = reduction_index(i).r_x;
    const auto pw = power_list(i, t + r);
    const NormalizedIdeal lhs = product(pw[static_cast<std::size_t>(t + r)], m);
    return colon_in(lhs, pw[static_cast<std::size_t>(r)], m);
}

RRIndices indices(const NormalizedIdeal& i, std::int64_t t, const NormalizedIdeal& m) {
    check_t(t);
    const ReductionIndex red = reduction_index(i);
    const std::int64_t r = red.r_x;
    const std::int64_t top = std::max(t + r, 2 * r);
    const auto pw = power_list(i, top);
    std::vector<NormalizedIdeal> pm; // I^j * M
    pm.reserve(pw.size());
    for (const auto& p : pw) pm.push_back(product(p, m));
    const NormalizedIdeal unit = NormalizedIdeal::semigroup_ideal(i.ambient());

    // Both chains ascend and are constant from k = r_x on.
    const NormalizedIdeal rr_stable =
        colon_in(pm[static_cast<std::size_t>(t + r)], pm[static_cast<std::size_t>(r)], unit);
    std::int64_t s = r;
    for (std::int64_t k = 0; k < r; ++k) {
        if (colon_in(pm[static_cast<std::size_t>(t + k)], pm[static_cast<std::size_t>(k)], unit) == rr_stable) {
            s = k;
            break;
        }
    }

    const NormalizedIdeal mc_stable =
        colon_in(pm[static_cast<std::size_t>(t + r)], pw[static_cast<std::size_t>(r)], m);
    std::int64_t rho = r;
    for (std::int64_t k = 0; k < r; ++k) {
        if (colon_in(pm[static_cast<std::size_t>(t + k)], pw[static_cast<std::size_t>(k)], m) == mc_stable) {
            rho = k;
            break;
        }
    }

    // widetilde(I^n M) = I^n M holds for every n >= r_x, so only n in
    // [1, r_x] need inspection.
    std::int64_t s_star = 0;
    for (std::int64_t n = r; n >= 1; --n) {
        const NormalizedIdeal closure =
            colon_in(pm[static_cast<std::size_t>(n + r)], pw[static_cast<std::size_t>(r)], m);
        if (closure != pm[static_cast<std::size_t>(n)]) {
            s_star = n + 1;
            break;
        }
    }

    return {red.v_min, r, s_star, rho, s};
}

} // namespace rrfilt

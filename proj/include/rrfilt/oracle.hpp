#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rrfilt/errors.hpp"

namespace rrfilt {

class NormalizedIdeal; // kernel side, used only by the comparison harness

namespace oracle {

/// Dense membership table over [low, bound), bit-packed. Queries beyond the
/// bound raise BoundTooSmall instead of guessing.
struct TruncatedSet {
    std::int64_t low = 0;
    std::int64_t bound = 0;
    std::vector<std::uint64_t> words; // bit j = membership of low + j

    bool contains(std::int64_t z) const {
        if (z >= bound) throw BoundTooSmall("oracle query beyond the truncation bound");
        if (z < low) return false;
        return test(z - low);
    }
    bool test(std::int64_t j) const {
        return (words[static_cast<std::size_t>(j >> 6)] >> (j & 63)) & 1;
    }
    void set(std::int64_t z) {
        const std::int64_t j = z - low;
        words[static_cast<std::size_t>(j >> 6)] |= std::uint64_t{1} << (j & 63);
    }
    std::vector<std::int64_t> members() const;
    std::int64_t min_member() const; // throws BoundTooSmall when empty
};

TruncatedSet make_set(std::int64_t low, std::int64_t bound);

/// Dynamic-programming reachability over [0, B). Requires B > 2*max*min.
TruncatedSet naive_semigroup(const std::vector<std::int64_t>& gens, std::int64_t B);

/// Union of g + S over the generators, truncated at S.bound.
TruncatedSet naive_ideal(const TruncatedSet& s, const std::vector<std::int64_t>& gens);

/// Double-loop Minkowski sum (word-packed inner loop). The result is valid
/// on [lowE+lowF, min(boundE+lowF, boundF+lowE)).
TruncatedSet naive_product(const TruncatedSet& e, const TruncatedSet& f);

/// Exhaustive scan colon: z is kept when z + f lands in E for every member
/// f of F below the bound, then intersected with ambient when given.
/// Trustworthy only when the margins suffice (see margin_ok in reports).
TruncatedSet naive_colon(const TruncatedSet& e, const TruncatedSet& f, const TruncatedSet* ambient);

/// Least n with v + I^n = I^(n+1), v = min member of I, by walking powers.
/// I^0 is the given semigroup table.
std::int64_t naive_reduction_index(const TruncatedSet& s, const TruncatedSet& i, std::int64_t cap);

/// Walks the chain (I^(t+k) M : I^k M) ∩ A for k = 0, 1, ... until it has
/// been constant for max(r_x, 1) consecutive steps and k >= r_x, then
/// returns the stable value. With module_colon the chain is
/// (I^(t+k) M :_M I^k) instead.
TruncatedSet naive_rr_chain(const TruncatedSet& s, const TruncatedSet& i, std::int64_t t,
                            const TruncatedSet& m, bool module_colon);

struct OracleReport {
    std::string operation;
    std::string instance;
    std::string kernel_value;
    std::string oracle_value;
    bool agree = false;
    bool margin_ok = false;
};

/// One randomly generated test case: a semigroup, a proper ideal, a module
/// and an exponent t <= 6. Modules are the canonical ideal, a principal
/// shift, or a random fractional ideal.
struct RandomInstance {
    std::vector<std::int64_t> sg_gens;
    std::vector<std::int64_t> ideal_gens;
    int module_kind = 0; // 0 canonical, 1 principal, 2 fractional
    std::int64_t principal_shift = 0;
    std::vector<std::int64_t> module_gens;
    std::int64_t t = 1;

    std::string describe() const;
};

/// Deterministic instance stream: 2..4 generators in [3, 60] with gcd 1.
std::vector<RandomInstance> random_corpus(std::uint64_t seed, std::int64_t count);

struct SuiteOptions {
    std::uint64_t seed = 1;
    std::int64_t count = 100;    // number of reports to emit
    std::int64_t bound = 0;      // 0 selects the default per-instance bound
    std::int64_t bound_scale = 1;
};

/// Runs every kernel operation against its naive twin over a stream of
/// random instances, emitting one report per (instance, operation) pair
/// until count reports have been produced. The default bound is
/// 8*(F+1) + 12*max(gens)*(t + r_x), doubled on BoundTooSmall up to a
/// hard cap.
std::vector<OracleReport> compare_suite(const SuiteOptions& options);

} // namespace oracle
} // namespace rrfilt

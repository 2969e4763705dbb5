#include "rrfilt/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace rrfilt {

namespace {

// Hard cap on the membership window. Together with the 64-bit representation
// this is the documented input-size contract: derived quantities stay far
// below 2^62 and windows stay addressable.
constexpr std::int64_t kMaxWindow = std::int64_t{1} << 24;

} // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<std::int64_t> gens) {
    if (gens.empty()) throw EmptyInput("semigroup generators must be nonempty");
    for (std::int64_t g : gens) {
        if (g < 1) throw ValidationError("semigroup generators must be positive");
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::int64_t g = 0;
    for (std::int64_t a : gens) g = std::gcd(g, a);
    if (g != 1) throw GcdNotOne();

    const std::int64_t a_min = gens.front();
    const std::int64_t a_max = gens.back();
    multiplicity_ = a_min;

    // Reachability table, grown until an a_min-long run of members appears;
    // from the start of such a run everything upward is in S.
    std::int64_t bound = 2 * a_min * a_max + 2;
    std::vector<char> reach;
    std::int64_t run_start = -1;
    for (;;) {
        if (bound > kMaxWindow) throw InputTooLarge("generators produce a membership window beyond the supported size");
        reach.assign(static_cast<std::size_t>(bound), 0);
        reach[0] = 1;
        for (std::int64_t z = 1; z < bound; ++z) {
            for (std::int64_t a : gens) {
                if (a > z) break;
                if (reach[static_cast<std::size_t>(z - a)]) {
                    reach[static_cast<std::size_t>(z)] = 1;
                    break;
                }
            }
        }
        std::int64_t run = 0;
        for (std::int64_t z = 0; z < bound; ++z) {
            run = reach[static_cast<std::size_t>(z)] ? run + 1 : 0;
            if (run == a_min) {
                run_start = z - a_min + 1;
                break;
            }
        }
        if (run_start >= 0) break;
        bound *= 2;
    }

    frobenius_ = -1;
    for (std::int64_t z = run_start - 1; z >= 0; --z) {
        if (!reach[static_cast<std::size_t>(z)]) {
            frobenius_ = z;
            break;
        }
    }

    window_.assign(reach.begin(), reach.begin() + static_cast<std::ptrdiff_t>(frobenius_ + 1));
    genus_ = 0;
    for (char c : window_)
        if (!c) ++genus_;

    // Minimal generators are the members of S that are not a sum of two
    // nonzero members. They all lie in [1, F + e + 1].
    generators_.clear();
    const std::int64_t top = frobenius_ + a_min + 1;
    for (std::int64_t z = 1; z <= top; ++z) {
        if (!contains(z)) continue;
        bool decomposable = false;
        for (std::int64_t w = a_min; w + a_min <= z; ++w) {
            if (contains(w) && contains(z - w)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) generators_.push_back(z);
    }
}

std::vector<std::int64_t> NumericalSemigroup::gaps() const {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(genus_));
    for (std::int64_t z = 1; z <= frobenius_; ++z)
        if (!window_[static_cast<std::size_t>(z)]) out.push_back(z);
    return out;
}

std::vector<std::int64_t> NumericalSemigroup::apery_set(std::int64_t a) const {
    if (a <= 0 || !contains(a)) throw NotInSemigroup("apery_set requires a positive element of S");
    std::vector<std::int64_t> out(static_cast<std::size_t>(a), -1);
    for (std::int64_t r = 0; r < a; ++r) {
        for (std::int64_t v = r;; v += a) {
            if (contains(v)) {
                out[static_cast<std::size_t>(r)] = v;
                break;
            }
        }
    }
    return out;
}

bool NumericalSemigroup::is_symmetric() const {
    if (frobenius_ < 0) return true; // S = Z>=0, the regular case
    for (std::int64_t z = 0; z <= frobenius_; ++z) {
        if (contains(z) == contains(frobenius_ - z)) return false;
    }
    return true;
}

} // namespace rrfilt

#include "rrfilt/ideal.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace rrfilt {

namespace {

void check_same_ambient(const NormalizedIdeal& a, const NormalizedIdeal& b) {
    if (a.ambient() == b.ambient()) return;
    if (*a.ambient() != *b.ambient()) throw AmbientMismatch();
}

std::int64_t checked_window_size(std::int64_t lo, std::int64_t hi) {
    const std::int64_t n = hi - lo;
    if (n < 0) throw std::logic_error("negative window");
    if (n > (std::int64_t{1} << 26)) throw InputTooLarge("ideal window beyond the supported size");
    return n;
}

} // namespace

NormalizedIdeal NormalizedIdeal::from_window(SemigroupPtr S, std::int64_t lo, std::vector<char> bits) {
    const std::int64_t hi = lo + static_cast<std::int64_t>(bits.size());
    std::int64_t mn = hi;
    for (std::int64_t z = lo; z < hi; ++z) {
        if (bits[static_cast<std::size_t>(z - lo)]) {
            mn = z;
            break;
        }
    }
    // The set is bits ∪ [hi, oo); with an empty window the set is [hi, oo).
    std::int64_t cond = mn;
    for (std::int64_t z = hi - 1; z >= mn; --z) {
        if (!bits[static_cast<std::size_t>(z - lo)]) {
            cond = z + 1;
            break;
        }
    }
    std::vector<char> window(bits.begin() + static_cast<std::ptrdiff_t>(mn - lo),
                             bits.begin() + static_cast<std::ptrdiff_t>(cond - lo));
    const std::int64_t F = S->frobenius();
    if (cond > mn + F + 1) throw std::logic_error("conductor bound violated");
    return NormalizedIdeal(std::move(S), mn, cond, std::move(window));
}

std::vector<std::int64_t> NormalizedIdeal::window_members() const {
    std::vector<std::int64_t> out;
    for (std::int64_t z = min_; z < conductor_; ++z)
        if (window_[static_cast<std::size_t>(z - min_)]) out.push_back(z);
    return out;
}

bool NormalizedIdeal::operator==(const NormalizedIdeal& other) const {
    if (ambient_ != other.ambient_ && *ambient_ != *other.ambient_) return false;
    return min_ == other.min_ && conductor_ == other.conductor_ && window_ == other.window_;
}

NormalizedIdeal NormalizedIdeal::from_generators(SemigroupPtr S, const std::vector<std::int64_t>& gens) {
    if (gens.empty()) throw EmptyInput("ideal generators must be nonempty");
    const std::int64_t lo = *std::min_element(gens.begin(), gens.end());
    const std::int64_t hi = lo + S->frobenius() + 1;
    std::vector<char> bits(static_cast<std::size_t>(checked_window_size(lo, hi)), 0);
    for (std::int64_t z = lo; z < hi; ++z) {
        for (std::int64_t g : gens) {
            if (S->contains(z - g)) {
                bits[static_cast<std::size_t>(z - lo)] = 1;
                break;
            }
        }
    }
    return from_window(std::move(S), lo, std::move(bits));
}

NormalizedIdeal NormalizedIdeal::semigroup_ideal(SemigroupPtr S) {
    return from_generators(std::move(S), {0});
}

NormalizedIdeal NormalizedIdeal::maximal_ideal(SemigroupPtr S) {
    const std::int64_t lo = S->multiplicity();
    const std::int64_t hi = S->frobenius() + 2; // everything past F is in S \ {0}
    std::vector<char> bits(static_cast<std::size_t>(std::max<std::int64_t>(hi - lo, 0)), 0);
    for (std::int64_t z = lo; z < hi; ++z)
        bits[static_cast<std::size_t>(z - lo)] = S->contains(z) ? 1 : 0;
    return from_window(std::move(S), lo, std::move(bits));
}

NormalizedIdeal NormalizedIdeal::canonical_ideal(SemigroupPtr S) {
    const std::int64_t F = S->frobenius();
    std::vector<char> bits(static_cast<std::size_t>(F + 1), 0);
    for (std::int64_t z = 0; z <= F; ++z)
        bits[static_cast<std::size_t>(z)] = S->contains(F - z) ? 0 : 1;
    return from_window(std::move(S), 0, std::move(bits));
}

NormalizedIdeal product(const NormalizedIdeal& e, const NormalizedIdeal& f) {
    check_same_ambient(e, f);
    // Enumerate window members of the sparser side.
    const bool swap = e.conductor() - e.min() > f.conductor() - f.min();
    const NormalizedIdeal& a = swap ? f : e;
    const NormalizedIdeal& b = swap ? e : f;
    const std::vector<std::int64_t> a_members = a.window_members();

    const std::int64_t lo = a.min() + b.min();
    const std::int64_t hi = lo + e.ambient()->frobenius() + 1;
    std::vector<char> bits(static_cast<std::size_t>(checked_window_size(lo, hi)), 0);
    for (std::int64_t z = lo; z < hi; ++z) {
        bool member = z >= a.conductor() + b.min() || z >= b.conductor() + a.min();
        if (!member) {
            for (std::int64_t u : a_members) {
                if (u + b.min() > z) break;
                if (b.contains(z - u)) {
                    member = true;
                    break;
                }
            }
        }
        bits[static_cast<std::size_t>(z - lo)] = member ? 1 : 0;
    }
    return NormalizedIdeal::from_window(e.ambient(), lo, std::move(bits));
}

NormalizedIdeal power(const NormalizedIdeal& e, std::int64_t n) {
    if (n < 0) throw ValidationError("power requires a nonnegative exponent");
    if (n > (std::int64_t{1} << 20)) throw InputTooLarge("power exponent beyond the supported size");
    NormalizedIdeal acc = NormalizedIdeal::semigroup_ideal(e.ambient());
    for (std::int64_t i = 0; i < n; ++i) acc = product(acc, e);
    return acc;
}

NormalizedIdeal shift(const NormalizedIdeal& e, std::int64_t c) {
    return NormalizedIdeal(e.ambient_, e.min_ + c, e.conductor_ + c, e.window_);
}

NormalizedIdeal sum(const NormalizedIdeal& e, const NormalizedIdeal& f) {
    check_same_ambient(e, f);
    const std::int64_t lo = std::min(e.min(), f.min());
    const std::int64_t hi = std::max(e.conductor(), f.conductor());
    std::vector<char> bits(static_cast<std::size_t>(checked_window_size(lo, hi)), 0);
    for (std::int64_t z = lo; z < hi; ++z)
        bits[static_cast<std::size_t>(z - lo)] = (e.contains(z) || f.contains(z)) ? 1 : 0;
    return NormalizedIdeal::from_window(e.ambient(), lo, std::move(bits));
}

NormalizedIdeal intersect(const NormalizedIdeal& e, const NormalizedIdeal& f) {
    check_same_ambient(e, f);
    const std::int64_t lo = std::max(e.min(), f.min());
    const std::int64_t hi = std::max(e.conductor(), f.conductor());
    std::vector<char> bits(static_cast<std::size_t>(checked_window_size(lo, std::max(lo, hi))), 0);
    for (std::int64_t z = lo; z < hi; ++z)
        bits[static_cast<std::size_t>(z - lo)] = (e.contains(z) && f.contains(z)) ? 1 : 0;
    return NormalizedIdeal::from_window(e.ambient(), lo, std::move(bits));
}

NormalizedIdeal colon_z(const NormalizedIdeal& e, const NormalizedIdeal& f) {
    check_same_ambient(e, f);
    const std::vector<std::int64_t> f_members = f.window_members();
    const std::int64_t lo = e.min() - f.min();
    const std::int64_t hi = std::max(lo, e.conductor() - f.min());
    std::vector<char> bits(static_cast<std::size_t>(checked_window_size(lo, hi)), 0);
    for (std::int64_t z = lo; z < hi; ++z) {
        // z + f must land in e for the finitely many window members of f and
        // for the whole tail [conductor(f), oo).
        bool member = z + f.conductor() > e.last_gap();
        if (member) {
            for (std::int64_t w : f_members) {
                if (!e.contains(z + w)) {
                    member = false;
                    break;
                }
            }
        }
        bits[static_cast<std::size_t>(z - lo)] = member ? 1 : 0;
    }
    return NormalizedIdeal::from_window(e.ambient(), lo, std::move(bits));
}

NormalizedIdeal colon_in(const NormalizedIdeal& e, const NormalizedIdeal& f,
                         const NormalizedIdeal& ambient) {
    check_same_ambient(e, ambient);
    return intersect(colon_z(e, f), ambient);
}

std::vector<std::int64_t> minimal_generators(const NormalizedIdeal& e) {
    const NormalizedIdeal me = product(NormalizedIdeal::maximal_ideal(e.ambient()), e);
    std::vector<std::int64_t> out;
    for (std::int64_t z = e.min(); z < me.conductor(); ++z)
        if (e.contains(z) && !me.contains(z)) out.push_back(z);
    return out;
}

std::int64_t quotient_length(const NormalizedIdeal& e, const NormalizedIdeal& f) {
    check_same_ambient(e, f);
    if (f.conductor() <= e.last_gap())
        throw NotContained();
    for (std::int64_t w : f.window_members())
        if (!e.contains(w)) throw NotContained();
    std::int64_t count = 0;
    for (std::int64_t z = e.min(); z < f.conductor(); ++z)
        if (e.contains(z) && !f.contains(z)) ++count;
    return count;
}

NormalizedIdeal integral_closure_power(const NormalizedIdeal& i, std::int64_t t) {
    if (t < 1) throw ValidationError("integral_closure_power requires t >= 1");
    if (i.min() < 0) throw ValidationError("integral_closure_power requires a nonnegative ideal");
    const SemigroupPtr& S = i.ambient();
    const std::int64_t lo = t * i.min();
    const std::int64_t hi = lo + S->frobenius() + 1;
    std::vector<char> bits(static_cast<std::size_t>(checked_window_size(lo, hi)), 0);
    for (std::int64_t z = lo; z < hi; ++z)
        bits[static_cast<std::size_t>(z - lo)] = S->contains(z) ? 1 : 0;
    return NormalizedIdeal::from_window(S, lo, std::move(bits));
}

} // namespace rrfilt

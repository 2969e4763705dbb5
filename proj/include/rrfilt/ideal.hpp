#pragma once

#include <cstdint>
#include <vector>

#include "rrfilt/semigroup.hpp"

namespace rrfilt {

/// A fractional S-ideal in normal form: a set of integers, bounded below,
/// closed under addition by S. Stored as (min, conductor, window) where
/// window is the membership table over [min, conductor) and [conductor, oo)
/// is entirely inside the set. Normal form is unique: two ideals are equal
/// as sets iff their (min, conductor, window) coincide.
class NormalizedIdeal {
public:
    /// Normal form of the union of g + S over the given generators.
    /// Generators may be negative (fractional ideals). Throws EmptyInput.
    static NormalizedIdeal from_generators(SemigroupPtr S, const std::vector<std::int64_t>& gens);

    /// S itself viewed as an ideal (the unit ideal of the ring).
    static NormalizedIdeal semigroup_ideal(SemigroupPtr S);

    /// S \ {0}, the valuation set of the maximal ideal.
    static NormalizedIdeal maximal_ideal(SemigroupPtr S);

    /// K(S) = { z : F - z not in S }, a fractional ideal realizing the
    /// canonical module of k[[S]]. min(K) = 0; K = S exactly when S is
    /// symmetric.
    static NormalizedIdeal canonical_ideal(SemigroupPtr S);

    const SemigroupPtr& ambient() const { return ambient_; }
    std::int64_t min() const { return min_; }
    std::int64_t conductor() const { return conductor_; }

    bool contains(std::int64_t z) const {
        if (z < min_) return false;
        if (z >= conductor_) return true;
        return window_[static_cast<std::size_t>(z - min_)] != 0;
    }

    /// Largest integer not in the set (min - 1 when the set is [min, oo)).
    std::int64_t last_gap() const { return conductor_ > min_ ? conductor_ - 1 : min_ - 1; }

    /// Members of the window [min, conductor), ascending.
    std::vector<std::int64_t> window_members() const;

    bool operator==(const NormalizedIdeal& other) const;
    bool operator!=(const NormalizedIdeal& other) const { return !(*this == other); }

    /// Normalizes a membership table over [lo, hi). The caller guarantees
    /// that [hi, oo) lies inside the set and that the set's least element
    /// is >= lo. Used by the arithmetic below; exposed for I/O round trips.
    static NormalizedIdeal from_window(SemigroupPtr S, std::int64_t lo, std::vector<char> bits);

private:
    NormalizedIdeal(SemigroupPtr S, std::int64_t min, std::int64_t conductor, std::vector<char> window)
        : ambient_(std::move(S)), min_(min), conductor_(conductor), window_(std::move(window)) {}

    SemigroupPtr ambient_;
    std::int64_t min_;
    std::int64_t conductor_;
    std::vector<char> window_;

    friend NormalizedIdeal shift(const NormalizedIdeal&, std::int64_t);
};

/// Minkowski sum of the two sets; the valuation image of the ideal product.
NormalizedIdeal product(const NormalizedIdeal& e, const NormalizedIdeal& f);

/// Iterated product; power(e, 0) is the unit ideal.
NormalizedIdeal power(const NormalizedIdeal& e, std::int64_t n);

/// Adds c to every element.
NormalizedIdeal shift(const NormalizedIdeal& e, std::int64_t c);

/// Ideal sum, i.e. set union.
NormalizedIdeal sum(const NormalizedIdeal& e, const NormalizedIdeal& f);

NormalizedIdeal intersect(const NormalizedIdeal& e, const NormalizedIdeal& f);

/// The fraction-field colon { z : z + F ⊆ E }, not restricted to any
/// ambient set. May contain integers outside S.
NormalizedIdeal colon_z(const NormalizedIdeal& e, const NormalizedIdeal& f);

/// colon_z intersected with the given ambient set. Ring colons take the
/// unit ideal as ambient, module colons take the module.
NormalizedIdeal colon_in(const NormalizedIdeal& e, const NormalizedIdeal& f,
                         const NormalizedIdeal& ambient);

/// E minus (maximal ideal)*E, sorted. Regenerates E by graded Nakayama.
std::vector<std::int64_t> minimal_generators(const NormalizedIdeal& e);

/// |E \ F| for F ⊆ E (checked; throws NotContained). Equals the length of
/// the module E/F over k[[S]].
std::int64_t quotient_length(const NormalizedIdeal& e, const NormalizedIdeal& f);

/// { z in S : z >= t*min(I) }, the integral closure of the t-th power of a
/// proper ideal I.
NormalizedIdeal integral_closure_power(const NormalizedIdeal& i, std::int64_t t);

} // namespace rrfilt

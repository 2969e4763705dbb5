#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "rrfilt/errors.hpp"

namespace rrfilt {

/// A numerical semigroup S = <a1,...,ak>: a cofinite additive submonoid of
/// the nonnegative integers, the value set of the power-series ring
/// k[[t^a1,...,t^ak]]. Immutable after construction.
class NumericalSemigroup {
public:
    /// Normalizes to the minimal generating set; computes the Frobenius
    /// number, conductor and gap table.
    /// Throws EmptyInput, ValidationError (non-positive generator),
    /// GcdNotOne, InputTooLarge.
    explicit NumericalSemigroup(std::vector<std::int64_t> generators);

    /// Minimal generating set, strictly increasing.
    const std::vector<std::int64_t>& generators() const { return generators_; }

    /// Least nonzero element e = min(S \ {0}).
    std::int64_t multiplicity() const { return multiplicity_; }

    /// Largest integer not in S; -1 when S is all of Z>=0.
    std::int64_t frobenius() const { return frobenius_; }

    std::int64_t conductor() const { return frobenius_ + 1; }

    bool contains(std::int64_t z) const {
        if (z < 0) return false;
        if (z > frobenius_) return true;
        return window_[static_cast<std::size_t>(z)] != 0;
    }

    /// Positive integers not in S, ascending.
    std::vector<std::int64_t> gaps() const;

    std::int64_t genus() const { return genus_; }

    /// The a smallest elements of S in each residue class mod a, indexed by
    /// residue 0..a-1. Throws NotInSemigroup unless a in S, a > 0.
    std::vector<std::int64_t> apery_set(std::int64_t a) const;

    /// z in S  <=>  F - z not in S, for every integer z. Equivalent to the
    /// ring k[[S]] being Gorenstein.
    bool is_symmetric() const;

    bool operator==(const NumericalSemigroup& other) const {
        return generators_ == other.generators_;
    }
    bool operator!=(const NumericalSemigroup& other) const { return !(*this == other); }

private:
    std::vector<std::int64_t> generators_;
    std::int64_t multiplicity_ = 0;
    std::int64_t frobenius_ = -1;
    std::int64_t genus_ = 0;
    std::vector<char> window_; // membership over [0, frobenius_ + 1)
};

using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

inline SemigroupPtr make_semigroup(std::vector<std::int64_t> generators) {
    return std::make_shared<const NumericalSemigroup>(std::move(generators));
}

} // namespace rrfilt

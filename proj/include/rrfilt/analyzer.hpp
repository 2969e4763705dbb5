#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rrfilt/rr.hpp"

namespace rrfilt {

/// Witness of a failed colon equality (m^(n+1) : t^e) = m^n: the least
/// failing n together with an element of the colon outside m^n.
struct DepthWitness {
    std::int64_t n;
    std::int64_t element;
};

struct DepthReport {
    bool positive;
    std::optional<DepthWitness> witness;
};

/// Decides depth G_m(A) > 0, which at dimension one is equivalent to
/// G_m(A) being unmixed. The chain of equivalences used here is classical:
/// the initial form of t^e is a nonzerodivisor on G_m(A)
///   <=>  (m^(n+1) :_A t^e) = m^n for all n >= 0
///   <=>  widetilde(m^n) = m^n for all n >= 1
///   <=>  depth G_m(A) > 0
///   <=>  G_m(A) unmixed (d = 1).
/// Only n < r_x need checking; the colon equality is automatic from r_x on
/// because A is a domain.
DepthReport depth_positive(const SemigroupPtr& s);

/// For n = 1..n_max, the lengths of r(m^n, K)/widetilde(m^n) (first) and
/// r(m^n, K)/m^n (second). The two agree exactly when depth G_m(A) > 0.
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>
e_series(const SemigroupPtr& s, std::int64_t n_max);

/// Finite data certifying the eventual value of the first series: with
/// r = r_x(m), C_r = (m^2r K : m^r K) as a set of integers, the window
/// W = C_r \ m^r counts the eventual length, and the series equals |W|
/// for every n >= n_star. On [r_x, oo) the series is non-decreasing.
struct StableWindow {
    std::int64_t r_x;
    std::vector<std::int64_t> members; // W, ascending
    std::int64_t n_star;
};

StableWindow stable_window(const SemigroupPtr& s);

/// The Hilbert function of A/(t^e): coefficient i is the length of
/// (m^i + xA)/(m^(i+1) + xA) with x = t^e. Coefficients sum to e.
std::vector<std::int64_t> hilbert_fn_mod_x(const SemigroupPtr& s);

struct QuasiHilbertReport {
    bool gorenstein;
    bool depth_positive; // equals G_m(A) unmixed at d = 1
    std::optional<DepthWitness> witness;
    std::int64_t v_min;
    std::int64_t r_x;
    std::vector<std::int64_t> e_series_tilde;
    std::vector<std::int64_t> e_series_power;
    std::vector<std::int64_t> stable_window; // W
    std::int64_t n_star;
    std::int64_t eventual_length; // |W|
    bool quasi_hilbert;           // W nonempty
    std::vector<std::int64_t> hilbert_mod_x;
    std::string note; // empty when nothing to flag
};

/// Full analysis of A = k[[S]]. n_max = 0 selects the default 2*r_x + 4.
/// The report is internally cross-checked: the tilde series must be
/// non-decreasing from r_x and equal to |W| from n_star on.
QuasiHilbertReport verdict(const SemigroupPtr& s, std::int64_t n_max = 0);

} // namespace rrfilt

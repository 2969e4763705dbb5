#include "rrfilt/analyzer.hpp"

#include <algorithm>

namespace rrfilt {

namespace {

std::vector<NormalizedIdeal> power_list(const NormalizedIdeal& i, std::int64_t n) {
    std::vector<NormalizedIdeal> pw;
    pw.reserve(static_cast<std::size_t>(n + 1));
    pw.push_back(NormalizedIdeal::semigroup_ideal(i.ambient()));
    for (std::int64_t j = 1; j <= n; ++j) pw.push_back(product(pw.back(), i));
    return pw;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return a <= 0 ? 0 : (a + b - 1) / b;
}

} // namespace

DepthReport depth_positive(const SemigroupPtr& s) {
    const NormalizedIdeal m = NormalizedIdeal::maximal_ideal(s);
    const NormalizedIdeal unit = NormalizedIdeal::semigroup_ideal(s);
    const std::int64_t v = s->multiplicity();
    const NormalizedIdeal x = shift(unit, v); // the principal ideal (t^e)
    const std::int64_t r = reduction_index(m).r_x;
    const auto pw = power_list(m, r);
    for (std::int64_t n = 0; n < r; ++n) {
        const NormalizedIdeal c = colon_in(pw[static_cast<std::size_t>(n + 1)], x, unit);
        const NormalizedIdeal& mn = pw[static_cast<std::size_t>(n)];
        if (c != mn) {
            for (std::int64_t z = c.min(); z < mn.conductor(); ++z) {
                if (c.contains(z) && !mn.contains(z)) return {false, DepthWitness{n, z}};
            }
            throw std::logic_error("colon differs from power but no witness found");
        }
    }
    return {true, std::nullopt};
}

std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>
e_series(const SemigroupPtr& s, std::int64_t n_max) {
    if (n_max < 1) throw ValidationError("n_max must be at least 1");
    if (n_max > (std::int64_t{1} << 16)) throw InputTooLarge("n_max beyond the supported size");
    const NormalizedIdeal m = NormalizedIdeal::maximal_ideal(s);
    const NormalizedIdeal k = NormalizedIdeal::canonical_ideal(s);
    const NormalizedIdeal unit = NormalizedIdeal::semigroup_ideal(s);
    const std::int64_t r = reduction_index(m).r_x;
    const auto pw = power_list(m, n_max + r);
    std::vector<NormalizedIdeal> mk;
    mk.reserve(pw.size());
    for (const auto& p : pw) mk.push_back(product(p, k));

    std::vector<std::int64_t> tilde, pow;
    tilde.reserve(static_cast<std::size_t>(n_max));
    pow.reserve(static_cast<std::size_t>(n_max));
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const NormalizedIdeal rr =
            colon_in(mk[static_cast<std::size_t>(n + r)], mk[static_cast<std::size_t>(r)], unit);
        const NormalizedIdeal closure =
            colon_in(pw[static_cast<std::size_t>(n + r)], pw[static_cast<std::size_t>(r)], unit);
        tilde.push_back(quotient_length(rr, closure));
        pow.push_back(quotient_length(rr, pw[static_cast<std::size_t>(n)]));
    }
    return {std::move(tilde), std::move(pow)};
}

StableWindow stable_window(const SemigroupPtr& s) {
    const NormalizedIdeal m = NormalizedIdeal::maximal_ideal(s);
    const NormalizedIdeal k = NormalizedIdeal::canonical_ideal(s);
    const std::int64_t v = s->multiplicity();
    const std::int64_t r = reduction_index(m).r_x;
    const auto pw = power_list(m, 2 * r);
    const NormalizedIdeal mrk = product(pw[static_cast<std::size_t>(r)], k);
    const NormalizedIdeal m2rk = product(pw[static_cast<std::size_t>(2 * r)], k);
    const NormalizedIdeal c = colon_z(m2rk, mrk);
    const NormalizedIdeal& mr = pw[static_cast<std::size_t>(r)];

    std::vector<std::int64_t> w;
    for (std::int64_t z = c.min(); z < mr.conductor(); ++z)
        if (c.contains(z) && !mr.contains(z)) w.push_back(z);

    const std::int64_t n_star = r + ceil_div(s->frobenius() + 1 - c.min(), v);
    return {r, std::move(w), n_star};
}

std::vector<std::int64_t> hilbert_fn_mod_x(const SemigroupPtr& s) {
    const NormalizedIdeal m = NormalizedIdeal::maximal_ideal(s);
    const NormalizedIdeal unit = NormalizedIdeal::semigroup_ideal(s);
    const std::int64_t e = s->multiplicity();
    const NormalizedIdeal xa = shift(unit, e);
    std::vector<std::int64_t> coeffs;
    std::int64_t total = 0;
    NormalizedIdeal p = unit;
    const std::int64_t cap = s->frobenius() + e + 2;
    for (std::int64_t i = 0; total < e; ++i) {
        if (i > cap) throw std::logic_error("Hilbert coefficients did not exhaust the Apery set");
        const NormalizedIdeal next = product(p, m);
        const std::int64_t c = quotient_length(sum(p, xa), sum(next, xa));
        coeffs.push_back(c);
        total += c;
        p = next;
    }
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return coeffs;
}

QuasiHilbertReport verdict(const SemigroupPtr& s, std::int64_t n_max) {
    const StableWindow win = stable_window(s);
    if (n_max == 0) n_max = 2 * win.r_x + 4;
    if (n_max < 1) n_max = 1;

    QuasiHilbertReport rep;
    rep.gorenstein = s->is_symmetric();
    const DepthReport depth = depth_positive(s);
    rep.depth_positive = depth.positive;
    rep.witness = depth.witness;
    rep.v_min = s->multiplicity();
    rep.r_x = win.r_x;
    auto series = e_series(s, n_max);
    rep.e_series_tilde = std::move(series.first);
    rep.e_series_power = std::move(series.second);
    rep.stable_window = win.members;
    rep.n_star = win.n_star;
    rep.eventual_length = static_cast<std::int64_t>(win.members.size());
    rep.quasi_hilbert = !win.members.empty();
    rep.hilbert_mod_x = hilbert_fn_mod_x(s);

    // Certified eventual behavior: non-decreasing from r_x, equal to |W|
    // from n_star on. Violations would mean a kernel bug, not bad input.
    for (std::int64_t n = win.r_x + 1; n <= n_max; ++n) {
        if (n >= 2 && rep.e_series_tilde[static_cast<std::size_t>(n - 1)] <
                          rep.e_series_tilde[static_cast<std::size_t>(n - 2)])
            throw std::logic_error("tilde series decreased past r_x");
    }
    for (std::int64_t n = std::max<std::int64_t>(win.n_star, 1); n <= n_max; ++n) {
        if (rep.e_series_tilde[static_cast<std::size_t>(n - 1)] != rep.eventual_length)
            throw std::logic_error("tilde series differs from |W| past n_star");
    }

    if (rep.gorenstein) {
        rep.note = "Gorenstein ring: quasi-Hilbert is excluded by definition and both series vanish";
    } else if (!rep.depth_positive) {
        const bool tilde_zero = std::all_of(rep.e_series_tilde.begin(), rep.e_series_tilde.end(),
                                            [](std::int64_t x) { return x == 0; });
        const bool power_zero = std::all_of(rep.e_series_power.begin(), rep.e_series_power.end(),
                                            [](std::int64_t x) { return x == 0; });
        if (tilde_zero && !power_zero)
            rep.note = "G_m(A) has depth 0: r(m^n,K)/widetilde(m^n) vanishes although r(m^n,K)/m^n does not";
    }
    return rep;
}

} // namespace rrfilt

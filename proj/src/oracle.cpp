#include "rrfilt/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "rrfilt/ideal.hpp"
#include "rrfilt/rr.hpp"

namespace rrfilt {
namespace oracle {

namespace {

constexpr std::int64_t kHardCap = std::int64_t{1} << 26;

std::size_t word_count(std::int64_t nbits) { return static_cast<std::size_t>((nbits + 63) >> 6); }

} // namespace

TruncatedSet make_set(std::int64_t low, std::int64_t bound) {
    const std::int64_t n = bound - low;
    if (n < 0) throw BoundTooSmall("oracle window collapsed");
    if (n > kHardCap) throw InputTooLarge("oracle window beyond the supported size");
    return TruncatedSet{low, bound, std::vector<std::uint64_t>(word_count(n), 0)};
}

std::vector<std::int64_t> TruncatedSet::members() const {
    std::vector<std::int64_t> out;
    for (std::int64_t z = low; z < bound; ++z)
        if (test(z - low)) out.push_back(z);
    return out;
}

std::int64_t TruncatedSet::min_member() const {
    for (std::int64_t z = low; z < bound; ++z)
        if (test(z - low)) return z;
    throw BoundTooSmall("oracle set has no member below the bound");
}

TruncatedSet naive_semigroup(const std::vector<std::int64_t>& gens, std::int64_t B) {
    if (gens.empty()) throw EmptyInput("semigroup generators must be nonempty");
    const std::int64_t mx = *std::max_element(gens.begin(), gens.end());
    const std::int64_t mn = *std::min_element(gens.begin(), gens.end());
    if (B <= 2 * mx * mn) throw BoundTooSmall("oracle semigroup bound must exceed 2*max*min");
    TruncatedSet s = make_set(0, B);
    s.set(0);
    for (std::int64_t z = 1; z < B; ++z) {
        for (std::int64_t g : gens) {
            if (g <= z && s.test(z - g)) {
                s.set(z);
                break;
            }
        }
    }
    return s;
}

TruncatedSet naive_ideal(const TruncatedSet& s, const std::vector<std::int64_t>& gens) {
    if (gens.empty()) throw EmptyInput("ideal generators must be nonempty");
    const std::int64_t lo = *std::min_element(gens.begin(), gens.end());
    TruncatedSet e = make_set(lo, s.bound);
    for (std::int64_t g : gens)
        for (std::int64_t w = 0; g + w < s.bound; ++w)
            if (s.test(w)) e.set(g + w);
    return e;
}

namespace {

// result |= source << shift, bit granularity, clipped to result's size.
void or_shifted(std::vector<std::uint64_t>& result, std::int64_t result_bits,
                const std::vector<std::uint64_t>& source, std::int64_t source_bits,
                std::int64_t shift) {
    const std::int64_t word_shift = shift >> 6;
    const int bit_shift = static_cast<int>(shift & 63);
    const std::int64_t out_words = static_cast<std::int64_t>(result.size());
    const std::int64_t in_words = static_cast<std::int64_t>(word_count(source_bits));
    for (std::int64_t w = 0; w < in_words; ++w) {
        std::uint64_t val = source[static_cast<std::size_t>(w)];
        if (w == in_words - 1 && (source_bits & 63) != 0)
            val &= (std::uint64_t{1} << (source_bits & 63)) - 1;
        if (!val) continue;
        const std::int64_t lo_word = w + word_shift;
        if (bit_shift == 0) {
            if (lo_word >= 0 && lo_word < out_words) result[static_cast<std::size_t>(lo_word)] |= val;
        } else {
            if (lo_word >= 0 && lo_word < out_words)
                result[static_cast<std::size_t>(lo_word)] |= val << bit_shift;
            if (lo_word + 1 >= 0 && lo_word + 1 < out_words)
                result[static_cast<std::size_t>(lo_word + 1)] |= val >> (64 - bit_shift);
        }
    }
    // keep bits beyond result_bits clear
    if ((result_bits & 63) != 0 && !result.empty())
        result.back() &= (std::uint64_t{1} << (result_bits & 63)) - 1;
}

// 64 bits of `bits` starting at bit position `pos` (zero-padded at the top).
std::uint64_t extract64(const std::vector<std::uint64_t>& bits, std::int64_t nbits, std::int64_t pos) {
    if (pos >= nbits) return 0;
    const std::int64_t w = pos >> 6;
    const int o = static_cast<int>(pos & 63);
    const std::int64_t nw = static_cast<std::int64_t>(bits.size());
    std::uint64_t v = w < nw ? bits[static_cast<std::size_t>(w)] >> o : 0;
    if (o != 0 && w + 1 < nw) v |= bits[static_cast<std::size_t>(w + 1)] << (64 - o);
    const std::int64_t avail = nbits - pos;
    if (avail < 64) v &= avail <= 0 ? 0 : (std::uint64_t{1} << avail) - 1;
    return v;
}

} // namespace

TruncatedSet naive_product(const TruncatedSet& e, const TruncatedSet& f) {
    const std::int64_t lo = e.low + f.low;
    const std::int64_t hi = std::min(e.bound + f.low, f.bound + e.low);
    TruncatedSet p = make_set(lo, hi);
    const std::int64_t nbits = hi - lo;
    const std::int64_t fbits = f.bound - f.low;
    for (std::int64_t u = e.low; u < e.bound; ++u) {
        if (!e.test(u - e.low)) continue;
        or_shifted(p.words, nbits, f.words, fbits, u - e.low);
    }
    return p;
}

TruncatedSet naive_colon(const TruncatedSet& e, const TruncatedSet& f, const TruncatedSet* ambient) {
    // Re-base the divisor at its least member so shifts stay nonnegative.
    const std::int64_t fmin = f.min_member();
    const std::int64_t fbits = f.bound - fmin;
    std::vector<std::uint64_t> fw(word_count(fbits), 0);
    for (std::int64_t v = fmin; v < f.bound; ++v)
        if (f.test(v - f.low)) fw[static_cast<std::size_t>((v - fmin) >> 6)] |= std::uint64_t{1} << ((v - fmin) & 63);

    const std::int64_t lo = e.low - fmin;
    std::int64_t hi = e.bound - fmin;
    if (ambient) hi = std::min(hi, ambient->bound);
    TruncatedSet c = make_set(lo, std::max(lo, hi));
    const std::int64_t ebits = e.bound - e.low;
    const std::int64_t fwords = static_cast<std::int64_t>(fw.size());
    for (std::int64_t z = lo; z < hi; ++z) {
        if (ambient && !ambient->contains(z)) continue;
        // need: every member v of f with z + v < e.bound satisfies z + v in e
        const std::int64_t off = z + fmin - e.low; // index of z + fmin inside e
        const std::int64_t cap = e.bound - (z + fmin);
        bool ok = true;
        for (std::int64_t w = 0; w < fwords; ++w) {
            std::uint64_t need = fw[static_cast<std::size_t>(w)];
            if (!need) continue;
            const std::int64_t base = w << 6;
            if (base >= cap) break;
            if (cap - base < 64) need &= (std::uint64_t{1} << (cap - base)) - 1;
            const std::uint64_t have = extract64(e.words, ebits, off + base);
            if (need & ~have) {
                ok = false;
                break;
            }
        }
        if (ok) c.set(z);
    }
    return c;
}

namespace {

// Equality on the overlap of the valid ranges; the overlap must be nonempty.
bool sets_equal(const TruncatedSet& a, const TruncatedSet& b) {
    const std::int64_t lo = std::min(a.low, b.low);
    const std::int64_t hi = std::min(a.bound, b.bound);
    if (hi <= lo) throw BoundTooSmall("oracle comparison window collapsed");
    for (std::int64_t z = lo; z < hi; ++z) {
        const bool in_a = z >= a.low && a.test(z - a.low);
        const bool in_b = z >= b.low && b.test(z - b.low);
        if (in_a != in_b) return false;
    }
    return true;
}

TruncatedSet shift_set(const TruncatedSet& a, std::int64_t c) {
    return TruncatedSet{a.low + c, a.bound + c, a.words};
}

} // namespace

std::int64_t naive_reduction_index(const TruncatedSet& s, const TruncatedSet& i, std::int64_t cap) {
    const std::int64_t v = i.min_member();
    if (sets_equal(shift_set(s, v), i)) return 0;
    TruncatedSet pw = i;
    for (std::int64_t n = 1; n <= cap; ++n) {
        TruncatedSet next = naive_product(pw, i);
        if (sets_equal(shift_set(pw, v), next)) return n;
        pw = std::move(next);
    }
    throw NoStabilization("oracle reduction index did not stabilize");
}

TruncatedSet naive_rr_chain(const TruncatedSet& s, const TruncatedSet& i, std::int64_t t,
                            const TruncatedSet& m, bool module_colon) {
    const std::int64_t r = naive_reduction_index(s, i, s.bound);
    TruncatedSet pk = s;  // I^k
    TruncatedSet ptk = s; // I^(t+k)
    for (std::int64_t j = 0; j < t; ++j) ptk = naive_product(ptk, i);

    TruncatedSet stable = make_set(0, 0);
    std::int64_t run = 0;
    const std::int64_t need = std::max<std::int64_t>(r, 1);
    const std::int64_t cap = 3 * r + 48;
    for (std::int64_t k = 0;; ++k) {
        if (k > cap) throw NoStabilization("oracle colon chain did not stabilize");
        const TruncatedSet lhs = naive_product(ptk, m);
        TruncatedSet term = module_colon ? naive_colon(lhs, pk, &m)
                                         : naive_colon(lhs, naive_product(pk, m), &s);
        if (k > 0 && sets_equal(stable, term)) {
            ++run;
        } else {
            run = 0;
        }
        stable = std::move(term);
        if (run >= need && k >= r) return stable;
        pk = naive_product(pk, i);
        ptk = naive_product(ptk, i);
    }
}

std::string RandomInstance::describe() const {
    std::ostringstream os;
    os << "S=<";
    for (std::size_t j = 0; j < sg_gens.size(); ++j) os << (j ? "," : "") << sg_gens[j];
    os << "> I=(";
    for (std::size_t j = 0; j < ideal_gens.size(); ++j) os << (j ? "," : "") << ideal_gens[j];
    os << ") M=";
    if (module_kind == 0) {
        os << "canonical";
    } else if (module_kind == 1) {
        os << "principal(" << principal_shift << ")";
    } else {
        os << "fractional(";
        for (std::size_t j = 0; j < module_gens.size(); ++j) os << (j ? "," : "") << module_gens[j];
        os << ")";
    }
    os << " t=" << t;
    return os.str();
}

namespace {

// Portable uniform draw in [lo, hi]; std::uniform_int_distribution is not
// identical across standard libraries.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

} // namespace

std::vector<RandomInstance> random_corpus(std::uint64_t seed, std::int64_t count) {
    std::mt19937_64 rng(seed);
    std::vector<RandomInstance> out;
    out.reserve(static_cast<std::size_t>(count));
    while (static_cast<std::int64_t>(out.size()) < count) {
        RandomInstance inst;
        for (;;) {
            inst.sg_gens.clear();
            const std::int64_t k = draw(rng, 2, 4);
            for (std::int64_t j = 0; j < k; ++j) inst.sg_gens.push_back(draw(rng, 3, 60));
            std::sort(inst.sg_gens.begin(), inst.sg_gens.end());
            inst.sg_gens.erase(std::unique(inst.sg_gens.begin(), inst.sg_gens.end()), inst.sg_gens.end());
            std::int64_t g = 0;
            for (std::int64_t a : inst.sg_gens) g = std::gcd(g, a);
            if (g == 1 && inst.sg_gens.size() >= 2) break;
        }
        const NumericalSemigroup sg(inst.sg_gens);
        const std::int64_t F = sg.frobenius();
        const std::int64_t e = sg.multiplicity();

        const std::int64_t n_ideal = draw(rng, 1, 3);
        for (std::int64_t j = 0; j < n_ideal; ++j) {
            for (;;) {
                const std::int64_t z = draw(rng, e, F + 2 * e + 1);
                if (sg.contains(z)) {
                    inst.ideal_gens.push_back(z);
                    break;
                }
            }
        }
        inst.module_kind = static_cast<int>(draw(rng, 0, 2));
        if (inst.module_kind == 1) {
            inst.principal_shift = draw(rng, -10, 20);
        } else if (inst.module_kind == 2) {
            const std::int64_t n_mod = draw(rng, 1, 3);
            for (std::int64_t j = 0; j < n_mod; ++j)
                inst.module_gens.push_back(draw(rng, -10, std::max<std::int64_t>(2 * F, 20)));
        }
        inst.t = draw(rng, 1, 6);
        out.push_back(std::move(inst));
    }
    return out;
}

namespace {

std::string render_kernel(const NormalizedIdeal& e) {
    std::ostringstream os;
    os << "{min=" << e.min() << ",cond=" << e.conductor() << ",members=[";
    const auto mem = e.window_members();
    for (std::size_t j = 0; j < mem.size(); ++j) os << (j ? "," : "") << mem[j];
    os << "]}";
    return os.str();
}

std::string render_truncated(const TruncatedSet& e, std::int64_t hi) {
    std::ostringstream os;
    os << "{low=" << e.low << ",members<" << hi << "=[";
    bool first = true;
    for (std::int64_t z = e.low; z < std::min(hi, e.bound); ++z) {
        if (e.test(z - e.low)) {
            if (!first) os << ",";
            os << z;
            first = false;
        }
    }
    os << "]}";
    return os.str();
}

bool matches(const NormalizedIdeal& k, const TruncatedSet& o, std::int64_t hi) {
    if (hi > o.bound) throw BoundTooSmall("oracle comparison beyond the truncation bound");
    const std::int64_t lo = std::min<std::int64_t>(k.min(), o.low);
    for (std::int64_t z = lo; z < hi; ++z) {
        const bool in_o = z >= o.low && o.test(z - o.low);
        if (k.contains(z) != in_o) return false;
    }
    return true;
}

struct InstanceData {
    SemigroupPtr S;
    NormalizedIdeal I;
    NormalizedIdeal M;
    TruncatedSet nS;
    TruncatedSet nI;
    TruncatedSet nM;
    std::int64_t B;
};

InstanceData build(const RandomInstance& inst, std::int64_t bound, std::int64_t bound_scale) {
    SemigroupPtr S = make_semigroup(inst.sg_gens);
    NormalizedIdeal I = NormalizedIdeal::from_generators(S, inst.ideal_gens);
    NormalizedIdeal M = [&] {
        switch (inst.module_kind) {
            case 0: return NormalizedIdeal::canonical_ideal(S);
            case 1: return shift(NormalizedIdeal::semigroup_ideal(S), inst.principal_shift);
            default: return NormalizedIdeal::from_generators(S, inst.module_gens);
        }
    }();
    const std::int64_t r = reduction_index(I).r_x;
    const std::int64_t F = S->frobenius();
    const std::int64_t mx = inst.sg_gens.back();
    std::int64_t B = bound > 0 ? bound : 8 * (F + 1) + 12 * mx * (inst.t + r);
    B = std::min(B * bound_scale, kHardCap);

    TruncatedSet nS = naive_semigroup(inst.sg_gens, B);
    TruncatedSet nI = naive_ideal(nS, inst.ideal_gens);
    TruncatedSet nM = [&] {
        switch (inst.module_kind) {
            case 0: {
                // K = { z : F - z not in S } built directly from the table.
                TruncatedSet k = make_set(0, B);
                for (std::int64_t z = 0; z < B; ++z)
                    if (z > F || !nS.test(F - z)) k.set(z);
                return k;
            }
            case 1:
                return shift_set(nS, inst.principal_shift);
            default:
                return naive_ideal(nS, inst.module_gens);
        }
    }();
    return {std::move(S), std::move(I), std::move(M), std::move(nS), std::move(nI), std::move(nM), B};
}

} // namespace

namespace {

void run_instance(const RandomInstance& inst, const std::string& desc, std::int64_t bound,
                  std::int64_t bound_scale, std::vector<OracleReport>& reports);

} // namespace

std::vector<OracleReport> compare_suite(const SuiteOptions& options) {
    std::vector<OracleReport> reports;
    if (options.count <= 0) return reports;
    std::uint64_t stream_seed = options.seed;
    while (static_cast<std::int64_t>(reports.size()) < options.count) {
        const auto batch = random_corpus(stream_seed++, 1);
        const RandomInstance& inst = batch.front();
        const std::string desc = inst.describe();

        // Retry with a doubled bound while any comparison is thin-margined.
        std::vector<OracleReport> instance_reports;
        std::int64_t scale = options.bound_scale;
        for (int attempt = 0;; ++attempt) {
            instance_reports.clear();
            try {
                run_instance(inst, desc, options.bound, scale, instance_reports);
            } catch (const BoundTooSmall& ex) {
                if (attempt >= 4) throw BoundTooSmall(std::string(ex.what()) + " on " + desc);
                scale *= 2;
                continue;
            }
            const bool thin = std::any_of(instance_reports.begin(), instance_reports.end(),
                                          [](const OracleReport& r) { return !r.margin_ok; });
            if (!thin || attempt >= 4) break;
            scale *= 2;
        }
        for (auto& rep : instance_reports) {
            if (static_cast<std::int64_t>(reports.size()) < options.count)
                reports.push_back(std::move(rep));
        }
    }
    return reports;
}

namespace {

void run_instance(const RandomInstance& inst, const std::string& desc, std::int64_t bound,
                  std::int64_t bound_scale, std::vector<OracleReport>& reports) {
    InstanceData d = build(inst, bound, bound_scale);
    const NormalizedIdeal unit = NormalizedIdeal::semigroup_ideal(d.S);
    const std::int64_t F = d.S->frobenius();

    auto emit = [&](const std::string& op, const std::string& kv, const std::string& ov,
                    bool agree, bool margin_ok) {
        reports.push_back({op, desc, kv, ov, agree, margin_ok});
    };
    auto emit_sets = [&](const std::string& op, const NormalizedIdeal& kv, const TruncatedSet& ov) {
        // Compare out past the conductor so that window equality certifies
        // set equality on the whole comparison range.
        const std::int64_t want = kv.conductor() + 2 * (F + 2);
        const std::int64_t cmp_hi = std::min({d.B / 2, want, ov.bound});
        const bool margin_ok = cmp_hi >= kv.conductor() + (F + 2) && 2 * kv.conductor() <= d.B;
        emit(op, render_kernel(kv), render_truncated(ov, cmp_hi), matches(kv, ov, cmp_hi), margin_ok);
    };

    {
            // 1. semigroup membership table
            emit_sets("semigroup_window", unit, d.nS);
            // 2. ideal normal form from generators
            emit_sets("ideal_from_generators", d.I, d.nI);
            // 3. product I*M
            emit_sets("product", product(d.I, d.M), naive_product(d.nI, d.nM));
            // 4. power I^t
            {
                TruncatedSet np = d.nS;
                for (std::int64_t j = 0; j < inst.t; ++j) np = naive_product(np, d.nI);
                emit_sets("power", power(d.I, inst.t), np);
            }
            // 5. colon_z(I^t, I)
            {
                TruncatedSet nt = d.nS;
                for (std::int64_t j = 0; j < inst.t; ++j) nt = naive_product(nt, d.nI);
                emit_sets("colon_z", colon_z(power(d.I, inst.t), d.I), naive_colon(nt, d.nI, nullptr));
            }
            // 6. colon_in(I^t M, I M, A)
            {
                TruncatedSet nt = d.nM;
                for (std::int64_t j = 0; j < inst.t; ++j) nt = naive_product(nt, d.nI);
                emit_sets("colon_in",
                          colon_in(product(power(d.I, inst.t), d.M), product(d.I, d.M), unit),
                          naive_colon(nt, naive_product(d.nI, d.nM), &d.nS));
            }
            // 7. reduction index
            {
                const ReductionIndex k = reduction_index(d.I);
                const std::int64_t n = naive_reduction_index(d.nS, d.nI, d.B);
                emit("reduction_index", std::to_string(k.r_x), std::to_string(n), k.r_x == n, true);
            }
            // 8. rr_ideal
            emit_sets("rr_ideal", rr_ideal(d.I, inst.t, d.M),
                      naive_rr_chain(d.nS, d.nI, inst.t, d.nM, false));
            // 9. rr_closure (M = A)
            emit_sets("rr_closure", rr_closure(d.I, inst.t),
                      naive_rr_chain(d.nS, d.nI, inst.t, d.nS, false));
            // 10. rr_module_closure
            emit_sets("rr_module_closure", rr_module_closure(d.I, inst.t, d.M),
                      naive_rr_chain(d.nS, d.nI, inst.t, d.nM, true));
            // 11. minimal generators regenerate the ideal
            {
                const auto gens = minimal_generators(d.I);
                const NormalizedIdeal regen = NormalizedIdeal::from_generators(d.S, gens);
                const TruncatedSet nregen = naive_ideal(d.nS, gens);
                const std::int64_t cmp_hi = std::min({d.B / 2, d.I.conductor() + 2 * (F + 2), nregen.bound});
                const bool agree = regen == d.I && matches(d.I, nregen, cmp_hi);
                emit("minimal_generators", render_kernel(regen), render_truncated(nregen, cmp_hi),
                     agree, d.I.conductor() * 2 <= d.B);
            }
            // 12. quotient length of rr_ideal(I,t,M) over I^t
            {
                const NormalizedIdeal rr = rr_ideal(d.I, inst.t, d.M);
                const NormalizedIdeal pt = power(d.I, inst.t);
                const std::int64_t kl = quotient_length(rr, pt);
                const TruncatedSet nrr = naive_rr_chain(d.nS, d.nI, inst.t, d.nM, false);
                TruncatedSet np = d.nS;
                for (std::int64_t j = 0; j < inst.t; ++j) np = naive_product(np, d.nI);
                std::int64_t nl = 0;
                const std::int64_t stop = std::max(pt.conductor(), rr.conductor());
                if (stop > std::min(nrr.bound, np.bound))
                    throw BoundTooSmall("oracle length window too small");
                for (std::int64_t z = std::min<std::int64_t>(rr.min(), nrr.low); z < stop; ++z) {
                    const bool in_rr = z >= nrr.low && nrr.test(z - nrr.low);
                    const bool in_p = z >= np.low && np.test(z - np.low);
                    if (in_rr && !in_p) ++nl;
                }
                emit("quotient_length", std::to_string(kl), std::to_string(nl), kl == nl, true);
            }
            // 13. integral closure of I^t
            {
                const NormalizedIdeal cl = integral_closure_power(d.I, inst.t);
                TruncatedSet ncl = make_set(0, d.B);
                const std::int64_t lo = inst.t * d.nI.min_member();
                for (std::int64_t z = lo; z < d.B; ++z)
                    if (d.nS.test(z)) ncl.set(z);
                emit_sets("integral_closure", cl, ncl);
            }
    }
}

} // namespace

} // namespace oracle
} // namespace rrfilt

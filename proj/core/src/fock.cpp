#include "hurwitz/fock.hpp"

#include <cassert>

#include "hurwitz/errors.hpp"

namespace hurwitz {
namespace fock {

RatVector vacuum(int cutoff) {
    RatVector v;
    v.cutoff = cutoff;
    v.terms.emplace(Partition{}, Rat(1));
    return v;
}

SeriesVector series_vacuum(int cutoff, int order) {
    SeriesVector v;
    v.cutoff = cutoff;
    v.terms.emplace(Partition{}, LaurentSeries::one(order));
    return v;
}

namespace {

Rat scaled_coeff(const Rat& c, int sign) { return sign > 0 ? c : -c; }
LaurentSeries scaled_coeff(const LaurentSeries& c, int sign) {
    return sign > 0 ? c : -c;
}

template <class C>
WedgeVector<C> apply_alpha_impl(int n, const WedgeVector<C>& v) {
    if (n == 0) throw Error("alpha_0 is not defined");
    WedgeVector<C> out;
    out.cutoff = v.cutoff;
    for (const auto& [lambda, c] : v.terms) {
        auto strips = n > 0 ? removable_strips(lambda, n) : addable_strips(lambda, -n);
        for (const BorderStrip& s : strips) {
            if (s.result.size() > v.cutoff)
                throw CutoffExceeded("alpha_" + std::to_string(n) + " produced energy " +
                                     std::to_string(s.result.size()) + " > cutoff " +
                                     std::to_string(v.cutoff));
            out.add(s.result, scaled_coeff(c, s.sign));
        }
    }
    return out;
}

template <class C>
WedgeVector<C> apply_f2_impl(const WedgeVector<C>& v) {
    WedgeVector<C> out;
    out.cutoff = v.cutoff;
    for (const auto& [lambda, c] : v.terms) {
        long long f = central_character_f2(lambda);
        if (f != 0) out.add(lambda, c.scaled(Rat(f)));
    }
    return out;
}
template <>
WedgeVector<Rat> apply_f2_impl(const WedgeVector<Rat>& v) {
    WedgeVector<Rat> out;
    out.cutoff = v.cutoff;
    for (const auto& [lambda, c] : v.terms) {
        long long f = central_character_f2(lambda);
        if (f != 0) out.add(lambda, c * f);
    }
    return out;
}

// Doubled level (2k) of the stone whose jump realizes the strip, averaged
// between its initial and final position: the E_r weight is exp(scale*z*k+r/2).
long long strip_midpoint2(const BorderStrip& s, const Partition& larger, int r) {
    // larger = partition containing the strip; start_row indexes into it.
    long long lam = larger.part(s.start_row - 1);
    long long level2 = 2 * lam - 2 * s.start_row + 1;  // doubled initial-or-final level
    // For removal (r > 0) `larger` holds the initial stone; for addition the final one.
    return r > 0 ? level2 - r : level2 + r;
}

}  // namespace

RatVector apply_alpha(int n, const RatVector& v) { return apply_alpha_impl(n, v); }
SeriesVector apply_alpha(int n, const SeriesVector& v) { return apply_alpha_impl(n, v); }
RatVector apply_f2(const RatVector& v) { return apply_f2_impl(v); }
SeriesVector apply_f2(const SeriesVector& v) { return apply_f2_impl(v); }

SeriesVector apply_E(int r, const Rat& scale, const SeriesVector& v, int N) {
    SeriesVector out;
    out.cutoff = v.cutoff;
    if (r == 0) {
        LaurentSeries correction = inv_sigma_series(scale, N);
        for (const auto& [lambda, c] : v.terms) {
            FrobeniusCoordinates fc = frobenius_coords(lambda);
            LaurentSeries factor = correction;
            for (int a2 : fc.electrons2) factor = factor + exp_series(scale * a2 / 2, N);
            for (int b2 : fc.positrons2) factor = factor - exp_series(-scale * b2 / 2, N);
            out.add(lambda, c * factor);
        }
        return out;
    }
    for (const auto& [lambda, c] : v.terms) {
        auto strips = r > 0 ? removable_strips(lambda, r) : addable_strips(lambda, -r);
        for (const BorderStrip& s : strips) {
            if (s.result.size() > v.cutoff)
                throw CutoffExceeded("E_" + std::to_string(r) + " produced energy " +
                                     std::to_string(s.result.size()) + " > cutoff " +
                                     std::to_string(v.cutoff));
            const Partition& larger = r > 0 ? lambda : s.result;
            Rat mid = Rat(strip_midpoint2(s, larger, r)) / 2;
            LaurentSeries w = exp_series(scale * mid, N);
            out.add(s.result, scaled_coeff(c * w, s.sign));
        }
    }
    return out;
}

long long required_cutoff(const std::vector<OperatorSymbol>& ops) {
    long long running = 0, max_energy = 0;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        running -= it->energy();
        max_energy = std::max(max_energy, running);
    }
    return max_energy;
}

LaurentSeries vacuum_expectation(const std::vector<OperatorSymbol>& ops, int N,
                                 long long cutoff) {
    long long needed = required_cutoff(ops);
    if (cutoff >= 0 && cutoff < needed)
        throw CutoffTooSmall("cutoff " + std::to_string(cutoff) +
                             " below required intermediate energy " + std::to_string(needed));
    long long d = cutoff < 0 ? needed : cutoff;
    SeriesVector state = series_vacuum(static_cast<int>(d), N);
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        switch (it->kind) {
            case OperatorSymbol::Kind::Alpha:
                state = apply_alpha(it->index, state);
                break;
            case OperatorSymbol::Kind::F2:
                state = apply_f2(state);
                break;
            case OperatorSymbol::Kind::E:
                state = apply_E(it->index, it->scale, state, N);
                break;
        }
        if (state.terms.empty()) break;
    }
    auto it = state.terms.find(Partition{});
    if (it == state.terms.end()) return LaurentSeries::zero(N);
    return it->second;
}

}  // namespace fock
}  // namespace hurwitz

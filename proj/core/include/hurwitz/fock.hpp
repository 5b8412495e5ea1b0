#pragma once

#include <map>
#include <vector>

#include "hurwitz/partitions.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {
namespace fock {

// Finitely supported combination of basis vectors v_lambda on the charge-zero
// infinite wedge, truncated at energy |lambda| <= cutoff.
template <class C>
struct WedgeVector {
    std::map<Partition, C> terms;
    int cutoff = 0;

    void add(const Partition& key, const C& c) {
        auto [it, inserted] = terms.emplace(key, c);
        if (!inserted) {
            it->second = it->second + c;
            prune(it);
        }
    }
    void prune(typename std::map<Partition, C>::iterator it) {
        if (is_zero_coeff(it->second)) terms.erase(it);
    }
    static bool is_zero_coeff(const Rat& c) { return c == 0; }
    static bool is_zero_coeff(const LaurentSeries& c) { return c.is_zero(); }
};

using RatVector = WedgeVector<Rat>;
using SeriesVector = WedgeVector<LaurentSeries>;

RatVector vacuum(int cutoff);
SeriesVector series_vacuum(int cutoff, int order);

// alpha_n: signed sum over border-strip removals (n > 0) or additions (n < 0).
// Throws CutoffExceeded when a produced partition would exceed the cutoff.
RatVector apply_alpha(int n, const RatVector& v);
SeriesVector apply_alpha(int n, const SeriesVector& v);

RatVector apply_f2(const RatVector& v);
SeriesVector apply_f2(const SeriesVector& v);

// E_r(scale * z) through z^N.  Matrix entries carry the weight
// exp(scale * z * (k + r/2)) for the jump E_{k,k+r}; r = 0 includes the
// principal-part correction 1/varsigma(scale * z).
SeriesVector apply_E(int r, const Rat& scale, const SeriesVector& v, int N);

struct OperatorSymbol {
    enum class Kind { Alpha, F2, E } kind;
    int index = 0;   // n for Alpha, r for E
    Rat scale = 0;   // E argument is exp(k * scale * z)

    static OperatorSymbol alpha(int n) { return {Kind::Alpha, n, 0}; }
    static OperatorSymbol f2() { return {Kind::F2, 0, 0}; }
    static OperatorSymbol e(int r, Rat scale) { return {Kind::E, r, std::move(scale)}; }

    long long energy() const { return kind == Kind::F2 ? 0 : index; }
};

// Smallest cutoff for which no truncation loss occurs when the product is
// applied to the vacuum right-to-left.
long long required_cutoff(const std::vector<OperatorSymbol>& ops);

// <0| ops[0] ops[1] ... |0>, exact through z^N.  Throws CutoffTooSmall when
// the supplied cutoff cannot hold the intermediate energies; cutoff < 0
// means "choose automatically".
LaurentSeries vacuum_expectation(const std::vector<OperatorSymbol>& ops, int N,
                                 long long cutoff = -1);

}  // namespace fock
}  // namespace hurwitz

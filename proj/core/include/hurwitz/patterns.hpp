#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hurwitz/partitions.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {
namespace patterns {

// One commutator step: [E(I,J), E(K,L)], subsets stored as bitmasks over the
// part indices of mu and nu.
struct Step {
    uint32_t I = 0, J = 0, K = 0, L = 0;
    bool operator==(const Step&) const = default;
    auto operator<=>(const Step&) const = default;
};

// The canceling steps of one nonvanishing branch, in the order they fire;
// exactly m + n - 1 of them.
using CommutationPattern = std::vector<Step>;

struct ClosedForm {
    HurwitzInput input;
    std::vector<int> mu_order;  // left-to-right 0-based part indices
    std::vector<int> nu_order;
    std::vector<CommutationPattern> patterns;
};

// Default operator ordering: parts sorted descending, labeled center-out,
// i.e. E_{mu_m} ... E_{mu_1} E_{-nu_1} ... E_{-nu_n}.
std::vector<int> default_mu_order(int m);
std::vector<int> default_nu_order(int n);

// The complete set CP(mu, nu) of nonvanishing commutation patterns, explored
// depth-first with the passing branch before the canceling branch.  Requires
// the input off every wall; throws OnWall otherwise.
std::vector<CommutationPattern> run_algorithm(const HurwitzInput& input,
                                              const std::vector<int>& mu_order,
                                              const std::vector<int>& nu_order);

ClosedForm closed_form(const HurwitzInput& input);
ClosedForm closed_form(const HurwitzInput& input, const std::vector<int>& mu_order,
                       const std::vector<int>& nu_order);

// varsigma arguments of one pattern, evaluated at `at`:
// Q_l = |mu_I||nu_L| - |mu_K||nu_J|.
std::vector<long long> sigma_args(const CommutationPattern& p, const HurwitzInput& at);

// H_{mu,nu}(z) through z^N, evaluated from the stored patterns at an
// arbitrary point `at` with the same (m, n).
LaurentSeries evaluate_series(const ClosedForm& cf, const HurwitzInput& at, int N);

// r! [z^r] of the series; N < 0 selects the default r + 2.
Rat hurwitz_number(const HurwitzInput& input, int r, int N = -1);

// The total order phi on the m+n parts induced by the all-commutator pattern,
// with provenance (true = mu side).
struct PhiEntry {
    long long value;
    bool from_mu;
    int index;  // 0-based into mu or nu
};
std::vector<PhiEntry> phi_ordering(const HurwitzInput& input);

bool is_totally_negative(const HurwitzInput& input);

// The m+n-1 varsigma arguments phi(l) * sum_{j<l, j not~ l} phi(j) of the
// product formula; NotTotallyNegative when the chamber predicate fails.
std::vector<long long> product_formula(const HurwitzInput& input);

std::string to_latex(const ClosedForm& cf);

}  // namespace patterns
}  // namespace hurwitz

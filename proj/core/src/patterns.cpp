#include "hurwitz/patterns.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {
namespace patterns {

namespace {

struct ESymbol {
    uint32_t I = 0, J = 0;
    bool operator==(const ESymbol&) const = default;
    auto operator<=>(const ESymbol&) const = default;
};

using State = std::vector<ESymbol>;

long long subset_sum(const Partition& p, uint32_t mask) {
    long long s = 0;
    for (int i = 0; i < p.length(); ++i)
        if (mask & (1u << i)) s += p.part(i);
    return s;
}

struct Explorer {
    const HurwitzInput& input;
    uint32_t full_i, full_j;
    std::map<State, std::vector<CommutationPattern>> memo;

    long long energy(const ESymbol& s) const {
        return subset_sum(input.mu, s.I) - subset_sum(input.nu, s.J);
    }

    bool is_full(const ESymbol& s) const { return s.I == full_i && s.J == full_j; }

    // (symbol count, sum over positive-energy symbols of slots to their right);
    // must decrease lexicographically at every step.
    std::pair<size_t, long long> measure(const State& st) const {
        long long slots = 0;
        for (size_t i = 0; i < st.size(); ++i)
            if (energy(st[i]) > 0) slots += static_cast<long long>(st.size() - 1 - i);
        return {st.size(), slots};
    }

    const std::vector<CommutationPattern>& explore(const State& st) {
        auto it = memo.find(st);
        if (it != memo.end()) return it->second;

        std::vector<CommutationPattern> result;
        for (const ESymbol& s : st)
            if (!is_full(s) && energy(s) == 0)
                throw OnWall(s.I, s.J, "zero-energy symbol: input lies on a wall");

        if (st.size() == 1) {
            assert(is_full(st[0]));
            result.emplace_back();  // one empty pattern
            return memo.emplace(st, std::move(result)).first->second;
        }

        int pos = -1;
        for (int i = static_cast<int>(st.size()) - 1; i >= 0; --i)
            if (energy(st[static_cast<size_t>(i)]) > 0) {
                pos = i;
                break;
            }
        assert(pos >= 0);
        if (pos == static_cast<int>(st.size()) - 1)
            return memo.emplace(st, std::move(result)).first->second;  // annihilates the vacuum

        const ESymbol a = st[static_cast<size_t>(pos)];
        const ESymbol b = st[static_cast<size_t>(pos) + 1];

        // passing term
        State passing = st;
        std::swap(passing[static_cast<size_t>(pos)], passing[static_cast<size_t>(pos) + 1]);
        assert(measure(passing) < measure(st));
        for (const CommutationPattern& p : explore(passing)) result.push_back(p);

        // canceling term
        assert((a.I & b.I) == 0 && (a.J & b.J) == 0);
        State canceling = st;
        canceling[static_cast<size_t>(pos)] = ESymbol{a.I | b.I, a.J | b.J};
        canceling.erase(canceling.begin() + pos + 1);
        assert(measure(canceling) < measure(st));
        Step step{a.I, a.J, b.I, b.J};
        for (const CommutationPattern& p : explore(canceling)) {
            CommutationPattern with_step;
            with_step.reserve(p.size() + 1);
            with_step.push_back(step);
            with_step.insert(with_step.end(), p.begin(), p.end());
            result.push_back(std::move(with_step));
        }
        return memo.emplace(st, std::move(result)).first->second;
    }
};

}  // namespace

std::vector<int> default_mu_order(int m) {
    std::vector<int> o(static_cast<size_t>(m));
    std::iota(o.rbegin(), o.rend(), 0);
    return o;
}

std::vector<int> default_nu_order(int n) {
    std::vector<int> o(static_cast<size_t>(n));
    std::iota(o.begin(), o.end(), 0);
    return o;
}

std::vector<CommutationPattern> run_algorithm(const HurwitzInput& input,
                                              const std::vector<int>& mu_order,
                                              const std::vector<int>& nu_order) {
    int m = input.m(), n = input.n();
    if (static_cast<int>(mu_order.size()) != m || static_cast<int>(nu_order.size()) != n)
        throw Error("ordering length mismatch");
    State initial;
    for (int i : mu_order) initial.push_back(ESymbol{1u << i, 0});
    for (int j : nu_order) initial.push_back(ESymbol{0, 1u << j});
    Explorer ex{input, (1u << m) - 1, (1u << n) - 1, {}};
    std::vector<CommutationPattern> out = ex.explore(initial);
    for (const CommutationPattern& p : out)
        assert(static_cast<int>(p.size()) == m + n - 1);
    return out;
}

ClosedForm closed_form(const HurwitzInput& input) {
    return closed_form(input, default_mu_order(input.m()), default_nu_order(input.n()));
}

ClosedForm closed_form(const HurwitzInput& input, const std::vector<int>& mu_order,
                       const std::vector<int>& nu_order) {
    ClosedForm cf{input, mu_order, nu_order, run_algorithm(input, mu_order, nu_order)};
    return cf;
}

std::vector<long long> sigma_args(const CommutationPattern& p, const HurwitzInput& at) {
    std::vector<long long> args;
    args.reserve(p.size());
    for (const Step& s : p)
        args.push_back(subset_sum(at.mu, s.I) * subset_sum(at.nu, s.L) -
                       subset_sum(at.mu, s.K) * subset_sum(at.nu, s.J));
    return args;
}

LaurentSeries evaluate_series(const ClosedForm& cf, const HurwitzInput& at, int N) {
    if (at.m() != cf.input.m() || at.n() != cf.input.n())
        throw ChamberMismatch("evaluation point has different part counts");
    int M = N + 1;
    LaurentSeries num = LaurentSeries::zero(M);
    for (const CommutationPattern& p : cf.patterns) {
        LaurentSeries prod = LaurentSeries::one(M);
        for (long long q : sigma_args(p, at)) prod = prod * sigma_series(Rat(q), M);
        num = num + prod;
    }
    LaurentSeries result = num * inv_sigma_series(Rat(at.d()), M);
    Rat denom = 1;
    for (int p : at.mu.parts()) denom *= p;
    for (int p : at.nu.parts()) denom *= p;
    result = result.scaled(1 / denom).normalized();
    assert(result.pole_order() == 0);
    return result;
}

Rat hurwitz_number(const HurwitzInput& input, int r, int N) {
    if (N < 0) N = r + 2;
    ClosedForm cf = closed_form(input);
    LaurentSeries h = evaluate_series(cf, input, N);
    return Rat(factorial(static_cast<unsigned>(r))) * h.coeff(r);
}

std::vector<PhiEntry> phi_ordering(const HurwitzInput& input) {
    if (is_on_wall(input)) throw OnWall(0, 0, "phi ordering requires an off-wall input");
    std::vector<PhiEntry> phi;
    int m = input.m(), n = input.n();
    long long mu1 = input.mu.part(0), nu1 = input.nu.part(0);
    if (mu1 >= nu1) {
        phi.push_back({mu1, true, 0});
        phi.push_back({nu1, false, 0});
    } else {
        phi.push_back({nu1, false, 0});
        phi.push_back({mu1, true, 0});
    }
    long long energy = mu1 - nu1;
    int i = 1, j = 1;
    while (i < m || j < n) {
        bool take_nu = energy > 0 ? j < n : i >= m;
        if (take_nu) {
            phi.push_back({static_cast<long long>(input.nu.part(j)), false, j});
            energy -= input.nu.part(j);
            ++j;
        } else {
            phi.push_back({static_cast<long long>(input.mu.part(i)), true, i});
            energy += input.mu.part(i);
            ++i;
        }
    }
    return phi;
}

bool is_totally_negative(const HurwitzInput& input) {
    std::vector<PhiEntry> phi = phi_ordering(input);
    for (size_t k = 1; k < phi.size(); ++k) {
        long long later_other = 0;
        for (size_t l = k + 1; l < phi.size(); ++l)
            if (phi[l].from_mu != phi[k].from_mu) later_other += phi[l].value;
        if (phi[k].value <= later_other) return false;
    }
    return true;
}

std::vector<long long> product_formula(const HurwitzInput& input) {
    if (!is_totally_negative(input))
        throw NotTotallyNegative("input is not in a phi-totally negative chamber");
    std::vector<PhiEntry> phi = phi_ordering(input);
    std::vector<long long> args;
    for (size_t l = 1; l < phi.size(); ++l) {
        long long earlier_other = 0;
        for (size_t j = 0; j < l; ++j)
            if (phi[j].from_mu != phi[l].from_mu) earlier_other += phi[j].value;
        args.push_back(phi[l].value * earlier_other);
    }
    return args;
}

std::string to_latex(const ClosedForm& cf) {
    std::ostringstream os;
    os << "H_{\\mu,\\nu}(z)=\\frac{";
    bool first_pattern = true;
    for (const CommutationPattern& p : cf.patterns) {
        if (!first_pattern) os << "+";
        first_pattern = false;
        for (long long q : sigma_args(p, cf.input)) os << "\\varsigma(" << q << "z)";
    }
    os << "}{";
    for (int x : cf.input.mu.parts()) os << x << "\\cdot ";
    for (int x : cf.input.nu.parts()) os << x << "\\cdot ";
    os << "\\varsigma(" << cf.input.d() << "z)}";
    return os.str();
}

}  // namespace patterns
}  // namespace hurwitz

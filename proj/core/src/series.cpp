#include "hurwitz/series.hpp"

#include <algorithm>
#include <cassert>

#include "hurwitz/errors.hpp"

namespace hurwitz {

LaurentSeries::LaurentSeries(int pole, int order, std::vector<Rat> coeffs)
    : pole_(pole), order_(order), c_(std::move(coeffs)) {
    if (pole_ < 0) throw Error("negative pole order");
    assert(static_cast<int>(c_.size()) == pole_ + order_ + 1);
}

LaurentSeries LaurentSeries::zero(int order, int pole) {
    return LaurentSeries(pole, order, std::vector<Rat>(static_cast<size_t>(pole + order + 1)));
}

LaurentSeries LaurentSeries::one(int order) { return constant(1, order); }

LaurentSeries LaurentSeries::constant(const Rat& c, int order) {
    return monomial(0, c, order);
}

LaurentSeries LaurentSeries::monomial(int k, const Rat& c, int order) {
    int pole = std::max(0, -k);
    if (k > order) throw IncompatibleTruncation("monomial beyond truncation order");
    LaurentSeries s = zero(order, pole);
    s.c_[static_cast<size_t>(k + pole)] = c;
    return s;
}

Rat LaurentSeries::coeff(int k) const {
    if (k > order_)
        throw IncompatibleTruncation("coefficient " + std::to_string(k) +
                                     " beyond validity order " + std::to_string(order_));
    if (k < -pole_) return 0;
    return c_[static_cast<size_t>(k + pole_)];
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    int order = std::min(order_, o.order_);
    int pole = std::max(pole_, o.pole_);
    LaurentSeries r = zero(order, pole);
    for (int k = -pole; k <= order; ++k)
        r.c_[static_cast<size_t>(k + pole)] = coeff(k) + o.coeff(k);
    return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const {
    return *this + (-o);
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (Rat& c : r.c_) c = -c;
    return r;
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    int order = std::min(order_ - o.pole_, o.order_ - pole_);
    int pole = pole_ + o.pole_;
    if (order < -pole) throw IncompatibleTruncation("product has empty validity window");
    LaurentSeries r = zero(order, pole);
    for (int i = -pole_; i <= order_; ++i) {
        const Rat& a = c_[static_cast<size_t>(i + pole_)];
        if (a == 0) continue;
        for (int j = -o.pole_; j <= o.order_; ++j) {
            int k = i + j;
            if (k > order) break;
            const Rat& b = o.c_[static_cast<size_t>(j + o.pole_)];
            if (b == 0) continue;
            r.c_[static_cast<size_t>(k + pole)] += a * b;
        }
    }
    return r;
}

LaurentSeries LaurentSeries::scaled(const Rat& c) const {
    LaurentSeries r = *this;
    for (Rat& x : r.c_) x *= c;
    return r;
}

LaurentSeries LaurentSeries::composed_with_scalar(const Rat& c) const {
    if (c == 0 && pole_ > 0) throw ZeroArgument("cannot substitute z=0 into a pole");
    LaurentSeries r = *this;
    for (int k = -pole_; k <= order_; ++k) {
        Rat f = k >= 0 ? rat_pow(c, static_cast<unsigned>(k))
                       : 1 / rat_pow(c, static_cast<unsigned>(-k));
        r.c_[static_cast<size_t>(k + pole_)] *= f;
    }
    return r;
}

LaurentSeries LaurentSeries::truncated(int order) const {
    if (order > order_) throw IncompatibleTruncation("cannot extend validity by truncation");
    LaurentSeries r = zero(order, pole_);
    for (int k = -pole_; k <= order; ++k) r.c_[static_cast<size_t>(k + pole_)] = coeff(k);
    return r;
}

LaurentSeries LaurentSeries::normalized() const {
    int pole = pole_;
    while (pole > 0 && coeff(-pole) == 0) --pole;
    LaurentSeries r = zero(order_, pole);
    for (int k = -pole; k <= order_; ++k) r.c_[static_cast<size_t>(k + pole)] = coeff(k);
    return r;
}

bool LaurentSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x == 0; });
}

bool LaurentSeries::agrees_with(const LaurentSeries& o) const {
    int order = std::min(order_, o.order_);
    for (int k = -std::max(pole_, o.pole_); k <= order; ++k)
        if (coeff(k) != o.coeff(k)) return false;
    return true;
}

bool LaurentSeries::operator==(const LaurentSeries& o) const {
    return order_ == o.order_ && agrees_with(o);
}

LaurentSeries sigma_series(const Rat& a, int N) {
    if (N < 0) throw Error("negative truncation order");
    LaurentSeries s = LaurentSeries::zero(N);
    // 2 (a/2)^{2j+1} / (2j+1)!
    std::vector<Rat> c(static_cast<size_t>(N + 1));
    Rat half_a = a / 2;
    Rat term = 2 * half_a;  // j = 0
    for (int k = 1; k <= N; k += 2) {
        c[static_cast<size_t>(k)] = term;
        term *= half_a * half_a;
        term /= Rat((k + 1) * (k + 2));
    }
    return LaurentSeries(0, N, std::move(c));
}

LaurentSeries inv_sigma_series(const Rat& a, int N) {
    if (a == 0) throw ZeroArgument("inv_sigma_series: a = 0");
    // varsigma(az) = a z u(z), u(0) = 1; invert u through z^{N+1}.
    int M = N + 1;
    LaurentSeries sig = sigma_series(a, M + 1);
    std::vector<Rat> u(static_cast<size_t>(M + 1));
    for (int k = 0; k <= M; ++k) u[static_cast<size_t>(k)] = sig.coeff(k + 1) / a;
    std::vector<Rat> v(static_cast<size_t>(M + 1));
    v[0] = 1;
    for (int k = 1; k <= M; ++k) {
        Rat s = 0;
        for (int j = 1; j <= k; ++j) s += u[static_cast<size_t>(j)] * v[static_cast<size_t>(k - j)];
        v[static_cast<size_t>(k)] = -s;
    }
    // 1/varsigma(az) = (1/a) z^{-1} v(z)
    std::vector<Rat> c(static_cast<size_t>(N + 2));
    for (int k = -1; k <= N; ++k) c[static_cast<size_t>(k + 1)] = v[static_cast<size_t>(k + 1)] / a;
    return LaurentSeries(1, N, std::move(c));
}

LaurentSeries exp_series(const Rat& t, int N) {
    std::vector<Rat> c(static_cast<size_t>(N + 1));
    Rat term = 1;
    for (int k = 0; k <= N; ++k) {
        c[static_cast<size_t>(k)] = term;
        term *= t;
        term /= k + 1;
    }
    return LaurentSeries(0, N, std::move(c));
}

Rat bernoulli(unsigned k) {
    if (k % 2 == 1 && k > 1) throw OddIndex("bernoulli: odd index " + std::to_string(k));
    thread_local std::vector<Rat> cache{Rat(1)};
    while (cache.size() <= k) {
        unsigned n = static_cast<unsigned>(cache.size());
        // sum_{j=0}^{n} C(n+1, j) B_j = 0
        Rat s = 0;
        for (unsigned j = 0; j < n; ++j) s += Rat(binomial(n + 1, j)) * cache[j];
        cache.push_back(-s / Rat(binomial(n + 1, n)));
    }
    return cache[k];
}

}  // namespace hurwitz

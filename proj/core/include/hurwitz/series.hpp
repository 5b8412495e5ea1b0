#pragma once

#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

// Truncated Laurent series sum_{k=-p}^{N} c_k z^k with exact rational
// coefficients.  Multiplication tracks the order through which the result
// is valid: (valid to N1, pole p1) * (valid to N2, pole p2) is valid to
// min(N1 - p2, N2 - p1).
class LaurentSeries {
public:
    LaurentSeries() : pole_(0), order_(-1) {}
    LaurentSeries(int pole, int order, std::vector<Rat> coeffs);

    static LaurentSeries zero(int order, int pole = 0);
    static LaurentSeries one(int order);
    static LaurentSeries constant(const Rat& c, int order);
    static LaurentSeries monomial(int k, const Rat& c, int order);

    int pole_order() const { return pole_; }
    int order() const { return order_; }

    // Coefficient of z^k.  Zero below the pole; IncompatibleTruncation
    // beyond the validity order.
    Rat coeff(int k) const;

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries operator-() const;
    LaurentSeries scaled(const Rat& c) const;
    // z -> c*z
    LaurentSeries composed_with_scalar(const Rat& c) const;
    LaurentSeries truncated(int order) const;
    // Drop zero leading coefficients, reducing the pole order (never below 0).
    LaurentSeries normalized() const;

    bool is_zero() const;
    // Equality of coefficients through the common validity order.
    bool agrees_with(const LaurentSeries& o) const;
    bool operator==(const LaurentSeries& o) const;

private:
    int pole_;   // p >= 0
    int order_;  // N
    std::vector<Rat> c_;  // c_[i] = coefficient of z^{i - pole_}
};

// varsigma(az) = e^{az/2} - e^{-az/2} through z^N (a power series).
LaurentSeries sigma_series(const Rat& a, int N);

// 1/varsigma(az), pole order 1, valid through z^N.  Throws ZeroArgument.
LaurentSeries inv_sigma_series(const Rat& a, int N);

// exp(t z) through z^N.
LaurentSeries exp_series(const Rat& t, int N);

// Bernoulli number B_k (B_1 = -1/2); OddIndex for odd k > 1.
Rat bernoulli(unsigned k);

}  // namespace hurwitz

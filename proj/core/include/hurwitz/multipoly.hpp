#pragma once

#include <map>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

// Sparse multivariate polynomial over Q.  Exponent vectors are keyed in
// lexicographic order; zero coefficients are never stored.
class MultiPoly {
public:
    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(const Rat& c, int nvars);
    static MultiPoly var(int i, int nvars);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(const Rat& c) const;
    MultiPoly pow(unsigned e) const;
    bool operator==(const MultiPoly& o) const;

    int degree() const;  // -1 for the zero polynomial
    MultiPoly homogeneous_component(int deg) const;
    std::vector<int> degrees_present() const;  // sorted, distinct total degrees
    bool is_homogeneous() const;

    // Exact quotient; throws InexactDivision on a nonzero remainder.
    MultiPoly divide_exact(const MultiPoly& divisor) const;

    Rat eval(const std::vector<Rat>& point) const;

    void add_term(std::vector<int> exponents, const Rat& c);

private:
    int nvars_;
    std::map<std::vector<int>, Rat> terms_;
};

}  // namespace hurwitz

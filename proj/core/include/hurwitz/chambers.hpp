#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hurwitz/multipoly.hpp"
#include "hurwitz/partitions.hpp"
#include "hurwitz/patterns.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {
namespace chambers {

// Canonical wall W_{I,J}: nonempty proper I, J with mu-index 1 in I
// (W_{I,J} and W_{I^c,J^c} are the same hyperplane).
struct Wall {
    uint32_t I = 0, J = 0;
    bool operator==(const Wall&) const = default;
    auto operator<=>(const Wall&) const = default;
};

std::vector<Wall> wall_list(int m, int n);

// Signs of |mu_I| - |nu_J| over the canonical walls, in wall_list order.
struct ChamberSignature {
    int m = 0, n = 0;
    std::vector<int> signs;  // +1 / -1 per wall
    bool operator==(const ChamberSignature&) const = default;
};

ChamberSignature chamber_signature(const HurwitzInput& input);

// Symbolic coordinates: variables mu_1..mu_m, nu_1..nu_{n-1};
// nu_n is eliminated as sum(mu) - sum_{j<n} nu_j.
int sym_nvars(int m, int n);
MultiPoly sym_mu(int i, int m, int n);      // 0-based
MultiPoly sym_nu(int j, int m, int n);      // 0-based; j = n-1 gives the eliminated form
MultiPoly sym_d(int m, int n);
std::vector<Rat> sym_point(const HurwitzInput& input);

struct ChamberPolynomial {
    ChamberSignature chamber;
    int m = 0, n = 0, g = 0;
    MultiPoly full;                     // P^{c,r} = sum_k (-1)^k components[k]
    std::vector<MultiPoly> components;  // components[k] = P_{g,k}, k = 0..g
};

// P^{c,r} for the chamber of `sample`, expanded from the closed form.
ChamberPolynomial symbolic_polynomial(const HurwitzInput& sample, int g);

struct SppReport {
    bool ok = true;
    std::vector<std::string> lines;
    void check(bool cond, const std::string& what);
};

// Degree set, parity, lower degree bound, and positivity of each P_{g,k}
// at every sample point.
SppReport verify_spp(const ChamberPolynomial& cp, const std::vector<HurwitzInput>& samples);

// Unique interpolant of degree <= 4g-3+m+n through oracle values at the
// lattice points; the independent cross-check of symbolic_polynomial.
MultiPoly interpolate_polynomial(const HurwitzInput& sample, int g,
                                 const std::vector<HurwitzInput>& lattice);

struct WallCrossingSpec {
    uint32_t I = 0, J = 0;  // delta = |mu_I| - |nu_J| increases across the wall
};

LaurentSeries wall_crossing_lhs(const HurwitzInput& target, const WallCrossingSpec& wall,
                                const HurwitzInput& p1, const HurwitzInput& p2, int N);

LaurentSeries wall_crossing_rhs(const HurwitzInput& target, const WallCrossingSpec& wall,
                                int N);

// Randomized integer search for an off-wall point, optionally matching a
// prescribed signature.  Deterministic for a fixed seed.
HurwitzInput sample_off_wall(int m, int n, uint64_t seed, int bound = 40);
HurwitzInput sample_in_chamber(const ChamberSignature& sig, uint64_t seed, int bound = 60);

// Distinct signatures found by seeded sampling.
std::vector<ChamberSignature> enumerate_signatures(int m, int n, uint64_t seed,
                                                   int attempts = 20000, int bound = 40);

}  // namespace chambers
}  // namespace hurwitz

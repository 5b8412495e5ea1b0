#include <doctest.h>

#include <hurwitz/errors.hpp>
#include <hurwitz/fock.hpp>
#include <hurwitz/partitions.hpp>

using namespace hurwitz;
using fock::OperatorSymbol;

namespace {

fock::RatVector basis(const Partition& lambda, int cutoff) {
    fock::RatVector v;
    v.cutoff = cutoff;
    v.terms.emplace(lambda, Rat(1));
    return v;
}

fock::SeriesVector series_basis(const Partition& lambda, int cutoff, int N) {
    fock::SeriesVector v;
    v.cutoff = cutoff;
    v.terms.emplace(lambda, LaurentSeries::one(N));
    return v;
}

bool same_terms(const fock::SeriesVector& a, const fock::SeriesVector& b) {
    for (const auto& [k, c] : a.terms) {
        auto it = b.terms.find(k);
        LaurentSeries other = it == b.terms.end() ? LaurentSeries::zero(c.order()) : it->second;
        if (!c.agrees_with(other)) return false;
    }
    for (const auto& [k, c] : b.terms)
        if (a.terms.find(k) == a.terms.end() && !c.is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("alpha acts by signed border strips") {
    // alpha_2 v_{(3,2,2)} = v_{(3,2)} - v_{(3,1,1)}
    fock::RatVector out = fock::apply_alpha(2, basis(Partition({3, 2, 2}), 7));
    REQUIRE(out.terms.size() == 2);
    CHECK(out.terms.at(Partition({3, 2})) == 1);
    CHECK(out.terms.at(Partition({3, 1, 1})) == -1);
    CHECK_THROWS_AS(fock::apply_alpha(0, basis(Partition{}, 3)), Error);
}

TEST_CASE("boson commutation relations [alpha_n, alpha_m] = n delta_{n,-m}") {
    for (int d = 0; d <= 8; ++d) {
        for (const Partition& lambda : partitions_of(d)) {
            for (int n = -4; n <= 4; ++n) {
                for (int m = -4; m <= 4; ++m) {
                    if (n == 0 || m == 0) continue;
                    int cutoff = d + std::abs(n) + std::abs(m);
                    fock::RatVector v = basis(lambda, cutoff);
                    fock::RatVector nm = fock::apply_alpha(n, fock::apply_alpha(m, v));
                    fock::RatVector mn = fock::apply_alpha(m, fock::apply_alpha(n, v));
                    fock::RatVector comm;
                    comm.cutoff = cutoff;
                    for (const auto& [k, c] : nm.terms) comm.add(k, c);
                    for (const auto& [k, c] : mn.terms) comm.add(k, -c);
                    if (n + m == 0) {
                        REQUIRE(comm.terms.size() == 1);
                        CHECK(comm.terms.at(lambda) == n);
                    } else {
                        CHECK(comm.terms.empty());
                    }
                }
            }
        }
    }
}

TEST_CASE("alpha products expand in characters (Murnaghan-Nakayama on the wedge)") {
    for (int d = 1; d <= 6; ++d) {
        for (const Partition& mu : partitions_of(d)) {
            fock::RatVector v = fock::vacuum(d);
            for (int i = mu.length() - 1; i >= 0; --i) v = fock::apply_alpha(-mu.part(i), v);
            for (const Partition& lambda : partitions_of(d)) {
                auto it = v.terms.find(lambda);
                Rat found = it == v.terms.end() ? Rat(0) : it->second;
                CHECK(found == Rat(character(lambda, mu)));
            }
            // adjoint direction: prod alpha_{mu_i} v_lambda = chi^lambda_mu |0>
            for (const Partition& lambda : partitions_of(d)) {
                fock::RatVector w = basis(lambda, d);
                for (int i = 0; i < mu.length(); ++i) w = fock::apply_alpha(mu.part(i), w);
                auto vac = w.terms.find(Partition{});
                Rat found = vac == w.terms.end() ? Rat(0) : vac->second;
                CHECK(found == Rat(character(lambda, mu)));
            }
        }
    }
}

TEST_CASE("F2 is diagonal with content-sum eigenvalues") {
    fock::RatVector v = basis(Partition({3, 1}), 4);
    fock::RatVector out = fock::apply_f2(v);
    REQUIRE(out.terms.size() == 1);
    CHECK(out.terms.at(Partition({3, 1})) == central_character_f2(Partition({3, 1})));
}

TEST_CASE("E_r at argument zero reduces to alpha_r") {
    for (int d = 0; d <= 5; ++d) {
        for (const Partition& lambda : partitions_of(d)) {
            for (int r : {-3, -2, -1, 1, 2, 3}) {
                int cutoff = d + std::abs(r);
                fock::SeriesVector got =
                    fock::apply_E(r, Rat(0), series_basis(lambda, cutoff, 5), 5);
                fock::RatVector expect = fock::apply_alpha(r, basis(lambda, cutoff));
                fock::SeriesVector want;
                want.cutoff = cutoff;
                for (const auto& [k, c] : expect.terms)
                    want.add(k, LaurentSeries::constant(c, 5));
                CHECK(same_terms(got, want));
            }
        }
    }
}

TEST_CASE("E_{-2}(2z) on the vacuum weights strips by exponentials") {
    // E_{-2}(2z)|0> = e^z v_{(2)} - e^{-z} v_{(1,1)}
    fock::SeriesVector out = fock::apply_E(-2, Rat(2), fock::series_vacuum(2, 8), 8);
    REQUIRE(out.terms.size() == 2);
    CHECK(out.terms.at(Partition({2})).agrees_with(exp_series(Rat(1), 8)));
    CHECK(out.terms.at(Partition({1, 1})).agrees_with(-exp_series(Rat(-1), 8)));
}

TEST_CASE("conjugation identity e^{zF2} alpha_{-n} e^{-zF2} = E_{-n}(nz)") {
    int N = 8;
    for (int d = 0; d <= 5; ++d) {
        for (const Partition& lambda : partitions_of(d)) {
            for (int n = 1; n <= 4; ++n) {
                int cutoff = d + n;
                long long f_in = central_character_f2(lambda);
                fock::SeriesVector lhs;
                lhs.cutoff = cutoff;
                for (const BorderStrip& s : addable_strips(lambda, n)) {
                    LaurentSeries w =
                        exp_series(Rat(central_character_f2(s.result) - f_in), N);
                    lhs.add(s.result, s.sign > 0 ? w : -w);
                }
                fock::SeriesVector rhs =
                    fock::apply_E(-n, Rat(n), series_basis(lambda, cutoff, N), N);
                CHECK(same_terms(lhs, rhs));
            }
        }
    }
}

TEST_CASE("E commutator [E_r(az), E_s(bz)] = sigma((rb-sa)z) E_{r+s}((a+b)z)") {
    int N = 6;
    for (int d = 0; d <= 4; ++d) {
        for (const Partition& lambda : partitions_of(d)) {
            for (int r = -2; r <= 2; ++r) {
                for (int s = -2; s <= 2; ++s) {
                    for (int a = 1; a <= 2; ++a) {
                        for (int b = 1; b <= 3; b += 2) {
                            int cutoff = d + std::abs(r) + std::abs(s) + 1;
                            fock::SeriesVector v = series_basis(lambda, cutoff, N);
                            fock::SeriesVector rs =
                                fock::apply_E(r, Rat(a), fock::apply_E(s, Rat(b), v, N), N);
                            fock::SeriesVector sr =
                                fock::apply_E(s, Rat(b), fock::apply_E(r, Rat(a), v, N), N);
                            fock::SeriesVector comm;
                            comm.cutoff = cutoff;
                            for (const auto& [k, c] : rs.terms) comm.add(k, c);
                            for (const auto& [k, c] : sr.terms) comm.add(k, -c);
                            LaurentSeries factor = sigma_series(Rat(r * b - s * a), N);
                            fock::SeriesVector want;
                            want.cutoff = cutoff;
                            for (const auto& [k, c] :
                                 fock::apply_E(r + s, Rat(a + b), v, N).terms)
                                want.add(k, c * factor);
                            CHECK(same_terms(comm, want));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("two-point function <E_r(az) E_{-r}(bz)> = sigma(r(a+b)z)/sigma((a+b)z)") {
    for (int r = 1; r <= 4; ++r) {
        for (int a = 0; a <= 2; ++a) {
            int b = 3 - a;
            LaurentSeries got = fock::vacuum_expectation(
                {OperatorSymbol::e(r, Rat(a)), OperatorSymbol::e(-r, Rat(b))}, 10);
            LaurentSeries want =
                (sigma_series(Rat(r * (a + b)), 11) * inv_sigma_series(Rat(a + b), 11))
                    .normalized();
            CHECK(got.agrees_with(want));
        }
    }
}

TEST_CASE("vacuum expectation reproduces the character-sum Hurwitz numbers") {
    for (int d = 1; d <= 5; ++d) {
        for (const Partition& mu : partitions_of(d)) {
            for (const Partition& nu : partitions_of(d)) {
                for (int r = 0; r <= 4; ++r) {
                    std::vector<OperatorSymbol> ops;
                    for (int i = 0; i < mu.length(); ++i)
                        ops.push_back(OperatorSymbol::alpha(mu.part(i)));
                    for (int k = 0; k < r; ++k) ops.push_back(OperatorSymbol::f2());
                    for (int j = 0; j < nu.length(); ++j)
                        ops.push_back(OperatorSymbol::alpha(-nu.part(j)));
                    Rat denom = 1;
                    for (int p : mu.parts()) denom *= p;
                    for (int p : nu.parts()) denom *= p;
                    CHECK(fock::vacuum_expectation(ops, 0).coeff(0) / denom ==
                          hurwitz_oracle(HurwitzInput{mu, nu}, r));
                }
            }
        }
    }
}

TEST_CASE("cutoff accounting") {
    std::vector<OperatorSymbol> ops = {OperatorSymbol::alpha(3), OperatorSymbol::alpha(2),
                                       OperatorSymbol::alpha(-2), OperatorSymbol::alpha(-3)};
    CHECK(fock::required_cutoff(ops) == 5);
    CHECK_THROWS_AS(fock::vacuum_expectation(ops, 0, 4), CutoffTooSmall);
    CHECK(fock::vacuum_expectation(ops, 0, 5).coeff(0) == 6);  // [a_3,a_-3][a_2,a_-2]
    fock::RatVector tight = fock::vacuum(1);
    CHECK_THROWS_AS(fock::apply_alpha(-2, tight), CutoffExceeded);
}

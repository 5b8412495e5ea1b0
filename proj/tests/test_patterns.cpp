#include <doctest.h>

#include <algorithm>
#include <set>

#include <hurwitz/errors.hpp>
#include <hurwitz/partitions.hpp>
#include <hurwitz/patterns.hpp>

using namespace hurwitz;

namespace {

std::multiset<long long> arg_multiset(const patterns::CommutationPattern& p,
                                      const HurwitzInput& at) {
    std::vector<long long> args = patterns::sigma_args(p, at);
    return std::multiset<long long>(args.begin(), args.end());
}

// partitions of d with exactly k parts
std::vector<Partition> partitions_with_length(int d, int k) {
    std::vector<Partition> out;
    for (const Partition& p : partitions_of(d))
        if (p.length() == k) out.push_back(p);
    return out;
}

}  // namespace

TEST_CASE("default operator ordering is center-out") {
    CHECK(patterns::default_mu_order(3) == std::vector<int>{2, 1, 0});
    CHECK(patterns::default_nu_order(3) == std::vector<int>{0, 1, 2});
}

TEST_CASE("(5,2;4,3) has the one-term form under the default ordering") {
    HurwitzInput in{Partition({5, 2}), Partition({4, 3})};
    patterns::ClosedForm cf = patterns::closed_form(in);
    REQUIRE(cf.patterns.size() == 1);
    CHECK(arg_multiset(cf.patterns[0], in) == std::multiset<long long>{20, 15, 14});
    CHECK(patterns::to_latex(cf) ==
          "H_{\\mu,\\nu}(z)=\\frac{\\varsigma(20z)\\varsigma(15z)\\varsigma(14z)}"
          "{5\\cdot 2\\cdot 4\\cdot 3\\cdot \\varsigma(7z)}");
}

TEST_CASE("(5,2;4,3) has the two-term form under the reversed mu ordering") {
    HurwitzInput in{Partition({5, 2}), Partition({4, 3})};
    patterns::ClosedForm cf = patterns::closed_form(in, {0, 1}, {0, 1});
    REQUIRE(cf.patterns.size() == 2);
    std::multiset<std::multiset<long long>> got{arg_multiset(cf.patterns[0], in),
                                               arg_multiset(cf.patterns[1], in)};
    // sigma arguments of the two branches:
    // {nu2 mu2, mu1 nu1, mu1 nu2 - mu2 nu1} and {mu2 nu1, mu1 nu1, d nu2}
    std::multiset<std::multiset<long long>> want{{6, 20, 7}, {8, 20, 21}};
    CHECK(got == want);
}

TEST_CASE("the two 2+2 orderings give equal series through z^25") {
    HurwitzInput in{Partition({5, 2}), Partition({4, 3})};
    LaurentSeries nice = patterns::evaluate_series(patterns::closed_form(in), in, 25);
    LaurentSeries ugly =
        patterns::evaluate_series(patterns::closed_form(in, {0, 1}, {0, 1}), in, 25);
    CHECK(nice == ugly);
}

TEST_CASE("one-part closed forms have the product shape with arguments d nu_j") {
    for (int d = 1; d <= 8; ++d) {
        for (const Partition& nu : partitions_of(d)) {
            if (nu.length() > 4) continue;
            HurwitzInput in{Partition({d}), nu};
            patterns::ClosedForm cf = patterns::closed_form(in);
            REQUIRE(cf.patterns.size() == 1);
            std::multiset<long long> want;
            for (int p : nu.parts()) want.insert(static_cast<long long>(d) * p);
            CHECK(arg_multiset(cf.patterns[0], in) == want);
        }
    }
}

TEST_CASE("closed form agrees with the character oracle off walls") {
    for (int d = 1; d <= 5; ++d) {
        for (const Partition& mu : partitions_of(d)) {
            if (mu.length() > 3) continue;
            for (const Partition& nu : partitions_of(d)) {
                if (nu.length() > 3) continue;
                HurwitzInput in{mu, nu};
                if (is_on_wall(in)) continue;
                for (int g = 0; g <= 2; ++g) {
                    int r = in.r_for_genus(g);
                    CHECK(patterns::hurwitz_number(in, r) == hurwitz_oracle(in, r));
                }
            }
        }
    }
}

TEST_CASE("closed forms evaluate at other points of the same shape") {
    HurwitzInput sample{Partition({5, 2}), Partition({4, 3})};
    HurwitzInput other{Partition({7, 3}), Partition({6, 4})};  // same chamber signature
    patterns::ClosedForm cf = patterns::closed_form(sample);
    LaurentSeries moved = patterns::evaluate_series(cf, other, 10);
    LaurentSeries direct = patterns::evaluate_series(patterns::closed_form(other), other, 10);
    CHECK(moved == direct);
    HurwitzInput wrong_shape{Partition({4}), Partition({2, 2})};
    CHECK_THROWS_AS(patterns::evaluate_series(cf, wrong_shape, 10), ChamberMismatch);
}

TEST_CASE("on-wall inputs are rejected") {
    HurwitzInput in{Partition({2, 1}), Partition({2, 1})};
    CHECK_THROWS_AS(patterns::closed_form(in), OnWall);
    CHECK_THROWS_AS(patterns::phi_ordering(in), OnWall);
    try {
        patterns::closed_form(in);
    } catch (const OnWall& e) {
        CHECK((e.I != 0 || e.J != 0));
    }
}

TEST_CASE("phi ordering interleaves the parts at (5,2;4,3)") {
    HurwitzInput in{Partition({5, 2}), Partition({4, 3})};
    std::vector<patterns::PhiEntry> phi = patterns::phi_ordering(in);
    REQUIRE(phi.size() == 4);
    CHECK(phi[0].value == 5);
    CHECK(phi[0].from_mu);
    CHECK(phi[1].value == 4);
    CHECK(!phi[1].from_mu);
    CHECK(phi[2].value == 3);
    CHECK(!phi[2].from_mu);
    CHECK(phi[3].value == 2);
    CHECK(phi[3].from_mu);
    CHECK(patterns::is_totally_negative(in));
    std::vector<long long> args = patterns::product_formula(in);
    CHECK(std::multiset<long long>(args.begin(), args.end()) ==
          std::multiset<long long>{20, 15, 14});
}

TEST_CASE("singleton pattern sets characterize phi-totally-negative chambers") {
    for (int d = 2; d <= 8; ++d) {
        for (auto [lm, ln] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
            for (const Partition& mu : partitions_with_length(d, lm)) {
                for (const Partition& nu : partitions_with_length(d, ln)) {
                    HurwitzInput in{mu, nu};
                    if (is_on_wall(in)) continue;
                    patterns::ClosedForm cf = patterns::closed_form(in);
                    bool tn = patterns::is_totally_negative(in);
                    CHECK((cf.patterns.size() == 1) == tn);
                    if (tn) {
                        std::vector<long long> args = patterns::product_formula(in);
                        CHECK(std::multiset<long long>(args.begin(), args.end()) ==
                              arg_multiset(cf.patterns[0], in));
                    } else {
                        CHECK_THROWS_AS(patterns::product_formula(in), NotTotallyNegative);
                    }
                }
            }
        }
    }
}

TEST_CASE("pattern count and steps are well formed") {
    HurwitzInput in{Partition({6, 2, 1}), Partition({5, 4})};
    REQUIRE(!is_on_wall(in));
    patterns::ClosedForm cf = patterns::closed_form(in);
    CHECK(!cf.patterns.empty());
    for (const patterns::CommutationPattern& p : cf.patterns) {
        CHECK(p.size() == 4);  // m + n - 1
        const patterns::Step& last = p.back();
        CHECK((last.I | last.K) == 0b111u);
        CHECK((last.J | last.L) == 0b11u);
    }
}

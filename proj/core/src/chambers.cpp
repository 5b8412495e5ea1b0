#include "hurwitz/chambers.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <random>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {
namespace chambers {

namespace {

long long subset_sum(const Partition& p, uint32_t mask) {
    long long s = 0;
    for (int i = 0; i < p.length(); ++i)
        if (mask & (1u << i)) s += p.part(i);
    return s;
}

}  // namespace

std::vector<Wall> wall_list(int m, int n) {
    std::vector<Wall> walls;
    uint32_t full_i = (1u << m) - 1, full_j = (1u << n) - 1;
    // Walls with an empty side cannot meet R_{m,n} (parts are positive), and
    // I = [m] would force |nu_J| = d for proper J.  Canonical form: 1 in I.
    for (uint32_t I = 1; I < full_i; ++I) {
        if (!(I & 1u)) continue;
        for (uint32_t J = 1; J < full_j; ++J) walls.push_back({I, J});
    }
    return walls;
}

ChamberSignature chamber_signature(const HurwitzInput& input) {
    ChamberSignature sig;
    sig.m = input.m();
    sig.n = input.n();
    for (const Wall& w : wall_list(sig.m, sig.n)) {
        long long diff = subset_sum(input.mu, w.I) - subset_sum(input.nu, w.J);
        if (diff == 0) throw OnWall(w.I, w.J, "input lies on a resonance wall");
        sig.signs.push_back(diff > 0 ? 1 : -1);
    }
    return sig;
}

int sym_nvars(int m, int n) { return m + n - 1; }

MultiPoly sym_mu(int i, int m, int n) {
    assert(i >= 0 && i < m);
    return MultiPoly::var(i, sym_nvars(m, n));
}

MultiPoly sym_nu(int j, int m, int n) {
    assert(j >= 0 && j < n);
    int v = sym_nvars(m, n);
    if (j < n - 1) return MultiPoly::var(m + j, v);
    MultiPoly p(v);
    for (int i = 0; i < m; ++i) p = p + MultiPoly::var(i, v);
    for (int k = 0; k < n - 1; ++k) p = p - MultiPoly::var(m + k, v);
    return p;
}

MultiPoly sym_d(int m, int n) {
    MultiPoly p(sym_nvars(m, n));
    for (int i = 0; i < m; ++i) p = p + MultiPoly::var(i, sym_nvars(m, n));
    return p;
}

std::vector<Rat> sym_point(const HurwitzInput& input) {
    std::vector<Rat> pt;
    for (int i = 0; i < input.m(); ++i) pt.emplace_back(input.mu.part(i));
    for (int j = 0; j + 1 < input.n(); ++j) pt.emplace_back(input.nu.part(j));
    return pt;
}

namespace {

MultiPoly sym_subset_mu(uint32_t mask, int m, int n) {
    MultiPoly p(sym_nvars(m, n));
    for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) p = p + sym_mu(i, m, n);
    return p;
}

MultiPoly sym_subset_nu(uint32_t mask, int m, int n) {
    MultiPoly p(sym_nvars(m, n));
    for (int j = 0; j < n; ++j)
        if (mask & (1u << j)) p = p + sym_nu(j, m, n);
    return p;
}

// Coefficients of z^t in the product over sigma(Q_l z), as polynomials,
// through z^order.
std::vector<MultiPoly> sigma_product_series(const std::vector<MultiPoly>& qs, int order,
                                            int nvars) {
    std::vector<MultiPoly> acc(static_cast<size_t>(order) + 1, MultiPoly(nvars));
    acc[0] = MultiPoly::constant(1, nvars);
    for (const MultiPoly& q : qs) {
        // sigma(Qz) = sum_{t odd} Q^t / (4^{(t-1)/2} t!) z^t
        std::vector<MultiPoly> factor(static_cast<size_t>(order) + 1, MultiPoly(nvars));
        Rat c = 1;
        MultiPoly qpow = q;
        for (int t = 1; t <= order; t += 2) {
            if (t > 1) {
                qpow = qpow * q * q;
                c /= 4 * (t - 1) * t;
            }
            factor[static_cast<size_t>(t)] = qpow.scaled(c);
        }
        std::vector<MultiPoly> next(static_cast<size_t>(order) + 1, MultiPoly(nvars));
        for (int a = 0; a <= order; ++a) {
            if (acc[static_cast<size_t>(a)].is_zero()) continue;
            for (int b = 1; a + b <= order; b += 2)
                next[static_cast<size_t>(a + b)] =
                    next[static_cast<size_t>(a + b)] +
                    acc[static_cast<size_t>(a)] * factor[static_cast<size_t>(b)];
        }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

ChamberPolynomial symbolic_polynomial(const HurwitzInput& sample, int g) {
    if (g < 0) throw Error("negative genus");
    int m = sample.m(), n = sample.n(), v = sym_nvars(m, n);
    int r = sample.r_for_genus(g);
    ChamberPolynomial cp;
    cp.chamber = chamber_signature(sample);
    cp.m = m;
    cp.n = n;
    cp.g = g;

    patterns::ClosedForm cf = patterns::closed_form(sample);
    std::vector<MultiPoly> p_coeff(static_cast<size_t>(r) + 2, MultiPoly(v));
    for (const patterns::CommutationPattern& pat : cf.patterns) {
        std::vector<MultiPoly> qs;
        for (const patterns::Step& s : pat)
            qs.push_back(sym_subset_mu(s.I, m, n) * sym_subset_nu(s.L, m, n) -
                         sym_subset_mu(s.K, m, n) * sym_subset_nu(s.J, m, n));
        std::vector<MultiPoly> prod = sigma_product_series(qs, r + 1, v);
        for (int t = 0; t <= r + 1; ++t)
            p_coeff[static_cast<size_t>(t)] = p_coeff[static_cast<size_t>(t)] + prod[static_cast<size_t>(t)];
    }

    // [z^r] of (sum_P prod sigma) / sigma(dz): the z^{-1} term of 1/sigma(dz)
    // contributes P_{r+1}/d; the rest are rational multiples of d^t P_{r-t}.
    MultiPoly dpoly = sym_d(m, n);
    LaurentSeries inv = inv_sigma_series(1, r + 1);
    MultiPoly coeff = p_coeff[static_cast<size_t>(r) + 1].divide_exact(dpoly);
    for (int t = 1; t <= r; t += 2)
        coeff = coeff + (dpoly.pow(static_cast<unsigned>(t)) *
                         p_coeff[static_cast<size_t>(r - t)]).scaled(inv.coeff(t));

    coeff = coeff.scaled(Rat(factorial(static_cast<unsigned>(r))));
    for (int i = 0; i < m; ++i) coeff = coeff.divide_exact(sym_mu(i, m, n));
    for (int j = 0; j < n; ++j) coeff = coeff.divide_exact(sym_nu(j, m, n));

    cp.full = coeff;
    int top = 4 * g - 3 + m + n;
    for (int k = 0; k <= g; ++k) {
        MultiPoly comp = top - 2 * k >= 0 ? coeff.homogeneous_component(top - 2 * k)
                                          : MultiPoly(v);
        if (k % 2 == 1) comp = -comp;
        cp.components.push_back(std::move(comp));
    }
    return cp;
}

void SppReport::check(bool cond, const std::string& what) {
    lines.push_back(std::string(cond ? "PASS " : "FAIL ") + what);
    if (!cond) ok = false;
}

SppReport verify_spp(const ChamberPolynomial& cp, const std::vector<HurwitzInput>& samples) {
    SppReport rep;
    int top = 4 * cp.g - 3 + cp.m + cp.n;
    std::vector<int> allowed;
    for (int k = 0; k <= cp.g; ++k)
        if (top - 2 * k >= 0) allowed.push_back(top - 2 * k);

    std::vector<int> degs = cp.full.degrees_present();
    bool deg_ok = std::all_of(degs.begin(), degs.end(), [&](int d) {
        return std::find(allowed.begin(), allowed.end(), d) != allowed.end();
    });
    rep.check(deg_ok, "homogeneous degrees within {4g-3+m+n-2k}");

    bool parity_ok = std::all_of(degs.begin(), degs.end(),
                                 [&](int d) { return (d - top) % 2 == 0; });
    rep.check(parity_ok, "polynomial parity matches 4g-3+m+n");

    int low = 2 * cp.g - 3 + cp.m + cp.n;
    bool low_ok = degs.empty() || degs.front() >= low;
    rep.check(low_ok, "lowest degree >= 2g-3+m+n");

    for (const HurwitzInput& s : samples) {
        if (!(chamber_signature(s) == cp.chamber))
            throw ChamberMismatch("spp sample outside the chamber");
        std::vector<Rat> pt = sym_point(s);
        for (size_t k = 0; k < cp.components.size(); ++k) {
            if (cp.components[k].is_zero()) continue;
            std::ostringstream what;
            what << "P_{g," << k << "} > 0 at mu=";
            for (int x : s.mu.parts()) what << x << ",";
            what << " nu=";
            for (int x : s.nu.parts()) what << x << ",";
            rep.check(cp.components[k].eval(pt) > 0, what.str());
        }
    }
    return rep;
}

MultiPoly interpolate_polynomial(const HurwitzInput& sample, int g,
                                 const std::vector<HurwitzInput>& lattice) {
    int m = sample.m(), n = sample.n(), v = sym_nvars(m, n);
    int deg = 4 * g - 3 + m + n;
    int r = sample.r_for_genus(g);
    if (deg < 0) throw Error("interpolation undefined for negative formal degree");
    ChamberSignature sig = chamber_signature(sample);

    // All monomials of total degree <= deg.
    std::vector<std::vector<int>> monos;
    std::vector<int> e(static_cast<size_t>(v), 0);
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == v) {
            monos.push_back(e);
            return;
        }
        for (int x = 0; x <= remaining; ++x) {
            e[static_cast<size_t>(i)] = x;
            self(self, i + 1, remaining - x);
        }
        e[static_cast<size_t>(i)] = 0;
    };
    rec(rec, 0, deg);
    size_t cols = monos.size();
    if (lattice.size() < cols)
        throw SingularSystem("insufficient lattice points: need " + std::to_string(cols));

    // Exact Gaussian elimination on the augmented system.
    std::vector<std::vector<Rat>> rows;
    for (const HurwitzInput& pt : lattice) {
        if (!(chamber_signature(pt) == sig))
            throw ChamberMismatch("lattice point outside the chamber");
        std::vector<Rat> x = sym_point(pt);
        std::vector<Rat> row;
        row.reserve(cols + 1);
        for (const auto& mono : monos) {
            Rat t = 1;
            for (int i = 0; i < v; ++i)
                if (mono[static_cast<size_t>(i)] > 0)
                    t *= rat_pow(x[static_cast<size_t>(i)],
                                 static_cast<unsigned>(mono[static_cast<size_t>(i)]));
            row.push_back(t);
        }
        row.push_back(hurwitz_oracle(pt, r));
        rows.push_back(std::move(row));
    }

    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        Rat inv = 1 / rows[rank][col];
        for (size_t j = col; j <= cols; ++j) rows[rank][j] *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            Rat f = rows[i][col];
            for (size_t j = col; j <= cols; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    if (rank < cols) throw SingularSystem("degenerate lattice: rank " + std::to_string(rank) +
                                          " < " + std::to_string(cols));
    for (size_t i = rank; i < rows.size(); ++i)
        if (rows[i][cols] != 0) throw SingularSystem("inconsistent oracle system");

    // Rebuild the solution: after full reduction row i has a single pivot.
    MultiPoly result(v);
    for (size_t i = 0; i < rank; ++i) {
        size_t col = 0;
        while (col < cols && rows[i][col] == 0) ++col;
        assert(col < cols);
        result.add_term(monos[col], rows[i][cols]);
    }
    return result;
}

namespace {

Wall canonical_wall(uint32_t I, uint32_t J, int m, int n) {
    uint32_t full_i = (1u << m) - 1, full_j = (1u << n) - 1;
    if (I == 0 || J == 0 || I == full_i || J == full_j)
        throw Error("wall subsets must be nonempty and proper");
    if (I & 1u) return {I, J};
    return {full_i & ~I, full_j & ~J};
}

}  // namespace

LaurentSeries wall_crossing_lhs(const HurwitzInput& target, const WallCrossingSpec& wall,
                                const HurwitzInput& p1, const HurwitzInput& p2, int N) {
    int m = target.m(), n = target.n();
    Wall w = canonical_wall(wall.I, wall.J, m, n);
    ChamberSignature s1 = chamber_signature(p1);
    ChamberSignature s2 = chamber_signature(p2);
    std::vector<Wall> walls = wall_list(m, n);
    size_t diff = 0, wall_idx = walls.size();
    for (size_t i = 0; i < walls.size(); ++i) {
        if (walls[i] == w) wall_idx = i;
        if (s1.signs[i] != s2.signs[i]) ++diff;
    }
    assert(wall_idx < walls.size());
    if (!(diff == 1 && s1.signs[wall_idx] != s2.signs[wall_idx]))
        throw NotAdjacent("sample chambers do not differ exactly at the given wall");
    // delta = |mu_I| - |nu_J| must go from negative (c1) to positive (c2)
    long long delta1 = subset_sum(p1.mu, wall.I) - subset_sum(p1.nu, wall.J);
    long long delta2 = subset_sum(p2.mu, wall.I) - subset_sum(p2.nu, wall.J);
    if (!(delta1 < 0 && delta2 > 0))
        throw NotAdjacent("p1/p2 are on the wrong sides of the wall");

    patterns::ClosedForm f1 = patterns::closed_form(p1);
    patterns::ClosedForm f2 = patterns::closed_form(p2);
    return patterns::evaluate_series(f2, target, N) - patterns::evaluate_series(f1, target, N);
}

LaurentSeries wall_crossing_rhs(const HurwitzInput& target, const WallCrossingSpec& wall,
                                int N) {
    int m = target.m(), n = target.n();
    uint32_t full_i = (1u << m) - 1, full_j = (1u << n) - 1;
    long long delta = subset_sum(target.mu, wall.I) - subset_sum(target.nu, wall.J);
    if (delta <= 0) throw NonPositiveDelta("wall_crossing_rhs requires delta > 0 at the target");
    long long d = target.d();
    long long d1 = subset_sum(target.mu, wall.I);
    long long d2 = subset_sum(target.nu, full_j & ~wall.J);

    auto restrict_parts = [](const Partition& p, uint32_t mask) {
        std::vector<int> parts;
        for (int i = 0; i < p.length(); ++i)
            if (mask & (1u << i)) parts.push_back(p.part(i));
        return parts;
    };
    std::vector<int> nuA = restrict_parts(target.nu, wall.J);
    nuA.push_back(static_cast<int>(delta));
    std::vector<int> muB = restrict_parts(target.mu, full_i & ~wall.I);
    muB.push_back(static_cast<int>(delta));

    HurwitzInput sub_a(Partition(restrict_parts(target.mu, wall.I)), Partition(nuA));
    HurwitzInput sub_b(Partition(muB), Partition(restrict_parts(target.nu, full_j & ~wall.J)));
    if (is_on_wall(sub_a) || is_on_wall(sub_b))
        throw SubInputOnWall("wall-crossing sub-input lies on a wall of its own arrangement");

    int M = N + 3;
    LaurentSeries ha = patterns::evaluate_series(patterns::closed_form(sub_a), sub_a, M);
    LaurentSeries hb = patterns::evaluate_series(patterns::closed_form(sub_b), sub_b, M);

    LaurentSeries out = sigma_series(Rat(d1), M) * inv_sigma_series(Rat(delta * d1), M);
    out = out * sigma_series(Rat(d2), M) * inv_sigma_series(Rat(delta * d2), M);
    out = out * sigma_series(Rat(delta * d), M) * inv_sigma_series(Rat(d), M);
    out = out * ha * hb;
    out = out.scaled(Rat(delta * delta)).normalized();
    assert(out.pole_order() == 0);
    return out.truncated(N);
}

namespace {

std::optional<HurwitzInput> try_sample(int m, int n, std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> dist(1, bound);
    std::vector<int> mu, nu;
    long long total = 0;
    for (int i = 0; i < m; ++i) {
        mu.push_back(dist(rng));
        total += mu.back();
    }
    long long rest = total;
    for (int j = 0; j + 1 < n; ++j) {
        nu.push_back(dist(rng));
        rest -= nu.back();
    }
    if (rest < 1) return std::nullopt;
    nu.push_back(static_cast<int>(rest));
    HurwitzInput input{Partition(mu), Partition(nu)};
    if (is_on_wall(input)) return std::nullopt;
    return input;
}

}  // namespace

HurwitzInput sample_off_wall(int m, int n, uint64_t seed, int bound) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 100000; ++attempt)
        if (auto p = try_sample(m, n, rng, bound)) return *p;
    throw Error("sample_off_wall: no off-wall point found");
}

HurwitzInput sample_in_chamber(const ChamberSignature& sig, uint64_t seed, int bound) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 500000; ++attempt) {
        auto p = try_sample(sig.m, sig.n, rng, bound);
        if (p && chamber_signature(*p) == sig) return *p;
    }
    throw Error("sample_in_chamber: no point with the requested signature found");
}

std::vector<ChamberSignature> enumerate_signatures(int m, int n, uint64_t seed, int attempts,
                                                   int bound) {
    std::mt19937_64 rng(seed);
    std::vector<ChamberSignature> sigs;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        auto p = try_sample(m, n, rng, bound);
        if (!p) continue;
        ChamberSignature s = chamber_signature(*p);
        if (std::find(sigs.begin(), sigs.end(), s) == sigs.end()) sigs.push_back(std::move(s));
    }
    std::sort(sigs.begin(), sigs.end(),
              [](const ChamberSignature& a, const ChamberSignature& b) { return a.signs < b.signs; });
    return sigs;
}

}  // namespace chambers
}  // namespace hurwitz

#include "hurwitz/multipoly.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {
int total_degree(const std::vector<int>& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}
}  // namespace

MultiPoly MultiPoly::constant(const Rat& c, int nvars) {
    MultiPoly p(nvars);
    p.add_term(std::vector<int>(static_cast<size_t>(nvars), 0), c);
    return p;
}

MultiPoly MultiPoly::var(int i, int nvars) {
    assert(i >= 0 && i < nvars);
    MultiPoly p(nvars);
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(i)] = 1;
    p.add_term(std::move(e), 1);
    return p;
}

void MultiPoly::add_term(std::vector<int> exponents, const Rat& c) {
    assert(static_cast<int>(exponents.size()) == nvars_);
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(exponents), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    assert(nvars_ == o.nvars_);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    assert(nvars_ == o.nvars_);
    MultiPoly r(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            std::vector<int> e(static_cast<size_t>(nvars_));
            for (int i = 0; i < nvars_; ++i)
                e[static_cast<size_t>(i)] = e1[static_cast<size_t>(i)] + e2[static_cast<size_t>(i)];
            r.add_term(std::move(e), c1 * c2);
        }
    return r;
}

MultiPoly MultiPoly::scaled(const Rat& c) const {
    if (c == 0) return MultiPoly(nvars_);
    MultiPoly r = *this;
    for (auto& [e, x] : r.terms_) x *= c;
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(1, nvars_);
    MultiPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        if (e >>= 1) b = b * b;
    }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

MultiPoly MultiPoly::homogeneous_component(int deg) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == deg) r.add_term(e, c);
    return r;
}

std::vector<int> MultiPoly::degrees_present() const {
    std::vector<int> ds;
    for (const auto& [e, c] : terms_) ds.push_back(total_degree(e));
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
}

bool MultiPoly::is_homogeneous() const { return degrees_present().size() <= 1; }

MultiPoly MultiPoly::divide_exact(const MultiPoly& divisor) const {
    assert(nvars_ == divisor.nvars_);
    if (divisor.is_zero()) throw ZeroArgument("division by zero polynomial");
    MultiPoly q(nvars_);
    MultiPoly r = *this;
    const auto& dlead = *divisor.terms_.rbegin();
    while (!r.is_zero()) {
        const auto& rlead = *r.terms_.rbegin();
        std::vector<int> e(static_cast<size_t>(nvars_));
        for (int i = 0; i < nvars_; ++i) {
            int diff = rlead.first[static_cast<size_t>(i)] - dlead.first[static_cast<size_t>(i)];
            if (diff < 0) throw InexactDivision("leading term not divisible");
            e[static_cast<size_t>(i)] = diff;
        }
        MultiPoly t(nvars_);
        t.add_term(std::move(e), rlead.second / dlead.second);
        q = q + t;
        r = r - t * divisor;
    }
    return q;
}

Rat MultiPoly::eval(const std::vector<Rat>& point) const {
    assert(static_cast<int>(point.size()) == nvars_);
    Rat total = 0;
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (int i = 0; i < nvars_; ++i)
            if (e[static_cast<size_t>(i)] > 0)
                term *= rat_pow(point[static_cast<size_t>(i)],
                                static_cast<unsigned>(e[static_cast<size_t>(i)]));
        total += term;
    }
    return total;
}

}  // namespace hurwitz

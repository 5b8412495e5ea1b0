#include "hurwitz/partitions.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

#include "hurwitz/errors.hpp"

namespace hurwitz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw Error("partition parts must be positive");
    if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<int>())) {
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
        reordered_ = true;
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (parts_.empty()) return Partition{};
    conj.resize(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) conj[static_cast<size_t>(j)]++;
    return Partition(std::move(conj));
}

HurwitzInput::HurwitzInput(Partition mu_, Partition nu_) : mu(std::move(mu_)), nu(std::move(nu_)) {
    if (mu.size() != nu.size())
        throw SizeMismatch("|mu| != |nu|: " + std::to_string(mu.size()) + " vs " +
                           std::to_string(nu.size()));
    if (mu.size() < 1) throw Error("degree must be at least 1");
}

namespace {

void enumerate_partitions(int remaining, int max_part, std::vector<int>& acc,
                          std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        enumerate_partitions(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

// First-column hook lengths ("beta set") with L rows: beta_i = lambda_i + L - i,
// i = 1..L, strictly decreasing.
std::vector<int> beta_set(const Partition& lambda, int rows) {
    std::vector<int> beta(static_cast<size_t>(rows));
    for (int i = 1; i <= rows; ++i) {
        int li = i <= lambda.length() ? lambda.part(i - 1) : 0;
        beta[static_cast<size_t>(i - 1)] = li + rows - i;
    }
    return beta;
}

Partition partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    int rows = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 1; i <= rows; ++i) {
        int li = beta[static_cast<size_t>(i - 1)] - (rows - i);
        assert(li >= 0);
        if (li > 0) parts.push_back(li);
    }
    return Partition(std::move(parts));
}

}  // namespace

std::vector<Partition> partitions_of(int d) {
    if (d < 0) throw Error("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<int> acc;
    enumerate_partitions(d, d, acc, out);
    if (d == 0) out.assign(1, Partition{});
    return out;
}

FrobeniusCoordinates frobenius_coords(const Partition& lambda) {
    FrobeniusCoordinates fc;
    Partition conj = lambda.conjugate();
    for (int i = 1; i <= lambda.length() && lambda.part(i - 1) >= i; ++i)
        fc.electrons2.push_back(2 * lambda.part(i - 1) - 2 * i + 1);
    for (int i = 1; i <= conj.length() && conj.part(i - 1) >= i; ++i)
        fc.positrons2.push_back(2 * conj.part(i - 1) - 2 * i + 1);
    assert(fc.electrons2.size() == fc.positrons2.size());
    return fc;
}

Partition partition_from_frobenius(const FrobeniusCoordinates& fc) {
    size_t rank = fc.electrons2.size();
    if (rank != fc.positrons2.size()) throw Error("frobenius coordinate lists differ in length");
    std::vector<int> parts;
    for (size_t i = 0; i < rank; ++i)
        parts.push_back((fc.electrons2[i] + 2 * static_cast<int>(i) + 1) / 2);
    // Columns from the positron side give the conjugate below the diagonal.
    std::vector<int> cols;
    for (size_t i = 0; i < rank; ++i)
        cols.push_back((fc.positrons2[i] + 2 * static_cast<int>(i) + 1) / 2);
    // Row r (> rank) has one box for each column j <= rank with cols[j] >= r.
    int max_col = cols.empty() ? 0 : cols[0];
    for (int r = static_cast<int>(rank) + 1; r <= max_col; ++r) {
        int row = 0;
        for (size_t j = 0; j < rank; ++j)
            if (cols[j] >= r) ++row;
        if (row > 0) parts.push_back(row);
    }
    return Partition(std::move(parts));
}

std::vector<BorderStrip> removable_strips(const Partition& lambda, int k) {
    std::vector<BorderStrip> out;
    if (k <= 0 || lambda.size() < k) return out;
    int rows = lambda.length();
    std::vector<int> beta = beta_set(lambda, rows);
    for (int i = 0; i < rows; ++i) {
        int b = beta[static_cast<size_t>(i)];
        int c = b - k;
        if (c < 0) continue;
        if (std::find(beta.begin(), beta.end(), c) != beta.end()) continue;
        int height = 0;
        for (int v : beta)
            if (v > c && v < b) ++height;
        BorderStrip s;
        s.start_row = i + 1;
        s.end_row = i + 1 + height;
        s.size = k;
        s.sign = (height % 2 == 0) ? 1 : -1;
        std::vector<int> nb = beta;
        nb[static_cast<size_t>(i)] = c;
        s.result = partition_from_beta(std::move(nb));
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<BorderStrip> addable_strips(const Partition& lambda, int k) {
    std::vector<BorderStrip> out;
    if (k <= 0) return out;
    int rows = lambda.length() + k;
    std::vector<int> beta = beta_set(lambda, rows);
    for (int i = 0; i < rows; ++i) {
        int b = beta[static_cast<size_t>(i)];
        int c = b + k;
        if (std::find(beta.begin(), beta.end(), c) != beta.end()) continue;
        int height = 0, above = 0;
        for (int v : beta) {
            if (v > b && v < c) ++height;
            if (v > c) ++above;
        }
        BorderStrip s;
        s.start_row = above + 1;
        s.end_row = above + 1 + height;
        s.size = k;
        s.sign = (height % 2 == 0) ? 1 : -1;
        std::vector<int> nb = beta;
        nb[static_cast<size_t>(i)] = c;
        s.result = partition_from_beta(std::move(nb));
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

using MemoKey = std::pair<std::vector<int>, std::vector<int>>;

Int character_rec(const Partition& lambda, const std::vector<int>& mu, size_t idx,
                  std::map<MemoKey, Int>& memo) {
    if (idx == mu.size()) return lambda.empty() ? 1 : 0;
    MemoKey key{lambda.parts(), std::vector<int>(mu.begin() + static_cast<long>(idx), mu.end())};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Int total = 0;
    for (const BorderStrip& s : removable_strips(lambda, mu[idx]))
        total += s.sign * character_rec(s.result, mu, idx + 1, memo);
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

Int character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw SizeMismatch("character: |lambda| != |mu|");
    thread_local std::map<MemoKey, Int> memo;
    return character_rec(lambda, mu.parts(), 0, memo);
}

long long central_character_f2(const Partition& lambda) {
    long long f = 0;
    for (int i = 1; i <= lambda.length(); ++i) {
        long long li = lambda.part(i - 1);
        f += li * (li + 1) / 2 - static_cast<long long>(i) * li;
    }
    return f;
}

Int conjugacy_class_size(const Partition& mu) {
    Int denom = 1;
    int run = 0, prev = -1;
    for (int p : mu.parts()) {
        denom *= p;
        if (p == prev)
            ++run;
        else
            run = 1;
        denom *= run;
        prev = p;
    }
    return factorial(static_cast<unsigned>(mu.size())) / denom;
}

Int dimension(const Partition& lambda) {
    Partition conj = lambda.conjugate();
    Int hooks = 1;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i - 1); ++j)
            hooks *= lambda.part(i - 1) - j + conj.part(j - 1) - i + 1;
    return factorial(static_cast<unsigned>(lambda.size())) / hooks;
}

Rat hurwitz_oracle(const HurwitzInput& input, int r) {
    if (r < 0) throw Error("hurwitz_oracle: negative r");
    Int sum = 0;
    for (const Partition& lambda : partitions_of(static_cast<int>(input.d()))) {
        Int chi_mu = character(lambda, input.mu);
        if (chi_mu == 0) continue;
        Int chi_nu = character(lambda, input.nu);
        if (chi_nu == 0) continue;
        sum += chi_mu * chi_nu * int_pow(Int(central_character_f2(lambda)), static_cast<unsigned>(r));
    }
    Int denom = 1;
    for (int p : input.mu.parts()) denom *= p;
    for (int p : input.nu.parts()) denom *= p;
    return Rat(sum, denom);
}

bool is_on_wall(const HurwitzInput& input) {
    int m = input.m(), n = input.n();
    unsigned full_i = (1u << m) - 1, full_j = (1u << n) - 1;
    for (unsigned I = 0; I <= full_i; ++I) {
        long long mu_i = 0;
        for (int i = 0; i < m; ++i)
            if (I & (1u << i)) mu_i += input.mu.part(i);
        for (unsigned J = 0; J <= full_j; ++J) {
            if (I == 0 && J == 0) continue;
            if (I == full_i && J == full_j) continue;
            long long nu_j = 0;
            for (int j = 0; j < n; ++j)
                if (J & (1u << j)) nu_j += input.nu.part(j);
            if (mu_i == nu_j) return true;
        }
    }
    return false;
}

}  // namespace hurwitz

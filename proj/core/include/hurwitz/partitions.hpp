#pragma once

#include <compare>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

// Weakly decreasing list of positive integers.  Inputs given in any order
// are normalized to descending order; `was_reordered()` reports when that
// happened, since the commutation algorithm is sensitive to part order.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    long long size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }  // 0-based
    bool was_reordered() const { return reordered_; }

    // Conjugate (transposed) partition.
    Partition conjugate() const;

    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

private:
    std::vector<int> parts_;
    long long size_ = 0;
    bool reordered_ = false;
};

// Modified Frobenius coordinates: strictly decreasing positive half-integers,
// stored doubled (so 5/2 is stored as 5).
struct FrobeniusCoordinates {
    std::vector<int> electrons2;  // 2 * a'_i
    std::vector<int> positrons2;  // 2 * b'_i
};

// A border strip addition or removal, together with the resulting partition.
// sign = (-1)^(rows spanned - 1), the Murnaghan-Nakayama sign.
struct BorderStrip {
    int start_row = 0;  // 1-based, in the larger partition
    int end_row = 0;
    int size = 0;
    int sign = 1;
    Partition result;
    int height() const { return end_row - start_row; }
};

struct HurwitzInput {
    Partition mu, nu;
    HurwitzInput(Partition mu_, Partition nu_);
    int m() const { return mu.length(); }
    int n() const { return nu.length(); }
    long long d() const { return mu.size(); }
    // r = 2g - 2 + m + n
    int r_for_genus(int g) const { return 2 * g - 2 + m() + n(); }
};

// All partitions of d, each exactly once, in lexicographically descending order.
std::vector<Partition> partitions_of(int d);

FrobeniusCoordinates frobenius_coords(const Partition& lambda);
Partition partition_from_frobenius(const FrobeniusCoordinates& fc);

// All ways to remove (resp. add) a border strip of length k.
std::vector<BorderStrip> removable_strips(const Partition& lambda, int k);
std::vector<BorderStrip> addable_strips(const Partition& lambda, int k);

// Symmetric group character chi^lambda_mu via the Murnaghan-Nakayama
// recursion, memoized per thread.  Throws SizeMismatch if |lambda| != |mu|.
Int character(const Partition& lambda, const Partition& mu);

// Central character of a transposition, f_2(lambda) = sum of contents.
long long central_character_f2(const Partition& lambda);

// |conjugacy class of cycle type mu| in S_{|mu|}.
Int conjugacy_class_size(const Partition& mu);

// dim lambda = chi^lambda_{(1^d)}, via the hook length formula.
Int dimension(const Partition& lambda);

// (1/prod mu_i)(1/prod nu_j) sum_{|lambda|=d} chi^lambda_mu f2(lambda)^r chi^lambda_nu
Rat hurwitz_oracle(const HurwitzInput& input, int r);

// True iff some wall |mu_I| = |nu_J| of the resonance arrangement contains
// the point (excluding the trivial pairs (0,0) and ([m],[n])).
bool is_on_wall(const HurwitzInput& input);

}  // namespace hurwitz

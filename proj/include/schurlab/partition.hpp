#pragma once

#include <string>
#include <vector>

#include "schurlab/rational.hpp"

namespace schurlab {

// Weakly decreasing sequence of non-negative integers; trailing zeros are not
// stored, so structural equality is equality of partitions.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition from_padded(const std::vector<int>& parts) { return Partition(parts); }

    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    // 1-based part accessor; zero beyond the length, so formulas may index
    // up to any padded length without special cases.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[static_cast<size_t>(i - 1)] : 0;
    }
    int max_part() const { return parts_.empty() ? 0 : parts_.front(); }
    bool empty() const { return parts_.empty(); }

    const std::vector<int>& parts() const { return parts_; }
    std::vector<int> padded(int len) const;

    bool contains(const Partition& other) const;  // Young-diagram inclusion

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

    std::string to_string() const;

private:
    std::vector<int> parts_;
};

// Λ(k,r): partitions of weight k with parts at most r.
std::vector<Partition> partitions_in(int k, int r);

// All partitions of weight k (no cap).
std::vector<Partition> all_partitions(int k);

// λ'_i = #{j : λ_j >= i}; requires λ₁ <= r.  Involution when caps are swapped.
Partition conjugate_partition(const Partition& lambda, int r);

// Unbounded conjugate (r = λ₁).
Partition conjugate_partition(const Partition& lambda);

// s_{λ'}(1,...,1) over r variables: ∏_{i<j} (λ'_i - λ'_j + j - i)/(j - i).
// Integer-valued and >= 1 (the number of SSYT of shape λ' with entries <= r).
Rational hook_content_eval(const Partition& lambda_conj, int r);

// Standard Young tableaux of the given shape, each as a row-list of entries
// 1..k.  The tableau order fixed here is the basis order of the orthogonal
// representation matrices.
std::vector<std::vector<std::vector<int>>> standard_tableaux(const Partition& shape);

}  // namespace schurlab

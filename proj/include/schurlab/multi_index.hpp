#pragma once

#include <algorithm>
#include <optional>
#include <vector>

namespace schurlab {

// Strictly increasing tuple of axes, 0-based, each in [0, n).
using MultiIndex = std::vector<int>;

inline bool is_strictly_increasing(const MultiIndex& a) {
    for (size_t i = 1; i < a.size(); ++i)
        if (a[i - 1] >= a[i]) return false;
    return true;
}

// Merges two disjoint strictly increasing tuples.  Returns the sorted union and
// the sign of the shuffle permutation; nullopt when the tuples share an axis.
inline std::optional<std::pair<MultiIndex, int>> merge_disjoint(const MultiIndex& a,
                                                                const MultiIndex& b) {
    MultiIndex out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    long inversions = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return std::nullopt;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            // b[j] jumps over the remaining entries of a
            inversions += static_cast<long>(a.size() - i);
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return std::make_pair(std::move(out), inversions % 2 == 0 ? 1 : -1);
}

// All k-element strictly increasing tuples in [0, n), lexicographic order.
inline std::vector<MultiIndex> multi_indices(int n, int k) {
    std::vector<MultiIndex> out;
    if (k < 0 || k > n) return out;
    MultiIndex cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

inline MultiIndex complement_of(const MultiIndex& a, int n) {
    MultiIndex out;
    out.reserve(n - a.size());
    size_t i = 0;
    for (int x = 0; x < n; ++x) {
        if (i < a.size() && a[i] == x) {
            ++i;
        } else {
            out.push_back(x);
        }
    }
    return out;
}

inline MultiIndex full_index(int n) {
    MultiIndex out(n);
    for (int i = 0; i < n; ++i) out[i] = i;
    return out;
}

}  // namespace schurlab

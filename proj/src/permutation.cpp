#include "schurlab/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schurlab {

Perm perm_identity(int k) {
    Perm p(static_cast<size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_compose(const Perm& s, const Perm& t) {
    if (s.size() != t.size()) throw std::invalid_argument("perm_compose: size mismatch");
    Perm out(s.size());
    for (size_t i = 0; i < s.size(); ++i) out[i] = s[static_cast<size_t>(t[i])];
    return out;
}

Perm perm_inverse(const Perm& s) {
    Perm out(s.size());
    for (size_t i = 0; i < s.size(); ++i) out[static_cast<size_t>(s[i])] = static_cast<int>(i);
    return out;
}

int perm_sign(const Perm& s) {
    int inv = 0;
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (s[i] > s[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

Partition cycle_type(const Perm& s) {
    std::vector<bool> seen(s.size(), false);
    std::vector<int> lengths;
    for (size_t i = 0; i < s.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<size_t>(s[j]);
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return Partition(std::move(lengths));
}

std::vector<Perm> all_permutations(int k) {
    std::vector<Perm> out;
    Perm p = perm_identity(k);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<int> adjacent_word(const Perm& s) {
    Perm cur = s;
    std::vector<int> recorded;
    bool done = false;
    while (!done) {
        done = true;
        for (size_t i = 0; i + 1 < cur.size(); ++i) {
            if (cur[i] > cur[i + 1]) {
                std::swap(cur[i], cur[i + 1]);  // cur = cur ∘ s_i
                recorded.push_back(static_cast<int>(i));
                done = false;
                break;
            }
        }
    }
    std::reverse(recorded.begin(), recorded.end());
    return recorded;
}

long factorial(int k) {
    long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace schurlab

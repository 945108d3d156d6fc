#include "schurlab/characters.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace schurlab {

namespace {

// Beta-set form of the Murnaghan-Nakayama recursion: removing a border strip
// of length m is moving one bead b -> b-m; the height sign is the number of
// beads passed over.
long long chi_beta(std::vector<int> beta, const std::vector<int>& parts, size_t idx) {
    if (idx == parts.size()) return 1;
    const int m = parts[idx];
    long long total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        const int b = beta[i];
        if (b < m) continue;
        const int target = b - m;
        bool occupied = false;
        int passed = 0;
        for (size_t j = 0; j < beta.size(); ++j) {
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < b) ++passed;
        }
        if (occupied) continue;
        std::vector<int> next = beta;
        next[i] = target;
        const long long sub = chi_beta(std::move(next), parts, idx + 1);
        total += (passed % 2 == 0) ? sub : -sub;
    }
    return total;
}

}  // namespace

long long mn_character(const Partition& lambda, const Partition& type) {
    if (lambda.weight() != type.weight())
        throw std::invalid_argument("mn_character: weight mismatch");
    const int len = std::max(lambda.length(), 1);
    std::vector<int> beta(static_cast<size_t>(len));
    for (int i = 1; i <= len; ++i) beta[static_cast<size_t>(i - 1)] = lambda.part(i) + len - i;
    std::vector<int> parts = type.parts();
    return chi_beta(std::move(beta), parts, 0);
}

long long conjugacy_class_size(const Partition& type) {
    const int k = type.weight();
    long long size = factorial(k);
    std::map<int, int> mult;
    for (int p : type.parts()) ++mult[p];
    for (auto [len, count] : mult) {
        for (int c = 1; c <= count; ++c) size /= c;
        for (int c = 0; c < count; ++c) size /= len;
    }
    return size;
}

}  // namespace schurlab

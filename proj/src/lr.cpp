#include "schurlab/lr.hpp"

#include <stdexcept>

namespace schurlab {

namespace {

struct SkewCounter {
    const Partition& lambda;
    const Partition& mu;
    const Partition& nu;
    std::vector<std::vector<int>> fill;  // fill[row][col], 0 = unset
    std::vector<int> count;              // occurrences of each value so far
    long long tableaux = 0;

    SkewCounter(const Partition& l, const Partition& m, const Partition& n)
        : lambda(l), mu(m), nu(n), count(static_cast<size_t>(n.length()) + 1, 0) {
        for (int row = 1; row <= l.length(); ++row)
            fill.emplace_back(static_cast<size_t>(l.part(row)), 0);
    }

    int cell_at(int row, int col) const {  // 0 when outside the skew shape
        if (row < 0 || row >= lambda.length()) return 0;
        if (col < mu.part(row + 1) || col >= lambda.part(row + 1)) return 0;
        return fill[static_cast<size_t>(row)][static_cast<size_t>(col)];
    }

    // Reverse reading order: rows top to bottom, columns right to left; the
    // word built this way must stay a lattice word.
    void place(int row, int col) {
        if (row == lambda.length()) {
            ++tableaux;
            return;
        }
        if (col < mu.part(row + 1)) {
            place(row + 1, lambda.part(row + 2) - 1);
            return;
        }
        int hi = nu.length();
        const int right = cell_at(row, col + 1);
        if (right != 0) hi = std::min(hi, right);
        int lo = 1;
        const int above = cell_at(row - 1, col);
        if (above != 0) lo = std::max(lo, above + 1);
        for (int v = lo; v <= hi; ++v) {
            if (count[static_cast<size_t>(v)] + 1 > nu.part(v)) continue;
            if (v >= 2 && count[static_cast<size_t>(v)] + 1 > count[static_cast<size_t>(v - 1)])
                continue;  // lattice condition
            ++count[static_cast<size_t>(v)];
            fill[static_cast<size_t>(row)][static_cast<size_t>(col)] = v;
            place(row, col - 1);
            fill[static_cast<size_t>(row)][static_cast<size_t>(col)] = 0;
            --count[static_cast<size_t>(v)];
        }
    }
};

void sub_partitions(const Partition& lambda, int row, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (row > lambda.length()) {
        out.emplace_back(cur);
        return;
    }
    const int cap = std::min(lambda.part(row), row >= 2 ? cur[static_cast<size_t>(row - 2)] : lambda.part(1));
    for (int v = cap; v >= 0; --v) {
        cur.push_back(v);
        sub_partitions(lambda, row + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (mu.weight() + nu.weight() != lambda.weight()) return 0;
    if (!lambda.contains(mu)) return 0;
    if (nu.weight() == 0) return 1;
    SkewCounter counter(lambda, mu, nu);
    counter.place(0, lambda.part(1) - 1);
    return counter.tableaux;
}

LRTable lr_coefficients(const Partition& lambda, int bound) {
    if (lambda.weight() > bound) throw std::invalid_argument("lr_coefficients: weight exceeds bound");
    LRTable table;
    table.lambda = lambda;
    std::vector<Partition> mus;
    std::vector<int> cur;
    sub_partitions(lambda, 1, cur, mus);
    for (const Partition& mu : mus) {
        const int rest = lambda.weight() - mu.weight();
        for (const Partition& nu : all_partitions(rest)) {
            if (nu.max_part() > lambda.max_part() || nu.length() > lambda.length()) continue;
            const long long c = lr_coefficient(lambda, mu, nu);
            if (c != 0) table.entries.emplace(std::make_pair(mu, nu), c);
        }
    }
    return table;
}

}  // namespace schurlab

#include "schurlab/young_orthogonal.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace schurlab {

namespace {

struct CellPos {
    int row;
    int col;
};

// value -> cell, values 1..k
std::vector<CellPos> positions_of(const std::vector<std::vector<int>>& tableau, int k) {
    std::vector<CellPos> pos(static_cast<size_t>(k + 1));
    for (size_t r = 0; r < tableau.size(); ++r)
        for (size_t c = 0; c < tableau[r].size(); ++c)
            pos[static_cast<size_t>(tableau[r][c])] = {static_cast<int>(r), static_cast<int>(c)};
    return pos;
}

}  // namespace

IrrepMatrixSet young_orthogonal_irrep(const Partition& lambda, int bound) {
    const int k = lambda.weight();
    if (k > bound) throw std::invalid_argument("young_orthogonal_irrep: weight exceeds bound");
    if (k == 0) {
        IrrepMatrixSet triv;
        triv.lambda = lambda;
        triv.dim = 1;
        triv.matrices.emplace(Perm{}, Eigen::MatrixXd::Identity(1, 1));
        return triv;
    }

    const auto tableaux = standard_tableaux(lambda);
    const int m = static_cast<int>(tableaux.size());
    std::map<std::vector<std::vector<int>>, int> index_of;
    for (int t = 0; t < m; ++t) index_of.emplace(tableaux[static_cast<size_t>(t)], t);

    // Generator matrices for the adjacent transpositions (a, a+1), a = 1..k-1.
    std::vector<Eigen::MatrixXd> gens;
    for (int a = 1; a < k; ++a) {
        Eigen::MatrixXd g = Eigen::MatrixXd::Zero(m, m);
        for (int t = 0; t < m; ++t) {
            const auto& tab = tableaux[static_cast<size_t>(t)];
            const auto pos = positions_of(tab, k);
            const CellPos pa = pos[static_cast<size_t>(a)];
            const CellPos pb = pos[static_cast<size_t>(a + 1)];
            const int d = (pb.col - pb.row) - (pa.col - pa.row);  // axial distance
            if (d == 1) {
                g(t, t) = 1.0;  // same row
                continue;
            }
            if (d == -1) {
                g(t, t) = -1.0;  // same column
                continue;
            }
            auto swapped = tab;
            swapped[static_cast<size_t>(pa.row)][static_cast<size_t>(pa.col)] = a + 1;
            swapped[static_cast<size_t>(pb.row)][static_cast<size_t>(pb.col)] = a;
            const auto it = index_of.find(swapped);
            if (it == index_of.end())
                throw std::logic_error("young_orthogonal_irrep: swapped tableau not standard");
            const double inv = 1.0 / d;
            g(t, t) = inv;
            g(it->second, t) = std::sqrt(1.0 - inv * inv);
        }
        gens.push_back(std::move(g));
    }

    IrrepMatrixSet set;
    set.lambda = lambda;
    set.dim = m;
    for (const Perm& sigma : all_permutations(k)) {
        Eigen::MatrixXd rho = Eigen::MatrixXd::Identity(m, m);
        for (int w : adjacent_word(sigma)) rho = rho * gens[static_cast<size_t>(w)];
        set.matrices.emplace(sigma, std::move(rho));
    }
    return set;
}

const IrrepMatrixSet& young_orthogonal_cached(const Partition& lambda, int bound) {
    static std::map<Partition, IrrepMatrixSet> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(lambda);
    if (it == cache.end()) it = cache.emplace(lambda, young_orthogonal_irrep(lambda, bound)).first;
    return it->second;
}

}  // namespace schurlab

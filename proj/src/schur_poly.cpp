#include "schurlab/schur_poly.hpp"

#include <stdexcept>

namespace schurlab {

namespace {

// Fill row by row; rows weakly increase, columns strictly increase.
void ssyt_rec(const Partition& shape, int vars, std::vector<std::vector<int>>& rows, int row,
              int col, Rational monomial, const std::vector<Rational>& x, Rational& acc) {
    if (row == shape.length()) {
        acc += monomial;
        return;
    }
    if (col == shape.part(row + 1)) {
        ssyt_rec(shape, vars, rows, row + 1, 0, std::move(monomial), x, acc);
        return;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, rows[static_cast<size_t>(row)][static_cast<size_t>(col - 1)]);
    if (row > 0) lo = std::max(lo, rows[static_cast<size_t>(row - 1)][static_cast<size_t>(col)] + 1);
    for (int v = lo; v <= vars; ++v) {
        rows[static_cast<size_t>(row)][static_cast<size_t>(col)] = v;
        ssyt_rec(shape, vars, rows, row, col + 1, monomial * x[static_cast<size_t>(v - 1)], x, acc);
    }
}

}  // namespace

Rational ssyt_monomial_sum(const Partition& shape, const std::vector<Rational>& x) {
    const int vars = static_cast<int>(x.size());
    if (shape.length() > vars) return Rational(0);
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= shape.length(); ++i)
        rows.emplace_back(static_cast<size_t>(shape.part(i)), 0);
    Rational acc(0);
    ssyt_rec(shape, vars, rows, 0, 0, Rational(1), x, acc);
    return acc;
}

Rational schur_bialternant(const Partition& lambda_conj, const std::vector<Rational>& x) {
    const int r = static_cast<int>(x.size());
    if (lambda_conj.length() > r)
        throw std::invalid_argument("schur_bialternant: shape longer than variable count");
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            if (x[static_cast<size_t>(i)] == x[static_cast<size_t>(j)])
                return ssyt_monomial_sum(lambda_conj, x);

    auto pow = [](const Rational& b, int e) {
        Rational out(1);
        for (int i = 0; i < e; ++i) out *= b;
        return out;
    };
    std::vector<std::vector<Rational>> alt(static_cast<size_t>(r),
                                           std::vector<Rational>(static_cast<size_t>(r)));
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j)
            alt[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                pow(x[static_cast<size_t>(j - 1)], lambda_conj.part(i) + r - i);
    Rational num = leibniz_det(alt, std::multiplies<Rational>(), Rational(0));
    Rational den(1);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            den *= x[static_cast<size_t>(i)] - x[static_cast<size_t>(j)];
    return num / den;
}

}  // namespace schurlab

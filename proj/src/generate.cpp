#include "schurlab/generate.hpp"

#include <algorithm>
#include <stdexcept>

#include "schurlab/classify.hpp"
#include "schurlab/exact_linalg.hpp"

namespace schurlab {

const char* to_string(PositivityClass c) {
    switch (c) {
        case PositivityClass::Nakano: return "nakano";
        case PositivityClass::DualNakano: return "dual-nakano";
        case PositivityClass::TypeI: return "type1";
        case PositivityClass::TypeII: return "type2";
        default: return "decomposable";
    }
}

std::optional<PositivityClass> positivity_class_from_string(const std::string& s) {
    if (s == "nakano") return PositivityClass::Nakano;
    if (s == "dual-nakano") return PositivityClass::DualNakano;
    if (s == "type1") return PositivityClass::TypeI;
    if (s == "type2") return PositivityClass::TypeII;
    if (s == "decomposable") return PositivityClass::Decomposable;
    return std::nullopt;
}

namespace {

constexpr int kResampleCap = 32;

void fill_b(ABFactorization& f, const std::vector<int>& fibers, const std::vector<int>& axes,
            RngStream& rng) {
    for (int i : fibers)
        for (int p = 0; p < f.N; ++p)
            for (int a : axes) f.b(i, p, a) = rng.gaussian_rational();
}

void fill_a(ABFactorization& f, const std::vector<int>& fibers, const std::vector<int>& axes,
            RngStream& rng) {
    for (int i : fibers)
        for (int p = 0; p < f.N; ++p)
            for (int a : axes) f.a(i, p, a) = rng.gaussian_rational();
}

std::vector<int> iota_vec(int size) {
    std::vector<int> v(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) v[static_cast<size_t>(i)] = i;
    return v;
}

void check_split(const SplitSpec& split, SplitSpec::Kind kind, int limit) {
    if (split.kind != kind) throw std::invalid_argument("generate: split kind mismatch");
    std::vector<int> idx = split.indices;
    if (!std::is_sorted(idx.begin(), idx.end()) ||
        std::adjacent_find(idx.begin(), idx.end()) != idx.end())
        throw std::invalid_argument("generate: split indices must be strictly increasing");
    for (int i : idx)
        if (i < 0 || i >= limit) throw std::invalid_argument("generate: split index out of range");
}

}  // namespace

GenResult generate(PositivityClass cls, int n, int r, uint64_t seed,
                   std::optional<SplitSpec> split_opt) {
    if (n < 1 || r < 1) throw std::invalid_argument("generate: need n >= 1 and r >= 1");
    RngStream rng = RngStream(seed).substream(to_string(cls));
    const auto all_fibers = iota_vec(r);
    const auto all_axes = iota_vec(n);

    GenResult out;
    switch (cls) {
        case PositivityClass::Nakano:
        case PositivityClass::DualNakano: {
            const bool nakano = cls == PositivityClass::Nakano;
            out.split.kind = SplitSpec::Kind::TypeI;
            if (nakano) out.split.indices = all_axes;  // U = T^{1,0}, V = 0
            for (int attempt = 0;; ++attempt) {
                if (attempt >= kResampleCap)
                    throw std::runtime_error("generate: full-rank resampling cap exceeded");
                ABFactorization f(n, r, r * n);
                if (nakano)
                    fill_b(f, all_fibers, all_axes, rng);
                else
                    fill_a(f, all_fibers, all_axes, rng);
                const auto [rank_a, rank_b] = flattened_ranks(f);
                if ((nakano ? rank_b : rank_a) != r * n) continue;
                out.F = std::move(f);
                break;
            }
            break;
        }
        case PositivityClass::TypeI: {
            SplitSpec split = split_opt.value_or(balanced_split(SplitSpec::Kind::TypeI, n, r));
            check_split(split, SplitSpec::Kind::TypeI, n);
            const auto u_axes = split.indices;
            const auto v_axes = complement_indices(u_axes, n);
            const int n0 = static_cast<int>(u_axes.size());
            const int big = std::max(n0, n - n0);
            const int N = std::max(1, r * big);
            for (int attempt = 0;; ++attempt) {
                if (attempt >= kResampleCap)
                    throw std::runtime_error("generate: full-rank resampling cap exceeded");
                ABFactorization f(n, r, N);
                fill_b(f, all_fibers, u_axes, rng);
                fill_a(f, all_fibers, v_axes, rng);
                const auto [rank_a, rank_b] = flattened_ranks(f);
                if (rank_b != r * n0 || rank_a != r * (n - n0)) continue;
                out.F = std::move(f);
                break;
            }
            out.split = std::move(split);
            break;
        }
        case PositivityClass::TypeII: {
            SplitSpec split = split_opt.value_or(balanced_split(SplitSpec::Kind::TypeII, n, r));
            check_split(split, SplitSpec::Kind::TypeII, r);
            const auto e1 = split.indices;
            const auto e2 = complement_indices(e1, r);
            const int r1 = static_cast<int>(e1.size());
            const int N = std::max(1, std::max(r1 * n, (r - r1) * n));
            for (int attempt = 0;; ++attempt) {
                if (attempt >= kResampleCap)
                    throw std::runtime_error("generate: full-rank resampling cap exceeded");
                ABFactorization f(n, r, N);
                fill_b(f, e1, all_axes, rng);
                fill_a(f, e2, all_axes, rng);
                const auto [rank_a, rank_b] = flattened_ranks(f);
                if (rank_b != r1 * n || rank_a != (r - r1) * n) continue;
                out.F = std::move(f);
                break;
            }
            out.split = std::move(split);
            break;
        }
        case PositivityClass::Decomposable: {
            out.split.kind = SplitSpec::Kind::TypeI;
            out.split.indices = all_axes;
            SearchBudget budget;
            budget.restarts = 8;
            budget.sweeps = 40;
            budget.samples = 200;
            for (int attempt = 0;; ++attempt) {
                if (attempt >= kResampleCap)
                    throw std::runtime_error("generate: decomposable resampling cap exceeded");
                ABFactorization f(n, r, r * n);
                fill_b(f, all_fibers, all_axes, rng);
                fill_a(f, all_fibers, all_axes, rng);
                CurvatureTensor R = curvature_from_ab(f);
                budget.seed = rng.next_u64();
                const GriffithsSearch search = griffiths_minimize(R, budget);
                if (search.exact_value && *search.exact_value <= 0) continue;
                if (search.min_value <= 0) continue;
                out.F = std::move(f);
                out.R = std::move(R);
                return out;
            }
        }
    }
    out.R = curvature_from_ab(out.F);
    return out;
}

CurvatureTensor random_hermitian_curvature(int n, int r, RngStream& rng) {
    CurvatureTensor R(n, r);
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    if (i == j && b < a) continue;
                    ExactComplex v = rng.gaussian_rational();
                    if (i == j && a == b) v.im = 0;
                    R.at(i, j, a, b) = v;
                    R.at(j, i, b, a) = v.conj();
                }
    return R;
}

Form random_real_form(int n, int k, RngStream& rng) {
    // u = i^{k²} Σ G_{IJ} e^I ∧ ē^J for a sparse random Hermitian G
    Form u = Form::zero(n, k, k);
    const auto idx = multi_indices(n, k);
    const ExactComplex ik2 = i_pow(static_cast<long>(k) * k);
    const int terms = 2 + static_cast<int>(rng.uniform_int(0, 3));
    for (int t = 0; t < terms; ++t) {
        const size_t a = static_cast<size_t>(rng.uniform_int(0, static_cast<long>(idx.size()) - 1));
        const size_t b = static_cast<size_t>(rng.uniform_int(0, static_cast<long>(idx.size()) - 1));
        ExactComplex c = rng.gaussian_rational();
        if (a == b) c.im = 0;
        u.add_term(idx[a], idx[b], ik2 * c);
        if (a != b) u.add_term(idx[b], idx[a], ik2 * c.conj());
    }
    if (!is_real_form(u)) throw std::logic_error("random_real_form: construction not real");
    return u;
}

}  // namespace schurlab

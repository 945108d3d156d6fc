#include "schurlab/partition.hpp"

#include <stdexcept>

namespace schurlab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("partition: negative part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition: parts not weakly decreasing");
    }
}

int Partition::weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
}

std::vector<int> Partition::padded(int len) const {
    if (len < length()) throw std::invalid_argument("partition: pad length below length");
    std::vector<int> out(parts_);
    out.resize(static_cast<size_t>(len), 0);
    return out;
}

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int i = 1; i <= other.length(); ++i)
        if (other.part(i) > part(i)) return false;
    return true;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

namespace {

void enumerate(int remaining, int cap, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int next = std::min(cap, remaining); next >= 1; --next) {
        cur.push_back(next);
        enumerate(remaining - next, next, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_in(int k, int r) {
    if (k < 0 || r < 0) throw std::invalid_argument("partitions_in: negative arguments");
    std::vector<Partition> out;
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    if (r == 0) return out;
    std::vector<int> cur;
    enumerate(k, r, cur, out);
    return out;
}

std::vector<Partition> all_partitions(int k) { return partitions_in(k, k); }

Partition conjugate_partition(const Partition& lambda, int r) {
    if (lambda.max_part() > r)
        throw std::invalid_argument("conjugate_partition: largest part exceeds cap");
    std::vector<int> conj(static_cast<size_t>(r), 0);
    for (int i = 1; i <= r; ++i) {
        int count = 0;
        for (int j = 1; j <= lambda.length(); ++j)
            if (lambda.part(j) >= i) ++count;
        conj[static_cast<size_t>(i - 1)] = count;
    }
    return Partition(std::move(conj));
}

Partition conjugate_partition(const Partition& lambda) {
    return conjugate_partition(lambda, lambda.max_part());
}

Rational hook_content_eval(const Partition& lambda_conj, int r) {
    if (lambda_conj.length() > r)
        throw std::invalid_argument("hook_content_eval: partition longer than variable count");
    Rational value(1);
    for (int i = 1; i < r; ++i)
        for (int j = i + 1; j <= r; ++j)
            value *= make_rational(lambda_conj.part(i) - lambda_conj.part(j) + j - i, j - i);
    return value;
}

namespace {

void fill_tableaux(const Partition& shape, int next, std::vector<int>& row_fill,
                   std::vector<std::vector<int>>& cells,
                   std::vector<std::vector<std::vector<int>>>& out) {
    const int k = shape.weight();
    if (next > k) {
        out.push_back(cells);
        return;
    }
    for (int row = 0; row < shape.length(); ++row) {
        const int col = row_fill[static_cast<size_t>(row)];
        if (col >= shape.part(row + 1)) continue;
        // column-strictness: the cell above must already be filled
        if (row > 0 && row_fill[static_cast<size_t>(row - 1)] <= col) continue;
        cells[static_cast<size_t>(row)].push_back(next);
        ++row_fill[static_cast<size_t>(row)];
        fill_tableaux(shape, next + 1, row_fill, cells, out);
        --row_fill[static_cast<size_t>(row)];
        cells[static_cast<size_t>(row)].pop_back();
    }
}

}  // namespace

std::vector<std::vector<std::vector<int>>> standard_tableaux(const Partition& shape) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> row_fill(static_cast<size_t>(shape.length()), 0);
    std::vector<std::vector<int>> cells(static_cast<size_t>(shape.length()));
    fill_tableaux(shape, 1, row_fill, cells, out);
    return out;
}

}  // namespace schurlab

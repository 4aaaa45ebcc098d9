#include "kgrass/partition.hpp"

#include <algorithm>
#include <numeric>

namespace kgrass {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    // Trailing zeros are tolerated on input and trimmed.
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw NonPartitionResult("partition parts must be positive: " + to_string());
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw NonPartitionResult("partition parts must be weakly decreasing: " + to_string());
    }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 1) throw PreconditionError("partition parts are 1-indexed");
    return i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) conj[j]++;
    return Partition(std::move(conj));
}

bool Partition::contains(const Partition& nu) const {
    if (nu.length() > length()) return false;
    for (int i = 0; i < nu.length(); ++i)
        if (nu.parts_[i] > parts_[i]) return false;
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

std::string AmbientBox::to_string() const {
    return std::to_string(rows) + "x" + std::to_string(cols);
}

bool fits_in_box(const Partition& lambda, const AmbientBox& box) {
    return lambda.length() <= box.rows && lambda.first() <= box.cols;
}

Partition content_sum(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> sum(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) sum[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) sum[i] += b[i];
    while (!sum.empty() && sum.back() == 0) sum.pop_back();
    for (size_t i = 0; i + 1 < sum.size(); ++i)
        if (sum[i] < sum[i + 1])
            throw NonPartitionResult("content sum is not weakly decreasing");
    for (int v : sum)
        if (v < 0) throw NonPartitionResult("content sum has a negative entry");
    return Partition(std::move(sum));
}

Partition content_sum(const Partition& a, const Partition& b) {
    return content_sum(a.counts(), b.counts());
}

std::string to_string(NearRect n) {
    switch (n) {
        case NearRect::Left: return "left";
        case NearRect::Right: return "right";
        case NearRect::Top: return "top";
        case NearRect::Bottom: return "bottom";
    }
    return "?";
}

ShapeClass classify_shape(const Partition& lambda) {
    ShapeClass sc;
    if (lambda.empty()) {
        sc.kind = ShapeClass::Kind::Empty;
        return sc;
    }
    std::vector<std::pair<int, int>> blocks; // (part size, multiplicity)
    for (int p : lambda.parts()) {
        if (!blocks.empty() && blocks.back().first == p)
            blocks.back().second++;
        else
            blocks.emplace_back(p, 1);
    }
    if (blocks.size() == 1) {
        sc.kind = ShapeClass::Kind::Rectangle;
        sc.rect_cols = blocks[0].first;
        sc.rect_rows = blocks[0].second;
        sc.k_line = std::min(sc.rect_rows, sc.rect_cols);
        return sc;
    }
    if (blocks.size() == 2) {
        sc.kind = ShapeClass::Kind::FatHook;
        sc.hook_b = blocks[0].first;
        sc.hook_r = blocks[0].second;
        sc.hook_c = blocks[1].first;
        sc.hook_s = blocks[1].second;
        if (sc.hook_r == 1) sc.near_rectangle.insert(NearRect::Top);
        if (sc.hook_s == 1) sc.near_rectangle.insert(NearRect::Bottom);
        if (sc.hook_c == 1) sc.near_rectangle.insert(NearRect::Left);
        if (sc.hook_b == sc.hook_c + 1) sc.near_rectangle.insert(NearRect::Right);
        return sc;
    }
    sc.kind = ShapeClass::Kind::Generic;
    return sc;
}

bool is_rectangle(const Partition& lambda) {
    auto k = classify_shape(lambda).kind;
    return k == ShapeClass::Kind::Empty || k == ShapeClass::Kind::Rectangle;
}

bool is_line_rectangle(const Partition& lambda, int k) {
    auto sc = classify_shape(lambda);
    if (sc.kind != ShapeClass::Kind::Rectangle) return false;
    return sc.rect_rows == k || sc.rect_cols == k;
}

bool is_right_near_rectangle(const Partition& lambda) {
    auto sc = classify_shape(lambda);
    return sc.kind == ShapeClass::Kind::FatHook &&
           sc.near_rectangle.count(NearRect::Right) > 0;
}

} // namespace kgrass

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kgrass/errors.hpp"

namespace kgrass {

/// Integer partition: weakly decreasing sequence of positive parts.
/// Immutable value type with structural equality; the empty partition is ().
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    /// Number of parts.
    int length() const { return static_cast<int>(parts_.size()); }
    /// |λ| = sum of parts.
    int size() const;
    bool empty() const { return parts_.empty(); }

    /// 1-based part access; rows beyond length() read as 0.
    int part(int i) const;
    /// λ₁, or 0 for the empty partition.
    int first() const { return parts_.empty() ? 0 : parts_[0]; }

    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const;

    /// Componentwise containment: ν_i ≤ λ_i for all i.
    bool contains(const Partition& nu) const;

    /// Content vector: counts[v-1] = multiplicity of value v in the
    /// superstandard filling, which is just the part list itself.
    std::vector<int> counts() const { return parts_; }

    std::string to_string() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

private:
    std::vector<int> parts_;
};

struct AmbientBox {
    int rows = 1; // k
    int cols = 1; // n-k
    bool operator==(const AmbientBox&) const = default;
    std::string to_string() const;
};

bool fits_in_box(const Partition& lambda, const AmbientBox& box);

/// Componentwise sum of two content vectors, required to be a partition.
/// Throws NonPartitionResult otherwise.
Partition content_sum(const std::vector<int>& a, const std::vector<int>& b);
Partition content_sum(const Partition& a, const Partition& b);

enum class NearRect { Left, Right, Top, Bottom };

std::string to_string(NearRect n);

/// Stembridge shape classification. A rectangle (c^r) records both side
/// multiplicities; kLine is min(r, c), reported once even for squares.
/// A fat hook (b^r c^s), b > c > 0, carries every applicable near-rectangle
/// flag (several may hold at once, e.g. for (2,1)).
struct ShapeClass {
    enum class Kind { Empty, Rectangle, FatHook, Generic };
    Kind kind = Kind::Empty;

    // Rectangle data: λ = (cols^rows).
    int rect_rows = 0;
    int rect_cols = 0;
    std::optional<int> k_line;

    // Fat hook data: λ = (b^r c^s).
    int hook_b = 0, hook_r = 0, hook_c = 0, hook_s = 0;
    std::set<NearRect> near_rectangle;

    bool is(Kind k) const { return kind == k; }
};

ShapeClass classify_shape(const Partition& lambda);

/// True for the empty partition and for (c^r); Stembridge admits both.
bool is_rectangle(const Partition& lambda);

/// Rectangle with exactly k rows or k columns.
bool is_line_rectangle(const Partition& lambda, int k);

/// λ = (λ₁^{β₁} (λ₁-1)^{β₂}) with β₁, β₂ > 0 (the case-3d shape).
bool is_right_near_rectangle(const Partition& lambda);

} // namespace kgrass

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kgrass/partition.hpp"

namespace kgrass {

/// Small set of positive integers (values 1..31) stored as a bitmask.
class ValueSet {
public:
    ValueSet() = default;
    ValueSet(std::initializer_list<int> vs) {
        for (int v : vs) insert(v);
    }

    bool empty() const { return bits_ == 0; }
    int size() const { return __builtin_popcount(bits_); }
    bool contains(int v) const { return (bits_ >> v) & 1u; }
    void insert(int v) { bits_ |= (1u << v); }
    void erase(int v) { bits_ &= ~(1u << v); }
    int min() const { return __builtin_ctz(bits_); }
    int max() const { return 31 - __builtin_clz(bits_); }

    /// Elements in increasing order.
    std::vector<int> values() const {
        std::vector<int> out;
        for (uint32_t b = bits_; b; b &= b - 1) out.push_back(__builtin_ctz(b));
        return out;
    }

    uint32_t bits() const { return bits_; }

    bool operator==(const ValueSet&) const = default;
    /// Lexicographic on the increasing element list.
    bool operator<(const ValueSet& o) const;

    std::string to_string() const;

private:
    uint32_t bits_ = 0;
};

using ReadingWord = std::vector<int>;

/// Occurrence counts: counts[v-1] = multiplicity of value v.
struct Content {
    std::vector<int> counts;
    int weight = 0; // |T| when produced by content_of

    int count(int v) const {
        return (v >= 1 && v <= static_cast<int>(counts.size())) ? counts[v - 1] : 0;
    }
    bool operator==(const Content&) const = default;
};

/// Set-valued filling of the shape μ, optionally carrying the northeast
/// context partition λ whose superstandard filling is implicitly prepended
/// when reading the skew shape λ × μ.
struct SetValuedFilling {
    Partition shape;   // μ
    Partition context; // λ
    std::vector<std::vector<ValueSet>> rows;

    /// 1-based box access.
    const ValueSet& at(int r, int c) const { return rows[r - 1][c - 1]; }
    ValueSet& at(int r, int c) { return rows[r - 1][c - 1]; }

    /// |T| = Σ |T(i,j)| over the boxes of μ (context excluded).
    int weight() const;

    /// Semistandardness and nonempty-box re-validation.
    bool is_semistandard() const;
    bool single_valued() const;

    bool operator==(const SetValuedFilling& o) const { return rows == o.rows; }
    bool operator<(const SetValuedFilling& o) const { return rows < o.rows; }

    std::string to_string() const;
};

SetValuedFilling superstandard(const Partition& lambda);

ReadingWord reading_word(const SetValuedFilling& t, bool include_context);

bool is_reverse_lattice(const ReadingWord& w);

Content content_of(const SetValuedFilling& t, bool include_context);

/// All set-valued fillings T of μ with context λ such that the word of
/// λ × μ is a reverse lattice word and the combined content fits in box.
/// Sorted by full reading word, ties broken structurally; deterministic.
std::vector<SetValuedFilling> enumerate_buch_tableaux(const Partition& lambda,
                                                      const Partition& mu,
                                                      const AmbientBox& box);

/// First tableau in lexicographic order (by reading word). Throws
/// EmptyProduct when no filling exists; checks that the result is
/// single-valued (a semistandard Young tableau).
SetValuedFilling lex_min_tableau(const Partition& lambda, const Partition& mu,
                                 const AmbientBox& box);

} // namespace kgrass

#pragma once

#include <string>
#include <vector>

#include "kgrass/partition.hpp"
#include "kgrass/svt.hpp"

namespace kgrass {

/// One vertex per distinct content of the μ-fillings of a product.
/// `content` is the count vector of the μ filling alone (context excluded);
/// `extra` = |content| - |μ| is the poset row.
struct PosetVertex {
    std::vector<int> content;
    long long tableau_count = 0;
    int extra = 0;
};

/// Content poset of a product: ν ≤_P ν' iff content(ν) ⊇ content(ν')
/// componentwise (larger contents sit lower).
class ContentPoset {
public:
    static ContentPoset build(const Partition& lambda, const Partition& mu,
                              const AmbientBox& box);

    /// Build directly from an enumerated tableau list (same λ, μ, box).
    static ContentPoset from_tableaux(const Partition& lambda, const Partition& mu,
                                      const AmbientBox& box,
                                      const std::vector<SetValuedFilling>& tableaux);

    const std::vector<PosetVertex>& vertices() const { return vertices_; }
    const Partition& lambda() const { return lambda_; }
    const Partition& mu() const { return mu_; }
    const AmbientBox& box() const { return box_; }

    /// True iff vertex i ≤_P vertex j.
    bool leq(int i, int j) const;

    /// Cover relations as (lower, upper) = (larger content, smaller content)
    /// index pairs, by transitive reduction.
    std::vector<std::pair<int, int>> covers() const;

    int find(const std::vector<int>& content) const; // -1 when absent

private:
    Partition lambda_, mu_;
    AmbientBox box_;
    std::vector<PosetVertex> vertices_; // sorted by (|content|, content)
};

struct MobiusAssignment {
    std::vector<long long> values; // aligned with poset vertices
};

/// Top-down recursion from the defining identity Σ_{α ≥ ν} μ(α) = 1;
/// the identity is re-verified for every vertex before returning.
MobiusAssignment mobius(const ContentPoset& p);

struct MainTheoremEntry {
    std::vector<int> content; // ν' (μ-filling content)
    Partition nu;             // ν = λ-content + ν'
    long long mobius_value = 0;
    long long buch_coefficient = 0;
    bool pass = false;
};

struct MainTheoremReport {
    bool precondition_met = false; // Schur-multiplicity-free in the box
    bool all_pass = false;
    std::vector<MainTheoremEntry> entries;
};

/// Compares Möbius values against signed Buch coefficients vertex by vertex.
/// Failures are data, not errors; callers may run this on non-mf inputs.
MainTheoremReport check_main_theorem(const Partition& lambda, const Partition& mu,
                                     const AmbientBox& box);

/// Graphviz digraph of the Hasse diagram; edges run from larger content
/// (lower row) to smaller. Deterministic output.
std::string dot_export(const ContentPoset& p, const MobiusAssignment* m = nullptr);

} // namespace kgrass

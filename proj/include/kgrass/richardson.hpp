#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kgrass/partition.hpp"
#include "kgrass/svt.hpp"

namespace kgrass {

struct RichardsonQuadruple {
    Partition lambda, mu;
    AmbientBox box;
    bool operator==(const RichardsonQuadruple&) const = default;
    std::string to_string() const;
};

struct BasicCheck {
    bool basic = false;
    bool zero_product = false;      // λ ∩ rotate(μ) ≠ ∅
    std::vector<int> full_rows;     // rows r with λ_r + μ_{k-r+1} = n-k
    std::vector<int> full_cols;     // box columns c, conjugated statement
};

BasicCheck is_basic(const RichardsonQuadruple& r);

/// Forced top-row entries: w_A(j) = 1 + #(rows of λ in box column (n-k)-j+1),
/// for j = 1..n-k. (The paper's column index is off by one; this indexing is
/// the one validated by the forced-entry check in row demolition.)
std::vector<int> accessible_word(const Partition& lambda, const AmbientBox& box);

/// Filling-level poset isomorphism witness: forward maps fillings of the
/// original quadruple to fillings of the demolished one, backward inverts.
struct FillingBijection {
    std::function<SetValuedFilling(const SetValuedFilling&)> forward;
    std::function<SetValuedFilling(const SetValuedFilling&)> backward;
};

enum class DemolitionKind { Row, Column, TopRow };

struct DemolitionStep {
    DemolitionKind kind;
    int index = 0;
    RichardsonQuadruple before, after;
};

struct DemolitionTranscript {
    std::vector<DemolitionStep> steps;
};

struct DemolitionResult {
    RichardsonQuadruple after;
    FillingBijection witness;
};

/// Removes full box-column c; every filling's forced column [l+1..k] is
/// checked during the map. Throws NotFull if column c is not full.
DemolitionResult demolish_column(const RichardsonQuadruple& r, int c);

/// Removes full row r per the Row Demolition Lemma (including the full-top-
/// row box shrink with entries decremented). Throws NotFull.
DemolitionResult demolish_row(const RichardsonQuadruple& r, int row);

struct BasicDemolition {
    RichardsonQuadruple basic;
    DemolitionTranscript transcript;
    FillingBijection witness; // composed over all steps
    bool zero_product = false;
};

/// Repeatedly removes full rows/columns (lowest index first, rows before
/// columns) until basic. Confluence is checked by tests, not assumed here.
BasicDemolition basic_demolition(const RichardsonQuadruple& r);

/// Stembridge case tags for the pure shape classification.
enum class StembridgeCase { C1, C2a, C2b, C3a, C3b, C3c, C3d, C4a, C4b };

std::string to_string(StembridgeCase c);

/// All Stembridge cases matched by the unordered pair {a, b}; `swapped`
/// records that the match needed the roles exchanged relative to (a, b).
struct CaseMatch {
    StembridgeCase tag;
    bool swapped;
    bool operator<(const CaseMatch& o) const {
        return tag < o.tag || (tag == o.tag && swapped < o.swapped);
    }
};

std::set<CaseMatch> classify_stembridge_pair(const Partition& a, const Partition& b);

struct MultiplicityFreeVerdict {
    bool verdict = false;
    bool zero_product = false;
    RichardsonQuadruple basic;
    std::set<CaseMatch> cases; // matched on the basic quadruple
    std::string evidence;
};

/// Thomas–Yong: R is multiplicity-free iff its basic demolition matches a
/// Stembridge case. Pass brute_force_check to also compare against
/// "all boxed LR coefficients ≤ 1".
MultiplicityFreeVerdict is_multiplicity_free(const RichardsonQuadruple& r,
                                             bool brute_force_check = false);

/// Buch's criterion: both partitions rectangles, or one of them a single box
/// or empty. Evaluated as a stable (box-independent) property; with
/// cross_check the Buch coefficients are brute-forced in a sufficient box
/// and compared.
bool is_k_multiplicity_free(const RichardsonQuadruple& r, bool cross_check = false);

} // namespace kgrass

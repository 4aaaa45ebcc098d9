#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kgrass/partition.hpp"
#include "kgrass/richardson.hpp"
#include "kgrass/svt.hpp"

namespace kgrass {

/// Region classes of a box's values. Row: the value equals its row index.
/// String: a middle-band value sitting above its own row (case 3d only).
/// Below: a value ≥ length(context)+1 not matching its row.
struct Snake {
    Partition shape;
    int below_start = 1; // length(context)+1
    // Per box: bitmask, bit 0 = row value, bit 1 = string value, bit 2 = below value.
    std::vector<std::vector<uint8_t>> classes;
};

/// Encodes a filling as its snake; the inverse reconstruction is exact on
/// two-rectangle and case-3d fillings (values in each region are forced).
Snake snake_of(const SetValuedFilling& t);
SetValuedFilling filling_from_snake(const Snake& s, const Partition& context);

/// Intersnake of a filling in case 3d: boxes holding the first occurrence of
/// β₁+1..β₁+β₂ and the λ₁-th occurrence of β₁+β₂+1, β₁+β₂+2, … in the word.
struct Intersnake {
    std::vector<std::pair<int, int>> boxes; // (row, col), t-th entry has value β₁+t
    int length() const { return static_cast<int>(boxes.size()); }
    bool operator==(const Intersnake&) const = default;
};

Intersnake intersnake_of(const SetValuedFilling& t, int lambda1, int beta1, int beta2);

/// Sign-reversing matching on the Buch tableaux of one product. Tableaux are
/// carried in canonical (enumeration) order; pairs hold indices into them.
struct Matching {
    Partition lambda, mu;
    AmbientBox box;
    bool swapped = false; // built on the commuted product (μ, λ)
    std::vector<SetValuedFilling> tableaux;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> fixed_points;
};

/// The two-rectangle involution (or its upper-rectangle restriction when
/// `upper_rows` designates μ's top block): compare T to M over M's
/// superstandard region column by column and toggle the row value at the
/// first mismatching box. Fixed tableaux are returned unchanged.
SetValuedFilling i1(const SetValuedFilling& t, const AmbientBox& box,
                    std::optional<int> upper_rows = std::nullopt);

struct ReduceResult {
    Partition lambda2, mu2;
    AmbientBox box2;
    int alpha1 = 0;
    SetValuedFilling M;       // lex-min of the original product
    FillingBijection witness; // survivors (upper block = Mᵘ) ↔ reduced fillings
};

/// Reduction Lemma: strips μ's upper rectangle after I₁ cancels everything
/// whose upper block differs from M's. Requires λ to be a nonempty rectangle.
ReduceResult reduce(const Partition& lambda, const Partition& mu, const AmbientBox& box);

/// Case-3d data shared by i2/i3.
struct Case3dContext {
    Partition lambda, mu;
    AmbientBox box;
    int lambda1 = 0, beta1 = 0, beta2 = 0;
    SetValuedFilling M;
    Intersnake isnake_m;
};

Case3dContext make_case3d(const Partition& lambda, const Partition& mu,
                          const AmbientBox& box);

/// Intersnake involution. Returns the partner, or nullopt when T matches M
/// along M's intersnake or the addition is blocked (unmatched; I₃ territory).
std::optional<SetValuedFilling> i2(const SetValuedFilling& t, const Case3dContext& ctx);

/// Column-shift involution on the I₂ leftovers (full intersnake present,
/// placed differently from M's).
std::optional<SetValuedFilling> i3(const SetValuedFilling& t, const Case3dContext& ctx);

/// Constructs the full sign-reversing matching: demolition to the basic
/// quadruple, then dispatch through the Stembridge cases (reduction recursion,
/// Pieri base rules, or the I₁→I₂→I₃ pipeline). Throws
/// NotMultiplicityFreeCase when no case applies in either orientation, and
/// EmptyProduct for zero products.
Matching build_matching(const Partition& lambda, const Partition& mu,
                        const AmbientBox& box);

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    bool all_pass = false;
    std::vector<VerifyCheck> checks;
};

/// Machine-checks the matching: partition of the tableau set, sign reversal
/// on every pair, symmetric pairing, unique fixed point equal to the lex-min
/// tableau, and the per-content signed counts against Möbius values.
/// Failures are report entries, never exceptions.
VerifyReport verify_matching(const Matching& m, const std::vector<SetValuedFilling>& all);

} // namespace kgrass

#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace eurhythm {

/// A cyclic rhythm: a subset of the pulses {0, ..., n-1} on a circle of
/// circumference n. Onsets are kept sorted; values are immutable after
/// construction, so instances are freely shareable across threads.
class Rhythm {
public:
    /// Validates 1 <= timespan and 0 <= onset < timespan with no duplicates.
    /// Input order does not matter; onsets are stored sorted.
    Rhythm(int timespan, std::vector<int> onsets);

    int timespan() const noexcept { return timespan_; }
    int onset_count() const noexcept { return static_cast<int>(onsets_.size()); }
    const std::vector<int>& onsets() const noexcept { return onsets_; }

    /// Onset by index, taken modulo the onset count.
    int onset(int index) const;
    bool has_onset(int pulse) const;

    bool operator==(const Rhythm&) const = default;
    auto operator<=>(const Rhythm&) const = default;

private:
    int timespan_;
    std::vector<int> onsets_;
};

/// Clockwise inter-onset gaps, anchored at the first onset. Positive entries
/// summing to the timespan. Rotations of the same sequence are distinct
/// values but the same necklace.
using DistanceSeq = std::vector<int>;

/// Rotation-free identity of a rhythm: the lexicographically least rotation
/// of its distance sequence, plus the timespan.
struct NecklaceClass {
    int timespan = 0;
    DistanceSeq canonical;
    bool operator==(const NecklaceClass&) const = default;
};

// -- text forms ------------------------------------------------------------

/// Parses box notation: 'x'/'X' marks an onset, '.' a rest; whitespace and
/// surrounding brackets are ignored. Anything else is rejected with the
/// offending index. An empty pattern is rejected.
Rhythm parse_box(std::string_view text);

/// Emits the compact box form, e.g. "x..x..x." (no padding, no brackets).
std::string to_box(const Rhythm& r);

/// Subset form "{0,3,6,10,12}/16"; "{}/8" for the empty rhythm.
std::string to_subset_text(const Rhythm& r);
Rhythm parse_subset_text(std::string_view text);

/// Distance-sequence form "(3,3,4,2,4)".
std::string to_distance_text(const DistanceSeq& gaps);
DistanceSeq parse_distance_text(std::string_view text);

/// Accepts box, subset, or distance-sequence text (by leading '{' or '(';
/// distance sequences anchor at pulse 0).
Rhythm parse_pattern(std::string_view text);

// -- conversions and circle geometry ----------------------------------------

/// Requires at least one onset.
DistanceSeq to_distance_seq(const Rhythm& r);

/// Prefix sums of `gaps` offset by `start`, reduced mod `timespan`.
/// Rejects gap sums that do not equal the timespan. Inverse of
/// to_distance_seq when start is the first onset.
Rhythm from_distance_seq(const DistanceSeq& gaps, int start, int timespan);

/// Clockwise arc length from onset i to onset j (indices mod k), in [0, n-1].
int clockwise_dist(const Rhythm& r, int i, int j);

/// Shorter of the two arcs between onsets i and j, in [0, floor(n/2)].
int geodesic_dist(const Rhythm& r, int i, int j);

/// Geodesic distance between two pulse values on a circle of circumference n.
int geodesic_between(int a, int b, int n);

Rhythm rotate(const Rhythm& r, int delta);

/// Maps onset i to alpha*i on a circle of timespan alpha*n; every geodesic
/// distance d becomes alpha*d.
Rhythm scale(const Rhythm& r, int alpha);

/// The rhythm whose distance sequence is the reversal of r's, anchored at
/// pulse 0. Requires at least one onset.
Rhythm reverse(const Rhythm& r);

NecklaceClass canonical_necklace(const Rhythm& r);
NecklaceClass canonical_necklace(const DistanceSeq& gaps);

/// Smallest p dividing n with rotate(r, p) == r; p < n exactly for properly
/// periodic rhythms. Requires at least one onset.
int smallest_period(const Rhythm& r);

/// Copy with one onset removed (the pulse must be an onset).
Rhythm without_onset(const Rhythm& r, int pulse);

/// Rhythm of timespan n whose onsets are the set bits of `mask`.
Rhythm rhythm_from_mask(int timespan, unsigned mask);

}  // namespace eurhythm

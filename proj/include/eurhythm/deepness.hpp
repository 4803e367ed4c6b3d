#pragma once

#include <map>
#include <optional>
#include <vector>

#include "eurhythm/rhythm.hpp"

namespace eurhythm {

/// Occurrence count of each nonzero pairwise geodesic distance. The counts
/// sum to C(k,2).
using MultiplicityHistogram = std::map<int, int>;

MultiplicityHistogram histogram(const Rhythm& r);

/// True when the nonzero multiplicities are exactly {1, 2, ..., k-1}, one
/// distance each. Every rhythm with at most two onsets qualifies.
bool is_erdos_deep(const Rhythm& r);

/// True when the multiplicities of ALL distances 1..floor(n/2) -- absent
/// distances counting as zero -- are pairwise distinct.
bool is_winograd_deep(const Rhythm& r);

/// Structural witness for a deep rhythm: a rotation of a scaling of either
/// the generated rhythm D_{k,n',m'} or the exceptional rhythm F.
struct DeepForm {
    enum class Kind { Generated, ExceptionalF };
    Kind kind = Kind::Generated;
    int rotation = 0;  // applied after scaling
    int scaling = 1;
    // Generated only: D_{onsets, base_timespan, base_step}.
    int onsets = 0;
    int base_timespan = 0;
    int base_step = 0;

    Rhythm reconstruct() const;

    /// Checks the witness grammar: for Generated, k <= floor(n'/2)+1,
    /// gcd(m', n') = 1 and 1 <= m' <= floor(n'/2); the base timespan 1 is
    /// the one degenerate where that range is empty and m' = 0 stands in
    /// (only rhythms with at most one onset land there).
    bool parameters_valid() const;
};

/// Witness search for Erdos-deep rhythms; empty exactly when not deep.
/// The witness is canonical: forced scaling (the gcd of onset differences),
/// the unique admissible generator, and the smallest reconstructing rotation.
std::optional<DeepForm> characterize_deep(const Rhythm& r);

/// One canonical onset-removal order that keeps every suffix Erdos-deep:
/// generated witnesses shed the last generated onset first; F-shaped ones
/// follow the 4, 2, 1, 0 order on F. Rejects non-deep input.
std::vector<int> shelling(const Rhythm& r);

/// True when removing `order` front-to-back leaves an Erdos-deep rhythm at
/// every step (including step zero). `order` must be a permutation of the
/// onsets.
bool validate_shelling(const Rhythm& r, const std::vector<int>& order);

}  // namespace eurhythm

#pragma once

#include <optional>

#include "eurhythm/rhythm.hpp"

namespace eurhythm {

/// Parameters for rhythm construction: k onsets in n pulses, with an
/// optional generator step m for generated rhythms.
struct GeneratorSpec {
    int onsets = 0;
    int pulses = 0;
    std::optional<int> step;
};

/// Bjorklund's even-distribution fold: start from k one-sequences and n-k
/// zero-sequences, repeatedly append one remainder sequence to each quotient
/// sequence, and stop once the remainder is down to a single sequence (or
/// none). Accepts 0 <= k <= n.
Rhythm bjorklund(int onsets, int pulses);

/// Distance sequence of k positive terms summing to n built by the gcd-style
/// recursion on (k, n mod k); every term is floor(n/k) or ceil(n/k).
DistanceSeq euclidean_recursive(int pulses, int onsets);

/// The onset set { floor(i*n/k) : i in [0, k-1] }.
Rhythm clough_douthett(int pulses, int onsets);

/// Places k evenly spaced points at i*n/k + 1/(2k) (never on a pulse) and
/// snaps each clockwise to the next pulse. Exact integer arithmetic.
Rhythm snap(int pulses, int onsets);

/// D_{k,n,m}: the first k multiples of m modulo n. Rejects colliding
/// multiples (always distinct when gcd(m, n) = 1).
Rhythm generated_rhythm(int onsets, int pulses, int step);

/// The one exceptional deep rhythm {0,1,2,4} of timespan 6.
Rhythm exceptional_f();

namespace detail {
/// bjorklund plus the number of sequence-append operations performed,
/// for cost assertions in tests.
struct BjorklundRun {
    Rhythm rhythm;
    int sequence_appends = 0;
};
BjorklundRun bjorklund_instrumented(int onsets, int pulses);
}  // namespace detail

}  // namespace eurhythm

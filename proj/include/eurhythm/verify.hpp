#pragma once

#include <string>

namespace eurhythm {

/// Result of one exhaustive sweep. `counterexample` is empty on a pass and
/// describes the first failing case otherwise.
struct VerifyOutcome {
    bool pass = true;
    long long cases = 0;
    std::string counterexample;
};

/// The four generators agree at necklace level for all 2 <= k <= n <= max_n.
VerifyOutcome verify_even_equivalence(int max_n);

/// For all 2 <= k <= n <= max_n: the brute-force chordal argmax (tolerance
/// 1e-9) is exactly one rotation orbit, equal to the orbit of the
/// constructed rhythm, and equal to the set of rhythms with the floor/ceil
/// level property. Also confirms the next-best value is well clear of the
/// tolerance.
VerifyOutcome verify_even_uniqueness(int max_n, int enumeration_cap = 20);

/// Over every subset of every timespan up to max_n: deep iff a witness
/// exists, and the witness reconstructs the rhythm with valid parameters.
VerifyOutcome verify_deep_characterization(int max_n);

/// For 2 <= k <= floor(n/2)+1, n <= max_n: the maximum-evenness rhythm is
/// Erdos-deep iff gcd(k, n) = 1. (Fails honestly: k = 2 with even n is a
/// counterexample family -- {0, n/2} is deep by the two-onset rule.)
VerifyOutcome verify_erd_deep_gcd(int max_n, int enumeration_cap = 20);

/// Corpus string classifications reproduce the documented three groupings,
/// and the existence/uniqueness law for Euclidean strings holds for every
/// string of length <= max_len with entries in [0, max_entry].
VerifyOutcome verify_string_lists(int max_len = 8, int max_entry = 4);

/// Upper-boundary run lengths of the digital line match the maximally even
/// distance sequence at necklace level for all 1 <= k <= n <= max_n.
VerifyOutcome verify_digital_line(int max_n);

}  // namespace eurhythm

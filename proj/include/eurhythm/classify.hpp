#pragma once

#include <string>
#include <vector>

#include "eurhythm/rhythm.hpp"

namespace eurhythm {

/// Aksak taxonomy: gaps drawn from {2,3} with both present, then split by
/// the timespan (prime / odd composite / even).
enum class AksakClass { NotAksak, Authentic, QuasiAksak, PseudoAksak };

enum class StringClass { Neither, EuclideanString, ReverseEuclideanString, Both };

const char* to_string(AksakClass c);
const char* to_string(StringClass c);
AksakClass aksak_class_from_string(const std::string& s);
StringClass string_class_from_string(const std::string& s);

AksakClass aksak_class(const Rhythm& r);

/// The 2k < n < 3k window in which the maximally even rhythm is aksak.
bool euclidean_aksak_condition(int onsets, int pulses);

using IntString = std::vector<int>;

/// Increment the first entry, decrement the last. Rejects a zero last entry.
/// A single-entry string is fixed (the two edits cancel).
IntString tau(const IntString& p);

/// True when tau(p) is a rotation of p. A zero last entry simply yields
/// false. Singletons are trivially Euclidean.
bool is_euclidean_string(const IntString& p);

/// Classifies the string itself and its reversal. Rotation-sensitive:
/// rotations of the same necklace can classify differently.
StringClass string_class_of(const IntString& p);

/// string_class_of applied to the rhythm's distance sequence (anchored at
/// the first onset). Requires k >= 1.
StringClass string_class(const Rhythm& r);

}  // namespace eurhythm

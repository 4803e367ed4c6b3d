#pragma once

#include <vector>

#include "eurhythm/rhythm.hpp"

namespace eurhythm {

/// Jewish calendar: year y (>= 1) is a leap year iff y mod 19 is one of
/// 3, 6, 8, 11, 14, 17, 19.
bool jewish_leap_year(long long year);

/// The 19-year leap cycle as a rhythm: bjorklund(7, 19) started at its 7th
/// pulse, so that 1-indexed onset positions are exactly the leap years.
Rhythm jewish_leap_pattern();

/// Gregorian rule: divisible by 4, except centuries not divisible by 400.
bool gregorian_leap_year(long long year);

enum class LineSide { Lower, Upper };

/// Run lengths along the rasterized boundary of the segment from (0,0) to
/// (n,k), slope k/n <= 1: lower runs count the columns per row under
/// floor(j*k/n); upper runs are their reversal. Both are rotations of the
/// maximally even distance sequence.
std::vector<int> digital_line_runs(int width, int height, LineSide side);

}  // namespace eurhythm

#include "eurhythm/applications.hpp"

#include <algorithm>
#include <stdexcept>

#include "eurhythm/generators.hpp"

namespace eurhythm {

bool jewish_leap_year(long long year) {
    if (year < 1) throw std::invalid_argument("jewish_leap_year: years start at 1");
    const long long r = year % 19;
    return r == 3 || r == 6 || r == 8 || r == 11 || r == 14 || r == 17 || r == 0;
}

Rhythm jewish_leap_pattern() {
    // Reading bjorklund(7, 19) from its 7th pulse (index 6) places the
    // onsets at 1-indexed years 3, 6, 8, 11, 14, 17, 19.
    return rotate(bjorklund(7, 19), -6);
}

bool gregorian_leap_year(long long year) {
    if (year < 1) throw std::invalid_argument("gregorian_leap_year: years start at 1");
    return year % 4 == 0 && (year % 100 != 0 || year % 400 == 0);
}

std::vector<int> digital_line_runs(int width, int height, LineSide side) {
    const int n = width;
    const int k = height;
    if (k < 1) throw std::invalid_argument("digital_line_runs: need at least one row");
    if (k > n) throw std::invalid_argument("digital_line_runs: slope above 1 (k > n)");
    std::vector<int> runs(static_cast<std::size_t>(k), 0);
    for (int j = 0; j < n; ++j)
        ++runs[static_cast<std::size_t>((static_cast<long long>(j) * k) / n)];
    if (side == LineSide::Upper) std::reverse(runs.begin(), runs.end());
    return runs;
}

}  // namespace eurhythm

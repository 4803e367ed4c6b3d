#pragma once

#include <functional>
#include <vector>

#include "eurhythm/rhythm.hpp"

namespace eurhythm {

/// Chord length subtended by an arc of length `dist` on a circle of
/// circumference `timespan`, normalized to unit radius: 2*sin(pi*d/n).
double chord_length(int dist, int timespan);

/// Sum of chord lengths over all unordered onset pairs.
double evenness_chordal(const Rhythm& r);

/// Sum of geodesic distances over all unordered onset pairs.
long long evenness_geodesic(const Rhythm& r);

/// Sum of squared geodesic distances over all unordered onset pairs.
long long evenness_squared_geodesic(const Rhythm& r);

/// Clockwise distance from onset i to onset i+level, with the full loop
/// (level = k) counting as n rather than 0.
int level_distance(const Rhythm& r, int onset_index, int level);

/// D(R,l) and S(R,l): the multiset of level-l clockwise distances (sorted)
/// and its chordal sum. Level must be in [1, k].
struct LevelSum {
    std::vector<int> clockwise;
    double chordal = 0.0;
};
LevelSum level_sum(const Rhythm& r, int level);

/// True when every level-l clockwise distance, for every l in [1, k], is
/// floor(l*n/k) or ceil(l*n/k). Requires k >= 2. This is the exact
/// characterization of maximum chordal evenness.
bool has_property_star(const Rhythm& r);

/// Same condition phrased on the distance sequence: every cyclic window of
/// l consecutive gaps sums to floor(l*n/k) or ceil(l*n/k).
bool has_property_star_star(const Rhythm& r);

struct EvennessReport {
    double chordal_sum = 0.0;
    long long geodesic_sum = 0;
    long long squared_geodesic_sum = 0;
    std::vector<LevelSum> per_level;  // entries for levels 1..k
};
EvennessReport evenness_report(const Rhythm& r);

enum class EvennessMetric { Chordal, Geodesic, SquaredGeodesic };
double evenness_value(const Rhythm& r, EvennessMetric metric);

/// Exhaustive maximum-evenness oracle over all k-subsets of [0, n).
/// Maximizers are compared with absolute tolerance 1e-9 for the chordal
/// metric (exact for the integer metrics) and returned in lexicographic
/// onset order. `runner_up` is the best non-maximal value (-inf when every
/// subset ties), so callers can confirm the tolerance is safely inside the
/// gap. Timespans above `enumeration_cap` are rejected.
struct MaxEvennessResult {
    std::vector<Rhythm> maximizers;
    double max_value = 0.0;
    double runner_up = 0.0;
};
MaxEvennessResult brute_force_max_evenness(int timespan, int onsets, EvennessMetric metric,
                                           int enumeration_cap = 20);

/// Lexicographic enumeration of all k-subsets of [0, n).
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn);

}  // namespace eurhythm

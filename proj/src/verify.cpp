#include "eurhythm/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "eurhythm/applications.hpp"
#include "eurhythm/classify.hpp"
#include "eurhythm/corpus.hpp"
#include "eurhythm/deepness.hpp"
#include "eurhythm/evenness.hpp"
#include "eurhythm/generators.hpp"
#include "eurhythm/numtheory.hpp"
#include "eurhythm/rhythm.hpp"

namespace eurhythm {

namespace {

std::vector<Rhythm> rotation_orbit(const Rhythm& r) {
    std::set<Rhythm> orbit;
    for (int delta = 0; delta < r.timespan(); ++delta) orbit.insert(rotate(r, delta));
    return {orbit.begin(), orbit.end()};
}

}  // namespace

VerifyOutcome verify_even_equivalence(int max_n) {
    VerifyOutcome out;
    for (int n = 2; n <= max_n && out.pass; ++n) {
        for (int k = 2; k <= n && out.pass; ++k) {
            ++out.cases;
            const NecklaceClass ref = canonical_necklace(clough_douthett(n, k));
            const struct {
                const char* name;
                Rhythm rhythm;
            } others[] = {
                {"bjorklund", bjorklund(k, n)},
                {"snap", snap(n, k)},
                {"euclidean-recursive", from_distance_seq(euclidean_recursive(n, k), 0, n)},
            };
            for (const auto& other : others) {
                if (canonical_necklace(other.rhythm) != ref) {
                    out.pass = false;
                    std::ostringstream msg;
                    msg << other.name << " disagrees with clough-douthett at k=" << k
                        << " n=" << n;
                    out.counterexample = msg.str();
                    break;
                }
            }
        }
    }
    return out;
}

VerifyOutcome verify_even_uniqueness(int max_n, int enumeration_cap) {
    VerifyOutcome out;
    for (int n = 2; n <= max_n && out.pass; ++n) {
        for (int k = 2; k <= n && out.pass; ++k) {
            ++out.cases;
            std::ostringstream where;
            where << "k=" << k << " n=" << n;

            const MaxEvennessResult res =
                brute_force_max_evenness(n, k, EvennessMetric::Chordal, enumeration_cap);
            // The tolerance must sit far inside the gap to the next value.
            if (res.runner_up > res.max_value - 1e-6) {
                out.pass = false;
                out.counterexample = "argmax gap below 1e-6 at " + where.str();
                break;
            }

            const std::vector<Rhythm> orbit = rotation_orbit(clough_douthett(n, k));
            if (res.maximizers != orbit) {
                out.pass = false;
                out.counterexample = "argmax set is not the constructed orbit at " + where.str();
                break;
            }

            std::vector<Rhythm> star_set;
            for_each_subset(n, k, [&](const std::vector<int>& pick) {
                Rhythm r(n, pick);
                if (has_property_star(r)) star_set.push_back(std::move(r));
            });
            if (star_set != orbit) {
                out.pass = false;
                out.counterexample = "floor/ceil level property set differs at " + where.str();
            }
        }
    }
    return out;
}

VerifyOutcome verify_deep_characterization(int max_n) {
    VerifyOutcome out;
    for (int n = 1; n <= max_n && out.pass; ++n) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            ++out.cases;
            const Rhythm r = rhythm_from_mask(n, mask);
            const bool deep = is_erdos_deep(r);
            const auto form = characterize_deep(r);
            std::string problem;
            if (deep && !form) problem = "deep but no witness";
            else if (!deep && form) problem = "witness for a non-deep rhythm";
            else if (form && !form->parameters_valid()) problem = "witness parameters invalid";
            else if (form && form->reconstruct() != r) problem = "witness does not reconstruct";
            if (!problem.empty()) {
                out.pass = false;
                out.counterexample = problem + " for " + to_subset_text(r);
                break;
            }
        }
    }
    return out;
}

VerifyOutcome verify_erd_deep_gcd(int max_n, int enumeration_cap) {
    VerifyOutcome out;
    for (int n = 2; n <= max_n && out.pass; ++n) {
        for (int k = 2; k <= n / 2 + 1 && k <= n; ++k) {
            ++out.cases;
            const MaxEvennessResult res =
                brute_force_max_evenness(n, k, EvennessMetric::Chordal, enumeration_cap);
            const bool deep = is_erdos_deep(res.maximizers.front());
            const bool coprime = gcd(k, n) == 1;
            if (deep != coprime) {
                out.pass = false;
                std::ostringstream msg;
                msg << "k=" << k << " n=" << n << ": maximum-evenness rhythm "
                    << to_subset_text(res.maximizers.front()) << " is "
                    << (deep ? "" : "not ") << "Erdos-deep while gcd(k,n)=" << gcd(k, n);
                out.counterexample = msg.str();
                break;
            }
        }
    }
    return out;
}

VerifyOutcome verify_string_lists(int max_len, int max_entry) {
    VerifyOutcome out;

    // The documented three groupings of the Euclidean-rhythm corpus.
    static const std::map<std::string, StringClass> kExpected = {
        {"E(2,3)", StringClass::EuclideanString},
        {"E(2,5)", StringClass::EuclideanString},
        {"E(3,4)", StringClass::EuclideanString},
        {"E(3,7)", StringClass::EuclideanString},
        {"E(4,5)", StringClass::EuclideanString},
        {"E(4,9)", StringClass::EuclideanString},
        {"E(5,6)", StringClass::EuclideanString},
        {"E(5,11)", StringClass::EuclideanString},
        {"E(5,16)", StringClass::EuclideanString},
        {"E(6,7)", StringClass::EuclideanString},
        {"E(6,13)", StringClass::EuclideanString},
        {"E(7,8)", StringClass::EuclideanString},
        {"E(7,15)", StringClass::EuclideanString},
        {"E(8,17)", StringClass::EuclideanString},
        {"E(3,5)", StringClass::ReverseEuclideanString},
        {"E(3,8)", StringClass::ReverseEuclideanString},
        {"E(3,11)", StringClass::ReverseEuclideanString},
        {"E(3,14)", StringClass::ReverseEuclideanString},
        {"E(4,7)", StringClass::ReverseEuclideanString},
        {"E(4,11)", StringClass::ReverseEuclideanString},
        {"E(4,15)", StringClass::ReverseEuclideanString},
        {"E(5,7)", StringClass::ReverseEuclideanString},
        {"E(5,9)", StringClass::ReverseEuclideanString},
        {"E(5,12)", StringClass::ReverseEuclideanString},
        {"E(7,9)", StringClass::ReverseEuclideanString},
        {"E(7,10)", StringClass::ReverseEuclideanString},
        {"E(7,16)", StringClass::ReverseEuclideanString},
        {"E(7,17)", StringClass::ReverseEuclideanString},
        {"E(9,22)", StringClass::ReverseEuclideanString},
        {"E(11,12)", StringClass::ReverseEuclideanString},
        {"E(11,24)", StringClass::ReverseEuclideanString},
        {"E(5,8)", StringClass::Neither},
        {"E(5,13)", StringClass::Neither},
        {"E(7,12)", StringClass::Neither},
        {"E(7,18)", StringClass::Neither},
        {"E(8,19)", StringClass::Neither},
        {"E(9,14)", StringClass::Neither},
        {"E(9,16)", StringClass::Neither},
        {"E(9,23)", StringClass::Neither},
        {"E(13,24)", StringClass::Neither},
        {"E(15,34)", StringClass::Neither},
    };

    const std::vector<CorpusEntry> corpus = load_corpus();
    std::set<std::string> seen;
    for (const CorpusEntry& e : corpus) {
        if (!e.is_euclidean_entry()) continue;
        ++out.cases;
        seen.insert(e.id);
        auto it = kExpected.find(e.id);
        if (it == kExpected.end()) {
            out.pass = false;
            out.counterexample = "corpus entry " + e.id + " missing from the groupings";
            return out;
        }
        const StringClass got = string_class(e.rhythm());
        if (got != it->second) {
            out.pass = false;
            out.counterexample = "entry " + e.id + " classifies as " + to_string(got) +
                                 ", grouping says " + to_string(it->second);
            return out;
        }
    }
    if (seen.size() != kExpected.size()) {
        out.pass = false;
        out.counterexample = "groupings list " + std::to_string(kExpected.size()) +
                             " rhythms, corpus has " + std::to_string(seen.size());
        return out;
    }

    // Existence and uniqueness over every string of bounded length and
    // entry size, keyed by (length, sum): a Euclidean string exists iff the
    // length and the sum are relatively prime, and it is unique.
    for (int len = 1; len <= max_len; ++len) {
        // counts[sum] = number of Euclidean strings of this length and sum.
        std::map<int, int> counts;
        std::vector<int> p(static_cast<std::size_t>(len), 0);
        while (true) {
            ++out.cases;
            if (is_euclidean_string(p)) {
                int sum = 0;
                for (int v : p) sum += v;
                ++counts[sum];
            }
            int i = len - 1;
            while (i >= 0 && p[static_cast<std::size_t>(i)] == max_entry) --i;
            if (i < 0) break;
            ++p[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < len; ++j) p[static_cast<std::size_t>(j)] = 0;
        }
        for (int sum = 0; sum <= max_entry * len; ++sum) {
            const bool coprime = gcd(len, sum) == 1;
            const int found = counts.count(sum) ? counts[sum] : 0;
            if (found != (coprime ? 1 : 0)) {
                out.pass = false;
                std::ostringstream msg;
                msg << "length " << len << " sum " << sum << ": found " << found
                    << " Euclidean strings, gcd(length,sum)=" << gcd(len, sum);
                out.counterexample = msg.str();
                return out;
            }
        }
    }
    return out;
}

VerifyOutcome verify_digital_line(int max_n) {
    VerifyOutcome out;
    for (int n = 1; n <= max_n && out.pass; ++n) {
        for (int k = 1; k <= n; ++k) {
            ++out.cases;
            const std::vector<int> upper = digital_line_runs(n, k, LineSide::Upper);
            if (canonical_necklace(upper) != canonical_necklace(euclidean_recursive(n, k))) {
                out.pass = false;
                std::ostringstream msg;
                msg << "upper runs differ from the even distance sequence at k=" << k
                    << " n=" << n;
                out.counterexample = msg.str();
                break;
            }
        }
    }
    return out;
}

}  // namespace eurhythm

#include "eurhythm/generators.hpp"

#include <stdexcept>
#include <string>

#include "eurhythm/numtheory.hpp"

namespace eurhythm {

namespace detail {

BjorklundRun bjorklund_instrumented(int onsets, int pulses) {
    const int k = onsets;
    const int n = pulses;
    if (n < 1) throw std::invalid_argument("bjorklund: need at least one pulse");
    if (k < 0 || k > n)
        throw std::invalid_argument("bjorklund: onset count " + std::to_string(k) +
                                    " outside [0, " + std::to_string(n) + "]");
    if (k == 0) return {Rhythm(n, {}), 0};

    // Quotient sequences start as k ones, the remainder as n-k zeros. Each
    // round appends one remainder sequence to each quotient sequence; the
    // leftovers of the more plentiful side become the next remainder. Stops
    // once the remainder is a single sequence (or none).
    std::vector<std::string> quotient(static_cast<std::size_t>(k), "1");
    std::vector<std::string> remainder(static_cast<std::size_t>(n - k), "0");
    int appends = 0;
    while (remainder.size() > 1) {
        const std::size_t t = std::min(quotient.size(), remainder.size());
        std::vector<std::string> merged;
        merged.reserve(t);
        for (std::size_t i = 0; i < t; ++i) {
            merged.push_back(quotient[i] + remainder[i]);
            ++appends;
        }
        std::vector<std::string> leftover;
        if (quotient.size() > t)
            leftover.assign(quotient.begin() + static_cast<long>(t), quotient.end());
        else if (remainder.size() > t)
            leftover.assign(remainder.begin() + static_cast<long>(t), remainder.end());
        quotient = std::move(merged);
        remainder = std::move(leftover);
    }

    std::string bits;
    bits.reserve(static_cast<std::size_t>(n));
    for (const auto& s : quotient) bits += s;
    for (const auto& s : remainder) bits += s;

    std::vector<int> result;
    result.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < n; ++i)
        if (bits[static_cast<std::size_t>(i)] == '1') result.push_back(i);
    return {Rhythm(n, std::move(result)), appends};
}

}  // namespace detail

Rhythm bjorklund(int onsets, int pulses) {
    return detail::bjorklund_instrumented(onsets, pulses).rhythm;
}

DistanceSeq euclidean_recursive(int pulses, int onsets) {
    const int n = pulses;
    const int k = onsets;
    if (k < 1) throw std::invalid_argument("euclidean_recursive: need at least one onset");
    if (k > n) throw std::invalid_argument("euclidean_recursive: more onsets than pulses");
    if (n % k == 0) return DistanceSeq(static_cast<std::size_t>(k), n / k);
    const int a = n % k;
    const DistanceSeq inner = euclidean_recursive(k, a);
    DistanceSeq out;
    out.reserve(static_cast<std::size_t>(k));
    for (int x : inner) {
        for (int i = 0; i < x - 1; ++i) out.push_back(n / k);
        out.push_back(n / k + 1);
    }
    return out;
}

Rhythm clough_douthett(int pulses, int onsets) {
    const int n = pulses;
    const int k = onsets;
    if (k < 1) throw std::invalid_argument("clough_douthett: need at least one onset");
    if (k > n) throw std::invalid_argument("clough_douthett: more onsets than pulses");
    std::vector<int> result;
    result.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        result.push_back(static_cast<int>((static_cast<long long>(i) * n) / k));
    return Rhythm(n, std::move(result));
}

Rhythm snap(int pulses, int onsets) {
    const int n = pulses;
    const int k = onsets;
    if (k < 1) throw std::invalid_argument("snap: need at least one onset");
    if (k > n) throw std::invalid_argument("snap: more onsets than pulses");
    // Point i sits at i*n/k + 1/(2k) = (2in+1)/(2k), never on a pulse
    // (odd numerator, even denominator). Snap clockwise = exact rational
    // ceiling.
    std::vector<int> result;
    result.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const long long num = 2LL * i * n + 1;
        const long long den = 2LL * k;
        const long long snapped = (num + den - 1) / den;
        result.push_back(static_cast<int>(snapped % n));
    }
    return Rhythm(n, std::move(result));
}

Rhythm generated_rhythm(int onsets, int pulses, int step) {
    const int k = onsets;
    const int n = pulses;
    const int m = step;
    if (k < 1 || k > n) throw std::invalid_argument("generated_rhythm: need 1 <= k <= n");
    if (m < 0 || m >= n) throw std::invalid_argument("generated_rhythm: need 0 <= m < n");
    std::vector<int> result;
    result.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        result.push_back(static_cast<int>((static_cast<long long>(i) * m) % n));
    std::sort(result.begin(), result.end());
    for (std::size_t i = 1; i < result.size(); ++i)
        if (result[i] == result[i - 1])
            throw std::invalid_argument("generated_rhythm: multiples of " + std::to_string(m) +
                                        " collide modulo " + std::to_string(n));
    return Rhythm(n, std::move(result));
}

Rhythm exceptional_f() { return Rhythm(6, {0, 1, 2, 4}); }

}  // namespace eurhythm

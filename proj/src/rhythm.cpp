#include "eurhythm/rhythm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "eurhythm/numtheory.hpp"

namespace eurhythm {

namespace {

int positive_mod(long long v, int m) {
    long long r = v % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

// Index of the lexicographically least rotation, O(k^2).
int least_rotation_index(const std::vector<int>& s) {
    const int n = static_cast<int>(s.size());
    int best = 0;
    for (int i = 1; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int a = s[(i + j) % n];
            const int b = s[(best + j) % n];
            if (a != b) {
                if (a < b) best = i;
                break;
            }
        }
    }
    return best;
}

}  // namespace

Rhythm::Rhythm(int timespan, std::vector<int> onsets)
    : timespan_(timespan), onsets_(std::move(onsets)) {
    if (timespan_ < 1) throw std::invalid_argument("Rhythm: timespan must be positive");
    std::sort(onsets_.begin(), onsets_.end());
    for (std::size_t i = 0; i < onsets_.size(); ++i) {
        if (onsets_[i] < 0 || onsets_[i] >= timespan_)
            throw std::invalid_argument("Rhythm: onset " + std::to_string(onsets_[i]) +
                                        " outside [0, " + std::to_string(timespan_ - 1) + "]");
        if (i > 0 && onsets_[i] == onsets_[i - 1])
            throw std::invalid_argument("Rhythm: duplicate onset " + std::to_string(onsets_[i]));
    }
}

int Rhythm::onset(int index) const {
    if (onsets_.empty()) throw std::invalid_argument("Rhythm::onset: empty rhythm");
    return onsets_[positive_mod(index, onset_count())];
}

bool Rhythm::has_onset(int pulse) const {
    return std::binary_search(onsets_.begin(), onsets_.end(), pulse);
}

Rhythm parse_box(std::string_view text) {
    std::vector<int> onsets;
    int pulse = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        switch (c) {
            case 'x':
            case 'X':
                onsets.push_back(pulse++);
                break;
            case '.':
                ++pulse;
                break;
            case ' ':
            case '\t':
            case '[':
            case ']':
                break;
            default:
                throw std::invalid_argument("parse_box: invalid character '" +
                                            std::string(1, c) + "' at index " +
                                            std::to_string(i));
        }
    }
    if (pulse == 0) throw std::invalid_argument("parse_box: empty pattern");
    return Rhythm(pulse, std::move(onsets));
}

std::string to_box(const Rhythm& r) {
    std::string out(static_cast<std::size_t>(r.timespan()), '.');
    for (int o : r.onsets()) out[static_cast<std::size_t>(o)] = 'x';
    return out;
}

std::string to_subset_text(const Rhythm& r) {
    std::string out = "{";
    for (std::size_t i = 0; i < r.onsets().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(r.onsets()[i]);
    }
    out += "}/";
    out += std::to_string(r.timespan());
    return out;
}

Rhythm parse_subset_text(std::string_view text) {
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("parse_subset: " + why + " in '" + std::string(text) + "'");
    };
    std::size_t open = text.find('{');
    std::size_t close = text.find('}');
    std::size_t slash = text.find('/', close == std::string_view::npos ? 0 : close);
    if (open == std::string_view::npos || close == std::string_view::npos ||
        slash == std::string_view::npos || close < open)
        fail("expected {a,b,...}/n");
    std::vector<int> onsets;
    std::string num;
    for (std::size_t i = open + 1; i < close; ++i) {
        const char c = text[i];
        if (c == ',' ) {
            if (num.empty()) fail("empty onset");
            onsets.push_back(std::stoi(num));
            num.clear();
        } else if (c >= '0' && c <= '9') {
            num += c;
        } else if (c != ' ') {
            fail(std::string("invalid character '") + c + "'");
        }
    }
    if (!num.empty()) onsets.push_back(std::stoi(num));
    std::string span;
    for (std::size_t i = slash + 1; i < text.size(); ++i) {
        const char c = text[i];
        if (c >= '0' && c <= '9') span += c;
        else if (c != ' ') fail(std::string("invalid character '") + c + "' after '/'");
    }
    if (span.empty()) fail("missing timespan");
    return Rhythm(std::stoi(span), std::move(onsets));
}

std::string to_distance_text(const DistanceSeq& gaps) {
    std::string out = "(";
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(gaps[i]);
    }
    out += ')';
    return out;
}

DistanceSeq parse_distance_text(std::string_view text) {
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("parse_distance: " + why + " in '" + std::string(text) + "'");
    };
    std::size_t open = text.find('(');
    std::size_t close = text.find(')');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open)
        fail("expected (a,b,...)");
    DistanceSeq gaps;
    std::string num;
    for (std::size_t i = open + 1; i <= close; ++i) {
        const char c = text[i];
        if (c == ',' || c == ')') {
            if (num.empty()) fail("empty entry");
            gaps.push_back(std::stoi(num));
            num.clear();
        } else if (c >= '0' && c <= '9') {
            num += c;
        } else if (c != ' ') {
            fail(std::string("invalid character '") + c + "'");
        }
    }
    return gaps;
}

Rhythm parse_pattern(std::string_view text) {
    std::size_t first = text.find_first_not_of(" \t");
    if (first != std::string_view::npos && text[first] == '{') return parse_subset_text(text);
    if (first != std::string_view::npos && text[first] == '(') {
        const DistanceSeq gaps = parse_distance_text(text);
        const long long n = std::accumulate(gaps.begin(), gaps.end(), 0LL);
        return from_distance_seq(gaps, 0, static_cast<int>(n));
    }
    return parse_box(text);
}

DistanceSeq to_distance_seq(const Rhythm& r) {
    const int k = r.onset_count();
    if (k < 1) throw std::invalid_argument("to_distance_seq: rhythm has no onsets");
    DistanceSeq gaps(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        gaps[static_cast<std::size_t>(i)] =
            positive_mod(r.onset(i + 1) - r.onset(i), r.timespan());
    // Single onset: the full loop.
    if (k == 1) gaps[0] = r.timespan();
    return gaps;
}

Rhythm from_distance_seq(const DistanceSeq& gaps, int start, int timespan) {
    if (gaps.empty()) throw std::invalid_argument("from_distance_seq: empty sequence");
    long long sum = 0;
    for (int g : gaps) {
        if (g < 1) throw std::invalid_argument("from_distance_seq: gaps must be positive");
        sum += g;
    }
    if (sum != timespan)
        throw std::invalid_argument("from_distance_seq: gaps sum to " + std::to_string(sum) +
                                    ", timespan is " + std::to_string(timespan));
    if (start < 0 || start >= timespan)
        throw std::invalid_argument("from_distance_seq: start outside [0, n)");
    std::vector<int> onsets;
    onsets.reserve(gaps.size());
    long long pos = start;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        onsets.push_back(positive_mod(pos, timespan));
        pos += gaps[i];
    }
    return Rhythm(timespan, std::move(onsets));
}

int clockwise_dist(const Rhythm& r, int i, int j) {
    return positive_mod(r.onset(j) - r.onset(i), r.timespan());
}

int geodesic_dist(const Rhythm& r, int i, int j) {
    return std::min(clockwise_dist(r, i, j), clockwise_dist(r, j, i));
}

int geodesic_between(int a, int b, int n) {
    const int d = positive_mod(b - a, n);
    return std::min(d, n - d);
}

Rhythm rotate(const Rhythm& r, int delta) {
    std::vector<int> onsets;
    onsets.reserve(r.onsets().size());
    for (int o : r.onsets()) onsets.push_back(positive_mod(o + static_cast<long long>(delta), r.timespan()));
    return Rhythm(r.timespan(), std::move(onsets));
}

Rhythm scale(const Rhythm& r, int alpha) {
    if (alpha < 1) throw std::invalid_argument("scale: factor must be >= 1");
    std::vector<int> onsets;
    onsets.reserve(r.onsets().size());
    for (int o : r.onsets()) onsets.push_back(o * alpha);
    return Rhythm(r.timespan() * alpha, std::move(onsets));
}

Rhythm reverse(const Rhythm& r) {
    DistanceSeq gaps = to_distance_seq(r);
    std::reverse(gaps.begin(), gaps.end());
    return from_distance_seq(gaps, 0, r.timespan());
}

NecklaceClass canonical_necklace(const DistanceSeq& gaps) {
    if (gaps.empty()) throw std::invalid_argument("canonical_necklace: empty sequence");
    const int start = least_rotation_index(gaps);
    DistanceSeq canonical;
    canonical.reserve(gaps.size());
    for (std::size_t i = 0; i < gaps.size(); ++i)
        canonical.push_back(gaps[(start + i) % gaps.size()]);
    const int n = static_cast<int>(std::accumulate(gaps.begin(), gaps.end(), 0LL));
    return NecklaceClass{n, std::move(canonical)};
}

NecklaceClass canonical_necklace(const Rhythm& r) {
    return canonical_necklace(to_distance_seq(r));
}

int smallest_period(const Rhythm& r) {
    if (r.onset_count() < 1) throw std::invalid_argument("smallest_period: rhythm has no onsets");
    const int n = r.timespan();
    // Only divisors of n can fix the onset set.
    for (int p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        if (rotate(r, p) == r) return p;
    }
    return n;  // unreachable; p = n always fixes r
}

Rhythm without_onset(const Rhythm& r, int pulse) {
    if (!r.has_onset(pulse))
        throw std::invalid_argument("without_onset: " + std::to_string(pulse) + " is not an onset");
    std::vector<int> onsets;
    onsets.reserve(r.onsets().size() - 1);
    for (int o : r.onsets())
        if (o != pulse) onsets.push_back(o);
    return Rhythm(r.timespan(), std::move(onsets));
}

Rhythm rhythm_from_mask(int timespan, unsigned mask) {
    std::vector<int> onsets;
    for (int i = 0; i < timespan; ++i)
        if (mask & (1u << i)) onsets.push_back(i);
    return Rhythm(timespan, std::move(onsets));
}

}  // namespace eurhythm

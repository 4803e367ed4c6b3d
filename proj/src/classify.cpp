#include "eurhythm/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "eurhythm/numtheory.hpp"

namespace eurhythm {

const char* to_string(AksakClass c) {
    switch (c) {
        case AksakClass::NotAksak: return "none";
        case AksakClass::Authentic: return "authentic";
        case AksakClass::QuasiAksak: return "quasi";
        case AksakClass::PseudoAksak: return "pseudo";
    }
    return "?";
}

const char* to_string(StringClass c) {
    switch (c) {
        case StringClass::Neither: return "neither";
        case StringClass::EuclideanString: return "euclidean";
        case StringClass::ReverseEuclideanString: return "reverse";
        case StringClass::Both: return "both";
    }
    return "?";
}

AksakClass aksak_class_from_string(const std::string& s) {
    if (s == "none") return AksakClass::NotAksak;
    if (s == "authentic") return AksakClass::Authentic;
    if (s == "quasi") return AksakClass::QuasiAksak;
    if (s == "pseudo") return AksakClass::PseudoAksak;
    throw std::invalid_argument("unknown aksak class '" + s + "'");
}

StringClass string_class_from_string(const std::string& s) {
    if (s == "neither") return StringClass::Neither;
    if (s == "euclidean") return StringClass::EuclideanString;
    if (s == "reverse") return StringClass::ReverseEuclideanString;
    if (s == "both") return StringClass::Both;
    throw std::invalid_argument("unknown string class '" + s + "'");
}

AksakClass aksak_class(const Rhythm& r) {
    const DistanceSeq gaps = to_distance_seq(r);
    bool has2 = false, has3 = false;
    for (int g : gaps) {
        if (g == 2) has2 = true;
        else if (g == 3) has3 = true;
        else return AksakClass::NotAksak;
    }
    if (!has2 || !has3) return AksakClass::NotAksak;
    const int n = r.timespan();
    if (is_prime(n)) return AksakClass::Authentic;
    return n % 2 == 1 ? AksakClass::QuasiAksak : AksakClass::PseudoAksak;
}

bool euclidean_aksak_condition(int onsets, int pulses) {
    if (onsets < 1) throw std::invalid_argument("euclidean_aksak_condition: need k >= 1");
    return 2 * onsets < pulses && pulses < 3 * onsets;
}

IntString tau(const IntString& p) {
    if (p.empty()) throw std::invalid_argument("tau: empty string");
    if (p.size() == 1) return p;  // the increment and the decrement cancel
    if (p.back() < 1) throw std::invalid_argument("tau: last entry must be >= 1");
    IntString out = p;
    out.front() += 1;
    out.back() -= 1;
    return out;
}

bool is_euclidean_string(const IntString& p) {
    if (p.empty()) throw std::invalid_argument("is_euclidean_string: empty string");
    if (p.size() == 1) return true;  // tau fixes every singleton
    if (p.back() < 1) return false;  // tau would go negative
    const IntString t = tau(p);
    const std::size_t n = p.size();
    for (std::size_t shift = 0; shift < n; ++shift) {
        bool match = true;
        for (std::size_t i = 0; i < n && match; ++i) match = t[i] == p[(shift + i) % n];
        if (match) return true;
    }
    return false;
}

StringClass string_class_of(const IntString& p) {
    IntString reversed = p;
    std::reverse(reversed.begin(), reversed.end());
    const bool forward = is_euclidean_string(p);
    const bool backward = is_euclidean_string(reversed);
    if (forward && backward) return StringClass::Both;
    if (forward) return StringClass::EuclideanString;
    if (backward) return StringClass::ReverseEuclideanString;
    return StringClass::Neither;
}

StringClass string_class(const Rhythm& r) { return string_class_of(to_distance_seq(r)); }

}  // namespace eurhythm

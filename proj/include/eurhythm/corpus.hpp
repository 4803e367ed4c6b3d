#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eurhythm/classify.hpp"
#include "eurhythm/rhythm.hpp"

namespace eurhythm {

/// One documented world-music rhythm: the printed rotation, its distance
/// sequence, classification flags, and the names it carries in different
/// traditions. Flags are recomputed and cross-checked at load time.
struct CorpusEntry {
    std::string id;  // "E(k,n)" or a clave name
    int onsets = 0;
    int pulses = 0;
    std::string pattern;  // box text, the printed rotation
    DistanceSeq distance_seq;
    AksakClass aksak = AksakClass::NotAksak;
    StringClass string_class = StringClass::Neither;
    bool necklace_only = false;  // documented uses are all rotations
    std::vector<std::string> names;
    std::string notes;

    Rhythm rhythm() const { return parse_box(pattern); }
    bool is_euclidean_entry() const { return !id.empty() && id.front() == 'E'; }
};

/// Loads the embedded dataset. Fails loudly (std::runtime_error naming the
/// line or entry) on any malformed line or invariant violation: pattern /
/// k / n / distance-sequence consistency, stored flags equal to recomputed
/// classifications, necklace equality with bjorklund plus gcd(k,n)=1 for
/// E(k,n) entries, and the five-onset / geodesic-sum-48 gate for the claves.
std::vector<CorpusEntry> load_corpus();

/// Same validation over caller-supplied text (e.g. an alternate file).
std::vector<CorpusEntry> load_corpus_from_text(std::string_view text,
                                               std::string_view source_name);
std::vector<CorpusEntry> load_corpus_file(const std::string& path);

/// The raw embedded file contents.
std::string_view embedded_corpus_text();

struct CorpusFilter {
    std::optional<int> onsets;
    std::optional<int> pulses;
    std::optional<AksakClass> aksak;
    std::optional<StringClass> string_class;
    std::string name_substring;  // case-insensitive, matches id too
};

/// Filtered view, stable-ordered by (pulses, onsets, id).
std::vector<CorpusEntry> query(const std::vector<CorpusEntry>& entries,
                               const CorpusFilter& filter);

}  // namespace eurhythm

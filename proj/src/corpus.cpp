#include "eurhythm/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "eurhythm/evenness.hpp"
#include "eurhythm/generators.hpp"
#include "eurhythm/numtheory.hpp"

#include "corpus_data.inc"

namespace eurhythm {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

[[noreturn]] void fail(std::string_view source, int line, const std::string& why) {
    throw std::runtime_error(std::string(source) + ":" + std::to_string(line) + ": " + why);
}

void validate(const CorpusEntry& e, std::string_view source, int line) {
    auto bad = [&](const std::string& why) { fail(source, line, "entry " + e.id + ": " + why); };

    Rhythm r(1, {});
    try {
        r = e.rhythm();
    } catch (const std::exception& ex) {
        bad(std::string("pattern does not parse: ") + ex.what());
    }
    if (r.timespan() != e.pulses)
        bad("pattern has " + std::to_string(r.timespan()) + " pulses, expected " +
            std::to_string(e.pulses));
    if (r.onset_count() != e.onsets)
        bad("pattern has " + std::to_string(r.onset_count()) + " onsets, expected " +
            std::to_string(e.onsets));
    if (to_distance_seq(r) != e.distance_seq)
        bad("stored distance sequence does not match the pattern");
    if (aksak_class(r) != e.aksak)
        bad(std::string("stored aksak class '") + to_string(e.aksak) +
            "' differs from recomputed '" + to_string(aksak_class(r)) + "'");
    if (string_class(r) != e.string_class)
        bad(std::string("stored string class '") + to_string(e.string_class) +
            "' differs from recomputed '" + to_string(string_class(r)) + "'");
    if (e.is_euclidean_entry()) {
        if (gcd(e.onsets, e.pulses) != 1) bad("k and n are not relatively prime");
        if (canonical_necklace(r) != canonical_necklace(bjorklund(e.onsets, e.pulses)))
            bad("pattern is not a rotation of the maximally even rhythm");
    } else {
        // The clave gate: transcription errors fail the load.
        if (e.onsets != 5 || e.pulses != 16) bad("claves must have 5 onsets in 16 pulses");
        if (evenness_geodesic(r) != 48)
            bad("clave geodesic evenness is " + std::to_string(evenness_geodesic(r)) +
                ", expected 48");
    }
}

}  // namespace

std::string_view embedded_corpus_text() { return kEmbeddedCorpus; }

std::vector<CorpusEntry> load_corpus_from_text(std::string_view text,
                                               std::string_view source_name) {
    std::vector<CorpusEntry> entries;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string stripped = trim(raw);
        if (stripped.empty() || stripped.front() == '#') continue;
        const std::vector<std::string> f = split(stripped, '|');
        if (f.size() != 9)
            fail(source_name, line,
                 "expected 9 pipe-delimited fields, got " + std::to_string(f.size()));
        CorpusEntry e;
        try {
            e.id = trim(f[0]);
            e.onsets = std::stoi(trim(f[1]));
            e.pulses = std::stoi(trim(f[2]));
            e.pattern = trim(f[3]);
            e.distance_seq = parse_distance_text(f[4]);
            e.aksak = aksak_class_from_string(trim(f[5]));
            e.string_class = string_class_from_string(trim(f[6]));
            for (const std::string& name : split(f[7], ';')) {
                const std::string t = trim(name);
                if (!t.empty()) e.names.push_back(t);
            }
            e.notes = trim(f[8]);
            e.necklace_only = e.notes.rfind("necklace-only", 0) == 0;
        } catch (const std::runtime_error&) {
            throw;
        } catch (const std::exception& ex) {
            fail(source_name, line, ex.what());
        }
        if (e.id.empty()) fail(source_name, line, "empty id");
        validate(e, source_name, line);
        entries.push_back(std::move(e));
    }
    if (entries.empty()) fail(source_name, line, "corpus holds no entries");
    return entries;
}

std::vector<CorpusEntry> load_corpus() {
    return load_corpus_from_text(embedded_corpus_text(), "<embedded corpus>");
}

std::vector<CorpusEntry> load_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_corpus_from_text(buf.str(), path);
}

std::vector<CorpusEntry> query(const std::vector<CorpusEntry>& entries,
                               const CorpusFilter& filter) {
    std::vector<CorpusEntry> out;
    const std::string needle = lower(filter.name_substring);
    for (const CorpusEntry& e : entries) {
        if (filter.onsets && e.onsets != *filter.onsets) continue;
        if (filter.pulses && e.pulses != *filter.pulses) continue;
        if (filter.aksak && e.aksak != *filter.aksak) continue;
        if (filter.string_class && e.string_class != *filter.string_class) continue;
        if (!needle.empty()) {
            bool hit = lower(e.id).find(needle) != std::string::npos;
            for (const std::string& name : e.names)
                hit = hit || lower(name).find(needle) != std::string::npos;
            if (!hit) continue;
        }
        out.push_back(e);
    }
    std::sort(out.begin(), out.end(), [](const CorpusEntry& a, const CorpusEntry& b) {
        return std::tie(a.pulses, a.onsets, a.id) < std::tie(b.pulses, b.onsets, b.id);
    });
    return out;
}

}  // namespace eurhythm

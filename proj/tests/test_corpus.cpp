#include <doctest.h>

#include <stdexcept>

#include <map>

#include "eurhythm/corpus.hpp"
#include "eurhythm/evenness.hpp"
#include "eurhythm/generators.hpp"
#include "eurhythm/numtheory.hpp"

using namespace eurhythm;

namespace {

const CorpusEntry& find_entry(const std::vector<CorpusEntry>& entries, const std::string& id) {
    for (const CorpusEntry& e : entries)
        if (e.id == id) return e;
    REQUIRE_MESSAGE(false, "missing corpus entry ", id);
    throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("corpus loads and has the documented shape") {
    const auto entries = load_corpus();
    int euclidean = 0, claves = 0;
    for (const auto& e : entries) (e.is_euclidean_entry() ? euclidean : claves)++;
    CHECK(euclidean >= 40);
    CHECK(euclidean == 41);
    CHECK(claves == 6);
}

TEST_CASE("documented spot entries") {
    const auto entries = load_corpus();

    const CorpusEntry& bossa_necklace = find_entry(entries, "E(5,16)");
    CHECK(bossa_necklace.pattern == "x..x..x..x..x...");
    CHECK(bossa_necklace.necklace_only);
    CHECK(bossa_necklace.notes.find("third onset") != std::string::npos);

    CHECK(find_entry(entries, "E(7,12)").string_class == StringClass::Neither);
    CHECK(find_entry(entries, "E(3,8)").aksak == AksakClass::PseudoAksak);

    // id lists of the three documented aksak groups
    std::map<AksakClass, int> counts;
    for (const auto& e : entries)
        if (e.is_euclidean_entry()) ++counts[e.aksak];
    CHECK(counts[AksakClass::Authentic] == 10);
    CHECK(counts[AksakClass::QuasiAksak] == 2);
    CHECK(counts[AksakClass::PseudoAksak] == 7);
}

TEST_CASE("every euclidean entry is a rotation of the generated rhythm") {
    for (const auto& e : load_corpus()) {
        if (!e.is_euclidean_entry()) continue;
        CHECK(gcd(e.onsets, e.pulses) == 1);
        CHECK(canonical_necklace(e.rhythm()) ==
              canonical_necklace(bjorklund(e.onsets, e.pulses)));
    }
}

TEST_CASE("the six claves") {
    const auto entries = load_corpus();
    const char* names[] = {"Shiko", "Son", "Soukous", "Rumba", "Bossa-Nova", "Gahu"};
    for (const char* name : names) {
        const CorpusEntry& e = find_entry(entries, name);
        CHECK(e.onsets == 5);
        CHECK(e.pulses == 16);
        CHECK(evenness_geodesic(e.rhythm()) == 48);
    }
    const double bossa = evenness_chordal(find_entry(entries, "Bossa-Nova").rhythm());
    const double son = evenness_chordal(find_entry(entries, "Son").rhythm());
    const double rumba = evenness_chordal(find_entry(entries, "Rumba").rhythm());
    const double shiko = evenness_chordal(find_entry(entries, "Shiko").rhythm());
    const double gahu = evenness_chordal(find_entry(entries, "Gahu").rhythm());
    const double soukous = evenness_chordal(find_entry(entries, "Soukous").rhythm());
    CHECK(bossa > son + 1e-9);
    CHECK(son > rumba + 1e-9);
    CHECK(rumba > shiko + 1e-9);
    CHECK(shiko > gahu + 1e-9);
    CHECK(gahu > soukous + 1e-9);
}

TEST_CASE("query") {
    const auto entries = load_corpus();

    CorpusFilter pseudo;
    pseudo.aksak = AksakClass::PseudoAksak;
    CHECK(query(entries, pseudo).size() == 7);

    CorpusFilter tresillo;
    tresillo.name_substring = "tresillo";
    const auto hits = query(entries, tresillo);
    REQUIRE(hits.size() == 1);
    CHECK(hits.front().id == "E(3,8)");

    const auto all = query(entries, CorpusFilter{});
    CHECK(all.size() == entries.size());
    for (std::size_t i = 1; i < all.size(); ++i) {
        const auto key = [](const CorpusEntry& e) { return std::tuple(e.pulses, e.onsets, e.id); };
        CHECK(key(all[i - 1]) < key(all[i]));
    }

    CorpusFilter by_kn;
    by_kn.onsets = 5;
    by_kn.pulses = 16;
    CHECK(query(entries, by_kn).size() == 7);  // E(5,16) and the six claves
}

TEST_CASE("malformed corpora fail loudly") {
    CHECK_THROWS_WITH(load_corpus_from_text("bogus line\n", "test"), doctest::Contains("test:1"));
    // wrong flag: E(3,8) is pseudo-aksak, not authentic
    CHECK_THROWS_WITH(
        load_corpus_from_text("E(3,8)|3|8|x..x..x.|(3,3,2)|authentic|reverse|tresillo (Cuba)|\n",
                              "test"),
        doctest::Contains("E(3,8)"));
    // pattern/k mismatch
    CHECK_THROWS_WITH(
        load_corpus_from_text("E(3,8)|4|8|x..x..x.|(3,3,2)|pseudo|reverse|tresillo (Cuba)|\n",
                              "test"),
        doctest::Contains("onsets"));
    // clave with the wrong geodesic sum
    CHECK_THROWS_WITH(
        load_corpus_from_text("Sonish|5|16|x..x..x..x......|(3,3,3,7? )|none|neither|x|\n", "test"),
        doctest::Contains("test:1"));
    CHECK_THROWS_AS(load_corpus_from_text("", "empty"), std::runtime_error);
    CHECK_THROWS_AS(load_corpus_file("/nonexistent/corpus.txt"), std::runtime_error);
}

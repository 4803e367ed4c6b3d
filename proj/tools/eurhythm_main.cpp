// Command-line front end: generation, analysis, theorem sweeps, corpus
// queries, and SVG clock diagrams.
//
// Exit codes: 0 success / verified, 1 verification counterexample or
// operational failure, 2 usage or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "eurhythm/applications.hpp"
#include "eurhythm/classify.hpp"
#include "eurhythm/corpus.hpp"
#include "eurhythm/generators.hpp"
#include "eurhythm/report.hpp"
#include "eurhythm/svg.hpp"
#include "eurhythm/verify.hpp"

namespace {

using namespace eurhythm;

// EURHYTHM_MAX_ENUM_N lifts the brute-force cap for long runs.
int enumeration_cap() {
    if (const char* env = std::getenv("EURHYTHM_MAX_ENUM_N")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 20;
}

int run_gen(int k, int n, const std::string& algo, std::optional<int> step, int delta) {
    std::string name = algo;
    if (const auto colon = algo.find(':'); colon != std::string::npos) {
        name = algo.substr(0, colon);
        step = std::stoi(algo.substr(colon + 1));
    }
    Rhythm r(1, {});
    if (name == "bjorklund") {
        r = bjorklund(k, n);
    } else if (name == "euclid") {
        r = from_distance_seq(euclidean_recursive(n, k), 0, n);
    } else if (name == "clough") {
        r = clough_douthett(n, k);
    } else if (name == "snap") {
        r = snap(n, k);
    } else if (name == "generated") {
        if (!step) throw CLI::ValidationError("--algo generated needs a step: generated:m");
        r = generated_rhythm(k, n, *step);
    } else {
        throw CLI::ValidationError("unknown algorithm '" + name + "'");
    }
    if (delta != 0) r = rotate(r, delta);
    std::cout << to_box(r) << '\n'
              << to_distance_text(to_distance_seq(r)) << '\n'
              << to_subset_text(r) << '\n';
    return 0;
}

int run_analyze(std::vector<std::string> patterns) {
    if (patterns.empty()) {
        std::string line;
        while (std::getline(std::cin, line))
            if (line.find_first_not_of(" \t\r") != std::string::npos) patterns.push_back(line);
    }
    bool first = true;
    for (const std::string& text : patterns) {
        if (!first) std::cout << '\n';
        first = false;
        std::cout << render_analysis(parse_pattern(text));
    }
    return 0;
}

int run_verify(const std::string& theorem, std::optional<int> max_n) {
    const int cap = enumeration_cap();
    VerifyOutcome outcome;
    if (theorem == "even-equivalence") {
        outcome = verify_even_equivalence(max_n.value_or(32));
    } else if (theorem == "even-uniqueness") {
        outcome = verify_even_uniqueness(max_n.value_or(12), cap);
    } else if (theorem == "deep-characterization") {
        outcome = verify_deep_characterization(max_n.value_or(14));
    } else if (theorem == "erd-deep-gcd") {
        outcome = verify_erd_deep_gcd(max_n.value_or(20), cap);
    } else if (theorem == "string-lists") {
        outcome = verify_string_lists();
    } else if (theorem == "digital-line") {
        outcome = verify_digital_line(max_n.value_or(64));
    } else {
        throw CLI::ValidationError("unknown theorem '" + theorem + "'");
    }
    if (outcome.pass) {
        std::cout << theorem << ": pass (" << outcome.cases << " cases)\n";
        return 0;
    }
    std::cout << theorem << ": FAIL after " << outcome.cases
              << " cases\n  counterexample: " << outcome.counterexample << '\n';
    return 1;
}

int run_svg(const std::string& pattern, const std::string& path) {
    const std::string svg = clock_svg(parse_pattern(pattern));
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << svg) || !out.flush()) {
        std::cerr << "error: cannot write '" << path << "'\n";
        return 1;
    }
    return 0;
}

std::vector<CorpusEntry> load_for_cli(const std::string& path) {
    return path.empty() ? load_corpus() : load_corpus_file(path);
}

std::string corpus_row(const CorpusEntry& e) {
    std::string names;
    for (std::size_t i = 0; i < e.names.size(); ++i) {
        if (i) names += "; ";
        names += e.names[i];
    }
    std::string row = e.id;
    row.resize(std::max<std::size_t>(row.size(), 10), ' ');
    row += " k=" + std::to_string(e.onsets) + " n=" + std::to_string(e.pulses);
    row.resize(std::max<std::size_t>(row.size(), 28), ' ');
    row += " " + e.pattern;
    row.resize(std::max<std::size_t>(row.size(), 66), ' ');
    row += " " + std::string(to_string(e.aksak)) + "/" + to_string(e.string_class) + " " + names;
    return row;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cyclic rhythm generation, analysis, and classification"};
    app.require_subcommand(1);

    // gen
    int gen_k = 0, gen_n = 0, gen_rotate = 0;
    std::optional<int> gen_step;
    std::string gen_algo = "bjorklund";
    auto* gen = app.add_subcommand("gen", "Generate a maximally even or generated rhythm");
    gen->add_option("k", gen_k, "number of onsets")->required()->check(CLI::PositiveNumber);
    gen->add_option("n", gen_n, "number of pulses")->required()->check(CLI::PositiveNumber);
    gen->add_option("--algo", gen_algo, "bjorklund|euclid|clough|snap|generated:m");
    gen->add_option("--step", gen_step, "generator step m for --algo generated");
    gen->add_option("--rotate", gen_rotate, "rotate the result by this many pulses");

    // analyze
    std::vector<std::string> analyze_patterns;
    auto* analyze_cmd = app.add_subcommand("analyze", "Analyze patterns (args or stdin)");
    analyze_cmd->add_option("pattern", analyze_patterns, "box or subset text");

    // verify
    std::string verify_theorem;
    std::optional<int> verify_max_n;
    auto* verify_cmd = app.add_subcommand("verify", "Run an exhaustive theorem sweep");
    verify_cmd
        ->add_option("theorem", verify_theorem,
                     "even-equivalence|even-uniqueness|deep-characterization|erd-deep-gcd|"
                     "string-lists|digital-line")
        ->required();
    verify_cmd->add_option("--max-n", verify_max_n, "sweep bound");

    // svg
    std::string svg_pattern, svg_path;
    auto* svg_cmd = app.add_subcommand("svg", "Write a clock diagram");
    svg_cmd->add_option("pattern", svg_pattern, "box or subset text")->required();
    svg_cmd->add_option("output", svg_path, "output .svg path")->required();

    // corpus
    auto* corpus_cmd = app.add_subcommand("corpus", "World-music rhythm corpus");
    corpus_cmd->require_subcommand(1);
    std::string corpus_path;
    corpus_cmd->add_option("--corpus", corpus_path, "corpus file overriding the embedded data");

    CorpusFilter filter;
    std::string filter_aksak, filter_string, filter_name;
    int filter_k = 0, filter_n = 0;
    auto* list_cmd = corpus_cmd->add_subcommand("list", "List entries, one row each");
    list_cmd->add_option("--k", filter_k, "filter by onset count");
    list_cmd->add_option("--n", filter_n, "filter by timespan");
    list_cmd->add_option("--aksak", filter_aksak, "none|authentic|quasi|pseudo");
    list_cmd->add_option("--string", filter_string, "euclidean|reverse|neither|both");
    list_cmd->add_option("--name", filter_name, "name or id substring");

    std::string show_id;
    auto* show_cmd = corpus_cmd->add_subcommand("show", "Show one entry with a full analysis");
    show_cmd->add_option("id", show_id, "entry id, e.g. E(3,8)")->required();

    auto* check_cmd = corpus_cmd->add_subcommand("check", "Re-validate every corpus invariant");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) {
            if (gen_k > gen_n) throw CLI::ValidationError("k must not exceed n");
            return run_gen(gen_k, gen_n, gen_algo, gen_step, gen_rotate);
        }
        if (analyze_cmd->parsed()) return run_analyze(analyze_patterns);
        if (verify_cmd->parsed()) return run_verify(verify_theorem, verify_max_n);
        if (svg_cmd->parsed()) return run_svg(svg_pattern, svg_path);
        if (corpus_cmd->parsed()) {
            if (check_cmd->parsed()) {
                const auto entries = load_for_cli(corpus_path);
                std::cout << "corpus OK (" << entries.size() << " entries)\n";
                return 0;
            }
            const auto entries = load_for_cli(corpus_path);
            if (list_cmd->parsed()) {
                if (filter_k > 0) filter.onsets = filter_k;
                if (filter_n > 0) filter.pulses = filter_n;
                if (!filter_aksak.empty()) filter.aksak = aksak_class_from_string(filter_aksak);
                if (!filter_string.empty())
                    filter.string_class = string_class_from_string(filter_string);
                filter.name_substring = filter_name;
                for (const CorpusEntry& e : query(entries, filter))
                    std::cout << corpus_row(e) << '\n';
                return 0;
            }
            if (show_cmd->parsed()) {
                for (const CorpusEntry& e : entries) {
                    if (e.id != show_id) continue;
                    std::cout << "id:                   " << e.id << '\n';
                    std::string names;
                    for (std::size_t i = 0; i < e.names.size(); ++i)
                        names += (i ? "; " : "") + e.names[i];
                    std::cout << "names:                " << names << '\n';
                    if (!e.notes.empty()) std::cout << "notes:                " << e.notes << '\n';
                    std::cout << render_analysis(e.rhythm());
                    return 0;
                }
                std::cerr << "error: no corpus entry '" << show_id << "'\n";
                return 1;
            }
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

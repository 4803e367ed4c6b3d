// End-to-end checks of the installed command-line surface. Runs the binary
// given as argv[1] and checks exit codes and output text.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

int g_failures = 0;

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& command) {
    RunResult result;
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (!pipe) {
        std::cerr << "FATAL: cannot spawn: " << command << "\n";
        std::exit(2);
    }
    std::array<char, 4096> buf{};
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe))
        result.output.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

void expect(bool ok, const std::string& what) {
    if (ok) {
        std::cout << "ok: " << what << "\n";
    } else {
        ++g_failures;
        std::cout << "FAIL: " << what << "\n";
    }
}

void expect_contains(const RunResult& r, const std::string& needle, const std::string& what) {
    expect(r.output.find(needle) != std::string::npos,
           what + " (looking for '" + needle + "')");
    if (r.output.find(needle) == std::string::npos)
        std::cout << "  output was:\n" << r.output << "\n";
}

int count_lines(const std::string& text) {
    int lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    return lines;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];

    {
        auto r = run(cli + " gen 5 13 --algo bjorklund");
        expect(r.exit_code == 0, "gen 5 13 exits 0");
        expect_contains(r, "x..x.x..x.x..", "gen 5 13 bjorklund box");
        expect_contains(r, "(3,2,3,2,3)", "gen 5 13 distance seq");
        expect_contains(r, "{0,3,5,8,10}/13", "gen 5 13 subset");
    }
    {
        auto r = run(cli + " gen 3 8 --algo clough");
        expect(r.exit_code == 0, "gen clough exits 0");
        expect_contains(r, "x.x..x..", "gen 3 8 clough box");  // {0,2,5}, same necklace as E(3,8)
    }
    {
        auto r = run(cli + " gen 7 16 --algo generated:5");
        expect(r.exit_code == 0, "gen generated:5 exits 0");
        expect_contains(r, "{0,4,5,9,10,14,15}/16", "generated subset");
    }
    {
        auto r = run(cli + " gen 3 8 --algo bjorklund --rotate 2");
        expect_contains(r, "{0,2,5}/8", "rotation applies");
    }
    {
        auto r = run(cli + " gen 0 8");
        expect(r.exit_code == 2, "gen 0 8 is a usage error");
    }
    {
        auto r = run(cli + " gen 9 8");
        expect(r.exit_code == 2, "gen 9 8 is a usage error");
    }
    {
        auto r = run(cli + " analyze 'x..x..x...x..x..'");
        expect(r.exit_code == 0, "analyze exits 0");
        expect_contains(r, "{4:1,7:2,6:3,3:4}", "bossa histogram in analysis");
    }
    {
        auto r = run(cli + " analyze 'x.x.xx.x.x.x'");
        expect_contains(r, "winograd deep:        yes", "bembe winograd flag");
    }
    {
        auto r = run("echo 'x..x..x.' | " + cli + " analyze");
        expect(r.exit_code == 0, "analyze reads stdin");
        expect_contains(r, "(3,3,2)", "stdin analysis distance seq");
    }
    {
        auto r = run(cli + " analyze '(3,3,4,2,4)'");
        expect(r.exit_code == 0, "analyze accepts distance-sequence text");
        expect_contains(r, "{0,3,6,10,12}/16", "distance text anchors at pulse 0");
    }
    {
        auto r = run(cli + " analyze 'x..q'");
        expect(r.exit_code == 2, "parse failure exits 2");
        expect_contains(r, "index 3", "parse failure names the offending index");
    }
    {
        auto r = run(cli + " verify even-equivalence --max-n 16");
        expect(r.exit_code == 0, "verify even-equivalence exits 0");
        expect_contains(r, "pass", "verify even-equivalence reports pass");
    }
    {
        auto r = run(cli + " verify even-uniqueness --max-n 8");
        expect(r.exit_code == 0, "verify even-uniqueness exits 0");
    }
    {
        auto r = run(cli + " verify deep-characterization --max-n 10");
        expect(r.exit_code == 0, "verify deep-characterization exits 0");
    }
    {
        // The gcd law has a genuine counterexample family at k=2, even n;
        // the verifier must find and report it.
        auto r = run(cli + " verify erd-deep-gcd --max-n 6");
        expect(r.exit_code == 1, "verify erd-deep-gcd exits 1 on the counterexample");
        expect_contains(r, "counterexample", "erd-deep-gcd names a counterexample");
        expect_contains(r, "k=2", "counterexample is in the k=2 family");
    }
    {
        auto r = run(cli + " verify digital-line --max-n 32");
        expect(r.exit_code == 0, "verify digital-line exits 0");
    }
    {
        // The environment variable overrides the enumeration cap.
        auto r = run("EURHYTHM_MAX_ENUM_N=4 " + cli + " verify even-uniqueness --max-n 8");
        expect(r.exit_code == 2, "a lowered enumeration cap rejects the sweep");
        auto ok = run("EURHYTHM_MAX_ENUM_N=21 " + cli + " verify even-uniqueness --max-n 8");
        expect(ok.exit_code == 0, "a raised enumeration cap still verifies");
    }
    {
        auto r = run(cli + " gen 7 16 --algo generated --step 5");
        expect(r.exit_code == 0, "gen --step form exits 0");
        expect_contains(r, "{0,4,5,9,10,14,15}/16", "gen --step matches generated:5");
    }
    {
        auto r = run(cli + " verify nonsense");
        expect(r.exit_code == 2, "unknown theorem is a usage error");
    }
    {
        auto r = run(cli + " corpus check");
        expect(r.exit_code == 0, "corpus check exits 0");
        expect_contains(r, "corpus OK", "corpus check reports OK");
    }
    {
        auto r = run(cli + " corpus list --aksak authentic");
        expect(r.exit_code == 0, "corpus list exits 0");
        expect(count_lines(r.output) == 10, "ten authentic aksak rows");
    }
    {
        auto r = run(cli + " corpus list");
        expect(count_lines(r.output) == 47, "whole corpus lists 47 rows");
        auto again = run(cli + " corpus list");
        expect(r.output == again.output, "corpus list is byte-stable");
    }
    {
        auto r = run(cli + " corpus show 'E(3,8)'");
        expect(r.exit_code == 0, "corpus show exits 0");
        expect_contains(r, "tresillo", "E(3,8) names tresillo");
        expect_contains(r, "Habanera", "E(3,8) names Habanera");
    }
    {
        auto r = run(cli + " corpus show 'E(99,100)'");
        expect(r.exit_code == 1, "unknown corpus id exits 1");
    }
    {
        // the --corpus flag swaps in an external file, same validation
        const std::string good = "/tmp/eurhythm_cli_corpus.txt";
        auto w = run("printf 'E(3,8)|3|8|x..x..x.|(3,3,2)|pseudo|reverse|tresillo (Cuba)|\\n' > " +
                     good);
        auto r = run(cli + " corpus --corpus " + good + " check");
        expect(r.exit_code == 0, "corpus check accepts a valid external file");
        expect_contains(r, "1 entries", "external corpus has one entry");
        auto bad = run(cli + " corpus --corpus /nonexistent.txt check");
        expect(bad.exit_code == 1, "missing corpus file exits 1");
        std::remove(good.c_str());
    }
    {
        const std::string path1 = "/tmp/eurhythm_cli_test_1.svg";
        const std::string path2 = "/tmp/eurhythm_cli_test_2.svg";
        auto r1 = run(cli + " svg 'x..x..x.' " + path1);
        auto r2 = run(cli + " svg 'x..x..x.' " + path2);
        expect(r1.exit_code == 0 && r2.exit_code == 0, "svg exits 0");
        auto c1 = run("cat " + path1);
        auto c2 = run("cat " + path2);
        expect(!c1.output.empty() && c1.output == c2.output, "svg bytes are stable");
        expect(c1.output.find("<svg") != std::string::npos, "svg file has svg content");
        std::remove(path1.c_str());
        std::remove(path2.c_str());
    }
    {
        auto r = run(cli + " svg 'x..x..x.' /nonexistent-dir/out.svg");
        expect(r.exit_code == 1, "unwritable svg path exits 1");
    }

    std::cout << (g_failures == 0 ? "all CLI checks passed\n"
                                  : std::to_string(g_failures) + " CLI checks failed\n");
    return g_failures == 0 ? 0 : 1;
}

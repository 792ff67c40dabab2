// Pinned witness corpus. A fixture file couples a payload (inline values plus
// references to surface, model, divisor, or descent files) with expectation
// lines of the form
//   expect key = "value" @ provenance
// where provenance is "table" (a table row from the classification),
// "direct" (an immediate evaluation), or "oracle:<name>" (an independent
// computation, named). The loader refuses expectations without a tag.
#pragma once

#include <map>
#include <string>
#include <vector>

namespace delpezzo {

struct Expectation {
    std::string key;
    std::string value;
    std::string provenance;
    int line;
    bool operator==(const Expectation& o) const = default;
};

struct FixtureRecord {
    std::string name;
    std::string kind;
    std::map<std::string, std::string> payload; // everything except name/kind/expect lines
    std::vector<Expectation> expectations;
    std::string directory; // payload file references resolve against this
};

FixtureRecord parse_fixture(const std::string& text, const std::string& directory);
FixtureRecord load_fixture(const std::string& path);

struct CheckResult {
    std::string key;
    std::string expected;
    std::string actual;
    std::string provenance;
    bool pass;
};

struct FixtureReport {
    std::string name;
    std::string kind;
    std::vector<CheckResult> checks;
    std::map<std::string, std::string> results; // every computed value, keyed
    std::string error;                          // set when the fixture itself failed to run
    bool pass;
};

// Replays one record against the live modules. Unknown kinds and computation
// failures land in `error` rather than throwing.
FixtureReport run_fixture(const FixtureRecord& rec);

// Loads and runs every *.fixture file in the directory, sorted by filename.
std::vector<FixtureReport> verify_all(const std::string& fixtures_dir);

} // namespace delpezzo

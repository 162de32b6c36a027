#ifndef EXTLAB_SUITES_HPP
#define EXTLAB_SUITES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "extlab/inequality.hpp"

namespace extlab {

struct RunConfig {
    std::string command = "verify";
    int max_n = 6;
    int cap = 10;  // enumeration safety cap, EXTLAB_CAP
    std::optional<std::pair<int, int>> chains;
    std::uint64_t seed = 1;
    int jobs = 1;
    std::string format = "json";
    std::string out;
    std::string suite = "all";
    std::string scope;
    std::optional<std::uint64_t> budget;  // poset count
    bool q = false;
    int gyy_atoms = 2;
};

// accumulated by the workers, merged in instance order
struct Tally {
    std::uint64_t instances = 0;
    std::uint64_t violations_total = 0, findings_total = 0;
    std::vector<Witness> violations, findings;
    std::map<std::string, std::int64_t> counters;
    std::vector<nlohmann::ordered_json> samples;

    void violation(const Verdict& v);
    void finding(const Verdict& v);
    void merge(Tally&& o);
    static constexpr size_t kKeep = 20;
};

struct SuiteReport {
    std::string name;
    bool theorem_backed = true;  // violations are failures; otherwise they are findings
    Tally tally;
    nlohmann::ordered_json notes = nlohmann::ordered_json::object();
    bool ok() const { return !theorem_backed || tally.violations_total == 0; }
};

const std::vector<std::string>& suite_names();  // without "all"
bool known_suite(const std::string& name);
// throws std::invalid_argument on an unknown name
std::vector<SuiteReport> run_verify(const RunConfig& cfg);
SuiteReport run_suite(const std::string& name, const RunConfig& cfg);

const std::vector<std::string>& search_scopes();
SuiteReport search_counterexample(const std::string& scope, const RunConfig& cfg);

nlohmann::ordered_json witness_json(const Witness& w);
nlohmann::ordered_json report_json(const SuiteReport& r);
// deterministic body for verify and search
nlohmann::ordered_json verify_body(const RunConfig& cfg, const std::vector<SuiteReport>& rs);
nlohmann::ordered_json search_body(const RunConfig& cfg, const SuiteReport& r);
std::string reports_csv(const std::vector<SuiteReport>& rs);
std::string reports_text(const std::vector<SuiteReport>& rs);

// the width-three example C4 + C4 + C1: alpha = 0..3, beta = 4..7, gamma = 8
Poset three_chain_example(int m = 4);

}

#endif

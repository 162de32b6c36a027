#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "extlab/lattice.hpp"
#include "extlab/linext.hpp"
#include "extlab/suites.hpp"

using namespace extlab;
using json = nlohmann::ordered_json;

namespace {

struct ConfigError : std::runtime_error { using std::runtime_error::runtime_error; };

std::string timestamp()
{
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

void emit(const std::string& text, const std::string& out)
{
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw ConfigError("cannot write " + out);
    f << text;
}

std::string wrap(const json& body, long long ms)
{
    json j;
    j["header"] = {{"timestamp", timestamp()}, {"elapsed_ms", ms}};
    j["body"] = body;
    return j.dump(2) + "\n";
}

std::vector<int> int_list(const std::string& s, size_t want, const char* what)
{
    std::vector<int> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            v.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ConfigError(std::string("bad ") + what + ": '" + s + "'");
        }
    }
    if (v.size() != want) throw ConfigError(std::string("bad ") + what + ": '" + s + "'");
    return v;
}

Poset read_poset_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot read " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        auto e = line.find_last_not_of(" \t\r");
        try {
            return parse_poset(line.substr(b, e - b + 1));
        } catch (const std::exception& ex) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": " + ex.what());
        }
    }
    throw ConfigError(path + ": no poset line");
}

std::string table_text(const CorrelationTable& t, int n, bool signed_offsets)
{
    std::vector<int> idx;
    for (int i = signed_offsets ? -n : 1; i <= n; ++i)
        if (i != 0) idx.push_back(i);
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head{"i\\j"};
    for (int j : idx) head.push_back(std::to_string(j));
    cells.push_back(head);
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
        std::vector<std::string> row{std::to_string(*it)};
        for (int j : idx) row.push_back(t.has_q ? t.at(*it, j).str() : t.count(*it, j).get_str());
        cells.push_back(row);
    }
    std::vector<size_t> wid(head.size(), 0);
    for (auto& r : cells)
        for (size_t c = 0; c < r.size(); ++c) wid[c] = std::max(wid[c], r[c].size());
    std::ostringstream os;
    for (auto& r : cells) {
        for (size_t c = 0; c < r.size(); ++c) os << std::string(wid[c] - r[c].size() + (c ? 2 : 0), ' ') << r[c];
        os << "\n";
    }
    return os.str();
}

int cap_from_env()
{
    const char* s = std::getenv("EXTLAB_CAP");
    if (!s || !*s) return 10;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (*end || v < 1 || v > kMaxElements) throw ConfigError(std::string("bad EXTLAB_CAP: ") + s);
    return static_cast<int>(v);
}

}

int main(int argc, char** argv)
{
    CLI::App app{"extlab: linear extension correlation explorer"};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string chains, triple, file;
    bool signed_offsets = false;
    int path_index = -1;
    std::uint64_t budget = 0;

    auto common = [&](CLI::App* s) {
        s->add_option("--max-n", cfg.max_n, "largest poset size")->check(CLI::Range(1, kMaxElements));
        s->add_option("--chains", chains, "restrict to chain sizes a,b");
        s->add_option("--seed", cfg.seed, "random seed");
        s->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
        s->add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
        s->add_option("--out", cfg.out, "output file (default stdout)");
        s->add_flag("--q", cfg.q, "q-weighted entries");
    };

    auto* verify = app.add_subcommand("verify", "run verification suites");
    common(verify);
    verify->add_option("--suite", cfg.suite, "suite name or all");

    auto* search = app.add_subcommand("search", "counterexample search");
    common(search);
    search->add_option("--scope", cfg.scope, "search scope")->required();
    auto* budget_opt = search->add_option("--budget", budget, "maximum number of posets");

    auto* table = app.add_subcommand("table", "print a correlation table");
    common(table);
    table->add_option("file", file, "poset file")->required();
    table->add_option("--triple", triple, "x,y,z")->required();
    table->add_flag("--signed", signed_offsets, "signed offsets");

    auto* render = app.add_subcommand("render", "draw the lattice region of a width-two poset");
    common(render);
    render->add_option("file", file, "poset file")->required();
    render->add_option("--path", path_index, "overlay the path of extension k");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    };
    try {
        cfg.cap = cap_from_env();
        if (!chains.empty()) {
            auto v = int_list(chains, 2, "--chains");
            if (v[0] < 0 || v[1] < 0) throw ConfigError("chain sizes must be nonnegative");
            cfg.chains = std::make_pair(v[0], v[1]);
            if (v[0] + v[1] > cfg.cap) throw ConfigError("a+b exceeds the enumeration cap " + std::to_string(cfg.cap));
        }
        if (cfg.max_n > cfg.cap) throw ConfigError("--max-n exceeds the enumeration cap " + std::to_string(cfg.cap));

        if (*verify) {
            cfg.command = "verify";
            if (!known_suite(cfg.suite)) throw ConfigError("unknown suite '" + cfg.suite + "'");
            auto reports = run_verify(cfg);
            bool ok = true;
            for (auto& r : reports) ok = ok && r.ok();
            if (cfg.format == "json") emit(wrap(verify_body(cfg, reports), elapsed()), cfg.out);
            else if (cfg.format == "csv") emit(reports_csv(reports), cfg.out);
            else emit(reports_text(reports), cfg.out);
            return ok ? 0 : 1;
        }
        if (*search) {
            cfg.command = "search";
            auto& scopes = search_scopes();
            if (std::find(scopes.begin(), scopes.end(), cfg.scope) == scopes.end())
                throw ConfigError("unknown scope '" + cfg.scope + "'");
            if (budget_opt->count()) cfg.budget = budget;
            SuiteReport r = search_counterexample(cfg.scope, cfg);
            if (cfg.format == "json") emit(wrap(search_body(cfg, r), elapsed()), cfg.out);
            else if (cfg.format == "csv") emit(reports_csv({r}), cfg.out);
            else emit(reports_text({r}), cfg.out);
            return 0;
        }
        Poset p = read_poset_file(file);
        if (*table) {
            auto v = int_list(triple, 3, "--triple");
            for (int x : v)
                if (x < 0 || x >= p.size()) throw ConfigError("triple element out of range");
            if (v[0] == v[1] || v[1] == v[2] || v[0] == v[2]) throw ConfigError("triple elements must be distinct");
            std::optional<ChainDecomposition> d;
            if (cfg.q) {
                if (width(p) > 2) throw ConfigError("--q needs a width-two poset");
                d = chain_decomposition_width_two(p);
            }
            CorrelationTable t = correlation_table(p, d, ElementTriple{v[0], v[1], v[2]}, signed_offsets);
            if (cfg.format == "json") {
                json j = json::parse(t.to_json());
                json out{{"poset", to_text(p)}, {"triple", {v[0], v[1], v[2]}}};
                if (d) out["decomposition"] = d->str();
                out["entries"] = j;
                emit(out.dump(2) + "\n", cfg.out);
            } else {
                emit(table_text(t, p.size(), signed_offsets), cfg.out);
            }
            return 0;
        }
        if (*render) {
            if (width(p) > 2) throw ConfigError("render needs a width-two poset");
            ChainDecomposition d = chain_decomposition_width_two(p);
            LatticeRegion reg = region_of(p, d);
            std::optional<LatticePath> overlay;
            if (path_index >= 0) {
                ExtensionSet es(p);
                if (static_cast<size_t>(path_index) >= es.count())
                    throw ConfigError("--path " + std::to_string(path_index) + " but e(P) = " + std::to_string(es.count()));
                overlay = path_of_extension(es.extension(path_index), d);
            }
            std::ostringstream os;
            os << "chains " << d.str() << "\n";
            for (auto& line : reg.render(overlay)) os << line << "\n";
            if (overlay) os << "path " << overlay->steps << "\n";
            emit(os.str(), cfg.out);
            return 0;
        }
    } catch (const ConfigError& e) {
        std::cerr << "extlab: " << e.what() << "\n";
        return 2;
    } catch (const CapError& e) {
        std::cerr << "extlab: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "extlab: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

#ifndef WITTKIT_CLI_HPP
#define WITTKIT_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace wittkit::cli
{

struct Config {
    std::string field = "Q";
    std::uint64_t budget = 0; // 0: default_budget()
    std::string corpus_dir;   // empty: no files written
    std::string format = "json";
    std::uint64_t seed = 42;
    unsigned threads = 0;
};

// Exit codes: 0 success or all verdicts pass, 1 domain or input error,
// 2 usage error (unknown subcommand, bad flags), 3 a verdict failed.
int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
int dispatch(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

// FNV-1a of the suite name mixed into the top-level seed.
std::uint64_t suite_seed(std::uint64_t seed, const std::string &suite);

struct CaseResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    std::uint64_t seed = 0;
    std::vector<CaseResult> cases;
    bool passed() const;
};

const std::vector<std::string> &corpus_suites();
SuiteResult run_suite(const std::string &name, std::uint64_t seed);

} // namespace wittkit::cli

#endif

#pragma once

// Engine-versus-oracle checks over the generated corpora, grouped by module.
// Every check is deterministic given the seed.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace bc::verify {

enum class Status { pass, fail, skipped_cap };

std::string status_name(Status s);

struct Options {
    std::uint64_t seed = 7;
    // Adds a set that is not a broken circuit to the pruning check, which
    // must then fail with a witness.
    bool inject_mutant = false;
    bool parallel_checks = true;
};

struct CheckResult {
    std::string name;
    Status status = Status::pass;
    std::string witness;  // first failure, when status == fail
    std::string detail;   // instance counts and the like
    std::uint64_t instances = 0;
    double wall_ms = 0;
};

std::vector<std::string> suites();
// Check names in canonical (sorted) order; suite "all" lists everything.
std::vector<std::string> check_names(const std::string& suite);
bool is_suite(const std::string& name);
bool is_check(const std::string& name);

CheckResult run_check(const std::string& name, const Options& opts);
// Runs a suite, "all", or a single check; results sorted by name.
std::vector<CheckResult> run(const std::string& target, const Options& opts);

nlohmann::json to_json(const std::vector<CheckResult>& results, const std::string& target, const Options& opts);

}  // namespace bc::verify

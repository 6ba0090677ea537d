#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dodgson/condensation.hpp"
#include "dodgson/identities.hpp"

namespace dodgson {

enum class Command { det, verify, pyramid, bench };
enum class Algorithm { dodgson, bareiss, cofactor };

Algorithm parse_algorithm(const std::string& name);
std::string algorithm_name(Algorithm a);

/// Parsed "--gen n,domain,bound,seed". n may be a "lo-hi" range where the
/// command draws sizes (verify); elsewhere it must be a single size.
struct GenSpec {
    int n_lo = 0;
    int n_hi = 0;
    RingDomain domain = RingDomain::integers();
    std::uint64_t bound = 9;
    std::uint64_t seed = 0;

    static GenSpec parse(const std::string& text);
};

struct RunConfig {
    Command command = Command::det;
    std::optional<std::string> input_path;
    std::optional<GenSpec> gen;  // mutually exclusive with input_path
    Algorithm algorithm = Algorithm::dodgson;
    ZeroPolicy zero_policy;
    int trials = 100;
    std::vector<int> sizes;  // bench
    int reps = 3;            // bench
    std::uint64_t bench_bound = 99;
    RingDomain bench_domain = RingDomain::integers();
    bool json = false;
    std::optional<std::uint64_t> seed_override;
    bool selftest_corrupt = false;
};

/// Full command dispatch. Returns the process exit code: 0 success, 1 verify
/// found failing identities, 2 input or configuration error, 3 policy abort.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dodgson

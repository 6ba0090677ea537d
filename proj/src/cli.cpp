#include "dodgson/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dodgson/matrix_io.hpp"
#include "dodgson/random.hpp"

namespace dodgson {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
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

std::uint64_t parse_u64(const std::string& tok, const char* what) {
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw Error(std::string("bad ") + what + ": '" + tok + "'");
    }
}

int parse_int(const std::string& tok, const char* what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw Error(std::string("bad ") + what + ": '" + tok + "'");
    }
}

}  // namespace

Algorithm parse_algorithm(const std::string& name) {
    if (name == "dodgson") return Algorithm::dodgson;
    if (name == "bareiss") return Algorithm::bareiss;
    if (name == "cofactor") return Algorithm::cofactor;
    throw Error("unknown algorithm: '" + name + "' (expected dodgson, bareiss or cofactor)");
}

std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::dodgson: return "dodgson";
        case Algorithm::bareiss: return "bareiss";
        case Algorithm::cofactor: return "cofactor";
    }
    return "?";
}

GenSpec GenSpec::parse(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 4)
        throw Error("--gen wants n,domain,bound,seed; got '" + text + "'");

    GenSpec g;
    const std::string& nfield = parts[0];
    if (auto dash = nfield.find('-'); dash != std::string::npos && dash > 0) {
        g.n_lo = parse_int(nfield.substr(0, dash), "size range");
        g.n_hi = parse_int(nfield.substr(dash + 1), "size range");
    } else {
        g.n_lo = g.n_hi = parse_int(nfield, "size");
    }
    if (g.n_lo < 1 || g.n_hi < g.n_lo)
        throw Error("bad size range in --gen: '" + nfield + "'");
    g.domain = RingDomain::parse(parts[1]);
    g.bound = parse_u64(parts[2], "entry bound");
    g.seed = parse_u64(parts[3], "seed");
    return g;
}

namespace {

Matrix load_single_matrix(const RunConfig& c) {
    if (c.input_path && c.gen)
        throw Error("--input and --gen are mutually exclusive");
    if (c.input_path) return read_matrix_file(*c.input_path);
    if (c.gen) {
        if (c.gen->n_lo != c.gen->n_hi)
            throw Error("this command needs a single size in --gen, not a range");
        const std::uint64_t seed = c.seed_override.value_or(c.gen->seed);
        return random_matrix(c.gen->domain, c.gen->n_lo, c.gen->bound, seed);
    }
    throw Error("need --input PATH or --gen n,domain,bound,seed");
}

Scalar run_algorithm(const Matrix& A, const RunConfig& c, const CondensationTrace** trace_out,
                     CondensationTrace& trace_store) {
    switch (c.algorithm) {
        case Algorithm::dodgson: {
            auto [d, trace] = dodgson_det(A, c.zero_policy);
            trace_store = std::move(trace);
            if (trace_out) *trace_out = &trace_store;
            return d;
        }
        case Algorithm::bareiss:
            return det_bareiss(A);
        case Algorithm::cofactor:
            if (A.n() > 10)
                throw Error("cofactor is limited to n <= 10, got n = " + std::to_string(A.n()));
            return det_cofactor(A);
    }
    throw Error("unreachable algorithm");
}

int cmd_det(const RunConfig& c, std::ostream& out) {
    const Matrix A = load_single_matrix(c);
    A.n();  // square check up front, before any work
    CondensationTrace trace;
    const CondensationTrace* trace_ptr = nullptr;
    const Scalar d = run_algorithm(A, c, &trace_ptr, trace);
    if (c.json) {
        nlohmann::ordered_json j;
        j["command"] = "det";
        j["n"] = A.n();
        j["domain"] = A.domain().name();
        j["algorithm"] = algorithm_name(c.algorithm);
        j["determinant"] = d.str();
        if (trace_ptr)
            j["policy_events"] = trace_ptr->policy_events.size();
        else
            j["policy_events"] = nullptr;
        out << j.dump() << "\n";
    } else {
        out << d.str() << "\n";
    }
    return 0;
}

int cmd_pyramid(const RunConfig& c, std::ostream& out) {
    const Matrix A = load_single_matrix(c);
    auto [d, trace] = dodgson_det(A, c.zero_policy);
    (void)d;
    if (c.json) {
        nlohmann::ordered_json j;
        j["command"] = "pyramid";
        j["n"] = A.n();
        j["domain"] = A.domain().name();
        j["sign"] = trace.sign;
        j["final_det"] = trace.final_det.str();
        nlohmann::ordered_json levels = nlohmann::ordered_json::array();
        for (const Matrix& lvl : trace.levels) {
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (int i = 1; i <= lvl.rows(); ++i) {
                nlohmann::ordered_json row = nlohmann::ordered_json::array();
                for (int j2 = 1; j2 <= lvl.cols(); ++j2) row.push_back(lvl.at(i, j2).str());
                rows.push_back(std::move(row));
            }
            levels.push_back(std::move(rows));
        }
        j["levels"] = std::move(levels);
        nlohmann::ordered_json events = nlohmann::ordered_json::array();
        for (const PolicyEvent& ev : trace.policy_events) {
            nlohmann::ordered_json e;
            e["level"] = ev.level;
            e["row"] = ev.row;
            e["col"] = ev.col;
            e["action"] = ev.action;
            events.push_back(std::move(e));
        }
        j["policy_events"] = std::move(events);
        out << j.dump() << "\n";
    } else {
        write_trace(out, trace);
    }
    return 0;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
    if (!c.gen) throw Error("verify needs --gen n,domain,bound,seed (n may be a lo-hi range)");
    if (c.trials < 1) throw Error("verify needs --trials >= 1");

    CampaignConfig cc;
    cc.domain = c.gen->domain;
    cc.n_lo = c.gen->n_lo;
    cc.n_hi = c.gen->n_hi;
    cc.entry_bound = c.gen->bound;
    cc.trials = c.trials;
    cc.seed = c.seed_override.value_or(c.gen->seed);
    cc.corrupt_for_selftest = c.selftest_corrupt;

    const CampaignSummary summary = fuzz_identities(cc);
    if (c.json) {
        for (const ResidualReport& r : summary.reports) out << to_json_line(r) << "\n";
    } else {
        out << campaign_text(cc, summary);
    }
    return summary.total_fail == 0 ? 0 : 1;
}

int cmd_bench(const RunConfig& c, std::ostream& out, bool algorithm_given) {
    std::vector<int> sizes = c.sizes;
    if (sizes.empty()) sizes = {20, 50, 100};
    if (c.reps < 1) throw Error("bench needs --reps >= 1");

    std::vector<Algorithm> algos;
    if (algorithm_given)
        algos = {c.algorithm};
    else
        algos = {Algorithm::bareiss, Algorithm::dodgson};
    for (Algorithm a : algos)
        if (a == Algorithm::cofactor)
            for (int n : sizes)
                if (n > 10)
                    throw Error("cofactor is limited to n <= 10, got size " + std::to_string(n));

    const std::uint64_t seed = c.seed_override.value_or(0);
    if (!c.json)
        out << std::left << std::setw(12) << "algorithm" << std::setw(8) << "n"
            << "median_ms\n";

    for (int n : sizes) {
        if (n < 1) throw Error("bench sizes must be >= 1");
        const Matrix A =
            random_matrix(c.bench_domain, n, c.bench_bound, seed + static_cast<std::uint64_t>(n));
        for (Algorithm a : algos) {
            std::vector<double> ms;
            for (int rep = 0; rep < c.reps; ++rep) {
                const auto t0 = std::chrono::steady_clock::now();
                Scalar d = Scalar::zero(A.domain());
                switch (a) {
                    case Algorithm::dodgson: d = dodgson_det(A, c.zero_policy).first; break;
                    case Algorithm::bareiss: d = det_bareiss(A); break;
                    case Algorithm::cofactor: d = det_cofactor(A); break;
                }
                const auto t1 = std::chrono::steady_clock::now();
                (void)d;
                ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
            }
            std::sort(ms.begin(), ms.end());
            const std::size_t h = ms.size() / 2;
            const double median =
                (ms.size() % 2 == 1) ? ms[h] : (ms[h - 1] + ms[h]) / 2.0;
            if (c.json) {
                nlohmann::ordered_json j;
                j["command"] = "bench";
                j["algorithm"] = algorithm_name(a);
                j["n"] = n;
                j["domain"] = c.bench_domain.name();
                j["reps"] = c.reps;
                j["median_ms"] = median;
                out << j.dump() << "\n";
            } else {
                std::ostringstream med;
                med << std::fixed << std::setprecision(3) << median;
                out << std::left << std::setw(12) << algorithm_name(a) << std::setw(8) << n
                    << med.str() << "\n";
            }
        }
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact determinants via Dodgson condensation"};
    app.require_subcommand(1);

    std::string input_path, gen_spec, algorithm = "dodgson", zero_policy, sizes_text,
                bench_domain = "integers";
    std::uint64_t seed = 0, bench_bound = 99;
    int trials = 100, reps = 3;
    bool json = false, selftest_corrupt = false;

    auto add_source = [&](CLI::App* sub) {
        sub->add_option("--input", input_path, "matrix file");
        sub->add_option("--gen", gen_spec, "random matrix spec: n,domain,bound,seed");
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", json, "machine-readable output");
        sub->add_option("--seed", seed, "override the generator seed")->group("Generator");
    };

    CLI::App* det = app.add_subcommand("det", "print one determinant");
    add_source(det);
    add_common(det);
    det->add_option("--algorithm", algorithm, "dodgson, bareiss or cofactor");
    det->add_option("--zero-policy", zero_policy, "fail, row_swap[:N] or bareiss_fallback");

    CLI::App* verify = app.add_subcommand("verify", "run the identity fuzz campaign");
    verify->add_option("--gen", gen_spec, "campaign spec: n[-n],domain,bound,seed")->required();
    add_common(verify);
    verify->add_option("--trials", trials, "number of random matrices");
    verify->add_flag("--selftest-corrupt", selftest_corrupt)->group("");

    CLI::App* pyramid = app.add_subcommand("pyramid", "print the condensation trace");
    add_source(pyramid);
    add_common(pyramid);
    pyramid->add_option("--zero-policy", zero_policy, "fail, row_swap[:N] or bareiss_fallback");

    CLI::App* bench = app.add_subcommand("bench", "time the determinant algorithms");
    add_common(bench);
    bench->add_option("--sizes", sizes_text, "comma-separated matrix sizes (default 20,50,100)");
    bench->add_option("--reps", reps, "repetitions per timing (median reported)");
    bench->add_option("--bound", bench_bound, "entry bound for generated matrices");
    bench->add_option("--domain", bench_domain, "integers, rationals or fp<p>");
    bench->add_option("--algorithm", algorithm, "restrict to one algorithm");
    bench->add_option("--zero-policy", zero_policy, "policy for the dodgson timings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        RunConfig c;
        if (!input_path.empty()) c.input_path = input_path;
        if (!gen_spec.empty()) c.gen = GenSpec::parse(gen_spec);
        c.algorithm = parse_algorithm(algorithm);
        if (!zero_policy.empty()) c.zero_policy = ZeroPolicy::parse(zero_policy);
        c.trials = trials;
        c.reps = reps;
        c.bench_bound = bench_bound;
        c.bench_domain = RingDomain::parse(bench_domain);
        c.json = json;
        c.selftest_corrupt = selftest_corrupt;
        if (!sizes_text.empty())
            for (const std::string& tok : split(sizes_text, ','))
                c.sizes.push_back(parse_int(tok, "bench size"));

        bool seed_given = false;
        for (CLI::App* sub : {det, verify, pyramid, bench})
            if (sub->parsed() && sub->count("--seed") > 0) seed_given = true;
        if (seed_given) c.seed_override = seed;

        if (det->parsed()) {
            c.command = Command::det;
            return cmd_det(c, out);
        }
        if (verify->parsed()) {
            c.command = Command::verify;
            return cmd_verify(c, out);
        }
        if (pyramid->parsed()) {
            c.command = Command::pyramid;
            return cmd_pyramid(c, out);
        }
        c.command = Command::bench;
        return cmd_bench(c, out, bench->count("--algorithm") > 0);
    } catch (const CondensationAbort& e) {
        err << "abort: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace dodgson

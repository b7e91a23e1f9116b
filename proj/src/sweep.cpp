#include <atomic>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "lapcs/errors.hpp"
#include "lapcs/harness.hpp"

namespace lapcs {

namespace {

struct Job {
    std::string graph_id;
    Graph graph;
    int k = 0;
};

std::vector<Job> plan_jobs(const SweepConfig& cfg) {
    std::vector<std::pair<std::string, Graph>> graphs;
    if (cfg.graphs) {
        graphs = *cfg.graphs;
    } else if (cfg.random) {
        Rng rng(cfg.random->seed);
        for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
            for (int idx = 0; idx < cfg.random->count; ++idx)
                graphs.emplace_back("n" + std::to_string(n) + "r" + std::to_string(idx),
                                    random_graph(rng, n, cfg.random->edge_probability));
        }
    } else {
        for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
            const std::uint64_t total = graph_count(n);
            for (std::uint64_t mask = 0; mask < total; ++mask)
                graphs.emplace_back("n" + std::to_string(n) + "g" + std::to_string(mask), graph_from_mask(n, mask));
        }
    }

    std::vector<Job> jobs;
    for (auto& [id, g] : graphs) {
        if (cfg.fixed_k) {
            jobs.push_back({id, g, *cfg.fixed_k});
        } else {
            for (int k = 1; k <= g.order(); ++k)
                jobs.push_back({id, g, k});
        }
    }
    return jobs;
}

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

int default_exhaustive_limit(Theorem theorem) { return theorem == Theorem::One ? 6 : 4; }

void validate(const SweepConfig& cfg) {
    if (cfg.n_min < 0 || cfg.n_max < cfg.n_min)
        throw InvalidInputError("invalid vertex range " + std::to_string(cfg.n_min) + ".." + std::to_string(cfg.n_max));
    if (cfg.fixed_k && *cfg.fixed_k < 1)
        throw InvalidInputError("k must be >= 1");
    if (cfg.jobs < 1)
        throw InvalidInputError("jobs must be >= 1");
    if (cfg.spot_check_stride < 0)
        throw InvalidInputError("spot-check stride must be >= 0");
    if (cfg.graphs)
        return;
    if (cfg.random) {
        if (cfg.random->count < 0)
            throw InvalidInputError("random graph count must be >= 0");
        if (!(cfg.random->edge_probability >= 0.0 && cfg.random->edge_probability <= 1.0))
            throw InvalidInputError("edge probability must lie in [0, 1]");
        return;
    }
    const int limit = cfg.exhaustive_limit.value_or(default_exhaustive_limit(cfg.theorem));
    if (cfg.n_max > limit)
        throw InvalidInputError("exhaustive sweep limited to n <= " + std::to_string(limit) + ", got " +
                                std::to_string(cfg.n_max));
}

std::size_t SweepResult::spot_mismatches() const {
    std::size_t count = 0;
    for (const SpotCheck& s : spot_checks) {
        if (s.recomputed && *s.recomputed != s.lapcs_len)
            ++count;
    }
    return count;
}

SweepResult run_sweep(const SweepConfig& cfg) {
    validate(cfg);
    const std::vector<Job> jobs = plan_jobs(cfg);

    SweepResult result;
    result.report.rows.resize(jobs.size());
    std::vector<std::optional<SpotCheck>> spots(jobs.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t idx = next++; idx < jobs.size(); idx = next++) {
            const Job& job = jobs[idx];
            EquivalenceRow row = check_equivalence(job.graph, job.k, cfg.theorem, cfg.budgets);
            row.graph_id = job.graph_id;
            if (cfg.spot_check_stride > 0 && idx % static_cast<std::size_t>(cfg.spot_check_stride) == 0 &&
                !row.skipped) {
                SpotCheck spot{idx, row.lapcs_len, std::nullopt};
                const ReductionInstance inst = reduce(cfg.theorem, job.graph, job.k);
                try {
                    spot.recomputed = exact_search(inst.first, inst.second, inst.constraint, cfg.budgets.search).length;
                } catch (const BudgetError&) {
                }
                spots[idx] = spot;
            }
            result.report.rows[idx] = std::move(row);
        }
    };

    if (cfg.jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < cfg.jobs; ++t)
            pool.emplace_back(worker);
    }

    for (auto& s : spots) {
        if (s)
            result.spot_checks.push_back(*s);
    }
    return result;
}

std::string csv_row(const EquivalenceRow& row) {
    std::ostringstream out;
    out << row.graph_id << ',' << row.n << ',' << row.m << ',' << flag(row.connected) << ',' << row.k << ',';
    if (row.skipped) {
        out << "skipped,skipped,skipped,skipped,skipped,skipped";
    } else {
        out << flag(row.is_answer) << ',' << row.lapcs_len << ',' << row.threshold << ',' << flag(row.lapcs_answer)
            << ',' << flag(row.forward_ok) << ',' << flag(row.backward_ok);
    }
    return out.str();
}

std::string sweep_csv(const EquivalenceReport& report) {
    std::string out(kSweepCsvHeader);
    out.push_back('\n');
    for (const EquivalenceRow& row : report.rows) {
        out += csv_row(row);
        out.push_back('\n');
    }
    return out;
}

std::string sweep_summary_json(const SweepConfig& cfg, const SweepResult& result) {
    using nlohmann::ordered_json;
    const EquivalenceReport& report = result.report;

    ordered_json j;
    j["theorem"] = static_cast<int>(cfg.theorem);
    j["source"] = cfg.graphs ? "list" : (cfg.random ? "random" : "exhaustive");
    j["n_min"] = cfg.n_min;
    j["n_max"] = cfg.n_max;
    if (cfg.fixed_k)
        j["k"] = *cfg.fixed_k;
    else
        j["k"] = "all";
    if (cfg.random && !cfg.graphs) {
        j["seed"] = cfg.random->seed;
        j["graphs_per_n"] = cfg.random->count;
        j["edge_probability"] = cfg.random->edge_probability;
    }
    j["rows"] = report.rows.size();
    j["skipped"] = report.skipped();
    j["forward_failures"] = report.forward_failures();
    j["backward_failures"] = report.backward_failures();

    ordered_json counter = ordered_json::array();
    for (const EquivalenceRow& row : report.counterexamples()) {
        ordered_json c;
        c["graph_id"] = row.graph_id;
        c["n"] = row.n;
        c["m"] = row.m;
        c["connected"] = row.connected;
        c["k"] = row.k;
        c["is_size"] = row.is_size;
        c["lapcs_len"] = row.lapcs_len;
        c["threshold"] = row.threshold;
        c["direction"] = !row.forward_ok && !row.backward_ok ? "both" : (!row.forward_ok ? "forward" : "backward");
        counter.push_back(std::move(c));
    }
    j["counterexamples"] = std::move(counter);

    ordered_json skipped = ordered_json::array();
    for (const EquivalenceRow& row : report.rows) {
        if (row.skipped)
            skipped.push_back({{"graph_id", row.graph_id}, {"k", row.k}, {"reason", row.skip_reason}});
    }
    j["skipped_rows"] = std::move(skipped);

    std::size_t unavailable = 0;
    for (const SpotCheck& s : result.spot_checks)
        unavailable += s.recomputed ? 0 : 1;
    j["spot_checks"] = {{"checked", result.spot_checks.size() - unavailable},
                        {"mismatches", result.spot_mismatches()},
                        {"unavailable", unavailable}};
    return j.dump(2) + "\n";
}

}  // namespace lapcs

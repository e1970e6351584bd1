// Command-line front end for the rental mechanism library. All mechanism
// math goes through the C API in rental.h; this file only parses
// configuration, shuffles handles and formats tables.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rental.h"

using nlohmann::json;

namespace {

// Exit codes: 0 success, 1 validation/configuration error, 2 internal
// invariant failure.
struct CliError {
    int exit_code;
    std::string message;
};

[[noreturn]] void fail(rental_status st, const std::string& where) {
    const int code = st == RENTAL_ERR_INTERNAL ? 2 : 1;
    throw CliError{code, where + ": " + rental_last_error()};
}

void check(rental_status st, const std::string& where) {
    if (st != RENTAL_OK) fail(st, where);
}

[[noreturn]] void invalid(const std::string& message) { throw CliError{1, message}; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) invalid("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) invalid("cannot write '" + path + "'");
    out << text;
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

struct DistHandle {
    rental_dist* p = nullptr;
    ~DistHandle() { rental_dist_free(p); }
};

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { rental_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

// Parsed experiment configuration; resolves distributions per horizon
// (dists[h-1] faces the agent arriving with h days left).
struct Experiment {
    int horizon = 0;
    std::vector<std::shared_ptr<DistHandle>> per_horizon;
    rental_reward* reward = nullptr;
    std::string mechanism_family; // "fixed_rate", "threshold" or "" (menu file)
    std::string menu_file;
    std::size_t ironing_grid = 10000;
    int audit_grid = 1000;
    std::uint64_t seed = 1;
    std::uint64_t episodes = 100000;
    bool normalize_base_payment = false;
    bool iid = true;

    ~Experiment() { rental_reward_free(reward); }
};

Experiment load_experiment(const std::string& path) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::exception& ex) {
        invalid("config: invalid json: " + std::string(ex.what()));
    }
    if (!j.is_object()) invalid("config: top level must be an object");

    Experiment exp;
    if (!j.contains("horizon") || !j["horizon"].is_number_integer())
        invalid("config.horizon: required integer");
    exp.horizon = j["horizon"].get<int>();
    if (exp.horizon < 1) invalid("config.horizon: must be at least 1");

    if (!j.contains("distributions")) invalid("config.distributions: required");
    std::vector<std::string> day_json;
    if (j["distributions"].is_array()) {
        for (const auto& e : j["distributions"]) day_json.push_back(e.dump());
        if (static_cast<int>(day_json.size()) != exp.horizon)
            invalid("config.distributions: array length must equal the horizon");
    } else {
        day_json.assign(static_cast<std::size_t>(exp.horizon), j["distributions"].dump());
    }
    // Day i (1-based) faces horizon n - i + 1.
    exp.per_horizon.resize(static_cast<std::size_t>(exp.horizon));
    for (int h = 1; h <= exp.horizon; ++h) {
        auto dh = std::make_shared<DistHandle>();
        const std::string& text = day_json[static_cast<std::size_t>(exp.horizon - h)];
        check(rental_dist_from_json(text.c_str(), &dh->p),
              "config.distributions[" + std::to_string(exp.horizon - h) + "]");
        exp.per_horizon[static_cast<std::size_t>(h - 1)] = std::move(dh);
    }
    for (int h = 2; h <= exp.horizon; ++h)
        if (!rental_dist_equal(exp.per_horizon[0]->p,
                               exp.per_horizon[static_cast<std::size_t>(h - 1)]->p))
            exp.iid = false;

    if (!j.contains("reward")) invalid("config.reward: required");
    check(rental_reward_from_json(j["reward"].dump().c_str(), &exp.reward), "config.reward");

    if (j.contains("mechanism")) {
        if (j["mechanism"].is_string()) {
            exp.mechanism_family = j["mechanism"].get<std::string>();
            if (exp.mechanism_family != "fixed_rate" && exp.mechanism_family != "threshold")
                invalid("config.mechanism: must be 'fixed_rate', 'threshold' or {menu_file}");
        } else if (j["mechanism"].is_object() && j["mechanism"].contains("menu_file")) {
            exp.menu_file = j["mechanism"]["menu_file"].get<std::string>();
        } else {
            invalid("config.mechanism: must be 'fixed_rate', 'threshold' or {menu_file}");
        }
    }
    if (j.contains("grid")) {
        const auto& g = j["grid"];
        if (g.contains("ironing")) exp.ironing_grid = g["ironing"].get<std::size_t>();
        if (g.contains("audit")) exp.audit_grid = g["audit"].get<int>();
    }
    if (j.contains("seed")) exp.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("episodes")) exp.episodes = j["episodes"].get<std::uint64_t>();
    if (j.contains("normalize_base_payment"))
        exp.normalize_base_payment = j["normalize_base_payment"].get<bool>();
    return exp;
}

rental_threshold_plan* make_threshold_plan(const Experiment& exp) {
    if (!exp.iid)
        invalid("threshold mechanism requires i.i.d. distributions; "
                "per-day distributions differ");
    rental_threshold_plan* plan = nullptr;
    check(rental_threshold_precompute(exp.horizon, exp.per_horizon[0]->p, exp.reward,
                                      exp.ironing_grid, &plan),
          "compute-threshold");
    return plan;
}

rental_fr_plans* make_fr_plans(const Experiment& exp) {
    std::vector<const rental_dist*> dists;
    for (const auto& d : exp.per_horizon) dists.push_back(d->p);
    rental_fr_plans* plans = nullptr;
    check(rental_fixed_rate_precompute(exp.horizon, dists.data(), dists.size(), exp.reward,
                                       exp.ironing_grid, exp.normalize_base_payment ? 1 : 0,
                                       &plans),
          "compute-fixed-rate");
    return plans;
}

rental_mechanism* mechanism_for(const Experiment& exp, const std::string& mech_path) {
    rental_mechanism* mech = nullptr;
    if (!mech_path.empty()) {
        check(rental_mechanism_from_json(read_file(mech_path).c_str(), &mech), "mechanism file");
        return mech;
    }
    if (exp.mechanism_family == "threshold") {
        rental_threshold_plan* plan = make_threshold_plan(exp);
        check(rental_mechanism_from_threshold(plan, &mech), "mechanism");
        rental_threshold_plan_free(plan);
        return mech;
    }
    if (exp.mechanism_family == "fixed_rate") {
        rental_fr_plans* plans = make_fr_plans(exp);
        check(rental_mechanism_from_fr(plans, &mech), "mechanism");
        rental_fr_plans_free(plans);
        return mech;
    }
    if (!exp.menu_file.empty()) {
        check(rental_mechanism_from_json(read_file(exp.menu_file).c_str(), &mech),
              "config.mechanism.menu_file");
        return mech;
    }
    invalid("no mechanism: set config.mechanism or pass --mech");
}

// --- subcommands ---------------------------------------------------------

int cmd_compute_fixed_rate(const std::string& config, const std::string& out,
                           const std::string& intervals_csv, const std::string& rewards_csv) {
    const Experiment exp = load_experiment(config);
    rental_fr_plans* plans = make_fr_plans(exp);

    std::printf("horizon  intervals  R[h]\n");
    std::string csv = "horizon,index,left,right,alloc,pay,prob\n";
    for (int h = 1; h <= exp.horizon; ++h) {
        std::size_t count = 0;
        check(rental_fr_interval_count(plans, h, &count), "intervals");
        double R = 0.0;
        check(rental_fr_reward_at(plans, h, &R), "rewards");
        std::printf("%7d  %9zu  %.12g\n", h, count, R);
        for (std::size_t i = 0; i < count; ++i) {
            double left, right, pay, prob;
            int alloc;
            check(rental_fr_interval(plans, h, i, &left, &right, &alloc, &pay, &prob),
                  "intervals");
            csv += std::to_string(h) + "," + std::to_string(i) + "," + fmt(left) + "," +
                   fmt(right) + "," + std::to_string(alloc) + "," + fmt(pay) + "," + fmt(prob) +
                   "\n";
        }
    }
    if (!intervals_csv.empty()) write_file(intervals_csv, csv);
    if (!rewards_csv.empty()) {
        std::string rcsv = "horizon,reward\n";
        for (int h = 0; h <= exp.horizon; ++h) {
            double R = 0.0;
            check(rental_fr_reward_at(plans, h, &R), "rewards");
            rcsv += std::to_string(h) + "," + fmt(R) + "\n";
        }
        write_file(rewards_csv, rcsv);
    }
    if (!out.empty()) {
        rental_mechanism* mech = nullptr;
        check(rental_mechanism_from_fr(plans, &mech), "mechanism");
        OwnedString text;
        check(rental_mechanism_to_json(mech, &text.s), "mechanism json");
        write_file(out, text.str());
        rental_mechanism_free(mech);
        std::printf("wrote %s\n", out.c_str());
    }
    rental_fr_plans_free(plans);
    return 0;
}

int cmd_compute_threshold(const std::string& config, const std::string& out,
                          const std::string& taus_csv) {
    const Experiment exp = load_experiment(config);
    rental_threshold_plan* plan = make_threshold_plan(exp);

    std::printf("horizon  tau            R[h]\n");
    std::string csv = "horizon,tau,reward\n";
    for (int h = 1; h <= exp.horizon; ++h) {
        double R = 0.0;
        check(rental_threshold_reward_at(plan, h, &R), "rewards");
        if (h >= 2) {
            double tau = 0.0;
            check(rental_threshold_tau(plan, h, &tau), "taus");
            std::printf("%7d  %-13.10g  %.12g\n", h, tau, R);
            csv += std::to_string(h) + "," + fmt(tau) + "," + fmt(R) + "\n";
        } else {
            std::printf("%7d  %-13s  %.12g\n", h, "-", R);
            csv += std::to_string(h) + ",," + fmt(R) + "\n";
        }
    }
    if (!taus_csv.empty()) write_file(taus_csv, csv);
    if (!out.empty()) {
        rental_mechanism* mech = nullptr;
        check(rental_mechanism_from_threshold(plan, &mech), "mechanism");
        OwnedString text;
        check(rental_mechanism_to_json(mech, &text.s), "mechanism json");
        write_file(out, text.str());
        rental_mechanism_free(mech);
        std::printf("wrote %s\n", out.c_str());
    }
    rental_threshold_plan_free(plan);
    return 0;
}

int cmd_simulate(const std::string& config, const std::string& mech_path,
                 std::uint64_t episodes_override, std::int64_t seed_override,
                 const std::string& out, std::size_t keep_logs) {
    const Experiment exp = load_experiment(config);
    rental_mechanism* mech = mechanism_for(exp, mech_path);
    const int n = rental_mechanism_horizon(mech);
    if (n != exp.horizon)
        invalid("mechanism horizon " + std::to_string(n) + " does not match config horizon " +
                std::to_string(exp.horizon));

    const std::uint64_t episodes = episodes_override ? episodes_override : exp.episodes;
    const std::uint64_t seed = seed_override >= 0 ? static_cast<std::uint64_t>(seed_override)
                                                  : exp.seed;
    std::vector<const rental_dist*> dists;
    for (const auto& d : exp.per_horizon) dists.push_back(d->p);

    rental_sim_result* res = nullptr;
    check(rental_simulate(mech, dists.data(), dists.size(), exp.reward, seed, episodes,
                          keep_logs, &res),
          "simulate");
    std::printf("episodes %" PRIu64 "  mean %.9g  stderr %.3g\n", episodes,
                rental_sim_mean(res), rental_sim_stderr(res));

    if (keep_logs > 0) {
        int ok = 0;
        OwnedString rep;
        check(rental_sim_replay(res, exp.reward, &ok, &rep.s), "replay");
        std::printf("replay check on %zu logged episodes: %s\n", keep_logs,
                    ok ? "consistent" : "INCONSISTENT");
        if (!ok) {
            std::fprintf(stderr, "%s\n", rep.str().c_str());
            rental_sim_result_free(res);
            rental_mechanism_free(mech);
            return 2;
        }
    }
    if (!out.empty()) {
        OwnedString csv;
        check(rental_sim_runlog_csv(res, &csv.s), "run log");
        write_file(out, csv.str());
        std::printf("wrote %s\n", out.c_str());
    }
    rental_sim_result_free(res);
    rental_mechanism_free(mech);
    return 0;
}

int cmd_audit(const std::string& config, const std::string& mech_path, int grid,
              const std::string& json_out) {
    const Experiment exp = load_experiment(config);
    rental_mechanism* mech = mechanism_for(exp, mech_path);
    const int n = rental_mechanism_horizon(mech);
    if (grid <= 0) grid = exp.audit_grid;

    std::vector<double> rewards(static_cast<std::size_t>(n) + 1, 0.0);
    int has_rewards = 0;
    check(rental_mechanism_reward_table(mech, rewards.data(), &has_rewards), "reward table");

    json out = json::array();
    bool all_truthful = true;
    std::printf("horizon  truthful  alloc-monotone  reward-monotone  props\n");
    for (int h = n; h >= 1; --h) {
        rental_menu* menu = nullptr;
        check(rental_mechanism_menu(mech, h, &menu), "menu");
        rental_cost* cost = nullptr;
        if (has_rewards) {
            std::vector<double> c(static_cast<std::size_t>(h) + 1, 0.0);
            for (int x = 1; x <= h; ++x)
                c[static_cast<std::size_t>(x)] =
                    rewards[static_cast<std::size_t>(h - 1)] -
                    rewards[static_cast<std::size_t>(h - std::max(x, 1))];
            check(rental_cost_create(c.data(), c.size(), &cost), "cost");
        } else {
            check(rental_cost_zero(h, &cost), "cost");
        }

        int violations = 0;
        OwnedString tj, mj, pj;
        check(rental_audit_truthful(menu, grid, &violations, &tj.s), "audit_truthful");
        int amono = 0, rmono = 0;
        check(rental_audit_monotone(menu, exp.reward, cost, grid, &amono, &rmono, &mj.s),
              "audit_monotone");
        int props_ok = 0;
        check(rental_audit_props(menu, exp.reward, cost, grid, &props_ok, &pj.s), "audit_props");

        std::printf("%7d  %-8s  %-14s  %-15s  %s\n", h, violations == 0 ? "yes" : "NO",
                    amono ? "yes" : "no", rmono ? "yes" : "no", props_ok ? "pass" : "FAIL");
        all_truthful = all_truthful && violations == 0;

        json entry;
        entry["horizon"] = h;
        entry["truthful"] = json::parse(tj.str());
        entry["monotone"] = json::parse(mj.str());
        entry["props"] = json::parse(pj.str());
        out.push_back(std::move(entry));

        rental_cost_free(cost);
        rental_menu_free(menu);
    }
    if (!json_out.empty()) write_file(json_out, out.dump(2));
    rental_mechanism_free(mech);
    return all_truthful ? 0 : 2;
}

int cmd_oracle_compare(const std::string& config, std::size_t k) {
    const Experiment exp = load_experiment(config);
    const int n = exp.horizon;
    if (exp.mechanism_family != "threshold" && exp.mechanism_family != "fixed_rate")
        invalid("oracle-compare: config.mechanism must be 'threshold' or 'fixed_rate'");

    // Algorithmic mechanism + its over-time cost at the full horizon.
    rental_mechanism* mech = mechanism_for(exp, "");
    std::vector<double> rewards(static_cast<std::size_t>(n) + 1, 0.0);
    int has_rewards = 0;
    check(rental_mechanism_reward_table(mech, rewards.data(), &has_rewards), "reward table");
    std::vector<double> cost(static_cast<std::size_t>(n) + 1, 0.0);
    for (int x = 1; x <= n; ++x)
        cost[static_cast<std::size_t>(x)] =
            rewards[static_cast<std::size_t>(n - 1)] -
            rewards[static_cast<std::size_t>(n - std::max(x, 1))];

    // Equal-mass grid of k quantile midpoints and payment levels at zero
    // plus the grid points (capped at 12 levels).
    const rental_dist* d = exp.per_horizon[static_cast<std::size_t>(n - 1)]->p;
    std::vector<double> points(k), masses(k, 1.0 / static_cast<double>(k));
    for (std::size_t i = 0; i < k; ++i)
        check(rental_dist_quantile(d, (2.0 * i + 1.0) / (2.0 * k), &points[i]), "grid");
    std::vector<double> levels{0.0};
    for (std::size_t i = (k >= 12 ? 1 : 0); i < k; ++i) levels.push_back(points[i]);

    double oracle = 0.0;
    std::vector<int> oa(k);
    std::vector<double> ot(k), of(k);
    check(rental_brute_force_menu(points.data(), masses.data(), k, n, levels.data(),
                                  levels.size(), exp.reward, cost.data(), cost.size(), &oracle,
                                  oa.data(), ot.data(), of.data()),
          "oracle");

    rental_menu* menu = nullptr;
    check(rental_mechanism_menu(mech, n, &menu), "menu");
    rental_cost* cfn = nullptr;
    check(rental_cost_create(cost.data(), cost.size(), &cfn), "cost");
    double alg = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        double r = 0.0;
        check(rental_designer_reward(menu, exp.reward, cfn, points[i], &r), "evaluate");
        alg += masses[i] * r;
    }
    rental_cost_free(cfn);
    rental_menu_free(menu);

    const double bound = 2.0 * (points.back() - points.front()) /
                         static_cast<double>(k - 1) * n;
    std::printf("k = %zu, horizon = %d\n", k, n);
    std::printf("oracle optimum      %.9f\n", oracle);
    std::printf("algorithm (discrete) %.9f\n", alg);
    std::printf("gap                 %.9f (discretization bound %.6f)\n", oracle - alg, bound);
    std::printf("witness menu (type -> alloc total filter):\n");
    for (std::size_t i = 0; i < k; ++i)
        std::printf("  %.6f -> %d  %.6f  %.6f\n", points[i], oa[i], ot[i], of[i]);
    rental_mechanism_free(mech);
    return 0;
}

int cmd_gap_table(int n_max, const std::string& out) {
    if (n_max < 4) invalid("gap-table: --n-max must be at least 4");
    std::vector<double> taus(static_cast<std::size_t>(n_max) + 1);
    std::vector<double> ells(static_cast<std::size_t>(n_max) + 1);
    check(rental_uniform_recurrence(n_max, taus.data(), ells.data()), "recurrence");
    std::string csv = "n,R_threshold,R_fixed_rate,ratio\n";
    for (int i = 1; i <= n_max; ++i) {
        const double rt = ells[static_cast<std::size_t>(i)] * i;
        const double rf = 0.5 * i;
        csv += std::to_string(i) + "," + fmt(rt) + "," + fmt(rf) + "," + fmt(rt / rf) + "\n";
    }
    if (!out.empty()) {
        write_file(out, csv);
        std::printf("wrote %s\n", out.c_str());
    } else {
        std::fputs(csv.c_str(), stdout);
    }
    std::printf("ratio at n=%d: %.6f\n", n_max, 2.0 * ells[static_cast<std::size_t>(n_max)]);
    return 0;
}

int cmd_iron_dump(const std::string& config, int horizon, const std::string& out, int points) {
    const Experiment exp = load_experiment(config);
    const bool horizon_specific = exp.mechanism_family == "threshold";
    const int h = horizon > 0 ? horizon : exp.horizon;
    const rental_dist* d = exp.per_horizon[static_cast<std::size_t>(
        std::min(exp.horizon, std::max(1, h)) - 1)]->p;

    rental_ironed* ir = nullptr;
    if (horizon_specific)
        check(rental_iron_horizon(exp.reward, d, h, exp.ironing_grid, &ir), "iron");
    else
        check(rental_iron_fr(exp.reward, d, exp.ironing_grid, &ir), "iron");

    std::string csv = "v,theta,ironed\n";
    const double lo = rental_dist_lo(d), hi = rental_dist_hi(d);
    for (int i = 0; i <= points; ++i) {
        const double v = lo + (hi - lo) * static_cast<double>(i) / points;
        double theta = 0.0, bar = 0.0;
        if (horizon_specific)
            check(rental_horizon_virtual_value(exp.reward, d, h, v, &theta), "theta");
        else
            check(rental_fr_virtual_value(exp.reward, d, v, &theta), "theta");
        check(rental_ironed_eval(ir, v, &bar), "ironed");
        csv += fmt(v) + "," + fmt(theta) + "," + fmt(bar) + "\n";
    }
    rental_ironed_free(ir);
    if (!out.empty()) {
        write_file(out, csv);
        std::printf("wrote %s\n", out.c_str());
    } else {
        std::fputs(csv.c_str(), stdout);
    }
    return 0;
}

int cmd_example_1_1() {
    // The two-entry auction over Uniform[0,8]: six days at a flat 2/day
    // below 4, five days with 4 up front from 4 upward.
    const double lefts[] = {0.0, 4.0};
    const double rights[] = {4.0, 8.0};
    const int allocs[] = {6, 5};
    const double totals[] = {12.0, 4.0};
    const double filters[] = {2.0, 4.0};
    rental_menu* m = nullptr;
    check(rental_menu_create(6, lefts, rights, allocs, totals, filters, 2, &m), "fixture");
    rental_reward* revenue = nullptr;
    check(rental_reward_linear(0.0, 1.0, &revenue), "reward");
    rental_cost* c = nullptr;
    check(rental_cost_zero(6, &c), "cost");

    int violations = 0;
    check(rental_audit_truthful(m, 1000, &violations, nullptr), "audit_truthful");
    int amono = 0, rmono = 0;
    check(rental_audit_monotone(m, revenue, c, 1000, &amono, &rmono, nullptr), "audit_monotone");

    std::printf("truthful=%s, allocation-monotone=%s, reward-monotone=%s\n",
                violations == 0 ? "yes" : "no", amono ? "yes" : "no", rmono ? "yes" : "no");

    std::printf("\n   v   alloc  total  designer revenue\n");
    for (double v : {3.0, 3.9, 4.0}) {
        int entry = 0, alloc = 0;
        double total = 0.0, utility = 0.0;
        check(rental_best_response(m, v, revenue, c, &entry, &alloc, &total, &utility), "br");
        double rew = 0.0;
        check(rental_designer_reward(m, revenue, c, v, &rew), "reward");
        std::printf("%4.1f  %5d  %5.1f  %16.1f\n", v, alloc, total, rew);
    }
    std::printf("\nwitness pair (3, 4): allocation 6 > 5, revenue 12 > 4\n");

    rental_cost_free(c);
    rental_reward_free(revenue);
    rental_menu_free(m);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"optimal rental mechanisms for stagewise-IR agents"};
    app.require_subcommand(1);

    std::string config, out, mech_path, intervals_csv, rewards_csv, taus_csv, json_out;
    std::uint64_t episodes = 0;
    std::int64_t seed = -1;
    std::size_t keep_logs = 1000, k = 8;
    int grid = 0, n_max = 50, horizon = 0, points = 1000;

    auto* fr = app.add_subcommand("compute-fixed-rate",
                                  "per-horizon interval construction and reward table");
    fr->add_option("--config", config)->required();
    fr->add_option("--out", out, "mechanism JSON output");
    fr->add_option("--intervals-csv", intervals_csv);
    fr->add_option("--rewards-csv", rewards_csv);

    auto* th = app.add_subcommand("compute-threshold",
                                  "one-or-all thresholds for i.i.d. negative tradeoff");
    th->add_option("--config", config)->required();
    th->add_option("--out", out, "mechanism JSON output");
    th->add_option("--taus-csv", taus_csv);

    auto* sim = app.add_subcommand("simulate", "Monte-Carlo rental game runs");
    sim->add_option("--config", config)->required();
    sim->add_option("--mech", mech_path, "mechanism JSON (otherwise from config)");
    sim->add_option("--episodes", episodes);
    sim->add_option("--seed", seed);
    sim->add_option("--out", out, "run-log CSV output");
    sim->add_option("--keep-logs", keep_logs, "episodes to log (default 1000)");

    auto* audit = app.add_subcommand("audit", "truthfulness/monotonicity/structure audits");
    audit->add_option("--config", config)->required();
    audit->add_option("--mech", mech_path);
    audit->add_option("--grid", grid);
    audit->add_option("--json", json_out);

    auto* oc = app.add_subcommand("oracle-compare", "brute-force optimum vs the mechanism");
    oc->add_option("--config", config)->required();
    oc->add_option("--k", k, "discretization size (default 8)");

    auto* gap = app.add_subcommand("gap-table",
                                   "threshold vs fixed-rate rewards, Uniform[0,1] surplus");
    gap->add_option("--n-max", n_max);
    gap->add_option("--out", out);

    auto* iron = app.add_subcommand("iron-dump", "(v, theta, ironed theta) table");
    iron->add_option("--config", config)->required();
    iron->add_option("--horizon", horizon);
    iron->add_option("--out", out);
    iron->add_option("--points", points);

    app.add_subcommand("example-1-1", "audit the shipped two-entry non-monotone auction");

    CLI11_PARSE(app, argc, argv);

    try {
        if (fr->parsed()) return cmd_compute_fixed_rate(config, out, intervals_csv, rewards_csv);
        if (th->parsed()) return cmd_compute_threshold(config, out, taus_csv);
        if (sim->parsed()) return cmd_simulate(config, mech_path, episodes, seed, out, keep_logs);
        if (audit->parsed()) return cmd_audit(config, mech_path, grid, json_out);
        if (oc->parsed()) return cmd_oracle_compare(config, k);
        if (gap->parsed()) return cmd_gap_table(n_max, out);
        if (iron->parsed()) return cmd_iron_dump(config, horizon, out, points);
        return cmd_example_1_1();
    } catch (const CliError& e) {
        std::fprintf(stderr, "error: %s\n", e.message.c_str());
        return e.exit_code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 2;
    }
}

#include "rental/sim.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace rental {

using nlohmann::json;

void RentalMechanism::validate() const {
    require(n >= 1, ErrorKind::invalid_argument, "mechanism: horizon must be positive");
    require(static_cast<int>(swacs.size()) == n, ErrorKind::invalid_argument,
            "mechanism: need one SWAC per horizon");
    for (int h = n; h >= 1; --h) {
        const auto& m = swacs[static_cast<std::size_t>(n - h)];
        require(m.horizon() == h, ErrorKind::invalid_argument,
                "mechanism: SWAC at position " + std::to_string(n - h) +
                    " must have horizon " + std::to_string(h));
    }
    if (rewards) {
        rewards->validate();
        require(rewards->horizon() == n, ErrorKind::invalid_argument,
                "mechanism: reward table length must match the horizon");
    }
}

namespace {

RunLog run_episode(const RentalMechanism& mech, const std::vector<DistPtr>& per_horizon,
                   const RewardFn& g, Rng& rng, bool keep_log) {
    RunLog log;
    double reward = 0.0;
    std::vector<double> active; // remaining schedule of the current tenancy
    double renter_v = 0.0;
    std::size_t active_day = 0;
    for (int h = mech.n; h >= 1; --h) {
        const Distribution& d = *per_horizon[static_cast<std::size_t>(h - 1)];
        const double v = d.sample(rng);
        DayRecord rec;
        rec.horizon = h;
        rec.valuation = v;
        rec.available = active_day >= active.size();
        if (rec.available) {
            const FiniteMenuSwac& menu = mech.at_horizon(h);
            CostFn cost;
            const CostFn* cost_ptr = nullptr;
            if (mech.rewards) {
                cost = over_time_cost_fn(*mech.rewards, h);
                cost_ptr = &cost;
            }
            const BestResponse br = best_response(menu, v, &g, cost_ptr);
            rec.alloc = br.alloc;
            if (br.alloc >= 1) {
                active = menu.entries()[static_cast<std::size_t>(br.chosen_entry)].schedule.per_day;
                active_day = 0;
                renter_v = v;
            }
        }
        if (active_day < active.size()) {
            rec.payment = active[active_day];
            reward += g.eval(renter_v, rec.payment);
            ++active_day;
        }
        if (keep_log) log.days.push_back(rec);
    }
    log.total_reward = reward;
    return log;
}

} // namespace

SimResult simulate(const RentalMechanism& mech, const std::vector<DistPtr>& per_horizon,
                   const RewardFn& g, std::uint64_t seed, std::uint64_t episodes,
                   std::size_t keep_logs, int threads) {
    mech.validate();
    require(episodes >= 1, ErrorKind::invalid_argument, "simulate: need at least one episode");
    require(static_cast<int>(per_horizon.size()) == mech.n, ErrorKind::invalid_argument,
            "simulate: need one distribution per horizon");
    for (const auto& d : per_horizon)
        require(d != nullptr, ErrorKind::invalid_argument, "simulate: null distribution");

    if (threads <= 0) {
        threads = 1;
        if (const char* env = std::getenv("RENTAL_THREADS")) {
            const int t = std::atoi(env);
            if (t >= 1) threads = t;
        }
    }

    // Fixed chunking by episode index: per-chunk partial sums are reduced in
    // order, so the result is identical for any thread count.
    constexpr std::uint64_t kChunk = 4096;
    const std::uint64_t chunks = (episodes + kChunk - 1) / kChunk;
    std::vector<double> sum(chunks, 0.0), sumsq(chunks, 0.0);

    SimResult out;
    out.episodes = episodes;
    keep_logs = static_cast<std::size_t>(std::min<std::uint64_t>(keep_logs, episodes));
    out.logs.resize(keep_logs);

    auto work = [&](std::uint64_t chunk_begin, std::uint64_t chunk_end) {
        for (std::uint64_t ci = chunk_begin; ci < chunk_end; ++ci) {
            const std::uint64_t e0 = ci * kChunk;
            const std::uint64_t e1 = std::min(episodes, e0 + kChunk);
            double s = 0.0, ss = 0.0;
            for (std::uint64_t e = e0; e < e1; ++e) {
                Rng rng = Rng::for_stream(seed, e);
                const bool keep = e < keep_logs;
                RunLog log = run_episode(mech, per_horizon, g, rng, keep);
                s += log.total_reward;
                ss += log.total_reward * log.total_reward;
                if (keep) out.logs[static_cast<std::size_t>(e)] = std::move(log);
            }
            sum[ci] = s;
            sumsq[ci] = ss;
        }
    };

    if (threads == 1 || chunks == 1) {
        work(0, chunks);
    } else {
        const std::uint64_t t = std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), chunks);
        std::vector<std::thread> pool;
        for (std::uint64_t i = 0; i < t; ++i) {
            const std::uint64_t b = chunks * i / t, e = chunks * (i + 1) / t;
            pool.emplace_back(work, b, e);
        }
        for (auto& th : pool) th.join();
    }

    // Pairwise reduction over the chunk sums.
    const auto reduce = [](std::vector<double> xs) {
        while (xs.size() > 1) {
            std::vector<double> next((xs.size() + 1) / 2, 0.0);
            for (std::size_t i = 0; i < xs.size(); ++i) next[i / 2] += xs[i];
            xs = std::move(next);
        }
        return xs.empty() ? 0.0 : xs[0];
    };
    const double S = reduce(sum), SS = reduce(sumsq);
    const double mean = S / static_cast<double>(episodes);
    out.mean = mean;
    if (episodes > 1) {
        const double var = std::max(0.0, (SS - S * mean) / static_cast<double>(episodes - 1));
        out.stderr_ = std::sqrt(var / static_cast<double>(episodes));
    }
    return out;
}

ReplayReport replay(const RunLog& log, const RewardFn& g) {
    ReplayReport rep;
    rep.days_checked = log.days.size();
    double reward = 0.0;
    std::size_t remaining = 0; // days left in the active tenancy
    double renter_v = 0.0;
    double cum_pay = 0.0;
    std::size_t tenancy_day = 0;
    for (std::size_t i = 0; i < log.days.size(); ++i) {
        const DayRecord& r = log.days[i];
        const bool expect_available = remaining == 0;
        if (r.available != expect_available)
            rep.inconsistencies.push_back("day " + std::to_string(i) +
                                          ": availability flag mismatch");
        if (!r.available && r.alloc != 0)
            rep.inconsistencies.push_back("day " + std::to_string(i) +
                                          ": allocation while the asset is busy");
        if (r.available && r.alloc > 0) {
            remaining = static_cast<std::size_t>(r.alloc);
            renter_v = r.valuation;
            cum_pay = 0.0;
            tenancy_day = 0;
        }
        if (remaining > 0) {
            cum_pay += r.payment;
            ++tenancy_day;
            const double cum_util = static_cast<double>(tenancy_day) * renter_v - cum_pay;
            if (cum_util < -1e-9)
                rep.inconsistencies.push_back("day " + std::to_string(i) +
                                              ": stagewise-IR violated (cumulative utility " +
                                              std::to_string(cum_util) + ")");
            reward += g.eval(renter_v, r.payment);
            --remaining;
        } else if (r.payment != 0.0) {
            rep.inconsistencies.push_back("day " + std::to_string(i) +
                                          ": payment charged while the asset is free");
        }
    }
    if (std::abs(reward - log.total_reward) > 1e-9)
        rep.inconsistencies.push_back("total reward mismatch: recomputed " +
                                      std::to_string(reward) + " vs recorded " +
                                      std::to_string(log.total_reward));
    return rep;
}

// --- serialization -------------------------------------------------------

std::string RentalMechanism::to_json_string() const {
    json j;
    j["kind"] = "rental_mechanism";
    j["horizon"] = n;
    if (rewards) j["reward_table"] = rewards->r;
    j["swacs"] = json::array();
    for (const auto& m : swacs) j["swacs"].push_back(json::parse(m.to_json_string()));
    return j.dump(2);
}

RentalMechanism RentalMechanism::from_json_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& ex) {
        raise(ErrorKind::config, std::string("mechanism: invalid json: ") + ex.what());
    }
    try {
        RentalMechanism mech;
        mech.n = j.at("horizon").get<int>();
        if (j.contains("reward_table")) {
            RewardTable t;
            t.r = j.at("reward_table").get<std::vector<double>>();
            mech.rewards = std::move(t);
        }
        for (const auto& jm : j.at("swacs"))
            mech.swacs.push_back(FiniteMenuSwac::from_json_string(jm.dump()));
        mech.validate();
        return mech;
    } catch (const json::exception& ex) {
        raise(ErrorKind::config, std::string("mechanism: ") + ex.what());
    }
}

namespace {

void append_double(std::string& out, double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x,
                                   std::chars_format::general, 17);
    out.append(buf, res.ptr);
}

} // namespace

std::string runlogs_to_csv(const std::vector<RunLog>& logs) {
    std::string out = "episode,horizon,valuation,available,alloc,payment,episode_total\n";
    for (std::size_t e = 0; e < logs.size(); ++e) {
        for (const auto& r : logs[e].days) {
            out += std::to_string(e);
            out += ',';
            out += std::to_string(r.horizon);
            out += ',';
            append_double(out, r.valuation);
            out += ',';
            out += r.available ? '1' : '0';
            out += ',';
            out += std::to_string(r.alloc);
            out += ',';
            append_double(out, r.payment);
            out += ',';
            append_double(out, logs[e].total_reward);
            out += '\n';
        }
    }
    return out;
}

std::vector<RunLog> runlogs_from_csv(const std::string& csv) {
    std::vector<RunLog> logs;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        require(fields.size() == 7, ErrorKind::io, "run log csv: malformed row");
        const std::size_t e = static_cast<std::size_t>(std::stoull(fields[0]));
        if (e >= logs.size()) logs.resize(e + 1);
        DayRecord r;
        r.horizon = std::stoi(fields[1]);
        r.valuation = std::stod(fields[2]);
        r.available = fields[3] == "1";
        r.alloc = std::stoi(fields[4]);
        r.payment = std::stod(fields[5]);
        logs[e].days.push_back(r);
        logs[e].total_reward = std::stod(fields[6]);
    }
    return logs;
}

} // namespace rental

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rental/cost.hpp"
#include "rental/distribution.hpp"
#include "rental/swac.hpp"

namespace rental {

// A fixed sequence of SWACs, one per horizon n..1. The optional reward table
// supplies over-time costs for seller-favoring tie breaks and audits.
struct RentalMechanism {
    int n = 0;
    std::vector<FiniteMenuSwac> swacs; // swacs[i] handles horizon n - i
    std::optional<RewardTable> rewards;

    const FiniteMenuSwac& at_horizon(int h) const {
        require(h >= 1 && h <= n, ErrorKind::invalid_argument,
                "mechanism: horizon out of range");
        return swacs[static_cast<std::size_t>(n - h)];
    }

    void validate() const;

    std::string to_json_string() const;
    static RentalMechanism from_json_string(const std::string& text);
};

struct DayRecord {
    int horizon = 0;
    double valuation = 0.0; // the arriving agent, sampled even when busy
    bool available = false;
    int alloc = 0;          // allocation granted to the arriving agent
    double payment = 0.0;   // payment charged this day under the active tenancy
};

struct RunLog {
    std::vector<DayRecord> days;
    double total_reward = 0.0;
};

struct SimResult {
    double mean = 0.0;
    double stderr_ = 0.0;
    std::uint64_t episodes = 0;
    std::vector<RunLog> logs; // first `keep_logs` episodes
};

// Monte-Carlo estimate of the mechanism's expected reward. Episode e uses
// the generator stream (seed, e); one valuation is drawn per day regardless
// of availability, so two mechanisms simulated with the same seed face the
// same agent stream. Aggregation is chunked by episode index and therefore
// identical for any thread count. `threads` <= 0 reads RENTAL_THREADS
// (default 1).
SimResult simulate(const RentalMechanism& mech, const std::vector<DistPtr>& per_horizon,
                   const RewardFn& g, std::uint64_t seed, std::uint64_t episodes,
                   std::size_t keep_logs = 0, int threads = 0);

struct ReplayReport {
    std::size_t days_checked = 0;
    std::vector<std::string> inconsistencies;
    bool ok() const { return inconsistencies.empty(); }
};

// Re-verifies a log: availability bookkeeping, stagewise-IR of every tenancy
// prefix, and the reward arithmetic against the recorded total.
ReplayReport replay(const RunLog& log, const RewardFn& g);

std::string runlogs_to_csv(const std::vector<RunLog>& logs);
std::vector<RunLog> runlogs_from_csv(const std::string& csv);

} // namespace rental

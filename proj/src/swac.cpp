#include "rental/swac.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

namespace rental {

using nlohmann::json;

namespace {

constexpr double kTieTol = 1e-12;

// E[sum_i g(v, p_i) | region] for one entry; schedules only matter through
// the total because g is linear in the payment.
double region_gross(const MenuEntry& e, const RewardFn& g, const Distribution& d, double a,
                    double b) {
    if (e.alloc == 0) return 0.0;
    const double x = static_cast<double>(e.alloc);
    if (g.is_linear()) return x * g.alpha() * d.cond_mean(a, b) + g.beta() * e.total();
    // Tabulated welfare: integrate f over the region in quantile space.
    const double qa = d.cdf(a), qb = d.cdf(b);
    const int k = 2048;
    double acc = 0.0, prev = g.eval(d.quantile(qa), 0.0);
    for (int i = 1; i <= k; ++i) {
        const double q = qa + (qb - qa) * static_cast<double>(i) / k;
        const double cur = g.eval(d.quantile(q), 0.0);
        acc += 0.5 * (prev + cur);
        prev = cur;
    }
    acc *= (qb - qa) / k;
    return x * acc / (qb - qa);
}

double gross_at(const MenuEntry& e, const RewardFn& g, double v) {
    if (e.alloc == 0) return 0.0;
    return static_cast<double>(e.alloc) * g.eval(v, e.total() / static_cast<double>(e.alloc));
}

} // namespace

double PaymentSchedule::total() const {
    double s = 0.0;
    for (double p : per_day) s += p;
    return s;
}

double PaymentSchedule::filter() const {
    double best = 0.0, cum = 0.0;
    for (std::size_t i = 0; i < per_day.size(); ++i) {
        cum += per_day[i];
        best = std::max(best, cum / static_cast<double>(i + 1));
    }
    return best;
}

void PaymentSchedule::validate() const {
    for (double p : per_day)
        require(p >= 0.0 && std::isfinite(p), ErrorKind::invalid_argument,
                "payment schedule: payments must be nonnegative and finite");
}

PaymentSchedule PaymentSchedule::canonical(int alloc, double total, double filter) {
    require(alloc >= 0, ErrorKind::invalid_argument, "schedule: negative allocation");
    if (alloc == 0) {
        require(total == 0.0, ErrorKind::invalid_argument, "schedule: payment without allocation");
        return {};
    }
    const double rate = total / static_cast<double>(alloc);
    require(filter >= rate - 1e-9, ErrorKind::invalid_argument,
            "schedule: filter below the average payment is not realizable");
    require(filter <= total + 1e-9, ErrorKind::invalid_argument,
            "schedule: filter above the total payment is not realizable");
    filter = std::clamp(filter, rate, total);
    PaymentSchedule s;
    s.per_day.assign(static_cast<std::size_t>(alloc), 0.0);
    s.per_day[0] = filter;
    if (alloc > 1) {
        const double rest = (total - filter) / static_cast<double>(alloc - 1);
        for (int i = 1; i < alloc; ++i) s.per_day[static_cast<std::size_t>(i)] = rest;
    }
    s.validate();
    return s;
}

PaymentSchedule PaymentSchedule::fixed_rate(int alloc, double total) {
    if (alloc == 0) return canonical(0, total, 0.0);
    return canonical(alloc, total, total / static_cast<double>(alloc));
}

FiniteMenuSwac::FiniteMenuSwac(int horizon, std::vector<MenuEntry> entries)
    : horizon_(horizon), entries_(std::move(entries)) {
    require(horizon_ >= 1, ErrorKind::invalid_argument, "menu: horizon must be positive");
    require(!entries_.empty(), ErrorKind::invalid_argument, "menu: no entries");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& e = entries_[i];
        require(e.left < e.right, ErrorKind::invalid_argument, "menu: entry interval is empty");
        require(e.alloc >= 0 && e.alloc <= horizon_, ErrorKind::invalid_argument,
                "menu: allocation exceeds horizon");
        require(static_cast<int>(e.schedule.per_day.size()) == e.alloc,
                ErrorKind::invalid_argument, "menu: schedule length must equal allocation");
        e.schedule.validate();
        if (i > 0)
            require(std::abs(e.left - entries_[i - 1].right) <= 1e-9,
                    ErrorKind::invalid_argument, "menu: entries must be adjacent");
    }
}

int FiniteMenuSwac::entry_containing(double v) const {
    require(v >= support_lo() - 1e-12 && v <= support_hi() + 1e-12, ErrorKind::invalid_argument,
            "menu: valuation outside support");
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
        if (v < entries_[i].right) return static_cast<int>(i);
    return static_cast<int>(entries_.size()) - 1;
}

BestResponse best_response(const FiniteMenuSwac& m, double v, const RewardFn* g,
                           const CostFn* c) {
    // Walking away (the always-available zero-allocation option) is the
    // starting incumbent; its utility and designer reward are both 0.
    BestResponse br;
    double best_u = 0.0, best_rew = 0.0;
    for (std::size_t i = 0; i < m.entries().size(); ++i) {
        const auto& e = m.entries()[i];
        if (e.filter() > v + kTieTol) continue;
        br.feasible.push_back(static_cast<int>(i));
        const double u = static_cast<double>(e.alloc) * v - e.total();
        const double tol = kTieTol * (1.0 + std::abs(u) + std::abs(best_u));
        bool better = false;
        if (u > best_u + tol) {
            better = true;
        } else if (u >= best_u - tol) {
            // Utility tie: the seller's reward decides when the context is
            // known, then the lower entry index; a tied entry displaces the
            // walk-away outcome.
            if (g) {
                const double rew = gross_at(e, *g, v) - (c ? (*c)(e.alloc) : 0.0);
                const double rtol = kTieTol * (1.0 + std::abs(rew) + std::abs(best_rew));
                if (rew > best_rew + rtol || (rew >= best_rew - rtol && br.chosen_entry < 0))
                    better = true;
            } else if (br.chosen_entry < 0) {
                better = true;
            }
        }
        if (better) {
            best_u = std::max(best_u, u);
            if (g) best_rew = gross_at(e, *g, v) - (c ? (*c)(e.alloc) : 0.0);
            br.chosen_entry = static_cast<int>(i);
            br.alloc = e.alloc;
            br.total = e.total();
        }
    }
    br.utility = br.chosen_entry >= 0 ? static_cast<double>(br.alloc) * v - br.total : 0.0;
    return br;
}

double designer_reward(const FiniteMenuSwac& m, const RewardFn& g, const CostFn& c, double v) {
    const BestResponse br = best_response(m, v, &g, &c);
    if (br.chosen_entry < 0) return 0.0;
    const auto& e = m.entries()[static_cast<std::size_t>(br.chosen_entry)];
    return gross_at(e, g, v) - c(e.alloc);
}

double expected_reward(const FiniteMenuSwac& m, const RewardFn& g, const CostFn& c,
                       const Distribution& d) {
    const double lo = std::max(m.support_lo(), d.lo());
    const double hi = std::min(m.support_hi(), d.hi());
    require(hi > lo, ErrorKind::invalid_argument,
            "expected_reward: menu and distribution supports do not overlap");

    std::vector<double> cuts{lo, hi};
    const auto& es = m.entries();
    for (const auto& e : es) {
        cuts.push_back(e.filter());
        if (e.alloc > 0) cuts.push_back(e.total() / static_cast<double>(e.alloc));
    }
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            if (es[i].alloc == es[j].alloc) continue;
            cuts.push_back((es[i].total() - es[j].total()) /
                           static_cast<double>(es[i].alloc - es[j].alloc));
        }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [](double a, double b) { return std::abs(a - b) <= 1e-12; }),
               cuts.end());

    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = std::max(cuts[i], lo), b = std::min(cuts[i + 1], hi);
        if (b <= a) continue;
        const double prob = d.interval_prob(a, b);
        if (prob <= 0.0) continue;
        const BestResponse br = best_response(m, 0.5 * (a + b), &g, &c);
        if (br.chosen_entry < 0) continue;
        const auto& e = es[static_cast<std::size_t>(br.chosen_entry)];
        acc += prob * (region_gross(e, g, d, a, b) - c(e.alloc));
    }
    return acc;
}

TruthfulReport audit_truthful(const FiniteMenuSwac& m, int grid) {
    require(grid >= 100, ErrorKind::invalid_argument, "audit_truthful: grid must be >= 100");
    TruthfulReport rep;
    rep.grid = grid;
    const double lo = m.support_lo(), hi = m.support_hi();
    for (int k = 0; k < grid; ++k) {
        const double v = lo + (hi - lo) * static_cast<double>(k) / (grid - 1);
        const int ci = m.entry_containing(v);
        const auto& ce = m.entries()[static_cast<std::size_t>(ci)];
        // Truthful outcome: the containing entry when affordable, else walk
        // away. Truthful bidding must be weakly optimal: flag only strict
        // utility gains from leaving the own interval (outcome ties, e.g.
        // duplicate entries or indifference points, are not violations).
        int t_alloc = 0;
        double t_total = 0.0;
        if (ce.filter() <= v + kTieTol) {
            t_alloc = ce.alloc;
            t_total = ce.total();
        }
        const double t_utility = static_cast<double>(t_alloc) * v - t_total;
        const BestResponse br = best_response(m, v);
        const bool same_outcome = br.alloc == t_alloc && std::abs(br.total - t_total) <= 1e-9;
        const bool strict_gain = br.utility > t_utility + 1e-9 * (1.0 + std::abs(br.utility));
        if (!same_outcome && strict_gain)
            rep.violations.push_back({v, br.chosen_entry, ci});
    }
    return rep;
}

MonotoneReport audit_monotone(const FiniteMenuSwac& m, const RewardFn& g, const CostFn& c,
                              int grid) {
    require(grid >= 100, ErrorKind::invalid_argument, "audit_monotone: grid must be >= 100");
    MonotoneReport rep;
    rep.grid = grid;
    const double lo = m.support_lo(), hi = m.support_hi();
    std::vector<double> vs;
    vs.reserve(static_cast<std::size_t>(grid) + m.entries().size());
    for (int k = 0; k < grid; ++k)
        vs.push_back(lo + (hi - lo) * static_cast<double>(k) / (grid - 1));
    for (const auto& e : m.entries()) vs.push_back(e.left);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());

    int max_alloc = -1;
    double max_alloc_at = lo;
    double max_rew = -std::numeric_limits<double>::infinity();
    double max_rew_at = lo;
    for (double v : vs) {
        const BestResponse br = best_response(m, v, &g, &c);
        const double rew = designer_reward(m, g, c, v);
        if (br.alloc < max_alloc)
            rep.allocation.push_back({max_alloc_at, v, static_cast<double>(max_alloc),
                                      static_cast<double>(br.alloc)});
        if (br.alloc > max_alloc) {
            max_alloc = br.alloc;
            max_alloc_at = v;
        }
        if (rew < max_rew - 1e-9) rep.reward.push_back({max_rew_at, v, max_rew, rew});
        if (rew > max_rew) {
            max_rew = rew;
            max_rew_at = v;
        }
    }
    return rep;
}

PropsReport audit_props(const FiniteMenuSwac& m, const RewardFn& g, const CostFn& c, int grid) {
    require(grid >= 100, ErrorKind::invalid_argument, "audit_props: grid must be >= 100");
    PropsReport rep;
    rep.grid = grid;
    const double lo = m.support_lo(), hi = m.support_hi();
    std::vector<double> vs;
    for (int k = 0; k < grid; ++k)
        vs.push_back(lo + (hi - lo) * static_cast<double>(k) / (grid - 1));
    for (const auto& e : m.entries()) vs.push_back(e.left);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());

    std::vector<BestResponse> brs;
    brs.reserve(vs.size());
    for (double v : vs) brs.push_back(best_response(m, v, &g, &c));

    // Prop 4.1: among equal allocations, the higher valuation pays no more.
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (brs[i].alloc != brs[j].alloc || brs[i].alloc == 0) continue;
            if (brs[i].total < brs[j].total - 1e-9)
                rep.decreasing_payments.push_back({vs[i], vs[j], brs[i].total, brs[j].total});
        }

    // Prop 4.2: switching benefit ordering; linear in the valuation, so
    // adjacent grid pairs imply all pairs.
    const auto& es = m.entries();
    for (std::size_t a = 0; a < es.size(); ++a)
        for (std::size_t b = 0; b < es.size(); ++b) {
            if (es[a].alloc <= es[b].alloc) continue; // need x(b) > x(b')
            for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
                const double w = vs[k], v = vs[k + 1];
                if (w >= v) continue;
                auto benefit = [&](double z) {
                    return (static_cast<double>(es[b].alloc) * z - es[b].total()) -
                           (static_cast<double>(es[a].alloc) * z - es[a].total());
                };
                if (!(benefit(w) > benefit(v)))
                    rep.benefit_swap.push_back({w, v, benefit(w), benefit(v)});
            }
        }

    // Prop 4.3: allocation violations must be filter-driven.
    int max_alloc = -1;
    std::size_t max_at = 0;
    for (std::size_t j = 0; j < vs.size(); ++j) {
        if (brs[j].alloc < max_alloc) {
            const double w = vs[max_at], v = vs[j];
            if (brs[j].chosen_entry >= 0) {
                const auto& ev = es[static_cast<std::size_t>(brs[j].chosen_entry)];
                const bool filtered = ev.filter() > w + 1e-12;
                const bool pay_covers = ev.total() >= ev.filter() - 1e-9;
                const double uw_at_v = static_cast<double>(ev.alloc) * w - ev.total();
                const bool would_gain = uw_at_v > brs[max_at].utility + 1e-12;
                if (!(filtered && pay_covers && would_gain))
                    rep.filter_explains.push_back({w, v, ev.filter(), w});
            }
        }
        if (brs[j].alloc > max_alloc) {
            max_alloc = brs[j].alloc;
            max_at = j;
        }
    }
    return rep;
}

// --- serialization -------------------------------------------------------

std::string FiniteMenuSwac::to_json_string() const {
    json j;
    j["horizon"] = horizon_;
    j["entries"] = json::array();
    for (const auto& e : entries_) {
        j["entries"].push_back({{"left", e.left},
                                {"right", e.right},
                                {"alloc", e.alloc},
                                {"total", e.total()},
                                {"filter", e.filter()}});
    }
    return j.dump();
}

FiniteMenuSwac FiniteMenuSwac::from_json_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& ex) {
        raise(ErrorKind::config, std::string("menu: invalid json: ") + ex.what());
    }
    try {
        const int horizon = j.at("horizon").get<int>();
        std::vector<MenuEntry> entries;
        for (const auto& je : j.at("entries")) {
            MenuEntry e;
            e.left = je.at("left").get<double>();
            e.right = je.at("right").get<double>();
            e.alloc = je.at("alloc").get<int>();
            const double total = je.at("total").get<double>();
            const double filter = je.contains("filter")
                                      ? je.at("filter").get<double>()
                                      : (e.alloc > 0 ? total / e.alloc : 0.0);
            e.schedule = PaymentSchedule::canonical(e.alloc, total, filter);
            entries.push_back(std::move(e));
        }
        return FiniteMenuSwac(horizon, std::move(entries));
    } catch (const json::exception& ex) {
        raise(ErrorKind::config, std::string("menu: ") + ex.what());
    }
}

namespace {

json pair_violations_json(const std::vector<PairViolation>& vs) {
    json arr = json::array();
    for (const auto& p : vs) arr.push_back({{"w", p.w}, {"v", p.v}, {"lhs", p.lhs}, {"rhs", p.rhs}});
    return arr;
}

} // namespace

std::string TruthfulReport::to_json_string() const {
    json j;
    j["grid"] = grid;
    j["truthful"] = ok();
    j["violations"] = json::array();
    for (const auto& t : violations)
        j["violations"].push_back({{"v", t.v}, {"chosen", t.chosen}, {"containing", t.containing}});
    return j.dump();
}

std::string MonotoneReport::to_json_string() const {
    json j;
    j["grid"] = grid;
    j["allocation_monotone"] = allocation_monotone();
    j["reward_monotone"] = reward_monotone();
    j["allocation_violations"] = pair_violations_json(allocation);
    j["reward_violations"] = pair_violations_json(reward);
    return j.dump();
}

std::string PropsReport::to_json_string() const {
    json j;
    j["grid"] = grid;
    j["ok"] = ok();
    j["decreasing_payments"] = pair_violations_json(decreasing_payments);
    j["benefit_swap"] = pair_violations_json(benefit_swap);
    j["filter_explains"] = pair_violations_json(filter_explains);
    return j.dump();
}

} // namespace rental

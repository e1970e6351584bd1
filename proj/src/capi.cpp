#include "rental.h"

#include <cstring>
#include <string>

#include "rental/config.hpp"
#include "rental/fixed_rate.hpp"
#include "rental/oracle.hpp"
#include "rental/sim.hpp"
#include "rental/threshold.hpp"

struct rental_dist { rental::DistPtr d; };
struct rental_reward { rental::RewardFn g = rental::RewardFn::linear(1.0, 0.0); };
struct rental_rng { rental::Rng rng{0}; };
struct rental_ironed { std::shared_ptr<const rental::IronedFn> f; };
struct rental_cost { rental::CostFn c; };
struct rental_menu { rental::FiniteMenuSwac m; };
struct rental_fr_plans { rental::FixedRatePlans p; };
struct rental_threshold_plan { rental::ThresholdPlan p; };
struct rental_mechanism { rental::RentalMechanism m; };
struct rental_sim_result { rental::SimResult r; };

namespace {

thread_local std::string t_last_error;

template <typename F>
rental_status guarded(F&& f) {
    try {
        f();
        return RENTAL_OK;
    } catch (const rental::Error& e) {
        t_last_error = e.what();
        return static_cast<rental_status>(static_cast<int>(e.kind()));
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return RENTAL_ERR_INTERNAL;
    }
}

void need(bool cond, const char* what) {
    rental::require(cond, rental::ErrorKind::invalid_argument, what);
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

extern "C" {

const char* rental_version(void) { return "0.1.0"; }

const char* rental_last_error(void) { return t_last_error.c_str(); }

void rental_string_free(char* s) { delete[] s; }

/* --- distributions ----------------------------------------------------- */

rental_status rental_dist_uniform(double lo, double hi, rental_dist** out) {
    return guarded([&] {
        need(out, "null out pointer");
        *out = new rental_dist{
            std::make_shared<const rental::Distribution>(rental::Distribution::uniform(lo, hi))};
    });
}

rental_status rental_dist_grid(const double* vs, const double* Fs, size_t k,
                               size_t quantile_grid, rental_dist** out) {
    return guarded([&] {
        need(out && vs && Fs, "null pointer");
        std::vector<std::array<double, 2>> pts(k);
        for (size_t i = 0; i < k; ++i) pts[i] = {vs[i], Fs[i]};
        *out = new rental_dist{std::make_shared<const rental::Distribution>(
            rental::Distribution::from_cdf_points(pts, quantile_grid ? quantile_grid : 10000))};
    });
}

rental_status rental_dist_from_json(const char* json_text, rental_dist** out) {
    return guarded([&] {
        need(out && json_text, "null pointer");
        *out = new rental_dist{std::make_shared<const rental::Distribution>(
            rental::distribution_from_json(json_text))};
    });
}

void rental_dist_free(rental_dist* d) { delete d; }

double rental_dist_lo(const rental_dist* d) { return d ? d->d->lo() : 0.0; }
double rental_dist_hi(const rental_dist* d) { return d ? d->d->hi() : 0.0; }

rental_status rental_dist_cdf(const rental_dist* d, double v, double* out) {
    return guarded([&] {
        need(d && out, "null pointer");
        *out = d->d->cdf(v);
    });
}

rental_status rental_dist_pdf(const rental_dist* d, double v, double* out) {
    return guarded([&] {
        need(d && out, "null pointer");
        *out = d->d->pdf(v);
    });
}

rental_status rental_dist_quantile(const rental_dist* d, double q, double* out) {
    return guarded([&] {
        need(d && out, "null pointer");
        *out = d->d->quantile(q);
    });
}

rental_status rental_dist_cond_mean(const rental_dist* d, double a, double b, double* out) {
    return guarded([&] {
        need(d && out, "null pointer");
        *out = d->d->cond_mean(a, b);
    });
}

rental_status rental_dist_interval_prob(const rental_dist* d, double a, double b, double* out) {
    return guarded([&] {
        need(d && out, "null pointer");
        *out = d->d->interval_prob(a, b);
    });
}

int rental_dist_equal(const rental_dist* a, const rental_dist* b) {
    if (!a || !b) return 0;
    return *a->d == *b->d ? 1 : 0;
}

rental_status rental_rng_create(uint64_t seed, rental_rng** out) {
    return guarded([&] {
        need(out, "null out pointer");
        *out = new rental_rng{rental::Rng(seed)};
    });
}

void rental_rng_free(rental_rng* r) { delete r; }

rental_status rental_dist_sample(const rental_dist* d, rental_rng* rng, double* out) {
    return guarded([&] {
        need(d && rng && out, "null pointer");
        *out = d->d->sample(rng->rng);
    });
}

/* --- rewards ------------------------------------------------------------ */

rental_status rental_reward_linear(double alpha, double beta, rental_reward** out) {
    return guarded([&] {
        need(out, "null out pointer");
        *out = new rental_reward{rental::RewardFn::linear(alpha, beta)};
    });
}

rental_status rental_reward_from_json(const char* json_text, rental_reward** out) {
    return guarded([&] {
        need(out && json_text, "null pointer");
        *out = new rental_reward{rental::reward_from_json(json_text)};
    });
}

void rental_reward_free(rental_reward* g) { delete g; }

const char* rental_reward_class(const rental_reward* g) {
    return g ? rental::reward_class_name(g->g.cls()) : "?";
}

rental_status rental_reward_eval(const rental_reward* g, double v, double p, double* out) {
    return guarded([&] {
        need(g && out, "null pointer");
        *out = g->g.eval(v, p);
    });
}

rental_status rental_revenue_virtual_value(const rental_dist* d, double v, double* out) {
    return guarded([&] {
        need(d && out, "null pointer");
        *out = rental::revenue_virtual_value(*d->d, v);
    });
}

rental_status rental_fr_virtual_value(const rental_reward* g, const rental_dist* d, double v,
                                      double* out) {
    return guarded([&] {
        need(g && d && out, "null pointer");
        *out = rental::fr_virtual_value(g->g, *d->d, v);
    });
}

rental_status rental_horizon_virtual_value(const rental_reward* g, const rental_dist* d,
                                           int horizon, double v, double* out) {
    return guarded([&] {
        need(g && d && out, "null pointer");
        *out = rental::horizon_virtual_value(g->g, *d->d, horizon, v);
    });
}

/* --- ironing ------------------------------------------------------------ */

rental_status rental_iron_fr(const rental_reward* g, const rental_dist* d, size_t grid,
                             rental_ironed** out) {
    return guarded([&] {
        need(g && d && out, "null pointer");
        auto dist = d->d;
        auto gg = g->g;
        auto theta = [gg, dist](double v) { return rental::fr_virtual_value(gg, *dist, v); };
        *out = new rental_ironed{std::make_shared<const rental::IronedFn>(
            rental::iron(theta, dist, grid ? grid : 10000))};
    });
}

rental_status rental_iron_horizon(const rental_reward* g, const rental_dist* d, int horizon,
                                  size_t grid, rental_ironed** out) {
    return guarded([&] {
        need(g && d && out, "null pointer");
        auto dist = d->d;
        auto gg = g->g;
        auto theta = [gg, dist, horizon](double v) {
            return rental::horizon_virtual_value(gg, *dist, horizon, v);
        };
        *out = new rental_ironed{std::make_shared<const rental::IronedFn>(
            rental::iron(theta, dist, grid ? grid : 10000))};
    });
}

rental_status rental_iron_custom(double (*theta)(double v, void* ctx), void* ctx,
                                 const rental_dist* d, size_t grid, rental_ironed** out) {
    return guarded([&] {
        need(theta && d && out, "null pointer");
        auto fn = [theta, ctx](double v) { return theta(v, ctx); };
        *out = new rental_ironed{std::make_shared<const rental::IronedFn>(
            rental::iron(fn, d->d, grid ? grid : 10000))};
    });
}

void rental_ironed_free(rental_ironed* f) { delete f; }

rental_status rental_ironed_eval(const rental_ironed* f, double v, double* out) {
    return guarded([&] {
        need(f && out, "null pointer");
        *out = f->f->eval(v);
    });
}

double rental_ironed_sup_inverse(const rental_ironed* f, double y) {
    return f ? f->f->sup_inverse(y) : 0.0;
}

/* --- costs and menus ----------------------------------------------------- */

rental_status rental_cost_create(const double* values, size_t count, rental_cost** out) {
    return guarded([&] {
        need(values && out, "null pointer");
        rental::CostFn c;
        c.values.assign(values, values + count);
        c.validate();
        *out = new rental_cost{std::move(c)};
    });
}

rental_status rental_cost_zero(int n, rental_cost** out) {
    return guarded([&] {
        need(out && n >= 0, "bad arguments");
        *out = new rental_cost{rental::CostFn::zero(n)};
    });
}

void rental_cost_free(rental_cost* c) { delete c; }

rental_status rental_menu_create(int horizon, const double* lefts, const double* rights,
                                 const int* allocs, const double* totals, const double* filters,
                                 size_t count, rental_menu** out) {
    return guarded([&] {
        need(lefts && rights && allocs && totals && out, "null pointer");
        std::vector<rental::MenuEntry> entries;
        for (size_t i = 0; i < count; ++i) {
            rental::MenuEntry e;
            e.left = lefts[i];
            e.right = rights[i];
            e.alloc = allocs[i];
            const double filter =
                filters ? filters[i] : (allocs[i] > 0 ? totals[i] / allocs[i] : 0.0);
            e.schedule = rental::PaymentSchedule::canonical(allocs[i], totals[i], filter);
            entries.push_back(std::move(e));
        }
        *out = new rental_menu{rental::FiniteMenuSwac(horizon, std::move(entries))};
    });
}

rental_status rental_menu_from_json(const char* json_text, rental_menu** out) {
    return guarded([&] {
        need(json_text && out, "null pointer");
        *out = new rental_menu{rental::FiniteMenuSwac::from_json_string(json_text)};
    });
}

void rental_menu_free(rental_menu* m) { delete m; }

rental_status rental_menu_to_json(const rental_menu* m, char** out) {
    return guarded([&] {
        need(m && out, "null pointer");
        *out = dup_string(m->m.to_json_string());
    });
}

int rental_menu_horizon(const rental_menu* m) { return m ? m->m.horizon() : 0; }

size_t rental_menu_entry_count(const rental_menu* m) { return m ? m->m.entries().size() : 0; }

rental_status rental_menu_entry(const rental_menu* m, size_t i, double* left, double* right,
                                int* alloc, double* total, double* filter) {
    return guarded([&] {
        need(m, "null pointer");
        need(i < m->m.entries().size(), "entry index out of range");
        const auto& e = m->m.entries()[i];
        if (left) *left = e.left;
        if (right) *right = e.right;
        if (alloc) *alloc = e.alloc;
        if (total) *total = e.total();
        if (filter) *filter = e.filter();
    });
}

rental_status rental_best_response(const rental_menu* m, double v, const rental_reward* g,
                                   const rental_cost* c, int* entry, int* alloc, double* total,
                                   double* utility) {
    return guarded([&] {
        need(m, "null pointer");
        const rental::BestResponse br =
            rental::best_response(m->m, v, g ? &g->g : nullptr, c ? &c->c : nullptr);
        if (entry) *entry = br.chosen_entry;
        if (alloc) *alloc = br.alloc;
        if (total) *total = br.total;
        if (utility) *utility = br.utility;
    });
}

rental_status rental_designer_reward(const rental_menu* m, const rental_reward* g,
                                     const rental_cost* c, double v, double* out) {
    return guarded([&] {
        need(m && g && c && out, "null pointer");
        *out = rental::designer_reward(m->m, g->g, c->c, v);
    });
}

rental_status rental_expected_reward(const rental_menu* m, const rental_reward* g,
                                     const rental_cost* c, const rental_dist* d, double* out) {
    return guarded([&] {
        need(m && g && c && d && out, "null pointer");
        *out = rental::expected_reward(m->m, g->g, c->c, *d->d);
    });
}

rental_status rental_audit_truthful(const rental_menu* m, int grid, int* violations,
                                    char** json) {
    return guarded([&] {
        need(m, "null pointer");
        const auto rep = rental::audit_truthful(m->m, grid);
        if (violations) *violations = static_cast<int>(rep.violations.size());
        if (json) *json = dup_string(rep.to_json_string());
    });
}

rental_status rental_audit_monotone(const rental_menu* m, const rental_reward* g,
                                    const rental_cost* c, int grid, int* alloc_monotone,
                                    int* reward_monotone, char** json) {
    return guarded([&] {
        need(m && g && c, "null pointer");
        const auto rep = rental::audit_monotone(m->m, g->g, c->c, grid);
        if (alloc_monotone) *alloc_monotone = rep.allocation_monotone() ? 1 : 0;
        if (reward_monotone) *reward_monotone = rep.reward_monotone() ? 1 : 0;
        if (json) *json = dup_string(rep.to_json_string());
    });
}

rental_status rental_audit_props(const rental_menu* m, const rental_reward* g,
                                 const rental_cost* c, int grid, int* ok, char** json) {
    return guarded([&] {
        need(m && g && c, "null pointer");
        const auto rep = rental::audit_props(m->m, g->g, c->c, grid);
        if (ok) *ok = rep.ok() ? 1 : 0;
        if (json) *json = dup_string(rep.to_json_string());
    });
}

/* --- fixed rate ----------------------------------------------------------*/

rental_status rental_fixed_rate_precompute(int n, const rental_dist* const* dists, size_t count,
                                           const rental_reward* g, size_t ironing_grid,
                                           int normalize_base_payment, rental_fr_plans** out) {
    return guarded([&] {
        need(dists && g && out, "null pointer");
        need(count == static_cast<size_t>(n), "need one distribution per horizon");
        std::vector<rental::DistPtr> ds;
        for (size_t i = 0; i < count; ++i) {
            need(dists[i], "null distribution");
            ds.push_back(dists[i]->d);
        }
        rental::FixedRateOptions opts;
        if (ironing_grid) opts.ironing_grid = ironing_grid;
        opts.normalize_base_payment = normalize_base_payment != 0;
        *out = new rental_fr_plans{rental::precompute_fixed_rate(n, ds, g->g, opts)};
    });
}

void rental_fr_plans_free(rental_fr_plans* p) { delete p; }

rental_status rental_fr_reward_at(const rental_fr_plans* p, int h, double* out) {
    return guarded([&] {
        need(p && out, "null pointer");
        *out = p->p.rewards[h];
    });
}

rental_status rental_fr_interval_count(const rental_fr_plans* p, int h, size_t* out) {
    return guarded([&] {
        need(p && out, "null pointer");
        *out = p->p.at(h).intervals.size();
    });
}

rental_status rental_fr_interval(const rental_fr_plans* p, int h, size_t i, double* left,
                                 double* right, int* alloc, double* pay, double* prob) {
    return guarded([&] {
        need(p, "null pointer");
        const auto& plan = p->p.at(h);
        need(i < plan.intervals.size(), "interval index out of range");
        const auto& J = plan.intervals[i];
        if (left) *left = J.left;
        if (right) *right = J.right;
        if (alloc) *alloc = J.alloc;
        if (pay) *pay = J.pay;
        if (prob) *prob = J.prob;
    });
}

rental_status rental_fr_run(const rental_fr_plans* p, int h, double v, int* alloc,
                            double* schedule, size_t* sched_len) {
    return guarded([&] {
        need(p && alloc, "null pointer");
        const auto [x, sched] = rental::run_fixed_rate_auction(p->p.at(h), v);
        *alloc = x;
        if (sched_len) *sched_len = sched.per_day.size();
        if (schedule)
            for (size_t i = 0; i < sched.per_day.size(); ++i) schedule[i] = sched.per_day[i];
    });
}

rental_status rental_fr_menu(const rental_fr_plans* p, int h, rental_menu** out) {
    return guarded([&] {
        need(p && out, "null pointer");
        *out = new rental_menu{rental::as_menu(p->p.at(h))};
    });
}

/* --- threshold ------------------------------------------------------------*/

rental_status rental_threshold_precompute(int n, const rental_dist* d, const rental_reward* g,
                                          size_t ironing_grid, rental_threshold_plan** out) {
    return guarded([&] {
        need(d && g && out, "null pointer");
        *out = new rental_threshold_plan{
            rental::precompute_threshold(n, d->d, g->g, ironing_grid ? ironing_grid : 10000)};
    });
}

void rental_threshold_plan_free(rental_threshold_plan* p) { delete p; }

rental_status rental_threshold_reward_at(const rental_threshold_plan* p, int h, double* out) {
    return guarded([&] {
        need(p && out, "null pointer");
        *out = p->p.rewards[h];
    });
}

rental_status rental_threshold_tau(const rental_threshold_plan* p, int h, double* out) {
    return guarded([&] {
        need(p && out, "null pointer");
        *out = p->p.tau(h);
    });
}

rental_status rental_threshold_run(const rental_threshold_plan* p, int h, double v, int* alloc,
                                   double* schedule, size_t* sched_len) {
    return guarded([&] {
        need(p && alloc, "null pointer");
        const auto [x, sched] = rental::run_threshold_auction(p->p, h, v);
        *alloc = x;
        if (sched_len) *sched_len = sched.per_day.size();
        if (schedule)
            for (size_t i = 0; i < sched.per_day.size(); ++i) schedule[i] = sched.per_day[i];
    });
}

rental_status rental_threshold_menu(const rental_threshold_plan* p, int h, rental_menu** out) {
    return guarded([&] {
        need(p && out, "null pointer");
        *out = new rental_menu{rental::threshold_menu(p->p, h)};
    });
}

rental_status rental_threshold_audit(const rental_threshold_plan* p, int grid, int* ok,
                                     char** json) {
    return guarded([&] {
        need(p, "null pointer");
        const auto rep = rental::audit_threshold_structure(p->p, grid > 0 ? grid : 1000);
        if (ok) *ok = rep.ok() ? 1 : 0;
        if (json) {
            std::string j = "{\"truthful\":";
            j += rep.truthful_ok ? "true" : "false";
            j += ",\"truthful_violations\":" + std::to_string(rep.truthful_violations);
            j += ",\"min_alloc\":" + std::to_string(rep.min_alloc);
            j += ",\"avg_reward_monotone\":";
            j += rep.avg_reward_ok ? "true" : "false";
            j += "}";
            *json = dup_string(j);
        }
    });
}

rental_status rental_uniform_recurrence(int n, double* taus, double* ells) {
    return guarded([&] {
        need(taus && ells, "null pointer");
        const auto rec = rental::uniform_recurrence(n);
        for (int i = 0; i <= n; ++i) {
            taus[i] = rec.taus[static_cast<size_t>(i)];
            ells[i] = rec.ells[static_cast<size_t>(i)];
        }
    });
}

/* --- mechanisms and simulation -------------------------------------------*/

rental_status rental_mechanism_create(int n, const rental_menu* const* menus, size_t count,
                                      const double* reward_table, rental_mechanism** out) {
    return guarded([&] {
        need(menus && out, "null pointer");
        rental::RentalMechanism mech;
        mech.n = n;
        for (size_t i = 0; i < count; ++i) {
            need(menus[i], "null menu");
            mech.swacs.push_back(menus[i]->m);
        }
        if (reward_table) {
            rental::RewardTable t;
            t.r.assign(reward_table, reward_table + n + 1);
            mech.rewards = std::move(t);
        }
        mech.validate();
        *out = new rental_mechanism{std::move(mech)};
    });
}

rental_status rental_mechanism_from_fr(const rental_fr_plans* p, rental_mechanism** out) {
    return guarded([&] {
        need(p && out, "null pointer");
        rental::RentalMechanism mech;
        mech.n = p->p.n;
        for (int h = p->p.n; h >= 1; --h) mech.swacs.push_back(rental::as_menu(p->p.at(h)));
        mech.rewards = p->p.rewards;
        mech.validate();
        *out = new rental_mechanism{std::move(mech)};
    });
}

rental_status rental_mechanism_from_threshold(const rental_threshold_plan* p,
                                              rental_mechanism** out) {
    return guarded([&] {
        need(p && out, "null pointer");
        rental::RentalMechanism mech;
        mech.n = p->p.n;
        for (int h = p->p.n; h >= 1; --h) mech.swacs.push_back(rental::threshold_menu(p->p, h));
        mech.rewards = p->p.rewards;
        mech.validate();
        *out = new rental_mechanism{std::move(mech)};
    });
}

rental_status rental_mechanism_from_json(const char* json_text, rental_mechanism** out) {
    return guarded([&] {
        need(json_text && out, "null pointer");
        *out = new rental_mechanism{rental::RentalMechanism::from_json_string(json_text)};
    });
}

rental_status rental_mechanism_to_json(const rental_mechanism* m, char** out) {
    return guarded([&] {
        need(m && out, "null pointer");
        *out = dup_string(m->m.to_json_string());
    });
}

void rental_mechanism_free(rental_mechanism* m) { delete m; }

int rental_mechanism_horizon(const rental_mechanism* m) { return m ? m->m.n : 0; }

rental_status rental_mechanism_menu(const rental_mechanism* m, int h, rental_menu** out) {
    return guarded([&] {
        need(m && out, "null pointer");
        *out = new rental_menu{m->m.at_horizon(h)};
    });
}

rental_status rental_mechanism_reward_table(const rental_mechanism* m, double* out, int* has) {
    return guarded([&] {
        need(m && out && has, "null pointer");
        *has = m->m.rewards.has_value() ? 1 : 0;
        if (m->m.rewards)
            for (int h = 0; h <= m->m.n; ++h) out[h] = (*m->m.rewards)[h];
    });
}

rental_status rental_simulate(const rental_mechanism* m, const rental_dist* const* dists,
                              size_t count, const rental_reward* g, uint64_t seed,
                              uint64_t episodes, size_t keep_logs, rental_sim_result** out) {
    return guarded([&] {
        need(m && dists && g && out, "null pointer");
        std::vector<rental::DistPtr> ds;
        for (size_t i = 0; i < count; ++i) {
            need(dists[i], "null distribution");
            ds.push_back(dists[i]->d);
        }
        *out = new rental_sim_result{
            rental::simulate(m->m, ds, g->g, seed, episodes, keep_logs)};
    });
}

void rental_sim_result_free(rental_sim_result* r) { delete r; }

double rental_sim_mean(const rental_sim_result* r) { return r ? r->r.mean : 0.0; }

double rental_sim_stderr(const rental_sim_result* r) { return r ? r->r.stderr_ : 0.0; }

rental_status rental_sim_runlog_csv(const rental_sim_result* r, char** out) {
    return guarded([&] {
        need(r && out, "null pointer");
        *out = dup_string(rental::runlogs_to_csv(r->r.logs));
    });
}

namespace {

rental_status replay_logs(const std::vector<rental::RunLog>& logs, const rental_reward* g,
                          int* ok, char** json) {
    return guarded([&] {
        need(g, "null pointer");
        std::size_t bad = 0, days = 0;
        std::string detail = "[";
        for (const auto& log : logs) {
            const auto rep = rental::replay(log, g->g);
            days += rep.days_checked;
            bad += rep.inconsistencies.size();
            for (const auto& s : rep.inconsistencies) {
                if (detail.size() > 1) detail += ",";
                detail += "\"" + s + "\"";
            }
        }
        detail += "]";
        if (ok) *ok = bad == 0 ? 1 : 0;
        if (json)
            *json = dup_string("{\"episodes\":" + std::to_string(logs.size()) +
                               ",\"days\":" + std::to_string(days) +
                               ",\"inconsistencies\":" + detail + "}");
    });
}

} // namespace

rental_status rental_sim_replay(const rental_sim_result* r, const rental_reward* g, int* ok,
                                char** json) {
    if (!r) return guarded([] { need(false, "null pointer"); });
    return replay_logs(r->r.logs, g, ok, json);
}

rental_status rental_replay_csv(const char* csv, const rental_reward* g, int* ok, char** json) {
    if (!csv) return guarded([] { need(false, "null pointer"); });
    try {
        return replay_logs(rental::runlogs_from_csv(csv), g, ok, json);
    } catch (const rental::Error& e) {
        t_last_error = e.what();
        return static_cast<rental_status>(static_cast<int>(e.kind()));
    }
}

/* --- oracle ----------------------------------------------------------------*/

rental_status rental_brute_force_menu(const double* points, const double* masses, size_t k,
                                      int horizon, const double* levels, size_t level_count,
                                      const rental_reward* g, const double* cost_values,
                                      size_t cost_count, double* best_value, int* outcome_alloc,
                                      double* outcome_total, double* outcome_filter) {
    return guarded([&] {
        need(points && masses && levels && g && cost_values && best_value, "null pointer");
        rental::DiscreteSetting s;
        s.grid.points.assign(points, points + k);
        s.grid.masses.assign(masses, masses + k);
        s.horizon = horizon;
        s.payment_levels.assign(levels, levels + level_count);
        s.g = g->g;
        s.c.values.assign(cost_values, cost_values + cost_count);
        const auto res = rental::brute_force_menu(s);
        *best_value = res.best_value;
        for (size_t t = 0; t < k; ++t) {
            if (outcome_alloc) outcome_alloc[t] = res.outcome[t].alloc;
            if (outcome_total) outcome_total[t] = res.outcome[t].total;
            if (outcome_filter) outcome_filter[t] = res.outcome[t].filter;
        }
    });
}

} /* extern "C" */

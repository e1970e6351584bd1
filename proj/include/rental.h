/* C API for the rental mechanism library.
 *
 * All functions return a rental_status (RENTAL_OK on success) unless they
 * are infallible getters. On failure, rental_last_error() returns a
 * thread-local message describing what went wrong. Objects are opaque
 * handles created by rental_*_create/_from_* functions and released with
 * the matching rental_*_free; freeing NULL is a no-op. Strings returned
 * through char** out-parameters are heap-allocated and must be released
 * with rental_string_free.
 */
#ifndef RENTAL_H
#define RENTAL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rental_status {
    RENTAL_OK = 0,
    RENTAL_ERR_INVALID_ARGUMENT = 1,
    RENTAL_ERR_CONFIG = 2,
    RENTAL_ERR_EMPTY_INTERVAL = 3,
    RENTAL_ERR_SINGULAR_VIRTUAL_VALUE = 4,
    RENTAL_ERR_HORIZON = 5,
    RENTAL_ERR_REWARD_CLASS = 6,
    RENTAL_ERR_REQUIRES_IID = 7,
    RENTAL_ERR_IR_VIOLATION = 8,
    RENTAL_ERR_SIZE_BOUND = 9,
    RENTAL_ERR_IO = 10,
    RENTAL_ERR_INTERNAL = 11
} rental_status;

typedef struct rental_dist rental_dist;
typedef struct rental_reward rental_reward;
typedef struct rental_rng rental_rng;
typedef struct rental_ironed rental_ironed;
typedef struct rental_cost rental_cost;
typedef struct rental_menu rental_menu;
typedef struct rental_fr_plans rental_fr_plans;
typedef struct rental_threshold_plan rental_threshold_plan;
typedef struct rental_mechanism rental_mechanism;
typedef struct rental_sim_result rental_sim_result;

const char* rental_version(void);
/* Message for the most recent failure on this thread. */
const char* rental_last_error(void);
void rental_string_free(char* s);

/* --- distributions ----------------------------------------------------- */

rental_status rental_dist_uniform(double lo, double hi, rental_dist** out);
/* vs/Fs: strictly increasing cdf knots, Fs[0] = 0, Fs[k-1] = 1. */
rental_status rental_dist_grid(const double* vs, const double* Fs, size_t k,
                               size_t quantile_grid, rental_dist** out);
/* {"kind":"uniform","lo":..,"hi":..} or {"kind":"grid","cdf_points":[[v,F],..]} */
rental_status rental_dist_from_json(const char* json_text, rental_dist** out);
void rental_dist_free(rental_dist* d);

double rental_dist_lo(const rental_dist* d);
double rental_dist_hi(const rental_dist* d);
rental_status rental_dist_cdf(const rental_dist* d, double v, double* out);
rental_status rental_dist_pdf(const rental_dist* d, double v, double* out);
rental_status rental_dist_quantile(const rental_dist* d, double q, double* out);
rental_status rental_dist_cond_mean(const rental_dist* d, double a, double b, double* out);
rental_status rental_dist_interval_prob(const rental_dist* d, double a, double b, double* out);
/* 1 if the two handles describe the same distribution. */
int rental_dist_equal(const rental_dist* a, const rental_dist* b);

rental_status rental_rng_create(uint64_t seed, rental_rng** out);
void rental_rng_free(rental_rng* r);
rental_status rental_dist_sample(const rental_dist* d, rental_rng* rng, double* out);

/* --- rewards and virtual values ----------------------------------------- */

/* g = alpha*v + beta*p with signed beta (beta < 0 is negative tradeoff). */
rental_status rental_reward_linear(double alpha, double beta, rental_reward** out);
/* {"class":"linear",...} or {"class":"welfare","f_points":[[v,f],..]} */
rental_status rental_reward_from_json(const char* json_text, rental_reward** out);
void rental_reward_free(rental_reward* g);
/* "welfare_like", "revenue_like", "positive_tradeoff" or "negative_tradeoff". */
const char* rental_reward_class(const rental_reward* g);
rental_status rental_reward_eval(const rental_reward* g, double v, double p, double* out);

rental_status rental_revenue_virtual_value(const rental_dist* d, double v, double* out);
rental_status rental_fr_virtual_value(const rental_reward* g, const rental_dist* d, double v,
                                      double* out);
rental_status rental_horizon_virtual_value(const rental_reward* g, const rental_dist* d,
                                           int horizon, double v, double* out);

/* --- ironing ------------------------------------------------------------ */

/* Irons the fixed-rate virtual value g(v, phi(v)). */
rental_status rental_iron_fr(const rental_reward* g, const rental_dist* d, size_t grid,
                             rental_ironed** out);
/* Irons the horizon-specific virtual value g(v, phi(v)/(h-1)). */
rental_status rental_iron_horizon(const rental_reward* g, const rental_dist* d, int horizon,
                                  size_t grid, rental_ironed** out);
/* Irons a caller-supplied theta(v). */
rental_status rental_iron_custom(double (*theta)(double v, void* ctx), void* ctx,
                                 const rental_dist* d, size_t grid, rental_ironed** out);
void rental_ironed_free(rental_ironed* f);
rental_status rental_ironed_eval(const rental_ironed* f, double v, double* out);
/* sup{v : ironed(v) <= y}; 0 when the set is empty. */
double rental_ironed_sup_inverse(const rental_ironed* f, double y);

/* --- costs and menus ----------------------------------------------------- */

/* values[x] = c(x) for x = 0..count-1; c(0) = 0, non-decreasing. */
rental_status rental_cost_create(const double* values, size_t count, rental_cost** out);
rental_status rental_cost_zero(int n, rental_cost** out);
void rental_cost_free(rental_cost* c);

/* entries described by parallel arrays of length count; filters may be NULL
 * for fixed-rate schedules. */
rental_status rental_menu_create(int horizon, const double* lefts, const double* rights,
                                 const int* allocs, const double* totals, const double* filters,
                                 size_t count, rental_menu** out);
rental_status rental_menu_from_json(const char* json_text, rental_menu** out);
void rental_menu_free(rental_menu* m);
rental_status rental_menu_to_json(const rental_menu* m, char** out);
int rental_menu_horizon(const rental_menu* m);
size_t rental_menu_entry_count(const rental_menu* m);
rental_status rental_menu_entry(const rental_menu* m, size_t i, double* left, double* right,
                                int* alloc, double* total, double* filter);

/* Best response of a stagewise-IR agent; entry = -1 when the agent walks
 * away. reward/cost may be NULL (they only break utility ties). */
rental_status rental_best_response(const rental_menu* m, double v, const rental_reward* g,
                                   const rental_cost* c, int* entry, int* alloc, double* total,
                                   double* utility);
rental_status rental_designer_reward(const rental_menu* m, const rental_reward* g,
                                     const rental_cost* c, double v, double* out);
rental_status rental_expected_reward(const rental_menu* m, const rental_reward* g,
                                     const rental_cost* c, const rental_dist* d, double* out);

/* Audit reports come back as JSON strings (see docs/formats.md). */
rental_status rental_audit_truthful(const rental_menu* m, int grid, int* violations, char** json);
rental_status rental_audit_monotone(const rental_menu* m, const rental_reward* g,
                                    const rental_cost* c, int grid, int* alloc_monotone,
                                    int* reward_monotone, char** json);
rental_status rental_audit_props(const rental_menu* m, const rental_reward* g,
                                 const rental_cost* c, int grid, int* ok, char** json);

/* --- fixed-rate mechanism (per-horizon interval construction) ----------- */

/* dists: one per horizon (dists[h-1] serves horizon h). */
rental_status rental_fixed_rate_precompute(int n, const rental_dist* const* dists, size_t count,
                                           const rental_reward* g, size_t ironing_grid,
                                           int normalize_base_payment, rental_fr_plans** out);
void rental_fr_plans_free(rental_fr_plans* p);
rental_status rental_fr_reward_at(const rental_fr_plans* p, int h, double* out);
rental_status rental_fr_interval_count(const rental_fr_plans* p, int h, size_t* out);
rental_status rental_fr_interval(const rental_fr_plans* p, int h, size_t i, double* left,
                                 double* right, int* alloc, double* pay, double* prob);
/* Allocation and equal-split schedule for bid v at horizon h. schedule may be
 * NULL; otherwise it must hold at least h doubles and *sched_len reports how
 * many were written. */
rental_status rental_fr_run(const rental_fr_plans* p, int h, double v, int* alloc,
                            double* schedule, size_t* sched_len);
rental_status rental_fr_menu(const rental_fr_plans* p, int h, rental_menu** out);

/* --- threshold mechanism (one-or-all, i.i.d. negative tradeoff) --------- */

rental_status rental_threshold_precompute(int n, const rental_dist* d, const rental_reward* g,
                                          size_t ironing_grid, rental_threshold_plan** out);
void rental_threshold_plan_free(rental_threshold_plan* p);
rental_status rental_threshold_reward_at(const rental_threshold_plan* p, int h, double* out);
/* tau is defined for h = 2..n. */
rental_status rental_threshold_tau(const rental_threshold_plan* p, int h, double* out);
rental_status rental_threshold_run(const rental_threshold_plan* p, int h, double v, int* alloc,
                                   double* schedule, size_t* sched_len);
rental_status rental_threshold_menu(const rental_threshold_plan* p, int h, rental_menu** out);
/* Structural audit: truthful menus, minimum allocation >= 1, R[i]/i
 * non-decreasing. ok is 1 when all three hold. */
rental_status rental_threshold_audit(const rental_threshold_plan* p, int grid, int* ok,
                                     char** json);

/* Closed-form Uniform[0,1] consumer-surplus iteration, n >= 4. taus[i] is
 * defined for i = 2..n and ells[i] = R[i]/i for i = 1..n; both arrays need
 * n+1 slots (index 0 unused). */
rental_status rental_uniform_recurrence(int n, double* taus, double* ells);

/* --- rental mechanisms and simulation ----------------------------------- */

/* menus[i] must have horizon n - i (n first). The reward table (length n+1)
 * is optional and enables over-time-cost tie breaking; pass NULL to omit. */
rental_status rental_mechanism_create(int n, const rental_menu* const* menus, size_t count,
                                      const double* reward_table, rental_mechanism** out);
rental_status rental_mechanism_from_fr(const rental_fr_plans* p, rental_mechanism** out);
rental_status rental_mechanism_from_threshold(const rental_threshold_plan* p,
                                              rental_mechanism** out);
rental_status rental_mechanism_from_json(const char* json_text, rental_mechanism** out);
rental_status rental_mechanism_to_json(const rental_mechanism* m, char** out);
void rental_mechanism_free(rental_mechanism* m);
int rental_mechanism_horizon(const rental_mechanism* m);
rental_status rental_mechanism_menu(const rental_mechanism* m, int h, rental_menu** out);
/* Reward table of the mechanism file, if present; out must hold n+1 doubles. */
rental_status rental_mechanism_reward_table(const rental_mechanism* m, double* out, int* has);

rental_status rental_simulate(const rental_mechanism* m, const rental_dist* const* dists,
                              size_t count, const rental_reward* g, uint64_t seed,
                              uint64_t episodes, size_t keep_logs, rental_sim_result** out);
void rental_sim_result_free(rental_sim_result* r);
double rental_sim_mean(const rental_sim_result* r);
double rental_sim_stderr(const rental_sim_result* r);
rental_status rental_sim_runlog_csv(const rental_sim_result* r, char** out);
/* Replays the kept logs: availability bookkeeping, stagewise-IR of every
 * tenancy prefix, reward arithmetic. ok is 1 when no inconsistencies. */
rental_status rental_sim_replay(const rental_sim_result* r, const rental_reward* g, int* ok,
                                char** json);
/* Same checks against an emitted CSV. */
rental_status rental_replay_csv(const char* csv, const rental_reward* g, int* ok, char** json);

/* --- brute-force oracle --------------------------------------------------*/

/* Exhaustive small-instance optimum: points/masses of length k (<= 12),
 * levels of length level_count (<= 12), horizon <= 4, cost table of length
 * horizon+1. Returns the optimum and, when outcome_* are non-NULL (length
 * k), the per-type best-response outcome of the best menu. */
rental_status rental_brute_force_menu(const double* points, const double* masses, size_t k,
                                      int horizon, const double* levels, size_t level_count,
                                      const rental_reward* g, const double* cost_values,
                                      size_t cost_count, double* best_value, int* outcome_alloc,
                                      double* outcome_total, double* outcome_filter);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RENTAL_H */

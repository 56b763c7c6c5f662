#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cmetas/curve.hpp"
#include "cmetas/params.hpp"

namespace cmetas::sim {

struct Event {
  std::int64_t id = 0;
  std::int64_t parent_id = -1;  // -1 for background events
  int generation = 0;           // 0 = spontaneous
  double time = 0.0;
  double magnitude = 0.0;
};

struct Catalog {
  std::vector<Event> events;  // sorted by (time, id)
  double window_start = 0.0;
  double window_end = 0.0;
  double burn_in_start = 0.0;
  std::string params_fingerprint;
};

// c (10^(4/theta) - 1), i.e. the lag where the Omori survival drops
// below 1e-4, capped at kBurnInCap * c.
inline constexpr double kBurnInCap = 1e5;
double default_burn_in(const ModelParams& p);

// Branching simulation on [-burn_in, T]: background events are a
// homogeneous Poisson process with GR magnitudes; each event of
// magnitude m' spawns Poisson(rho(m')) children with Omori delays and
// conditional magnitudes. Children past T are pruned immediately.
Catalog simulate_catalog(const ModelParams& p, double T, double burn_in, std::uint64_t seed);

// Times of in-window events with magnitude >= p.m, sorted.
std::vector<double> observable_times(const Catalog& cat, const ModelParams& p);

// Consecutive observable gaps pooled over independent replicas (gaps
// never straddle replica boundaries).
std::vector<double> interevent_samples(const ModelParams& p, double T, int replicas,
                                       std::uint64_t seed);

struct McOptions {
  double T = 1e4;        // window length per replica
  int replicas = 16;
  double burn_in = -1.0; // negative selects default_burn_in(p)
  int threads = 0;       // 0 selects hardware concurrency
};

// Fraction of randomly placed length-tau windows containing zero
// observable events, with replica-batched standard errors.
Curve zero_event_probability(const ModelParams& p, const std::vector<double>& tau_grid,
                             int n_windows, std::uint64_t seed, const McOptions& opt = {});

struct RateEstimate {
  double lambda_hat = 0.0;
  double se = 0.0;
  std::int64_t n_events = 0;
  double total_time = 0.0;
};
RateEstimate estimate_lambda(const ModelParams& p, double T, int replicas, std::uint64_t seed);

// CSV: '#' comment lines, header id,parent_id,generation,time,magnitude,
// empty parent_id for background, rows ordered by (time, id).
void write_catalog_csv(const Catalog& cat, const ModelParams& p, const std::string& path,
                       const std::vector<std::string>& extra_comments = {});

}  // namespace cmetas::sim

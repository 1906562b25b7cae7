#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "contam/engine.hpp"

namespace contam {

struct ExperimentConfig {
  std::vector<int> agents_per_side;
  int games_per_point = 100;
  std::uint64_t base_seed = 1;
  std::string strategy_healthy = "circle";
  std::string strategy_contaminated = "circle";
  WorldConfig world;
  std::string output;            // per-game CSV; empty = not written
  std::string aggregate_output;  // aggregate CSV; empty = not written
  int jobs = 0;                  // 0 = hardware concurrency

  /// Throws ConfigError.
  void validate() const;
};

struct GameRow {
  int game_id = 0;
  std::uint64_t seed = 0;
  int agents_per_side = 0;
  std::string strategy_healthy;
  std::string strategy_contaminated;
  int steps = 0;
  Termination termination = Termination::TimeBound;
  int final_healthy = 0;
  int final_contaminated = 0;
  double final_healthy_pct = 0.0;
};

struct AggregateRow {
  int agents_per_side = 0;
  std::string strategy_healthy;
  std::string strategy_contaminated;
  int n_games = 0;
  double mean_final_healthy_pct = 0.0;
  double std = 0.0;  // sample standard deviation
  double welch_t = 0.0;
  double p_value = 0.0;
};

struct BatchResult {
  std::vector<GameRow> games;  // ascending game_id
  std::vector<AggregateRow> aggregates;
};

struct WelchResult {
  double t = 0.0;
  double df = 0.0;
  double p = 1.0;  // two-sided
};

/// Two-sided Welch unequal-variance t test. Throws PreconditionError when a
/// sample has fewer than two values or both variances are zero with
/// different means.
WelchResult welch_test(std::span<const double> a, std::span<const double> b);

/// One-sided p-value for the alternative mean(a) > mean(b).
double welch_p_greater(std::span<const double> a, std::span<const double> b);

/// CONTAM_JOBS when set, else `requested`, else the hardware concurrency.
int resolve_jobs(int requested);

/// Runs every game. Game ids run 0.. across the agents_per_side points in
/// order; game i uses seed base_seed + i.
BatchResult run_batch(const ExperimentConfig& cfg, int jobs);

/// Aggregate per agents_per_side. The test compares the healthy percentages
/// with their mirror image 100 - x, i.e. against the symmetric 50% outcome.
std::vector<AggregateRow> aggregate(std::span<const GameRow> games);

inline constexpr std::string_view kGameCsvHeader =
    "game_id,seed,agents_per_side,strategy_healthy,strategy_contaminated,steps,termination,"
    "final_healthy,final_contaminated,final_healthy_pct";
inline constexpr std::string_view kAggregateCsvHeader =
    "agents_per_side,strategy_healthy,strategy_contaminated,n_games,mean_final_healthy_pct,std,"
    "welch_t,p_value";

void write_games_csv(std::ostream& out, std::span<const GameRow> rows);
void write_aggregate_csv(std::ostream& out, std::span<const AggregateRow> rows);

/// Writes both CSVs named in the config. Throws IoError.
void write_outputs(const ExperimentConfig& cfg, const BatchResult& result);

}  // namespace contam

#include "contam/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <thread>

#include <boost/math/distributions/students_t.hpp>

#include "contam/errors.hpp"
#include "contam/strategies.hpp"

namespace contam {

void ExperimentConfig::validate() const {
  world.validate();
  if (agents_per_side.empty()) throw ConfigError("agents_per_side must not be empty");
  for (int n : agents_per_side) {
    if (n < 1) throw ConfigError("agents_per_side entries must be >= 1");
  }
  if (games_per_point < 1) throw ConfigError("games_per_point must be >= 1");
  if (jobs < 0) throw ConfigError("jobs must be >= 0");
  make_strategy(strategy_healthy, world);
  make_strategy(strategy_contaminated, world);
}

namespace {

struct Moments {
  double mean = 0.0;
  double var = 0.0;
};

Moments moments(std::span<const double> xs) {
  Moments m;
  m.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - m.mean) * (x - m.mean);
    m.var = ss / static_cast<double>(xs.size() - 1);
  }
  return m;
}

}  // namespace

WelchResult welch_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) throw PreconditionError("welch_test needs two samples of size >= 2");
  const auto ma = moments(a), mb = moments(b);
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  const double va = ma.var / na, vb = mb.var / nb;
  WelchResult r;
  if (va + vb == 0.0) {
    if (ma.mean != mb.mean) throw PreconditionError("welch_test: both samples have zero variance");
    r.t = 0.0;
    r.df = na + nb - 2.0;
    r.p = 1.0;
    return r;
  }
  r.t = (ma.mean - mb.mean) / std::sqrt(va + vb);
  r.df = (va + vb) * (va + vb) / (va * va / (na - 1.0) + vb * vb / (nb - 1.0));
  if (!std::isfinite(r.t) || !std::isfinite(r.df)) throw PreconditionError("welch_test: non-finite statistic");
  const boost::math::students_t dist(r.df);
  r.p = std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(r.t))));
  return r;
}

double welch_p_greater(std::span<const double> a, std::span<const double> b) {
  const auto r = welch_test(a, b);
  if (r.t == 0.0) return 0.5;
  const boost::math::students_t dist(r.df);
  return boost::math::cdf(boost::math::complement(dist, r.t));
}

int resolve_jobs(int requested) {
  if (const char* env = std::getenv("CONTAM_JOBS"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) throw ConfigError("CONTAM_JOBS must be a positive integer");
    return static_cast<int>(v);
  }
  if (requested > 0) return requested;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

BatchResult run_batch(const ExperimentConfig& cfg, int jobs) {
  cfg.validate();
  const auto healthy = make_strategy(cfg.strategy_healthy, cfg.world);
  const auto contaminated = make_strategy(cfg.strategy_contaminated, cfg.world);

  BatchResult result;
  for (int n : cfg.agents_per_side) {
    for (int g = 0; g < cfg.games_per_point; ++g) {
      GameRow row;
      row.game_id = static_cast<int>(result.games.size());
      row.seed = cfg.base_seed + static_cast<std::uint64_t>(row.game_id);
      row.agents_per_side = n;
      row.strategy_healthy = cfg.strategy_healthy;
      row.strategy_contaminated = cfg.strategy_contaminated;
      result.games.push_back(std::move(row));
    }
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const auto i = next.fetch_add(1);
      if (i >= result.games.size()) return;
      auto& row = result.games[i];
      try {
        InitialState init;
        init.n_healthy = row.agents_per_side;
        init.n_contaminated = row.agents_per_side;
        const auto game = run_game(cfg.world, *healthy, *contaminated, init, row.seed);
        row.steps = game.steps;
        row.termination = game.termination;
        row.final_healthy = game.final_counts().healthy;
        row.final_contaminated = game.final_counts().contaminated;
        row.final_healthy_pct = game.final_healthy_pct;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = result.games.size();
        return;
      }
    }
  };
  const int n_threads = std::max(1, std::min<int>(jobs, static_cast<int>(result.games.size())));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  result.aggregates = aggregate(result.games);
  return result;
}

std::vector<AggregateRow> aggregate(std::span<const GameRow> games) {
  std::map<std::tuple<int, std::string, std::string>, std::vector<double>> groups;
  for (const auto& g : games) {
    groups[{g.agents_per_side, g.strategy_healthy, g.strategy_contaminated}].push_back(
        g.final_healthy_pct);
  }
  std::vector<AggregateRow> out;
  for (const auto& [key, xs] : groups) {
    AggregateRow row;
    std::tie(row.agents_per_side, row.strategy_healthy, row.strategy_contaminated) = key;
    row.n_games = static_cast<int>(xs.size());
    const auto m = moments(xs);
    row.mean_final_healthy_pct = m.mean;
    row.std = std::sqrt(m.var);
    row.welch_t = std::numeric_limits<double>::quiet_NaN();
    row.p_value = std::numeric_limits<double>::quiet_NaN();
    if (xs.size() >= 2) {
      std::vector<double> mirror;
      for (double x : xs) mirror.push_back(100.0 - x);
      try {
        const auto w = welch_test(xs, mirror);
        row.welch_t = w.t;
        row.p_value = w.p;
      } catch (const PreconditionError&) {
        // Constant non-50% outcome: the statistic is undefined.
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

void put_real(std::ostream& out, double v) {
  if (std::isnan(v)) {
    out << "nan";
    return;
  }
  out << std::setprecision(17) << v;
}

}  // namespace

void write_games_csv(std::ostream& out, std::span<const GameRow> rows) {
  out << kGameCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.game_id << ',' << r.seed << ',' << r.agents_per_side << ',' << r.strategy_healthy << ','
        << r.strategy_contaminated << ',' << r.steps << ',' << to_string(r.termination) << ','
        << r.final_healthy << ',' << r.final_contaminated << ',';
    put_real(out, r.final_healthy_pct);
    out << '\n';
  }
}

void write_aggregate_csv(std::ostream& out, std::span<const AggregateRow> rows) {
  out << kAggregateCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.agents_per_side << ',' << r.strategy_healthy << ',' << r.strategy_contaminated << ','
        << r.n_games << ',';
    put_real(out, r.mean_final_healthy_pct);
    out << ',';
    put_real(out, r.std);
    out << ',';
    put_real(out, r.welch_t);
    out << ',';
    put_real(out, r.p_value);
    out << '\n';
  }
}

void write_outputs(const ExperimentConfig& cfg, const BatchResult& result) {
  auto write = [](const std::string& path, auto&& body) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path + " for writing");
    body(f);
    if (!f) throw IoError("failed writing " + path);
  };
  if (!cfg.output.empty()) write(cfg.output, [&](std::ostream& o) { write_games_csv(o, result.games); });
  if (!cfg.aggregate_output.empty()) {
    write(cfg.aggregate_output, [&](std::ostream& o) { write_aggregate_csv(o, result.aggregates); });
  }
}

}  // namespace contam

#include "contam/wpc.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "contam/errors.hpp"

namespace contam {

int pbf(AgentId agent, const ConqueredSet& conquered, const ComponentView& comp) {
  const auto idx = comp.index_of(agent);
  if (conquered.count(agent) != 0) {
    throw PreconditionError("agent " + std::to_string(agent) + " is already conquered");
  }
  int removed = 0;
  for (auto n : comp.neighbors(idx)) {
    if (conquered.count(comp.id_at(n)) != 0) ++removed;
  }
  return static_cast<int>(comp.neighbors(idx).size()) + 1 - removed;
}

WpcTrace iterative_conquer(const ComponentView& comp, const DecisionRule& rule) {
  WpcTrace trace;
  ConqueredSet conquered;
  int c = 0;
  int r = 0;
  for (int iteration = 0; conquered.size() < comp.size(); ++iteration) {
    auto chosen = rule(comp, conquered, iteration);
    if (chosen.empty()) {
      throw ProtocolError("decision rule returned an empty set at iteration " +
                          std::to_string(iteration));
    }
    std::sort(chosen.begin(), chosen.end());
    if (std::adjacent_find(chosen.begin(), chosen.end()) != chosen.end()) {
      throw ProtocolError("decision rule returned a duplicate agent");
    }
    int m = std::numeric_limits<int>::min();
    for (auto a : chosen) {
      if (!comp.contains(a) || conquered.count(a) != 0) {
        throw ProtocolError("decision rule chose agent " + std::to_string(a) +
                            " which is not an unconquered member");
      }
      m = std::max(m, pbf(a, conquered, comp));
    }
    const int delta = m - c;
    if (delta > 0) {
      r += delta;
      c += delta;
      trace.effective_subset.insert(trace.effective_subset.end(), chosen.begin(), chosen.end());
    }
    c += static_cast<int>(chosen.size());
    conquered.insert(chosen.begin(), chosen.end());

    ConquestRecord rec;
    rec.chosen = std::move(chosen);
    rec.max_bareness = m;
    rec.delta = delta;
    rec.c = c;
    rec.r = r;
    rec.conquered_so_far.assign(conquered.begin(), conquered.end());
    trace.iterations.push_back(std::move(rec));
  }
  trace.required = r;
  return trace;
}

FenceProvider exposure_fence() {
  return [](const ComponentView& comp, const ConqueredSet& conquered) {
    std::vector<AgentId> out;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const auto id = comp.id_at(i);
      if (conquered.count(id) != 0) continue;
      bool bare = comp.is_bare(i);
      for (auto n : comp.neighbors(i)) {
        if (bare) break;
        bare = conquered.count(comp.id_at(n)) != 0;
      }
      if (bare) out.push_back(id);
    }
    return out;
  };
}

FenceProvider geometric_fence(std::shared_ptr<const FenceOracle> oracle) {
  return [oracle = std::move(oracle)](const ComponentView& comp, const ConqueredSet& conquered) {
    std::vector<bool> remaining(comp.size(), true);
    for (auto id : conquered) remaining[comp.index_of(id)] = false;
    return oracle->fence(remaining);
  };
}

DecisionRule weak_point_rule(FenceProvider fence) {
  return [fence = std::move(fence)](const ComponentView& comp, const ConqueredSet& conquered,
                                    int) -> std::vector<AgentId> {
    auto candidates = fence(comp, conquered);
    if (candidates.empty()) {
      for (auto id : comp.members()) {
        if (conquered.count(id) == 0) candidates.push_back(id);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    AgentId best = candidates.front();
    int best_factor = std::numeric_limits<int>::max();
    for (auto id : candidates) {
      const int f = pbf(id, conquered, comp);
      if (f < best_factor) {
        best_factor = f;
        best = id;
      }
    }
    return {best};
  };
}

WpcTrace wpc_trace(const ComponentView& comp, const FenceProvider& fence) {
  if (comp.size() == 0) throw PreconditionError("wpc of an empty component");
  return iterative_conquer(comp, weak_point_rule(fence));
}

int wpc(const ComponentView& comp) { return wpc_trace(comp, exposure_fence()).required; }

int wpc(const ComponentView& comp, const FenceOracle& oracle) {
  // Non-owning alias; the oracle outlives this call.
  std::shared_ptr<const FenceOracle> alias(std::shared_ptr<const FenceOracle>{}, &oracle);
  return wpc_trace(comp, geometric_fence(alias)).required;
}

ComponentView abstract_component(std::vector<AgentId> members, std::span<const IdPair> edges,
                                 bool all_bare) {
  ComponentView comp(Health::Healthy, std::move(members), edges);
  if (!comp.is_connected()) throw DomainError("abstract component is not connected");
  if (!all_bare) comp.set_fence({});
  return comp;
}

ComponentView abstract_component(std::span<const IdPair> edges, bool all_bare) {
  std::vector<AgentId> members;
  for (const auto& [a, b] : edges) {
    members.push_back(a);
    members.push_back(b);
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) throw DomainError("abstract component has no edges");
  return abstract_component(std::move(members), edges, all_bare);
}

int wpc_abstract(std::span<const IdPair> edges, bool all_bare) {
  return wpc(abstract_component(edges, all_bare));
}

// ---------------------------------------------------------------------------
// Attacking sequences

std::size_t AttackingSequence::length() const {
  for (std::size_t i = steps.size(); i > 0; --i) {
    if (!steps[i - 1].empty()) return i;
  }
  return 0;
}

bool AttackingSequence::is_singular() const {
  const auto len = length();
  for (std::size_t i = 0; i < len; ++i) {
    if (steps[i].size() != 1) return false;
  }
  return true;
}

namespace {

void validate_sequence(const ComponentView& comp, const AttackingSequence& seq) {
  std::vector<int> seen(comp.size(), 0);
  const auto len = seq.length();
  for (std::size_t i = 0; i < len; ++i) {
    if (seq.steps[i].empty()) {
      throw ValidationError("attacking sequence step " + std::to_string(i) + " is empty");
    }
    for (auto id : seq.steps[i]) {
      if (!comp.contains(id)) {
        throw ValidationError("attacking sequence names non-member " + std::to_string(id));
      }
      if (++seen[comp.index_of(id)] > 1) {
        throw ValidationError("agent " + std::to_string(id) + " conquered twice");
      }
    }
  }
  for (std::size_t i = 0; i < comp.size(); ++i) {
    if (seen[i] == 0) {
      throw ValidationError("attacking sequence never conquers " + std::to_string(comp.id_at(i)));
    }
  }
}

}  // namespace

WpcTrace sequence_trace(const ComponentView& comp, const AttackingSequence& seq) {
  validate_sequence(comp, seq);
  return iterative_conquer(comp, [&seq](const ComponentView&, const ConqueredSet&, int i) {
    return seq.steps[static_cast<std::size_t>(i)];
  });
}

int sequence_cost(const ComponentView& comp, const AttackingSequence& seq) {
  return sequence_trace(comp, seq).required;
}

AttackingSequence transform_sequence(const ComponentView& comp, const AttackingSequence& seq) {
  validate_sequence(comp, seq);
  AttackingSequence out;
  ConqueredSet conquered;
  const auto len = seq.length();
  for (std::size_t i = 0; i < len; ++i) {
    const auto& step = seq.steps[i];
    if (step.size() == 1) {
      out.steps.push_back(step);
    } else {
      std::vector<std::pair<int, AgentId>> factors;
      for (auto id : step) factors.emplace_back(pbf(id, conquered, comp), id);
      std::sort(factors.begin(), factors.end());
      for (const auto& [f, id] : factors) out.steps.push_back({id});
    }
    conquered.insert(step.begin(), step.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive oracle. Keeps its own pool bookkeeping instead of reusing
// iterative_conquer so that the two routes stay independent.

namespace {

struct OracleSearch {
  const ComponentView& comp;
  const FenceProvider& fence;
  std::vector<bool> conquered;
  ConqueredSet conquered_set;
  int best = std::numeric_limits<int>::max();

  void descend(int pool, int required) {
    if (required >= best) return;  // required never decreases along an order
    if (conquered_set.size() == comp.size()) {
      best = required;
      return;
    }
    auto candidates = fence(comp, conquered_set);
    if (candidates.empty()) {
      for (std::size_t i = 0; i < comp.size(); ++i) {
        if (!conquered[i]) candidates.push_back(comp.id_at(i));
      }
    }
    for (auto id : candidates) {
      const auto idx = comp.index_of(id);
      int exposure = 1;
      for (auto n : comp.neighbors(idx)) exposure += conquered[n] ? 0 : 1;
      const int shortfall = exposure - pool;
      const int extra = shortfall > 0 ? shortfall : 0;
      conquered[idx] = true;
      conquered_set.insert(id);
      descend(pool + extra + 1, required + extra);
      conquered_set.erase(id);
      conquered[idx] = false;
    }
  }
};

}  // namespace

int brute_force_min_conquer(const ComponentView& comp, const FenceProvider& fence) {
  if (comp.size() == 0) throw PreconditionError("empty component");
  if (comp.size() > kBruteForceLimit) {
    throw SizeError("brute-force oracle is limited to " + std::to_string(kBruteForceLimit) +
                    " members, got " + std::to_string(comp.size()));
  }
  OracleSearch search{comp, fence, std::vector<bool>(comp.size(), false), {}};
  search.descend(0, 0);
  return search.best;
}

int brute_force_min_conquer(const ComponentView& comp) {
  return brute_force_min_conquer(comp, exposure_fence());
}

int brute_force_min_conquer(std::span<const IdPair> edges, bool all_bare) {
  return brute_force_min_conquer(abstract_component(edges, all_bare));
}

bool is_monotonic(const ComponentView& comp, const FenceProvider& fence) {
  const auto original = fence(comp, {});
  const auto trace = wpc_trace(comp, fence);
  return std::all_of(trace.effective_subset.begin(), trace.effective_subset.end(), [&](AgentId a) {
    return std::find(original.begin(), original.end(), a) != original.end();
  });
}

bool is_monotonic(const ComponentView& comp) { return is_monotonic(comp, exposure_fence()); }

}  // namespace contam

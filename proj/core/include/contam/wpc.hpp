#pragma once

#include <functional>
#include <memory>
#include <set>
#include <span>
#include <vector>

#include "contam/swarm_graph.hpp"

namespace contam {

using ConqueredSet = std::set<AgentId>;

/// One iteration of an iterative conquest.
struct ConquestRecord {
  std::vector<AgentId> chosen;  // agents conquered in this iteration
  int max_bareness = 0;         // largest predicted bareness factor among `chosen`
  int delta = 0;                // max_bareness minus the pool before this iteration
  int c = 0;                    // attacker pool after the iteration
  int r = 0;                    // agents the attacker had to bring, after the iteration
  std::vector<AgentId> conquered_so_far;
};

struct WpcTrace {
  std::vector<ConquestRecord> iterations;
  /// Agents chosen in iterations that forced extra allocation (delta > 0).
  std::vector<AgentId> effective_subset;
  int required = 0;
};

/// Picks the next agents to conquer given the component, what is already
/// conquered and the 0-based iteration number.
using DecisionRule =
    std::function<std::vector<AgentId>(const ComponentView&, const ConqueredSet&, int)>;

/// Fence of the unconquered remainder, as member ids. May return an empty list.
using FenceProvider = std::function<std::vector<AgentId>(const ComponentView&, const ConqueredSet&)>;

/// Predicted bareness factor: cf(agent) + 1 minus the observed members already
/// conquered. Throws PreconditionError if `agent` is conquered, LookupError if
/// it is not a member.
int pbf(AgentId agent, const ConqueredSet& conquered, const ComponentView& comp);

/// Runs the conquest loop with the given decision rule until every member is
/// conquered. A rule that returns an empty set, a non-member, a duplicate or an
/// already conquered agent raises ProtocolError.
WpcTrace iterative_conquer(const ComponentView& comp, const DecisionRule& rule);

/// Abstract fence model: members bare in the component's own fence stay bare,
/// and any remaining member observing a conquered one becomes exposed.
FenceProvider exposure_fence();

/// Geometric fence model backed by a sampled FenceOracle built for `comp`.
FenceProvider geometric_fence(std::shared_ptr<const FenceOracle> oracle);

/// Weak-point rule: the bare remaining member with the smallest predicted
/// bareness factor, lowest id on ties. An empty fence falls back to every
/// remaining member.
DecisionRule weak_point_rule(FenceProvider fence);

WpcTrace wpc_trace(const ComponentView& comp, const FenceProvider& fence);
int wpc(const ComponentView& comp);
int wpc(const ComponentView& comp, const FenceOracle& oracle);

/// Component over the given members and edges. With all_bare every member
/// starts on the fence; otherwise the fence starts empty and grows by exposure.
ComponentView abstract_component(std::vector<AgentId> members, std::span<const IdPair> edges,
                                 bool all_bare);
/// Members taken from the edge endpoints. Throws DomainError when disconnected.
ComponentView abstract_component(std::span<const IdPair> edges, bool all_bare);

int wpc_abstract(std::span<const IdPair> edges, bool all_bare);

struct AttackingSequence {
  std::vector<std::vector<AgentId>> steps;

  /// Index of the last non-empty step, plus one.
  std::size_t length() const;
  bool is_singular() const;
};

/// Total agents required when the sequence is used as the decision rule.
/// Throws ValidationError unless every member appears exactly once.
int sequence_cost(const ComponentView& comp, const AttackingSequence& seq);
WpcTrace sequence_trace(const ComponentView& comp, const AttackingSequence& seq);

/// Splits every multi-agent step into single-agent steps ordered by ascending
/// predicted bareness (lowest id on ties). Never increases sequence_cost.
AttackingSequence transform_sequence(const ComponentView& comp, const AttackingSequence& seq);

inline constexpr std::size_t kBruteForceLimit = 8;

/// Minimum cost over every singular order that conquers a currently bare
/// member at each step. Exhaustive; throws SizeError above kBruteForceLimit members.
int brute_force_min_conquer(const ComponentView& comp, const FenceProvider& fence);
int brute_force_min_conquer(const ComponentView& comp);
int brute_force_min_conquer(std::span<const IdPair> edges, bool all_bare);

/// True when every effective-subset agent of the weak-point trace sits on the
/// fence of the unconquered component.
bool is_monotonic(const ComponentView& comp, const FenceProvider& fence);
bool is_monotonic(const ComponentView& comp);

}  // namespace contam

#pragma once

#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "contam/swarm_graph.hpp"

namespace contam {

using CircleId = std::int64_t;

/// Circle id of a lone Single agent offering to join a circle.
constexpr CircleId singleton_circle(AgentId id) { return -static_cast<CircleId>(id) - 1; }

struct ObservationShare {
  std::vector<AgentSnapshot> seen;  // visible same-state agents
};

struct CircleProposal {
  CircleId circle_id = 0;
  std::vector<AgentId> members;
};

struct CircleApproval {
  CircleId circle_id = 0;
};

struct SlotTarget {
  AgentId id = 0;
  Vec2 pos;
};

struct CircleEstablishment {
  CircleId circle_id = 0;
  std::vector<AgentId> members;
  Vec2 center;
  std::vector<SlotTarget> targets;
};

struct ConvergenceState {
  CircleId circle_id = 0;
  std::vector<AgentId> converged;
};

struct CirclePublication {
  CircleId circle_id = 0;
  std::vector<AgentId> members;
  Vec2 center;
};

struct MergeProposal {
  CircleId proposer = 0;  // proposing circle, or singleton_circle(id)
  CircleId target = 0;
  std::vector<AgentId> proposer_members;
  Vec2 proposer_center;
  std::vector<AgentId> members;  // combined membership
};

struct ExteriorInfo {
  std::vector<CirclePublication> circles;
  std::vector<MergeProposal> proposals;
};

struct MergeApproval {
  CircleId merge_id = 0;
  CircleId first = 0;   // approving circle
  CircleId second = 0;  // approved proposer
  std::vector<AgentId> members;
  Vec2 center;
};

struct RandomDirection {
  CircleId circle_id = 0;
  double angle = 0.0;  // radians
  Vec2 center;         // circle center after the move
};

using Payload = std::variant<ObservationShare, CircleProposal, CircleApproval, CircleEstablishment,
                             ConvergenceState, CirclePublication, ExteriorInfo, MergeProposal,
                             MergeApproval, RandomDirection>;

struct Message {
  AgentId sender = 0;
  std::vector<AgentId> recipients;
  Payload payload;
};

std::string_view kind_name(const Payload& p);

}  // namespace contam

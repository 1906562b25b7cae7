#include "contam/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "contam/bounds.hpp"
#include "contam/errors.hpp"

namespace contam {

// ---------------------------------------------------------------------------
// Helpers

namespace {

struct CliqueSearch {
  const std::map<AgentId, std::set<AgentId>>& adj;
  std::vector<AgentId> best;

  bool better(const std::vector<AgentId>& c) const {
    if (c.size() != best.size()) return c.size() > best.size();
    return c < best;
  }

  void expand(std::vector<AgentId>& r, std::vector<AgentId> p, std::vector<AgentId> x) {
    if (r.size() + p.size() < best.size()) return;
    if (p.empty() && x.empty()) {
      auto sorted = r;
      std::sort(sorted.begin(), sorted.end());
      if (better(sorted)) best = std::move(sorted);
      return;
    }
    while (!p.empty()) {
      const AgentId v = p.front();
      const auto& nv = adj.at(v);
      std::vector<AgentId> p2, x2;
      for (auto u : p) if (nv.count(u)) p2.push_back(u);
      for (auto u : x) if (nv.count(u)) x2.push_back(u);
      r.push_back(v);
      expand(r, std::move(p2), std::move(x2));
      r.pop_back();
      p.erase(p.begin());
      x.push_back(v);
    }
  }
};

Vec2 clamp_center(Vec2 c, const WorldConfig& cfg) {
  const double margin = cfg.s_max / 2.0 + cfg.d_r;
  auto clamp_axis = [margin](double v, double extent) {
    if (extent <= 2.0 * margin) return extent / 2.0;
    return std::clamp(v, margin, extent - margin);
  };
  return {clamp_axis(c.x, cfg.arena_width), clamp_axis(c.y, cfg.arena_height)};
}

Vec2 step_towards(Vec2 from, Vec2 to, double v_max) {
  const Vec2 d = to - from;
  const double len = d.norm();
  if (len <= v_max) return d;
  return d * (v_max / len);
}

bool contains(const std::vector<AgentId>& sorted, AgentId id) {
  return std::binary_search(sorted.begin(), sorted.end(), id);
}

std::vector<AgentId> sorted_union(const std::vector<AgentId>& a, const std::vector<AgentId>& b) {
  std::vector<AgentId> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

CircleId make_circle_id(int step, const std::vector<AgentId>& members) {
  return static_cast<CircleId>(step) * 100000 + *std::min_element(members.begin(), members.end());
}

constexpr int kKnowledgeHorizon = 4;

}  // namespace

std::vector<AgentId> max_clique(const std::map<AgentId, std::set<AgentId>>& adjacency,
                                std::optional<AgentId> must_contain) {
  CliqueSearch search{adjacency, {}};
  std::vector<AgentId> r, p;
  if (must_contain) {
    if (!adjacency.count(*must_contain)) throw LookupError("clique seed is not a node");
    r.push_back(*must_contain);
    for (auto u : adjacency.at(*must_contain)) if (u != *must_contain) p.push_back(u);
  } else {
    for (const auto& [v, _] : adjacency) p.push_back(v);
  }
  search.expand(r, std::move(p), {});
  return search.best;
}

std::vector<SlotTarget> circle_slots(std::span<const AgentId> members, Vec2 center, double radius) {
  std::vector<AgentId> ids(members.begin(), members.end());
  std::sort(ids.begin(), ids.end());
  const auto pos = uniform_circle_positions(static_cast<int>(ids.size()), radius, center);
  std::vector<SlotTarget> out;
  for (std::size_t i = 0; i < ids.size(); ++i) out.push_back({ids[i], pos[i]});
  return out;
}

std::string_view to_string(CircleMode m) {
  switch (m) {
    case CircleMode::Publicize: return "publicize";
    case CircleMode::Discovery: return "discovery";
    case CircleMode::Coordinate: return "coordinate";
    case CircleMode::Move: return "move";
  }
  return "?";
}

CircleMode circle_mode(int step) { return static_cast<CircleMode>(((step - 1) % 4 + 4) % 4); }

MergeChoice decide_merge(std::size_t own_size, CircleId own_id,
                         std::span<const KnownCircle> neighbours,
                         std::span<const MergeProposal> proposals, int threshold) {
  const auto cap = static_cast<std::size_t>(threshold);
  const MergeProposal* p = nullptr;
  for (const auto& prop : proposals) {
    if (prop.target != own_id || prop.members.size() > cap) continue;
    if (!p || prop.members.size() > p->members.size() ||
        (prop.members.size() == p->members.size() && prop.proposer < p->proposer)) {
      p = &prop;
    }
  }
  const KnownCircle* f = nullptr;
  for (const auto& c : neighbours) {
    if (c.id == own_id || own_size + c.members.size() > cap) continue;
    if (!f || c.members.size() > f->members.size() ||
        (c.members.size() == f->members.size() && c.id < f->id)) {
      f = &c;
    }
  }
  MergeChoice out;
  if (p && (!f || p->proposer == f->id || p->members.size() > own_size + f->members.size())) {
    out.kind = MergeChoice::Kind::Approve;
    out.accepted = *p;
  } else if (f) {
    out.kind = MergeChoice::Kind::Propose;
    out.partner = *f;
  }
  return out;
}

Vec2 random_step(Rng& rng, double v_max) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const double a = angle(rng);
  return {v_max * std::cos(a), v_max * std::sin(a)};
}

Vec2 potential_movement(const Observation& obs) {
  Vec2 force;
  for (const auto& a : obs.visible) {
    if (a.state != obs.state) continue;
    const Vec2 d = a.pos - obs.pos;
    const double len = d.norm();
    if (len <= 0.0) continue;
    const Vec2 unit = d * (1.0 / len);
    if (len <= obs.cfg->s_min) {
      force = force - unit;
    } else if (len <= obs.cfg->s_max + obs.cfg->eps) {
      force += unit;
    }
  }
  const double len = force.norm();
  if (len == 0.0) return {};
  return force * (obs.cfg->v_max / len);
}

// ---------------------------------------------------------------------------
// Formation protocol

namespace {

class FormationMind : public AgentMind {
 public:
  FormationMind(AgentId self, const WorldConfig& cfg, int threshold)
      : self_(self), cfg_(cfg), threshold_(threshold) {}

  Formation formation() const override { return formation_; }

  MindView view() const override {
    MindView v{formation_, circle_id_, members_, std::nullopt, {}};
    if (formation_ != Formation::Single) v.target = target_;
    for (const auto& [id, _] : known_) v.known_circles.push_back(id);
    return v;
  }

  void on_health_change(Health) override { reset_to_single(); }

  Decision act(const Observation& obs, std::span<const Message> inbox, Rng& rng) override {
    now_ = obs.step;
    Decision d;
    absorb(obs, inbox, d);
    prune();
    switch (formation_) {
      case Formation::Single: single_act(obs, d, rng); break;
      case Formation::Converging:
        if (!fresh_) converging_act(obs, d, rng);
        else d.movement = step_towards(obs.pos, target_, cfg_.v_max);
        break;
      case Formation::Circle: circle_act(obs, d, rng); break;
    }
    fresh_ = false;
    return d;
  }

 private:
  struct OwnProposal {
    CircleId id = 0;
    std::vector<AgentId> members;
    std::set<AgentId> approvals;
    int step = 0;
  };
  struct ReceivedProposal {
    AgentId proposer = 0;
    CircleId id = 0;
    std::vector<AgentId> members;
  };
  struct StoredProposal {
    MergeProposal proposal;
    int step = 0;
  };

  // ----- shared plumbing

  void reset_to_single() {
    formation_ = Formation::Single;
    circle_id_ = 0;
    members_.clear();
    converged_.clear();
    last_shared_.clear();
    shares_.clear();
    proposal_.reset();
    best_received_.reset();
    approved_.reset();
    known_.clear();
    proposals_.clear();
    direction_.reset();
    fresh_ = false;
  }

  void begin_converging(CircleId id, std::vector<AgentId> members, Vec2 center,
                        std::span<const SlotTarget> targets = {}) {
    std::sort(members.begin(), members.end());
    formation_ = Formation::Converging;
    circle_id_ = id;
    members_ = std::move(members);
    center_ = center;
    const auto given = std::find_if(targets.begin(), targets.end(),
                                    [&](const SlotTarget& t) { return t.id == self_; });
    target_ = given != targets.end() ? given->pos : slot_of_self();
    offset_ = target_ - center_;
    converged_.clear();
    converging_since_ = now_;
    last_pos_.reset();
    proposal_.reset();
    best_received_.reset();
    approved_.reset();
    proposals_.clear();
    direction_.reset();
    handled_merges_.insert(id);
    fresh_ = true;
  }

  Vec2 slot_of_self() const {
    for (const auto& s : circle_slots(members_, center_, cfg_.s_max / 2.0)) {
      if (s.id == self_) return s.pos;
    }
    throw ProtocolError("agent " + std::to_string(self_) + " has no slot in its circle");
  }

  std::vector<AgentId> visible_of(const Observation& obs, const std::vector<AgentId>& ids,
                                  AgentId skip = -1) const {
    std::vector<AgentId> out;
    for (const auto& a : obs.visible) {
      if (a.id != skip && contains(ids, a.id)) out.push_back(a.id);
    }
    return out;
  }

  void send(Decision& d, std::vector<AgentId> to, Payload p) const {
    if (to.empty()) return;
    d.outgoing.push_back({self_, std::move(to), std::move(p)});
  }

  void remember(const CirclePublication& c, int seen) {
    if (c.circle_id == circle_id_ && formation_ != Formation::Single) return;
    auto& k = known_[c.circle_id];
    if (k.seen_step > seen) return;
    k = {c.circle_id, c.members, c.center, seen};
  }

  void prune() {
    std::erase_if(known_, [&](const auto& kv) { return now_ - kv.second.seen_step > kKnowledgeHorizon; });
    std::erase_if(proposals_, [&](const StoredProposal& p) {
      return now_ - p.step > kKnowledgeHorizon || p.proposal.target != circle_id_;
    });
  }

  // Drops circle mates seen in the other state. Returns false when the circle
  // is no longer viable.
  bool drop_flipped(const Observation& obs) {
    for (const auto& a : obs.visible) {
      if (a.state != obs.state && contains(members_, a.id)) {
        std::erase(members_, a.id);
        converged_.erase(a.id);
      }
    }
    if (members_.size() < 2) {
      reset_to_single();
      return false;
    }
    return true;
  }

  void absorb(const Observation& obs, std::span<const Message> inbox, Decision& d) {
    for (const auto& m : inbox) {
      std::visit([&](const auto& p) { handle(obs, m.sender, p, d); }, m.payload);
    }
  }

  void handle(const Observation&, AgentId sender, const ObservationShare& p, Decision&) {
    if (formation_ != Formation::Single) return;
    auto& s = shares_[sender];
    s.clear();
    for (const auto& a : p.seen) s.insert(a.id);
  }

  void handle(const Observation&, AgentId sender, const CircleProposal& p, Decision&) {
    if (formation_ != Formation::Single || p.members.size() < 2 || !contains(p.members, self_)) return;
    if (!best_received_ || p.members.size() > best_received_->members.size() ||
        (p.members.size() == best_received_->members.size() && sender < best_received_->proposer)) {
      best_received_ = ReceivedProposal{sender, p.circle_id, p.members};
    }
  }

  void handle(const Observation&, AgentId sender, const CircleApproval& p, Decision&) {
    if (formation_ == Formation::Single && proposal_ && proposal_->id == p.circle_id) {
      proposal_->approvals.insert(sender);
    }
  }

  void handle(const Observation&, AgentId, const CircleEstablishment& p, Decision&) {
    if (formation_ != Formation::Single || !contains(p.members, self_)) return;
    begin_converging(p.circle_id, p.members, p.center, p.targets);
  }

  void handle(const Observation&, AgentId, const ConvergenceState& p, Decision&) {
    if (formation_ != Formation::Converging || p.circle_id != circle_id_) return;
    for (auto id : p.converged) {
      if (contains(members_, id)) converged_.insert(id);
    }
  }

  void handle(const Observation&, AgentId, const CirclePublication& p, Decision&) {
    remember(p, now_);
  }

  void handle(const Observation&, AgentId, const ExteriorInfo& p, Decision&) {
    for (const auto& c : p.circles) remember(c, now_ - 1);
    if (formation_ != Formation::Circle) return;
    for (const auto& prop : p.proposals) store_proposal(prop);
  }

  void handle(const Observation&, AgentId, const MergeProposal& p, Decision&) {
    if (formation_ == Formation::Circle) store_proposal(p);
  }

  void handle(const Observation& obs, AgentId sender, const MergeApproval& p, Decision& d) {
    if (handled_merges_.count(p.merge_id) || !contains(p.members, self_)) return;
    const bool mine =
        (formation_ == Formation::Circle && (p.first == circle_id_ || p.second == circle_id_)) ||
        (formation_ == Formation::Single && p.second == singleton_circle(self_));
    if (!mine) return;
    begin_converging(p.merge_id, p.members, p.center);
    send(d, visible_of(obs, members_, sender), p);
  }

  void handle(const Observation& obs, AgentId sender, const RandomDirection& p, Decision& d) {
    if (formation_ != Formation::Circle || p.circle_id != circle_id_) return;
    if (direction_ && direction_cycle_ == cycle_of(now_)) return;  // already have this cycle's draw
    direction_ = p;
    direction_cycle_ = cycle_of(now_);
    send(d, visible_of(obs, members_, sender), p);
  }

  void store_proposal(const MergeProposal& p) {
    if (p.target != circle_id_) return;
    for (auto& s : proposals_) {
      if (s.proposal.proposer == p.proposer) {
        s = {p, now_};
        return;
      }
    }
    proposals_.push_back({p, now_});
  }

  // ----- Single

  std::vector<AgentId> clique_for(const Observation& obs, const std::vector<AgentId>& singles) const {
    std::map<AgentId, std::set<AgentId>> adj;
    adj[self_];
    for (auto v : singles) {
      if (!shares_.count(v)) continue;
      adj[self_].insert(v);
      adj[v].insert(self_);
    }
    for (const auto& [v, nv] : adj) {
      if (v == self_) continue;
      for (const auto& [w, nw] : adj) {
        if (w == self_ || w == v) continue;
        if (shares_.at(v).count(w) || shares_.at(w).count(v)) adj[v].insert(w);
      }
    }
    (void)obs;
    return max_clique(adj, self_);
  }

  void establish(const Observation& obs, Decision& d) {
    Vec2 sum = obs.pos;
    for (auto id : proposal_->members) {
      if (id == self_) continue;
      const auto* a = obs.find(id);
      if (!a) {
        proposal_.reset();
        return;
      }
      sum += a->pos;
    }
    const auto n = static_cast<double>(proposal_->members.size());
    const Vec2 center = clamp_center(sum * (1.0 / n), cfg_);
    CircleEstablishment e{proposal_->id, proposal_->members, center,
                          circle_slots(proposal_->members, center, cfg_.s_max / 2.0)};
    std::vector<AgentId> to;
    for (auto id : proposal_->members) if (id != self_) to.push_back(id);
    send(d, std::move(to), std::move(e));
    const auto members = proposal_->members;
    begin_converging(proposal_->id, members, center);
    d.movement = step_towards(obs.pos, target_, cfg_.v_max);
  }

  void propose(Decision& d, std::vector<AgentId> members) {
    std::sort(members.begin(), members.end());
    OwnProposal p;
    p.id = make_circle_id(now_, members);
    p.members = members;
    p.step = now_;
    std::vector<AgentId> to;
    for (auto id : members) if (id != self_) to.push_back(id);
    send(d, to, CircleProposal{p.id, members});
    proposal_ = std::move(p);
  }

  void single_act(const Observation& obs, Decision& d, Rng& rng) {
    std::vector<AgentId> same;
    for (const auto& a : obs.visible) if (a.state == obs.state) same.push_back(a.id);
    std::vector<AgentId> in_circles;
    for (const auto& [id, k] : known_) in_circles = sorted_union(in_circles, k.members);
    std::vector<AgentId> singles;
    for (auto id : same) if (!contains(in_circles, id)) singles.push_back(id);

    if (same.empty()) {
      proposal_.reset();
      best_received_.reset();
      approved_.reset();
      last_shared_.clear();
      d.movement = random_step(rng, cfg_.v_max);
      return;
    }
    if (same != last_shared_) {
      std::vector<AgentSnapshot> seen;
      for (const auto& a : obs.visible) if (a.state == obs.state) seen.push_back(a);
      send(d, same, ObservationShare{std::move(seen)});
      last_shared_ = same;
      return;
    }

    if (best_received_ && best_received_->id != approved_.value_or(0)) {
      const auto clique = clique_for(obs, singles);
      if (best_received_->members.size() >= clique.size() && obs.find(best_received_->proposer)) {
        send(d, {best_received_->proposer}, CircleApproval{best_received_->id});
        approved_ = best_received_->id;
        approved_step_ = now_;
        proposal_.reset();
        best_received_.reset();
        return;
      }
      best_received_.reset();
    }
    if (approved_) {
      if (now_ - approved_step_ <= 3) return;
      approved_.reset();
    }

    if (proposal_) {
      std::vector<AgentId> approvers{self_};
      for (auto id : proposal_->approvals) approvers.push_back(id);
      if (approvers.size() == proposal_->members.size()) {
        establish(obs, d);
        return;
      }
      if (now_ - proposal_->step < 2) return;
      std::erase_if(approvers, [&](AgentId id) { return id != self_ && !obs.find(id); });
      if (approvers.size() >= 2) {
        propose(d, approvers);
        return;
      }
      proposal_.reset();
    }

    const auto clique = clique_for(obs, singles);
    if (clique.size() >= 2) {
      propose(d, clique);
      return;
    }

    if (singles.empty() && try_join(obs, d)) return;
    d.movement = random_step(rng, cfg_.v_max);
  }

  bool try_join(const Observation& obs, Decision& d) {
    const KnownCircle* best = nullptr;
    double best_dist = 0.0;
    for (const auto& [id, k] : known_) {
      if (k.members.size() + 1 > static_cast<std::size_t>(threshold_)) continue;
      if (visible_of(obs, k.members).empty()) continue;
      const double dist = distance(obs.pos, k.center);
      if (!best || dist < best_dist) {
        best = &k;
        best_dist = dist;
      }
    }
    if (!best) return false;
    if (now_ - last_join_step_ >= 4) {
      MergeProposal p{singleton_circle(self_), best->id, {self_}, obs.pos,
                      sorted_union(best->members, {self_})};
      send(d, visible_of(obs, best->members), std::move(p));
      last_join_step_ = now_;
    }
    return true;
  }

  // ----- Converging

  void converging_act(const Observation& obs, Decision& d, Rng& rng) {
    if (!drop_flipped(obs)) return;
    if (now_ - converging_since_ > cfg_.convergence_patience) {
      reset_to_single();
      return;
    }
    if (distance(obs.pos, target_) <= cfg_.d_r / 4.0) converged_.insert(self_);
    send(d, visible_of(obs, members_),
         ConvergenceState{circle_id_, std::vector<AgentId>(converged_.begin(), converged_.end())});
    d.movement = step_towards(obs.pos, target_, cfg_.v_max);
    // Blocked by another body since the last turn: sidestep at a random angle.
    const bool away = distance(obs.pos, target_) > cfg_.d_r / 4.0;
    if (away && last_pos_ && *last_pos_ == obs.pos) {
      std::uniform_real_distribution<double> turn(-std::numbers::pi / 2.0, std::numbers::pi / 2.0);
      const double a = turn(rng);
      const Vec2 m = d.movement;
      d.movement = {m.x * std::cos(a) - m.y * std::sin(a), m.x * std::sin(a) + m.y * std::cos(a)};
    }
    last_pos_ = obs.pos;
    if (converged_.size() == members_.size()) {
      formation_ = Formation::Circle;
      known_.clear();
    }
  }

  // ----- Circle

  static int cycle_of(int step) { return (step - 1) / 4; }

  void circle_act(const Observation& obs, Decision& d, Rng& rng) {
    if (!drop_flipped(obs)) return;
    const auto mates = visible_of(obs, members_);
    switch (circle_mode(now_)) {
      case CircleMode::Publicize: publicize(obs, d, rng, mates); break;
      case CircleMode::Discovery: {
        ExteriorInfo info;
        for (const auto& [id, k] : known_) info.circles.push_back({k.id, k.members, k.center});
        for (const auto& s : proposals_) info.proposals.push_back(s.proposal);
        if (!info.circles.empty() || !info.proposals.empty()) send(d, mates, std::move(info));
        break;
      }
      case CircleMode::Coordinate:
        if (coordinate(obs, d)) return;
        break;
      case CircleMode::Move:
        if (direction_ && direction_cycle_ == cycle_of(now_)) {
          center_ = direction_->center;
          target_ = center_ + offset_;
        }
        break;
    }
    d.movement = step_towards(obs.pos, target_, cfg_.v_max);
  }

  void publicize(const Observation& obs, Decision& d, Rng& rng, const std::vector<AgentId>& mates) {
    std::vector<AgentId> outsiders;
    for (const auto& a : obs.visible) {
      if (a.state == obs.state && !contains(members_, a.id)) outsiders.push_back(a.id);
    }
    send(d, outsiders, CirclePublication{circle_id_, members_, center_});
    if (members_.front() != self_) return;
    std::uniform_real_distribution<double> unif(0.0, 2.0 * std::numbers::pi);
    double angle = unif(rng);
    const double margin = cfg_.s_max / 2.0 + cfg_.d_r;
    Vec2 next = center_ + Vec2{std::cos(angle), std::sin(angle)} * cfg_.v_max;
    if (next.x < margin || next.x > cfg_.arena_width - margin) angle = std::numbers::pi - angle;
    if (next.y < margin || next.y > cfg_.arena_height - margin) angle = -angle;
    next = clamp_center(center_ + Vec2{std::cos(angle), std::sin(angle)} * cfg_.v_max, cfg_);
    direction_ = RandomDirection{circle_id_, angle, next};
    direction_cycle_ = cycle_of(now_);
    send(d, mates, *direction_);
  }

  // Returns true when this agent left the circle (approved a merge).
  bool coordinate(const Observation& obs, Decision& d) {
    std::vector<KnownCircle> neighbours;
    for (const auto& [id, k] : known_) {
      const bool overlaps = std::any_of(k.members.begin(), k.members.end(),
                                        [&](AgentId m) { return contains(members_, m); });
      if (!overlaps) neighbours.push_back(k);
    }
    std::vector<MergeProposal> props;
    for (const auto& s : proposals_) props.push_back(s.proposal);
    const auto choice = decide_merge(members_.size(), circle_id_, neighbours, props, threshold_);
    if (choice.kind == MergeChoice::Kind::Approve) {
      const auto& p = *choice.accepted;
      const auto merged = sorted_union(members_, p.proposer_members);
      const double wa = static_cast<double>(members_.size());
      const double wb = static_cast<double>(p.proposer_members.size());
      const Vec2 center =
          clamp_center((center_ * wa + p.proposer_center * wb) * (1.0 / (wa + wb)), cfg_);
      MergeApproval a{make_circle_id(now_, merged), circle_id_, p.proposer, merged, center};
      begin_converging(a.merge_id, merged, center);
      send(d, visible_of(obs, members_), a);
      d.movement = step_towards(obs.pos, target_, cfg_.v_max);
      return true;
    }
    if (choice.kind == MergeChoice::Kind::Propose) {
      const auto& f = *choice.partner;
      MergeProposal p{circle_id_, f.id, members_, center_, sorted_union(members_, f.members)};
      send(d, visible_of(obs, f.members), std::move(p));
    }
    return false;
  }

  AgentId self_;
  WorldConfig cfg_;
  int threshold_;
  int now_ = 0;
  Formation formation_ = Formation::Single;
  bool fresh_ = false;  // became Converging during this turn

  // Single
  std::vector<AgentId> last_shared_;
  std::map<AgentId, std::set<AgentId>> shares_;
  std::optional<OwnProposal> proposal_;
  std::optional<ReceivedProposal> best_received_;
  std::optional<CircleId> approved_;
  int approved_step_ = 0;
  int last_join_step_ = -100;

  // Converging and Circle
  CircleId circle_id_ = 0;
  std::vector<AgentId> members_;
  Vec2 center_;
  Vec2 target_;
  Vec2 offset_;  // target relative to the circle center
  std::set<AgentId> converged_;
  int converging_since_ = 0;
  std::optional<Vec2> last_pos_;
  std::map<CircleId, KnownCircle> known_;
  std::vector<StoredProposal> proposals_;
  std::set<CircleId> handled_merges_;
  std::optional<RandomDirection> direction_;
  int direction_cycle_ = -1;
};

class PotentialMind : public AgentMind {
 public:
  Decision act(const Observation& obs, std::span<const Message>, Rng&) override {
    return {potential_movement(obs), {}};
  }
};

class RandomMind : public AgentMind {
 public:
  explicit RandomMind(double v_max) : v_max_(v_max) {}
  Decision act(const Observation&, std::span<const Message>, Rng& rng) override {
    return {random_step(rng, v_max_), {}};
  }

 private:
  double v_max_;
};

}  // namespace

std::unique_ptr<AgentMind> FormationStrategy::make_mind(AgentId id, const WorldConfig& cfg) const {
  return std::make_unique<FormationMind>(id, cfg, threshold_);
}

std::unique_ptr<AgentMind> PotentialStrategy::make_mind(AgentId, const WorldConfig&) const {
  return std::make_unique<PotentialMind>();
}

std::unique_ptr<AgentMind> RandomWalkStrategy::make_mind(AgentId, const WorldConfig& cfg) const {
  return std::make_unique<RandomMind>(cfg.v_max);
}

std::unique_ptr<Strategy> make_strategy(std::string_view name, const WorldConfig& cfg) {
  if (name == "circle") {
    return std::make_unique<FormationStrategy>("circle", dense_circle_capacity(cfg.s_max / 2.0, cfg.d_r));
  }
  if (name == "clique") return std::make_unique<FormationStrategy>("clique", cfg.max_clique_size);
  if (name == "potential") return std::make_unique<PotentialStrategy>();
  if (name == "random") return std::make_unique<RandomWalkStrategy>();
  throw ConfigError("unknown strategy '" + std::string(name) +
                    "' (expected circle, clique, potential or random)");
}

}  // namespace contam

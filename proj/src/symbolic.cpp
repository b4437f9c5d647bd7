#include "relplan/symbolic.hpp"

#include <algorithm>

namespace relplan {

std::set<int> Skeleton::objects() const {
  std::set<int> ids;
  for (const Action& a : actions) ids.insert(a.object);
  return ids;
}

std::string Skeleton::text() const {
  std::string s;
  for (const Action& a : actions) {
    if (!s.empty()) s += ';';
    s += (a.kind == ActionKind::Pick) ? 'P' : 'L';
    s += std::to_string(a.object);
  }
  return s;
}

Skeleton Skeleton::parse(const std::string& s) {
  Skeleton sk;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t end = s.find(';', pos);
    if (end == std::string::npos) end = s.size();
    if (end - pos < 2) throw MalformedRecord("bad skeleton token in '" + s + "'");
    char k = s[pos];
    if (k != 'P' && k != 'L') throw MalformedRecord("bad skeleton token in '" + s + "'");
    Action a;
    a.kind = (k == 'P') ? ActionKind::Pick : ActionKind::Place;
    a.object = std::stoi(s.substr(pos + 1, end - pos - 1));
    sk.actions.push_back(a);
    pos = end + 1;
  }
  return sk;
}

static int times_moved(const SymbolicState& state, int id) {
  return int(std::count(state.moved.begin(), state.moved.end(), id));
}

bool object_clear(const SymbolicState& state, const Scene& scene, int id) {
  for (const auto& [top, sup] : scene.on_top_of) {
    if (sup != id) continue;
    bool lifted = state.cleared.count(top) > 0 || times_moved(state, top) > 0;
    if (!lifted) return false;
  }
  return true;
}

std::vector<Action> applicable_actions(const SymbolicState& state, const Scene& scene) {
  std::vector<Action> out;
  if (state.holding) {
    out.push_back({ActionKind::Place, *state.holding});
    return out;
  }
  for (const auto& o : scene.objects) {
    int id = o.spec.id;
    if (!object_clear(state, scene, id)) continue;
    if (times_moved(state, id) >= 2) continue;
    out.push_back({ActionKind::Pick, id});
  }
  return out;
}

SymbolicState succ(const SymbolicState& state, const Action& a) {
  SymbolicState next = state;
  if (a.kind == ActionKind::Pick) {
    if (state.holding)
      throw InapplicableAction("pick while holding object " + std::to_string(*state.holding));
    if (times_moved(state, a.object) >= 2)
      throw InapplicableAction("object " + std::to_string(a.object) + " already moved twice");
    next.holding = a.object;
    next.cleared.insert(a.object);
  } else {
    if (!state.holding || *state.holding != a.object)
      throw InapplicableAction("place without holding object " + std::to_string(a.object));
    next.holding.reset();
    next.moved.push_back(a.object);
    next.cleared.erase(a.object);
  }
  return next;
}

SkeletonStream::SkeletonStream(const Scene& scene, const GoalPredicate& g,
                               std::set<int> allowed, int k_max)
    : scene_(scene), subject_(g.subject), allowed_(std::move(allowed)), k_max_(k_max) {
  if (!allowed_.count(subject_))
    throw SubjectNotAllowed("goal subject " + std::to_string(subject_) +
                            " not in the allowed set");
}

void SkeletonStream::fill_level() {
  pending_.clear();
  cursor_ = 0;
  int pairs = level_ / 2;
  // Depth-first over pick choices in ascending id order yields the
  // lexicographic order within a level directly.
  std::vector<int> picks;
  auto rec = [&](auto&& self, const SymbolicState& state, int depth) -> void {
    if (depth == pairs) {
      if (picks.back() != subject_) return;
      Skeleton sk;
      for (int id : picks) {
        sk.actions.push_back({ActionKind::Pick, id});
        sk.actions.push_back({ActionKind::Place, id});
      }
      pending_.push_back(std::move(sk));
      return;
    }
    for (int id : allowed_) {
      if (!object_clear(state, scene_, id)) continue;
      if (std::count(state.moved.begin(), state.moved.end(), id) >= 2) continue;
      // the subject may only be placed by the final pair
      if (id == subject_ && depth + 1 < pairs &&
          std::count(state.moved.begin(), state.moved.end(), id) >= 1)
        continue;
      picks.push_back(id);
      SymbolicState next = succ(succ(state, {ActionKind::Pick, id}),
                                {ActionKind::Place, id});
      self(self, next, depth + 1);
      picks.pop_back();
    }
  };
  if (pairs > 0) rec(rec, SymbolicState{}, 0);
}

std::optional<Skeleton> SkeletonStream::next() {
  while (true) {
    if (cursor_ < pending_.size()) return pending_[cursor_++];
    if (level_ >= k_max_) return std::nullopt;
    level_ += 2;
    fill_level();
  }
}

std::vector<Skeleton> enumerate_skeletons(const Scene& scene, const GoalPredicate& g,
                                          const std::set<int>& allowed, int k_max) {
  SkeletonStream stream(scene, g, allowed, k_max);
  std::vector<Skeleton> out;
  while (auto sk = stream.next()) out.push_back(*sk);
  return out;
}

}  // namespace relplan

#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "relplan/scene.hpp"

namespace relplan {

enum class ActionKind { Pick, Place };

struct Action {
  ActionKind kind = ActionKind::Pick;
  int object = 0;

  bool operator==(const Action&) const = default;
};

inline int theta(const Action& a) { return a.object; }

// Alternates Pick, Place, ...; each Place's object equals the preceding
// Pick's; K = actions.size() is even.
struct Skeleton {
  std::vector<Action> actions;

  int K() const { return int(actions.size()); }
  std::set<int> objects() const;
  // log form "P4;L4;P2;L2"
  std::string text() const;
  static Skeleton parse(const std::string& s);

  bool operator==(const Skeleton&) const = default;
};

struct SymbolicState {
  std::optional<int> holding;
  std::vector<int> moved;  // ids in re-place order; an id appears at most twice
  std::set<int> cleared;   // currently lifted off their support
};

// Nothing may sit on o (that has not itself been lifted or moved), and o may
// have been re-placed at most once already.
bool object_clear(const SymbolicState& state, const Scene& scene, int id);

// Empty gripper: Pick(o) for every clear o, ascending id. Holding o: [Place(o)].
std::vector<Action> applicable_actions(const SymbolicState& state, const Scene& scene);

// Pure successor; throws InapplicableAction on a scene-independent precondition
// violation (full applicability is the caller's contract).
SymbolicState succ(const SymbolicState& state, const Action& a);

// Lazily yields every symbolically valid skeleton over `allowed` that ends
// with Place(g.subject), ordered by increasing K then lexicographically by the
// object-id sequence. Exhaustive up to k_max.
class SkeletonStream {
 public:
  SkeletonStream(const Scene& scene, const GoalPredicate& g,
                 std::set<int> allowed, int k_max);

  std::optional<Skeleton> next();

 private:
  void fill_level();

  const Scene& scene_;
  int subject_;
  std::set<int> allowed_;
  int k_max_;
  int level_ = 0;  // current K
  std::vector<Skeleton> pending_;
  size_t cursor_ = 0;
};

// Convenience for tests and small searches: all skeletons up to k_max in
// stream order.
std::vector<Skeleton> enumerate_skeletons(const Scene& scene, const GoalPredicate& g,
                                          const std::set<int>& allowed, int k_max);

}  // namespace relplan

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relplan/common.hpp"

namespace relplan {

// Workspace is the fixed unit square [0,1] x [0,1]. Axis convention: +x is
// "right", +y is "toward the camera" (front).
inline constexpr double kWorkspace = 1.0;
inline constexpr double kDefaultMargin = 0.01;

struct Pose2 {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Pose2&) const = default;
};

struct ObjectSpec {
  int id = 0;
  double hx = 0.0;  // half extent along x
  double hy = 0.0;  // half extent along y
  std::array<double, 3> color{0.0, 0.0, 0.0};
  int height_class = 0;  // 0 = table level, 1 = stacked

  bool operator==(const ObjectSpec&) const = default;
};

struct PlacedObject {
  ObjectSpec spec;
  Pose2 pose;

  bool operator==(const PlacedObject&) const = default;
};

struct Scene {
  std::vector<PlacedObject> objects;  // ascending id
  std::map<int, int> on_top_of;       // stacked id -> supporting id
  uint64_t rng_seed = 0;

  const PlacedObject& object(int id) const;
  const PlacedObject* find(int id) const;
  bool operator==(const Scene&) const = default;
};

enum class PredicateKind { OnLeft, OnRight, InFront, Behind, OnTop };

inline constexpr int kNumPredicateKinds = 5;
inline constexpr std::array<PredicateKind, kNumPredicateKinds> kAllPredicateKinds{
    PredicateKind::OnLeft, PredicateKind::OnRight, PredicateKind::InFront,
    PredicateKind::Behind, PredicateKind::OnTop};

std::string to_string(PredicateKind k);
PredicateKind predicate_kind_from_string(std::string_view s);
inline bool is_same_plane(PredicateKind k) { return k != PredicateKind::OnTop; }

struct GoalPredicate {
  PredicateKind kind = PredicateKind::OnLeft;
  int subject = 0;
  int reference = 0;

  bool operator==(const GoalPredicate&) const = default;
};

// ---- operations ---------------------------------------------------------------

// Places n_objects rectangles by seeded rejection sampling; with stack_one,
// the last object is put on top of a randomly chosen table-level object.
// Throws PlacementExhausted after 10,000 failed attempts for any object.
Scene sample_scene(int n_objects, uint64_t seed, bool stack_one);

bool eval_predicate(const Scene& scene, const GoalPredicate& g,
                    double margin = kDefaultMargin);

bool footprints_overlap(const PlacedObject& a, const PlacedObject& b);

// Throws Error with a description when an invariant is violated.
void validate_scene(const Scene& scene);

// Canonical one-line JSON (sorted keys, geometry quantized to 6 decimals).
// parse(serialize(s)) round-trips losslessly for scenes produced by
// sample_scene; serialize is idempotent for any scene.
std::string serialize_scene(const Scene& scene);
Scene parse_scene(const std::string& line);

}  // namespace relplan

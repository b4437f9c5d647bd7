#include "relplan/scene.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>

namespace relplan {

namespace {

constexpr int kMaxAttempts = 10000;
// Object footprint half-extent range. Sized so that 10-object scenes are
// cluttered enough to force multi-step plans while rejection sampling still
// terminates comfortably.
constexpr double kHalfExtentMin = 0.04;
constexpr double kHalfExtentMax = 0.10;
constexpr double kColorMinGap = 0.2;  // pairwise L-inf distance between colors

double linf(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  double d = 0.0;
  for (int i = 0; i < 3; ++i) d = std::max(d, std::fabs(a[i] - b[i]));
  return d;
}

}  // namespace

const PlacedObject& Scene::object(int id) const {
  const PlacedObject* p = find(id);
  if (!p) throw UnknownObject("unknown object id " + std::to_string(id));
  return *p;
}

const PlacedObject* Scene::find(int id) const {
  for (const auto& o : objects)
    if (o.spec.id == id) return &o;
  return nullptr;
}

std::string to_string(PredicateKind k) {
  switch (k) {
    case PredicateKind::OnLeft: return "on-left";
    case PredicateKind::OnRight: return "on-right";
    case PredicateKind::InFront: return "in-front";
    case PredicateKind::Behind: return "behind";
    case PredicateKind::OnTop: return "on-top";
  }
  throw Error("bad predicate kind");
}

PredicateKind predicate_kind_from_string(std::string_view s) {
  for (PredicateKind k : kAllPredicateKinds)
    if (to_string(k) == s) return k;
  throw Error("unknown predicate kind '" + std::string(s) + "'");
}

bool footprints_overlap(const PlacedObject& a, const PlacedObject& b) {
  // positive-area intersection: touching edges do not count
  return std::fabs(a.pose.x - b.pose.x) < a.spec.hx + b.spec.hx &&
         std::fabs(a.pose.y - b.pose.y) < a.spec.hy + b.spec.hy;
}

Scene sample_scene(int n_objects, uint64_t seed, bool stack_one) {
  if (n_objects < 3) throw Error("sample_scene requires at least 3 objects");
  Rng rng(seed);
  Scene scene;
  scene.rng_seed = seed;
  scene.objects.reserve(n_objects);

  auto sample_color = [&](std::array<double, 3>& color) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
      for (double& c : color) c = round6(rng.uniform01());
      bool ok = true;
      for (const auto& o : scene.objects)
        if (linf(color, o.spec.color) < kColorMinGap) { ok = false; break; }
      if (ok) return;
    }
    throw PlacementExhausted("could not find a distinct color");
  };

  int n_table = stack_one ? n_objects - 1 : n_objects;
  for (int id = 0; id < n_table; ++id) {
    PlacedObject obj;
    obj.spec.id = id;
    obj.spec.hx = round6(rng.uniform(kHalfExtentMin, kHalfExtentMax));
    obj.spec.hy = round6(rng.uniform(kHalfExtentMin, kHalfExtentMax));
    obj.spec.height_class = 0;
    sample_color(obj.spec.color);

    bool placed = false;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
      obj.pose.x = round6(rng.uniform(obj.spec.hx, kWorkspace - obj.spec.hx));
      obj.pose.y = round6(rng.uniform(obj.spec.hy, kWorkspace - obj.spec.hy));
      bool clash = false;
      for (const auto& other : scene.objects)
        if (footprints_overlap(obj, other)) { clash = true; break; }
      if (!clash) { placed = true; break; }
    }
    if (!placed)
      throw PlacementExhausted("no free placement for object " + std::to_string(id));
    scene.objects.push_back(obj);
  }

  if (stack_one) {
    int support = int(rng.below(uint64_t(n_table)));
    const PlacedObject& sup = scene.objects[size_t(support)];
    PlacedObject top;
    top.spec.id = n_table;
    top.spec.height_class = 1;
    // strictly smaller footprint so it fits inside the support
    top.spec.hx = round6(rng.uniform(0.3, 0.7) * sup.spec.hx);
    top.spec.hy = round6(rng.uniform(0.3, 0.7) * sup.spec.hy);
    sample_color(top.spec.color);
    double fx = sup.spec.hx - top.spec.hx;
    double fy = sup.spec.hy - top.spec.hy;
    top.pose.x = round6(rng.uniform(sup.pose.x - fx, sup.pose.x + fx));
    top.pose.y = round6(rng.uniform(sup.pose.y - fy, sup.pose.y + fy));
    scene.objects.push_back(top);
    scene.on_top_of[top.spec.id] = sup.spec.id;
  }
  return scene;
}

bool eval_predicate(const Scene& scene, const GoalPredicate& g, double margin) {
  const PlacedObject& a = scene.object(g.subject);
  const PlacedObject& b = scene.object(g.reference);
  switch (g.kind) {
    case PredicateKind::OnLeft:
      return a.pose.x + a.spec.hx <= b.pose.x - b.spec.hx - margin;
    case PredicateKind::OnRight:
      return a.pose.x - a.spec.hx >= b.pose.x + b.spec.hx + margin;
    case PredicateKind::InFront:
      return a.pose.y - a.spec.hy >= b.pose.y + b.spec.hy + margin;
    case PredicateKind::Behind:
      return a.pose.y + a.spec.hy <= b.pose.y - b.spec.hy - margin;
    case PredicateKind::OnTop: {
      auto it = scene.on_top_of.find(g.subject);
      return it != scene.on_top_of.end() && it->second == g.reference;
    }
  }
  throw Error("bad predicate kind");
}

void validate_scene(const Scene& scene) {
  for (size_t i = 0; i < scene.objects.size(); ++i) {
    const auto& o = scene.objects[i];
    if (i > 0 && scene.objects[i - 1].spec.id >= o.spec.id)
      throw Error("object ids not strictly ascending");
    if (!(o.spec.hx > 0.0 && o.spec.hy > 0.0))
      throw Error("half extents must be positive");
    if (o.spec.hx > kWorkspace / 4 || o.spec.hy > kWorkspace / 4)
      throw Error("half extent exceeds a quarter of the workspace");
    if (o.spec.height_class != 0 && o.spec.height_class != 1)
      throw Error("height_class must be 0 or 1");
    bool stacked = scene.on_top_of.count(o.spec.id) > 0;
    if (stacked != (o.spec.height_class == 1))
      throw Error("height_class inconsistent with support relation");
    if (o.spec.height_class == 0) {
      if (o.pose.x - o.spec.hx < 0 || o.pose.x + o.spec.hx > kWorkspace ||
          o.pose.y - o.spec.hy < 0 || o.pose.y + o.spec.hy > kWorkspace)
        throw Error("object outside workspace");
    }
    for (size_t j = i + 1; j < scene.objects.size(); ++j) {
      const auto& p = scene.objects[j];
      if (linf(o.spec.color, p.spec.color) < kColorMinGap)
        throw Error("colors closer than the distinctness floor");
      if (o.spec.height_class == 0 && p.spec.height_class == 0 &&
          footprints_overlap(o, p))
        throw Error("table-level footprints overlap");
    }
  }
  for (const auto& [top_id, sup_id] : scene.on_top_of) {
    const auto& top = scene.object(top_id);
    const auto& sup = scene.object(sup_id);
    if (top.spec.height_class != 1 || sup.spec.height_class != 0)
      throw Error("support relation must be one level deep");
    if (top.pose.x - top.spec.hx < sup.pose.x - sup.spec.hx ||
        top.pose.x + top.spec.hx > sup.pose.x + sup.spec.hx ||
        top.pose.y - top.spec.hy < sup.pose.y - sup.spec.hy ||
        top.pose.y + top.spec.hy > sup.pose.y + sup.spec.hy)
      throw Error("stacked footprint not contained in its support");
  }
}

std::string serialize_scene(const Scene& scene) {
  nlohmann::json objs = nlohmann::json::array();
  for (const auto& o : scene.objects) {
    objs.push_back({{"color",
                     {round6(o.spec.color[0]), round6(o.spec.color[1]),
                      round6(o.spec.color[2])}},
                    {"height", o.spec.height_class},
                    {"hx", round6(o.spec.hx)},
                    {"hy", round6(o.spec.hy)},
                    {"id", o.spec.id},
                    {"x", round6(o.pose.x)},
                    {"y", round6(o.pose.y)}});
  }
  nlohmann::json on_top = nlohmann::json::object();
  for (const auto& [top, sup] : scene.on_top_of) on_top[std::to_string(top)] = sup;
  nlohmann::json j{{"objects", objs}, {"on_top_of", on_top}, {"seed", scene.rng_seed}};
  return j.dump();
}

Scene parse_scene(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedRecord(std::string("scene json: ") + e.what());
  }
  Scene scene;
  scene.rng_seed = j.at("seed").get<uint64_t>();
  for (const auto& jo : j.at("objects")) {
    PlacedObject o;
    o.spec.id = jo.at("id").get<int>();
    o.spec.hx = jo.at("hx").get<double>();
    o.spec.hy = jo.at("hy").get<double>();
    o.spec.height_class = jo.at("height").get<int>();
    auto c = jo.at("color");
    o.spec.color = {c.at(0).get<double>(), c.at(1).get<double>(), c.at(2).get<double>()};
    o.pose.x = jo.at("x").get<double>();
    o.pose.y = jo.at("y").get<double>();
    scene.objects.push_back(o);
  }
  std::sort(scene.objects.begin(), scene.objects.end(),
            [](const auto& a, const auto& b) { return a.spec.id < b.spec.id; });
  for (const auto& [key, val] : j.at("on_top_of").items())
    scene.on_top_of[std::stoi(key)] = val.get<int>();
  return scene;
}

}  // namespace relplan

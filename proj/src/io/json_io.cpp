#include "finloc/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace finloc::io {
namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::vector<std::string> string_array(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const Json& e : j) {
    if (!e.is_string()) throw InputError(std::string(what) + " must contain strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Json labels_of_mask(const std::vector<std::string>& labels, Mask m) {
  std::vector<std::string> out;
  for_each_bit(m, [&](std::size_t i) { out.push_back(labels[i]); });
  return sorted(std::move(out));
}

std::size_t position(const std::vector<std::string>& labels, const std::string& l) {
  auto it = std::find(labels.begin(), labels.end(), l);
  if (it == labels.end()) throw InputError("unknown label '" + l + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

Json frame_map(const FiniteFrame& s, const FiniteFrame& t, const std::vector<Elem>& m) {
  Json out = Json::object();
  for (std::size_t a = 0; a < m.size(); ++a) out[s.label(static_cast<Elem>(a))] = t.label(m[a]);
  return out;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError("'" + path + "': " + e.what());
  }
}

Json poset_to_json(const FinitePoset& p) {
  Json leq = Json::array();
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& [i, j] : p.covers()) pairs.emplace_back(p.label(i), p.label(j));
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [a, b] : pairs) leq.push_back(Json::array({a, b}));
  return Json{{"elements", sorted(p.labels())}, {"leq", leq}};
}

FinitePoset poset_from_json(const Json& j) {
  std::vector<std::string> labels = string_array(require(j, "elements"), "elements");
  std::vector<std::pair<std::string, std::string>> leq;
  if (j.contains("leq")) {
    for (const Json& pair : j.at("leq")) {
      const auto ab = string_array(pair, "leq entry");
      if (ab.size() != 2) throw InputError("leq entries are pairs");
      leq.emplace_back(ab[0], ab[1]);
    }
  }
  return FinitePoset::validate(std::move(labels), leq);
}

Json space_to_json(const FiniteSpace& x) {
  std::vector<Json> opens;
  for (Mask u : x.opens()) opens.push_back(labels_of_mask(x.labels(), u));
  std::sort(opens.begin(), opens.end());
  return Json{{"points", sorted(x.labels())}, {"opens", opens}};
}

FiniteSpace space_from_json(const Json& j) {
  std::vector<std::string> points = string_array(require(j, "points"), "points");
  std::vector<Mask> opens;
  for (const Json& o : require(j, "opens")) {
    Mask m = 0;
    for (const std::string& l : string_array(o, "open set")) m |= bit(position(points, l));
    opens.push_back(m);
  }
  return FiniteSpace::from_opens(std::move(points), opens);
}

Json frame_to_json(const FiniteFrame& f) {
  Json j = poset_to_json(f.order());
  j["bottom"] = f.label(f.bottom());
  j["top"] = f.label(f.top());
  return j;
}

FrameRef frame_from_json(const Json& j) {
  FrameRef f = frame_from_poset(poset_from_json(j));
  if (j.contains("bottom") && j.at("bottom") != f->label(f->bottom())) throw InputError("bottom hint disagrees with the order");
  if (j.contains("top") && j.at("top") != f->label(f->top())) throw InputError("top hint disagrees with the order");
  return f;
}

Json hom_to_json(const FrameHom& h) {
  return Json{{"source", frame_to_json(*h.source())},
              {"target", frame_to_json(*h.target())},
              {"map", frame_map(*h.source(), *h.target(), h.map())}};
}

FrameHom hom_from_json(const Json& j) {
  FrameRef s = frame_from_json(require(j, "source"));
  FrameRef t = frame_from_json(require(j, "target"));
  const Json& m = require(j, "map");
  std::vector<Elem> map(s->size());
  for (Elem a = 0; a < static_cast<Elem>(s->size()); ++a) {
    if (!m.contains(s->label(a))) throw InputError("hom map misses '" + s->label(a) + "'");
    map[static_cast<std::size_t>(a)] = t->index_of(m.at(s->label(a)).get<std::string>());
  }
  return FrameHom(std::move(s), std::move(t), std::move(map));
}

Json point_map_to_json(const FiniteSpace& s, const FiniteSpace& t, const PointMap& m) {
  Json out = Json::object();
  for (std::size_t x = 0; x < m.size(); ++x) out[s.label(x)] = t.label(m[x]);
  return out;
}

Json map_to_json(const ContinuousMap& f) {
  return Json{{"source", space_to_json(f.source())},
              {"target", space_to_json(f.target())},
              {"map", point_map_to_json(f.source(), f.target(), f.image())}};
}

ContinuousMap map_from_json(const Json& j) {
  FiniteSpace s = space_from_json(require(j, "source"));
  FiniteSpace t = space_from_json(require(j, "target"));
  const Json& m = require(j, "map");
  PointMap image(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (!m.contains(s.label(x))) throw InputError("map misses '" + s.label(x) + "'");
    image[x] = t.index_of(m.at(s.label(x)).get<std::string>());
  }
  return ContinuousMap(std::move(s), std::move(t), std::move(image));
}

Json square_to_json(const LiftingSquare& s) {
  return Json{{"left", map_to_json(s.left)},
              {"right", map_to_json(s.right)},
              {"top", map_to_json(s.top)},
              {"bottom", map_to_json(s.bottom)}};
}

LiftingSquare square_from_json(const Json& j) {
  return LiftingSquare(map_from_json(require(j, "left")), map_from_json(require(j, "right")),
                       map_from_json(require(j, "top")), map_from_json(require(j, "bottom")));
}

std::vector<Arrow> generators_from_json(const Json& j) {
  const Json& list = j.is_array() ? j : require(j, "generators");
  if (!list.is_array()) throw InputError("generators must be an array");
  std::vector<Arrow> out;
  for (const Json& g : list) out.push_back(map_from_json(g));
  return out;
}

Json psspace_to_json(const PsSpace& xi) {
  Json lim = Json::object();
  for (std::size_t x = 0; x < xi.size(); ++x) lim[xi.label(x)] = labels_of_mask(xi.labels(), xi.lim(x));
  return Json{{"points", sorted(xi.labels())}, {"lim", lim}};
}

PsSpace psspace_from_json(const Json& j) {
  std::vector<std::string> points = string_array(require(j, "points"), "points");
  const Json& lim = require(j, "lim");
  std::vector<Mask> sets(points.size(), 0);
  for (std::size_t x = 0; x < points.size(); ++x) {
    if (!lim.contains(points[x])) throw InputError("lim misses '" + points[x] + "'");
    for (const std::string& l : string_array(lim.at(points[x]), "lim set")) sets[x] |= bit(position(points, l));
  }
  return PsSpace(std::move(points), std::move(sets));
}

Json tensor_to_json(const TensorFrame& t) {
  Json elements = Json::object();
  for (std::size_t k = 0; k < t.elements.size(); ++k) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for_each_bit(t.elements[k], [&](std::size_t p) {
      pairs.emplace_back(t.left()->label(t.carrier.first(p)), t.right()->label(t.carrier.second(p)));
    });
    std::sort(pairs.begin(), pairs.end());
    Json arr = Json::array();
    for (const auto& [a, b] : pairs) arr.push_back(Json::array({a, b}));
    elements[t.frame->label(static_cast<Elem>(k))] = arr;
  }
  return Json{{"left", frame_to_json(*t.left())},
              {"right", frame_to_json(*t.right())},
              {"frame", frame_to_json(*t.frame)},
              {"elements", elements}};
}

Json pushout_to_json(const PushoutLocaleResult& p) {
  const FiniteFrame& apex = *p.apex;
  Json pairs = Json::object();
  const FiniteFrame& b = *p.leg_b.left.target();
  const FiniteFrame& c = *p.leg_c.left.target();
  for (std::size_t k = 0; k < p.pairs.size(); ++k)
    pairs[apex.label(static_cast<Elem>(k))] = Json::array({b.label(p.pairs[k].first), c.label(p.pairs[k].second)});
  auto leg = [&](const GaloisConnection& g) {
    return Json{{"left", frame_map(apex, *g.left.target(), g.left.map())},
                {"right", frame_map(*g.left.target(), apex, g.right)}};
  };
  return Json{{"apex", frame_to_json(apex)}, {"pairs", pairs}, {"leg_b", leg(p.leg_b)}, {"leg_c", leg(p.leg_c)}};
}

Json trace_to_json(const FactorizationTrace& t, const std::vector<Arrow>& generators) {
  Json stages = Json::array();
  for (const FactorizationStage& st : t.stages) {
    Json problems = Json::array();
    for (const CellProblem& c : st.problems) {
      const Arrow& g = generators.at(c.generator);
      problems.push_back(Json{{"generator", c.generator},
                              {"top", point_map_to_json(g.source(), st.before, c.top)},
                              {"bottom", point_map_to_json(g.target(), t.original.target(), c.bottom)}});
    }
    stages.push_back(Json{{"before", space_to_json(st.before)},
                          {"problems", problems},
                          {"after", space_to_json(st.after)},
                          {"inclusion", point_map_to_json(st.before, st.after, st.inclusion)}});
  }
  return Json{{"original", map_to_json(t.original)},
              {"stages", stages},
              {"left", map_to_json(t.left)},
              {"right", map_to_json(t.right)},
              {"verdict", verdict_name(t.verdict)}};
}

}  // namespace finloc::io

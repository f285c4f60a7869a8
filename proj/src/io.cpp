#include "io.hpp"

#include <json.hpp>

namespace wgg {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
}

Vec parse_vec(const json& j, int d, const std::string& what) {
  if (!j.is_array()) throw parse_error(what + " must be an integer array");
  Vec v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw parse_error(what + " must contain integers");
    v.c.push_back(x.get<Int>());
  }
  if (d > 0 && v.dim() != d)
    throw parse_error(what + " has dimension " + std::to_string(v.dim()) + ", expected " +
                      std::to_string(d));
  return v;
}

std::vector<Vec> parse_vec_list(const json& j, int d, const std::string& what) {
  if (!j.is_array()) throw parse_error(what + " must be an array of integer arrays");
  std::vector<Vec> out;
  for (const auto& x : j) out.push_back(parse_vec(x, d, what));
  return out;
}

int parse_vertex(const json& j, int n, const std::string& what) {
  if (!j.is_number_integer()) throw parse_error(what + " must be an integer");
  Int v = j.get<Int>();
  if (v < 1 || v > n) throw parse_error(what + " out of range (vertices are 1-based)");
  return static_cast<int>(v) - 1;
}

GainGraph graph_from_json(const json& j) {
  if (!j.is_object()) throw parse_error("graph must be a JSON object");
  if (!j.contains("d") || !j.contains("n") || !j.contains("edges"))
    throw parse_error("graph needs fields d, n, edges");
  int d = j.at("d").get<int>();
  int n = j.at("n").get<int>();
  if (d < 1) throw parse_error("field d must be >= 1");
  if (n < 0) throw parse_error("field n must be >= 0");
  std::vector<Edge> edges;
  for (const auto& je : j.at("edges")) {
    if (!je.is_object() || !je.contains("type")) throw parse_error("edge needs a type");
    std::string type = je.at("type").get<std::string>();
    if (type == "link") {
      edges.push_back(Edge::link(parse_vertex(je.at("tail"), n, "edge tail"),
                                 parse_vertex(je.at("head"), n, "edge head"),
                                 parse_vec(je.at("gain"), d, "edge gain")));
    } else if (type == "loop") {
      edges.push_back(Edge::loop(parse_vertex(je.at("vertex"), n, "loop vertex"),
                                 parse_vec(je.at("gain"), d, "loop gain")));
    } else if (type == "half") {
      edges.push_back(Edge::half(parse_vertex(je.at("vertex"), n, "half-edge vertex")));
    } else if (type == "loose") {
      edges.push_back(Edge::loose());
    } else {
      throw parse_error("unknown edge type: " + type);
    }
  }
  return GainGraph(d, n, std::move(edges));
}

ColorSet colorset_from_json(const json& j, int d) {
  if (j.is_string() && j.get<std::string>() == "all") return ColorSet::all();
  if (!j.is_object()) throw parse_error("color set must be an object or \"all\"");
  if (j.contains("set")) return ColorSet::finite(parse_vec_list(j.at("set"), d, "set element"));
  if (j.contains("ideal")) return ColorSet::ideal(parse_vec(j.at("ideal"), d, "ideal bound"));
  if (j.contains("cone")) {
    const auto& jc = j.at("cone");
    std::vector<Vec> excl;
    if (jc.contains("excl")) excl = parse_vec_list(jc.at("excl"), d, "cone exclusion");
    return ColorSet::cone(parse_vec(jc.at("apex"), d, "cone apex"), std::move(excl));
  }
  throw parse_error("color set needs one of: set, ideal, cone, \"all\"");
}

Weight weight_from_json(const json& j, Semigroup sg, int d) {
  switch (sg) {
    case Semigroup::MaxZd:
      return Weight::max_zd(parse_vec(j, d, "weight"));
    case Semigroup::SumZd:
      return Weight::sum_zd(parse_vec(j, d, "weight"));
    case Semigroup::FiniteList:
      return Weight::finite_list(ColorSet::finite(parse_vec_list(j, d, "list element")));
    case Semigroup::ConeMinusFinite: {
      if (!j.is_object() || !j.contains("apex"))
        throw parse_error("cone-minus-finite weight needs {apex, excl}");
      std::vector<Vec> excl;
      if (j.contains("excl")) excl = parse_vec_list(j.at("excl"), d, "weight exclusion");
      return Weight::cone_minus_finite(
          ColorSet::cone(parse_vec(j.at("apex"), d, "weight apex"), std::move(excl)));
    }
    case Semigroup::Pair: {
      if (!j.is_object() || !j.contains("list") || !j.contains("filter"))
        throw parse_error("pair weight needs {list, filter}");
      return Weight::pair(colorset_from_json(j.at("list"), d),
                          colorset_from_json(j.at("filter"), d));
    }
  }
  throw parse_error("unknown semigroup");
}

}  // namespace

GainGraph parse_gain_graph(const std::string& text) { return graph_from_json(parse_json(text)); }

WeightedGainGraph parse_weighted_graph(const std::string& text) {
  json j = parse_json(text);
  GainGraph g = graph_from_json(j);
  if (!j.contains("semigroup") || !j.contains("weights"))
    throw parse_error("weighted graph needs fields semigroup and weights");
  Semigroup sg = semigroup_from_tag(j.at("semigroup").get<std::string>());
  const auto& jw = j.at("weights");
  if (!jw.is_array() || static_cast<int>(jw.size()) != g.n)
    throw parse_error("weights must be an array with one entry per vertex");
  std::vector<Weight> weights;
  for (const auto& w : jw) weights.push_back(weight_from_json(w, sg, g.d));
  return WeightedGainGraph(std::move(g), sg, std::move(weights));
}

bool has_weights(const std::string& text) {
  json j = parse_json(text);
  return j.is_object() && j.contains("weights");
}

WeightedGainGraph with_semigroup(const WeightedGainGraph& wg, Semigroup sg) {
  if (wg.sg == sg) return wg;
  bool vec_pair = (wg.sg == Semigroup::MaxZd || wg.sg == Semigroup::SumZd) &&
                  (sg == Semigroup::MaxZd || sg == Semigroup::SumZd);
  if (!vec_pair)
    throw semantic_error("can only re-tag weights between max-zd and sum-zd");
  std::vector<Weight> weights;
  for (const Weight& w : wg.weights)
    weights.push_back(sg == Semigroup::MaxZd ? Weight::max_zd(w.vec) : Weight::sum_zd(w.vec));
  return WeightedGainGraph(wg.graph, sg, std::move(weights));
}

AffinographicArrangement parse_arrangement(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("hyperplanes"))
    throw parse_error("arrangement needs fields n and hyperplanes");
  AffinographicArrangement arr;
  arr.n = j.at("n").get<int>();
  arr.d = j.contains("d") ? j.at("d").get<int>() : 1;
  for (const auto& jh : j.at("hyperplanes")) {
    Hyperplane h;
    h.i = parse_vertex(jh.at("i"), arr.n, "hyperplane index i");
    h.j = parse_vertex(jh.at("j"), arr.n, "hyperplane index j");
    h.a = parse_vec(jh.at("a"), arr.d, "hyperplane shift");
    arr.planes.push_back(std::move(h));
  }
  arr.validate();
  return arr;
}

ColorFilter parse_filter(const std::string& text, int n, int d) {
  json j = parse_json(text);
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw parse_error("filter must be an array with one entry per vertex");
  ColorFilter filter;
  for (const auto& jf : j) filter.push_back(colorset_from_json(jf, d));
  return filter;
}

std::vector<std::vector<Int>> parse_lists(const std::string& text, int n) {
  json j = parse_json(text);
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw parse_error("lists must be an array with one entry per coordinate");
  std::vector<std::vector<Int>> out;
  for (const auto& jl : j) {
    if (!jl.is_array()) throw parse_error("each list must be an integer array");
    std::vector<Int> l;
    for (const auto& x : jl) l.push_back(x.get<Int>());
    out.push_back(std::move(l));
  }
  return out;
}

std::vector<ColorSet> parse_bounded_lists(const std::string& text, int n) {
  json j = parse_json(text);
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw parse_error("lists must be an array with one entry per coordinate");
  std::vector<ColorSet> out;
  for (const auto& jl : j) {
    if (jl.is_string() && jl.get<std::string>() == "all") {
      out.push_back(ColorSet::cone(Vec({0})));  // all nonnegative integers
    } else if (jl.is_array()) {
      std::vector<Vec> elems;
      for (const auto& x : jl) elems.push_back(Vec({x.get<Int>()}));
      out.push_back(ColorSet::finite(std::move(elems)));
    } else {
      throw parse_error("each list must be an integer array or \"all\"");
    }
  }
  return out;
}

std::vector<Vec> parse_matrix(const std::string& text, const std::string& key, int n, int d) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains(key)) throw parse_error("input needs field " + key);
  std::vector<Vec> rows = parse_vec_list(j.at(key), d, key + " row");
  if (static_cast<int>(rows.size()) != n)
    throw parse_error(key + " must have one row per coordinate");
  return rows;
}

}  // namespace wgg

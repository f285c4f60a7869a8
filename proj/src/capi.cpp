#include "wgg.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "verify.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
wgg_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return WGG_OK;
  } catch (const wgg::parse_error& e) {
    g_last_error = e.what();
    return WGG_ERR_PARSE;
  } catch (const wgg::semantic_error& e) {
    g_last_error = e.what();
    return WGG_ERR_SEMANTIC;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return WGG_ERR_SEMANTIC;
  }
}

}  // namespace

struct wgg_graph {
  wgg::GainGraph graph;
  bool weighted = false;
  wgg::WeightedGainGraph wgraph;

  const wgg::WeightedGainGraph& require_weights() const {
    if (!weighted) throw wgg::semantic_error("operation needs vertex weights");
    return wgraph;
  }
};

struct wgg_arrangement {
  wgg::AffinographicArrangement arr;
};

extern "C" {

const char* wgg_last_error(void) { return g_last_error.c_str(); }

void wgg_string_free(char* s) { std::free(s); }

wgg_status wgg_graph_parse(const char* json, wgg_graph** out) {
  return guarded([&] {
    if (!json || !out) throw wgg::semantic_error("null argument");
    auto handle = std::make_unique<wgg_graph>();
    std::string text(json);
    if (wgg::has_weights(text)) {
      handle->wgraph = wgg::parse_weighted_graph(text);
      handle->graph = handle->wgraph.graph;
      handle->weighted = true;
    } else {
      handle->graph = wgg::parse_gain_graph(text);
    }
    *out = handle.release();
  });
}

void wgg_graph_free(wgg_graph* g) { delete g; }

wgg_status wgg_graph_set_semigroup(wgg_graph* g, const char* tag) {
  return guarded([&] {
    if (!g || !tag) throw wgg::semantic_error("null argument");
    wgg::Semigroup sg = wgg::semigroup_from_tag(tag);
    g->wgraph = wgg::with_semigroup(g->require_weights(), sg);
  });
}

wgg_status wgg_arrangement_parse(const char* json, wgg_arrangement** out) {
  return guarded([&] {
    if (!json || !out) throw wgg::semantic_error("null argument");
    auto handle = std::make_unique<wgg_arrangement>();
    handle->arr = wgg::parse_arrangement(json);
    *out = handle.release();
  });
}

void wgg_arrangement_free(wgg_arrangement* a) { delete a; }

wgg_status wgg_qpoly(const wgg_graph* g, wgg_format format, char** out) {
  return guarded([&] {
    if (!g || !out) throw wgg::semantic_error("null argument");
    const auto& wg = g->require_weights();
    wgg::QPolynomial subset = wgg::q_total_subset(wg);
    if (!(subset == wgg::q_total_delcon(wg)))
      throw wgg::semantic_error("subset and deletion-contraction expansions disagree");
    *out = dup_string(format == WGG_FORMAT_MACHINE ? wgg::to_machine(subset)
                                                   : wgg::to_human(subset));
  });
}

wgg_status wgg_forest(const wgg_graph* g, const int* order, int order_len, wgg_format format,
                      char** out) {
  return guarded([&] {
    if (!g || !out) throw wgg::semantic_error("null argument");
    const auto& wg = g->require_weights();
    wgg::EdgeOrdering o = wgg::EdgeOrdering::identity(wg.graph.edge_count());
    if (order) {
      if (order_len != wg.graph.edge_count())
        throw wgg::semantic_error("ordering must be a permutation of all edges");
      std::vector<bool> seen(static_cast<size_t>(order_len), false);
      for (int i = 0; i < order_len; ++i) {
        int e = order[i] - 1;  // 1-based in the interface
        if (e < 0 || e >= order_len || seen[static_cast<size_t>(e)])
          throw wgg::semantic_error("ordering must be a permutation of all edges");
        seen[static_cast<size_t>(e)] = true;
        o.order[static_cast<size_t>(i)] = e;
      }
    }
    wgg::QPolynomial poly = wgg::forest_expansion(wg, o);
    *out = dup_string(format == WGG_FORMAT_MACHINE ? wgg::to_machine(poly)
                                                   : wgg::to_human(poly, "y"));
  });
}

wgg_status wgg_mobius(const wgg_graph* g, wgg_format format, char** out) {
  return guarded([&] {
    if (!g || !out) throw wgg::semantic_error("null argument");
    wgg::LatB lat = wgg::lat_b(g->graph);
    std::string text;
    if (format == WGG_FORMAT_MACHINE) {
      text = "{\"empty_closed\":" + std::string(lat.empty_closed ? "true" : "false") +
             ",\"elements\":[";
      for (size_t i = 0; i < lat.sets.size(); ++i) {
        if (i) text += ",";
        text += "{\"edges\":[";
        auto edges = wgg::edge_list(lat.sets[i]);
        for (size_t k = 0; k < edges.size(); ++k) {
          if (k) text += ",";
          text += std::to_string(edges[k] + 1);
        }
        text += "],\"mu\":" + std::to_string(lat.mu[i]) + "}";
      }
      text += "]}";
    } else {
      if (!lat.empty_closed)
        text += "empty set not closed (balanced loop or loose edge); all mu = 0\n";
      for (size_t i = 0; i < lat.sets.size(); ++i) {
        text += "{";
        auto edges = wgg::edge_list(lat.sets[i]);
        for (size_t k = 0; k < edges.size(); ++k) {
          if (k) text += ",";
          text += "e" + std::to_string(edges[k] + 1);
        }
        text += "}  mu=" + std::to_string(lat.mu[i]) + "\n";
      }
    }
    *out = dup_string(text);
  });
}

wgg_status wgg_chi(const wgg_graph* g, const char* filter_json, long long* out) {
  return guarded([&] {
    if (!g || !out) throw wgg::semantic_error("null argument");
    const auto& wg = g->require_weights();
    wgg::ColorFilter filter = filter_json
                                  ? wgg::parse_filter(filter_json, wg.graph.n, wg.graph.d)
                                  : wgg::no_filter(wg.graph.n);
    long long count = wgg::list_chromatic(wg, filter);
    if (count != wgg::chi_from_q(wg, filter))
      throw wgg::semantic_error("Mobius count and polynomial evaluation disagree");
    *out = count;
  });
}

wgg_status wgg_count_orthotope(const wgg_arrangement* a, const long long* m, int n,
                               long long* out) {
  return guarded([&] {
    if (!a || !m || !out) throw wgg::semantic_error("null argument");
    *out = wgg::count_orthotope(a->arr, std::vector<wgg::Int>(m, m + n));
  });
}

wgg_status wgg_count_lists(const wgg_arrangement* a, const char* lists_json, long long* out) {
  return guarded([&] {
    if (!a || !lists_json || !out) throw wgg::semantic_error("null argument");
    *out = wgg::count_lists(a->arr, wgg::parse_lists(lists_json, a->arr.n));
  });
}

wgg_status wgg_count_lists_bounded(const wgg_arrangement* a, const char* lists_json,
                                   const long long* m, int n, long long* out) {
  return guarded([&] {
    if (!a || !lists_json || !m || !out) throw wgg::semantic_error("null argument");
    *out = wgg::count_lists_bounded(a->arr, wgg::parse_bounded_lists(lists_json, a->arr.n),
                                    std::vector<wgg::Int>(m, m + n));
  });
}

wgg_status wgg_count_matrix(const wgg_arrangement* a, const long long* h, const long long* m,
                            long long* out) {
  return guarded([&] {
    if (!a || !h || !m || !out) throw wgg::semantic_error("null argument");
    std::vector<wgg::Vec> H, M;
    for (int i = 0; i < a->arr.n; ++i) {
      H.emplace_back(std::vector<wgg::Int>(h + i * a->arr.d, h + (i + 1) * a->arr.d));
      M.emplace_back(std::vector<wgg::Int>(m + i * a->arr.d, m + (i + 1) * a->arr.d));
    }
    *out = wgg::count_matrix(a->arr, H, M);
  });
}

wgg_status wgg_piecewise(const wgg_graph* g, const long long* m, int len, wgg_format format,
                         char** out) {
  return guarded([&] {
    if (!g || !m || !out) throw wgg::semantic_error("null argument");
    const auto& wg = g->require_weights();
    if (len != wg.graph.n * wg.graph.d)
      throw wgg::semantic_error("bound matrix must have n*d entries");
    std::vector<wgg::Vec> bounds;
    for (int i = 0; i < wg.graph.n; ++i)
      bounds.emplace_back(
          std::vector<wgg::Int>(m + i * wg.graph.d, m + (i + 1) * wg.graph.d));
    wgg::PiecewiseEvaluation ev = wgg::chi_piecewise(wg, bounds);
    std::string text;
    if (format == WGG_FORMAT_MACHINE) {
      text = "{\"value\":" + std::to_string(ev.value) + ",\"threshold\":[";
      for (size_t i = 0; i < ev.threshold.size(); ++i) {
        if (i) text += ",";
        text += "[";
        for (int k = 0; k < ev.threshold[i].dim(); ++k) {
          if (k) text += ",";
          text += std::to_string(ev.threshold[i][k]);
        }
        text += "]";
      }
      text += "],\"above_threshold\":" + std::string(ev.above_threshold ? "true" : "false") +
              ",\"chamber\":\"" + ev.chamber + "\",\"chamber_polynomial\":\"" +
              ev.chamber_poly.to_string() + "\"}";
    } else {
      text = "value: " + std::to_string(ev.value) + "\nthreshold:";
      for (const auto& t : ev.threshold) text += " " + wgg::to_string(t);
      text += std::string("\nabove threshold: ") + (ev.above_threshold ? "yes" : "no") +
              "\nchamber: " + ev.chamber +
              "\nchamber polynomial: " + ev.chamber_poly.to_string() + "\n";
    }
    *out = dup_string(text);
  });
}

wgg_status wgg_verify(unsigned long long seed, int max_n, int max_e, int max_d,
                      wgg_format format, char** report) {
  bool ok = false;
  wgg_status status = guarded([&] {
    wgg::VerifyOptions options;
    if (seed) options.seed = seed;
    if (max_n > 0) options.max_n = max_n;
    if (max_e > 0) options.max_e = max_e;
    if (max_d > 0) options.max_d = max_d;
    wgg::VerifyReport rep = wgg::run_verify(options);
    ok = rep.ok();
    if (report)
      *report = dup_string(format == WGG_FORMAT_MACHINE ? wgg::report_machine(rep)
                                                        : wgg::report_human(rep));
  });
  if (status != WGG_OK) return status;
  if (!ok) {
    g_last_error = "verification suites reported failures";
    return WGG_ERR_VERIFY;
  }
  return WGG_OK;
}

}  // extern "C"

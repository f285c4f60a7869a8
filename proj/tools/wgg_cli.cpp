// Command-line front end for the weighted-gain-graph engine.  All
// computation goes through the C API in wgg.h; this file only parses
// arguments, reads files, and prints.
//
// Exit codes: 0 ok, 1 parse error, 2 semantic error, 3 verification failure.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "wgg.h"

namespace {

struct CliError {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError{1, "cannot open input file: " + path};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

[[noreturn]] void fail(wgg_status status) {
  throw CliError{static_cast<int>(status), wgg_last_error()};
}

void require_ok(wgg_status status) {
  if (status != WGG_OK) fail(status);
}

// Bounds: vertices separated by ';', coordinates by ','.  A bare
// comma-separated list is accepted for d = 1.
std::vector<long long> parse_bounds(const std::string& text, int n, int d) {
  std::vector<long long> out;
  std::string group;
  std::vector<std::string> groups;
  std::stringstream ss(text);
  while (std::getline(ss, group, ';')) groups.push_back(group);
  if (static_cast<int>(groups.size()) == 1 && d == 1 && n > 1) {
    groups.clear();
    std::stringstream flat(text);
    while (std::getline(flat, group, ',')) groups.push_back(group);
  }
  if (static_cast<int>(groups.size()) != n)
    throw CliError{2, "--m needs " + std::to_string(n) + " entries separated by ';'"};
  for (const auto& gtext : groups) {
    std::stringstream gs(gtext);
    std::string coord;
    int count = 0;
    while (std::getline(gs, coord, ',')) {
      try {
        out.push_back(std::stoll(coord));
      } catch (...) {
        throw CliError{1, "--m contains a non-integer: " + coord};
      }
      ++count;
    }
    if (count != d) throw CliError{2, "--m entries need " + std::to_string(d) + " coordinates"};
  }
  return out;
}

struct GraphHandle {
  wgg_graph* ptr = nullptr;
  ~GraphHandle() { wgg_graph_free(ptr); }
};

struct ArrangementHandle {
  wgg_arrangement* ptr = nullptr;
  ~ArrangementHandle() { wgg_arrangement_free(ptr); }
};

struct StringOut {
  char* ptr = nullptr;
  ~StringOut() { wgg_string_free(ptr); }
};

int graph_n(const std::string& text) {
  auto pos = text.find("\"n\"");
  if (pos == std::string::npos) throw CliError{1, "input has no field n"};
  pos = text.find(':', pos);
  return std::stoi(text.substr(pos + 1));
}

int graph_d(const std::string& text) {
  auto pos = text.find("\"d\"");
  if (pos == std::string::npos) return 1;
  pos = text.find(':', pos);
  return std::stoi(text.substr(pos + 1));
}

// Extracts a top-level JSON field as raw text (objects/arrays only), enough
// for pulling "lists", "H", "M", "filter" out of combined input files.
std::string extract_json_field(const std::string& text, const std::string& key) {
  auto pos = text.find("\"" + key + "\"");
  if (pos == std::string::npos) return "";
  pos = text.find(':', pos);
  if (pos == std::string::npos) return "";
  ++pos;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos >= text.size()) return "";
  char open = text[pos];
  char close = open == '[' ? ']' : (open == '{' ? '}' : '\0');
  if (!close) return "";
  int depth = 0;
  for (size_t i = pos; i < text.size(); ++i) {
    if (text[i] == open) ++depth;
    if (text[i] == close && --depth == 0) return text.substr(pos, i - pos + 1);
  }
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wgg: exact counting engine for weighted gain graphs and "
               "affinographic arrangements"};
  app.require_subcommand(1);

  std::string input, format = "human", order_text, m_text, semigroup, filter_path;
  unsigned long long seed = 0;
  int max_n = 0, max_e = 0, max_d = 0;

  auto add_common = [&](CLI::App* cmd, bool needs_input = true) {
    if (needs_input) cmd->add_option("--input", input, "input JSON file")->required();
    cmd->add_option("--format", format, "output format: human | machine");
  };

  CLI::App* qpoly = app.add_subcommand("qpoly", "total dichromatic polynomial (both expansions)");
  add_common(qpoly);
  qpoly->add_option("--semigroup", semigroup, "re-tag vector weights: max-zd | sum-zd");

  CLI::App* forest = app.add_subcommand("forest", "spanning-forest expansion");
  add_common(forest);
  forest->add_option("--order", order_text, "edge permutation, e.g. 3,1,2 (1-based)");
  forest->add_option("--semigroup", semigroup, "re-tag vector weights: max-zd | sum-zd");

  CLI::App* mobius = app.add_subcommand("mobius", "closed balanced sets with Mobius values");
  add_common(mobius);

  CLI::App* chi = app.add_subcommand("chi", "count proper colorations");
  add_common(chi);
  chi->add_option("--m", m_text, "upper-bound filter per vertex, e.g. 3,4;5,6");
  chi->add_option("--filter", filter_path, "filter JSON file (one entry per vertex)");

  CLI::App* corth = app.add_subcommand("count-orthotope", "lattice points in an orthotope "
                                                          "avoiding the arrangement");
  add_common(corth);
  corth->add_option("--m", m_text, "orthotope bounds, e.g. 2,3")->required();

  CLI::App* clists = app.add_subcommand("count-lists", "list points avoiding the arrangement");
  add_common(clists);
  clists->add_option("--m", m_text, "optional bounds (switches to the bounded count)");

  CLI::App* cmatrix = app.add_subcommand("count-matrix", "integer matrices between bounds "
                                                         "avoiding row subspaces");
  add_common(cmatrix);

  CLI::App* piecewise = app.add_subcommand("piecewise", "piecewise chromatic evaluation with "
                                                        "threshold and chamber polynomial");
  add_common(piecewise);
  piecewise->add_option("--m", m_text, "bound matrix, e.g. 3,4;5,6")->required();

  CLI::App* verify = app.add_subcommand("verify", "run the randomized oracle-equivalence suites");
  add_common(verify, false);
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--max-n", max_n, "max vertices for random instances");
  verify->add_option("--max-e", max_e, "max edges for random instances");
  verify->add_option("--max-d", max_d, "max gain dimension for random instances");

  CLI11_PARSE(app, argc, argv);

  wgg_format fmt = format == "machine" ? WGG_FORMAT_MACHINE : WGG_FORMAT_HUMAN;
  try {
    if (format != "human" && format != "machine")
      throw CliError{1, "unknown --format: " + format};
    if (app.got_subcommand(qpoly) || app.got_subcommand(forest) || app.got_subcommand(mobius) ||
        app.got_subcommand(chi) || app.got_subcommand(piecewise)) {
      std::string text = read_file(input);
      GraphHandle g;
      require_ok(wgg_graph_parse(text.c_str(), &g.ptr));
      if (!semigroup.empty()) require_ok(wgg_graph_set_semigroup(g.ptr, semigroup.c_str()));

      StringOut out;
      if (app.got_subcommand(qpoly)) {
        require_ok(wgg_qpoly(g.ptr, fmt, &out.ptr));
        std::printf("%s\n", out.ptr);
      } else if (app.got_subcommand(forest)) {
        std::vector<int> order;
        if (!order_text.empty()) {
          std::stringstream ss(order_text);
          std::string tok;
          while (std::getline(ss, tok, ',')) order.push_back(std::stoi(tok));
        }
        require_ok(wgg_forest(g.ptr, order.empty() ? nullptr : order.data(),
                              static_cast<int>(order.size()), fmt, &out.ptr));
        std::printf("%s\n", out.ptr);
      } else if (app.got_subcommand(mobius)) {
        require_ok(wgg_mobius(g.ptr, fmt, &out.ptr));
        std::printf("%s", out.ptr);
      } else if (app.got_subcommand(chi)) {
        std::string filter_json;
        if (!filter_path.empty()) {
          filter_json = read_file(filter_path);
        } else if (!m_text.empty()) {
          int n = graph_n(text), d = graph_d(text);
          auto bounds = parse_bounds(m_text, n, d);
          filter_json = "[";
          for (int i = 0; i < n; ++i) {
            if (i) filter_json += ",";
            filter_json += "{\"ideal\":[";
            for (int k = 0; k < d; ++k) {
              if (k) filter_json += ",";
              filter_json += std::to_string(bounds[static_cast<size_t>(i * d + k)]);
            }
            filter_json += "]}";
          }
          filter_json += "]";
        } else {
          filter_json = extract_json_field(text, "filter");
        }
        long long count = 0;
        require_ok(wgg_chi(g.ptr, filter_json.empty() ? nullptr : filter_json.c_str(), &count));
        std::printf("%lld\n", count);
      } else {
        int n = graph_n(text), d = graph_d(text);
        auto bounds = parse_bounds(m_text, n, d);
        require_ok(wgg_piecewise(g.ptr, bounds.data(), static_cast<int>(bounds.size()), fmt,
                                 &out.ptr));
        std::printf("%s\n", out.ptr);
      }
      return 0;
    }

    if (app.got_subcommand(corth) || app.got_subcommand(clists) || app.got_subcommand(cmatrix)) {
      std::string text = read_file(input);
      ArrangementHandle arr;
      require_ok(wgg_arrangement_parse(text.c_str(), &arr.ptr));
      int n = graph_n(text), d = graph_d(text);
      long long count = 0;
      if (app.got_subcommand(corth)) {
        auto m = parse_bounds(m_text, n, 1);
        require_ok(wgg_count_orthotope(arr.ptr, m.data(), n, &count));
      } else if (app.got_subcommand(clists)) {
        std::string lists = extract_json_field(text, "lists");
        if (lists.empty()) throw CliError{1, "input needs a \"lists\" field"};
        if (m_text.empty()) {
          require_ok(wgg_count_lists(arr.ptr, lists.c_str(), &count));
        } else {
          auto m = parse_bounds(m_text, n, 1);
          require_ok(wgg_count_lists_bounded(arr.ptr, lists.c_str(), m.data(), n, &count));
        }
      } else {
        std::string hfield = extract_json_field(text, "H");
        std::string mfield = extract_json_field(text, "M");
        if (hfield.empty() || mfield.empty()) throw CliError{1, "input needs fields H and M"};
        auto parse_rows = [&](const std::string& rows) {
          std::vector<long long> flat;
          std::string cleaned;
          for (char ch : rows)
            cleaned += (ch == '[' || ch == ']') ? ' ' : ch;
          std::stringstream ss(cleaned);
          std::string tok;
          while (std::getline(ss, tok, ',')) {
            if (tok.find_first_not_of(" \t\n") == std::string::npos) continue;
            flat.push_back(std::stoll(tok));
          }
          if (static_cast<int>(flat.size()) != n * d)
            throw CliError{2, "bound matrix must have n*d entries"};
          return flat;
        };
        auto H = parse_rows(hfield);
        auto M = parse_rows(mfield);
        require_ok(wgg_count_matrix(arr.ptr, H.data(), M.data(), &count));
      }
      std::printf("%lld\n", count);
      return 0;
    }

    // verify
    StringOut report;
    wgg_status status = wgg_verify(seed, max_n, max_e, max_d, fmt, &report.ptr);
    if (report.ptr) std::printf("%s", report.ptr);
    if (status == WGG_ERR_VERIFY) return 3;
    require_ok(status);
    return 0;
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return e.code;
  }
}

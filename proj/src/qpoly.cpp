#include "qpoly.hpp"

#include <algorithm>
#include <numeric>

namespace wgg {

Rational::Rational(Int n, Int d) : num(n), den(d) {
  if (den == 0) throw semantic_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                  checked_mul(a.den, b.den));
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
}

Rational pow(const Rational& base, int exp) {
  if (exp < 0) throw semantic_error("negative exponent");
  Rational r{1};
  for (int i = 0; i < exp; ++i) r = r * base;
  return r;
}

std::string to_string(const Rational& r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

QPolynomial QPolynomial::one() {
  QPolynomial p;
  p.terms[Monomial{}] = 1;
  return p;
}

QPolynomial QPolynomial::uvar(const Weight& w) {
  QPolynomial p;
  std::string key = weight_key(w);
  p.terms[Monomial{{key}, 0, 0}] = 1;
  p.udict[key] = w;
  return p;
}

QPolynomial QPolynomial::vz(int vexp, int zexp, Int coef) {
  QPolynomial p;
  if (coef) p.terms[Monomial{{}, vexp, zexp}] = coef;
  return p;
}

void QPolynomial::add_term(Monomial m, Int coef) {
  if (!coef) return;
  auto [it, inserted] = terms.emplace(std::move(m), coef);
  if (!inserted) {
    it->second = checked_add(it->second, coef);
    if (it->second == 0) terms.erase(it);
  }
}

void QPolynomial::absorb_dict(const QPolynomial& other) {
  udict.insert(other.udict.begin(), other.udict.end());
}

QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial r = a;
  for (const auto& [m, c] : b.terms) r.add_term(m, c);
  r.absorb_dict(b);
  return r;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial r;
  for (const auto& [ma, ca] : a.terms) {
    for (const auto& [mb, cb] : b.terms) {
      Monomial m = ma;
      m.ukeys.insert(m.ukeys.end(), mb.ukeys.begin(), mb.ukeys.end());
      std::sort(m.ukeys.begin(), m.ukeys.end());
      m.vexp += mb.vexp;
      m.zexp += mb.zexp;
      r.add_term(std::move(m), checked_mul(ca, cb));
    }
  }
  r.absorb_dict(a);
  r.absorb_dict(b);
  return r;
}

QPolynomial operator*(const QPolynomial& a, Int c) {
  QPolynomial r;
  if (!c) return r;
  for (const auto& [m, coef] : a.terms) r.terms[m] = checked_mul(coef, c);
  r.udict = a.udict;
  return r;
}

QPolynomial z_zero_part(const QPolynomial& p) {
  QPolynomial r;
  for (const auto& [m, c] : p.terms)
    if (m.zexp == 0) r.terms[m] = c;
  r.udict = p.udict;
  return r;
}

QPolynomial shift_v(const QPolynomial& p, Int c) {
  QPolynomial r;
  r.udict = p.udict;
  for (const auto& [m, coef] : p.terms) {
    // v^k -> (v + c)^k expanded binomially.
    Int binom = 1;
    Int cpow = 1;
    for (int j = m.vexp; j >= 0; --j) {
      Monomial t = m;
      t.vexp = j;
      r.add_term(std::move(t), checked_mul(coef, checked_mul(binom, cpow)));
      if (j > 0) {
        binom = checked_mul(binom, j) / (m.vexp - j + 1);
        cpow = checked_mul(cpow, c);
      }
    }
  }
  return r;
}

namespace {

// Canonical display order: z-degree, then v-degree, then u-multiset.
bool display_less(const Monomial& a, const Monomial& b) {
  if (a.zexp != b.zexp) return a.zexp < b.zexp;
  if (a.vexp != b.vexp) return a.vexp < b.vexp;
  return a.ukeys < b.ukeys;
}

std::string strip_tag(const std::string& key) {
  auto pos = key.find(':');
  return pos == std::string::npos ? key : key.substr(pos + 1);
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string to_human(const QPolynomial& p, const std::string& vsym) {
  if (p.terms.empty()) return "0";
  std::vector<const std::pair<const Monomial, Int>*> sorted;
  for (const auto& t : p.terms) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(),
            [](auto* a, auto* b) { return display_less(a->first, b->first); });
  std::string out;
  for (auto* t : sorted) {
    const auto& [m, c] = *t;
    Int coef = c;
    if (out.empty()) {
      if (coef < 0) {
        out += "-";
        coef = -coef;
      }
    } else {
      out += coef < 0 ? " - " : " + ";
      if (coef < 0) coef = -coef;
    }
    std::vector<std::string> factors;
    if (coef != 1 || (m.ukeys.empty() && m.vexp == 0 && m.zexp == 0))
      factors.push_back(std::to_string(coef));
    for (const auto& k : m.ukeys) factors.push_back("u[" + strip_tag(k) + "]");
    if (m.vexp == 1) factors.push_back(vsym);
    if (m.vexp > 1) factors.push_back(vsym + "^" + std::to_string(m.vexp));
    if (m.zexp == 1) factors.push_back("z");
    if (m.zexp > 1) factors.push_back("z^" + std::to_string(m.zexp));
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) out += "*";
      out += factors[i];
    }
  }
  return out;
}

std::string to_machine(const QPolynomial& p) {
  std::vector<const std::pair<const Monomial, Int>*> sorted;
  for (const auto& t : p.terms) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(),
            [](auto* a, auto* b) { return display_less(a->first, b->first); });
  std::string out = "{\"terms\":[";
  bool first = true;
  for (auto* t : sorted) {
    const auto& [m, c] = *t;
    if (!first) out += ",";
    first = false;
    out += "{\"u\":[";
    for (size_t i = 0; i < m.ukeys.size(); ++i) {
      if (i) out += ",";
      out += "\"" + json_escape(m.ukeys[i]) + "\"";
    }
    out += "],\"v\":" + std::to_string(m.vexp) + ",\"z\":" + std::to_string(m.zexp) +
           ",\"coef\":" + std::to_string(c) + "}";
  }
  out += "]}";
  return out;
}

Rational evaluate(const QPolynomial& p, const std::map<std::string, Rational>& u_assign,
                  const Rational& v, const Rational& z) {
  Rational total{0};
  for (const auto& [m, c] : p.terms) {
    Rational term{c};
    for (const auto& key : m.ukeys) {
      auto it = u_assign.find(key);
      if (it == u_assign.end()) throw semantic_error("missing u-variable assignment: " + key);
      term = term * it->second;
    }
    term = term * pow(v, m.vexp) * pow(z, m.zexp);
    total = total + term;
  }
  return total;
}

QPolynomial q_total_subset(const WeightedGainGraph& wg) {
  const GainGraph& g = wg.graph;
  require_enumerable(g);
  const int m = g.edge_count();
  QPolynomial out;
  for (EdgeSet s = 0; s < (EdgeSet{1} << m); ++s) {
    SubgraphAnalysis a = analyze_subgraph(g, s);
    int b = a.part.balanced_count();
    int c = a.part.size();

    EdgeSet sb = 0;
    for (int e = 0; e < m; ++e) {
      if (!edge_in(s, e)) continue;
      const Edge& ed = g.edges[static_cast<size_t>(e)];
      if (ed.tail < 0) continue;
      if (a.part.block_balanced[static_cast<size_t>(
              a.part.block_of[static_cast<size_t>(ed.tail)])])
        sb |= edge_bit(e);
    }
    SwitchingFunction eta = top_switching(g, sb);

    Monomial mono;
    mono.vexp = popcount(s) - g.n + b;
    mono.zexp = c - b;
    for (size_t bi = 0; bi < a.part.blocks.size(); ++bi) {
      if (!a.part.block_balanced[bi]) continue;
      const auto& block = a.part.blocks[bi];
      Weight acc = weight_act(wg.weights[static_cast<size_t>(block.front())],
                              eta[static_cast<size_t>(block.front())]);
      for (size_t i = 1; i < block.size(); ++i)
        acc = weight_add(acc, weight_act(wg.weights[static_cast<size_t>(block[i])],
                                         eta[static_cast<size_t>(block[i])]));
      std::string key = weight_key(acc);
      out.udict.emplace(key, std::move(acc));
      mono.ukeys.push_back(std::move(key));
    }
    std::sort(mono.ukeys.begin(), mono.ukeys.end());
    out.add_term(std::move(mono), 1);
  }
  return out;
}

QPolynomial q_total_delcon(const WeightedGainGraph& wg) {
  for (int e = 0; e < wg.graph.edge_count(); ++e) {
    if (wg.graph.edges[static_cast<size_t>(e)].kind == EdgeKind::Link) {
      QPolynomial del = q_total_delcon(delete_edges(wg, edge_bit(e)));
      QPolynomial con = q_total_delcon(contract(wg, edge_bit(e)));
      return del + con;
    }
  }
  // Link-free remainder: loops, half and loose edges, isolated vertices.
  return q_total_subset(wg);
}

QPolynomial q_graph(const WeightedGainGraph& wg) {
  const GainGraph& g = wg.graph;
  require_enumerable(g);
  for (const Edge& e : g.edges)
    if (e.kind == EdgeKind::Half || e.kind == EdgeKind::Loose)
      throw semantic_error("q_graph rejects half and loose edges");
  const int m = g.edge_count();
  QPolynomial out;
  for (EdgeSet s = 0; s < (EdgeSet{1} << m); ++s) {
    SpanningPartition part = components(g, s);
    Monomial mono;
    mono.vexp = popcount(s) - g.n + part.size();
    for (const auto& block : part.blocks) {
      Weight acc = wg.weights[static_cast<size_t>(block.front())];
      for (size_t i = 1; i < block.size(); ++i)
        acc = weight_add(acc, wg.weights[static_cast<size_t>(block[i])]);
      std::string key = weight_key(acc);
      out.udict.emplace(key, std::move(acc));
      mono.ukeys.push_back(std::move(key));
    }
    std::sort(mono.ukeys.begin(), mono.ukeys.end());
    out.add_term(std::move(mono), 1);
  }
  return out;
}

}  // namespace wgg

#include "silc/serialize.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace silc {

json to_json(const Weight& w) { return json(w.c); }
json to_json(const Coweight& xi) { return json(xi.c); }

json to_json(const CartanDatum& cd, const AffineWeylElement& x) {
  (void)cd;
  json j;
  j["word"] = x.fin.word;
  j["trans"] = x.trans.c;
  return j;
}

json to_json(const CartanDatum& cd, const SiLSPath& pi) {
  json j;
  j["shape"] = to_json(pi.shape);
  json dirs = json::array();
  for (const auto& d : pi.dirs) dirs.push_back(to_json(cd, d));
  j["dirs"] = std::move(dirs);
  json breaks = json::array();
  for (const auto& b : pi.breaks) breaks.push_back(b.str());
  j["breaks"] = std::move(breaks);
  return j;
}

json to_json(const GroupAlgebraElement& f) {
  json arr = json::array();
  for (auto& [w, c] : f.terms) {
    json t;
    t["weight"] = w.c;
    t["coeff"] = c;
    arr.push_back(std::move(t));
  }
  return arr;
}

json to_json(const GradedCharacter& g) {
  json j;
  j["q_cutoff"] = g.q_cutoff;
  json arr = json::array();
  for (auto& [q, layer] : g.terms)
    for (auto& [w, c] : layer.terms) {
      json t;
      t["weight"] = w.c;
      t["q"] = q;
      t["coeff"] = c;
      arr.push_back(std::move(t));
    }
  j["terms"] = std::move(arr);
  return j;
}

json to_json(const LaurentCharacter& f) {
  json arr = json::array();
  for (auto& [k, c] : f.terms) {
    json t;
    t["weight"] = k.first.c;
    t["q"] = k.second;
    t["coeff"] = c;
    arr.push_back(std::move(t));
  }
  return arr;
}

json to_json(const CartanDatum& cd, const KClassCombo& k) {
  json j;
  j["base_twist"] = to_json(k.base_twist);
  j["q_cutoff"] = k.q_cutoff;
  json arr = json::array();
  for (auto& [y, coeff] : k.terms) {
    json t;
    t["key"] = to_json(cd, y);
    t["coeff"] = to_json(coeff);
    arr.push_back(std::move(t));
  }
  j["terms"] = std::move(arr);
  return j;
}

json to_json(const Report& r) {
  json j;
  j["pass"] = r.pass;
  j["detail"] = r.detail;
  return j;
}

Weight weight_from_json(const json& j) { return Weight(j.get<std::vector<int>>()); }
Coweight coweight_from_json(const json& j) { return Coweight(j.get<std::vector<int>>()); }

AffineWeylElement affine_from_json(const CartanDatum& cd, const json& j) {
  AffineWeylElement x = aff_identity(cd);
  for (int i : j.at("word").get<std::vector<int>>()) x = aff_multiply(cd, x, affine_simple(cd, i));
  Coweight tr = coweight_from_json(j.at("trans"));
  if (tr.rank() != cd.rank) throw input_error("affine element: translation rank mismatch");
  // the serialized word is the finite part's word and trans the full
  // translation: recombine directly
  AffineWeylElement out{x.fin, tr};
  return out;
}

SiLSPath path_from_json(const CartanDatum& cd, const json& j) {
  SiLSPath pi;
  pi.shape = weight_from_json(j.at("shape"));
  for (const auto& d : j.at("dirs")) pi.dirs.push_back(affine_from_json(cd, d));
  for (const auto& b : j.at("breaks")) pi.breaks.push_back(parse_frac(b.get<std::string>()));
  return pi;
}

namespace {

std::vector<int> split_ints(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    try {
      out.push_back(std::stoi(cur));
    } catch (const std::logic_error&) {
      throw input_error("malformed integer list: " + text);
    }
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ' ' || ch == ',' || ch == '\t')
      flush();
    else
      cur.push_back(ch);
  }
  flush();
  return out;
}

}  // namespace

Weight parse_weight_csv(const CartanDatum& cd, const std::string& text) {
  std::vector<int> v = split_ints(text);
  if (static_cast<int>(v.size()) != cd.rank) throw input_error("weight has wrong rank: " + text);
  return Weight(v);
}

Coweight parse_coweight_csv(const CartanDatum& cd, const std::string& text) {
  std::vector<int> v = split_ints(text);
  if (static_cast<int>(v.size()) != cd.rank) throw input_error("coweight has wrong rank: " + text);
  return Coweight(v);
}

AffineWeylElement parse_affine(const CartanDatum& cd, const std::string& text) {
  auto semi = text.find(';');
  std::string word_part = semi == std::string::npos ? text : text.substr(0, semi);
  std::string trans_part = semi == std::string::npos ? "" : text.substr(semi + 1);
  AffineWeylElement x = aff_identity(cd);
  for (int i : split_ints(word_part)) {
    if (i < 0 || i > cd.rank) throw input_error("simple index out of range in: " + text);
    x = aff_multiply(cd, x, affine_simple(cd, i));
  }
  std::vector<int> tr = split_ints(trans_part);
  if (!tr.empty()) {
    if (static_cast<int>(tr.size()) != cd.rank) throw input_error("translation has wrong rank: " + text);
    x = aff_multiply(cd, x, translation(cd, Coweight(tr)));
  }
  return x;
}

FiniteWeylElement parse_finite_word(const CartanDatum& cd, const std::string& text) {
  FiniteWeylElement w = cd.identity_element();
  for (int i : split_ints(text)) {
    if (i == 0) throw input_error("index 0 denotes s_0 and is only meaningful in affine elements");
    if (i < 1 || i > cd.rank) throw input_error("simple index out of range in: " + text);
    w = multiply(cd, w, cd.s(i));
  }
  return w;
}

std::string text_of(const CartanDatum& cd, const AffineWeylElement& x) {
  (void)cd;
  std::ostringstream os;
  os << "s[";
  for (size_t i = 0; i < x.fin.word.size(); ++i) os << (i ? " " : "") << x.fin.word[i];
  os << "] t(";
  for (size_t i = 0; i < x.trans.c.size(); ++i) os << (i ? "," : "") << x.trans.c[i];
  os << ")";
  return os.str();
}

std::string text_of(const GradedCharacter& g) {
  std::ostringstream os;
  bool first = true;
  for (auto& [q, layer] : g.terms)
    for (auto& [w, c] : layer.terms) {
      if (!first) os << " + ";
      first = false;
      if (c != 1) os << c << "*";
      os << "e(";
      for (size_t i = 0; i < w.c.size(); ++i) os << (i ? "," : "") << w.c[i];
      os << ")";
      if (q != 0) os << "q^" << q;
    }
  if (first) os << "0";
  os << "   [cutoff q^" << g.q_cutoff << "]";
  return os.str();
}

std::string bruhat_graph_dot(const CartanDatum& cd, const AffineWeylElement& x, const ParabolicSet& J,
                             int levels, const Budget& budget) {
  AffineWeylElement base = pij(cd, x, J);
  std::set<AffineWeylElement> seen{base};
  std::vector<AffineWeylElement> frontier{base};
  std::ostringstream os;
  os << "digraph sib {\n  rankdir=BT;\n";
  auto node = [&](const AffineWeylElement& z) {
    std::ostringstream n;
    n << "\"" << text_of(cd, z) << "\"";
    return n.str();
  };
  std::vector<std::string> edges;
  std::size_t visited = 1;
  for (int lev = 0; lev < levels; ++lev) {
    std::vector<AffineWeylElement> next;
    for (const auto& z : frontier)
      for (auto& [beta, up] : si_covers(cd, z, J)) {
        std::ostringstream lab;
        lab << "(";
        for (size_t i = 0; i < beta.alpha.c.size(); ++i) lab << (i ? "," : "") << beta.alpha.c[i];
        lab << ")+" << beta.delta_coeff << "d";
        edges.push_back("  " + node(z) + " -> " + node(up) + " [label=\"" + lab.str() + "\"];");
        if (seen.insert(up).second) {
          next.push_back(up);
          if (++visited > budget.max_nodes) throw resource_error("bruhat_graph_dot: node budget exceeded");
        }
      }
    frontier = std::move(next);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const auto& e : edges) os << e << "\n";
  os << "}\n";
  return os.str();
}

}  // namespace silc

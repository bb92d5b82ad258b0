#include "adlv/render.hpp"

#include <cstdio>
#include <map>
#include <sstream>

#include "adlv/errors.hpp"

namespace adlv {

namespace {

using nlohmann::json;

json label_json(std::optional<StratumLabel> const &a)
{
  if (!a)
    return nullptr;
  return {{"k", a->k}, {"l", a->l}};
}

std::optional<StratumLabel> label_from(json const &j)
{
  if (j.is_null())
    return std::nullopt;
  return StratumLabel{j.at("k").get<int>(), j.at("l").get<int>()};
}

template <class T>
json opt_json(std::optional<T> const &v)
{
  if (!v)
    return nullptr;
  return *v;
}

std::optional<int> int_from(json const &j)
{
  if (j.is_null())
    return std::nullopt;
  return j.get<int>();
}

RefSet set_from(int n, json const &j)
{
  return RefSet::from_indices(n, j.get<std::vector<int>>());
}

std::string node_id(StratumLabel const &a)
{
  return "w_" + std::to_string(a.k) + "_" + std::to_string(a.l);
}

std::string opt_label(std::optional<StratumLabel> const &a)
{
  return a ? to_string(*a) : "-";
}

std::string opt_int(std::optional<int> const &v)
{
  return v ? std::to_string(*v) : "-";
}

} // namespace

nlohmann::json to_json(int n, std::vector<StratumRecord> const &records)
{
  json strata = json::array();
  for (StratumRecord const &r : records) {
    strata.push_back({
      {"k", r.label.k},
      {"l", r.label.l},
      {"class", to_string(r.cls)},
      {"length", r.length},
      {"dim", opt_json(r.dim)},
      {"target", label_json(r.target)},
      {"rank", opt_json(r.rank)},
      {"base", label_json(r.base)},
      {"parahoric", r.parahoric.indices()},
      {"supp_sigma", r.supp_sigma.indices()},
      {"s_w_sigma", r.s_w_sigma.indices()},
      {"positive_coxeter", r.positive_coxeter},
      {"j_set", r.j_set ? json(r.j_set->indices()) : json(nullptr)},
    });
  }
  return {{"schema", json_schema_version}, {"n", n}, {"strata", strata}};
}

std::vector<StratumRecord> records_from_json(nlohmann::json const &j)
{
  try {
    if (j.at("schema").get<int>() != json_schema_version)
      throw Error("unsupported schema version");
    int const n = j.at("n").get<int>();
    std::vector<StratumRecord> res;
    for (json const &s : j.at("strata")) {
      StratumRecord r;
      r.label = {s.at("k").get<int>(), s.at("l").get<int>()};
      r.cls = class_from_string(s.at("class").get<std::string>());
      r.length = s.at("length").get<int>();
      r.dim = int_from(s.at("dim"));
      r.target = label_from(s.at("target"));
      r.rank = int_from(s.at("rank"));
      r.base = label_from(s.at("base"));
      r.parahoric = set_from(n, s.at("parahoric"));
      r.supp_sigma = set_from(n, s.at("supp_sigma"));
      r.s_w_sigma = set_from(n, s.at("s_w_sigma"));
      r.positive_coxeter = s.at("positive_coxeter").get<bool>();
      if (s.contains("j_set") && !s.at("j_set").is_null())
        r.j_set = set_from(n, s.at("j_set"));
      res.push_back(std::move(r));
    }
    return res;
  } catch (json::exception const &e) {
    throw Error(std::string("malformed strata JSON: ") + e.what());
  }
}

std::string render_table(int n, std::vector<StratumRecord> const &records)
{
  std::ostringstream os;
  os << "n=" << n << "\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-10s %-7s %6s %4s %-10s %4s %-10s %-4s  %s\n", "label",
                "class", "length", "dim", "target", "rank", "base", "pcox", "parahoric");
  os << line;
  for (StratumRecord const &r : records) {
    std::string pcox = r.cls == StratumClass::NotDL ? (r.positive_coxeter ? "yes" : "no") : "-";
    std::string para = r.cls == StratumClass::Empty ? "-" : r.parahoric.str();
    std::snprintf(line, sizeof line, "%-10s %-7s %6d %4s %-10s %4s %-10s %-4s  %s\n",
                  to_string(r.label).c_str(), to_string(r.cls).c_str(), r.length,
                  opt_int(r.dim).c_str(), opt_label(r.target).c_str(),
                  opt_int(r.rank).c_str(), opt_label(r.base).c_str(), pcox.c_str(),
                  para.c_str());
    os << line;
  }
  return os.str();
}

std::string render_dot(StratumGraph const &g)
{
  std::map<int, std::vector<StratumLabel>> by_dim;
  for (StratumRecord const &r : g.nodes)
    by_dim[r.dim.value_or(0)].push_back(r.label);

  std::ostringstream os;
  os << "digraph \"strata_n" << g.n << "\" {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=plaintext];\n";
  for (StratumRecord const &r : g.nodes) {
    os << "  \"" << node_id(r.label) << "\" [label=\"" << to_string(r.label)
       << "\", class=\"" << to_string(r.cls) << "\"];\n";
  }
  for (auto const &[dim, labels] : by_dim) {
    os << "  { rank=same;";
    for (StratumLabel const &a : labels)
      os << " \"" << node_id(a) << "\";";
    os << " }\n";
  }
  for (StratumEdge const &e : g.edges)
    os << "  \"" << node_id(e.from) << "\" -> \"" << node_id(e.to) << "\" [style=solid];\n";
  os << "}\n";
  return os.str();
}

std::string render_figure(StratumGraph const &g)
{
  std::ostringstream os;
  os << "n " << g.n << "\n";
  os << "nodes " << g.nodes.size() << "\n";
  for (StratumRecord const &r : g.nodes)
    os << to_string(r.label) << "\n";
  os << "edges " << g.edges.size() << "\n";
  for (StratumEdge const &e : g.edges)
    os << to_string(e.from) << " -> " << to_string(e.to) << "\n";
  return os.str();
}

bool dot_well_formed(std::string const &dot)
{
  // Every identifier is quoted, quotes pair up, and braces balance outside
  // quoted strings.
  int depth = 0;
  bool quoted = false;
  bool seen_open = false;
  for (std::size_t i = 0; i < dot.size(); ++i) {
    char ch = dot[i];
    if (ch == '"') {
      quoted = !quoted;
      continue;
    }
    if (quoted)
      continue;
    if (ch == '{') {
      ++depth;
      seen_open = true;
    } else if (ch == '}') {
      if (--depth < 0)
        return false;
    }
  }
  if (quoted || depth != 0 || !seen_open)
    return false;
  if (dot.rfind("digraph ", 0) != 0)
    return false;

  std::istringstream lines(dot);
  std::string line;
  while (std::getline(lines, line)) {
    auto arrow = line.find("->");
    if (arrow == std::string::npos)
      continue;
    auto lhs = line.find_first_not_of(' ');
    if (lhs == std::string::npos || line[lhs] != '"')
      return false;
    auto rhs = line.find_first_not_of(' ', arrow + 2);
    if (rhs == std::string::npos || line[rhs] != '"')
      return false;
  }
  return true;
}

} // namespace adlv

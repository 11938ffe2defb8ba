#include "semihyp/io.hpp"

#include <fstream>
#include <sstream>

#include "semihyp/groups.hpp"

namespace semihyp {

FiniteSemigroup semigroup_from_json(const json& j) {
  if (!j.contains("order") || !j.contains("table"))
    throw Error("Cayley JSON needs \"order\" and \"table\" fields");
  std::size_t n = j.at("order").get<std::size_t>();
  auto table = j.at("table").get<std::vector<std::vector<std::size_t>>>();
  if (table.size() != n)
    throw Error("table size does not match \"order\"");
  std::vector<std::string> names;
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
  FiniteSemigroup s = validate(std::move(table), std::move(names));
  if (j.contains("zero")) {
    std::size_t claimed = j.at("zero").get<std::size_t>();
    if (!s.zero() || *s.zero() != claimed)
      throw Error("declared zero element " + std::to_string(claimed) +
                  " does not satisfy the zero law");
  }
  return s;
}

json semigroup_to_json(const FiniteSemigroup& s) {
  json j;
  j["order"] = s.order();
  if (s.has_names()) j["names"] = s.names();
  j["table"] = s.table();
  if (s.zero()) j["zero"] = *s.zero();
  return j;
}

FiniteSemigroup semigroup_from_text(std::istream& in) {
  std::size_t n = 0;
  if (!(in >> n) || n == 0) throw Error("text table: bad order line");
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(in >> table[i][j])) throw Error("text table: truncated input");
  return validate(std::move(table));
}

std::string semigroup_to_text(const FiniteSemigroup& s) {
  std::ostringstream out;
  out << s.order() << "\n";
  for (std::size_t i = 0; i < s.order(); ++i) {
    for (std::size_t j = 0; j < s.order(); ++j)
      out << (j ? " " : "") << s.mul(i, j);
    out << "\n";
  }
  return out.str();
}

const std::map<std::string, FiniteSemigroup>& named_fixtures() {
  static const std::map<std::string, FiniteSemigroup> all = [] {
    std::map<std::string, FiniteSemigroup> m = fixtures();
    for (std::size_t n = 1; n <= 12; ++n)
      m.emplace("C" + std::to_string(n), cyclic_group(n));
    m.emplace("C2xC2", direct_product(cyclic_group(2), cyclic_group(2)));
    m.emplace("C2xC4", direct_product(cyclic_group(2), cyclic_group(4)));
    m.emplace("C2xC6", direct_product(cyclic_group(2), cyclic_group(6)));
    m.emplace("C3xC3", direct_product(cyclic_group(3), cyclic_group(3)));
    m.emplace("C2xC2xC2",
              direct_product(cyclic_group(2),
                             direct_product(cyclic_group(2), cyclic_group(2))));
    m.emplace("C5xC5", direct_product(cyclic_group(5), cyclic_group(5)));
    m.emplace("S3", symmetric_group_3());
    m.emplace("D4", dihedral_group_4());
    m.emplace("Q8", quaternion_group_8());
    m.emplace("Q12", q12_group());
    m.emplace("C4sdC4", c4_semidirect_c4());
    m.emplace("Q8xC2", direct_product(quaternion_group_8(), cyclic_group(2)));
    return m;
  }();
  return all;
}

FiniteSemigroup load_semigroup(const std::string& spec) {
  const std::string prefix = "fixtures:";
  if (spec.rfind(prefix, 0) == 0) {
    std::string name = spec.substr(prefix.size());
    auto it = named_fixtures().find(name);
    if (it == named_fixtures().end())
      throw Error("unknown fixture \"" + name + "\"");
    return it->second;
  }
  std::ifstream in(spec);
  if (!in) throw Error("cannot open input file \"" + spec + "\"");
  char first = 0;
  in >> std::ws;
  first = static_cast<char>(in.peek());
  if (first == '{') {
    json j;
    in >> j;
    return semigroup_from_json(j);
  }
  return semigroup_from_text(in);
}

json sandwich_to_json(const SandwichMatrix& p) {
  json rows = json::array();
  for (const auto& row : p.entries) {
    json r = json::array();
    for (const auto& e : row) {
      if (e)
        r.push_back(*e);
      else
        r.push_back("theta");
    }
    rows.push_back(std::move(r));
  }
  return {{"m", p.cols}, {"n", p.rows}, {"entries", rows}};
}

SandwichMatrix sandwich_from_json(const json& j) {
  SandwichMatrix p;
  p.cols = j.at("m").get<std::size_t>();
  p.rows = j.at("n").get<std::size_t>();
  for (const auto& row : j.at("entries")) {
    std::vector<std::optional<std::size_t>> r;
    for (const auto& e : row) {
      if (e.is_string()) {
        if (e.get<std::string>() != "theta")
          throw Error("sandwich entry must be an index or \"theta\"");
        r.push_back(std::nullopt);
      } else {
        r.push_back(e.get<std::size_t>());
      }
    }
    p.entries.push_back(std::move(r));
  }
  if (p.entries.size() != p.rows)
    throw Error("sandwich entries must form an n x m matrix");
  for (const auto& r : p.entries)
    if (r.size() != p.cols) throw Error("sandwich entries must form an n x m matrix");
  return p;
}

namespace {

json rational_json(const Rational& r) {
  return {r.get_num().get_str(), r.get_den().get_str()};
}

json qvec_json(const QVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

}  // namespace

json algebra_to_json(const StructureConstantAlgebra& a) {
  json triples = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& t : a.product(i, j)) {
        json entry = {i, j, t.k};
        for (const auto& part : rational_json(t.c)) entry.push_back(part);
        triples.push_back(std::move(entry));
      }
  json out;
  out["dim"] = a.dim();
  out["labels"] = a.labels();
  out["structure"] = triples;
  if (auto u = has_unity(a)) out["unity"] = qvec_json(*u);
  return out;
}

json radical_to_json(const RadicalInfo& rad) {
  json basis = json::array();
  for (const auto& v : rad.basis) basis.push_back(qvec_json(v));
  return {{"dim", rad.dim_j},
          {"basis", basis},
          {"nilpotency_index", rad.nilpotency_index},
          {"central", rad.central}};
}

json verdict_to_json(const Verdict& v) {
  json factors = json::array();
  for (const auto& f : v.certificate)
    factors.push_back({{"ideal_size", f.ideal_size},
                       {"tag", to_string(f.tag)},
                       {"detail", f.detail},
                       {"structure", to_string(f.structure)}});
  json out;
  out["hyperbolic"] = v.hyperbolic;
  out["regime"] = to_string(v.regime);
  out["factors"] = factors;
  if (!v.violation.empty()) out["violation"] = v.violation;
  out["oracle"] = {{"radical_dim", v.oracle.radical_dim},
                   {"j_squared_zero", v.oracle.j_squared_zero},
                   {"unital", v.oracle.unital}};
  if (v.units_finite) out["units_finite"] = true;
  return out;
}

json block_to_json(const BlockType& b, const FiniteSemigroup& ambient) {
  json out;
  out["tag"] = to_string(b.tag);
  json witnesses;
  auto put = [&](const char* key, const std::optional<std::size_t>& w) {
    if (w) witnesses[key] = {{"index", *w}, {"name", ambient.name(*w)}};
  };
  put("e1", b.e1);
  put("eN", b.eN);
  put("e3", b.e3);
  put("j0", b.j0);
  out["witnesses"] = witnesses;
  return out;
}

}  // namespace semihyp

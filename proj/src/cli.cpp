#include "semihyp/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "semihyp/enumerate.hpp"
#include "semihyp/io.hpp"

namespace semihyp::cli {

namespace {

void print_semigroup_summary(std::ostream& os, const FiniteSemigroup& s) {
  os << "order " << s.order();
  if (s.zero())
    os << ", zero = " << s.name(*s.zero());
  else
    os << ", no zero";
  os << "\n";
}

void print_verdict(std::ostream& os, const Verdict& v) {
  os << "hyperbolic: " << (v.hyperbolic ? "yes" : "no") << "\n";
  os << "regime: " << to_string(v.regime) << "\n";
  os << "certificate (principal series factors):\n";
  for (std::size_t i = 0; i < v.certificate.size(); ++i) {
    const auto& f = v.certificate[i];
    os << "  " << i + 1 << ". |S_" << i + 1 << "| = " << f.ideal_size
       << "  " << to_string(f.structure) << " -> " << to_string(f.tag);
    if (!f.detail.empty()) os << "(" << f.detail << ")";
    os << "\n";
  }
  if (!v.violation.empty()) {
    os << "violation: factor";
    for (std::size_t i : v.violation) os << " #" << i + 1;
    os << "\n";
  }
  os << "oracle: radical_dim = " << v.oracle.radical_dim
     << ", J^2 = " << (v.oracle.j_squared_zero ? "0" : "nonzero")
     << ", unital = " << (v.oracle.unital ? "yes" : "no") << "\n";
  if (v.units_finite) os << "units_finite: yes\n";
}

struct Options {
  std::string input;
  bool json = false;
  bool adjoin_identity = false;
  long d = 0;
  std::size_t order = 0;
  std::string filter = "all";
  std::string out_path;
};

int dispatch(const std::string& verb, const Options& opt, std::ostream& os) {
  auto load = [&] {
    FiniteSemigroup s = load_semigroup(opt.input);
    return opt.adjoin_identity ? adjoin_identity(s) : s;
  };

  if (verb == "validate") {
    FiniteSemigroup s = load();
    if (opt.json) {
      os << semigroup_to_json(s).dump(2) << "\n";
    } else {
      os << "valid semigroup: ";
      print_semigroup_summary(os, s);
    }
    return 0;
  }

  if (verb == "analyze") {
    FiniteSemigroup s = load();
    if (opt.json) {
      json j = semigroup_to_json(s);
      j["idempotents"] = idempotents(s);
      if (s.has_zero()) j["nilpotents"] = nilpotents(s);
      j["is_inverse"] = is_inverse(s);
      j["is_group"] = is_group(s);
      json subs = json::array();
      for (const auto& m : maximal_subgroups(s))
        subs.push_back({{"idempotent", m.idempotent},
                        {"elements", m.elements},
                        {"recognized", group_desc(m.group).recognized}});
      j["maximal_subgroups"] = subs;
      os << j.dump(2) << "\n";
      return 0;
    }
    os << "input: ";
    print_semigroup_summary(os, s);
    os << "idempotents:";
    for (std::size_t e : idempotents(s)) os << " " << s.name(e);
    os << "\n";
    if (s.has_zero()) {
      os << "nilpotents:";
      for (std::size_t x : nilpotents(s)) os << " " << s.name(x);
      os << "\n";
    }
    os << "inverse semigroup: " << (is_inverse(s) ? "yes" : "no") << "\n";
    if (is_group(s)) {
      GroupDesc d = group_desc(s);
      os << "group: " << (d.recognized.empty() ? "unrecognized" : d.recognized)
         << ", abelian = " << (d.abelian ? "yes" : "no")
         << ", exponent = " << d.exponent << "\n";
    }
    os << "maximal subgroups:\n";
    for (const auto& m : maximal_subgroups(s)) {
      GroupDesc d = group_desc(m.group);
      os << "  at " << s.name(m.idempotent) << ": order " << m.elements.size()
         << (d.recognized.empty() ? "" : " (" + d.recognized + ")") << "\n";
    }
    return 0;
  }

  if (verb == "series") {
    FiniteSemigroup s = load();
    PrincipalSeries ps = principal_series(s);
    if (opt.json) {
      json j;
      j["zero_adjoined"] = ps.zero_adjoined;
      j["ideals"] = ps.ideals;
      json factors = json::array();
      for (const auto& f : ps.factors) {
        json fj;
        fj["tag"] = to_string(f.tag);
        if (f.group) fj["group"] = f.group->recognized;
        fj["witness"] = semigroup_to_json(f.witness);
        factors.push_back(std::move(fj));
      }
      j["factors"] = factors;
      os << j.dump(2) << "\n";
      return 0;
    }
    os << "principal series (" << ps.factors.size() << " factors";
    if (ps.zero_adjoined) os << ", zero adjoined";
    os << "):\n";
    for (std::size_t i = 0; i < ps.ideals.size(); ++i) {
      os << "  S_" << i + 1 << " = {";
      for (std::size_t k = 0; k < ps.ideals[i].size(); ++k)
        os << (k ? "," : "") << ps.ambient.name(ps.ideals[i][k]);
      os << "}";
      if (i < ps.factors.size()) {
        const auto& f = ps.factors[i];
        os << "  factor: " << to_string(f.tag);
        if (f.group) os << "(" << f.group->recognized << ")";
      }
      os << "\n";
    }
    return 0;
  }

  if (verb == "classify" || verb == "classify-quad") {
    FiniteSemigroup s = load();
    Verdict v = verb == "classify" ? classify_q(s)
                                   : classify_quadratic(s, opt.d);
    if (opt.json)
      os << verdict_to_json(v).dump(2) << "\n";
    else {
      os << "input: ";
      print_semigroup_summary(os, s);
      if (verb == "classify-quad") os << "field: Q(sqrt(-" << opt.d << "))\n";
      print_verdict(os, v);
    }
    return 0;
  }

  if (verb == "block") {
    FiniteSemigroup s = load();
    BlockType b = block_structure(s);
    FiniteSemigroup st = ensure_zero(s);
    if (opt.json) {
      os << block_to_json(b, st).dump(2) << "\n";
      return 0;
    }
    os << "block: " << to_string(b.tag) << "\n";
    auto show = [&](const char* k, const std::optional<std::size_t>& w) {
      if (w) os << "  " << k << " = " << st.name(*w) << "\n";
    };
    show("e1", b.e1);
    show("eN", b.eN);
    show("e3", b.e3);
    show("j0", b.j0);
    return 0;
  }

  if (verb == "algebra") {
    FiniteSemigroup s = ensure_zero(load());
    StructureConstantAlgebra a = contracted_algebra(s);
    RadicalInfo rad = radical(a);
    if (opt.json) {
      json j;
      j["algebra"] = algebra_to_json(a);
      j["radical"] = radical_to_json(rad);
      os << j.dump(2) << "\n";
      return 0;
    }
    os << "contracted algebra: dim " << a.dim() << "\n";
    auto u = has_unity(a);
    os << "unity: ";
    if (!u) {
      os << "none\n";
    } else {
      for (std::size_t i = 0; i < a.dim(); ++i)
        if (!is_zero((*u)[i]))
          os << (to_string((*u)[i]) == "1" ? "" : to_string((*u)[i]) + "*")
             << a.label(i) << " ";
      os << "\n";
    }
    os << "radical: dim " << rad.dim_j << ", nilpotency index "
       << rad.nilpotency_index << ", "
       << (rad.central ? "central" : "non-central") << "\n";
    for (const auto& v : rad.basis) {
      os << "  ";
      for (std::size_t i = 0; i < a.dim(); ++i)
        if (!is_zero(v[i])) os << to_string(v[i]) << "*" << a.label(i) << " ";
      os << "\n";
    }
    return 0;
  }

  if (verb == "enumerate") {
    json stream = json::array();
    std::size_t matched = 0;
    std::size_t count = enumerate_semigroups(opt.order, [&](const FiniteSemigroup& s) {
      std::string regime;
      try {
        regime = to_string(classify_q(s).regime);
      } catch (const NonUnitalError&) {
        regime = "nonunital";
      }
      if (opt.filter != "all" && opt.filter != regime) return;
      ++matched;
      if (opt.json) {
        json j = semigroup_to_json(s);
        j["regime"] = regime;
        stream.push_back(std::move(j));
      } else {
        os << "# " << regime << "\n" << semigroup_to_text(s);
      }
    });
    if (opt.json) {
      json j;
      j["order"] = opt.order;
      j["isomorphism_classes"] = count;
      j["matched"] = matched;
      j["semigroups"] = stream;
      os << j.dump(2) << "\n";
    } else {
      os << "isomorphism classes of order " << opt.order << ": " << count
         << " (matched filter \"" << opt.filter << "\": " << matched << ")\n";
    }
    return 0;
  }

  if (verb == "fixtures") {
    if (opt.input.empty()) {
      for (const auto& [name, s] : named_fixtures())
        os << name << " (order " << s.order() << ")\n";
      return 0;
    }
    auto it = named_fixtures().find(opt.input);
    if (it == named_fixtures().end())
      throw Error("unknown fixture \"" + opt.input + "\"");
    if (opt.json)
      os << semigroup_to_json(it->second).dump(2) << "\n";
    else
      os << semigroup_to_text(it->second);
    return 0;
  }

  throw Error("unknown command " + verb);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"hyperbolicity of rational semigroup algebras"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input)
      sub->add_option("input", opt.input,
                      "Cayley table file or fixtures:<name>")
          ->required();
    sub->add_flag("--json", opt.json, "emit JSON");
    sub->add_option("--out", opt.out_path, "write the report to a file");
  };

  CLI::App* validate = app.add_subcommand("validate", "check a Cayley table");
  add_common(validate, true);
  CLI::App* analyze =
      app.add_subcommand("analyze", "idempotents, nilpotents, subgroups");
  add_common(analyze, true);
  CLI::App* series =
      app.add_subcommand("series", "principal series with factor labels");
  add_common(series, true);
  CLI::App* classify =
      app.add_subcommand("classify", "decide hyperbolicity of QS");
  add_common(classify, true);
  classify->add_flag("--adjoin-identity", opt.adjoin_identity,
                     "adjoin an identity before classifying");
  CLI::App* quad = app.add_subcommand(
      "classify-quad", "decide hyperbolicity of Q(sqrt(-d))S");
  add_common(quad, true);
  quad->add_option("--d", opt.d, "positive square-free d")->required();
  quad->add_flag("--adjoin-identity", opt.adjoin_identity,
                 "adjoin an identity before classifying");
  CLI::App* block =
      app.add_subcommand("block", "basic block type T2/T2hat/T2prime");
  add_common(block, true);
  block->add_flag("--adjoin-identity", opt.adjoin_identity,
                  "adjoin an identity before classifying");
  CLI::App* algebra =
      app.add_subcommand("algebra", "contracted algebra and radical dump");
  add_common(algebra, true);
  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "stream isomorphism classes of a given order");
  add_common(enumerate, false);
  enumerate->add_option("--order", opt.order, "semigroup order (<= 5)")
      ->required();
  enumerate->add_option(
      "--filter", opt.filter,
      "all | nonunital | not_hyperbolic | non_semisimple | "
      "semisimple_with_nilpotents | nilpotent_free_semisimple");
  CLI::App* fixtures_cmd =
      app.add_subcommand("fixtures", "list or dump built-in fixtures");
  fixtures_cmd->add_option("name", opt.input, "fixture name");
  fixtures_cmd->add_flag("--json", opt.json, "emit JSON");
  fixtures_cmd->add_option("--out", opt.out_path, "write the report to a file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    std::ostringstream report;
    int code = dispatch(app.get_subcommands().front()->get_name(), opt, report);
    if (!opt.out_path.empty()) {
      std::ofstream f(opt.out_path);
      if (!f) throw Error("cannot write to \"" + opt.out_path + "\"");
      f << report.str();
    } else {
      out << report.str();
    }
    return code;
  } catch (const InternalInconsistencyError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace semihyp::cli

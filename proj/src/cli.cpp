#include "parcat/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "parcat/census.hpp"
#include "parcat/polynomials.hpp"
#include "parcat/scanning.hpp"
#include "parcat/sweep.hpp"
#include "parcat/text.hpp"

namespace parcat::cli {

namespace {

using nlohmann::json;

struct Common {
  std::string format = "text";
  std::string tuple;
  std::string rlist;
  int n = 0;
};

std::optional<int> opt_n(const Common& c) {
  return c.n > 0 ? std::optional<int>(c.n) : std::nullopt;
}

std::optional<std::vector<int>> opt_r(const Common& c) {
  return c.rlist.empty() ? std::nullopt : std::optional<std::vector<int>>(parse_int_list(c.rlist));
}

void add_format(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

json tuple_json(const RTuple& t) {
  return {{"n", t.n()}, {"r", t.rset().elements()}, {"entries", t.entries()}, {"text", to_text(t)}};
}

void emit_tuple(std::ostream& out, const Common& c, const RTuple& t, bool classical = false) {
  if (c.format == "json") {
    out << tuple_json(t).dump() << "\n";
  } else {
    out << (classical ? to_text_classical(RPermutation(t)) : to_text(t)) << "\n";
  }
}

void emit_poly(std::ostream& out, const Common& c, const SparsePoly& p) {
  if (c.format == "json") out << to_json(p).dump() << "\n";
  else out << to_text(p) << "\n";
}

void emit_tableau(std::ostream& out, const Common& c, const Tableau& t) {
  if (c.format == "json") out << to_json(t).dump() << "\n";
  else out << to_text(t) << "\n";
}

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorics of carrel-divided tuples, keys, scanning tableaux,\n"
               "Demazure polynomials, row bound sums and their census"};
  app.require_subcommand(1);

  Common c;
  std::string shape_str, perm_str, bounds_str, tableau_str;
  std::string map_name, method = "tableau", what, kind_str, theorem, box = "4x4";
  int max_n = 4;

  auto* cmd_classify = app.add_subcommand("classify", "List every label a tuple satisfies");
  cmd_classify->add_option("--tuple", c.tuple, "Tuple, e.g. \"2,4,6;4,5,6,7,9;9\"")->required();
  cmd_classify->add_option("--n", c.n, "Tuple length (checked against the string)");
  cmd_classify->add_option("--r", c.rlist, "Divider set, e.g. \"3,8\" (checked against the string)");
  add_format(cmd_classify, c);

  auto* cmd_critical = app.add_subcommand("critical", "Critical list of an upper tuple");
  cmd_critical->add_option("--tuple", c.tuple)->required();
  cmd_critical->add_option("--n", c.n);
  cmd_critical->add_option("--r", c.rlist);
  add_format(cmd_critical, c);

  auto* cmd_map = app.add_subcommand("map", "Apply a tuple map");
  cmd_map->add_option("--name", map_name, "core|floor|ceiling|platform|rank|pi|project|lift")
      ->required()
      ->check(CLI::IsMember({"core", "floor", "ceiling", "platform", "rank", "pi", "project", "lift"}));
  cmd_map->add_option("--tuple", c.tuple)->required();
  cmd_map->add_option("--n", c.n);
  cmd_map->add_option("--r", c.rlist);
  add_format(cmd_map, c);

  auto* cmd_key = app.add_subcommand("key", "Key tableau of a carrel-increasing permutation");
  cmd_key->add_option("--shape", shape_str, "Partition, e.g. \"2,1,1,0\"")->required();
  cmd_key->add_option("--perm", perm_str, "Permutation, e.g. \"4;1,2;3\"")->required();
  add_format(cmd_key, c);

  auto* cmd_scan = app.add_subcommand("scan", "Scanning tableau (right key)");
  cmd_scan->add_option("--shape", shape_str)->required();
  cmd_scan->add_option("--tableau", tableau_str, "Columns \"1,3|2\" or the JSON form")->required();
  add_format(cmd_scan, c);

  auto* cmd_tabs = app.add_subcommand("tableaux", "Enumerate tableaux of a shape");
  cmd_tabs->add_option("--shape", shape_str)->required();
  cmd_tabs->add_option("--bounds", bounds_str, "Row bounds tuple");
  add_format(cmd_tabs, c);

  auto* cmd_dem = app.add_subcommand("demazure", "Demazure polynomial");
  cmd_dem->add_option("--shape", shape_str)->required();
  cmd_dem->add_option("--perm", perm_str)->required();
  cmd_dem->add_option("--method", method, "tableau|dd|both")->check(CLI::IsMember({"tableau", "dd", "both"}));
  add_format(cmd_dem, c);

  auto* cmd_rowsum = app.add_subcommand("rowsum", "Row bound sum polynomial");
  cmd_rowsum->add_option("--shape", shape_str)->required();
  cmd_rowsum->add_option("--bounds", bounds_str)->required();
  add_format(cmd_rowsum, c);

  auto* cmd_gvdet = app.add_subcommand("gvdet", "Lattice-path determinant and applicability flag");
  cmd_gvdet->add_option("--shape", shape_str)->required();
  cmd_gvdet->add_option("--bounds", bounds_str)->required();
  add_format(cmd_gvdet, c);

  auto* cmd_count = app.add_subcommand("count", "Census counts");
  cmd_count->add_option("--what", what, "cnr|total|family")
      ->required()
      ->check(CLI::IsMember({"cnr", "total", "family"}));
  cmd_count->add_option("--n", c.n, "Tuple length")->required();
  cmd_count->add_option("--r", c.rlist, "Divider set (cnr and family)");
  cmd_count->add_option("--kind", kind_str, "Family kind (family only)");
  add_format(cmd_count, c);

  auto* cmd_verify = app.add_subcommand("verify", "Exhaustive statement verification");
  cmd_verify->add_option("--theorem", theorem, "Statement to sweep")
      ->required()
      ->check(CLI::IsMember(verify_ids()));
  cmd_verify->add_option("--max-n", max_n, "Largest tuple length swept");
  cmd_verify->add_option("--box", box, "Shape box, e.g. 4x4");
  add_format(cmd_verify, c);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (cmd_classify->parsed()) {
      const RTuple t = parse_rtuple(c.tuple, opt_n(c), opt_r(c));
      const Labels labels = classify(t);
      if (c.format == "json") {
        out << json{{"labels", labels.names()}}.dump() << "\n";
      } else {
        const auto names = labels.names();
        std::string line;
        for (const auto& s : names) line += (line.empty() ? "" : ",") + s;
        out << (line.empty() ? "(none)" : line) << "\n";
      }
    } else if (cmd_critical->parsed()) {
      const CriticalList cl = critical_list(parse_rtuple(c.tuple, opt_n(c), opt_r(c)));
      if (c.format == "json") {
        json carrels = json::array();
        for (int h = 1; h <= cl.carrel_count(); ++h) {
          json carrel = json::array();
          const auto& ps = cl.carrel(h);
          for (auto it = ps.rbegin(); it != ps.rend(); ++it)
            carrel.push_back({{"index", it->index}, {"entry", it->entry}});
          carrels.push_back(carrel);
        }
        out << json{{"carrels", carrels}}.dump() << "\n";
      } else {
        out << to_text(cl) << "\n";
      }
    } else if (cmd_map->parsed()) {
      if (map_name == "core") {
        emit_tuple(out, c, core(parse_rtuple(c.tuple, opt_n(c), opt_r(c))));
      } else if (map_name == "floor") {
        emit_tuple(out, c, floor_of(parse_rtuple(c.tuple, opt_n(c), opt_r(c))));
      } else if (map_name == "ceiling") {
        emit_tuple(out, c, ceiling_of(parse_rtuple(c.tuple, opt_n(c), opt_r(c))));
      } else if (map_name == "platform") {
        emit_tuple(out, c, platform(parse_rtuple(c.tuple, opt_n(c), opt_r(c))));
      } else if (map_name == "rank") {
        emit_tuple(out, c, rank_tuple(parse_rpermutation(c.tuple, opt_n(c), opt_r(c))));
      } else if (map_name == "pi") {
        emit_tuple(out, c, pi_of(parse_rtuple(c.tuple, opt_n(c), opt_r(c))).tuple());
      } else if (map_name == "project") {
        const auto rel = opt_r(c);
        if (!rel) throw std::invalid_argument("map --name project needs the target --r");
        const RPermutation s = parse_classical_permutation(c.tuple);
        emit_tuple(out, c, r_projection(s, RSet(s.n(), *rel)).tuple());
      } else if (map_name == "lift") {
        emit_tuple(out, c, min_lift(parse_rpermutation(c.tuple, opt_n(c), opt_r(c))).tuple(), /*classical=*/true);
      }
    } else if (cmd_key->parsed()) {
      const Partition shape = parse_partition(shape_str);
      emit_tableau(out, c, key_of(shape, parse_rpermutation(perm_str)));
    } else if (cmd_scan->parsed()) {
      const Partition shape = parse_partition(shape_str);
      emit_tableau(out, c, scan(parse_tableau(tableau_str, shape)));
    } else if (cmd_tabs->parsed()) {
      const Partition shape = parse_partition(shape_str);
      std::optional<RTuple> bounds;
      if (!bounds_str.empty()) bounds = parse_rtuple(bounds_str);
      const auto tabs = all_tableaux(shape, bounds);
      if (c.format == "json") {
        json arr = json::array();
        for (const auto& t : tabs) arr.push_back(to_json(t));
        out << json{{"count", tabs.size()}, {"tableaux", arr}}.dump() << "\n";
      } else {
        for (const auto& t : tabs) out << to_compact(t) << "\n";
      }
    } else if (cmd_dem->parsed()) {
      const Partition shape = parse_partition(shape_str);
      const RPermutation p = parse_rpermutation(perm_str);
      std::optional<SparsePoly> viaTableaux, viaDD;
      if (method == "tableau" || method == "both") viaTableaux = demazure_poly(shape, p);
      if (method == "dd" || method == "both") viaDD = key_poly_dd(pi_dot_lambda(shape, p));
      if (method == "both" && !(*viaTableaux == *viaDD))
        throw VerificationFailure("demazure: tableau sum and divided differences disagree for shape " +
                                  to_text(shape) + ", permutation " + to_text(p));
      emit_poly(out, c, viaTableaux ? *viaTableaux : *viaDD);
    } else if (cmd_rowsum->parsed()) {
      const Partition shape = parse_partition(shape_str);
      emit_poly(out, c, row_bound_sum(shape, parse_rtuple(bounds_str)));
    } else if (cmd_gvdet->parsed()) {
      const Partition shape = parse_partition(shape_str);
      const RTuple beta = parse_rtuple(bounds_str);
      const SparsePoly det = gv_determinant(shape, beta);
      const bool np = is_nonpermutable(shape, beta);
      if (c.format == "json") {
        out << json{{"poly", to_json(det)}, {"nonpermutable", np}}.dump() << "\n";
      } else {
        out << to_text(det) << "\n";
        out << "nonpermutable: " << (np ? "true" : "false") << "\n";
      }
    } else if (cmd_count->parsed()) {
      long long value = 0;
      if (what == "cnr") {
        value = parabolic_catalan(RSet(c.n, opt_r(c).value_or(std::vector<int>{})));
      } else if (what == "total") {
        value = total_parabolic_catalan(c.n);
      } else {
        if (kind_str.empty()) throw std::invalid_argument("count --what family needs --kind");
        value = family_count(kind_from_string(kind_str), RSet(c.n, opt_r(c).value_or(std::vector<int>{})));
      }
      if (c.format == "json") out << json{{"count", value}}.dump() << "\n";
      else out << value << "\n";
    } else if (cmd_verify->parsed()) {
      VerifyLimits limits;
      limits.max_n = max_n;
      const auto x = box.find('x');
      if (x == std::string::npos) throw std::invalid_argument("--box must look like 4x4");
      limits.box_rows = std::stoi(box.substr(0, x));
      limits.box_cols = std::stoi(box.substr(x + 1));
      const VerificationReport report = verify(theorem, limits, default_threads());
      if (c.format == "json") {
        out << json{{"theorem", report.theorem},
                    {"params", {{"max_n", limits.max_n}, {"box_rows", limits.box_rows}, {"box_cols", limits.box_cols}}},
                    {"checked", report.checked},
                    {"failures", report.failures},
                    {"ms", report.ms}}
                   .dump()
            << "\n";
      } else {
        out << report.theorem << ": " << (report.pass() ? "pass" : "FAIL") << ", " << report.checked
            << " instances checked in " << report.ms << " ms\n";
        for (const auto& f : report.failures) out << "counterexample: " << f << "\n";
      }
      if (!report.pass()) return 3;
    }
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace parcat::cli

#include "mw/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mw/error.hpp"
#include "mw/json_io.hpp"
#include "mw/scenarios.hpp"

namespace mw {

namespace {

struct Settings {
  std::string file;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::size_t budget = 1000;
  std::optional<std::size_t> arity;
  std::optional<std::size_t> m;
  std::optional<std::size_t> n;
  std::string example;
};

Json parse_input(const Settings& s, std::istream& in) {
  std::string text;
  if (s.file.empty() || s.file == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream f(s.file);
    if (!f) throw FormatError("cannot open \"" + s.file + "\"");
    text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

// Accepts either a bare array or an object holding it under `key`.
const Json& list_or_field(const Json& j, const char* key) { return j.is_array() ? j : field(j, key); }

std::size_t count_field(const Json& j, const char* key, std::optional<std::size_t> flag) {
  if (flag) return *flag;
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw FormatError(std::string("\"") + key + "\" must be a nonnegative integer");
  return v.get<std::size_t>();
}

bool is_flat(const Json& v) {
  if (!v.is_array()) return !v.is_object();
  for (const auto& e : v)
    if (e.is_array() || e.is_object()) return false;
  return true;
}

std::string inline_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (!v.is_array()) return v.dump();
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + inline_text(v[i]);
  return out + ")";
}

void render_table(const Json& v, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (is_flat(v)) {
    out << pad << inline_text(v) << '\n';
  } else if (v.is_object()) {
    for (const auto& [key, val] : v.items()) {
      if (is_flat(val)) {
        out << pad << key << ": " << inline_text(val) << '\n';
      } else {
        out << pad << key << ":\n";
        render_table(val, out, indent + 2);
      }
    }
  } else {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (is_flat(v[i])) {
        out << pad << inline_text(v[i]) << '\n';
      } else {
        out << pad << "[" << i << "]\n";
        render_table(v[i], out, indent + 2);
      }
    }
  }
}

// Indented JSON with flat arrays kept on one line; keys come out sorted.
void write_json(const Json& v, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  if (v.is_array() && is_flat(v)) {
    out << '[';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i].dump();
    out << ']';
  } else if (v.is_object() && !v.empty()) {
    out << "{\n";
    std::size_t i = 0;
    for (const auto& [key, val] : v.items()) {
      out << inner << Json(key).dump() << ": ";
      write_json(val, out, indent + 2);
      out << (++i < v.size() ? ",\n" : "\n");
    }
    out << pad << '}';
  } else if (v.is_array()) {
    out << "[\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out << inner;
      write_json(v[i], out, indent + 2);
      out << (i + 1 < v.size() ? ",\n" : "\n");
    }
    out << pad << ']';
  } else {
    out << v.dump();
  }
}

void emit(const Json& result, const Settings& s, std::ostream& out) {
  if (s.format == "table") {
    render_table(result, out, 0);
  } else {
    write_json(result, out, 0);
    out << '\n';
  }
}

Json msup_result(const std::optional<MultiSupSet>& r) {
  if (!r) return {{"result", "empty"}};
  Json out = msup_set_to_json(*r);
  out["result"] = "nonempty";
  out["proper"] = is_proper(*r);
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Settings s;
  std::function<Json()> action;

  CLI::App app{"Exact computations in multi-wedged spaces over Q", "mw"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("-f,--file", s.file, "JSON input file (default: standard input)");
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--seed", s.seed, "Seed for randomized searches");
  app.add_option("--budget", s.budget, "Trial budget for randomized searches");

  const auto input = [&] { return parse_input(s, in); };
  const auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                        std::function<Json()> body) {
    auto* sub = parent->add_subcommand(name, help);
    sub->callback([&action, body] { action = body; });
    return sub;
  };

  auto* wedge = app.add_subcommand("wedge", "Wedge operations");
  wedge->require_subcommand(1);
  leaf(wedge, "dual", "Dual wedge of {dim, generators|halfspaces}",
       [&] { return wedge_to_json(dual_wedge(wedge_from_json(input()))); });
  leaf(wedge, "sum", "Sum of a list of wedges",
       [&] { return wedge_to_json(wedge_sum(wedges_from_json(list_or_field(input(), "wedges")))); });
  leaf(wedge, "intersect", "Intersection of a list of wedges", [&] {
    return wedge_to_json(intersect(wedges_from_json(list_or_field(input(), "wedges"))));
  });
  leaf(wedge, "lineality", "Basis of the lineality space", [&] {
    const Wedge w = wedge_from_json(input());
    return Json{{"dim", w.dim()}, {"lineality", vectors_to_json(lineality(w))}};
  });
  leaf(wedge, "is-cone", "Whether the wedge is pointed",
       [&] { return Json{{"result", is_cone(wedge_from_json(input()))}}; });
  leaf(wedge, "is-generating", "Whether the wedge spans the space",
       [&] { return Json{{"result", is_generating(wedge_from_json(input()))}}; });

  leaf(&app, "msup", "Multi-supremum set of a family [{apex, wedge}]",
       [&] { return msup_result(msup(family_from_json(list_or_field(input(), "family")))); });
  leaf(&app, "minf", "Multi-infimum set of a family [{apex, wedge}]",
       [&] { return msup_result(minf(family_from_json(list_or_field(input(), "family")))); });

  auto* lattice = leaf(&app, "lattice-search", "Refute the k-multi-lattice property by search", [&] {
    const Json j = input();
    const auto ws = wedges_from_json(field(j, "wedges"));
    const std::size_t k = count_field(j, "k", s.arity);
    const auto c = multilattice_search(ws, k, {.seed = s.seed, .budget = s.budget});
    Json r{{"k", k}, {"seed", s.seed}, {"budget", s.budget}, {"found", c.has_value()},
           {"apexes", Json::array()}};
    if (c) {
      r["apexes"] = vectors_to_json(c->apexes);
      r["wedge_indices"] = c->wedge_indices;
      r["trial"] = c->trial;
    }
    return r;
  });
  lattice->add_option("-k,--arity", s.arity, "Family size k (overrides \"k\" in the input)");

  auto* rdp = app.add_subcommand("rdp", "Riesz decomposition");
  rdp->require_subcommand(1);
  leaf(rdp, "check", "Decompose an instance {wedges, xs, ys}", [&] {
    const auto z = rdp_check(rdp_instance_from_json(input()));
    if (!z) return Json{{"result", "infeasible"}};
    return Json{{"result", "decomposition"}, {"z", decomposition_to_json(*z)}};
  });
  auto* rsearch = leaf(rdp, "search", "Search for an instance without decomposition", [&] {
    const Json j = input();
    const auto ws = wedges_from_json(field(j, "wedges"));
    const std::size_t m = count_field(j, "m", s.m), n = count_field(j, "n", s.n);
    const auto c = rdp_search(ws, m, n, {.seed = s.seed, .budget = s.budget});
    Json r{{"m", m}, {"n", n}, {"seed", s.seed}, {"budget", s.budget}, {"found", c.has_value()}};
    if (c) {
      r["trial"] = c->trial;
      r["instance"] = rdp_instance_to_json(c->instance);
    }
    return r;
  });
  rsearch->add_option("--xs", s.m, "Number of x_i (overrides \"m\")");
  rsearch->add_option("--ys", s.n, "Number of y_j (overrides \"n\")");
  leaf(rdp, "decompose-fs", "Closed-form decomposition over coordinate wedges {size, js, xs, ys}", [&] {
    const Json j = input();
    const Json& size_j = field(j, "size");
    if (!size_j.is_number_integer() || size_j.get<long long>() < 1)
      throw FormatError("\"size\" must be a positive integer");
    const auto size = static_cast<Index>(size_j.get<long long>());
    const Json& js_j = field(j, "js");
    if (!js_j.is_array()) throw FormatError("\"js\" must be an array of indices");
    std::vector<Index> js;
    for (const auto& e : js_j) {
      if (!e.is_number_integer()) throw FormatError("\"js\" must be an array of indices");
      js.push_back(static_cast<Index>(e.get<long long>()));
    }
    const auto xs = vectors_from_json(field(j, "xs"), size);
    const auto ys = vectors_from_json(field(j, "ys"), size);
    return Json{{"z", decomposition_to_json(fs_decompose(size, js, xs, ys))}};
  });

  auto* rk = app.add_subcommand("rk", "Riesz-Kantorovich multi-suprema");
  rk->require_subcommand(1);
  leaf(rk, "value", "msup over V of the values at x {operators, wedges, v, x}", [&] {
    const Json j = input();
    const auto ts = operators_from_json(field(j, "operators"));
    const auto ws = wedges_from_json(field(j, "wedges"));
    const Wedge v = wedge_from_json(field(j, "v"));
    return msup_set_to_json(rk_value(ts, ws, v, vector_from_json(field(j, "x"))));
  });
  leaf(rk, "op-msup", "Operator multi-supremum {operators, wedges, v}", [&] {
    const Json j = input();
    return op_msup_to_json(op_msup(operators_from_json(field(j, "operators")),
                                   wedges_from_json(field(j, "wedges")), wedge_from_json(field(j, "v"))));
  });
  leaf(rk, "op-minf", "Operator multi-infimum {operators, wedges, v}", [&] {
    const Json j = input();
    return op_msup_to_json(op_minf(operators_from_json(field(j, "operators")),
                                   wedges_from_json(field(j, "wedges")), wedge_from_json(field(j, "v"))));
  });
  leaf(rk, "functional-msup", "Functional multi-supremum {functionals, wedges}", [&] {
    const Json j = input();
    return op_msup_to_json(
        functional_msup(vectors_from_json(field(j, "functionals")), wedges_from_json(field(j, "wedges"))));
  });

  auto* examples = app.add_subcommand("examples", "Built-in worked examples");
  examples->require_subcommand(1);
  leaf(examples, "list", "List built-in examples", [&] {
    Json list = Json::array();
    for (const auto& sc : scenarios()) list.push_back({{"name", sc.name}, {"description", sc.description}});
    return Json{{"examples", list}};
  });
  leaf(examples, "run", "Run a built-in example and print its report", [&] {
    return run_scenario(s.example, {.seed = s.seed, .budget = s.budget});
  })->add_option("name", s.example, "Example name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    emit(action(), s, out);
    return 0;
  } catch (const Error& e) {
    emit(Json{{"error", error_name(e.code())}, {"message", e.what()}}, s, out);
    return 1;
  } catch (const Json::exception& e) {
    err << "mw: malformed input: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "mw: malformed input: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace mw

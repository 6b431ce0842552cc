#include "cli.hpp"

#include "abext/duality.hpp"
#include "abext/io.hpp"
#include "abext/oracle.hpp"
#include "abext/theorems.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace abext {

namespace {

struct Output {
  Json json;
  std::string text;
  int code = 0;
};

std::string read_text(const std::string &arg) {
  if (arg == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream f(arg);
  if (!f)
    throw InvalidInput("cannot read '" + arg + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

// A path, "-" for stdin, or an inline JSON document.
Json read_json(const std::string &arg) {
  const bool inline_doc = !arg.empty() && (arg.front() == '{' || arg.front() == '[');
  std::string text = inline_doc ? arg : read_text(arg);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw InvalidInput((inline_doc ? std::string("argument") : "'" + arg + "'") +
                       ": invalid JSON: " + e.what());
  }
}

std::string render_matrix(const IntMatrix &m) {
  std::string s = "[";
  for (Index i = 0; i < m.rows(); ++i) {
    s += i ? ", [" : "[";
    for (Index j = 0; j < m.cols(); ++j)
      s += (j ? ", " : "") + m(i, j).str();
    s += "]";
  }
  return s + "]";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Output group_output(const FgGroup &g) { return {to_json(g), to_string(g) + "\n"}; }

Output morphism_output(const Morphism &f) {
  return {to_json(f), to_string(f.domain()) + " -> " + to_string(f.codomain()) +
                          "\n" + render_matrix(f.matrix()) + "\n"};
}

Output extension_output(const Extension &e) {
  std::string text = "A: " + to_string(e.A()) + "\nB: " + to_string(e.B()) +
                     "\nC: " + to_string(e.C()) + "\nphi: " +
                     render_matrix(e.phi().matrix()) + "\npsi: " +
                     render_matrix(e.psi().matrix()) + "\n";
  return {to_json(e), std::move(text)};
}

Output sequence_check(const Json &j) {
  Morphism phi = morphism_from_json(j.at("phi"));
  Morphism psi = morphism_from_json(j.at("psi"));
  if (auto why = exactness_failure(phi, psi))
    return {Json{{"exact", false}, {"reason", *why}}, "exact: no (" + *why + ")\n"};
  Extension e = extension_from_json(j);
  const bool t = is_t_extension(e);
  const bool pure = is_pure_extension(e);
  const bool split = splits(e);
  ExtElement x = classify(e);
  Json json = {{"exact", true},
               {"t_extension", t},
               {"pure", pure},
               {"splits", split},
               {"class", to_json(x)}};
  std::string text = "exact: yes\nt-extension: " + yes_no(t) + "\npure: " +
                     yes_no(pure) + "\nsplits: " + yes_no(split) +
                     "\nclass: " + to_string(x) + "\n";
  return {std::move(json), std::move(text)};
}

Output realize_output(const FgGroup &c, const FgGroup &a,
                      const std::vector<std::string> &coords) {
  ExtGroup g = ext_group(c, a);
  IntVector v = IntVector::Zero(g.size());
  if (!coords.empty()) {
    if (static_cast<Index>(coords.size()) != g.size())
      throw InvalidInput("Ext(" + to_string(c) + ", " + to_string(a) + ") has " +
                         std::to_string(g.size()) + " coordinates, got " +
                         std::to_string(coords.size()));
    for (Index k = 0; k < g.size(); ++k)
      v(k) = integer_from_json(Json(coords[static_cast<std::size_t>(k)]));
  }
  return extension_output(realize(ExtElement(g, v)));
}

Output census_output(const FgGroup &c, const FgGroup &a, const std::vector<long long> &caps) {
  oracle::Caps k;
  if (caps.size() == 1)
    k = {caps[0], caps[0], caps[0] * caps[0]};
  else if (caps.size() == 3)
    k = {caps[0], caps[1], caps[2]};
  else if (!caps.empty())
    throw InvalidInput("--caps takes n or three values: max |C|, max |A|, max |B|");
  oracle::ExtensionCensus census(c, a, k);
  Json rows = Json::array();
  std::ostringstream text;
  text << "classes: " << census.class_count() << "\n";
  for (const auto &cls : census.classes()) {
    Extension e = oracle::cocycle_to_extension(cls.representative);
    const bool t = oracle::exhaustive_is_t_extension(cls.representative);
    const bool pure = is_pure_extension(e);
    const bool split = splits(e);
    rows.push_back({{"index", cls.index},
                    {"middle", to_json(e.B())},
                    {"t_extension", t},
                    {"pure", pure},
                    {"splits", split}});
    text << cls.index << ": " << to_string(e.B()) << "  t-extension: " << yes_no(t)
         << "  pure: " << yes_no(pure) << "  splits: " << yes_no(split) << "\n";
  }
  Json json = {{"C", to_json(c)},
               {"A", to_json(a)},
               {"class_count", census.class_count()},
               {"classes", std::move(rows)}};
  return {std::move(json), text.str()};
}

struct VerifyArgs {
  std::string suite = "all";
  int trials = 100;
  std::uint64_t seed = 42;
  std::int64_t max_order = 64;
  bool mutate = false;
  std::string replay;
};

Output replay_output(const VerifyArgs &v) {
  Json j = read_json(v.replay);
  const std::string name = j.at("suite").get<std::string>();
  const bool mutate = v.mutate || j.value("mutated", false);
  auto why = replay_case(name, j.at("input"), mutate);
  Json json = {{"suite", name}, {"holds", !why.has_value()}};
  if (why)
    json["reason"] = *why;
  std::string text = name + ": " + (why ? "fails: " + *why : std::string("holds")) + "\n";
  return {std::move(json), std::move(text), why ? 1 : 0};
}

Output verify_output(const VerifyArgs &v) {
  if (!v.replay.empty())
    return replay_output(v);
  if (v.trials < 0)
    throw InvalidInput("--trials must be non-negative");
  std::vector<std::string> names =
      v.suite == "all" ? suite_names() : std::vector<std::string>{v.suite};
  SuiteConfig cfg;
  cfg.seed = v.seed;
  cfg.trials = v.trials;
  cfg.mutate = v.mutate;
  cfg.bounds.max_order = v.max_order;
  for (const auto &n : names)
    suite_label(n); // rejects unknown names before any work

  Output out;
  Json reports = Json::array();
  bool all_passed = true;
  std::ostringstream text;
  for (const auto &n : names) {
    SuiteReport r = run_suite(n, cfg);
    all_passed = all_passed && r.passed();
    text << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.label << " ("
         << r.trials << " trials, seed " << r.seed << ", " << r.failures.size()
         << " failures)\n";
    for (const auto &f : r.failures) {
      Json replay = {{"suite", r.name}, {"mutated", r.mutated}, {"input", f.input}};
      text << "  counterexample: " << f.reason << "\n  replay: " << replay.dump() << "\n";
    }
    reports.push_back(r.to_json());
  }
  out.json = {{"seed", v.seed},
              {"trials", v.trials},
              {"passed", all_passed},
              {"suites", std::move(reports)}};
  out.text = text.str();
  out.code = all_passed ? 0 : 1;
  return out;
}

void emit(const Output &o, const std::string &format, const std::string &path,
          std::ostream &out) {
  std::string body = format == "json" ? o.json.dump(2) + "\n" : o.text;
  if (path.empty()) {
    out << body;
    return;
  }
  std::ofstream f(path);
  if (!f)
    throw InvalidInput("cannot write '" + path + "'");
  f << body;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Finitely generated abelian groups: Hom, Ext, Ext_t and extensions"};
  app.name("abext");
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string output_path;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", output_path, "Write the result to this file");

  std::function<Output()> action;
  std::string g1, g2, f1, f2;
  std::vector<std::string> coords;
  std::vector<long long> caps;
  VerifyArgs verify;

  auto two_groups = [&](CLI::App *sub) {
    sub->add_option("C", g1, "First group expression")->required();
    sub->add_option("A", g2, "Second group expression")->required();
  };

  auto *group = app.add_subcommand("group", "Canonical form of a group expression");
  group->add_option("G", g1, "Group expression")->required();
  group->callback([&] { action = [&] { return group_output(parse_group_expression(g1)); }; });

  auto *hom = app.add_subcommand("hom", "Hom(C, A)");
  two_groups(hom);
  hom->callback([&] {
    action = [&] {
      return group_output(hom_group(parse_group_expression(g1), parse_group_expression(g2)));
    };
  });

  auto *ext = app.add_subcommand("ext", "Ext(C, A)");
  two_groups(ext);
  ext->callback([&] {
    action = [&] {
      ExtGroup e = ext_group(parse_group_expression(g1), parse_group_expression(g2));
      return Output{to_json(e), to_string(e.structure()) + "\n"};
    };
  });

  auto *extt = app.add_subcommand("extt", "Ext_t(C, A), the classes of t-extensions");
  two_groups(extt);
  extt->callback([&] {
    action = [&] {
      ExtTSubgroup t = ext_t_subgroup(parse_group_expression(g1), parse_group_expression(g2));
      return Output{to_json(t), to_string(t.structure()) + "\n"};
    };
  });

  auto *pext = app.add_subcommand("pext", "Pext(C, A), the classes of pure extensions");
  two_groups(pext);
  pext->callback([&] {
    action = [&] {
      ExtGroup e = pext_group(parse_group_expression(g1), parse_group_expression(g2));
      return Output{to_json(e), to_string(e.structure()) + "\n"};
    };
  });

  auto *sequence = app.add_subcommand("sequence", "Short exact sequences");
  sequence->require_subcommand(1);
  auto *check = sequence->add_subcommand("check", "Exactness, t-extension, purity, splitting, class");
  check->add_option("E", f1, "Extension JSON (path, - or inline)")->required();
  check->callback([&] { action = [&] { return sequence_check(read_json(f1)); }; });

  auto *cls = app.add_subcommand("classify", "Class of an extension in Ext(C, A)");
  cls->add_option("E", f1, "Extension JSON")->required();
  cls->callback([&] {
    action = [&] {
      ExtElement x = classify(extension_from_json(read_json(f1)));
      return Output{to_json(x), to_string(x) + "\n"};
    };
  });

  auto *real = app.add_subcommand("realize", "An extension with the given class");
  two_groups(real);
  real->add_option("coords", coords, "Class coordinates (default: zero)");
  real->callback([&] {
    action = [&] {
      return realize_output(parse_group_expression(g1), parse_group_expression(g2), coords);
    };
  });

  auto *baer = app.add_subcommand("baer-sum", "Baer sum of two extensions");
  baer->add_option("E1", f1, "Extension JSON")->required();
  baer->add_option("E2", f2, "Extension JSON")->required();
  baer->callback([&] {
    action = [&] {
      return extension_output(
          baer_sum(extension_from_json(read_json(f1)), extension_from_json(read_json(f2))));
    };
  });

  auto *push = app.add_subcommand("pushout", "Pushout along a morphism out of A");
  push->add_option("E", f1, "Extension JSON")->required();
  push->add_option("mu", f2, "Morphism JSON")->required();
  push->callback([&] {
    action = [&] {
      return extension_output(
          pushout(extension_from_json(read_json(f1)), morphism_from_json(read_json(f2))));
    };
  });

  auto *pull = app.add_subcommand("pullback", "Pullback along a morphism into C");
  pull->add_option("E", f1, "Extension JSON")->required();
  pull->add_option("gamma", f2, "Morphism JSON")->required();
  pull->callback([&] {
    action = [&] {
      return extension_output(
          pullback(extension_from_json(read_json(f1)), morphism_from_json(read_json(f2))));
    };
  });

  auto *orc = app.add_subcommand("oracle", "Brute-force cocycle enumeration");
  orc->require_subcommand(1);
  auto *census = orc->add_subcommand("census", "Count classes of symmetric cocycles");
  two_groups(census);
  census->add_option("--caps", caps, "n, or max |C|, max |A|, max |B|")->delimiter(',');
  census->callback([&] {
    action = [&] {
      return census_output(parse_group_expression(g1), parse_group_expression(g2), caps);
    };
  });

  auto *dual = app.add_subcommand("dual", "Character duals of finite objects");
  dual->require_subcommand(1);
  auto *dg = dual->add_subcommand("group", "Dual group");
  dg->add_option("G", g1, "Group expression")->required();
  dg->callback([&] {
    action = [&] { return group_output(dual_group(parse_group_expression(g1)).carrier()); };
  });
  auto *dm = dual->add_subcommand("morphism", "Dual morphism");
  dm->add_option("f", f1, "Morphism JSON")->required();
  dm->callback([&] {
    action = [&] { return morphism_output(dual_morphism(morphism_from_json(read_json(f1)))); };
  });
  auto *de = dual->add_subcommand("extension", "Dual extension");
  de->add_option("E", f1, "Extension JSON")->required();
  de->callback([&] {
    action = [&] {
      return extension_output(dual_extension(extension_from_json(read_json(f1))));
    };
  });

  auto *ver = app.add_subcommand("verify", "Run property suites");
  ver->add_option("--suite", verify.suite, "Suite name or 'all'");
  ver->add_option("--trials", verify.trials, "Trials per suite");
  ver->add_option("--seed", verify.seed, "Random seed");
  ver->add_option("--max-order", verify.max_order, "Largest middle group for finite samples")
      ->check(CLI::PositiveNumber);
  ver->add_flag("--mutate", verify.mutate, "Invert each property to test the harness");
  ver->add_option("--replay", verify.replay, "Re-check one counterexample JSON");
  ver->callback([&] { action = [&] { return verify_output(verify); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Output o = action();
    emit(o, format, output_path, out);
    return o.code;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace abext

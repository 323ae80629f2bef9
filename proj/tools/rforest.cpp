#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rforest/errors.hpp"
#include "rforest/json_io.hpp"
#include "rforest/suites.hpp"

using namespace rforest;
using njson = nlohmann::ordered_json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

BaseSpace load_space(const std::string& path) { return parse_space(slurp(path)); }

ForestElement load_elem(const std::string& path, const BaseSpace& s) {
  return parse_element(slurp(path), s);
}

// A desk-model tree file holds either a bare {"intervals":[...]} object or a
// full model; a bare tree is wrapped before reuse of the model parser.
FiniteTree load_tree(const std::string& path, const BaseSpace& s) {
  njson j = njson::parse(slurp(path), nullptr, false);
  if (j.is_discarded()) fail(Errc::parse_error, "cannot parse " + path);
  if (j.contains("intervals")) j = njson{{"trees", njson::array({j})}};
  DeskModel m = parse_desk_model(j.dump(), s);
  if (m.trees().size() != 1) fail(Errc::parse_error, "expected a single tree");
  return m.trees().front();
}

EntourageIndex entourage_from(const BaseSpace& space,
                              const std::string& radius,
                              std::optional<std::uint64_t> tail) {
  if (tail) {
    if (space.kind() != SpaceKind::tail) {
      fail(Errc::parse_error, "--tail only applies to tail spaces");
    }
    return TailIndex{*tail};
  }
  if (radius.empty()) fail(Errc::parse_error, "an entourage is required");
  return RadiusIndex{parse_rat(radius)};
}

void emit(const njson& j) { std::cout << j.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations over decorated real forests"};
  app.require_subcommand(1);
  int status = 0;

  std::string space_file, a_file, b_file, k_file, kp_file, f_file, g_file;
  std::string model_file, t1_file, t2_file, tree_file, metric_file;
  std::string r_text, eps_text, radius_text, trunc_text;
  std::vector<std::string> elem_files, sample_tokens;
  std::optional<std::uint64_t> tail_n;
  std::uint64_t seed = 0;
  std::size_t cases = 1000;
  std::string suite;

  auto* space_cmd = app.add_subcommand("space", "inspect a space description");
  auto* space_check = space_cmd->add_subcommand("check", "validate a space file");
  space_check->add_option("file", space_file, "space JSON")->required();
  space_check->callback([&] {
    try {
      BaseSpace s = load_space(space_file);
      emit(njson{{"valid", true}, {"diameter", format_rat(s.diameter())}});
    } catch (const Error& e) {
      emit(njson{{"valid", false}, {"error", errc_name(e.code())},
                 {"message", e.what()}});
      status = 1;
    }
  });
  auto* space_diam = space_cmd->add_subcommand("diameter", "print the diameter");
  space_diam->add_option("file", space_file, "space JSON")->required();
  space_diam->callback([&] {
    emit(njson{{"diameter", format_rat(load_space(space_file).diameter())}});
  });

  auto* elem_cmd = app.add_subcommand("elem", "operations on single elements");
  auto* elem_dist = elem_cmd->add_subcommand("dist", "distance between elements");
  elem_dist->add_option("--space", space_file)->required();
  elem_dist->add_option("--a", a_file)->required();
  elem_dist->add_option("--b", b_file)->required();
  elem_dist->add_option("--trunc", trunc_text, "also truncate at this level");
  elem_dist->callback([&] {
    BaseSpace s = load_space(space_file);
    ForestElement a = load_elem(a_file, s), b = load_elem(b_file, s);
    njson out{{"d", format_ext(distance(a, b))}};
    if (!trunc_text.empty()) {
      out["d_trunc"] = format_rat(distance_trunc(a, b, parse_rat(trunc_text)));
    }
    emit(out);
  });
  auto* elem_meet = elem_cmd->add_subcommand("meet", "longest common initial segment");
  elem_meet->add_option("--space", space_file)->required();
  elem_meet->add_option("--a", a_file)->required();
  elem_meet->add_option("--b", b_file)->required();
  elem_meet->callback([&] {
    BaseSpace s = load_space(space_file);
    auto m = meet(load_elem(a_file, s), load_elem(b_file, s));
    emit(m ? njson{{"meet", njson::parse(format_element(*m, s))}}
           : njson{{"meet", nullptr}});
  });
  auto* elem_restrict = elem_cmd->add_subcommand("restrict", "truncate at a level");
  elem_restrict->add_option("--space", space_file)->required();
  elem_restrict->add_option("--a", a_file)->required();
  elem_restrict->add_option("--r", r_text)->required();
  elem_restrict->callback([&] {
    BaseSpace s = load_space(space_file);
    ForestElement out = restrict_element(load_elem(a_file, s), parse_rat(r_text));
    emit(njson::parse(format_element(out, s)));
  });
  auto* elem_tp = elem_cmd->add_subcommand("tp", "the tip value");
  elem_tp->add_option("--space", space_file)->required();
  elem_tp->add_option("--a", a_file)->required();
  elem_tp->callback([&] {
    BaseSpace s = load_space(space_file);
    emit(njson{{"x", format_point(tp_base(load_elem(a_file, s)), s)}});
  });

  auto* ival_cmd = app.add_subcommand("interval", "intervals between elements");
  auto* ival_enum = ival_cmd->add_subcommand("enum", "list the interval");
  ival_enum->add_option("--space", space_file)->required();
  ival_enum->add_option("--k", k_file)->required();
  ival_enum->add_option("--kp", kp_file)->required();
  ival_enum->callback([&] {
    BaseSpace s = load_space(space_file);
    Interval i = Interval::make(load_elem(k_file, s), load_elem(kp_file, s));
    emit(njson::parse(format_interval(i, s)));
  });
  auto* ival_delta = ival_cmd->add_subcommand("delta", "distance predicate value");
  ival_delta->add_option("--space", space_file)->required();
  ival_delta->add_option("--k", k_file)->required();
  ival_delta->add_option("--kp", kp_file)->required();
  ival_delta->add_option("--r", r_text)->required();
  ival_delta->add_option("--a", a_file)->required();
  ival_delta->callback([&] {
    BaseSpace s = load_space(space_file);
    Rat d = delta_predicate(load_elem(k_file, s), load_elem(kp_file, s),
                            parse_rat(r_text), load_elem(a_file, s));
    emit(njson{{"delta", format_rat(d)}});
  });
  auto* ival_project = ival_cmd->add_subcommand("project", "nearest interval point");
  ival_project->add_option("--space", space_file)->required();
  ival_project->add_option("--k", k_file)->required();
  ival_project->add_option("--kp", kp_file)->required();
  ival_project->add_option("--a", a_file)->required();
  ival_project->callback([&] {
    BaseSpace s = load_space(space_file);
    Interval i = Interval::make(load_elem(k_file, s), load_elem(kp_file, s));
    Projection p = project_interval(load_elem(a_file, s), i);
    emit(njson{{"point", njson::parse(format_element(p.point, s))},
               {"dist", format_rat(p.dist)}});
  });

  auto* tree_cmd = app.add_subcommand("tree", "finite trees");
  auto* tree_ccl = tree_cmd->add_subcommand("ccl", "convex closure of elements");
  tree_ccl->add_option("--space", space_file)->required();
  tree_ccl->add_option("--elem", elem_files, "element JSON, repeatable")
      ->required()
      ->expected(-1);
  tree_ccl->callback([&] {
    BaseSpace s = load_space(space_file);
    std::vector<ForestElement> as;
    for (const auto& p : elem_files) as.push_back(load_elem(p, s));
    emit(njson::parse(format_tree(ccl(as), s)));
  });
  auto* tree_project = tree_cmd->add_subcommand("project", "nearest tree element");
  tree_project->add_option("--space", space_file)->required();
  tree_project->add_option("--tree", tree_file)->required();
  tree_project->add_option("--a", a_file)->required();
  tree_project->callback([&] {
    BaseSpace s = load_space(space_file);
    Projection p = project_tree(load_elem(a_file, s), load_tree(tree_file, s));
    emit(njson{{"point", njson::parse(format_element(p.point, s))},
               {"dist", format_rat(p.dist)}});
  });

  auto* path_cmd = app.add_subcommand("path", "path space operations");
  auto* path_test = path_cmd->add_subcommand("test", "entourage membership");
  path_test->add_option("--space", space_file)->required();
  path_test->add_option("--f", f_file)->required();
  path_test->add_option("--g", g_file)->required();
  path_test->add_option("--radius", radius_text, "metric entourage radius");
  path_test->add_option("--tail", tail_n, "tail entourage index");
  path_test->add_option("--eps", eps_text)->required();
  path_test->callback([&] {
    BaseSpace s = load_space(space_file);
    PathEntourage u{entourage_from(s, radius_text, tail_n), parse_rat(eps_text)};
    bool ok = entourage_test(parse_path(slurp(f_file), s),
                             parse_path(slurp(g_file), s), u, s);
    emit(njson{{"related", ok}});
  });
  auto* path_parallel = path_cmd->add_subcommand("parallel", "parallel path region");
  path_parallel->add_option("--space", space_file)->required();
  path_parallel->add_option("--f", f_file)->required();
  path_parallel->add_option("--radius", radius_text);
  path_parallel->add_option("--tail", tail_n);
  path_parallel->add_option("--eps", eps_text)->required();
  path_parallel->add_option("--sample", sample_tokens, "build through this point");
  path_parallel->callback([&] {
    BaseSpace s = load_space(space_file);
    Path f = parse_path(slurp(f_file), s);
    EntourageIndex v = entourage_from(s, radius_text, tail_n);
    Rat e = parse_rat(eps_text);
    ParallelPath pp = parallel_path(f, v, e, s);
    njson out{{"region", njson::parse(format_region(pp.o, s))},
              {"gamma", format_rat(pp.gamma)}};
    njson samples = njson::array();
    for (const auto& tok : sample_tokens) {
      BasePoint x = parse_point_text(tok, s);
      Path built = parallel_build(pp, x, s);
      samples.push_back(
          njson{{"x", format_point(x, s)},
                {"path", njson::parse(format_path(built, s))},
                {"entourage_test", entourage_test(f, built, {v, e}, s)}});
    }
    out["samples"] = std::move(samples);
    emit(out);
  });
  auto* path_axioms = path_cmd->add_subcommand("axioms", "arc axioms of a pointed metric");
  path_axioms->add_option("--metric", metric_file)->required();
  path_axioms->add_option("--r", r_text)->required();
  path_axioms->callback([&] {
    bool ok = check_path_axioms(parse_pointed_metric(slurp(metric_file)),
                                parse_rat(r_text));
    emit(njson{{"holds", ok}});
  });

  auto* types_cmd = app.add_subcommand("types", "type space over a desk model");
  auto* types_dist = types_cmd->add_subcommand("dist", "symbolic type distance");
  types_dist->add_option("--space", space_file)->required();
  types_dist->add_option("--model", model_file)->required();
  types_dist->add_option("--t1", t1_file)->required();
  types_dist->add_option("--t2", t2_file)->required();
  types_dist->callback([&] {
    BaseSpace s = load_space(space_file);
    DeskModel m = parse_desk_model(slurp(model_file), s);
    Rat d = type_distance(parse_type_point(slurp(t1_file), s),
                          parse_type_point(slurp(t2_file), s), m, s);
    emit(njson{{"d", format_rat(d)}});
  });
  auto* types_oracle = types_cmd->add_subcommand("oracle", "realized type distance");
  types_oracle->add_option("--space", space_file)->required();
  types_oracle->add_option("--model", model_file)->required();
  types_oracle->add_option("--t1", t1_file)->required();
  types_oracle->add_option("--t2", t2_file)->required();
  types_oracle->callback([&] {
    BaseSpace s = load_space(space_file);
    DeskModel m = parse_desk_model(slurp(model_file), s);
    TypePoint t1 = parse_type_point(slurp(t1_file), s);
    TypePoint t2 = parse_type_point(slurp(t2_file), s);
    Rat realized = realization_oracle(t1, t2, m, s);
    Rat symbolic = type_distance(t1, t2, m, s);
    emit(njson{{"d", format_rat(realized)},
               {"symbolic", format_rat(symbolic)},
               {"agree", realized == symbolic}});
  });

  auto* prop_cmd = app.add_subcommand("prop", "property suites");
  auto* prop_run = prop_cmd->add_subcommand("run", "run one suite");
  prop_run->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember(suite_names()));
  prop_run->add_option("--seed", seed);
  prop_run->add_option("--cases", cases)->check(CLI::PositiveNumber);
  prop_run->add_option("--space", space_file)->required();
  prop_run->callback([&] {
    SuiteConfig cfg;
    cfg.suite = suite;
    cfg.seed = seed;
    cfg.cases = cases;
    RunReport rep = run_suite(cfg, load_space(space_file));
    std::cout << format_report(rep) << "\n";
    if (!rep.violations.empty()) status = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << njson{{"error", errc_name(e.code())}, {"message", e.what()}}.dump()
              << "\n";
    return 1;
  }
  return status;
}

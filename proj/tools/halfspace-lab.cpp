// Command-line front end: circuits and derived arrangements, point location,
// face and sign enumeration, tetrad polyhedron queries, equivalence tests,
// deformations, covector systems, operator fixed points, and the seeded
// verification suites.
#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>

#include "hsl/covectors.hpp"
#include "hsl/json_io.hpp"
#include "hsl/verify.hpp"

using namespace hsl;

namespace {

struct Options {
  std::string config_path;
  std::string format = "text";
  std::string a_text, b_text;
  std::string i_text, j_text, k_text;
  std::string tetrad_name, tetrad2_name;
  std::string faces_text;
  std::string covectors_path, covectors2_path;
  std::string kind = "translate";
  std::string report;
  bool up_to_symmetry = false;
  bool up_to_relabeling = false;
  bool brute_force = false;
  bool provable = false;
  int trials = 100;
  uint64_t seed = 7;
  long g_index = 0;
};

void emit(const Options& opt, const Json& payload,
          const std::function<void(const Json&)>& text_printer = {}) {
  if (opt.format == "json") {
    std::cout << payload.dump() << "\n";
  } else if (text_printer) {
    text_printer(payload);
  } else {
    std::cout << payload.dump(2) << "\n";
  }
}

ConfigFile require_config(const Options& opt) {
  if (opt.config_path.empty())
    throw std::runtime_error("--config is required for this subcommand");
  return load_config(opt.config_path);
}

// An offset vector: inline rational list, or a named entry of the config.
Vec resolve_offsets(const ConfigFile& cfg, const std::string& text,
                    const std::string& flag) {
  if (text.empty())
    throw std::runtime_error(flag + " is required for this subcommand");
  if (text.find_first_not_of(
          "0123456789+-/, \t") == std::string::npos)
    return parse_rat_list(text);
  auto it = cfg.offsets.find(text);
  if (it == cfg.offsets.end())
    throw std::runtime_error("offset vector '" + text +
                             "' not found in the config file");
  return it->second;
}

std::vector<int> parse_indices(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    long v = std::stol(cur);
    if (v < 1) throw std::runtime_error("indices are 1-based");
    out.push_back(static_cast<int>(v - 1));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ')
      flush();
    else
      cur.push_back(c);
  }
  flush();
  return out;
}

Tetrad resolve_tetrad(const ConfigFile& cfg, const Options& opt,
                      const std::string& name_override = "") {
  const std::string& name =
      name_override.empty() ? opt.tetrad_name : name_override;
  if (!name.empty()) {
    auto it = cfg.tetrads.find(name);
    if (it == cfg.tetrads.end())
      throw std::runtime_error("tetrad '" + name +
                               "' not found in the config file");
    return it->second;
  }
  Tetrad t;
  t.a = resolve_offsets(cfg, opt.a_text, "--a");
  t.I = parse_indices(opt.i_text);
  t.J = parse_indices(opt.j_text);
  t.K = parse_indices(opt.k_text);
  validate_tetrad(t.a.size(), t);
  return t;
}

Json faces_json(const std::vector<ArrangementFace>& faces) {
  Json arr = Json::array();
  for (const ArrangementFace& f : faces)
    arr.push_back(Json{{"sign", f.sign.str()},
                       {"dim", f.dimension},
                       {"witness", vec_to_json(f.witness)}});
  return arr;
}

Json indices_json(const std::vector<int>& idx) {
  Json out = Json::array();
  for (int i : idx) out.push_back(i + 1);
  return out;
}

CovectorSystem load_covectors(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open covector file: " + path);
  Json j;
  in >> j;
  const Json& list = j.is_array() ? j : j.at("covectors");
  std::vector<SignVec> covectors;
  for (const Json& s : list)
    covectors.push_back(SignVec::parse(s.get<std::string>()));
  size_t ground = covectors.empty() ? 0 : covectors.front().size();
  if (j.is_object() && j.contains("ground")) ground = j.at("ground");
  return make_covector_system(ground, covectors);
}

CovectorSystem covectors_for_kind(const ConfigFile& cfg, const Options& opt) {
  if (!opt.covectors_path.empty()) return load_covectors(opt.covectors_path);
  if (opt.kind == "derived") {
    Arrangement da = derived_arrangement(cfg.u);
    return make_covector_system(da.m(), sign_set(da));
  }
  Vec a = resolve_offsets(cfg, opt.a_text, "--a");
  Arrangement arr = opt.kind == "cone" ? coning(cfg.u, a).cone
                    : opt.kind == "lift"
                        ? elementary_lift(cfg.u, a).lift
                        : parallel_translation(cfg.u, a);
  return make_covector_system(arr.m(), sign_set(arr));
}

int run_verify(const std::string& suite, const Options& opt) {
  uint64_t seed = opt.seed;
  if (const char* env = std::getenv("HALFSPACE_LAB_SEED"))
    seed = std::strtoull(env, nullptr, 10);
  Mat u = example_config();
  if (!opt.config_path.empty()) u = load_config(opt.config_path).u;

  std::vector<std::pair<std::string, VerifyResult>> results;
  auto want = [&](const std::string& name) {
    return suite == name || suite == "all";
  };
  if (want("thm1_2"))
    results.emplace_back("thm1_2", verify_face_transport(opt.trials, seed));
  if (want("thm1_3"))
    results.emplace_back("thm1_3",
                         verify_deformation_posets(opt.trials / 2 + 1, seed));
  if (want("thm1_4"))
    results.emplace_back(
        "thm1_4", opt.provable
                      ? verify_translation_sign_provable(opt.trials, seed)
                      : verify_translation_sign(opt.trials, seed));
  if (want("thm3_6"))
    results.emplace_back("thm3_6",
                         verify_boundedness(opt.trials / 2 + 1, seed));
  if (want("thm4_8"))
    results.emplace_back("thm4_8", verify_reorientation_example());
  if (want("thm6_2"))
    results.emplace_back("thm6_2", verify_fixed_points(u, 10, seed));
  if (want("axioms")) results.emplace_back("axioms", verify_axioms(u));
  if (suite == "all") {
    results.emplace_back("dichotomy", verify_dichotomy(opt.trials, seed));
    results.emplace_back("chain", verify_chain(opt.trials / 2 + 1, seed));
    results.emplace_back("chain_same_face",
                         verify_chain_same_face(opt.trials / 2 + 1, seed));
    results.emplace_back("normal_vs_sign",
                         verify_normal_vs_sign(opt.trials / 3 + 1, seed));
    results.emplace_back("face_counts",
                         verify_face_counts(opt.trials / 5 + 1, seed));
    results.emplace_back(
        "lift_negation",
        verify_lift_negation_invariance(opt.trials / 5 + 1, seed));
  }
  if (results.empty()) throw std::runtime_error("unknown verify suite");
  bool all_ok = true;
  for (const auto& [name, r] : results) {
    std::cout << (r.ok ? "ok " : "VIOLATION ") << name << " (" << r.trials
              << " checks)";
    if (!r.ok) std::cout << ": " << r.detail;
    std::cout << "\n";
    all_ok &= r.ok;
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rational toolkit for hyperplane arrangements, their "
               "parallel deformations and tetrad polyhedra: derived "
               "arrangements, sign vectors and equivalence classes"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));

  auto add_config = [&](CLI::App* sub, bool required = true) {
    auto* o = sub->add_option("--config", opt.config_path,
                              "configuration file (JSON)");
    if (required) o->required();
  };
  auto add_offsets = [&](CLI::App* sub, bool required = true) {
    auto* o = sub->add_option(
        "--a", opt.a_text, "offset vector: rational list or config name");
    if (required) o->required();
  };
  auto add_tetrad = [&](CLI::App* sub) {
    sub->add_option("--tetrad", opt.tetrad_name, "named tetrad from config");
    sub->add_option("--a", opt.a_text, "offset vector (inline tetrad)");
    sub->add_option("--I", opt.i_text, "1-based equality indices");
    sub->add_option("--J", opt.j_text, "1-based <= indices");
    sub->add_option("--K", opt.k_text, "1-based >= indices");
  };

  auto* circuits_cmd = app.add_subcommand(
      "circuits", "minimal dependent row subsets and their vectors");
  add_config(circuits_cmd);

  auto* derived_cmd = app.add_subcommand(
      "derived", "the derived arrangement in offset space");
  add_config(derived_cmd);

  auto* locate_cmd = app.add_subcommand(
      "locate", "open derived face containing an offset vector");
  add_config(locate_cmd);
  add_offsets(locate_cmd);

  auto* faces_cmd = app.add_subcommand(
      "faces", "faces of the translated arrangement, with witnesses");
  add_config(faces_cmd);
  add_offsets(faces_cmd);

  auto* signs_cmd =
      app.add_subcommand("signs", "realized sign vectors of the translation");
  add_config(signs_cmd);
  add_offsets(signs_cmd);

  auto* poly_cmd = app.add_subcommand("poly", "tetrad polyhedron queries");
  poly_cmd->require_subcommand(1);
  auto* poly_feas = poly_cmd->add_subcommand("feas", "emptiness and witnesses");
  auto* poly_bounded = poly_cmd->add_subcommand("bounded", "boundedness");
  auto* poly_faces = poly_cmd->add_subcommand("faces", "face enumeration");
  poly_faces->add_flag("--brute-force", opt.brute_force,
                       "use the exhaustive subset oracle");
  auto* poly_fan =
      poly_cmd->add_subcommand("normalfan", "compare two normal fans");
  for (CLI::App* sub : {poly_feas, poly_bounded, poly_faces, poly_fan}) {
    add_config(sub);
    add_tetrad(sub);
  }
  poly_fan->add_option("--tetrad2", opt.tetrad2_name,
                       "second named tetrad from config");
  poly_fan->add_option("--b", opt.b_text,
                       "second offset vector (same partition)");

  auto* equiv_cmd =
      app.add_subcommand("equiv", "equivalence of two parallel translations");
  equiv_cmd->require_subcommand(1);
  for (const char* name : {"sign", "comb", "semilattice", "normal"}) {
    auto* sub = equiv_cmd->add_subcommand(name);
    add_config(sub);
    add_offsets(sub);
    sub->add_option("--b", opt.b_text, "second offset vector")->required();
  }

  auto* deform_cmd =
      app.add_subcommand("deform", "translations, conings, lifts, counts");
  add_config(deform_cmd);
  add_offsets(deform_cmd);
  deform_cmd->add_option("deformation", opt.kind,
                         "translate|cone|lift|counts (positional)");
  deform_cmd->add_option("--kind", opt.kind, "translate|cone|lift|counts")
      ->excludes("deformation");
  deform_cmd->add_option("--report", opt.report, "counts");

  auto* om_cmd = app.add_subcommand("om", "covector systems");
  om_cmd->require_subcommand(1);
  auto* om_check = om_cmd->add_subcommand("check", "covector axioms");
  auto* om_affine =
      om_cmd->add_subcommand("affine", "affine restriction at an element");
  om_affine->add_option("--g", opt.g_index, "1-based distinguished element")
      ->required();
  auto* om_equiv = om_cmd->add_subcommand("equiv", "covector equivalence");
  om_equiv->add_option("--covectors2", opt.covectors2_path,
                       "second covector file")
      ->required();
  om_equiv->add_flag("--up-to-symmetry", opt.up_to_symmetry,
                     "search reorientations and relabelings");
  om_equiv->add_flag("--up-to-relabeling", opt.up_to_relabeling,
                     "search relabelings only");
  for (CLI::App* sub : {om_check, om_affine, om_equiv}) {
    sub->add_option("--covectors", opt.covectors_path, "covector file (JSON)");
    sub->add_option("--config", opt.config_path, "configuration file");
    sub->add_option("--a", opt.a_text, "offset vector");
    sub->add_option("--as", opt.kind, "translate|cone|lift|derived");
  }

  auto* op_cmd = app.add_subcommand("operators", "offset-space operators");
  auto* op_fix = op_cmd->add_subcommand(
      "fixpoint", "is the face union a fixed point of Face(Sign(.))");
  add_config(op_fix);
  op_fix->add_option("--faces", opt.faces_text,
                     "comma-separated derived sign strings")
      ->required();
  op_fix->add_option("--kind", opt.kind, "translate|cone");

  auto* verify_cmd =
      app.add_subcommand("verify", "seeded verification suites");
  std::string suite;
  verify_cmd
      ->add_option("suite", suite,
                   "thm1_2|thm1_3|thm1_4|thm3_6|thm4_8|thm6_2|axioms|all")
      ->required();
  verify_cmd->add_option("--config", opt.config_path, "configuration file");
  verify_cmd->add_option("--trials", opt.trials, "trial count");
  verify_cmd->add_option("--seed", opt.seed,
                         "random seed (HALFSPACE_LAB_SEED overrides)");
  verify_cmd->add_flag(
      "--provable", opt.provable,
      "restrict thm1_4 to the implications that hold (the lift converse "
      "does not)");

  // Let --format (defined on the root) appear after any subcommand.
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    a->fallthrough();
    for (CLI::App* sub : a->get_subcommands({})) enable_fallthrough(sub);
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (circuits_cmd->parsed()) {
      ConfigFile cfg = require_config(opt);
      emit(opt, circuits_to_json(enumerate_circuits(cfg.u)), [](const Json& j) {
        for (const Json& c : j.at("circuits"))
          std::cout << "circuit " << c.at("support").dump() << "  vector "
                    << c.at("vector").dump() << "\n";
      });
    } else if (derived_cmd->parsed()) {
      ConfigFile cfg = require_config(opt);
      Arrangement da = derived_arrangement(cfg.u);
      Json j = arrangement_to_json(da);
      j["circuits"] = circuits_to_json(enumerate_circuits(cfg.u))["circuits"];
      emit(opt, j);
    } else if (locate_cmd->parsed()) {
      ConfigFile cfg = require_config(opt);
      Vec a = resolve_offsets(cfg, opt.a_text, "--a");
      SignVec s = locate_open_face(cfg.u, a);
      Json j{{"sign", s.str()}, {"face_dim", derived_face_dimension(cfg.u, a)}};
      emit(opt, j, [](const Json& jj) {
        std::cout << "sign " << jj.at("sign").get<std::string>() << "  dim "
                  << jj.at("face_dim").get<int>() << "\n";
      });
    } else if (faces_cmd->parsed()) {
      ConfigFile cfg = require_config(opt);
      Vec a = resolve_offsets(cfg, opt.a_text, "--a");
      emit(opt, Json{{"faces",
                      faces_json(faces(parallel_translation(cfg.u, a)))}});
    } else if (signs_cmd->parsed()) {
      ConfigFile cfg = require_config(opt);
      Vec a = resolve_offsets(cfg, opt.a_text, "--a");
      Json arr = Json::array();
      for (const SignVec& s : sign_set(parallel_translation(cfg.u, a)))
        arr.push_back(s.str());
      emit(opt, Json{{"signs", arr}}, [](const Json& j) {
        for (const Json& s : j.at("signs"))
          std::cout << s.get<std::string>() << "\n";
      });
    } else if (poly_cmd->parsed()) {
      ConfigFile cfg = require_config(opt);
      Tetrad t = resolve_tetrad(cfg, opt);
      if (poly_feas->parsed()) {
        Json j;
        j["empty"] = is_empty(cfg.u, t);
        if (!j["empty"].get<bool>()) {
          DecideResult r = decide(tetrad_system(cfg.u, t));
          j["witness"] = vec_to_json(*r.witness);
        }
        auto open = open_interior_point(cfg.u, t);
        j["open_empty"] = !open.has_value();
        if (open) j["open_witness"] = vec_to_json(*open);
        emit(opt, j);
      } else if (poly_bounded->parsed()) {
        emit(opt, Json{{"bounded", is_bounded(cfg.u, t)}});
      } else if (poly_faces->parsed()) {
        auto fs = opt.brute_force ? enumerate_faces_bruteforce(cfg.u, t)
                                  : enumerate_faces(cfg.u, t);
        Json arr = Json::array();
        for (const FaceRecord& f : fs)
          arr.push_back(Json{{"I", indices_json(f.active.I)},
                             {"J", indices_json(f.active.J)},
                             {"K", indices_json(f.active.K)},
                             {"dim", f.dimension},
                             {"witness", vec_to_json(f.witness)}});
        emit(opt, Json{{"faces", arr},
                       {"convention",
                        "the polyhedron itself is listed as a face; the "
                        "empty face never is"}});
      } else {
        Tetrad t2;
        if (!opt.tetrad2_name.empty())
          t2 = resolve_tetrad(cfg, opt, opt.tetrad2_name);
        else {
          t2 = t;
          t2.a = resolve_offsets(cfg, opt.b_text, "--b");
        }
        emit(opt, Json{{"equal", normal_fan_equal(cfg.u, t, t2)}});
      }
    } else if (equiv_cmd->parsed()) {
      ConfigFile cfg = require_config(opt);
      Vec a = resolve_offsets(cfg, opt.a_text, "--a");
      Vec b = resolve_offsets(cfg, opt.b_text, "--b");
      CLI::App* sub = equiv_cmd->get_subcommands().front();
      bool result;
      if (sub->get_name() == "sign")
        result = sign_equivalent(parallel_translation(cfg.u, a),
                                 parallel_translation(cfg.u, b));
      else if (sub->get_name() == "comb")
        result = combinatorially_equivalent(parallel_translation(cfg.u, a),
                                            parallel_translation(cfg.u, b));
      else if (sub->get_name() == "semilattice")
        result = semilattice_equivalent(parallel_translation(cfg.u, a),
                                        parallel_translation(cfg.u, b));
      else
        result = normally_equivalent_translations(cfg.u, a, b);
      emit(opt, Json{{"equivalent", result}});
    } else if (deform_cmd->parsed()) {
      ConfigFile cfg = require_config(opt);
      Vec a = resolve_offsets(cfg, opt.a_text, "--a");
      if (opt.kind == "counts" || opt.report == "counts") {
        emit(opt, face_count_report_to_json(face_count_report(cfg.u, a)));
      } else if (opt.kind == "translate") {
        emit(opt, arrangement_to_json(parallel_translation(cfg.u, a)));
      } else if (opt.kind == "cone") {
        emit(opt, arrangement_to_json(coning(cfg.u, a).cone));
      } else if (opt.kind == "lift") {
        emit(opt, arrangement_to_json(elementary_lift(cfg.u, a).lift));
      } else {
        throw std::runtime_error("unknown deform kind '" + opt.kind + "'");
      }
    } else if (om_cmd->parsed()) {
      if (om_check->parsed()) {
        ConfigFile cfg = opt.covectors_path.empty() ? require_config(opt)
                                                    : ConfigFile{};
        CovectorSystem l = covectors_for_kind(cfg, opt);
        auto v = check_covector_axioms(l);
        Json j{{"ok", !v.has_value()}};
        if (v) {
          j["violation"] = axiom_str(v->id);
          Json w = Json::array();
          for (const SignVec& x : v->witnesses) w.push_back(x.str());
          j["witnesses"] = w;
        }
        emit(opt, j);
      } else if (om_affine->parsed()) {
        ConfigFile cfg = opt.covectors_path.empty() ? require_config(opt)
                                                    : ConfigFile{};
        CovectorSystem l = covectors_for_kind(cfg, opt);
        if (opt.g_index < 1)
          throw std::runtime_error("--g is 1-based");
        CovectorSystem w =
            affine_covectors(l, static_cast<size_t>(opt.g_index - 1));
        Json arr = Json::array();
        for (const SignVec& x : w.covectors) arr.push_back(x.str());
        emit(opt, Json{{"ground", w.ground}, {"covectors", arr}});
      } else {
        CovectorSystem l1 = opt.covectors_path.empty()
                                ? covectors_for_kind(require_config(opt), opt)
                                : load_covectors(opt.covectors_path);
        CovectorSystem l2 = load_covectors(opt.covectors2_path);
        Json j;
        if (opt.up_to_symmetry || opt.up_to_relabeling) {
          auto w = om_equivalent_up_to_symmetry(l1, l2, !opt.up_to_relabeling);
          j["equivalent"] = w.has_value();
          if (w) {
            Json perm = Json::array();
            for (int p : w->perm) perm.push_back(p + 1);
            Json reor = Json::array();
            for (int r : w->reorient) reor.push_back(r + 1);
            j["perm"] = perm;
            j["reorient"] = reor;
          }
        } else {
          j["equivalent"] = om_equivalent(l1, l2);
        }
        emit(opt, j);
      }
    } else if (op_cmd->parsed()) {
      ConfigFile cfg = require_config(opt);
      DeformKind kind = opt.kind == "cone" ? DeformKind::Cone
                        : opt.kind == "lift" ? DeformKind::Lift
                                             : DeformKind::Translate;
      DerivedContext ctx(cfg.u, kind);
      std::vector<SignVec> wanted;
      std::string cur;
      for (char c : opt.faces_text + ",") {
        if (c == ',') {
          if (!cur.empty()) wanted.push_back(SignVec::parse(cur));
          cur.clear();
        } else {
          cur.push_back(c);
        }
      }
      FaceSubset subset = ctx.subset_of(wanted);
      std::set<SignVec> signs = ctx.sign_operator(subset);
      FaceSubset back = ctx.face_operator_set(signs);
      Json sign_arr = Json::array();
      for (const SignVec& s : signs) sign_arr.push_back(s.str());
      Json face_arr = Json::array();
      for (const SignVec& f : back.faces) face_arr.push_back(f.str());
      emit(opt, Json{{"fixed_point", ctx.fixed_point_check(subset)},
                     {"sign_set", sign_arr},
                     {"face_set", face_arr}});
    } else if (verify_cmd->parsed()) {
      return run_verify(suite, opt);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    // Plain logic_error is reserved for internal exact-verification failures.
    std::cerr << "internal verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

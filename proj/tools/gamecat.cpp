// Command-line front end: file formats in, constructions and equilibrium
// scans out. Exit codes: 0 ok, 1 usage/parse, 2 semantic invalidity,
// 3 verification failure, 4 resource budget.
#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gamecat/constructions.hpp"
#include "gamecat/document.hpp"
#include "gamecat/dot.hpp"
#include "gamecat/equilibria.hpp"
#include "gamecat/error.hpp"
#include "gamecat/laws.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInvalid = 2;
constexpr int kVerifyFailed = 3;
constexpr int kBudget = 4;

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Multigraph strategic games: constructions, equilibria, and "
               "law verification"};
  app.require_subcommand(1);

  // validate FILE
  std::string validate_file;
  auto* cmd_validate = app.add_subcommand("validate", "Check a game document");
  cmd_validate->add_option("file", validate_file)->required();

  // from-strategic FILE -o OUT
  std::string fs_file, fs_out;
  auto* cmd_fs = app.add_subcommand(
      "from-strategic", "Convert a strategic-form document to a game");
  cmd_fs->add_option("file", fs_file)->required();
  cmd_fs->add_option("-o,--output", fs_out)->required();

  // identify FILE --merge a,b[,c...] -o OUT
  std::string id_file, id_merge, id_label, id_out;
  auto* cmd_identify =
      app.add_subcommand("identify", "Merge outcomes into a single one");
  cmd_identify->add_option("file", id_file)->required();
  cmd_identify->add_option("--merge", id_merge, "Comma-separated outcomes")
      ->required();
  cmd_identify->add_option("--label", id_label,
                           "Label for the merged outcome (default: least "
                           "member)");
  cmd_identify->add_option("-o,--output", id_out)->required();

  // nash FILE [--weak]
  std::string nash_file;
  bool nash_weak = false;
  auto* cmd_nash = app.add_subcommand("nash", "List equilibrium outcomes");
  cmd_nash->add_option("file", nash_file)->required();
  cmd_nash->add_flag("--weak", nash_weak, "Weak equilibria");

  // check-morphism FILE
  std::string cm_file;
  auto* cmd_cm =
      app.add_subcommand("check-morphism", "Validate a morphism document");
  cmd_cm->add_option("file", cm_file)->required();

  // product/coproduct FILE FILE... [--fixed] -o OUT
  std::vector<std::string> prod_files;
  bool prod_fixed_flag = false;
  std::string prod_out;
  auto* cmd_product = app.add_subcommand("product", "Product of games");
  cmd_product->add_option("files", prod_files)->required()->expected(-1);
  cmd_product->add_flag("--fixed", prod_fixed_flag, "Fixed-player variant");
  cmd_product->add_option("-o,--output", prod_out)->required();

  std::vector<std::string> cop_files;
  bool cop_fixed_flag = false;
  std::string cop_out;
  auto* cmd_coproduct = app.add_subcommand("coproduct", "Coproduct of games");
  cmd_coproduct->add_option("files", cop_files)->required()->expected(-1);
  cmd_coproduct->add_flag("--fixed", cop_fixed_flag, "Fixed-player variant");
  cmd_coproduct->add_option("-o,--output", cop_out)->required();

  // pushout FILE FILE -o OUT
  std::vector<std::string> push_files;
  std::string push_out;
  auto* cmd_pushout =
      app.add_subcommand("pushout", "Amalgamation over the shared players");
  cmd_pushout->add_option("files", push_files)->required()->expected(2);
  cmd_pushout->add_option("-o,--output", push_out)->required();

  // equalizer/coequalizer FMORPH GMORPH -o OUT
  std::vector<std::string> eq_files;
  std::string eq_out;
  auto* cmd_equalizer =
      app.add_subcommand("equalizer", "Equalizer of a parallel pair");
  cmd_equalizer->add_option("morphisms", eq_files)->required()->expected(2);
  cmd_equalizer->add_option("-o,--output", eq_out)->required();

  std::vector<std::string> ceq_files;
  std::string ceq_out;
  auto* cmd_coequalizer =
      app.add_subcommand("coequalizer", "Coequalizer of a parallel pair");
  cmd_coequalizer->add_option("morphisms", ceq_files)->required()->expected(2);
  cmd_coequalizer->add_option("-o,--output", ceq_out)->required();

  // exp BASE EXPONENT [--fixed] -o OUT
  std::vector<std::string> exp_files;
  bool exp_fixed_flag = false;
  std::string exp_out;
  auto* cmd_exp =
      app.add_subcommand("exp", "Exponential BASE^EXPONENT of two games");
  cmd_exp->add_option("files", exp_files)->required()->expected(2);
  cmd_exp->add_flag("--fixed", exp_fixed_flag, "Fixed-player variant");
  cmd_exp->add_option("-o,--output", exp_out)->required();

  // hom SRC DST [--count]
  std::vector<std::string> hom_files;
  bool hom_count = false;
  auto* cmd_hom = app.add_subcommand("hom", "Enumerate morphisms");
  cmd_hom->add_option("files", hom_files)->required()->expected(2);
  cmd_hom->add_flag("--count", hom_count, "Print only the count");

  // classify FMORPH
  std::string classify_file;
  auto* cmd_classify =
      app.add_subcommand("classify", "Monic/epic/iso classification");
  cmd_classify->add_option("file", classify_file)->required();

  // preserves-ne FMORPH
  std::string pne_file;
  auto* cmd_pne = app.add_subcommand(
      "preserves-ne", "Does the morphism preserve Nash equilibria?");
  cmd_pne->add_option("file", pne_file)->required();

  // export-dot FILE -o OUT
  std::string dot_file, dot_out;
  auto* cmd_dot = app.add_subcommand("export-dot", "Render a game to DOT");
  cmd_dot->add_option("file", dot_file)->required();
  cmd_dot->add_option("-o,--output", dot_out)->required();

  // verify --law NAME --seed N --trials K [--max-players P --max-outcomes Q]
  std::string verify_law;
  std::uint64_t verify_seed = 0;
  std::size_t verify_trials = 100;
  gamecat::GenParams params;
  bool list_laws = false;
  auto* cmd_verify = app.add_subcommand("verify", "Run a law of the harness");
  cmd_verify->add_option("--law", verify_law);
  cmd_verify->add_option("--seed", verify_seed);
  cmd_verify->add_option("--trials", verify_trials);
  cmd_verify->add_option("--max-players", params.max_players);
  cmd_verify->add_option("--max-outcomes", params.max_outcomes);
  cmd_verify->add_option("--access-density", params.access_density);
  cmd_verify->add_option("--pref-density", params.pref_density);
  cmd_verify->add_flag("--list", list_laws, "List known laws and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }

  using namespace gamecat;

  if (cmd_validate->parsed()) {
    Game g;
    try {
      g = load_game(validate_file);
    } catch (const validation_error& e) {
      std::cout << e.what() << "\n";
      return kInvalid;
    }
    auto violations = validate_game(g);
    for (const auto& v : violations) std::cout << violation_text(v) << "\n";
    return violations.empty() ? kOk : kInvalid;
  }

  if (cmd_fs->parsed()) {
    save_game(from_strategic(load_strategic(fs_file)), fs_out);
    return kOk;
  }

  if (cmd_identify->parsed()) {
    Game g = load_game(id_file);
    auto merge = split_csv(id_merge);
    std::vector<OutcomeClass> classes;
    classes.push_back({merge, id_label});
    for (const auto& o : g.outcomes)
      if (std::find(merge.begin(), merge.end(), o) == merge.end())
        classes.push_back({{o}, ""});
    save_game(identify_outcomes(g, classes), id_out);
    return kOk;
  }

  if (cmd_nash->parsed()) {
    Game g = load_game(nash_file);
    SolutionSubgame sol = nash_weak ? phi_wne(g) : phi_ne(g);
    auto selected = sol.selected;
    std::sort(selected.begin(), selected.end());
    for (const auto& o : selected) std::cout << o << "\n";
    return kOk;
  }

  if (cmd_cm->parsed()) {
    Morphism m = load_morphism(cm_file);
    auto violations = check_morphism(m);
    for (const auto& v : violations) std::cout << violation_text(v) << "\n";
    return violations.empty() ? kOk : kInvalid;
  }

  if (cmd_product->parsed()) {
    std::vector<Game> gs;
    for (const auto& f : prod_files) gs.push_back(load_game(f));
    ConstructedGame c = prod_fixed_flag ? product_fixed(gs) : product(gs);
    save_game(c.game, prod_out);
    return kOk;
  }

  if (cmd_coproduct->parsed()) {
    std::vector<Game> gs;
    for (const auto& f : cop_files) gs.push_back(load_game(f));
    ConstructedGame c = cop_fixed_flag ? coproduct_fixed(gs) : coproduct(gs);
    save_game(c.game, cop_out);
    return kOk;
  }

  if (cmd_pushout->parsed()) {
    ConstructedGame c = pushout_shared_players(load_game(push_files[0]),
                                               load_game(push_files[1]));
    save_game(c.game, push_out);
    return kOk;
  }

  if (cmd_equalizer->parsed()) {
    ConstructedGame c =
        equalizer(load_morphism(eq_files[0]), load_morphism(eq_files[1]));
    save_game(c.game, eq_out);
    return kOk;
  }

  if (cmd_coequalizer->parsed()) {
    ConstructedGame c =
        coequalizer(load_morphism(ceq_files[0]), load_morphism(ceq_files[1]));
    save_game(c.game, ceq_out);
    return kOk;
  }

  if (cmd_exp->parsed()) {
    Game base = load_game(exp_files[0]);
    Game exponent = load_game(exp_files[1]);
    ConstructedGame c = exp_fixed_flag ? exponential_fixed(exponent, base)
                                       : exponential(exponent, base);
    save_game(c.game, exp_out);
    return kOk;
  }

  if (cmd_hom->parsed()) {
    auto homs = enumerate_hom(load_game(hom_files[0]), load_game(hom_files[1]));
    if (hom_count) {
      std::cout << homs.size() << "\n";
    } else {
      for (const auto& m : homs) {
        nlohmann::json doc;
        doc["player_map"] = m.player_map;
        doc["outcome_map"] = m.outcome_map;
        std::cout << doc.dump() << "\n";
      }
    }
    return kOk;
  }

  if (cmd_classify->parsed()) {
    Morphism m = load_morphism(classify_file);
    if (!check_morphism(m).empty()) {
      std::cout << "not a morphism\n";
      return kInvalid;
    }
    MorphismClass c = classify_morphism(m);
    std::cout << "monic: " << (c.monic ? "true" : "false") << "\n"
              << "epic: " << (c.epic ? "true" : "false") << "\n"
              << "iso: " << (c.iso ? "true" : "false") << "\n";
    return kOk;
  }

  if (cmd_pne->parsed()) {
    Morphism m = load_morphism(pne_file);
    if (!check_morphism(m).empty()) {
      std::cout << "not a morphism\n";
      return kInvalid;
    }
    std::cout << (preserves_ne(m) ? "true" : "false") << "\n";
    return kOk;
  }

  if (cmd_dot->parsed()) {
    export_dot(load_game(dot_file), dot_out);
    return kOk;
  }

  if (cmd_verify->parsed()) {
    if (list_laws) {
      for (const auto& name : law_catalog()) std::cout << name << "\n";
      return kOk;
    }
    if (verify_law.empty()) {
      std::cerr << "verify: --law is required\n";
      return kUsage;
    }
    params.seed = verify_seed;
    VerifyReport report = check_law(verify_law, params, verify_trials);
    std::cout << report_to_json(report);
    return report.pass() ? kOk : kVerifyFailed;
  }

  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const gamecat::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const gamecat::resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const gamecat::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const gamecat::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
}

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "schurkit/json_io.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void emit(const schurkit::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int default_jobs() {
  if (const char* env = std::getenv("SCHURKIT_JOBS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

void check_budget(int n, int budget) {
  if (n > budget)
    throw CLI::ValidationError("budget", "n = " + std::to_string(n) + " exceeds the build budget " +
                                             std::to_string(budget) + " (raise with --budget)");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace schurkit;

  CLI::App app{"skew Schur expansions, supports, and Schur-positivity posets"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::simple);

  int jobs = default_jobs();
  int budget = 8;
  app.add_option("--jobs", jobs, "worker threads for poset builds and sweeps");
  app.add_option("--budget", budget, "largest n allowed for whole-poset builds");

  std::string skewArg, skewArgB, alphaArg, lambdaArg, orderArg, whichArg;
  int nArg = 0, lArg = 0;
  bool connectedOnly = false, dotOut = false;

  auto* expand = app.add_subcommand("expand", "Schur expansion of a skew shape");
  expand->add_option("shape", skewArg, "skew literal, e.g. 443/2")->required();

  auto* ribbonExpand = app.add_subcommand("ribbon-expand", "Schur expansion of a ribbon");
  ribbonExpand->add_option("alpha", alphaArg, "row composition, e.g. 233")->required();

  auto* support = app.add_subcommand("support", "support of a skew Schur function");
  support->add_option("shape", skewArg)->required();

  auto* compare = app.add_subcommand("compare", "compare two shapes in one order");
  compare->add_option("a", skewArg)->required();
  compare->add_option("b", skewArgB)->required();
  compare->add_option("--order", orderArg, "schur or support")->required();

  auto* poset = app.add_subcommand("poset", "build the poset of classes at size n");
  poset->add_option("n", nArg)->required();
  poset->add_option("--order", orderArg)->required();
  poset->add_flag("--connected", connectedOnly, "restrict to connected classes");
  poset->add_flag("--dot", dotOut, "emit a DOT Hasse diagram instead of JSON");

  auto* maximal = app.add_subcommand("maximal", "maximal connected classes at size n");
  maximal->add_option("n", nArg)->required();
  maximal->add_option("--order", orderArg)->required();

  auto* verify = app.add_subcommand("verify", "run a verification sweep");
  verify->add_option("which", whichArg, "main | max | minrib | extreme")->required();
  verify->add_option("--n", nArg)->required();

  auto* witness = app.add_subcommand("witness", "standard tableau with the descent set of a ribbon");
  witness->add_option("alpha", alphaArg)->required();
  witness->add_option("lambda", lambdaArg)->required();

  auto* equitable = app.add_subcommand("equitable", "equitable ribbons with n boxes and l rows");
  equitable->add_option("n", nArg)->required();
  equitable->add_option("l", lArg)->required();

  auto* billiard = app.add_subcommand("billiard", "diagonal-cut ribbon in the l x (n-l+1) grid");
  billiard->add_option("n", nArg)->required();
  billiard->add_option("l", lArg)->required();

  auto* fullSupport = app.add_subcommand("full-support", "does the support fill its dominance interval");
  fullSupport->add_option("shape", skewArg)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitPass : kExitUsage;
  }

  auto parse_order = [&]() {
    if (orderArg == "schur") return Order::schur;
    if (orderArg == "support") return Order::support;
    throw std::invalid_argument("--order must be schur or support");
  };

  try {
    if (expand->parsed()) {
      emit(to_json(lr_expand(parse_skew(skewArg))));
    } else if (ribbonExpand->parsed()) {
      emit(to_json(ribbon_expand(parse_composition(alphaArg))));
    } else if (support->parsed()) {
      ordered_json out = ordered_json::array();
      for (const auto& p : support_of(parse_skew(skewArg))) out.push_back(p.parts());
      emit(ordered_json{{"shape", to_json(parse_skew(skewArg))}, {"support", std::move(out)}});
    } else if (compare->parsed()) {
      Order order = parse_order();
      SkewShape a = parse_skew(skewArg), b = parse_skew(skewArgB);
      bool bLeA = order == Order::schur ? diff_schur_positive(a, b) : support_contained(b, a);
      bool aLeB = order == Order::schur ? diff_schur_positive(b, a) : support_contained(a, b);
      emit(ordered_json{{"order", orderArg},
                        {"a", to_json(a)},
                        {"b", to_json(b)},
                        {"a_leq_b", aLeB},
                        {"b_leq_a", bLeA}});
    } else if (poset->parsed()) {
      Order order = parse_order();
      check_budget(nArg, budget);
      std::vector<EquivalenceClass> classes =
          order == Order::schur ? schur_classes(nArg) : support_classes(nArg);
      if (connectedOnly) {
        std::vector<EquivalenceClass> keep;
        for (auto& c : classes)
          if (c.connected) keep.push_back(std::move(c));
        classes = std::move(keep);
      }
      auto family = build_poset(std::move(classes), order, nArg, jobs);
      if (dotOut)
        std::cout << to_dot(family);
      else
        emit(to_json(family));
    } else if (maximal->parsed()) {
      Order order = parse_order();
      check_budget(nArg, budget);
      auto family = build_poset(nArg, order, jobs);
      ordered_json out = ordered_json::array();
      for (int idx : maximal_connected(family)) {
        ordered_json members = ordered_json::array();
        for (const auto& m : family.elements[static_cast<size_t>(idx)].members)
          members.push_back(to_json(m));
        out.push_back(std::move(members));
      }
      emit(ordered_json{{"n", nArg}, {"order", orderArg}, {"maximal_connected", std::move(out)}});
    } else if (verify->parsed()) {
      Report rep;
      if (whichArg == "main") {
        check_budget(nArg, budget);
        rep = verify_theorem_main(nArg, jobs);
      } else if (whichArg == "max") {
        check_budget(nArg, budget);
        rep = verify_conjecture_max(nArg, jobs);
      } else if (whichArg == "minrib") {
        rep.check = "minrib";
        rep.n = nArg;
        for (const auto& lam : enumerate_partitions(nArg)) {
          Report one = verify_conjecture_minrib(lam);
          if (!one.pass) {
            rep.pass = false;
            rep.counterexamples.insert(rep.counterexamples.end(), one.counterexamples.begin(),
                                       one.counterexamples.end());
          }
        }
      } else if (whichArg == "extreme") {
        check_budget(nArg, budget);
        rep = verify_lemma_extreme(nArg, jobs);
      } else {
        throw std::invalid_argument("unknown verification '" + whichArg + "'");
      }
      emit(to_json(rep));
      return rep.pass ? kExitPass : kExitFail;
    } else if (witness->parsed()) {
      emit(to_json(construct_witness_syt(parse_composition(alphaArg), parse_partition(lambdaArg))));
    } else if (equitable->parsed()) {
      ordered_json out = ordered_json::array();
      for (const auto& r : enumerate_equitable(nArg, lArg)) out.push_back(to_json(r));
      emit(ordered_json{{"n", nArg}, {"l", lArg}, {"equitable", std::move(out)}});
    } else if (billiard->parsed()) {
      emit(to_json(conjectured_max_ribbon(nArg, lArg)));
    } else if (fullSupport->parsed()) {
      SkewShape a = parse_skew(skewArg);
      emit(ordered_json{{"shape", to_json(a)}, {"full_support", has_full_support(a)}});
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitPass;
}

#include "tfg/checks.hpp"
#include "tfg/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

tfg::Triple triple_arg(const std::string& arg) {
  if (arg.rfind("fixture:", 0) == 0) return tfg::fixture(arg.substr(8));
  return tfg::load_triple(arg);
}

std::string signed_str(long n) { return (n > 0 ? "+" : "") + std::to_string(n); }

std::string membership(const tfg::VElement& v) {
  if (v.is_in_F()) return "F";
  if (v.is_in_T()) return "T";
  return "V";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in Thompson-like fraction groups"};
  app.require_subcommand(1);

  auto* v = app.add_subcommand("v", "Elements of V given as prefix tables");
  v->require_subcommand(1);
  std::string t1, t2, at;
  auto* v_compose = v->add_subcommand("compose", "Print the composite (second applied first)");
  v_compose->add_option("v", t1)->required();
  v_compose->add_option("w", t2)->required();
  auto* v_invert = v->add_subcommand("invert", "Print the inverse");
  v_invert->add_option("v", t1)->required();
  auto* v_reduce = v->add_subcommand("reduce", "Print the reduced table");
  v_reduce->add_option("v", t1)->required();
  auto* v_apply = v->add_subcommand("apply", "Image of a point");
  v_apply->add_option("v", t1)->required();
  v_apply->add_option("--at", at, "point such as 01.(10)")->required();
  auto* v_slope = v->add_subcommand("slope", "log2 of the slope at a point");
  v_slope->add_option("v", t1)->required();
  v_slope->add_option("--at", at, "point such as 01.(10)")->required();
  auto* v_member = v->add_subcommand("member", "Smallest of F, T, V containing the element");
  v_member->add_option("v", t1)->required();

  auto* check = app.add_subcommand("check", "Run a property suite");
  std::string suite, triple_file;
  std::uint64_t seed = 1;
  int iters = 100;
  bool timing = false;
  check->add_option("--suite", suite)->required();
  check->add_option("--seed", seed, "base seed")->capture_default_str();
  check->add_option("--iters", iters, "number of random cases")->capture_default_str()->check(CLI::NonNegativeNumber);
  check->add_option("--triple", triple_file, "triple JSON file or fixture:NAME");
  check->add_flag("--timing", timing, "include elapsed time in the report");

  auto* classify = app.add_subcommand("classify", "Compare two fraction groups");
  std::string left, right, mode;
  classify->add_option("--left", left, "triple JSON file or fixture:NAME")->required();
  classify->add_option("--right", right, "triple JSON file or fixture:NAME")->required();
  classify->add_option("--mode", mode)->required()->check(CLI::IsMember({"prop24", "cor28", "cocf"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (v->parsed()) {
      auto x = tfg::VElement::parse(t1);
      if (v_compose->parsed()) std::cout << tfg::compose(x, tfg::VElement::parse(t2)).str() << "\n";
      else if (v_invert->parsed()) std::cout << x.inverse().str() << "\n";
      else if (v_reduce->parsed()) std::cout << x.str() << "\n";
      else if (v_apply->parsed()) std::cout << x.apply(tfg::CPoint::parse(at)).str() << "\n";
      else if (v_slope->parsed()) std::cout << signed_str(x.slope(tfg::CPoint::parse(at))) << "\n";
      else if (v_member->parsed()) std::cout << membership(x) << "\n";
      return 0;
    }
    if (check->parsed()) {
      if (!tfg::has_suite(suite)) {
        std::cerr << "error: unknown suite '" << suite << "'; known suites:";
        for (const auto& n : tfg::suite_names()) std::cerr << " " << n;
        std::cerr << "\n";
        return 2;
      }
      std::optional<tfg::Triple> t;
      if (!triple_file.empty()) t = triple_arg(triple_file);
      auto report = tfg::run_suite(suite, t, seed, iters);
      std::cout << tfg::report_to_json(report, timing).dump(2) << "\n";
      return report.passed() ? 0 : 1;
    }
    if (classify->parsed()) {
      tfg::Triple a = triple_arg(left), b = triple_arg(right);
      tfg::Decision d = mode == "prop24" ? tfg::prop24_search(a, b)
                        : mode == "cor28" ? tfg::cor28_decide(a, b)
                                          : tfg::cocf_check(a, b);
      std::cout << tfg::decision_to_json(d).dump(2) << "\n";
      return 0;
    }
  } catch (const tfg::BoundError& e) {
    std::cerr << "bound error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

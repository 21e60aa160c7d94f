// Batch interface: load an instance file, run a verification suite, emit a
// deterministic JSON report.
//
// Exit codes: 0 all pass, 1 any fail, 2 inconclusive without fail,
// 3 usage or parse error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "frtb/suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact verification of FRT-type left bialgebroids"};
  app.require_subcommand(1);

  std::string instance_path, report_path, suite_name, target = "a-sigma";
  int degree_cap = -1, membership_bound = -1;
  unsigned threads = 1;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("instance", instance_path, "instance file")->required();
    cmd->add_option("--degree-cap", degree_cap, "graded degree cap");
    cmd->add_option("--membership-bound", membership_bound,
                    "word-length bound for ideal-membership certificates");
    cmd->add_option("--threads", threads, "worker threads");
    cmd->add_option("--report", report_path, "write the JSON report here");
  };

  CLI::App* c_check = app.add_subcommand("check", "defining conditions");
  add_common(c_check);
  CLI::App* c_dims = app.add_subcommand("dims", "graded dimensions");
  add_common(c_dims);
  CLI::App* c_verify = app.add_subcommand("verify", "axiom suites");
  c_verify
      ->add_option("suite", suite_name,
                   "aw-bialgebroid | weak-axioms | phi | rigidity | weak-hopf | "
                   "closure")
      ->required();
  add_common(c_verify);
  c_verify->add_option("--target", target, "codomain for the closure suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    frtb::Instance inst = frtb::parse_instance_file(instance_path);
    frtb::SuiteFlags flags;
    flags.degree_cap = degree_cap;
    flags.membership_bound = membership_bound;
    flags.threads = threads;
    flags.target = target;

    frtb::Report rep;
    if (app.got_subcommand("check"))
      rep = frtb::cmd_check(inst, flags);
    else if (app.got_subcommand("dims"))
      rep = frtb::cmd_dims(inst, flags);
    else
      rep = frtb::cmd_verify(inst, suite_name, flags);

    std::string json = rep.to_json();
    if (!report_path.empty()) {
      std::ofstream out(report_path, std::ios::binary);
      out << json;
    } else {
      std::cout << json;
    }
    std::cerr << "suite " << rep.suite << ": " << rep.n_pass << " pass, "
              << rep.n_fail << " fail, " << rep.n_inconclusive
              << " inconclusive\n";
    return rep.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

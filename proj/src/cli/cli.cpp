// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#include "syncsem/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "syncsem/check.hpp"
#include "syncsem/plexil/ast.hpp"
#include "syncsem/plexil/eval.hpp"
#include "syncsem/plexil/events.hpp"
#include "syncsem/plexil/exec.hpp"
#include "syncsem/plexil/trace.hpp"
#include "syncsem/rewrite.hpp"

namespace syncsem::cli {

namespace {

using namespace syncsem::plexil;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

ExecutionState load_plan(const std::string& path) { return compile(parse_plan(read_file(path))); }

struct RunArgs {
  std::string plan;
  std::string script;
  std::size_t bound = 10000;
  int verbosity = 2;
  std::string prefix;
};

int cmd_run(const RunArgs& a, std::ostream& out, std::ostream& err) {
  ExecutionState state;
  std::vector<Event> events;
  try {
    state = load_plan(a.plan);
    events = parse_event_script(read_file(a.script));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }

  const TraceFormat fmt{a.verbosity};
  std::string trace;
  std::size_t counter = 1;
  int status = kOk;
  try {
    for (std::size_t k = 0; k < events.size(); ++k) {
      try {
        QuiescenceResult r = macro(state, events[k], a.bound);
        state = std::move(r.state);
        trace += format_macro(k + 1, events[k], r.reports, &state, &counter, fmt);
      } catch (const SpuriousLoop& loop) {
        trace += format_macro(k + 1, events[k], loop.reports(), nullptr, &counter, fmt);
        err << format_cycle(loop);
        status = kSpuriousLoop;
        break;
      } catch (const BoundExhausted& b) {
        trace += format_macro(k + 1, events[k], b.reports(), nullptr, &counter, fmt);
        err << "error: macro step " << k + 1 << ": " << b.what() << "\n";
        status = kBoundExhausted;
        break;
      }
    }
  } catch (const EvalError& e) {
    err << "error: " << e.what() << "\n";
    status = kFailure;
  }

  const std::string final_dump = dump(state);
  try {
    if (a.prefix.empty()) {
      out << trace << "final\n" << final_dump;
    } else {
      write_file(a.prefix + ".trace", trace);
      write_file(a.prefix + ".dump", final_dump);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return status;
}

// Dump lines about one object: `<id> ` prefix match.
std::string show(const ExecutionState& s, const std::string& id) {
  std::istringstream lines(dump(s));
  std::string line;
  std::string out;
  while (std::getline(lines, line)) {
    if (line.starts_with(id + " ")) out += line + "\n";
  }
  return out;
}

int cmd_step(const std::string& plan, std::size_t bound, std::istream& in, std::ostream& out, std::ostream& err) {
  ExecutionState state;
  try {
    state = load_plan(plan);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  std::size_t counter = 1;
  auto print_reports = [&](const std::vector<MicroReport>& reports) {
    for (const MicroReport& r : reports) out << format_micro(counter++, r);
  };
  out << "> " << std::flush;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::string cmd;
    words >> cmd;
    std::string rest;
    std::getline(words >> std::ws, rest);
    try {
      if (cmd.empty()) {
      } else if (cmd == "quit" || cmd == "exit") {
        return kOk;
      } else if (cmd == "event") {
        const auto parsed = parse_event_script(rest);
        if (!parsed.empty()) {
          for (const auto& [name, value] : parsed.front()) state.external[name] = value;
        }
        out << "event {" << (parsed.empty() ? "" : format_event(parsed.front())) << "}\n";
      } else if (cmd == "micro") {
        auto [next, report] = micro(state);
        if (report.empty()) {
          out << "no rules fired\n";
        } else {
          print_reports({report});
          state = std::move(next);
        }
      } else if (cmd == "quiesce") {
        try {
          QuiescenceResult r = quiescence(state, bound);
          if (r.reports.empty()) out << "no rules fired\n";
          print_reports(r.reports);
          state = std::move(r.state);
        } catch (const SpuriousLoop& loop) {
          out << format_cycle(loop);
        } catch (const BoundExhausted& b) {
          print_reports(b.reports());
          out << b.what() << "\n";
        }
      } else if (cmd == "show") {
        if (rest.empty()) {
          out << dump(state);
        } else {
          const std::string found = show(state, rest);
          out << (found.empty() ? "no object '" + rest + "'\n" : found);
        }
      } else {
        out << "unknown command '" << cmd << "' (event, micro, quiesce, show, quit)\n";
      }
    } catch (const std::exception& e) {
      out << "error: " << e.what() << "\n";
    }
    out << "> " << std::flush;
  }
  out << "\n";
  return kOk;
}

struct CheckArgs {
  std::string suite;
  std::uint64_t seed = 7;
  std::size_t cases = 200;
  std::string corpus = "corpus";
  std::size_t bound = 10000;
  bool serial = false;
};

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  const auto suite = parse_suite(a.suite);
  if (!suite) {
    err << "error: unknown suite '" << a.suite
        << "' (soundness, completeness, determinism-propagation, plexil-differential)\n";
    return kFailure;
  }
  CheckOptions opts;
  opts.seed = a.seed;
  opts.cases = a.cases;
  opts.parallel = !a.serial;
  opts.corpus_dir = a.corpus;
  opts.micro_bound = a.bound;
  try {
    const SuiteReport report = run_suite(*suite, opts);
    out << format_report(report);
    return report.ok() ? kOk : kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

struct RewriteArgs {
  std::string rules;
  std::string set;
  std::size_t steps = 1;
  std::string mode;
  std::size_t max_set_size = Limits{}.max_set_size;
};

int cmd_rewrite(const RewriteArgs& a, std::ostream& out, std::ostream& err) {
  RewriteSystem system;
  TermSet input;
  try {
    system = parse_rules(read_file(a.rules));
    // A literal set, or a file holding one.
    input = parse_termset(std::filesystem::is_regular_file(a.set) ? read_file(a.set) : a.set);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  Limits limits;
  limits.max_set_size = a.max_set_size;
  try {
    const SetRelation base = relation_of(system, limits);
    const Strategy strategy = max_redexes(base);
    std::function<Family(const TermSet&)> step;
    if (a.mode == "async") {
      step = [r = async_ext(base)](const TermSet& s) { return r.step(s).states; };
    } else if (a.mode == "parallel") {
      step = [r = parallel_ext(base)](const TermSet& s) { return r.step(s).states; };
    } else if (a.mode == "sync") {
      step = [r = sync_ext(base, strategy)](const TermSet& s) { return r.step(s).states; };
    } else {
      step = [&](const TermSet& s) { return serialize(base, strategy, s); };
    }
    Family current{input};
    for (std::size_t i = 0; i < a.steps; ++i) {
      Family next;
      for (const TermSet& s : current) next.merge(step(s));
      current = std::move(next);
    }
    out << to_string(current) << "\n";
    return kOk;
  } catch (const SizeCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kSizeCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Synchronous set relations and a PLEXIL-subset interpreter", "syncsem"};
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Execute a plan against an event script");
  run_cmd->add_option("plan", run.plan, "Plan file")->required();
  run_cmd->add_option("script", run.script, "Event script, one event per line")->required();
  run_cmd->add_option("--bound", run.bound, "Micro steps allowed per macro step")->check(CLI::PositiveNumber);
  run_cmd->add_option("--verbosity", run.verbosity, "Trace detail, 0-3")->check(CLI::Range(0, 3));
  run_cmd->add_option("-o,--output", run.prefix, "Write <prefix>.trace and <prefix>.dump instead of stdout");

  std::string step_plan;
  std::size_t step_bound = 10000;
  auto* step_cmd = app.add_subcommand("step", "Step a plan interactively");
  step_cmd->add_option("plan", step_plan, "Plan file")->required();
  step_cmd->add_option("--bound", step_bound, "Micro steps allowed by quiesce")->check(CLI::PositiveNumber);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Run a property suite");
  check_cmd->add_option("suite", check.suite, "soundness, completeness, determinism-propagation, plexil-differential")
      ->required();
  check_cmd->add_option("--seed", check.seed, "Suite seed");
  check_cmd->add_option("--cases", check.cases, "Number of random systems");
  check_cmd->add_option("--corpus", check.corpus, "Plan corpus for plexil-differential");
  check_cmd->add_option("--bound", check.bound, "Micro bound for plexil-differential")->check(CLI::PositiveNumber);
  check_cmd->add_flag("--serial", check.serial, "Run cases on one thread");

  RewriteArgs rw;
  auto* rw_cmd = app.add_subcommand("rewrite", "Apply a rule system to a term set");
  rw_cmd->add_option("rules", rw.rules, "Rule file")->required();
  rw_cmd->add_option("set", rw.set, "Term set such as {A(0),B(1)}, or a file holding one")->required();
  rw_cmd->add_option("--steps", rw.steps, "Steps to take");
  rw_cmd->add_option("--max-set-size", rw.max_set_size, "Largest set a relation may inspect");
  auto* modes = rw_cmd->add_option_group("mode");
  modes->add_flag_callback("--async", [&] { rw.mode = "async"; }, "Asynchronous extension");
  modes->add_flag_callback("--parallel", [&] { rw.mode = "parallel"; }, "Parallel extension");
  modes->add_flag_callback("--sync", [&] { rw.mode = "sync"; }, "Synchronous extension, maximal redexes");
  modes->add_flag_callback("--serialize", [&] { rw.mode = "serialize"; }, "Serialization of the synchronous step");
  modes->require_option(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kFailure;
  }

  if (*run_cmd) return cmd_run(run, out, err);
  if (*step_cmd) return cmd_step(step_plan, step_bound, in, out, err);
  if (*check_cmd) return cmd_check(check, out, err);
  return cmd_rewrite(rw, out, err);
}

}  // namespace syncsem::cli

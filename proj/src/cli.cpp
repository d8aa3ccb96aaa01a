#include "paramax/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "paramax/collecting.hpp"
#include "paramax/consistency.hpp"
#include "paramax/serialize.hpp"
#include "paramax/synthesis.hpp"
#include "paramax/verify.hpp"

namespace paramax::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string path;
  std::string format = "text";
  std::optional<std::size_t> max_rules;
  std::string widen = "off";
  std::size_t max_iters = 1000;
  std::string input_range = "-8:8";
  std::size_t max_steps = 100000;
  bool phi_table = false;
  std::size_t verify_solutions = 8;
  bool theorem1 = false;
  bool soundness = false;
};

constexpr std::size_t kPhiTableLimit = 10;

template <class T>
T parse_number(const std::string& s, const std::string& what) {
  T v{};
  const auto* end = s.data() + s.size();
  const auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end) throw UsageError("invalid " + what + ": '" + s + "'");
  return v;
}

AnalysisConfig make_config(const Options& o) {
  AnalysisConfig c;
  c.max_iterations = o.max_iters;
  c.merge_budget = o.max_rules;
  if (o.widen != "off") c.widening_delay = parse_number<std::size_t>(o.widen, "--widen value");
  if (const char* cap = std::getenv("PARAMAX_WIDTH_CAP"); cap && *cap) {
    c.condition_width_cap = parse_number<std::size_t>(cap, "PARAMAX_WIDTH_CAP");
  }
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return c;
}

InputRange parse_range(const std::string& s) {
  const auto colon = s.find(':', 1);
  if (colon == std::string::npos) throw UsageError("--input-range expects LO:HI");
  const InputRange r{parse_number<Value>(s.substr(0, colon), "range bound"),
                     parse_number<Value>(s.substr(colon + 1), "range bound")};
  if (r.lo > r.hi) throw UsageError("--input-range is empty");
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string render_sets(const std::vector<AssumptionSet>& sets,
                        const std::vector<std::string>& labels) {
  std::string out = "[";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) out += ", ";
    out += render(sets[i], labels);
  }
  return out + "]";
}

class Session {
 public:
  Session(const Options& o, std::ostream& out, std::ostream& err, const Hooks& hooks)
      : o_(o), out_(out), err_(err), hooks_(hooks), config_(make_config(o)),
        cfg_(compile(read_file(o.path))), labels_(cfg_.assumption_labels()) {}

  int analyze() {
    const auto r = run_param();
    if (json()) {
      out_ << analysis_document(o_.path, cfg_, r, config_).dump(2) << '\n';
    } else {
      out_ << "program: " << o_.path << '\n';
      out_ << "assumptions: " << render(AssumptionSet::full(labels_.size()), labels_) << '\n';
      for (const auto& n : cfg_.nodes()) {
        out_ << "node " << n.id << ' ' << kind_name(n.kind);
        const std::string k = kind_name(n.kind);
        if (k != "entry" && k != "exit") out_ << ' ' << describe(cfg_, n);
        out_ << '\n';
        for (const auto& rule : r.states[n.id].rules) {
          out_ << "  " << render(rule.condition, labels_) << " -> "
               << render(rule.state, cfg_.variables()) << '\n';
        }
      }
      out_ << "iterations: " << r.iterations << '\n';
      out_ << "converged: " << (r.converged ? "true" : "false") << '\n';
    }
    if (!r.converged) err_ << "warning: analysis did not converge\n";
    return r.converged ? kOk : kNotConverged;
  }

  int synthesize() {
    const auto r = run_param();
    if (!r.converged) {
      err_ << "warning: analysis did not converge; no assumptions are reported\n";
      if (json()) {
        Json doc = analysis_document(o_.path, cfg_, r, config_);
        doc["synthesis"] = {{"verdict", "unknown"}};
        out_ << doc.dump(2) << '\n';
      } else {
        out_ << "unknown\n";
      }
      return kUnknown;
    }
    const auto outcome = paramax::synthesize(r, cfg_);
    std::optional<SynthesisCheck> check;
    if (outcome.verdict == Verdict::Solutions) {
      check = verify_synthesis(cfg_, outcome, config_, o_.verify_solutions);
    }
    if (json()) {
      Json doc = analysis_document(o_.path, cfg_, r, config_);
      doc["synthesis"] = to_json(outcome, cfg_);
      if (check) doc["synthesis"]["verification"] = to_json(*check, cfg_);
      out_ << doc.dump(2) << '\n';
    } else {
      out_ << "syn: " << render(outcome.syn_condition, labels_) << '\n';
      switch (outcome.verdict) {
        case Verdict::Solutions: {
          const bool all = !outcome.truncated &&
                           outcome.solutions.size() == (std::size_t{1} << labels_.size());
          out_ << "solutions: "
               << (all ? std::string("all subsets") : render_sets(outcome.solutions, labels_))
               << " minimal: " << render_sets(outcome.minimal_solutions, labels_) << '\n';
          if (outcome.truncated) out_ << "solutions truncated\n";
          out_ << "verified: " << check->checked - check->violations.size() << " of "
               << check->checked << " solutions\n";
          break;
        }
        case Verdict::Unknown:
          out_ << "unknown\n";
          break;
        case Verdict::Impossible:
          out_ << "impossible\n";
          break;
      }
      for (const auto& a : outcome.assertions) {
        out_ << "assert node " << a.node << ": " << describe(cfg_, cfg_.node(a.node)) << '\n';
        for (const auto& rv : a.rules) {
          out_ << "  " << render(rv.condition, labels_) << " -> " << to_string(rv.proof) << '\n';
        }
      }
    }
    if (check && !check->passed()) {
      err_ << "error: a synthesized assumption set failed re-verification\n";
      return kMismatch;
    }
    switch (outcome.verdict) {
      case Verdict::Solutions:
        return kOk;
      case Verdict::Unknown:
        return kUnknown;
      case Verdict::Impossible:
        return kImpossible;
    }
    return kOk;
  }

  int consistency() {
    const auto r = run_param();
    ConsistencyOptions opts;
    opts.phi_table_limit = o_.phi_table ? kPhiTableLimit : 0;
    auto rep = report(r, cfg_, opts);
    if (!o_.phi_table) rep.phi_table.reset();
    if (o_.phi_table && labels_.size() > kPhiTableLimit) {
      err_ << "note: phi table omitted above " << kPhiTableLimit << " assumptions\n";
    }
    rep.approximate = config_.merge_budget.has_value();
    if (json()) {
      Json doc = analysis_document(o_.path, cfg_, r, config_);
      doc["consistency"] = to_json(rep, cfg_);
      out_ << doc.dump(2) << '\n';
    } else {
      out_ << "mu: " << render(rep.mu, labels_) << '\n';
      out_ << "nu: " << render(rep.nu, labels_) << '\n';
      for (std::size_t a = 0; a < labels_.size(); ++a) {
        out_ << labels_[a] << ": " << to_string(rep.classification[a]) << '\n';
      }
      if (rep.fixpoints) out_ << "fixpoints: " << render_sets(*rep.fixpoints, labels_) << '\n';
      if (rep.phi_table) {
        for (std::size_t bits = 0; bits < rep.phi_table->size(); ++bits) {
          out_ << "phi(" << render(AssumptionSet(static_cast<AssumptionSet::Bits>(bits)), labels_)
               << ") = " << render((*rep.phi_table)[bits], labels_) << '\n';
        }
      }
      if (rep.approximate) out_ << "note: approximate (merge budget in effect)\n";
    }
    if (!r.converged) {
      err_ << "warning: analysis did not converge; bounds are not meaningful\n";
      return kNotConverged;
    }
    return kOk;
  }

  int check_oracle() {
    bool t1 = o_.theorem1;
    bool snd = o_.soundness;
    if (!t1 && !snd) t1 = snd = true;
    if (labels_.size() > kBruteForceLimit) {
      throw UsageError("check-oracle supports at most " + std::to_string(kBruteForceLimit) +
                       " assumptions");
    }
    CollectingConfig cc;
    cc.input_range = parse_range(o_.input_range);
    cc.step_bound = o_.max_steps;
    const auto r = run_param();
    std::vector<VerificationReport> reports;
    if (t1) reports.push_back(verify_theorem1(cfg_, config_, r, o_.path));
    if (snd) reports.push_back(verify_soundness(cfg_, r, cc, o_.path));
    bool ok = true;
    for (const auto& rep : reports) ok = ok && rep.passed();
    if (json()) {
      Json doc;
      doc["program"] = o_.path;
      doc["assumptions"] = labels_;
      doc["reports"] = Json::array();
      for (const auto& rep : reports) doc["reports"].push_back(to_json(rep, cfg_));
      doc["passed"] = ok;
      out_ << doc.dump(2) << '\n';
    } else {
      for (const auto& rep : reports) {
        out_ << rep.theorem << ": " << (rep.passed() ? "pass" : "FAIL") << " ("
             << rep.subsets_checked << " subsets, " << rep.mode;
        if (!rep.skipped.empty()) out_ << ", " << rep.skipped.size() << " skipped";
        if (!rep.partial.empty()) out_ << ", " << rep.partial.size() << " partial";
        out_ << ")\n";
        for (const auto& m : rep.mismatches) {
          out_ << "  subset " << render(m.subset, labels_) << " node " << m.node
               << ": expected " << m.expected << " got " << m.actual << '\n';
        }
      }
    }
    return ok ? kOk : kMismatch;
  }

  int dump_cfg() {
    if (json()) {
      Json doc;
      doc["program"] = o_.path;
      doc["assumptions"] = labels_;
      doc["nodes"] = Json::array();
      for (const auto& n : cfg_.nodes()) {
        doc["nodes"].push_back({{"id", n.id},
                                {"kind", kind_name(n.kind)},
                                {"stmt", describe(cfg_, n)},
                                {"line", n.line},
                                {"succs", cfg_.successors(n.id)}});
      }
      out_ << doc.dump(2) << '\n';
    } else {
      out_ << dump(cfg_);
    }
    return kOk;
  }

 private:
  [[nodiscard]] bool json() const { return o_.format == "json"; }

  ParamAnalysisResult run_param() {
    if (hooks_.analyze_param) return hooks_.analyze_param(cfg_, config_);
    return analyze_param(cfg_, config_);
  }

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
  const Hooks& hooks_;
  AnalysisConfig config_;
  Cfg cfg_;
  std::vector<std::string> labels_;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("path", o.path, "Program source (.pwl)")->required();
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--max-rules", o.max_rules, "Merge budget: maximum rules per node")
      ->check(CLI::PositiveNumber);
  sub->add_option("--widen", o.widen, "Widening delay at loop heads, or off");
  sub->add_option("--max-iters", o.max_iters, "Evaluation cap per node")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks& hooks) {
  Options o;
  CLI::App app{"Parameterized interval analysis over labeled assumptions", "paramax"};
  app.require_subcommand(1, 1);

  auto* analyze = app.add_subcommand("analyze", "Per-node parameterized states");
  auto* synth = app.add_subcommand("synthesize", "Assumption sets under which all asserts hold");
  auto* consist = app.add_subcommand("consistency", "Bounds on consistent assumption sets");
  auto* oracle = app.add_subcommand("check-oracle", "Check the analysis against brute force");
  auto* cfgcmd = app.add_subcommand("dump-cfg", "Print the control-flow graph");
  for (auto* sub : {analyze, synth, consist, oracle, cfgcmd}) add_common(sub, o);
  synth->add_option("--verify-solutions", o.verify_solutions,
                    "Solutions re-checked by baseline analysis");
  consist->add_flag("--phi-table", o.phi_table, "Print Phi for every assumption set");
  oracle->add_option("--input-range", o.input_range, "Input values LO:HI");
  oracle->add_option("--max-steps", o.max_steps, "Path length bound")->check(CLI::PositiveNumber);
  oracle->add_flag("--theorem1", o.theorem1, "Compare with per-subset baseline runs");
  oracle->add_flag("--soundness", o.soundness, "Compare with collected concrete states");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    Session s(o, out, err, hooks);
    if (*analyze) return s.analyze();
    if (*synth) return s.synthesize();
    if (*consist) return s.consistency();
    if (*oracle) return s.check_oracle();
    return s.dump_cfg();
  } catch (const ParseError& e) {
    err << o.path << ':' << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const WidthExceeded& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace paramax::cli

#include "coop/cli/app.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "coop/cli/io.hpp"
#include "coop/players.hpp"

namespace coop::cli {

namespace {

namespace fs = std::filesystem;

struct SolutionOptions {
  std::string id;
  std::string alpha;
  std::string a;

  void add_to(CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--solution", id, "catalog id (" + catalog_ids() + ")");
    if (required) opt->required();
    cmd->add_option("--alpha", alpha, "egalitarian parameter, e.g. 1/2 (use --alpha=-1 for negatives)");
    cmd->add_option("--a", a, "vi_plus_a shift, default 1");
  }

  SolutionSpec spec() const {
    std::optional<Rat> al;
    std::optional<Rat> sh;
    if (!alpha.empty()) al = Rat::parse(alpha);
    if (!a.empty()) sh = Rat::parse(a);
    return SolutionSpec::parse(id, al, sh);
  }

  static std::string catalog_ids() {
    std::string out;
    for (std::string_view id : solution_ids()) out += (out.empty() ? "" : ", ") + std::string(id);
    return out;
  }
};

struct Options {
  std::string format = "plain";
  std::string game_path;
  std::string basis = "unanimity";
  SolutionOptions solution;

  std::string axiom;
  std::string mode = "exhaustive";
  std::string grid;
  int n = 3;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 42;
  std::vector<std::string> bundles;
  std::uint64_t nested_budget = ExhaustiveStrategy{}.nested_budget;
  std::uint64_t max_instances = ExhaustiveStrategy{}.max_instances;
  unsigned threads = 0;
  std::string replay;
  bool implications = false;

  bool run_all = false;
  bool list = false;
  std::string export_dir;
};

class Report {
 public:
  Report(std::string command, bool json) : json_(json) {
    doc_ = {{"schema_version", kSchemaVersion}, {"command", std::move(command)}};
  }

  json& doc() { return doc_; }
  std::ostringstream& plain() { return plain_; }
  bool is_json() const { return json_; }

  Result finish(int code) const { return {code, json_ ? doc_.dump(2) + "\n" : plain_.str(), {}}; }

 private:
  bool json_;
  json doc_;
  std::ostringstream plain_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<Rat> parse_grid(std::string text) {
  text.erase(std::remove_if(text.begin(), text.end(), [](char c) { return c == '{' || c == '}' || c == ' '; }),
             text.end());
  std::vector<Rat> grid;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw InputError("empty entry in --grid");
    grid.push_back(Rat::parse(item));
  }
  if (grid.empty()) throw InputError("--grid needs at least one value");
  return grid;
}

std::string join_rats(const std::vector<Rat>& xs) {
  std::string out;
  for (const Rat& x : xs) out += (out.empty() ? "" : ",") + x.str();
  return "{" + out + "}";
}

std::string side_str(const std::vector<Rat>& xs) {
  if (xs.size() == 1) return xs[0].str();
  return PayoffVector(xs).str();
}

std::string pairs_str(const std::vector<std::pair<PlayerId, PlayerId>>& pairs) {
  std::string out;
  for (const auto& [i, j] : pairs) {
    out += (out.empty() ? "" : " ") + std::string("(") + std::to_string(i.index()) + "," + std::to_string(j.index()) + ")";
  }
  return out.empty() ? "none" : out;
}

int verdict_exit(const Verdict& v) {
  if (is_counterexample(v)) return kRefuted;
  if (std::holds_alternative<BudgetExhausted>(v)) return kBudgetExhausted;
  return kSuccess;
}

void print_verdict(std::ostream& out, const Verdict& v) {
  out << "outcome: " << outcome_name(v) << "\n";
  if (const auto* p = std::get_if<Passed>(&v)) {
    out << "instances checked: " << p->instances_checked << " (no counterexample within the domain)\n";
  } else if (const auto* c = std::get_if<Counterexample>(&v)) {
    out << instance_str(c->instance);
    out << "  lhs: " << side_str(c->sides.lhs) << "\n";
    out << "  rhs: " << side_str(c->sides.rhs) << "\n";
    out << "  required: lhs " << (c->sides.relation == Relation::equal ? "=" : ">=") << " rhs\n";
  } else {
    const auto& b = std::get<BudgetExhausted>(v);
    out << "instances checked: " << b.instances_checked << "\n";
    out << "primary games covered: " << b.primary_games_covered << " of " << b.primary_games_total << "\n";
  }
}

SearchStrategy build_strategy(const Options& o, CLI::App* cmd, json& mode_doc, std::string& mode_text) {
  const auto given = [&](const char* flag) { return cmd->count(flag) > 0; };
  const auto forbid = [&](std::initializer_list<const char*> flags) {
    for (const char* f : flags) {
      if (given(f)) throw InputError(std::string(f) + " does not apply to --mode " + o.mode);
    }
  };

  if (o.mode == "exhaustive") {
    forbid({"--trials", "--seed", "--bundles"});
    ExhaustiveStrategy s;
    if (!o.grid.empty()) s.grid = parse_grid(o.grid);
    s.n = o.n;
    s.nested_budget = o.nested_budget;
    s.max_instances = o.max_instances;
    s.threads = o.threads;
    std::vector<std::string> grid;
    for (const Rat& x : s.grid) grid.push_back(x.str());
    mode_doc = {{"mode", "exhaustive"}, {"n", s.n}, {"grid", grid}, {"nested_budget", s.nested_budget},
                {"max_instances", s.max_instances}};
    mode_text = "exhaustive (n=" + std::to_string(s.n) + ", grid " + join_rats(s.grid) +
                ", nested budget " + std::to_string(s.nested_budget) + ")";
    return s;
  }
  if (o.mode == "random") {
    forbid({"--grid", "--nested-budget", "--max-instances", "--threads", "--bundles"});
    RandomStrategy s{o.n, o.trials, o.seed};
    mode_doc = {{"mode", "random"}, {"n", s.n}, {"trials", s.trials}, {"seed", s.seed}};
    mode_text = "random (n=" + std::to_string(s.n) + ", " + std::to_string(s.trials) + " trials, seed " +
                std::to_string(s.seed) + ")";
    return s;
  }
  forbid({"--grid", "--nested-budget", "--max-instances", "--threads", "--trials", "--seed", "--n"});
  WitnessStrategy s{o.bundles};
  for (const std::string& id : s.bundle_ids) witness(id);
  mode_doc = {{"mode", "witnesses"}, {"bundles", s.bundle_ids}};
  std::string ids;
  for (const std::string& id : s.bundle_ids) ids += (ids.empty() ? "" : ",") + id;
  mode_text = "witnesses (" + (ids.empty() ? std::string("all bundles") : ids) + ")";
  return s;
}

Result run_compute(const Options& o, Report& r) {
  const Game v = parse_game_file(read_file(o.game_path));
  const SolutionSpec s = o.solution.spec();
  const PayoffVector x = evaluate(s, v);
  r.doc()["solution"] = solution_to_json(s);
  r.doc()["payoff"] = payoff_to_json(x);
  r.plain() << x.str() << "\n";
  return r.finish(kSuccess);
}

Result run_dividends(const Options& o, Report& r) {
  const Game v = parse_game_file(read_file(o.game_path));
  const CoefficientMap c = to_coefficients(v, parse_basis(o.basis));
  r.doc()["coefficients"] = coefficients_to_json(c);
  bool any = false;
  for (Coalition s : display_order(v.n())) {
    if (c[s].is_zero()) continue;
    r.plain() << s.str() << ": " << c[s] << "\n";
    any = true;
  }
  if (!any) r.plain() << "all coefficients are 0\n";
  return r.finish(kSuccess);
}

Result run_classify(const Options& o, Report& r) {
  const Game v = parse_game_file(read_file(o.game_path));
  const auto np = null_players(v);
  const auto nfp = nullifying_players(v);
  const auto pairs = symmetric_pairs(v);
  json pj = json::array();
  for (const auto& [i, j] : pairs) pj.push_back({i.index(), j.index()});
  r.doc()["null_players"] = players_to_json(np);
  r.doc()["nullifying_players"] = players_to_json(nfp);
  r.doc()["symmetric_pairs"] = pj;
  r.plain() << "null players: " << Coalition::of(np).str() << "\n";
  r.plain() << "nullifying players: " << Coalition::of(nfp).str() << "\n";
  r.plain() << "symmetric pairs: " << pairs_str(pairs) << "\n";
  return r.finish(kSuccess);
}

Result run_replay(const Options& o, Report& r) {
  json doc;
  try {
    doc = json::parse(read_file(o.replay));
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed replay file: ") + e.what());
  }
  if (!doc.contains("solution")) throw InputError("replay file needs a \"solution\" field");
  const SolutionSpec s = solution_from_json(doc.at("solution"));
  const json* inst = nullptr;
  if (doc.contains("instance")) {
    inst = &doc.at("instance");
  } else if (doc.contains("verdict") && doc.at("verdict").contains("instance")) {
    inst = &doc.at("verdict").at("instance");
  } else {
    throw InputError("replay file needs an \"instance\" (or a counterexample verdict)");
  }
  const AxiomInstance instance = instance_from_json(*inst);
  const Sides sides = evaluate_sides(instance.axiom(), s, instance);
  const bool holds = sides.holds();

  r.doc()["solution"] = solution_to_json(s);
  r.doc()["axiom"] = std::string(to_string(instance.axiom()));
  r.doc()["holds"] = holds;
  r.plain() << "solution: " << s.name() << "\naxiom: " << to_string(instance.axiom()) << "\n"
            << instance_str(instance) << "  lhs: " << side_str(sides.lhs) << "\n  rhs: " << side_str(sides.rhs)
            << "\n" << (holds ? "holds" : "fails") << "\n";
  return r.finish(holds ? kSuccess : kRefuted);
}

Result run_check(const Options& o, CLI::App* cmd, Report& r) {
  if (!o.replay.empty()) return run_replay(o, r);
  if (o.solution.id.empty()) throw InputError("check needs --solution (or --replay)");
  if (o.implications == !o.axiom.empty()) throw InputError("check needs exactly one of --axiom and --implications");

  const SolutionSpec s = o.solution.spec();
  json mode_doc;
  std::string mode_text;
  const SearchStrategy strategy = build_strategy(o, cmd, mode_doc, mode_text);
  r.doc()["solution"] = solution_to_json(s);
  r.doc()["strategy"] = mode_doc;
  r.plain() << "solution: " << s.name() << "\nmode: " << mode_text << "\n";

  if (o.implications) {
    const CrosscheckReport report = implication_crosscheck(s, strategy);
    r.doc()["crosscheck"] = crosscheck_to_json(report);
    for (const auto& [axiom, v] : report.verdicts) r.plain() << to_string(axiom) << ": " << outcome_name(v) << "\n";
    for (const ImplicationCheck& c : report.checks) {
      r.plain() << c.name << " (" << c.statement << "): "
                << (!c.consistent ? "INCONSISTENT, indicates an implementation bug"
                                  : c.applicable ? "consistent" : "not applicable (hypothesis refuted)")
                << "\n";
    }
    return r.finish(report.consistent() ? kSuccess : kRefuted);
  }

  const AxiomId axiom = parse_axiom(o.axiom);
  const Verdict v = search_counterexample(axiom, s, strategy);
  r.doc()["axiom"] = std::string(to_string(axiom));
  r.doc()["verdict"] = verdict_to_json(v);
  r.plain() << "axiom: " << to_string(axiom) << "\n";
  print_verdict(r.plain(), v);
  return r.finish(verdict_exit(v));
}

Result run_fit(const Options& o, Report& r) {
  const SolutionSpec s = o.solution.spec();
  const FitResult fit = fit_alpha(s, o.n);
  const MembershipVerdict m = verify_family_membership(s, o.n, o.trials, o.seed);
  r.doc()["solution"] = solution_to_json(s);
  r.doc()["n"] = o.n;
  r.doc()["fit"] = fit_to_json(fit);
  r.doc()["membership"] = membership_to_json(m);

  r.plain() << "solution: " << s.name() << "\n";
  if (const auto* ok = std::get_if<ConsistentFit>(&fit)) {
    r.plain() << "fit: consistent on unanimity games, alpha = " << ok->alpha << ", eta = " << ok->eta << "\n";
  } else {
    const auto& bad = std::get<Inconsistent>(fit);
    r.plain() << "fit: inconsistent at T = " << bad.t.str() << ", player " << bad.i.index() << ": expected "
              << bad.expected << ", got " << bad.actual << "\n";
  }
  if (const auto* in = std::get_if<InFamily>(&m)) {
    r.plain() << "membership: in family with alpha = " << in->alpha << " on " << in->trials
              << " random games (evidence, not proof)\n";
    return r.finish(kSuccess);
  }
  const auto& out = std::get<NotInFamily>(m);
  r.plain() << "membership: not in family\n  game: " << game_str(out.witness) << "\n  family payoff (alpha = "
            << out.alpha << "): " << out.expected.str() << "\n  solution payoff: " << out.actual.str() << "\n";
  return r.finish(kRefuted);
}

std::string file_stem(std::string name) {
  std::string out;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') out += c;
    else if (c == ',') out += '_';
  }
  return out;
}

Result run_corpus(const Options& o, Report& r) {
  if (o.list) {
    json list = json::array();
    for (const std::string& id : bundle_ids()) {
      const WitnessBundle& b = witness(id);
      list.push_back(bundle_to_json(b));
      r.plain() << b.id << "  " << b.title << " (" << b.facts.size() << " facts)\n";
      for (const NamedGame& g : b.games) r.plain() << "    " << g.name << " = " << game_str(g.game) << "\n";
    }
    r.doc()["bundles"] = list;
    return r.finish(kSuccess);
  }
  if (!o.export_dir.empty()) {
    const fs::path dir(o.export_dir);
    fs::create_directories(dir);
    json files = json::array();
    for (const std::string& id : bundle_ids()) {
      const WitnessBundle& b = witness(id);
      for (const NamedGame& g : b.games) {
        const fs::path path = dir / (b.id + "_" + file_stem(g.name) + ".json");
        std::ofstream(path) << serialize_game(g.game);
        files.push_back(path.string());
        r.plain() << path.string() << "\n";
      }
      const fs::path manifest = dir / (b.id + ".json");
      std::ofstream(manifest) << bundle_to_json(b).dump(2) << "\n";
      files.push_back(manifest.string());
      r.plain() << manifest.string() << "\n";
    }
    r.doc()["files"] = files;
    return r.finish(kSuccess);
  }

  const RegressionReport report = run_all_witnesses();
  r.doc()["report"] = regression_to_json(report);
  for (const FactOutcome& f : report.outcomes) {
    r.plain() << (f.passed ? "PASS " : "FAIL ") << f.bundle << "#" << f.index << "  " << f.claim;
    if (!f.passed) r.plain() << "\n       " << f.detail;
    r.plain() << "\n";
  }
  r.plain() << (report.outcomes.size() - report.failures()) << "/" << report.outcomes.size() << " facts passed\n";
  return r.finish(report.all_passed() ? kSuccess : kRefuted);
}

}  // namespace

Result execute(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Exact solutions, axiom checks and characterization checks for TU-games", "coop"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "report format")->check(CLI::IsMember({"plain", "json"}));

  auto* compute = app.add_subcommand("compute", "payoff vector of a solution on a game");
  compute->add_option("--game", o.game_path, "game file")->required();
  o.solution.add_to(compute, true);

  auto* dividends = app.add_subcommand("dividends", "basis coefficients of a game");
  dividends->add_option("--game", o.game_path, "game file")->required();
  dividends->add_option("--basis", o.basis, "unanimity or canonical")->check(CLI::IsMember({"unanimity", "canonical"}));

  auto* classify = app.add_subcommand("classify", "null players, nullifying players and symmetric pairs");
  classify->add_option("--game", o.game_path, "game file")->required();

  auto* check = app.add_subcommand("check", "search for a counterexample to an axiom");
  o.solution.add_to(check, false);
  check->add_option("--axiom", o.axiom, "axiom tag");
  check->add_flag("--implications", o.implications, "crosscheck the axiom implications instead of one axiom");
  check->add_option("--mode", o.mode, "exhaustive, random or witnesses")
      ->check(CLI::IsMember({"exhaustive", "random", "witnesses"}));
  check->add_option("--grid", o.grid, "worth grid, e.g. --grid=-1,0,1,2");
  check->add_option("--n", o.n, "player count")->check(CLI::Range(2, kMaxPlayers));
  check->add_option("--trials", o.trials, "random instances")->check(CLI::PositiveNumber);
  check->add_option("--seed", o.seed, "random seed");
  check->add_option("--bundles", o.bundles, "corpus bundle ids")->delimiter(',');
  check->add_option("--nested-budget", o.nested_budget, "members per secondary slot")->check(CLI::PositiveNumber);
  check->add_option("--max-instances", o.max_instances, "instance cap")->check(CLI::PositiveNumber);
  check->add_option("--threads", o.threads, "worker threads, 0 for one per core");
  auto* replay = check->add_option("--replay", o.replay, "re-evaluate the instance in a JSON report or instance file");
  for (const char* other : {"--solution", "--alpha", "--a", "--axiom", "--implications", "--mode", "--grid", "--n",
                            "--trials", "--seed", "--bundles", "--nested-budget", "--max-instances", "--threads"}) {
    replay->excludes(check->get_option_no_throw(other));
  }

  auto* fit = app.add_subcommand("fit", "fit the egalitarian parameter and test family membership");
  o.solution.add_to(fit, true);
  fit->add_option("--n", o.n, "player count")->required()->check(CLI::Range(3, kMaxPlayers));
  fit->add_option("--trials", o.trials, "random games for the membership check")->check(CLI::PositiveNumber);
  fit->add_option("--seed", o.seed, "random seed");

  auto* corpus = app.add_subcommand("corpus", "witness corpus");
  auto* run_all = corpus->add_flag("--run-all", o.run_all, "check every fact");
  auto* list = corpus->add_flag("--list", o.list, "list bundles and games");
  auto* exp = corpus->add_option("--export", o.export_dir, "write bundle games as game files into DIR");
  run_all->excludes(list)->excludes(exp);
  list->excludes(exp);

  std::ostringstream out;
  std::ostringstream err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (corpus->parsed() && !o.run_all && !o.list && o.export_dir.empty()) {
      throw CLI::ValidationError("corpus needs one of --run-all, --list, --export");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {code == 0 ? kSuccess : kUsageError, out.str(), err.str()};
  }

  try {
    if (compute->parsed()) {
      Report r("compute", o.format == "json");
      return run_compute(o, r);
    }
    if (dividends->parsed()) {
      Report r("dividends", o.format == "json");
      return run_dividends(o, r);
    }
    if (classify->parsed()) {
      Report r("classify", o.format == "json");
      return run_classify(o, r);
    }
    if (check->parsed()) {
      Report r("check", o.format == "json");
      return run_check(o, check, r);
    }
    if (fit->parsed()) {
      Report r("fit", o.format == "json");
      return run_fit(o, r);
    }
    Report r("corpus", o.format == "json");
    return run_corpus(o, r);
  } catch (const std::invalid_argument& e) {
    return {kUsageError, {}, std::string("error: ") + e.what() + "\n"};
  } catch (const std::domain_error& e) {
    return {kUsageError, {}, std::string("error: ") + e.what() + "\n"};
  } catch (const fs::filesystem_error& e) {
    return {kUsageError, {}, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace coop::cli

#include "coop/cli/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace coop::cli {

namespace {

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

int int_from_json(const json& value, const char* what) {
  if (!value.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return value.get<int>();
}

PlayerId player_from_json(const json& value, int n) {
  const int k = int_from_json(value, "player");
  if (k < 1 || k > n) throw InputError("player " + std::to_string(k) + " out of range 1.." + std::to_string(n));
  return PlayerId(k);
}

json sides_to_json(const Sides& s) {
  json lhs = json::array();
  json rhs = json::array();
  for (const Rat& x : s.lhs) lhs.push_back(rat_to_json(x));
  for (const Rat& x : s.rhs) rhs.push_back(rat_to_json(x));
  return {{"lhs", lhs}, {"rhs", rhs}, {"relation", s.relation == Relation::equal ? "=" : ">="}};
}

}  // namespace

std::vector<Coalition> display_order(int n) {
  std::vector<Coalition> out;
  for (std::uint32_t m = 1; m < (std::uint32_t{1} << n); ++m) out.emplace_back(m);
  std::sort(out.begin(), out.end(), [](Coalition a, Coalition b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  return out;
}

Rat rat_from_json(const json& value) {
  try {
    if (value.is_string()) return Rat::parse(value.get<std::string>());
    if (value.is_number_integer()) return Rat(value.get<std::int64_t>());
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  throw InputError("rational values must be strings such as \"3/4\" or integers, got " + value.dump());
}

json rat_to_json(const Rat& x) { return x.str(); }

json payoff_to_json(const PayoffVector& x) {
  json out = json::array();
  for (const Rat& v : x.values()) out.push_back(rat_to_json(v));
  return out;
}

json players_to_json(const std::vector<PlayerId>& ps) {
  json out = json::array();
  for (PlayerId p : ps) out.push_back(p.index());
  return out;
}

Game game_from_json(const json& doc) {
  const int n = int_from_json(field(doc, "n"), "n");
  if (n < 1 || n > kMaxPlayers) throw InputError("n must be between 1 and " + std::to_string(kMaxPlayers));
  const json& worth = field(doc, "worth");
  if (!worth.is_array()) throw InputError("\"worth\" must be a list");

  std::vector<std::pair<Coalition, Rat>> entries;
  std::set<std::uint32_t> seen;
  for (const json& rec : worth) {
    const json& members = field(rec, "coalition");
    if (!members.is_array()) throw InputError("\"coalition\" must be a list of players");
    std::vector<PlayerId> ps;
    for (const json& m : members) {
      const PlayerId p = player_from_json(m, n);
      if (!ps.empty() && p.index() <= ps.back().index()) {
        throw InputError("coalition players must be strictly increasing: " + members.dump());
      }
      ps.push_back(p);
    }
    const Coalition s = Coalition::of(ps);
    if (!seen.insert(s.mask()).second) throw InputError("duplicate coalition " + s.str());
    Rat value = rat_from_json(field(rec, "value"));
    if (s.empty()) {
      if (!value.is_zero()) throw InputError("the empty coalition must have worth 0");
      continue;
    }
    entries.emplace_back(s, std::move(value));
  }
  return make_game(n, entries);
}

Game parse_game_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed game file: ") + e.what());
  }
  return game_from_json(doc);
}

json game_to_json(const Game& v) {
  json worth = json::array();
  for (Coalition s : display_order(v.n())) {
    if (v(s).is_zero()) continue;
    json members = json::array();
    for (PlayerId p : s.members()) members.push_back(p.index());
    worth.push_back({{"coalition", members}, {"value", rat_to_json(v(s))}});
  }
  return {{"n", v.n()}, {"worth", worth}};
}

std::string serialize_game(const Game& v) { return game_to_json(v).dump(2) + "\n"; }

json solution_to_json(const SolutionSpec& s) {
  json out = {{"id", std::string(s.id())}, {"name", s.name()}};
  if (s.kind() == SolutionKind::egalitarian) out["alpha"] = rat_to_json(s.parameter());
  if (s.kind() == SolutionKind::vi_plus_a) out["a"] = rat_to_json(s.parameter());
  return out;
}

SolutionSpec solution_from_json(const json& doc) {
  if (doc.is_string()) return SolutionSpec::parse(doc.get<std::string>());
  const json& id = field(doc, "id");
  if (!id.is_string()) throw InputError("solution id must be a string");
  std::optional<Rat> alpha;
  std::optional<Rat> a;
  if (doc.contains("alpha")) alpha = rat_from_json(doc.at("alpha"));
  if (doc.contains("a")) a = rat_from_json(doc.at("a"));
  return SolutionSpec::parse(id.get<std::string>(), alpha, a);
}

json instance_to_json(const AxiomInstance& instance) {
  json games = json::array();
  for (const Game& g : instance.games()) games.push_back(game_to_json(g));
  json out = {{"axiom", std::string(to_string(instance.axiom()))}, {"games", games}};
  if (!instance.players().empty()) out["players"] = players_to_json(instance.players());
  if (!instance.scalars().empty()) {
    json scalars = json::array();
    for (const Rat& x : instance.scalars()) scalars.push_back(rat_to_json(x));
    out["scalars"] = scalars;
  }
  if (instance.permutation()) out["permutation"] = instance.permutation()->images();
  return out;
}

AxiomInstance instance_from_json(const json& doc) {
  const json& tag = field(doc, "axiom");
  if (!tag.is_string()) throw InputError("axiom must be a string");
  const AxiomId axiom = parse_axiom(tag.get<std::string>());

  std::vector<Game> games;
  for (const json& g : field(doc, "games")) games.push_back(game_from_json(g));
  if (games.empty()) throw InputError("an instance needs at least one game");
  const int n = games.front().n();

  std::vector<PlayerId> players;
  if (doc.contains("players")) {
    for (const json& p : doc.at("players")) players.push_back(player_from_json(p, n));
  }
  std::vector<Rat> scalars;
  if (doc.contains("scalars")) {
    for (const json& x : doc.at("scalars")) scalars.push_back(rat_from_json(x));
  }
  std::optional<Permutation> perm;
  if (doc.contains("permutation")) {
    std::vector<int> images;
    for (const json& k : doc.at("permutation")) images.push_back(int_from_json(k, "permutation image"));
    perm = Permutation::from_images(std::move(images));
  }
  return AxiomInstance::make(axiom, std::move(games), std::move(players), std::move(scalars), std::move(perm));
}

json verdict_to_json(const Verdict& v) {
  json out = {{"outcome", std::string(outcome_name(v))}};
  if (const auto* p = std::get_if<Passed>(&v)) {
    out["instances_checked"] = p->instances_checked;
  } else if (const auto* c = std::get_if<Counterexample>(&v)) {
    out["instance"] = instance_to_json(c->instance);
    out["sides"] = sides_to_json(c->sides);
  } else {
    const auto& b = std::get<BudgetExhausted>(v);
    out["instances_checked"] = b.instances_checked;
    out["primary_games_covered"] = b.primary_games_covered;
    out["primary_games_total"] = b.primary_games_total;
  }
  return out;
}

json fit_to_json(const FitResult& r) {
  if (const auto* ok = std::get_if<ConsistentFit>(&r)) {
    return {{"outcome", "consistent"}, {"alpha", rat_to_json(ok->alpha)}, {"eta", rat_to_json(ok->eta)}};
  }
  const auto& bad = std::get<Inconsistent>(r);
  return {{"outcome", "inconsistent"},
          {"coalition", players_to_json(bad.t.members())},
          {"player", bad.i.index()},
          {"expected", rat_to_json(bad.expected)},
          {"actual", rat_to_json(bad.actual)}};
}

json membership_to_json(const MembershipVerdict& m) {
  if (const auto* in = std::get_if<InFamily>(&m)) {
    return {{"outcome", "in_family"}, {"alpha", rat_to_json(in->alpha)}, {"trials", in->trials}, {"evidence_only", true}};
  }
  const auto& out = std::get<NotInFamily>(m);
  return {{"outcome", "not_in_family"},
          {"alpha", rat_to_json(out.alpha)},
          {"game", game_to_json(out.witness)},
          {"expected", payoff_to_json(out.expected)},
          {"actual", payoff_to_json(out.actual)}};
}

json crosscheck_to_json(const CrosscheckReport& r) {
  json verdicts = json::object();
  for (const auto& [axiom, v] : r.verdicts) verdicts[std::string(to_string(axiom))] = verdict_to_json(v);
  json checks = json::array();
  for (const ImplicationCheck& c : r.checks) {
    checks.push_back({{"name", c.name}, {"statement", c.statement}, {"applicable", c.applicable},
                      {"consistent", c.consistent}});
  }
  return {{"solution", solution_to_json(r.solution)},
          {"verdicts", verdicts},
          {"checks", checks},
          {"consistent", r.consistent()}};
}

json coefficients_to_json(const CoefficientMap& c) {
  json entries = json::array();
  for (Coalition s : display_order(c.n())) {
    if (c[s].is_zero()) continue;
    entries.push_back({{"coalition", players_to_json(s.members())}, {"value", rat_to_json(c[s])}});
  }
  return {{"basis", std::string(to_string(c.basis()))}, {"n", c.n()}, {"coefficients", entries}};
}

json bundle_to_json(const WitnessBundle& b) {
  json games = json::object();
  for (const NamedGame& g : b.games) games[g.name] = game_to_json(g.game);
  json facts = json::array();
  for (const Fact& f : b.facts) {
    json fact = {{"claim", f.claim}, {"source", std::string(to_string(f.source))}};
    if (!f.note.empty()) fact["note"] = f.note;
    if (const auto* a = std::get_if<AxiomFact>(&f.body)) {
      fact["solution"] = solution_to_json(a->solution);
      fact["instance"] = instance_to_json(a->instance);
      fact["holds"] = a->holds;
    }
    facts.push_back(std::move(fact));
  }
  return {{"id", b.id}, {"title", b.title}, {"games", games}, {"facts", facts}};
}

json regression_to_json(const RegressionReport& r) {
  json outcomes = json::array();
  for (const FactOutcome& o : r.outcomes) {
    outcomes.push_back({{"bundle", o.bundle}, {"index", o.index}, {"claim", o.claim}, {"passed", o.passed},
                        {"detail", o.detail}});
  }
  return {{"facts", outcomes}, {"failures", r.failures()}, {"passed", r.all_passed()}};
}

std::string game_str(const Game& v) {
  std::ostringstream out;
  bool first = true;
  for (Coalition s : display_order(v.n())) {
    if (v(s).is_zero()) continue;
    out << (first ? "" : ", ") << s.str() << ": " << v(s);
    first = false;
  }
  return first ? "0" : out.str();
}

std::string instance_str(const AxiomInstance& instance) {
  static constexpr const char* names[] = {"v", "w", "u"};
  std::ostringstream out;
  const auto& games = instance.games();
  for (std::size_t k = 0; k < games.size(); ++k) out << "  " << names[k] << " = " << game_str(games[k]) << "\n";
  if (!instance.players().empty()) {
    out << "  players:";
    for (PlayerId p : instance.players()) out << " " << p.index();
    out << "\n";
  }
  if (!instance.scalars().empty()) out << "  scalars: " << instance.scalars()[0] << ", " << instance.scalars()[1] << "\n";
  if (instance.permutation()) {
    out << "  permutation:";
    for (int k : instance.permutation()->images()) out << " " << k;
    out << "\n";
  }
  return out.str();
}

}  // namespace coop::cli

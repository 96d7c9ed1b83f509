#include "dcnet/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>
#include <utility>

#include "dcnet/parity.hpp"
#include "dcnet/signaling.hpp"
#include "dcnet/veto.hpp"
#include "dcnet/vote.hpp"

namespace dcnet {

const char* to_string(Protocol p) {
  switch (p) {
    case Protocol::Parity: return "parity";
    case Protocol::Veto: return "veto";
    case Protocol::Vote: return "vote";
    case Protocol::Abt: return "abt";
    case Protocol::Collision: return "collision";
    case Protocol::Notify: return "notify";
    case Protocol::Framt: return "framt";
    case Protocol::Amt: return "amt";
  }
  return "?";
}

ScenarioError::ScenarioError(int line_no, const std::string& what)
    : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what
                                     : what),
      line(line_no) {}

namespace {

// ==========================================================================
// Parsing
// ==========================================================================

struct Token {
  std::string key;
  std::string value;
  int line;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  int line = 1;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t' &&
           text[i] != '\r' && text[i] != '\n' && text[i] != '#')
      ++i;
    std::string word = text.substr(start, i - start);
    size_t eq = word.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ScenarioError(line, "expected key=value, got '" + word + "'");
    tokens.push_back({word.substr(0, eq), word.substr(eq + 1), line});
  }
  return tokens;
}

long long parse_int(const std::string& v, int line, const std::string& key) {
  size_t pos = 0;
  long long out = 0;
  try {
    out = std::stoll(v, &pos);
  } catch (const std::exception&) {
    throw ScenarioError(line, key + " must be an integer, got '" + v + "'");
  }
  if (pos != v.size())
    throw ScenarioError(line, key + " must be an integer, got '" + v + "'");
  return out;
}

int parse_int_range(const std::string& v, int line, const std::string& key,
                    long long lo, long long hi) {
  long long out = parse_int(v, line, key);
  if (out < lo || out > hi)
    throw ScenarioError(line, key + "=" + v + " outside " + std::to_string(lo) +
                                  ".." + std::to_string(hi));
  return static_cast<int>(out);
}

uint64_t parse_seed(const std::string& v, int line) {
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
    throw ScenarioError(line, "seed must be a non-negative integer, got '" + v + "'");
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw ScenarioError(line, "seed out of range: '" + v + "'");
  }
}

std::vector<std::string> split(const std::string& v, char sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t sep_at = v.find(sep, start);
    parts.push_back(v.substr(start, sep_at - start));
    if (sep_at == std::string::npos) break;
    start = sep_at + 1;
  }
  return parts;
}

// corrupt=<ids>:<strategy>[(args)][@<step>[:<index>]]
CorruptSet parse_corrupt(const std::string& v, int line, int n) {
  size_t colon = v.find(':');
  if (colon == std::string::npos || colon == 0)
    throw ScenarioError(line, "corrupt needs <ids>:<strategy>, got '" + v + "'");
  CorruptSet out;
  for (const std::string& id_text : split(v.substr(0, colon), ',')) {
    int id = parse_int_range(id_text, line, "corrupt id", 1, n);
    if (std::find(out.members.begin(), out.members.end(), id) != out.members.end())
      throw ScenarioError(line, "corrupt id " + id_text + " listed twice");
    out.members.push_back(id);
  }

  std::string spec = v.substr(colon + 1);
  StepKind step = StepKind::Announce;
  int step_index = -1;
  bool scoped = false;
  size_t at = spec.rfind('@');
  if (at != std::string::npos) {
    std::string scope = spec.substr(at + 1);
    spec = spec.substr(0, at);
    scoped = true;
    std::string step_name = scope;
    size_t idx_colon = scope.find(':');
    if (idx_colon != std::string::npos) {
      step_name = scope.substr(0, idx_colon);
      step_index = parse_int_range(scope.substr(idx_colon + 1), line,
                                   "strategy step index", 0, 1 << 20);
    }
    if (step_name == "share") step = StepKind::ShareSend;
    else if (step_name == "announce") step = StepKind::Announce;
    else if (step_name == "reveal") step = StepKind::Reveal;
    else if (step_name == "flip") step = StepKind::Flip;
    else throw ScenarioError(line, "unknown strategy step '" + step_name + "'");
  }

  std::string name = spec;
  std::vector<int> args;
  size_t paren = spec.find('(');
  if (paren != std::string::npos) {
    if (spec.back() != ')')
      throw ScenarioError(line, "unbalanced parentheses in '" + spec + "'");
    name = spec.substr(0, paren);
    std::string arg_text = spec.substr(paren + 1, spec.size() - paren - 2);
    for (const std::string& a : split(arg_text, ','))
      args.push_back(parse_int_range(a, line, "strategy argument", 0, 1 << 20));
  }

  Deviation dev;
  if (name == "flip") {
    if (args.size() != 2 || args[1] < 1 || args[0] > args[1])
      throw ScenarioError(line, "flip needs (numerator,denominator) with num <= den");
    dev = Deviation::override_flip(static_cast<uint32_t>(args[0]),
                                   static_cast<uint32_t>(args[1]));
  } else if (name == "tamper") {
    if (args.empty())
      throw ScenarioError(line, "tamper needs a bit mask, e.g. tamper(1,0,1)");
    BitString mask;
    for (int a : args) {
      if (a > 1) throw ScenarioError(line, "tamper mask entries must be bits");
      mask.push_back(static_cast<uint8_t>(a));
    }
    dev = Deviation::tamper_bits(std::move(mask));
  } else {
    if (!args.empty())
      throw ScenarioError(line, "strategy '" + name + "' takes no arguments");
    bool found = false;
    for (const NamedStrategy& named : shipped_strategies()) {
      if (name != named.name) continue;
      found = true;
      if (!scoped) {
        out.strategy = named.strategy;
        return out;
      }
      if (named.strategy.rules.empty())
        throw ScenarioError(line, "strategy '" + name + "' cannot be scoped");
      dev = named.strategy.rules.front().deviation;
    }
    if (!found) throw ScenarioError(line, "unknown strategy '" + name + "'");
  }

  if (scoped) {
    out.strategy.rules = {{0, step, step_index, dev}};
  } else {
    out.strategy = AdversaryStrategy::uniform(dev);
  }
  return out;
}

std::vector<std::string> input_entries(const std::string& v, int line, int n) {
  std::vector<std::string> entries = split(v, ',');
  if (static_cast<int>(entries.size()) != n)
    throw ScenarioError(line, "inputs needs " + std::to_string(n) +
                                  " entries, got " +
                                  std::to_string(entries.size()));
  return entries;
}

BitString parse_bit_inputs(const std::string& v, int line, int n) {
  BitString bits(static_cast<size_t>(n) + 1, 0);
  std::vector<std::string> entries = input_entries(v, line, n);
  for (int i = 1; i <= n; ++i) {
    int b = parse_int_range(entries[i - 1], line, "input", 0, 1);
    bits[static_cast<size_t>(i)] = static_cast<uint8_t>(b);
  }
  return bits;
}

std::vector<int> parse_number_inputs(const std::string& v, int line, int n,
                                     int lo, int hi, const std::string& what) {
  std::vector<int> out(static_cast<size_t>(n) + 1, 0);
  std::vector<std::string> entries = input_entries(v, line, n);
  for (int i = 1; i <= n; ++i) {
    long long x = parse_int(entries[i - 1], line, "input");
    if (x < lo || x > hi)
      throw ScenarioError(line, "input " + entries[i - 1] + " " + what);
    out[static_cast<size_t>(i)] = static_cast<int>(x);
  }
  return out;
}

// notify: per participant `_` or `+`-separated target ids.
std::vector<std::vector<uint8_t>> parse_notify_inputs(const std::string& v,
                                                      int line, int n) {
  std::vector<std::vector<uint8_t>> flags(
      static_cast<size_t>(n) + 1, std::vector<uint8_t>(static_cast<size_t>(n) + 1, 0));
  std::vector<std::string> entries = input_entries(v, line, n);
  for (int i = 1; i <= n; ++i) {
    const std::string& entry = entries[i - 1];
    if (entry == "_") continue;
    for (const std::string& t : split(entry, '+')) {
      int target = parse_int_range(t, line, "notify target", 1, n);
      if (target == i)
        throw ScenarioError(line, "participant " + std::to_string(i) +
                                      " cannot notify itself");
      if (flags[static_cast<size_t>(i)][static_cast<size_t>(target)])
        throw ScenarioError(line, "duplicate notify target " + t);
      flags[static_cast<size_t>(i)][static_cast<size_t>(target)] = 1;
    }
  }
  return flags;
}

// abt: per participant `_` or `+`-separated `<target>:<bit>` directives.
std::vector<std::vector<AbtCell>> parse_abt_inputs(const std::string& v,
                                                   int line, int n) {
  std::vector<std::vector<AbtCell>> cells(
      static_cast<size_t>(n) + 1,
      std::vector<AbtCell>(static_cast<size_t>(n) + 1, AbtCell::Abstain));
  std::vector<std::string> entries = input_entries(v, line, n);
  for (int i = 1; i <= n; ++i) {
    const std::string& entry = entries[i - 1];
    if (entry == "_") continue;
    for (const std::string& directive : split(entry, '+')) {
      size_t colon = directive.find(':');
      if (colon == std::string::npos)
        throw ScenarioError(line, "abt entry needs <target>:<bit>, got '" +
                                      directive + "'");
      int target = parse_int_range(directive.substr(0, colon), line,
                                   "abt target", 1, n);
      int bit = parse_int_range(directive.substr(colon + 1), line, "abt bit", 0, 1);
      if (target == i)
        throw ScenarioError(line, "participant " + std::to_string(i) +
                                      " cannot transmit to itself");
      if (cells[static_cast<size_t>(i)][static_cast<size_t>(target)] != AbtCell::Abstain)
        throw ScenarioError(line, "duplicate abt target " + std::to_string(target));
      cells[static_cast<size_t>(i)][static_cast<size_t>(target)] =
          bit ? AbtCell::One : AbtCell::Zero;
    }
  }
  return cells;
}

// framt/amt: per participant `_` or `<receiver>:<hex payload>`.
std::vector<AmtInput> parse_amt_inputs(const std::string& v, int line, int n) {
  std::vector<AmtInput> intents(static_cast<size_t>(n) + 1);
  std::vector<std::string> entries = input_entries(v, line, n);
  for (int i = 1; i <= n; ++i) {
    const std::string& entry = entries[i - 1];
    if (entry == "_") continue;
    size_t colon = entry.find(':');
    if (colon == std::string::npos)
      throw ScenarioError(line, "send entry needs <receiver>:<hex>, got '" +
                                    entry + "'");
    int receiver = parse_int_range(entry.substr(0, colon), line, "receiver", 1, n);
    if (receiver == i)
      throw ScenarioError(line, "participant " + std::to_string(i) +
                                    " cannot send to itself");
    BitString payload;
    try {
      payload = bits_from_hex(entry.substr(colon + 1));
    } catch (const std::invalid_argument& e) {
      throw ScenarioError(line, std::string("bad payload: ") + e.what());
    }
    intents[static_cast<size_t>(i)] = AmtInput::send(receiver, std::move(payload));
  }
  return intents;
}

struct RawKeys {
  std::map<std::string, Token> by_key;

  const Token* find(const std::string& key) const {
    auto it = by_key.find(key);
    return it == by_key.end() ? nullptr : &it->second;
  }
  const Token& require(const std::string& key) const {
    const Token* t = find(key);
    if (!t) throw ScenarioError(0, "missing key " + key);
    return *t;
  }
  void reject(const std::string& key, Protocol p) const {
    const Token* t = find(key);
    if (t)
      throw ScenarioError(t->line, "key " + key + " is not used by " +
                                       std::string(to_string(p)));
  }
};

}  // namespace

Scenario parse_scenario(const std::string& text) {
  static const std::vector<std::string> known = {
      "protocol", "n", "s", "m", "inputs", "corrupt", "seed", "trials"};
  RawKeys raw;
  for (const Token& t : tokenize(text)) {
    if (std::find(known.begin(), known.end(), t.key) == known.end())
      throw ScenarioError(t.line, "unknown key '" + t.key + "'");
    if (raw.by_key.count(t.key))
      throw ScenarioError(t.line, "duplicate key '" + t.key + "'");
    raw.by_key.emplace(t.key, t);
  }

  Scenario sc;
  const Token& proto = raw.require("protocol");
  static const std::pair<const char*, Protocol> names[] = {
      {"parity", Protocol::Parity}, {"veto", Protocol::Veto},
      {"vote", Protocol::Vote},     {"abt", Protocol::Abt},
      {"collision", Protocol::Collision}, {"notify", Protocol::Notify},
      {"framt", Protocol::Framt},   {"amt", Protocol::Amt}};
  bool matched = false;
  for (const auto& [name, p] : names) {
    if (proto.value == name) {
      sc.protocol = p;
      matched = true;
    }
  }
  if (!matched)
    throw ScenarioError(proto.line, "unknown protocol '" + proto.value + "'");

  const Token& n_tok = raw.require("n");
  sc.n = parse_int_range(n_tok.value, n_tok.line, "n", 3, 250);

  bool wants_s = sc.protocol != Protocol::Parity;
  if (wants_s) {
    const Token& s_tok = raw.require("s");
    sc.s = parse_int_range(s_tok.value, s_tok.line, "s", 1, 1 << 20);
  } else {
    raw.reject("s", sc.protocol);
  }

  bool wants_m = sc.protocol == Protocol::Vote || sc.protocol == Protocol::Framt ||
                 sc.protocol == Protocol::Amt;
  if (!wants_m) raw.reject("m", sc.protocol);
  if (const Token* m_tok = raw.find("m"))
    sc.m = parse_int_range(m_tok->value, m_tok->line, "m", 1, 1 << 20);
  if (sc.protocol == Protocol::Vote && !sc.m)
    throw ScenarioError(0, "missing key m");

  if (const Token* seed_tok = raw.find("seed"))
    sc.seed = parse_seed(seed_tok->value, seed_tok->line);
  if (const Token* trials_tok = raw.find("trials"))
    sc.trials = parse_int_range(trials_tok->value, trials_tok->line, "trials", 1,
                                10'000'000);

  const Token& in = raw.require("inputs");
  switch (sc.protocol) {
    case Protocol::Parity:
    case Protocol::Veto:
      sc.bits = parse_bit_inputs(in.value, in.line, sc.n);
      break;
    case Protocol::Vote:
      sc.numbers = parse_number_inputs(in.value, in.line, sc.n, 1, sc.m,
                                       "exceeds m=" + std::to_string(sc.m));
      break;
    case Protocol::Collision:
      sc.numbers = parse_number_inputs(in.value, in.line, sc.n, 0, 2,
                                       "outside 0..2");
      break;
    case Protocol::Notify:
      sc.flags = parse_notify_inputs(in.value, in.line, sc.n);
      break;
    case Protocol::Abt:
      sc.cells = parse_abt_inputs(in.value, in.line, sc.n);
      break;
    case Protocol::Framt:
    case Protocol::Amt: {
      sc.intents = parse_amt_inputs(in.value, in.line, sc.n);
      int senders = 0;
      int payload_bits = 0;
      for (int i = 1; i <= sc.n; ++i) {
        if (!sc.intents[static_cast<size_t>(i)].sending()) continue;
        ++senders;
        int len = static_cast<int>(sc.intents[static_cast<size_t>(i)].message.size());
        if (payload_bits && payload_bits != len)
          throw ScenarioError(in.line, "payload lengths differ");
        payload_bits = len;
      }
      if (sc.protocol == Protocol::Framt && senders != 1)
        throw ScenarioError(in.line, "framt needs exactly one sender, got " +
                                         std::to_string(senders));
      if (payload_bits) {
        if (sc.m && sc.m != payload_bits)
          throw ScenarioError(in.line, "m=" + std::to_string(sc.m) +
                                           " does not match the " +
                                           std::to_string(payload_bits) +
                                           "-bit payload");
        sc.m = payload_bits;
      } else if (!sc.m) {
        throw ScenarioError(0, "missing key m");
      }
      break;
    }
  }

  if (const Token* c = raw.find("corrupt")) {
    sc.corrupt = parse_corrupt(c->value, c->line, sc.n);
    sc.corrupt_text = c->value;
  }
  return sc;
}

// ==========================================================================
// Execution
// ==========================================================================

namespace {

std::string join_ints(const std::vector<int>& xs, size_t first) {
  std::string out;
  for (size_t i = first; i < xs.size(); ++i) {
    if (i > first) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string render_payload(const BitString& bits) {
  if (bits.empty()) return "-";
  if (bits.size() % 4 == 0) return bits_to_hex(bits);
  return bits_to_chars(bits);
}

template <typename T>
void finish(TrialRecord& rec, const Outcome<T>& outcome,
            const std::function<std::string(const T&)>& render) {
  rec.completed = outcome.is_completed();
  if (rec.completed)
    rec.value = render(outcome.value());
  else
    rec.reason = outcome.reason();
}

}  // namespace

TrialRecord run_scenario_trial(const Scenario& sc, int index, uint64_t seed) {
  RunContext ctx(sc.n, sc.corrupt, TapeSet::seeded(sc.n, seed), Recording::Counts);
  TrialRecord rec;
  rec.index = index;
  rec.seed = seed;
  rec.value = "-";

  switch (sc.protocol) {
    case Protocol::Parity: {
      auto r = run_parity(sc.bits, AnnouncementMode::simultaneous(), ctx);
      finish<ParityRound>(rec, r, [](const ParityRound& round) {
        return std::to_string(round.y[1]);
      });
      break;
    }
    case Protocol::Veto: {
      auto r = run_veto(sc.bits, sc.s, ctx);
      finish<VetoResult>(rec, r, [](const VetoResult& v) {
        return std::to_string(v.result);
      });
      break;
    }
    case Protocol::Vote: {
      auto r = run_vote(sc.numbers, sc.m, sc.s, ctx);
      finish<Tally>(rec, r, [](const Tally& t) { return join_ints(t.counts, 1); });
      break;
    }
    case Protocol::Collision: {
      auto r = run_collision_detection(sc.numbers, sc.s, ctx);
      finish<int>(rec, r, [](const int& v) { return std::to_string(v); });
      break;
    }
    case Protocol::Notify: {
      auto r = run_notification(sc.flags, sc.s, ctx);
      finish<std::vector<uint8_t>>(rec, r, [](const std::vector<uint8_t>& y) {
        std::string out;
        for (size_t i = 1; i < y.size(); ++i) {
          if (i > 1) out += ',';
          out += static_cast<char>('0' + y[i]);
        }
        return out;
      });
      break;
    }
    case Protocol::Abt: {
      auto r = run_abt(sc.cells, sc.s, ctx);
      finish<std::vector<AbtReceipt>>(
          rec, r, [](const std::vector<AbtReceipt>& receipts) {
            std::string out;
            for (size_t i = 1; i < receipts.size(); ++i) {
              if (i > 1) out += ',';
              out += std::to_string(receipts[i].zero_count) + "/" +
                     std::to_string(receipts[i].one_count);
            }
            return out;
          });
      break;
    }
    case Protocol::Framt: {
      ParticipantId sender = 0;
      for (int i = 1; i <= sc.n; ++i)
        if (sc.intents[static_cast<size_t>(i)].sending()) sender = i;
      const AmtInput& intent = sc.intents[static_cast<size_t>(sender)];
      auto r = run_fixed_role_amt(sender, intent.receiver, intent.message, sc.s, ctx);
      finish<BitString>(rec, r, [](const BitString& w) { return render_payload(w); });
      break;
    }
    case Protocol::Amt: {
      auto r = run_amt(sc.intents, sc.m, sc.s, ctx);
      finish<AmtResult>(rec, r, [](const AmtResult& v) {
        std::string out = to_string(v.kind);
        if (v.kind != AmtResultKind::Delivered) return out;
        for (size_t i = 1; i < v.delivered.size(); ++i) {
          if (!v.delivered[i]) continue;
          out += ":" + std::to_string(i) + "=" + render_payload(*v.delivered[i]);
        }
        return out;
      });
      break;
    }
  }

  rec.rounds = ctx.transcript().current_round();
  rec.bits = ctx.transcript().total_bits();
  return rec;
}

RunReport execute(const Scenario& sc, bool parallel, int workers) {
  RunReport report;
  report.scenario = sc;
  TrialRunner runner = [&sc](int index, uint64_t seed) {
    return run_scenario_trial(sc, index, seed);
  };
  auto started = std::chrono::steady_clock::now();
  report.trials = parallel
                      ? run_trials_parallel(runner, sc.seed, sc.trials, workers)
                      : run_trials(runner, sc.seed, sc.trials);
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  report.summary = summarize(report.trials);
  return report;
}

// ==========================================================================
// Rendering
// ==========================================================================

namespace {

std::string format_seconds(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", seconds);
  return buf;
}

std::string scenario_line(const Scenario& sc) {
  std::ostringstream out;
  out << "scenario protocol=" << to_string(sc.protocol) << " n=" << sc.n
      << " s=" << sc.s << " m=" << sc.m << " trials=" << sc.trials
      << " seed=" << sc.seed
      << " corrupt=" << (sc.corrupt_text.empty() ? "-" : sc.corrupt_text);
  return out.str();
}

std::string outcome_word(const TrialRecord& t) {
  if (t.completed) return "completed";
  return std::string("aborted:") + to_string(t.reason);
}

}  // namespace

std::string render_records(const RunReport& report) {
  std::ostringstream out;
  out << scenario_line(report.scenario) << "\n";
  for (const TrialRecord& t : report.trials)
    out << "trial index=" << t.index << " seed=" << t.seed
        << " outcome=" << outcome_word(t) << " value=" << t.value
        << " rounds=" << t.rounds << " bits=" << t.bits << "\n";
  out << "summary completed=" << report.summary.completed
      << " aborted=" << report.summary.aborted << "\n";
  for (const auto& [reason, count] : report.summary.reasons)
    out << "reason " << to_string(reason) << "=" << count << "\n";
  for (const auto& [value, count] : report.summary.values)
    out << "value " << value << "=" << count << "\n";
  out << "time " << format_seconds(report.seconds) << "\n";
  return out.str();
}

std::string render_text(const RunReport& report) {
  const Scenario& sc = report.scenario;
  std::ostringstream out;
  out << to_string(sc.protocol) << " n=" << sc.n;
  if (sc.s) out << " s=" << sc.s;
  if (sc.m) out << " m=" << sc.m;
  out << " trials=" << sc.trials << " seed=" << sc.seed << "\n";
  if (!sc.corrupt_text.empty()) out << "corrupt " << sc.corrupt_text << "\n";
  for (const TrialRecord& t : report.trials)
    out << "  trial " << t.index << " seed=" << t.seed << ": "
        << outcome_word(t) << " value=" << t.value << " (rounds=" << t.rounds
        << " bits=" << t.bits << ")\n";
  out << "completed " << report.summary.completed << "/"
      << report.trials.size() << ", aborted " << report.summary.aborted << "\n";
  for (const auto& [reason, count] : report.summary.reasons)
    out << "  " << to_string(reason) << ": " << count << "\n";
  for (const auto& [value, count] : report.summary.values)
    out << "  value " << value << ": " << count << "\n";
  out << "time " << format_seconds(report.seconds) << "s\n";
  return out.str();
}

std::string render_stats_csv(const RunReport& report) {
  size_t trials = report.trials.size();
  auto freq = [trials](int count) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f",
                  trials ? static_cast<double>(count) / static_cast<double>(trials)
                         : 0.0);
    return std::string(buf);
  };
  std::ostringstream out;
  out << "kind,key,count,frequency\n";
  out << "outcome,completed," << report.summary.completed << ","
      << freq(report.summary.completed) << "\n";
  for (const auto& [reason, count] : report.summary.reasons)
    out << "outcome,aborted:" << to_string(reason) << "," << count << ","
        << freq(count) << "\n";
  for (const auto& [value, count] : report.summary.values)
    out << "value," << value << "," << count << "," << freq(count) << "\n";
  return out.str();
}

}  // namespace dcnet

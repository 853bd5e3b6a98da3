#include "mindswap/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mindswap/machine.hpp"
#include "mindswap/oracle.hpp"
#include "mindswap/undo.hpp"

namespace mindswap::cli
{

using nlohmann::json;

namespace
{

std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

Label parse_body(std::string_view tok, std::size_t line)
{
  unsigned long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 1 || v > 0xffffffffULL)
    throw ParseError("line " + std::to_string(line) + ": \"" + std::string(tok) +
                     "\" is not a positive integer");
  return static_cast<Label>(v);
}

std::string read_file(std::string const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_file(std::string const &s)
{
  std::error_code ec;
  return std::filesystem::is_regular_file(s, ec);
}

json swaps_json(SwapSequence const &seq)
{
  json arr = json::array();
  for (auto const &t : seq.swaps)
    arr.push_back({t.a(), t.b()});
  return arr;
}

std::string mode_name(PlanMode m)
{
  return m == PlanMode::Theorem ? "theorem" : "history";
}

std::vector<Label> parse_label_list(std::string const &s)
{
  std::vector<Label> out;
  std::size_t i = 0;
  while (i <= s.size()) {
    auto j = s.find(',', i);
    if (j == std::string::npos)
      j = s.size();
    auto tok = trim(std::string_view(s).substr(i, j - i));
    if (!tok.empty())
      out.push_back(parse_body(tok, 0));
    i = j + 1;
  }
  return out;
}

// An input argument is a swap-log file when such a file exists, otherwise
// cycle notation.
struct Input
{
  bool is_log = false;
  std::vector<LogRecord> records;
  Permutation perm;
};

Input read_input(std::string const &arg)
{
  Input in;
  if (is_file(arg)) {
    in.is_log = true;
    in.records = parse_swap_log(read_file(arg));
    in.perm = product(to_sequence(in.records));
  } else {
    in.perm = parse_cycles(arg);
  }
  return in;
}

int cmd_decompose(std::string const &input, bool as_json, std::ostream &out)
{
  auto in = read_input(input);
  auto d = decompose(in.perm);
  auto par = parity(in.perm);
  if (as_json) {
    json j;
    j["cycles"] = d.cycles;
    j["canonical"] = to_string(in.perm);
    j["n"] = d.n;
    j["m"] = d.m;
    j["r"] = d.r;
    j["parity"] = to_string(par);
    out << j.dump() << '\n';
  } else {
    out << to_string(in.perm) << "  n=" << d.n << " m=" << d.m << " r=" << d.r
        << " parity=" << to_string(par) << '\n';
  }
  return kOk;
}

struct PlanArgs
{
  std::string input;
  std::string mode;
  std::string helpers;
  std::size_t max_depth = 0;
  bool json = false;
};

int cmd_plan(PlanArgs const &a, std::ostream &out, std::ostream &err)
{
  auto in = read_input(a.input);

  PlanMode mode = in.is_log ? PlanMode::History : PlanMode::Theorem;
  if (a.mode == "theorem")
    mode = PlanMode::Theorem;
  else if (a.mode == "history")
    mode = PlanMode::History;
  else if (!a.mode.empty())
    throw ParseError("unknown mode \"" + a.mode + "\" (expected theorem or history)");
  if (mode == PlanMode::History && !in.is_log)
    throw ParseError("history mode needs a swap-log file");

  if (in.perm.is_identity()) {
    if (a.json) {
      json j = {{"n", 0}, {"m", 0}, {"r", 0}, {"M", 0}, {"classic_min", 0},
                {"plan", json::array()}, {"helpers", json::array()},
                {"mode", mode_name(mode)}, {"restored", true},
                {"status", "already restored"}};
      out << j.dump() << '\n';
    } else {
      out << "already restored: the swaps compose to the identity\n";
    }
    return kOk;
  }

  RestorationOptions opts;
  opts.mode = mode;
  opts.helper_pool = a.helpers.empty() ? default_helpers(in.perm)
                                       : parse_label_list(a.helpers);
  opts.max_depth = a.max_depth;

  SwapSequence history{{}, Order::Chronological};
  MachineState state;
  if (in.is_log) {
    history = to_sequence(in.records);
    try {
      state = replay(history);
    } catch (PairReusedError const &e) {
      err << "error: log line " << in.records[*e.index()].line << ": pair "
          << to_string(e.pair()) << " was already used\n";
      return kViolation;
    }
  } else {
    // Raw cycle notation: the machine has spent exactly P's own 2-cycles.
    state = state_from_assignment(in.perm, own_two_cycles(in.perm));
    history = SwapSequence{decompose(in.perm).two_cycles(), Order::Chronological};
    for (auto const &c : decompose(in.perm).long_cycles())
      for (std::size_t i = c.size() - 1; i > 0; --i)
        history.swaps.emplace_back(c[i - 1], c[i]);
  }

  RestorationPlan plan = make_restoration_plan(history, opts);
  // Theorem mode reads only the product of the synthetic history; the state
  // holds just P's 2-cycles as spent pairs.
  PlanVerdict verdict = validate_plan(state, plan.plan);
  auto d = decompose(in.perm);
  std::size_t classic = classic_min_count(d);

  if (a.json) {
    json viol = json::array();
    for (auto const &v : verdict.violations)
      viol.push_back({{"index", v.index}, {"pair", {v.pair.a(), v.pair.b()}}});
    json j = {{"n", d.n}, {"m", d.m}, {"r", d.r}, {"M", plan.budget.M},
              {"classic_min", classic}, {"plan", swaps_json(plan.plan)},
              {"helpers", plan.helpers_used}, {"mode", mode_name(mode)},
              {"restored", verdict.restored}, {"valid", verdict.valid()},
              {"at_budget", verdict.at_budget}, {"violations", viol}};
    out << j.dump() << '\n';
  } else {
    out << "permutation: " << to_string(in.perm) << "  n=" << d.n << " m=" << d.m
        << " r=" << d.r << '\n';
    out << "M=" << plan.budget.M << " classic_min=" << classic
        << " mode=" << mode_name(mode) << '\n';
    out << "plan (chronological, " << plan.plan.size() << " swaps):";
    for (auto const &t : plan.plan.swaps)
      out << ' ' << to_string(t);
    out << '\n';
    out << "helpers:";
    if (plan.helpers_used.empty())
      out << " none";
    for (Label h : plan.helpers_used)
      out << ' ' << h;
    out << '\n';
    out << "verdict: " << (verdict.restored ? "restored" : "NOT restored") << ", "
        << (verdict.fresh() ? "no pair reused" : "pair reuse") << ", length "
        << verdict.length << (verdict.at_budget ? " = M" : " > M") << '\n';
    for (auto const &v : verdict.violations)
      out << "violation: plan swap " << v.index + 1 << " " << to_string(v.pair)
          << " was already used\n";
  }
  return verdict.valid() ? kOk : kViolation;
}

struct CertifyArgs
{
  std::size_t n_max = 4;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  std::size_t outsiders = 0;
  double time_budget = 600;
  bool json = false;
};

int cmd_certify(CertifyArgs const &a, std::ostream &out)
{
  if (a.n_max > kUniverseCap)
    throw ParseError("--n-max is capped at " + std::to_string(kUniverseCap));
  CertifyOptions opts;
  opts.n_max = a.n_max;
  opts.samples = a.samples;
  if (a.n_max > 6 && opts.samples == 0)
    opts.samples = 200;
  opts.seed = a.seed;
  opts.outsider_stride = a.outsiders;
  opts.time_budget = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
      std::chrono::duration<double>(a.time_budget));
  auto rep = certify_formula(opts);

  if (a.json) {
    json mism = json::array();
    for (auto const &mm : rep.mismatches) {
      json e = {{"permutation", to_string(mm.target)}, {"expected", mm.expected},
                {"extra_labels", mm.extra_labels}};
      e["found"] = mm.found ? json(*mm.found) : json(nullptr);
      mism.push_back(e);
    }
    json j = {{"n_max", rep.n_max}, {"exhaustive", rep.exhaustive},
              {"complete", rep.complete}, {"checked", rep.checked},
              {"outsider_checked", rep.outsider_checked},
              {"mismatches", mism}, {"elapsed_ms", rep.elapsed.count()}};
    out << j.dump() << '\n';
  } else {
    out << (rep.complete ? "checked " : "partial: checked ")
        << (rep.exhaustive ? "all " : "") << rep.checked
        << " permutations of {1.." << rep.n_max << "}"
        << (rep.exhaustive ? "" : " (sampled)") << ", " << rep.mismatches.size()
        << " mismatches";
    if (rep.outsider_checked)
      out << ", " << rep.outsider_checked << " outsider re-checks";
    out << ", " << rep.elapsed.count() << " ms\n";
    if (rep.n_max >= 2)
      out << "n=2 case: (12) needs M=5 with 2 helper bodies\n";
    for (auto const &mm : rep.mismatches) {
      out << "mismatch: " << to_string(mm.target) << " expected " << mm.expected
          << " found " << (mm.found ? std::to_string(*mm.found) : "none");
      if (mm.extra_labels)
        out << " (+" << mm.extra_labels << " labels)";
      out << '\n';
    }
  }
  if (!rep.complete)
    return kBudget;
  return rep.mismatches.empty() ? kOk : kViolation;
}

int cmd_simulate(std::string const &log_path, std::string const &plan_path, bool as_json,
                 std::ostream &out)
{
  auto log = parse_swap_log(read_file(log_path));
  auto plan = parse_plan_text(read_file(plan_path));

  MachineState state;
  try {
    state = replay(to_sequence(log));
  } catch (PairReusedError const &e) {
    std::size_t line = log[*e.index()].line;
    if (as_json) {
      json j = {{"restored", false}, {"valid", false},
                {"log_swaps", log.size()}, {"plan_swaps", plan.size()},
                {"total_swaps", log.size() + plan.size()},
                {"violations", json::array({{{"pair", {e.pair().a(), e.pair().b()}},
                                             {"file", "log"}, {"line", line}}})}};
      out << j.dump() << '\n';
    } else {
      out << "violation: pair " << to_string(e.pair()) << " reused at log line " << line
          << '\n';
    }
    return kViolation;
  }

  auto verdict = validate_plan(state, to_sequence(plan));
  if (as_json) {
    json viol = json::array();
    for (auto const &v : verdict.violations)
      viol.push_back({{"pair", {v.pair.a(), v.pair.b()}}, {"file", "plan"},
                      {"line", plan[v.index].line},
                      {"reused_from_history", v.reused_from_history}});
    json j = {{"restored", verdict.restored}, {"valid", verdict.valid()},
              {"log_swaps", log.size()}, {"plan_swaps", plan.size()},
              {"total_swaps", log.size() + plan.size()}, {"violations", viol}};
    if (verdict.budget)
      j["M"] = *verdict.budget;
    out << j.dump() << '\n';
  } else {
    out << (verdict.restored ? "restored" : "not restored") << ", "
        << log.size() + plan.size() << " total swaps (" << log.size() << " log + "
        << plan.size() << " plan)";
    if (verdict.budget)
      out << ", M=" << *verdict.budget;
    out << '\n';
    for (auto const &v : verdict.violations)
      out << "violation: pair " << to_string(v.pair) << " reused at plan line "
          << plan[v.index].line << '\n';
    if (verdict.fresh())
      out << "no pair reused\n";
  }
  return verdict.valid() ? kOk : kViolation;
}

} // namespace

std::vector<LogRecord> parse_swap_log(std::string_view text)
{
  std::vector<LogRecord> out;
  std::size_t line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos)
      nl = text.size();
    ++line;
    auto raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    raw = trim(raw);
    if (raw.empty())
      continue;

    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i])))
        ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j])))
        ++j;
      if (j > i)
        toks.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (toks.size() != 2)
      throw ParseError("line " + std::to_string(line) + ": expected two bodies, got " +
                       std::to_string(toks.size()) + " fields");
    Label a = parse_body(toks[0], line), b = parse_body(toks[1], line);
    if (a == b)
      throw ParseError("line " + std::to_string(line) + ": a body cannot swap with itself");
    out.push_back({Transposition(a, b), line});
  }
  return out;
}

SwapSequence to_sequence(std::vector<LogRecord> const &records)
{
  SwapSequence seq{{}, Order::Chronological};
  for (auto const &r : records)
    seq.swaps.push_back(r.pair);
  return seq;
}

std::vector<LogRecord> parse_plan_text(std::string_view text)
{
  auto body = trim(text);
  if (body.empty() || body.front() != '{')
    return parse_swap_log(text);

  json j;
  try {
    j = json::parse(body);
  } catch (json::exception const &e) {
    throw ParseError(std::string("invalid JSON plan: ") + e.what());
  }
  if (!j.contains("plan") || !j["plan"].is_array())
    throw ParseError("JSON plan has no \"plan\" array");
  std::vector<LogRecord> out;
  std::size_t k = 0;
  for (auto const &e : j["plan"]) {
    ++k;
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned())
      throw ParseError("JSON plan entry " + std::to_string(k) + " is not [a, b]");
    auto a = e[0].get<std::uint64_t>(), b = e[1].get<std::uint64_t>();
    if (a < 1 || b < 1 || a == b || a > 0xffffffffULL || b > 0xffffffffULL)
      throw ParseError("JSON plan entry " + std::to_string(k) + " is not a valid pair");
    out.push_back({Transposition(static_cast<Label>(a), static_cast<Label>(b)), k});
  }
  return out;
}

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Minimal undo plans for a mind-switch machine that never repeats a pair",
               "mindswap"};
  app.require_subcommand(1);

  bool json_out = false;

  std::string dec_input;
  auto *dec = app.add_subcommand("decompose", "Print the cycle decomposition, n, m, r and parity");
  dec->add_option("input", dec_input, "Cycle notation such as \"(12)(34)\" or a swap-log file")
      ->required();
  dec->add_flag("--json", json_out, "Machine-readable output");

  PlanArgs plan_args;
  auto *plan = app.add_subcommand("plan", "Compute M and a validated restoration plan");
  plan->add_option("input", plan_args.input, "Swap-log file or cycle notation")->required();
  plan->add_option("--mode", plan_args.mode, "theorem or history")
      ->check(CLI::IsMember({"theorem", "history"}));
  plan->add_option("--helpers", plan_args.helpers, "Comma-separated helper bodies, e.g. 3,4");
  plan->add_option("--max-depth", plan_args.max_depth, "History-mode search depth cap");
  plan->add_flag("--json", plan_args.json, "Machine-readable output");

  CertifyArgs cert_args;
  auto *cert = app.add_subcommand("certify", "Check the closed-form minimum against brute force");
  cert->add_option("--n-max", cert_args.n_max, "Largest label; <= 6 is exhaustive")
      ->check(CLI::Range(std::size_t{1}, kUniverseCap));
  cert->add_option("--samples", cert_args.samples, "Random permutations instead of all");
  cert->add_option("--seed", cert_args.seed, "Sampling seed");
  cert->add_option("--outsiders", cert_args.outsiders,
                   "Re-check every k-th instance with 1 and 2 extra labels");
  cert->add_option("--time-budget", cert_args.time_budget, "Seconds before a partial report");
  cert->add_flag("--json", cert_args.json, "Machine-readable output");

  std::string sim_log, sim_plan;
  auto *sim = app.add_subcommand("simulate", "Replay a log then a plan on the machine");
  sim->add_option("log", sim_log, "Swap-log file")->required();
  sim->add_option("plan", sim_plan, "Plan file (swap log or plan --json output)")->required();
  sim->add_flag("--json", json_out, "Machine-readable output");

  std::vector<char const *> argv;
  argv.push_back("mindswap");
  for (auto const &a : args)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e, out, err);
  } catch (CLI::ParseError const &e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (dec->parsed())
      return cmd_decompose(dec_input, json_out, out);
    if (plan->parsed())
      return cmd_plan(plan_args, out, err);
    if (cert->parsed())
      return cmd_certify(cert_args, out);
    if (sim->parsed())
      return cmd_simulate(sim_log, sim_plan, json_out, out);
  } catch (ParseError const &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (DisjointnessError const &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (MalformedCycleError const &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (PairReusedError const &e) {
    err << "error: " << e.what() << '\n';
    return kViolation;
  } catch (SearchBudgetExceededError const &e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (NeedHelpersError const &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

} // namespace mindswap::cli

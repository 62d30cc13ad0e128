#include "gcdtn/cli.hpp"

#include "gcdtn/generate.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

namespace gcdtn::cli {

namespace {

const std::map<std::string, Verb> kVerbs = {
  {"analyze", Verb::Analyze},         {"gcd-matrix", Verb::GcdMatrix}, {"lcm-matrix", Verb::LcmMatrix},
  {"pow", Verb::Pow},                 {"order", Verb::Order},          {"invert", Verb::Invert},
  {"divide", Verb::Divide},           {"power-divide", Verb::PowerDivide},
  {"generate", Verb::Generate},       {"search", Verb::Search},
};

auto needs_input(Verb v) -> bool { return v != Verb::Generate && v != Verb::Search; }

auto elements_json(const OrderedSet &s) -> Json { return to_json(s)["elements"]; }

auto analyze(const Command &cmd, const OrderedSet &s) -> Json {
  Json r = Json::object();
  r["elements"] = elements_json(s);
  r["size"] = s.size();
  r["gcd_closed"] = is_gcd_closed(s);
  r["factor_closed"] = is_factor_closed(s);
  if (auto chains = classify_coprime_divisor_chains(s)) {
    Json blocks = Json::array();
    for (const auto &block : *chains) {
      Json b = Json::array();
      for (const Nat &x : block) b.push_back(x.str());
      blocks.push_back(std::move(b));
    }
    r["coprime_chains"] = std::move(blocks);
  } else {
    r["coprime_chains"] = "NotOfThisForm";
  }
  r["max_greatest_type_divisors"] = max_greatest_type_count(s);
  const ExponentMatrix pow = pow_matrix(s);
  r["pow"] = to_json(pow);
  const MonotoneReport mono = is_column_monotone(pow);
  r["column_monotone"] = mono.monotone;
  Json dirs = Json::array();
  for (auto d : mono.directions) dirs.push_back(direction_name(d));
  r["column_directions"] = std::move(dirs);
  r["tn"] = to_json(check_tn_triple(s));
  if (s.size() <= cmd.minor_cap) r["tn_minors"] = to_json(check_tn_minors(s, cmd.minor_cap));
  if (auto order = find_monotone_order(s))
    r["monotone_order"] = to_json(*order);
  else
    r["monotone_order"] = "NotOrderable";
  r["positive_definite"] = is_positive_definite(gcd_matrix(s));
  return r;
}

auto divide(const Command &cmd, const OrderedSet &s) -> Outcome {
  const TnVerdict verdict = check_tn_triple(s);
  const bool closed = verdict.is_tn() && s.size() >= 3;
  DivisibilityReport report = closed ? divide_via_closed_form(s, verdict) : divide_oracle(s);
  Outcome out;
  out.report = to_json(report);
  out.exit_code = report.divides ? kOk : kNegative;
  if (cmd.verify) {
    const DivisibilityReport oracle = divide_oracle(s);
    const bool agree = oracle.divides == report.divides && oracle.witness == report.witness;
    out.report["verified"] = agree;
    if (!agree) out.exit_code = kVerifyMismatch;
  }
  return out;
}

auto invert(const OrderedSet &s) -> Json {
  Json r = Json::object();
  const TnVerdict verdict = check_tn_triple(s);
  if (verdict.is_tn() && s.size() >= 3) {
    const TridiagonalInverse t = tridiagonal_inverse(s, verdict);
    r["method"] = "Tridiagonal";
    r["off_diagonal"] = to_json(t)["off_diagonal"];
    r["diagonal"] = to_json(t)["diagonal"];
    r["inverse"] = to_json(t.to_matrix())["entries"];
  } else {
    r["method"] = "Oracle";
    r["inverse"] = to_json(solve_right(gcd_matrix(s), ExactMatrix::identity(s.size())))["entries"];
  }
  return r;
}

auto parse_primes(const std::vector<std::string> &raw) -> std::vector<Nat> {
  std::vector<Nat> out;
  for (const auto &p : raw) out.push_back(Nat::parse(p));
  return out;
}

auto generate(const Command &cmd) -> Json {
  ExponentMatrix m;
  if (cmd.pattern == "pascal") {
    if (cmd.n == 0) throw Error(Errc::InvalidArgument, "--n is required for the pascal pattern");
    m = pascal_exponents(cmd.n, cmd.primes.empty() ? first_primes(cmd.n) : parse_primes(cmd.primes));
  } else if (cmd.pattern == "vandermonde") {
    if (cmd.bases.empty()) throw Error(Errc::InvalidArgument, "--bases is required for the vandermonde pattern");
    m = vandermonde_exponents(cmd.bases, cmd.primes.empty() ? first_primes(cmd.bases.size())
                                                            : parse_primes(cmd.primes));
  } else if (cmd.pattern == "random") {
    SeededRng rng(cmd.seed);
    RandomMonotoneOptions opts;
    opts.n = cmd.n == 0 ? 5 : cmd.n;
    opts.max_exp = cmd.max_exp;
    if (!cmd.primes.empty()) {
      opts.primes = parse_primes(cmd.primes);
      opts.max_columns = opts.primes.size();
    }
    m = random_column_monotone(rng, opts);
  } else {
    throw Error(Errc::InvalidArgument, "unknown pattern '" + cmd.pattern + "'");
  }
  Json r = Json::object();
  r["elements"] = elements_json(reconstruct(m));
  r["primes"] = to_json(m)["primes"];
  r["exponents"] = to_json(m)["exponents"];
  return r;
}

auto search(const Command &cmd) -> Outcome {
  const std::size_t n = cmd.n == 0 ? 4 : cmd.n;
  const SearchOutcome found = search_gcd_closed_nondivisor(n, Nat::parse(cmd.bound), cmd.budget);
  Outcome out;
  out.report["n"] = n;
  out.report["bound"] = cmd.bound;
  out.report["tested"] = found.tested;
  out.report["single_gtd_confirmed"] = found.single_gtd_confirmed;
  if (found.witness) {
    out.report["found"] = true;
    out.report["witness"] = elements_json(*found.witness);
    out.report["violation"] = to_json(divide_oracle(*found.witness))["violation"];
  } else {
    out.report["found"] = false;
    out.report["witness"] = nullptr;
    out.exit_code = kNegative;
  }
  return out;
}

auto read_all(std::istream &in) -> std::string {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

auto execute(const Command &cmd, const std::optional<OrderedSet> &input) -> Outcome {
  if (needs_input(cmd.verb) && !input)
    throw Error(Errc::InvalidArgument, "this verb needs an input set");
  Outcome out;
  switch (cmd.verb) {
  case Verb::Analyze: out.report = analyze(cmd, *input); break;
  case Verb::GcdMatrix: out.report = to_json(gcd_matrix(*input)); break;
  case Verb::LcmMatrix: out.report = to_json(lcm_matrix(*input)); break;
  case Verb::Pow: {
    const ExponentMatrix m = pow_matrix(*input);
    out.report = to_json(m);
    out.report["column_monotone"] = is_column_monotone(m).monotone;
    break;
  }
  case Verb::Order: {
    auto order = find_monotone_order(*input);
    out.report["orderable"] = order.has_value();
    out.report["order"] = order ? to_json(*order) : Json(nullptr);
    out.report["reordered"] = order ? elements_json(order->apply(*input)) : Json(nullptr);
    if (!order) out.exit_code = kNegative;
    break;
  }
  case Verb::Invert: out.report = invert(*input); break;
  case Verb::Divide: out = divide(cmd, *input); break;
  case Verb::PowerDivide: {
    const DivisibilityReport r = divide_power(*input, cmd.power);
    out.report = to_json(r);
    out.report["power"] = cmd.power;
    out.exit_code = r.divides ? kOk : kNegative;
    break;
  }
  case Verb::Generate: out.report = generate(cmd); break;
  case Verb::Search: out = search(cmd); break;
  }
  return out;
}

auto run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
         std::ostream &err) -> int {
  CLI::App app{"GCD/LCM matrix analysis with exact arithmetic", "gcdtn"};
  app.require_subcommand(1, 1);
  Command cmd;
  std::string format = "text";

  for (const auto &[name, verb] : kVerbs) {
    CLI::App *sub = app.add_subcommand(name);
    sub->callback([&cmd, verb = verb] { cmd.verb = verb; });
    if (needs_input(verb)) sub->add_option("--input", cmd.input, "input path, or - for stdin");
    sub->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    if (verb == Verb::Analyze) sub->add_option("--minor-cap", cmd.minor_cap);
    if (verb == Verb::Divide) sub->add_flag("--verify", cmd.verify, "cross-check against the exact solve");
    if (verb == Verb::PowerDivide) sub->add_option("--power", cmd.power)->check(CLI::PositiveNumber);
    if (verb == Verb::Generate) {
      sub->add_option("--pattern", cmd.pattern)->check(CLI::IsMember({"pascal", "vandermonde", "random"}));
      sub->add_option("--n", cmd.n);
      sub->add_option("--primes", cmd.primes)->delimiter(',');
      sub->add_option("--bases", cmd.bases)->delimiter(',');
      sub->add_option("--seed", cmd.seed);
      sub->add_option("--max-exp", cmd.max_exp);
    }
    if (verb == Verb::Search) {
      sub->add_option("--n", cmd.n);
      sub->add_option("--bound", cmd.bound);
      sub->add_option("--budget", cmd.budget);
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "gcdtn: " << e.what() << '\n';
    return kInputError;
  }
  cmd.format = format == "json" ? Format::Json : Format::Text;

  try {
    std::optional<OrderedSet> input;
    if (needs_input(cmd.verb)) {
      std::string text;
      if (cmd.input == "-") {
        text = read_all(in);
      } else {
        std::ifstream file(cmd.input);
        if (!file) throw Error(Errc::ParseError, "cannot open '" + cmd.input + "'");
        text = read_all(file);
      }
      auto parsed = parse_input(text);
      if (auto *m = std::get_if<ExponentMatrix>(&parsed))
        input = reconstruct(*m);
      else
        input = std::get<OrderedSet>(std::move(parsed));
    }
    Outcome result = execute(cmd, input);
    if (cmd.format == Format::Json)
      out << result.report.dump(2) << '\n';
    else
      out << render_text(result.report);
    return result.exit_code;
  } catch (const Error &e) {
    err << "gcdtn: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return kInputError;
  }
}

} // namespace gcdtn::cli

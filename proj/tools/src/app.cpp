/*
   Copyright 2026 The circlezero Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include "circlezero/cli/app.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "circlezero/approx.hpp"
#include "circlezero/cli/exit_codes.hpp"
#include "circlezero/cli/serialize.hpp"
#include "circlezero/identities.hpp"
#include "circlezero/verify.hpp"

namespace circlezero::cli {

namespace {

using exact::BigRational;
using families::Family;
using precision::Bits;
using precision::ComplexEnclosure;
using precision::RealEnclosure;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> families;
  long k = 0;
  std::string k_range;
  std::vector<std::string> methods{"sign-count"};
  long bits = 0;
  std::string format = "json";
  std::string out;
  int workers = 1;
  bool keep_going = false;
  std::string seed_convention = "standard";
  std::string scheme = "all";
  std::string which;
  std::vector<std::string> z;
  long N = 0;
};

struct Row {
  Json json;
  Outcome outcome = Outcome::ok;
};

const std::vector<Family> kAllFamilies{Family::R, Family::P, Family::Q, Family::Y, Family::W, Family::S};

long env_bits() {
  const char* env = std::getenv("CIRCLEZERO_BITS");
  if (env == nullptr || *env == '\0') return precision::kDefaultBits;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < precision::kMinBits) throw UsageError("CIRCLEZERO_BITS must be an integer >= 64");
  return v;
}

long parse_long(const std::string& s) {
  size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::logic_error&) {
    throw UsageError("not an integer: " + s);
  }
  if (used != s.size()) throw UsageError("not an integer: " + s);
  return v;
}

std::pair<long, long> k_bounds(const Options& o, std::optional<std::pair<long, long>> fallback = std::nullopt) {
  if (o.k != 0 && !o.k_range.empty()) throw UsageError("use either --k or --k-range");
  if (o.k != 0) return {o.k, o.k};
  if (o.k_range.empty()) {
    if (fallback) return *fallback;
    throw UsageError("--k or --k-range is required");
  }
  const auto dots = o.k_range.find("..");
  if (dots == std::string::npos) {
    const long v = parse_long(o.k_range);
    return {v, v};
  }
  const long a = parse_long(o.k_range.substr(0, dots));
  const long b = parse_long(o.k_range.substr(dots + 2));
  if (a > b) throw UsageError("--k-range needs A <= B");
  return {a, b};
}

std::vector<Family> family_list(const Options& o) {
  if (o.families.empty()) throw UsageError("--family is required");
  std::vector<Family> out;
  for (const auto& name : o.families) {
    if (name == "all") {
      out.insert(out.end(), kAllFamilies.begin(), kAllFamilies.end());
      continue;
    }
    try {
      out.push_back(families::parse_family(name));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

// With several families a shared range is clamped to each family's minimum.
std::vector<std::pair<Family, long>> family_tasks(const Options& o) {
  const auto fams = family_list(o);
  const auto [lo, hi] = k_bounds(o);
  std::vector<std::pair<Family, long>> tasks;
  for (Family f : fams) {
    const long min_k = families::family_min_k(f);
    if (lo < min_k && fams.size() == 1) {
      throw UsageError("family " + families::family_name(f) + " requires k >= " + std::to_string(min_k));
    }
    for (long k = std::max(lo, min_k); k <= hi; ++k) tasks.emplace_back(f, k);
  }
  return tasks;
}

Outcome outcome_of(verify::Status s) {
  switch (s) {
    case verify::Status::certified: return Outcome::ok;
    case verify::Status::refuted: return Outcome::refuted;
    case verify::Status::indeterminate: return Outcome::indeterminate;
  }
  return Outcome::indeterminate;
}

Outcome outcome_of(verify::Verdict v) {
  switch (v) {
    case verify::Verdict::certified_true: return Outcome::ok;
    case verify::Verdict::certified_false: return Outcome::refuted;
    case verify::Verdict::indeterminate: return Outcome::indeterminate;
  }
  return Outcome::indeterminate;
}

Outcome holds_outcome(bool holds) { return holds ? Outcome::ok : Outcome::refuted; }

// Input order is kept; without --keep-going everything after the first hard
// failure is dropped.
template <class T>
std::vector<Row> run_tasks(const std::vector<T>& tasks, const Options& o, const std::function<Row(const T&)>& fn,
                           const std::function<Json(const T&)>& label) {
  if (tasks.empty()) return {};
  std::vector<Row> rows = verify::parallel_map(tasks, o.workers, [&](const T& t) -> Row {
    try {
      return fn(t);
    } catch (const std::exception& e) {
      Json j = label(t);
      j["error"] = e.what();
      return Row{j, Outcome::numeric_failure};
    }
  });
  if (!o.keep_going) {
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].outcome == Outcome::numeric_failure) {
        rows.resize(i + 1);
        break;
      }
    }
  }
  return rows;
}

precision::PrecisionConfig config_of(const Options& o) {
  precision::PrecisionConfig cfg;
  cfg.bits = o.bits;
  if (o.N > 0) cfg.tail_cutoff = o.N;
  return cfg;
}

Json family_label(const std::pair<Family, long>& t) {
  return Json{{"family", families::family_name(t.first)}, {"k", t.second}};
}

// "1/2", "-0.25", "3" as exact rationals.
BigRational parse_rational(const std::string& s) {
  if (s.empty()) throw UsageError("empty number");
  try {
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
      BigRational q(s.substr(0, slash) + "/" + s.substr(slash + 1));
      if (q.get_den() == 0) throw UsageError("zero denominator: " + s);
      q.canonicalize();
      return q;
    }
    const auto dot = s.find('.');
    if (dot == std::string::npos) return BigRational(exact::BigInt(s));
    const std::string frac = s.substr(dot + 1);
    std::string whole = s.substr(0, dot);
    const bool neg = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    for (char ch : whole + frac) {
      if (ch < '0' || ch > '9') throw UsageError("bad number: " + s);
    }
    exact::BigInt num(whole + frac), den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    BigRational q(num, den);
    q.canonicalize();
    return neg ? BigRational(-q) : q;
  } catch (const std::invalid_argument&) {
    throw UsageError("bad number: " + s);
  }
}

// "a", "a+bi", "a-bi", "bi" with rational parts.
std::pair<BigRational, BigRational> parse_complex(std::string s) {
  std::erase(s, ' ');
  if (s.empty()) throw UsageError("empty --z value");
  if (s.back() != 'i') return {parse_rational(s), 0};
  s.pop_back();
  size_t split = std::string::npos;
  for (size_t i = s.size(); i-- > 1;) {
    if (s[i] == '+' || s[i] == '-') {
      split = i;
      break;
    }
  }
  auto imag = [](std::string t) -> BigRational {
    if (t.empty() || t == "+") return 1;
    if (t == "-") return -1;
    return parse_rational(t);
  };
  if (split == std::string::npos) return {0, imag(s)};
  return {parse_rational(s.substr(0, split)), imag(s.substr(split))};
}

struct IdentityTask {
  std::string which;
  long k = 0;
  std::optional<std::pair<BigRational, BigRational>> z;
  std::optional<Family> family;
};

Json identity_label(const IdentityTask& t) {
  Json j{{"identity", t.which}, {"k", t.k}};
  if (t.z) j["z"] = rational_string(t.z->first) + (t.z->second == 0 ? "" : "+" + rational_string(t.z->second) + "i");
  if (t.family) j["family"] = families::family_name(*t.family);
  return j;
}

std::vector<std::pair<BigRational, BigRational>> z_grid(const Options& o, const std::string& which) {
  std::vector<std::pair<BigRational, BigRational>> out;
  for (const auto& s : o.z) out.push_back(parse_complex(s));
  if (!out.empty()) return out;
  if (which == "ramanujan") {
    return {{BigRational(1, 2), 0}, {1, 0}, {BigRational(3, 2), 0}, {BigRational(3, 10), BigRational(7, 10)}};
  }
  return {{BigRational(1, 2), 0}, {1, 0}, {2, 0}};
}

std::pair<long, long> identity_default_range(const std::string& which) {
  if (which == "ramanujan") return {2, 10};
  if (which == "sech") return {1, 8};
  if (which == "sk-at-1") return {1, 50};
  return {2, 50};
}

std::vector<IdentityTask> identity_tasks(const Options& o, const std::string& which) {
  const auto [lo, hi] = k_bounds(o, identity_default_range(which));
  const long min_k = which == "sech" || which == "sk-at-1" ? 1 : 2;
  if (lo < min_k) throw UsageError("identity " + which + " requires k >= " + std::to_string(min_k));
  std::vector<IdentityTask> tasks;
  if (which == "ramanujan" || which == "sech") {
    const auto grid = z_grid(o, which);
    for (long k = lo; k <= hi; ++k) {
      for (const auto& z : grid) {
        if (which == "sech" && z.second != 0) throw UsageError("sech identity needs real --z");
        if (which == "ramanujan" && z.first <= 0) throw UsageError("ramanujan identity needs Re z > 0");
        if (which == "sech" && z.first == 0) throw UsageError("sech identity needs z != 0");
        tasks.push_back({which, k, z, std::nullopt});
      }
    }
  } else if (which == "self-inversive") {
    for (Family f : kAllFamilies) {
      for (long k = std::max(lo, families::family_min_k(f)); k <= hi; ++k) tasks.push_back({which, k, std::nullopt, f});
    }
  } else {
    for (long k = lo; k <= hi; ++k) tasks.push_back({which, k, std::nullopt, std::nullopt});
  }
  return tasks;
}

Row run_identity(const IdentityTask& t, Bits bits, long N) {
  if (t.which == "ramanujan") {
    const ComplexEnclosure z(RealEnclosure(t.z->first, bits), RealEnclosure(t.z->second, bits));
    const auto e = approx::ramanujan_identity_residual(t.k, z, N, bits);
    return {to_json(e), holds_outcome(e.holds())};
  }
  if (t.which == "sech") {
    const auto e = approx::sech_identity_residual(t.k, RealEnclosure(t.z->first, bits), N, bits);
    return {to_json(e), holds_outcome(e.holds())};
  }
  if (t.which == "observation") {
    const auto r = identities::observation_check(t.k, bits);
    return {to_json(r), holds_outcome(r.exact_holds && r.residual.contains_zero())};
  }
  if (t.which == "qk-sum") {
    const auto r = identities::y_coefficient_sum(t.k);
    return {to_json(r), holds_outcome(r.holds())};
  }
  if (t.which == "sk-at-1") {
    const auto r = identities::s_at_one(t.k);
    return {to_json(r), holds_outcome(r.holds())};
  }
  if (t.which == "self-inversive") {
    const bool ok = identities::self_inversive(*t.family, t.k);
    Json j = identity_label(t);
    j["holds"] = ok;
    return {j, holds_outcome(ok)};
  }
  const bool q = identities::q_combination_matches(t.k);
  const bool w = identities::w_combination_matches(t.k);
  Json j = identity_label(t);
  j["q_matches"] = q;
  j["w_matches"] = w;
  j["holds"] = q && w;
  return {j, holds_outcome(q && w)};
}

const std::vector<std::string> kIdentityNames{"ramanujan", "sech",           "observation",
                                              "qk-sum",    "sk-at-1",        "combination-vs-closed-form",
                                              "self-inversive"};

std::vector<Row> cmd_gen(const Options& o) {
  const auto tasks = family_tasks(o);
  return run_tasks<std::pair<Family, long>>(
      tasks, o, [](const auto& t) { return Row{to_json(families::build(t.first, t.second)), Outcome::ok}; },
      family_label);
}

std::vector<Row> cmd_verify(const Options& o) {
  std::vector<verify::Method> methods;
  for (const auto& m : o.methods) {
    if (m == "all") {
      methods = {verify::Method::criteria, verify::Method::oscillation, verify::Method::sign_count,
                 verify::Method::roots};
      break;
    }
    try {
      methods.push_back(verify::parse_method(m));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  struct Task {
    Family family;
    long k;
    verify::Method method;
  };
  std::vector<Task> tasks;
  for (const auto& [f, k] : family_tasks(o)) {
    for (auto m : methods) tasks.push_back({f, k, m});
  }
  const auto cfg = config_of(o);
  return run_tasks<Task>(
      tasks, o,
      [&cfg](const Task& t) {
        const auto r = verify::verify(t.family, t.k, t.method, cfg);
        return Row{to_json(r), outcome_of(r.status)};
      },
      [](const Task& t) {
        return Json{{"family", families::family_name(t.family)}, {"k", t.k}, {"method", verify::to_string(t.method)}};
      });
}

std::vector<Row> cmd_criteria(const Options& o) {
  const auto cfg = config_of(o);
  return run_tasks<std::pair<Family, long>>(
      family_tasks(o), o,
      [&cfg](const auto& t) {
        const auto r = verify::family_criteria_check(t.first, t.second, cfg);
        return Row{to_json(r), outcome_of(r.holds)};
      },
      family_label);
}

std::vector<Row> cmd_zeta(const Options& o) {
  std::vector<approx::Scheme> schemes;
  approx::SeedConvention seed{};
  try {
    if (o.scheme == "all") {
      schemes = {approx::Scheme::approx1, approx::Scheme::approx2};
    } else {
      schemes = {approx::parse_scheme(o.scheme)};
    }
    seed = approx::parse_seed_convention(o.seed_convention);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Bits bits = o.bits;
  return run_tasks<approx::Scheme>(
      schemes, o, [&](approx::Scheme s) { return Row{to_json(approx::run_scheme(s, bits, seed)), Outcome::ok}; },
      [](approx::Scheme s) { return Json{{"scheme", approx::to_string(s)}}; });
}

std::vector<Row> cmd_identity(const Options& o) {
  std::vector<std::string> names;
  if (o.which == "all") {
    names = kIdentityNames;
  } else if (std::find(kIdentityNames.begin(), kIdentityNames.end(), o.which) != kIdentityNames.end()) {
    names = {o.which};
  } else {
    throw UsageError("unknown identity: " + o.which);
  }
  std::vector<IdentityTask> tasks;
  for (const auto& n : names) {
    auto part = identity_tasks(o, n);
    tasks.insert(tasks.end(), part.begin(), part.end());
  }
  const Bits bits = o.bits;
  const long N = o.N;
  return run_tasks<IdentityTask>(
      tasks, o, [bits, N](const IdentityTask& t) { return run_identity(t, bits, N); }, identity_label);
}

Json config_json(const std::string& command, const Options& o) {
  Json c;
  if (!o.families.empty()) c["families"] = o.families;
  if (o.k != 0) c["k"] = o.k;
  if (!o.k_range.empty()) c["k_range"] = o.k_range;
  if (command == "verify") c["methods"] = o.methods;
  if (command == "zeta") {
    c["scheme"] = o.scheme;
    c["seed_convention"] = o.seed_convention;
  }
  if (command == "identity") {
    c["which"] = o.which;
    if (!o.z.empty()) c["z"] = o.z;
    if (o.N > 0) c["N"] = o.N;
  }
  c["bits"] = o.bits;
  c["workers"] = o.workers;
  c["keep_going"] = o.keep_going;
  return c;
}

std::string render(const std::string& command, const Options& o, const std::vector<Row>& rows, int code) {
  Json results = Json::array();
  std::vector<Outcome> outcomes;
  for (const auto& r : rows) {
    results.push_back(r.json);
    outcomes.push_back(r.outcome);
  }
  if (o.format == "csv") return to_csv(results);
  if (o.format == "text") return to_text(results);
  long counts[4] = {0, 0, 0, 0};
  for (auto oc : outcomes) ++counts[static_cast<int>(oc)];
  Json doc;
  doc["schema"] = kSchema;
  doc["command"] = command;
  doc["config"] = config_json(command, o);
  doc["results"] = std::move(results);
  doc["summary"] = Json{{"total", rows.size()},
                        {"ok", counts[0]},
                        {"refuted", counts[1]},
                        {"indeterminate", counts[2]},
                        {"numeric_failure", counts[3]}};
  doc["exit_code"] = code;
  return doc.dump(2) + "\n";
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--bits", o.bits, "working precision in bits")->check(CLI::Range(64L, 1L << 20));
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--out", o.out, "output file");
  sub->add_option("--workers", o.workers, "parallel workers")->check(CLI::Range(1, 256));
  sub->add_flag("--keep-going", o.keep_going, "continue after numeric failures");
}

void add_family_range(CLI::App* sub, Options& o) {
  sub->add_option("--family", o.families, "R,P,Q,Y,W,S or all")->delimiter(',');
  sub->add_option("--k", o.k, "single k")->check(CLI::PositiveNumber);
  sub->add_option("--k-range", o.k_range, "inclusive range A..B");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Certified unit-circle zero checks for zeta-value polynomial families", "circlezero"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "circlezero 0.1.0");

  auto* gen = app.add_subcommand("gen", "build family polynomials");
  add_family_range(gen, o);
  add_common(gen, o);

  auto* ver = app.add_subcommand("verify", "certify that all zeros lie on the unit circle");
  add_family_range(ver, o);
  ver->add_option("--method", o.methods, "criteria, oscillation, sign-count, roots or all")->delimiter(',');
  add_common(ver, o);

  auto* cri = app.add_subcommand("criteria", "coefficient criterion margins");
  add_family_range(cri, o);
  add_common(cri, o);

  auto* zet = app.add_subcommand("zeta", "zeta(3) approximation schemes");
  zet->add_option("scheme", o.scheme, "approx1, approx2 or all");
  zet->add_option("--seed-convention", o.seed_convention, "standard or alternate");
  add_common(zet, o);

  auto* ide = app.add_subcommand("identity", "identity regression runs");
  ide->add_option("which", o.which, "identity name or all")->required();
  ide->add_option("--k", o.k, "single k")->check(CLI::PositiveNumber);
  ide->add_option("--k-range", o.k_range, "inclusive range A..B");
  ide->add_option("--z", o.z, "evaluation points, e.g. 1/2 or 0.3+0.7i");
  ide->add_option("--N", o.N, "series truncation (0 = automatic)")->check(CLI::NonNegativeNumber);
  add_common(ide, o);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = e.get_exit_code();
    if (code == 0) {
      out << (e.get_name() == "CallForVersion" ? std::string(e.what()) + "\n" : app.help());
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  std::vector<Row> rows;
  try {
    if (o.bits == 0) o.bits = env_bits();
    if (command == "gen") {
      rows = cmd_gen(o);
    } else if (command == "verify") {
      rows = cmd_verify(o);
    } else if (command == "criteria") {
      rows = cmd_criteria(o);
    } else if (command == "zeta") {
      rows = cmd_zeta(o);
    } else {
      rows = cmd_identity(o);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  std::vector<Outcome> outcomes;
  for (const auto& r : rows) {
    outcomes.push_back(r.outcome);
    if (r.outcome == Outcome::numeric_failure) {
      err << "numeric failure: " << r.json.dump() << "\n";
    }
  }
  const int code = exit_code_for(outcomes);
  const std::string text = render(command, o, rows, code);
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << o.out << "\n";
      return kUsage;
    }
    file << text;
  }
  return code;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace circlezero::cli

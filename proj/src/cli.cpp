#include "zdk/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "zdk/errors.hpp"
#include "zdk/minpoly.hpp"
#include "zdk/modular.hpp"
#include "zdk/parse.hpp"
#include "zdk/structure.hpp"

namespace zdk {
namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct Flags {
  std::string file;
  std::uint64_t seed = 0;
  bool json = false;
  bool no_verify = false;
  int max_attempts = 20;
  std::string poly;
  std::string alg;
  std::string suite = "desk";
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string field_name(const Rationals&) { return "Q"; }
std::string field_name(const PrimeField& k) { return "F" + std::to_string(k.characteristic()); }

std::string bool_text(bool b) { return b ? "true" : "false"; }

template <class K>
Json gb_json(const ReducedGB<K>& gb) {
  Json a = Json::array();
  for (const auto& g : gb.elements()) a.push_back(g.to_string());
  return a;
}

// --poly is either the name of an elem declaration or an expression.
template <class K>
Poly<K> select_poly(const Problem<K>& pb, const std::string& text) {
  if (text.empty()) {
    if (pb.elems.empty()) throw InputError("minpoly needs --poly or an elem declaration");
    return pb.elems.front().second;
  }
  for (const auto& [name, f] : pb.elems)
    if (name == text) return f;
  try {
    return parse_poly(pb.ring, text);
  } catch (const ParseError& e) {
    throw InputError(std::string("--poly: ") + e.what());
  }
}

template <class K>
Ideal<K> problem_ideal(const Problem<K>& pb) {
  return Ideal<K>(pb.ring, pb.ideal);
}

// Minimal polynomial with the algorithm named by `alg` (empty: the default).
template <class K>
UPoly<K> compute_minpoly(const Ideal<K>& I, const Poly<K>& f, const std::string& alg,
                         const Flags& fl, Json* extra) {
  const TermOrder& ord = I.ring()->order();
  if constexpr (std::is_same_v<K, Rationals>) {
    if (alg.empty() || alg == "modular" || alg == "heuristic") {
      ModularOptions mo;
      mo.verify = !fl.no_verify;
      mo.seed = fl.seed;
      ModularResult r = alg == "heuristic" ? minpoly_modular_heuristic(I.generators(), f, ord, mo)
                                           : minpoly_modular(I, f, ord, mo);
      if (extra) {
        (*extra)["primes"] = r.report.primes_used.size();
        (*extra)["bad_primes"] = r.report.bad_primes.size();
        const char* v = r.report.verification == Verification::Passed    ? "passed"
                        : r.report.verification == Verification::Skipped ? "skipped"
                                                                          : "unverified";
        (*extra)["verification"] = v;
      }
      return r.mu;
    }
  } else {
    if (alg == "modular" || alg == "heuristic") throw FieldMismatch();
  }
  return minpoly(I, f, alg.empty() ? MinPolyAlg::Def : parse_minpoly_alg(alg));
}

template <class K>
int run_on(const std::string& cmd, const Problem<K>& pb, const Flags& fl, std::ostream& out) {
  Ideal<K> I = problem_ideal(pb);
  const TermOrder& ord = pb.ring->order();
  StructureOptions so;
  so.seed = fl.seed;
  so.max_attempts = fl.max_attempts;

  Json j;
  j["command"] = cmd;
  j["field"] = field_name(pb.ring->field());
  std::string text;

  if (cmd == "gb") {
    auto gb = I.reduced_gb();
    j["result"] = gb_json(*gb);
    text = gb->to_string();
  } else if (cmd == "minpoly") {
    Poly<K> f = select_poly(pb, fl.poly);
    Json extra = Json::object();
    UPoly<K> mu = compute_minpoly(I, f, fl.alg, fl, &extra);
    j["poly"] = f.to_string();
    j["result"] = mu.to_string("z");
    j["degree"] = mu.degree();
    for (auto& [k, v] : extra.items()) j[k] = v;
    text = mu.to_string("z");
  } else if (cmd == "is-radical" || cmd == "is-maximal" || cmd == "is-primary") {
    bool b = cmd == "is-radical"   ? is_radical_0dim(I, ord)
             : cmd == "is-maximal" ? is_maximal(I, ord, so)
                                   : is_primary_0dim(I, ord, so);
    j["result"] = b;
    text = bool_text(b);
  } else if (cmd == "radical") {
    auto gb = radical_0dim(I, ord).reduced_gb();
    j["result"] = gb_json(*gb);
    text = gb->to_string();
  } else if (cmd == "frob-dim") {
    if constexpr (std::is_same_v<K, PrimeField>) {
      std::size_t d = frobenius_basis(I, ord).dim();
      j["result"] = d;
      text = std::to_string(d);
    } else {
      throw FieldMismatch();
    }
  } else if (cmd == "primdec") {
    auto comps = primary_decomposition_0dim(I, ord, so);
    Json arr = Json::array();
    std::ostringstream ss;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      auto gb = comps[i].reduced_gb();
      arr.push_back(gb_json(*gb));
      if (i) ss << '\n';
      ss << "component " << i + 1 << '\n' << gb->to_string();
    }
    j["components"] = comps.size();
    j["result"] = arr;
    text = ss.str();
  }

  if (fl.json)
    out << j.dump(2) << '\n';
  else if (!text.empty())
    out << text << '\n';
  return kExitOk;
}

// ---- bench ----

struct CaseOutcome {
  bool pass = true;
  std::vector<std::string> checks;
  Json got = Json::object();
};

template <class K>
void bench_case(const Problem<K>& pb, const std::optional<Problem<K>>& other, const Json& c,
                const Flags& fl, CaseOutcome& oc) {
  Ideal<K> I = problem_ideal(pb);
  if (other) {
    if (!(*other->ring == *pb.ring)) throw InputError("intersected files declare different rings");
    I = intersect(I, problem_ideal(*other));
  }
  const TermOrder& ord = pb.ring->order();
  StructureOptions so;
  so.seed = fl.seed;
  so.max_attempts = fl.max_attempts;
  const Json& want = c.at("expect");

  auto check = [&](const std::string& key, const Json& got) {
    bool ok = got == want.at(key);
    oc.got[key] = got;
    oc.pass = oc.pass && ok;
    oc.checks.push_back(key + "=" + got.dump() + (ok ? "" : " (want " + want.at(key).dump() + ")"));
  };

  if (want.contains("deg")) {
    Poly<K> f = select_poly(pb, c.value("poly", std::string()));
    if (other) f = adopt(I.ring(), f);
    check("deg", compute_minpoly(I, f, c.value("alg", std::string()), fl, nullptr).degree());
  }
  if (want.contains("is_radical")) check("is_radical", is_radical_0dim(I, ord));
  if (want.contains("is_maximal")) check("is_maximal", is_maximal(I, ord, so));
  if (want.contains("is_primary")) check("is_primary", is_primary_0dim(I, ord, so));
  if (want.contains("frob_dim")) {
    if constexpr (std::is_same_v<K, PrimeField>)
      check("frob_dim", frobenius_basis(I, ord).dim());
    else
      throw FieldMismatch();
  }
  if (want.contains("components"))
    check("components", primary_decomposition_0dim(I, ord, so).size());
}

int run_bench(const Flags& fl, std::ostream& out, std::ostream& err) {
  fs::path manifest = fl.file.empty() ? fs::path("bench") : fs::path(fl.file);
  if (fs::is_directory(manifest)) manifest /= "manifest.json";
  Json m;
  try {
    m = Json::parse(read_file(manifest));
  } catch (const Json::parse_error& e) {
    throw InputError(manifest.string() + ": " + e.what());
  }
  fs::path dir = manifest.parent_path();

  int failed = 0, run = 0;
  Json results = Json::array();
  for (const Json& c : m.at("cases")) {
    std::string suite = c.value("suite", "desk");
    if (fl.suite != "all" && suite != fl.suite) continue;
    ++run;
    std::string id = c.at("id").get<std::string>();
    CaseOutcome oc;
    std::string error;
    auto t0 = std::chrono::steady_clock::now();
    try {
      ProblemFile pf = parse_problem(read_file(dir / c.at("file").get<std::string>()));
      std::optional<ProblemFile> other;
      if (c.contains("intersect"))
        other = parse_problem(read_file(dir / c.at("intersect").get<std::string>()));
      if (other && other->over_q() != pf.over_q())
        throw InputError("intersected files declare different fields");
      std::visit(
          [&](const auto& pb) {
            using P = std::decay_t<decltype(pb)>;
            std::optional<P> o;
            if (other) o = std::get<P>(other->content);
            bench_case(pb, o, c, fl, oc);
          },
          pf.content);
    } catch (const std::exception& e) {
      oc.pass = false;
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!oc.pass) ++failed;

    if (fl.json) {
      Json r;
      r["id"] = id;
      r["suite"] = suite;
      r["pass"] = oc.pass;
      r["got"] = oc.got;
      if (!error.empty()) r["error"] = error;
      r["seconds"] = secs;
      results.push_back(r);
    } else {
      out << (oc.pass ? "PASS " : "FAIL ") << id;
      for (const auto& s : oc.checks) out << ' ' << s;
      if (!error.empty()) out << " error: " << error;
      out << ' ' << std::fixed << std::setprecision(2) << secs << "s" << std::endl;
      out.unsetf(std::ios::floatfield);
    }
  }
  if (fl.json) {
    Json j;
    j["command"] = "bench";
    j["suite"] = fl.suite;
    j["cases"] = results;
    j["failed"] = failed;
    out << j.dump(2) << '\n';
  } else {
    out << run - failed << "/" << run << " cases passed\n";
  }
  if (run == 0) err << "zdk: no cases in suite '" << fl.suite << "'\n";
  return failed ? kExitBenchFail : kExitOk;
}

int dispatch(const std::string& cmd, const Flags& fl, std::ostream& out, std::ostream& err) {
  if (cmd == "bench") return run_bench(fl, out, err);
  ProblemFile pf = parse_problem(read_file(fl.file));
  return std::visit([&](const auto& pb) { return run_on(cmd, pb, fl, out); }, pf.content);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-dimensional ideal toolkit"};
  app.require_subcommand(1);
  Flags fl;
  std::optional<std::uint64_t> seed;
  app.add_option("--seed", seed, "seed for random choices (env ZDK_SEED)");
  app.add_flag("--json", fl.json, "JSON output");
  app.add_flag("--no-verify", fl.no_verify, "skip the final check of modular results");
  app.add_option("--max-attempts", fl.max_attempts, "random linear forms per decision")
      ->check(CLI::NonNegativeNumber);

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"gb", "reduced Groebner basis"},
      {"minpoly", "minimal polynomial of an element"},
      {"is-radical", "radical test"},
      {"radical", "radical of the ideal"},
      {"is-maximal", "maximality test"},
      {"is-primary", "primary test"},
      {"frob-dim", "dimension of the Frobenius fixed space (F_p only)"},
      {"primdec", "primary decomposition"},
      {"bench", "run the benchmark corpus"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    if (name == "bench") {
      sub->add_option("manifest", fl.file, "manifest.json or its directory (default: bench)");
      sub->add_option("--suite", fl.suite, "desk, stretch or all")
          ->check(CLI::IsMember({"desk", "stretch", "all"}));
    } else {
      sub->add_option("file", fl.file, ".zdk problem file")->required();
    }
    if (name == "minpoly") {
      sub->add_option("--poly", fl.poly, "element name or expression");
      sub->add_option("--alg", fl.alg, "def, mat, elim, modular or heuristic")
          ->check(CLI::IsMember({"def", "mat", "elim", "modular", "heuristic"}));
    }
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (seed) {
    fl.seed = *seed;
  } else if (const char* env = std::getenv("ZDK_SEED")) {
    try {
      std::size_t pos = 0;
      fl.seed = std::stoull(env, &pos);
      if (env[pos] != '\0') throw std::invalid_argument(env);
    } catch (const std::exception&) {
      err << "zdk: ZDK_SEED is not an unsigned integer\n";
      return kExitInput;
    }
  }

  std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return dispatch(cmd, fl, out, err);
  } catch (const ParseError& e) {
    err << "zdk: " << fl.file << ": " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    err << "zdk: " << e.what() << '\n';
    return kExitInput;
  } catch (const MathError& e) {
    err << "zdk: " << e.what() << '\n';
    return kExitMath;
  } catch (const HeuristicExhausted& e) {
    err << "zdk: " << e.what() << '\n';
    return kExitHeuristic;
  } catch (const std::invalid_argument& e) {
    err << "zdk: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace zdk

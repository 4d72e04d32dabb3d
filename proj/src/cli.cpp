#include "workbench/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <map>
#include <iostream>
#include <sstream>

#include "workbench/congruence.hpp"
#include "workbench/error.hpp"
#include "workbench/fimod.hpp"
#include "workbench/freelie.hpp"
#include "workbench/johnson.hpp"
#include "workbench/magnus.hpp"
#include "workbench/report.hpp"
#include "workbench/suites.hpp"
#include "workbench/words.hpp"

namespace workbench {

namespace {

struct IoError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Largest generator index mentioned in a word, so --n can be omitted.
int infer_rank(const std::string& text) {
  int best = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x') continue;
    std::size_t j = i + 1;
    int v = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) v = v * 10 + (text[j++] - '0');
    best = std::max(best, v);
  }
  return best;
}

std::vector<long> parse_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stol(tok));
    } catch (const std::exception&) {
      throw DomainError("bad list entry '" + tok + "'");
    }
  }
  return out;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string l;
  while (std::getline(ss, l)) out.push_back(l);
  return out;
}

void add_lines(Report& r, const std::string& text) {
  for (auto& l : split_lines(text)) r.line(std::move(l));
}

// ---------------------------------------------------------------------------------

struct Options {
  std::string json_path;
  std::uint64_t seed = 1;

  // words / magnus
  std::vector<std::string> words;
  int n = 0;
  int cap = kDefaultCap;
  long p = 0;
  std::string endo_path, endo2_path;

  // johnson
  int k = 1;
  int g = 0;
  std::vector<std::string> gens;
  bool sample = false;
  std::string support;
  int depth = 0;
  int jcap = 0;

  // congruence
  std::string group;  // sl or sp; defaults to sp when --g is given

  // fimod
  std::string in_path, builtin_name;
  int N = 0;
  std::string J;

  // suite
  SuiteParams suite;
  std::string primes = "2,3,5";
};

FreeWord word_arg(const Options& o, std::size_t i, int rank) {
  if (i >= o.words.size()) throw DomainError("missing word argument");
  return FreeWord::parse(o.words[i], rank);
}

int words_rank(const Options& o) {
  if (o.n > 0) return o.n;
  int r = 1;
  for (const auto& w : o.words) r = std::max(r, infer_rank(w));
  return r;
}

// --- words --------------------------------------------------------------------------

Report words_cmd(const std::string& op, const Options& o) {
  Report r("words " + op, {{"words", o.words}});
  auto emit = [&](const FreeWord& w) {
    r.results()["word"] = w.to_string();
    r.results()["length"] = w.length();
    r.line(w.to_string());
  };
  if (op == "apply" || op == "compose" || op == "abelianize" || op == "check") {
    if (o.endo_path.empty()) throw DomainError("--endo is required");
    const Endomorphism e = Endomorphism::parse(read_file(o.endo_path));
    r.parameters()["endo"] = o.endo_path;
    if (op == "apply") {
      emit(apply_endo(e, word_arg(o, 0, e.rank())));
    } else if (op == "compose") {
      if (o.endo2_path.empty()) throw DomainError("--endo2 is required");
      const Endomorphism e2 = Endomorphism::parse(read_file(o.endo2_path));
      const Endomorphism c = compose(e, e2);
      r.results()["endomorphism"] = c.to_string();
      add_lines(r, c.to_string());
    } else if (op == "abelianize") {
      const Matrix m = abelianize(e);
      r.results()["matrix"] = split_lines(m.to_string());
      add_lines(r, m.to_string());
    } else {
      // parsing already verified any supplied inverse
      r.add("inverse", e.has_inverse(), {{"rank", e.rank()}, {"has_inverse", e.has_inverse()}});
    }
    return r;
  }
  const int rank = words_rank(o);
  if (op == "reduce")
    emit(word_arg(o, 0, rank));
  else if (op == "multiply")
    emit(multiply(word_arg(o, 0, rank), word_arg(o, 1, rank)));
  else if (op == "invert")
    emit(invert(word_arg(o, 0, rank)));
  else if (op == "commutator")
    emit(commutator(word_arg(o, 0, rank), word_arg(o, 1, rank)));
  else if (op == "exponents") {
    std::vector<std::string> sums;
    for (const auto& e : word_arg(o, 0, rank).exponent_sums()) sums.push_back(e.get_str());
    r.results()["exponent_sums"] = sums;
    std::string line;
    for (const auto& s : sums) line += (line.empty() ? "" : ",") + s;
    r.line(line);
  }
  return r;
}

// --- magnus ---------------------------------------------------------------------------

Report magnus_cmd(const std::string& op, const Options& o) {
  const int rank = words_rank(o);
  const FreeWord w = word_arg(o, 0, rank);
  Report r("magnus " + op, {{"word", w.to_string()}, {"n", rank}, {"cap", o.cap}});
  if (op == "expand") {
    r.parameters()["p"] = o.p;
    if (o.p != 0 && !is_prime(o.p)) throw DomainError("--p must be a prime");
    const TruncatedSeries s = expand(w, o.cap, o.p);
    r.results()["series"] = split_lines(s.to_string());
    add_lines(r, s.to_string());
  } else if (op == "weight") {
    const FiltrationWeight fw = lcs_weight(w, o.cap);
    r.results()["weight"] = fw.to_string();
    r.line(fw.to_string());
  } else {
    if (o.p == 0) throw DomainError("zweight needs --p");
    r.parameters()["p"] = o.p;
    const FiltrationWeight fw = zassenhaus_weight(w, o.p, o.cap);
    r.results()["weight"] = fw.to_string();
    r.line(fw.to_string());
  }
  return r;
}

// --- johnson --------------------------------------------------------------------------

Endomorphism johnson_input(const Options& o, Report& r) {
  const int sources = !o.endo_path.empty() + !o.gens.empty() + o.sample;
  if (sources != 1) throw DomainError("give exactly one of --endo, --gen, --sample");
  if (!o.endo_path.empty()) {
    r.parameters()["endo"] = o.endo_path;
    return Endomorphism::parse(read_file(o.endo_path));
  }
  if (o.n < 1) throw DomainError("--n is required with --gen and --sample");
  if (!o.gens.empty()) {
    r.parameters()["gen"] = o.gens;
    Endomorphism phi = Endomorphism::identity(o.n);
    for (const auto& g : o.gens) phi = compose(phi, make_generator(GeneratorSpec::parse(g, o.n)));
    return phi;
  }
  std::vector<int> support;
  if (o.support.empty())
    for (int i = 1; i <= o.n; ++i) support.push_back(i);
  else
    for (long v : parse_list(o.support)) support.push_back(static_cast<int>(v));
  const int depth = o.depth > 0 ? o.depth : o.k;
  r.parameters()["sample"] = {{"support", support}, {"depth", depth}, {"seed", o.seed}};
  return ia_commutator_sampler(o.n, support, depth, o.seed);
}

Report johnson_cmd(const std::string& op, const Options& o) {
  Report r("johnson " + op, nlohmann::json::object());
  if (op == "certify") {
    r.parameters()["k"] = o.k;
    if (o.g > 0) {
      r.parameters()["g"] = o.g;
      const SymplecticCertificate c = certificate_symplectic(o.g, o.k);
      r.results() = {{"pp_image", c.pp_image}, {"rho_image", c.rho_image}};
      r.line("PP(lambda)(a" + std::to_string(o.k + 1) + ") = " + c.pp_image);
      add_lines(r, "rho: " + c.rho_image);
      r.add("symplectic_certificate", c.pass,
            {{"g", c.g}, {"k", c.k}, {"matches_bracket", c.matches_bracket}, {"nonzero", c.nonzero}, {"failure", c.failure}});
      return r;
    }
    const int n = o.n > 0 ? o.n : o.k + 1;
    r.parameters()["n"] = n;
    const Certificate c = certificate_lower_bound(n, o.k);
    r.results() = {{"w_lambda", c.w_lambda}, {"lambda", c.lambda},  {"tau_image", c.tau_image},
                   {"rho_image", c.rho_image}, {"contraction", c.contraction}};
    r.line("w_lambda: " + c.w_lambda);
    r.line("lambda: " + c.lambda);
    r.line("tau(e" + std::to_string(o.k + 1) + "): " + c.tau_image);
    add_lines(r, "rho: " + c.rho_image);
    r.line("contraction: " + c.contraction);
    r.add("certificate", c.pass,
          {{"n", c.n}, {"k", c.k}, {"nonzero", c.nonzero}, {"matches_bracket", c.matches_bracket}, {"wedge_ok", c.wedge_ok},
           {"contraction", c.contraction}, {"failure", c.failure}});
    return r;
  }
  const Endomorphism phi = johnson_input(o, r);
  r.parameters()["phi"] = phi.to_string();
  if (op == "weight") {
    r.parameters()["cap"] = o.cap;
    FiltrationWeight w;
    if (o.p != 0) {
      r.parameters()["p"] = o.p;
      w = ia_weight_zassenhaus(phi, o.p, o.cap);
    } else {
      w = ia_weight(phi, o.cap);
    }
    r.results()["weight"] = w.to_string();
    r.line(w.to_string());
    return r;
  }
  r.parameters()["k"] = o.k;
  const JohnsonValue v = tau(phi, o.k, o.jcap);
  if (op == "tau") {
    r.results()["basis"] = "lyndon";  // coordinates are bracketed Lyndon words
    r.results()["tau"] = split_lines(v.to_string());
    r.results()["zero"] = v.is_zero();
    add_lines(r, v.to_string());
    return r;
  }
  const auto images = tau_hat(v);
  nlohmann::json out = nlohmann::json::object();
  for (std::size_t i = 0; i < images.size(); ++i) {
    const std::string key = "e" + std::to_string(i + 1);
    out[key] = split_lines(images[i].to_string());
    r.line(key + ":");
    add_lines(r, images[i].is_zero() ? "  0" : images[i].to_string());
  }
  r.results()["tau_hat"] = out;
  return r;
}

// --- congruence -------------------------------------------------------------------------

Report congruence_cmd(const std::string& op, const Options& o) {
  const std::string group = !o.group.empty() ? o.group : (o.g > 0 || op == "rank") ? "sp" : "sl";
  if (group != "sl" && group != "sp") throw DomainError("--group must be sl or sp");
  if (o.p < 2 || !is_prime(o.p)) throw DomainError("--p must be a prime");
  const bool sp = group == "sp";
  const int size = sp ? o.g : o.n;
  if (size < 1) throw DomainError(sp ? "--g is required" : "--n is required");
  Report r("congruence " + op, {{"group", group}, {sp ? "g" : "n", size}, {"p", o.p}});
  if (op == "gens") {
    const auto gens = sp ? sp_generators(size, o.p) : sl_generators(size, o.p);
    nlohmann::json out = nlohmann::json::array();
    for (const auto& g : gens) {
      out.push_back({{"name", g.name}, {"rows", split_lines(g.matrix.to_string())}});
      r.line(g.name + ":");
      add_lines(r, g.matrix.to_string());
    }
    r.results()["generators"] = out;
  } else if (op == "check") {
    if (sp)
      check_sp_generators(r, size, {o.p});
    else
      check_lifts(r, size, size, {o.p});
  } else {
    if (!sp) throw DomainError("rank is defined for --group sp");
    const LieRankResult res = lie_rank_certificate(size, o.p);
    r.results() = {{"rank", res.rank}, {"expected", res.expected}, {"generators", res.generators}};
    r.line("rank " + std::to_string(res.rank) + " (2g^2+g = " + std::to_string(res.expected) + ")");
    r.add("lie_rank", res.pass(), {{"rank", res.rank}, {"expected", res.expected}, {"dependent", res.dependent}});
  }
  return r;
}

// --- fimod ---------------------------------------------------------------------------------

FIModulePresentation fimod_input(const Options& o, Report& r) {
  if (o.in_path.empty() == o.builtin_name.empty()) throw DomainError("give exactly one of --in, --builtin");
  if (!o.in_path.empty()) {
    r.parameters()["in"] = o.in_path;
    return FIModulePresentation::parse(read_file(o.in_path));
  }
  r.parameters()["builtin"] = o.builtin_name;
  r.parameters()["N"] = o.N;
  return builtin(BuiltinSpec::parse(o.builtin_name), o.N);
}

nlohmann::json stab_row(const StabResult& s) {
  return {{"J", subset_key(s.J)},        {"stab", s.stab_structure.to_string()}, {"target", s.target_structure.to_string()},
          {"surjective", s.surjective}, {"iso", s.iso}};
}

std::string stab_line(const StabResult& s) {
  return "{" + subset_key(s.J) + "}  " + s.stab_structure.to_string() + " -> " + s.target_structure.to_string() +
         (s.iso ? "  iso" : s.surjective ? "  onto" : "  not onto");
}

Report fimod_cmd(const std::string& op, const Options& o) {
  Report r("fimod " + op, nlohmann::json::object());
  const FIModulePresentation m = fimod_input(o, r);
  if (op == "show") {
    r.results()["module"] = m.to_json();
    r.line(m.to_json().dump(1));
    return r;
  }
  const ValidationReport v = validate(m);
  r.add("valid", v.valid, {{"checks", v.checks}, {"violation", v.violation}});
  if (!v.valid || op == "validate") {
    r.line(v.valid ? "valid (" + std::to_string(v.checks) + " checks)" : "invalid: " + v.violation);
    return r;
  }
  if (op == "stab") {
    std::vector<Subset> subsets;
    if (!o.J.empty()) {
      subsets.push_back(parse_subset_key(o.J));
      r.parameters()["J"] = o.J;
    } else {
      for (const auto& row : stability_start(m).rows) subsets.push_back(row.J);
    }
    nlohmann::json rows = nlohmann::json::array();
    for (Subset J : subsets) {
      if (J == 0 || J > m.full()) throw DomainError("J must be a nonempty subset of [N]");
      const StabResult s = central_stabilization(m, J);
      rows.push_back(stab_row(s));
      r.line(stab_line(s));
    }
    r.results()["table"] = rows;
  } else if (op == "gendeg") {
    const SweepValue gd = generation_degree(m);
    r.results()["generation_degree"] = gd.to_string();
    r.line(gd.to_string());
  } else {
    const StabilityTable t = stability_start(m);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& s : t.rows) {
      rows.push_back(stab_row(s));
      r.line(stab_line(s));
    }
    r.results()["table"] = rows;
    r.results()["stability_start"] = t.start.to_string();
    r.line("stability start " + t.start.to_string());
  }
  return r;
}

// ----------------------------------------------------------------------------------------------

std::string op_help(const std::string& family, const std::string& name) {
  static const std::map<std::string, std::string> help = {
      {"words reduce", "freely reduce a word"},
      {"words multiply", "product of two words"},
      {"words invert", "inverse of a word"},
      {"words commutator", "[a,b] = a^-1 b^-1 a b"},
      {"words exponents", "exponent sum of each generator"},
      {"words apply", "image of a word under --endo"},
      {"words compose", "--endo after --endo2"},
      {"words abelianize", "action of --endo on H_1"},
      {"words check", "check that --endo is an automorphism with the given inverse"},
      {"magnus expand", "truncated expansion up to --cap"},
      {"magnus weight", "lower central series weight"},
      {"magnus zweight", "Zassenhaus weight at the prime --p"},
      {"johnson tau", "tau_k of a composite of generators"},
      {"johnson tauhat", "tau_k followed by the projection to H (x) wedge^k H"},
      {"johnson weight", "largest k with the automorphism in the k-th Johnson term"},
      {"johnson certify", "lower-bound certificate for n = k+1 (or symplectic with --g)"},
      {"congruence gens", "level-p generators"},
      {"congruence check", "verify level, determinant and symplecticity of the generators"},
      {"congruence rank", "rank of the generator logarithms in sp_2g(F_p)"},
      {"fimod validate", "check the FI-module relations"},
      {"fimod stab", "central stabilization at every J, or at --J"},
      {"fimod gendeg", "generation degree within [N]"},
      {"fimod stabstart", "stability start within [N]"},
      {"fimod show", "print the presentation as JSON"},
  };
  const auto it = help.find(family + " " + name);
  return it == help.end() ? std::string() : it->second;
}

CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& help, std::string& chosen) {
  CLI::App* sub = parent->add_subcommand(name, help);
  sub->fallthrough();
  sub->callback([&chosen, name] { chosen = name; });
  return sub;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact workbench for free groups, Johnson homomorphisms, congruence generators and FI-modules",
               "workbench"};
  app.require_subcommand(1);
  app.add_option("--json", o.json_path, "write the JSON report to this path (- for stdout)");
  app.add_option("--seed", o.seed, "seed for mt19937_64 sampling");

  std::string family, op;
  auto family_cmd = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->require_subcommand(1);
    sub->fallthrough();
    sub->callback([&family, name] { family = name; });
    return sub;
  };

  // words
  CLI::App* words = family_cmd("words", "free group words and endomorphisms");
  for (const char* name : {"reduce", "multiply", "invert", "commutator", "exponents", "apply", "compose", "abelianize", "check"}) {
    CLI::App* s = leaf(words, name, op_help("words", name), op);
    s->add_option("words", o.words, "words such as 'x2^-1 x1 x2'");
    s->add_option("--n", o.n, "rank (default: largest index used)");
    s->add_option("--endo", o.endo_path, "endomorphism file");
    s->add_option("--endo2", o.endo2_path, "second endomorphism file for compose");
  }

  CLI::App* magnus = family_cmd("magnus", "truncated Magnus expansions and filtration weights");
  for (const char* name : {"expand", "weight", "zweight"}) {
    CLI::App* s = leaf(magnus, name, op_help("magnus", name), op);
    s->add_option("word", o.words, "word")->required();
    s->add_option("--n", o.n, "rank");
    s->add_option("--cap", o.cap, "degree cap")->check(CLI::Range(1, 64));
    s->add_option("--p", o.p, "prime modulus");
  }

  CLI::App* johnson = family_cmd("johnson", "Johnson homomorphisms and lower-bound certificates");
  for (const char* name : {"tau", "tauhat", "weight", "certify"}) {
    CLI::App* s = leaf(johnson, name, op_help("johnson", name), op);
    s->add_option("--n", o.n, "rank");
    s->add_option("--k", o.k, "filtration level")->check(CLI::Range(1, 32));
    s->add_option("--g", o.g, "genus (symplectic certificate)");
    s->add_option("--p", o.p, "prime for the Zassenhaus weight");
    s->add_option("--endo", o.endo_path, "automorphism file");
    s->add_option("--gen", o.gens, "generator spec such as c:1,2 or m:1,2,3 (repeatable, composed in order)");
    s->add_flag("--sample", o.sample, "sample an iterated commutator of generators");
    s->add_option("--support", o.support, "index set for --sample, e.g. 1,2,3");
    s->add_option("--depth", o.depth, "commutator depth for --sample (default k)");
    if (std::string(name) == "weight")
      s->add_option("--cap", o.cap, "degree cap");
    else
      s->add_option("--cap", o.jcap, "degree cap (default k+2)");
  }

  CLI::App* congruence = family_cmd("congruence", "level-p congruence generators");
  for (const char* name : {"gens", "check", "rank"}) {
    CLI::App* s = leaf(congruence, name, op_help("congruence", name), op);
    s->add_option("--group", o.group, "sl or sp");
    s->add_option("--n", o.n, "size for sl");
    s->add_option("--g", o.g, "genus for sp");
    s->add_option("--p", o.p, "prime level")->required();
  }

  CLI::App* fimod = family_cmd("fimod", "FI-module central stabilization");
  for (const char* name : {"validate", "stab", "gendeg", "stabstart", "show"}) {
    CLI::App* s = leaf(fimod, name, op_help("fimod", name), op);
    s->add_option("--in", o.in_path, "FI-module JSON file");
    s->add_option("--builtin", o.builtin_name, "constant, standard, exterior:m, tensor_wedge:k");
    s->add_option("--N", o.N, "size of the window [N]")->check(CLI::Range(0, kMaxFiN));
    s->add_option("--J", o.J, "single subset for stab, e.g. 1,2,3");
  }

  CLI::App* suite = app.add_subcommand("suite", "verification suites");
  suite->fallthrough();
  suite->add_option("name", op, "lowerbound, levelp, fistab, properties, all")->required();
  suite->add_option("--kmax", o.suite.kmax, "lower-bound certificates up to k")->check(CLI::Range(1, 10));
  suite->add_option("--symplectic-kmax", o.suite.symplectic_kmax, "symplectic certificates up to k")->check(CLI::Range(0, 8));
  suite->add_option("--gmax", o.suite.gmax, "largest genus")->check(CLI::Range(2, 12));
  suite->add_option("--nmax", o.suite.nmax, "largest n for generator lifts")->check(CLI::Range(3, 12));
  suite->add_option("--primes", o.primes, "comma-separated primes");
  suite->add_option("--N", o.suite.fi_N, "FI window")->check(CLI::Range(1, kMaxFiN));
  suite->callback([&family] { family = "suite"; });

  std::vector<const char*> argv{"workbench"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    if (const CLI::App* failed = app.get_subcommands().empty() ? &app : app.get_subcommands().front())
      err << "run with --help for usage (" << failed->get_name() << ")\n";
    return kExitUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  Report report;
  try {
    if (family == "words")
      report = words_cmd(op, o);
    else if (family == "magnus")
      report = magnus_cmd(op, o);
    else if (family == "johnson")
      report = johnson_cmd(op, o);
    else if (family == "congruence")
      report = congruence_cmd(op, o);
    else if (family == "fimod")
      report = fimod_cmd(op, o);
    else {
      o.suite.seed = o.seed;
      o.suite.primes = parse_list(o.primes);
      for (long p : o.suite.primes)
        if (!is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
      report = run_suite(op, o.suite);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitIo;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  report.set_elapsed_ms(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count());

  if (o.json_path == "-") {
    out << report.to_json().dump(2) << '\n';
  } else {
    out << report.to_text();
    if (!o.json_path.empty()) {
      std::ofstream f(o.json_path);
      if (!(f << report.to_json().dump(2) << '\n')) {
        err << "i/o error: cannot write '" << o.json_path << "'\n";
        return kExitIo;
      }
    }
  }
  return report.pass() ? kExitPass : kExitCheckFailed;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace workbench

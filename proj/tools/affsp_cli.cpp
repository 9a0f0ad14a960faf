#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "affsp/factorial.hpp"
#include "affsp/peterson.hpp"
#include "affsp/verify.hpp"

using namespace affsp;
using nlohmann::json;

namespace {

struct Config {
  int n = 2;
  int order = 8;
  unsigned seed = 1;
  bool json_out = false;
  bool timings = false;
  std::string out;
};

struct Output {
  json doc;
  std::string text;
  int code = 0;
};

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) {
      try {
        size_t used = 0;
        v.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw ParseError("bad integer " + tok);
      } catch (const std::logic_error&) {
        throw ParseError("bad integer " + tok);
      }
    }
  return v;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) v.push_back(tok);
  return v;
}

json checks_json(const std::vector<CheckResult>& cs) {
  json arr = json::array();
  for (const auto& c : cs) {
    json j = {{"name", c.name}, {"pass", c.ok}};
    if (c.cases) j["cases"] = c.cases;
    if (!c.ok) j["detail"] = c.detail;
    arr.push_back(j);
  }
  return arr;
}

std::string checks_text(const std::vector<CheckResult>& cs, const std::string& prefix = "") {
  std::string s;
  for (const auto& c : cs) {
    s += (c.ok ? "PASS " : "FAIL ") + prefix + c.name;
    if (c.cases) s += " [" + std::to_string(c.cases) + "]";
    if (!c.ok && !c.detail.empty()) s += " -- " + c.detail;
    s += "\n";
  }
  return s;
}

// w from a word, or from a strict partition through the folded w_lambda word
AffineWeylElt element_from(const std::string& word, const std::string& partition, int n,
                           bool have_word) {
  if (have_word) return AffineWeylElt::from_word(parse_ints(word), n);
  StrictPartition lam(parse_ints(partition));
  std::vector<int> folded;
  for (int d : w_lambda_word(lam)) folded.push_back(fold_residue(d, n));
  AffineWeylElt w = AffineWeylElt::from_word(folded, n);
  if (w.length() != lam.size() || !w.is_grassmannian() || lambda_w(w).lambda != lam)
    throw InvalidArgument("partition " + lam.to_string() + " is not a small class at rank " +
                          std::to_string(n));
  return w;
}

Output cmd_dual_affine_p(const Config& cfg, const std::string& word, const std::string& part,
                         bool have_word) {
  AffineWeylElt w = element_from(word, part, cfg.n, have_word);
  PSeries f = dual_affine_P(w, cfg.order);
  Output o;
  json words = w.reduced_word();
  o.doc = {{"command", "dual-affine-p"}, {"n", cfg.n},        {"order", cfg.order},
           {"word", words},              {"element", w.to_json()}, {"series", f.to_json()},
           {"expansion", f.to_string()}};
  o.text = f.to_string() + "\n";
  return o;
}

Output cmd_dual_p(const Config& cfg, const std::string& part) {
  StrictPartition lam(parse_ints(part));
  Ring R = a_ring(cfg.order + 2);
  PSeries f = dual_P(lam, a_values(R, cfg.order + 2), R, cfg.order);
  Output o;
  o.doc = {{"command", "dual-p"},
           {"partition", lam.parts},
           {"order", cfg.order},
           {"series", f.to_json()},
           {"expansion", f.to_string()}};
  o.text = f.to_string() + "\n";
  return o;
}

Output cmd_qhat(const Config& cfg, int i, const std::string& cs, bool periodic) {
  Ring R = periodic ? a_ring(cfg.n) : a_ring(cfg.order + 2);
  std::vector<CoeffPoly> c;
  for (const auto& t : split(cs)) c.push_back(parse_poly(R, t));
  auto a = periodic ? a_periodic(R, cfg.n, cfg.order + 2) : a_values(R, cfg.order + 2);
  PSeries f = qhat(i, c, R, cfg.order);
  json dual = json::array();
  std::string text;
  for (const auto& [mu, x] : expand_in_dualP(f, a)) {
    dual.push_back({{"partition", mu.parts}, {"coeff", x.to_json()}});
    if (!text.empty()) text += " + ";
    text += "(" + x.to_string() + ")*Phat" + mu.to_string();
  }
  Output o;
  o.doc = {{"command", "qhat"}, {"i", i},           {"order", cfg.order},
           {"periodic", periodic}, {"series", f.to_json()}, {"dual_p", dual}};
  if (periodic) o.doc["n"] = cfg.n;
  o.text = (text.empty() ? "0" : text) + "\n";
  return o;
}

Output cmd_structure_constants(const Config& cfg, int maxlen) {
  if (cfg.n > 3) throw InvalidArgument("structure constants need n <= 3");
  Ring R = a_ring(cfg.n);
  JTable tab(R, cfg.n);
  auto ws = enumerate_grassmannian(cfg.n, maxlen);
  json table = json::array();
  std::string text;
  bool commutative = true;
  for (const auto& u : ws)
    for (const auto& v : ws) {
      auto c = structure_constants(tab.get(u), v);
      if (c != structure_constants(tab.get(v), u)) commutative = false;
      for (const auto& [w, x] : c) {
        table.push_back({{"u", u.reduced_word()},
                         {"v", v.reduced_word()},
                         {"w", w.reduced_word()},
                         {"coeff", x.to_json()}});
        text += u.to_string() + " * " + v.to_string() + " -> " + w.to_string() + ": " +
                x.to_string() + "\n";
      }
    }
  Output o;
  o.doc = {{"command", "structure-constants"}, {"n", cfg.n}, {"maxlen", maxlen},
           {"commutative", commutative},        {"table", table}};
  o.text = text + "commutative: " + (commutative ? "true" : "false") + "\n";
  o.code = commutative ? 0 : 1;
  return o;
}

Output cmd_centralizer(const Config& cfg, const std::string& check) {
  std::vector<std::pair<std::string, std::function<std::vector<CheckResult>()>>> groups;
  int n = cfg.n;
  if (check == "all" || check == "relations")
    groups.push_back({"relations", [=] { return check_presentation(n); }});
  if (check == "all" || check == "groebner")
    groups.push_back({"groebner", [=] { return check_groebner(n, 6, cfg.seed); }});
  if (check == "all" || check == "beta")
    groups.push_back({"beta", [=] { return check_beta(n, cfg.order); }});
  if (check == "all" || check == "matrices")
    groups.push_back({"matrices", [=] { return check_matrix_families(n); }});
  if (groups.empty()) throw InvalidArgument("unknown check " + check);
  Output o;
  json items = json::array();
  bool ok = true;
  for (auto& [name, f] : groups) {
    auto t0 = std::chrono::steady_clock::now();
    auto cs = f();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json it = {{"name", name}, {"checks", checks_json(cs)}};
    if (cfg.timings) it["seconds"] = secs;
    items.push_back(it);
    o.text += checks_text(cs, name + ": ");
    for (const auto& c : cs) ok = ok && c.ok;
  }
  o.doc = {{"command", "centralizer"}, {"n", n},     {"order", cfg.order},
           {"seed", cfg.seed},         {"pass", ok}, {"items", items}};
  o.code = ok ? 0 : 1;
  return o;
}

Output cmd_verify(const Config& cfg, const std::string& suite) {
  SuiteReport rep = run_suite(suite, cfg.n, cfg.order, cfg.seed);
  Output o;
  json items = json::array();
  o.text = "suite " + rep.suite + ": " + rep.statement + "\n";
  std::string first_failure;
  for (const auto& it : rep.items) {
    json j = {{"name", it.name}, {"pass", it.ok()}, {"checks", checks_json(it.checks)}};
    if (cfg.timings) j["seconds"] = it.seconds;
    items.push_back(j);
    o.text += checks_text(it.checks, it.name + ": ");
    for (const auto& c : it.checks)
      if (!c.ok && first_failure.empty()) first_failure = it.name + ": " + c.name + " " + c.detail;
  }
  o.doc = {{"command", "verify"}, {"suite", rep.suite}, {"statement", rep.statement},
           {"n", cfg.n},          {"order", cfg.order}, {"seed", cfg.seed},
           {"pass", rep.ok()},    {"items", items}};
  o.text += std::string(rep.ok() ? "PASS" : "FAIL") + " " + rep.suite + "\n";
  if (!rep.ok()) {
    o.doc["first_failure"] = first_failure;
    std::cerr << "first failure: " << first_failure << "\n";
  }
  o.code = rep.ok() ? 0 : 1;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant homology of the affine Grassmannian of Sp(2n)"};
  app.require_subcommand(1);
  Config cfg;
  auto add_globals = [&](CLI::App* c) {
    c->add_option("--n", cfg.n, "rank")->check(CLI::PositiveNumber);
    c->add_option("--order", cfg.order, "truncation order")->check(CLI::PositiveNumber);
    c->add_option("--seed", cfg.seed, "seed for specializations");
    c->add_flag("--json", cfg.json_out, "JSON output");
    c->add_flag("--timings", cfg.timings, "include timings in reports");
    c->add_option("--out", cfg.out, "write output to a file");
  };
  add_globals(&app);

  std::string word, partition, cs, check = "all", suite;
  int qi = 1, maxlen = 4;
  bool periodic = false;

  auto* dap = app.add_subcommand("dual-affine-p", "P-hat_w^(n) as a series in the P basis");
  add_globals(dap);
  auto* wopt = dap->add_option("--word", word, "reduced word, comma separated");
  auto* popt = dap->add_option("--partition", partition, "strict partition of a small class");
  wopt->excludes(popt);
  popt->excludes(wopt);

  auto* dp = app.add_subcommand("dual-p", "P-hat_lambda(y|a) in the P basis");
  add_globals(dp);
  dp->add_option("--partition", partition, "strict partition")->required();

  auto* qh = app.add_subcommand("qhat", "q-hat_i(y|c) and its dual P expansion");
  add_globals(qh);
  qh->add_option("--i", qi, "index")->check(CLI::NonNegativeNumber);
  qh->add_option("--c", cs, "comma separated polynomials in a1, a2, ...");
  qh->add_flag("--periodic", periodic, "expand at the rank-n periodic a-sequence");

  auto* sc = app.add_subcommand("structure-constants", "j-basis structure constants");
  add_globals(sc);
  sc->add_option("--maxlen", maxlen, "largest length")->check(CLI::NonNegativeNumber);

  auto* cz = app.add_subcommand("centralizer", "checks on the centralizer family");
  add_globals(cz);
  cz->add_option("--check", check, "all, relations, groebner, beta or matrices");

  auto* vf = app.add_subcommand("verify", "run a verification suite");
  add_globals(vf);
  vf->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Output o;
  try {
    if (*dap) {
      if (!*wopt && !*popt) throw InvalidArgument("give --word or --partition");
      o = cmd_dual_affine_p(cfg, word, partition, bool(*wopt));
    } else if (*dp) {
      o = cmd_dual_p(cfg, partition);
    } else if (*qh) {
      o = cmd_qhat(cfg, qi, cs, periodic);
    } else if (*sc) {
      o = cmd_structure_constants(cfg, maxlen);
    } else if (*cz) {
      o = cmd_centralizer(cfg, check);
    } else if (*vf) {
      o = cmd_verify(cfg, suite);
    }
  } catch (const InvalidArgument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const NotGrassmannian& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  std::string body = cfg.json_out ? o.doc.dump(2) + "\n" : o.text;
  if (cfg.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << cfg.out << "\n";
      return 2;
    }
    f << body;
  }
  return o.code;
}

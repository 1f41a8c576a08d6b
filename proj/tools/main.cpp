// Command-line front end: crystal generation and decomposition, statistics on
// tableau files, LR enumeration, the matrix correspondence, characters, and
// the full verification battery. Exit codes: 0 success, 1 a check failed,
// 2 usage or validation error.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tabcrys/charfn.hpp"
#include "tabcrys/core.hpp"
#include "tabcrys/crystal.hpp"
#include "tabcrys/lr.hpp"
#include "tabcrys/rsk.hpp"
#include "tabcrys/stats.hpp"
#include "tabcrys/tableau.hpp"
#include "tabcrys/verify.hpp"

namespace {

using namespace tabcrys;

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << std::endl;
  return 2;
}

// -t b|c and --epsilon 1|2 are interchangeable spellings of the same choice.
struct EpsChoice {
  std::string type;
  int eps = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("-t,--type", type, "family tag: b (eps=1) or c (eps=2)")
        ->check(CLI::IsMember({"b", "c"}));
    cmd->add_option("--epsilon", eps, "scaling: 1 or 2")->check(CLI::IsMember({1, 2}));
  }
  // 0 when unset or -1 on a contradiction.
  int resolve() const {
    int from_type = type.empty() ? 0 : (type == "b" ? 1 : 2);
    if (from_type && eps && from_type != eps) return -1;
    return from_type ? from_type : eps;
  }
};

std::optional<int> need_eps(const EpsChoice& c, int& rc) {
  int e = c.resolve();
  if (e == -1) {
    rc = usage_error("-t and --epsilon disagree");
    return std::nullopt;
  }
  if (e == 0) {
    rc = usage_error("one of -t b|c or --epsilon 1|2 is required");
    return std::nullopt;
  }
  return e;
}

std::optional<Partition> need_partition(const std::string& text, const char* flag, int& rc) {
  auto p = Partition::parse(text);
  if (!p) {
    rc = usage_error(std::string(flag) + ": not a partition: '" + text + "'");
    return std::nullopt;
  }
  return p;
}

std::optional<std::string> read_file(const std::string& path, int& rc) {
  std::ifstream in(path);
  if (!in) {
    rc = usage_error("cannot open file: " + path);
    return std::nullopt;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.pop_back();
  }
  return text;
}

bool check_format(const std::string& fmt, const std::vector<std::string>& allowed, int& rc) {
  for (const auto& a : allowed) {
    if (fmt == a) return true;
  }
  std::string join;
  for (const auto& a : allowed) join += (join.empty() ? "" : "|") + a;
  rc = usage_error("-o must be one of " + join + " here");
  return false;
}

int print_check(const CheckResult& res) {
  std::cout << res.name << ": " << (res.pass ? "PASS" : "FAIL") << " - " << res.detail
            << std::endl;
  return res.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* tv = std::getenv("CRYSTAL_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(tv, &end, 10);
    if (*tv == '\0' || *end != '\0' || v < 1 || v > 4096) {
      return usage_error("CRYSTAL_THREADS must be a positive integer (the current "
                         "implementation runs single-threaded and only validates the cap)");
    }
  }

  CLI::App app{"Tableau model of the two scaled families of highest-weight crystals"};
  app.require_subcommand(1);
  std::function<int()> action;

  // ---- crystal ------------------------------------------------------------
  auto* crystal = app.add_subcommand("crystal", "generate, decompose, branch");
  crystal->require_subcommand(1);

  struct {
    EpsChoice eps;
    int k = 2;
    std::string lambda;
    long long n = 1;
    std::string format = "text";
  } gr;
  auto* graph = crystal->add_subcommand("graph", "generate one crystal graph");
  gr.eps.attach(graph);
  graph->add_option("-k,--rank", gr.k, "rank (number of operator indices)")->required();
  graph->add_option("--lambda", gr.lambda, "shape, e.g. 3,1 (0 for empty)")->required();
  graph->add_option("-n,--level", gr.n, "level")->required();
  graph->add_option("-o,--output", gr.format, "text|json|dot");
  graph->callback([&] {
    action = [&]() -> int {
      int rc = 0;
      auto eps = need_eps(gr.eps, rc);
      if (!eps) return rc;
      auto lam = need_partition(gr.lambda, "--lambda", rc);
      if (!lam) return rc;
      if (!check_format(gr.format, {"text", "json", "dot"}, rc)) return rc;
      if (gr.k < 1) return usage_error("-k must be at least 1");
      if (!in_weight_family(*lam, gr.n, *eps)) {
        return usage_error("(lambda, n) outside the weight family: need 2*lambda_1 <= eps*n");
      }
      if (lam->length() > gr.k) {
        return usage_error("shape too long for the rank: need length(lambda) <= k");
      }
      CrystalGraph g = generate_crystal(*lam, gr.n, *eps, gr.k);
      if (gr.format == "dot") {
        std::cout << g.to_dot();
      } else if (gr.format == "json") {
        std::cout << g.to_json() << "\n";
      } else {
        std::cout << "vertices: " << g.vertices.size() << "\n";
        std::cout << "edges: " << g.edges.size() << "\n";
        for (std::size_t v = 0; v < g.vertices.size(); ++v) {
          std::cout << "v" << v << ": " << g.vertices[v].key() << "\n";
        }
        for (const CrystalEdge& e : g.edges) {
          std::cout << "v" << e.from << " -" << e.i << "-> v" << e.to << "\n";
        }
      }
      return 0;
    };
  });

  struct {
    EpsChoice eps;
    int k = 2;
    std::string mu, nu;
    long long m = 1, n = 1;
    std::string format = "text";
  } tn;
  auto* tensor = crystal->add_subcommand("tensor", "decompose a tensor square family");
  tn.eps.attach(tensor);
  tensor->add_option("-k,--rank", tn.k, "rank")->required();
  tensor->add_option("--mu", tn.mu, "left shape")->required();
  tensor->add_option("-m,--left-level", tn.m, "left level")->required();
  tensor->add_option("--nu", tn.nu, "right shape")->required();
  tensor->add_option("-n,--level", tn.n, "right level")->required();
  tensor->add_option("-o,--output", tn.format, "text|json");
  tensor->callback([&] {
    action = [&]() -> int {
      int rc = 0;
      auto eps = need_eps(tn.eps, rc);
      if (!eps) return rc;
      auto mu = need_partition(tn.mu, "--mu", rc);
      if (!mu) return rc;
      auto nu = need_partition(tn.nu, "--nu", rc);
      if (!nu) return rc;
      if (!check_format(tn.format, {"text", "json"}, rc)) return rc;
      if (!in_weight_family(*mu, tn.m, *eps) || !in_weight_family(*nu, tn.n, *eps)) {
        return usage_error("each factor needs 2*first_part <= eps*level");
      }
      if (mu->length() > tn.k || nu->length() > tn.k) {
        return usage_error("shape too long for the rank: need length <= k");
      }
      auto dec = tensor_decompose(*mu, tn.m, *nu, tn.n, *eps, tn.k);
      if (tn.format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& [lam, mult] : dec) {
          out.push_back({{"lambda", lam.to_string()}, {"multiplicity", mult}});
        }
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& [lam, mult] : dec) {
          std::cout << lam.to_string() << ": " << mult << "\n";
        }
        std::cout << "components: " << dec.size() << "\n";
      }
      return 0;
    };
  });

  struct {
    EpsChoice eps;
    std::string sigma, lambda;
    long long n = 1;
    std::string format = "text";
  } br;
  auto* branch = crystal->add_subcommand("branch", "multiplicity of a Levi component");
  br.eps.attach(branch);
  branch->add_option("--sigma", br.sigma, "component shape")->required();
  branch->add_option("--lambda", br.lambda, "crystal shape")->required();
  branch->add_option("-n,--level", br.n, "level")->required();
  branch->add_option("-o,--output", br.format, "text|json");
  branch->callback([&] {
    action = [&]() -> int {
      int rc = 0;
      auto eps = need_eps(br.eps, rc);
      if (!eps) return rc;
      auto sig = need_partition(br.sigma, "--sigma", rc);
      if (!sig) return rc;
      auto lam = need_partition(br.lambda, "--lambda", rc);
      if (!lam) return rc;
      if (!check_format(br.format, {"text", "json"}, rc)) return rc;
      if (!in_weight_family(*lam, br.n, *eps)) {
        return usage_error("(lambda, n) outside the weight family: need 2*lambda_1 <= eps*n");
      }
      auto wits = branch_levi(*sig, *lam, br.n, *eps);
      if (br.format == "json") {
        nlohmann::json out;
        out["multiplicity"] = wits.size();
        out["witnesses"] = nlohmann::json::array();
        for (const Tableau& t : wits) out["witnesses"].push_back(t.canonical());
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "multiplicity: " << wits.size() << "\n";
        for (const Tableau& t : wits) std::cout << t.canonical() << "\n";
      }
      return 0;
    };
  });

  // ---- stat ---------------------------------------------------------------
  auto* stat = app.add_subcommand("stat", "statistics of a tableau file");
  stat->require_subcommand(1);
  struct {
    EpsChoice eps;
    std::string file;
  } sd, sn;
  auto* sdelta = stat->add_subcommand("delta", "weighted decreasing-chain statistic");
  sd.eps.attach(sdelta);
  sdelta->add_option("-f,--file", sd.file, "tableau file (text format)")->required();
  sdelta->callback([&] {
    action = [&]() -> int {
      int rc = 0;
      auto eps = need_eps(sd.eps, rc);
      if (!eps) return rc;
      auto text = read_file(sd.file, rc);
      if (!text) return rc;
      auto t = Tableau::from_text(*text);
      if (!t) return usage_error("not a tableau file: " + sd.file);
      if (!is_eps_scaled(t->inner(), *eps)) {
        return usage_error("inner shape must be eps-scaled for an integral value");
      }
      std::cout << delta(*t, *eps).to_string() << std::endl;
      return 0;
    };
  });
  auto* snabla = stat->add_subcommand("nabla", "zero-node raise count of the straightening");
  sn.eps.attach(snabla);
  snabla->add_option("-f,--file", sn.file, "tableau file (text format)")->required();
  snabla->callback([&] {
    action = [&]() -> int {
      int rc = 0;
      auto eps = need_eps(sn.eps, rc);
      if (!eps) return rc;
      auto text = read_file(sn.file, rc);
      if (!text) return rc;
      auto t = Tableau::from_text(*text);
      if (!t) return usage_error("not a tableau file: " + sn.file);
      if (!is_lr(*t)) return usage_error("nabla needs a lattice (LR) filling");
      if (!is_eps_scaled(content_partition(*t), *eps)) {
        return usage_error("nabla needs an eps-scaled content");
      }
      std::cout << nabla(*t, *eps) << std::endl;
      return 0;
    };
  });

  // ---- lr -----------------------------------------------------------------
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson data");
  lr->require_subcommand(1);
  struct {
    std::string lambda, mu, nu;
    std::string format = "text";
  } lc, le;
  auto* coeff = lr->add_subcommand("coeff", "coefficient c^lambda_{mu,nu}");
  coeff->add_option("--lambda", lc.lambda, "outer shape")->required();
  coeff->add_option("--mu", lc.mu, "inner shape")->required();
  coeff->add_option("--nu", lc.nu, "content")->required();
  coeff->callback([&] {
    action = [&]() -> int {
      int rc = 0;
      auto lam = need_partition(lc.lambda, "--lambda", rc);
      if (!lam) return rc;
      auto mu = need_partition(lc.mu, "--mu", rc);
      if (!mu) return rc;
      auto nu = need_partition(lc.nu, "--nu", rc);
      if (!nu) return rc;
      std::cout << lr_coefficient(*lam, *mu, *nu) << std::endl;
      return 0;
    };
  });
  auto* enumerate = lr->add_subcommand("enumerate", "list the LR tableaux");
  enumerate->add_option("--lambda", le.lambda, "outer shape")->required();
  enumerate->add_option("--mu", le.mu, "inner shape")->required();
  enumerate->add_option("--nu", le.nu, "content")->required();
  enumerate->add_option("-o,--output", le.format, "text|json");
  enumerate->callback([&] {
    action = [&]() -> int {
      int rc = 0;
      auto lam = need_partition(le.lambda, "--lambda", rc);
      if (!lam) return rc;
      auto mu = need_partition(le.mu, "--mu", rc);
      if (!mu) return rc;
      auto nu = need_partition(le.nu, "--nu", rc);
      if (!nu) return rc;
      if (!check_format(le.format, {"text", "json"}, rc)) return rc;
      auto all = enumerate_lr(*lam, *mu, *nu);
      if (le.format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const Tableau& t : all) out.push_back(nlohmann::json::parse(t.to_json()));
        std::cout << out.dump(2) << "\n";
      } else {
        for (const Tableau& t : all) std::cout << t.canonical() << "\n";
        std::cout << "count: " << all.size() << "\n";
      }
      return 0;
    };
  });

  // ---- rsk ----------------------------------------------------------------
  auto* rskc = app.add_subcommand("rsk", "the matrix correspondence");
  rskc->require_subcommand(1);
  struct {
    std::string file;
    std::string format = "text";
  } rm;
  struct {
    std::uint64_t seed = 7;
  } rk;
  auto* rmap = rskc->add_subcommand("map", "apply the correspondence to a matrix file");
  rmap->add_option("-f,--file", rm.file, "matrix file: lines 'i -j count'")->required();
  rmap->add_option("-o,--output", rm.format, "text|json");
  rmap->callback([&] {
    action = [&]() -> int {
      int rc = 0;
      auto text = read_file(rm.file, rc);
      if (!text) return rc;
      auto a = SupportMatrix::parse(*text);
      if (!a) return usage_error("not a matrix file: " + rm.file);
      if (!check_format(rm.format, {"text", "json"}, rc)) return rc;
      BiTableau b = rsk(*a);
      if (rm.format == "json") {
        nlohmann::json out;
        out["P"] = nlohmann::json::parse(b.P.to_json());
        out["Q"] = nlohmann::json::parse(b.Q.to_json());
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "P: " << b.P.canonical() << "\n";
        std::cout << "Q: " << b.Q.canonical() << "\n";
      }
      return 0;
    };
  });
  auto* rcheck = rskc->add_subcommand("check", "round trips and operator commutation");
  rcheck->add_option("--seed", rk.seed, "RNG seed");
  rcheck->callback([&] {
    action = [&]() -> int {
      auto res = run_check("matrix-correspondence", rk.seed);
      return res ? print_check(*res) : 1;
    };
  });

  // ---- char ---------------------------------------------------------------
  auto* chr = app.add_subcommand("char", "characters over finite alphabets");
  chr->require_subcommand(1);
  struct {
    std::string lambda;
    std::string mu = "0";
    int letters = 2;
    int odd = 0;
    std::string format = "text";
  } cs;
  struct {
    EpsChoice eps;
    std::string lambda;
    long long n = 1;
    int letters = 2;
    int odd = 0;
    int degree = 6;
    std::string format = "text";
  } cx;
  struct {
    std::uint64_t seed = 7;
  } cv;
  auto* schur = chr->add_subcommand("schur", "super Schur polynomial of a (skew) shape");
  schur->add_option("--lambda", cs.lambda, "outer shape")->required();
  schur->add_option("--mu", cs.mu, "inner shape (default empty)");
  schur->add_option("-k,--letters", cs.letters, "number of even letters");
  schur->add_option("--odd", cs.odd, "number of odd letters appended");
  schur->add_option("-o,--output", cs.format, "text|json");
  schur->callback([&] {
    action = [&]() -> int {
      int rc = 0;
      auto lam = need_partition(cs.lambda, "--lambda", rc);
      if (!lam) return rc;
      auto mu = need_partition(cs.mu, "--mu", rc);
      if (!mu) return rc;
      if (!check_format(cs.format, {"text", "json"}, rc)) return rc;
      if (cs.letters < 0 || cs.odd < 0 || cs.letters + cs.odd < 1) {
        return usage_error("need at least one letter");
      }
      CharacterPoly p = super_schur(*lam, *mu, GradedAlphabet::split(cs.letters, cs.odd));
      std::cout << (cs.format == "json" ? p.to_json() : p.to_string()) << "\n";
      return 0;
    };
  });
  auto* sx = chr->add_subcommand("sx", "level-graded character, truncated by degree");
  cx.eps.attach(sx);
  sx->add_option("--lambda", cx.lambda, "shape")->required();
  sx->add_option("-n,--level", cx.n, "level")->required();
  sx->add_option("-k,--letters", cx.letters, "number of even letters");
  sx->add_option("--odd", cx.odd, "number of odd letters appended");
  sx->add_option("-D,--degree", cx.degree, "total degree cutoff");
  sx->add_option("-o,--output", cx.format, "text|json");
  sx->callback([&] {
    action = [&]() -> int {
      int rc = 0;
      auto eps = need_eps(cx.eps, rc);
      if (!eps) return rc;
      auto lam = need_partition(cx.lambda, "--lambda", rc);
      if (!lam) return rc;
      if (!check_format(cx.format, {"text", "json"}, rc)) return rc;
      if (cx.letters < 0 || cx.odd < 0 || cx.letters + cx.odd < 1) {
        return usage_error("need at least one letter");
      }
      if (cx.degree < 0) return usage_error("-D must be nonnegative");
      if (!in_weight_family(*lam, cx.n, *eps)) {
        return usage_error("(lambda, n) outside the weight family: need 2*lambda_1 <= eps*n");
      }
      CharacterPoly p = super_character_Sx(*lam, cx.n, *eps,
                                           GradedAlphabet::split(cx.letters, cx.odd), cx.degree);
      std::cout << (cx.format == "json" ? p.to_json() : p.to_string()) << "\n";
      return 0;
    };
  });
  auto* cverify = chr->add_subcommand("verify", "branching/product/series identities");
  cverify->add_option("--seed", cv.seed, "RNG seed (unused; identities are deterministic)");
  cverify->callback([&] {
    action = [&]() -> int {
      auto res = run_check("character-identities", cv.seed);
      return res ? print_check(*res) : 1;
    };
  });

  // ---- verify ---------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "the acceptance battery");
  verify->require_subcommand(1);
  struct {
    std::uint64_t seed = 7;
  } va;
  auto* vall = verify->add_subcommand("all", "run every check");
  vall->add_option("--seed", va.seed, "RNG seed");
  vall->callback([&] {
    action = [&]() -> int {
      int failures = 0;
      for (const CheckResult& res : run_acceptance(va.seed)) failures += print_check(res);
      return failures == 0 ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return action ? action() : usage_error("no command selected");
}

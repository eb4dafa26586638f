// Command-line front end: one request per invocation.

#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "kschur/cache.hpp"
#include "kschur/cores.hpp"
#include "kschur/dual.hpp"
#include "kschur/errors.hpp"
#include "kschur/io.hpp"
#include "kschur/kschur.hpp"
#include "kschur/ktableaux.hpp"
#include "kschur/quantum.hpp"
#include "kschur/selftest.hpp"

using namespace kschur;
using nlohmann::json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInternal = 4;

struct Options {
  std::optional<int> k, l, n, degree;
  bool json = false;
  int budget = 14;
  bool force = false;
  std::string cache_dir;
};

int need(const std::optional<int>& v, const char* flag) {
  if (!v) fail_precondition(std::string("missing required flag ") + flag);
  return *v;
}

void check_budget(const Options& o, int size, const std::string& what) {
  if (o.force || size <= o.budget) return;
  fail_precondition(what + " " + std::to_string(size) + " exceeds the budget " +
                    std::to_string(o.budget) + " (raise --budget or pass --force)");
}

void print_poly(const Options& o, const SymPoly& f) {
  if (o.json)
    std::cout << sympoly_to_json(f).dump() << '\n';
  else
    std::cout << format_sympoly(f) << '\n';
}

void print_count(const Options& o, const Integer& c) {
  if (o.json)
    std::cout << json{{"count", c.str()}}.dump() << '\n';
  else
    std::cout << c << '\n';
}

void print_partitions(const Options& o, const std::vector<Partition>& ps) {
  if (o.json) {
    json arr = json::array();
    for (const auto& p : ps) arr.push_back(p.parts());
    std::cout << arr.dump() << '\n';
    return;
  }
  for (const auto& p : ps) std::cout << to_string(p) << '\n';
}

void print_bool(const Options& o, const char* name, bool v) {
  if (o.json)
    std::cout << json{{name, v}}.dump() << '\n';
  else
    std::cout << (v ? "true" : "false") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-Schur functions, k-tableaux, Gromov-Witten invariants and fusion rules"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--k", o.k, "bound k");
  app.add_option("--l", o.l, "Grassmannian parameter l (or strip size for pieri)");
  app.add_option("--n", o.n, "Grassmannian parameter n");
  app.add_option("--degree", o.degree, "degree");
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_option("--budget", o.budget, "largest joint degree accepted")->capture_default_str();
  app.add_flag("--force", o.force, "ignore the budget");
  app.add_option("--cache-dir", o.cache_dir, "Kostka cache directory ('off' disables)");

  std::string a_text, b_text;
  std::function<void()> action;
  auto with_pair = [&](CLI::App* sub) {
    sub->add_option("lambda", a_text, "first partition, e.g. [2,1]")->required();
    sub->add_option("mu", b_text, "second partition")->required();
  };
  auto with_one = [&](CLI::App* sub) {
    sub->add_option("lambda", a_text, "partition, e.g. [2,1]")->required();
  };
  auto A = [&] { return parse_partition(a_text); };
  auto B = [&] { return parse_partition(b_text); };

  auto* kostka = app.add_subcommand("kostka", "k-Kostka matrix and its inverse at --k, --degree");
  kostka->callback([&] {
    action = [&] {
      const int k = need(o.k, "--k"), d = need(o.degree, "--degree");
      check_budget(o, d, "degree");
      const auto m = kostka_matrix(k, d);
      if (o.json) {
        std::cout << kostka_to_json(*m) << '\n';
        return;
      }
      std::cout << "index:";
      for (const auto& p : m->index) std::cout << ' ' << to_string(p);
      std::cout << '\n';
      for (const auto* mat : {&m->forward, &m->inverse}) {
        std::cout << (mat == &m->forward ? "K:\n" : "Kbar:\n");
        for (const auto& row : *mat) {
          for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << row[j];
          std::cout << '\n';
        }
      }
    };
  });

  auto* ks = app.add_subcommand("kschur", "k-Schur function in the h basis");
  with_one(ks);
  ks->callback([&] {
    action = [&] {
      const Partition p = A();
      check_budget(o, p.degree(), "degree");
      print_poly(o, kschur_in_h(p, need(o.k, "--k")));
    };
  });

  auto* hx = app.add_subcommand("hexpand", "h_lambda in the k-Schur basis");
  with_one(hx);
  hx->callback([&] {
    action = [&] {
      const Partition p = A();
      check_budget(o, p.degree(), "degree");
      print_poly(o, h_in_kschur(p, need(o.k, "--k")));
    };
  });

  auto* pieri = app.add_subcommand("pieri", "k-Pieri set for h_l times s^(k)_nu");
  with_one(pieri);
  pieri->callback([&] {
    action = [&] {
      const Partition p = A();
      const int l = need(o.l, "--l");
      check_budget(o, p.degree() + l, "joint degree");
      print_partitions(o, k_pieri_set(p, l, need(o.k, "--k")));
    };
  });

  auto* klr_cmd = app.add_subcommand("klr", "k-Littlewood-Richardson coefficients");
  with_pair(klr_cmd);
  klr_cmd->callback([&] {
    action = [&] {
      const Partition a = A(), b = B();
      check_budget(o, a.degree() + b.degree(), "joint degree");
      print_poly(o, klr(a, b, need(o.k, "--k")));
    };
  });

  auto* dual = app.add_subcommand("dual", "dual k-Schur function in the m basis");
  with_one(dual);
  dual->callback([&] {
    action = [&] {
      const Partition p = A();
      check_budget(o, p.degree(), "degree");
      print_poly(o, dual_kschur_in_m(p, need(o.k, "--k")));
    };
  });

  bool in_dual = false;
  auto* skewdual = app.add_subcommand("skewdual", "skew dual k-Schur function nu/mu");
  with_pair(skewdual);
  skewdual->add_flag("--in-dual", in_dual, "expand in dual k-Schur functions instead of m");
  skewdual->callback([&] {
    action = [&] {
      const Partition nu = A(), mu = B();
      check_budget(o, nu.degree(), "degree");
      const int k = need(o.k, "--k");
      print_poly(o, in_dual ? skew_dual_in_dual(nu, mu, k) : skew_dual_in_m(nu, mu, k));
    };
  });

  auto* dcoef = app.add_subcommand("dcoef", "d-coefficients of a dual k-Schur product");
  with_pair(dcoef);
  dcoef->callback([&] {
    action = [&] {
      const Partition a = A(), b = B();
      check_budget(o, a.degree() + b.degree(), "joint degree");
      print_poly(o, d_coefficients(a, b, need(o.k, "--k")));
    };
  });

  auto* gw = app.add_subcommand("gw", "Gromov-Witten invariants of Gr(l, n)");
  with_pair(gw);
  bool oracle = false;
  gw->add_flag("--oracle", oracle, "use the quotient-ring oracle instead");
  gw->callback([&] {
    action = [&] {
      const Partition a = A(), b = B();
      check_budget(o, a.degree() + b.degree(), "joint degree");
      const int l = need(o.l, "--l"), n = need(o.n, "--n");
      const GWExpansion g = oracle ? quantum_product_oracle(a, b, l, n) : gw_invariants(a, b, l, n);
      if (o.json)
        std::cout << gw_to_json(g).dump() << '\n';
      else
        std::cout << to_string(g);
    };
  });

  auto* fus = app.add_subcommand("fusion", "fusion coefficients of su(l) at level n-l");
  with_pair(fus);
  fus->callback([&] {
    action = [&] {
      const Partition a = A(), b = B();
      check_budget(o, a.degree() + b.degree(), "joint degree");
      const FusionTerms f = fusion(a, b, need(o.l, "--l"), need(o.n, "--n"));
      if (o.json) {
        std::cout << fusion_to_json(f).dump() << '\n';
        return;
      }
      for (const auto& [nu, c] : f) std::cout << to_string(nu) << ": " << c << '\n';
    };
  });

  bool inverse = false;
  auto* core = app.add_subcommand("core", "(k+1)-core of a k-bounded partition");
  with_one(core);
  core->add_flag("--inverse", inverse, "map a (k+1)-core back to its k-bounded partition");
  core->callback([&] {
    action = [&] {
      const Partition p = A();
      const int k = need(o.k, "--k");
      if (inverse) {
        const Partition q = from_core(CoreShape(p, k + 1), k);
        if (o.json)
          std::cout << json{{"partition", q.parts()}}.dump() << '\n';
        else
          std::cout << to_string(q) << '\n';
        return;
      }
      check_budget(o, p.degree(), "degree");
      const SkewShape s = k_skew(p, k);
      if (o.json)
        std::cout << json{{"core", s.outer().parts()}, {"inner", s.inner().parts()}}.dump() << '\n';
      else
        std::cout << "core: " << to_string(s.outer()) << "\ninner: " << to_string(s.inner()) << '\n';
    };
  });

  auto* conj = app.add_subcommand("conj", "k-conjugate (ordinary conjugate without --k)");
  with_one(conj);
  conj->callback([&] {
    action = [&] {
      const Partition p = A();
      check_budget(o, p.degree(), "degree");
      const Partition q = o.k ? k_conjugate(p, *o.k) : conjugate(p);
      if (o.json)
        std::cout << json{{"partition", q.parts()}}.dump() << '\n';
      else
        std::cout << to_string(q) << '\n';
    };
  });

  std::string shape_text, inner_text, weight_text;
  bool count_only = false;
  auto* tab = app.add_subcommand("tableaux", "k-tableaux of a (k+1)-core shape and k-weight");
  tab->add_option("--shape", shape_text, "outer (k+1)-core")->required();
  tab->add_option("--inner", inner_text, "inner (k+1)-core for skew tableaux");
  tab->add_option("--weight", weight_text, "k-weight, e.g. [1,3,1,2,1,1]")->required();
  tab->add_flag("--count", count_only, "print only the number of tableaux");
  tab->callback([&] {
    action = [&] {
      const int k = need(o.k, "--k");
      const CoreShape outer(parse_partition(shape_text), k + 1);
      const CoreShape inner(inner_text.empty() ? Partition{} : parse_partition(inner_text), k + 1);
      const std::vector<int> weight = parse_sequence(weight_text);
      check_budget(o, k_bounded_hooks(outer, k), "degree");
      if (count_only) {
        int size = 0;
        for (int x : weight) size += x;
        require(size == k_bounded_hooks(outer, k) - k_bounded_hooks(inner, k),
                "k-weight " + to_string(weight) + " does not match the number of cells");
        require(contains(outer.shape(), inner.shape()), "inner core is not inside the shape");
        const Integer c = count_core_fillings(k, outer.shape(), inner.shape(), {weight})[0];
        print_count(o, c);
        return;
      }
      const auto ts = inner_text.empty() ? enumerate_k_tableaux(k, outer, weight)
                                         : enumerate_skew_k_tableaux(k, outer, inner, weight);
      if (o.json) {
        std::cout << tableaux_to_json(ts).dump() << '\n';
        return;
      }
      for (std::size_t i = 0; i < ts.size(); ++i) std::cout << (i ? "\n" : "") << to_string(ts[i]);
    };
  });

  auto* standard = app.add_subcommand("standard", "number of standard k-tableaux of shape c(lambda)");
  with_one(standard);
  standard->callback([&] {
    action = [&] {
      const Partition p = A();
      check_budget(o, p.degree(), "degree");
      print_count(o, count_standard(need(o.k, "--k"), p));
    };
  });

  auto* hecke = app.add_subcommand("hecke-dim", "dimension of the Hecke representation for lambda");
  with_one(hecke);
  hecke->callback([&] {
    action = [&] {
      const Partition p = A();
      check_budget(o, p.degree(), "degree");
      print_count(o, hecke_dimension(p, need(o.l, "--l"), need(o.n, "--n")));
    };
  });

  auto* cauchy = app.add_subcommand("cauchy-check", "verify the Cauchy identity at --k, --degree");
  cauchy->callback([&] {
    action = [&] {
      const int d = need(o.degree, "--degree");
      check_budget(o, d, "degree");
      const bool ok = cauchy_check(need(o.k, "--k"), d);
      print_bool(o, "passed", ok);
      ensure(ok, "Cauchy identity fails");
    };
  });

  auto* self = app.add_subcommand("selftest", "run the invariant suite up to --degree (default 6)");
  self->callback([&] {
    action = [&] {
      const int d = o.degree.value_or(6);
      check_budget(o, d, "degree");
      const auto results = selftest::run_all(d);
      bool all = true;
      json arr = json::array();
      for (const auto& r : results) {
        all = all && r.passed;
        if (o.json)
          arr.push_back({{"name", r.name}, {"passed", r.passed}, {"cases", r.cases},
                         {"detail", r.detail}});
        else
          std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)"
                    << (r.detail.empty() ? "" : ": " + r.detail) << '\n';
      }
      if (o.json) std::cout << arr.dump() << '\n';
      ensure(all, "selftest failed");
    };
  });

  auto* cache_cmd = app.add_subcommand("cache", "Kostka cache management");
  cache_cmd->require_subcommand(1);
  auto* stats = cache_cmd->add_subcommand("stats", "files and bytes in the cache directory");
  stats->callback([&] {
    action = [&] {
      const auto st = cache::stats();
      const auto d = cache::dir();
      const std::string where = d ? d->string() : "off";
      if (o.json)
        std::cout << json{{"dir", where}, {"files", st.files}, {"bytes", st.bytes}}.dump() << '\n';
      else
        std::cout << "dir: " << where << "\nfiles: " << st.files << "\nbytes: " << st.bytes << '\n';
    };
  });
  auto* clear = cache_cmd->add_subcommand("clear", "remove cached Kostka matrices");
  clear->callback([&] {
    action = [&] {
      const auto removed = cache::clear();
      if (o.json)
        std::cout << json{{"removed", removed}}.dump() << '\n';
      else
        std::cout << "removed " << removed << " files\n";
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (!o.cache_dir.empty())
      cache::set_dir(o.cache_dir == "off" ? std::nullopt
                                          : std::optional<std::filesystem::path>(o.cache_dir));
    if (action) action();
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "compchains/genfun.hpp"
#include "compchains/io.hpp"
#include "compchains/ncgen.hpp"
#include "compchains/poset.hpp"
#include "compchains/qsym.hpp"
#include "compchains/verify.hpp"

using namespace compchains;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string poset = "N";
  std::string alpha = "()";
  std::string comp, from, to, csv, dot;
  int k = -1, n = -1, k_min = 2, max_weight = 5;
  bool json_out = false, quick = false;
};

Alphabet poset_of(const Options& o) { return Alphabet::parse(o.poset); }

int need(int v, const char* flag) {
  if (v < 0) throw UsageError(std::string("missing or negative ") + flag);
  return v;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

int cmd_covers(const Options& o) {
  const auto cv = covers(poset_of(o), Composition::parse(o.comp));
  if (o.json_out) {
    json j = json::array();
    for (const auto& c : cv) j.push_back({{"letter", c.letter}, {"composition", c.result}});
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (const auto& c : cv) std::cout << c.letter.str() << "\t" << c.result.str() << "\n";
  return 0;
}

int cmd_hasse(const Options& o) {
  const std::string dot = hasse_dot(poset_of(o), o.max_weight);
  if (o.dot.empty())
    std::cout << dot;
  else
    write_text(o.dot, dot);
  return 0;
}

int cmd_chains(const Options& o) {
  const int n = need(o.n, "-n");
  std::optional<int> width;
  if (o.k >= 0) width = o.k;
  const auto chains = enumerate_chains(poset_of(o), Composition::parse(o.alpha), n, width);
  if (o.json_out) {
    json j = json::array();
    for (const auto& c : chains) j.push_back({{"word", word_str(c.word())}, {"steps", c.steps}});
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (const auto& c : chains) std::cout << word_str(c.word()) << "\t" << c.steps.back().str() << "\n";
  return 0;
}

int cmd_count(const Options& o) {
  std::cout << count_chains(poset_of(o), Composition::parse(o.from), Composition::parse(o.to)) << "\n";
  return 0;
}

int cmd_genfun(const Options& o) {
  const auto f = f_width(poset_of(o), Composition::parse(o.alpha), need(o.k, "-k"));
  if (o.json_out)
    std::cout << json(f).dump(2) << "\n";
  else
    std::cout << f.str() << "\n";
  return 0;
}

int cmd_lk(const Options& o) {
  const Alphabet a = poset_of(o);
  const Composition alpha = Composition::parse(o.alpha);
  const auto l = L_width(a, alpha, need(o.k, "-k"));
  if (o.json_out) {
    json j = l;
    if (o.n >= 0) {
      json cs = json::array();
      for (const auto& c : series_coeffs(l, o.n)) cs.push_back(c.get_str());
      j["series"] = cs;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << l.str() << "\n";
  if (o.n >= 0) {
    const auto cs = series_coeffs(l, o.n);
    for (std::size_t i = 0; i < cs.size(); ++i) std::cout << (i ? " " : "") << cs[i].get_str();
    std::cout << "\n";
  }
  return 0;
}

int cmd_dk(const Options& o) {
  const Composition alpha = Composition::parse(o.alpha == "()" ? "1" : o.alpha);
  if (!alpha.all_ones() || alpha.empty()) throw UsageError("dk needs --alpha of the form 1,...,1");
  const UniPoly d = D_poly(alpha.width(), need(o.k, "-k"));
  if (o.json_out)
    std::cout << json(d).dump(2) << "\n";
  else
    std::cout << d.str() << "\n";
  return 0;
}

int cmd_dk_roots(const Options& o) {
  const int k_max = need(o.k, "-k");
  if (o.k_min < 2 || o.k_min > k_max) throw UsageError("need 2 <= --k-min <= -k");
  std::ofstream file;
  if (!o.csv.empty()) {
    file.open(o.csv);
    if (!file) throw UsageError("cannot write " + o.csv);
  }
  std::ostream& out = o.csv.empty() ? std::cout : file;
  out << "k,re,im,residual\n";
  out.precision(17);
  bool ok = true;
  for (int k = o.k_min; k <= k_max; ++k) {
    const RootReport r = scaled_D_roots(k);
    ok = ok && r.converged;
    for (std::size_t i = 0; i < r.roots.size(); ++i)
      out << k << "," << r.roots[i].real() << "," << r.roots[i].imag() << "," << r.residuals[i] << "\n";
  }
  if (!ok) std::cerr << "root iteration did not converge for some k\n";
  return ok ? 0 : 1;
}

int cmd_shadow(const Options& o) {
  const Composition alpha = Composition::parse(o.alpha);
  const int k = need(o.k, "-k");
  const MultiPoly s = shadow_series(poset_of(o), alpha, k, alpha.weight() + need(o.n, "-n"));
  if (o.json_out)
    std::cout << json(s).dump(2) << "\n";
  else
    std::cout << s.str() << "\n";
  return 0;
}

int cmd_qsym(const Options& o) {
  int failed = 0;
  for (int w = 0; w <= o.max_weight; ++w)
    for (const auto& alpha : compositions_of(w)) {
      const bool ok = verify_product_rule(alpha);
      std::cout << (ok ? "PASS " : "FAIL ") << alpha.str() << "\n";
      failed += !ok;
    }
  return failed ? 1 : 0;
}

int cmd_automaton(const Options& o) {
  if (poset_of(o).kind() != Alphabet::Kind::N) throw UsageError("automaton is built for --poset N only");
  const auto g = build_automaton_N(Composition::parse(o.alpha), need(o.k, "-k"));
  if (!o.dot.empty()) write_text(o.dot, export_dot(g));
  if (o.json_out)
    std::cout << json(g).dump(2) << "\n";
  else if (o.dot.empty())
    std::cout << export_dot(g);
  else
    std::cout << g.num_states << " states, " << g.edges.size() << " edges\n";
  return 0;
}

int cmd_nccheck(const Options& o) {
  const Alphabet a = poset_of(o);
  const Composition alpha = Composition::parse(o.alpha);
  const int k = need(o.k, "-k"), n = need(o.n, "-n");
  const NCSeries oracle = labeled_oracle(a, alpha, k, n);
  if (auto m = compare_series(F_recurrence(a, alpha, k, n), oracle)) {
    std::cout << "recurrence vs oracle: " << m->str() << "\n";
    return 1;
  }
  if (a.kind() == Alphabet::Kind::N)
    if (auto m = compare_series(path_series(build_automaton_N(alpha, k), n), oracle)) {
      std::cout << "automaton vs oracle: " << m->str() << "\n";
      return 1;
    }
  std::cout << "agree\n";
  return 0;
}

int cmd_verify(const Options& o) {
  int failed = 0;
  for (const auto& check : invariant_suites(o.quick)) {
    const CheckResult r = run_check(check);
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.seconds << " s)\n";
    for (const auto& n : r.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
    failed += !r.pass;
  }
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Saturated chains in posets of compositions"};
  app.require_subcommand(1);
  Options o;
  int (*handler)(const Options&) = nullptr;

  auto poset = [&](CLI::App* s) { s->add_option("--poset", o.poset, "N, BBD, S:<d> or S:inf"); };
  auto alpha = [&](CLI::App* s) { s->add_option("--alpha", o.alpha, "start composition, e.g. 2,3 or ()"); };
  auto k = [&](CLI::App* s) { s->add_option("-k", o.k, "width"); };
  auto n = [&](CLI::App* s, const char* what) { s->add_option("-n", o.n, what); };
  auto js = [&](CLI::App* s) { s->add_flag("--json", o.json_out, "JSON output"); };
  auto sub = [&](const char* name, const char* desc, int (*h)(const Options&)) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->callback([&handler, h] { handler = h; });
    return s;
  };

  auto* c = sub("covers", "covers of a composition", cmd_covers);
  poset(c), js(c);
  c->add_option("--comp", o.comp, "composition")->required();

  auto* h = sub("hasse", "Hasse diagram as DOT", cmd_hasse);
  poset(h);
  h->add_option("--max-weight", o.max_weight)->check(CLI::NonNegativeNumber);
  h->add_option("--dot", o.dot, "output path");

  auto* ch = sub("chains", "saturated chains of length n", cmd_chains);
  poset(ch), alpha(ch), k(ch), n(ch, "length"), js(ch);

  auto* ct = sub("count", "number of saturated chains between two compositions", cmd_count);
  poset(ct);
  ct->add_option("--from", o.from)->required();
  ct->add_option("--to", o.to)->required();

  auto* g = sub("genfun", "generating function f_k", cmd_genfun);
  poset(g), alpha(g), k(g), js(g);

  auto* l = sub("lk", "f_k with all variables set to t", cmd_lk);
  poset(l), alpha(l), k(l), n(l, "also print coefficients up to t^n"), js(l);

  auto* d = sub("dk", "numerator polynomial D_k for alpha = (1,...,1)", cmd_dk);
  alpha(d), k(d), js(d);

  auto* dr = sub("dk-roots", "roots of D_k(x/k) as CSV", cmd_dk_roots);
  k(dr);
  dr->add_option("--k-min", o.k_min, "smallest k");
  dr->add_option("--csv", o.csv, "output path (default stdout)");

  auto* sh = sub("shadow", "shadow series of f_k", cmd_shadow);
  poset(sh), alpha(sh), k(sh), n(sh, "degree beyond |alpha|"), js(sh);

  auto* q = sub("qsym-check", "product rule for fundamental quasi-symmetric functions", cmd_qsym);
  q->add_option("--max-weight", o.max_weight)->check(CLI::NonNegativeNumber);

  auto* au = sub("automaton", "labeled-chain digraph", cmd_automaton);
  poset(au), alpha(au), k(au), js(au);
  au->add_option("--dot", o.dot, "output path");

  auto* nc = sub("nccheck", "labeled series: recurrence and automaton against brute force", cmd_nccheck);
  poset(nc), alpha(nc), k(nc), n(nc, "word length"), js(nc);

  auto* v = sub("verify", "run the invariant suites", cmd_verify);
  v->add_flag("--quick", o.quick, "smaller bounds");

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
  try {
    return handler(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

// braidq: command-line front end. Exit 0 on success, 1 on a failed check or
// a library error, 2 on bad usage.

#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "braidq/acceptance.hpp"
#include "braidq/export.hpp"
#include "braidq/group.hpp"
#include "braidq/hyperocta.hpp"
#include "braidq/models.hpp"
#include "braidq/so_path.hpp"

using namespace braidq;
using json = nlohmann::json;

namespace {

  struct Globals {
    int           n       = 3;
    std::string   variant = "standard";
    std::uint64_t seed    = 1;
    std::string   format  = "text";

    bool as_json() const {
      return format == "json";
    }
  };

  struct UsageError : Error {
    using Error::Error;
  };

  // Accepts `R1^4` and `R2^-3` as shorthand for repeated letters.
  Word read_word(std::string const& text, int rank) {
    std::istringstream in(text);
    std::string        tok, expanded;
    while (in >> tok) {
      auto caret = tok.find('^');
      int  k     = 1;
      if (caret != std::string::npos) {
        try {
          std::size_t used = 0;
          k                = std::stoi(tok.substr(caret + 1), &used);
          if (used != tok.size() - caret - 1) {
            throw Error("");
          }
        } catch (std::exception const&) {
          throw Error("malformed token: '" + tok + "'");
        }
        tok.resize(caret);
      }
      std::string one = k < 0 ? tok + "^-1" : tok;
      for (int r = 0; r < (k < 0 ? -k : k); ++r) {
        expanded += one + " ";
      }
    }
    return parse_word(expanded, rank);
  }

  json cf_json(CanonicalForm const& cf) {
    json levels = json::array();
    for (std::size_t k = 0; k < cf.levels.size(); ++k) {
      auto const& d = cf.levels[k];
      std::string kind =
          d.kind == Descriptor::Kind::power ? "power" : d.kind == Descriptor::Kind::run ? "run" : "cube_run";
      levels.push_back({{"level", k + 2}, {"kind", kind}, {"value", d.value}});
    }
    return {{"m", cf.m}, {"levels", levels}, {"word", to_tokens(expand(cf))},
            {"family", family_key(cf)}};
  }

  json profile_json(std::map<unsigned, std::size_t> const& p) {
    json out = json::object();
    for (auto [o, c] : p) {
      out[std::to_string(o)] = c;
    }
    return out;
  }

  void print_elements(GroupCtx const& g, std::vector<Element> const& es, Globals const& gl) {
    if (gl.as_json()) {
      json out = json::array();
      for (auto e : es) {
        out.push_back({{"id", e.id}, {"word", to_tokens(name_word(g, e))},
                       {"pretty", to_pretty(name_word(g, e))}});
      }
      std::cout << out.dump(2) << "\n";
    } else {
      for (auto e : es) {
        std::cout << to_pretty(name_word(g, e)) << "\n";
      }
    }
  }

  int print_report(Report const& r, Globals const& gl) {
    std::cout << (gl.as_json() ? r.to_json() + "\n" : r.to_text());
    return r.all_pass() ? 0 : 1;
  }

  void print_flow(FlowResult const& r, Globals const& gl, bool trace) {
    if (trace) {
      std::cout << trace_csv(r);
      return;
    }
    if (gl.as_json()) {
      json out{{"verdict", std::string(to_string(r.verdict))}, {"iterations", r.iterations},
               {"final_max_d", r.final_max_d}, {"retries", r.retries}, {"witness", r.witness}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::printf("verdict: %s\niterations: %d\nfinal max-D: %.9g\nretries: %d\n",
                  std::string(to_string(r.verdict)).c_str(), r.iterations, r.final_max_d,
                  r.retries);
    }
  }

  json trace_json(ReductionTrace const& t) {
    json steps = json::array();
    for (auto const& s : t.steps) {
      steps.push_back({{"pos", s.pos}, {"moving", s.moving}, {"rule", s.rule},
                       {"before", to_tokens(s.before)}, {"after", to_tokens(s.after)}});
    }
    return {{"n", t.n}, {"start", to_tokens(t.start)}, {"steps", steps}};
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite quotients of braid groups: enumeration, canonical forms, models, paths"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals gl;
  app.add_option("--n", gl.n, "rank n (generators R1..R(n-1))")->check(CLI::Range(3, 12));
  app.add_option("--variant", gl.variant, "presentation variant")
      ->check(CLI::IsMember({"standard", "twisted"}));
  app.add_option("--seed", gl.seed, "seed for jittered flows and random words");
  app.add_option("--format", gl.format, "output format")->check(CLI::IsMember({"text", "json"}));

  auto ctx = [&] {
    return GroupCtx(gl.n, parse_variant(gl.variant));
  };
  int status = 0;

  // order
  auto*       order    = app.add_subcommand("order", "group order by coset enumeration");
  std::string strategy = "hlt";
  bool        profile  = false;
  order->add_option("--strategy", strategy)->check(CLI::IsMember({"hlt", "felsch"}));
  order->add_flag("--profile", profile, "also print the element-order profile");
  order->callback([&] {
    EnumLimits lim;
    lim.strategy = parse_strategy(strategy);
    auto p       = presentation_for(gl.n, parse_variant(gl.variant));
    if (!profile) {
      auto N = group_order(p, lim);
      if (gl.as_json()) {
        std::cout << json{{"n", gl.n}, {"variant", gl.variant}, {"order", N}}.dump(2) << "\n";
      } else {
        std::cout << N << "\n";
      }
      return;
    }
    GroupCtx g(p, lim);
    auto     prof = order_profile(g);
    if (gl.as_json()) {
      std::cout << json{{"n", gl.n}, {"variant", gl.variant}, {"order", g.order()},
                        {"profile", profile_json(prof)}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << g.order() << "\n" << to_string(prof) << "\n";
    }
  });

  // elements
  app.add_subcommand("elements", "JSON element table")->callback([&] {
    std::cout << element_table_json(ctx()) << "\n";
  });

  // normal-form
  auto*       nf = app.add_subcommand("normal-form", "canonical form of a word");
  std::string nf_word;
  bool        families = false;
  nf->add_option("--word", nf_word, "e.g. \"R2 R1^-1 R2\"");
  nf->add_flag("--families", families, "print family sizes instead");
  nf->callback([&] {
    auto g = ctx();
    if (families) {
      auto fs = family_sizes(g);
      if (gl.as_json()) {
        json out = json::array();
        for (auto const& [k, c] : fs) {
          out.push_back({{"family", k}, {"size", c}});
        }
        std::cout << out.dump(2) << "\n";
      } else {
        for (auto const& [k, c] : fs) {
          std::cout << k << ": " << c << "\n";
        }
      }
      return;
    }
    auto cf = canonical_form(g, element_from_word(g, read_word(nf_word, gl.n)));
    if (gl.as_json()) {
      std::cout << cf_json(cf).dump(2) << "\n";
    } else {
      std::cout << to_pretty(expand(cf)) << "\n";
    }
  });

  // mul
  auto*       mul = app.add_subcommand("mul", "product of two words, as a canonical word");
  std::string wa, wb;
  mul->add_option("--a", wa)->required();
  mul->add_option("--b", wb)->required();
  mul->callback([&] {
    auto g = ctx();
    auto p = multiply(g, element_from_word(g, read_word(wa, gl.n)),
                      element_from_word(g, read_word(wb, gl.n)));
    print_elements(g, {p}, gl);
  });

  app.add_subcommand("kernel", "elements mapped to the identity by theta")->callback([&] {
    auto g = ctx();
    print_elements(g, kernel(g), gl);
  });
  app.add_subcommand("center", "central elements")->callback([&] {
    auto g = ctx();
    print_elements(g, center(g), gl);
  });

  // quotient
  auto*       quo = app.add_subcommand("quotient", "G / <z> order and element orders");
  std::string zw  = "R1^4";
  quo->add_option("--z", zw, "central element of order 2")->capture_default_str();
  quo->callback([&] {
    auto g    = ctx();
    auto q    = quotient(g, element_from_word(g, read_word(zw, gl.n)));
    auto prof = order_profile(q);
    if (gl.as_json()) {
      std::cout << json{{"order", q.order()}, {"profile", profile_json(prof)}}.dump(2) << "\n";
    } else {
      std::cout << q.order() << "\n" << to_string(prof) << "\n";
    }
  });

  // cayley
  auto* cay      = app.add_subcommand("cayley", "Cayley graph as DOT");
  bool  cay_quot = false;
  cay->add_flag("--quotient", cay_quot, "graph of G / <R1^4>");
  cay->callback([&] {
    auto g = ctx();
    if (cay_quot) {
      std::cout << cayley_dot(quotient(g, element_from_word(g, power(gl.n, 1, 4))));
    } else {
      std::cout << cayley_dot(g);
    }
  });

  // theta
  auto*       th = app.add_subcommand("theta", "signed-permutation image of a word");
  std::string th_word;
  th->add_option("--word", th_word)->required();
  th->callback([&] {
    auto p = theta_word(read_word(th_word, gl.n), gl.n);
    if (gl.as_json()) {
      std::cout << json{{"theta", p.images()}, {"determinant", determinant(p)}}.dump(2) << "\n";
    } else {
      std::cout << to_string(p) << "\n";
    }
  });

  // models
  auto* models = app.add_subcommand("models", "exact models of the order-48 extensions");
  models->require_subcommand(1);
  auto*       mv    = models->add_subcommand("verify", "check a model against its relations");
  std::string which = "all";
  mv->add_option("--which", which)->check(CLI::IsMember({"2o", "gl23", "sl24", "all"}));
  mv->callback([&] {
    Report r;
    auto   take = [&](Report const& x) {
      for (auto const& c : x.checks) {
        r.checks.push_back({x.title + ": " + c.name, c.pass, c.detail});
      }
    };
    if (which == "2o" || which == "all") {
      take(verify_2O());
    }
    if (which == "gl23" || which == "all") {
      take(verify_matrix_model(MatrixModel::gl23));
    }
    if (which == "sl24" || which == "all") {
      take(verify_matrix_model(MatrixModel::sl24));
    }
    r.title = "models " + which;
    status  = print_report(r, gl);
  });
  models->add_subcommand("stem", "commutator-subgroup test for the three models")->callback([&] {
    status = print_report(stem_report(), gl);
  });
  models->add_subcommand("report", "orders, element orders and stem tests")->callback([&] {
    status = print_report(extension_report(), gl);
  });

  // path
  auto* path = app.add_subcommand("path", "sampled rotation paths");
  path->require_subcommand(1);
  std::string pword, gens;
  int         samples = 16;
  bool        trace   = false;
  FlowParams  fp;
  auto        path_opts = [&](CLI::App* s) {
    s->add_option("--word", pword, "plane letters, e.g. \"R12 R23\"");
    s->add_option("--gens", gens, "standard generators, e.g. \"R1^4\"");
    s->add_option("--samples", samples, "samples per letter")->capture_default_str()->check(CLI::Range(2, 4096));
  };
  auto flow_opts = [&](CLI::App* s) {
    s->add_option("--step", fp.step)->capture_default_str();
    s->add_option("--max-iters", fp.max_iters)->capture_default_str();
    s->add_option("--tol", fp.tol)->capture_default_str();
    s->add_option("--stall-window", fp.stall_window)->capture_default_str();
    s->add_option("--max-retries", fp.max_retries)->capture_default_str();
    s->add_option("--jitter", fp.jitter)->capture_default_str();
    s->add_flag("--trace", trace, "emit the max-D trace as CSV");
  };
  auto compiled = [&] {
    fp.seed = gl.seed;
    if (!pword.empty() && !gens.empty()) {
      throw UsageError("give --word or --gens, not both");
    }
    if (!gens.empty()) {
      return compile_word(read_word(gens, gl.n), samples);
    }
    return compile_path(parse_plane_word(pword, gl.n), gl.n, samples);
  };

  auto* pc = path->add_subcommand("compile", "path samples as CSV");
  path_opts(pc);
  pc->callback([&] { std::cout << to_csv(compiled()); });

  auto* pk = path->add_subcommand("contract", "descent flow on a closed path");
  path_opts(pk);
  flow_opts(pk);
  pk->callback([&] {
    auto r = contract(compiled(), fp);
    print_flow(r, gl, trace);
    status = r.verdict == Verdict::contracted ? 0 : 1;
  });

  auto* ps = path->add_subcommand("stall", "flow expected to stall; reports the witness");
  path_opts(ps);
  flow_opts(ps);
  ps->callback([&] {
    auto r = stall_witness(compiled(), fp);
    print_flow(r, gl, trace);
    status = r.verdict == Verdict::stalled ? 0 : 1;
  });

  auto* pn       = path->add_subcommand("snap", "nearest-element letters along a path");
  int   geodesic = 0;
  pn->add_option("--geodesic", geodesic,
                 "snap the geodesic to theta(--gens) sampled at this many points instead");
  path_opts(pn);
  pn->callback([&] {
    PlaneWord out;
    if (geodesic > 0) {
      auto target = signed_perm_matrix(theta_word(read_word(gens, gl.n), gl.n));
      out         = snap_to_word(geodesic_path(target, geodesic));
    } else if (!gens.empty()) {
      out = snap_to_word(compiled());
    } else {
      out = snap_compiled(parse_plane_word(pword, gl.n), gl.n, samples);
    }
    if (gl.as_json()) {
      std::cout << json{{"word", to_tokens(out)}}.dump(2) << "\n";
    } else {
      std::cout << (out.empty() ? "Id" : to_tokens(out)) << "\n";
    }
  });

  auto* pr         = path->add_subcommand("reduce", "symbolic reduction of local closed words");
  bool  triangular = false;
  int   random     = 0;
  int   terms      = 2;
  pr->add_option("--word", pword, "plane letters");
  pr->add_flag("--triangular", triangular, "reduce the 24 triangular words (n = 3)");
  pr->add_option("--random", random, "reduce this many random local closed words");
  pr->add_option("--terms", terms, "relators per random word")->capture_default_str()->check(CLI::Range(1, 16));
  pr->callback([&] {
    std::vector<std::pair<int, PlaneWord>> jobs;
    if (triangular) {
      for (auto const& w : triangular_identity_words()) {
        jobs.emplace_back(3, w);
      }
    }
    std::mt19937_64 rng(gl.seed);
    for (int k = 0; k < random; ++k) {
      jobs.emplace_back(gl.n, random_local_closed_word(gl.n, terms, rng));
    }
    if (!pword.empty()) {
      jobs.emplace_back(gl.n, parse_plane_word(pword, gl.n));
    }
    if (jobs.empty()) {
      throw UsageError("nothing to reduce: give --word, --triangular or --random");
    }
    json out = json::array();
    int  ok  = 0;
    for (auto const& [n, w] : jobs) {
      auto t      = reduce_local_word(w, n);
      bool replay_ok = replay(t).empty();
      ok += replay_ok;
      if (gl.as_json()) {
        auto j      = trace_json(t);
        j["replay"] = replay_ok;
        out.push_back(j);
      } else {
        std::cout << to_tokens(w) << ": " << t.steps.size() << " steps, "
                  << (replay_ok ? "reduced to Id" : "REPLAY FAILED") << "\n";
      }
    }
    if (gl.as_json()) {
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << ok << "/" << jobs.size() << " reduced\n";
    }
    status = ok == static_cast<int>(jobs.size()) ? 0 : 1;
  });

  // presentations
  auto* pres = app.add_subcommand("presentations", "presentation text");
  pres->require_subcommand(1);
  pres->add_subcommand("emit", "relators of the chosen variant")->callback([&] {
    std::cout << to_text(presentation_for(gl.n, parse_variant(gl.variant)));
  });

  // acceptance
  auto* acc       = app.add_subcommand("acceptance", "run the end-to-end checks");
  int   criterion = 0;
  acc->add_option("--criterion", criterion, "1..14; all when omitted")
      ->check(CLI::Range(1, kCriteria));
  acc->callback([&] {
    int lo = criterion ? criterion : 1;
    int hi = criterion ? criterion : kCriteria;
    for (int id = lo; id <= hi; ++id) {
      auto r = run_criterion(id);
      std::cout << format(r) << std::endl;
      status = r.pass ? status : 1;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (UsageError const& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return status;
}

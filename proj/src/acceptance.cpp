#include "braidq/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "braidq/group.hpp"
#include "braidq/hyperocta.hpp"
#include "braidq/models.hpp"
#include "braidq/so_path.hpp"

namespace braidq {

  namespace {
    using Clock = std::chrono::steady_clock;

    double since(Clock::time_point t0) {
      return std::chrono::duration<double>(Clock::now() - t0).count();
    }

    std::string fmt_seconds(double s) {
      std::ostringstream os;
      os.precision(3);
      os << s << "s";
      return os.str();
    }

    std::size_t expected_order(int n) {
      std::size_t v = std::size_t{1} << n;
      for (int k = 2; k <= n; ++k) {
        v *= static_cast<std::size_t>(k);
      }
      return v;
    }

    Element word_el(GroupCtx const& g, std::string const& text) {
      return element_from_word(g, parse_word(text, g.rank()));
    }

    std::string names(GroupCtx const& g, std::vector<Element> const& es) {
      std::string out = "{";
      for (std::size_t k = 0; k < es.size(); ++k) {
        out += (k ? ", " : "") + to_pretty(name_word(g, es[k]));
      }
      return out + "}";
    }

    // 1 and 2 share the enumeration
    CriterionResult orders(int id) {
      CriterionResult r;
      r.pass = true;
      std::size_t const published[] = {48, 384, 3840, 46080};
      for (int n = 3; n <= 6; ++n) {
        auto   t0 = Clock::now();
        auto   N  = group_order(presentation_for(n, Variant::standard));
        double dt = since(t0);
        bool   ok = id == 1 ? (N == published[n - 3] && dt < 30.0) : N == expected_order(n);
        r.pass    = r.pass && ok;
        r.detail += "N=" + std::to_string(n) + ":" + std::to_string(N);
        r.detail += id == 1 ? " (" + fmt_seconds(dt) + ") "
                            : " (2^N N! = " + std::to_string(expected_order(n)) + ") ";
      }
      return r;
    }

    CriterionResult kernels() {
      CriterionResult r;
      r.pass = true;
      for (int n = 3; n <= 6; ++n) {
        auto     t0 = Clock::now();
        GroupCtx g(n, Variant::standard);
        auto     k  = kernel(g);
        double   dt = since(t0);
        std::vector<Element> want{g.identity(), word_el(g, "R1 R1 R1 R1")};
        bool ok = k == want && (n < 6 || dt < 60.0);
        r.pass  = r.pass && ok;
        r.detail += "N=" + std::to_string(n) + " " + names(g, k) + " (" + fmt_seconds(dt) + ") ";
      }
      return r;
    }

    CriterionResult generator_orders() {
      CriterionResult r;
      r.pass = true;
      for (int n = 3; n <= 6; ++n) {
        GroupCtx g(n, Variant::standard);
        auto     z  = element_from_word(g, power(n, 1, 4));
        bool     ok = is_central(g, z) && z != g.identity();
        for (int i = 1; i < n; ++i) {
          ok = ok && element_order(g, element_from_word(g, power(n, i, 1))) == 8
               && element_from_word(g, power(n, i, 4)) == z;
        }
        r.pass = r.pass && ok;
        r.detail += "N=" + std::to_string(n) + (ok ? " ok " : " mismatch ");
      }
      return r;
    }

    std::vector<CanonicalForm> all_forms(int n, int m_range) {
      std::vector<CanonicalForm> forms;
      for (int m = 0; m < m_range; ++m) {
        forms.push_back(CanonicalForm{n, m, {}});
      }
      for (int i = 2; i <= n - 1; ++i) {
        std::vector<CanonicalForm> next;
        for (auto const& f : forms) {
          for (auto const& d : descriptors_at(i)) {
            next.push_back(f);
            next.back().levels.push_back(d);
          }
        }
        forms = std::move(next);
      }
      return forms;
    }

    CriterionResult canonical_bijection() {
      CriterionResult r;
      r.pass = true;
      std::vector<std::size_t> const want3{32, 8, 8};
      std::vector<std::size_t> const want4{128, 32, 32, 32, 32, 32, 8, 8, 8, 8, 32, 8, 8, 8, 8};
      for (int n : {3, 4}) {
        GroupCtx    g(n, Variant::standard);
        auto        forms = all_forms(n, 8);
        std::size_t good  = 0;
        std::set<CosetId> hit;
        for (auto const& cf : forms) {
          auto e = element_from_word(g, expand(cf));
          hit.insert(e.id);
          if (canonical_form(g, e) == cf) {
            ++good;
          }
        }
        std::vector<std::size_t> sizes;
        std::size_t              total = 0;
        for (auto const& [key, c] : family_sizes(g)) {
          sizes.push_back(c);
          total += c;
        }
        bool ok = forms.size() == g.order() && good == g.order() && hit.size() == g.order()
                  && sizes == (n == 3 ? want3 : want4) && total == g.order();
        r.pass = r.pass && ok;
        r.detail += "N=" + std::to_string(n) + " round-trip " + std::to_string(good) + "/"
                    + std::to_string(g.order()) + " families [";
        for (std::size_t k = 0; k < sizes.size(); ++k) {
          r.detail += (k ? "," : "") + std::to_string(sizes[k]);
        }
        r.detail += "] sum " + std::to_string(total) + " ";
      }
      return r;
    }

    CriterionResult quotient_structure() {
      CriterionResult r;
      GroupCtx        g(3, Variant::standard);
      auto            q    = quotient(g, word_el(g, "R1 R1 R1 R1"));
      auto            prof = order_profile(q);
      std::map<unsigned, std::size_t> want{{1, 1}, {2, 9}, {3, 8}, {4, 6}};
      r.pass   = q.order() == 24 && prof == want;
      r.detail = "order " + std::to_string(q.order()) + ", profile " + to_string(prof);
      return r;
    }

    CriterionResult centers() {
      CriterionResult r;
      bool            ok = true;
      {
        GroupCtx g(3, Variant::standard);
        auto     z = center(g);
        bool     c = z == std::vector<Element>{g.identity(), word_el(g, "R1 R1 R1 R1")};
        ok         = ok && c;
        r.detail += "N=3 " + names(g, z) + "; ";
      }
      {
        GroupCtx g(4, Variant::standard);
        auto     z   = center(g);
        auto     lhs = element_from_word(g, power(parse_word("R1 R2 R3", 4), 4));
        auto     rhs = word_el(g, "R1 R1 R3^-1 R3^-1");
        auto     s   = word_el(g, "R1 R1 R3 R3");
        bool     in  = false;
        for (auto e : z) {
          in = in || e == s;
        }
        bool c = z.size() == 4 && lhs == rhs && in;
        ok     = ok && c;
        r.detail += "N=4 size " + std::to_string(z.size()) + ", (R1R2R3)^4 = R1^2R3^-2: "
                    + (lhs == rhs ? "yes" : "no") + "; ";
      }
      {
        GroupCtx g(5, Variant::standard);
        auto     z = center(g);
        bool     c = z == std::vector<Element>{g.identity(), word_el(g, "R1 R1 R1 R1")};
        ok         = ok && c;
        r.detail += "N=5 " + names(g, z) + "; ";
      }
      {
        GroupCtx g(6, Variant::standard);
        auto     s = word_el(g, "R1 R1 R3 R3 R5 R5");
        bool     c = is_central(g, s) && s != g.identity();
        ok         = ok && c;
        r.detail += std::string("N=6 R1^2R3^2R5^2 central: ") + (c ? "yes" : "no")
                    + ", center size " + std::to_string(center(g).size());
      }
      r.pass = ok;
      return r;
    }

    CriterionResult model_2O() {
      CriterionResult r;
      auto            t0  = Clock::now();
      auto            rep = verify_2O();
      double          dt  = since(t0);
      r.pass              = rep.all_pass() && dt < 5.0;
      for (auto const& c : rep.checks) {
        if (!c.pass || c.name == "isomorphism with G(3)" || c.name == "element set" || c.name == "braid relation" || c.name == "extra relation") {
          r.detail += c.name + ": " + (c.pass ? "PASS" : "FAIL") + " (" + c.detail + "); ";
        }
      }
      r.detail += fmt_seconds(dt);
      return r;
    }

    CriterionResult matrix_models() {
      CriterionResult r;
      auto            gl = verify_matrix_model(MatrixModel::gl23);
      auto            sl = verify_matrix_model(MatrixModel::sl24);
      auto            st = stem_report();
      r.pass             = gl.all_pass() && sl.all_pass() && st.all_pass();
      r.detail = std::string("GL(2,3) ") + (gl.all_pass() ? "PASS" : "FAIL") + ", SL(2,4) "
                 + (sl.all_pass() ? "PASS" : "FAIL") + "; stem";
      for (auto const& c : st.checks) {
        r.detail += " " + c.name + "=" + (c.detail.find("true") != std::string::npos ? "true" : "false");
      }
      return r;
    }

    CriterionResult twisted() {
      CriterionResult r;
      GroupCtx        g(3, Variant::twisted);
      auto            prof = order_profile(g);
      auto            gl   = order_multiset(MatrixModel::gl23);
      r.pass               = g.order() == 48 && prof == gl;
      r.detail = "twisted N=3 order " + std::to_string(g.order()) + " (expected 48), orders "
                 + to_string(prof) + " vs GL(2,3) " + to_string(gl) + "; reported: N=4 "
                 + std::to_string(group_order(presentation_for(4, Variant::twisted))) + ", N=5 "
                 + std::to_string(group_order(presentation_for(5, Variant::twisted)));
      return r;
    }

    CriterionResult theta_checks() {
      CriterionResult r;
      bool            ok = true;
      // relators
      bool rel = true;
      for (int n = 3; n <= 6; ++n) {
        for (auto v : {Variant::standard, Variant::twisted}) {
          for (auto const& w : presentation_for(n, v).relators) {
            rel = rel && theta_word(w).is_identity();
          }
        }
      }
      r.detail += std::string("relators -> id: ") + (rel ? "yes" : "no") + "; ";
      ok = ok && rel;
      std::mt19937_64 rng(20240917);
      for (int n = 3; n <= 5; ++n) {
        GroupCtx g(n, Variant::standard);
        auto     th  = theta_table(g);
        auto     thw = [&](CosetId c) {
          return theta_word(name_word(g, g.element(c)), n);
        };
        std::size_t bad = 0, pairs = 0;
        auto        check_pair = [&](CosetId a, CosetId b) {
          ++pairs;
          auto ab = g.product(a, b);
          if (!(thw(ab) == compose(th[a - 1], th[b - 1]))) {
            ++bad;
          }
        };
        if (n == 3) {
          for (CosetId a = 1; a <= g.order(); ++a) {
            for (CosetId b = 1; b <= g.order(); ++b) {
              check_pair(a, b);
            }
          }
        } else {
          std::uniform_int_distribution<CosetId> pick(1, static_cast<CosetId>(g.order()));
          for (int k = 0; k < 10000; ++k) {
            auto a = pick(rng);
            auto b = pick(rng);
            check_pair(a, b);
          }
        }
        std::set<SignedPerm> image(th.begin(), th.end());
        bool dets = true;
        for (auto const& p : image) {
          dets = dets && determinant(p) == 1;
        }
        bool full = true;
        if (n <= 4) {
          // every det +1 signed permutation is hit
          std::vector<int> perm(n);
          for (int i = 0; i < n; ++i) {
            perm[i] = i + 1;
          }
          std::size_t count = 0;
          do {
            for (int mask = 0; mask < (1 << n); ++mask) {
              std::vector<int> img(perm);
              for (int i = 0; i < n; ++i) {
                if (mask >> i & 1) {
                  img[i] = -img[i];
                }
              }
              SignedPerm p(img);
              if (determinant(p) == 1) {
                ++count;
                full = full && image.count(p) == 1;
              }
            }
          } while (std::next_permutation(perm.begin(), perm.end()));
          full = full && count == image.size();
        }
        bool size_ok = image.size() == expected_order(n) / 2
                       && rotation_group(n).size() == image.size();
        bool n_ok = bad == 0 && size_ok && dets && full;
        ok        = ok && n_ok;
        r.detail += "N=" + std::to_string(n) + " hom " + std::to_string(pairs - bad) + "/"
                    + std::to_string(pairs) + ", image " + std::to_string(image.size())
                    + ", det+1 " + (dets ? "yes" : "no") + (n <= 4 ? (full ? ", full" : ", not full") : "")
                    + "; ";
      }
      r.pass = ok;
      return r;
    }

    CriterionResult flow() {
      CriterionResult r;
      auto            t0  = Clock::now();
      int             ok1 = 0, maxit = 0;
      double          worst = 0;
      for (auto const& w : triangular_identity_words()) {
        auto p   = compile_path(w, 3);
        auto res = contract(p);
        if (is_closed(p, 1e-10) && is_local(p) && res.verdict == Verdict::contracted
            && res.final_max_d < 1e-6 && res.iterations <= 20000) {
          ++ok1;
        }
        maxit = std::max(maxit, res.iterations);
        worst = std::max(worst, res.final_max_d);
      }
      auto four = contract(compile_word(power(3, 1, 8)));
      auto two  = stall_witness(compile_word(power(3, 1, 4)));
      double low = 4.0;
      for (double d : two.trace) {
        low = std::min(low, d);
      }
      double dt = since(t0);
      r.pass    = ok1 == 24 && four.verdict == Verdict::contracted && two.verdict == Verdict::stalled
               && two.retries == 10 && low >= 4 - 1e-3 && dt < 120.0;
      std::ostringstream os;
      os << "triangular words contracted " << ok1 << "/24 (max " << maxit << " iters, max-D " << worst
         << "); 4pi " << to_string(four.verdict) << " after " << four.retries
         << " jitter retries; 2pi " << to_string(two.verdict) << " after " << two.retries
         << " retries, min max-D " << low << "; " << fmt_seconds(dt);
      r.detail = os.str();
      return r;
    }

    CriterionResult reduction() {
      CriterionResult r;
      int             tri = 0;
      for (auto const& w : triangular_identity_words()) {
        auto tr = reduce_local_word(w, 3);
        if (replay(tr).empty()) {
          ++tri;
        }
      }
      std::mt19937_64 rng(7);
      int             rnd = 0;
      for (int k = 0; k < 100; ++k) {
        auto w  = random_local_closed_word(4, 2, rng);
        auto tr = reduce_local_word(w, 4);
        if (replay(tr).empty()) {
          ++rnd;
        }
      }
      r.pass   = tri == 24 && rnd == 100;
      r.detail = "triangular " + std::to_string(tri) + "/24, random local " + std::to_string(rnd)
                 + "/100 reduced to empty with replayable traces";
      return r;
    }

    CriterionResult oracle() {
      CriterionResult r;
      r.pass = true;
      std::mt19937_64 rng(99);
      for (int n = 3; n <= 5; ++n) {
        GroupCtx    g(n, Variant::standard);
        std::size_t bad = 0, pairs = 0;
        auto        check = [&](CosetId a, CosetId b) {
          ++pairs;
          auto via_forms = multiply(g, g.element(a), g.element(b));
          if (via_forms.id != g.product(a, b)) {
            ++bad;
          }
        };
        if (n == 3) {
          for (CosetId a = 1; a <= g.order(); ++a) {
            for (CosetId b = 1; b <= g.order(); ++b) {
              check(a, b);
            }
          }
        } else {
          std::uniform_int_distribution<CosetId> pick(1, static_cast<CosetId>(g.order()));
          for (int k = 0; k < 10000; ++k) {
            auto a = pick(rng);
            auto b = pick(rng);
            check(a, b);
          }
        }
        r.pass = r.pass && bad == 0;
        r.detail += "N=" + std::to_string(n) + " " + std::to_string(pairs - bad) + "/"
                    + std::to_string(pairs) + " ";
      }
      return r;
    }
  }  // namespace

  CriterionResult run_criterion(int id) {
    static char const* const titles[] = {
        "",
        "group orders",
        "order formula",
        "fundamental-group kernel",
        "generator order",
        "canonical-form bijection",
        "quotient structure",
        "center structure",
        "2O model",
        "matrix models",
        "twisted series",
        "theta homomorphism",
        "flow contraction",
        "word reduction",
        "oracle equivalence",
    };
    if (id < 1 || id > kCriteria) {
      throw Error("criterion must be 1.." + std::to_string(kCriteria));
    }
    CriterionResult r;
    try {
      switch (id) {
        case 1:
        case 2:
          r = orders(id);
          break;
        case 3:
          r = kernels();
          break;
        case 4:
          r = generator_orders();
          break;
        case 5:
          r = canonical_bijection();
          break;
        case 6:
          r = quotient_structure();
          break;
        case 7:
          r = centers();
          break;
        case 8:
          r = model_2O();
          break;
        case 9:
          r = matrix_models();
          break;
        case 10:
          r = twisted();
          break;
        case 11:
          r = theta_checks();
          break;
        case 12:
          r = flow();
          break;
        case 13:
          r = reduction();
          break;
        default:
          r = oracle();
          break;
      }
    } catch (std::exception const& e) {
      r.pass   = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.id    = id;
    r.title = titles[id];
    while (!r.detail.empty() && (r.detail.back() == ' ' || r.detail.back() == ';')) {
      r.detail.pop_back();
    }
    return r;
  }

  std::string format(CriterionResult const& r) {
    return std::string(r.pass ? "PASS" : "FAIL") + " " + std::to_string(r.id) + " " + r.title
           + ": " + r.detail;
  }

}  // namespace braidq

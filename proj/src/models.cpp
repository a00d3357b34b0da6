#include "braidq/models.hpp"

#include <cmath>
#include <set>

#include "json.hpp"

#include "braidq/group.hpp"

namespace braidq {

  ////////////////////////////////////////////////////////////////////////
  // DyadicRt2
  ////////////////////////////////////////////////////////////////////////

  DyadicRt2::DyadicRt2(std::int64_t a, std::int64_t b, int k) : _a(a), _b(b), _k(k) {
    if (k < 0) {
      throw Error("dyadic exponent must be nonnegative");
    }
    normalize();
  }

  void DyadicRt2::normalize() {
    if (_a == 0 && _b == 0) {
      _k = 0;
      return;
    }
    while (_k > 0 && _a % 2 == 0 && _b % 2 == 0) {
      _a /= 2;
      _b /= 2;
      --_k;
    }
  }

  double DyadicRt2::to_double() const {
    return (static_cast<double>(_a) + static_cast<double>(_b) * std::sqrt(2.0))
           / std::ldexp(1.0, _k);
  }

  DyadicRt2 operator+(DyadicRt2 const& x, DyadicRt2 const& y) {
    int  k  = std::max(x._k, y._k);
    auto sx = std::int64_t{1} << (k - x._k);
    auto sy = std::int64_t{1} << (k - y._k);
    return DyadicRt2(x._a * sx + y._a * sy, x._b * sx + y._b * sy, k);
  }

  DyadicRt2 DyadicRt2::operator-() const {
    DyadicRt2 r;
    r._a = -_a;
    r._b = -_b;
    r._k = _k;
    return r;
  }

  DyadicRt2 operator-(DyadicRt2 const& x, DyadicRt2 const& y) {
    return x + (-y);
  }

  DyadicRt2 operator*(DyadicRt2 const& x, DyadicRt2 const& y) {
    return DyadicRt2(x._a * y._a + 2 * x._b * y._b,
                     x._a * y._b + x._b * y._a,
                     x._k + y._k);
  }

  std::string to_string(DyadicRt2 const& x) {
    if (x.is_zero()) {
      return "0";
    }
    std::string num;
    if (x.b() == 0) {
      num = std::to_string(x.a());
    } else if (x.a() == 0) {
      num = (x.b() == 1 ? "" : x.b() == -1 ? "-" : std::to_string(x.b())) + "rt2";
    } else {
      num = "(" + std::to_string(x.a()) + (x.b() < 0 ? "-" : "+")
            + (std::abs(x.b()) == 1 ? "" : std::to_string(std::abs(x.b()))) + "rt2)";
    }
    if (x.k() == 0) {
      return num;
    }
    return num + "/" + std::to_string(std::int64_t{1} << x.k());
  }

  ////////////////////////////////////////////////////////////////////////
  // Quaternions
  ////////////////////////////////////////////////////////////////////////

  Quaternion quat_mul(Quaternion const& p, Quaternion const& q) {
    return Quaternion{p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
                      p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
                      p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
                      p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
  }

  Quaternion quat_neg(Quaternion const& q) {
    return Quaternion{-q.w, -q.x, -q.y, -q.z};
  }

  Quaternion quat_conj(Quaternion const& q) {
    return Quaternion{q.w, -q.x, -q.y, -q.z};
  }

  DyadicRt2 quat_norm2(Quaternion const& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
  }

  std::string to_string(Quaternion const& q) {
    return "(" + to_string(q.w) + ", " + to_string(q.x) + ", " + to_string(q.y)
           + ", " + to_string(q.z) + ")";
  }

  Quaternion quat_one() {
    return Quaternion{DyadicRt2(1), {}, {}, {}};
  }
  Quaternion quat_i() {
    return Quaternion{{}, DyadicRt2(1), {}, {}};
  }
  Quaternion quat_j() {
    return Quaternion{{}, {}, DyadicRt2(1), {}};
  }
  Quaternion quat_k() {
    return Quaternion{{}, {}, {}, DyadicRt2(1)};
  }

  Quaternion u1() {
    DyadicRt2 h(0, 1, 1);  // 1/sqrt2
    return Quaternion{h, {}, {}, -h};
  }

  Quaternion u2() {
    DyadicRt2 h(0, 1, 1);
    return Quaternion{h, {}, -h, {}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Matrices mod m
  ////////////////////////////////////////////////////////////////////////

  namespace {
    int mod(int v, int m) {
      v %= m;
      return v < 0 ? v + m : v;
    }
  }  // namespace

  MatMod mat(int m, int a, int b, int c, int d) {
    if (m < 2) {
      throw Error("modulus must be at least 2");
    }
    return MatMod{m, {mod(a, m), mod(b, m), mod(c, m), mod(d, m)}};
  }

  MatMod mat_identity(int m) {
    return mat(m, 1, 0, 0, 1);
  }

  MatMod mat_mul(MatMod const& x, MatMod const& y) {
    if (x.m != y.m) {
      throw Error("modulus mismatch");
    }
    auto const& a = x.e;
    auto const& b = y.e;
    return mat(x.m,
               a[0] * b[0] + a[1] * b[2],
               a[0] * b[1] + a[1] * b[3],
               a[2] * b[0] + a[3] * b[2],
               a[2] * b[1] + a[3] * b[3]);
  }

  int mat_det(MatMod const& x) {
    return mod(x.e[0] * x.e[3] - x.e[1] * x.e[2], x.m);
  }

  std::string to_string(MatMod const& x) {
    return "[[" + std::to_string(x.e[0]) + "," + std::to_string(x.e[1]) + "],["
           + std::to_string(x.e[2]) + "," + std::to_string(x.e[3]) + "]] mod "
           + std::to_string(x.m);
  }

  ////////////////////////////////////////////////////////////////////////
  // Reports
  ////////////////////////////////////////////////////////////////////////

  void Report::add(std::string name, bool pass, std::string detail) {
    checks.push_back(Check{std::move(name), pass, std::move(detail)});
  }

  bool Report::all_pass() const {
    for (auto const& c : checks) {
      if (!c.pass) {
        return false;
      }
    }
    return true;
  }

  std::string Report::to_text() const {
    std::string out;
    if (!title.empty()) {
      out += "# " + title + "\n";
    }
    for (auto const& c : checks) {
      out += "CHECK " + c.name + ": " + (c.pass ? "PASS" : "FAIL");
      if (!c.detail.empty()) {
        out += " " + c.detail;
      }
      out += "\n";
    }
    return out;
  }

  std::string Report::to_json() const {
    nlohmann::json j;
    j["title"]  = title;
    j["pass"]   = all_pass();
    j["checks"] = nlohmann::json::array();
    for (auto const& c : checks) {
      j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    return j.dump(2);
  }

  std::string to_string(std::map<unsigned, std::size_t> const& profile) {
    std::string out = "{";
    for (auto const& [k, v] : profile) {
      if (out.size() > 1) {
        out += ", ";
      }
      out += std::to_string(k) + ":" + std::to_string(v);
    }
    return out + "}";
  }

  ////////////////////////////////////////////////////////////////////////
  // Models
  ////////////////////////////////////////////////////////////////////////

  namespace {
    auto const qmul = [](Quaternion const& a, Quaternion const& b) {
      return quat_mul(a, b);
    };
    auto const mmul = [](MatMod const& a, MatMod const& b) {
      return mat_mul(a, b);
    };

    Quaternion qpow(Quaternion const& q, int k) {
      auto out = quat_one();
      for (int i = 0; i < k; ++i) {
        out = quat_mul(out, q);
      }
      return out;
    }

    MatMod mpow(MatMod const& q, int k) {
      auto out = mat_identity(q.m);
      for (int i = 0; i < k; ++i) {
        out = mat_mul(out, q);
      }
      return out;
    }

    // The 24 Hurwitz units and the 24 elements with two entries +-1/sqrt2.
    std::set<Quaternion> expected_2O(std::size_t& hurwitz, std::size_t& halved) {
      std::set<Quaternion> out;
      auto set = [](Quaternion& q, int pos, DyadicRt2 v) {
        (pos == 0 ? q.w : pos == 1 ? q.x : pos == 2 ? q.y : q.z) = v;
      };
      for (int pos = 0; pos < 4; ++pos) {
        for (int s : {1, -1}) {
          Quaternion q;
          set(q, pos, DyadicRt2(s));
          out.insert(q);
        }
      }
      for (int mask = 0; mask < 16; ++mask) {
        Quaternion q;
        for (int pos = 0; pos < 4; ++pos) {
          set(q, pos, DyadicRt2((mask >> pos) & 1 ? -1 : 1, 0, 1));
        }
        out.insert(q);
      }
      hurwitz = out.size();
      for (int p1 = 0; p1 < 4; ++p1) {
        for (int p2 = p1 + 1; p2 < 4; ++p2) {
          for (int s1 : {1, -1}) {
            for (int s2 : {1, -1}) {
              Quaternion q;
              set(q, p1, DyadicRt2(0, s1, 1));
              set(q, p2, DyadicRt2(0, s2, 1));
              out.insert(q);
            }
          }
        }
      }
      halved = out.size() - hurwitz;
      return out;
    }
  }  // namespace

  std::vector<Quaternion> closure_2O() {
    return generate_closure(std::vector<Quaternion>{u1(), u2()}, quat_one(), qmul, 1000);
  }

  std::array<MatMod, 2> matrix_generators(MatrixModel which) {
    if (which == MatrixModel::gl23) {
      return {mat(3, 1, 1, 1, 0), mat(3, 1, 2, 2, 0)};
    }
    return {mat(4, 1, 0, 1, 1), mat(4, 3, 3, 0, 3)};
  }

  std::vector<MatMod> closure_matrix(MatrixModel which) {
    auto g = matrix_generators(which);
    int  m = g[0].m;
    return generate_closure(std::vector<MatMod>{g[0], g[1]}, mat_identity(m), mmul, 1000);
  }

  std::map<unsigned, std::size_t> order_multiset_2O() {
    return order_multiset(closure_2O(), quat_one(), qmul);
  }

  std::map<unsigned, std::size_t> order_multiset(MatrixModel which) {
    auto m = matrix_generators(which)[0].m;
    return order_multiset(closure_matrix(which), mat_identity(m), mmul);
  }

  Report verify_2O() {
    Report r;
    r.title       = "binary octahedral group 2O";
    auto const a  = u1();
    auto const b  = u2();
    auto const id = quat_one();

    auto G = closure_2O();
    r.add("closure size", G.size() == 48, "closure of {u1, u2} has " + std::to_string(G.size()) + " elements");

    std::size_t hurwitz = 0, halved = 0;
    auto        expect  = expected_2O(hurwitz, halved);
    std::set<Quaternion> got(G.begin(), G.end());
    std::size_t          nh = 0, nr = 0;
    for (auto const& q : G) {
      bool rt2 = q.w.b() != 0 || q.x.b() != 0 || q.y.b() != 0 || q.z.b() != 0;
      (rt2 ? nr : nh)++;
    }
    r.add("element set", got == expect,
          "Hurwitz units: " + std::to_string(nh) + ", sqrt2-halved: " + std::to_string(nr));

    bool unit = true, level = true;
    for (auto const& q : G) {
      unit  = unit && quat_norm2(q) == DyadicRt2(1);
      level = level && q.w.k() <= 1 && q.x.k() <= 1 && q.y.k() <= 1 && q.z.k() <= 1;
    }
    r.add("unit norm", unit, "every element has norm exactly 1");
    r.add("denominator level", level, "every coordinate has k <= 1");

    r.add("u1 squared", quat_mul(a, a) == quat_neg(quat_k()), "u1^2 = -k");
    r.add("braid relation", quat_mul(quat_mul(b, a), b) == quat_mul(quat_mul(a, b), a),
          "u2 u1 u2 = u1 u2 u1");
    r.add("extra relation",
          quat_mul(a, a) == quat_mul(quat_mul(b, quat_mul(a, a)), b),
          "u1^2 = u2 u1^2 u2");
    auto oa = order_of(a, id, qmul);
    r.add("generator order", oa == 8, "u1 order: " + std::to_string(oa));
    r.add("central element", qpow(a, 4) == quat_neg(id), "u1^4 = -1");

    // u1 -> R1, u2 -> R2 against G(3)
    GroupCtx                g(3, Variant::standard);
    auto const&             t = g.table();
    std::vector<Quaternion> img(t.size());
    img[0] = id;
    for (CosetId c = 2; c <= t.size(); ++c) {
      auto s = t.schreier(c);
      auto x = s.letter.index == 1 ? a : b;
      if (s.letter.exponent < 0) {
        x = quat_conj(x);
      }
      img[c - 1] = quat_mul(x, img[s.parent - 1]);
    }
    std::set<Quaternion> distinct(img.begin(), img.end());
    bool                 bij = distinct == got;
    std::size_t          bad = 0;
    for (CosetId x = 1; x <= t.size(); ++x) {
      for (CosetId y = 1; y <= t.size(); ++y) {
        if (!(img[g.product(x, y) - 1] == quat_mul(img[x - 1], img[y - 1]))) {
          ++bad;
        }
      }
    }
    r.add("isomorphism with G(3)", bij && bad == 0,
          "bijective: " + std::string(bij ? "yes" : "no") + ", product mismatches: "
              + std::to_string(bad) + " of " + std::to_string(t.size() * t.size()));
    return r;
  }

  Report verify_matrix_model(MatrixModel which) {
    Report     r;
    bool const gl = which == MatrixModel::gl23;
    r.title       = gl ? "GL(2,3)" : "SL(2,4)";
    auto gens     = matrix_generators(which);
    auto R1       = gens[0];
    auto R2       = gens[1];
    int  m        = R1.m;
    auto I        = mat_identity(m);

    auto G = closure_matrix(which);
    r.add("closure size", G.size() == 48, "generated " + std::to_string(G.size()) + " matrices");

    auto braid = mat_mul(mat_mul(R1, R2), R1) == mat_mul(mat_mul(R2, R1), R2);
    r.add("braid relation", braid, "R1 R2 R1 = R2 R1 R2");

    auto o1 = order_of(R1, I, mmul);
    auto o2 = order_of(R2, I, mmul);

    // all matrices of the right kind, by brute force
    std::set<MatMod> all;
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        for (int c = 0; c < m; ++c) {
          for (int d = 0; d < m; ++d) {
            auto x   = mat(m, a, b, c, d);
            int  det = mat_det(x);
            if (gl ? det != 0 : det == 1) {
              all.insert(x);
            }
          }
        }
      }
    }
    std::set<MatMod> got(G.begin(), G.end());

    if (gl) {
      r.add("extra relation", mat_mul(R1, R1) == mat_mul(mat_mul(R2, mpow(R1, 6)), R2),
            "R1^2 = R2 R1^6 R2");
      bool central = true;
      for (auto const& x : G) {
        central = central && mat_mul(x, mpow(R1, 4)) == mat_mul(mpow(R1, 4), x);
      }
      r.add("R1^4 central", central && mpow(R1, 4) == mpow(R2, 4), "R1^4 = R2^4 commutes with all 48");
      r.add("generator order", o1 == 8 && o2 == 8, "R1 order: " + std::to_string(o1));
      r.add("whole group", got == all,
            "closure equals all " + std::to_string(all.size()) + " invertible matrices mod 3");
    } else {
      r.add("R1^4 = 1", mpow(R1, 4) == I, "R1^4 = I");
      auto p = mat_mul(R1, R2);
      r.add("(R1 R2)^6 = 1", mpow(p, 6) == I, "(R1 R2)^6 = I");
      r.add("generator order", o1 == 4 && o2 == 4, "R1 order: " + std::to_string(o1));
      r.add("whole group", got == all,
            "closure equals all " + std::to_string(all.size()) + " determinant-1 matrices mod 4");
    }
    return r;
  }

  Report stem_report() {
    Report r;
    r.title = "stem extension test";
    {
      auto G   = closure_2O();
      bool res = stem_test(G, quat_one(), qmul, quat_neg(quat_one()));
      r.add("2O", res, std::string("-1 in commutator subgroup: ") + (res ? "true" : "false"));
    }
    {
      auto G   = closure_matrix(MatrixModel::gl23);
      auto z   = mpow(matrix_generators(MatrixModel::gl23)[0], 4);
      bool res = stem_test(G, mat_identity(3), mmul, z);
      r.add("GL(2,3)", res, std::string("R1^4 in commutator subgroup: ") + (res ? "true" : "false"));
    }
    {
      auto gens = matrix_generators(MatrixModel::sl24);
      auto G    = closure_matrix(MatrixModel::sl24);
      auto z    = mpow(mat_mul(gens[0], gens[1]), 3);
      bool res  = stem_test(G, mat_identity(4), mmul, z);
      r.add("SL(2,4)", !res,
            std::string("(R1 R2)^3 in commutator subgroup: ") + (res ? "true" : "false"));
    }
    return r;
  }

  Report extension_report() {
    Report r;
    r.title = "central extensions of S4";
    auto p2o = order_multiset_2O();
    auto pgl = order_multiset(MatrixModel::gl23);
    auto psl = order_multiset(MatrixModel::sl24);
    auto sum = [](std::map<unsigned, std::size_t> const& p) {
      std::size_t s = 0;
      for (auto const& [k, v] : p) {
        s += v;
      }
      return s;
    };
    r.add("2O order", sum(p2o) == 48, "order " + std::to_string(sum(p2o)) + ", orders " + to_string(p2o));
    r.add("GL(2,3) order", sum(pgl) == 48, "order " + std::to_string(sum(pgl)) + ", orders " + to_string(pgl));
    r.add("SL(2,4) order", sum(psl) == 48, "order " + std::to_string(sum(psl)) + ", orders " + to_string(psl));
    r.add("pairwise distinct", p2o != pgl && p2o != psl && pgl != psl,
          "order multisets differ pairwise");
    auto stems = stem_report();
    for (auto const& c : stems.checks) {
      r.add("stem " + c.name, c.pass, c.detail);
    }
    return r;
  }

}  // namespace braidq

#include <cmath>
#include <random>

#include "doctest.h"

#include "braidq/models.hpp"

using namespace braidq;

namespace {
  auto const qmul = [](Quaternion const& a, Quaternion const& b) { return quat_mul(a, b); };
  auto const mmul = [](MatMod const& a, MatMod const& b) { return mat_mul(a, b); };

  Quaternion hurwitz(int w, int x, int y, int z) {
    // (w + xi + yj + zk) / 2
    return Quaternion{DyadicRt2(w, 0, 1), DyadicRt2(x, 0, 1), DyadicRt2(y, 0, 1),
                      DyadicRt2(z, 0, 1)};
  }
}  // namespace

TEST_CASE("dyadic normalization") {
  CHECK(DyadicRt2(2, 4, 1) == DyadicRt2(1, 2, 0));
  CHECK(DyadicRt2(4, 0, 2) == DyadicRt2(1));
  CHECK(DyadicRt2(0, 0, 5) == DyadicRt2());
  auto h = DyadicRt2(0, 1, 1);
  CHECK(h * h == DyadicRt2(1, 0, 1));
  CHECK(h + h == DyadicRt2(0, 1, 0));
  CHECK_THROWS_AS(DyadicRt2(1, 0, -1), Error);
}

TEST_CASE("dyadic arithmetic matches doubles") {
  std::mt19937_64                    rng(12);
  std::uniform_int_distribution<int> small(-9, 9), ex(0, 4);
  for (int t = 0; t < 10000; ++t) {
    DyadicRt2 x(small(rng), small(rng), ex(rng)), y(small(rng), small(rng), ex(rng));
    double    a = x.to_double(), b = y.to_double();
    CHECK(std::abs((x + y).to_double() - (a + b)) < 1e-12);
    CHECK(std::abs((x - y).to_double() - (a - b)) < 1e-12);
    CHECK(std::abs((x * y).to_double() - a * b) < 1e-12);
  }
}

TEST_CASE("quaternion units") {
  auto i = quat_i(), j = quat_j(), k = quat_k(), one = quat_one();
  auto m1 = quat_neg(one);
  CHECK(quat_mul(i, i) == m1);
  CHECK(quat_mul(j, j) == m1);
  CHECK(quat_mul(k, k) == m1);
  CHECK(quat_mul(i, j) == k);
  CHECK(quat_mul(i, j) == quat_neg(quat_mul(j, i)));
  CHECK(quat_mul(j, k) == quat_neg(quat_mul(k, j)));
  CHECK(quat_mul(k, i) == quat_neg(quat_mul(i, k)));
  CHECK(quat_mul(one, u1()) == u1());
  CHECK(quat_mul(u1(), u1()) == quat_neg(k));
  auto a = u1(), b = u2();
  CHECK(quat_mul(quat_mul(b, a), b) == quat_mul(quat_mul(a, b), a));
  CHECK(quat_mul(a, a) == quat_mul(quat_mul(b, quat_mul(a, a)), b));
  CHECK(quat_norm2(a) == DyadicRt2(1));
  CHECK(quat_mul(a, quat_conj(a)) == one);
}

TEST_CASE("2O closure") {
  auto G = closure_2O();
  CHECK(G.size() == 48);
  for (auto const& q : G) {
    CHECK(quat_norm2(q) == DyadicRt2(1));
    for (auto const* c : {&q.w, &q.x, &q.y, &q.z}) {
      CHECK(c->k() <= 1);
    }
  }
  CHECK(order_multiset_2O() ==
        std::map<unsigned, std::size_t>{{1, 1}, {2, 1}, {3, 8}, {4, 18}, {6, 8}, {8, 12}});
}

TEST_CASE("binary tetrahedral subgroup") {
  std::vector<Quaternion> units;
  for (auto s : {1, -1}) {
    units.push_back(Quaternion{DyadicRt2(s), {}, {}, {}});
    units.push_back(Quaternion{{}, DyadicRt2(s), {}, {}});
    units.push_back(Quaternion{{}, {}, DyadicRt2(s), {}});
    units.push_back(Quaternion{{}, {}, {}, DyadicRt2(s)});
  }
  for (int m = 0; m < 16; ++m) {
    units.push_back(hurwitz(m & 1 ? -1 : 1, m & 2 ? -1 : 1, m & 4 ? -1 : 1, m & 8 ? -1 : 1));
  }
  REQUIRE(units.size() == 24);
  CHECK(generate_closure(units, quat_one(), qmul, 100).size() == 24);
}

TEST_CASE("matrix models") {
  CHECK(closure_matrix(MatrixModel::gl23).size() == 48);
  CHECK(closure_matrix(MatrixModel::sl24).size() == 48);
  for (auto const& x : closure_matrix(MatrixModel::sl24)) {
    CHECK(mat_det(x) == 1);
  }
  CHECK(order_multiset(MatrixModel::gl23) ==
        std::map<unsigned, std::size_t>{{1, 1}, {2, 13}, {3, 8}, {4, 6}, {6, 8}, {8, 12}});
  CHECK(order_multiset(MatrixModel::sl24) ==
        std::map<unsigned, std::size_t>{{1, 1}, {2, 7}, {3, 8}, {4, 24}, {6, 8}});
  auto gl = verify_matrix_model(MatrixModel::gl23);
  auto sl = verify_matrix_model(MatrixModel::sl24);
  CHECK(gl.all_pass());
  CHECK(sl.all_pass());
  CHECK(sl.to_text().find("R1 order: 4") != std::string::npos);
  CHECK(gl.to_text().find("R1 order: 8") != std::string::npos);
}

TEST_CASE("reports") {
  auto r = verify_2O();
  CHECK(r.all_pass());
  CHECK(r.to_text().find("CHECK isomorphism with G(3): PASS") != std::string::npos);
  CHECK(r.to_json().find("\"pass\"") != std::string::npos);
  CHECK(stem_report().all_pass());
  CHECK(extension_report().all_pass());
  Report bad;
  bad.add("x", false, "no");
  CHECK_FALSE(bad.all_pass());
  CHECK(bad.to_text() == "CHECK x: FAIL no\n");
}

TEST_CASE("stem test") {
  auto G = closure_2O();
  CHECK(stem_test(G, quat_one(), qmul, quat_neg(quat_one())));
  auto S = closure_matrix(MatrixModel::sl24);
  auto g = matrix_generators(MatrixModel::sl24);
  auto p = mat_mul(g[0], g[1]);
  auto z = mat_mul(p, mat_mul(p, p));
  CHECK_FALSE(stem_test(S, mat_identity(4), mmul, z));
  CHECK_THROWS_AS((void)stem_test(G, quat_one(), qmul, u1()), Error);
}

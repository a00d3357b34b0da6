#include <random>
#include <set>

#include "doctest.h"

#include "braidq/hyperocta.hpp"

using namespace braidq;

TEST_CASE("theta generators") {
  CHECK(theta_generator(1, 4).images() == std::vector<int>{2, -1, 3, 4});
  CHECK(theta_generator(3, 4).images() == std::vector<int>{1, 2, 4, -3});
  CHECK_THROWS_AS((void)theta_generator(1, 1), Error);
  CHECK_THROWS_AS((void)theta_generator(4, 4), Error);
  CHECK(theta_plane(1, 2, 4) == theta_generator(1, 4));
  CHECK(theta_plane(2, 1, 3) == inverse(theta_plane(1, 2, 3)));
  CHECK(theta_plane(1, 3, 3).images() == std::vector<int>{3, 2, -1});
}

TEST_CASE("composition") {
  auto a = theta_generator(1, 3), b = theta_generator(2, 3);
  CHECK(compose(a, SignedPerm::identity(3)) == a);
  CHECK(compose(compose(a, a), compose(a, a)).is_identity());
  CHECK_FALSE(compose(a, b) == compose(b, a));
  // a after b: e1 -> e1 -> e2
  CHECK(compose(a, b).apply(1) == 2);
  CHECK(compose(a, inverse(a)).is_identity());
}

TEST_CASE("theta of words") {
  CHECK(theta_word(power(3, 1, 4)).is_identity());
  CHECK(theta_word(power(3, 1, 2)).images() == std::vector<int>{-1, -2, 3});
  for (int n = 3; n <= 6; ++n) {
    for (auto v : {Variant::standard, Variant::twisted}) {
      for (auto const& r : presentation_for(n, v).relators) {
        CHECK(theta_word(r).is_identity());
      }
    }
  }
}

TEST_CASE("determinants") {
  CHECK(determinant(SignedPerm::identity(4)) == 1);
  for (int n = 2; n <= 6; ++n) {
    for (int i = 1; i < n; ++i) {
      CHECK(determinant(theta_generator(i, n)) == 1);
    }
  }
  CHECK(determinant(SignedPerm({-1, 2, 3})) == -1);
  CHECK(determinant(SignedPerm({2, 1, 3})) == -1);
}

TEST_CASE("signed permutation validation and text") {
  CHECK_THROWS_AS(SignedPerm({1, 1}), Error);
  CHECK_THROWS_AS(SignedPerm({1, 3}), Error);
  CHECK_THROWS_AS(SignedPerm({0, 1}), Error);
  SignedPerm p({2, -1, 3});
  CHECK(to_string(p) == "[2,-1,3]");
  CHECK(parse_signed_perm("[2,-1,3]") == p);
  CHECK(compose(p, inverse(p)).is_identity());
  CHECK(to_matrix(p) == std::vector<int>{0, -1, 0, 1, 0, 0, 0, 0, 1});
}

TEST_CASE("theta is a homomorphism") {
  GroupCtx g(3, Variant::standard);
  auto     th = theta_table(g);
  for (auto a : g.elements()) {
    CHECK(th[a.id - 1] == theta_word(name_word(g, a), 3));
    for (auto b : g.elements()) {
      CHECK(th[g.product(a.id, b.id) - 1] == compose(th[a.id - 1], th[b.id - 1]));
    }
  }
  std::mt19937_64 rng(8);
  for (int n : {4, 5}) {
    GroupCtx                               h(n, Variant::standard);
    auto                                   t = theta_table(h);
    std::uniform_int_distribution<CosetId> pick(1, static_cast<CosetId>(h.order()));
    for (int k = 0; k < 3000; ++k) {
      auto a = pick(rng), b = pick(rng);
      auto uv = representative(h.table(), a) * representative(h.table(), b);
      CHECK(theta_word(uv, n) == compose(t[a - 1], t[b - 1]));
    }
  }
}

TEST_CASE("image of theta") {
  std::size_t const want[] = {24, 192, 1920};
  for (int n = 3; n <= 5; ++n) {
    GroupCtx             g(n, Variant::standard);
    auto                 th = theta_table(g);
    std::set<SignedPerm> img(th.begin(), th.end());
    CHECK(img.size() == want[n - 3]);
    CHECK(rotation_group(n).size() == want[n - 3]);
    for (auto const& p : img) {
      CHECK(determinant(p) == 1);
    }
  }
}

TEST_CASE("kernel") {
  for (int n = 3; n <= 5; ++n) {
    GroupCtx g(n, Variant::standard);
    CHECK(kernel(g) ==
          std::vector<Element>{g.identity(), element_from_word(g, power(n, 1, 4))});
  }
}

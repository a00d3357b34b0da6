#include <random>

#include "doctest.h"

#include "braidq/hyperocta.hpp"
#include "braidq/words.hpp"

using namespace braidq;

namespace {
  Word random_word(int rank, int len, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> idx(1, rank - 1), sgn(0, 1);
    Word                               w(rank);
    for (int k = 0; k < len; ++k) {
      w.push_back(Letter{idx(rng), sgn(rng) ? 1 : -1});
    }
    return w;
  }
}  // namespace

TEST_CASE("parse_word tokenizes without reducing") {
  auto w = parse_word("R1 R2 R1", 3);
  REQUIRE(w.size() == 3);
  CHECK(w[0] == Letter{1, 1});
  CHECK(w[1] == Letter{2, 1});
  auto u = parse_word("R2^-1 R2", 3);
  CHECK(u.size() == 2);
  CHECK(u[0] == Letter{2, -1});
  CHECK_THROWS_AS((void)parse_word("R5", 4), Error);
  CHECK_THROWS_AS((void)parse_word("R0", 4), Error);
  CHECK_THROWS_AS((void)parse_word("R1^2", 4), Error);
  CHECK_THROWS_AS((void)parse_word("S1", 4), Error);
  CHECK(parse_word("", 3).empty());
}

TEST_CASE("free_reduce") {
  CHECK(free_reduce(parse_word("R2^-1 R2", 3)).empty());
  CHECK(free_reduce(parse_word("R1 R2 R2^-1 R1", 3)) == parse_word("R1 R1", 3));
  CHECK(free_reduce(parse_word("R1 R2 R1", 3)) == parse_word("R1 R2 R1", 3));
  CHECK(free_reduce(parse_word("R1 R2 R3 R3^-1 R2^-1 R1^-1", 4)).empty());
}

TEST_CASE("invert") {
  CHECK(invert(parse_word("R1 R2", 3)) == parse_word("R2^-1 R1^-1", 3));
  CHECK(invert(Word(3)).empty());
  CHECK(invert(parse_word("R1^-1", 3)) == parse_word("R1", 3));
}

TEST_CASE("free reduction properties on random words") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 500; ++k) {
    int  rank = 3 + k % 4;
    auto w    = random_word(rank, k % 23, rng);
    auto r    = free_reduce(w);
    CHECK(free_reduce(r) == r);
    CHECK(free_reduce(w * invert(w)).empty());
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
      CHECK_FALSE(r[i] == r[i + 1].inverse());
    }
    CHECK(parse_word(to_tokens(w), rank) == w);
  }
}

TEST_CASE("pretty printing") {
  CHECK(to_pretty(Word(3)) == "Id");
  CHECK(to_pretty(parse_word("R1 R1 R1 R1 R2 R2 R2 R1", 3)) == "R1^4 R2^3 R1");
  CHECK(to_pretty(parse_word("R3^-1 R3^-1", 4)) == "R3^-2");
}

TEST_CASE("presentation_for relator sets") {
  auto p3 = presentation_for(3, Variant::standard);
  CHECK(p3.relators.size() == 2);
  CHECK(p3.relators[1] == free_reduce(parse_word("R1 R1 R2^-1 R1^-1 R1^-1 R2^-1", 3)));
  // 2 braid, 1 far commutator, 1 extra
  CHECK(presentation_for(4, Variant::standard).relators.size() == 4);
  CHECK(presentation_for(6, Variant::standard).relators.size() == 4 + 6 + 1);
  auto t3 = presentation_for(3, Variant::twisted);
  CHECK(t3.relators.size() == 3);
  bool has_six = false;
  for (auto const& r : t3.relators) {
    has_six = has_six || r == free_reduce(parse_word(
                                 "R1 R1 R2^-1 R1^-1 R1^-1 R1^-1 R1^-1 R1^-1 R1^-1 R2^-1", 3));
  }
  CHECK(has_six);
  for (int n = 3; n <= 7; ++n) {
    for (auto v : {Variant::standard, Variant::twisted}) {
      for (auto const& r : presentation_for(n, v).relators) {
        CHECK_FALSE(r.empty());
        CHECK(free_reduce(r) == r);
      }
    }
  }
}

TEST_CASE("presentation text round trip") {
  for (int n = 3; n <= 6; ++n) {
    auto p = presentation_for(n, Variant::twisted);
    auto q = parse_presentation(to_text(p));
    CHECK(q.rank == p.rank);
    CHECK(q.relators == p.relators);
  }
  CHECK_THROWS_AS((void)parse_presentation("relator: R1\n"), Error);
}

TEST_CASE("plane letters") {
  CHECK(plane_to_standard(parse_plane_word("R12", 3), 3) == parse_word("R1", 3));
  CHECK(plane_to_standard(parse_plane_word("R31", 3), 3) == parse_word("R1 R2 R1^-1", 3));
  CHECK(plane_to_standard(parse_plane_word("R41", 4), 4)
        == parse_word("R1 R2^-1 R1^-1 R3 R1 R2 R1^-1", 4));
  CHECK(parse_plane_word("R1,2 R23", 3) == parse_plane_word("R12 R23", 3));
  CHECK_THROWS_AS((void)parse_plane_word("R11", 3), Error);
  CHECK_THROWS_AS((void)parse_plane_word("R14", 3), Error);
  CHECK(standard_to_plane(parse_word("R1 R2^-1", 3)) == parse_plane_word("R12 R32", 3));
}

TEST_CASE("plane_to_standard agrees with the direct signed permutation") {
  for (int n = 3; n <= 6; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) {
          continue;
        }
        PlaneWord pw{PlaneLetter{i, j}};
        CHECK(theta_word(plane_to_standard(pw, n), n) == theta_plane(i, j, n));
      }
    }
  }
}

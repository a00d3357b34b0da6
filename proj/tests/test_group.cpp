#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"

#include "braidq/group.hpp"

using namespace braidq;

namespace {
  Element W(GroupCtx const& g, char const* text) {
    return element_from_word(g, parse_word(text, g.rank()));
  }

  GroupCtx const& G(int n) {
    static GroupCtx g3(3, Variant::standard), g4(4, Variant::standard),
        g5(5, Variant::standard), g6(6, Variant::standard);
    return n == 3 ? g3 : n == 4 ? g4 : n == 5 ? g5 : g6;
  }

  CanonicalForm random_form(int n, std::mt19937_64& rng) {
    CanonicalForm cf{n, std::uniform_int_distribution<int>(0, 7)(rng), {}};
    for (int i = 2; i < n; ++i) {
      auto ds = descriptors_at(i);
      cf.levels.push_back(ds[std::uniform_int_distribution<std::size_t>(0, ds.size() - 1)(rng)]);
    }
    return cf;
  }
}  // namespace

TEST_CASE("element_from_word examples") {
  auto const& g = G(3);
  CHECK(element_from_word(g, Word(3)) == g.identity());
  CHECK(W(g, "R2 R1 R2") == W(g, "R1 R2 R1"));
  CHECK(W(g, "R1 R1") == W(g, "R2 R1 R1 R2"));
}

TEST_CASE("canonical form examples") {
  auto const& g  = G(3);
  auto        id = canonical_form(g, g.identity());
  CHECK(id.m == 0);
  CHECK(id.levels == std::vector<Descriptor>{{Descriptor::Kind::power, 0}});

  CanonicalForm four{3, 4, {{Descriptor::Kind::power, 0}}};
  CHECK(expand(four) == parse_word("R1 R1 R1 R1", 3));
  CanonicalForm cube{3, 0, {{Descriptor::Kind::cube_run, 1}}};
  CHECK(expand(cube) == parse_word("R2 R2 R2 R1", 3));
  CanonicalForm mixed{4, 1, {{Descriptor::Kind::run, 1}, {Descriptor::Kind::power, 2}}};
  CHECK(expand(mixed) == parse_word("R1 R2 R1 R3 R3", 4));
  CHECK(canonical_form(G(4), element_from_word(G(4), expand(mixed))) == mixed);

  // R1^m R2^3 R1 for all eight m
  std::set<CosetId> seen;
  for (int m = 0; m < 8; ++m) {
    CanonicalForm cf{3, m, {{Descriptor::Kind::cube_run, 1}}};
    auto          e = element_from_word(g, expand(cf));
    CHECK(canonical_form(g, e) == cf);
    seen.insert(e.id);
  }
  CHECK(seen.size() == 8);
}

TEST_CASE("descriptor counts give 2^n n!") {
  for (int n = 3; n <= 8; ++n) {
    std::size_t total = 8, expect = std::size_t{1} << n;
    for (int i = 2; i < n; ++i) {
      CHECK(descriptors_at(i).size() == static_cast<std::size_t>(2 * (i + 1)));
      total *= descriptors_at(i).size();
    }
    for (int k = 2; k <= n; ++k) {
      expect *= k;
    }
    CHECK(total == expect);
  }
}

TEST_CASE("canonical forms are a bijection (exhaustive to n=4)") {
  for (int n : {3, 4}) {
    auto const&       g = G(n);
    std::set<CosetId> ids;
    for (auto e : g.elements()) {
      auto cf = canonical_form(g, e);
      CHECK(element_from_word(g, expand(cf)) == e);
      ids.insert(e.id);
    }
    CHECK(ids.size() == g.order());
  }
}

TEST_CASE("canonical forms round trip on random samples (n=5,6)") {
  std::mt19937_64 rng(11);
  for (int n : {5, 6}) {
    auto const& g = G(n);
    for (int k = 0; k < 2000; ++k) {
      auto cf = random_form(n, rng);
      CHECK(canonical_form(g, element_from_word(g, expand(cf))) == cf);
    }
  }
}

TEST_CASE("family sizes") {
  auto f3 = family_sizes(G(3));
  REQUIRE(f3.size() == 3);
  CHECK(f3[0].second == 32);
  CHECK(f3[1].second == 8);
  CHECK(f3[2].second == 8);
  std::vector<std::size_t> want{128, 32, 32, 32, 32, 32, 8, 8, 8, 8, 32, 8, 8, 8, 8};
  std::vector<std::size_t> got;
  for (auto const& [k, c] : family_sizes(G(4))) {
    got.push_back(c);
  }
  CHECK(got == want);
}

TEST_CASE("multiplication") {
  auto const& g = G(3);
  auto        b = W(g, "R2 R1^-1");
  CHECK(multiply(g, g.identity(), b) == b);
  auto r14 = multiply(g, W(g, "R1 R1 R1"), W(g, "R1"));
  CHECK(r14 != g.identity());
  CHECK(multiply(g, r14, r14) == g.identity());
  for (auto a : g.elements()) {
    CHECK(multiply(g, a, g.element(g.inverse(a.id))) == g.identity());
  }
}

TEST_CASE("multiplication oracle against the table") {
  {
    auto const& g = G(3);
    for (auto a : g.elements()) {
      for (auto b : g.elements()) {
        auto via_table = coset_action(g.table(), 1, representative(g.table(), a.id) *
                                                        representative(g.table(), b.id));
        CHECK(multiply(g, a, b).id == via_table);
        CHECK(g.product(a.id, b.id) == via_table);
      }
    }
  }
  std::mt19937_64 rng(5);
  for (int n : {4, 5}) {
    auto const&                            g = G(n);
    std::uniform_int_distribution<CosetId> pick(1, static_cast<CosetId>(g.order()));
    for (int k = 0; k < 2000; ++k) {
      auto a = g.element(pick(rng)), b = g.element(pick(rng));
      CHECK(multiply(g, a, b).id ==
            coset_action(g.table(), 1,
                         representative(g.table(), a.id) * representative(g.table(), b.id)));
    }
  }
}

TEST_CASE("generator orders and R1^4") {
  for (int n = 3; n <= 6; ++n) {
    auto const& g   = G(n);
    auto        r14 = element_from_word(g, power(n, 1, 4));
    CHECK(element_order(g, r14) == 2);
    CHECK(is_central(g, r14));
    for (int i = 1; i < n; ++i) {
      CHECK(element_order(g, element_from_word(g, power(n, i, 1))) == 8);
      CHECK(element_from_word(g, power(n, i, 4)) == r14);
    }
  }
  CHECK(element_order(G(3), G(3).identity()) == 1);
}

TEST_CASE("centers") {
  auto const& g3 = G(3);
  CHECK(center(g3) == std::vector<Element>{g3.identity(), W(g3, "R1 R1 R1 R1")});
  auto const& g4 = G(4);
  auto        z4 = center(g4);
  CHECK(z4.size() == 4);
  CHECK(std::find(z4.begin(), z4.end(), W(g4, "R1 R1 R3 R3")) != z4.end());
  CHECK(element_from_word(g4, power(parse_word("R1 R2 R3", 4), 4)) ==
        W(g4, "R1 R1 R3^-1 R3^-1"));
  auto const& g5 = G(5);
  CHECK(center(g5) == std::vector<Element>{g5.identity(), W(g5, "R1 R1 R1 R1")});
  CHECK(is_central(G(6), W(G(6), "R1 R1 R3 R3 R5 R5")));
}

TEST_CASE("quotients") {
  auto const& g = G(3);
  auto        q = quotient(g, W(g, "R1 R1 R1 R1"));
  CHECK(q.order() == 24);
  std::map<unsigned, std::size_t> s4{{1, 1}, {2, 9}, {3, 8}, {4, 6}};
  CHECK(order_profile(q) == s4);
  CHECK(quotient_order_profile(g, W(g, "R1 R1 R1 R1")) == s4);
  CHECK_THROWS_AS((void)quotient(g, g.identity()), Error);
  CHECK_THROWS_AS((void)quotient(g, W(g, "R1")), Error);
  auto const& g4 = G(4);
  CHECK(quotient(g4, element_from_word(g4, power(4, 1, 4))).order() == 192);
}

TEST_CASE("elements from another context are rejected") {
  GroupCtx other(3, Variant::standard);
  CHECK_THROWS_AS((void)multiply(G(3), other.identity(), G(3).identity()), Error);
}

TEST_CASE("cayley DOT") {
  auto const& g   = G(3);
  auto        dot = cayley_dot(g);
  CHECK(dot.rfind("digraph", 0) == 0);
  std::size_t nodes = 0, edges = 0, dotted = 0;
  for (std::size_t p = 0; (p = dot.find("[label=", p)) != std::string::npos; ++p) {
    ++nodes;
  }
  for (std::size_t p = 0; (p = dot.find(" -> ", p)) != std::string::npos; ++p) {
    ++edges;
  }
  for (std::size_t p = 0; (p = dot.find("style=dotted", p)) != std::string::npos; ++p) {
    ++dotted;
  }
  CHECK(nodes == 48);
  CHECK(edges == 96);
  CHECK(dotted == 48);
  auto q    = quotient(g, W(g, "R1 R1 R1 R1"));
  auto qdot = cayley_dot(q);
  nodes     = 0;
  for (std::size_t p = 0; (p = qdot.find("[label=", p)) != std::string::npos; ++p) {
    ++nodes;
  }
  CHECK(nodes == 24);
}

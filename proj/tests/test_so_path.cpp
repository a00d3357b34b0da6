#include <cmath>
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"

#include "braidq/group.hpp"
#include "braidq/so_path.hpp"

using namespace braidq;

namespace {
  double max_entry(Mat const& m) {
    return m.cwiseAbs().maxCoeff();
  }

  // signed angle, in quarter turns
  Mat rot(int i, int j, int n, double t) {
    return t < 0 ? generator_matrix(j, i, n, -t) : generator_matrix(i, j, n, t);
  }
}  // namespace

TEST_CASE("generating matrices") {
  CHECK(max_entry(generator_matrix(1, 2, 3, 0) - Mat::Identity(3, 3)) < 1e-15);
  auto g = generator_matrix(1, 2, 3, 1);
  // column 1 = e2, column 2 = -e1
  CHECK(g(1, 0) == 1);
  CHECK(g(0, 1) == -1);
  CHECK(g(2, 2) == 1);
  for (int n = 3; n <= 6; ++n) {
    CHECK(distance(Mat::Identity(n, n), generator_matrix(1, n, n, 1)) ==
          doctest::Approx(2).epsilon(1e-12));
    CHECK(distance(Mat::Identity(n, n), generator_matrix(2, 1, n, 0.5)) ==
          doctest::Approx(2 - std::sqrt(2.0)).epsilon(1e-12));
  }
}

TEST_CASE("distance") {
  auto x = generator_matrix(1, 3, 4, 0.3);
  CHECK(distance(x, x) == doctest::Approx(0).epsilon(1e-12));
  Mat pi = generator_matrix(1, 2, 3, 1) * generator_matrix(1, 2, 3, 1);
  CHECK(distance(Mat::Identity(3, 3), pi) == doctest::Approx(4).epsilon(1e-12));
  Mat bad = Mat::Identity(3, 3) * 2;
  CHECK_THROWS_AS((void)distance(bad, bad), Error);
}

TEST_CASE("compiling paths") {
  auto p = compile_path(parse_plane_word("R12", 3), 3);
  CHECK(p.size() == 16);
  CHECK(max_entry(p.samples.front() - Mat::Identity(3, 3)) < 1e-15);
  CHECK(max_entry(p.samples.back() - generator_matrix(1, 2, 3, 1)) < 1e-12);
  auto empty = compile_path({}, 3);
  CHECK(is_local(empty));
  CHECK(is_closed(empty));
  // R3^-1 R1^-1 R2^-1 R1 with R1 = R23, R2 = R31, R3 = R12
  auto tri = compile_path(parse_plane_word("R21 R32 R13 R23", 3), 3);
  CHECK(is_closed(tri, 1e-10));
  CHECK(is_local(tri));
  CHECK_FALSE(is_local(compile_word(power(3, 1, 4))));
  for (auto const& s : tri.samples) {
    CHECK(orthogonality_error(s) < 1e-10);
    CHECK(s.determinant() == doctest::Approx(1));
  }
}

TEST_CASE("compiled endpoints match theta") {
  for (int n = 3; n <= 5; ++n) {
    for (auto v : {Variant::standard, Variant::twisted}) {
      for (auto const& r : presentation_for(n, v).relators) {
        auto p = compile_word(r, 4);
        CHECK(max_entry(p.samples.back() - signed_perm_matrix(theta_word(r, n))) < 1e-9);
      }
    }
  }
  GroupCtx g(3, Variant::standard);
  for (auto e : g.elements()) {
    auto w = expand(canonical_form(g, e));
    auto p = compile_word(w, 4);
    CHECK(max_entry(p.samples.back() - signed_perm_matrix(theta_word(w, 3))) < 1e-9);
  }
}

TEST_CASE("descent steps") {
  std::mt19937_64                  rng(4);
  std::uniform_real_distribution<> t(-0.45, 0.45);
  for (int k = 0; k < 200; ++k) {
    Mat x = rot(1, 2, 4, t(rng)) * rot(2, 3, 4, t(rng)) * rot(3, 4, 4, t(rng)) *
            rot(1, 4, 4, t(rng));
    if (max_entry(x - x.transpose()) <= 1e-6) {
      continue;
    }
    Mat y = descent_step(x, 0.01);
    CHECK(orthogonality_error(y) < 1e-8);
    CHECK(distance(Mat::Identity(4, 4), y) < distance(Mat::Identity(4, 4), x));
  }
  // symmetric orthogonal matrices are fixed points
  Mat pi = generator_matrix(1, 2, 3, 1) * generator_matrix(1, 2, 3, 1);
  CHECK(max_entry(descent_step(pi, 0.05) - pi) < 1e-12);
}

TEST_CASE("flow contracts the triangular words") {
  auto words = triangular_identity_words();
  CHECK(words.size() == 24);
  for (auto const& w : words) {
    auto p = compile_path(w, 3);
    CHECK(is_closed(p, 1e-10));
    CHECK(is_local(p));
    auto r = contract(p);
    CHECK(r.verdict == Verdict::contracted);
    CHECK(r.final_max_d < 1e-6);
    for (auto const& s : r.path.samples) {
      CHECK(orthogonality_error(s) < 1e-8);
    }
  }
  auto id = contract(compile_path({}, 3));
  CHECK(id.verdict == Verdict::contracted);
  CHECK(id.iterations == 0);
  CHECK_THROWS_AS((void)contract(compile_path(parse_plane_word("R12", 3), 3)), Error);
}

TEST_CASE("4pi contracts, 2pi stalls") {
  auto four = contract(compile_word(power(3, 1, 8)));
  CHECK(four.verdict == Verdict::contracted);
  auto two = stall_witness(compile_word(power(3, 1, 4)));
  CHECK(two.verdict == Verdict::stalled);
  CHECK(two.retries == 10);
  for (double d : two.trace) {
    CHECK(d >= 4 - 1e-3);
  }
  // same seed, same trace
  auto again = stall_witness(compile_word(power(3, 1, 4)));
  CHECK(again.trace == two.trace);
}

TEST_CASE("snapping") {
  CHECK(snap_compiled(parse_plane_word("R12", 3), 3) == parse_plane_word("R12", 3));
  auto w = parse_plane_word("R23 R12", 3);
  auto s = snap_compiled(w, 3);
  CHECK(theta_plane_word(s, 3) == theta_plane_word(w, 3));
  auto geo = geodesic_path(generator_matrix(1, 2, 3, 1), 64);
  CHECK(snap_to_word(geo) == parse_plane_word("R12", 3));
  auto half = geodesic_path(generator_matrix(1, 2, 3, 0.5), 8);
  CHECK_THROWS_AS((void)snap_to_word(half), Error);
}

TEST_CASE("reduction") {
  auto two = reduce_local_word(parse_plane_word("R21 R12", 3), 3);
  REQUIRE(two.steps.size() == 1);
  CHECK(two.steps[0].rule == "cancel");
  CHECK(replay(two).empty());
  auto eq = reduce_local_word(parse_plane_word("R32 R31 R23 R12", 3), 3);
  CHECK(replay(eq).empty());
  for (auto const& w : triangular_identity_words()) {
    CHECK(replay(reduce_local_word(w, 3)).empty());
  }
  CHECK_THROWS_AS((void)reduce_local_word(parse_plane_word("R12", 3), 3), Error);
  // closed but not local
  CHECK_THROWS_AS((void)reduce_local_word(parse_plane_word("R12 R12 R12 R12", 3), 3), Error);
  std::set<std::string> allowed{"cancel",
                                "commute",
                                "R_jk R_ij = R_ik R_jk",
                                "R_kj R_ij = R_ki R_kj",
                                "R_ik R_ij = R_ij R_kj",
                                "R_ki R_ij = R_ij R_jk",
                                "R_jk R_ji = R_ki R_jk",
                                "R_kj R_ji = R_ik R_kj",
                                "R_ik R_ji = R_ji R_jk",
                                "R_ki R_ji = R_ji R_kj"};
  std::mt19937_64 rng(21);
  for (int k = 0; k < 40; ++k) {
    int  n = 4 + k % 2;
    auto w = random_local_closed_word(n, 1 + k % 3, rng);
    CHECK(is_local(compile_path(w, n)));
    auto t = reduce_local_word(w, n);
    CHECK(replay(t).empty());
    for (auto const& st : t.steps) {
      CHECK(allowed.count(st.rule) == 1);
    }
  }
}

TEST_CASE("tampered traces fail replay") {
  auto t = reduce_local_word(triangular_identity_words()[0], 3);
  REQUIRE(!t.steps.empty());
  t.steps[0].rule = "commute";
  CHECK_THROWS_AS((void)replay(t), Error);
}

TEST_CASE("CSV output") {
  auto p   = compile_path(parse_plane_word("R12", 3), 3, 3);
  auto csv = to_csv(p);
  CHECK(csv.rfind("t,x11,x12,x13,x21,x22,x23,x31,x32,x33\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  auto r = contract(compile_path(triangular_identity_words()[0], 3));
  CHECK(trace_csv(r).rfind("iteration,max_d\n", 0) == 0);
}

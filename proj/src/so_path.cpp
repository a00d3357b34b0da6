#include "braidq/so_path.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <numeric>

#include <unsupported/Eigen/MatrixFunctions>

namespace braidq {

  namespace {
    constexpr double kOrthoTol = 1e-8;
    constexpr double kLocalTol = 1e-10;
    constexpr double kCrossEps = 1e-12;

    // D without input checks
    double dist(Mat const& X, Mat const& Y) {
      return static_cast<double>(X.rows()) - (X.array() * Y.array()).sum();
    }

    double dist_id(Mat const& X) {
      return static_cast<double>(X.rows()) - X.trace();
    }
  }  // namespace

  Mat generator_matrix(int i, int j, int n, double t) {
    validate(PlaneLetter{i, j}, n);
    if (!(t >= 0.0 && t <= 1.0)) {
      throw Error("generator parameter must lie in [0,1]");
    }
    double c = std::cos(t * std::numbers::pi / 2);
    double s = std::sin(t * std::numbers::pi / 2);
    if (t == 1.0) {
      c = 0.0;
      s = 1.0;
    }
    Mat X          = Mat::Identity(n, n);
    X(i - 1, i - 1) = c;
    X(j - 1, j - 1) = c;
    X(j - 1, i - 1) = s;
    X(i - 1, j - 1) = -s;
    return X;
  }

  Mat signed_perm_matrix(SignedPerm const& p) {
    auto const n = p.size();
    auto       m = to_matrix(p);
    Mat        X(n, n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        X(r, c) = m[static_cast<std::size_t>(r) * n + c];
      }
    }
    return X;
  }

  RotationPath compile_path(PlaneWord const& pw, int n, int samples_per_letter) {
    if (samples_per_letter < 2) {
      throw Error("samples_per_letter must be at least 2");
    }
    for (auto const& l : pw) {
      validate(l, n);
    }
    RotationPath out;
    out.n = n;
    out.samples.push_back(Mat::Identity(n, n));
    out.params.push_back(0.0);
    if (pw.empty()) {
      out.samples.push_back(Mat::Identity(n, n));
      out.params.push_back(1.0);
      return out;
    }
    auto const per   = samples_per_letter - 1;
    auto const total = static_cast<double>(pw.size() * per);
    Mat        E     = Mat::Identity(n, n);
    std::size_t idx  = 0;
    for (auto it = pw.rbegin(); it != pw.rend(); ++it, ++idx) {
      for (int q = 1; q <= per; ++q) {
        double t = q == per ? 1.0 : static_cast<double>(q) / per;
        out.samples.push_back(generator_matrix(it->i, it->j, n, t) * E);
        out.params.push_back(static_cast<double>(idx * per + q) / total);
      }
      E = generator_matrix(it->i, it->j, n, 1.0) * E;
    }
    out.params.back() = 1.0;
    return out;
  }

  RotationPath compile_word(Word const& w, int samples_per_letter) {
    return compile_path(standard_to_plane(w), w.rank(), samples_per_letter);
  }

  RotationPath geodesic_path(Mat const& target, int samples) {
    if (samples < 2) {
      throw Error("geodesic needs at least 2 samples");
    }
    if (orthogonality_error(target) > kOrthoTol) {
      throw Error("geodesic target is not orthogonal");
    }
    Mat          L = target.log();
    RotationPath out;
    out.n = static_cast<int>(target.rows());
    for (int q = 0; q < samples; ++q) {
      double t = static_cast<double>(q) / (samples - 1);
      out.samples.push_back(q == samples - 1 ? target : Mat((t * L).exp()));
      out.params.push_back(t);
    }
    return out;
  }

  double orthogonality_error(Mat const& X) {
    if (X.rows() != X.cols()) {
      return std::numeric_limits<double>::infinity();
    }
    return (X.transpose() * X - Mat::Identity(X.rows(), X.cols())).cwiseAbs().maxCoeff();
  }

  double distance(Mat const& X, Mat const& Y) {
    if (X.rows() != Y.rows() || X.cols() != Y.cols()) {
      throw Error("distance: size mismatch");
    }
    if (orthogonality_error(X) > kOrthoTol || orthogonality_error(Y) > kOrthoTol) {
      throw Error("distance: input is not orthogonal within tolerance");
    }
    return dist(X, Y);
  }

  double max_distance_to_identity(RotationPath const& p) {
    double m = 0;
    for (auto const& X : p.samples) {
      m = std::max(m, dist_id(X));
    }
    return m;
  }

  double min_diagonal(RotationPath const& p) {
    double m = std::numeric_limits<double>::infinity();
    for (auto const& X : p.samples) {
      m = std::min(m, X.diagonal().minCoeff());
    }
    return m;
  }

  bool is_local(RotationPath const& p) {
    return p.samples.empty() || min_diagonal(p) >= -kLocalTol;
  }

  bool is_closed(RotationPath const& p, double tol) {
    if (p.samples.empty()) {
      return false;
    }
    Mat const I = Mat::Identity(p.n, p.n);
    return (p.samples.front() - I).cwiseAbs().maxCoeff() <= tol
           && (p.samples.back() - I).cwiseAbs().maxCoeff() <= tol;
  }

  Mat skew(Mat const& A) {
    return (A - A.transpose()) / 2;
  }

  Mat polar(Mat const& Y) {
    Eigen::SelfAdjointEigenSolver<Mat> es(Y.transpose() * Y);
    Eigen::VectorXd                    inv_sqrt = es.eigenvalues().cwiseSqrt().cwiseInverse();
    return Y * es.eigenvectors() * inv_sqrt.asDiagonal() * es.eigenvectors().transpose();
  }

  Mat descent_step(Mat const& X, double step) {
    return polar(X + step * X * skew(X.transpose()));
  }

  std::string_view to_string(Verdict v) {
    switch (v) {
      case Verdict::contracted:
        return "contracted";
      case Verdict::stalled:
        return "stalled";
      case Verdict::budget_exhausted:
        return "budget-exhausted";
    }
    return "?";
  }

  RotationPath decimate(RotationPath const& p) {
    // keep links of at most 30 degrees
    double const thr = 2.0 - 2.0 * std::cos(std::numbers::pi / 6) + 1e-9;
    RotationPath out;
    out.n = p.n;
    if (p.samples.empty()) {
      return out;
    }
    std::size_t a = 0;
    out.samples.push_back(p.samples[0]);
    out.params.push_back(p.params[0]);
    while (a + 1 < p.size()) {
      std::size_t b = a + 1;
      while (b + 1 < p.size() && dist(p.samples[a], p.samples[b + 1]) <= thr) {
        ++b;
      }
      out.samples.push_back(p.samples[b]);
      out.params.push_back(p.params[b]);
      a = b;
    }
    return out;
  }

  namespace {
    // Geodesic midpoints on links longer than D = 1.
    void refine(RotationPath& p) {
      for (std::size_t k = 0; k + 1 < p.samples.size();) {
        if (dist(p.samples[k], p.samples[k + 1]) > 1.0) {
          Mat    mid = polar(p.samples[k] + p.samples[k + 1]);
          double t   = (p.params[k] + p.params[k + 1]) / 2;
          p.samples.insert(p.samples.begin() + static_cast<std::ptrdiff_t>(k) + 1, mid);
          p.params.insert(p.params.begin() + static_cast<std::ptrdiff_t>(k) + 1, t);
        } else {
          ++k;
        }
      }
    }
  }  // namespace

  FlowResult contract(RotationPath const& p, FlowParams const& fp) {
    if (!(fp.step > 0) || !(fp.tol > 0) || fp.max_iters < 0 || fp.stall_window < 1) {
      throw Error("invalid flow parameters");
    }
    if (p.samples.size() != p.params.size() || p.samples.size() < 2) {
      throw Error("path needs matching samples and params (at least 2)");
    }
    if (!is_closed(p)) {
      throw Error("contract requires a closed path starting and ending at the identity");
    }
    FlowResult res;
    res.path        = decimate(p);
    auto&      P    = res.path;
    int const  n    = P.n;
    Mat const  I    = Mat::Identity(n, n);
    double const lambda = 0.25 / fp.step;

    std::mt19937_64                  rng(fp.seed);
    std::normal_distribution<double> normal(0.0, 1.0);

    double best   = std::numeric_limits<double>::infinity();
    int    last   = 0;
    int    mode   = -1;  // 1 local, 0 tension
    for (int it = 0;; ++it) {
      double      md = 0;
      std::size_t wi = 0;
      for (std::size_t k = 0; k < P.size(); ++k) {
        double d = dist_id(P.samples[k]);
        if (d > md) {
          md = d;
          wi = k;
        }
      }
      res.trace.push_back(md);
      res.final_max_d = md;
      res.witness     = wi;
      res.iterations  = it;
      if (md < fp.tol) {
        res.verdict = Verdict::contracted;
        return res;
      }
      if (it >= fp.max_iters) {
        res.verdict = Verdict::budget_exhausted;
        return res;
      }
      int local = is_local(P) ? 1 : 0;
      if (local != mode) {
        mode = local;
        best = std::numeric_limits<double>::infinity();
        last = it;
      }
      if (md < best * (1 - 1e-12)) {
        best = md;
        last = it;
      }
      if (it - last >= fp.stall_window) {
        if (res.retries >= fp.max_retries) {
          res.verdict = Verdict::stalled;
          return res;
        }
        ++res.retries;
        for (std::size_t k = 1; k + 1 < P.size(); ++k) {
          Mat A(n, n);
          for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) {
              A(r, c) = normal(rng);
            }
          }
          A = skew(A);
          double mx = A.cwiseAbs().maxCoeff();
          if (mx > 0) {
            A *= fp.jitter / mx;
          }
          P.samples[k] = polar(P.samples[k] + P.samples[k] * A);
        }
        best = std::numeric_limits<double>::infinity();
        last = it;
        continue;
      }
      std::vector<Mat> next = P.samples;
      for (std::size_t k = 1; k + 1 < P.size(); ++k) {
        Mat const& X = P.samples[k];
        Mat        G = local ? I : Mat(lambda * (P.samples[k - 1] + P.samples[k + 1]));
        next[k]      = polar(X + fp.step * X * skew(X.transpose() * G));
      }
      P.samples = std::move(next);
      refine(P);
    }
  }

  FlowResult stall_witness(RotationPath const& p, FlowParams const& fp) {
    return contract(p, fp);
  }

  ////////////////////////////////////////////////////////////////////////
  // Nearest elements
  ////////////////////////////////////////////////////////////////////////

  SignedPerm nearest_element(Mat const& X) {
    auto const       n = static_cast<int>(X.rows());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double           best = -std::numeric_limits<double>::infinity();
    std::vector<int> best_images;
    do {
      // column c maps to row perm[c]
      double score = 0, weakest = std::numeric_limits<double>::infinity();
      int    wc = 0, sign = 1;
      std::vector<int> img(n);
      for (int c = 0; c < n; ++c) {
        double v = X(perm[c], c);
        score += std::abs(v);
        img[c] = v < 0 ? -(perm[c] + 1) : perm[c] + 1;
        if (v < 0) {
          sign = -sign;
        }
        if (std::abs(v) < weakest) {
          weakest = std::abs(v);
          wc      = c;
        }
      }
      // permutation parity
      std::vector<bool> seen(n, false);
      for (int s = 0; s < n; ++s) {
        int len = 0;
        for (int k = s; !seen[k]; k = perm[k]) {
          seen[k] = true;
          ++len;
        }
        if (len > 0 && len % 2 == 0) {
          sign = -sign;
        }
      }
      if (sign < 0) {
        score -= 2 * weakest;
        img[wc] = -img[wc];
      }
      if (score > best + 1e-15) {
        best        = score;
        best_images = img;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return SignedPerm(best_images);
  }

  namespace {
    struct Crossing {
      double s;
      Mat    point;
    };

    // First point on the geodesic segment [Xa, Xb] where C becomes strictly
    // nearer than Cur; assumes it holds at Xb.
    Crossing locate(Mat const& Xa, Mat const& Xb, Mat const& C, Mat const& Cur) {
      auto f = [&](Mat const& Y) {
        return dist(Y, C) - dist(Y, Cur);
      };
      if (f(Xa) < -kCrossEps) {
        return {0.0, Xa};
      }
      Mat    lo = Xa, hi = Xb;
      double slo = 0, shi = 1;
      for (int k = 0; k < 60; ++k) {
        Mat    mid = polar(lo + hi);
        double sm  = (slo + shi) / 2;
        if (f(mid) < -kCrossEps) {
          hi  = mid;
          shi = sm;
        } else {
          lo  = mid;
          slo = sm;
        }
      }
      return {shi, hi};
    }
  }  // namespace

  PlaneWord snap_to_word(RotationPath const& p) {
    if (p.samples.empty()) {
      throw Error("snap_to_word: empty path");
    }
    int const n = p.n;
    Mat const I = Mat::Identity(n, n);
    if ((p.samples.front() - I).cwiseAbs().maxCoeff() > 1e-8) {
      throw Error("snap_to_word: path must start at the identity");
    }
    auto end_el = nearest_element(p.samples.back());
    if ((p.samples.back() - signed_perm_matrix(end_el)).cwiseAbs().maxCoeff() > 1e-8) {
      throw Error("snap_to_word: endpoint is not a rotational hyperoctahedral element");
    }

    std::vector<PlaneLetter> planes;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i != j) {
          planes.push_back({i, j});
        }
      }
    }

    PlaneWord  out;
    SignedPerm current = SignedPerm::identity(n);
    Mat        cur_m   = I;
    for (std::size_t k = 1; k < p.size(); ++k) {
      Mat        Xa = p.samples[k - 1];
      Mat const& Xb = p.samples[k];
      for (int guard = 0;; ++guard) {
        if (guard > 4 * n * n) {
          throw CoarseSampling("snap_to_word: too many crossings between two samples");
        }
        double const dc = dist(Xb, cur_m);
        bool         found = false;
        Crossing     first{2.0, Mat()};
        PlaneLetter  letter;
        Mat          next_m;
        SignedPerm   next;
        for (auto const& L : planes) {
          auto cand   = compose(theta_plane(L.i, L.j, n), current);
          Mat  cand_m = signed_perm_matrix(cand);
          if (dist(Xb, cand_m) - dc < -kCrossEps) {
            auto c = locate(Xa, Xb, cand_m, cur_m);
            if (c.s < first.s - 1e-9) {
              first  = c;
              letter = L;
              next   = cand;
              next_m = cand_m;
              found  = true;
            }
          }
        }
        if (!found) {
          auto nearest = nearest_element(Xb);
          if (dist(Xb, signed_perm_matrix(nearest)) < dc - kCrossEps) {
            throw CoarseSampling("snap_to_word: sampling too coarse, a non-adjacent element "
                                 "became nearest between samples "
                                 + std::to_string(k - 1) + " and " + std::to_string(k));
          }
          break;
        }
        out.insert(out.begin(), letter);
        current = next;
        cur_m   = next_m;
        Xa      = first.point;
      }
    }
    if (!(current == end_el)) {
      throw Error("snap_to_word: walk ended at " + to_string(current) + " but the endpoint is "
                  + to_string(end_el));
    }
    return out;
  }

  PlaneWord snap_compiled(PlaneWord const& pw, int n, int samples_per_letter) {
    int s = samples_per_letter;
    for (int attempt = 0;; ++attempt) {
      try {
        return snap_to_word(compile_path(pw, n, s));
      } catch (CoarseSampling const&) {
        if (attempt >= 6) {
          throw;
        }
        s = 2 * s - 1;  // halves the spacing
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Reduction
  ////////////////////////////////////////////////////////////////////////

  ReductionStep rewrite_pair(PlaneLetter left, PlaneLetter moving, int i, std::size_t pos) {
    if (moving.i != i && moving.j != i) {
      throw Error("moving letter does not carry index " + std::to_string(i));
    }
    ReductionStep st;
    st.pos    = pos;
    st.moving = i;
    st.before = {left, moving};
    bool const first = moving.i == i;
    int const  j     = first ? moving.j : moving.i;
    if (left == moving.inverse()) {
      st.rule = "cancel";
      return st;
    }
    if (left == moving) {
      throw Error("repeated letter R" + std::to_string(moving.i) + std::to_string(moving.j)
                  + " while moving left: word is not local");
    }
    if (left.disjoint(moving)) {
      st.rule  = "commute";
      st.after = {moving, left};
      return st;
    }
    int const k = (left.i == i || left.i == j) ? left.j : left.i;
    auto      L = [](int a, int b) {
      return PlaneLetter{a, b};
    };
    if (first) {
      if (left == L(j, k)) {
        st.rule  = "R_jk R_ij = R_ik R_jk";
        st.after = {L(i, k), L(j, k)};
      } else if (left == L(k, j)) {
        st.rule  = "R_kj R_ij = R_ki R_kj";
        st.after = {L(k, i), L(k, j)};
      } else if (left == L(i, k)) {
        st.rule  = "R_ik R_ij = R_ij R_kj";
        st.after = {L(i, j), L(k, j)};
      } else {
        st.rule  = "R_ki R_ij = R_ij R_jk";
        st.after = {L(i, j), L(j, k)};
      }
    } else {
      if (left == L(j, k)) {
        st.rule  = "R_jk R_ji = R_ki R_jk";
        st.after = {L(k, i), L(j, k)};
      } else if (left == L(k, j)) {
        st.rule  = "R_kj R_ji = R_ik R_kj";
        st.after = {L(i, k), L(k, j)};
      } else if (left == L(i, k)) {
        st.rule  = "R_ik R_ji = R_ji R_jk";
        st.after = {L(j, i), L(j, k)};
      } else {
        st.rule  = "R_ki R_ji = R_ji R_kj";
        st.after = {L(j, i), L(k, j)};
      }
    }
    return st;
  }

  namespace {
    void apply_step(PlaneWord& w, ReductionStep const& st) {
      auto at = w.begin() + static_cast<std::ptrdiff_t>(st.pos);
      if (st.after.empty()) {
        w.erase(at, at + 2);
      } else {
        at[0] = st.after[0];
        at[1] = st.after[1];
      }
    }
  }  // namespace

  ReductionTrace reduce_local_word(PlaneWord const& pw, int n) {
    for (auto const& l : pw) {
      validate(l, n);
    }
    if (!theta_plane_word(pw, n).is_identity()) {
      throw Error("reduce_local_word: word is not closed (theta image is "
                  + to_string(theta_plane_word(pw, n)) + ")");
    }
    if (!is_local(compile_path(pw, n, 16))) {
      throw Error("reduce_local_word: compiled path is not local");
    }
    ReductionTrace tr;
    tr.n     = n;
    tr.start = pw;
    PlaneWord   w = pw;
    std::size_t budget = 1'000'000;
    while (!w.empty()) {
      std::size_t p = w.size() - 1;
      int const   i = w[p].i;
      while (true) {
        if (p == 0) {
          throw Error("reduce_local_word: letter carrying index " + std::to_string(i)
                      + " reached the left end uncancelled");
        }
        if (--budget == 0) {
          throw Error("reduce_local_word: step budget exhausted");
        }
        auto st = rewrite_pair(w[p - 1], w[p], i, p - 1);
        apply_step(w, st);
        bool const done = st.after.empty();
        tr.steps.push_back(std::move(st));
        if (done) {
          break;
        }
        --p;
      }
    }
    return tr;
  }

  PlaneWord replay(ReductionTrace const& t) {
    PlaneWord w = t.start;
    for (std::size_t s = 0; s < t.steps.size(); ++s) {
      auto const& st = t.steps[s];
      if (st.pos + 1 >= w.size()) {
        throw Error("replay: step " + std::to_string(s) + " position out of range");
      }
      if (st.before.size() != 2 || w[st.pos] != st.before[0] || w[st.pos + 1] != st.before[1]) {
        throw Error("replay: step " + std::to_string(s) + " does not match the word");
      }
      auto redo = rewrite_pair(w[st.pos], w[st.pos + 1], st.moving, st.pos);
      if (redo.rule != st.rule || redo.after != st.after) {
        throw Error("replay: step " + std::to_string(s) + " is not a valid rule application");
      }
      apply_step(w, st);
    }
    return w;
  }

  std::vector<PlaneWord> triangular_identity_words() {
    // R1 = R_23, R2 = R_31, R3 = R_12; negative = inverse
    static int const table[24][4] = {
        {-3, -1, -2, 1}, {3, -1, 2, 1},   {2, -3, -2, 1},  {-2, 3, 2, 1},
        {-3, -2, 3, 1},  {3, 2, -3, 1},   {-2, -1, 3, 1},  {2, -1, -3, 1},
        {1, 3, -1, 2},   {-1, -3, 1, 2},  {3, -1, -3, 2},  {-3, 1, 3, 2},
        {-3, -2, 1, 2},  {3, -2, -1, 2},  {1, -2, 3, 2},   {-1, -2, -3, 2},
        {-1, 2, 1, 3},   {1, -2, -1, 3},  {2, -3, 1, 3},   {-2, -3, -1, 3},
        {-2, -1, 2, 3},  {2, 1, -2, 3},   {-1, -3, 2, 3},  {1, -3, -2, 3},
    };
    static PlaneLetter const base[4] = {{0, 0}, {2, 3}, {3, 1}, {1, 2}};
    std::vector<PlaneWord>   out;
    for (auto const& row : table) {
      PlaneWord w;
      for (int x : row) {
        auto l = base[std::abs(x)];
        w.push_back(x > 0 ? l : l.inverse());
      }
      out.push_back(std::move(w));
    }
    return out;
  }

  std::vector<PlaneWord> triangular_relators(int i, int j, int k) {
    if (i == j || j == k || i == k) {
      throw Error("triangular relators need three distinct axes");
    }
    auto L = [](int a, int b) {
      return PlaneLetter{a, b};
    };
    return {
        {L(k, j), L(k, i), L(j, k), L(i, j)},
        {L(j, k), L(i, k), L(k, j), L(i, j)},
        {L(k, i), L(j, k), L(i, k), L(i, j)},
        {L(i, k), L(k, j), L(k, i), L(i, j)},
    };
  }

  PlaneWord random_local_closed_word(int n, int count, std::mt19937_64& rng) {
    if (n < 3 || count < 1) {
      throw Error("random_local_closed_word needs n >= 3 and count >= 1");
    }
    std::uniform_int_distribution<int> axis(1, n);
    std::uniform_int_distribution<int> pick4(0, 3);
    std::uniform_int_distribution<int> conj_len(0, 1);
    auto random_letter = [&]() {
      int a = axis(rng), b = axis(rng);
      while (b == a) {
        b = axis(rng);
      }
      return PlaneLetter{a, b};
    };
    for (int attempt = 0; attempt < 100000; ++attempt) {
      PlaneWord w;
      for (int c = 0; c < count; ++c) {
        int i = axis(rng), j = axis(rng), k = axis(rng);
        while (j == i) {
          j = axis(rng);
        }
        while (k == i || k == j) {
          k = axis(rng);
        }
        auto r   = triangular_relators(i, j, k)[pick4(rng)];
        int  rot = pick4(rng);
        std::rotate(r.begin(), r.begin() + rot, r.end());
        PlaneWord conj;
        for (int q = conj_len(rng); q > 0; --q) {
          conj.push_back(random_letter());
        }
        w.insert(w.end(), conj.begin(), conj.end());
        w.insert(w.end(), r.begin(), r.end());
        auto ci = invert(conj);
        w.insert(w.end(), ci.begin(), ci.end());
      }
      if (is_local(compile_path(w, n, 16))) {
        return w;
      }
    }
    throw Error("random_local_closed_word: no local word found");
  }

  ////////////////////////////////////////////////////////////////////////
  // CSV
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string num(double v) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
      return buf;
    }
  }  // namespace

  std::string to_csv(RotationPath const& p) {
    std::string out = "t";
    for (int r = 1; r <= p.n; ++r) {
      for (int c = 1; c <= p.n; ++c) {
        out += ",x" + std::to_string(r) + std::to_string(c);
      }
    }
    out += '\n';
    for (std::size_t k = 0; k < p.size(); ++k) {
      out += num(p.params[k]);
      for (int r = 0; r < p.n; ++r) {
        for (int c = 0; c < p.n; ++c) {
          out += ',' + num(p.samples[k](r, c));
        }
      }
      out += '\n';
    }
    return out;
  }

  std::string trace_csv(FlowResult const& r) {
    std::string out = "iteration,max_d\n";
    for (std::size_t k = 0; k < r.trace.size(); ++k) {
      out += std::to_string(k) + ',' + num(r.trace[k]) + '\n';
    }
    return out;
  }

}  // namespace braidq

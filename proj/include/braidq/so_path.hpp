// Sampled paths in SO(n): generating paths R_ij(t), the path product, the
// distance D(X, Y) = tr(1 - X^T Y), a tangential descent flow that contracts
// closed paths, nearest-element snapping, and the symbolic reduction of
// local closed words.

#ifndef BRAIDQ_SO_PATH_HPP_
#define BRAIDQ_SO_PATH_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "braidq/hyperocta.hpp"
#include "braidq/words.hpp"

namespace braidq {

  using Mat = Eigen::MatrixXd;

  struct RotationPath {
    int                 n = 3;
    std::vector<Mat>    samples;
    std::vector<double> params;

    [[nodiscard]] std::size_t size() const noexcept {
      return samples.size();
    }
  };

  // Rotation by t*pi/2 in plane (i, j) taking e_i toward e_j.
  [[nodiscard]] Mat generator_matrix(int i, int j, int n, double t);
  [[nodiscard]] Mat signed_perm_matrix(SignedPerm const& p);

  // Rightmost letter is traversed first; each letter's samples are
  // generator_matrix(t) times the endpoint accumulated so far. The grid has
  // 1 + k(s-1) points; the empty word gives the constant identity path.
  [[nodiscard]] RotationPath compile_path(PlaneWord const& pw, int n,
                                          int samples_per_letter = 16);
  [[nodiscard]] RotationPath compile_word(Word const& w, int samples_per_letter = 16);

  // Geodesic exp(t log target), for testing snap_to_word on paths that are
  // not products of generating paths.
  [[nodiscard]] RotationPath geodesic_path(Mat const& target, int samples);

  [[nodiscard]] double orthogonality_error(Mat const& X);
  // Throws if either argument is not orthogonal within 1e-8.
  [[nodiscard]] double distance(Mat const& X, Mat const& Y);
  [[nodiscard]] double max_distance_to_identity(RotationPath const& p);
  [[nodiscard]] double min_diagonal(RotationPath const& p);
  [[nodiscard]] bool   is_local(RotationPath const& p);
  [[nodiscard]] bool   is_closed(RotationPath const& p, double tol = 1e-8);

  [[nodiscard]] Mat skew(Mat const& A);
  // Orthogonal factor of Y, via the symmetric square root of Y^T Y.
  [[nodiscard]] Mat polar(Mat const& Y);
  // One step of the pointwise flow: X + step * X skew(X^T), retracted.
  [[nodiscard]] Mat descent_step(Mat const& X, double step);

  struct FlowParams {
    double        step         = 0.05;
    int           max_iters    = 20000;
    double        tol          = 1e-6;
    int           stall_window = 500;
    int           max_retries  = 10;
    double        jitter       = 1e-3;
    std::uint64_t seed         = 1;
  };

  enum class Verdict { contracted, stalled, budget_exhausted };
  [[nodiscard]] std::string_view to_string(Verdict v);

  struct FlowResult {
    Verdict             verdict    = Verdict::budget_exhausted;
    int                 iterations = 0;
    double              final_max_d = 0;
    std::vector<double> trace;  // max-D before each iteration
    int                 retries = 0;
    RotationPath        path;     // working-resolution path at the end
    std::size_t         witness = 0;  // sample index attaining final_max_d
  };

  // Decimates to links of at most 30 degrees, then flows. Local paths use
  // the pointwise flow toward the identity; non-local ones a path-tension
  // flow (each sample pulled toward its neighbours) until they become local.
  [[nodiscard]] FlowResult contract(RotationPath const& p, FlowParams const& fp = {});
  [[nodiscard]] FlowResult stall_witness(RotationPath const& p, FlowParams const& fp = {});

  [[nodiscard]] RotationPath decimate(RotationPath const& p);

  // Nearest rotational hyperoctahedral element (exhaustive over permutations).
  [[nodiscard]] SignedPerm nearest_element(Mat const& X);

  // Walks p and records each switch of nearest element as a plane letter;
  // the newest letter is leftmost. Errors on coarse sampling or a
  // non-group endpoint.
  [[nodiscard]] PlaneWord snap_to_word(RotationPath const& p);
  // Compiles and snaps, doubling the sampling on a coarse-sampling error.
  [[nodiscard]] PlaneWord snap_compiled(PlaneWord const& pw, int n,
                                        int samples_per_letter = 16);

  class CoarseSampling : public Error {
   public:
    using Error::Error;
  };

  ////////////////////////////////////////////////////////////////////////
  // Symbolic reduction of local closed words
  ////////////////////////////////////////////////////////////////////////

  struct ReductionStep {
    std::size_t pos    = 0;  // index of the left letter of the rewritten pair
    int         moving = 1;  // the index i being carried leftward
    std::string rule;
    PlaneWord   before;  // two letters
    PlaneWord   after;   // two letters, or none for a cancellation
  };

  struct ReductionTrace {
    int                        n = 3;
    PlaneWord                  start;
    std::vector<ReductionStep> steps;
  };

  // Rewrites the pair (left, moving) where `moving` carries index i; the
  // letter carrying i ends up on the left unless the pair cancels.
  [[nodiscard]] ReductionStep rewrite_pair(PlaneLetter left, PlaneLetter moving,
                                           int i, std::size_t pos);

  // Requires theta = identity and a local compiled path.
  [[nodiscard]] ReductionTrace reduce_local_word(PlaneWord const& pw, int n);
  // Replays the trace from its start, re-deriving every step; returns the
  // final word (empty for a valid trace). Throws on any mismatch.
  [[nodiscard]] PlaneWord replay(ReductionTrace const& t);

  // The 24 four-letter identities with R1 = R_23, R2 = R_31, R3 = R_12.
  [[nodiscard]] std::vector<PlaneWord> triangular_identity_words();
  // The four triangular expressions for distinct axes i, j, k.
  [[nodiscard]] std::vector<PlaneWord> triangular_relators(int i, int j, int k);
  // Product of `count` conjugated triangular relators, resampled until local.
  [[nodiscard]] PlaneWord random_local_closed_word(int n, int count, std::mt19937_64& rng);

  ////////////////////////////////////////////////////////////////////////
  // CSV
  ////////////////////////////////////////////////////////////////////////

  // t, then the row-major entries of each sample
  [[nodiscard]] std::string to_csv(RotationPath const& p);
  // iteration, max_d
  [[nodiscard]] std::string trace_csv(FlowResult const& r);

}  // namespace braidq

#endif  // BRAIDQ_SO_PATH_HPP_

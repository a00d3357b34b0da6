// Free words over the standard generators R_1..R_{n-1}, plane-rotation
// letters R_{ij}, and the braid-quotient presentations.
//
// Composition convention (shared by every module): the leftmost letter of a
// word acts last. The word [R1, R2] is the path that traverses R2 first and
// then R1 translated by R2's endpoint, so its endpoint is the matrix product
// R1(1) * R2(1).

#ifndef BRAIDQ_WORDS_HPP_
#define BRAIDQ_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidq {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  struct Letter {
    int index    = 1;  // 1..n-1
    int exponent = 1;  // +1 or -1

    [[nodiscard]] Letter inverse() const noexcept {
      return Letter{index, -exponent};
    }
    auto operator<=>(Letter const&) const = default;
  };

  class Word {
   public:
    Word() = default;
    explicit Word(int rank);
    Word(int rank, std::vector<Letter> letters);

    [[nodiscard]] int rank() const noexcept {
      return _rank;
    }
    [[nodiscard]] std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _letters.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _letters.empty();
    }
    Letter const& operator[](std::size_t i) const {
      return _letters[i];
    }

    // Appends without reduction.
    void push_back(Letter x);
    Word& operator*=(Word const& rhs);

    bool operator==(Word const&) const = default;

   private:
    int                 _rank = 3;
    std::vector<Letter> _letters;
  };

  [[nodiscard]] Word operator*(Word lhs, Word const& rhs);

  // R_i^k as a word (k may be negative).
  [[nodiscard]] Word power(int rank, int index, int k);
  [[nodiscard]] Word power(Word const& w, int k);

  // Tokens `R<k>` or `R<k>^-1`, whitespace separated; not reduced.
  [[nodiscard]] Word parse_word(std::string_view text, int rank);
  // Inverse of parse_word.
  [[nodiscard]] std::string to_tokens(Word const& w);
  // Compressed display form, e.g. "R1^4 R2^3 R1"; the empty word is "Id".
  [[nodiscard]] std::string to_pretty(Word const& w);

  [[nodiscard]] Word free_reduce(Word const& w);
  [[nodiscard]] Word invert(Word const& w);

  ////////////////////////////////////////////////////////////////////////
  // Plane letters
  ////////////////////////////////////////////////////////////////////////

  // R_{ij}: rotation by pi/2 in the coordinate plane (i, j) taking e_i to e_j.
  // The inverse of R_{ij} is R_{ji}.
  struct PlaneLetter {
    int i = 1;
    int j = 2;

    [[nodiscard]] PlaneLetter inverse() const noexcept {
      return PlaneLetter{j, i};
    }
    [[nodiscard]] bool disjoint(PlaneLetter const& o) const noexcept {
      return i != o.i && i != o.j && j != o.i && j != o.j;
    }
    auto operator<=>(PlaneLetter const&) const = default;
  };

  using PlaneWord = std::vector<PlaneLetter>;

  void validate(PlaneLetter const& p, int n);

  // Tokens `R<i><j>` (single digits) or `R<i>,<j>`.
  [[nodiscard]] PlaneWord   parse_plane_word(std::string_view text, int n);
  [[nodiscard]] std::string to_tokens(PlaneWord const& w);
  [[nodiscard]] PlaneWord   invert(PlaneWord const& w);

  // Rewrites each R_{ij} in the standard generators R_k = R_{k,k+1}:
  //   R_{i,i+1} = R_i,  R_{ji} = R_{ij}^-1,
  //   R_{ji} = W R_{j-1} W^-1  with W = R_{i,j-1}  (i < j - 1).
  // The result is freely reduced.
  [[nodiscard]] Word plane_to_standard(PlaneWord const& pw, int n);
  // R_k^{+1} -> R_{k,k+1}, R_k^{-1} -> R_{k+1,k}.
  [[nodiscard]] PlaneWord standard_to_plane(Word const& w);

  ////////////////////////////////////////////////////////////////////////
  // Presentations
  ////////////////////////////////////////////////////////////////////////

  enum class Variant { standard, twisted, custom };

  [[nodiscard]] std::string_view to_string(Variant v);
  [[nodiscard]] Variant          parse_variant(std::string_view s);

  struct Presentation {
    int               rank = 3;  // ambient n; generators R_1..R_{n-1}
    std::vector<Word> relators;
    Variant           variant = Variant::custom;

    [[nodiscard]] int generators() const noexcept {
      return rank - 1;
    }
  };

  // Braid relators R_i R_{i+1} R_i (R_{i+1} R_i R_{i+1})^-1, far commutators
  // [R_i, R_j] for j >= i + 2, then
  //   standard: R_1^2 (R_2 R_1^2 R_2)^-1
  //   twisted:  R_1^2 (R_2 R_1^6 R_2)^-1 and [R_1^4, R_2].
  [[nodiscard]] Presentation presentation_for(int n, Variant variant);

  // Text format: `rank: <n>` then one `relator: <tokens>` per line; `#`
  // starts a comment.
  [[nodiscard]] std::string  to_text(Presentation const& p);
  [[nodiscard]] Presentation parse_presentation(std::string_view text);

  std::ostream& operator<<(std::ostream& os, Word const& w);

}  // namespace braidq

#endif  // BRAIDQ_WORDS_HPP_

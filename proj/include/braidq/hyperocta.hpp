// Signed permutations of {±1..±n} and the homomorphism theta from G(n) onto
// the rotational hyperoctahedral group. Composition is a left action:
// compose(a, b)(x) = a(b(x)).

#ifndef BRAIDQ_HYPEROCTA_HPP_
#define BRAIDQ_HYPEROCTA_HPP_

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "braidq/group.hpp"
#include "braidq/words.hpp"

namespace braidq {

  class SignedPerm {
   public:
    SignedPerm() = default;
    // images[i-1] is the image of +i; validated.
    explicit SignedPerm(std::vector<int> images);

    [[nodiscard]] static SignedPerm identity(int n);

    [[nodiscard]] int size() const noexcept {
      return static_cast<int>(_images.size());
    }
    [[nodiscard]] std::vector<int> const& images() const noexcept {
      return _images;
    }
    // Image of a signed point x in {±1..±n}.
    [[nodiscard]] int apply(int x) const;
    [[nodiscard]] bool is_identity() const noexcept;

    auto operator<=>(SignedPerm const&) const = default;

   private:
    std::vector<int> _images;
  };

  [[nodiscard]] SignedPerm theta_generator(int i, int n);
  [[nodiscard]] SignedPerm theta_plane(int i, int j, int n);
  [[nodiscard]] SignedPerm compose(SignedPerm const& a, SignedPerm const& b);
  [[nodiscard]] SignedPerm inverse(SignedPerm const& a);

  // Rightmost letter applied first; n defaults to the word's rank.
  [[nodiscard]] SignedPerm theta_word(Word const& w);
  [[nodiscard]] SignedPerm theta_word(Word const& w, int n);
  [[nodiscard]] SignedPerm theta_plane_word(PlaneWord const& w, int n);

  // permutation sign times the product of entry signs
  [[nodiscard]] int determinant(SignedPerm const& p);

  // Column j holds sign * e_|image(j)|; row-major n*n.
  [[nodiscard]] std::vector<int> to_matrix(SignedPerm const& p);

  // `[2,-1,3]`
  [[nodiscard]] std::string to_string(SignedPerm const& p);
  [[nodiscard]] SignedPerm  parse_signed_perm(std::string_view text);

  // Closure of the theta generator images, sorted.
  [[nodiscard]] std::vector<SignedPerm> rotation_group(int n);

  // Elements whose name word maps to the identity; exhaustive.
  [[nodiscard]] std::vector<Element> kernel(GroupCtx const& g);

  // theta image of every element, indexed by id-1; built along Schreier edges.
  [[nodiscard]] std::vector<SignedPerm> theta_table(GroupCtx const& g);

}  // namespace braidq

#endif  // BRAIDQ_HYPEROCTA_HPP_

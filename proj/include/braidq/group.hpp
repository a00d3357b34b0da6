// The finite groups G(n) as concrete objects: elements are cosets of the
// trivial subgroup, canonical forms are a decoded view of them.

#ifndef BRAIDQ_GROUP_HPP_
#define BRAIDQ_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidq/coset_enum.hpp"
#include "braidq/words.hpp"

namespace braidq {

  struct Element {
    CosetId       id  = 1;
    std::uint64_t ctx = 0;  // tag of the owning GroupCtx

    bool operator==(Element const&) const = default;
  };

  class GroupCtx {
   public:
    explicit GroupCtx(Presentation p, EnumLimits const& limits = {});
    GroupCtx(int n, Variant v, EnumLimits const& limits = {});

    [[nodiscard]] int rank() const noexcept {
      return _p.rank;
    }
    [[nodiscard]] Presentation const& presentation() const noexcept {
      return _p;
    }
    [[nodiscard]] CosetTable const& table() const noexcept {
      return _t;
    }
    [[nodiscard]] std::size_t order() const noexcept {
      return _t.size();
    }
    [[nodiscard]] std::uint64_t tag() const noexcept {
      return _tag;
    }

    [[nodiscard]] Element identity() const noexcept {
      return Element{1, _tag};
    }
    [[nodiscard]] Element element(CosetId id) const;
    [[nodiscard]] std::vector<Element> elements() const;

    // Throws unless e belongs to this context.
    void check(Element e) const;

    // x * e and e * x for the generator column col.
    [[nodiscard]] CosetId left(CosetId e, std::size_t col) const {
      return _t.action_unchecked(e, col);
    }
    [[nodiscard]] CosetId right(CosetId e, std::size_t col) const {
      return _right[(e - 1) * _t.columns() + col];
    }
    // Table product a * b; no word expansion.
    [[nodiscard]] CosetId product(CosetId a, CosetId b) const;
    [[nodiscard]] CosetId inverse(CosetId a) const;

    // Membership in <R_1, ..., R_level>, level = 1..rank-2.
    [[nodiscard]] bool in_subgroup(std::size_t level, CosetId e) const {
      return _levels[level - 1][e - 1];
    }
    [[nodiscard]] int generator_order() const noexcept {
      return _r1_order;
    }

   private:
    void build();

    Presentation                   _p;
    CosetTable                     _t;
    std::vector<CosetId>           _right;
    std::vector<std::vector<bool>> _levels;
    int                            _r1_order = 0;
    std::uint64_t                  _tag      = 0;
  };

  ////////////////////////////////////////////////////////////////////////
  // Canonical forms
  ////////////////////////////////////////////////////////////////////////

  struct Descriptor {
    enum class Kind { power, run, cube_run };
    Kind kind  = Kind::power;
    int  value = 0;  // k for power, j for run / cube_run

    bool operator==(Descriptor const&) const = default;
  };

  // R_1^m y_(2) ... y_(n-1); levels[i-2] is the descriptor at level i.
  struct CanonicalForm {
    int                     rank = 3;
    int                     m    = 0;
    std::vector<Descriptor> levels;

    bool operator==(CanonicalForm const&) const = default;
  };

  // All descriptors at level i, in a fixed order.
  [[nodiscard]] std::vector<Descriptor> descriptors_at(int level);
  [[nodiscard]] Word expand(Descriptor d, int level, int rank);
  [[nodiscard]] Word expand(CanonicalForm const& cf);

  // Power(k) collapses to one family; run / cube_run keep j.
  [[nodiscard]] std::string family_key(CanonicalForm const& cf);

  [[nodiscard]] Element element_from_word(GroupCtx const& g, Word const& w);
  // Throws if the level decomposition is not unique (non-standard variants).
  [[nodiscard]] CanonicalForm canonical_form(GroupCtx const& g, Element e);
  [[nodiscard]] std::optional<CanonicalForm>
  try_canonical_form(GroupCtx const& g, Element e);

  // Canonical word if it exists, else the Schreier representative.
  [[nodiscard]] Word name_word(GroupCtx const& g, Element e);

  [[nodiscard]] Element  multiply(GroupCtx const& g, Element a, Element b);
  [[nodiscard]] unsigned element_order(GroupCtx const& g, Element e);
  [[nodiscard]] std::vector<Element> center(GroupCtx const& g);
  [[nodiscard]] bool is_central(GroupCtx const& g, Element e);

  // order -> count over the whole group
  [[nodiscard]] std::map<unsigned, std::size_t> order_profile(GroupCtx const& g);

  // G / <z> as its own context; z must be central of order 2.
  [[nodiscard]] GroupCtx quotient(GroupCtx const& g, Element z);
  [[nodiscard]] std::map<unsigned, std::size_t>
  quotient_order_profile(GroupCtx const& g, Element z);

  // family key -> element count, keys in first-seen order over descriptors
  [[nodiscard]] std::vector<std::pair<std::string, std::size_t>>
  family_sizes(GroupCtx const& g);

  [[nodiscard]] std::string cayley_dot(GroupCtx const& g);

}  // namespace braidq

#endif  // BRAIDQ_GROUP_HPP_

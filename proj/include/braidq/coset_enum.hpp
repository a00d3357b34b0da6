// Todd-Coxeter coset enumeration (HLT and Felsch strategies).
//
// The completed table is a *left* action: action(c, x) is the coset reached
// by letting the letter x act on c. Words act right-to-left, so for the
// trivial subgroup coset_action(t, 1, w) is the element named by w. This is
// obtained by running the classical right-coset enumeration on reversed
// relators and reversed subgroup generators.

#ifndef BRAIDQ_COSET_ENUM_HPP_
#define BRAIDQ_COSET_ENUM_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "braidq/words.hpp"

namespace braidq {

  enum class Strategy { hlt, felsch };

  [[nodiscard]] std::string_view to_string(Strategy s);
  [[nodiscard]] Strategy         parse_strategy(std::string_view s);

  struct EnumLimits {
    std::size_t max_cosets = 2'000'000;  // live + dead cosets ever defined
    Strategy    strategy   = Strategy::hlt;
  };

  class LimitExceeded : public Error {
   public:
    explicit LimitExceeded(std::size_t cap);
  };

  // Column of a letter in the table: R1, R1^-1, R2, R2^-1, ...
  [[nodiscard]] constexpr std::size_t column(Letter x) noexcept {
    return 2 * static_cast<std::size_t>(x.index - 1) + (x.exponent < 0 ? 1 : 0);
  }
  [[nodiscard]] constexpr Letter letter_of_column(std::size_t col) noexcept {
    return Letter{static_cast<int>(col / 2) + 1, (col % 2) == 0 ? 1 : -1};
  }

  using CosetId = std::uint32_t;

  class CosetTable {
   public:
    struct SchreierEdge {
      CosetId parent = 0;  // 0 for coset 1
      Letter  letter;
    };

    CosetTable() = default;

    [[nodiscard]] std::size_t size() const noexcept {
      return _size;
    }
    [[nodiscard]] int rank() const noexcept {
      return _rank;
    }
    [[nodiscard]] std::size_t columns() const noexcept {
      return 2 * static_cast<std::size_t>(_rank - 1);
    }
    [[nodiscard]] bool valid(CosetId c) const noexcept {
      return c >= 1 && c <= _size;
    }

    // 1-based ids; throws on invalid input.
    [[nodiscard]] CosetId action(CosetId c, Letter x) const;
    [[nodiscard]] CosetId action_unchecked(CosetId c, std::size_t col) const {
      return _data[(c - 1) * columns() + col];
    }
    [[nodiscard]] SchreierEdge schreier(CosetId c) const;

    // `cosets: <N> rank: <n>` then `<id>: <R1> <R1^-1> ... <R_{n-1}^-1>`.
    [[nodiscard]] std::string serialize() const;

    bool operator==(CosetTable const&) const = default;

   private:
    friend CosetTable enumerate(Presentation const&,
                                std::vector<Word> const&,
                                EnumLimits const&);

    int                       _rank = 3;
    std::size_t               _size = 0;
    std::vector<CosetId>      _data;
    std::vector<SchreierEdge> _schreier;  // index c-1
  };

  // Runs the enumeration. On success the table is complete, compressed and
  // standardized: ids follow breadth-first discovery from coset 1, scanning
  // columns in order, so the Schreier tree is a BFS tree.
  [[nodiscard]] CosetTable enumerate(Presentation const&      p,
                                     std::vector<Word> const& subgroup_gens,
                                     EnumLimits const&        limits = {});

  // Applies the letters of w to c, rightmost letter first.
  [[nodiscard]] CosetId coset_action(CosetTable const& t, CosetId c, Word const& w);

  // Word along Schreier edges from coset 1 to c.
  [[nodiscard]] Word representative(CosetTable const& t, CosetId c);

  [[nodiscard]] std::size_t group_order(Presentation const& p,
                                        EnumLimits const&   limits = {});

  // True iff every relator traces a closed loop from c.
  [[nodiscard]] bool relators_close_at(CosetTable const&   t,
                                       Presentation const& p,
                                       CosetId             c);

}  // namespace braidq

#endif  // BRAIDQ_COSET_ENUM_HPP_

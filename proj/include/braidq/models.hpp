// Exact models of the nontrivial central extensions of S4: the binary
// octahedral group 2O (unit quaternions over Z[1/2, sqrt2]), GL(2,3), SL(2,4).

#ifndef BRAIDQ_MODELS_HPP_
#define BRAIDQ_MODELS_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "braidq/words.hpp"

namespace braidq {

  // (a + b sqrt2) / 2^k, kept normalized.
  class DyadicRt2 {
   public:
    constexpr DyadicRt2() = default;
    DyadicRt2(std::int64_t a, std::int64_t b = 0, int k = 0);

    [[nodiscard]] std::int64_t a() const noexcept {
      return _a;
    }
    [[nodiscard]] std::int64_t b() const noexcept {
      return _b;
    }
    [[nodiscard]] int k() const noexcept {
      return _k;
    }
    [[nodiscard]] bool is_zero() const noexcept {
      return _a == 0 && _b == 0;
    }
    [[nodiscard]] double to_double() const;

    friend DyadicRt2 operator+(DyadicRt2 const& x, DyadicRt2 const& y);
    friend DyadicRt2 operator-(DyadicRt2 const& x, DyadicRt2 const& y);
    friend DyadicRt2 operator*(DyadicRt2 const& x, DyadicRt2 const& y);
    DyadicRt2        operator-() const;

    auto operator<=>(DyadicRt2 const&) const = default;

   private:
    void normalize();

    std::int64_t _a = 0;
    std::int64_t _b = 0;
    int          _k = 0;
  };

  [[nodiscard]] std::string to_string(DyadicRt2 const& x);

  struct Quaternion {
    DyadicRt2 w, x, y, z;

    auto operator<=>(Quaternion const&) const = default;
  };

  [[nodiscard]] Quaternion quat_mul(Quaternion const& p, Quaternion const& q);
  [[nodiscard]] Quaternion quat_neg(Quaternion const& q);
  [[nodiscard]] Quaternion quat_conj(Quaternion const& q);
  [[nodiscard]] DyadicRt2  quat_norm2(Quaternion const& q);
  [[nodiscard]] std::string to_string(Quaternion const& q);

  [[nodiscard]] Quaternion quat_one();
  [[nodiscard]] Quaternion quat_i();
  [[nodiscard]] Quaternion quat_j();
  [[nodiscard]] Quaternion quat_k();
  // (1 - k)/sqrt2 and (1 - j)/sqrt2
  [[nodiscard]] Quaternion u1();
  [[nodiscard]] Quaternion u2();

  // 2x2 matrix over Z/m, row-major.
  struct MatMod {
    int                m = 3;
    std::array<int, 4> e{1, 0, 0, 1};

    auto operator<=>(MatMod const&) const = default;
  };

  [[nodiscard]] MatMod      mat(int m, int a, int b, int c, int d);
  [[nodiscard]] MatMod      mat_identity(int m);
  [[nodiscard]] MatMod      mat_mul(MatMod const& x, MatMod const& y);
  [[nodiscard]] int         mat_det(MatMod const& x);
  [[nodiscard]] std::string to_string(MatMod const& x);

  // Breadth-first closure under right multiplication by the generators,
  // starting from the identity. Throws once more than max elements appear.
  template <typename T, typename Mul>
  std::vector<T> generate_closure(std::vector<T> const& gens,
                                  T const&              identity,
                                  Mul                   mul,
                                  std::size_t           max) {
    std::map<T, std::size_t> seen{{identity, 0}};
    std::vector<T>           out{identity};
    for (std::size_t k = 0; k < out.size(); ++k) {
      for (auto const& g : gens) {
        T p = mul(out[k], g);
        if (seen.emplace(p, out.size()).second) {
          out.push_back(p);
          if (out.size() > max) {
            throw Error("closure exceeds " + std::to_string(max) + " elements");
          }
        }
      }
    }
    return out;
  }

  template <typename T, typename Mul>
  unsigned order_of(T const& x, T const& identity, Mul mul) {
    unsigned k   = 1;
    T        cur = x;
    while (!(cur == identity)) {
      cur = mul(cur, x);
      ++k;
    }
    return k;
  }

  template <typename T, typename Mul>
  std::map<unsigned, std::size_t> order_multiset(std::vector<T> const& group,
                                                 T const&              identity,
                                                 Mul                   mul) {
    std::map<unsigned, std::size_t> out;
    for (auto const& g : group) {
      ++out[order_of(g, identity, mul)];
    }
    return out;
  }

  // True iff `central` lies in the subgroup generated by all commutators.
  // Throws if it does not commute with every element.
  template <typename T, typename Mul>
  bool stem_test(std::vector<T> const& group,
                 T const&              identity,
                 Mul                   mul,
                 T const&              central) {
    for (auto const& g : group) {
      if (!(mul(g, central) == mul(central, g))) {
        throw Error("stem test: element is not central");
      }
    }
    auto inv = [&](T const& a) {
      for (auto const& b : group) {
        if (mul(a, b) == identity) {
          return b;
        }
      }
      throw Error("stem test: group is not closed under inverses");
    };
    std::vector<T> inverses;
    inverses.reserve(group.size());
    for (auto const& a : group) {
      inverses.push_back(inv(a));
    }
    std::vector<T> comms;
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = 0; j < group.size(); ++j) {
        comms.push_back(mul(mul(group[i], group[j]), mul(inverses[i], inverses[j])));
      }
    }
    auto derived = generate_closure(comms, identity, mul, group.size());
    for (auto const& d : derived) {
      if (d == central) {
        return true;
      }
    }
    return false;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reports
  ////////////////////////////////////////////////////////////////////////

  struct Check {
    std::string name;
    bool        pass = false;
    std::string detail;
  };

  struct Report {
    std::string        title;
    std::vector<Check> checks;

    void add(std::string name, bool pass, std::string detail = {});
    [[nodiscard]] bool all_pass() const;
    // `CHECK <name>: PASS|FAIL <detail>` per line
    [[nodiscard]] std::string to_text() const;
    [[nodiscard]] std::string to_json() const;
  };

  enum class MatrixModel { gl23, sl24 };

  [[nodiscard]] std::vector<Quaternion> closure_2O();
  [[nodiscard]] std::vector<MatMod>     closure_matrix(MatrixModel which);
  [[nodiscard]] std::array<MatMod, 2>   matrix_generators(MatrixModel which);

  [[nodiscard]] Report verify_2O();
  [[nodiscard]] Report verify_matrix_model(MatrixModel which);
  // stem test for each of the three models
  [[nodiscard]] Report stem_report();
  [[nodiscard]] Report extension_report();

  [[nodiscard]] std::map<unsigned, std::size_t> order_multiset_2O();
  [[nodiscard]] std::map<unsigned, std::size_t> order_multiset(MatrixModel which);

  [[nodiscard]] std::string to_string(std::map<unsigned, std::size_t> const& profile);

}  // namespace braidq

#endif  // BRAIDQ_MODELS_HPP_

#include "braidq/coset_enum.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace braidq {

  std::string_view to_string(Strategy s) {
    return s == Strategy::hlt ? "hlt" : "felsch";
  }

  Strategy parse_strategy(std::string_view s) {
    if (s == "hlt" || s == "HLT") {
      return Strategy::hlt;
    }
    if (s == "felsch" || s == "Felsch") {
      return Strategy::felsch;
    }
    throw Error("unknown strategy '" + std::string(s) + "'");
  }

  LimitExceeded::LimitExceeded(std::size_t cap)
      : Error("coset enumeration did not close within " + std::to_string(cap)
              + " cosets (infinite index or cap too small)") {}

  namespace {

    using Col = std::uint32_t;

    constexpr Col inv(Col x) noexcept {
      return x ^ 1U;
    }

    // Classical right-coset enumeration, 0-based cosets, -1 = undefined.
    class Enumerator {
     public:
      Enumerator(std::size_t                   ncols,
                 std::vector<std::vector<Col>> rels,
                 std::size_t                   cap,
                 bool                          felsch)
          : _ncols(ncols), _rels(std::move(rels)), _cap(cap), _felsch(felsch) {
        if (_felsch) {
          build_conjugates();
        }
        new_coset();
      }

      void run_hlt(std::vector<std::vector<Col>> const& subgroup) {
        for (auto const& h : subgroup) {
          scan_and_fill(0, h);
        }
        bool complete = false;
        while (!complete) {
          for (std::int32_t a = 0; a < static_cast<std::int32_t>(_fwd.size());
               ++a) {
            if (!alive(a)) {
              continue;
            }
            for (auto const& r : _rels) {
              scan_and_fill(a, r);
              if (!alive(a)) {
                break;
              }
            }
            if (!alive(a)) {
              continue;
            }
            for (Col x = 0; x < _ncols; ++x) {
              if (T(a, x) < 0) {
                define(a, x);
              }
            }
          }
          complete = is_complete();
        }
      }

      void run_felsch(std::vector<std::vector<Col>> const& subgroup) {
        for (auto const& h : subgroup) {
          scan_and_fill(0, h);
          process_deductions();
        }
        bool complete = false;
        while (!complete) {
          for (std::int32_t a = 0; a < static_cast<std::int32_t>(_fwd.size());
               ++a) {
            for (Col x = 0; x < _ncols && alive(a); ++x) {
              if (T(a, x) < 0) {
                define(a, x);
                process_deductions();
              }
            }
          }
          complete = is_complete();
        }
      }

      // Compresses and renumbers in BFS order; fills the output arrays.
      void standardize(std::vector<CosetId>&                   data,
                       std::vector<CosetTable::SchreierEdge>& schreier,
                       std::size_t&                            size) {
        std::vector<std::int32_t> newid(_fwd.size(), -1);
        std::vector<std::int32_t> order;
        order.reserve(_fwd.size());
        std::int32_t root = rep(0);
        newid[root]       = 0;
        order.push_back(root);
        schreier.clear();
        schreier.push_back({0, Letter{}});
        for (std::size_t k = 0; k < order.size(); ++k) {
          auto c = order[k];
          for (Col x = 0; x < _ncols; ++x) {
            auto d = rep(T(c, x));
            if (newid[d] < 0) {
              newid[d] = static_cast<std::int32_t>(order.size());
              order.push_back(d);
              schreier.push_back({static_cast<CosetId>(newid[c] + 1),
                                  letter_of_column(x)});
            }
          }
        }
        size = order.size();
        data.assign(size * _ncols, 0);
        for (std::size_t k = 0; k < order.size(); ++k) {
          for (Col x = 0; x < _ncols; ++x) {
            data[k * _ncols + x]
                = static_cast<CosetId>(newid[rep(T(order[k], x))] + 1);
          }
        }
      }

     private:
      std::int32_t& T(std::int32_t c, Col x) {
        return _tab[static_cast<std::size_t>(c) * _ncols + x];
      }

      bool alive(std::int32_t c) const {
        return _fwd[c] == c;
      }

      std::int32_t new_coset() {
        if (_fwd.size() >= _cap) {
          throw LimitExceeded(_cap);
        }
        auto c = static_cast<std::int32_t>(_fwd.size());
        _fwd.push_back(c);
        _tab.resize(_tab.size() + _ncols, -1);
        return c;
      }

      void define(std::int32_t c, Col x) {
        auto d      = new_coset();
        T(c, x)     = d;
        T(d, inv(x)) = c;
        if (_felsch) {
          _deductions.emplace_back(c, x);
        }
      }

      std::int32_t rep(std::int32_t c) {
        auto r = c;
        while (_fwd[r] != r) {
          r = _fwd[r];
        }
        while (_fwd[c] != r) {
          auto next = _fwd[c];
          _fwd[c]   = r;
          c         = next;
        }
        return r;
      }

      void merge(std::int32_t k, std::int32_t l, std::vector<std::int32_t>& q) {
        auto a = rep(k);
        auto b = rep(l);
        if (a == b) {
          return;
        }
        if (a > b) {
          std::swap(a, b);
        }
        _fwd[b] = a;
        q.push_back(b);
      }

      void coincidence(std::int32_t a, std::int32_t b) {
        std::vector<std::int32_t> q;
        merge(a, b, q);
        for (std::size_t i = 0; i < q.size(); ++i) {
          auto g = q[i];
          for (Col x = 0; x < _ncols; ++x) {
            auto d = T(g, x);
            if (d < 0) {
              continue;
            }
            if (T(d, inv(x)) == g) {
              T(d, inv(x)) = -1;
            }
            auto mu = rep(g);
            auto nu = rep(d);
            if (T(mu, x) >= 0) {
              merge(nu, T(mu, x), q);
            } else if (T(nu, inv(x)) >= 0) {
              merge(mu, T(nu, inv(x)), q);
            } else {
              T(mu, x)      = nu;
              T(nu, inv(x)) = mu;
              if (_felsch) {
                _deductions.emplace_back(mu, x);
              }
            }
          }
        }
      }

      void scan_and_fill(std::int32_t a, std::vector<Col> const& w) {
        if (w.empty()) {
          return;
        }
        std::int32_t f = a, b = a;
        std::size_t  i = 0;
        std::size_t  j = w.size();  // one past the last unscanned letter
        while (true) {
          while (i < j && T(f, w[i]) >= 0) {
            f = T(f, w[i++]);
          }
          if (i == j) {
            if (f != b) {
              coincidence(f, b);
            }
            return;
          }
          while (j > i && T(b, inv(w[j - 1])) >= 0) {
            b = T(b, inv(w[--j]));
          }
          if (j == i) {
            if (f != b) {
              coincidence(f, b);
            }
            return;
          }
          if (j == i + 1) {
            T(f, w[i])      = b;
            T(b, inv(w[i])) = f;
            if (_felsch) {
              _deductions.emplace_back(f, w[i]);
            }
            return;
          }
          define(f, w[i]);
        }
      }

      void scan(std::int32_t a, std::vector<Col> const& w) {
        std::int32_t f = a, b = a;
        std::size_t  i = 0;
        std::size_t  j = w.size();
        while (i < j && T(f, w[i]) >= 0) {
          f = T(f, w[i++]);
        }
        if (i == j) {
          if (f != b) {
            coincidence(f, b);
          }
          return;
        }
        while (j > i && T(b, inv(w[j - 1])) >= 0) {
          b = T(b, inv(w[--j]));
        }
        if (j == i) {
          if (f != b) {
            coincidence(f, b);
          }
        } else if (j == i + 1) {
          T(f, w[i])      = b;
          T(b, inv(w[i])) = f;
          _deductions.emplace_back(f, w[i]);
        }
      }

      void process_deductions() {
        while (!_deductions.empty()) {
          auto [a, x] = _deductions.back();
          _deductions.pop_back();
          if (!alive(a)) {
            continue;
          }
          for (auto const& w : _conj[x]) {
            scan(a, w);
            if (!alive(a)) {
              break;
            }
          }
          if (!alive(a) || T(a, x) < 0) {
            continue;
          }
          auto b = rep(T(a, x));
          for (auto const& w : _conj[inv(x)]) {
            scan(b, w);
            if (!alive(b)) {
              break;
            }
          }
        }
      }

      bool is_complete() {
        for (std::int32_t a = 0; a < static_cast<std::int32_t>(_fwd.size());
             ++a) {
          if (!alive(a)) {
            continue;
          }
          for (Col x = 0; x < _ncols; ++x) {
            if (T(a, x) < 0) {
              return false;
            }
          }
        }
        return true;
      }

      void build_conjugates() {
        std::set<std::vector<Col>> seen;
        _conj.assign(_ncols, {});
        auto add_all = [&](std::vector<Col> const& r) {
          for (std::size_t s = 0; s < r.size(); ++s) {
            std::vector<Col> c(r.begin() + s, r.end());
            c.insert(c.end(), r.begin(), r.begin() + s);
            if (seen.insert(c).second) {
              _conj[c.front()].push_back(c);
            }
          }
        };
        for (auto const& r : _rels) {
          add_all(r);
          std::vector<Col> ri(r.rbegin(), r.rend());
          for (auto& x : ri) {
            x = inv(x);
          }
          add_all(ri);
        }
      }

      std::size_t                                  _ncols;
      std::vector<std::vector<Col>>                _rels;
      std::size_t                                  _cap;
      bool                                         _felsch;
      std::vector<std::int32_t>                    _tab;
      std::vector<std::int32_t>                    _fwd;
      std::vector<std::pair<std::int32_t, Col>>    _deductions;
      std::vector<std::vector<std::vector<Col>>>   _conj;
    };

    // Reversed word as table columns.
    std::vector<Col> reversed_columns(Word const& w) {
      std::vector<Col> out;
      out.reserve(w.size());
      for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
        out.push_back(static_cast<Col>(column(*it)));
      }
      return out;
    }
  }  // namespace

  CosetId CosetTable::action(CosetId c, Letter x) const {
    if (!valid(c)) {
      throw Error("invalid coset id " + std::to_string(c));
    }
    if (x.index < 1 || x.index > _rank - 1) {
      throw Error("letter out of range for table");
    }
    return action_unchecked(c, column(x));
  }

  CosetTable::SchreierEdge CosetTable::schreier(CosetId c) const {
    if (!valid(c)) {
      throw Error("invalid coset id " + std::to_string(c));
    }
    return _schreier[c - 1];
  }

  std::string CosetTable::serialize() const {
    std::ostringstream os;
    os << "cosets: " << _size << " rank: " << _rank << '\n';
    auto const nc = columns();
    for (std::size_t c = 0; c < _size; ++c) {
      os << (c + 1) << ':';
      for (std::size_t x = 0; x < nc; ++x) {
        os << ' ' << _data[c * nc + x];
      }
      os << '\n';
    }
    return os.str();
  }

  CosetTable enumerate(Presentation const&      p,
                       std::vector<Word> const& subgroup_gens,
                       EnumLimits const&        limits) {
    if (limits.max_cosets < 1) {
      throw Error("max_cosets must be at least 1");
    }
    std::vector<std::vector<Col>> rels;
    for (auto const& r : p.relators) {
      if (r.rank() != p.rank) {
        throw Error("relator rank does not match presentation rank");
      }
      if (free_reduce(r) != r) {
        throw Error("relators must be freely reduced: " + to_tokens(r));
      }
      if (!r.empty()) {
        rels.push_back(reversed_columns(r));
      }
    }
    std::vector<std::vector<Col>> sub;
    for (auto const& h : subgroup_gens) {
      if (h.rank() != p.rank) {
        throw Error("subgroup generator rank does not match presentation");
      }
      auto hr = free_reduce(h);
      if (!hr.empty()) {
        sub.push_back(reversed_columns(hr));
      }
    }
    auto const ncols = 2 * static_cast<std::size_t>(p.rank - 1);
    bool const felsch = limits.strategy == Strategy::felsch;

    Enumerator e(ncols, std::move(rels), limits.max_cosets, felsch);
    if (felsch) {
      e.run_felsch(sub);
    } else {
      e.run_hlt(sub);
    }
    CosetTable t;
    t._rank = p.rank;
    e.standardize(t._data, t._schreier, t._size);
    return t;
  }

  CosetId coset_action(CosetTable const& t, CosetId c, Word const& w) {
    if (!t.valid(c)) {
      throw Error("invalid coset id " + std::to_string(c));
    }
    if (w.rank() != t.rank()) {
      throw Error("word rank does not match table rank");
    }
    auto const& xs = w.letters();
    for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
      c = t.action_unchecked(c, column(*it));
    }
    return c;
  }

  Word representative(CosetTable const& t, CosetId c) {
    if (!t.valid(c)) {
      throw Error("invalid coset id " + std::to_string(c));
    }
    std::vector<Letter> xs;
    while (c != 1) {
      auto e = t.schreier(c);
      xs.push_back(e.letter);
      c = e.parent;
    }
    return Word(t.rank(), std::move(xs));
  }

  std::size_t group_order(Presentation const& p, EnumLimits const& limits) {
    return enumerate(p, {}, limits).size();
  }

  bool relators_close_at(CosetTable const& t, Presentation const& p, CosetId c) {
    for (auto const& r : p.relators) {
      if (coset_action(t, c, r) != c) {
        return false;
      }
    }
    return true;
  }

}  // namespace braidq

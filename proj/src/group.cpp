#include "braidq/group.hpp"

#include <atomic>
#include <sstream>

namespace braidq {

  namespace {
    std::uint64_t next_tag() {
      static std::atomic<std::uint64_t> counter{0};
      return ++counter;
    }

    constexpr std::size_t col_of(int index, int exponent) {
      return column(Letter{index, exponent});
    }
  }  // namespace

  GroupCtx::GroupCtx(Presentation p, EnumLimits const& limits)
      : _p(std::move(p)), _t(enumerate(_p, {}, limits)), _tag(next_tag()) {
    build();
  }

  GroupCtx::GroupCtx(int n, Variant v, EnumLimits const& limits)
      : GroupCtx(presentation_for(n, v), limits) {}

  void GroupCtx::build() {
    auto const N  = _t.size();
    auto const nc = _t.columns();

    // e = a * parent  =>  e * x = a * (parent * x); BFS order has parents first.
    _right.assign(N * nc, 0);
    for (CosetId e = 1; e <= N; ++e) {
      for (std::size_t x = 0; x < nc; ++x) {
        CosetId v;
        if (e == 1) {
          v = _t.action_unchecked(1, x);
        } else {
          auto s = _t.schreier(e);
          v      = _t.action_unchecked(right(s.parent, x), column(s.letter));
        }
        _right[(e - 1) * nc + x] = v;
      }
    }

    _levels.clear();
    for (int level = 1; level <= _p.rank - 2; ++level) {
      std::vector<bool>    in(N, false);
      std::vector<CosetId> queue{1};
      in[0] = true;
      for (std::size_t k = 0; k < queue.size(); ++k) {
        for (std::size_t x = 0; x < 2 * static_cast<std::size_t>(level); ++x) {
          auto d = right(queue[k], x);
          if (!in[d - 1]) {
            in[d - 1] = true;
            queue.push_back(d);
          }
        }
      }
      _levels.push_back(std::move(in));
    }

    _r1_order  = 1;
    CosetId cur = left(1, col_of(1, 1));
    while (cur != 1) {
      cur = left(cur, col_of(1, 1));
      ++_r1_order;
    }
  }

  Element GroupCtx::element(CosetId id) const {
    if (!_t.valid(id)) {
      throw Error("element id " + std::to_string(id) + " out of range 1.."
                  + std::to_string(_t.size()));
    }
    return Element{id, _tag};
  }

  std::vector<Element> GroupCtx::elements() const {
    std::vector<Element> out;
    out.reserve(_t.size());
    for (CosetId id = 1; id <= _t.size(); ++id) {
      out.push_back(Element{id, _tag});
    }
    return out;
  }

  void GroupCtx::check(Element e) const {
    if (e.ctx != _tag) {
      throw Error("element belongs to a different group context (mixed contexts)");
    }
    if (!_t.valid(e.id)) {
      throw Error("element id " + std::to_string(e.id) + " out of range");
    }
  }

  CosetId GroupCtx::product(CosetId a, CosetId b) const {
    // b = l_1 l_2 ... l_k along the Schreier chain; a*b = (((a l_1) l_2) ...)
    while (b != 1) {
      auto s = _t.schreier(b);
      a      = right(a, column(s.letter));
      b      = s.parent;
    }
    return a;
  }

  CosetId GroupCtx::inverse(CosetId a) const {
    // a = l_1 ... l_k, so a^-1 = l_k^-1 ... l_1^-1: prepend each inverse
    CosetId out = 1;
    while (a != 1) {
      auto s = _t.schreier(a);
      out    = left(out, column(s.letter.inverse()));
      a      = s.parent;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Canonical forms
  ////////////////////////////////////////////////////////////////////////

  std::vector<Descriptor> descriptors_at(int level) {
    if (level < 2) {
      throw Error("descriptor level must be >= 2");
    }
    std::vector<Descriptor> out;
    for (int k = 0; k < 4; ++k) {
      out.push_back({Descriptor::Kind::power, k});
    }
    for (int j = 1; j <= level - 1; ++j) {
      out.push_back({Descriptor::Kind::run, j});
    }
    for (int j = 1; j <= level - 1; ++j) {
      out.push_back({Descriptor::Kind::cube_run, j});
    }
    return out;
  }

  Word expand(Descriptor d, int level, int rank) {
    Word w(rank);
    switch (d.kind) {
      case Descriptor::Kind::power:
        if (d.value < 0 || d.value > 3) {
          throw Error("power descriptor out of range");
        }
        return power(rank, level, d.value);
      case Descriptor::Kind::run:
      case Descriptor::Kind::cube_run:
        if (d.value < 1 || d.value > level - 1) {
          throw Error("run descriptor out of range");
        }
        w = power(rank, level, d.kind == Descriptor::Kind::run ? 1 : 3);
        for (int s = 1; s <= d.value; ++s) {
          w.push_back(Letter{level - s, 1});
        }
        return w;
    }
    return w;
  }

  Word expand(CanonicalForm const& cf) {
    if (static_cast<int>(cf.levels.size()) != cf.rank - 2) {
      throw Error("canonical form has the wrong number of levels");
    }
    auto w = power(cf.rank, 1, cf.m);
    for (int i = 2; i <= cf.rank - 1; ++i) {
      w *= expand(cf.levels[i - 2], i, cf.rank);
    }
    return w;
  }

  std::string family_key(CanonicalForm const& cf) {
    std::string key;
    for (std::size_t i = 0; i < cf.levels.size(); ++i) {
      auto const& d = cf.levels[i];
      if (!key.empty()) {
        key += ' ';
      }
      switch (d.kind) {
        case Descriptor::Kind::power:
          key += "P";
          break;
        case Descriptor::Kind::run:
          key += "Run" + std::to_string(d.value);
          break;
        case Descriptor::Kind::cube_run:
          key += "Cube" + std::to_string(d.value);
          break;
      }
    }
    return key.empty() ? "P" : key;
  }

  Element element_from_word(GroupCtx const& g, Word const& w) {
    return Element{coset_action(g.table(), 1, w), g.tag()};
  }

  namespace {
    // e * w^-1 via right multiplication
    CosetId divide_right(GroupCtx const& g, CosetId e, Word const& w) {
      auto const& xs = w.letters();
      for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
        e = g.right(e, column(it->inverse()));
      }
      return e;
    }

    std::optional<CanonicalForm> decompose(GroupCtx const& g,
                                           CosetId         e,
                                           std::string*    why) {
      int const     n = g.rank();
      CanonicalForm cf;
      cf.rank = n;
      cf.levels.assign(n - 2, Descriptor{});
      for (int i = n - 1; i >= 2; --i) {
        int        hits = 0;
        CosetId    next = 0;
        Descriptor found;
        for (auto const& d : descriptors_at(i)) {
          auto f = divide_right(g, e, expand(d, i, n));
          if (g.in_subgroup(i - 1, f)) {
            ++hits;
            next  = f;
            found = d;
          }
        }
        if (hits != 1) {
          if (why != nullptr) {
            *why = "level " + std::to_string(i) + " has " + std::to_string(hits)
                   + " matching descriptors";
          }
          return std::nullopt;
        }
        cf.levels[i - 2] = found;
        e                = next;
      }
      CosetId cur = 1;
      for (int m = 0; m < g.generator_order(); ++m) {
        if (cur == e) {
          cf.m = m;
          return cf;
        }
        cur = g.left(cur, column(Letter{1, 1}));
      }
      if (why != nullptr) {
        *why = "base factor is not a power of R1";
      }
      return std::nullopt;
    }
  }  // namespace

  std::optional<CanonicalForm> try_canonical_form(GroupCtx const& g, Element e) {
    g.check(e);
    return decompose(g, e.id, nullptr);
  }

  CanonicalForm canonical_form(GroupCtx const& g, Element e) {
    g.check(e);
    std::string why;
    auto        cf = decompose(g, e.id, &why);
    if (!cf) {
      throw Error("no unique canonical form for element " + std::to_string(e.id)
                  + ": " + why);
    }
    return *cf;
  }

  Word name_word(GroupCtx const& g, Element e) {
    if (auto cf = try_canonical_form(g, e)) {
      return expand(*cf);
    }
    return representative(g.table(), e.id);
  }

  Element multiply(GroupCtx const& g, Element a, Element b) {
    g.check(a);
    g.check(b);
    return element_from_word(g, name_word(g, a) * name_word(g, b));
  }

  unsigned element_order(GroupCtx const& g, Element e) {
    g.check(e);
    unsigned k   = 1;
    CosetId  cur = e.id;
    while (cur != 1) {
      cur = g.product(cur, e.id);
      ++k;
    }
    return k;
  }

  bool is_central(GroupCtx const& g, Element e) {
    g.check(e);
    for (int i = 1; i < g.rank(); ++i) {
      auto x = column(Letter{i, 1});
      if (g.left(e.id, x) != g.right(e.id, x)) {
        return false;
      }
    }
    return true;
  }

  std::vector<Element> center(GroupCtx const& g) {
    std::vector<Element> out;
    for (auto e : g.elements()) {
      if (is_central(g, e)) {
        out.push_back(e);
      }
    }
    return out;
  }

  std::map<unsigned, std::size_t> order_profile(GroupCtx const& g) {
    std::map<unsigned, std::size_t> out;
    for (auto e : g.elements()) {
      ++out[element_order(g, e)];
    }
    return out;
  }

  GroupCtx quotient(GroupCtx const& g, Element z) {
    g.check(z);
    if (!is_central(g, z)) {
      throw Error("quotient element is not central");
    }
    if (auto k = element_order(g, z); k != 2) {
      throw Error("quotient element must have order 2 (has order "
                  + std::to_string(k) + ")");
    }
    auto p = g.presentation();
    p.relators.push_back(free_reduce(name_word(g, z)));
    p.variant = Variant::custom;
    return GroupCtx(std::move(p));
  }

  std::map<unsigned, std::size_t> quotient_order_profile(GroupCtx const& g,
                                                         Element         z) {
    return order_profile(quotient(g, z));
  }

  std::vector<std::pair<std::string, std::size_t>> family_sizes(GroupCtx const& g) {
    std::vector<std::vector<Descriptor>> combos{{}};
    for (int i = 2; i <= g.rank() - 1; ++i) {
      std::vector<std::vector<Descriptor>> next;
      for (auto const& c : combos) {
        for (auto const& d : descriptors_at(i)) {
          if (d.kind == Descriptor::Kind::power && d.value != 0) {
            continue;
          }
          next.push_back(c);
          next.back().push_back(d);
        }
      }
      combos = std::move(next);
    }
    std::vector<std::pair<std::string, std::size_t>> out;
    std::map<std::string, std::size_t>               pos;
    for (auto const& c : combos) {
      auto key = family_key(CanonicalForm{g.rank(), 0, c});
      pos[key] = out.size();
      out.emplace_back(key, 0);
    }
    for (auto e : g.elements()) {
      ++out[pos.at(family_key(canonical_form(g, e)))].second;
    }
    return out;
  }

  std::string cayley_dot(GroupCtx const& g) {
    std::ostringstream os;
    os << "digraph cayley {\n";
    os << "  node [shape=circle, fontsize=9];\n";
    for (auto e : g.elements()) {
      os << "  e" << e.id << " [label=\"" << to_pretty(name_word(g, e)) << "\"];\n";
    }
    for (auto e : g.elements()) {
      for (int i = 1; i < g.rank(); ++i) {
        auto d = g.right(e.id, column(Letter{i, 1}));
        os << "  e" << e.id << " -> e" << d << " [gen=" << i
           << ", style=" << (i == 1 ? "dotted" : "solid") << "];\n";
      }
    }
    os << "}\n";
    return os.str();
  }

}  // namespace braidq

#include "braidq/words.hpp"

#include <cctype>
#include <charconv>
#include <ostream>
#include <sstream>

namespace braidq {

  namespace {
    void check_letter(Letter x, int rank) {
      if (x.index < 1 || x.index > rank - 1) {
        throw Error("generator index out of range: R" + std::to_string(x.index)
                    + " (rank " + std::to_string(rank) + ")");
      }
      if (x.exponent != 1 && x.exponent != -1) {
        throw Error("letter exponent must be +1 or -1");
      }
    }

    void check_rank(int rank) {
      if (rank < 3) {
        throw Error("rank must be at least 3, found " + std::to_string(rank));
      }
    }

    std::vector<std::string_view> split_ws(std::string_view text) {
      std::vector<std::string_view> out;
      std::size_t                   i = 0;
      while (i < text.size()) {
        while (i < text.size()
               && std::isspace(static_cast<unsigned char>(text[i]))) {
          ++i;
        }
        std::size_t j = i;
        while (j < text.size()
               && !std::isspace(static_cast<unsigned char>(text[j]))) {
          ++j;
        }
        if (j > i) {
          out.push_back(text.substr(i, j - i));
        }
        i = j;
      }
      return out;
    }

    bool parse_uint(std::string_view s, int& out) {
      if (s.empty()) {
        return false;
      }
      for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          return false;
        }
      }
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
      return ec == std::errc() && ptr == s.data() + s.size();
    }

    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }
  }  // namespace

  Word::Word(int rank) : _rank(rank) {
    check_rank(rank);
  }

  Word::Word(int rank, std::vector<Letter> letters)
      : _rank(rank), _letters(std::move(letters)) {
    check_rank(rank);
    for (auto x : _letters) {
      check_letter(x, rank);
    }
  }

  void Word::push_back(Letter x) {
    check_letter(x, _rank);
    _letters.push_back(x);
  }

  Word& Word::operator*=(Word const& rhs) {
    if (rhs._rank != _rank) {
      throw Error("cannot concatenate words of different rank");
    }
    _letters.insert(_letters.end(), rhs._letters.begin(), rhs._letters.end());
    return *this;
  }

  Word operator*(Word lhs, Word const& rhs) {
    lhs *= rhs;
    return lhs;
  }

  Word power(int rank, int index, int k) {
    Word   w(rank);
    Letter x{index, k >= 0 ? 1 : -1};
    for (int i = 0; i < (k >= 0 ? k : -k); ++i) {
      w.push_back(x);
    }
    return w;
  }

  Word power(Word const& w, int k) {
    Word base = k >= 0 ? w : invert(w);
    Word out(w.rank());
    for (int i = 0; i < (k >= 0 ? k : -k); ++i) {
      out *= base;
    }
    return out;
  }

  Word parse_word(std::string_view text, int rank) {
    Word w(rank);
    for (auto tok : split_ws(text)) {
      if (tok.size() < 2 || tok[0] != 'R') {
        throw Error("malformed token: '" + std::string(tok) + "'");
      }
      auto body = tok.substr(1);
      int  exp  = 1;
      if (auto caret = body.find('^'); caret != std::string_view::npos) {
        if (body.substr(caret) != "^-1") {
          throw Error("malformed token: '" + std::string(tok) + "'");
        }
        exp  = -1;
        body = body.substr(0, caret);
      }
      int idx = 0;
      if (!parse_uint(body, idx)) {
        throw Error("malformed token: '" + std::string(tok) + "'");
      }
      w.push_back(Letter{idx, exp});
    }
    return w;
  }

  std::string to_tokens(Word const& w) {
    std::string out;
    for (auto x : w.letters()) {
      if (!out.empty()) {
        out += ' ';
      }
      out += 'R' + std::to_string(x.index);
      if (x.exponent < 0) {
        out += "^-1";
      }
    }
    return out;
  }

  std::string to_pretty(Word const& w) {
    if (w.empty()) {
      return "Id";
    }
    std::string out;
    auto const& xs = w.letters();
    for (std::size_t i = 0; i < xs.size();) {
      std::size_t j = i;
      while (j < xs.size() && xs[j] == xs[i]) {
        ++j;
      }
      int k = static_cast<int>(j - i) * xs[i].exponent;
      if (!out.empty()) {
        out += ' ';
      }
      out += 'R' + std::to_string(xs[i].index);
      if (k != 1) {
        out += '^' + std::to_string(k);
      }
      i = j;
    }
    return out;
  }

  Word free_reduce(Word const& w) {
    std::vector<Letter> stack;
    stack.reserve(w.size());
    for (auto x : w.letters()) {
      if (!stack.empty() && stack.back() == x.inverse()) {
        stack.pop_back();
      } else {
        stack.push_back(x);
      }
    }
    return Word(w.rank(), std::move(stack));
  }

  Word invert(Word const& w) {
    std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
    for (auto& x : out) {
      x = x.inverse();
    }
    return Word(w.rank(), std::move(out));
  }

  std::ostream& operator<<(std::ostream& os, Word const& w) {
    return os << to_tokens(w);
  }

  ////////////////////////////////////////////////////////////////////////
  // Plane letters
  ////////////////////////////////////////////////////////////////////////

  void validate(PlaneLetter const& p, int n) {
    if (p.i < 1 || p.i > n || p.j < 1 || p.j > n) {
      throw Error("plane letter index out of range: R_{" + std::to_string(p.i)
                  + "," + std::to_string(p.j) + "} for n = "
                  + std::to_string(n));
    }
    if (p.i == p.j) {
      throw Error("plane letter needs distinct axes");
    }
  }

  PlaneWord parse_plane_word(std::string_view text, int n) {
    PlaneWord out;
    for (auto tok : split_ws(text)) {
      if (tok.size() < 3 || tok[0] != 'R') {
        throw Error("malformed plane token: '" + std::string(tok) + "'");
      }
      auto        body = tok.substr(1);
      PlaneLetter p;
      if (auto comma = body.find(','); comma != std::string_view::npos) {
        if (!parse_uint(body.substr(0, comma), p.i)
            || !parse_uint(body.substr(comma + 1), p.j)) {
          throw Error("malformed plane token: '" + std::string(tok) + "'");
        }
      } else if (body.size() == 2 && std::isdigit(body[0])
                 && std::isdigit(body[1])) {
        p.i = body[0] - '0';
        p.j = body[1] - '0';
      } else {
        throw Error("malformed plane token: '" + std::string(tok) + "'");
      }
      validate(p, n);
      out.push_back(p);
    }
    return out;
  }

  std::string to_tokens(PlaneWord const& w) {
    std::string out;
    for (auto const& p : w) {
      if (!out.empty()) {
        out += ' ';
      }
      if (p.i < 10 && p.j < 10) {
        out += 'R' + std::to_string(p.i) + std::to_string(p.j);
      } else {
        out += 'R' + std::to_string(p.i) + ',' + std::to_string(p.j);
      }
    }
    return out;
  }

  PlaneWord invert(PlaneWord const& w) {
    PlaneWord out(w.rbegin(), w.rend());
    for (auto& p : out) {
      p = p.inverse();
    }
    return out;
  }

  namespace {
    // R_{ij} with i < j.
    Word ascending_plane(int i, int j, int n) {
      if (j == i + 1) {
        return Word(n, {Letter{i, 1}});
      }
      // R_{ji} = W R_{j-1} W^-1, so R_{ij} = W R_{j-1}^-1 W^-1.
      Word w = ascending_plane(i, j - 1, n);
      return free_reduce(w * Word(n, {Letter{j - 1, -1}}) * invert(w));
    }
  }  // namespace

  Word plane_to_standard(PlaneWord const& pw, int n) {
    Word out(n);
    for (auto const& p : pw) {
      validate(p, n);
      if (p.i < p.j) {
        out *= ascending_plane(p.i, p.j, n);
      } else {
        out *= invert(ascending_plane(p.j, p.i, n));
      }
    }
    return free_reduce(out);
  }

  PlaneWord standard_to_plane(Word const& w) {
    PlaneWord out;
    out.reserve(w.size());
    for (auto x : w.letters()) {
      out.push_back(x.exponent > 0 ? PlaneLetter{x.index, x.index + 1}
                                   : PlaneLetter{x.index + 1, x.index});
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentations
  ////////////////////////////////////////////////////////////////////////

  std::string_view to_string(Variant v) {
    switch (v) {
      case Variant::standard:
        return "standard";
      case Variant::twisted:
        return "twisted";
      default:
        return "custom";
    }
  }

  Variant parse_variant(std::string_view s) {
    if (s == "standard") {
      return Variant::standard;
    }
    if (s == "twisted") {
      return Variant::twisted;
    }
    throw Error("unknown variant '" + std::string(s) + "'");
  }

  Presentation presentation_for(int n, Variant variant) {
    if (n < 3) {
      throw Error("presentation needs n >= 3, found " + std::to_string(n));
    }
    if (variant == Variant::custom) {
      throw Error("presentation_for needs the standard or twisted variant");
    }
    Presentation p;
    p.rank    = n;
    p.variant = variant;
    auto R    = [n](int i, int e = 1) { return power(n, i, e); };

    for (int i = 1; i <= n - 2; ++i) {
      Word lhs = R(i) * R(i + 1) * R(i);
      Word rhs = R(i + 1) * R(i) * R(i + 1);
      p.relators.push_back(free_reduce(lhs * invert(rhs)));
    }
    for (int i = 1; i <= n - 1; ++i) {
      for (int j = i + 2; j <= n - 1; ++j) {
        p.relators.push_back(R(i) * R(j) * R(i, -1) * R(j, -1));
      }
    }
    if (variant == Variant::standard) {
      p.relators.push_back(
          free_reduce(R(1, 2) * invert(R(2) * R(1, 2) * R(2))));
    } else {
      p.relators.push_back(
          free_reduce(R(1, 2) * invert(R(2) * R(1, 6) * R(2))));
      p.relators.push_back(R(1, 4) * R(2) * R(1, -4) * R(2, -1));
    }
    return p;
  }

  std::string to_text(Presentation const& p) {
    std::ostringstream os;
    os << "# variant: " << to_string(p.variant) << '\n';
    os << "rank: " << p.rank << '\n';
    for (auto const& r : p.relators) {
      os << "relator: " << to_tokens(r) << '\n';
    }
    return os.str();
  }

  Presentation parse_presentation(std::string_view text) {
    Presentation p;
    bool         have_rank = false;
    std::size_t  lineno    = 0;
    while (!text.empty()) {
      ++lineno;
      auto eol  = text.find('\n');
      auto line = text.substr(0, eol);
      text      = eol == std::string_view::npos ? std::string_view{}
                                                : text.substr(eol + 1);
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      line = trim(line);
      if (line.empty()) {
        continue;
      }
      auto colon = line.find(':');
      if (colon == std::string_view::npos) {
        throw Error("line " + std::to_string(lineno) + ": expected 'key: value'");
      }
      auto key   = trim(line.substr(0, colon));
      auto value = trim(line.substr(colon + 1));
      if (key == "rank") {
        if (have_rank || !parse_uint(value, p.rank)) {
          throw Error("line " + std::to_string(lineno) + ": bad rank");
        }
        check_rank(p.rank);
        have_rank = true;
      } else if (key == "relator") {
        if (!have_rank) {
          throw Error("line " + std::to_string(lineno)
                      + ": relator before rank");
        }
        auto w = parse_word(value, p.rank);
        if (w.empty() || free_reduce(w) != w) {
          throw Error("line " + std::to_string(lineno)
                      + ": relator must be nonempty and freely reduced");
        }
        p.relators.push_back(std::move(w));
      } else {
        throw Error("line " + std::to_string(lineno) + ": unknown key '"
                    + std::string(key) + "'");
      }
    }
    if (!have_rank) {
      throw Error("presentation has no rank line");
    }
    return p;
  }

}  // namespace braidq

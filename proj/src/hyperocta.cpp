#include "braidq/hyperocta.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace braidq {

  SignedPerm::SignedPerm(std::vector<int> images) : _images(std::move(images)) {
    auto const        n = static_cast<int>(_images.size());
    std::vector<bool> seen(n + 1, false);
    for (int x : _images) {
      int a = std::abs(x);
      if (a < 1 || a > n || seen[a]) {
        throw Error("not a signed permutation: " + braidq::to_string(*this));
      }
      seen[a] = true;
    }
  }

  SignedPerm SignedPerm::identity(int n) {
    if (n < 1) {
      throw Error("signed permutation size must be positive");
    }
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) {
      v[i] = i + 1;
    }
    return SignedPerm(std::move(v));
  }

  int SignedPerm::apply(int x) const {
    int a = std::abs(x);
    if (a < 1 || a > size()) {
      throw Error("point " + std::to_string(x) + " out of range");
    }
    return x > 0 ? _images[a - 1] : -_images[a - 1];
  }

  bool SignedPerm::is_identity() const noexcept {
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != static_cast<int>(i) + 1) {
        return false;
      }
    }
    return true;
  }

  SignedPerm theta_plane(int i, int j, int n) {
    if (n < 2 || i < 1 || j < 1 || i > n || j > n) {
      throw Error("plane (" + std::to_string(i) + "," + std::to_string(j)
                  + ") out of range for n=" + std::to_string(n));
    }
    if (i == j) {
      throw Error("plane indices must differ");
    }
    auto v  = SignedPerm::identity(n).images();
    v[i - 1] = j;
    v[j - 1] = -i;
    return SignedPerm(std::move(v));
  }

  SignedPerm theta_generator(int i, int n) {
    if (i < 1 || i > n - 1) {
      throw Error("generator index " + std::to_string(i) + " out of range for n="
                  + std::to_string(n));
    }
    return theta_plane(i, i + 1, n);
  }

  SignedPerm compose(SignedPerm const& a, SignedPerm const& b) {
    if (a.size() != b.size()) {
      throw Error("signed permutation size mismatch");
    }
    std::vector<int> v(a.size());
    for (int i = 1; i <= a.size(); ++i) {
      v[i - 1] = a.apply(b.apply(i));
    }
    return SignedPerm(std::move(v));
  }

  SignedPerm inverse(SignedPerm const& a) {
    std::vector<int> v(a.size());
    for (int i = 1; i <= a.size(); ++i) {
      int y              = a.apply(i);
      v[std::abs(y) - 1] = y > 0 ? i : -i;
    }
    return SignedPerm(std::move(v));
  }

  SignedPerm theta_word(Word const& w) {
    return theta_word(w, w.rank());
  }

  SignedPerm theta_word(Word const& w, int n) {
    if (w.rank() > n) {
      throw Error("word rank exceeds n");
    }
    auto out = SignedPerm::identity(n);
    auto const& xs = w.letters();
    for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
      auto g = theta_generator(it->index, n);
      out    = compose(it->exponent > 0 ? g : inverse(g), out);
    }
    return out;
  }

  SignedPerm theta_plane_word(PlaneWord const& w, int n) {
    auto out = SignedPerm::identity(n);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out = compose(theta_plane(it->i, it->j, n), out);
    }
    return out;
  }

  int determinant(SignedPerm const& p) {
    auto const n = p.size();
    int        s = 1;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) {
      int y   = p.images()[i];
      perm[i] = std::abs(y) - 1;
      if (y < 0) {
        s = -s;
      }
    }
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
      if (seen[i]) {
        continue;
      }
      int len = 0;
      for (int k = i; !seen[k]; k = perm[k]) {
        seen[k] = true;
        ++len;
      }
      if (len % 2 == 0) {
        s = -s;
      }
    }
    return s;
  }

  std::vector<int> to_matrix(SignedPerm const& p) {
    auto const       n = p.size();
    std::vector<int> m(static_cast<std::size_t>(n) * n, 0);
    for (int j = 1; j <= n; ++j) {
      int y                          = p.apply(j);
      m[(std::abs(y) - 1) * n + j - 1] = y > 0 ? 1 : -1;
    }
    return m;
  }

  std::string to_string(SignedPerm const& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.images().size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      out += std::to_string(p.images()[i]);
    }
    return out + "]";
  }

  SignedPerm parse_signed_perm(std::string_view text) {
    auto l = text.find('[');
    auto r = text.rfind(']');
    if (l == std::string_view::npos || r == std::string_view::npos || r < l) {
      throw Error("signed permutation must look like [2,-1,3]");
    }
    std::vector<int> v;
    std::string      cur;
    for (auto c : text.substr(l + 1, r - l - 1)) {
      if (c == ',') {
        v.push_back(std::stoi(cur));
        cur.clear();
      } else if (c != ' ') {
        cur += c;
      }
    }
    if (!cur.empty()) {
      v.push_back(std::stoi(cur));
    }
    return SignedPerm(std::move(v));
  }

  std::vector<SignedPerm> rotation_group(int n) {
    std::set<SignedPerm>    seen{SignedPerm::identity(n)};
    std::vector<SignedPerm> queue{SignedPerm::identity(n)};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (int i = 1; i < n; ++i) {
        auto q = compose(theta_generator(i, n), queue[k]);
        if (seen.insert(q).second) {
          queue.push_back(q);
        }
      }
    }
    return {seen.begin(), seen.end()};
  }

  std::vector<Element> kernel(GroupCtx const& g) {
    std::vector<Element> out;
    for (auto e : g.elements()) {
      if (theta_word(name_word(g, e), g.rank()).is_identity()) {
        out.push_back(e);
      }
    }
    return out;
  }

  std::vector<SignedPerm> theta_table(GroupCtx const& g) {
    auto const&             t = g.table();
    std::vector<SignedPerm> out(t.size());
    out[0] = SignedPerm::identity(g.rank());
    for (CosetId c = 2; c <= t.size(); ++c) {
      auto s = t.schreier(c);
      auto x = theta_generator(s.letter.index, g.rank());
      out[c - 1] = compose(s.letter.exponent > 0 ? x : inverse(x), out[s.parent - 1]);
    }
    return out;
  }

}  // namespace braidq

#ifndef POIKM_PARTIAL_PERM_HPP_
#define POIKM_PARTIAL_PERM_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace poikm {

//! Points of the ambient set {1, ..., n}. 0 is reserved for "undefined".
using point_type = std::uint32_t;

inline constexpr point_type UNDEF = 0;

//! An injective partial self-map of {1, ..., n}.
//!
//! Composition is left to right throughout: x(ab) = (xa)b. Many libraries
//! compose the other way round; every formula in this project assumes
//! left-to-right action, so the convention is load-bearing.
//!
//! Values are immutable after construction and safe to share between
//! threads; all operations are pure.
class PartialPerm {
 public:
  //! Builds the map sending source to target for each pair, undefined
  //! elsewhere. Sources and targets must each be pairwise distinct and
  //! lie in {1, ..., degree}.
  static PartialPerm make(
      point_type degree,
      std::vector<std::pair<point_type, point_type>> const& pairs) {
    check_degree(degree);
    std::vector<point_type> img(degree, UNDEF);
    std::vector<bool> hit(degree + 1, false);
    for (auto const& [src, tgt] : pairs) {
      if (src < 1 || src > degree || tgt < 1 || tgt > degree) {
        throw range_error("make: point out of range [1, "
                          + std::to_string(degree) + "]");
      }
      if (img[src - 1] != UNDEF) {
        throw injectivity_error("make: duplicate source "
                                + std::to_string(src));
      }
      if (hit[tgt]) {
        throw injectivity_error("make: duplicate target "
                                + std::to_string(tgt));
      }
      img[src - 1] = tgt;
      hit[tgt] = true;
    }
    return PartialPerm(std::move(img));
  }

  //! The identity map on {1, ..., degree}.
  static PartialPerm identity(point_type degree) {
    check_degree(degree);
    std::vector<point_type> img(degree);
    for (point_type x = 1; x <= degree; ++x) {
      img[x - 1] = x;
    }
    return PartialPerm(std::move(img));
  }

  //! The nowhere-defined map of the given degree.
  static PartialPerm empty(point_type degree) {
    check_degree(degree);
    return PartialPerm(std::vector<point_type>(degree, UNDEF));
  }

  //! Builds a map from its image sequence (position x holds the image of
  //! x, or UNDEF). Validates range and injectivity.
  static PartialPerm from_images(std::vector<point_type> images) {
    check_degree(static_cast<point_type>(images.size()));
    auto const degree = static_cast<point_type>(images.size());
    std::vector<bool> hit(degree + 1, false);
    for (auto v : images) {
      if (v == UNDEF) {
        continue;
      }
      if (v > degree) {
        throw range_error("from_images: image out of range");
      }
      if (hit[v]) {
        throw injectivity_error("from_images: repeated image "
                                + std::to_string(v));
      }
      hit[v] = true;
    }
    return PartialPerm(std::move(images));
  }

  point_type degree() const noexcept {
    return static_cast<point_type>(images_.size());
  }

  //! Image of x (1-based), or UNDEF when x is not in the domain.
  point_type operator[](point_type x) const {
    if (x < 1 || x > degree()) {
      throw range_error("point " + std::to_string(x) + " out of range");
    }
    return images_[x - 1];
  }

  bool defined(point_type x) const { return (*this)[x] != UNDEF; }

  //! |Dom| = |Im|.
  std::size_t image_size() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(images_.begin(), images_.end(),
                      [](point_type v) { return v != UNDEF; }));
  }

  //! Domain as a sorted vector of points.
  std::vector<point_type> domain() const {
    std::vector<point_type> dom;
    for (point_type x = 1; x <= degree(); ++x) {
      if (images_[x - 1] != UNDEF) {
        dom.push_back(x);
      }
    }
    return dom;
  }

  //! Image as a sorted vector of points.
  std::vector<point_type> image() const {
    std::vector<point_type> im;
    for (auto v : images_) {
      if (v != UNDEF) {
        im.push_back(v);
      }
    }
    std::sort(im.begin(), im.end());
    return im;
  }

  //! The semigroup inverse: Dom(inv) = Im, (x alpha) inv = x.
  PartialPerm inverse() const {
    std::vector<point_type> img(degree(), UNDEF);
    for (point_type x = 1; x <= degree(); ++x) {
      if (images_[x - 1] != UNDEF) {
        img[images_[x - 1] - 1] = x;
      }
    }
    return PartialPerm(std::move(img));
  }

  bool is_identity() const {
    for (point_type x = 1; x <= degree(); ++x) {
      if (images_[x - 1] != x) {
        return false;
      }
    }
    return true;
  }

  bool is_empty() const { return image_size() == 0; }

  //! Full permutation, i.e. everywhere defined.
  bool is_permutation() const { return image_size() == degree(); }

  std::vector<point_type> const& images() const noexcept { return images_; }

  //! Maps of different degree are never equal. Within a degree the order
  //! is lexicographic on the image sequence, UNDEF below 1.
  friend bool operator==(PartialPerm const&, PartialPerm const&) = default;
  friend auto operator<=>(PartialPerm const& lhs, PartialPerm const& rhs) {
    if (auto c = lhs.degree() <=> rhs.degree(); c != 0) {
      return c;
    }
    return lhs.images_ <=> rhs.images_;
  }

  //! Text form: degree, ';', then "src>tgt" pairs sorted by source,
  //! e.g. "4;1>3,2>4". The empty map is "4;". Parsing also accepts
  //! "4;id" for the identity.
  std::string to_string() const {
    std::string out = std::to_string(degree());
    out += ';';
    bool first = true;
    for (point_type x = 1; x <= degree(); ++x) {
      if (images_[x - 1] == UNDEF) {
        continue;
      }
      if (!first) {
        out += ',';
      }
      first = false;
      out += std::to_string(x);
      out += '>';
      out += std::to_string(images_[x - 1]);
    }
    return out;
  }

  static PartialPerm parse(std::string_view text) {
    auto semi = text.find(';');
    if (semi == std::string_view::npos) {
      throw parse_error("partial permutation text must contain ';'");
    }
    point_type degree = parse_point(text.substr(0, semi));
    auto body = text.substr(semi + 1);
    if (body == "id") {
      return identity(degree);
    }
    std::vector<std::pair<point_type, point_type>> pairs;
    while (!body.empty()) {
      auto comma = body.find(',');
      auto item = body.substr(0, comma);
      auto gt = item.find('>');
      if (gt == std::string_view::npos) {
        throw parse_error("expected 'src>tgt' in partial permutation text");
      }
      pairs.emplace_back(parse_point(item.substr(0, gt)),
                         parse_point(item.substr(gt + 1)));
      body = (comma == std::string_view::npos) ? std::string_view{}
                                               : body.substr(comma + 1);
    }
    return make(degree, pairs);
  }

 private:
  explicit PartialPerm(std::vector<point_type> images)
      : images_(std::move(images)) {}

  static void check_degree(point_type degree) {
    if (degree < 1) {
      throw parameter_error("degree must be at least 1");
    }
  }

  static point_type parse_point(std::string_view token) {
    if (token.empty()) {
      throw parse_error("empty number in partial permutation text");
    }
    point_type value = 0;
    for (char c : token) {
      if (c < '0' || c > '9') {
        throw parse_error("bad number '" + std::string(token) + "'");
      }
      value = value * 10 + static_cast<point_type>(c - '0');
    }
    return value;
  }

  std::vector<point_type> images_;
};

//! x(ab) = (xa)b where defined; Dom(ab) = {x in Dom(a) : xa in Dom(b)}.
inline PartialPerm compose(PartialPerm const& a, PartialPerm const& b) {
  if (a.degree() != b.degree()) {
    throw degree_error("compose: degree mismatch");
  }
  std::vector<point_type> img(a.degree(), UNDEF);
  for (point_type x = 1; x <= a.degree(); ++x) {
    auto mid = a[x];
    if (mid != UNDEF) {
      img[x - 1] = b[mid];
    }
  }
  return PartialPerm::from_images(std::move(img));
}

//! n-fold composition power; power 0 is the identity.
inline PartialPerm pow(PartialPerm const& a, unsigned exponent) {
  auto result = PartialPerm::identity(a.degree());
  for (unsigned i = 0; i < exponent; ++i) {
    result = compose(result, a);
  }
  return result;
}

inline bool is_idempotent(PartialPerm const& a) {
  return compose(a, a) == a;
}

//! Order preserving with respect to the usual order on {1, ..., n}:
//! x <= y implies xa <= ya on the domain.
inline bool is_order_preserving(PartialPerm const& a) {
  point_type last = 0;
  for (point_type x = 1; x <= a.degree(); ++x) {
    auto v = a[x];
    if (v == UNDEF) {
      continue;
    }
    if (v <= last) {
      return false;
    }
    last = v;
  }
  return true;
}

struct PartialPermHash {
  std::size_t operator()(PartialPerm const& p) const noexcept {
    std::size_t h = p.degree();
    for (auto v : p.images()) {
      h = h * 1099511628211ULL + v + 1;
    }
    return h;
  }
};

inline std::ostream& operator<<(std::ostream& os, PartialPerm const& p) {
  return os << p.to_string();
}

}  // namespace poikm

#endif  // POIKM_PARTIAL_PERM_HPP_

#ifndef POIKM_BLOCK_MONOID_HPP_
#define POIKM_BLOCK_MONOID_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "partial_perm.hpp"

namespace poikm {

//! The uniform interval partition of {1, ..., km} into k consecutive
//! blocks I_1, ..., I_k of size m, with I_i = {(i-1)m + 1, ..., im}.
struct BlockSpec {
  point_type num_blocks;  // k
  point_type block_size;  // m

  BlockSpec(point_type k, point_type m) : num_blocks(k), block_size(m) {
    if (k < 1 || m < 1) {
      throw parameter_error("block spec needs k >= 1 and m >= 1");
    }
  }

  point_type degree() const { return num_blocks * block_size; }

  //! Index of the block containing x, i.e. ceil(x / m).
  point_type block_of(point_type x) const {
    if (x < 1 || x > degree()) {
      throw range_error("block_of: point " + std::to_string(x)
                        + " out of range");
    }
    return (x - 1) / block_size + 1;
  }

  point_type block_first(point_type i) const {
    return (i - 1) * block_size + 1;
  }
  point_type block_last(point_type i) const { return i * block_size; }

  //! Text form "k x m" without spaces, e.g. "3x2".
  static BlockSpec parse(std::string_view text) {
    auto pos = text.find('x');
    if (pos == std::string_view::npos || pos == 0 || pos + 1 == text.size()) {
      throw parse_error("block spec must look like '3x2'");
    }
    auto num = [](std::string_view t) -> point_type {
      point_type v = 0;
      for (char c : t) {
        if (c < '0' || c > '9') {
          throw parse_error("bad number in block spec");
        }
        v = v * 10 + static_cast<point_type>(c - '0');
      }
      return v;
    };
    return BlockSpec(num(text.substr(0, pos)), num(text.substr(pos + 1)));
  }

  std::string to_string() const {
    return std::to_string(num_blocks) + "x" + std::to_string(block_size);
  }

  friend bool operator==(BlockSpec const&, BlockSpec const&) = default;
};

namespace detail {
inline void check_degree(BlockSpec const& spec, PartialPerm const& a,
                         char const* who) {
  if (a.degree() != spec.degree()) {
    throw degree_error(std::string(who) + ": degree "
                       + std::to_string(a.degree()) + " does not match spec "
                       + spec.to_string());
  }
}
}  // namespace detail

//! Stability: for every x in Dom(a), the whole block of x lies in Dom(a)
//! and is mapped onto the block of xa.
inline bool is_p_stable(BlockSpec const& spec, PartialPerm const& a) {
  detail::check_degree(spec, a, "is_p_stable");
  for (point_type x = 1; x <= a.degree(); ++x) {
    if (a[x] == UNDEF) {
      continue;
    }
    auto i = spec.block_of(x);
    auto j = spec.block_of(a[x]);
    std::set<point_type> block_image;
    for (point_type y = spec.block_first(i); y <= spec.block_last(i); ++y) {
      if (a[y] == UNDEF) {
        return false;
      }
      block_image.insert(a[y]);
    }
    std::set<point_type> target;
    for (point_type y = spec.block_first(j); y <= spec.block_last(j); ++y) {
      target.insert(y);
    }
    if (block_image != target) {
      return false;
    }
  }
  return true;
}

//! The induced map on block indices is monotone over the domain.
inline bool is_p_order_preserving(BlockSpec const& spec,
                                  PartialPerm const& a) {
  detail::check_degree(spec, a, "is_p_order_preserving");
  for (point_type x = 1; x <= a.degree(); ++x) {
    if (a[x] == UNDEF) {
      continue;
    }
    for (point_type y = 1; y <= a.degree(); ++y) {
      if (a[y] == UNDEF) {
        continue;
      }
      if (spec.block_of(x) <= spec.block_of(y)
          && spec.block_of(a[x]) > spec.block_of(a[y])) {
        return false;
      }
    }
  }
  return true;
}

//! Membership in the monoid of stable, block-order-preserving partial
//! permutations. The empty map is a member of every spec: both defining
//! conditions quantify over the domain and hold vacuously.
inline bool is_member(BlockSpec const& spec, PartialPerm const& a) {
  return is_p_stable(spec, a) && is_p_order_preserving(spec, a);
}

//! Embeds an order-preserving partial permutation of block indices as a
//! partial permutation of points: block I_i maps onto I_{i theta}
//! monotonically. The result is a member and is order preserving on the
//! whole of {1, ..., n}.
inline PartialPerm psi_embed(BlockSpec const& spec, PartialPerm const& theta) {
  if (theta.degree() != spec.num_blocks) {
    throw degree_error("psi_embed: theta must have degree k = "
                       + std::to_string(spec.num_blocks));
  }
  if (!is_order_preserving(theta)) {
    throw parameter_error("psi_embed: theta must be order preserving");
  }
  std::vector<point_type> img(spec.degree(), UNDEF);
  for (point_type i = 1; i <= spec.num_blocks; ++i) {
    auto j = theta[i];
    if (j == UNDEF) {
      continue;
    }
    for (point_type r = 1; r <= spec.block_size; ++r) {
      img[spec.block_first(i) + r - 2] = spec.block_first(j) + r - 1;
    }
  }
  return PartialPerm::from_images(std::move(img));
}

//! Embeds a k-tuple of full permutations of {1, ..., m} as the unit
//! acting as z_i inside block I_i: x maps to (x - (i-1)m) z_i + (i-1)m.
inline PartialPerm bar_embed(BlockSpec const& spec,
                             std::vector<PartialPerm> const& z) {
  if (z.size() != spec.num_blocks) {
    throw parameter_error("bar_embed: expected one permutation per block");
  }
  for (auto const& zi : z) {
    if (zi.degree() != spec.block_size || !zi.is_permutation()) {
      throw parameter_error(
          "bar_embed: each component must be a full permutation of degree m");
    }
  }
  std::vector<point_type> img(spec.degree(), UNDEF);
  for (point_type i = 1; i <= spec.num_blocks; ++i) {
    auto offset = (i - 1) * spec.block_size;
    for (point_type r = 1; r <= spec.block_size; ++r) {
      img[offset + r - 1] = z[i - 1][r] + offset;
    }
  }
  return PartialPerm::from_images(std::move(img));
}

enum class FamilyLabel { X, A, B, C, D };

inline char family_letter(FamilyLabel label) {
  switch (label) {
    case FamilyLabel::X: return 'x';
    case FamilyLabel::A: return 'a';
    case FamilyLabel::B: return 'b';
    case FamilyLabel::C: return 'c';
    case FamilyLabel::D: return 'd';
  }
  return '?';
}

//! One of the named generator families. The X family is indexed
//! 0 .. k-1, the unit families A, B, C, D are indexed 1 .. k.
struct GeneratorFamily {
  BlockSpec spec;
  FamilyLabel label;
  std::vector<PartialPerm> members;

  std::string name(std::size_t position) const {
    auto index = position + (label == FamilyLabel::X ? 0 : 1);
    return std::string(1, family_letter(label)) + std::to_string(index);
  }
};

namespace detail {

//! Generator x_0 of the order-preserving monoid on block indices:
//! shifts 2, ..., k down to 1, ..., k-1.
inline PartialPerm poi_x0(point_type k) {
  std::vector<std::pair<point_type, point_type>> pairs;
  for (point_type i = 2; i <= k; ++i) {
    pairs.emplace_back(i, i - 1);
  }
  return PartialPerm::make(k, pairs);
}

//! Generator x_i (1 <= i <= k-1): moves k-i to k-i+1, fixes every other
//! point except k-i+1, which leaves the domain.
inline PartialPerm poi_xi(point_type k, point_type i) {
  std::vector<std::pair<point_type, point_type>> pairs;
  for (point_type p = 1; p <= k; ++p) {
    if (p == k - i + 1) {
      continue;
    }
    pairs.emplace_back(p, p == k - i ? k - i + 1 : p);
  }
  return PartialPerm::make(k, pairs);
}

inline PartialPerm transposition_12(point_type m) {
  auto img = PartialPerm::identity(m).images();
  img[0] = 2;
  img[1] = 1;
  return PartialPerm::from_images(std::move(img));
}

inline PartialPerm full_cycle(point_type m) {
  std::vector<point_type> img(m);
  for (point_type x = 1; x <= m; ++x) {
    img[x - 1] = (x % m) + 1;
  }
  return PartialPerm::from_images(std::move(img));
}

//! The unit acting as g inside block i and trivially elsewhere.
inline PartialPerm unit_at(BlockSpec const& spec, point_type i,
                           PartialPerm const& g) {
  std::vector<PartialPerm> z(spec.num_blocks,
                             PartialPerm::identity(spec.block_size));
  z[i - 1] = g;
  return bar_embed(spec, z);
}

}  // namespace detail

//! The family X of k image-deficient generators (image size m(k-1)).
inline GeneratorFamily x_generators(BlockSpec const& spec) {
  if (spec.num_blocks < 2) {
    throw parameter_error("x_generators needs k >= 2");
  }
  GeneratorFamily fam{spec, FamilyLabel::X, {}};
  fam.members.push_back(psi_embed(spec, detail::poi_x0(spec.num_blocks)));
  for (point_type i = 1; i < spec.num_blocks; ++i) {
    fam.members.push_back(psi_embed(spec, detail::poi_xi(spec.num_blocks, i)));
  }
  return fam;
}

struct AbcFamilies {
  GeneratorFamily a;
  GeneratorFamily b;
  GeneratorFamily c;
};

//! The unit families built from the transposition a = (1 2), the cycle
//! b = (1 2 ... m) and their product c = ab, placed block by block.
inline AbcFamilies abc_generators(BlockSpec const& spec) {
  if (spec.block_size < 2) {
    throw parameter_error("abc_generators needs m >= 2");
  }
  auto a = detail::transposition_12(spec.block_size);
  auto b = detail::full_cycle(spec.block_size);
  auto c = compose(a, b);
  AbcFamilies out{{spec, FamilyLabel::A, {}},
                  {spec, FamilyLabel::B, {}},
                  {spec, FamilyLabel::C, {}}};
  for (point_type i = 1; i <= spec.num_blocks; ++i) {
    out.a.members.push_back(detail::unit_at(spec, i, a));
    out.b.members.push_back(detail::unit_at(spec, i, b));
    out.c.members.push_back(detail::unit_at(spec, i, c));
  }
  return out;
}

//! The family D with d_i = b_i c_{i+1} (indices mod k), which generates
//! the unit group with only k elements. Powers recover the other unit
//! families: d_k^m = c_1, d_i^m = c_{i+1}, d_i^{(m-1)^2} = b_i.
inline GeneratorFamily d_generators(BlockSpec const& spec) {
  if (spec.num_blocks < 2 || spec.block_size < 2) {
    throw parameter_error("d_generators needs k >= 2 and m >= 2");
  }
  auto abc = abc_generators(spec);
  GeneratorFamily fam{spec, FamilyLabel::D, {}};
  for (point_type i = 1; i <= spec.num_blocks; ++i) {
    auto next = (i == spec.num_blocks) ? 1 : i + 1;
    fam.members.push_back(
        compose(abc.b.members[i - 1], abc.c.members[next - 1]));
  }
  return fam;
}

//! The member written as (block map) followed by (unit): theta records
//! which block goes where, and the unit gamma carries the within-block
//! action, fixing everything outside the image of the embedded theta.
struct Decomposition {
  PartialPerm theta;  // partial permutation of block indices, degree k
  PartialPerm unit;   // gamma, a full block-preserving permutation
};

inline Decomposition decompose(BlockSpec const& spec, PartialPerm const& a) {
  detail::check_degree(spec, a, "decompose");
  if (!is_member(spec, a)) {
    throw parameter_error("decompose: not a member of " + spec.to_string());
  }
  std::vector<point_type> theta_img(spec.num_blocks, UNDEF);
  auto gamma_img = PartialPerm::identity(spec.degree()).images();
  for (point_type i = 1; i <= spec.num_blocks; ++i) {
    auto first = spec.block_first(i);
    if (a[first] == UNDEF) {
      continue;
    }
    auto j = spec.block_of(a[first]);
    theta_img[i - 1] = j;
    // x gamma = (x + (i - j)m) a for x in the image block I_j
    auto shift = static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j);
    for (point_type x = spec.block_first(j); x <= spec.block_last(j); ++x) {
      auto pre = static_cast<point_type>(
          static_cast<std::int64_t>(x) + shift * spec.block_size);
      gamma_img[x - 1] = a[pre];
    }
  }
  return Decomposition{PartialPerm::from_images(std::move(theta_img)),
                       PartialPerm::from_images(std::move(gamma_img))};
}

//! An ordered partition of {1, ..., n} into nonempty classes; used to
//! carry arbitrary-partition monoids over to interval form.
struct OrderedPartition {
  explicit OrderedPartition(std::vector<std::vector<point_type>> classes)
      : classes_(std::move(classes)) {
    std::size_t total = 0;
    for (auto const& cls : classes_) {
      if (cls.empty()) {
        throw parameter_error("ordered partition: empty class");
      }
      total += cls.size();
    }
    degree_ = static_cast<point_type>(total);
    index_of_.assign(degree_ + 1, 0);
    for (std::size_t i = 0; i < classes_.size(); ++i) {
      for (auto x : classes_[i]) {
        if (x < 1 || x > degree_ || index_of_[x] != 0) {
          throw parameter_error(
              "ordered partition: classes must partition {1, ..., n}");
        }
        index_of_[x] = static_cast<point_type>(i + 1);
      }
    }
  }

  point_type degree() const { return degree_; }
  std::size_t size() const { return classes_.size(); }
  std::vector<point_type> const& class_at(std::size_t i) const {
    return classes_[i];
  }
  point_type class_of(point_type x) const {
    if (x < 1 || x > degree_) {
      throw range_error("class_of: point out of range");
    }
    return index_of_[x];
  }
  std::vector<point_type> class_sizes() const {
    std::vector<point_type> sizes;
    for (auto const& cls : classes_) {
      sizes.push_back(static_cast<point_type>(cls.size()));
    }
    return sizes;
  }

 private:
  std::vector<std::vector<point_type>> classes_;
  std::vector<point_type> index_of_;
  point_type degree_;
};

inline bool is_p_stable(OrderedPartition const& p, PartialPerm const& a) {
  if (a.degree() != p.degree()) {
    throw degree_error("is_p_stable: degree mismatch");
  }
  for (point_type x = 1; x <= a.degree(); ++x) {
    if (a[x] == UNDEF) {
      continue;
    }
    auto const& cls = p.class_at(p.class_of(x) - 1);
    std::set<point_type> cls_image;
    for (auto y : cls) {
      if (a[y] == UNDEF) {
        return false;
      }
      cls_image.insert(a[y]);
    }
    auto const& target = p.class_at(p.class_of(a[x]) - 1);
    if (cls_image != std::set<point_type>(target.begin(), target.end())) {
      return false;
    }
  }
  return true;
}

inline bool is_p_order_preserving(OrderedPartition const& p,
                                  PartialPerm const& a) {
  if (a.degree() != p.degree()) {
    throw degree_error("is_p_order_preserving: degree mismatch");
  }
  for (point_type x = 1; x <= a.degree(); ++x) {
    if (a[x] == UNDEF) {
      continue;
    }
    for (point_type y = 1; y <= a.degree(); ++y) {
      if (a[y] == UNDEF) {
        continue;
      }
      if (p.class_of(x) <= p.class_of(y)
          && p.class_of(a[x]) > p.class_of(a[y])) {
        return false;
      }
    }
  }
  return true;
}

inline bool is_member(OrderedPartition const& p, PartialPerm const& a) {
  return is_p_stable(p, a) && is_p_order_preserving(p, a);
}

//! The canonical bijection used to rebase: monotone on each class,
//! carrying the i-th class onto the i-th interval of the class sizes.
inline PartialPerm canonical_rebase_map(OrderedPartition const& p) {
  std::vector<point_type> img(p.degree(), UNDEF);
  point_type next = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto cls = p.class_at(i);
    std::sort(cls.begin(), cls.end());
    for (auto x : cls) {
      img[x - 1] = next++;
    }
  }
  return PartialPerm::from_images(std::move(img));
}

//! Conjugation alpha -> sigma^{-1} alpha sigma. When sigma carries the
//! classes of a source partition onto the intervals of the class sizes,
//! this is the isomorphism onto the interval-partition monoid.
inline PartialPerm rebase(std::vector<point_type> const& class_sizes,
                          PartialPerm const& sigma, PartialPerm const& alpha) {
  auto n = sigma.degree();
  if (!sigma.is_permutation()) {
    throw parameter_error("rebase: sigma must be a full permutation");
  }
  if (alpha.degree() != n) {
    throw degree_error("rebase: alpha degree mismatch");
  }
  std::size_t total = 0;
  for (auto c : class_sizes) {
    if (c < 1) {
      throw parameter_error("rebase: class sizes must be positive");
    }
    total += c;
  }
  if (total != n) {
    throw parameter_error("rebase: class sizes must sum to the degree");
  }
  return compose(compose(sigma.inverse(), alpha), sigma);
}

}  // namespace poikm

#endif  // POIKM_BLOCK_MONOID_HPP_

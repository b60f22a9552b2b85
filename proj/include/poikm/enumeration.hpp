#ifndef POIKM_ENUMERATION_HPP_
#define POIKM_ENUMERATION_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "block_monoid.hpp"
#include "errors.hpp"
#include "partial_perm.hpp"

namespace poikm {

//! Counts here outgrow 64 bits quickly ((m!)^k already does), so all
//! closed-form counting is exact big-integer arithmetic.
using BigCount = boost::multiprecision::cpp_int;

inline BigCount big_factorial(unsigned n) {
  BigCount f = 1;
  for (unsigned i = 2; i <= n; ++i) {
    f *= i;
  }
  return f;
}

inline BigCount big_binomial(unsigned n, unsigned r) {
  if (r > n) {
    return 0;
  }
  BigCount b = 1;
  for (unsigned i = 1; i <= r; ++i) {
    b = b * (n - r + i) / i;
  }
  return b;
}

//! Number of elements of image size tm: C(k,t)^2 (m!)^t.
inline BigCount j_class_size(unsigned k, unsigned m, unsigned t) {
  if (k < 1 || m < 1) {
    throw parameter_error("j_class_size needs k, m >= 1");
  }
  if (t > k) {
    throw range_error("j_class_size: t must lie in 0 .. k");
  }
  auto b = big_binomial(k, t);
  return b * b * boost::multiprecision::pow(big_factorial(m), t);
}

//! Order of the whole monoid: the sum of the class sizes over t = 0 .. k.
inline BigCount size_formula(unsigned k, unsigned m) {
  if (k < 1 || m < 1) {
    throw parameter_error("size_formula needs k, m >= 1");
  }
  BigCount total = 0;
  for (unsigned t = 0; t <= k; ++t) {
    total += j_class_size(k, m, t);
  }
  return total;
}

//! A finite monoid of partial permutations, closed under right
//! multiplication by its generators.
//!
//! Elements are listed in breadth-first order: by length of their
//! shortest generator word, ties broken lexicographically by generator
//! index. elements[0] is always the identity (word of length 0).
//! Immutable after construction.
struct MonoidTable {
  point_type degree;
  std::vector<PartialPerm> generators;
  std::vector<PartialPerm> elements;
  std::vector<std::vector<std::uint32_t>> words;  // shortest word per element
  std::vector<std::vector<std::uint32_t>> right;  // right[e][g] = index of e*g

  std::size_t size() const { return elements.size(); }

  std::optional<std::uint32_t> index_of(PartialPerm const& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  void rebuild_index() {
    index_.clear();
    for (std::uint32_t i = 0; i < elements.size(); ++i) {
      index_.emplace(elements[i], i);
    }
  }

 private:
  std::unordered_map<PartialPerm, std::uint32_t, PartialPermHash> index_;
};

//! Deterministic closure of the submonoid generated by the given maps.
//! Throws overflow_error once more than safety_bound elements appear.
inline MonoidTable enumerate(point_type degree,
                             std::vector<PartialPerm> generators,
                             std::size_t safety_bound = 10'000'000) {
  for (auto const& g : generators) {
    if (g.degree() != degree) {
      throw degree_error("enumerate: generator degree mismatch");
    }
  }
  MonoidTable table;
  table.degree = degree;
  table.generators = std::move(generators);

  std::unordered_map<PartialPerm, std::uint32_t, PartialPermHash> seen;
  table.elements.push_back(PartialPerm::identity(degree));
  table.words.emplace_back();
  seen.emplace(table.elements[0], 0);

  for (std::uint32_t e = 0; e < table.elements.size(); ++e) {
    table.right.emplace_back(table.generators.size());
    for (std::uint32_t g = 0; g < table.generators.size(); ++g) {
      auto product = compose(table.elements[e], table.generators[g]);
      auto [it, inserted] = seen.emplace(
          product, static_cast<std::uint32_t>(table.elements.size()));
      if (inserted) {
        if (table.elements.size() >= safety_bound) {
          throw overflow_error("enumerate: closure exceeded safety bound of "
                               + std::to_string(safety_bound));
        }
        table.elements.push_back(std::move(product));
        auto word = table.words[e];
        word.push_back(g);
        table.words.push_back(std::move(word));
      }
      table.right[e][g] = it->second;
    }
  }
  table.rebuild_index();
  return table;
}

//! Every injective partial self-map of {1, ..., n}, in canonical order.
//! This is the raw search space for definition-filter oracles; it grows
//! fast, so keep n small (n = 6 gives 13327 maps).
inline std::vector<PartialPerm> all_partial_perms(point_type degree) {
  std::vector<PartialPerm> out;
  std::vector<point_type> img(degree, UNDEF);
  std::vector<bool> used(degree + 1, false);
  auto rec = [&](auto&& self, point_type pos) -> void {
    if (pos > degree) {
      out.push_back(PartialPerm::from_images(img));
      return;
    }
    img[pos - 1] = UNDEF;
    self(self, pos + 1);
    for (point_type v = 1; v <= degree; ++v) {
      if (!used[v]) {
        used[v] = true;
        img[pos - 1] = v;
        self(self, pos + 1);
        img[pos - 1] = UNDEF;
        used[v] = false;
      }
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

//! All members of the block monoid, obtained by filtering the full
//! degree-n search space through the membership definition. Independent
//! of generator closure; the two routes must agree.
inline std::vector<PartialPerm> members_by_filter(BlockSpec const& spec) {
  std::vector<PartialPerm> out;
  for (auto const& p : all_partial_perms(spec.degree())) {
    if (is_member(spec, p)) {
      out.push_back(p);
    }
  }
  return out;
}

namespace detail {
inline std::string word_token(std::vector<std::uint32_t> const& word) {
  if (word.empty()) {
    return "1";
  }
  std::string out;
  for (auto g : word) {
    out += 'g';
    out += std::to_string(g);
  }
  return out;
}

inline std::vector<std::uint32_t> parse_word_token(std::string const& token) {
  if (token == "1") {
    return {};
  }
  std::vector<std::uint32_t> word;
  std::size_t pos = 0;
  while (pos < token.size()) {
    if (token[pos] != 'g') {
      throw parse_error("bad word token '" + token + "'");
    }
    ++pos;
    std::uint32_t v = 0;
    bool any = false;
    while (pos < token.size() && token[pos] >= '0' && token[pos] <= '9') {
      v = v * 10 + static_cast<std::uint32_t>(token[pos] - '0');
      ++pos;
      any = true;
    }
    if (!any) {
      throw parse_error("bad word token '" + token + "'");
    }
    word.push_back(v);
  }
  return word;
}
}  // namespace detail

//! Table export: a header line, one line per element (index, shortest
//! word, text form), then the right multiplication table row by row.
inline void write_table(std::ostream& os, MonoidTable const& table) {
  os << "degree=" << table.degree << " size=" << table.size()
     << " gens=" << table.generators.size() << "\n";
  for (std::size_t e = 0; e < table.size(); ++e) {
    os << e << " " << detail::word_token(table.words[e]) << " "
       << table.elements[e] << "\n";
  }
  for (std::size_t e = 0; e < table.size(); ++e) {
    for (std::size_t g = 0; g < table.generators.size(); ++g) {
      if (g > 0) {
        os << " ";
      }
      os << table.right[e][g];
    }
    os << "\n";
  }
}

inline MonoidTable read_table(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) {
    throw parse_error("table: missing header");
  }
  point_type degree = 0;
  std::size_t size = 0, gens = 0;
  {
    std::istringstream hs(line);
    std::string field;
    while (hs >> field) {
      auto eq = field.find('=');
      if (eq == std::string::npos) {
        throw parse_error("table: bad header field '" + field + "'");
      }
      auto key = field.substr(0, eq);
      auto value = std::stoull(field.substr(eq + 1));
      if (key == "degree") {
        degree = static_cast<point_type>(value);
      } else if (key == "size") {
        size = value;
      } else if (key == "gens") {
        gens = value;
      } else {
        throw parse_error("table: unknown header key '" + key + "'");
      }
    }
  }
  MonoidTable table;
  table.degree = degree;
  for (std::size_t e = 0; e < size; ++e) {
    if (!std::getline(is, line)) {
      throw parse_error("table: truncated element list");
    }
    std::istringstream ls(line);
    std::size_t index;
    std::string word_token, pperm_text;
    if (!(ls >> index >> word_token >> pperm_text) || index != e) {
      throw parse_error("table: bad element line '" + line + "'");
    }
    table.words.push_back(detail::parse_word_token(word_token));
    table.elements.push_back(PartialPerm::parse(pperm_text));
  }
  for (std::size_t e = 0; e < size; ++e) {
    if (!std::getline(is, line)) {
      throw parse_error("table: truncated multiplication table");
    }
    std::istringstream ls(line);
    std::vector<std::uint32_t> row;
    std::uint32_t v;
    while (ls >> v) {
      if (v >= size) {
        throw parse_error("table: index out of range");
      }
      row.push_back(v);
    }
    if (row.size() != gens) {
      throw parse_error("table: wrong row width");
    }
    table.right.push_back(std::move(row));
  }
  // generators are the images of the length-1 words
  for (std::size_t g = 0; g < gens; ++g) {
    table.generators.push_back(table.elements[table.right[0][g]]);
  }
  table.rebuild_index();
  return table;
}

}  // namespace poikm

#endif  // POIKM_ENUMERATION_HPP_

#ifndef POIKM_PRESENTATIONS_HPP_
#define POIKM_PRESENTATIONS_HPP_

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "block_monoid.hpp"
#include "errors.hpp"
#include "partial_perm.hpp"

namespace poikm {

//! Letters are plain names ("a1", "x0", or anything for ad-hoc
//! presentations); the empty word is the identity of the free monoid.
using Letter = std::string;
using Word = std::vector<Letter>;

inline std::string word_to_string(Word const& w) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += w[i];
  }
  return out;
}

struct Relation {
  Word lhs;
  Word rhs;
  std::string tag;  // sub-family identifier, e.g. "R1", "W3", "V'5"
};

struct Presentation {
  std::vector<Letter> alphabet;
  std::vector<Relation> relations;

  std::optional<std::size_t> letter_index(std::string_view name) const {
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      if (alphabet[i] == name) {
        return i;
      }
    }
    return std::nullopt;
  }

  //! Every letter occurring in a relation must be in the alphabet.
  void validate() const {
    for (auto const& rel : relations) {
      for (auto const* side : {&rel.lhs, &rel.rhs}) {
        for (auto const& letter : *side) {
          if (!letter_index(letter)) {
            throw parameter_error("presentation: letter '" + letter
                                  + "' not in alphabet");
          }
        }
      }
    }
  }
};

//! Letter-to-element assignment inducing the homomorphism from the free
//! monoid; total on the presentation's alphabet, one common degree.
struct InterpretationMap {
  point_type degree;
  std::map<Letter, PartialPerm> images;

  void assign(Letter const& letter, PartialPerm const& value) {
    if (value.degree() != degree) {
      throw degree_error("interpretation: degree mismatch for '" + letter
                         + "'");
    }
    images.insert_or_assign(letter, value);
  }

  PartialPerm const& at(Letter const& letter) const {
    auto it = images.find(letter);
    if (it == images.end()) {
      throw parameter_error("interpretation: no image for letter '" + letter
                            + "'");
    }
    return it->second;
  }
};

//! Left-to-right evaluation; the empty word goes to the identity.
inline PartialPerm interpret(Word const& word, InterpretationMap const& phi) {
  auto value = PartialPerm::identity(phi.degree);
  for (auto const& letter : word) {
    value = compose(value, phi.at(letter));
  }
  return value;
}

struct RelationCheckFailure {
  std::size_t index;
  std::string tag;
  Word lhs;
  Word rhs;
  PartialPerm lhs_value;
  PartialPerm rhs_value;
};

struct RelationCheckReport {
  std::size_t checked = 0;
  std::vector<RelationCheckFailure> failures;
  bool pass() const { return failures.empty(); }
};

//! Evaluates both sides of every relation and records the mismatches.
//! Failures are data, not errors.
inline RelationCheckReport check_relations(Presentation const& p,
                                           InterpretationMap const& phi) {
  RelationCheckReport report;
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    auto const& rel = p.relations[i];
    auto lhs = interpret(rel.lhs, phi);
    auto rhs = interpret(rel.rhs, phi);
    ++report.checked;
    if (lhs != rhs) {
      report.failures.push_back({i, rel.tag, rel.lhs, rel.rhs, lhs, rhs});
    }
  }
  return report;
}

namespace detail {

inline Word repeat(Word const& w, unsigned times) {
  Word out;
  for (unsigned i = 0; i < times; ++i) {
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

inline Word cat(std::initializer_list<Word> parts) {
  Word out;
  for (auto const& part : parts) {
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

inline Word lpow(Letter const& l, unsigned e) {
  return Word(e, l);
}

inline Letter a(unsigned i) { return "a" + std::to_string(i); }
inline Letter b(unsigned i) { return "b" + std::to_string(i); }
inline Letter c(unsigned i) { return "c" + std::to_string(i); }
inline Letter d(unsigned i) { return "d" + std::to_string(i); }
inline Letter x(unsigned i) { return "x" + std::to_string(i); }

//! c_i b_i^{m-1}, the two-letter stand-in for a_i in the B/C alphabet.
inline Word cb(unsigned i, unsigned m) {
  return cat({{c(i)}, lpow(b(i), m - 1)});
}

//! d_j^m d_{j+1}^{m-1} (indices mod k), the D-alphabet stand-in for the
//! transposition in block j+1 when j < k, and in block 1 when j = k.
inline Word dm(unsigned j, unsigned next, unsigned m) {
  return cat({lpow(d(j), m), lpow(d(next), m - 1)});
}

}  // namespace detail

enum class SmVariant { ab, bc };

//! A two-generator presentation of the symmetric group of degree m, as a
//! monoid: m + 1 relations when m >= 3 (the j-indexed family is empty at
//! m = 2, where the literal list has one extra relation).
inline Presentation sm_presentation(unsigned m, SmVariant variant) {
  if (m < 2) {
    throw parameter_error("sm_presentation needs m >= 2");
  }
  using namespace detail;
  Presentation p;
  if (variant == SmVariant::ab) {
    p.alphabet = {"a", "b"};
    p.relations.push_back({repeat({{"a"}}, 2), {}, "S1"});
    p.relations.push_back({lpow("b", m), {}, "S2"});
    p.relations.push_back({repeat({"b", "a"}, m - 1), {}, "S3"});
    p.relations.push_back(
        {repeat(cat({{"a"}, lpow("b", m - 1), {"a", "b"}}), 3), {}, "S4"});
    for (unsigned j = 2; j + 2 <= m; ++j) {
      p.relations.push_back(
          {repeat(cat({{"a"}, lpow("b", m - j), {"a"}, lpow("b", j)}), 2),
           {},
           "S5"});
    }
  } else {
    p.alphabet = {"b", "c"};
    p.relations.push_back({repeat(cat({{"c"}, lpow("b", m - 1)}), 2), {}, "S1"});
    p.relations.push_back({lpow("b", m), {}, "S2"});
    p.relations.push_back(
        {repeat(cat({{"b", "c"}, lpow("b", m - 1)}), m - 1), {}, "S3"});
    p.relations.push_back(
        {repeat(cat({{"c"}, lpow("b", m - 2), {"c"}}), 3), {}, "S4"});
    for (unsigned j = 2; j + 2 <= m; ++j) {
      p.relations.push_back(
          {repeat(cat({{"c"}, lpow("b", m - j - 1), {"c"}, lpow("b", j - 1)}),
                  2),
           {},
           "S5"});
    }
  }
  return p;
}

//! Joins two presentations with all cross-commutation relations, which
//! presents the direct product of the monoids they define. Colliding
//! letters of the second presentation are primed until free.
inline Presentation product_presentation(Presentation const& p1,
                                         Presentation const& p2) {
  Presentation out = p1;
  std::map<Letter, Letter> rename;
  for (auto const& letter : p2.alphabet) {
    auto name = letter;
    while (out.letter_index(name)) {
      name += '\'';
    }
    rename[letter] = name;
    out.alphabet.push_back(name);
  }
  auto renamed = [&rename](Word const& w) {
    Word r;
    for (auto const& l : w) {
      r.push_back(rename.at(l));
    }
    return r;
  };
  for (auto const& rel : p2.relations) {
    out.relations.push_back({renamed(rel.lhs), renamed(rel.rhs), rel.tag});
  }
  for (auto const& la : p1.alphabet) {
    for (auto const& lb : p2.alphabet) {
      out.relations.push_back(
          {{la, rename.at(lb)}, {rename.at(lb), la}, "comm"});
    }
  }
  return out;
}

enum class RelationFamily { R, W, Rp, U, Up, V, Vp };

//! The literal relation list of the named family, exactly as displayed:
//! sub-family by sub-family, ascending indices. The closed-form counts
//! (|R| = |U| = 2k^2 + (m-1)k, |V| = 2k^2 + (m-2)k, |W| =
//! (k^2 + 5k - 4)/2, primed families 2k^2 + 2k) hold for m >= 3; at
//! m = 2 the R/U/V lists carry k more relations than the closed form,
//! because the (m-3)k-sized sub-family is empty rather than negative.
inline std::vector<Relation> build_family(unsigned k, unsigned m,
                                          RelationFamily family) {
  using namespace detail;
  if (k < 2 || (family != RelationFamily::W && m < 2)) {
    throw parameter_error("build_family needs k >= 2 and m >= 2");
  }
  std::vector<Relation> rels;
  auto const q = (m - 1) * (m - 1);

  switch (family) {
    case RelationFamily::R:
      for (unsigned i = 1; i <= k; ++i) {
        rels.push_back({lpow(a(i), 2), {}, "R1"});
      }
      for (unsigned i = 1; i <= k; ++i) {
        rels.push_back({lpow(b(i), m), {}, "R2"});
      }
      for (unsigned i = 1; i <= k; ++i) {
        rels.push_back({repeat({b(i), a(i)}, m - 1), {}, "R3"});
      }
      for (unsigned i = 1; i <= k; ++i) {
        rels.push_back(
            {repeat(cat({{a(i)}, lpow(b(i), m - 1), {a(i), b(i)}}), 3),
             {},
             "R4"});
      }
      for (unsigned j = 2; j + 2 <= m; ++j) {
        for (unsigned i = 1; i <= k; ++i) {
          rels.push_back(
              {repeat(cat({{a(i)}, lpow(b(i), m - j), {a(i)},
                           lpow(b(i), j)}),
                      2),
               {},
               "R5"});
        }
      }
      for (unsigned i = 1; i <= k; ++i) {
        for (unsigned j = i + 1; j <= k; ++j) {
          rels.push_back({{a(i), a(j)}, {a(j), a(i)}, "R6"});
          rels.push_back({{b(i), b(j)}, {b(j), b(i)}, "R6"});
        }
      }
      for (unsigned i = 1; i <= k; ++i) {
        for (unsigned j = 1; j <= k; ++j) {
          if (i != j) {
            rels.push_back({{a(i), b(j)}, {b(j), a(i)}, "R6"});
          }
        }
      }
      break;

    case RelationFamily::U:
      for (unsigned i = 1; i <= k; ++i) {
        rels.push_back({repeat(cb(i, m), 2), {}, "U1"});
      }
      for (unsigned i = 1; i <= k; ++i) {
        rels.push_back({lpow(b(i), m), {}, "U2"});
      }
      for (unsigned i = 1; i <= k; ++i) {
        rels.push_back(
            {repeat(cat({{b(i), c(i)}, lpow(b(i), m - 1)}), m - 1),
             {},
             "U3"});
      }
      for (unsigned i = 1; i <= k; ++i) {
        rels.push_back(
            {repeat(cat({{c(i)}, lpow(b(i), m - 2), {c(i)}}), 3), {}, "U4"});
      }
      for (unsigned j = 2; j + 2 <= m; ++j) {
        for (unsigned i = 1; i <= k; ++i) {
          rels.push_back(
              {repeat(cat({{c(i)}, lpow(b(i), m - j - 1), {c(i)},
                           lpow(b(i), j - 1)}),
                      2),
               {},
               "U5"});
        }
      }
      for (unsigned i = 1; i <= k; ++i) {
        for (unsigned j = i + 1; j <= k; ++j) {
          rels.push_back({{b(i), b(j)}, {b(j), b(i)}, "U6"});
          rels.push_back({{c(i), c(j)}, {c(j), c(i)}, "U6"});
        }
      }
      for (unsigned i = 1; i <= k; ++i) {
        for (unsigned j = 1; j <= k; ++j) {
          if (i != j) {
            rels.push_back({{b(i), c(j)}, {c(j), b(i)}, "U6"});
          }
        }
      }
      break;

    case RelationFamily::V:
      rels.push_back({repeat(dm(k, 1, m), 2), {}, "V1"});
      for (unsigned i = 1; i + 1 <= k; ++i) {
        rels.push_back({repeat(dm(i, i + 1, m), 2), {}, "V1"});
      }
      for (unsigned i = 1; i <= k; ++i) {
        rels.push_back({lpow(d(i), m * (m - 1)), {}, "V2"});
      }
      rels.push_back(
          {repeat(cat({lpow(d(1), q), dm(k, 1, m)}), m - 1), {}, "V3"});
      for (unsigned i = 1; i + 1 <= k; ++i) {
        rels.push_back(
            {repeat(cat({lpow(d(i + 1), q), dm(i, i + 1, m)}), m - 1),
             {},
             "V3"});
      }
      rels.push_back(
          {repeat(cat({lpow(d(k), m), lpow(d(1), q * (m - 2)),
                       lpow(d(k), m)}),
                  3),
           {},
           "V4"});
      for (unsigned i = 1; i + 1 <= k; ++i) {
        rels.push_back(
            {repeat(cat({lpow(d(i), m), lpow(d(i + 1), q * (m - 2)),
                         lpow(d(i), m)}),
                    3),
             {},
             "V4"});
      }
      for (unsigned j = 2; j + 2 <= m; ++j) {
        rels.push_back(
            {repeat(cat({lpow(d(k), m), lpow(d(1), q * (m - j - 1)),
                         lpow(d(k), m), lpow(d(1), q * (j - 1))}),
                    2),
             {},
             "V5"});
      }
      for (unsigned j = 2; j + 2 <= m; ++j) {
        for (unsigned i = 1; i + 1 <= k; ++i) {
          rels.push_back(
              {repeat(cat({lpow(d(i), m), lpow(d(i + 1), q * (m - j - 1)),
                           lpow(d(i), m), lpow(d(i + 1), q * (j - 1))}),
                      2),
               {},
               "V5"});
        }
      }
      for (unsigned i = 1; i <= k; ++i) {
        for (unsigned j = i + 1; j <= k; ++j) {
          rels.push_back({cat({lpow(d(i), m), lpow(d(j), m)}),
                          cat({lpow(d(j), m), lpow(d(i), m)}),
                          "V6"});
          rels.push_back({cat({lpow(d(i), q), lpow(d(j), q)}),
                          cat({lpow(d(j), q), lpow(d(i), q)}),
                          "V6"});
        }
      }
      for (unsigned i = 2; i + 1 <= k; ++i) {
        rels.push_back({cat({lpow(d(i), q), lpow(d(k), m)}),
                        cat({lpow(d(k), m), lpow(d(i), q)}),
                        "V6"});
      }
      for (unsigned i = 1; i <= k; ++i) {
        for (unsigned j = 1; j + 1 <= k; ++j) {
          if (i != j && i != j + 1) {
            rels.push_back({cat({lpow(d(i), q), lpow(d(j), m)}),
                            cat({lpow(d(j), m), lpow(d(i), q)}),
                            "V6"});
          }
        }
      }
      break;

    case RelationFamily::W:
      for (unsigned i = 1; i + 2 <= k; ++i) {
        rels.push_back({{x(i), x(0)}, {x(0), x(i + 1)}, "W1"});
      }
      for (unsigned i = 1; i + 1 < k; ++i) {
        for (unsigned j = i + 2; j + 1 <= k; ++j) {
          rels.push_back({{x(j), x(i)}, {x(i), x(j)}, "W2"});
        }
      }
      rels.push_back({{x(0), x(0), x(1)}, {x(0), x(0)}, "W3"});
      rels.push_back({{x(k - 1), x(0), x(0)}, {x(0), x(0)}, "W3"});
      for (unsigned i = 1; i + 2 <= k; ++i) {
        rels.push_back(
            {{x(i + 1), x(i), x(i + 1)}, {x(i + 1), x(i)}, "W4"});
        rels.push_back({{x(i), x(i + 1), x(i)}, {x(i + 1), x(i)}, "W4"});
      }
      for (unsigned i = 0; i + 1 <= k; ++i) {
        Word w;
        for (unsigned j = i; j + 1 <= k; ++j) {
          w.push_back(x(j));
        }
        for (unsigned j = 0; j < i; ++j) {
          w.push_back(x(j));
        }
        w.push_back(x(i));
        rels.push_back({w, {x(i)}, "W5"});
      }
      for (unsigned i = 1; i + 1 <= k; ++i) {
        Word w;
        for (unsigned j = i + 1; j + 1 <= k; ++j) {
          w.push_back(x(j));
        }
        for (unsigned j = 0; j < i; ++j) {
          w.push_back(x(j));
        }
        w.push_back(x(i));
        w.push_back(x(i));
        rels.push_back({w, {x(i), x(i)}, "W6"});
      }
      break;

    case RelationFamily::Rp:
      rels.push_back({{a(1), x(0)}, {x(0)}, "R'1"});
      rels.push_back({{b(1), x(0)}, {x(0)}, "R'1"});
      for (unsigned i = 1; i + 1 <= k; ++i) {
        rels.push_back({{x(0), a(i)}, {a(i + 1), x(0)}, "R'2"});
        rels.push_back({{x(0), b(i)}, {b(i + 1), x(0)}, "R'2"});
      }
      for (unsigned i = 0; i + 1 <= k; ++i) {
        rels.push_back({{x(i), a(k - i)}, {x(i)}, "R'3"});
        rels.push_back({{x(i), b(k - i)}, {x(i)}, "R'3"});
      }
      for (unsigned i = 2; i <= k; ++i) {
        rels.push_back({{a(i), x(k - i + 1)}, {x(k - i + 1)}, "R'4"});
        rels.push_back({{b(i), x(k - i + 1)}, {x(k - i + 1)}, "R'4"});
      }
      for (unsigned i = 1; i + 1 <= k; ++i) {
        rels.push_back({{x(i), a(k - i + 1)}, {a(k - i), x(i)}, "R'5"});
        rels.push_back({{x(i), b(k - i + 1)}, {b(k - i), x(i)}, "R'5"});
      }
      for (unsigned i = 1; i + 1 <= k; ++i) {
        for (unsigned j = 1; j <= k; ++j) {
          if (j != k - i && j != k - i + 1) {
            rels.push_back({{x(i), a(j)}, {a(j), x(i)}, "R'6"});
            rels.push_back({{x(i), b(j)}, {b(j), x(i)}, "R'6"});
          }
        }
      }
      break;

    case RelationFamily::Up:
      rels.push_back({cat({cb(1, m), {x(0)}}), {x(0)}, "U'1"});
      rels.push_back({{b(1), x(0)}, {x(0)}, "U'1"});
      for (unsigned i = 1; i + 1 <= k; ++i) {
        rels.push_back({cat({{x(0)}, cb(i, m)}),
                        cat({cb(i + 1, m), {x(0)}}),
                        "U'2"});
        rels.push_back({{x(0), b(i)}, {b(i + 1), x(0)}, "U'2"});
      }
      for (unsigned i = 0; i + 1 <= k; ++i) {
        rels.push_back({cat({{x(i)}, cb(k - i, m)}), {x(i)}, "U'3"});
        rels.push_back({{x(i), b(k - i)}, {x(i)}, "U'3"});
      }
      for (unsigned i = 2; i <= k; ++i) {
        rels.push_back(
            {cat({cb(i, m), {x(k - i + 1)}}), {x(k - i + 1)}, "U'4"});
        rels.push_back({{b(i), x(k - i + 1)}, {x(k - i + 1)}, "U'4"});
      }
      for (unsigned i = 1; i + 1 <= k; ++i) {
        rels.push_back({cat({{x(i)}, cb(k - i + 1, m)}),
                        cat({cb(k - i, m), {x(i)}}),
                        "U'5"});
        rels.push_back({{x(i), b(k - i + 1)}, {b(k - i), x(i)}, "U'5"});
      }
      for (unsigned i = 1; i + 1 <= k; ++i) {
        for (unsigned j = 1; j <= k; ++j) {
          if (j != k - i && j != k - i + 1) {
            rels.push_back({cat({{x(i)}, cb(j, m)}),
                            cat({cb(j, m), {x(i)}}),
                            "U'6"});
            rels.push_back({{x(i), b(j)}, {b(j), x(i)}, "U'6"});
          }
        }
      }
      break;

    case RelationFamily::Vp:
      rels.push_back({cat({dm(k, 1, m), {x(0)}}), {x(0)}, "V'1"});
      rels.push_back({cat({lpow(d(1), q), {x(0)}}), {x(0)}, "V'1"});
      rels.push_back({cat({{x(0)}, dm(k, 1, m)}),
                      cat({dm(1, 2, m), {x(0)}}),
                      "V'2"});
      for (unsigned i = 1; i + 2 <= k; ++i) {
        rels.push_back({cat({{x(0)}, dm(i, i + 1, m)}),
                        cat({dm(i + 1, i + 2, m), {x(0)}}),
                        "V'2"});
      }
      for (unsigned i = 1; i + 1 <= k; ++i) {
        rels.push_back({cat({{x(0)}, lpow(d(i), q)}),
                        cat({lpow(d(i + 1), q), {x(0)}}),
                        "V'2"});
      }
      for (unsigned i = 0; i + 2 <= k; ++i) {
        rels.push_back(
            {cat({{x(i)}, dm(k - i - 1, k - i, m)}), {x(i)}, "V'3"});
      }
      rels.push_back({cat({{x(k - 1)}, dm(k, 1, m)}), {x(k - 1)}, "V'3"});
      for (unsigned i = 0; i + 1 <= k; ++i) {
        rels.push_back({cat({{x(i)}, lpow(d(k - i), q)}), {x(i)}, "V'3"});
      }
      for (unsigned i = 1; i + 1 <= k; ++i) {
        rels.push_back(
            {cat({dm(i, i + 1, m), {x(k - i)}}), {x(k - i)}, "V'4"});
        rels.push_back(
            {cat({lpow(d(i + 1), q), {x(k - i)}}), {x(k - i)}, "V'4"});
      }
      for (unsigned i = 1; i + 2 <= k; ++i) {
        rels.push_back({cat({{x(i)}, dm(k - i, k - i + 1, m)}),
                        cat({dm(k - i - 1, k - i, m), {x(i)}}),
                        "V'5"});
      }
      rels.push_back({cat({{x(k - 1)}, dm(1, 2, m)}),
                      cat({dm(k, 1, m), {x(k - 1)}}),
                      "V'5"});
      for (unsigned i = 1; i + 1 <= k; ++i) {
        rels.push_back({cat({{x(i)}, lpow(d(k - i + 1), q)}),
                        cat({lpow(d(k - i), q), {x(i)}}),
                        "V'5"});
      }
      for (unsigned i = 1; i + 2 <= k; ++i) {
        rels.push_back({cat({{x(i)}, dm(k, 1, m)}),
                        cat({dm(k, 1, m), {x(i)}}),
                        "V'6"});
      }
      for (unsigned i = 1; i + 1 <= k; ++i) {
        for (unsigned j = 1; j + 1 <= k; ++j) {
          if (j + 1 != k - i && j != k - i) {
            rels.push_back({cat({{x(i)}, dm(j, j + 1, m)}),
                            cat({dm(j, j + 1, m), {x(i)}}),
                            "V'6"});
          }
        }
      }
      for (unsigned i = 1; i + 1 <= k; ++i) {
        for (unsigned j = 1; j <= k; ++j) {
          if (j != k - i && j != k - i + 1) {
            rels.push_back({cat({{x(i)}, lpow(d(j), q)}),
                            cat({lpow(d(j), q), {x(i)}}),
                            "V'6"});
          }
        }
      }
      break;
  }
  return rels;
}

enum class Preset { ABX, BCX, DX };

inline std::string preset_name(Preset preset) {
  switch (preset) {
    case Preset::ABX: return "abx";
    case Preset::BCX: return "bcx";
    case Preset::DX: return "dx";
  }
  return "?";
}

inline Preset parse_preset(std::string_view name) {
  if (name == "abx" || name == "ABX") return Preset::ABX;
  if (name == "bcx" || name == "BCX") return Preset::BCX;
  if (name == "dx" || name == "DX") return Preset::DX;
  throw parse_error("unknown preset '" + std::string(name)
                    + "' (expected abx, bcx or dx)");
}

struct PresetBundle {
  Presentation presentation;
  InterpretationMap interpretation;
};

//! One of the three presentations of the block monoid, with the letter
//! assignment onto the matching generator family.
inline PresetBundle build_preset(unsigned k, unsigned m, Preset preset) {
  if (k < 2 || m < 2) {
    throw parameter_error("build_preset needs k >= 2 and m >= 2");
  }
  using namespace detail;
  BlockSpec spec(k, m);
  PresetBundle out;
  out.interpretation.degree = spec.degree();

  auto add_family = [&](GeneratorFamily const& fam) {
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
      out.presentation.alphabet.push_back(fam.name(i));
      out.interpretation.assign(fam.name(i), fam.members[i]);
    }
  };
  auto append = [&](std::vector<Relation>&& rels) {
    for (auto& rel : rels) {
      out.presentation.relations.push_back(std::move(rel));
    }
  };

  auto xs = x_generators(spec);
  switch (preset) {
    case Preset::ABX: {
      auto abc = abc_generators(spec);
      add_family(abc.a);
      add_family(abc.b);
      add_family(xs);
      append(build_family(k, m, RelationFamily::R));
      append(build_family(k, m, RelationFamily::W));
      append(build_family(k, m, RelationFamily::Rp));
      break;
    }
    case Preset::BCX: {
      auto abc = abc_generators(spec);
      add_family(abc.b);
      add_family(abc.c);
      add_family(xs);
      append(build_family(k, m, RelationFamily::U));
      append(build_family(k, m, RelationFamily::W));
      append(build_family(k, m, RelationFamily::Up));
      break;
    }
    case Preset::DX: {
      add_family(d_generators(spec));
      add_family(xs);
      append(build_family(k, m, RelationFamily::V));
      append(build_family(k, m, RelationFamily::W));
      append(build_family(k, m, RelationFamily::Vp));
      break;
    }
  }
  out.presentation.validate();
  return out;
}

//! Presentation file format: a "letters:" line, then one "rel" line per
//! relation, words as space-separated letter names and "1" for the
//! empty word.
inline void write_presentation(std::ostream& os, Presentation const& p) {
  os << "letters:";
  for (auto const& letter : p.alphabet) {
    os << " " << letter;
  }
  os << "\n";
  for (auto const& rel : p.relations) {
    os << "rel " << rel.tag << ": " << word_to_string(rel.lhs) << " = "
       << word_to_string(rel.rhs) << "\n";
  }
}

inline Presentation read_presentation(std::istream& is) {
  Presentation p;
  std::string line;
  if (!std::getline(is, line) || line.rfind("letters:", 0) != 0) {
    throw parse_error("presentation: expected 'letters:' line");
  }
  {
    std::istringstream ls(line.substr(8));
    Letter letter;
    while (ls >> letter) {
      p.alphabet.push_back(letter);
    }
  }
  auto parse_side = [](std::string const& text) {
    Word w;
    std::istringstream ws(text);
    Letter letter;
    while (ws >> letter) {
      if (letter != "1") {
        w.push_back(letter);
      }
    }
    return w;
  };
  while (std::getline(is, line)) {
    if (line.empty()) {
      continue;
    }
    if (line.rfind("rel ", 0) != 0) {
      throw parse_error("presentation: expected 'rel' line, got '" + line
                        + "'");
    }
    auto colon = line.find(':');
    auto eq = line.find('=', colon);
    if (colon == std::string::npos || eq == std::string::npos) {
      throw parse_error("presentation: malformed relation line");
    }
    Relation rel;
    rel.tag = line.substr(4, colon - 4);
    rel.lhs = parse_side(line.substr(colon + 1, eq - colon - 1));
    rel.rhs = parse_side(line.substr(eq + 1));
    p.relations.push_back(std::move(rel));
  }
  p.validate();
  return p;
}

//! Interpretation file format: one "letter := pperm" line per letter.
inline void write_interpretation(std::ostream& os,
                                 InterpretationMap const& phi) {
  for (auto const& [letter, value] : phi.images) {
    os << letter << " := " << value << "\n";
  }
}

inline InterpretationMap read_interpretation(std::istream& is) {
  InterpretationMap phi;
  phi.degree = 0;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) {
      continue;
    }
    auto sep = line.find(" := ");
    if (sep == std::string::npos) {
      throw parse_error("interpretation: expected '<letter> := <pperm>'");
    }
    auto value = PartialPerm::parse(line.substr(sep + 4));
    if (phi.degree == 0) {
      phi.degree = value.degree();
    }
    phi.assign(line.substr(0, sep), value);
  }
  if (phi.images.empty()) {
    throw parse_error("interpretation: no assignments");
  }
  return phi;
}

}  // namespace poikm

#endif  // POIKM_PRESENTATIONS_HPP_

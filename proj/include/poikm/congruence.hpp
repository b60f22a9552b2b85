#ifndef POIKM_CONGRUENCE_HPP_
#define POIKM_CONGRUENCE_HPP_

#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "errors.hpp"
#include "presentations.hpp"

namespace poikm {

//! The finite quotient of a free monoid by the congruence a presentation
//! generates: class count, shortlex word representatives and the right
//! multiplication action of the letters.
struct QuotientTable {
  std::vector<Letter> alphabet;
  std::vector<Word> representatives;
  std::vector<std::vector<std::uint32_t>> right;  // class x letter

  std::size_t size() const { return representatives.size(); }
};

//! Enumerates the classes of the smallest congruence containing the
//! presentation's relations, coset-enumeration style: a growing right
//! multiplication table over classes, starting from the class of the
//! empty word, merging classes whenever a relation instance traced from
//! any class forces equality. Left compatibility comes from applying
//! every relation at every class and re-scanning after merges until a
//! fixpoint; a new class is defined (least class, least letter first)
//! only once scanning is saturated.
//!
//! Deterministic by construction: classes are processed by discovery
//! index, letters by alphabet order, relations by list order. The final
//! numbering is canonical (breadth-first from the empty-word class), so
//! the output does not depend on the relation list's order at all.
//!
//! Throws overflow_error when the number of live classes would exceed
//! the bound; that says nothing about whether the quotient is infinite.
class CongruenceEnumerator {
 public:
  CongruenceEnumerator(Presentation const& p, std::size_t bound)
      : bound_(bound), alphabet_(p.alphabet) {
    if (bound < 1) {
      throw parameter_error("quotient_enumerate needs bound >= 1");
    }
    p.validate();
    for (auto const& rel : p.relations) {
      relations_.emplace_back(letters_of(p, rel.lhs), letters_of(p, rel.rhs));
    }
  }

  QuotientTable run() {
    new_node();
    while (true) {
      saturate();
      auto [node, letter] = first_gap();
      if (node == kNone) {
        break;
      }
      if (live_ >= bound_) {
        throw overflow_error(
            "quotient_enumerate: more than " + std::to_string(bound_)
            + " classes; the quotient may be infinite or merely large");
      }
      rows_[node][letter] = new_node();
    }
    return canonical_table();
  }

 private:
  static constexpr std::uint32_t kNone = UINT32_MAX;

  static std::vector<std::uint32_t> letters_of(Presentation const& p,
                                               Word const& w) {
    std::vector<std::uint32_t> out;
    for (auto const& letter : w) {
      out.push_back(static_cast<std::uint32_t>(*p.letter_index(letter)));
    }
    return out;
  }

  std::uint32_t new_node() {
    rows_.emplace_back(alphabet_.size(), kNone);
    parent_.push_back(static_cast<std::uint32_t>(rows_.size() - 1));
    ++live_;
    return static_cast<std::uint32_t>(rows_.size() - 1);
  }

  std::uint32_t find(std::uint32_t node) {
    while (parent_[node] != node) {
      parent_[node] = parent_[parent_[node]];
      node = parent_[node];
    }
    return node;
  }

  //! Merges the classes of two nodes; the smaller index survives, so the
  //! empty-word class stays at node 0 for the whole run.
  void merge(std::uint32_t a, std::uint32_t b) {
    pending_.emplace_back(a, b);
    while (!pending_.empty()) {
      auto [u, v] = pending_.back();
      pending_.pop_back();
      u = find(u);
      v = find(v);
      if (u == v) {
        continue;
      }
      auto keep = std::min(u, v);
      auto dead = std::max(u, v);
      parent_[dead] = keep;
      --live_;
      for (std::size_t l = 0; l < alphabet_.size(); ++l) {
        auto t = rows_[dead][l];
        if (t == kNone) {
          continue;
        }
        if (rows_[keep][l] == kNone) {
          rows_[keep][l] = t;
        } else {
          pending_.emplace_back(rows_[keep][l], t);
        }
      }
      rows_[dead].clear();
    }
  }

  struct Trace {
    bool complete;
    std::uint32_t node;   // end class, or the stuck class
    std::size_t stuck_at; // index of the undefined letter when incomplete
  };

  Trace trace(std::uint32_t start, std::vector<std::uint32_t> const& word) {
    auto node = find(start);
    for (std::size_t i = 0; i < word.size(); ++i) {
      auto next = rows_[node][word[i]];
      if (next == kNone) {
        return {false, node, i};
      }
      node = find(next);
    }
    return {true, node, 0};
  }

  //! Applies one relation at one class. Returns true when the table
  //! changed (a forced entry or a merge).
  bool scan(std::uint32_t node, std::vector<std::uint32_t> const& lhs,
            std::vector<std::uint32_t> const& rhs) {
    auto t1 = trace(node, lhs);
    auto t2 = trace(node, rhs);
    if (t1.complete && t2.complete) {
      if (t1.node != t2.node) {
        merge(t1.node, t2.node);
        return true;
      }
      return false;
    }
    if (!t1.complete && t2.complete && t1.stuck_at + 1 == lhs.size()) {
      rows_[t1.node][lhs.back()] = t2.node;
      return true;
    }
    if (!t2.complete && t1.complete && t2.stuck_at + 1 == rhs.size()) {
      rows_[t2.node][rhs.back()] = t1.node;
      return true;
    }
    return false;
  }

  void saturate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::uint32_t node = 0; node < rows_.size(); ++node) {
        if (find(node) != node) {
          continue;
        }
        for (auto const& [lhs, rhs] : relations_) {
          if (find(node) != node) {
            break;  // this class died in a merge triggered below
          }
          if (scan(node, lhs, rhs)) {
            changed = true;
          }
        }
      }
    }
  }

  std::pair<std::uint32_t, std::size_t> first_gap() {
    for (std::uint32_t node = 0; node < rows_.size(); ++node) {
      if (find(node) != node) {
        continue;
      }
      for (std::size_t l = 0; l < alphabet_.size(); ++l) {
        if (rows_[node][l] == kNone) {
          return {node, l};
        }
      }
    }
    return {kNone, 0};
  }

  //! Renumbers classes breadth-first from the empty-word class, which
  //! yields shortlex representatives and an output independent of the
  //! merge history.
  QuotientTable canonical_table() {
    QuotientTable out;
    out.alphabet = alphabet_;
    std::vector<std::uint32_t> number(rows_.size(), kNone);
    std::deque<std::uint32_t> queue;
    auto root = find(0);
    number[root] = 0;
    queue.push_back(root);
    out.representatives.emplace_back();
    std::vector<std::uint32_t> order{root};
    while (!queue.empty()) {
      auto node = queue.front();
      queue.pop_front();
      for (std::size_t l = 0; l < alphabet_.size(); ++l) {
        auto next = find(rows_[node][l]);
        if (number[next] == kNone) {
          number[next] = static_cast<std::uint32_t>(order.size());
          order.push_back(next);
          auto rep = out.representatives[number[node]];
          rep.push_back(alphabet_[l]);
          out.representatives.push_back(std::move(rep));
          queue.push_back(next);
        }
      }
    }
    if (order.size() != live_) {
      throw error("quotient_enumerate: internal inconsistency, a class is "
                  "unreachable from the empty word");
    }
    for (auto node : order) {
      std::vector<std::uint32_t> row;
      for (std::size_t l = 0; l < alphabet_.size(); ++l) {
        row.push_back(number[find(rows_[node][l])]);
      }
      out.right.push_back(std::move(row));
    }
    return out;
  }

  std::size_t bound_;
  std::size_t live_ = 0;
  std::vector<Letter> alphabet_;
  std::vector<std::pair<std::vector<std::uint32_t>,
                        std::vector<std::uint32_t>>> relations_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pending_;
};

inline QuotientTable quotient_enumerate(Presentation const& p,
                                        std::size_t bound) {
  return CongruenceEnumerator(p, bound).run();
}

}  // namespace poikm

#endif  // POIKM_CONGRUENCE_HPP_

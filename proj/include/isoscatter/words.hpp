#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace isoscatter::words {

// Letters are nonzero integers: +i is generator i, -i its inverse
// (1-based, i <= rank). The enumeration order of letters is
// 1 < -1 < 2 < -2 < ... which fixes every canonical form below.
using Letter = int;

// Position of a letter in the canonical letter order.
inline int letter_rank(Letter l) {
  int i = l > 0 ? l : -l;
  return 2 * (i - 1) + (l < 0 ? 1 : 0);
}

// Freely reduces a letter sequence (cancels adjacent inverse pairs).
std::vector<Letter> free_reduce(const std::vector<Letter>& letters);

// Freely reduced word in a free group.
struct ReducedWord {
  std::vector<Letter> letters;

  ReducedWord() = default;
  // Validates reducedness; throws std::invalid_argument on a cancelling pair
  // or a zero letter.
  explicit ReducedWord(std::vector<Letter> ls);

  static ReducedWord reduced_from(const std::vector<Letter>& raw) {
    return ReducedWord(free_reduce(raw));
  }

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  bool is_cyclically_reduced() const;

  ReducedWord inverse() const;
  // Concatenation with free reduction.
  friend ReducedWord operator*(const ReducedWord& lhs, const ReducedWord& rhs);

  // Conjugate shaving: strips cancelling first/last pairs.
  ReducedWord cyclically_reduced() const;

  bool operator==(const ReducedWord& o) const { return letters == o.letters; }
  bool operator!=(const ReducedWord& o) const { return !(*this == o); }
};

// True iff lhs precedes rhs in the canonical order (shorter first, then
// letter-rank lexicographic).
bool word_less(const std::vector<Letter>& lhs, const std::vector<Letter>& rhs);

// Compact text form: generators a, b, c, ... with uppercase inverses, for
// rank <= 26; dotted integers beyond that.
std::string word_to_string(const ReducedWord& w);

// All reduced words of exactly length n over rank g, visited in canonical
// order. Count is 2g (2g-1)^(n-1).
void for_each_reduced_word(int rank, int n, const std::function<void(const ReducedWord&)>& fn);
std::vector<ReducedWord> enumerate_reduced_words(int rank, int n);

// Primitive conjugacy class of a free group: canonical representative is the
// cyclically reduced word that is rotation-minimal in the letter order, and
// is not a proper power.
struct PrimitiveClass {
  ReducedWord representative;
  int length() const { return static_cast<int>(representative.size()); }

  bool operator==(const PrimitiveClass& o) const {
    return representative == o.representative;
  }
};

// True iff w is cyclically reduced, strictly minimal among its rotations,
// and not a proper power.
bool is_canonical_primitive(const ReducedWord& w);

// Canonical form of the conjugacy class of w (cyclic reduction + minimal
// rotation); the result may still be a proper power.
ReducedWord canonical_cyclic_form(const ReducedWord& w);

// All primitive conjugacy classes of cyclically reduced length in
// [1, n_max], each exactly once, in canonical order.
void for_each_primitive_class(int rank, int n_max,
                              const std::function<void(const PrimitiveClass&)>& fn);
std::vector<PrimitiveClass> enumerate_primitive_classes(int rank, int n_max);

}  // namespace isoscatter::words

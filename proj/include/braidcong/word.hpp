#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "braidcong/permutation.hpp"

namespace braidcong {

using BigInt = boost::multiprecision::cpp_int;

class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& msg, size_t position)
      : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  size_t position() const { return position_; }

private:
  size_t position_;
};

class budget_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class GenKind : std::uint8_t { Sigma = 0, SigmaInv = 1, Tau = 2 };

/// One letter of a virtual braid word: sigma_i, sigma_i^-1 or tau_i,
/// with one-based index in [1, n-1].
struct Generator {
  GenKind kind;
  int index;

  bool operator==(const Generator& o) const { return kind == o.kind && index == o.index; }
  bool operator!=(const Generator& o) const { return !(*this == o); }
  // (index, kind) order; fixes the lexicographic enumeration order
  bool operator<(const Generator& o) const {
    return std::tie(index, kind) < std::tie(o.index, o.kind);
  }
};

/// tau is its own inverse
inline Generator inverse(Generator g) {
  switch (g.kind) {
    case GenKind::Sigma: return {GenKind::SigmaInv, g.index};
    case GenKind::SigmaInv: return {GenKind::Sigma, g.index};
    case GenKind::Tau: return g;
  }
  throw std::logic_error("unreachable");
}

inline bool cancels(Generator a, Generator b) { return inverse(a) == b; }

/// A word in the generators of vB_n. Immutable value type; the empty
/// letter list is the group identity. The strand count n travels with the
/// word and mixing words of different n is an error.
class BraidWord {
public:
  explicit BraidWord(int strands) : strands_(strands) {
    if (strands < 1) throw std::invalid_argument("strand count must be >= 1");
  }

  BraidWord(int strands, std::vector<Generator> letters) : BraidWord(strands) {
    for (const Generator& g : letters) check_index(g.index);
    letters_ = std::move(letters);
  }

  int strands() const { return strands_; }
  const std::vector<Generator>& letters() const { return letters_; }
  size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  bool operator==(const BraidWord& o) const {
    return strands_ == o.strands_ && letters_ == o.letters_;
  }
  bool operator!=(const BraidWord& o) const { return !(*this == o); }

  /// classical = no virtual crossings
  bool is_classical() const {
    for (const Generator& g : letters_)
      if (g.kind == GenKind::Tau) return false;
    return true;
  }

private:
  void check_index(int index) const {
    if (index < 1 || index >= strands_)
      throw std::invalid_argument("generator index " + std::to_string(index) +
                                  " out of range [1, " + std::to_string(strands_ - 1) + "]");
  }

  int strands_;
  std::vector<Generator> letters_;
};

inline BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw std::invalid_argument("strand count mismatch in concat");
  std::vector<Generator> out = a.letters();
  out.insert(out.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(out));
}

inline BraidWord inverse(const BraidWord& w) {
  std::vector<Generator> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(inverse(*it));
  return BraidWord(w.strands(), std::move(out));
}

/// Applies the only length-reducing rules of vB_n: sigma sigma^-1,
/// sigma^-1 sigma and tau tau deletion, to the unique fully reduced word.
/// Braid and mixed relations are deliberately not applied.
inline BraidWord free_reduce(const BraidWord& w) {
  std::vector<Generator> stack;
  stack.reserve(w.size());
  for (const Generator& g : w.letters()) {
    if (!stack.empty() && cancels(stack.back(), g))
      stack.pop_back();
    else
      stack.push_back(g);
  }
  return BraidWord(w.strands(), std::move(stack));
}

// --- projections to S_n ---------------------------------------------------

/// pi_v: every letter (sigma or tau) maps to the transposition (i, i+1).
inline Permutation underlying_permutation(const BraidWord& w) {
  Permutation p(w.strands());
  for (const Generator& g : w.letters())
    p = compose(p, Permutation::transposition(w.strands(), g.index));
  return p;
}

/// pi_K: sigma letters map to the identity, tau letters to (i, i+1).
/// Its kernel is the Kure braid group.
inline Permutation kure_projection(const BraidWord& w) {
  Permutation p(w.strands());
  for (const Generator& g : w.letters())
    if (g.kind == GenKind::Tau)
      p = compose(p, Permutation::transposition(w.strands(), g.index));
  return p;
}

// --- parsing and printing --------------------------------------------------

/// Word grammar:
///   word := ws* (term ws+)* term?
///   term := ("s"|"t") index ("^" signed_int)?
///   index := positive decimal, in [1, n-1]
///   signed_int := ("-")? positive decimal
/// Exponents expand letter by letter; "t" with a negative exponent equals
/// |exponent| tau letters.
inline BraidWord parse_word(const std::string& text, int n,
                            size_t expansion_budget = 1000000) {
  BraidWord result(n);
  std::vector<Generator> letters;
  size_t pos = 0;
  const size_t len = text.size();

  auto skip_ws = [&] {
    while (pos < len && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                         text[pos] == '\r'))
      ++pos;
  };
  auto parse_positive = [&](const char* what) -> long long {
    size_t start = pos;
    if (pos >= len || text[pos] < '0' || text[pos] > '9')
      throw parse_error(std::string("expected ") + what, pos);
    long long v = 0;
    while (pos < len && text[pos] >= '0' && text[pos] <= '9') {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000000LL) throw parse_error(std::string(what) + " too large", start);
      ++pos;
    }
    if (v < 1) throw parse_error(std::string(what) + " must be positive", start);
    return v;
  };

  skip_ws();
  while (pos < len) {
    char c = text[pos];
    GenKind base;
    if (c == 's')
      base = GenKind::Sigma;
    else if (c == 't')
      base = GenKind::Tau;
    else
      throw parse_error("expected 's' or 't'", pos);
    ++pos;
    size_t index_pos = pos;
    long long index = parse_positive("generator index");
    if (index < 1 || index >= n)
      throw parse_error("generator index out of range [1, " + std::to_string(n - 1) + "]",
                        index_pos);

    long long exponent = 1;
    if (pos < len && text[pos] == '^') {
      ++pos;
      bool negative = false;
      if (pos < len && text[pos] == '-') {
        negative = true;
        ++pos;
      }
      exponent = parse_positive("exponent");
      if (negative) exponent = -exponent;
    }

    GenKind kind = base;
    if (base == GenKind::Sigma && exponent < 0) kind = GenKind::SigmaInv;
    size_t count = static_cast<size_t>(exponent < 0 ? -exponent : exponent);
    if (letters.size() + count > expansion_budget)
      throw budget_error("word expansion exceeds budget");
    for (size_t k = 0; k < count; ++k)
      letters.push_back(Generator{kind, static_cast<int>(index)});

    if (pos < len) {
      if (text[pos] != ' ' && text[pos] != '\t' && text[pos] != '\n' && text[pos] != '\r')
        throw parse_error("expected whitespace between terms", pos);
      skip_ws();
    }
  }
  return BraidWord(n, std::move(letters));
}

/// Serializes back into the word grammar, grouping runs of equal letters
/// into a single term with an exponent, single spaces between terms.
inline std::string to_string(const BraidWord& w) {
  std::string out;
  const auto& ls = w.letters();
  size_t i = 0;
  while (i < ls.size()) {
    size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    size_t run = j - i;
    if (!out.empty()) out += ' ';
    const Generator& g = ls[i];
    out += (g.kind == GenKind::Tau) ? 't' : 's';
    out += std::to_string(g.index);
    if (g.kind == GenKind::SigmaInv)
      out += "^-" + std::to_string(run);
    else if (run > 1)
      out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

// --- sampling ---------------------------------------------------------------

/// Alphabet order: s1 < s1^-1 < t1 < s2 < s2^-1 < t2 < ...
inline Generator letter_from_id(int id) {
  return Generator{static_cast<GenKind>(id % 3), id / 3 + 1};
}

inline int alphabet_size(int n) { return 3 * (n - 1); }

/// Uniform i.i.d. letters over all 3(n-1) generators, deterministic in seed.
inline BraidWord random_word(int n, size_t length, std::mt19937_64& rng) {
  if (n < 2) throw std::invalid_argument("random_word needs n >= 2");
  std::vector<Generator> letters;
  letters.reserve(length);
  const int k = alphabet_size(n);
  for (size_t i = 0; i < length; ++i)
    letters.push_back(letter_from_id(static_cast<int>(rng() % static_cast<unsigned>(k))));
  return BraidWord(n, std::move(letters));
}

inline BraidWord random_word(int n, size_t length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_word(n, length, rng);
}

/// Uniform over the 2(n-1) classical letters only.
inline BraidWord random_classical_word(int n, size_t length, std::mt19937_64& rng) {
  if (n < 2) throw std::invalid_argument("random_classical_word needs n >= 2");
  std::vector<Generator> letters;
  letters.reserve(length);
  const unsigned k = static_cast<unsigned>(2 * (n - 1));
  for (size_t i = 0; i < length; ++i) {
    unsigned v = static_cast<unsigned>(rng() % k);
    letters.push_back(Generator{v % 2 == 0 ? GenKind::Sigma : GenKind::SigmaInv,
                                static_cast<int>(v / 2) + 1});
  }
  return BraidWord(n, std::move(letters));
}

// --- the section S_n -> words in tau letters --------------------------------

/// iota: writes a permutation as a canonical product of tau letters by
/// selection-sort decomposition into adjacent transpositions; at most
/// n(n-1)/2 letters, and underlying_permutation(tau_section(p)) == p.
inline BraidWord tau_section(const Permutation& p) {
  const int n = p.degree();
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = p(i);
  std::vector<Generator> letters;
  for (int target = 0; target < n; ++target) {
    int pos = target;
    while (v[static_cast<size_t>(pos)] != target) ++pos;
    for (int j = pos - 1; j >= target; --j) {
      std::swap(v[static_cast<size_t>(j)], v[static_cast<size_t>(j + 1)]);
      letters.push_back(Generator{GenKind::Tau, j + 1});
    }
  }
  return BraidWord(n, std::move(letters));
}

/// Appends the tau-word inverse of pi_v(w), so the result is pure.
inline BraidWord make_pure(const BraidWord& w) {
  return concat(w, inverse(tau_section(underlying_permutation(w))));
}

inline BraidWord random_pure_word(int n, size_t length, std::uint64_t seed) {
  return make_pure(random_word(n, length, seed));
}

inline BraidWord random_pure_word(int n, size_t length, std::mt19937_64& rng) {
  return make_pure(random_word(n, length, rng));
}

/// Splits w along vB_n = vP_n x| S_n: returns (pure part, permutation part)
/// with w = pure * iota(perm) up to free reduction.
struct SemidirectFactor {
  BraidWord pure;
  Permutation perm;
};

inline SemidirectFactor semidirect_factor(const BraidWord& w) {
  Permutation p = underlying_permutation(w);
  return SemidirectFactor{concat(w, inverse(tau_section(p))), p};
}

// --- exhaustive enumeration --------------------------------------------------

/// Number of freely reduced words of length <= max_len over an alphabet of
/// k letters in which each letter has exactly one forbidden successor.
inline BigInt reduced_word_count(int alphabet, int max_len) {
  BigInt total = 1;
  if (max_len >= 1 && alphabet > 0) {
    BigInt layer = alphabet;
    total += layer;
    for (int len = 2; len <= max_len; ++len) {
      layer *= alphabet - 1;
      total += layer;
    }
  }
  return total;
}

namespace detail {

template <typename Fn>
void enumerate_reduced(int n, int max_len, bool classical_only, Fn&& fn) {
  std::vector<Generator> alphabet;
  for (int id = 0; id < alphabet_size(n); ++id) {
    Generator g = letter_from_id(id);
    if (classical_only && g.kind == GenKind::Tau) continue;
    alphabet.push_back(g);
  }
  std::vector<Generator> stack;
  // depth-first in lexicographic order over words of exactly `len` letters
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      fn(BraidWord(n, stack));
      return;
    }
    for (const Generator& g : alphabet) {
      if (!stack.empty() && cancels(stack.back(), g)) continue;
      stack.push_back(g);
      rec(remaining - 1);
      stack.pop_back();
    }
  };
  for (int len = 0; len <= max_len; ++len) rec(len);
}

} // namespace detail

/// Streams all freely reduced words of length <= max_len, each exactly once,
/// in length-then-lexicographic order. Throws budget_error before starting
/// if the stream would exceed `budget` words.
template <typename Fn>
void enumerate_words(int n, int max_len, Fn&& fn, std::uint64_t budget = 10000000) {
  if (n < 2) throw std::invalid_argument("enumerate_words needs n >= 2");
  if (reduced_word_count(alphabet_size(n), max_len) > budget)
    throw budget_error("enumeration budget exceeded");
  detail::enumerate_reduced(n, max_len, false, fn);
}

inline std::vector<BraidWord> enumerate_words(int n, int max_len,
                                              std::uint64_t budget = 10000000) {
  std::vector<BraidWord> out;
  enumerate_words(n, max_len, [&](const BraidWord& w) { out.push_back(w); }, budget);
  return out;
}

/// Same stream restricted to the classical letters sigma_i^{+-1}.
template <typename Fn>
void enumerate_classical_words(int n, int max_len, Fn&& fn,
                               std::uint64_t budget = 10000000) {
  if (n < 2) throw std::invalid_argument("enumerate_classical_words needs n >= 2");
  if (reduced_word_count(2 * (n - 1), max_len) > budget)
    throw budget_error("enumeration budget exceeded");
  detail::enumerate_reduced(n, max_len, true, fn);
}

// --- small word builders ------------------------------------------------------

inline BraidWord sigma_power(int n, int index, long long exponent) {
  std::vector<Generator> letters;
  GenKind kind = exponent >= 0 ? GenKind::Sigma : GenKind::SigmaInv;
  long long count = exponent >= 0 ? exponent : -exponent;
  for (long long k = 0; k < count; ++k) letters.push_back(Generator{kind, index});
  return BraidWord(n, std::move(letters));
}

inline BraidWord tau_letter(int n, int index) {
  return BraidWord(n, {Generator{GenKind::Tau, index}});
}

/// sigma_i tau_i sigma_i tau_i — the all-m congruence kernel witness
inline BraidWord sigma_tau_square(int n, int index) {
  return BraidWord(n, {Generator{GenKind::Sigma, index}, Generator{GenKind::Tau, index},
                       Generator{GenKind::Sigma, index}, Generator{GenKind::Tau, index}});
}

} // namespace braidcong

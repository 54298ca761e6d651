#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gsb {

using Symbol = std::uint32_t;

/// A string over the dense alphabet [0, q). The alphabet size is a property
/// of the enclosing Code, not of the word.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
  Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}

  /// Parses a digit string such as "0120" (digits then 'a'..'z' for 10..35).
  static Word from_digits(std::string_view digits);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Symbol& operator[](std::size_t i) { return symbols_[i]; }

  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  /// Space-free rendering for q <= 36, space-separated otherwise.
  std::string str() const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> symbols_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Strictly increasing list of coordinate positions.
class CoordSet {
 public:
  CoordSet() = default;

  /// Sorts and checks for duplicates; throws InputError on a repeated index.
  explicit CoordSet(std::vector<std::size_t> indices);
  CoordSet(std::initializer_list<std::size_t> indices) : CoordSet(std::vector<std::size_t>(indices)) {}

  /// {begin, ..., end-1}.
  static CoordSet range(std::size_t begin, std::size_t end);

  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  std::size_t operator[](std::size_t i) const { return indices_[i]; }
  auto begin() const noexcept { return indices_.begin(); }
  auto end() const noexcept { return indices_.end(); }
  std::span<const std::size_t> indices() const noexcept { return indices_; }

  bool contains(std::size_t i) const;
  /// One past the largest index, 0 when empty.
  std::size_t bound() const noexcept { return indices_.empty() ? 0 : indices_.back() + 1; }

  CoordSet unite(const CoordSet& other) const;
  /// [0, n) minus this set.
  CoordSet complement(std::size_t n) const;
  /// Each index shifted by `offset`.
  CoordSet shifted(std::size_t offset) const;

  friend bool operator==(const CoordSet&, const CoordSet&) = default;

 private:
  std::vector<std::size_t> indices_;
};

struct CodeMetadata {
  std::optional<std::uint64_t> seed;
  std::string construction;

  friend bool operator==(const CodeMetadata&, const CodeMetadata&) = default;
};

/// A set of distinct, equal-length words over [0, q).
///
/// Validated on construction and immutable afterwards, so a Code can be
/// shared freely between threads.
class Code {
 public:
  /// Throws InputError on q < 2, n < 1, wrong lengths, out-of-range symbols
  /// or duplicate words.
  Code(std::uint32_t q, std::size_t n, std::vector<Word> words, CodeMetadata meta = {});

  std::uint32_t q() const noexcept { return q_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return words_.size(); }
  const Word& operator[](std::size_t i) const { return words_[i]; }
  const std::vector<Word>& words() const noexcept { return words_; }
  const CodeMetadata& meta() const noexcept { return meta_; }

  /// The words at `indices`, in that order, with metadata carried over.
  Code subcode(std::span<const std::size_t> indices) const;
  Code with_meta(CodeMetadata meta) const;

  friend bool operator==(const Code&, const Code&) = default;

 private:
  std::uint32_t q_;
  std::size_t n_;
  std::vector<Word> words_;
  CodeMetadata meta_;
};

struct CodeStats {
  std::size_t size = 0;
  double dimension = 0.0;  ///< log_q |C|
  double rate = 0.0;       ///< dimension / n
  std::optional<std::size_t> min_distance;
  bool mds = false;  ///< k integral and d = n - k + 1
};

std::size_t hamming_distance(const Word& a, const Word& b);

/// Symbols of `w` at the positions of `s`, in increasing position order.
Word restricted(const Word& w, const CoordSet& s);

/// Positions where `a` and `b` carry the same symbol.
CoordSet agreement_set(const Word& a, const Word& b);

/// Exact minimum distance by pairwise scan; nullopt for |C| < 2.
std::optional<std::size_t> min_distance(const Code& c);

/// Largest k with q^k <= size (exact integer arithmetic); size >= 1.
std::size_t integer_log(std::uint64_t q, std::uint64_t size);

CodeStats code_stats(const Code& c);

}  // namespace gsb

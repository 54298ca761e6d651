#include "gsb/core.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <unordered_set>

#include "gsb/errors.hpp"

namespace gsb {

Word Word::from_digits(std::string_view digits) {
  std::vector<Symbol> out;
  out.reserve(digits.size());
  for (char ch : digits) {
    if (ch >= '0' && ch <= '9') {
      out.push_back(static_cast<Symbol>(ch - '0'));
    } else if (ch >= 'a' && ch <= 'z') {
      out.push_back(static_cast<Symbol>(ch - 'a' + 10));
    } else {
      throw InputError(std::string("bad digit '") + ch + "' in word");
    }
  }
  return Word(std::move(out));
}

std::string Word::str() const {
  const bool compact = std::all_of(symbols_.begin(), symbols_.end(), [](Symbol s) { return s < 36; });
  std::string out;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    Symbol s = symbols_[i];
    if (compact) {
      out.push_back(s < 10 ? static_cast<char>('0' + s) : static_cast<char>('a' + s - 10));
    } else {
      if (i) out.push_back(' ');
      out += std::to_string(s);
    }
  }
  return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Symbol s : w) {
    h ^= s;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

CoordSet::CoordSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw InputError("coordinate set has a repeated index");
  }
}

CoordSet CoordSet::range(std::size_t begin, std::size_t end) {
  CoordSet s;
  for (std::size_t i = begin; i < end; ++i) s.indices_.push_back(i);
  return s;
}

bool CoordSet::contains(std::size_t i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

CoordSet CoordSet::unite(const CoordSet& other) const {
  CoordSet s;
  std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(), other.indices_.end(),
                 std::back_inserter(s.indices_));
  return s;
}

CoordSet CoordSet::complement(std::size_t n) const {
  CoordSet s;
  std::size_t j = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (j < indices_.size() && indices_[j] == i) {
      ++j;
    } else {
      s.indices_.push_back(i);
    }
  }
  return s;
}

CoordSet CoordSet::shifted(std::size_t offset) const {
  CoordSet s = *this;
  for (auto& i : s.indices_) i += offset;
  return s;
}

Code::Code(std::uint32_t q, std::size_t n, std::vector<Word> words, CodeMetadata meta)
    : q_(q), n_(n), words_(std::move(words)), meta_(std::move(meta)) {
  if (q_ < 2) throw InputError("alphabet size must be at least 2");
  if (n_ < 1) throw InputError("block length must be at least 1");
  std::unordered_set<Word, WordHash> seen;
  seen.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const Word& w = words_[i];
    if (w.size() != n_) {
      throw InputError("word " + std::to_string(i) + " has length " + std::to_string(w.size()) +
                       ", expected " + std::to_string(n_));
    }
    for (Symbol s : w) {
      if (s >= q_) throw InputError("word " + std::to_string(i) + " has symbol " + std::to_string(s) + " >= q");
    }
    if (!seen.insert(w).second) throw InputError("duplicate word at index " + std::to_string(i));
  }
}

Code Code::subcode(std::span<const std::size_t> indices) const {
  std::vector<Word> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) {
    if (i >= words_.size()) throw InputError("subcode index out of range");
    out.push_back(words_[i]);
  }
  return Code(q_, n_, std::move(out), meta_);
}

Code Code::with_meta(CodeMetadata meta) const {
  Code c = *this;
  c.meta_ = std::move(meta);
  return c;
}

std::size_t hamming_distance(const Word& a, const Word& b) {
  if (a.size() != b.size()) {
    throw InputError("hamming_distance: lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
  return d;
}

Word restricted(const Word& w, const CoordSet& s) {
  if (s.bound() > w.size()) throw InputError("restriction index out of range");
  std::vector<Symbol> out;
  out.reserve(s.size());
  for (std::size_t i : s) out.push_back(w[i]);
  return Word(std::move(out));
}

CoordSet agreement_set(const Word& a, const Word& b) {
  if (a.size() != b.size()) throw InputError("agreement_set: length mismatch");
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) idx.push_back(i);
  }
  return CoordSet(std::move(idx));
}

std::optional<std::size_t> min_distance(const Code& c) {
  if (c.size() < 2) return std::nullopt;
  std::size_t best = c.n();
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      best = std::min(best, hamming_distance(c[i], c[j]));
    }
  }
  return best;
}

std::size_t integer_log(std::uint64_t q, std::uint64_t size) {
  if (q < 2 || size < 1) throw InputError("integer_log: need q >= 2 and size >= 1");
  std::size_t k = 0;
  unsigned __int128 p = q;
  while (p <= size) {
    ++k;
    p *= q;
  }
  return k;
}

CodeStats code_stats(const Code& c) {
  if (c.size() < 1) throw InputError("code_stats: empty code");
  CodeStats st;
  st.size = c.size();
  st.dimension = std::log(static_cast<double>(c.size())) / std::log(static_cast<double>(c.q()));
  st.rate = st.dimension / static_cast<double>(c.n());
  st.min_distance = min_distance(c);

  const std::size_t k = integer_log(c.q(), c.size());
  unsigned __int128 qk = 1;
  for (std::size_t i = 0; i < k; ++i) qk *= c.q();
  const bool k_integral = qk == c.size();
  // A single word has no minimum distance, so it is never flagged MDS.
  st.mds = k_integral && st.min_distance.has_value() && *st.min_distance + k == c.n() + 1;
  return st;
}

}  // namespace gsb

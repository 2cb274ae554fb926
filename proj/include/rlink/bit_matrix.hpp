#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rlink {

/// Square boolean matrix with rows packed into 64-bit words.
class BitMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kBits = 64;

  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + kBits - 1) / kBits), data_(n_ * words_, 0) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
  }

  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] std::size_t words_per_row() const { return words_; }

  [[nodiscard]] bool get(std::size_t i, std::size_t j) const {
    return (data_[i * words_ + j / kBits] >> (j % kBits)) & 1U;
  }
  void set(std::size_t i, std::size_t j, bool value = true) {
    Word& w = data_[i * words_ + j / kBits];
    const Word bit = Word{1} << (j % kBits);
    w = value ? (w | bit) : (w & ~bit);
  }

  [[nodiscard]] const Word* row(std::size_t i) const { return data_.data() + i * words_; }
  [[nodiscard]] Word*       row(std::size_t i) { return data_.data() + i * words_; }

  [[nodiscard]] std::size_t count() const {
    std::size_t c = 0;
    for (Word w : data_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t       n_ = 0;
  std::size_t       words_ = 0;
  std::vector<Word> data_;
};

/// Thresholded product: out(i,j) = OR_k a(i,k) AND b(k,j). Row i of the
/// result is the OR of the rows of b selected by the set bits of row i of a.
inline BitMatrix bool_product(const BitMatrix& a, const BitMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("bool_product: dimension mismatch");
  const std::size_t n = a.size();
  const std::size_t words = a.words_per_row();
  BitMatrix         out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto* ar = a.row(i);
    auto*       orow = out.row(i);
    for (std::size_t w = 0; w < words; ++w) {
      BitMatrix::Word bits = ar[w];
      while (bits != 0) {
        const std::size_t k = w * BitMatrix::kBits + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        const auto* br = b.row(k);
        for (std::size_t t = 0; t < words; ++t) orow[t] |= br[t];
      }
    }
  }
  return out;
}

}  // namespace rlink

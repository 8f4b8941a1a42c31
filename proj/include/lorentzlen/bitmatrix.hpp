#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace lls {

// Dense square boolean matrix with 64-bit packed rows. Relation matrices for
// carriers up to a few thousand points; all checkers are row-slice scans.
class BitMatrix {
  public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n)
        : n_(n), row_words_((n + 63) / 64), bits_(n * row_words_, 0) {}

    std::size_t size() const { return n_; }

    bool get(std::size_t i, std::size_t j) const {
        return (bits_[i * row_words_ + (j >> 6)] >> (j & 63)) & 1u;
    }
    void set(std::size_t i, std::size_t j, bool v = true) {
        uint64_t& w = bits_[i * row_words_ + (j >> 6)];
        const uint64_t mask = uint64_t(1) << (j & 63);
        if (v)
            w |= mask;
        else
            w &= ~mask;
    }

    const uint64_t* row(std::size_t i) const { return bits_.data() + i * row_words_; }
    uint64_t* row(std::size_t i) { return bits_.data() + i * row_words_; }
    std::size_t row_words() const { return row_words_; }

    // true iff row j is a subset of row i.
    bool row_subset(std::size_t j, std::size_t i) const {
        const uint64_t* rj = row(j);
        const uint64_t* ri = row(i);
        for (std::size_t w = 0; w < row_words_; ++w)
            if (rj[w] & ~ri[w]) return false;
        return true;
    }

    // Indices set in row i.
    std::vector<std::size_t> row_indices(std::size_t i) const {
        std::vector<std::size_t> out;
        const uint64_t* r = row(i);
        for (std::size_t w = 0; w < row_words_; ++w) {
            uint64_t bits = r[w];
            while (bits) {
                const std::size_t b = std::size_t(__builtin_ctzll(bits));
                out.push_back(w * 64 + b);
                bits &= bits - 1;
            }
        }
        return out;
    }

    // Warshall-style transitive closure in place.
    void transitive_close() {
        for (std::size_t k = 0; k < n_; ++k) {
            const uint64_t* rk = row(k);
            for (std::size_t i = 0; i < n_; ++i) {
                if (!get(i, k)) continue;
                uint64_t* ri = row(i);
                for (std::size_t w = 0; w < row_words_; ++w) ri[w] |= rk[w];
            }
        }
    }

    BitMatrix transposed() const {
        BitMatrix t(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j : row_indices(i)) t.set(j, i);
        return t;
    }

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

  private:
    std::size_t n_ = 0;
    std::size_t row_words_ = 0;
    std::vector<uint64_t> bits_;
};

}  // namespace lls

// Copyright 2026 The homprod Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOMPROD_BIT_MATRIX_H
#define HOMPROD_BIT_MATRIX_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace homprod {

constexpr size_t WORD_BITS = 64;

constexpr size_t words_for_bits(size_t bits) {
    return (bits + WORD_BITS - 1) / WORD_BITS;
}

/// A length-n vector over GF(2), packed into 64-bit words. Pad bits past `size()` are always zero.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t n);

    static BitVector unit(size_t n, size_t i);
    static BitVector from_string(std::string_view bits);
    static BitVector from_words(size_t n, std::span<const uint64_t> words);

    size_t size() const {
        return size_;
    }
    bool get(size_t i) const {
        return (words_[i / WORD_BITS] >> (i % WORD_BITS)) & 1;
    }
    void set(size_t i, bool value = true);
    void flip(size_t i) {
        words_[i / WORD_BITS] ^= uint64_t{1} << (i % WORD_BITS);
    }

    size_t weight() const;
    bool is_zero() const;
    std::vector<size_t> support() const;

    std::span<uint64_t> words() {
        return words_;
    }
    std::span<const uint64_t> words() const {
        return words_;
    }

    BitVector &operator^=(const BitVector &other);
    friend BitVector operator^(BitVector a, const BitVector &b) {
        a ^= b;
        return a;
    }
    bool operator==(const BitVector &other) const = default;

    /// Characters '0'/'1', index 0 first.
    std::string str() const;
    /// Hex digit j holds bits 4j..4j+3, with bit 4j as the least significant bit of the digit.
    std::string hex() const;

   private:
    size_t size_ = 0;
    std::vector<uint64_t> words_;
};

/// Lexicographic order on bit strings read from index 0 (0 < 1).
bool lex_less(const BitVector &a, const BitVector &b);
/// Inner product over GF(2).
bool dot(const BitVector &a, const BitVector &b);
/// Tensor product with row-major indexing: out[i * b.size() + j] = a[i] & b[j].
BitVector kron(const BitVector &a, const BitVector &b);

/// Dense row-major bit-packed matrix over GF(2).
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols);

    static BitMatrix identity(size_t n);
    static BitMatrix from_rows(std::span<const BitVector> rows, size_t cols);
    static BitMatrix from_columns(std::span<const BitVector> cols, size_t rows);
    /// Each string is one row of '0'/'1' characters.
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);
    static BitMatrix uniform_random(size_t rows, size_t cols, std::mt19937_64 &rng);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    size_t words_per_row() const {
        return words_per_row_;
    }

    bool get(size_t r, size_t c) const {
        return (data_[r * words_per_row_ + c / WORD_BITS] >> (c % WORD_BITS)) & 1;
    }
    void set(size_t r, size_t c, bool value = true);
    void flip(size_t r, size_t c) {
        data_[r * words_per_row_ + c / WORD_BITS] ^= uint64_t{1} << (c % WORD_BITS);
    }

    std::span<uint64_t> row_words(size_t r) {
        return {data_.data() + r * words_per_row_, words_per_row_};
    }
    std::span<const uint64_t> row_words(size_t r) const {
        return {data_.data() + r * words_per_row_, words_per_row_};
    }

    BitVector row(size_t r) const;
    BitVector col(size_t c) const;
    void set_row(size_t r, const BitVector &v);
    void append_row(const BitVector &v);
    /// row[dst] ^= row[src]
    void add_row(size_t src, size_t dst);
    void swap_rows(size_t a, size_t b);

    size_t row_weight(size_t r) const;
    size_t col_weight(size_t c) const;
    size_t max_row_weight() const;
    size_t max_col_weight() const;
    bool is_zero() const;

    BitMatrix transposed() const;
    BitMatrix submatrix(size_t row0, size_t col0, size_t nrows, size_t ncols) const;
    /// Rows of `this` followed by rows of `below`.
    BitMatrix stacked(const BitMatrix &below) const;

    BitMatrix operator*(const BitMatrix &rhs) const;
    BitVector operator*(const BitVector &v) const;
    BitMatrix &operator^=(const BitMatrix &rhs);
    friend BitMatrix operator^(BitMatrix a, const BitMatrix &b) {
        a ^= b;
        return a;
    }
    bool operator==(const BitMatrix &other) const = default;

    std::string str() const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t words_per_row_ = 0;
    std::vector<uint64_t> data_;
};

/// Kronecker product, row-major product basis (index i * b.dim + j).
BitMatrix kron(const BitMatrix &a, const BitMatrix &b);

/// Linearly independent vectors of a common ambient dimension, stored as matrix rows.
class Basis {
   public:
    explicit Basis(size_t ambient_dim = 0) : vectors_(0, ambient_dim) {
    }
    /// Throws PreconditionError if the rows are dependent.
    static Basis from_rows(BitMatrix rows);

    size_t dim() const {
        return vectors_.rows();
    }
    size_t ambient_dim() const {
        return vectors_.cols();
    }
    const BitMatrix &vectors() const {
        return vectors_;
    }
    BitVector vector(size_t i) const {
        return vectors_.row(i);
    }

    /// Reduced row echelon form of the span; equal spans give equal canonical bases.
    Basis canonical() const;

    bool operator==(const Basis &other) const = default;

   private:
    BitMatrix vectors_;
};

/// Incremental Gaussian eliminator. Keeps one reduced row per pivot column.
class SpanBuilder {
   public:
    explicit SpanBuilder(size_t ambient_dim);

    /// Reduces v against the stored rows; the result is zero iff v is in the span.
    BitVector reduce(BitVector v) const;
    bool contains(const BitVector &v) const {
        return reduce(v).is_zero();
    }
    /// Adds v if independent; returns whether it was added.
    bool insert(const BitVector &v);

    size_t dim() const {
        return rows_.size();
    }
    size_t ambient_dim() const {
        return ambient_dim_;
    }

   private:
    size_t ambient_dim_;
    std::vector<BitVector> rows_;
    std::vector<size_t> pivots_;
};

struct EchelonForm {
    /// Reduced row echelon form; rows at index >= pivots.size() are zero.
    BitMatrix reduced;
    std::vector<size_t> pivots;
};

/// Gauss-Jordan elimination with leftmost pivot column and topmost candidate row.
EchelonForm reduced_row_echelon(BitMatrix m);

size_t rank(const BitMatrix &m);
/// Right null space {v : m v = 0}, in reduced echelon form.
Basis kernel_basis(const BitMatrix &m);
/// Column space, in reduced echelon form.
Basis image_basis(const BitMatrix &m);
/// Row space, in reduced echelon form.
Basis row_space_basis(const BitMatrix &m);

bool in_span(const BitVector &v, const Basis &b);
bool same_span(const Basis &a, const Basis &b);
bool is_subspace(const Basis &sub, const Basis &super);
/// Vectors of `super`, taken greedily in order, that complete `sub` to a basis of span(sub) + span(super).
Basis complement_in(const Basis &sub, const Basis &super);

/// Some x with m x = b, if one exists.
std::optional<BitVector> solve(const BitMatrix &m, const BitVector &b);
std::optional<BitMatrix> inverse(const BitMatrix &m);
bool is_invertible(const BitMatrix &m);

/// Uniform sample from GL(m, 2) by rejection.
BitMatrix random_invertible(size_t m, std::mt19937_64 &rng);

}  // namespace homprod

#endif

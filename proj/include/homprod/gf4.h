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

#ifndef HOMPROD_GF4_H
#define HOMPROD_GF4_H

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homprod/bit_matrix.h"
#include "homprod/distance.h"

namespace homprod {

/// An element of GF(4) = {0, 1, w, w^2} with 1 + w + w^2 = 0, stored as a 2-bit code:
/// 0 -> 00, 1 -> 01, w -> 10, w^2 -> 11. Addition is XOR of codes.
class Gf4 {
   public:
    constexpr Gf4() = default;
    constexpr explicit Gf4(uint8_t code) : code_(code & 3) {
    }

    static constexpr Gf4 zero() {
        return Gf4(0);
    }
    static constexpr Gf4 one() {
        return Gf4(1);
    }
    static constexpr Gf4 omega() {
        return Gf4(2);
    }
    static constexpr Gf4 omega_squared() {
        return Gf4(3);
    }

    constexpr uint8_t code() const {
        return code_;
    }
    constexpr bool is_zero() const {
        return code_ == 0;
    }

    friend constexpr Gf4 operator+(Gf4 a, Gf4 b) {
        return Gf4(a.code_ ^ b.code_);
    }
    friend constexpr Gf4 operator*(Gf4 a, Gf4 b) {
        return Gf4(MUL[a.code_][b.code_]);
    }
    Gf4 &operator+=(Gf4 b) {
        code_ ^= b.code_;
        return *this;
    }
    constexpr bool operator==(const Gf4 &) const = default;

    /// Frobenius conjugate a^2.
    constexpr Gf4 conj() const {
        return Gf4(CONJ[code_]);
    }
    /// Throws InvalidParameter for zero.
    Gf4 inverse() const;

    /// One of '0', '1', 'w', 'W'.
    char symbol() const;
    static Gf4 from_symbol(char c);

   private:
    static constexpr uint8_t MUL[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    static constexpr uint8_t CONJ[4] = {0, 1, 3, 2};
    uint8_t code_ = 0;
};

/// A vector over GF(4) kept as two bit planes (low and high bit of each code).
class Gf4Vector {
   public:
    Gf4Vector() = default;
    explicit Gf4Vector(size_t n) : lo_(n), hi_(n) {
    }
    static Gf4Vector from_string(std::string_view symbols);

    size_t size() const {
        return lo_.size();
    }
    Gf4 get(size_t i) const {
        return Gf4(uint8_t(lo_.get(i)) | uint8_t(hi_.get(i) << 1));
    }
    void set(size_t i, Gf4 value);

    /// Number of nonzero components.
    size_t weight() const;
    bool is_zero() const {
        return lo_.is_zero() && hi_.is_zero();
    }
    const BitVector &lo() const {
        return lo_;
    }
    const BitVector &hi() const {
        return hi_;
    }

    Gf4Vector &operator+=(const Gf4Vector &other);
    friend Gf4Vector operator+(Gf4Vector a, const Gf4Vector &b) {
        a += b;
        return a;
    }
    Gf4Vector scaled(Gf4 c) const;
    Gf4Vector conj() const;
    bool operator==(const Gf4Vector &) const = default;

    std::string str() const;

   private:
    BitVector lo_;
    BitVector hi_;
};

/// Hermitian form (f, g) = sum_j conj(f_j) g_j.
Gf4 hermitian_inner(const Gf4Vector &f, const Gf4Vector &g);

/// Dense matrix over GF(4) with 2-bit entries split across two bit-packed planes.
class Gf4Matrix {
   public:
    Gf4Matrix() = default;
    Gf4Matrix(size_t rows, size_t cols) : lo_(rows, cols), hi_(rows, cols) {
    }
    static Gf4Matrix identity(size_t n);
    /// Rows written with the symbols 0, 1, w (omega), W (omega^2).
    static Gf4Matrix from_strings(std::initializer_list<std::string_view> rows);
    static Gf4Matrix from_rows(std::span<const Gf4Vector> rows, size_t cols);
    /// Lifts a binary matrix (entries 0/1).
    static Gf4Matrix from_binary(const BitMatrix &m);

    size_t rows() const {
        return lo_.rows();
    }
    size_t cols() const {
        return lo_.cols();
    }
    Gf4 get(size_t r, size_t c) const {
        return Gf4(uint8_t(lo_.get(r, c)) | uint8_t(hi_.get(r, c) << 1));
    }
    void set(size_t r, size_t c, Gf4 value);

    Gf4Vector row(size_t r) const;
    void set_row(size_t r, const Gf4Vector &v);
    void append_row(const Gf4Vector &v);
    /// row[dst] += c * row[src]
    void add_scaled_row(size_t src, size_t dst, Gf4 c);
    void scale_row(size_t r, Gf4 c);
    void swap_rows(size_t a, size_t b);

    size_t row_weight(size_t r) const;
    size_t col_weight(size_t c) const;
    size_t max_row_weight() const;
    size_t max_col_weight() const;
    bool is_zero() const {
        return lo_.is_zero() && hi_.is_zero();
    }

    Gf4Matrix transposed() const;
    /// Conjugate transpose.
    Gf4Matrix adjoint() const;
    Gf4Matrix submatrix(size_t row0, size_t col0, size_t nrows, size_t ncols) const;

    Gf4Matrix operator*(const Gf4Matrix &rhs) const;
    Gf4Vector operator*(const Gf4Vector &v) const;
    Gf4Matrix &operator+=(const Gf4Matrix &rhs);
    friend Gf4Matrix operator+(Gf4Matrix a, const Gf4Matrix &b) {
        a += b;
        return a;
    }
    bool operator==(const Gf4Matrix &) const = default;

    const BitMatrix &lo() const {
        return lo_;
    }
    const BitMatrix &hi() const {
        return hi_;
    }
    std::string str() const;

   private:
    BitMatrix lo_;
    BitMatrix hi_;
};

Gf4Matrix kron(const Gf4Matrix &a, const Gf4Matrix &b);

struct Gf4Echelon {
    Gf4Matrix reduced;
    std::vector<size_t> pivots;
};

/// Gauss-Jordan over GF(4), same pivot order as the GF(2) routine, pivots scaled to 1.
Gf4Echelon reduced_row_echelon(Gf4Matrix m);
size_t rank(const Gf4Matrix &m);
/// Right null space as rows, reduced echelon form.
Gf4Matrix kernel_basis(const Gf4Matrix &m);
/// Column space as rows, reduced echelon form.
Gf4Matrix image_basis(const Gf4Matrix &m);
Gf4Matrix row_space_basis(const Gf4Matrix &m);
bool in_span(const Gf4Vector &v, const Gf4Matrix &basis_rows);
bool same_span(const Gf4Matrix &a, const Gf4Matrix &b);

/// True iff every pairwise (and self) Hermitian product of the rows vanishes.
bool is_self_orthogonal(const Gf4Matrix &basis_rows);

/// Self-adjoint (delta* = delta) operator on GF(4)^n with delta^2 = 0.
class Gf4Boundary {
   public:
    explicit Gf4Boundary(Gf4Matrix delta);

    const Gf4Matrix &matrix() const {
        return delta_;
    }
    size_t dim() const {
        return delta_.rows();
    }
    size_t rank() const {
        return rank_;
    }
    size_t hom_dim() const {
        return dim() - 2 * rank_;
    }
    /// Max row or column weight (the parity-check weight).
    size_t check_weight() const {
        return std::max(delta_.max_row_weight(), delta_.max_col_weight());
    }

   private:
    Gf4Matrix delta_;
    size_t rank_;
};

/// delta = sum_ij U_ij a^i (conj a^j)^T for the rows a^i of `basis_rows`.
Gf4Boundary gf4_boundary_from_checks(const Gf4Matrix &basis_rows, const Gf4Matrix &u);

/// All invertible m x m matrices with u* = u, in order of their entry codes (row-major, base 4). m <= 3.
std::vector<Gf4Matrix> enumerate_selfadjoint_invertible(size_t m);

Gf4Boundary gf4_product(const Gf4Boundary &d1, const Gf4Boundary &d2);

struct Gf4DistanceResult {
    size_t d = 0;
    Gf4Vector witness;
    uint64_t cosets_scanned = 0;
    uint64_t steps = 0;
    double wall_seconds = 0;
};

/// Exact min weight over ker delta \ im delta. One representative per projective class {h, wh, w^2h}:
/// (4^H - 1) / 3 cosets, each walked over its 4^L elements as a binary Gray code on {g_i, w g_i}.
Gf4DistanceResult gf4_distance(const Gf4Boundary &d, const SearchOptions &options = {});

/// First element of the same scan with weight <= bound.
std::optional<Gf4Vector> gf4_distance_upper_bound(const Gf4Boundary &d, size_t bound,
                                                  const SearchOptions &options = {});

/// [[5,1,3]] checks a^1 = (0, w, w^2, w^2, w), a^2 = (w, 0, w, w^2, w^2).
Gf4Matrix five_qubit_basis();
/// The Steane checks lifted to GF(4).
Gf4Matrix steane_basis_gf4();

}  // namespace homprod

#endif

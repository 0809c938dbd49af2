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

#include "homprod/bit_matrix.h"

#include <algorithm>

#include "homprod/errors.h"

namespace homprod {

namespace {

uint64_t tail_mask(size_t bits) {
    size_t r = bits % WORD_BITS;
    return r == 0 ? ~uint64_t{0} : (uint64_t{1} << r) - 1;
}

}  // namespace

BitVector::BitVector(size_t n) : size_(n), words_(words_for_bits(n), 0) {
}

BitVector BitVector::unit(size_t n, size_t i) {
    BitVector v(n);
    v.set(i);
    return v;
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw InvalidParameter("bit string may only contain '0' and '1'");
        }
    }
    return v;
}

BitVector BitVector::from_words(size_t n, std::span<const uint64_t> words) {
    BitVector v(n);
    if (words.size() < v.words_.size()) {
        throw DimensionError("not enough words for a vector of this length");
    }
    std::copy_n(words.begin(), v.words_.size(), v.words_.begin());
    if (!v.words_.empty()) {
        v.words_.back() &= tail_mask(n);
    }
    return v;
}

void BitVector::set(size_t i, bool value) {
    uint64_t bit = uint64_t{1} << (i % WORD_BITS);
    if (value) {
        words_[i / WORD_BITS] |= bit;
    } else {
        words_[i / WORD_BITS] &= ~bit;
    }
}

size_t BitVector::weight() const {
    size_t w = 0;
    for (uint64_t x : words_) {
        w += std::popcount(x);
    }
    return w;
}

bool BitVector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](uint64_t x) { return x == 0; });
}

std::vector<size_t> BitVector::support() const {
    std::vector<size_t> out;
    for (size_t k = 0; k < words_.size(); ++k) {
        for (uint64_t x = words_[k]; x; x &= x - 1) {
            out.push_back(k * WORD_BITS + std::countr_zero(x));
        }
    }
    return out;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    if (other.size_ != size_) {
        throw DimensionError("vector length mismatch");
    }
    for (size_t k = 0; k < words_.size(); ++k) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

std::string BitVector::str() const {
    std::string s(size_, '0');
    for (size_t i = 0; i < size_; ++i) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

std::string BitVector::hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    for (size_t i = 0; i < size_; i += 4) {
        unsigned nibble = 0;
        for (size_t b = 0; b < 4 && i + b < size_; ++b) {
            nibble |= unsigned(get(i + b)) << b;
        }
        s.push_back(digits[nibble]);
    }
    return s;
}

bool lex_less(const BitVector &a, const BitVector &b) {
    auto wa = a.words();
    auto wb = b.words();
    for (size_t k = 0; k < wa.size(); ++k) {
        uint64_t diff = wa[k] ^ wb[k];
        if (diff) {
            uint64_t low = diff & -diff;
            return (wa[k] & low) == 0;
        }
    }
    return false;
}

bool dot(const BitVector &a, const BitVector &b) {
    if (a.size() != b.size()) {
        throw DimensionError("vector length mismatch");
    }
    uint64_t acc = 0;
    for (size_t k = 0; k < a.words().size(); ++k) {
        acc ^= a.words()[k] & b.words()[k];
    }
    return std::popcount(acc) & 1;
}

BitVector kron(const BitVector &a, const BitVector &b) {
    BitVector out(a.size() * b.size());
    for (size_t i : a.support()) {
        for (size_t j : b.support()) {
            out.set(i * b.size() + j);
        }
    }
    return out;
}

BitMatrix::BitMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), words_per_row_(words_for_bits(cols)), data_(rows * words_for_bits(cols), 0) {
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) {
        m.set(i, i);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(std::span<const BitVector> rows, size_t cols) {
    BitMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        m.set_row(r, rows[r]);
    }
    return m;
}

BitMatrix BitMatrix::from_columns(std::span<const BitVector> cols, size_t rows) {
    BitMatrix m(rows, cols.size());
    for (size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) {
            throw DimensionError("column length mismatch");
        }
        for (size_t r : cols[c].support()) {
            m.set(r, c);
        }
    }
    return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    BitMatrix m(rows.size(), cols);
    size_t r = 0;
    for (auto row : rows) {
        if (row.size() != cols) {
            throw DimensionError("ragged rows");
        }
        m.set_row(r++, BitVector::from_string(row));
    }
    return m;
}

BitMatrix BitMatrix::uniform_random(size_t rows, size_t cols, std::mt19937_64 &rng) {
    BitMatrix m(rows, cols);
    uint64_t mask = tail_mask(cols);
    for (size_t r = 0; r < rows; ++r) {
        auto words = m.row_words(r);
        for (size_t k = 0; k < words.size(); ++k) {
            words[k] = rng();
        }
        if (!words.empty()) {
            words.back() &= mask;
        }
    }
    return m;
}

void BitMatrix::set(size_t r, size_t c, bool value) {
    uint64_t bit = uint64_t{1} << (c % WORD_BITS);
    uint64_t &w = data_[r * words_per_row_ + c / WORD_BITS];
    if (value) {
        w |= bit;
    } else {
        w &= ~bit;
    }
}

BitVector BitMatrix::row(size_t r) const {
    return BitVector::from_words(cols_, row_words(r));
}

BitVector BitMatrix::col(size_t c) const {
    BitVector v(rows_);
    for (size_t r = 0; r < rows_; ++r) {
        if (get(r, c)) {
            v.set(r);
        }
    }
    return v;
}

void BitMatrix::set_row(size_t r, const BitVector &v) {
    if (v.size() != cols_) {
        throw DimensionError("row length mismatch");
    }
    std::copy(v.words().begin(), v.words().end(), row_words(r).begin());
}

void BitMatrix::append_row(const BitVector &v) {
    if (v.size() != cols_) {
        throw DimensionError("row length mismatch");
    }
    data_.insert(data_.end(), v.words().begin(), v.words().end());
    ++rows_;
}

void BitMatrix::add_row(size_t src, size_t dst) {
    uint64_t *d = data_.data() + dst * words_per_row_;
    const uint64_t *s = data_.data() + src * words_per_row_;
    for (size_t k = 0; k < words_per_row_; ++k) {
        d[k] ^= s[k];
    }
}

void BitMatrix::swap_rows(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    std::swap_ranges(row_words(a).begin(), row_words(a).end(), row_words(b).begin());
}

size_t BitMatrix::row_weight(size_t r) const {
    size_t w = 0;
    for (uint64_t x : row_words(r)) {
        w += std::popcount(x);
    }
    return w;
}

size_t BitMatrix::col_weight(size_t c) const {
    size_t w = 0;
    for (size_t r = 0; r < rows_; ++r) {
        w += get(r, c);
    }
    return w;
}

size_t BitMatrix::max_row_weight() const {
    size_t best = 0;
    for (size_t r = 0; r < rows_; ++r) {
        best = std::max(best, row_weight(r));
    }
    return best;
}

size_t BitMatrix::max_col_weight() const {
    std::vector<size_t> counts(cols_, 0);
    for (size_t r = 0; r < rows_; ++r) {
        auto words = row_words(r);
        for (size_t k = 0; k < words.size(); ++k) {
            for (uint64_t x = words[k]; x; x &= x - 1) {
                ++counts[k * WORD_BITS + std::countr_zero(x)];
            }
        }
    }
    return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

bool BitMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](uint64_t x) { return x == 0; });
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r) {
        auto words = row_words(r);
        for (size_t k = 0; k < words.size(); ++k) {
            for (uint64_t x = words[k]; x; x &= x - 1) {
                t.set(k * WORD_BITS + std::countr_zero(x), r);
            }
        }
    }
    return t;
}

BitMatrix BitMatrix::submatrix(size_t row0, size_t col0, size_t nrows, size_t ncols) const {
    if (row0 + nrows > rows_ || col0 + ncols > cols_) {
        throw DimensionError("submatrix out of range");
    }
    BitMatrix s(nrows, ncols);
    for (size_t r = 0; r < nrows; ++r) {
        for (size_t c = 0; c < ncols; ++c) {
            if (get(row0 + r, col0 + c)) {
                s.set(r, c);
            }
        }
    }
    return s;
}

BitMatrix BitMatrix::stacked(const BitMatrix &below) const {
    if (below.cols_ != cols_) {
        throw DimensionError("column count mismatch");
    }
    BitMatrix out = *this;
    out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
    out.rows_ += below.rows_;
    return out;
}

BitMatrix BitMatrix::operator*(const BitMatrix &rhs) const {
    if (cols_ != rhs.rows_) {
        throw DimensionError("matrix product shape mismatch");
    }
    BitMatrix out(rows_, rhs.cols_);
    for (size_t r = 0; r < rows_; ++r) {
        auto words = row_words(r);
        auto dst = out.row_words(r);
        for (size_t k = 0; k < words.size(); ++k) {
            for (uint64_t x = words[k]; x; x &= x - 1) {
                auto src = rhs.row_words(k * WORD_BITS + std::countr_zero(x));
                for (size_t j = 0; j < dst.size(); ++j) {
                    dst[j] ^= src[j];
                }
            }
        }
    }
    return out;
}

BitVector BitMatrix::operator*(const BitVector &v) const {
    if (v.size() != cols_) {
        throw DimensionError("matrix-vector shape mismatch");
    }
    BitVector out(rows_);
    for (size_t r = 0; r < rows_; ++r) {
        uint64_t acc = 0;
        auto words = row_words(r);
        for (size_t k = 0; k < words.size(); ++k) {
            acc ^= words[k] & v.words()[k];
        }
        if (std::popcount(acc) & 1) {
            out.set(r);
        }
    }
    return out;
}

BitMatrix &BitMatrix::operator^=(const BitMatrix &rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw DimensionError("matrix shape mismatch");
    }
    for (size_t k = 0; k < data_.size(); ++k) {
        data_[k] ^= rhs.data_[k];
    }
    return *this;
}

std::string BitMatrix::str() const {
    std::string s;
    for (size_t r = 0; r < rows_; ++r) {
        s += row(r).str();
        s += '\n';
    }
    return s;
}

BitMatrix kron(const BitMatrix &a, const BitMatrix &b) {
    BitMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t k = 0; k < a.cols(); ++k) {
            if (!a.get(i, k)) {
                continue;
            }
            for (size_t j = 0; j < b.rows(); ++j) {
                for (size_t l = 0; l < b.cols(); ++l) {
                    if (b.get(j, l)) {
                        out.set(i * b.rows() + j, k * b.cols() + l);
                    }
                }
            }
        }
    }
    return out;
}

Basis Basis::from_rows(BitMatrix rows) {
    if (rank(rows) != rows.rows()) {
        throw PreconditionError("basis vectors are linearly dependent");
    }
    Basis b;
    b.vectors_ = std::move(rows);
    return b;
}

Basis Basis::canonical() const {
    return row_space_basis(vectors_);
}

SpanBuilder::SpanBuilder(size_t ambient_dim) : ambient_dim_(ambient_dim) {
}

BitVector SpanBuilder::reduce(BitVector v) const {
    if (v.size() != ambient_dim_) {
        throw DimensionError("vector length does not match ambient dimension");
    }
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (v.get(pivots_[i])) {
            v ^= rows_[i];
        }
    }
    return v;
}

bool SpanBuilder::insert(const BitVector &v) {
    BitVector r = reduce(v);
    if (r.is_zero()) {
        return false;
    }
    size_t pivot = r.support().front();
    // Keep stored rows fully reduced with respect to each other's pivots.
    for (auto &row : rows_) {
        if (row.get(pivot)) {
            row ^= r;
        }
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(pivot);
    return true;
}

EchelonForm reduced_row_echelon(BitMatrix m) {
    EchelonForm out;
    size_t next = 0;
    for (size_t c = 0; c < m.cols() && next < m.rows(); ++c) {
        size_t p = next;
        while (p < m.rows() && !m.get(p, c)) {
            ++p;
        }
        if (p == m.rows()) {
            continue;
        }
        m.swap_rows(p, next);
        for (size_t r = 0; r < m.rows(); ++r) {
            if (r != next && m.get(r, c)) {
                m.add_row(next, r);
            }
        }
        out.pivots.push_back(c);
        ++next;
    }
    out.reduced = std::move(m);
    return out;
}

size_t rank(const BitMatrix &m) {
    SpanBuilder span(m.cols());
    for (size_t r = 0; r < m.rows(); ++r) {
        span.insert(m.row(r));
    }
    return span.dim();
}

Basis row_space_basis(const BitMatrix &m) {
    EchelonForm e = reduced_row_echelon(m);
    return Basis::from_rows(e.reduced.submatrix(0, 0, e.pivots.size(), m.cols()));
}

Basis kernel_basis(const BitMatrix &m) {
    EchelonForm e = reduced_row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : e.pivots) {
        is_pivot[p] = true;
    }
    BitMatrix vectors(0, m.cols());
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        BitVector v = BitVector::unit(m.cols(), f);
        for (size_t i = 0; i < e.pivots.size(); ++i) {
            if (e.reduced.get(i, f)) {
                v.set(e.pivots[i]);
            }
        }
        vectors.append_row(v);
    }
    return Basis::from_rows(std::move(vectors)).canonical();
}

Basis image_basis(const BitMatrix &m) {
    return row_space_basis(m.transposed());
}

bool in_span(const BitVector &v, const Basis &b) {
    if (v.size() != b.ambient_dim()) {
        throw DimensionError("vector length does not match basis ambient dimension");
    }
    SpanBuilder span(b.ambient_dim());
    for (size_t i = 0; i < b.dim(); ++i) {
        span.insert(b.vector(i));
    }
    return span.contains(v);
}

bool is_subspace(const Basis &sub, const Basis &super) {
    if (sub.ambient_dim() != super.ambient_dim()) {
        throw DimensionError("ambient dimension mismatch");
    }
    SpanBuilder span(super.ambient_dim());
    for (size_t i = 0; i < super.dim(); ++i) {
        span.insert(super.vector(i));
    }
    for (size_t i = 0; i < sub.dim(); ++i) {
        if (!span.contains(sub.vector(i))) {
            return false;
        }
    }
    return true;
}

bool same_span(const Basis &a, const Basis &b) {
    return a.dim() == b.dim() && is_subspace(a, b);
}

Basis complement_in(const Basis &sub, const Basis &super) {
    if (sub.ambient_dim() != super.ambient_dim()) {
        throw DimensionError("ambient dimension mismatch");
    }
    SpanBuilder span(sub.ambient_dim());
    for (size_t i = 0; i < sub.dim(); ++i) {
        span.insert(sub.vector(i));
    }
    BitMatrix chosen(0, sub.ambient_dim());
    for (size_t i = 0; i < super.dim(); ++i) {
        BitVector v = super.vector(i);
        if (span.insert(v)) {
            chosen.append_row(v);
        }
    }
    return Basis::from_rows(std::move(chosen));
}

std::optional<BitVector> solve(const BitMatrix &m, const BitVector &b) {
    if (b.size() != m.rows()) {
        throw DimensionError("right-hand side length mismatch");
    }
    BitMatrix aug(m.rows(), m.cols() + 1);
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) {
            if (m.get(r, c)) {
                aug.set(r, c);
            }
        }
        if (b.get(r)) {
            aug.set(r, m.cols());
        }
    }
    EchelonForm e = reduced_row_echelon(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) {
        return std::nullopt;
    }
    BitVector x(m.cols());
    for (size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.reduced.get(i, m.cols())) {
            x.set(e.pivots[i]);
        }
    }
    return x;
}

std::optional<BitMatrix> inverse(const BitMatrix &m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("inverse of a non-square matrix");
    }
    size_t n = m.rows();
    BitMatrix aug(n, 2 * n);
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < n; ++c) {
            if (m.get(r, c)) {
                aug.set(r, c);
            }
        }
        aug.set(r, n + r);
    }
    EchelonForm e = reduced_row_echelon(std::move(aug));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) {
        return std::nullopt;
    }
    return e.reduced.submatrix(0, n, n, n);
}

bool is_invertible(const BitMatrix &m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

BitMatrix random_invertible(size_t m, std::mt19937_64 &rng) {
    if (m == 0) {
        throw InvalidParameter("random_invertible needs m >= 1");
    }
    while (true) {
        BitMatrix candidate = BitMatrix::uniform_random(m, m, rng);
        if (rank(candidate) == m) {
            return candidate;
        }
    }
}

}  // namespace homprod

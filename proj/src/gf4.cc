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

#include "homprod/gf4.h"

#include <algorithm>
#include <chrono>

#include "gray_sweep.h"
#include "homprod/css_code.h"
#include "homprod/errors.h"

namespace homprod {

namespace {

// Plane-level arithmetic. An element is lo + hi * w; multiplying by w maps (lo, hi) to (hi, lo ^ hi).

void axpy_words(Gf4 c, std::span<const uint64_t> src_lo, std::span<const uint64_t> src_hi,
                std::span<uint64_t> dst_lo, std::span<uint64_t> dst_hi) {
    for (size_t i = 0; i < dst_lo.size(); ++i) {
        uint64_t l = src_lo[i];
        uint64_t h = src_hi[i];
        switch (c.code()) {
            case 1:
                dst_lo[i] ^= l;
                dst_hi[i] ^= h;
                break;
            case 2:
                dst_lo[i] ^= h;
                dst_hi[i] ^= l ^ h;
                break;
            case 3:
                dst_lo[i] ^= l ^ h;
                dst_hi[i] ^= l;
                break;
            default:
                break;
        }
    }
}

void scale_words(Gf4 c, std::span<uint64_t> lo, std::span<uint64_t> hi) {
    for (size_t i = 0; i < lo.size(); ++i) {
        uint64_t l = lo[i];
        uint64_t h = hi[i];
        switch (c.code()) {
            case 0:
                lo[i] = hi[i] = 0;
                break;
            case 2:
                lo[i] = h;
                hi[i] = l ^ h;
                break;
            case 3:
                lo[i] = l ^ h;
                hi[i] = l;
                break;
            default:
                break;
        }
    }
}

std::vector<uint64_t> flat_words(const Gf4Vector &v) {
    std::vector<uint64_t> out(v.lo().words().begin(), v.lo().words().end());
    out.insert(out.end(), v.hi().words().begin(), v.hi().words().end());
    return out;
}

Gf4Vector from_flat(size_t n, const std::vector<uint64_t> &words) {
    size_t per = words_for_bits(n);
    std::span<const uint64_t> all(words);
    BitVector lo = BitVector::from_words(n, all.subspan(0, per));
    BitVector hi = BitVector::from_words(n, all.subspan(per, per));
    Gf4Vector v(n);
    for (size_t i = 0; i < n; ++i) {
        v.set(i, Gf4(uint8_t(lo.get(i)) | uint8_t(hi.get(i) << 1)));
    }
    return v;
}

// Reduces v against fully reduced rows with the given pivots (each pivot entry 1). Returns the residue.
Gf4Vector reduce_against(Gf4Vector v, const std::vector<Gf4Vector> &rows, const std::vector<size_t> &pivots) {
    for (size_t i = 0; i < rows.size(); ++i) {
        Gf4 c = v.get(pivots[i]);
        if (!c.is_zero()) {
            v += rows[i].scaled(c);
        }
    }
    return v;
}

// Incremental span over GF(4) with rows kept in reduced form.
class Gf4Span {
   public:
    bool insert(const Gf4Vector &v) {
        Gf4Vector r = reduce_against(v, rows_, pivots_);
        size_t p = 0;
        while (p < r.size() && r.get(p).is_zero()) {
            ++p;
        }
        if (p == r.size()) {
            return false;
        }
        r = r.scaled(r.get(p).inverse());
        for (auto &row : rows_) {
            Gf4 c = row.get(p);
            if (!c.is_zero()) {
                row += r.scaled(c);
            }
        }
        rows_.push_back(std::move(r));
        pivots_.push_back(p);
        return true;
    }
    bool contains(const Gf4Vector &v) const {
        return reduce_against(v, rows_, pivots_).is_zero();
    }
    size_t dim() const {
        return rows_.size();
    }

   private:
    std::vector<Gf4Vector> rows_;
    std::vector<size_t> pivots_;
};

}  // namespace

Gf4 Gf4::inverse() const {
    if (is_zero()) {
        throw InvalidParameter("zero has no inverse in GF(4)");
    }
    static constexpr uint8_t INV[4] = {0, 1, 3, 2};
    return Gf4(INV[code_]);
}

char Gf4::symbol() const {
    static constexpr char SYMBOLS[4] = {'0', '1', 'w', 'W'};
    return SYMBOLS[code_];
}

Gf4 Gf4::from_symbol(char c) {
    switch (c) {
        case '0':
            return zero();
        case '1':
            return one();
        case 'w':
            return omega();
        case 'W':
            return omega_squared();
        default:
            throw InvalidParameter(std::string("not a GF(4) symbol: '") + c + "'");
    }
}

Gf4Vector Gf4Vector::from_string(std::string_view symbols) {
    Gf4Vector v(symbols.size());
    for (size_t i = 0; i < symbols.size(); ++i) {
        v.set(i, Gf4::from_symbol(symbols[i]));
    }
    return v;
}

void Gf4Vector::set(size_t i, Gf4 value) {
    lo_.set(i, value.code() & 1);
    hi_.set(i, value.code() & 2);
}

size_t Gf4Vector::weight() const {
    size_t w = 0;
    auto l = lo_.words();
    auto h = hi_.words();
    for (size_t i = 0; i < l.size(); ++i) {
        w += std::popcount(l[i] | h[i]);
    }
    return w;
}

Gf4Vector &Gf4Vector::operator+=(const Gf4Vector &other) {
    if (other.size() != size()) {
        throw DimensionError("GF(4) vector length mismatch");
    }
    lo_ ^= other.lo_;
    hi_ ^= other.hi_;
    return *this;
}

Gf4Vector Gf4Vector::scaled(Gf4 c) const {
    Gf4Vector out = *this;
    scale_words(c, out.lo_.words(), out.hi_.words());
    return out;
}

Gf4Vector Gf4Vector::conj() const {
    Gf4Vector out = *this;
    out.lo_ ^= hi_;
    return out;
}

std::string Gf4Vector::str() const {
    std::string s(size(), '0');
    for (size_t i = 0; i < size(); ++i) {
        s[i] = get(i).symbol();
    }
    return s;
}

Gf4 hermitian_inner(const Gf4Vector &f, const Gf4Vector &g) {
    if (f.size() != g.size()) {
        throw DimensionError("hermitian_inner needs vectors of equal length");
    }
    // conj(f) = (f.lo ^ f.hi, f.hi); (a0 + a1 w)(b0 + b1 w) = (a0 b0 + a1 b1) + (a0 b1 + a1 b0 + a1 b1) w.
    auto fl = f.lo().words();
    auto fh = f.hi().words();
    auto gl = g.lo().words();
    auto gh = g.hi().words();
    uint64_t lo = 0;
    uint64_t hi = 0;
    for (size_t i = 0; i < fl.size(); ++i) {
        uint64_t a0 = fl[i] ^ fh[i];
        uint64_t a1 = fh[i];
        lo ^= (a0 & gl[i]) ^ (a1 & gh[i]);
        hi ^= (a0 & gh[i]) ^ (a1 & gl[i]) ^ (a1 & gh[i]);
    }
    return Gf4(uint8_t(std::popcount(lo) & 1) | uint8_t((std::popcount(hi) & 1) << 1));
}

Gf4Matrix Gf4Matrix::identity(size_t n) {
    Gf4Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) {
        m.set(i, i, Gf4::one());
    }
    return m;
}

Gf4Matrix Gf4Matrix::from_strings(std::initializer_list<std::string_view> rows) {
    size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    Gf4Matrix m(0, cols);
    for (auto r : rows) {
        if (r.size() != cols) {
            throw DimensionError("all rows must have the same length");
        }
        m.append_row(Gf4Vector::from_string(r));
    }
    return m;
}

Gf4Matrix Gf4Matrix::from_rows(std::span<const Gf4Vector> rows, size_t cols) {
    Gf4Matrix m(0, cols);
    for (const auto &r : rows) {
        m.append_row(r);
    }
    return m;
}

Gf4Matrix Gf4Matrix::from_binary(const BitMatrix &b) {
    Gf4Matrix m;
    m.lo_ = b;
    m.hi_ = BitMatrix(b.rows(), b.cols());
    return m;
}

void Gf4Matrix::set(size_t r, size_t c, Gf4 value) {
    lo_.set(r, c, value.code() & 1);
    hi_.set(r, c, value.code() & 2);
}

Gf4Vector Gf4Matrix::row(size_t r) const {
    Gf4Vector v(cols());
    for (size_t c = 0; c < cols(); ++c) {
        v.set(c, get(r, c));
    }
    return v;
}

void Gf4Matrix::set_row(size_t r, const Gf4Vector &v) {
    if (v.size() != cols()) {
        throw DimensionError("row length does not match column count");
    }
    lo_.set_row(r, v.lo());
    hi_.set_row(r, v.hi());
}

void Gf4Matrix::append_row(const Gf4Vector &v) {
    if (v.size() != cols()) {
        throw DimensionError("row length does not match column count");
    }
    lo_.append_row(v.lo());
    hi_.append_row(v.hi());
}

void Gf4Matrix::add_scaled_row(size_t src, size_t dst, Gf4 c) {
    axpy_words(c, lo_.row_words(src), hi_.row_words(src), lo_.row_words(dst), hi_.row_words(dst));
}

void Gf4Matrix::scale_row(size_t r, Gf4 c) {
    scale_words(c, lo_.row_words(r), hi_.row_words(r));
}

void Gf4Matrix::swap_rows(size_t a, size_t b) {
    lo_.swap_rows(a, b);
    hi_.swap_rows(a, b);
}

size_t Gf4Matrix::row_weight(size_t r) const {
    size_t w = 0;
    auto l = lo_.row_words(r);
    auto h = hi_.row_words(r);
    for (size_t i = 0; i < l.size(); ++i) {
        w += std::popcount(l[i] | h[i]);
    }
    return w;
}

size_t Gf4Matrix::col_weight(size_t c) const {
    size_t w = 0;
    for (size_t r = 0; r < rows(); ++r) {
        w += !get(r, c).is_zero();
    }
    return w;
}

size_t Gf4Matrix::max_row_weight() const {
    size_t w = 0;
    for (size_t r = 0; r < rows(); ++r) {
        w = std::max(w, row_weight(r));
    }
    return w;
}

size_t Gf4Matrix::max_col_weight() const {
    return transposed().max_row_weight();
}

Gf4Matrix Gf4Matrix::transposed() const {
    Gf4Matrix t;
    t.lo_ = lo_.transposed();
    t.hi_ = hi_.transposed();
    return t;
}

Gf4Matrix Gf4Matrix::adjoint() const {
    Gf4Matrix t = transposed();
    t.lo_ ^= t.hi_;
    return t;
}

Gf4Matrix Gf4Matrix::submatrix(size_t row0, size_t col0, size_t nrows, size_t ncols) const {
    Gf4Matrix s;
    s.lo_ = lo_.submatrix(row0, col0, nrows, ncols);
    s.hi_ = hi_.submatrix(row0, col0, nrows, ncols);
    return s;
}

Gf4Matrix Gf4Matrix::operator*(const Gf4Matrix &rhs) const {
    if (cols() != rhs.rows()) {
        throw DimensionError("GF(4) matrix product shape mismatch");
    }
    Gf4Matrix out(rows(), rhs.cols());
    for (size_t r = 0; r < rows(); ++r) {
        for (size_t k = 0; k < cols(); ++k) {
            Gf4 c = get(r, k);
            if (!c.is_zero()) {
                axpy_words(c, rhs.lo_.row_words(k), rhs.hi_.row_words(k), out.lo_.row_words(r),
                           out.hi_.row_words(r));
            }
        }
    }
    return out;
}

Gf4Vector Gf4Matrix::operator*(const Gf4Vector &v) const {
    if (v.size() != cols()) {
        throw DimensionError("GF(4) matrix-vector shape mismatch");
    }
    Gf4Vector out(rows());
    for (size_t r = 0; r < rows(); ++r) {
        Gf4 acc;
        for (size_t c = 0; c < cols(); ++c) {
            acc += get(r, c) * v.get(c);
        }
        out.set(r, acc);
    }
    return out;
}

Gf4Matrix &Gf4Matrix::operator+=(const Gf4Matrix &rhs) {
    if (rows() != rhs.rows() || cols() != rhs.cols()) {
        throw DimensionError("GF(4) matrix sum shape mismatch");
    }
    lo_ ^= rhs.lo_;
    hi_ ^= rhs.hi_;
    return *this;
}

std::string Gf4Matrix::str() const {
    std::string s;
    for (size_t r = 0; r < rows(); ++r) {
        s += row(r).str();
        s += '\n';
    }
    return s;
}

Gf4Matrix kron(const Gf4Matrix &a, const Gf4Matrix &b) {
    Gf4Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) {
            Gf4 x = a.get(i, j);
            if (x.is_zero()) {
                continue;
            }
            for (size_t k = 0; k < b.rows(); ++k) {
                for (size_t l = 0; l < b.cols(); ++l) {
                    Gf4 y = b.get(k, l);
                    if (!y.is_zero()) {
                        out.set(i * b.rows() + k, j * b.cols() + l, x * y);
                    }
                }
            }
        }
    }
    return out;
}

Gf4Echelon reduced_row_echelon(Gf4Matrix m) {
    Gf4Echelon out;
    size_t next = 0;
    for (size_t c = 0; c < m.cols() && next < m.rows(); ++c) {
        size_t p = next;
        while (p < m.rows() && m.get(p, c).is_zero()) {
            ++p;
        }
        if (p == m.rows()) {
            continue;
        }
        m.swap_rows(p, next);
        m.scale_row(next, m.get(next, c).inverse());
        for (size_t r = 0; r < m.rows(); ++r) {
            Gf4 x = m.get(r, c);
            if (r != next && !x.is_zero()) {
                m.add_scaled_row(next, r, x);
            }
        }
        out.pivots.push_back(c);
        ++next;
    }
    out.reduced = std::move(m);
    return out;
}

size_t rank(const Gf4Matrix &m) {
    return reduced_row_echelon(m).pivots.size();
}

Gf4Matrix row_space_basis(const Gf4Matrix &m) {
    Gf4Echelon e = reduced_row_echelon(m);
    return e.reduced.submatrix(0, 0, e.pivots.size(), m.cols());
}

Gf4Matrix kernel_basis(const Gf4Matrix &m) {
    Gf4Echelon e = reduced_row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : e.pivots) {
        is_pivot[p] = true;
    }
    Gf4Matrix vectors(0, m.cols());
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        // Characteristic 2: x_pivot = -R[i][f] = R[i][f].
        Gf4Vector v(m.cols());
        v.set(f, Gf4::one());
        for (size_t i = 0; i < e.pivots.size(); ++i) {
            v.set(e.pivots[i], e.reduced.get(i, f));
        }
        vectors.append_row(v);
    }
    return row_space_basis(vectors);
}

Gf4Matrix image_basis(const Gf4Matrix &m) {
    return row_space_basis(m.transposed());
}

bool in_span(const Gf4Vector &v, const Gf4Matrix &basis_rows) {
    if (v.size() != basis_rows.cols()) {
        throw DimensionError("vector length does not match basis ambient dimension");
    }
    Gf4Span span;
    for (size_t r = 0; r < basis_rows.rows(); ++r) {
        span.insert(basis_rows.row(r));
    }
    return span.contains(v);
}

bool same_span(const Gf4Matrix &a, const Gf4Matrix &b) {
    if (a.cols() != b.cols()) {
        throw DimensionError("ambient dimension mismatch");
    }
    return row_space_basis(a) == row_space_basis(b);
}

bool is_self_orthogonal(const Gf4Matrix &basis_rows) {
    for (size_t i = 0; i < basis_rows.rows(); ++i) {
        Gf4Vector f = basis_rows.row(i);
        for (size_t j = i; j < basis_rows.rows(); ++j) {
            if (!hermitian_inner(f, basis_rows.row(j)).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

Gf4Boundary::Gf4Boundary(Gf4Matrix delta) : delta_(std::move(delta)) {
    if (delta_.rows() != delta_.cols()) {
        throw PreconditionError("GF(4) boundary operator must be square");
    }
    if (!(delta_.adjoint() == delta_)) {
        throw PreconditionError("GF(4) boundary operator must be self-adjoint");
    }
    if (!(delta_ * delta_).is_zero()) {
        throw PreconditionError("GF(4) boundary operator must satisfy delta^2 = 0");
    }
    rank_ = homprod::rank(delta_);
}

Gf4Boundary gf4_boundary_from_checks(const Gf4Matrix &basis_rows, const Gf4Matrix &u) {
    size_t m = basis_rows.rows();
    if (u.rows() != m || u.cols() != m) {
        throw DimensionError("U must be m x m for an m-vector basis");
    }
    if (!is_self_orthogonal(basis_rows)) {
        throw PreconditionError("check basis is not self-orthogonal");
    }
    if (!(u.adjoint() == u)) {
        throw PreconditionError("U is not self-adjoint");
    }
    if (rank(u) != m) {
        throw PreconditionError("U is singular");
    }
    if (rank(basis_rows) != m) {
        throw PreconditionError("check basis is linearly dependent");
    }
    // Column i of A is a^i, so sum_ij U_ij a^i conj(a^j)^T = A U A*.
    Gf4Matrix a = basis_rows.transposed();
    return Gf4Boundary(a * u * a.adjoint());
}

std::vector<Gf4Matrix> enumerate_selfadjoint_invertible(size_t m) {
    if (m > 3) {
        throw ResourceError("self-adjoint enumeration is brute force over 4^(m^2); m <= 3 supported");
    }
    std::vector<Gf4Matrix> out;
    uint64_t total = uint64_t{1} << (2 * m * m);
    for (uint64_t code = 0; code < total; ++code) {
        Gf4Matrix u(m, m);
        // Entry (0,0) is the most significant base-4 digit.
        for (size_t i = 0; i < m * m; ++i) {
            u.set(i / m, i % m, Gf4(uint8_t(code >> (2 * (m * m - 1 - i)))));
        }
        if (u.adjoint() == u && rank(u) == m) {
            out.push_back(std::move(u));
        }
    }
    return out;
}

Gf4Boundary gf4_product(const Gf4Boundary &d1, const Gf4Boundary &d2) {
    Gf4Matrix p = kron(d1.matrix(), Gf4Matrix::identity(d2.dim()));
    p += kron(Gf4Matrix::identity(d1.dim()), d2.matrix());
    return Gf4Boundary(std::move(p));
}

namespace {

detail::SweepProblem gf4_problem(const Gf4Boundary &d, uint64_t budget) {
    if (d.hom_dim() == 0) {
        throw NoLogicalsError("GF(4) boundary operator has H = 0; the code has no logical qubits");
    }
    size_t n = d.dim();
    Gf4Matrix image = image_basis(d.matrix());
    Gf4Matrix kernel = kernel_basis(d.matrix());

    // Homology representatives: kernel basis vectors independent of the image, lowest index first.
    Gf4Span span;
    for (size_t r = 0; r < image.rows(); ++r) {
        span.insert(image.row(r));
    }
    std::vector<Gf4Vector> reps;
    for (size_t r = 0; r < kernel.rows(); ++r) {
        Gf4Vector v = kernel.row(r);
        if (span.insert(v)) {
            reps.push_back(v);
        }
    }
    size_t h = reps.size();
    // Refuse before materializing the (4^h - 1) / 3 projective coset representatives.
    size_t gens = 2 * image.rows();
    if (2 * h + gens >= 62 || (((uint64_t{1} << (2 * h)) - 1) / 3) << gens > budget) {
        throw ResourceError("GF(4) enumeration needs (4^" + std::to_string(h) + " - 1) / 3 x 2^" +
                            std::to_string(gens) + " steps, over the budget of " + std::to_string(budget));
    }

    detail::SweepProblem p;
    p.length = n;
    p.planes = 2;
    p.words_per_plane = words_for_bits(n);
    for (size_t r = 0; r < image.rows(); ++r) {
        Gf4Vector g = image.row(r);
        p.generators.push_back(flat_words(g));
        p.generators.push_back(flat_words(g.scaled(Gf4::omega())));
    }
    // Projective labels: coefficient vectors whose first nonzero entry is 1.
    for (uint64_t label = 1; label < (uint64_t{1} << (2 * h)); ++label) {
        size_t lead = 0;
        while (((label >> (2 * lead)) & 3) == 0) {
            ++lead;
        }
        if (((label >> (2 * lead)) & 3) != 1) {
            continue;
        }
        Gf4Vector rep(n);
        for (size_t i = 0; i < h; ++i) {
            Gf4 c(uint8_t(label >> (2 * i)));
            if (!c.is_zero()) {
                rep += reps[i].scaled(c);
            }
        }
        p.coset_reps.push_back(flat_words(rep));
    }
    return p;
}

void gf4_check_budget(const detail::SweepProblem &p, uint64_t budget) {
    uint64_t need = detail::sweep_size(p);
    if (need > budget) {
        throw ResourceError("GF(4) enumeration needs " + std::to_string(p.coset_reps.size()) + " x 2^" +
                            std::to_string(p.generators.size()) + " = " + std::to_string(need) +
                            " steps, over the budget of " + std::to_string(budget));
    }
}

void gf4_verify_witness(const Gf4Boundary &d, const Gf4Vector &w) {
    if (!(d.matrix() * w).is_zero() || in_span(w, image_basis(d.matrix()))) {
        throw std::logic_error("GF(4) distance witness failed re-verification");
    }
}

}  // namespace

Gf4DistanceResult gf4_distance(const Gf4Boundary &d, const SearchOptions &options) {
    auto start = std::chrono::steady_clock::now();
    auto p = gf4_problem(d, options.budget);
    gf4_check_budget(p, options.budget);
    auto r = detail::sweep_minimum(p, options.threads);
    Gf4DistanceResult out;
    out.d = r.weight;
    out.witness = from_flat(d.dim(), r.vector);
    out.cosets_scanned = r.cosets_scanned;
    out.steps = r.steps;
    gf4_verify_witness(d, out.witness);
    out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

std::optional<Gf4Vector> gf4_distance_upper_bound(const Gf4Boundary &d, size_t bound,
                                                  const SearchOptions &options) {
    auto p = gf4_problem(d, options.budget);
    gf4_check_budget(p, options.budget);
    auto r = detail::sweep_first_at_most(p, bound, options.threads);
    if (!r.found) {
        return std::nullopt;
    }
    Gf4Vector w = from_flat(d.dim(), r.vector);
    gf4_verify_witness(d, w);
    return w;
}

Gf4Matrix five_qubit_basis() {
    return Gf4Matrix::from_strings({"0wWWw", "w0wWW"});
}

Gf4Matrix steane_basis_gf4() {
    return Gf4Matrix::from_binary(steane_basis().vectors());
}

}  // namespace homprod

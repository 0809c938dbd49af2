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

#include "homprod/circuit.h"

#include "homprod/errors.h"

namespace homprod {

std::vector<ElementaryOp> decompose_invertible(const BitMatrix &u) {
    size_t m = u.rows();
    if (u.cols() != m) {
        throw DimensionError("decompose_invertible needs a square matrix");
    }
    // Reduce u to the identity with row additions R_k ... R_1 u = I. Each R is its own inverse, so
    // u = R_1 R_2 ... R_k and the ops come out in application order.
    BitMatrix w = u;
    std::vector<ElementaryOp> ops;
    for (size_t c = 0; c < m; ++c) {
        if (!w.get(c, c)) {
            size_t p = c + 1;
            while (p < m && !w.get(p, c)) {
                ++p;
            }
            if (p == m) {
                throw PreconditionError("matrix is singular");
            }
            w.add_row(p, c);
            ops.push_back({p, c});
        }
        for (size_t r = 0; r < m; ++r) {
            if (r != c && w.get(r, c)) {
                w.add_row(c, r);
                ops.push_back({c, r});
            }
        }
    }
    return ops;
}

BitMatrix recompose(const std::vector<ElementaryOp> &ops, size_t m) {
    BitMatrix out = BitMatrix::identity(m);
    // Left-multiplying by E(op) adds row src to row dst; build the product from the right.
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        if (it->src >= m || it->dst >= m || it->src == it->dst) {
            throw InvalidParameter("elementary op out of range");
        }
        out.add_row(it->src, it->dst);
    }
    return out;
}

std::string tag_name(QubitTag tag) {
    switch (tag) {
        case QubitTag::Data:
            return "data";
        case QubitTag::Zero:
            return "zero";
        case QubitTag::Plus:
            return "plus";
        case QubitTag::EprA:
            return "epr_a";
        case QubitTag::EprB:
            return "epr_b";
    }
    return "";
}

QubitTag parse_tag(const std::string &name) {
    for (QubitTag t : {QubitTag::Data, QubitTag::Zero, QubitTag::Plus, QubitTag::EprA, QubitTag::EprB}) {
        if (tag_name(t) == name) {
            return t;
        }
    }
    throw InvalidParameter("unknown qubit tag '" + name + "'");
}

size_t EncodingCircuit::data_qubits() const {
    size_t count = 0;
    for (const auto &q : init) {
        count += q.tag == QubitTag::Data;
    }
    return count;
}

void EncodingCircuit::validate() const {
    if (init.size() != n_qubits) {
        throw InvalidParameter("init pattern must cover every qubit");
    }
    for (size_t q = 0; q < n_qubits; ++q) {
        const auto &i = init[q];
        if (i.tag != QubitTag::EprA && i.tag != QubitTag::EprB) {
            continue;
        }
        QubitTag mate = i.tag == QubitTag::EprA ? QubitTag::EprB : QubitTag::EprA;
        if (i.partner >= n_qubits || i.partner == q || init[i.partner].tag != mate || init[i.partner].partner != q) {
            throw InvalidParameter("EPR qubit " + std::to_string(q) + " has no matching partner");
        }
    }
    for (const auto &g : gates) {
        if (g.control >= n_qubits || g.target >= n_qubits || g.control == g.target) {
            throw InvalidParameter("CNOT(" + std::to_string(g.control) + ", " + std::to_string(g.target) +
                                   ") is out of range");
        }
    }
}

PauliTableau PauliTableau::from_init(const EncodingCircuit &c) {
    c.validate();
    size_t n = c.n_qubits;
    PauliTableau t(n);
    BitVector none(n);
    for (size_t q = 0; q < n; ++q) {
        const auto &i = c.init[q];
        switch (i.tag) {
            case QubitTag::Zero:
                t.append(none, BitVector::unit(n, q));
                break;
            case QubitTag::Plus:
                t.append(BitVector::unit(n, q), none);
                break;
            case QubitTag::EprA: {
                BitVector pair = BitVector::unit(n, q) ^ BitVector::unit(n, i.partner);
                t.append(pair, none);
                t.append(none, pair);
                break;
            }
            default:
                break;
        }
    }
    return t;
}

void PauliTableau::append(const BitVector &x, const BitVector &z) {
    x_.append_row(x);
    z_.append_row(z);
}

void PauliTableau::apply_cnot(size_t control, size_t target) {
    for (size_t r = 0; r < rows(); ++r) {
        if (x_.get(r, control)) {
            x_.flip(r, target);
        }
        if (z_.get(r, target)) {
            z_.flip(r, control);
        }
    }
}

namespace {

// The circuit for u on qubits offset + stride * i. Left-multiplying Z-vectors by E(src -> dst) is the
// conjugation z_dst ^= z_src, i.e. CNOT(dst, src); the first gate applied is the rightmost factor.
void append_factor_gates(const std::vector<ElementaryOp> &ops, size_t offset, size_t stride,
                         std::vector<Cnot> &gates) {
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        gates.push_back({offset + stride * it->dst, offset + stride * it->src});
    }
}

enum class Block { One, Two, Three };

Block block_of(size_t i, size_t h, size_t l) {
    if (i < h) {
        return Block::One;
    }
    return i < h + l ? Block::Two : Block::Three;
}

}  // namespace

EncodingCircuit drop_idle_gates(EncodingCircuit c, const BitMatrix &delta) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t g = 0; g < c.gates.size();) {
            EncodingCircuit trial = c;
            trial.gates.erase(trial.gates.begin() + long(g));
            if (verify_encoder(trial, delta)) {
                c = std::move(trial);
                changed = true;
            } else {
                ++g;
            }
        }
    }
    return c;
}

EncodingCircuit factor_encoder(const BoundaryOperator &d) {
    size_t m = d.dim();
    size_t h = d.hom_dim();
    size_t l = d.rank();
    EncodingCircuit c;
    c.n_qubits = m;
    c.init.resize(m);
    for (size_t i = 0; i < m; ++i) {
        Block b = block_of(i, h, l);
        c.init[i].tag = b == Block::One ? QubitTag::Data : (b == Block::Two ? QubitTag::Zero : QubitTag::Plus);
    }
    append_factor_gates(decompose_invertible(canonical_witness(d)), 0, 1, c.gates);
    return drop_idle_gates(std::move(c), d.matrix());
}

EncodingCircuit product_encoder(const ProductComplex &p) {
    size_t m1 = p.first.dim();
    size_t m2 = p.second.dim();
    size_t h1 = p.first.hom_dim();
    size_t l1 = p.first.rank();
    size_t h2 = p.second.hom_dim();
    size_t l2 = p.second.rank();
    EncodingCircuit c;
    c.n_qubits = m1 * m2;
    c.init.resize(c.n_qubits);
    for (size_t i = 0; i < m1; ++i) {
        for (size_t j = 0; j < m2; ++j) {
            Block bi = block_of(i, h1, l1);
            Block bj = block_of(j, h2, l2);
            QubitInit &q = c.init[i * m2 + j];
            if (bi == Block::One && bj == Block::One) {
                q.tag = QubitTag::Data;
            } else if (bi == Block::Three && bj == Block::Two) {
                // Pairs (B2 p, B3 q) <-> (B3 p, B2 q) carry both XX and ZZ.
                size_t pp = i - h1 - l1;
                size_t qq = j - h2;
                q.tag = QubitTag::EprB;
                q.partner = (h1 + pp) * m2 + (h2 + l2 + qq);
            } else if (bi == Block::Two && bj == Block::Three) {
                size_t pp = i - h1;
                size_t qq = j - h2 - l2;
                q.tag = QubitTag::EprA;
                q.partner = (h1 + l1 + pp) * m2 + (h2 + qq);
            } else if (bi == Block::Three || bj == Block::Three) {
                q.tag = QubitTag::Plus;
            } else {
                q.tag = QubitTag::Zero;
            }
        }
    }
    auto ops1 = decompose_invertible(canonical_witness(p.first));
    auto ops2 = decompose_invertible(canonical_witness(p.second));
    for (size_t i = 0; i < m1; ++i) {
        append_factor_gates(ops2, i * m2, 1, c.gates);
    }
    for (size_t j = 0; j < m2; ++j) {
        append_factor_gates(ops1, j, m2, c.gates);
    }
    return drop_idle_gates(std::move(c), p.partial.matrix());
}

bool verify_encoder(const EncodingCircuit &c, const BitMatrix &delta) {
    if (delta.rows() != delta.cols() || delta.rows() != c.n_qubits) {
        throw DimensionError("circuit has " + std::to_string(c.n_qubits) + " qubits but the operator has dimension " +
                             std::to_string(delta.rows()));
    }
    PauliTableau t = PauliTableau::from_init(c);
    for (const auto &g : c.gates) {
        t.apply_cnot(g.control, g.target);
    }
    BitMatrix z_rows(0, c.n_qubits);
    BitMatrix x_rows(0, c.n_qubits);
    for (size_t r = 0; r < t.rows(); ++r) {
        bool has_x = !t.x_part().row(r).is_zero();
        bool has_z = !t.z_part().row(r).is_zero();
        if (has_x && has_z) {
            return false;
        }
        if (has_z) {
            z_rows.append_row(t.z_part().row(r));
        } else {
            x_rows.append_row(t.x_part().row(r));
        }
    }
    size_t r = rank(delta);
    return c.data_qubits() == c.n_qubits - 2 * r &&
           same_span(row_space_basis(z_rows), image_basis(delta)) &&
           same_span(row_space_basis(x_rows), image_basis(delta.transposed()));
}

bool verify_encoder(const EncodingCircuit &c, const BoundaryOperator &d) {
    return verify_encoder(c, d.matrix());
}

bool verify_encoder(const EncodingCircuit &c, const ProductComplex &p) {
    return verify_encoder(c, p.partial.matrix());
}

}  // namespace homprod

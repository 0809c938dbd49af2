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

#ifndef HOMPROD_CIRCUIT_H
#define HOMPROD_CIRCUIT_H

#include <cstddef>
#include <string>
#include <vector>

#include "homprod/bit_matrix.h"
#include "homprod/chain_complex.h"
#include "homprod/homological_product.h"

namespace homprod {

/// "Add row src to row dst": the elementary matrix I + e_dst e_src^T.
struct ElementaryOp {
    size_t src;
    size_t dst;
    bool operator==(const ElementaryOp &) const = default;
};

/// Ops with u = E(ops[0]) E(ops[1]) ... E(ops.back()), found by Gauss-Jordan elimination in column order.
/// A zero pivot is repaired by adding a lower row rather than swapping, so the length is at most M^2.
/// Throws PreconditionError for singular input.
std::vector<ElementaryOp> decompose_invertible(const BitMatrix &u);

/// The product E(ops[0]) ... E(ops.back()) of m x m elementary matrices.
BitMatrix recompose(const std::vector<ElementaryOp> &ops, size_t m);

enum class QubitTag { Data, Zero, Plus, EprA, EprB };

std::string tag_name(QubitTag tag);
/// Parses "data", "zero", "plus", "epr_a", "epr_b".
QubitTag parse_tag(const std::string &name);

struct QubitInit {
    QubitTag tag = QubitTag::Data;
    /// The other half of an EPR pair; unused otherwise.
    size_t partner = 0;
    bool operator==(const QubitInit &) const = default;
};

struct Cnot {
    size_t control;
    size_t target;
    bool operator==(const Cnot &) const = default;
};

/// Initial product state (|0>, |+>, EPR pairs, free data qubits) followed by a CNOT network.
struct EncodingCircuit {
    size_t n_qubits = 0;
    std::vector<QubitInit> init;
    std::vector<Cnot> gates;

    size_t data_qubits() const;
    /// Throws InvalidParameter if the tags or gates are malformed (unpaired EPR halves, out-of-range qubits).
    void validate() const;
    bool operator==(const EncodingCircuit &) const = default;
};

/// Pauli rows on n qubits, tracked through Clifford conjugation. Phases are not tracked.
class PauliTableau {
   public:
    explicit PauliTableau(size_t n_qubits) : x_(0, n_qubits), z_(0, n_qubits) {
    }
    /// Stabilizer generators of the initial state: Z on zero, X on plus, XX and ZZ on each EPR pair.
    static PauliTableau from_init(const EncodingCircuit &c);

    void append(const BitVector &x, const BitVector &z);
    /// Conjugation by CNOT(c, t): X_c -> X_c X_t and Z_t -> Z_c Z_t.
    void apply_cnot(size_t control, size_t target);

    size_t rows() const {
        return x_.rows();
    }
    const BitMatrix &x_part() const {
        return x_;
    }
    const BitMatrix &z_part() const {
        return z_;
    }

   private:
    BitMatrix x_;
    BitMatrix z_;
};

/// Removes, one at a time until none is left, every gate whose deletion still passes verify_encoder. Such gates
/// act trivially on the initialized state (e.g. a CNOT whose control starts in |0>), so afterwards every single
/// deletion changes the prepared stabilizer group.
EncodingCircuit drop_idle_gates(EncodingCircuit c, const BitMatrix &delta);

/// Canonical initialization (H data, L zero, L plus in the block order of delta_0) followed by the CNOT
/// realization of the canonical witness U, which maps Z-type vectors z -> U z. Idle gates are dropped.
EncodingCircuit factor_encoder(const BoundaryOperator &d);

/// Canonical product-code initialization on the M1 x M2 grid, then U_2's circuit on every row and U_1's circuit
/// on every column, so that Z-type grids transform as Z -> U_1 Z U_2^T. Idle gates are dropped.
EncodingCircuit product_encoder(const ProductComplex &p);

/// True iff the propagated initial stabilizers span exactly im delta (Z type) and im delta^T (X type) and the
/// circuit leaves dim - 2 rank(delta) data qubits. Throws DimensionError on a size mismatch.
bool verify_encoder(const EncodingCircuit &c, const BitMatrix &delta);
bool verify_encoder(const EncodingCircuit &c, const BoundaryOperator &d);
bool verify_encoder(const EncodingCircuit &c, const ProductComplex &p);

}  // namespace homprod

#endif

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

#include "homprod/io.h"

#include <filesystem>
#include <functional>

#include "gtest/gtest.h"
#include "homprod/errors.h"
#include "homprod/homological_product.h"

using namespace homprod;

namespace {

size_t parse_error_line(const std::function<void()> &f) {
    try {
        f();
    } catch (const ParseError &e) {
        return e.line;
    }
    return 0;
}

}  // namespace

TEST(io, matrix_round_trip) {
    std::mt19937_64 rng(181);
    for (size_t trial = 0; trial < 50; ++trial) {
        BitMatrix m = BitMatrix::uniform_random(rng() % 9, rng() % 130, rng);
        ASSERT_EQ(parse_matrix(format_matrix(m)), m);
    }
    ASSERT_EQ(format_matrix(BitMatrix::from_strings({"101", "010"})), "GF2 2 3\n101\n010\n");
}

TEST(io, comments_and_blank_lines_are_skipped) {
    BitMatrix m = parse_matrix("# a comment\n\nGF2 2 2\n# inside\n10\n\n01\n");
    ASSERT_EQ(m, BitMatrix::identity(2));
}

TEST(io, matrix_errors_carry_line_numbers) {
    ASSERT_EQ(parse_error_line([] { parse_matrix("GF3 2 2\n10\n01\n"); }), 1);
    ASSERT_EQ(parse_error_line([] { parse_matrix("GF2 2 2\n10\n011\n"); }), 3);
    ASSERT_EQ(parse_error_line([] { parse_matrix("GF2 2 2\n10\n0x\n"); }), 3);
    ASSERT_EQ(parse_error_line([] { parse_matrix("# c\nGF2 2 2\n10\n"); }), 3);
    ASSERT_EQ(parse_error_line([] { parse_matrix("GF2 1 2\n10\n11\n"); }), 3);
    ASSERT_EQ(parse_error_line([] { parse_matrix("GF2 -1 2\n"); }), 1);
}

TEST(io, boundary_round_trip) {
    std::mt19937_64 rng(191);
    BoundaryOperator d = random_boundary(9, 3, rng);
    std::string text = format_boundary(d);
    ASSERT_EQ(text.rfind("# boundary H=3\n", 0), 0);
    ASSERT_EQ(parse_boundary(text), d);
    // Not square-zero.
    ASSERT_THROW(parse_boundary("GF2 2 2\n10\n01\n"), ParseError);
}

TEST(io, gf4_round_trip) {
    Gf4Matrix m = Gf4Matrix::from_strings({"01wW", "W0w1"});
    std::string text = format_gf4_matrix(m);
    ASSERT_EQ(text, "GF4 2 4\n01wW\nW0w1\n");
    ASSERT_EQ(parse_gf4_matrix(text), m);
    ASSERT_EQ(parse_error_line([] { parse_gf4_matrix("GF4 1 2\n0x\n"); }), 2);
}

TEST(io, css_round_trip) {
    std::mt19937_64 rng(193);
    CssCode c = code_from_complex(random_boundary(10, 2, rng));
    CssCode back = parse_css(format_css(c));
    ASSERT_EQ(back.a_z, c.a_z);
    ASSERT_EQ(back.a_x, c.a_x);
    ASSERT_EQ(back.k, c.k);
    ASSERT_EQ(parse_error_line([] { parse_css("CSS m=3\n"); }), 1);
    // Checks that do not commute.
    ASSERT_EQ(parse_error_line([] { parse_css("CSS n=2\nGF2 1 2\n10\nGF2 1 2\n11\n"); }), 4);
    // Zero-column blocks are allowed in principle.
    CssCode empty = parse_css("CSS n=0\nGF2 0 0\nGF2 0 0\n");
    ASSERT_EQ(empty.n, 0);
}

TEST(io, circuit_round_trip) {
    std::mt19937_64 rng(197);
    ProductComplex p = product(random_boundary(5, 1, rng), random_boundary(4, 2, rng));
    EncodingCircuit c = product_encoder(p);
    ASSERT_EQ(parse_circuit(format_circuit(c)), c);
    EncodingCircuit small = parse_circuit("QUBITS 3\nINIT 0 zero\nINIT 1 epr_a 2\nINIT 2 epr_b 1\nCNOT 0 1\n");
    ASSERT_EQ(small.n_qubits, 3);
    ASSERT_EQ(small.gates.size(), 1);
    ASSERT_EQ(parse_error_line([] { parse_circuit("QUBITS 2\nCNOT 0 1\nINIT 0 zero\n"); }), 3);
    ASSERT_EQ(parse_error_line([] { parse_circuit("QUBITS 2\nINIT 5 zero\n"); }), 2);
    ASSERT_EQ(parse_error_line([] { parse_circuit("QUBITS 2\nHADAMARD 0\n"); }), 2);
    ASSERT_EQ(parse_error_line([] { parse_circuit("QUBITS 2\nINIT 0 zero 1\n"); }), 2);
}

TEST(io, files) {
    auto path = std::filesystem::temp_directory_path() / "homprod_io_test.mat";
    write_text_file(path.string(), "GF2 1 1\n1\n");
    ASSERT_EQ(parse_matrix(read_text_file(path.string())), BitMatrix::identity(1));
    std::filesystem::remove(path);
    ASSERT_THROW(read_text_file("/nonexistent/homprod.mat"), std::runtime_error);
}

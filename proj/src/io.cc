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

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "homprod/errors.h"

namespace homprod {

namespace {

// Splits text into lines and hands out the meaningful ones with their line numbers.
class LineReader {
   public:
    explicit LineReader(std::string_view text) {
        size_t number = 0;
        size_t start = 0;
        // A trailing newline terminates the last line rather than starting an empty one.
        while (start < text.size() || (start == 0 && text.empty())) {
            size_t end = text.find('\n', start);
            if (end == std::string_view::npos) {
                end = text.size();
            }
            std::string_view line = text.substr(start, end - start);
            ++number;
            if (!line.empty() && line.back() == '\r') {
                line.remove_suffix(1);
            }
            size_t first = line.find_first_not_of(" \t");
            if (first != std::string_view::npos && line[first] != '#') {
                size_t last = line.find_last_not_of(" \t");
                lines_.push_back({number, line.substr(first, last - first + 1)});
            }
            last_line_ = number;
            start = end + 1;
        }
    }

    bool done() const {
        return next_ == lines_.size();
    }
    /// Line number of the next meaningful line, or the last line of the text at the end.
    size_t line_number() const {
        return done() ? last_line_ : lines_[next_].number;
    }
    std::string_view next(const std::string &expecting) {
        if (done()) {
            throw ParseError(last_line_, "unexpected end of input, expected " + expecting);
        }
        return lines_[next_++].text;
    }

   private:
    struct Line {
        size_t number;
        std::string_view text;
    };
    std::vector<Line> lines_;
    size_t next_ = 0;
    size_t last_line_ = 1;
};

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
            ++i;
        }
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
            ++i;
        }
        if (i > start) {
            words.push_back(line.substr(start, i - start));
        }
    }
    return words;
}

size_t parse_count(std::string_view word, size_t line, const std::string &what) {
    size_t value = 0;
    auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || end != word.data() + word.size()) {
        throw ParseError(line, "expected a non-negative integer for " + what + ", got '" + std::string(word) + "'");
    }
    return value;
}

// Reads "<keyword> <rows> <cols>" and returns the shape.
std::pair<size_t, size_t> read_header(LineReader &in, const std::string &keyword) {
    size_t line = in.line_number();
    auto words = split_words(in.next("a '" + keyword + "' header"));
    if (words.size() != 3 || words[0] != keyword) {
        throw ParseError(line, "expected '" + keyword + " <rows> <cols>'");
    }
    return {parse_count(words[1], line, "rows"), parse_count(words[2], line, "cols")};
}

BitMatrix read_gf2_block(LineReader &in) {
    auto [rows, cols] = read_header(in, "GF2");
    BitMatrix m(rows, cols);
    // Rows of a zero-column matrix are empty lines, which the reader skips.
    for (size_t r = 0; r < rows && cols > 0; ++r) {
        size_t line = in.line_number();
        std::string_view text = in.next("matrix row " + std::to_string(r));
        if (text.size() != cols) {
            throw ParseError(line, "row has " + std::to_string(text.size()) + " entries, expected " +
                                       std::to_string(cols));
        }
        for (size_t c = 0; c < cols; ++c) {
            if (text[c] == '1') {
                m.set(r, c);
            } else if (text[c] != '0') {
                throw ParseError(line, std::string("invalid GF(2) entry '") + text[c] + "'");
            }
        }
    }
    return m;
}

void expect_end(LineReader &in) {
    if (!in.done()) {
        throw ParseError(in.line_number(), "unexpected trailing content");
    }
}

}  // namespace

std::string format_matrix(const BitMatrix &m) {
    std::string out = "GF2 " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    out += m.str();
    return out;
}

BitMatrix parse_matrix(std::string_view text) {
    LineReader in(text);
    BitMatrix m = read_gf2_block(in);
    expect_end(in);
    return m;
}

std::string format_boundary(const BoundaryOperator &d) {
    return "# boundary H=" + std::to_string(d.hom_dim()) + "\n" + format_matrix(d.matrix());
}

BoundaryOperator parse_boundary(std::string_view text) {
    BitMatrix m = parse_matrix(text);
    try {
        return BoundaryOperator(std::move(m));
    } catch (const PreconditionError &e) {
        throw ParseError(1, std::string("not a boundary operator: ") + e.what());
    }
}

std::string format_gf4_matrix(const Gf4Matrix &m) {
    return "GF4 " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n" + m.str();
}

Gf4Matrix parse_gf4_matrix(std::string_view text) {
    LineReader in(text);
    auto [rows, cols] = read_header(in, "GF4");
    Gf4Matrix m(rows, cols);
    for (size_t r = 0; r < rows && cols > 0; ++r) {
        size_t line = in.line_number();
        std::string_view row = in.next("matrix row " + std::to_string(r));
        if (row.size() != cols) {
            throw ParseError(line, "row has " + std::to_string(row.size()) + " entries, expected " +
                                       std::to_string(cols));
        }
        for (size_t c = 0; c < cols; ++c) {
            try {
                m.set(r, c, Gf4::from_symbol(row[c]));
            } catch (const InvalidParameter &e) {
                throw ParseError(line, e.what());
            }
        }
    }
    expect_end(in);
    return m;
}

std::string format_css(const CssCode &c) {
    return "CSS n=" + std::to_string(c.n) + "\n# Z checks\n" + format_matrix(c.a_z) + "# X checks\n" +
           format_matrix(c.a_x);
}

CssCode parse_css(std::string_view text) {
    LineReader in(text);
    size_t line = in.line_number();
    std::string_view header = in.next("a 'CSS n=<n>' header");
    if (!header.starts_with("CSS n=")) {
        throw ParseError(line, "expected 'CSS n=<n>'");
    }
    size_t n = parse_count(header.substr(6), line, "n");
    size_t z_line = in.line_number();
    BitMatrix a_z = read_gf2_block(in);
    size_t x_line = in.line_number();
    BitMatrix a_x = read_gf2_block(in);
    expect_end(in);
    if (a_z.cols() != n) {
        throw ParseError(z_line, "Z-check matrix has " + std::to_string(a_z.cols()) + " columns, expected " +
                                     std::to_string(n));
    }
    if (a_x.cols() != n) {
        throw ParseError(x_line, "X-check matrix has " + std::to_string(a_x.cols()) + " columns, expected " +
                                     std::to_string(n));
    }
    try {
        return CssCode::from_checks(std::move(a_z), std::move(a_x));
    } catch (const PreconditionError &e) {
        throw ParseError(x_line, e.what());
    }
}

std::string format_circuit(const EncodingCircuit &c) {
    std::ostringstream out;
    out << "QUBITS " << c.n_qubits << "\n";
    for (size_t q = 0; q < c.init.size(); ++q) {
        const auto &i = c.init[q];
        if (i.tag == QubitTag::Data) {
            continue;
        }
        out << "INIT " << q << " " << tag_name(i.tag);
        if (i.tag == QubitTag::EprA || i.tag == QubitTag::EprB) {
            out << " " << i.partner;
        }
        out << "\n";
    }
    for (const auto &g : c.gates) {
        out << "CNOT " << g.control << " " << g.target << "\n";
    }
    return out.str();
}

EncodingCircuit parse_circuit(std::string_view text) {
    LineReader in(text);
    size_t line = in.line_number();
    auto header = split_words(in.next("a 'QUBITS <n>' header"));
    if (header.size() != 2 || header[0] != "QUBITS") {
        throw ParseError(line, "expected 'QUBITS <n>'");
    }
    EncodingCircuit c;
    c.n_qubits = parse_count(header[1], line, "qubit count");
    c.init.resize(c.n_qubits);
    auto qubit = [&](std::string_view word, size_t at) {
        size_t q = parse_count(word, at, "qubit");
        if (q >= c.n_qubits) {
            throw ParseError(at, "qubit " + std::to_string(q) + " is out of range");
        }
        return q;
    };
    while (!in.done()) {
        line = in.line_number();
        auto words = split_words(in.next("a circuit line"));
        if (words[0] == "INIT") {
            if (!c.gates.empty()) {
                throw ParseError(line, "INIT lines must precede the gates");
            }
            if (words.size() != 3 && words.size() != 4) {
                throw ParseError(line, "expected 'INIT q <tag> [partner]'");
            }
            QubitInit &init = c.init[qubit(words[1], line)];
            try {
                init.tag = parse_tag(std::string(words[2]));
            } catch (const InvalidParameter &e) {
                throw ParseError(line, e.what());
            }
            bool paired = init.tag == QubitTag::EprA || init.tag == QubitTag::EprB;
            if (paired != (words.size() == 4)) {
                throw ParseError(line, paired ? "EPR tags need a partner" : "only EPR tags take a partner");
            }
            if (paired) {
                init.partner = qubit(words[3], line);
            }
        } else if (words[0] == "CNOT") {
            if (words.size() != 3) {
                throw ParseError(line, "expected 'CNOT c t'");
            }
            c.gates.push_back({qubit(words[1], line), qubit(words[2], line)});
        } else {
            throw ParseError(line, "unknown instruction '" + std::string(words[0]) + "'");
        }
    }
    try {
        c.validate();
    } catch (const InvalidParameter &e) {
        throw ParseError(line, e.what());
    }
    return c;
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string &path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out << contents;
    if (!out) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}

}  // namespace homprod

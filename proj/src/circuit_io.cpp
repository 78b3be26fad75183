#include "dqsim/circuit_io.hpp"

#include <fmt/format.h>

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "dqsim/common.hpp"

namespace dqsim {
namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;
    int column = 1;
};

[[noreturn]] void fail(const Cursor& cur, std::string_view what) {
    throw ParseError(fmt::format("parse error at line {}, column {}: {}", cur.line, cur.column, what));
}

struct Token {
    std::string_view text;
    int line;
    int column;
};

// Splits into whitespace-separated tokens, dropping "#" comments.
std::vector<Token> tokenize_line(std::string_view line, int line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
        out.push_back(Token{line.substr(start, i - start), line_no, static_cast<int>(start) + 1});
    }
    return out;
}

std::vector<std::vector<Token>> tokenize(std::string_view text) {
    std::vector<std::vector<Token>> lines;
    std::size_t begin = 0;
    int line_no = 1;
    while (begin <= text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string_view::npos) end = text.size();
        auto toks = tokenize_line(text.substr(begin, end - begin), line_no);
        if (!toks.empty()) lines.push_back(std::move(toks));
        begin = end + 1;
        ++line_no;
    }
    return lines;
}

int parse_int(const Token& t, std::string_view what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
        Cursor cur{.text = {}, .pos = 0, .line = t.line, .column = t.column};
        fail(cur, fmt::format("expected {}, got '{}'", what, t.text));
    }
    return value;
}

double parse_double(const Token& t, std::string_view payload, int extra_col, std::string_view what) {
    double value = 0;
    auto [ptr, ec] = std::from_chars(payload.data(), payload.data() + payload.size(), value);
    if (ec != std::errc{} || ptr != payload.data() + payload.size()) {
        Cursor cur{.text = {}, .pos = 0, .line = t.line, .column = t.column + extra_col};
        fail(cur, fmt::format("expected {}, got '{}'", what, payload));
    }
    return value;
}

}  // namespace

std::string serialize(const Circuit& c) {
    std::string out = fmt::format("qubits {}\n", c.n_qubits);
    for (const auto& g : c.gates) {
        out += kind_name(g.kind);
        if (has_phase_param(g.kind)) out += fmt::format(" phi={}", g.phi);
        for (int w : g.wires) out += fmt::format(" {}", w);
        out += '\n';
    }
    return out;
}

Circuit deserialize(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) {
        Cursor cur;
        fail(cur, "missing 'qubits' header");
    }
    const auto& header = lines.front();
    if (header[0].text != "qubits") {
        Cursor cur{.text = {}, .pos = 0, .line = header[0].line, .column = header[0].column};
        fail(cur, fmt::format("expected 'qubits', got '{}'", header[0].text));
    }
    if (header.size() != 2) {
        Cursor cur{.text = {}, .pos = 0, .line = header[0].line, .column = header[0].column};
        fail(cur, "header must be 'qubits N'");
    }
    int n = parse_int(header[1], "qubit count");
    if (n < 0) {
        Cursor cur{.text = {}, .pos = 0, .line = header[1].line, .column = header[1].column};
        fail(cur, "qubit count must be non-negative");
    }
    Circuit c(n);
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto& toks = lines[li];
        auto kind = kind_from_name(toks[0].text);
        if (!kind) {
            Cursor cur{.text = {}, .pos = 0, .line = toks[0].line, .column = toks[0].column};
            fail(cur, fmt::format("unknown gate '{}'", toks[0].text));
        }
        std::size_t next = 1;
        double phi = 0.0;
        if (has_phase_param(*kind)) {
            if (next >= toks.size() || !toks[next].text.starts_with("phi=")) {
                Cursor cur{.text = {}, .pos = 0, .line = toks[0].line, .column = toks[0].column};
                fail(cur, fmt::format("'{}' requires phi=<value>", toks[0].text));
            }
            phi = parse_double(toks[next], toks[next].text.substr(4), 4, "phase value");
            ++next;
        }
        std::vector<int> wires;
        for (; next < toks.size(); ++next) wires.push_back(parse_int(toks[next], "wire index"));
        if (wires.empty()) {
            Cursor cur{.text = {}, .pos = 0, .line = toks[0].line, .column = toks[0].column};
            fail(cur, fmt::format("'{}' requires at least one wire", toks[0].text));
        }
        try {
            c.add(*kind, std::move(wires), phi);
            validate_gate(c.gates.back(), c.n_qubits);
        } catch (const DomainError& e) {
            c.gates.pop_back();
            Cursor cur{.text = {}, .pos = 0, .line = toks[0].line, .column = toks[0].column};
            fail(cur, e.what());
        }
    }
    return c;
}

Circuit load_circuit(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(fmt::format("cannot open '{}'", path));
    std::ostringstream buf;
    buf << in.rdbuf();
    return deserialize(buf.str());
}

void save_circuit(const Circuit& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError(fmt::format("cannot open '{}'", path));
    out << serialize(c);
}

TruthTable parse_truth_table(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) {
        Cursor cur;
        fail(cur, "empty truth-table text");
    }
    const auto& head = lines.front();
    if (head[0].text == "target" || head[0].text == "hidden") {
        if (head.size() != 2) {
            Cursor cur{.text = {}, .pos = 0, .line = head[0].line, .column = head[0].column};
            fail(cur, fmt::format("'{}' requires a bit string", head[0].text));
        }
        BitString bits;
        try {
            bits = BitString::parse(head[1].text);
        } catch (const ParseError&) {
            Cursor cur{.text = {}, .pos = 0, .line = head[1].line, .column = head[1].column};
            fail(cur, fmt::format("invalid bit string '{}'", head[1].text));
        }
        return head[0].text == "target" ? point_function(bits) : hidden_string_function(bits);
    }
    if (head[0].text != "arity" || head.size() != 2) {
        Cursor cur{.text = {}, .pos = 0, .line = head[0].line, .column = head[0].column};
        fail(cur, "expected 'arity N', 'target <bits>', or 'hidden <bits>'");
    }
    int arity = parse_int(head[1], "arity");
    if (arity < 0 || arity > 24) {
        Cursor cur{.text = {}, .pos = 0, .line = head[1].line, .column = head[1].column};
        fail(cur, "arity out of range");
    }
    std::string row;
    for (std::size_t li = 1; li < lines.size(); ++li)
        for (const auto& t : lines[li]) row += t.text;
    const std::size_t want = std::size_t{1} << arity;
    if (row.size() != want) {
        Cursor cur{.text = {}, .pos = 0, .line = head[0].line, .column = head[0].column};
        fail(cur, fmt::format("expected {} table entries, got {}", want, row.size()));
    }
    std::vector<std::uint8_t> values(want);
    for (std::size_t i = 0; i < want; ++i) {
        if (row[i] != '0' && row[i] != '1') {
            Cursor cur{.text = {}, .pos = 0, .line = head[0].line, .column = head[0].column};
            fail(cur, fmt::format("table entries must be 0 or 1, got '{}'", row[i]));
        }
        values[i] = static_cast<std::uint8_t>(row[i] - '0');
    }
    return make_table(arity, std::move(values));
}

std::string format_truth_table(const TruthTable& f) {
    std::string out = fmt::format("arity {}\n", f.arity);
    for (auto v : f.values) out += static_cast<char>('0' + v);
    out += '\n';
    return out;
}

TruthTable load_truth_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(fmt::format("cannot open '{}'", path));
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_truth_table(buf.str());
}

}  // namespace dqsim

#include "teqset/text_format.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

namespace teqset {

FormatError::FormatError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    return lines;
}

std::string pair_text(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

Tournament parse_tournament(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw FormatError(1, "missing header line with the tournament order");

    const std::string_view header = lines[0];
    int order = 0;
    auto [end, ec] = std::from_chars(header.data(), header.data() + header.size(), order);
    if (header.empty() || ec != std::errc{} || end != header.data() + header.size()) {
        throw FormatError(1, "header must be a single integer, got '" + std::string(header) + "'");
    }
    if (order < 1 || order > kMaxOrder) {
        throw FormatError(1, "order must be in 1.." + std::to_string(kMaxOrder) + ", got " +
                                 std::to_string(order));
    }

    std::vector<AltSet> rows(order);
    for (int i = 0; i < order; ++i) {
        const int line_no = i + 2;
        if (static_cast<std::size_t>(i + 1) >= lines.size()) {
            throw FormatError(line_no, "expected row " + std::to_string(i) + ", found end of input");
        }
        const std::string_view row = lines[i + 1];
        if (row.size() != static_cast<std::size_t>(order)) {
            throw FormatError(line_no, "expected " + std::to_string(order) + " characters, got " +
                                           std::to_string(row.size()));
        }
        for (int j = 0; j < order; ++j) {
            if (row[j] == '1') {
                rows[i] = rows[i].with(j);
            } else if (row[j] != '0') {
                throw FormatError(line_no, "unexpected character '" + std::string(1, row[j]) +
                                               "' in column " + std::to_string(j + 1));
            }
        }
        if (rows[i].contains(i)) throw FormatError(line_no, "reflexive entry at " + pair_text(i, i));
    }
    for (std::size_t k = static_cast<std::size_t>(order) + 1; k < lines.size(); ++k) {
        if (!lines[k].empty()) {
            throw FormatError(static_cast<int>(k) + 1, "unexpected content after the last row");
        }
    }

    for (int i = 0; i < order; ++i) {
        for (int j = i + 1; j < order; ++j) {
            const bool ij = rows[i].contains(j);
            const bool ji = rows[j].contains(i);
            if (ij == ji) {
                throw FormatError(i + 2, std::string(ij ? "asymmetry" : "completeness") +
                                             " violated at " + pair_text(i, j));
            }
        }
    }
    return Tournament::from_out_sets(order, rows);
}

std::string serialize_tournament(const Tournament& t) {
    std::string out = std::to_string(t.order()) + "\n";
    out.reserve(out.size() + static_cast<std::size_t>(t.order()) * (t.order() + 1));
    for (int i = 0; i < t.order(); ++i) {
        for (int j = 0; j < t.order(); ++j) out += t.dominates(i, j) ? '1' : '0';
        out += '\n';
    }
    return out;
}

Tournament load_tournament(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_tournament(buffer.str());
}

void save_tournament(const Tournament& t, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize_tournament(t);
}

}  // namespace teqset

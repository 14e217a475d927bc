#include "equispec/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>

namespace equispec {

std::string format_number(double x) {
    if (x == 0.0) return "0";
    if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
    char buf[40];
    for (int p = 1; p <= 12; ++p) {
        std::snprintf(buf, sizeof buf, "%.*g", p, x);
        if (std::strtod(buf, nullptr) == x) return buf;
    }
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string format_complex(Complex z) {
    if (z.imag() == 0.0) return format_number(z.real());
    const std::string im = format_number(std::abs(z.imag()));
    const std::string re = z.real() == 0.0 ? "" : format_number(z.real());
    const char* sign = z.imag() < 0 ? "-" : (re.empty() ? "" : "+");
    return re + sign + im + "i";
}

namespace {

std::string strip_comment(std::string line) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    return line;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    for (std::string t; is >> t;) out.push_back(t);
    return out;
}

bool parse_double(const std::string& token, double& value) {
    const char* first = token.data();
    const char* last = first + token.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    return ec == std::errc() && ptr == last && std::isfinite(value);
}

}  // namespace

Matrix parse_matrix(std::istream& in) {
    std::vector<double> entries;
    std::size_t cols = 0, rows = 0, last_line = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = tokens_of(strip_comment(line));
        if (tokens.empty()) continue;
        if (rows == 0) {
            cols = tokens.size();
        } else if (tokens.size() != cols) {
            throw ParseError(line_no, "row has " + std::to_string(tokens.size()) + " entries, expected " +
                                          std::to_string(cols));
        }
        for (const auto& t : tokens) {
            double v = 0.0;
            if (!parse_double(t, v)) throw ParseError(line_no, "not a finite number: '" + t + "'");
            entries.push_back(v);
        }
        ++rows;
        last_line = line_no;
        if (rows > cols) throw ParseError(line_no, "more rows than columns (" + std::to_string(cols) + ")");
    }
    if (rows == 0) throw ParseError(0, "matrix file is empty");
    if (rows != cols) {
        throw ParseError(last_line, "matrix is " + std::to_string(rows) + "x" + std::to_string(cols) + ", not square");
    }
    return Matrix::from_row_major(rows, cols, std::move(entries));
}

Matrix parse_matrix_string(const std::string& text) {
    std::istringstream is(text);
    return parse_matrix(is);
}

std::string format_matrix(const Matrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += format_number(m(i, j));
        }
        out += '\n';
    }
    return out;
}

Partition parse_partition(std::istream& in, std::size_t n) {
    std::vector<Partition::Cell> cells;
    std::set<std::size_t> seen;
    std::size_t largest = 0;
    std::string line;
    std::size_t line_no = 0;

    auto add_cell = [&](const std::vector<std::string>& tokens) {
        Partition::Cell cell;
        for (const auto& t : tokens) {
            std::size_t v = 0;
            auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
            if (ec != std::errc() || ptr != t.data() + t.size() || v == 0) {
                throw ParseError(line_no, "not a positive index: '" + t + "'");
            }
            if (n && v > n) throw ParseError(line_no, "index " + t + " exceeds the order " + std::to_string(n));
            if (!seen.insert(v).second) throw ParseError(line_no, "index " + t + " listed twice");
            largest = std::max(largest, v);
            cell.push_back(v - 1);
        }
        if (cell.empty()) throw ParseError(line_no, "empty cell");
        cells.push_back(std::move(cell));
    };

    while (std::getline(in, line)) {
        ++line_no;
        line = strip_comment(line);
        if (line.find('{') == std::string::npos) {
            const auto tokens = tokens_of(line);
            if (!tokens.empty()) add_cell(tokens);
            continue;
        }
        // brace form, several cells on one line: {1} {2 3}
        std::size_t pos = 0;
        while ((pos = line.find('{', pos)) != std::string::npos) {
            const auto close = line.find('}', pos);
            if (close == std::string::npos) throw ParseError(line_no, "unclosed '{'");
            std::string body = line.substr(pos + 1, close - pos - 1);
            for (char& c : body)
                if (c == ',') c = ' ';
            add_cell(tokens_of(body));
            pos = close + 1;
        }
    }
    if (cells.empty()) throw ParseError(0, "partition file is empty");
    const std::size_t order = n ? n : largest;
    for (std::size_t v = 1; v <= order; ++v)
        if (!seen.count(v)) throw ParseError(0, "index " + std::to_string(v) + " is not in any cell");
    return Partition(order, std::move(cells));
}

Partition parse_partition_string(const std::string& text, std::size_t n) {
    std::istringstream is(text);
    return parse_partition(is, n);
}

std::string format_partition(const Partition& p) {
    std::string out;
    for (const auto& cell : p.cells()) {
        for (std::size_t i = 0; i < cell.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(cell[i] + 1);
        }
        out += '\n';
    }
    return out;
}

std::map<std::string, double> parse_params(const std::string& text) {
    std::string spaced = text;
    for (char& c : spaced)
        if (c == ',') c = ' ';
    std::map<std::string, double> out;
    for (const auto& item : tokens_of(spaced)) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw Error(ErrorCode::InvalidParams, "expected key=value, got '" + item + "'");
        }
        double v = 0.0;
        if (!parse_double(item.substr(eq + 1), v)) {
            throw Error(ErrorCode::InvalidParams, "bad value in '" + item + "'");
        }
        out[item.substr(0, eq)] = v;
    }
    return out;
}

}  // namespace equispec

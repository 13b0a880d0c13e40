#include "rank1det/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <vector>

namespace rank1det {

namespace {

double parse_double_token(std::string_view t) {
    if (!t.empty() && t.front() == '+') t.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size())
        throw std::invalid_argument("malformed f64 value '" + std::string(t) + "'");
    if (!std::isfinite(value))
        throw std::invalid_argument("non-finite f64 value '" + std::string(t) + "'");
    return value;
}

std::string format_double(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

/// Splits "re+imi" at the last '+'/'-' that is neither leading nor part of
/// an exponent. Returns (re, im) with the sign kept on im.
std::pair<std::string_view, std::string_view> split_complex_token(std::string_view t) {
    if (t.size() < 2 || t.back() != 'i')
        throw std::invalid_argument("malformed complex value '" + std::string(t) +
                                    "' (expected re+imi)");
    const std::string_view body = t.substr(0, t.size() - 1);
    std::size_t sep = std::string_view::npos;
    for (std::size_t i = 1; i < body.size(); ++i) {
        const char c = body[i];
        const char prev = body[i - 1];
        if ((c == '+' || c == '-') && prev != 'e' && prev != 'E') sep = i;
    }
    if (sep == std::string_view::npos)
        throw std::invalid_argument("malformed complex value '" + std::string(t) +
                                    "' (expected re+imi)");
    return {body.substr(0, sep), body.substr(sep)};
}

Rational parse_rational_token(std::string_view t) {
    if (!t.empty() && t.front() == '+') t.remove_prefix(1);
    return Rational::from_string(t);
}

struct Token {
    std::string_view text;
    std::size_t line;
    std::size_t col;
};

struct Line {
    std::vector<Token> tokens;
    std::size_t number;
    std::size_t end_col;  // column just past the last token
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        const std::string_view raw =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        ++line_no;
        Line line{{}, line_no, 1};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            const std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            if (i > start) line.tokens.push_back({raw.substr(start, i - start), line_no, start + 1});
        }
        if (!line.tokens.empty()) {
            const Token& last = line.tokens.back();
            line.end_col = last.col + last.text.size();
            lines.push_back(std::move(line));
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return lines;
}

/// Sequential reader over the non-blank lines of a document.
class Cursor {
public:
    explicit Cursor(std::string_view text) : lines_(tokenize(text)) {}

    const Line& require_line(const char* what) {
        if (index_ >= lines_.size())
            throw ParseError(last_line_ + 1, 1, std::string("missing ") + what);
        const Line& line = lines_[index_++];
        last_line_ = line.number;
        return line;
    }

    void require_end() const {
        if (index_ < lines_.size()) {
            const Token& t = lines_[index_].tokens.front();
            throw ParseError(t.line, t.col, "unexpected trailing content '" + std::string(t.text) + "'");
        }
    }

private:
    std::vector<Line> lines_;
    std::size_t index_ = 0;
    std::size_t last_line_ = 0;
};

void require_token_count(const Line& line, std::size_t expected, const char* what) {
    if (line.tokens.size() < expected)
        throw ParseError(line.number, line.end_col,
                         std::string("expected ") + std::to_string(expected) + " " + what +
                             ", got " + std::to_string(line.tokens.size()));
    if (line.tokens.size() > expected) {
        const Token& t = line.tokens[expected];
        throw ParseError(t.line, t.col, "unexpected extra token '" + std::string(t.text) + "'");
    }
}

std::size_t parse_size(const Token& t) {
    std::size_t n = 0;
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
        throw ParseError(t.line, t.col, "malformed dimension '" + std::string(t.text) + "'");
    return n;
}

template <ScalarKind T>
T parse_entry(const Token& t) {
    try {
        return parse_scalar<T>(t.text);
    } catch (const std::exception& e) {
        throw ParseError(t.line, t.col, e.what());
    }
}

enum class Kind { f64, c64, q, qi };

Kind parse_kind(const Token& t) {
    if (t.text == "f64") return Kind::f64;
    if (t.text == "c64") return Kind::c64;
    if (t.text == "q") return Kind::q;
    if (t.text == "qi") return Kind::qi;
    throw ParseError(t.line, t.col,
                     "unknown scalar kind '" + std::string(t.text) + "' (expected f64, c64, q, qi)");
}

template <ScalarKind T>
DenseMatrix<T> read_dense_body(Cursor& cursor, std::size_t n) {
    std::vector<T> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const Line& line = cursor.require_line("matrix row");
        require_token_count(line, n, "row entries");
        for (const Token& t : line.tokens) entries.push_back(parse_entry<T>(t));
    }
    cursor.require_end();
    return DenseMatrix<T>(n, std::move(entries));
}

template <ScalarKind T>
std::vector<T> read_labeled_vector(Cursor& cursor, std::string_view label, std::size_t n) {
    const Line& line = cursor.require_line("vector line");
    const Token& head = line.tokens.front();
    if (head.text != label)
        throw ParseError(head.line, head.col,
                         "expected '" + std::string(label) + "', got '" + std::string(head.text) + "'");
    require_token_count(line, n + 1, "entries after the label");
    std::vector<T> v;
    v.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) v.push_back(parse_entry<T>(line.tokens[k]));
    return v;
}

template <ScalarKind T>
Rank1System<T> read_rank1_body(Cursor& cursor, std::size_t n) {
    auto x = read_labeled_vector<T>(cursor, "x:", n);
    auto a = read_labeled_vector<T>(cursor, "a:", n);
    auto b = read_labeled_vector<T>(cursor, "b:", n);
    cursor.require_end();
    return Rank1System<T>(std::move(x), std::move(a), std::move(b));
}

}  // namespace

template <>
std::string format_scalar<double>(const double& v) {
    return format_double(v);
}

template <>
std::string format_scalar<std::complex<double>>(const std::complex<double>& v) {
    const std::string im = format_double(v.imag());
    return format_double(v.real()) + (im.front() == '-' ? "" : "+") + im + "i";
}

template <>
std::string format_scalar<Rational>(const Rational& v) {
    return v.to_string();
}

template <>
std::string format_scalar<GaussianRational>(const GaussianRational& v) {
    const std::string im = v.im().to_string();
    return v.re().to_string() + (im.front() == '-' ? "" : "+") + im + "i";
}

template <>
double parse_scalar<double>(std::string_view token) {
    return parse_double_token(token);
}

template <>
std::complex<double> parse_scalar<std::complex<double>>(std::string_view token) {
    const auto [re, im] = split_complex_token(token);
    return {parse_double_token(re), parse_double_token(im)};
}

template <>
Rational parse_scalar<Rational>(std::string_view token) {
    return parse_rational_token(token);
}

template <>
GaussianRational parse_scalar<GaussianRational>(std::string_view token) {
    const auto [re, im] = split_complex_token(token);
    return {parse_rational_token(re), parse_rational_token(im)};
}

DenseAny read_dense(std::string_view text) {
    Cursor cursor(text);
    const Line& header = cursor.require_line("'dense n KIND' header");
    const Token& tag = header.tokens.front();
    if (tag.text != "dense") throw ParseError(tag.line, tag.col, "expected 'dense' header");
    require_token_count(header, 3, "header fields (dense n KIND)");
    const std::size_t n = parse_size(header.tokens[1]);
    switch (parse_kind(header.tokens[2])) {
        case Kind::f64: return read_dense_body<double>(cursor, n);
        case Kind::c64: return read_dense_body<std::complex<double>>(cursor, n);
        case Kind::q: return read_dense_body<Rational>(cursor, n);
        case Kind::qi: return read_dense_body<GaussianRational>(cursor, n);
    }
    throw std::logic_error("unreachable");
}

Rank1Any read_rank1(std::string_view text) {
    Cursor cursor(text);
    const Line& header = cursor.require_line("'rank1 n KIND' header");
    const Token& tag = header.tokens.front();
    if (tag.text != "rank1") throw ParseError(tag.line, tag.col, "expected 'rank1' header");
    require_token_count(header, 3, "header fields (rank1 n KIND)");
    const std::size_t n = parse_size(header.tokens[1]);
    switch (parse_kind(header.tokens[2])) {
        case Kind::f64: return read_rank1_body<double>(cursor, n);
        case Kind::c64: return read_rank1_body<std::complex<double>>(cursor, n);
        case Kind::q: return read_rank1_body<Rational>(cursor, n);
        case Kind::qi: return read_rank1_body<GaussianRational>(cursor, n);
    }
    throw std::logic_error("unreachable");
}

ChartPoint<std::complex<double>> read_chart(std::string_view text) {
    Cursor cursor(text);
    const Line& header = cursor.require_line("'chart n' header");
    const Token& tag = header.tokens.front();
    if (tag.text != "chart") throw ParseError(tag.line, tag.col, "expected 'chart' header");
    require_token_count(header, 2, "header fields (chart n)");
    const std::size_t n = parse_size(header.tokens[1]);
    if (n == 0)
        throw ParseError(header.tokens[1].line, header.tokens[1].col,
                         "chart dimension must be >= 1");
    const Line& line = cursor.require_line("coordinate line");
    require_token_count(line, n, "coordinates");
    std::vector<std::complex<double>> z;
    z.reserve(n);
    for (const Token& t : line.tokens) z.push_back(parse_entry<std::complex<double>>(t));
    cursor.require_end();
    return ChartPoint<std::complex<double>>(std::move(z));
}

template <ScalarKind T>
std::string write_dense(const DenseMatrix<T>& m) {
    const std::size_t n = m.size();
    std::string out = "dense " + std::to_string(n) + " " + std::string(scalar_traits<T>::kind_name) + "\n";
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j) out += ' ';
            out += format_scalar(m(i, j));
        }
        out += '\n';
    }
    return out;
}

template <ScalarKind T>
std::string write_rank1(const Rank1System<T>& s) {
    const std::size_t n = s.size();
    std::string out = "rank1 " + std::to_string(n) + " " + std::string(scalar_traits<T>::kind_name) + "\n";
    const auto append = [&out](const char* label, const std::vector<T>& v) {
        out += label;
        for (const T& e : v) {
            out += ' ';
            out += format_scalar(e);
        }
        out += '\n';
    };
    append("x:", s.x);
    append("a:", s.a);
    append("b:", s.b);
    return out;
}

std::string write_chart(const ChartPoint<std::complex<double>>& p) {
    std::string out = "chart " + std::to_string(p.dim()) + "\n";
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (i) out += ' ';
        out += format_scalar(p.z[i]);
    }
    out += '\n';
    return out;
}

std::string_view kind_of(const DenseAny& m) {
    return std::visit(
        [](const auto& v) {
            return scalar_traits<typename std::decay_t<decltype(v)>::value_type>::kind_name;
        },
        m);
}

std::string_view kind_of(const Rank1Any& s) {
    return std::visit(
        [](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            return scalar_traits<typename V::value_type>::kind_name;
        },
        s);
}

template std::string write_dense<double>(const DenseMatrix<double>&);
template std::string write_dense<std::complex<double>>(const DenseMatrix<std::complex<double>>&);
template std::string write_dense<Rational>(const DenseMatrix<Rational>&);
template std::string write_dense<GaussianRational>(const DenseMatrix<GaussianRational>&);

template std::string write_rank1<double>(const Rank1System<double>&);
template std::string write_rank1<std::complex<double>>(const Rank1System<std::complex<double>>&);
template std::string write_rank1<Rational>(const Rank1System<Rational>&);
template std::string write_rank1<GaussianRational>(const Rank1System<GaussianRational>&);

}  // namespace rank1det

#include "evolalg/cli/document.hpp"

#include <charconv>
#include <stdexcept>

#include "evolalg/error.hpp"

namespace evolalg::cli {

namespace {

constexpr std::string_view kMagic = "evolution-algebra v1";

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

struct Line {
    std::size_t number;  // 1-based
    std::vector<Token> tokens;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Splits into lines, drops comments and blank lines, tokenizes on whitespace.
std::vector<Line> lex(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && is_space(raw[i])) ++i;
            const std::size_t begin = i;
            while (i < raw.size() && !is_space(raw[i])) ++i;
            if (i > begin) line.tokens.push_back({raw.substr(begin, i - begin), begin + 1});
        }
        if (!line.tokens.empty()) out.push_back(std::move(line));
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

std::uint64_t parse_count(const Token& t, std::size_t line, const char* what) {
    std::uint64_t value = 0;
    const auto* first = t.text.data();
    const auto* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw ParseError(std::string("expected a non-negative integer ") + what + ", got '" + std::string(t.text) + "'",
                         line, t.column);
    }
    return value;
}

linalg::Scalar parse_scalar(const Token& t, std::size_t line, const linalg::Field& field) {
    try {
        return linalg::Scalar::parse(t.text, field);
    } catch (const FieldError& e) {
        throw ParseError(e.what(), line, t.column);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line, t.column);
    }
}

void expect_keyword(const Line& line, std::string_view keyword, std::size_t arity) {
    if (line.tokens.front().text != keyword) {
        throw ParseError("expected '" + std::string(keyword) + "'", line.number, line.tokens.front().column);
    }
    if (line.tokens.size() != arity + 1) {
        throw ParseError("'" + std::string(keyword) + "' takes " + std::to_string(arity) + " argument(s)", line.number,
                         line.tokens.front().column);
    }
}

linalg::Field parse_field(const Line& line) {
    const auto& kind = line.tokens.size() > 1 ? line.tokens[1].text : std::string_view{};
    if (line.tokens.front().text == "field" && kind == "rational") {
        expect_keyword(line, "field", 1);
        return linalg::Field::rational();
    }
    if (line.tokens.front().text == "field" && kind == "prime") {
        expect_keyword(line, "field", 2);
        const auto p = parse_count(line.tokens[2], line.number, "modulus");
        return linalg::Field::prime(p);
    }
    throw ParseError("expected 'field rational' or 'field prime <p>'", line.number, line.tokens.front().column);
}

}  // namespace

EvolutionAlgebra parse_document(std::string_view text, std::optional<linalg::Field> field_override) {
    const auto lines = lex(text);
    if (lines.empty()) throw ParseError("empty document", 1, 1);

    const auto& header = lines[0];
    std::string joined;
    for (const auto& t : header.tokens) joined += (joined.empty() ? "" : " ") + std::string(t.text);
    if (joined != kMagic) throw ParseError("expected header '" + std::string(kMagic) + "'", header.number, 1);

    if (lines.size() < 2) throw ParseError("missing 'field' line", header.number + 1, 1);
    const linalg::Field field = field_override ? *field_override : parse_field(lines[1]);
    if (field_override) parse_field(lines[1]);

    if (lines.size() < 3) throw ParseError("missing 'dim' line", lines[1].number + 1, 1);
    expect_keyword(lines[2], "dim", 1);
    const auto dim = parse_count(lines[2].tokens[1], lines[2].number, "dimension");
    if (dim == 0) throw ValidationError("dimension must be at least 1");

    if (lines.size() != 3 + dim) {
        const std::size_t where = lines.size() > 3 + dim ? lines[3 + dim].number : lines.back().number + 1;
        throw ParseError("expected " + std::to_string(dim) + " matrix rows, found " + std::to_string(lines.size() - 3),
                         where, 1);
    }
    linalg::Matrix m(field, dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
        const auto& line = lines[3 + k];
        if (line.tokens.size() != dim) {
            throw ParseError("row has " + std::to_string(line.tokens.size()) + " entries, expected " + std::to_string(dim),
                             line.number, line.tokens.front().column);
        }
        for (std::size_t i = 0; i < dim; ++i) m(k, i) = parse_scalar(line.tokens[i], line.number, field);
    }
    return EvolutionAlgebra(std::move(m));
}

std::string emit_document(const EvolutionAlgebra& a) {
    std::string out(kMagic);
    out += "\nfield " + a.field().name() + "\ndim " + std::to_string(a.dim()) + "\n";
    for (std::size_t k = 0; k < a.dim(); ++k) {
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (i) out += ' ';
            out += a.structure()(k, i).to_string();
        }
        out += '\n';
    }
    return out;
}

std::vector<linalg::Vector> parse_vector_list(std::string_view text, const linalg::Field& field, std::size_t dim) {
    std::vector<linalg::Vector> out;
    for (const auto& line : lex(text)) {
        if (line.tokens.size() != dim) {
            throw ParseError("vector has " + std::to_string(line.tokens.size()) + " coordinates, expected " +
                                 std::to_string(dim),
                             line.number, line.tokens.front().column);
        }
        linalg::Vector v;
        for (const auto& t : line.tokens) v.push_back(parse_scalar(t, line.number, field));
        out.push_back(std::move(v));
    }
    return out;
}

linalg::Vector parse_vector_arg(std::string_view text, const linalg::Field& field, std::size_t dim) {
    linalg::Vector out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        std::string_view piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!piece.empty() && is_space(piece.front())) piece.remove_prefix(1);
        while (!piece.empty() && is_space(piece.back())) piece.remove_suffix(1);
        out.push_back(parse_scalar({piece, start + 1}, 1, field));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (out.size() != dim) {
        throw ParseError("vector has " + std::to_string(out.size()) + " coordinates, expected " + std::to_string(dim), 1, 1);
    }
    return out;
}

}  // namespace evolalg::cli

#include "funcwalk/notation.hpp"

#include <cctype>

namespace funcwalk {

namespace {

constexpr std::string_view kOpenGlyph = "⟨";   // left angle bracket
constexpr std::string_view kCloseGlyph = "⟩";  // right angle bracket

bool token_at(std::string_view text, std::size_t i, std::string_view token) {
    return text.substr(i, token.size()) == token;
}

std::size_t skip_ws(std::string_view text, std::size_t i) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) {
        ++i;
    }
    return i;
}

ExprAst parse_part(std::string_view text, std::size_t base_offset) {
    try {
        return parse_expr(text);
    } catch (const ParseError& e) {
        throw ParseError(e.message(), base_offset + e.offset());
    }
}

}  // namespace

WalkSpec parse_walk_notation(std::string_view text, int start_index) {
    std::size_t i = skip_ws(text, 0);
    if (i < text.size() && text[i] == '<') {
        i += 1;
    } else if (token_at(text, i, kOpenGlyph)) {
        i += kOpenGlyph.size();
    } else {
        throw ParseError("expected '<' opening the walk notation", i);
    }

    // expressions contain neither brackets nor '|', so scanning is safe
    std::size_t close = std::string_view::npos;
    std::size_t close_len = 0;
    std::size_t bar = std::string_view::npos;
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] == '>') {
            close = j;
            close_len = 1;
            break;
        }
        if (token_at(text, j, kCloseGlyph)) {
            close = j;
            close_len = kCloseGlyph.size();
            break;
        }
        if (text[j] == '|' && bar == std::string_view::npos) {
            bar = j;
        }
    }
    if (close == std::string_view::npos) {
        throw ParseError("missing closing '>' in walk notation", text.size());
    }

    const std::size_t f_end = bar == std::string_view::npos ? close : bar;
    const ExprAst f = parse_part(text.substr(i, f_end - i), i);
    std::optional<ExprAst> g;
    if (bar != std::string_view::npos) {
        g = parse_part(text.substr(bar + 1, close - bar - 1), bar + 1);
    }

    std::size_t k = skip_ws(text, close + close_len);
    if (k >= text.size() || text[k] != '_') {
        throw ParseError("expected '_' and a modulus after the closing bracket", k);
    }
    k = skip_ws(text, k + 1);
    const std::size_t digits_start = k;
    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
        ++k;
    }
    if (k == digits_start) {
        throw ParseError("expected a positive integer modulus", digits_start);
    }
    unsigned long m_value = 0;
    try {
        m_value = std::stoul(std::string(text.substr(digits_start, k - digits_start)));
    } catch (const std::out_of_range&) {
        throw ParseError("walk modulus is out of range", digits_start);
    }
    if (m_value == 0) {
        throw ParseError("walk modulus must be >= 1", digits_start);
    }
    k = skip_ws(text, k);
    if (k != text.size()) {
        throw ParseError("unexpected trailing input after walk notation", k);
    }

    if (!f.integer_class()) {
        throw ParseError("direction function f must not contain division", i);
    }
    return make_walk(f, std::move(g), static_cast<unsigned>(m_value), start_index);
}

}  // namespace funcwalk

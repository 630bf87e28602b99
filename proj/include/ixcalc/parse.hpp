#pragma once

#include "ixcalc/word.hpp"

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ixcalc {

/// Syntax or exponent-range error, carrying the 0-based byte offset of the
/// offending position.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, std::string message)
        : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": " + message),
          offset_(offset), message_(std::move(message)) {}

    std::size_t offset() const { return offset_; }
    const std::string& message() const { return message_; }

private:
    std::size_t offset_;
    std::string message_;
};

namespace detail {

// word   := factor+
// factor := base ('^' uint)?
// base   := 'x' | 'I' | '(' word ')'
// Whitespace is insignificant; group powers expand by repetition.
class WordParser {
public:
    explicit WordParser(std::string_view text) : text_(text) {}

    std::vector<Block> parse() {
        auto blocks = parse_word_expr();
        skip_ws();
        if (!at_end())
            throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
        return blocks;
    }

private:
    static constexpr std::uint64_t kMaxExponent = 0xFFFFFFFFull;
    static constexpr std::size_t kMaxExpandedBlocks = 1u << 20;

    std::vector<Block> parse_word_expr() {
        std::vector<Block> blocks;
        skip_ws();
        if (!starts_factor())
            throw ParseError(pos_, "expected 'x', 'I' or '('");
        while (starts_factor()) {
            parse_factor(blocks);
            skip_ws();
        }
        return blocks;
    }

    void parse_factor(std::vector<Block>& blocks) {
        const char c = text_[pos_];
        if (c == 'x' || c == 'I') {
            ++pos_;
            std::uint64_t exp = 1;
            if (accept('^'))
                exp = parse_uint();
            blocks.push_back({c == 'x' ? Generator::X : Generator::I, exp});
            return;
        }
        // group
        ++pos_; // consume '('
        auto inner = parse_word_expr();
        skip_ws();
        if (at_end() || text_[pos_] != ')')
            throw ParseError(pos_, "expected ')'");
        ++pos_;
        if (accept('^')) {
            const std::size_t exp_offset = pos_;
            const std::uint64_t reps = parse_uint();
            if (reps != 0 && inner.size() > kMaxExpandedBlocks / reps)
                throw ParseError(exp_offset, "exponent too large to expand");
            for (std::uint64_t t = 0; t < reps; ++t)
                blocks.insert(blocks.end(), inner.begin(), inner.end());
        } else {
            blocks.insert(blocks.end(), inner.begin(), inner.end());
        }
    }

    std::uint64_t parse_uint() {
        skip_ws();
        const std::size_t start = pos_;
        if (at_end() || !is_digit(text_[pos_]))
            throw ParseError(pos_, "expected integer");
        std::uint64_t value = 0;
        while (!at_end() && is_digit(text_[pos_])) {
            value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (value > kMaxExponent)
                throw ParseError(start, "exponent does not fit in 32 bits");
            ++pos_;
        }
        return value;
    }

    bool starts_factor() const {
        if (at_end())
            return false;
        const char c = text_[pos_];
        return c == 'x' || c == 'I' || c == '(';
    }

    bool accept(char c) {
        skip_ws();
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    static bool is_digit(char c) { return c >= '0' && c <= '9'; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses the surface syntax into a canonical Word. "(x I)^3" yields the
/// same word as "x I x I x I".
inline Word parse_word(std::string_view text) {
    return Word(detail::WordParser(text).parse());
}

} // namespace ixcalc

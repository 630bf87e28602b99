#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ixcalc {

/// The two generators of the algebra: multiplication by x, and the
/// integration operator I f = \int_0^x f(t) dt. They satisfy Ix - xI = -I^2.
enum class Generator : std::uint8_t { X, I };

struct Block {
    Generator gen;
    std::uint64_t exp;

    bool operator==(const Block&) const = default;
};

/// One x^r I^s segment of a word, as seen when the word is cut at its
/// I-to-x boundaries. Either exponent may be zero at the ends of the word.
struct XIPair {
    std::uint64_t x_exp = 0; // r
    std::uint64_t i_exp = 0; // s

    bool operator==(const XIPair&) const = default;
};

/// A finite product of generator powers, stored left to right as written.
/// The word acts on functions right to left: the rightmost block applies
/// first. Construction canonicalizes: exponent-0 blocks are dropped and
/// adjacent blocks with the same generator merge, so blocks always
/// alternate generators. The empty word is the identity operator.
class Word {
public:
    Word() = default;

    explicit Word(std::vector<Block> blocks) : blocks_(std::move(blocks)) { canonicalize(); }

    /// Builds x^{r_n} I^{s_n} ... x^{r_1} I^{s_1} from pairs listed
    /// rightmost first, i.e. pairs[0] = (r_1, s_1).
    static Word from_xi_pairs(const std::vector<XIPair>& pairs) {
        std::vector<Block> blocks;
        blocks.reserve(2 * pairs.size());
        for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
            blocks.push_back({Generator::X, it->x_exp});
            blocks.push_back({Generator::I, it->i_exp});
        }
        return Word(std::move(blocks));
    }

    const std::vector<Block>& blocks() const { return blocks_; }

    bool empty() const { return blocks_.empty(); }

    /// R: total degree in x.
    std::uint64_t x_degree() const {
        std::uint64_t r = 0;
        for (const auto& b : blocks_)
            if (b.gen == Generator::X)
                r += b.exp;
        return r;
    }

    /// S: total degree in I.
    std::uint64_t i_degree() const {
        std::uint64_t s = 0;
        for (const auto& b : blocks_)
            if (b.gen == Generator::I)
                s += b.exp;
        return s;
    }

    /// Cuts the word into x^r I^s segments, rightmost segment first.
    /// Interior segments always carry both exponents; only the rightmost
    /// can have s = 0 (word ends in x) and only the leftmost can have
    /// r = 0 (word starts with I). The empty word yields no segments.
    std::vector<XIPair> xi_pairs() const {
        std::vector<XIPair> pairs;
        auto it = blocks_.rbegin();
        while (it != blocks_.rend()) {
            XIPair p;
            if (it->gen == Generator::I) {
                p.i_exp = it->exp;
                ++it;
                if (it != blocks_.rend() && it->gen == Generator::X) {
                    p.x_exp = it->exp;
                    ++it;
                }
            } else {
                p.x_exp = it->exp;
                ++it;
            }
            pairs.push_back(p);
        }
        return pairs;
    }

    /// Canonical text form: blocks joined by single spaces, exponent 1
    /// omitted, e.g. "x^2 I x I^3". The empty word prints as "1".
    std::string str() const {
        if (blocks_.empty())
            return "1";
        std::string out;
        for (const auto& b : blocks_) {
            if (!out.empty())
                out += ' ';
            out += (b.gen == Generator::X) ? 'x' : 'I';
            if (b.exp != 1)
                out += "^" + std::to_string(b.exp);
        }
        return out;
    }

    bool operator==(const Word&) const = default;

private:
    void canonicalize() {
        std::vector<Block> merged;
        for (const auto& b : blocks_) {
            if (b.exp == 0)
                continue;
            if (!merged.empty() && merged.back().gen == b.gen)
                merged.back().exp += b.exp;
            else
                merged.push_back(b);
        }
        blocks_ = std::move(merged);
    }

    std::vector<Block> blocks_;
};

/// Juxtaposition of words: concat(u, v) acts as u after v, matching the
/// written product "u v".
inline Word concat(const Word& u, const Word& v) {
    std::vector<Block> blocks = u.blocks();
    blocks.insert(blocks.end(), v.blocks().begin(), v.blocks().end());
    return Word(std::move(blocks));
}

/// (R, S): total x and I degrees of the word.
inline std::pair<std::uint64_t, std::uint64_t> word_total_degrees(const Word& w) {
    return {w.x_degree(), w.i_degree()};
}

/// w^n by repetition. n = 0 gives the identity word.
inline Word word_power(const Word& w, std::uint64_t n) {
    std::vector<Block> blocks;
    blocks.reserve(w.blocks().size() * n);
    for (std::uint64_t t = 0; t < n; ++t)
        blocks.insert(blocks.end(), w.blocks().begin(), w.blocks().end());
    return Word(std::move(blocks));
}

} // namespace ixcalc

#include "cayplan/words.hpp"

#include <algorithm>
#include <sstream>

#include "cayplan/errors.hpp"

namespace cayplan {

namespace {

int reduce_exponent(int e, int order) {
    int r = e % order;
    return r < 0 ? r + order : r;
}

// Appends one syllable to an already-reduced word. Scans from the right:
// past syllables of adjacent (commuting) vertices, merging on a same-vertex
// hit. Keeps the word reduced; a zero merge deletes the target syllable,
// which cannot expose a new merge because every surviving same-vertex pair
// retains a non-commuting separator.
void push_syllable(const ProductGraph& g, std::vector<Syllable>& out, Syllable s) {
    s.exponent = reduce_exponent(s.exponent, g.order(s.vertex));
    if (s.exponent == 0) return;
    for (int j = static_cast<int>(out.size()) - 1; j >= 0; --j) {
        if (out[j].vertex == s.vertex) {
            int merged = reduce_exponent(out[j].exponent + s.exponent, g.order(s.vertex));
            if (merged == 0)
                out.erase(out.begin() + j);
            else
                out[j].exponent = merged;
            return;
        }
        if (!g.adjacent(out[j].vertex, s.vertex)) break;
    }
    out.push_back(s);
}

// Lexicographically least shuffle of a reduced word: repeatedly extract the
// smallest-vertex syllable whose predecessors all commute with it.
std::vector<Syllable> lex_least_shuffle(const ProductGraph& g, std::vector<Syllable> rem) {
    std::vector<Syllable> result;
    result.reserve(rem.size());
    while (!rem.empty()) {
        int best = -1;
        for (std::size_t i = 0; i < rem.size(); ++i) {
            bool available = true;
            for (std::size_t j = 0; j < i && available; ++j)
                available = g.adjacent(rem[j].vertex, rem[i].vertex);
            if (available && (best < 0 || rem[i].vertex < rem[best].vertex))
                best = static_cast<int>(i);
        }
        result.push_back(rem[best]);
        rem.erase(rem.begin() + best);
    }
    return result;
}

} // namespace

NormalForm normalize(const ProductGraph& g, const Word& w) {
    std::vector<Syllable> reduced;
    reduced.reserve(w.size());
    for (const auto& s : w) {
        if (s.vertex < 0 || s.vertex >= g.size())
            throw input_error("word references vertex index " + std::to_string(s.vertex) +
                              " outside the graph");
        push_syllable(g, reduced, s);
    }
    return NormalForm(lex_least_shuffle(g, std::move(reduced)));
}

NormalForm multiply(const ProductGraph& g, const NormalForm& a, const NormalForm& b) {
    Word w;
    w.reserve(a.length() + b.length());
    w.insert(w.end(), a.syllables().begin(), a.syllables().end());
    w.insert(w.end(), b.syllables().begin(), b.syllables().end());
    return normalize(g, w);
}

NormalForm inverse(const ProductGraph& g, const NormalForm& a) {
    Word w;
    w.reserve(a.length());
    for (auto it = a.syllables().rbegin(); it != a.syllables().rend(); ++it)
        w.push_back({it->vertex, g.order(it->vertex) - it->exponent});
    return normalize(g, w);
}

std::optional<std::string> is_generator_step(const ProductGraph& g, const NormalForm& a,
                                             const NormalForm& b) {
    NormalForm d = multiply(g, inverse(g, a), b);
    if (d.length() != 1) return std::nullopt;
    const Syllable& s = d.syllables().front();
    if (s.exponent == 1 || s.exponent == g.order(s.vertex) - 1) return g.id(s.vertex);
    return std::nullopt;
}

int word_metric_length(const ProductGraph& g, const NormalForm& a) {
    int len = 0;
    for (const auto& s : a.syllables())
        len += std::min(s.exponent, g.order(s.vertex) - s.exponent);
    return len;
}

Word parse_word(const ProductGraph& g, const std::string& text) {
    Word w;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        std::string id = token;
        int exponent = 1;
        if (auto caret = token.find('^'); caret != std::string::npos) {
            id = token.substr(0, caret);
            std::string exp = token.substr(caret + 1);
            try {
                std::size_t used = 0;
                exponent = std::stoi(exp, &used);
                if (used != exp.size()) throw std::invalid_argument(exp);
            } catch (const std::exception&) {
                throw input_error("bad exponent in token '" + token + "'");
            }
        }
        if (id.empty()) throw input_error("empty vertex id in token '" + token + "'");
        w.push_back({g.at(id), exponent});
    }
    return w;
}

std::string word_text(const ProductGraph& g, const Word& w) {
    std::string out;
    for (const auto& s : w) {
        if (!out.empty()) out += ' ';
        out += g.id(s.vertex);
        if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
    }
    return out;
}

std::string word_text(const ProductGraph& g, const NormalForm& nf) {
    return word_text(g, nf.syllables());
}

} // namespace cayplan

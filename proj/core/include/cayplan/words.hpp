#ifndef CAYPLAN_WORDS_HPP
#define CAYPLAN_WORDS_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cayplan/product_graph.hpp"

namespace cayplan {

/// One generator power a_v^exponent. `vertex` is an index into the owning
/// ProductGraph; the exponent is kept reduced, 1 <= exponent <= order-1.
struct Syllable {
    int vertex = 0;
    int exponent = 1;

    auto operator<=>(const Syllable&) const = default;
};

/// An unreduced generator word. Exponents may be arbitrary integers here;
/// normalize reduces them.
using Word = std::vector<Syllable>;

/// Canonical representative of an element of the graph product:
/// fully merged (no two same-vertex syllables separated only by syllables
/// of adjacent vertices) and lexicographically least among all shuffles by
/// adjacent commuting swaps. Only produced by normalize and friends.
class NormalForm {
public:
    NormalForm() = default;

    const std::vector<Syllable>& syllables() const { return syl_; }
    bool is_identity() const { return syl_.empty(); }
    std::size_t length() const { return syl_.size(); }

    auto operator<=>(const NormalForm&) const = default;

private:
    explicit NormalForm(std::vector<Syllable> syl) : syl_(std::move(syl)) {}
    std::vector<Syllable> syl_;

    friend NormalForm normalize(const ProductGraph&, const Word&);
};

struct NormalFormHash {
    std::size_t operator()(const NormalForm& nf) const {
        std::size_t h = 1469598103934665603ull;
        for (const auto& s : nf.syllables()) {
            h = (h ^ static_cast<std::size_t>(s.vertex)) * 1099511628211ull;
            h = (h ^ static_cast<std::size_t>(s.exponent)) * 1099511628211ull;
        }
        return h;
    }
};

/// Rewrites w to its canonical form: deletes trivial syllables, merges
/// same-vertex syllables across commuting separators, then picks the
/// lexicographically least shuffle (by vertex index). Two words normalize
/// equal iff they represent the same group element.
NormalForm normalize(const ProductGraph& g, const Word& w);

NormalForm multiply(const ProductGraph& g, const NormalForm& a, const NormalForm& b);

NormalForm inverse(const ProductGraph& g, const NormalForm& a);

/// If b = a * s for a single generator step s in {a_v, a_v^-1}, returns the
/// id of v (the undirected simple Cayley adjacency); otherwise nullopt.
std::optional<std::string> is_generator_step(const ProductGraph& g, const NormalForm& a,
                                             const NormalForm& b);

/// Word length in the generators, counting each syllable a_v^e as
/// min(e, order-e) steps.
int word_metric_length(const ProductGraph& g, const NormalForm& a);

/// Parses the CLI/test word syntax: whitespace-separated `id^e` tokens,
/// exponent omitted means 1. Empty input is the identity.
Word parse_word(const ProductGraph& g, const std::string& text);

/// Renders syllables back to the same syntax; identity renders as "".
std::string word_text(const ProductGraph& g, const NormalForm& nf);
std::string word_text(const ProductGraph& g, const Word& w);

} // namespace cayplan

#endif

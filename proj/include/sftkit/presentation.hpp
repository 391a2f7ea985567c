#pragma once

// Presentations of SFTs, sofic subshifts and Wang tilesets.
//
// A pattern presentation is a finite list of (word, symbol) pairs; resolving
// it evaluates each word in the group and yields either a partial map from
// group elements to symbols, or an inconsistency when two words with the
// same evaluation carry different values. Inconsistent forbidden patterns
// never appear in any configuration; they are kept in the data model and
// skipped by every admissibility check (`lint` reports them).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sftkit/errors.hpp"
#include "sftkit/group.hpp"

namespace sftkit {

// p : W -> A given by parallel arrays; words[i] carries values[i]. Words are
// kept as literal strings, "" denoting the empty word.
struct PatternPresentation {
    std::vector<std::string> words;
    std::vector<Symbol> values;

    std::size_t size() const { return words.size(); }

    bool constant_with_value(Symbol a) const {
        return !values.empty() &&
               std::all_of(values.begin(), values.end(), [&](Symbol v) { return v == a; });
    }
};

// Element-indexed form of a pattern presentation.
struct ResolvedPattern {
    bool consistent = true;
    std::map<GroupElement, Symbol> support;  // meaningful only when consistent
    // When inconsistent: the two colliding words and their values.
    std::string collision_word_a, collision_word_b;
    Symbol collision_value_a = 0, collision_value_b = 0;
};

inline ResolvedPattern resolve(const GroupContext& ctx, const PatternPresentation& p) {
    ResolvedPattern r;
    std::map<GroupElement, std::size_t> first_index;
    for (std::size_t i = 0; i < p.words.size(); ++i) {
        GroupElement g = ctx.evaluate(p.words[i]);
        auto [it, inserted] = first_index.emplace(g, i);
        if (inserted) {
            r.support.emplace(g, p.values[i]);
        } else if (p.values[it->second] != p.values[i]) {
            r.consistent = false;
            r.collision_word_a = p.words[it->second];
            r.collision_word_b = p.words[i];
            r.collision_value_a = p.values[it->second];
            r.collision_value_b = p.values[i];
            r.support.clear();
            return r;
        }
    }
    return r;
}

// Finite partial configuration, e.g. a filled ball or box window.
struct FiniteConfiguration {
    std::map<GroupElement, Symbol> cells;
};

// True iff c(g*h) = q(h) for every h in supp(q). q must be consistent and
// g*supp(q) must lie inside c's domain.
inline bool appears(const GroupContext& ctx, const ResolvedPattern& q,
                    const FiniteConfiguration& c, const GroupElement& g) {
    if (!q.consistent) return false;
    for (const auto& [h, value] : q.support) {
        GroupElement cell = ctx.multiply(g, h);
        auto it = c.cells.find(cell);
        if (it == c.cells.end()) {
            throw input_error("appears: pattern support leaves the configuration domain at " +
                              ctx.element_str(cell));
        }
        if (it->second != value) return false;
    }
    return true;
}

struct SftPresentation {
    GroupContext group = GroupContext::grid(1);
    std::vector<Symbol> alphabet;
    std::vector<PatternPresentation> forbidden;
    std::string provenance;  // optional free-form construction note

    bool in_alphabet(Symbol a) const {
        return std::find(alphabet.begin(), alphabet.end(), a) != alphabet.end();
    }

    // Validates the structural invariants; throws input_error with the
    // offending location.
    void validate() const {
        if (alphabet.empty()) throw input_error("alphabet must be nonempty");
        for (Symbol a : alphabet) {
            if (a < 0) throw input_error("alphabet symbols must be naturals, got " + std::to_string(a));
        }
        std::vector<Symbol> sorted = alphabet;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw input_error("alphabet symbols must be distinct");
        }
        for (std::size_t i = 0; i < forbidden.size(); ++i) {
            const auto& p = forbidden[i];
            std::string where = "forbidden[" + std::to_string(i) + "]";
            if (p.words.empty()) throw input_error(where + ": empty pattern presentation");
            if (p.words.size() != p.values.size()) {
                throw input_error(where + ": words and values differ in length");
            }
            std::vector<std::string> ws = p.words;
            std::sort(ws.begin(), ws.end());
            if (std::adjacent_find(ws.begin(), ws.end()) != ws.end()) {
                throw input_error(where + ": duplicate word");
            }
            for (const auto& w : p.words) group.evaluate(w);  // letters valid for the group
            for (Symbol v : p.values) {
                if (!in_alphabet(v)) {
                    throw input_error(where + ": value " + std::to_string(v) + " not in alphabet");
                }
            }
        }
    }

    // Symbols whose constant configuration avoids every forbidden pattern.
    // A pattern presentation appears in the constant-a configuration exactly
    // when it has constant value a, so no resolution is needed.
    std::vector<Symbol> fixed_point_symbols() const {
        std::vector<Symbol> out;
        for (Symbol a : alphabet) {
            bool blocked = false;
            for (const auto& p : forbidden) {
                if (p.constant_with_value(a)) {
                    blocked = true;
                    break;
                }
            }
            if (!blocked) out.push_back(a);
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

// Decides whether the presented SFT contains a fixed point (a constant
// configuration). Total: no search, just a scan of the forbidden list.
inline bool has_fixed_point(const SftPresentation& pres) {
    return !pres.fixed_point_symbols().empty();
}

inline SftPresentation full_shift(const GroupContext& ctx, std::vector<Symbol> alphabet) {
    SftPresentation p;
    p.group = ctx;
    p.alphabet = std::move(alphabet);
    p.validate();
    return p;
}

// Local function presentation mu : A^W -> B with W a list of words. Rows are
// keyed by the assignment tuple in domain_words order.
struct LocalMap {
    std::vector<std::string> domain_words;
    std::vector<Symbol> codomain;
    std::vector<std::pair<std::vector<Symbol>, Symbol>> table;

    Symbol apply_row(const std::vector<Symbol>& input) const {
        for (const auto& [row_input, out] : table) {
            if (row_input == input) return out;
        }
        std::string key;
        for (std::size_t i = 0; i < input.size(); ++i) {
            if (i) key += ",";
            key += std::to_string(input[i]);
        }
        throw input_error("local map has no table row for input [" + key + "]");
    }
};

struct SoficPresentation {
    SftPresentation base;
    LocalMap map;

    void validate(const Limits& limits = {}) const {
        base.validate();
        std::vector<std::string> ws = map.domain_words;
        std::sort(ws.begin(), ws.end());
        if (std::adjacent_find(ws.begin(), ws.end()) != ws.end()) {
            throw input_error("local_map: duplicate domain word");
        }
        for (const auto& w : map.domain_words) base.group.evaluate(w);
        if (map.codomain.empty()) throw input_error("local_map: empty codomain");
        for (Symbol b : map.codomain) {
            if (b < 0) throw input_error("local_map: codomain symbols must be naturals");
        }

        std::size_t expected = 1;
        for (std::size_t i = 0; i < map.domain_words.size(); ++i) {
            if (expected > limits.max_table_rows / std::max<std::size_t>(base.alphabet.size(), 1)) {
                throw resource_error("local map table would exceed the row cap");
            }
            expected *= base.alphabet.size();
        }
        if (map.table.size() != expected) {
            throw input_error("local_map: table has " + std::to_string(map.table.size()) +
                              " rows, expected |A|^|W| = " + std::to_string(expected));
        }
        std::vector<std::vector<Symbol>> inputs;
        inputs.reserve(map.table.size());
        for (std::size_t i = 0; i < map.table.size(); ++i) {
            const auto& [input, output] = map.table[i];
            std::string where = "local_map.table[" + std::to_string(i) + "]";
            if (input.size() != map.domain_words.size()) {
                throw input_error(where + ": input length does not match domain_words");
            }
            for (Symbol v : input) {
                if (!base.in_alphabet(v)) {
                    throw input_error(where + ": input symbol " + std::to_string(v) + " not in base alphabet");
                }
            }
            if (std::find(map.codomain.begin(), map.codomain.end(), output) == map.codomain.end()) {
                throw input_error(where + ": output " + std::to_string(output) + " not in codomain");
            }
            inputs.push_back(input);
        }
        std::sort(inputs.begin(), inputs.end());
        if (std::adjacent_find(inputs.begin(), inputs.end()) != inputs.end()) {
            throw input_error("local_map: duplicate table row");
        }
    }

    // Largest canonical word length among the domain words; the image of a
    // radius-r window is determined by the base on a radius-(r + reach) window.
    int reach() const {
        std::int64_t m = 0;
        for (const auto& w : map.domain_words) {
            m = std::max(m, base.group.length(base.group.evaluate(w)));
        }
        return static_cast<int>(m);
    }
};

// Evaluates the presented local function at position g of configuration c:
// reads c(g * word) for every domain word and looks up the table row.
inline Symbol apply_local_map(const SoficPresentation& sp, const FiniteConfiguration& c,
                              const GroupElement& g) {
    const GroupContext& ctx = sp.base.group;
    std::vector<Symbol> input;
    input.reserve(sp.map.domain_words.size());
    for (const auto& w : sp.map.domain_words) {
        GroupElement cell = ctx.multiply(g, ctx.evaluate(w));
        auto it = c.cells.find(cell);
        if (it == c.cells.end()) {
            throw input_error("apply_local_map: configuration does not cover cell " +
                              ctx.element_str(cell));
        }
        input.push_back(it->second);
    }
    return sp.map.apply_row(input);
}

struct WangTile {
    Symbol north = 0, east = 0, south = 0, west = 0;
};

struct WangTileset {
    std::vector<WangTile> tiles;

    void validate() const {
        if (tiles.empty()) throw input_error("tileset must be nonempty");
        for (std::size_t i = 0; i < tiles.size(); ++i) {
            const auto& t = tiles[i];
            for (Symbol c : {t.north, t.east, t.south, t.west}) {
                if (c < 0) throw input_error("tiles[" + std::to_string(i) + "]: colors must be naturals");
            }
        }
    }
};

// Compiles a Wang tileset to an SFT presentation on Z^2. The alphabet is the
// tile indices; "a" steps east (1,0) and "b" steps north (0,1). A pair of
// tiles is forbidden side by side exactly when the shared edge colors
// disagree, so configurations of the result are the valid tilings.
inline SftPresentation wang_to_sft(const WangTileset& ts) {
    ts.validate();
    SftPresentation out;
    out.group = GroupContext::grid(2);
    const Symbol n = static_cast<Symbol>(ts.tiles.size());
    for (Symbol i = 0; i < n; ++i) out.alphabet.push_back(i);
    for (Symbol i = 0; i < n; ++i) {
        for (Symbol j = 0; j < n; ++j) {
            if (ts.tiles[i].east != ts.tiles[j].west) {
                out.forbidden.push_back({{"", "a"}, {i, j}});
            }
            if (ts.tiles[i].north != ts.tiles[j].south) {
                out.forbidden.push_back({{"", "b"}, {i, j}});
            }
        }
    }
    return out;
}

}  // namespace sftkit

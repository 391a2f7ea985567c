#pragma once

// Finitely generated groups with a fixed symmetric generating set.
//
// Two families are supported: the grid groups Z^d and the free groups F_k.
// Both have a trivially decidable word problem, which is all the rest of the
// toolkit needs; every other module talks to groups exclusively through
// GroupContext, so further families can be slotted in behind the same
// surface.
//
// Generators are named a, b, c, ... and uppercase letters denote formal
// inverses, so the generating set is symmetric by construction. For Z^d the
// i-th letter is the i-th standard basis vector.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "sftkit/errors.hpp"

namespace sftkit {

using Symbol = std::int64_t;  // alphabet symbols are arbitrary naturals

enum class GroupKind { grid, free_group };

// One letter of the symmetric generating set. index is 1-based; inverse
// selects the uppercase form.
struct GeneratorSymbol {
    int index = 1;
    bool inverse = false;

    char letter() const {
        return static_cast<char>((inverse ? 'A' : 'a') + index - 1);
    }
    friend auto operator<=>(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

// A word over the generating set. The empty word is the identity.
struct Word {
    std::vector<GeneratorSymbol> symbols;

    static Word parse(const std::string& text) {
        Word w;
        w.symbols.reserve(text.size());
        for (char c : text) {
            if (c >= 'a' && c <= 'z') {
                w.symbols.push_back({c - 'a' + 1, false});
            } else if (c >= 'A' && c <= 'Z') {
                w.symbols.push_back({c - 'A' + 1, true});
            } else {
                throw input_error(std::string("unknown generator symbol '") + c + "' in word \"" + text + "\"");
            }
        }
        return w;
    }

    std::string str() const {
        std::string s;
        s.reserve(symbols.size());
        for (const auto& g : symbols) s.push_back(g.letter());
        return s;
    }

    bool empty() const { return symbols.empty(); }
    std::size_t size() const { return symbols.size(); }
};

// Canonical form of a group element.
//   grid:  rep = the coordinate vector, length d.
//   free:  rep = the reduced word as signed 1-based letters (+i generator,
//          -i its inverse), no adjacent cancelling pair.
// Lexicographic comparison of rep is the canonical ordering used for ball
// enumeration and all deterministic output.
struct GroupElement {
    std::vector<std::int64_t> rep;

    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

class GroupContext {
public:
    static GroupContext grid(int dimension) {
        check_rank(dimension, "dimension");
        return GroupContext(GroupKind::grid, dimension);
    }
    static GroupContext free_group(int rank) {
        check_rank(rank, "rank");
        return GroupContext(GroupKind::free_group, rank);
    }

    GroupKind kind() const { return kind_; }
    // d for Z^d, k for F_k.
    int rank() const { return rank_; }

    friend bool operator==(const GroupContext&, const GroupContext&) = default;

    GroupElement identity() const {
        if (kind_ == GroupKind::grid) {
            return GroupElement{std::vector<std::int64_t>(rank_, 0)};
        }
        return GroupElement{};
    }

    bool is_identity(const GroupElement& g) const {
        return g == identity();
    }

    GroupElement generator(const GeneratorSymbol& s) const {
        check_symbol(s);
        if (kind_ == GroupKind::grid) {
            GroupElement e = identity();
            e.rep[s.index - 1] = s.inverse ? -1 : 1;
            return e;
        }
        return GroupElement{{s.inverse ? -static_cast<std::int64_t>(s.index)
                                       : static_cast<std::int64_t>(s.index)}};
    }

    GroupElement evaluate(const Word& w) const {
        GroupElement acc = identity();
        for (const auto& s : w.symbols) {
            check_symbol(s);
            append(acc, s);
        }
        return acc;
    }

    GroupElement evaluate(const std::string& word_text) const {
        return evaluate(Word::parse(word_text));
    }

    GroupElement multiply(const GroupElement& g, const GroupElement& h) const {
        if (kind_ == GroupKind::grid) {
            GroupElement r = g;
            for (int i = 0; i < rank_; ++i) r.rep[i] += h.rep[i];
            return r;
        }
        GroupElement r = g;
        for (std::int64_t letter : h.rep) {
            if (!r.rep.empty() && r.rep.back() == -letter) {
                r.rep.pop_back();
            } else {
                r.rep.push_back(letter);
            }
        }
        return r;
    }

    GroupElement inverse(const GroupElement& g) const {
        if (kind_ == GroupKind::grid) {
            GroupElement r = g;
            for (auto& c : r.rep) c = -c;
            return r;
        }
        GroupElement r;
        r.rep.reserve(g.rep.size());
        for (auto it = g.rep.rbegin(); it != g.rep.rend(); ++it) r.rep.push_back(-*it);
        return r;
    }

    // Word length of the canonical form.
    std::int64_t length(const GroupElement& g) const {
        if (kind_ == GroupKind::grid) {
            std::int64_t n = 0;
            for (auto c : g.rep) n += c < 0 ? -c : c;
            return n;
        }
        return static_cast<std::int64_t>(g.rep.size());
    }

    // All elements of word length <= r, in canonical (lexicographic) order.
    std::vector<GroupElement> ball(int radius, const Limits& limits = {}) const {
        if (radius < 0) throw input_error("ball radius must be nonnegative");
        std::set<GroupElement> seen;
        seen.insert(identity());
        std::vector<GroupElement> frontier{identity()};
        for (int step = 0; step < radius; ++step) {
            std::vector<GroupElement> next;
            for (const auto& g : frontier) {
                for (const auto& s : generating_set()) {
                    GroupElement h = multiply(g, generator(s));
                    if (seen.insert(h).second) {
                        next.push_back(h);
                        if (seen.size() > limits.max_window_cells) {
                            throw resource_error("ball(" + std::to_string(radius) +
                                                 ") exceeds the window cap of " +
                                                 std::to_string(limits.max_window_cells) + " cells");
                        }
                    }
                }
            }
            frontier = std::move(next);
        }
        return {seen.begin(), seen.end()};
    }

    // The symmetric generating set: a..(letter rank) then A..(inverse forms).
    std::vector<GeneratorSymbol> generating_set() const {
        std::vector<GeneratorSymbol> s;
        s.reserve(2 * static_cast<std::size_t>(rank_));
        for (int i = 1; i <= rank_; ++i) s.push_back({i, false});
        for (int i = 1; i <= rank_; ++i) s.push_back({i, true});
        return s;
    }

    std::string element_str(const GroupElement& g) const {
        if (kind_ == GroupKind::grid) {
            std::string s = "(";
            for (int i = 0; i < rank_; ++i) {
                if (i) s += ",";
                s += std::to_string(g.rep[i]);
            }
            return s + ")";
        }
        if (g.rep.empty()) return "e";
        std::string s;
        for (std::int64_t letter : g.rep) {
            s.push_back(static_cast<char>(letter > 0 ? 'a' + letter - 1 : 'A' - letter - 1));
        }
        return s;
    }

    std::string describe() const {
        if (kind_ == GroupKind::grid) return "Z^" + std::to_string(rank_);
        return "F_" + std::to_string(rank_);
    }

private:
    GroupContext(GroupKind kind, int rank) : kind_(kind), rank_(rank) {}

    static void check_rank(int n, const char* what) {
        if (n < 1 || n > 26) {
            throw input_error(std::string(what) + " must be between 1 and 26, got " + std::to_string(n));
        }
    }

    void check_symbol(const GeneratorSymbol& s) const {
        if (s.index < 1 || s.index > rank_) {
            throw input_error(std::string("unknown generator symbol '") + s.letter() +
                              "' for group " + describe());
        }
    }

    void append(GroupElement& acc, const GeneratorSymbol& s) const {
        if (kind_ == GroupKind::grid) {
            acc.rep[s.index - 1] += s.inverse ? -1 : 1;
            return;
        }
        std::int64_t letter = s.inverse ? -s.index : s.index;
        if (!acc.rep.empty() && acc.rep.back() == -letter) {
            acc.rep.pop_back();
        } else {
            acc.rep.push_back(letter);
        }
    }

    GroupKind kind_;
    int rank_;
};

}  // namespace sftkit

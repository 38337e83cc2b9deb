#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chebknot/errors.hpp"

namespace chebknot {

/// Crossing signs of a T(3, n+1) billiard diagram, left to right.
/// Letters are +1 or -1; the empty word is the zero-crossing diagram.
class SignWord {
public:
    SignWord() = default;
    explicit SignWord(std::vector<std::int8_t> letters) : letters_(std::move(letters)) {}

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    /// 1-based letter access.
    int at(std::size_t pos) const { return letters_[pos - 1]; }

    const std::vector<std::int8_t>& letters() const { return letters_; }

    SignWord negated() const {
        std::vector<std::int8_t> out(letters_.size());
        for (std::size_t i = 0; i < letters_.size(); ++i) out[i] = static_cast<std::int8_t>(-letters_[i]);
        return SignWord(std::move(out));
    }

    std::string str() const {
        std::string s;
        s.reserve(letters_.size());
        for (auto v : letters_) s.push_back(v > 0 ? '+' : '-');
        return s;
    }

    friend bool operator==(const SignWord& a, const SignWord& b) { return a.letters_ == b.letters_; }
    friend bool operator!=(const SignWord& a, const SignWord& b) { return !(a == b); }

private:
    std::vector<std::int8_t> letters_;
};

inline SignWord parse_word(const std::string& text) {
    std::vector<std::int8_t> letters;
    letters.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '+') {
            letters.push_back(1);
        } else if (c == '-') {
            letters.push_back(-1);
        } else {
            throw InvalidInputError("invalid character '" + std::string(1, c) + "' at position " +
                                    std::to_string(i + 1) + " (expected '+' or '-')");
        }
    }
    return SignWord(std::move(letters));
}

enum class MoveKind { Internal, ExternalLeft, ExternalRight };

inline const char* to_string(MoveKind k) {
    switch (k) {
        case MoveKind::Internal: return "Internal";
        case MoveKind::ExternalLeft: return "ExternalLeft";
        case MoveKind::ExternalRight: return "ExternalRight";
    }
    return "?";
}

/// A reduction move. `position` is the 1-based start of the deleted
/// 3-letter block (always 1 for ExternalLeft, n-2 for ExternalRight).
struct Move {
    MoveKind kind;
    int position = 0;
};

/// Ascending positions j with w_j = w_{j+1} = w_{j+2}.
inline std::vector<int> find_internal_moves(const SignWord& w) {
    std::vector<int> out;
    const auto& v = w.letters();
    for (std::size_t j = 0; j + 2 < v.size(); ++j) {
        if (v[j] == v[j + 1] && v[j] == v[j + 2]) out.push_back(static_cast<int>(j + 1));
    }
    return out;
}

/// Smallest internal-move position, or 0 when there is none.
inline int first_internal_move(const SignWord& w) {
    const auto& v = w.letters();
    for (std::size_t j = 0; j + 2 < v.size(); ++j) {
        if (v[j] == v[j + 1] && v[j] == v[j + 2]) return static_cast<int>(j + 1);
    }
    return 0;
}

struct ExternalMoves {
    bool left = false;
    bool right = false;
};

inline ExternalMoves find_external_moves(const SignWord& w) {
    ExternalMoves m;
    std::size_t n = w.size();
    if (n >= 3) {
        m.left = w.at(1) == w.at(2);
        m.right = w.at(n - 1) == w.at(n);
    }
    return m;
}

inline bool has_any_move(const SignWord& w) {
    auto ext = find_external_moves(w);
    return ext.left || ext.right || first_internal_move(w) != 0;
}

/// Deletes the move's 3-letter block. Throws InvalidInputError if the move
/// does not apply to `w`.
inline SignWord apply_move(const SignWord& w, const Move& m) {
    std::size_t n = w.size();
    std::size_t start = 0; // 0-based start of the deleted block
    switch (m.kind) {
        case MoveKind::Internal: {
            int j = m.position;
            if (j < 1 || static_cast<std::size_t>(j) + 2 > n) {
                throw InvalidInputError("internal move at position " + std::to_string(j) +
                                        " out of range for word of length " + std::to_string(n));
            }
            if (!(w.at(j) == w.at(j + 1) && w.at(j) == w.at(j + 2))) {
                throw InvalidInputError("internal move at position " + std::to_string(j) +
                                        " requires three equal letters");
            }
            start = static_cast<std::size_t>(j - 1);
            break;
        }
        case MoveKind::ExternalLeft:
            if (n < 3 || w.at(1) != w.at(2)) {
                throw InvalidInputError("external-left move requires length >= 3 and equal first two letters");
            }
            start = 0;
            break;
        case MoveKind::ExternalRight:
            if (n < 3 || w.at(n - 1) != w.at(n)) {
                throw InvalidInputError("external-right move requires length >= 3 and equal last two letters");
            }
            start = n - 3;
            break;
    }
    std::vector<std::int8_t> out;
    out.reserve(n - 3);
    const auto& v = w.letters();
    out.insert(out.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(start));
    out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(start + 3), v.end());
    return SignWord(std::move(out));
}

struct ReductionStep {
    Move move;
    SignWord result;
};

struct ReductionTrace {
    SignWord initial;
    std::vector<ReductionStep> steps;
    SignWord final;
};

/// Applies moves until none remain, with a fixed priority: leftmost internal
/// move, else external-left, else external-right. Any order gives the same
/// knot class; fixing one keeps traces reproducible.
inline ReductionTrace reduce(const SignWord& w) {
    ReductionTrace trace;
    trace.initial = w;
    SignWord cur = w;
    for (;;) {
        Move m;
        if (int j = first_internal_move(cur); j != 0) {
            m = Move{MoveKind::Internal, j};
        } else {
            auto ext = find_external_moves(cur);
            if (ext.left) {
                m = Move{MoveKind::ExternalLeft, 1};
            } else if (ext.right) {
                m = Move{MoveKind::ExternalRight, static_cast<int>(cur.size()) - 2};
            } else {
                break;
            }
        }
        cur = apply_move(cur, m);
        trace.steps.push_back(ReductionStep{m, cur});
    }
    trace.final = cur;
    return trace;
}

} // namespace chebknot

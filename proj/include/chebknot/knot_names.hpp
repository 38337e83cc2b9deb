#pragma once

#include <istream>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "chebknot/errors.hpp"
#include "chebknot/knot_class.hpp"

namespace chebknot {

namespace detail {

// Canonical (alpha, beta_min) pairs for the 2-bridge knots up to 8
// crossings, from the standard Schubert fractions. Same format as the
// bundled data/knot_names.txt.
inline constexpr const char* kBuiltinNames = R"(# canonical 2-bridge knot names: alpha beta_min name
1 0 unknot
3 1 3_1
5 2 4_1
5 1 5_1
7 2 5_2
9 2 6_1
11 3 6_2
13 5 6_3
7 1 7_1
11 2 7_2
13 3 7_3
15 4 7_4
17 5 7_5
19 7 7_6
21 8 7_7
13 2 8_1
17 3 8_2
17 4 8_3
19 4 8_4
23 7 8_6
23 5 8_7
25 9 8_8
25 7 8_9
27 8 8_11
29 12 8_12
29 8 8_13
31 12 8_14
)";

} // namespace detail

/// Bidirectional map between canonical classes and table names.
class NameTable {
public:
    static NameTable parse(std::istream& in) {
        NameTable t;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream fields(line);
            std::string alpha_text, beta_text, name;
            if (!(fields >> alpha_text)) continue; // blank line
            if (!(fields >> beta_text >> name)) {
                throw InvalidInputError("name table line " + std::to_string(lineno) +
                                        ": expected \"alpha beta name\"");
            }
            KnotClass k{parse_bigint(alpha_text), parse_bigint(beta_text)};
            t.by_class_[k] = name;
            t.by_name_[name] = k;
        }
        return t;
    }

    static NameTable load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw InvalidInputError("cannot open name table file: " + path);
        return parse(in);
    }

    static const NameTable& builtin() {
        static const NameTable table = [] {
            std::istringstream in(detail::kBuiltinNames);
            return parse(in);
        }();
        return table;
    }

    std::optional<std::string> find(const KnotClass& k) const {
        auto it = by_class_.find(k);
        if (it == by_class_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<KnotClass> find_name(const std::string& name) const {
        auto it = by_name_.find(name);
        if (it == by_name_.end()) return std::nullopt;
        return it->second;
    }

    const std::map<KnotClass, std::string>& entries() const { return by_class_; }

private:
    std::map<KnotClass, std::string> by_class_;
    std::map<std::string, KnotClass> by_name_;
};

inline std::optional<std::string> name_lookup(const KnotClass& k) {
    return NameTable::builtin().find(k);
}

/// "3/1 (3_1)" when named, else just "alpha/beta".
inline std::string display_name(const KnotClass& k, const NameTable& names = NameTable::builtin()) {
    if (auto n = names.find(k)) return *n;
    return k.str();
}

} // namespace chebknot

#ifndef WINRULE_FORMAT_HPP
#define WINRULE_FORMAT_HPP

#include <charconv>
#include <string>

#include "winrule/core.hpp"

namespace winrule {

inline std::string format_condition(const Condition& c, const Schema& schema) {
    const auto& attr = schema[c.attribute];
    switch (c.test) {
        case Condition::Test::equals:
            return attr.name + " = " + attr.values[static_cast<std::size_t>(c.value)];
        case Condition::Test::less_equal:
        case Condition::Test::greater: {
            char buf[64];
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, c.value);
            return attr.name + (c.test == Condition::Test::less_equal ? " <= " : " > ") +
                   std::string(buf, ptr);
        }
    }
    return {};
}

/// `head :- cond, cond.`; an empty body prints as `head :- true.`
inline std::string format_rule(const Rule& rule, const Dataset& data) {
    check_rule_fits(rule, data.schema());
    std::string s = data.positive_name() + " :- ";
    if (rule.empty()) return s + "true.";
    for (std::size_t i = 0; i < rule.size(); ++i) {
        if (i) s += ", ";
        s += format_condition(rule.conditions()[i], data.schema());
    }
    return s + ".";
}

/// One rule per line.
inline std::string format_theory(const Theory& theory, const Dataset& data) {
    std::string s;
    for (const auto& r : theory.rules) s += format_rule(r, data) + "\n";
    return s;
}

}  // namespace winrule

#endif  // WINRULE_FORMAT_HPP

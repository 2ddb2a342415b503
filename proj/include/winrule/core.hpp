#ifndef WINRULE_CORE_HPP
#define WINRULE_CORE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace winrule {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a dataset, example, rule or file does not match its schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

using ExampleIndex = std::size_t;
using IndexList = std::vector<ExampleIndex>;

enum class Label : std::uint8_t { negative = 0, positive = 1 };

enum class AttributeKind : std::uint8_t { symbolic, numeric };

struct Attribute {
    std::string name;
    AttributeKind kind = AttributeKind::symbolic;
    std::vector<std::string> values;  // symbolic domain, declaration order

    static Attribute symbolic(std::string name, std::vector<std::string> values) {
        return Attribute{std::move(name), AttributeKind::symbolic, std::move(values)};
    }
    static Attribute numeric(std::string name) {
        return Attribute{std::move(name), AttributeKind::numeric, {}};
    }

    bool is_symbolic() const { return kind == AttributeKind::symbolic; }
    bool is_numeric() const { return kind == AttributeKind::numeric; }

    /// Index of `value` in the symbolic domain, or -1 if absent.
    int value_code(std::string_view value) const {
        for (std::size_t i = 0; i < values.size(); ++i)
            if (values[i] == value) return static_cast<int>(i);
        return -1;
    }

    friend bool operator==(const Attribute&, const Attribute&) = default;
};

/// Ordered attribute list. Validates uniqueness on construction.
class Schema {
public:
    Schema() = default;
    explicit Schema(std::vector<Attribute> attributes) : attributes_(std::move(attributes)) {
        std::unordered_set<std::string> names;
        for (const auto& a : attributes_) {
            if (!names.insert(a.name).second)
                throw SchemaError("duplicate attribute name '" + a.name + "'");
            if (a.is_symbolic()) {
                if (a.values.empty())
                    throw SchemaError("symbolic attribute '" + a.name + "' declares no values");
                std::unordered_set<std::string> seen;
                for (const auto& v : a.values)
                    if (!seen.insert(v).second)
                        throw SchemaError("attribute '" + a.name + "' declares value '" + v +
                                          "' twice");
            }
        }
    }

    std::size_t size() const { return attributes_.size(); }
    const Attribute& operator[](std::size_t i) const { return attributes_[i]; }
    const std::vector<Attribute>& attributes() const { return attributes_; }
    auto begin() const { return attributes_.begin(); }
    auto end() const { return attributes_.end(); }

    std::size_t index_of(std::string_view name) const {
        for (std::size_t i = 0; i < attributes_.size(); ++i)
            if (attributes_[i].name == name) return i;
        throw SchemaError("unknown attribute '" + std::string(name) + "'");
    }

    bool all_symbolic() const {
        return std::all_of(attributes_.begin(), attributes_.end(),
                           [](const Attribute& a) { return a.is_symbolic(); });
    }

    friend bool operator==(const Schema&, const Schema&) = default;

private:
    std::vector<Attribute> attributes_;
};

/// Attribute values of one example. Symbolic values hold their domain code.
struct Example {
    std::vector<double> values;
    Label label = Label::negative;

    friend bool operator==(const Example&, const Example&) = default;
};

/// Non-owning view of a dataset row.
struct ExampleView {
    std::span<const double> values;
    Label label;

    bool positive() const { return label == Label::positive; }
};

/// Schema plus a positionally indexed, order-stable example collection.
///
/// Rows are stored flat and row-major. Example identity is the row index,
/// so duplicate feature vectors stay distinct examples.
class Dataset {
public:
    Dataset() = default;

    /// `class_names` is in declaration order; `positive_class` indexes it.
    Dataset(Schema schema, std::string class_attribute, std::array<std::string, 2> class_names,
            int positive_class = 0)
        : schema_(std::move(schema)),
          class_attribute_(std::move(class_attribute)),
          class_names_(std::move(class_names)),
          positive_class_(positive_class) {
        if (positive_class_ != 0 && positive_class_ != 1)
            throw SchemaError("positive class index must be 0 or 1");
        if (class_names_[0] == class_names_[1])
            throw SchemaError("class names must differ");
    }

    const Schema& schema() const { return schema_; }
    const std::string& class_attribute() const { return class_attribute_; }
    const std::array<std::string, 2>& class_names() const { return class_names_; }
    int positive_class() const { return positive_class_; }
    const std::string& positive_name() const { return class_names_[positive_class_]; }
    const std::string& negative_name() const { return class_names_[1 - positive_class_]; }
    const std::string& label_name(Label l) const {
        return l == Label::positive ? positive_name() : negative_name();
    }

    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    std::size_t width() const { return schema_.size(); }

    ExampleView operator[](ExampleIndex i) const {
        return ExampleView{std::span<const double>(cells_.data() + i * width(), width()),
                           labels_[i]};
    }
    Label label(ExampleIndex i) const { return labels_[i]; }
    double value(ExampleIndex i, std::size_t attribute) const {
        return cells_[i * width() + attribute];
    }

    /// Appends an example after validating it against the schema.
    void push_back(std::span<const double> values, Label label) {
        check_conforms(values);
        cells_.insert(cells_.end(), values.begin(), values.end());
        labels_.push_back(label);
    }
    void push_back(const Example& e) { push_back(e.values, e.label); }

    void set_label(ExampleIndex i, Label label) { labels_[i] = label; }

    void reserve(std::size_t n) {
        cells_.reserve(n * width());
        labels_.reserve(n);
    }

    /// Same schema, no examples.
    Dataset empty_copy() const {
        return Dataset(schema_, class_attribute_, class_names_, positive_class_);
    }

    /// New dataset holding the listed rows in the listed order.
    Dataset subset(std::span<const ExampleIndex> indices) const {
        Dataset out = empty_copy();
        out.reserve(indices.size());
        for (auto i : indices) {
            auto row = (*this)[i];
            out.cells_.insert(out.cells_.end(), row.values.begin(), row.values.end());
            out.labels_.push_back(row.label);
        }
        return out;
    }

    Example example(ExampleIndex i) const {
        auto row = (*this)[i];
        return Example{{row.values.begin(), row.values.end()}, row.label};
    }

    std::size_t count(Label l) const {
        return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), l));
    }

    /// Proportion of the majority class. Zero for an empty dataset.
    double default_accuracy() const {
        if (empty()) return 0.0;
        auto p = count(Label::positive);
        return static_cast<double>(std::max(p, size() - p)) / static_cast<double>(size());
    }

    IndexList all_indices() const {
        IndexList out(size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
        return out;
    }

    void check_conforms(std::span<const double> values) const {
        if (values.size() != width())
            throw SchemaError("example has " + std::to_string(values.size()) +
                              " values, schema has " + std::to_string(width()));
        for (std::size_t a = 0; a < width(); ++a) {
            const auto& attr = schema_[a];
            double v = values[a];
            if (std::isnan(v))
                throw SchemaError("missing value for attribute '" + attr.name + "'");
            if (attr.is_symbolic()) {
                if (v < 0 || v != std::floor(v) ||
                    v >= static_cast<double>(attr.values.size()))
                    throw SchemaError("value code outside the domain of '" + attr.name + "'");
            }
        }
    }

    friend bool operator==(const Dataset&, const Dataset&) = default;

private:
    Schema schema_;
    std::string class_attribute_ = "class";
    std::array<std::string, 2> class_names_{"positive", "negative"};
    int positive_class_ = 0;
    std::vector<double> cells_;
    std::vector<Label> labels_;
};

/// One attribute test.
struct Condition {
    enum class Test : std::uint8_t { equals, less_equal, greater };

    std::size_t attribute = 0;
    Test test = Test::equals;
    double value = 0.0;  // symbolic code for equals, threshold otherwise

    static Condition equals(std::size_t attribute, int code) {
        return {attribute, Test::equals, static_cast<double>(code)};
    }
    static Condition less_equal(std::size_t attribute, double threshold) {
        return {attribute, Test::less_equal, threshold};
    }
    static Condition greater(std::size_t attribute, double threshold) {
        return {attribute, Test::greater, threshold};
    }

    bool holds(std::span<const double> values) const {
        double v = values[attribute];
        switch (test) {
            case Test::equals: return v == value;
            case Test::less_equal: return v <= value;
            case Test::greater: return v > value;
        }
        return false;
    }

    friend bool operator==(const Condition&, const Condition&) = default;
};

/// Conjunction of conditions with a positive-class head.
class Rule {
public:
    Rule() = default;
    explicit Rule(std::vector<Condition> conditions) {
        for (const auto& c : conditions) add(c);
    }

    const std::vector<Condition>& conditions() const { return conditions_; }
    std::size_t size() const { return conditions_.size(); }
    bool empty() const { return conditions_.empty(); }

    bool contains(const Condition& c) const {
        return std::find(conditions_.begin(), conditions_.end(), c) != conditions_.end();
    }

    /// Appends `c` unless an identical condition is already present.
    void add(const Condition& c) {
        if (!contains(c)) conditions_.push_back(c);
    }

    Rule without(std::size_t position) const {
        Rule r;
        for (std::size_t i = 0; i < conditions_.size(); ++i)
            if (i != position) r.conditions_.push_back(conditions_[i]);
        return r;
    }

    bool covers(std::span<const double> values) const {
        for (const auto& c : conditions_)
            if (!c.holds(values)) return false;
        return true;
    }

    friend bool operator==(const Rule&, const Rule&) = default;

private:
    std::vector<Condition> conditions_;
};

/// Unordered disjunction of rules.
struct Theory {
    std::vector<Rule> rules;

    std::size_t size() const { return rules.size(); }
    bool empty() const { return rules.empty(); }

    bool contains(const Rule& r) const {
        return std::find(rules.begin(), rules.end(), r) != rules.end();
    }
    /// Set-union insertion.
    void add(const Rule& r) {
        if (!contains(r)) rules.push_back(r);
    }

    friend bool operator==(const Theory&, const Theory&) = default;
};

struct CoverageStats {
    std::size_t p = 0;
    std::size_t n = 0;

    std::size_t total() const { return p + n; }
    CoverageStats& operator+=(const CoverageStats& o) {
        p += o.p;
        n += o.n;
        return *this;
    }
    friend CoverageStats operator+(CoverageStats a, const CoverageStats& b) { return a += b; }
    friend bool operator==(const CoverageStats&, const CoverageStats&) = default;
};

inline void check_rule_fits(const Rule& rule, const Schema& schema) {
    for (const auto& c : rule.conditions()) {
        if (c.attribute >= schema.size())
            throw SchemaError("condition refers to attribute " + std::to_string(c.attribute) +
                              " beyond schema width " + std::to_string(schema.size()));
        const bool symbolic = schema[c.attribute].is_symbolic();
        if (symbolic != (c.test == Condition::Test::equals))
            throw SchemaError("condition test does not match the kind of attribute '" +
                              schema[c.attribute].name + "'");
    }
}

inline bool covers(const Rule& rule, const Example& example, const Schema& schema) {
    if (example.values.size() != schema.size())
        throw SchemaError("example width does not match schema");
    check_rule_fits(rule, schema);
    return rule.covers(example.values);
}

inline bool covers(const Rule& rule, ExampleView example) { return rule.covers(example.values); }

inline Label classify(const Theory& theory, std::span<const double> values) {
    for (const auto& r : theory.rules)
        if (r.covers(values)) return Label::positive;
    return Label::negative;
}

inline Label classify(const Theory& theory, ExampleView example) {
    return classify(theory, example.values);
}

inline Label classify(const Theory& theory, const Example& example, const Schema& schema) {
    if (example.values.size() != schema.size())
        throw SchemaError("example width does not match schema");
    for (const auto& r : theory.rules) check_rule_fits(r, schema);
    return classify(theory, std::span<const double>(example.values));
}

inline CoverageStats coverage(const Rule& rule, const Dataset& data,
                              std::span<const ExampleIndex> indices) {
    CoverageStats s;
    for (auto i : indices) {
        auto e = data[i];
        if (rule.covers(e.values)) (e.positive() ? s.p : s.n)++;
    }
    return s;
}

inline CoverageStats coverage(const Rule& rule, const Dataset& data) {
    CoverageStats s;
    for (ExampleIndex i = 0; i < data.size(); ++i) {
        auto e = data[i];
        if (rule.covers(e.values)) (e.positive() ? s.p : s.n)++;
    }
    return s;
}

/// Indices from `indices` covered by `rule`, in input order.
inline IndexList covered(const Rule& rule, const Dataset& data,
                         std::span<const ExampleIndex> indices) {
    IndexList out;
    for (auto i : indices)
        if (rule.covers(data[i].values)) out.push_back(i);
    return out;
}

inline double accuracy(const Theory& theory, const Dataset& data,
                       std::span<const ExampleIndex> indices) {
    if (indices.empty()) throw Error("accuracy of an empty example collection is undefined");
    std::size_t correct = 0;
    for (auto i : indices) {
        auto e = data[i];
        if (classify(theory, e) == e.label) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(indices.size());
}

inline double accuracy(const Theory& theory, const Dataset& data) {
    if (data.empty()) throw Error("accuracy of an empty example collection is undefined");
    std::size_t correct = 0;
    for (ExampleIndex i = 0; i < data.size(); ++i) {
        auto e = data[i];
        if (classify(theory, e) == e.label) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(data.size());
}

}  // namespace winrule

#endif  // WINRULE_CORE_HPP

#pragma once

#include <algorithm>
#include <initializer_list>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace frontal {

class VarContext;
using VarContextPtr = std::shared_ptr<const VarContext>;

// An ordered list of distinct variable names. Every polynomial refers to
// exactly one context; the order is fixed for the lifetime of the context and
// drives the canonical monomial order.
class VarContext {
public:
    explicit VarContext(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty()) {
            throw std::invalid_argument("variable context must not be empty");
        }
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty()) {
                throw std::invalid_argument("variable names must be nonempty");
            }
            for (std::size_t j = i + 1; j < names_.size(); ++j) {
                if (names_[i] == names_[j]) {
                    throw std::invalid_argument("duplicate variable name '" + names_[i] + "'");
                }
            }
        }
    }

    std::size_t arity() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i] == name) return i;
        }
        return std::nullopt;
    }

    bool same_names(const VarContext& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

inline VarContextPtr make_context(std::vector<std::string> names) {
    return std::make_shared<const VarContext>(std::move(names));
}

inline VarContextPtr make_context(std::initializer_list<std::string> names) {
    return std::make_shared<const VarContext>(std::vector<std::string>(names));
}

// Contexts are interchangeable when they list the same names in the same
// order, whether or not they are the same object.
inline bool compatible(const VarContextPtr& a, const VarContextPtr& b) {
    return a == b || (a && b && a->same_names(*b));
}

} // namespace frontal

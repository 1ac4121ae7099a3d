#pragma once

// Registry of generic-position symbols. A generic symbol stands for a real
// coordinate that is algebraically independent of all cycle lengths and of
// every other symbol, so two distinct symbols never denote the same point.

#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace chaincycles::symbols {

namespace detail {

struct Registry {
    std::mutex mu;
    std::unordered_map<std::string, int> by_name;
    std::vector<std::string> names;
};

inline Registry& registry() {
    static Registry r;
    return r;
}

} // namespace detail

inline int intern(const std::string& name) {
    auto& r = detail::registry();
    std::lock_guard<std::mutex> lock(r.mu);
    auto it = r.by_name.find(name);
    if (it != r.by_name.end()) return it->second;
    int id = static_cast<int>(r.names.size());
    r.names.push_back(name);
    r.by_name.emplace(name, id);
    return id;
}

// A symbol guaranteed not to collide with any interned name.
inline int fresh(const std::string& prefix = "g") {
    auto& r = detail::registry();
    std::lock_guard<std::mutex> lock(r.mu);
    for (int k = static_cast<int>(r.names.size());; ++k) {
        std::string candidate = prefix + "#" + std::to_string(k);
        if (r.by_name.find(candidate) == r.by_name.end()) {
            int id = static_cast<int>(r.names.size());
            r.names.push_back(candidate);
            r.by_name.emplace(candidate, id);
            return id;
        }
    }
}

inline std::string name(int id) {
    auto& r = detail::registry();
    std::lock_guard<std::mutex> lock(r.mu);
    if (id < 0 || id >= static_cast<int>(r.names.size()))
        throw std::out_of_range("unknown symbol id");
    return r.names[id];
}

} // namespace chaincycles::symbols

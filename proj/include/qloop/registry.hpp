#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qloop {

// Kind tags restrict which operations may touch a variable: only GKLO
// variables may be shifted by difference/q-difference operators, only the
// deformation variable enters atom constants, etc.
enum class VarKind {
    Deformation,  // hbar or v
    Framing,      // z_1..z_N
    Gklo,         // w_{i,r} (rational) or omega_{i,r} (trig half-variables)
    Shuffle,      // x_{i,r}
    Spectral,     // z, w of generating series
};

class VarRegistry {
  public:
    struct Entry {
        std::string name;
        VarKind kind;
    };

    int add(std::string name, VarKind kind) {
        if (index_.count(name))
            throw std::invalid_argument("VarRegistry: duplicate variable " + name);
        int id = static_cast<int>(entries_.size());
        index_.emplace(name, id);
        entries_.push_back({std::move(name), kind});
        return id;
    }

    int size() const { return static_cast<int>(entries_.size()); }
    const Entry& at(int id) const { return entries_.at(static_cast<size_t>(id)); }
    const std::string& name(int id) const { return at(id).name; }
    VarKind kind(int id) const { return at(id).kind; }

    int find(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end())
            throw std::invalid_argument("VarRegistry: unknown variable " + name);
        return it->second;
    }
    bool contains(const std::string& name) const { return index_.count(name) != 0; }

  private:
    std::vector<Entry> entries_;
    std::map<std::string, int> index_;
};

using RegistryPtr = std::shared_ptr<const VarRegistry>;

inline bool same_registry(const RegistryPtr& a, const RegistryPtr& b) {
    return a.get() == b.get();
}

}  // namespace qloop
